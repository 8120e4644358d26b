#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "behavioral/oracle.hpp"
#include "behavioral/polymat.hpp"
#include "support.hpp"

using namespace behavioral;
using testsupport::mat;
using testsupport::poly;

namespace {

bool chain_holds(const PolyMat& diag) {
  const Eigen::Index n = std::min(diag.rows(), diag.cols());
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Poly& a = diag(i, i);
    const Poly& b = diag(i + 1, i + 1);
    if (a.is_zero() && !b.is_zero()) return false;
    if (!a.is_zero() && !divides(a, b)) return false;
  }
  for (Eigen::Index i = 0; i < diag.rows(); ++i)
    for (Eigen::Index j = 0; j < diag.cols(); ++j)
      if (i != j && !diag(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("evaluation") {
  const PolyMat p1 = testsupport::plant1().kernel;
  CHECK(eval_mat(p1, Rational(1))(0, 0) == Rational(3));  // xi^2+2 at 1

  const PolyMat z = poly_zero(2, 2);
  CHECK(eval_mat(z, Rational(7)) == RationalMatrix::Constant(2, 2, Rational(0)));

  PolyMat single = poly_zero(1, 1);
  single(0, 0) = poly({0, 1});
  CHECK(eval_mat(single, make_rational(-1, 2))(0, 0) == make_rational(-1, 2));
}

TEST_CASE("echelon form golden cases") {
  SUBCASE("upper triangular with monic diagonal and reduced entries is fixed") {
    const PolyMat a = mat({{poly({0, 1}), poly({1})}, {poly({}), poly({0, 0, 1})}});
    const HermiteForm h = hermite_row(a);
    CHECK(equal(h.form, a));
    CHECK(equal(h.transform, poly_identity(2)));
  }
  SUBCASE("single elimination step") {
    const PolyMat a = mat({{poly({0, 1})}, {poly({0, 0, 1})}});
    const HermiteForm h = hermite_row(a);
    CHECK(equal(h.form, mat({{poly({0, 1})}, {poly({})}})));
    CHECK(equal(h.transform, mat({{poly({1}), poly({})}, {poly({0, -1}), poly({1})}})));
  }
}

TEST_CASE("rank") {
  CHECK(rank(testsupport::plant1().kernel) == 3);
  CHECK(rank(poly_zero(0, 5)) == 0);
  CHECK(rank(poly_identity(4)) == 4);
  CHECK(rank(poly_zero(3, 0)) == 0);

  // Scalar-rank oracle: evaluation can only lose rank, and generically does
  // not. The paper example attains 3 at every probe.
  const PolyMat p1 = testsupport::plant1().kernel;
  for (long probe : {2, 3, 5}) CHECK(rank(eval_mat(p1, Rational(probe))) == 3);
}

TEST_CASE("row compression") {
  SUBCASE("duplicate row") {
    const PolyMat a = mat({{poly({0, 1})}, {poly({0, 1})}});
    const RowCompression rc = row_compress(a);
    CHECK(rc.full_rows.rows() == 1);
    CHECK(equal(rc.full_rows, mat({{poly({0, 1})}})));
  }
  SUBCASE("full row rank input keeps all rows") {
    const PolyMat a = testsupport::plant1().kernel;
    CHECK(row_compress(a).full_rows.rows() == 3);
  }
}

TEST_CASE("smith form golden cases") {
  SUBCASE("existing divisibility chain is kept") {
    const PolyMat a = mat({{poly({0, 1}), poly({})}, {poly({}), poly({0, 0, 1})}});
    const SmithForm sf = smith(a);
    CHECK(equal(sf.diagonal, a));
  }
  SUBCASE("invariant factors get sorted into a chain") {
    const PolyMat a = mat({{poly({0, 1}), poly({})}, {poly({}), poly({1})}});
    const SmithForm sf = smith(a);
    CHECK(equal(sf.diagonal, mat({{poly({1}), poly({})}, {poly({}), poly({0, 1})}})));
  }
  SUBCASE("empty matrix") {
    const SmithForm sf = smith(poly_zero(0, 3));
    CHECK(sf.diagonal.rows() == 0);
    CHECK(sf.diagonal.cols() == 3);
    CHECK(equal(sf.right, poly_identity(3)));
  }
}

TEST_CASE("left factor solving") {
  SUBCASE("scalar divisibility") {
    const PolyMat a = mat({{poly({0, 1})}});
    const PolyMat b = mat({{poly({0, 1, 1})}});
    const auto f = solve_left_factor(a, b);
    REQUIRE(f.has_value());
    CHECK(equal(*f, mat({{poly({1, 1})}})));
  }
  SUBCASE("indivisible") {
    const PolyMat a = mat({{poly({0, 1})}});
    const PolyMat b = mat({{poly({1})}});
    CHECK(!solve_left_factor(a, b).has_value());
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve_left_factor(poly_identity(2), poly_identity(3)),
                    std::invalid_argument);
  }
  SUBCASE("zero-row divisor only reaches the zero module") {
    const PolyMat none = poly_zero(0, 2);
    CHECK(solve_left_factor(none, poly_zero(2, 2)).has_value());
    CHECK(!solve_left_factor(none, poly_identity(2)).has_value());
  }
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(poly_identity(3)));
  CHECK(!is_unimodular(mat({{poly({0, 1}), poly({})}, {poly({}), poly({1})}})));
  CHECK(!is_unimodular(poly_zero(2, 3)));

  // The block companion [[F, -I],[I, 0]] is unimodular for any polynomial F.
  const PolyMat f = random_poly_mat(2, 2, 3, 4, 99);
  PolyMat u = poly_zero(4, 4);
  u.topLeftCorner(2, 2) = f;
  u.topRightCorner(2, 2) = -poly_identity(2);
  u.bottomLeftCorner(2, 2) = poly_identity(2);
  CHECK(is_unimodular(u));
}

TEST_CASE("reconstruction identities on random matrices") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Eigen::Index rows = 1 + seed % 4;
    const Eigen::Index cols = 1 + (seed / 2) % 5;
    const PolyMat a = random_poly_mat(rows, cols, 2, 3, seed);

    const HermiteForm h = hermite_row(a);
    CHECK(equal(h.transform * a, h.form));
    CHECK(is_unimodular(h.transform));
    CHECK(sgn(h.transform_det) != 0);

    const RowCompression rc = row_compress(a);
    CHECK(rc.full_rows.rows() == rank(a));
    const PolyMat compressed = rc.transform * a;
    CHECK(equal(compressed.topRows(rc.full_rows.rows()), rc.full_rows));
    CHECK(is_zero(PolyMat(compressed.bottomRows(rows - rc.full_rows.rows()))));

    const SmithForm sf = smith(a);
    CHECK(equal(sf.left * a * sf.right, sf.diagonal));
    CHECK(is_unimodular(sf.left));
    CHECK(is_unimodular(sf.right));
    CHECK(chain_holds(sf.diagonal));

    const PolyMat f = random_poly_mat(2, rows, 2, 3, seed + 1000);
    const PolyMat b = f * a;
    const auto back = solve_left_factor(a, b);
    REQUIRE(back.has_value());
    CHECK(equal(*back * a, b));
  }
}

#include "behavioral/oracle.hpp"

#include <random>

namespace behavioral {

RationalMatrix nullspace_basis(const RationalMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  // Reduced row echelon form, exact arithmetic.
  RationalMatrix m = a;
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, col);
    for (Eigen::Index j = col; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, col))) continue;
      const Rational f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  const Eigen::Index dim = cols - static_cast<Eigen::Index>(pivot_col.size());
  RationalMatrix basis = RationalMatrix::Constant(cols, dim, Rational(0));
  Eigen::Index vec = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, vec) = Rational(1);
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
      basis(pivot_col[p], vec) = -m(static_cast<Eigen::Index>(p), free);
    ++vec;
  }
  return basis;
}

RationalMatrix exp_solutions(const Behavior& b, const Rational& rate) {
  return nullspace_basis(eval_mat(b.kernel, rate));
}

std::vector<Rational> sample_points(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (count > 0) out.push_back(Rational(0));
  long k = 1;
  while (out.size() < count) {  // 0, 1, -1, 1/2, -1/2, 2, -2, 3/2, ...
    out.push_back(Rational(k));
    if (out.size() < count) out.push_back(Rational(-k));
    if (out.size() < count) out.push_back(make_rational(2 * k - 1, 2));
    if (out.size() < count) out.push_back(make_rational(-(2 * k - 1), 2));
    ++k;
  }
  return out;
}

std::size_t default_sample_count(const Behavior& b) {
  return static_cast<std::size_t>(total_degree(b.kernel)) + 5;
}

InclusionCrossCheck randomized_inclusion(const Behavior& b1, const Behavior& b2,
                                         const std::vector<Rational>& samples) {
  if (b1.sig != b2.sig)
    throw std::invalid_argument("behaviors compared across different signatures");
  for (const Rational& rate : samples) {
    const RationalMatrix basis = exp_solutions(b1, rate);
    const RationalMatrix other = eval_mat(b2.kernel, rate);
    for (Eigen::Index v = 0; v < basis.cols(); ++v) {
      const RationalVector trajectory = basis.col(v);
      const RationalVector image = other * trajectory;
      for (Eigen::Index i = 0; i < image.rows(); ++i)
        if (!is_zero(image(i))) return {false, RefutedInclusion{rate, trajectory}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Bounded draws straight off the raw engine output, so that a seed pins the
// result on every platform.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Poly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
  const int deg = static_cast<int>(draw(rng, -1, max_deg));  // -1: zero polynomial
  if (deg < 0) return Poly();
  std::vector<Rational> coeffs;
  for (int d = 0; d <= deg; ++d) coeffs.push_back(Rational(draw(rng, -coeff_bound, coeff_bound)));
  return Poly(std::move(coeffs));
}

}  // namespace

PolyMat random_poly_mat(Eigen::Index rows, Eigen::Index cols, int max_deg, long coeff_bound,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolyMat m = poly_zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_poly(rng, max_deg, coeff_bound);
  return m;
}

Behavior random_behavior(const RandomBehaviorSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Signature sig(spec.groups);
  const Eigen::Index rows = spec.max_rows > 0 ? draw(rng, 0, spec.max_rows) : 0;
  PolyMat kernel = poly_zero(rows, sig.total_dim());
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < kernel.cols(); ++j)
      kernel(i, j) = random_poly(rng, spec.max_deg, spec.coeff_bound);
  return Behavior(std::move(sig), std::move(kernel));
}

}  // namespace behavioral

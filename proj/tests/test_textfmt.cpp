#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "behavioral/oracle.hpp"
#include "behavioral/synthesis.hpp"
#include "behavioral/textfmt.hpp"
#include "support.hpp"

using namespace behavioral;
using testsupport::mat;
using testsupport::poly;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int error_line(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("the shipped benchmark model parses to the reference matrices") {
  const ModelFile model = parse_model(read_file(std::string(MODELS_DIR) + "/mass_spring.bhv"));
  REQUIRE(model.behaviors.size() == 4);
  REQUIRE(model.networks.size() == 1);

  CHECK(equal(model.behavior("P1").kernel, testsupport::plant1().kernel));
  CHECK(equal(model.behavior("P2").kernel, testsupport::plant2().kernel));
  CHECK(equal(model.behavior("K1").kernel, testsupport::desired1().kernel));
  CHECK(equal(model.behavior("K2").kernel, testsupport::desired2().kernel));
  CHECK(model.behavior("P1").sig == testsupport::plant1().sig);

  const Network net = instantiate(model, "twomass");
  CHECK(validate(net).empty());
  CHECK(net.edges.size() == 1);
  CHECK(net.edges[0].s_dim == 2);
}

TEST_CASE("polynomial grammar") {
  const ModelFile model = parse_model(
      "behavior B { vars: w:6; rows: [xi^2+2, -1, 0, -1, 0, -1]; }");
  const PolyMat& kernel = model.behavior("B").kernel;
  CHECK(kernel(0, 0) == poly({2, 0, 1}));
  CHECK(kernel(0, 1) == poly({-1}));
  CHECK(kernel(0, 2).is_zero());

  SUBCASE("rationals, juxtaposition, signs") {
    const ModelFile m2 = parse_model(
        "behavior B { vars: w:4; rows: [1/2xi^2, -3/4, 2xi, -xi^3]; }");
    const PolyMat& k = m2.behavior("B").kernel;
    CHECK(k(0, 0) == Poly({Rational(0), Rational(0), make_rational(1, 2)}));
    CHECK(k(0, 1) == Poly({make_rational(-3, 4)}));
    CHECK(k(0, 2) == Poly({Rational(0), Rational(2)}));
    CHECK(k(0, 3) == Poly({Rational(0), Rational(0), Rational(0), Rational(-1)}));
  }
  SUBCASE("sums collect like terms") {
    const ModelFile m2 = parse_model("behavior B { vars: w:1; rows: [xi+xi+1-2]; }");
    CHECK(m2.behavior("B").kernel(0, 0) == poly({-1, 2}));
  }
}

TEST_CASE("zero-row behaviors need the explicit empty clause") {
  const ModelFile model = parse_model("behavior F { vars: w:1; rows: ; }");
  CHECK(model.behavior("F").kernel.rows() == 0);
  CHECK(model.behavior("F").variable_count() == 1);
}

TEST_CASE("comments and whitespace are insignificant") {
  const ModelFile model = parse_model(
      "# heading\nbehavior   B{vars:w:2;# inline\n  rows:[ 1 , xi ];}");
  CHECK(model.behavior("B").kernel(0, 1) == poly({0, 1}));
}

TEST_CASE("parse errors carry positions inside the offending token") {
  SUBCASE("lexical error") {
    try {
      parse_model("behavior B { vars: w:1; rows: [@]; }");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 32);
    }
  }
  SUBCASE("undefined reference") {
    const std::string text =
        "behavior B { vars: w1:1, c1:1; rows: ; }\n"
        "network N { subsystems: (B, Ghost); edges: ; }";
    try {
      parse_model(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 29);
    }
  }
  SUBCASE("arity mismatch names the row") {
    CHECK(error_line("behavior B { vars: w:2;\nrows: [1];\n}") == 2);
  }
  SUBCASE("negative exponent") {
    CHECK(error_line("behavior B { vars: w:1; rows: [xi^-1]; }") == 1);
  }
  SUBCASE("foreign symbol") {
    CHECK(error_line("behavior B { vars: w:1; rows: [eta]; }") == 1);
  }
  SUBCASE("duplicate definition") {
    CHECK(error_line("behavior B { vars: w:1; rows: ; }\nbehavior B { vars: w:1; rows: ; }") == 2);
  }
  SUBCASE("missing separator") {
    CHECK(error_line("behavior B { vars: w:1 rows: ; }") > 0);
  }
}

TEST_CASE("serialization round trip") {
  SUBCASE("benchmark model") {
    const std::string original = read_file(std::string(MODELS_DIR) + "/mass_spring.bhv");
    const ModelFile model = parse_model(original);
    const std::string text = serialize(model);
    const ModelFile back = parse_model(text);
    REQUIRE(back.behaviors.size() == model.behaviors.size());
    for (const auto& [name, b] : model.behaviors) CHECK(equals(back.behavior(name), b));
    CHECK(back.network("twomass").edges[0].k_dim == 2);
    // idempotent canonical text
    CHECK(serialize(parse_model(text)) == text);
  }
  SUBCASE("random behaviors") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const Behavior b =
          random_behavior({{{"a", 2}, {"b", 1}, {"c", 2}}, 4, 3, 9}, seed);
      const ModelFile back = parse_model(serialize("R", b));
      CHECK(equals(back.behavior("R"), b));
      CHECK(back.behavior("R").sig == b.sig);
    }
  }
  SUBCASE("canonical form minimizes and normalizes") {
    const Behavior dup(Signature({{"w", 1}}), mat({{poly({0, 2})}, {poly({0, 2})}}));
    const std::string text = serialize("D", dup, /*canonical=*/true);
    const ModelFile back = parse_model(text);
    CHECK(back.behavior("D").kernel.rows() == 1);
    CHECK(back.behavior("D").kernel(0, 0) == poly({0, 1}));  // monic pivot
  }
  SUBCASE("synthesized controllers survive the trip") {
    const Network net = testsupport::two_mass_network();
    const Behavior c1 = local_canonical(net, 1);
    const ModelFile back = parse_model(serialize("C1can", c1, /*canonical=*/true));
    CHECK(equals(back.behavior("C1can"), testsupport::controller1()));
    CHECK(back.behavior("C1can").kernel.rows() == 3);
  }
}

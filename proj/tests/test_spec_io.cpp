#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "opucmat/spec_io.hpp"
#include "testutil.hpp"

using namespace opucmat;

namespace {

bool rejected(const std::string& text, const std::string& needle) {
  try {
    parse_spec_text(text);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("schur specs parse") {
  MeasureSpec s = parse_spec_text(R"({"kind":"schur","schur":[[0.5,0]],"eps0":6.283185307})");
  CHECK(s.kind == "schur");
  REQUIRE(s.schur.size() == 1);
  CHECK(s.schur[0] == cplx(0.5, 0.0));
  CHECK(s.eps0 == 6.283185307);

  MeasureSpec d = parse_spec_text(R"({"kind":"schur","schur":[[0.1,-0.2],[0,0.3]]})");
  CHECK(d.eps0 == two_pi);
  CHECK(d.schur[1] == cplx(0.0, 0.3));
}

TEST_CASE("invalid specs are rejected with the offending field") {
  CHECK(rejected(R"({"kind":"schur","schur":[[1.0,0]]})", "schur[0]"));
  CHECK(rejected(R"({"kind":"schur","schur":[[0.8,0.7]]})", "modulus"));
  CHECK(rejected(R"({"schur":[[0.5,0]]})", "kind"));
  CHECK(rejected(R"({"kind":"other"})", "kind"));
  CHECK(rejected(R"({"kind":"schur"})", "requires a 'schur' array"));
  CHECK(rejected(R"({"kind":"schur","schur":[[0.5,0]],"weight":{"family":"lebesgue"}})",
                 "unknown field 'weight'"));
  CHECK(rejected(R"({"kind":"weight","weight":{"family":"lebesgue"},"schur":[]})",
                 "unknown field 'schur'"));
  CHECK(rejected(R"({"kind":"schur","schur":[],"eps0":0})", "eps0"));
  CHECK(rejected(R"({"kind":"schur","schur":[[0.5,0]],"epsilon":1})", "unknown field"));
  CHECK(rejected(R"({"kind":"weight","weight":{"family":"fancy"}})", "family"));
  CHECK(rejected(R"({"kind":"weight","weight":{"family":"trig-poly"}})", "cos"));
  CHECK(rejected(R"({"kind":"weight","weight":{"family":"table","samples":[1]}})", "samples"));
  CHECK(rejected(R"({"kind":"weight","weight":{"family":"lebesgue"},"atoms":[{"theta":0}]})",
                 "atoms[0]"));
  CHECK(rejected(
      R"({"kind":"weight","weight":{"family":"lebesgue"},"atoms":[{"theta":0,"mass":-1}]})",
      "mass"));
  CHECK(rejected("{\n  \"kind\": \"schur\"\n  \"schur\": []\n}", "line 3"));
  CHECK(rejected(R"(["kind"])", "object"));
}

TEST_CASE("file loading") {
  CHECK_THROWS_WITH_AS(parse_spec("/nonexistent/spec.json"),
                       doctest::Contains("cannot read file"), std::invalid_argument);
}

TEST_CASE("weight families build the right measures") {
  MeasureSpec leb = parse_spec_text(R"({"kind":"weight","weight":{"family":"lebesgue"}})");
  CircleMeasure m = measure_from_spec(leb, 512);
  CHECK(m.nodes() == 512);
  for (double t : {0.0, 1.0, 4.0}) CHECK(m.weight(t) == 1.0);

  MeasureSpec trig = parse_spec_text(
      R"({"kind":"weight","weight":{"family":"trig-poly","cos":[1,0.4],"sin":[0.3]}})");
  CircleMeasure mt = measure_from_spec(trig, 512);
  for (double t : {0.3, 2.0, 5.5})
    CHECK(std::abs(mt.weight(t) - (1.0 + 0.4 * std::cos(t) + 0.3 * std::sin(t))) <= 1e-15);

  MeasureSpec tab = parse_spec_text(
      R"({"kind":"weight","weight":{"family":"table","samples":[1,2,3,4]}})");
  CircleMeasure mb = measure_from_spec(tab, 512);
  CHECK(mb.weight(0.0) == 1.0);
  CHECK(std::abs(mb.weight(pi / 4.0) - 1.5) <= 1e-12);
  CHECK(std::abs(mb.weight(pi) - 3.0) <= 1e-12);
  CHECK(std::abs(mb.weight(7.0 * pi / 4.0) - 2.5) <= 1e-12);  // wraps back toward samples[0]

  MeasureSpec at = parse_spec_text(
      R"({"kind":"weight","weight":{"family":"lebesgue"},"atoms":[{"theta":-1.0,"mass":0.5}]})");
  REQUIRE(at.atoms.size() == 1);
  CHECK(std::abs(at.atoms[0].theta - (two_pi - 1.0)) <= 1e-15);
  CHECK(at.atoms[0].mass == 0.5);
}

TEST_CASE("schur specs give the matching weight and head") {
  MeasureSpec s = parse_spec_text(R"({"kind":"schur","schur":[[0.5,0]],"eps0":6.0})");
  CircleMeasure m = measure_from_spec(s, 1024);
  SchurSequence head = head_from_spec(s, m, 5);
  CHECK(head.eps0 == 6.0);
  REQUIRE(head.head.size() == 1);
  CHECK(head.head[0] == cplx(0.5, 0.0));
  // Total mass of the Bernstein-Szego weight equals eps0.
  CircleEval one = eval_on_circle(LaurentPoly(0, {cplx(1.0)}), m);
  CHECK(std::abs(circle_inner(one, one, m) - 6.0) <= 1e-12);
}

TEST_CASE("head recovery from a weight spec") {
  MeasureSpec leb = parse_spec_text(R"({"kind":"weight","weight":{"family":"lebesgue"}})");
  CircleMeasure m = measure_from_spec(leb, 1024);
  SchurSequence head = head_from_spec(leb, m, 6);
  REQUIRE(head.head.size() == 6);
  for (const cplx& a : head.head) CHECK(std::abs(a) <= 1e-13);
  CHECK(std::abs(head.eps0 - two_pi) <= 1e-12);
}

TEST_CASE("generation matches closed forms") {
  GenResult free = generate(SchurSequence(), 3);
  REQUIRE(free.f.size() == 4);
  // Scaled Chebyshev entry: top-left of the degree-2 two-sided polynomial.
  const RealPoly& t2 = free.f[2](0, 0);
  REQUIRE(t2.degree() == 2);
  CHECK(std::abs(t2.coeff(0) + 0.5) <= 1e-15);
  CHECK(std::abs(t2.coeff(1)) <= 1e-15);
  CHECK(std::abs(t2.coeff(2) - 1.0) <= 1e-15);

  GenResult g = generate(SchurSequence({cplx(0.5, 0.0)}), 1);
  CHECK(g.f[1](0, 0).degree() == 1);
  CHECK(g.f[1](0, 0).coeff(0) == 0.5);
  CHECK(g.f[1](0, 0).coeff(1) == 1.0);
  CHECK(g.f[1](0, 1).degree() == -1);
  CHECK(g.f[1](1, 0).degree() == -1);
  CHECK(g.f[1](1, 1).degree() == 0);
  CHECK(g.f[1](1, 1).coeff(0) == 1.0);
  REQUIRE(g.phi.size() == 2);
  CHECK(g.phi[1].coeff(0) == cplx(0.5, 0.0));
  CHECK(g.h[1](0, 0) == 0.5);
  CHECK(g.h[1](1, 1) == -0.5);
  REQUIRE(g.p.size() == 2);
  REQUIRE(g.q.size() == 2);
  REQUIRE(g.gram.size() == 2);
}

TEST_CASE("generated output round-trips byte for byte") {
  SchurSequence s(testutil::random_head(5, 6), 1.25);
  GenResult g = generate(s, 5);
  std::string text = to_json(g);
  GenResult back = gen_result_from_json(text);
  CHECK(back.n == g.n);
  CHECK(back.eps0 == g.eps0);
  REQUIRE(back.schur.size() == g.schur.size());
  for (std::size_t i = 0; i < g.schur.size(); ++i) CHECK(back.schur[i] == g.schur[i]);
  REQUIRE(back.q.size() == g.q.size());
  for (std::size_t n = 0; n < g.q.size(); ++n)
    CHECK(max_coeff(back.q[n] - g.q[n]) == 0.0);
  CHECK(to_json(back) == text);
}

TEST_CASE("malformed generated output is rejected") {
  CHECK_THROWS_AS(gen_result_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(gen_result_from_json(R"({"n":1})"), std::invalid_argument);
}

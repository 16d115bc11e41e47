#include "doctest.h"
#include "oracles.hpp"
#include "quadcurves/errors.hpp"
#include "quadcurves/ideal.hpp"

using namespace qc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Ideal I(std::initializer_list<const char*> gens) {
  std::vector<std::string> v(gens.begin(), gens.end());
  return Ideal::from_strings(v);
}

}  // namespace

TEST_CASE("ideals require homogeneous generators") {
  try {
    I({"x^2 + y"});
    FAIL("expected not-homogeneous");
  } catch (const MathError& e) {
    CHECK(e.reason() == "not-homogeneous");
  }
  CHECK(Ideal({P("x"), Polynomial()}).generators().size() == 1);
}

TEST_CASE("reduced Groebner bases pass Buchberger's criterion and span the ideal") {
  const std::vector<Ideal> cases = {
      I({"x", "y"}),
      I({"xz - yt", "x^2", "xy", "y^2"}),
      I({"xy", "x^2z", "y^2t", "xzt + yzt"}),
      I({"xz - y^2", "xt - yz", "yt - z^2"}),
      I({"xy", "x^2z + xz^2", "y^2t + yt^2", "xzt^2 + ytz^2 + z^2t^2"}),
  };
  for (const auto& i : cases) {
    const auto& gb = i.groebner_basis();
    CHECK(oracle::is_groebner(gb));
    CHECK(oracle::same_pieces(gb, i.generators(), 7));
    for (const auto& g : gb) CHECK(g.leading_term().coeff == 1);
  }
  CHECK(I({"x", "y"}).groebner_basis() == std::vector<Polynomial>{P("x"), P("y")});
}

TEST_CASE("Groebner bases in other orders") {
  const Ideal i = I({"xz - y^2", "xt - yz", "yt - z^2"});
  for (auto order : {MonomialOrder::lex(), MonomialOrder::elimination(1), MonomialOrder::elimination(2)}) {
    const auto& gb = i.groebner_basis(order);
    CHECK(oracle::same_pieces(gb, i.generators(), 6));
    for (const auto& g : gb) CHECK(i.contains(g));
  }
}

TEST_CASE("ideal equality is independent of generators") {
  CHECK(I({"x", "y"}) == I({"x + y", "x - y"}));
  CHECK_FALSE(I({"x", "y"}) == I({"x", "z"}));
  CHECK(I({"xz - yt", "x^2", "xy", "y^2"}) == I({"y^2", "xy", "x^2", "xz - yt"}));
}

TEST_CASE("Hilbert function agrees with the degreewise oracle") {
  const std::vector<Ideal> cases = {
      I({"xz - yt", "x^2", "xy", "y^2"}),
      I({"xy", "x^2z", "y^2t", "xzt + yzt"}),
      I({"xz - yt", "z^3"}),
      I({"xz", "xt", "yz", "yt"}),
  };
  for (const auto& i : cases) {
    const HilbertData hd = hilbert_data(i);
    for (int j = 0; j <= 8; ++j) {
      const auto expect = oracle::quotient_dim(i.generators(), j);
      CHECK(hilbert_function(i, j) == expect);
      CHECK(hd.value(j) == expect);
    }
  }
}

TEST_CASE("Hilbert data of standard examples") {
  // complete intersection of degrees 2 and 3
  const HilbertData ci = hilbert_data(I({"xz - yt", "x^3 + y^3 + z^3 + t^3"}));
  CHECK(ci.numerator == IntPoly{1, 0, -1, -1, 0, 1});
  CHECK(ci.dimension == 2);
  CHECK(*ci.degree == 6);
  CHECK(*ci.arithmetic_genus == 4);

  const HilbertData cubic = hilbert_data(I({"xz - yt", "x^3", "x^2y", "xy^2", "y^3"}));
  CHECK(*cubic.degree == 3);

  const HilbertData line = hilbert_data(I({"x", "y"}));
  CHECK(*line.degree == 1);
  CHECK(*line.arithmetic_genus == 0);

  const HilbertData unit = hilbert_data(Ideal::unit());
  CHECK(unit.dimension == -1);
  const HilbertData zero = hilbert_data(Ideal());
  CHECK(zero.zero_ideal);
  CHECK_FALSE(zero.degree.has_value());
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dimension(I({"x", "y"})) == 2);
  CHECK(krull_dimension(Ideal::maximal()) == 0);
  CHECK(krull_dimension(I({"xz - yt"})) == 3);
  CHECK(krull_dimension(Ideal()) == 4);
  CHECK(codimension(I({"x", "y", "z"})) == 3);
}

TEST_CASE("intersection matches piecewise intersections") {
  const std::vector<std::pair<Ideal, Ideal>> cases = {
      {I({"x", "y"}), I({"z", "t"})},
      {I({"x", "y + t"}), I({"y", "x + z"})},
      {I({"xz - yt", "x^2", "xy", "y^2"}), I({"xz - yt", "t", "z"})},
  };
  for (const auto& [a, b] : cases) {
    const Ideal c = ideal_intersection(a, b);
    for (int j = 0; j <= 6; ++j) {
      CHECK(oracle::ideal_dim(c.generators(), j) == oracle::intersection_dim(a.generators(), b.generators(), j));
    }
    CHECK(a.contains(c));
    CHECK(b.contains(c));
  }
  CHECK(ideal_intersection(I({"x", "y"}), I({"x", "y"})) == I({"x", "y"}));
}

TEST_CASE("the residual decomposition of a reducible-family ideal") {
  // h = 1, A = B = 1, F = z, G = t: (x, y + t) cap (y, x + z)
  CHECK(ideal_intersection(I({"x", "y + t"}), I({"y", "x + z"})) == I({"xy", "x^2 + xz", "y^2 + yt", "xt + yz + zt"}));
  // h = 1, A = z, F = z^2, B = t, G = t^2
  CHECK(ideal_intersection(I({"x", "yt + t^2"}), I({"y", "xz + z^2"})) ==
        I({"xy", "x^2z + xz^2", "y^2t + yt^2", "xzt^2 + ytz^2 + z^2t^2"}));
}

TEST_CASE("quotients match the colon oracle") {
  const Ideal i = I({"xy", "x^2z", "y^2t", "xzt + yzt"});
  const Ideal q = ideal_quotient(i, P("x"));
  CHECK(q == I({"y", "xz"}));
  for (int j = 0; j <= 6; ++j) CHECK(oracle::ideal_dim(q.generators(), j) == oracle::colon_dim(i.generators(), P("x"), j));

  const Ideal sq = ideal_power(I({"x", "y"}), 2);
  CHECK(ideal_quotient(sq, I({"x", "y"})) == I({"x", "y"}));
  CHECK(ideal_quotient(I({"x"}), Polynomial()).is_unit());
}

TEST_CASE("saturation") {
  // (x,y)^2 : (x,y) = (x,y), and iterating once more reaches the unit ideal.
  CHECK(saturation(ideal_power(I({"x", "y"}), 2), I({"x", "y"})).is_unit());
  CHECK(saturation(I({"x", "y"}), Ideal::unit()) == I({"x", "y"}));
  // (x, y) is saturated; an embedded point at the origin is removed.
  const Ideal embedded = ideal_intersection(I({"x", "y"}), ideal_power(Ideal::maximal(), 3));
  CHECK_FALSE(embedded == I({"x", "y"}));
  CHECK(saturate(embedded) == I({"x", "y"}));
  const Ideal s = saturate(I({"x", "y", "z^3 + zt^2", "t^3"}));
  CHECK(saturate(s) == s);
  CHECK(saturate(build_smooth_minimal_ideal(1)) == I({"x", "y"}));
}

TEST_CASE("minimal generator counts") {
  CHECK(minimal_generator_count(I({"xz - yt", "x^2", "xy", "y^2"})).mu == 4);
  CHECK(minimal_generator_count(I({"x", "y"})).mu == 2);
  const auto g = minimal_generator_count(I({"x", "y", "x + y", "x^2", "z^2", "xz"}));
  CHECK(g.mu == 3);
  CHECK(g.per_degree.at(1) == 2);
  CHECK(g.per_degree.at(2) == 1);

  const auto mg = minimal_generators(I({"x", "y", "x + y", "x^2", "z^2", "xz"}));
  CHECK(mg == std::vector<Polynomial>{P("x"), P("y"), P("z^2")});
  const Ideal prod = ideal_product(I({"x", "y"}), I({"z", "t"}));
  CHECK(Ideal(minimal_generators(prod)) == prod);
  for (int j = 0; j <= 5; ++j) {
    CHECK(oracle::ideal_dim(minimal_generators(prod), j) == oracle::ideal_dim(prod.generators(), j));
  }
}

TEST_CASE("regular sequences") {
  auto seq = [](std::initializer_list<const char*> s) {
    std::vector<Polynomial> v;
    for (auto c : s) v.push_back(P(c));
    return is_regular_sequence(v);
  };
  CHECK(seq({"x", "y", "z", "t"}));
  CHECK(seq({"x", "y", "z", "zt + t^2"}));
  CHECK_FALSE(seq({"x", "y", "tz", "t^2"}));
  CHECK_FALSE(seq({"x", "y", "z", "z^2"}));
  CHECK_FALSE(seq({"x", "1"}));
  try {
    seq({"x", "y + z^2"});
    FAIL("expected not-homogeneous");
  } catch (const MathError& e) {
    CHECK(e.reason() == "not-homogeneous");
  }
  CHECK_THROWS_AS(is_regular_sequence(std::vector<Polynomial>{}), MathError);
}

TEST_CASE("ACM test for curves on quadrics") {
  auto cubic = is_acm_curve(I({"xz - y^2", "xt - yz", "yt - z^2"}));
  CHECK(cubic.acm == true);
  CHECK(cubic.mu == 3);
  auto smooth2 = is_acm_curve(I({"xz - yt", "x^2", "xy", "y^2"}));
  CHECK(smooth2.acm == false);
  CHECK(smooth2.mu == 4);
  auto ci = is_acm_curve(I({"xz - yt", "z^3"}));
  CHECK(ci.acm == true);
  CHECK(ci.mu == 2);
  CHECK_THROWS_AS(is_acm_curve(I({"x"})), MathError);
  CHECK_FALSE(is_acm_curve(I({"x^3", "y^3"})).acm.has_value());
}

TEST_CASE("homogeneous components are in reduced echelon form") {
  const auto q = homogeneous_component(I({"xz - yt", "x^2", "xy", "y^2"}), 2);
  CHECK(q.size() == 4);
  const auto none = homogeneous_component(I({"x^3", "y^3"}), 2);
  CHECK(none.empty());
}

#include "doctest.h"
#include "oracles.hpp"
#include "quadcurves/errors.hpp"
#include "quadcurves/homology.hpp"

using namespace qc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Polynomial> polys(std::initializer_list<const char*> s) {
  std::vector<Polynomial> v;
  for (auto c : s) v.push_back(P(c));
  return v;
}

std::string reason_of(auto&& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.reason();
  }
  return "";
}

FreeGradedModule M(std::vector<int> tw) { return FreeGradedModule{std::move(tw)}; }

FreeComplex koszul4() { return koszul_complex(polys({"x", "y", "z", "t"})); }

}  // namespace

TEST_CASE("exact rank and determinant of polynomial matrices") {
  const auto m = PolyMatrix::from_strings({{"x", "y"}, {"z", "t"}});
  CHECK(determinant(m) == P("xt - yz"));
  CHECK(rank_exact(m) == 2);
  const auto low = PolyMatrix::from_strings({{"x", "y", "z"}, {"2x", "2y", "2z"}});
  CHECK(rank_exact(low) == 1);
  CHECK(rank_randomized(low) == 1);
  CHECK(determinant(PolyMatrix::from_strings({{"x", "y"}, {"x^2", "xy"}})).is_zero());
  const auto vand = PolyMatrix::from_strings({{"1", "1", "1"}, {"x", "y", "z"}, {"x^2", "y^2", "z^2"}});
  CHECK(determinant(vand) == P("y - x") * P("z - x") * P("z - y"));
  for (const auto& mi : all_minors(low, 2)) CHECK(mi.is_zero());
  CHECK(all_minors(m, 1).size() == 4);
  CHECK(rank_exact(PolyMatrix(3, 0)) == 0);
}

TEST_CASE("exact rank agrees with evaluation at random points") {
  std::vector<PolyMatrix> ms;
  for (int d = 2; d <= 5; ++d) {
    const auto c = predicted_smooth_resolution(d);
    for (const auto& m : c.matrices()) ms.push_back(m);
  }
  const auto k = koszul4();
  for (const auto& m : k.matrices()) ms.push_back(m);
  for (const auto& m : ms) {
    const auto r = matrix_rank(m);
    CHECK(r.agreed);
    CHECK(r.rank == oracle::evaluated_rank(m));
  }
}

TEST_CASE("minors witness the codimension of Fitting ideals") {
  const auto k = koszul4();
  const auto w = minors_codim_witness(k.matrices()[0], 1, 4);
  CHECK(w.reached);
  CHECK(w.codim >= 4);
  const auto w2 = minors_codim_witness(PolyMatrix::from_strings({{"xy", "xz"}}), 1, 2);
  CHECK_FALSE(w2.reached);
  CHECK(w2.codim == 1);
}

TEST_CASE("graded pieces of maps") {
  const GradedMap x(M({-1}), M({0}), PolyMatrix::from_strings({{"x"}}));
  const auto p1 = graded_piece(x, 1);
  CHECK(p1.rows() == 4);
  CHECK(p1.cols() == 1);
  CHECK(p1.rank() == 1);
  const auto p0 = graded_piece(x, 0);
  CHECK(p0.rows() == 1);
  CHECK(p0.cols() == 0);

  const GradedMap pres = type_ii_presentation(2);
  const auto q = graded_piece(pres, 1);
  CHECK(q.rows() == 8);
  CHECK(q.cols() == 6);
  CHECK(q.rank() == 6);

  CHECK(reason_of([] { GradedMap(M({-1}), M({0, 0}), PolyMatrix::from_strings({{"x"}})); }) == "dimension-mismatch");
  const GradedMap bad(M({-2}), M({0}), PolyMatrix::from_strings({{"x"}}));
  CHECK(bad.degree_violation().has_value());
  CHECK(reason_of([&] { graded_piece(bad, 2); }) == "twist-mismatch");
}

TEST_CASE("verify_complex on good and damaged complexes") {
  CHECK(verify_complex(koszul4()).ok);
  const auto red = predicted_reducible_resolution(ReducibleCurveSpec::parse("z", "t", "z", "t", "0"));
  CHECK(verify_complex(red).ok);

  auto mats = red.matrices();
  mats[2].at(0, 0) = -mats[2].at(0, 0);
  const auto flipped = verify_complex(FreeComplex(red.modules(), mats));
  CHECK_FALSE(flipped.ok);
  CHECK(flipped.witness == "composition-zero");
  CHECK(flipped.position == 2);

  auto mods = red.modules();
  mods[3].twists[0] -= 1;
  const auto shifted = verify_complex(FreeComplex(mods, red.matrices()));
  CHECK_FALSE(shifted.ok);
  CHECK(shifted.witness == "twist-mismatch");
  CHECK(shifted.position == 3);
  CHECK(reason_of([&] { buchsbaum_eisenbud_check(FreeComplex(mods, red.matrices())); }) == "not-a-complex");
}

TEST_CASE("acyclicity certificates") {
  const auto k = buchsbaum_eisenbud_check(koszul4());
  CHECK(k.pass);
  CHECK(k.positions.size() == 4);
  for (const auto& w : k.positions) {
    CHECK(w.ok());
    CHECK(w.codim >= w.position);
  }

  for (int d = 2; d <= 4; ++d) CHECK(certify_resolution(predicted_smooth_resolution(d)).pass());
  CHECK(certify_resolution(predicted_reducible_resolution(ReducibleCurveSpec::parse("z", "t", "z", "t", "0"))).pass());
  CHECK(certify_resolution(skew_lines_resolution()).pass());

  // (x, y) <- (yz, -xz): a complex, ranks fine, but I_1 of the second map has codim 1.
  const FreeComplex shallow({M({0}), M({-1, -1}), M({-3})},
                            {PolyMatrix::from_strings({{"x", "y"}}), PolyMatrix::from_strings({{"yz"}, {"-xz"}})});
  const auto cert = certify_resolution(shallow);
  CHECK(cert.complex.ok);
  CHECK_FALSE(cert.pass());
  CHECK(cert.failure() == "grade-condition");

  // trivial summand: exact but not minimal
  const FreeComplex padded({M({0}), M({-1, 0}), M({-1})},
                           {PolyMatrix::from_strings({{"x", "1"}}), PolyMatrix::from_strings({{"1"}, {"-x"}})});
  CHECK(verify_complex(padded).ok);
  CHECK_FALSE(is_minimal_complex(padded));
  CHECK(is_minimal_complex(koszul4()));
}

TEST_CASE("Betti tables and Euler characteristic") {
  for (int d = 2; d <= 5; ++d) {
    const auto c = predicted_smooth_resolution(d);
    CHECK(BettiTable::of(c).ranks() == std::vector<int>{1, d + 2, 2 * d, d - 1});
    const auto gens = build_smooth_minimal_ideal(d).generators();
    for (int j = 0; j <= 10; ++j) CHECK(euler_characteristic(c, j) == oracle::quotient_dim(gens, j));
  }
  const auto k = BettiTable::of(koszul4());
  CHECK(k.ranks() == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(k.entries.at({2, -2}) == 6);
}

TEST_CASE("homology of the Koszul complex") {
  const auto c = koszul4();
  const auto h0 = homology_table(c, 0);
  CHECK(h0.dims == std::map<int, std::int64_t>{{0, 1}});
  for (std::size_t k = 1; k <= 4; ++k) CHECK(homology_table(c, k).is_zero());
  CHECK(homology_table(c, 0, Window{-2, 2}).total() == 1);
  CHECK(reason_of([&] { homology_table(c, 0, Window{-1, 2}); }) == "window-too-small");
  CHECK(reason_of([&] { homology_table(c, 0, Window{0, 1}); }) == "window-too-small");
}

TEST_CASE("cokernel tables agree with direct linear algebra") {
  for (int s = 1; s <= 4; ++s) {
    const GradedMap p = type_ii_presentation(s);
    const auto mt = cokernel_table(p);
    for (int j = -2; j <= s + 3; ++j) CHECK(mt.at(j) == oracle::cokernel_dim(p, j));
  }
}

TEST_CASE("Rao modules of the smooth family match the type II cokernel") {
  for (int d = 2; d <= 5; ++d) {
    const auto mt = rao_module(build_smooth_minimal_ideal(d), predicted_smooth_resolution(d));
    const GradedMap p = type_ii_presentation(d - 1);
    for (int j = -3; j <= d + 2; ++j) CHECK(mt.at(j) == oracle::cokernel_dim(p, j));
    CHECK(duality_check(mt, d - 2));
  }
}

TEST_CASE("Rao modules of reducible curves are K[z,t]/(F,G) shifted by deg h") {
  const std::vector<std::array<const char*, 5>> specs = {
      {"z", "t", "z", "t", "0"},
      {"z^2", "t", "z^2", "t", "z"},
      {"1", "1", "z", "t", "0"},
      {"z", "t^2", "z", "t^2", "z"},
  };
  for (const auto& [a, b, f, g, h] : specs) {
    const auto s = ReducibleCurveSpec::parse(a, b, f, g, h);
    const auto mt = rao_module(build_reducible_ideal(s), predicted_reducible_resolution(s));
    const auto gens = polys({"x", "y", f, g});
    std::map<int, std::int64_t> expect;
    for (int j = 0; j <= s.d_F + s.d_G; ++j) {
      if (auto v = oracle::quotient_dim(gens, j)) expect[j + s.d_h] = v;
    }
    CHECK(mt.dims == expect);
    CHECK(duality_check(mt, s.degree() - 2));
  }
}

TEST_CASE("Rao module errors") {
  const auto s = ReducibleCurveSpec::parse("z", "t", "z", "t", "0");
  const auto res = predicted_reducible_resolution(s);
  CHECK(reason_of([&] { rao_module(Ideal::from_strings({"xy", "xz", "yt", "zt"}), res); }) == "resolution-mismatch");
  auto mats = res.matrices();
  mats[1].at(0, 0) = mats[1].at(0, 0) + P("xz");
  CHECK(reason_of([&] { rao_module(build_reducible_ideal(s), FreeComplex(res.modules(), mats)); }) ==
        "resolution-not-exact");
  CHECK(rao_module(Ideal::from_strings({"x", "y"}), koszul_complex(polys({"x", "y"}))).is_zero());
  CHECK(reason_of([&] { rao_module(Ideal::from_strings({"x", "y", "z"}), koszul_complex(polys({"x", "y", "z"}))); }) ==
        "not-a-curve");
}

TEST_CASE("duality check") {
  ModuleTable mt;
  mt.dims = {{0, 1}, {1, 2}, {2, 1}};
  CHECK(duality_check(mt, 2));
  CHECK_FALSE(duality_check(mt, 3));
  mt.dims = {{1, 1}, {2, 2}};
  CHECK_FALSE(duality_check(mt, 3));
  CHECK(duality_check(ModuleTable{}, 5));
}

TEST_CASE("annihilators of the type II modules") {
  // For s <= 2 the module lives in at most two adjacent degrees, so every quadric kills it.
  CHECK(annihilator_space(cokernel_table(type_ii_presentation(1)), 2).size() == 10);
  CHECK(annihilator_space(cokernel_table(type_ii_presentation(2)), 2).size() == 10);
  for (int s = 3; s <= 5; ++s) {
    const auto ann = annihilator_space(cokernel_table(type_ii_presentation(s)), 2);
    REQUIRE(ann.size() == 1);
    CHECK(ann[0].monic() == P("xz - yt"));
    CHECK(quadric_rank(ann[0]) == 4);
    CHECK(annihilator_space(cokernel_table(type_ii_presentation(s)), 1).empty());
  }
  CHECK(reason_of([] {
          ModuleTable mt;
          annihilator_space(mt, 2);
        }) == "no-presentation");
}

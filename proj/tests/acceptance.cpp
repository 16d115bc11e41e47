// Acceptance run: one PASS/FAIL line per criterion, with wall time and budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quadcurves/errors.hpp"

using namespace qc;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

struct Check {
  int failures = 0;
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 20) log << "    failed: " << what << "\n";
    }
  }
};

std::string reason_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MathError& e) {
    return e.reason();
  }
  return "";
}

std::string mono(const char* var, int e) {
  if (e == 0) return "1";
  return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

// (other + var) var^{e-1}, or var^e.
Polynomial side_poly(bool mixed, const char* other, const char* var, int e) {
  if (!mixed || e == 0) return P(mono(var, e));
  return P(std::string(other) + " + " + var) * P(mono(var, e - 1));
}

std::map<int, std::int64_t> shifted_koszul_table(const Polynomial& F, const Polynomial& G, int shift, int upto) {
  std::map<int, std::int64_t> t;
  const std::vector<Polynomial> gens = {P("x"), P("y"), F, G};
  for (int j = 0; j <= upto; ++j) {
    if (auto v = oracle::quotient_dim(gens, j)) t[j + shift] = v;
  }
  return t;
}

std::string dims_str(const std::map<int, std::int64_t>& m) {
  std::string s = "{";
  for (const auto& [k, v] : m) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

bool resolution_ok(const FreeComplex& c) {
  return verify_complex(c).ok && is_minimal_complex(c) && buchsbaum_eisenbud_check(c).pass;
}

// ----------------------------------------------------------------- criteria

void reducible_suite(Check& ck, double& worst) {
  const std::vector<std::pair<std::string, std::string>> fg = {{"z", "t"}, {"z^2", "t"}, {"z^2", "t^2"}, {"z", "t^3"}};
  const std::vector<std::string> hs = {"0", "z", "z^2"};
  int count = 0;
  for (const auto& h : hs) {
    for (const auto& [fs, gs] : fg) {
      for (bool mixed : {false, true}) {
        const auto t0 = std::chrono::steady_clock::now();
        const Polynomial F = P(fs), G = P(gs), hp = P(h);
        const int dF = F.degree(), dG = G.degree();
        // With h = 0 the plain variant takes d_h = 0 and the mixed one d_h = 1.
        const int dh = hp.is_zero() ? (mixed ? 1 : 0) : hp.degree();
        const Polynomial A = side_poly(mixed, "x", "z", dF + dh - 1);
        const Polynomial B = side_poly(mixed, "y", "t", dG + dh - 1);
        const std::string name = "A=" + A.to_string() + " B=" + B.to_string() + " F=" + fs + " G=" + gs + " h=" + h;
        ++count;
        try {
          const auto spec = ReducibleCurveSpec::make(A, B, F, G, hp);
          ck.expect(spec.d_h == dh, name + ": d_h");
          const Ideal I = build_reducible_ideal(spec);
          ck.expect(minimal_generator_count(I).mu == 4, name + ": mu");
          const auto hd = hilbert_data(I);
          ck.expect(hd.dimension == 2 && hd.degree && *hd.degree == 2 * dh + dF + dG, name + ": degree");
          const std::int64_t q0 = oracle::quotient_dim(I.generators(), 12), q1 = oracle::quotient_dim(I.generators(), 13);
          ck.expect(q1 - q0 == 2 * dh + dF + dG, name + ": degree (oracle)");

          const auto res = predicted_reducible_resolution(spec);
          ck.expect(verify_complex(res).ok, name + ": verify_complex");
          ck.expect(is_minimal_complex(res), name + ": minimal");
          ck.expect(buchsbaum_eisenbud_check(res).pass, name + ": Buchsbaum-Eisenbud");

          const auto mt = rao_module(I, res);
          const auto expect = shifted_koszul_table(F, G, dh, dF + dG);
          ck.expect(mt.dims == expect, name + ": rao " + dims_str(mt.dims) + " vs " + dims_str(expect));
          ck.expect(mt.total() == dF * dG, name + ": rao total");
          ck.expect(duality_check(mt, spec.degree() - 2), name + ": duality");
        } catch (const std::exception& e) {
          ck.expect(false, name + ": threw " + e.what());
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, dt);
        ck.expect(dt < 10.0, name + ": per-spec budget");
      }
    }
  }
  ck.expect(count == 24, "grid size");
}

void smooth_suite(Check& ck) {
  for (int d = 2; d <= 6; ++d) {
    const std::string name = "d=" + std::to_string(d);
    const Ideal I = build_smooth_minimal_ideal(d);
    const auto res = predicted_smooth_resolution(d);
    ck.expect(resolution_ok(res), name + ": certification");
    const auto ranks = BettiTable::of(res).ranks();
    ck.expect(ranks == std::vector<int>{1, d + 2, 2 * d, d - 1}, name + ": Betti ranks");
    for (int j = 0; j <= 10; ++j) {
      const auto q = oracle::quotient_dim(I.generators(), j);
      ck.expect(euler_characteristic(res, j) == q, name + ": Hilbert identity at " + std::to_string(j));
      ck.expect(hilbert_function(I, j) == q, name + ": Hilbert function at " + std::to_string(j));
    }
    const auto mt = rao_module(I, res);
    const GradedMap pres = type_ii_presentation(d - 1);
    const auto ct = cokernel_table(pres);
    ck.expect(mt.dims == ct.dims, name + ": rao vs type II cokernel");
    for (int j = -3; j <= d + 2; ++j) ck.expect(mt.at(j) == oracle::cokernel_dim(pres, j), name + ": cokernel oracle");
    ck.expect(duality_check(mt, d - 2), name + ": duality");
    if (d == 2) ck.expect(mt.dims == std::map<int, std::int64_t>{{0, 1}}, "d=2 table");
    if (d == 3) ck.expect(mt.dims == std::map<int, std::int64_t>{{0, 2}, {1, 2}}, "d=3 table");
  }
  for (int i = 2; i <= 8; ++i) {
    const auto a = smooth_structure_matrices(i);
    const auto b = smooth_structure_matrices(i + 1);
    ck.expect(b.N * a.M == b.M * a.N, "N M relation at i=" + std::to_string(i));
  }
}

void decomposition_suite(Check& ck) {
  const std::vector<std::vector<std::pair<int, int>>> sets = {{{0, 1}}, {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}, {1, 1}}};
  for (Ruling r : {Ruling::First, Ruling::Second}) {
    for (const auto& pts : sets) {
      for (int m0 = 1; m0 <= 2; ++m0) {
        MultilineSpec s;
        s.ruling = r;
        for (std::size_t k = 0; k < pts.size(); ++k) {
          s.lines.push_back({pts[k].first, pts[k].second, k == 0 ? m0 : 1});
        }
        std::string name = r == Ruling::First ? "first" : "second";
        for (const auto& l : s.lines) {
          name += " (" + std::to_string(l.u) + ":" + std::to_string(l.v) + ")*" + std::to_string(l.multiplicity);
        }
        const Ideal a = build_multiline_ideal(s);
        ck.expect(a == determinantal_multiline_ideal(s), name + ": determinantal");
        ck.expect(a == multiline_intersection_form(s), name + ": intersection");
        const auto hd = hilbert_data(a);
        ck.expect(hd.degree && *hd.degree == s.degree(), name + ": degree");
        ck.expect(oracle::quotient_dim(a.generators(), 13) - oracle::quotient_dim(a.generators(), 12) == s.degree(),
                  name + ": degree (oracle)");
      }
    }
  }
}

void classification_suite(Check& ck) {
  const std::vector<std::pair<std::string, int>> ranks = {{"x^2", 1}, {"xy", 2}, {"xz - y^2", 3}, {"xz - yt", 4}};
  for (const auto& [q, r] : ranks) ck.expect(quadric_rank(P(q)) == r, "quadric_rank " + q);

  struct Fixture {
    std::string name;
    Ideal ideal;
    FreeComplex res;
    bool acm;
  };
  std::vector<Fixture> fx;
  const std::vector<Polynomial> ci = {P("xz - yt"), P("z^3 + t^3")};
  fx.push_back({"complete intersection", Ideal(ci), koszul_complex(ci), true});
  const auto hb = hilbert_burch_complex(PolyMatrix::from_strings({{"x", "y", "z"}, {"y", "z", "t"}}));
  fx.push_back({"twisted cubic", Ideal::from_strings({"xz - y^2", "xt - yz", "yt - z^2"}), hb, true});
  fx.push_back({"two skew lines", Ideal::from_strings({"xz", "xt", "yz", "yt"}), skew_lines_resolution(), false});
  for (int d = 2; d <= 5; ++d) {
    fx.push_back({"smooth d=" + std::to_string(d), build_smooth_minimal_ideal(d), predicted_smooth_resolution(d), false});
  }
  for (const auto& abfgh : std::vector<std::array<std::string, 5>>{
           {"1", "1", "z", "t", "0"}, {"z", "t", "z", "t", "0"}, {"z^2", "t", "z^2", "t", "z"}}) {
    const auto s = ReducibleCurveSpec::parse(abfgh[0], abfgh[1], abfgh[2], abfgh[3], abfgh[4]);
    fx.push_back({"reducible A=" + abfgh[0] + " h=" + abfgh[4], build_reducible_ideal(s),
                  predicted_reducible_resolution(s), false});
  }

  for (const auto& f : fx) {
    const auto rep = classify_curve(f.ideal, f.res);
    const auto mu = minimal_generator_count(f.ideal).mu;
    ck.expect(rep.mu == mu, f.name + ": mu");
    ck.expect(rep.acm == f.acm, f.name + ": acm flag");
    ck.expect(rep.rao_dims.has_value(), f.name + ": rao computed");
    const bool rao_zero = rep.rao_dims && rep.rao_dims->empty();
    if (f.acm) {
      ck.expect(rao_zero, f.name + ": ACM has zero Rao table");
      ck.expect(mu == 2 || mu == 3, f.name + ": ACM mu");
    } else {
      ck.expect(!rao_zero, f.name + ": non-ACM has nonzero Rao table");
      ck.expect(mu == 4 || mu == rep.degree + 2, f.name + ": non-ACM mu");
    }
    const bool two_quadrics = oracle::ideal_dim(f.ideal.generators(), 2) >= 2;
    ck.expect(saturate(f.ideal) == f.ideal, f.name + ": saturated fixture");
    ck.expect(rep.extremal == two_quadrics, f.name + ": extremal flag");
    if (f.name == "two skew lines") {
      ck.expect(rep.extremal && rep.rao_dims == std::map<int, std::int64_t>{{0, 1}}, "skew lines: extremal with M = K");
    }
  }
}

void type_i_identity(Check& ck) {
  const auto c = type_i_minimal_curve(P("y"), P("z^2 + t^2"), P("z"), P("t^3"));
  ck.expect(c.identity_holds, "identity flag");
  const Polynomial x = P("x"), p = P("y"), h = P("z^2 + t^2"), F = P("z"), G = P("t^3");
  const Ideal lhs({x * x, x * p, p * p * h, p * h * F + x * G});
  const Ideal rhs = ideal_intersection(Ideal({x * x, x * p, p * p, p * h * F + x * G}), Ideal({x, h}));
  ck.expect(lhs == rhs, "reduced GB equality");
  ck.expect(oracle::same_pieces(lhs.generators(), rhs.generators(), 8), "degreewise equality (oracle)");
  ck.expect(reason_of([] { type_i_minimal_curve(P("y"), P("t^2"), P("z"), P("t^3")); }) == "not-regular-sequence",
            "x, y, t^2 z, t^3 rejected");
}

// q annihilates coker(p) iff adding the columns q e_i leaves every graded piece unchanged.
bool annihilates(const GradedMap& p, const Polynomial& q, int lo, int hi) {
  PolyMatrix cols(p.target.rank(), p.target.rank());
  FreeGradedModule src;
  for (std::size_t i = 0; i < p.target.rank(); ++i) {
    cols.at(i, i) = q;
    src.twists.push_back(p.target.twists[i] - q.degree());
  }
  FreeGradedModule big = p.source;
  big.twists.insert(big.twists.end(), src.twists.begin(), src.twists.end());
  const GradedMap aug(big, p.target, hstack(p.matrix, cols));
  for (int j = lo; j <= hi; ++j) {
    if (oracle::cokernel_dim(aug, j) != oracle::cokernel_dim(p, j)) return false;
  }
  return true;
}

void annihilator_suite(Check& ck) {
  for (int s : {3, 4}) {
    const GradedMap p = type_ii_presentation(s);
    const auto ann = annihilator_space(cokernel_table(p), 2);
    ck.expect(ann.size() == 1, "s=" + std::to_string(s) + ": dimension one");
    if (ann.size() == 1) {
      ck.expect(quadric_rank(ann[0]) == 4, "s=" + std::to_string(s) + ": rank 4");
      ck.expect(annihilates(p, ann[0], -1, s + 2), "s=" + std::to_string(s) + ": oracle annihilation");
    }
    // a quadric outside the span does not annihilate
    ck.expect(!annihilates(p, P("xz + yt"), -1, s + 2), "s=" + std::to_string(s) + ": xz + yt does not annihilate");
  }
  const GradedMap p1 = type_ii_presentation(1);
  const auto ann1 = annihilator_space(cokernel_table(p1), 2);
  ck.expect(ann1.size() == 10, "s=1: dimension ten");
  for (const auto& m : monomials_of_degree(2)) {
    ck.expect(annihilates(p1, Polynomial::term(m, 1), -1, 3), "s=1: oracle annihilation");
  }
}

void negative_controls(Check& ck) {
  std::vector<std::pair<std::string, FreeComplex>> good = {
      {"smooth d=3", predicted_smooth_resolution(3)},
      {"reducible", predicted_reducible_resolution(ReducibleCurveSpec::parse("z^2", "t", "z^2", "t", "z"))},
      {"skew lines", skew_lines_resolution()},
  };
  for (const auto& [name, c] : good) {
    ck.expect(certify_resolution(c).pass(), name + ": control passes");
    const std::size_t n = c.length();
    // flip the sign of one nonzero entry of the last map
    auto mats = c.matrices();
    auto& last = mats[n - 1];
    bool flipped = false;
    for (std::size_t r = 0; r < last.rows() && !flipped; ++r) {
      if (!last.at(r, 0).is_zero()) {
        last.at(r, 0) = -last.at(r, 0);
        flipped = true;
      }
    }
    const auto sign = certify_resolution(FreeComplex(c.modules(), mats));
    ck.expect(!sign.pass() && sign.failure() == "composition-zero", name + ": sign flip -> composition-zero");
    ck.expect(sign.complex.position == static_cast<int>(n) - 1, name + ": sign flip position");

    auto mods = c.modules();
    mods[n].twists[0] -= 1;
    const auto twist = certify_resolution(FreeComplex(mods, c.matrices()));
    ck.expect(!twist.pass() && twist.failure() == "twist-mismatch", name + ": twist -> twist-mismatch");
    ck.expect(twist.complex.position == static_cast<int>(n), name + ": twist position");
  }
  ck.expect(reason_of([] { ReducibleCurveSpec::parse("z", "t", "z", "z", "0"); }) == "not-regular-sequence",
            "F, G sharing a factor");
  ck.expect(reason_of([] { ReducibleCurveSpec::parse("z^2", "t^2", "z^2", "zt", "z"); }) == "not-regular-sequence",
            "F = z^2, G = zt");
  ck.expect(reason_of([] { ReducibleCurveSpec::parse("0", "0", "z", "t", "0"); }) == "AB-zero-with-h-zero",
            "A = B = h = 0");
  ck.expect(reason_of([] { ReducibleCurveSpec::parse("0", "t", "z", "t", "0"); }) == "AB-zero-with-h-zero",
            "A = 0, h = 0");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<void(Check&)> run;
  };
  double worst_spec = 0;
  const std::vector<Criterion> criteria = {
      {1, "reducible family suite", 240, [&](Check& c) { reducible_suite(c, worst_spec); }},
      {2, "smooth family suite", 120, smooth_suite},
      {3, "decomposition suite", 60, decomposition_suite},
      {4, "classification suite", 60, classification_suite},
      {5, "type I intersection identity", 30, type_i_identity},
      {6, "annihilator uniqueness", 60, annihilator_suite},
      {7, "negative controls", 30, negative_controls},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("threw ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(dt < cr.budget, "budget");
    const bool pass = ck.failures == 0;
    if (!pass) ++failed;
    std::printf("%s criterion %d (%s): %.2fs / %.0fs budget", pass ? "PASS" : "FAIL", cr.id, cr.name, dt, cr.budget);
    if (cr.id == 1) std::printf(", slowest spec %.2fs / 10s", worst_spec);
    std::printf("\n%s", ck.log.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

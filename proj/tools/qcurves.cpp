// qcurves: constructions, certifications and classifications for curves on
// quadrics in P^3.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quadcurves/errors.hpp"
#include "quadcurves/fixtures.hpp"
#include "quadcurves/report.hpp"

namespace fs = std::filesystem;
using namespace qc;
using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string field = "QQ";
  std::string format = "text";
  std::string order;
  std::string window;
  std::string spec_path;
  std::string ideal_path;
  std::string complex_path;
  std::string batch_dir;
  std::string family;
  int d = 0;
  std::string A, B, F, G, h;
  std::string lines;
  std::string ruling = "first";
};

// Reasons that mean the input itself was unacceptable (exit 2); every other
// MathError is a failed mathematical check (exit 1).
bool is_input_reason(const std::string& r) {
  static const std::set<std::string> input = {
      "wrong-variable-support", "not-homogeneous", "AB-zero-with-h-zero", "wrong-degrees",
      "not-regular-sequence",   "field-mismatch",  "invalid-field",       "dimension-mismatch",
      "repeated-line",          "invalid-line",    "invalid-multiplicity", "invalid-degree",
      "not-a-curve",            "invalid-order",   "wrong-degree",        "empty-input",
      "zero-element",           "no-presentation"};
  return input.count(r) > 0;
}

FieldSpec parse_field(const std::string& s) {
  if (s == "QQ" || s == "Q" || s == "rationals") return FieldSpec::rationals();
  if (s.rfind("p=", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(s.substr(2));
    } catch (const std::exception&) {
      throw ParseError("--field expects QQ or p=<prime>", 0, 0);
    }
    return FieldSpec::prime(p);
  }
  throw ParseError("--field expects QQ or p=<prime>", 0, 0);
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s == "lex") return MonomialOrder::lex();
  if (s.rfind("elim:", 0) == 0) return MonomialOrder::elimination(std::stoi(s.substr(5)));
  throw ParseError("--order expects grevlex, lex or elim:<k>", 0, 0);
}

std::optional<Window> parse_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // lo:hi, either bound may be negative
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw ParseError("--window expects lo:hi", 0, 0);
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    Window w{std::stoi(s.substr(0, colon), &a), std::stoi(s.substr(colon + 1), &b)};
    if (a != colon || b != s.size() - colon - 1) throw std::invalid_argument("junk");
    if (w.lo > w.hi) throw std::invalid_argument("empty");
    return w;
  } catch (const std::exception&) {
    throw ParseError("--window expects lo:hi with integers lo <= hi", 0, 0);
  }
}

// Curve spec from --spec or from the inline family flags.
std::optional<CurveSpec> curve_spec(const Options& o, const FieldSpec& field) {
  if (!o.spec_path.empty()) return parse_curve_spec(read_file(o.spec_path), field);
  if (o.family.empty()) return std::nullopt;
  std::ostringstream text;
  text << "family=" << o.family << "\n";
  if (o.family == "smooth") text << "d=" << o.d << "\n";
  if (o.family == "reducible") {
    for (auto [k, v] : {std::pair{"A", &o.A}, {"B", &o.B}, {"F", &o.F}, {"G", &o.G}, {"h", &o.h}}) {
      if (!v->empty()) text << k << "=" << *v << "\n";
    }
  }
  if (o.family == "multiline") {
    const std::string lines = !o.lines.empty() ? o.lines : "(0:1)*" + std::to_string(std::max(o.d, 1));
    text << "lines=" << lines << "\nruling=" << o.ruling << "\n";
  }
  return parse_curve_spec(text.str(), field);
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) out += ", ";
    out += ps[k].to_string();
  }
  return out;
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

bool json_out(const Options& o) { return o.format == "json"; }

// ---------------------------------------------------------------- commands

int cmd_construct(const Options& o, const FieldSpec& field) {
  auto spec = curve_spec(o, field);
  if (!spec) throw ParseError("construct needs --spec or --family", 0, 0);
  const Ideal i = construct_ideal(*spec);
  std::optional<std::vector<Polynomial>> gb;
  if (!o.order.empty()) gb = i.groebner_basis(parse_order(o.order));
  if (json_out(o)) {
    Json j;
    j["generators"] = strings(i.generators());
    if (gb) {
      j["order"] = parse_order(o.order).to_string();
      j["groebner_basis"] = strings(*gb);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << join(i.generators()) << "\n";
    if (gb) std::cout << "groebner basis (" << parse_order(o.order).to_string() << "): " << join(*gb) << "\n";
  }
  return kExitOk;
}

ClassificationReport classify_one(const Options& o, const FieldSpec& field, const std::string& ideal_path,
                                  const std::string& spec_path) {
  if (!ideal_path.empty()) {
    const Ideal i = parse_ideal_text(read_file(ideal_path), field);
    std::optional<FreeComplex> res;
    if (!o.complex_path.empty()) res = parse_complex_json(read_file(o.complex_path), field);
    return classify_curve(i, res);
  }
  Options local = o;
  local.spec_path = spec_path;
  auto spec = curve_spec(local, field);
  if (!spec) throw ParseError("classify needs --ideal, --spec, --family or --batch", 0, 0);
  return classify_curve(construct_ideal(*spec), predicted_resolution(*spec));
}

int cmd_classify(const Options& o, const FieldSpec& field) {
  if (o.batch_dir.empty()) {
    const auto r = classify_one(o, field, o.ideal_path, o.spec_path);
    std::cout << (json_out(o) ? classification_to_json(r) + "\n" : classification_to_text(r));
    return kExitOk;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.batch_dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  Json all = Json::array();
  int status = kExitOk;
  for (const auto& p : files) {
    const bool is_spec = p.extension() == ".spec";
    try {
      const auto r = classify_one(o, field, is_spec ? "" : p.string(), is_spec ? p.string() : "");
      if (json_out(o)) {
        all.push_back({{"file", p.filename().string()}, {"report", Json::parse(classification_to_json(r))}});
      } else {
        std::cout << "== " << p.filename().string() << "\n" << classification_to_text(r);
      }
    } catch (const std::exception& e) {
      status = kExitInputError;
      if (json_out(o)) {
        all.push_back({{"file", p.filename().string()}, {"error", e.what()}});
      } else {
        std::cout << "== " << p.filename().string() << "\nerror: " << e.what() << "\n";
      }
    }
  }
  if (json_out(o)) std::cout << all.dump(2) << "\n";
  return status;
}

// Resolution from --complex, else the family's closed form.
std::pair<FreeComplex, std::optional<Ideal>> resolution_input(const Options& o, const FieldSpec& field) {
  if (!o.complex_path.empty()) {
    FreeComplex c = parse_complex_json(read_file(o.complex_path), field);
    std::optional<Ideal> i;
    if (!o.ideal_path.empty()) i = parse_ideal_text(read_file(o.ideal_path), field);
    return {c, i};
  }
  auto spec = curve_spec(o, field);
  if (!spec) throw ParseError("needs --complex, --spec or --family", 0, 0);
  auto res = predicted_resolution(*spec);
  if (!res) throw MathError("no-closed-form", "this family has no closed-form resolution");
  return {*res, construct_ideal(*spec)};
}

int cmd_resolve(const Options& o, const FieldSpec& field) {
  auto [c, ideal] = resolution_input(o, field);
  const auto cert = certify_resolution(c);
  const BettiTable betti = BettiTable::of(c);
  if (json_out(o)) {
    Json j;
    j["betti"] = betti.ranks();
    j["betti_diagram"] = betti.to_string();
    j["certificate"] = Json::parse(certificate_to_json(cert));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << betti.to_string() << certificate_to_text(cert);
  }
  return cert.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_complex(const Options& o, const FieldSpec& field) {
  if (o.complex_path.empty()) throw ParseError("verify-complex needs --complex", 0, 0);
  const FreeComplex c = parse_complex_json(read_file(o.complex_path), field);
  const auto cert = certify_resolution(c);
  std::cout << (json_out(o) ? certificate_to_json(cert) + "\n" : certificate_to_text(cert));
  return cert.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_rao(const Options& o, const FieldSpec& field) {
  auto [c, ideal] = resolution_input(o, field);
  if (!ideal) throw ParseError("rao with --complex also needs --ideal", 0, 0);
  const ModuleTable t = rao_module(*ideal, c, parse_window(o.window));
  const auto degree = hilbert_data(*ideal).degree.value_or(0);
  const int shift = static_cast<int>(degree) - 2;
  const bool dual_ok = duality_check(t, shift);
  if (json_out(o)) {
    Json j = Json::parse(module_table_to_json(t));
    j["duality_shift"] = shift;
    j["duality"] = dual_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << module_table_to_text(t) << "duality (shift " << shift << "): " << (dual_ok ? "pass" : "FAIL") << "\n";
  }
  return dual_ok ? kExitOk : kExitCheckFailed;
}

int cmd_decompose(const Options& o, const FieldSpec& field) {
  auto spec = curve_spec(o, field);
  if (!spec || spec->family != CurveSpec::Family::Multiline) {
    throw ParseError("decompose needs a multiline spec", 0, 0);
  }
  const auto& ms = *spec->multiline;
  const Ideal sum_form = build_multiline_ideal(ms, field);
  const Ideal det_form = determinantal_multiline_ideal(ms, field);
  const Ideal cap_form = multiline_intersection_form(ms, field);
  const bool equal = sum_form == det_form && det_form == cap_form;
  const auto degree = hilbert_data(sum_form).degree.value_or(0);
  if (json_out(o)) {
    Json j;
    j["sum_product"] = strings(sum_form.groebner_basis());
    j["determinantal"] = strings(det_form.groebner_basis());
    j["intersection"] = strings(cap_form.groebner_basis());
    j["equal"] = equal;
    j["degree"] = degree;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sum/product:   " << join(sum_form.groebner_basis()) << "\n"
              << "determinantal: " << join(det_form.groebner_basis()) << "\n"
              << "intersection:  " << join(cap_form.groebner_basis()) << "\n"
              << "degree: " << degree << "\n"
              << "equal: " << (equal ? "yes" : "NO") << "\n";
  }
  return equal ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcurves: space curves on quadrics in P^3"};
  app.require_subcommand(1, 1);
  // --h names the h polynomial, so help is --help only.
  app.set_help_flag("--help", "print help");
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "QQ (default) or p=<odd prime>");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--order", o.order, "grevlex, lex or elim:<k>");
    sub->add_option("--window", o.window, "homology window lo:hi");
    sub->add_option("--spec", o.spec_path, "curve spec file (key=value lines)");
    sub->add_option("--ideal", o.ideal_path, "ideal file, one generator per line");
    sub->add_option("--complex", o.complex_path, "complex JSON file");
    sub->add_option("--family", o.family, "reducible, smooth or multiline")
        ->check(CLI::IsMember({"reducible", "smooth", "multiline"}));
    sub->add_option("--d", o.d, "degree for the smooth family");
    sub->add_option("--A", o.A);
    sub->add_option("--B", o.B);
    sub->add_option("--F", o.F);
    sub->add_option("--G", o.G);
    sub->add_option("--h", o.h);
    sub->add_option("--lines", o.lines, "ruling lines, e.g. (0:1)*2,(1:0)");
    sub->add_option("--ruling", o.ruling, "first or second")->check(CLI::IsMember({"first", "second"}));
  };

  std::map<std::string, int (*)(const Options&, const FieldSpec&)> commands = {
      {"construct", cmd_construct}, {"classify", cmd_classify},   {"resolve", cmd_resolve},
      {"rao", cmd_rao},             {"decompose", cmd_decompose}, {"verify-complex", cmd_verify_complex}};
  std::map<std::string, std::string> help = {
      {"construct", "print the generators of a curve ideal"},
      {"classify", "quadric rank, ACM, extremal, mu, degree, genus, Rao module"},
      {"resolve", "Betti table and certification of the closed-form resolution"},
      {"rao", "Hartshorne-Rao module table and duality check"},
      {"decompose", "sum, determinantal and intersection forms of a multiline curve"},
      {"verify-complex", "certify a complex read from JSON"}};
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help[name]);
    sub->set_help_flag("--help", "print help");
    add_common(sub);
    if (name == "classify") sub->add_option("--batch", o.batch_dir, "classify every file in a directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const FieldSpec field = parse_field(o.field);
    return commands.at(name)(o, field);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line();
    if (e.column() > 0) std::cerr << (e.line() > 0 ? ", column " : " at column ") << e.column();
    std::cerr << ": " << e.message() << "\n";
    return kExitInputError;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_reason(e.reason()) ? kExitInputError : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

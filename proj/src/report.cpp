#include "quadcurves/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qc {

namespace {

using Json = nlohmann::json;

Json dims_json(const std::map<int, std::int64_t>& dims) {
  Json out = Json::object();
  for (const auto& [j, d] : dims) out[std::to_string(j)] = d;
  return out;
}

std::string dims_text(const std::map<int, std::int64_t>& dims) {
  std::string out = "{";
  bool first = true;
  for (const auto& [j, d] : dims) {
    if (!first) out += ", ";
    out += std::to_string(j) + ": " + std::to_string(d);
    first = false;
  }
  return out + "}";
}

Json check_json(const ComplexCheck& c) {
  Json out;
  out["ok"] = c.ok;
  out["witness"] = c.ok ? Json(nullptr) : Json(c.witness);
  out["position"] = c.ok ? Json(nullptr) : Json(c.position);
  out["detail"] = c.detail;
  return out;
}

}  // namespace

std::string classification_to_json(const ClassificationReport& r, int indent) {
  Json j;
  j["contains_quadric"] = r.contains_quadric;
  j["quadric_rank"] = r.quadric_rank ? Json(*r.quadric_rank) : Json(nullptr);
  j["extremal"] = r.extremal;
  j["acm"] = r.acm ? Json(*r.acm) : Json(nullptr);
  j["mu"] = r.mu;
  j["degree"] = r.degree;
  j["arithmetic_genus"] = r.arithmetic_genus;
  j["rao_dims"] = r.rao_dims ? dims_json(*r.rao_dims) : Json(nullptr);
  return j.dump(indent);
}

std::string classification_to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "contains_quadric: " << (r.contains_quadric ? "true" : "false") << "\n";
  out << "quadric_rank: " << (r.quadric_rank ? std::to_string(*r.quadric_rank) : "none") << "\n";
  out << "extremal: " << (r.extremal ? "true" : "false") << "\n";
  out << "acm: " << (r.acm ? (*r.acm ? "true" : "false") : "undetermined") << "\n";
  out << "mu: " << r.mu << "\n";
  out << "degree: " << r.degree << "\n";
  out << "arithmetic_genus: " << r.arithmetic_genus << "\n";
  out << "rao_dims: " << (r.rao_dims ? dims_text(*r.rao_dims) : "not computed") << "\n";
  return out.str();
}

std::string module_table_to_json(const ModuleTable& t, int indent) {
  Json j;
  j["dims"] = dims_json(t.dims);
  j["window"] = {t.window.lo, t.window.hi};
  if (auto s = t.support()) {
    j["support"] = {s->lo, s->hi};
  } else {
    j["support"] = nullptr;
  }
  j["total"] = t.total();
  return j.dump(indent);
}

std::string module_table_to_text(const ModuleTable& t) {
  std::ostringstream out;
  out << "dims: " << dims_text(t.dims) << "\n";
  out << "window: [" << t.window.lo << ", " << t.window.hi << "]\n";
  out << "total: " << t.total() << "\n";
  return out.str();
}

std::string certificate_to_json(const ResolutionCertificate& c, int indent) {
  Json j;
  j["pass"] = c.pass();
  j["failure"] = c.pass() ? Json(nullptr) : Json(c.failure());
  j["complex"] = check_json(c.complex);
  j["minimal"] = c.minimal;
  if (c.exactness) {
    Json pos = Json::array();
    for (const auto& w : c.exactness->positions) {
      Json p;
      p["position"] = w.position;
      p["module_rank"] = w.module_rank;
      p["rank_out"] = w.rank_out;
      p["rank_in"] = w.rank_in;
      p["rank_ok"] = w.rank_ok;
      p["codim"] = w.codim;
      p["grade_ok"] = w.grade_ok;
      Json minors = Json::array();
      for (const auto& m : w.minors) minors.push_back(m.to_string());
      p["minors"] = std::move(minors);
      pos.push_back(std::move(p));
    }
    j["exactness"] = {{"pass", c.exactness->pass}, {"positions", std::move(pos)}};
  } else {
    j["exactness"] = nullptr;
  }
  return j.dump(indent);
}

std::string certificate_to_text(const ResolutionCertificate& c) {
  std::ostringstream out;
  out << "complex: " << (c.complex.ok ? "ok" : "FAIL " + c.complex.witness + " at " + std::to_string(c.complex.position) +
                                                   " (" + c.complex.detail + ")")
      << "\n";
  if (!c.complex.ok) return out.str();
  out << "minimal: " << (c.minimal ? "yes" : "no") << "\n";
  if (c.exactness) {
    for (const auto& w : c.exactness->positions) {
      out << "position " << w.position << ": rank F = " << w.module_rank << " = " << w.rank_out << " + " << w.rank_in
          << (w.rank_ok ? " ok" : " FAIL") << "; codim I_" << w.rank_out << " >= " << w.codim << " (need "
          << w.position << ")" << (w.grade_ok ? " ok" : " FAIL") << "\n";
    }
  }
  out << "verdict: " << (c.pass() ? "pass" : "FAIL " + c.failure()) << "\n";
  return out.str();
}

}  // namespace qc

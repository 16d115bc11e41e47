#include "quadcurves/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "quadcurves/errors.hpp"

namespace qc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits into lines, drops comments; yields (line number, content, column of content start).
struct Line {
  int number;
  std::string_view content;
  int column;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    std::string_view body = trim(line);
    if (!body.empty()) out.push_back({number, body, static_cast<int>(lead) + 1});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

Polynomial parse_at(std::string_view text, const FieldSpec& field, int line, int column) {
  try {
    return parse_polynomial(text, field);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line, column + std::max(e.column(), 1) - 1);
  }
}

}  // namespace

std::vector<Polynomial> parse_generator_lines(std::string_view text, FieldSpec field) {
  // Commas also separate generators, so "f, g, h" on one line is accepted.
  std::vector<Polynomial> out;
  for (const auto& l : content_lines(text)) {
    std::size_t start = 0;
    while (start <= l.content.size()) {
      const auto comma = l.content.find(',', start);
      const auto end = comma == std::string_view::npos ? l.content.size() : comma;
      std::string_view piece = l.content.substr(start, end - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      const int column = l.column + static_cast<int>(start + lead);
      if (trim(piece).empty()) throw ParseError("empty generator", l.number, column);
      out.push_back(parse_at(trim(piece), field, l.number, column));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

Ideal parse_ideal_text(std::string_view text, FieldSpec field) {
  return Ideal(parse_generator_lines(text, field), field);
}

// ------------------------------------------------------------- complexes

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

FreeComplex parse_complex_json(std::string_view text, FieldSpec field) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  auto fail = [](const std::string& msg) { throw ParseError(msg, 0, 0); };
  if (!doc.is_object() || !doc.contains("twists") || !doc.contains("maps")) {
    fail("complex must be an object with \"twists\" and \"maps\"");
  }
  if (!doc["twists"].is_array() || !doc["maps"].is_array()) fail("\"twists\" and \"maps\" must be arrays");

  std::vector<FreeGradedModule> mods;
  for (const auto& tw : doc["twists"]) {
    if (!tw.is_array()) fail("each twists entry must be an array of integers");
    FreeGradedModule m;
    for (const auto& n : tw) {
      if (!n.is_number_integer()) fail("twists must be integers");
      m.twists.push_back(n.get<int>());
    }
    mods.push_back(std::move(m));
  }
  std::vector<PolyMatrix> mats;
  for (std::size_t k = 0; k < doc["maps"].size(); ++k) {
    const auto& rows = doc["maps"][k];
    if (!rows.is_array()) fail("maps[" + std::to_string(k) + "] must be an array of rows");
    std::vector<std::vector<Polynomial>> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array()) fail("maps[" + std::to_string(k) + "] rows must be arrays");
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const auto& e = rows[i][j];
        const std::string where = "maps[" + std::to_string(k) + "][" + std::to_string(i) + "][" + std::to_string(j) + "]";
        if (e.is_number_integer()) {
          row.push_back(Polynomial::constant(e.get<long>(), field));
        } else if (e.is_string()) {
          try {
            row.push_back(parse_polynomial(e.get<std::string>(), field));
          } catch (const ParseError& pe) {
            throw ParseError(where + ": " + pe.message(), 0, pe.column());
          }
        } else {
          fail(where + " must be a polynomial string");
        }
      }
      entries.push_back(std::move(row));
    }
    // A map into a rank-r module with no source columns still has r rows.
    PolyMatrix m = PolyMatrix::from_rows(entries, field);
    if (entries.empty() && k + 1 < mods.size()) m = PolyMatrix(0, mods[k + 1].rank(), field);
    if (!entries.empty() && entries.front().empty() && k + 1 < mods.size()) {
      m = PolyMatrix(entries.size(), 0, field);
    }
    mats.push_back(std::move(m));
  }
  return FreeComplex(std::move(mods), std::move(mats));
}

std::string complex_to_json(const FreeComplex& c) {
  nlohmann::ordered_json doc;
  doc["twists"] = nlohmann::ordered_json::array();
  for (const auto& m : c.modules()) doc["twists"].push_back(m.twists);
  doc["maps"] = nlohmann::ordered_json::array();
  for (const auto& m : c.matrices()) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
      rows.push_back(std::move(row));
    }
    doc["maps"].push_back(std::move(rows));
  }
  return doc.dump(2);
}

// ------------------------------------------------------------ curve specs

std::vector<RulingLine> parse_ruling_lines(std::string_view text) {
  std::vector<RulingLine> out;
  std::size_t i = 0;
  auto error = [&](const std::string& msg) { throw ParseError(msg, 0, static_cast<int>(i) + 1); };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&]() -> std::int64_t {
    skip_ws();
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      error("expected an integer");
    }
    return std::stoll(std::string(text.substr(start, i - start)));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) error(std::string("expected '") + c + "'");
    ++i;
  };
  while (true) {
    RulingLine l;
    expect('(');
    l.u = integer();
    expect(':');
    l.v = integer();
    expect(')');
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      l.multiplicity = static_cast<int>(integer());
    }
    out.push_back(l);
    skip_ws();
    if (i >= text.size()) break;
    expect(',');
  }
  return out;
}

CurveSpec parse_curve_spec(std::string_view text, FieldSpec field) {
  std::map<std::string, std::pair<std::string, Line>> kv;
  for (const auto& l : content_lines(text)) {
    const auto eq = l.content.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", l.number, l.column);
    std::string key(trim(l.content.substr(0, eq)));
    std::string_view raw = l.content.substr(eq + 1);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    Line where{l.number, trim(raw), l.column + static_cast<int>(eq + 1 + lead)};
    static const std::vector<std::string> known = {"family", "A", "B", "F", "G", "h", "d", "lines", "ruling"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError("unknown key '" + key + "'", l.number, l.column);
    }
    if (kv.count(key)) throw ParseError("duplicate key '" + key + "'", l.number, l.column);
    kv.emplace(key, std::make_pair(std::string(where.content), where));
  }
  auto require = [&](const std::string& key) -> const std::pair<std::string, Line>& {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing key '" + key + "'", 0, 0);
    return it->second;
  };
  auto poly = [&](const std::string& key, bool optional) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (optional) return Polynomial(field);
      throw ParseError("missing key '" + key + "'", 0, 0);
    }
    return parse_at(it->second.first, field, it->second.second.number, it->second.second.column);
  };

  CurveSpec spec;
  spec.field = field;
  const auto& fam = require("family");
  if (fam.first == "reducible") {
    spec.family = CurveSpec::Family::Reducible;
    spec.reducible = ReducibleCurveSpec::make(poly("A", true), poly("B", true), poly("F", false), poly("G", false),
                                              poly("h", true));
  } else if (fam.first == "smooth") {
    spec.family = CurveSpec::Family::Smooth;
    const auto& d = require("d");
    try {
      std::size_t used = 0;
      spec.d = std::stoi(d.first, &used);
      if (used != d.first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("d must be an integer", d.second.number, d.second.column);
    }
    if (spec.d < 1) throw MathError("invalid-degree", "d must be at least 1");
  } else if (fam.first == "multiline") {
    spec.family = CurveSpec::Family::Multiline;
    const auto& lines = require("lines");
    MultilineSpec ms;
    try {
      ms.lines = parse_ruling_lines(lines.first);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), lines.second.number, lines.second.column + e.column() - 1);
    }
    if (auto it = kv.find("ruling"); it != kv.end()) {
      if (it->second.first == "first") {
        ms.ruling = Ruling::First;
      } else if (it->second.first == "second") {
        ms.ruling = Ruling::Second;
      } else {
        throw ParseError("ruling must be first or second", it->second.second.number, it->second.second.column);
      }
    }
    ms.validate();
    spec.multiline = std::move(ms);
  } else {
    throw ParseError("family must be reducible, smooth or multiline", fam.second.number, fam.second.column);
  }
  return spec;
}

Ideal construct_ideal(const CurveSpec& spec) {
  switch (spec.family) {
    case CurveSpec::Family::Reducible:
      return build_reducible_ideal(*spec.reducible);
    case CurveSpec::Family::Smooth:
      return build_smooth_minimal_ideal(spec.d, spec.field);
    case CurveSpec::Family::Multiline:
      return build_multiline_ideal(*spec.multiline, spec.field);
  }
  return Ideal(spec.field);
}

std::optional<FreeComplex> predicted_resolution(const CurveSpec& spec) {
  switch (spec.family) {
    case CurveSpec::Family::Reducible:
      return predicted_reducible_resolution(*spec.reducible);
    case CurveSpec::Family::Smooth:
      if (spec.d >= 2) return predicted_smooth_resolution(spec.d, spec.field);
      return std::nullopt;
    case CurveSpec::Family::Multiline: {
      const auto& ms = *spec.multiline;
      if (ms.ruling != Ruling::First) return std::nullopt;
      if (ms.lines.size() == 1 && ms.lines[0].u == 0 && ms.degree() >= 2) {
        return predicted_smooth_resolution(ms.degree(), spec.field);
      }
      if (ms.lines.size() == 2 && ms.degree() == 2) {
        const auto& a = ms.lines[0];
        const auto& b = ms.lines[1];
        const bool zero_inf = (a.u == 0 && b.v == 0) || (a.v == 0 && b.u == 0);
        if (zero_inf) return skew_lines_resolution(spec.field);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qc

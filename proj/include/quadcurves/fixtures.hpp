#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadcurves/curves.hpp"

namespace qc {

/// One generator per line (commas may also separate generators); '#' starts
/// a comment; blank lines are skipped.
/// Throws ParseError with the 1-based line and column.
std::vector<Polynomial> parse_generator_lines(std::string_view text, FieldSpec field = {});
Ideal parse_ideal_text(std::string_view text, FieldSpec field = {});

/// {"twists": [[...], ...], "maps": [matrix, ...]} where twists[k] lists the
/// twists of F_k and maps[k] is the matrix of F_{k+1} -> F_k as rows of
/// polynomial strings.
FreeComplex parse_complex_json(std::string_view text, FieldSpec field = {});
std::string complex_to_json(const FreeComplex& c);

/// Parsed key=value curve description.
struct CurveSpec {
  enum class Family { Reducible, Smooth, Multiline };
  Family family = Family::Smooth;
  std::optional<ReducibleCurveSpec> reducible;
  int d = 0;
  std::optional<MultilineSpec> multiline;
  FieldSpec field;
};

/// Keys: family=reducible|smooth|multiline; A, B, F, G, h (missing A, B, h
/// default to 0); d; lines=(u:v)*m,...; ruling=first|second.
CurveSpec parse_curve_spec(std::string_view text, FieldSpec field = {});
/// lines=(0:1)*2,(1:0) style list.
std::vector<RulingLine> parse_ruling_lines(std::string_view text);

Ideal construct_ideal(const CurveSpec& spec);
/// Closed-form resolution when the family provides one.
std::optional<FreeComplex> predicted_resolution(const CurveSpec& spec);

std::string read_file(const std::string& path);

}  // namespace qc

#pragma once

// Comparators shared by MonomialOrder and the Groebner engine. They operate on
// raw exponent arrays so the engine can append an auxiliary variable.

namespace qc::detail {

// Graded reverse lexicographic comparison restricted to indices [begin, end).
inline int grevlex_compare(const int* a, const int* b, int begin, int end) {
  int da = 0;
  int db = 0;
  for (int i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = end - 1; i >= begin; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

inline int lex_compare(const int* a, const int* b, int begin, int end) {
  for (int i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace qc::detail

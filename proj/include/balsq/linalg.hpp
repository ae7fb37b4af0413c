#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "balsq/errors.hpp"

namespace balsq {

/// Coefficient field for homology ranks: exact rationals by default, or a
/// prime field GF(p) chosen for speed.
struct FieldConfig {
  bool rational = true;
  std::uint64_t prime = 0;

  static FieldConfig rationals() { return FieldConfig{}; }
  /// Errors unless p is a prime below 2^31.
  static FieldConfig gf(std::uint64_t p);
  /// "q" or "gf:<p>"; the inverse of parse.
  std::string str() const;
  static FieldConfig parse(const std::string& text);

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

/// Integer matrix in row-major sparse form: per row, (column, value) pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> row_entries;
};

/// Rank over the configured field, by Gaussian elimination (exact rational
/// arithmetic or modular arithmetic).
std::size_t matrix_rank(const SparseMatrix& matrix, const FieldConfig& field);

}  // namespace balsq

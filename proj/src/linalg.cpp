#include "balsq/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace balsq {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::size_t rank_rational(const SparseMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows, std::vector<mpq_class>(m.cols, 0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row_entries[r]) a[r][c] = v;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < m.cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_modular(const SparseMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row_entries[r]) a[r][c] = (v % static_cast<long long>(p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv = mod_inverse(a[rank][col], p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][col] == 0) continue;
      std::uint64_t factor = a[r][col] * inv % p;
      for (std::size_t c = col; c < m.cols; ++c)
        a[r][c] = (a[r][c] + p - factor * a[rank][c] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FieldConfig FieldConfig::gf(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 31)) throw input_error("field: prime too large");
  if (!is_prime(p)) throw input_error("field: " + std::to_string(p) + " is not prime");
  return FieldConfig{false, p};
}

std::string FieldConfig::str() const {
  return rational ? "q" : "gf:" + std::to_string(prime);
}

FieldConfig FieldConfig::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(text.substr(3));
    } catch (const std::exception&) {
      throw input_error("field: cannot parse prime in '" + text + "'");
    }
    return gf(p);
  }
  throw input_error("field: expected 'q' or 'gf:<p>', got '" + text + "'");
}

std::size_t matrix_rank(const SparseMatrix& matrix, const FieldConfig& field) {
  if (matrix.row_entries.size() != matrix.rows)
    throw input_error("matrix_rank: row count mismatch");
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  return field.rational ? rank_rational(matrix) : rank_modular(matrix, field.prime);
}

}  // namespace balsq

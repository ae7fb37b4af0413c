#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "balsq/errors.hpp"

namespace balsq {

/// A variable x[i,j]: color i in 1..d, index j in 1..m_i. Both 1-based.
struct Variable {
  int color = 0;
  int index = 0;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Shape of a colored polynomial ring: d colors with m_1..m_d variables each.
/// Variables are enumerated color-major, index-minor; that enumeration also
/// fixes the coordinate order of fine (Z^|m|) degrees.
class RingSignature {
 public:
  RingSignature() = default;
  RingSignature(int colors, std::vector<int> counts);

  int colors() const { return colors_; }
  int count(int color) const;
  const std::vector<int>& counts() const { return counts_; }
  int total_variables() const { return total_; }

  bool contains(Variable v) const;
  /// Dense position of v in the color-major enumeration (0-based).
  int var_id(Variable v) const;
  Variable var_at(int id) const;
  std::vector<Variable> variables() const;

  /// Same colors, one extra index per color (m + (1,...,1)).
  RingSignature extended() const;

  std::string str() const;

  friend bool operator==(const RingSignature&, const RingSignature&) = default;

 private:
  int colors_ = 0;
  int total_ = 0;
  std::vector<int> counts_;
  std::vector<int> offsets_;  // offsets_[i] = sum of counts_[0..i)
};

/// Exponent vector in the color-major variable enumeration of a signature.
using FineDegree = std::vector<int>;

/// A monomial of a colored ring, stored as a dense exponent vector.
/// Immutable value type; all arithmetic returns new monomials.
class Monomial {
 public:
  Monomial(RingSignature sig, FineDegree exponents);

  static Monomial one(const RingSignature& sig);
  static Monomial of_variable(const RingSignature& sig, Variable v);
  /// Product of the given variables (repetitions allowed).
  static Monomial of_variables(const RingSignature& sig, const std::vector<Variable>& vs);

  const RingSignature& signature() const { return sig_; }
  const FineDegree& exponents() const { return exps_; }
  int exponent(Variable v) const;

  int degree() const;
  /// Per-color total degrees (length d).
  std::vector<int> zd_degree() const;
  /// Colors with a positive exponent, ascending.
  std::vector<int> color_support() const;
  /// Bit (i-1) set iff color i occurs.
  unsigned color_support_mask() const;

  bool is_one() const;
  bool is_squarefree() const;
  /// At most one variable (exponent exactly one) per color.
  bool is_color_squarefree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator*(Variable v) const;
  /// Exact division; errors if *this is not divisible by other.
  Monomial divided_by(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  /// (variable, exponent) pairs with positive exponent, enumeration order.
  std::vector<std::pair<Variable, int>> factors() const;

  /// Reinterpret in another signature via variable identity x[i,j] -> x[i,j].
  Monomial in_signature(const RingSignature& target) const;

  /// Text form: "x[i,j]" factors joined by "*" (exponents as repeated
  /// factors), "1" for the empty product.
  std::string str() const;
  static Monomial parse(const RingSignature& sig, std::string_view text);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Canonical container order: degree, then revlex. Total on one signature.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  RingSignature sig_;
  FineDegree exps_;
};

/// x[i,j] before x[k,l] iff i<k, or i=k and j<l. The base variable order.
std::strong_ordering var_compare_prec(Variable a, Variable b);
/// Exact reversal of var_compare_prec (x[1,1] is the largest variable).
std::strong_ordering var_compare_sec5(Variable a, Variable b);

/// Degree-refined reverse-lexicographic order with respect to
/// var_compare_prec: lower total degree is smaller; at equal degree the
/// monomial with the larger exponent on the prec-smallest differing variable
/// is smaller.
std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b);
/// Same construction over the reversed variable order (var_compare_sec5);
/// used to select generators in linear-quotient orderings.
std::strong_ordering revlex_compare_sec5(const Monomial& a, const Monomial& b);

/// Componentwise order on color-squarefree monomials with equal color
/// support: every index of a is <= the matching index of b.
/// Errors if either monomial is not color-squarefree.
bool leq_s(const Monomial& a, const Monomial& b);

struct LeqCsOptions {
  /// Restrict exchange chains to steps that keep the color support fixed.
  bool support_preserving = false;
};

/// Exchange order: a is obtainable from b by single-variable replacements
/// x[k,l] -> x[i,j] with x[i,j] strictly prec-smaller, every step staying
/// color-squarefree, and the endpoints sharing their color support.
/// Intermediate supports may drift unless options say otherwise.
bool leq_cs(const Monomial& a, const Monomial& b, const LeqCsOptions& options = {});

/// All monomials of the signature with the given total degree, sorted.
std::vector<Monomial> monomials_of_degree(const RingSignature& sig, int degree);
/// All monomials of total degree <= bound, sorted.
std::vector<Monomial> monomials_up_to_degree(const RingSignature& sig, int bound);
/// Every color-squarefree monomial of the signature (including 1), sorted.
std::vector<Monomial> color_squarefree_monomials(const RingSignature& sig);

}  // namespace balsq

#pragma once

#include <vector>

#include "balsq/complex.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"

namespace balsq {

/// A monomial ideal stored by its minimal generators: an antichain under
/// divisibility, kept sorted by (degree, revlex). The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  /// The zero ideal of the signature.
  explicit MonomialIdeal(RingSignature sig);
  /// Divisibility-minimal elements of the input set.
  static MonomialIdeal minimalize(const RingSignature& sig, const std::vector<Monomial>& monomials);

  const RingSignature& signature() const { return sig_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Some generator divides m.
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  bool is_color_squarefree() const;

  /// Largest generator degree. Errors on the zero ideal.
  int d_max() const;

  /// I : u = ideal of { g / gcd(g, u) }.
  MonomialIdeal colon(const Monomial& u) const;
  /// Sum of ideals (same signature), minimalized.
  MonomialIdeal plus(const MonomialIdeal& other) const;
  /// Extension along x[i,j] -> x[i,j]; errors if a generator does not fit.
  MonomialIdeal in_signature(const RingSignature& target) const;
  /// Intersection with the subring on the sub-signature's variables: keeps
  /// exactly the generators all of whose variables lie in `sub`.
  MonomialIdeal restrict_to(const RingSignature& sub) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  RingSignature sig_;
  std::vector<Monomial> gens_;
};

/// Sum over colors of the squarefree pairs (x[i,j]*x[i,k] : j < k <= m_i).
MonomialIdeal same_color_pairs(const RingSignature& sig);
/// Sum over colors of all degree-2 single-color monomials (the ideals m_i^2).
MonomialIdeal same_color_squares(const RingSignature& sig);
/// Sum over colors of x[i,m_i+1]*(x[i,1],...,x[i,m_i]), as an ideal of
/// base.extended(). The top index of each color multiplies the others.
MonomialIdeal sentinel_times_variables(const RingSignature& base);

/// Minimal generators of the ideal of all monomials outside U. Scans degrees
/// up to d_max(U)+1, which captures every minimal generator; in debug builds
/// the next degree is verified to produce none.
MonomialIdeal complement_ideal(const OrderIdeal& ideal);

/// Minimal non-faces of the complex over its whole vertex universe, as
/// squarefree monomials. The empty complex yields the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);
/// Faces = squarefree monomials outside I, over I's signature as vertex
/// universe. Errors if a generator is not squarefree.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

/// The non-face ideal of the balanced complex of U, assembled directly:
/// squarefree generators of complement_ideal(U) plus the products
/// x[i,l]*x[i,m_i+1], all in the extended signature.
/// Requires d >= 2 and every m_i >= 1.
MonomialIdeal sr_ideal_formula(const OrderIdeal& ideal);

/// Generator-wise square polarization: x[i,j]^2 -> x[i,j]*x[i,m_i+1],
/// identity on color-squarefree generators. Every generator must be
/// color-squarefree or of degree 2 in one color. Result is an ideal of the
/// extended signature.
MonomialIdeal phi_map(const MonomialIdeal& ideal);

/// The initial-ideal closed form for a shifted U: complement_ideal(U) read
/// in the extended signature. Errors if U is not shifted.
MonomialIdeal gin_formula(const OrderIdeal& ideal);

/// Subideal generated by the color-squarefree generators.
MonomialIdeal csf_generator_part(const MonomialIdeal& ideal);

/// Lowering a variable index inside its color keeps membership.
bool is_strongly_color_stable(const MonomialIdeal& ideal);
/// Additionally, replacing a variable of a color-squarefree member by any
/// prec-smaller variable keeps membership when the result stays
/// color-squarefree.
bool is_strongly_color_stable_across_colors(const MonomialIdeal& ideal);

/// All generators color-squarefree; index-lowering keeps membership of
/// color-squarefree members; and replacing the largest-color variable of a
/// color-squarefree member by any variable of smaller color (or equal color,
/// smaller index) keeps membership when color-squarefree.
bool is_color_squarefree_stable_across_colors(const MonomialIdeal& ideal);

/// The variable of largest color dividing u (u color-squarefree, u != 1).
Variable min_var(const Monomial& u);
/// Variables x[p,q] with p <= maxcolor(u) and either p outside the color
/// support (any q) or p the color of a factor x[p,j] and q < j. sm(1) = {}.
std::vector<Variable> sm(const Monomial& u);

struct LinearQuotientStep {
  Monomial generator;
  std::vector<Variable> quotient;  // = sm(generator)
};

/// Peels generators off I: at each step removes, among the generators of
/// maximum degree, the smallest under the reversed-order revlex comparison,
/// and emits it with its quotient set. Each step asserts that the colon of
/// the remaining ideal with the removed generator is generated exactly by
/// the quotient variables and that the remainder keeps the stability
/// property. Steps are emitted in removal order; reading them last-to-first
/// gives an order with linear quotients.
std::vector<LinearQuotientStep> linear_quotients_order(const MonomialIdeal& ideal);

/// Per color, sort a generator's indices ascending with multiplicity and
/// send the k-th occurrence to index + (k-1). Stays in the input signature
/// when every shifted index fits; otherwise extends every color by one slot.
/// Errors if a shifted index exceeds m_i + 1.
MonomialIdeal color_polarize(const MonomialIdeal& ideal);

/// The color-shifted companion of Delta_bal(U): the complex of
/// color_polarize(gin_formula(U)). Requires U shifted.
SimplicialComplex color_shifted_complex(const OrderIdeal& ideal);

}  // namespace balsq

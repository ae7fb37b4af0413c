#include "balsq/ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace balsq {

namespace {

bool revlex_less(const Monomial& a, const Monomial& b) { return a < b; }

}  // namespace

MonomialIdeal::MonomialIdeal(RingSignature sig) : sig_(std::move(sig)) {}

MonomialIdeal MonomialIdeal::minimalize(const RingSignature& sig,
                                        const std::vector<Monomial>& monomials) {
  std::vector<Monomial> sorted;
  sorted.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    if (m.signature() != sig)
      throw input_error("minimalize: monomial " + m.str() + " from another ring");
    sorted.push_back(m);
  }
  std::sort(sorted.begin(), sorted.end(), revlex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  MonomialIdeal out(sig);
  // Ascending degree, so a divisor is always kept before its multiples.
  for (const Monomial& m : sorted) {
    bool redundant = false;
    for (const Monomial& g : out.gens_)
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.gens_.push_back(m);
  }
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::is_color_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_color_squarefree()) return false;
  return true;
}

int MonomialIdeal::d_max() const {
  if (gens_.empty()) throw input_error("d_max: the zero ideal has no generators");
  int out = 0;
  for (const Monomial& g : gens_) out = std::max(out, g.degree());
  return out;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& u) const {
  std::vector<Monomial> quotients;
  quotients.reserve(gens_.size());
  for (const Monomial& g : gens_) quotients.push_back(g.divided_by(g.gcd(u)));
  return minimalize(sig_, quotients);
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& other) const {
  if (other.sig_ != sig_) throw input_error("plus: signatures differ");
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return minimalize(sig_, all);
}

MonomialIdeal MonomialIdeal::in_signature(const RingSignature& target) const {
  std::vector<Monomial> mapped;
  mapped.reserve(gens_.size());
  for (const Monomial& g : gens_) mapped.push_back(g.in_signature(target));
  return minimalize(target, mapped);
}

MonomialIdeal MonomialIdeal::restrict_to(const RingSignature& sub) const {
  std::vector<Monomial> kept;
  for (const Monomial& g : gens_) {
    bool fits = true;
    for (const auto& [v, e] : g.factors()) {
      (void)e;
      if (!sub.contains(v)) {
        fits = false;
        break;
      }
    }
    if (fits) kept.push_back(g.in_signature(sub));
  }
  return minimalize(sub, kept);
}

MonomialIdeal same_color_pairs(const RingSignature& sig) {
  std::vector<Monomial> gens;
  for (int i = 1; i <= sig.colors(); ++i)
    for (int j = 1; j <= sig.count(i); ++j)
      for (int k = j + 1; k <= sig.count(i); ++k)
        gens.push_back(Monomial::of_variables(sig, {{i, j}, {i, k}}));
  return MonomialIdeal::minimalize(sig, gens);
}

MonomialIdeal same_color_squares(const RingSignature& sig) {
  std::vector<Monomial> gens;
  for (int i = 1; i <= sig.colors(); ++i)
    for (int j = 1; j <= sig.count(i); ++j)
      for (int k = j; k <= sig.count(i); ++k)
        gens.push_back(Monomial::of_variables(sig, {{i, j}, {i, k}}));
  return MonomialIdeal::minimalize(sig, gens);
}

MonomialIdeal sentinel_times_variables(const RingSignature& base) {
  RingSignature ext = base.extended();
  std::vector<Monomial> gens;
  for (int i = 1; i <= base.colors(); ++i)
    for (int j = 1; j <= base.count(i); ++j)
      gens.push_back(Monomial::of_variables(ext, {{i, base.count(i) + 1}, {i, j}}));
  return MonomialIdeal::minimalize(ext, gens);
}

MonomialIdeal complement_ideal(const OrderIdeal& ideal) {
  const RingSignature& sig = ideal.signature();
  int bound = ideal.d_max() + 1;
  std::vector<Monomial> gens;
  for (const Monomial& w : monomials_up_to_degree(sig, bound)) {
    if (ideal.contains(w)) continue;
    bool minimal = true;
    for (const auto& [v, e] : w.factors()) {
      (void)e;
      if (!ideal.contains(w.divided_by(Monomial::of_variable(sig, v)))) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(w);
  }
  MonomialIdeal out = MonomialIdeal::minimalize(sig, gens);
#ifndef NDEBUG
  // One degree past the scan bound, every monomial is already covered.
  for (const Monomial& w : monomials_of_degree(sig, bound + 1))
    if (!out.contains(w))
      throw property_error("complement ideal misses " + w.str() + " beyond the scan bound");
#endif
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const RingSignature& sig = complex.vertex_signature();
  int n = sig.total_variables();
  if (complex.is_empty()) return MonomialIdeal::minimalize(sig, {Monomial::one(sig)});
  if (n > 24) throw resource_error("stanley_reisner_ideal: universe too large to scan");
  int max_card = complex.dim() + 2;
  std::vector<Monomial> gens;
  for (SimplicialComplex::Mask f = 1; f < (SimplicialComplex::Mask(1) << n); ++f) {
    if (std::popcount(f) > max_card) continue;
    if (complex.contains_face(f)) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b)
      if (f & (SimplicialComplex::Mask(1) << b))
        if (!complex.contains_face(f & ~(SimplicialComplex::Mask(1) << b))) minimal = false;
    if (!minimal) continue;
    FineDegree exps(n, 0);
    for (int b = 0; b < n; ++b)
      if (f & (SimplicialComplex::Mask(1) << b)) exps[b] = 1;
    gens.emplace_back(sig, std::move(exps));
  }
  return MonomialIdeal::minimalize(sig, gens);
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw input_error("complex_of_ideal: ideal has a non-squarefree generator");
  const RingSignature& sig = ideal.signature();
  int n = sig.total_variables();
  if (ideal.is_unit()) return SimplicialComplex::empty_complex(sig);
  if (n > 24) throw resource_error("complex_of_ideal: universe too large to scan");
  std::vector<SimplicialComplex::Mask> faces;
  for (SimplicialComplex::Mask f = 0; f < (SimplicialComplex::Mask(1) << n); ++f) {
    FineDegree exps(n, 0);
    for (int b = 0; b < n; ++b)
      if (f & (SimplicialComplex::Mask(1) << b)) exps[b] = 1;
    if (!ideal.contains(Monomial(sig, std::move(exps)))) faces.push_back(f);
  }
  return SimplicialComplex(sig, std::move(faces));
}

MonomialIdeal sr_ideal_formula(const OrderIdeal& ideal) {
  const RingSignature& sig = ideal.signature();
  if (sig.colors() < 2) throw input_error("sr_ideal_formula: needs at least two colors");
  for (int i = 1; i <= sig.colors(); ++i)
    if (sig.count(i) < 1)
      throw input_error("sr_ideal_formula: every color needs at least one variable");
  RingSignature ext = sig.extended();
  std::vector<Monomial> gens;
  MonomialIdeal complement = complement_ideal(ideal);
  for (const Monomial& g : complement.generators())
    if (g.is_squarefree()) gens.push_back(g.in_signature(ext));
  MonomialIdeal sentinels = sentinel_times_variables(sig);
  for (const Monomial& g : sentinels.generators()) gens.push_back(g);
  return MonomialIdeal::minimalize(ext, gens);
}

MonomialIdeal phi_map(const MonomialIdeal& ideal) {
  const RingSignature& sig = ideal.signature();
  RingSignature ext = sig.extended();
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    auto factors = g.factors();
    bool square = factors.size() == 1 && factors[0].second == 2;
    if (square) {
      Variable v = factors[0].first;
      gens.push_back(Monomial::of_variables(ext, {v, {v.color, sig.count(v.color) + 1}}));
    } else if (g.is_color_squarefree() || g.degree() == 2) {
      gens.push_back(g.in_signature(ext));
    } else {
      throw input_error("phi_map: generator " + g.str() +
                        " is neither color-squarefree nor of degree 2");
    }
  }
  return MonomialIdeal::minimalize(ext, gens);
}

MonomialIdeal gin_formula(const OrderIdeal& ideal) {
  if (!ideal.is_shifted()) throw input_error("gin_formula: order ideal is not shifted");
  return complement_ideal(ideal).in_signature(ideal.signature().extended());
}

MonomialIdeal csf_generator_part(const MonomialIdeal& ideal) {
  std::vector<Monomial> kept;
  for (const Monomial& g : ideal.generators())
    if (g.is_color_squarefree()) kept.push_back(g);
  return MonomialIdeal::minimalize(ideal.signature(), kept);
}

bool is_strongly_color_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  const RingSignature& sig = ideal.signature();
  for (const Monomial& w : monomials_up_to_degree(sig, ideal.d_max())) {
    if (!ideal.contains(w)) continue;
    for (const auto& [v, e] : w.factors()) {
      (void)e;
      Monomial u = w.divided_by(Monomial::of_variable(sig, v));
      for (int j = 1; j < v.index; ++j)
        if (!ideal.contains(u * Variable{v.color, j})) return false;
    }
  }
  return true;
}

bool is_strongly_color_stable_across_colors(const MonomialIdeal& ideal) {
  if (!is_strongly_color_stable(ideal)) return false;
  if (ideal.is_zero()) return true;
  const RingSignature& sig = ideal.signature();
  for (const Monomial& w : monomials_up_to_degree(sig, ideal.d_max())) {
    if (!w.is_color_squarefree() || !ideal.contains(w)) continue;
    for (const auto& [v, e] : w.factors()) {
      (void)e;
      Monomial u = w.divided_by(Monomial::of_variable(sig, v));
      // Every prec-smaller variable may replace v when the result stays
      // color-squarefree.
      for (int id = 0; id < sig.var_id(v); ++id) {
        Monomial candidate = u * sig.var_at(id);
        if (candidate.is_color_squarefree() && !ideal.contains(candidate)) return false;
      }
    }
  }
  return true;
}

bool is_color_squarefree_stable_across_colors(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  if (!ideal.is_color_squarefree()) return false;
  const RingSignature& sig = ideal.signature();
  int bound = ideal.d_max();
  for (const Monomial& w : color_squarefree_monomials(sig)) {
    if (w.is_one() || w.degree() > bound || !ideal.contains(w)) continue;
    for (const auto& [v, e] : w.factors()) {
      (void)e;
      Monomial u = w.divided_by(Monomial::of_variable(sig, v));
      for (int j = 1; j < v.index; ++j)
        if (!ideal.contains(u * Variable{v.color, j})) return false;
    }
    Variable mv = min_var(w);
    Monomial u = w.divided_by(Monomial::of_variable(sig, mv));
    // Variables above min_var in the reversed order are exactly the
    // prec-smaller ones.
    for (int id = 0; id < sig.var_id(mv); ++id) {
      Monomial candidate = u * sig.var_at(id);
      if (candidate.is_color_squarefree() && !ideal.contains(candidate)) return false;
    }
  }
  return true;
}

Variable min_var(const Monomial& u) {
  if (!u.is_color_squarefree()) throw input_error("min_var: " + u.str() + " not color-squarefree");
  if (u.is_one()) throw input_error("min_var: undefined for 1");
  return u.factors().back().first;
}

std::vector<Variable> sm(const Monomial& u) {
  if (!u.is_color_squarefree()) throw input_error("sm: " + u.str() + " not color-squarefree");
  std::vector<Variable> out;
  if (u.is_one()) return out;
  const RingSignature& sig = u.signature();
  int top_color = min_var(u).color;
  std::map<int, int> index_of_color;
  for (const auto& [v, e] : u.factors()) {
    (void)e;
    index_of_color[v.color] = v.index;
  }
  for (int p = 1; p <= top_color; ++p) {
    auto it = index_of_color.find(p);
    int limit = it == index_of_color.end() ? sig.count(p) : it->second - 1;
    for (int q = 1; q <= limit; ++q) out.push_back(Variable{p, q});
  }
  return out;
}

std::vector<LinearQuotientStep> linear_quotients_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw input_error("linear_quotients_order: zero ideal");
  if (!is_color_squarefree_stable_across_colors(ideal))
    throw input_error("linear_quotients_order: ideal is not color-squarefree stable");
  const RingSignature& sig = ideal.signature();
  std::vector<LinearQuotientStep> steps;
  std::vector<Monomial> gens = ideal.generators();
  while (!gens.empty()) {
    int top = 0;
    for (const Monomial& g : gens) top = std::max(top, g.degree());
    std::size_t pick = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].degree() != top) continue;
      if (pick == gens.size() || revlex_compare_sec5(gens[i], gens[pick]) < 0) pick = i;
    }
    Monomial v = gens[pick];
    std::vector<Monomial> rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != pick) rest.push_back(gens[i]);
    MonomialIdeal remainder = MonomialIdeal::minimalize(sig, rest);

    std::vector<Variable> quotient = sm(v);
    std::vector<Monomial> quotient_gens;
    for (Variable q : quotient) quotient_gens.push_back(Monomial::of_variable(sig, q));
    MonomialIdeal expected = MonomialIdeal::minimalize(sig, quotient_gens);
    if (remainder.colon(v) != expected) {
      std::ostringstream os;
      os << "linear_quotients_order: colon at " << v.str()
         << " is not generated by its quotient variables";
      throw property_error(os.str());
    }
    if (!is_color_squarefree_stable_across_colors(remainder))
      throw property_error("linear_quotients_order: remainder after " + v.str() +
                           " lost stability");
    steps.push_back(LinearQuotientStep{v, std::move(quotient)});
    gens = remainder.generators();
  }
  return steps;
}

MonomialIdeal color_polarize(const MonomialIdeal& ideal) {
  const RingSignature& sig = ideal.signature();
  // Polarized variable lists per generator, using 1-based indices; collect
  // the largest index each color needs before choosing the target ring.
  std::vector<std::vector<Variable>> polarized;
  std::vector<int> needed(static_cast<std::size_t>(sig.colors()) + 1, 0);
  for (const Monomial& g : ideal.generators()) {
    std::vector<Variable> vars;
    for (int i = 1; i <= sig.colors(); ++i) {
      std::vector<int> indices;
      for (int j = 1; j <= sig.count(i); ++j)
        for (int rep = 0; rep < g.exponent(Variable{i, j}); ++rep) indices.push_back(j);
      for (std::size_t k = 0; k < indices.size(); ++k) {
        int shifted = indices[k] + static_cast<int>(k);
        if (shifted > sig.count(i) + 1)
          throw input_error("color_polarize: " + g.str() + " needs index " +
                            std::to_string(shifted) + " in color " + std::to_string(i));
        needed[i] = std::max(needed[i], shifted);
        vars.push_back(Variable{i, shifted});
      }
    }
    polarized.push_back(std::move(vars));
  }
  bool fits = true;
  for (int i = 1; i <= sig.colors(); ++i)
    if (needed[i] > sig.count(i)) fits = false;
  RingSignature target = fits ? sig : sig.extended();
  std::vector<Monomial> gens;
  for (const auto& vars : polarized) gens.push_back(Monomial::of_variables(target, vars));
  return MonomialIdeal::minimalize(target, gens);
}

SimplicialComplex color_shifted_complex(const OrderIdeal& ideal) {
  return complex_of_ideal(color_polarize(gin_formula(ideal)));
}

}  // namespace balsq

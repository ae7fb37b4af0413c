#include "balsq/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "balsq/betti.hpp"
#include "balsq/complex.hpp"
#include "balsq/errors.hpp"
#include "balsq/ideal.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"

namespace balsq {

namespace {

struct Ctx {
  VerifyOptions opt;
  std::vector<OrderIdeal> order_ideals;
  std::vector<MonomialIdeal> csf_ideals;
};

void fail(BatteryResult& r, std::string detail) {
  r.outcome = BatteryOutcome::Fail;
  r.detail = std::move(detail);
}

std::string describe(const OrderIdeal& ideal) {
  std::ostringstream os;
  os << ideal.signature().str() << " U={";
  for (std::size_t i = 0; i < ideal.monomials().size(); ++i)
    os << (i ? ", " : "") << ideal.monomials()[i].str();
  os << "}";
  return os.str();
}

std::string describe(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << ideal.signature().str() << " I=(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    os << (i ? ", " : "") << ideal.generators()[i].str();
  os << ")";
  return os.str();
}

std::string describe_diff(const BettiDiff& diff) {
  std::ostringstream os;
  os << "k=" << diff.k << " degree=(";
  for (std::size_t i = 0; i < diff.degree.size(); ++i) os << (i ? "," : "") << diff.degree[i];
  os << ") values " << diff.left << " vs " << diff.right;
  return os.str();
}

long long flag_at(const FlagVector& flag, unsigned key) {
  auto it = flag.counts.find(key);
  return it == flag.counts.end() ? 0 : it->second;
}

std::string subset_str(unsigned key, int colors) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 1; i <= colors; ++i)
    if (key & (1u << (i - 1))) {
      os << (first ? "" : ",") << i;
      first = false;
    }
  os << "}";
  return os.str();
}

// --- corpus -----------------------------------------------------------------

std::vector<RingSignature> corpus_signatures() {
  std::vector<RingSignature> sigs;
  for (int d = 1; d <= 3; ++d)
    for (int mask = 0; mask < (1 << d); ++mask) {
      std::vector<int> counts;
      for (int i = 0; i < d; ++i) counts.push_back(((mask >> i) & 1) + 1);
      sigs.emplace_back(d, std::move(counts));
    }
  return sigs;
}

std::vector<OrderIdeal> build_order_ideal_corpus(long long cap, std::uint64_t seed) {
  std::vector<OrderIdeal> out;
  const std::vector<RingSignature> sigs = corpus_signatures();
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    long long remaining = cap - static_cast<long long>(out.size());
    if (remaining <= 0) break;
    long long left = static_cast<long long>(sigs.size() - i);
    long long quota = (remaining + left - 1) / left;
    EnumerateOptions options;
    options.max_count = static_cast<std::size_t>(quota);
    options.seed = seed;
    for (OrderIdeal& ideal : enumerate_order_ideals(sigs[i], options)) out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<MonomialIdeal> build_csf_ideal_corpus(long long cap) {
  std::vector<MonomialIdeal> out;
  const std::vector<RingSignature> sigs = {RingSignature(2, {2, 2}), RingSignature(3, {1, 1, 1})};
  long long per_sig = (cap + 1) / 2;
  for (const RingSignature& sig : sigs) {
    std::vector<Monomial> pool;
    for (const Monomial& m : color_squarefree_monomials(sig))
      if (!m.is_one()) pool.push_back(m);
    std::set<std::vector<Monomial>> seen;
    long long taken = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pool.size()) && taken < per_sig; ++mask) {
      std::vector<Monomial> subset;
      for (std::size_t b = 0; b < pool.size(); ++b)
        if ((mask >> b) & 1) subset.push_back(pool[b]);
      MonomialIdeal ideal = MonomialIdeal::minimalize(sig, subset);
      if (seen.insert(ideal.generators()).second) {
        out.push_back(std::move(ideal));
        ++taken;
      }
    }
  }
  return out;
}

// --- module ring ------------------------------------------------------------

void battery_orders(const Ctx&, BatteryResult& r) {
  const RingSignature s22(2, {2, 2});
  const RingSignature s111(3, {1, 1, 1});

  for (const RingSignature& sig : {s22, s111}) {
    const std::vector<Variable> vars = sig.variables();
    for (Variable a : vars)
      for (Variable b : vars) {
        auto forward = var_compare_prec(a, b);
        auto reversed = var_compare_sec5(a, b);
        bool mutual = (forward == std::strong_ordering::equal &&
                       reversed == std::strong_ordering::equal) ||
                      (forward == std::strong_ordering::less &&
                       reversed == std::strong_ordering::greater) ||
                      (forward == std::strong_ordering::greater &&
                       reversed == std::strong_ordering::less);
        if (!mutual) {
          fail(r, "variable orders are not mutual reversals at x[" + std::to_string(a.color) +
                      "," + std::to_string(a.index) + "] vs x[" + std::to_string(b.color) + "," +
                      std::to_string(b.index) + "]");
          return;
        }
        ++r.checked;
      }
  }

  // Color-squarefreeness is closed under divisors.
  for (const RingSignature& sig : {s22, s111}) {
    for (const Monomial& u : color_squarefree_monomials(sig)) {
      for (const Monomial& v : monomials_up_to_degree(sig, u.degree()))
        if (v.divides(u) && !v.is_color_squarefree()) {
          fail(r, "divisor " + v.str() + " of " + u.str() + " is not color-squarefree");
          return;
        }
      ++r.checked;
    }
  }

  // revlex is a total order on all monomials of degree <= 3 of P(2,(2,2)).
  const std::vector<Monomial> mons = monomials_up_to_degree(s22, 3);
  for (const Monomial& a : mons)
    for (const Monomial& b : mons) {
      auto ab = revlex_compare(a, b);
      auto ba = revlex_compare(b, a);
      bool antisym = (ab == std::strong_ordering::equal) == (a == b) &&
                     ((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
      if (!antisym) {
        fail(r, "revlex not antisymmetric at " + a.str() + " vs " + b.str());
        return;
      }
      ++r.checked;
    }
  for (const Monomial& a : mons)
    for (const Monomial& b : mons) {
      if (revlex_compare(a, b) == std::strong_ordering::greater) continue;
      for (const Monomial& c : mons)
        if (revlex_compare(b, c) != std::strong_ordering::greater &&
            revlex_compare(a, c) == std::strong_ordering::greater) {
          fail(r, "revlex not transitive at " + a.str() + ", " + b.str() + ", " + c.str());
          return;
        }
    }

  // The componentwise order is a partial order on color-squarefree monomials,
  // and it implies the exchange order.
  for (const RingSignature& sig : {s22, s111}) {
    const std::vector<Monomial> csf = color_squarefree_monomials(sig);
    for (const Monomial& a : csf) {
      if (!leq_s(a, a)) {
        fail(r, "componentwise order not reflexive at " + a.str());
        return;
      }
      for (const Monomial& b : csf) {
        if (leq_s(a, b) && leq_s(b, a) && !(a == b)) {
          fail(r, "componentwise order not antisymmetric at " + a.str() + ", " + b.str());
          return;
        }
        if (leq_s(a, b) && !leq_cs(a, b)) {
          fail(r, "componentwise pair not in the exchange order: " + a.str() + " <= " + b.str());
          return;
        }
        for (const Monomial& c : csf)
          if (leq_s(a, b) && leq_s(b, c) && !leq_s(a, c)) {
            fail(r, "componentwise order not transitive at " + a.str() + ", " + b.str() + ", " +
                        c.str());
            return;
          }
        ++r.checked;
      }
    }
  }
}

// --- module orderideal ------------------------------------------------------

void battery_shifted_stable(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    const RingSignature& sig = U.signature();
    MonomialIdeal complement = complement_ideal(U);

    if (!(2 <= complement.d_max() && complement.d_max() <= U.d_max() + 1)) {
      fail(r, "generator degree bound violated (top degree " +
                  std::to_string(complement.d_max()) + "): " + describe(U));
      return;
    }

    MonomialIdeal squares = same_color_squares(sig);
    bool has_squares = true;
    for (const Monomial& g : squares.generators())
      if (!complement.contains(g)) has_squares = false;

    bool lhs = U.is_shifted();
    bool rhs = is_strongly_color_stable(complement) && has_squares;
    if (lhs != rhs) {
      fail(r, std::string("shifted/stable biconditional broken (shifted=") +
                  (lhs ? "yes" : "no") + "): " + describe(U));
      return;
    }

    bool lhs_across = U.is_shifted_across_colors();
    bool rhs_across = is_strongly_color_stable_across_colors(complement) && has_squares;
    if (lhs_across != rhs_across) {
      fail(r, std::string("across-colors biconditional broken (shifted=") +
                  (lhs_across ? "yes" : "no") + "): " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_complement(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    MonomialIdeal complement = complement_ideal(U);
    for (const Monomial& m : monomials_up_to_degree(U.signature(), U.d_max() + 1))
      if (complement.contains(m) == U.contains(m)) {
        fail(r, "complement membership wrong at " + m.str() + ": " + describe(U));
        return;
      }
    if (!(OrderIdeal::from_monomials(U.signature(), U.monomials()) == U)) {
      fail(r, "rebuilding from members changed the ideal: " + describe(U));
      return;
    }
    ++r.checked;
  }
}

// --- module complex ---------------------------------------------------------

void battery_purity(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    SimplicialComplex complex = balanced_squeezed_complex(U);
    int d = U.signature().colors();
    if (!complex.is_pure() || complex.dim() != d - 1) {
      fail(r, "complex not pure of dimension d-1: " + describe(U));
      return;
    }
    if (complex.facet_count() != U.size()) {
      fail(r, "facet count " + std::to_string(complex.facet_count()) + " != #U " +
                  std::to_string(U.size()) + ": " + describe(U));
      return;
    }
    if (!complex.is_balanced()) {
      fail(r, "complex not balanced: " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_flagrec(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    SimplicialComplex complex = balanced_squeezed_complex(U);
    DecompositionTree tree = squeezed_decomposition(U);
    if (tree.kind != DecompositionTree::Kind::Node) continue;

    int vid = complex.vertex_id(tree.vertex);
    int color_bit = 1 << (tree.vertex.color - 1);
    SimplicialComplex del = complex.deletion(vid);
    SimplicialComplex lk = complex.link(SimplicialComplex::Mask(1) << vid);

    FlagVector f_all = flag_f_vector(complex), f_del = flag_f_vector(del),
               f_lk = flag_f_vector(lk);
    FlagVector h_all = flag_h_vector(complex), h_del = flag_h_vector(del),
               h_lk = flag_h_vector(lk);

    int d = U.signature().colors();
    for (unsigned S = 1; S < (1u << d); ++S) {
      // Faces containing the shed vertex correspond to link faces with the
      // vertex's color removed; faces avoiding it are deletion faces.
      long long f_expected =
          flag_at(f_del, S) + ((S & color_bit) ? flag_at(f_lk, S & ~color_bit) : 0);
      if (flag_at(f_all, S) != f_expected) {
        fail(r, "flag face-count recursion broken at S=" + subset_str(S, d) + ": " + describe(U));
        return;
      }
      long long h_expected =
          flag_at(h_del, S) + ((S & color_bit) ? flag_at(h_lk, S & ~unsigned(color_bit)) : 0);
      if (flag_at(h_all, S) != h_expected) {
        fail(r, "flag h recursion broken at S=" + subset_str(S, d) + ": " + describe(U));
        return;
      }
    }
    ++r.checked;
  }
}

void battery_hvector(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    SimplicialComplex complex = balanced_squeezed_complex(U);
    FlagVector h = flag_h_vector(complex);
    int d = U.signature().colors();
    for (unsigned S = 0; S < (1u << d); ++S) {
      long long members = 0;
      for (const Monomial& u : U.monomials())
        if (u.color_support_mask() == S) ++members;
      if (flag_at(h, S) != members) {
        fail(r, "flag h entry at S=" + subset_str(S, d) + " is " +
                    std::to_string(flag_at(h, S)) + ", expected " + std::to_string(members) +
                    ": " + describe(U));
        return;
      }
    }
    std::vector<long long> coarse = h_vector(complex);
    std::vector<long long> histogram = U.degree_histogram();
    histogram.resize(std::max(coarse.size(), histogram.size()), 0);
    std::vector<long long> padded = coarse;
    padded.resize(histogram.size(), 0);
    if (padded != histogram) {
      fail(r, "h-vector does not match the degree histogram: " + describe(U));
      return;
    }
    if (coarse_vector(h) != h_vector(complex)) {
      fail(r, "flag h does not coarsen to the h-vector: " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_compare_ideal_complex(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    bool shifted = U.is_shifted();
    bool complex_shifted = is_color_shifted(balanced_squeezed_complex(U));
    if (shifted != complex_shifted) {
      fail(r, std::string("shifted=") + (shifted ? "yes" : "no") + " but complex color-shifted=" +
                  (complex_shifted ? "yes" : "no") + ": " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_shelling(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    SimplicialComplex complex = balanced_squeezed_complex(U);
    ShellingOrder order = shelling_order(U);
    ShellingCheck check = verify_shelling(complex, order.facets);
    if (!check.valid) {
      fail(r, "shelling rejected (" + check.reason + "): " + describe(U));
      return;
    }
    if (check.restrictions != order.restrictions) {
      fail(r, "restriction faces disagree with the re-derived ones: " + describe(U));
      return;
    }
    // Restriction faces grouped by color support must reproduce the flag h.
    std::map<unsigned, long long> by_support;
    for (SimplicialComplex::Mask face : order.restrictions) {
      unsigned key = 0;
      for (int id = 0; id < order.vertex_sig.total_variables(); ++id)
        if (face & (SimplicialComplex::Mask(1) << id))
          key |= 1u << (order.vertex_sig.var_at(id).color - 1);
      ++by_support[key];
    }
    FlagVector h = flag_h_vector(complex);
    int d = U.signature().colors();
    for (unsigned S = 0; S < (1u << d); ++S) {
      auto it = by_support.find(S);
      long long counted = it == by_support.end() ? 0 : it->second;
      if (counted != flag_at(h, S)) {
        fail(r, "restriction-face supports disagree with flag h at S=" + subset_str(S, d) + ": " +
                    describe(U));
        return;
      }
    }
    ++r.checked;
  }
}

void battery_vd(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    SimplicialComplex complex = balanced_squeezed_complex(U);
    DecompositionTree tree = squeezed_decomposition(U);
    if (!verify_decomposition(complex, tree)) {
      fail(r, "constructive decomposition fails verification: " + describe(U));
      return;
    }
    if (tree.kind == DecompositionTree::Kind::Node &&
        !(tree.vertex == ColoredVertex{1, 1})) {
      fail(r, "decomposition root does not shed the first vertex of color 1: " + describe(U));
      return;
    }
    auto found = is_vertex_decomposable(complex);
    if (!found || !verify_decomposition(complex, *found)) {
      fail(r, "decomposability search failed: " + describe(U));
      return;
    }
    ++r.checked;
  }
}

// The non-face ideal intersected with the base ring is squarefree and can
// never contain a square, so index-lowering stability is tested only where
// the exchanged monomial stays squarefree (resp. color-squarefree for the
// across-colors moves).
bool squarefree_exchange_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  const RingSignature& sig = ideal.signature();
  for (const Monomial& w : monomials_up_to_degree(sig, ideal.d_max())) {
    if (!w.is_squarefree() || !ideal.contains(w)) continue;
    for (const auto& [v, exp] : w.factors()) {
      (void)exp;
      for (int j = 1; j < v.index; ++j) {
        Monomial moved =
            w.divided_by(Monomial::of_variable(sig, v)) * Variable{v.color, j};
        if (moved.is_squarefree() && !ideal.contains(moved)) return false;
      }
    }
  }
  return true;
}

bool squarefree_exchange_stable_across(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  if (!squarefree_exchange_stable(ideal)) return false;
  const RingSignature& sig = ideal.signature();
  for (const Monomial& w : monomials_up_to_degree(sig, ideal.d_max())) {
    if (!w.is_color_squarefree() || !ideal.contains(w)) continue;
    for (const auto& [v, exp] : w.factors()) {
      (void)exp;
      Monomial stem = w.divided_by(Monomial::of_variable(sig, v));
      for (Variable candidate : sig.variables()) {
        if (var_compare_prec(candidate, v) != std::strong_ordering::less) continue;
        Monomial moved = stem * candidate;
        if (moved.is_color_squarefree() && !ideal.contains(moved)) return false;
      }
    }
  }
  return true;
}

// --- module ideals ----------------------------------------------------------

void battery_sr_formula(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (U.signature().colors() < 2) continue;
    MonomialIdeal direct = stanley_reisner_ideal(balanced_squeezed_complex(U));
    MonomialIdeal formula = sr_ideal_formula(U);
    if (!(direct == formula)) {
      fail(r, "non-face ideal formula disagrees with the minimal non-faces: " + describe(U));
      return;
    }
    if (!(phi_map(complement_ideal(U)) == direct)) {
      fail(r, "polarizing the complement ideal does not give the non-face ideal: " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_comparison(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    const RingSignature& sig = U.signature();
    SimplicialComplex complex = balanced_squeezed_complex(U);
    bool c1 = U.is_shifted();
    bool c2 = is_strongly_color_stable(complement_ideal(U));
    bool c3 = is_color_shifted(complex);
    bool c4 = squarefree_exchange_stable(stanley_reisner_ideal(complex).restrict_to(sig));
    if (c1 != c2 || c1 != c3 || c1 != c4) {
      std::ostringstream os;
      os << "equivalent conditions split (" << c1 << c2 << c3 << c4 << "): " << describe(U);
      fail(r, os.str());
      return;
    }
    ++r.checked;
  }
}

void battery_squeezed_across(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    const RingSignature& sig = U.signature();
    SimplicialComplex complex = balanced_squeezed_complex(U);
    // Induced subcomplex on the non-top labels, read over the base universe.
    SimplicialComplex::Mask keep = 0;
    for (int i = 1; i <= sig.colors(); ++i)
      for (int j = 1; j <= sig.count(i); ++j)
        keep |= SimplicialComplex::Mask(1) << complex.vertex_id({i, j});
    SimplicialComplex inner = restrict_universe(complex.induced(keep), sig);

    bool c1 = U.is_shifted_across_colors();
    bool c2 = is_strongly_color_stable_across_colors(complement_ideal(U));
    bool c3 = is_color_shifted_across_colors(inner);
    bool c4 = squarefree_exchange_stable_across(
        stanley_reisner_ideal(complex).restrict_to(sig));
    if (c1 != c2 || c1 != c3 || c1 != c4) {
      std::ostringstream os;
      os << "equivalent across-colors conditions split (" << c1 << c2 << c3 << c4
         << "): " << describe(U);
      fail(r, os.str());
      return;
    }
    ++r.checked;
  }
}

void battery_lift_closure(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    const RingSignature& sig = U.signature();
    MonomialIdeal ideal = complement_ideal(U);
    bool eligible = true;
    MonomialIdeal squares = same_color_squares(sig);
    for (const Monomial& g : squares.generators())
      if (!ideal.contains(g)) eligible = false;
    for (const Monomial& g : ideal.generators())
      if (g.degree() == 1) eligible = false;
    if (!eligible) continue;

    bool stable = is_strongly_color_stable(ideal);
    bool stable_across = is_strongly_color_stable_across_colors(ideal);
    if (!stable && !stable_across) continue;

    const RingSignature ext = sig.extended();
    MonomialIdeal lifted = phi_map(ideal);
    for (const Monomial& u : ideal.generators()) {
      if (!u.is_color_squarefree()) continue;
      for (const Monomial& v : color_squarefree_monomials(sig)) {
        if (v.is_one()) continue;
        if (stable && leq_s(v, u) && !lifted.contains(v.in_signature(ext))) {
          fail(r, "polarized image misses " + v.str() + " below generator " + u.str() + ": " +
                      describe(U));
          return;
        }
        if (stable_across && leq_cs(v, u) && !lifted.contains(v.in_signature(ext))) {
          fail(r, "polarized image misses " + v.str() + " exchange-below " + u.str() + ": " +
                      describe(U));
          return;
        }
      }
    }
    ++r.checked;
  }
}

void battery_degree2(const Ctx&, BatteryResult& r) {
  for (int m = 1; m <= 4; ++m) {
    RingSignature sig(1, {m});
    MonomialIdeal squares = same_color_squares(sig);
    MonomialIdeal lifted = phi_map(squares);
    long long count = 0;
    for (const Monomial& mon : monomials_of_degree(sig.extended(), 2))
      if (lifted.contains(mon)) ++count;
    long long expected = static_cast<long long>(m + 1) * m / 2;
    if (count != expected) {
      fail(r, "degree-2 dimension of the polarized square ideal is " + std::to_string(count) +
                  ", expected " + std::to_string(expected) + " at m=" + std::to_string(m));
      return;
    }
    ++r.checked;
  }
}

void battery_polarize_hilbert(const Ctx& ctx, BatteryResult& r) {
  auto check = [&](const MonomialIdeal& ideal) -> bool {
    MonomialIdeal polarized = color_polarize(ideal);
    int truncation = (ideal.is_zero() ? 0 : ideal.d_max()) + 2;
    HilbertSeries original = hilbert_series(ideal, Grading::Zd, truncation);
    HilbertSeries moved = hilbert_series(polarized, Grading::Zd, truncation);
    if (original.numerator != moved.numerator) {
      fail(r, "per-color series numerator changed under polarization: " + describe(ideal));
      return false;
    }
    ++r.checked;
    return true;
  };
  for (const OrderIdeal& U : ctx.order_ideals)
    if (!check(complement_ideal(U))) return;
  for (const MonomialIdeal& ideal : ctx.csf_ideals)
    if (!check(ideal)) return;
}

void battery_linquot(const Ctx& ctx, BatteryResult& r) {
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    if (ideal.is_zero() || !is_color_squarefree_stable_across_colors(ideal)) continue;
    std::vector<LinearQuotientStep> steps = linear_quotients_order(ideal);
    if (steps.size() != ideal.generator_count()) {
      fail(r, "peeling emitted " + std::to_string(steps.size()) + " of " +
                  std::to_string(ideal.generator_count()) + " generators: " + describe(ideal));
      return;
    }
    std::vector<Monomial> emitted;
    std::vector<Monomial> remaining(ideal.generators());
    for (const LinearQuotientStep& step : steps) {
      emitted.push_back(step.generator);
      auto it = std::find(remaining.begin(), remaining.end(), step.generator);
      if (it == remaining.end()) {
        fail(r, "peeled generator " + step.generator.str() + " not present: " + describe(ideal));
        return;
      }
      remaining.erase(it);

      std::vector<Variable> expected = sm(step.generator);
      std::vector<Variable> got = step.quotient;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (expected != got) {
        fail(r, "quotient variables of " + step.generator.str() + " are not its smaller set: " +
                    describe(ideal));
        return;
      }

      std::vector<Monomial> quotient_gens;
      for (Variable v : step.quotient)
        quotient_gens.push_back(Monomial::of_variable(ideal.signature(), v));
      MonomialIdeal rest = MonomialIdeal::minimalize(ideal.signature(), remaining);
      if (!(rest.colon(step.generator) ==
            MonomialIdeal::minimalize(ideal.signature(), quotient_gens))) {
        fail(r, "colon by " + step.generator.str() + " is not the quotient-variable ideal: " +
                    describe(ideal));
        return;
      }
    }
    std::sort(emitted.begin(), emitted.end());
    std::vector<Monomial> gens(ideal.generators());
    std::sort(gens.begin(), gens.end());
    if (emitted != gens) {
      fail(r, "peeled generators do not exhaust the ideal: " + describe(ideal));
      return;
    }
    ++r.checked;
  }
}

// --- module betti -----------------------------------------------------------

void battery_hochster_koszul(const Ctx& ctx, BatteryResult& r) {
  auto check = [&](const MonomialIdeal& ideal) -> bool {
    BettiTable a = hochster_betti(ideal, ctx.opt.field);
    BettiTable b = koszul_betti(ideal, ctx.opt.field);
    DiffReport diff = compare_tables(a, b, Grading::Fine);
    if (!diff.empty()) {
      fail(r, "subcomplex-homology and generator-complex tables differ at " +
                  describe_diff(diff.differences.front()) + ": " + describe(ideal));
      return false;
    }
    ++r.checked;
    return true;
  };
  for (const MonomialIdeal& ideal : ctx.csf_ideals)
    if (!check(ideal)) return;
  for (const OrderIdeal& U : ctx.order_ideals)
    if (!check(stanley_reisner_ideal(balanced_squeezed_complex(U)))) return;
}

void battery_stable_betti(const Ctx& ctx, BatteryResult& r) {
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    if (ideal.is_zero() || !is_color_squarefree_stable_across_colors(ideal)) continue;
    BettiTable formula = stable_betti_formula(ideal);
    BettiTable oracle = koszul_betti(ideal, ctx.opt.field);
    DiffReport diff = compare_tables(formula, oracle, Grading::Fine);
    if (!diff.empty()) {
      fail(r, "closed form disagrees with homology at " +
                  describe_diff(diff.differences.front()) + ": " + describe(ideal));
      return;
    }
    ++r.checked;
  }
}

void battery_cone_polarized(const Ctx& ctx, BatteryResult& r) {
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    const RingSignature ext = ideal.signature().extended();
    BettiTable assembled = mapping_cone_betti_polarized(ideal, ctx.opt.field);
    BettiTable direct =
        koszul_betti(ideal.in_signature(ext).plus(same_color_pairs(ext)), ctx.opt.field);
    DiffReport diff = compare_tables(assembled, direct, Grading::Fine);
    if (!diff.empty()) {
      fail(r, "assembled table differs from the direct one at " +
                  describe_diff(diff.differences.front()) + ": " + describe(ideal));
      return;
    }
    ++r.checked;
  }
}

void battery_cone_squares(const Ctx& ctx, BatteryResult& r) {
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    BettiTable assembled = mapping_cone_betti_squares(ideal, ctx.opt.field);
    BettiTable direct =
        koszul_betti(ideal.plus(same_color_squares(ideal.signature())), ctx.opt.field);
    DiffReport diff = compare_tables(assembled, direct, Grading::Fine);
    if (!diff.empty()) {
      fail(r, "assembled table differs from the direct one at " +
                  describe_diff(diff.differences.front()) + ": " + describe(ideal));
      return;
    }
    ++r.checked;
  }
}

void battery_compare_betti(const Ctx& ctx, BatteryResult& r) {
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    const RingSignature ext = ideal.signature().extended();
    BettiTable polarized =
        koszul_betti(ideal.in_signature(ext).plus(same_color_pairs(ext)), ctx.opt.field);
    BettiTable squares =
        koszul_betti(ideal.plus(same_color_squares(ideal.signature())), ctx.opt.field);
    DiffReport diff = compare_tables(polarized, squares, Grading::Zd);
    if (!diff.empty()) {
      fail(r, "per-color tables of the two square-closures differ at " +
                  describe_diff(diff.differences.front()) + ": " + describe(ideal));
      return;
    }
    ++r.checked;
  }
}

void battery_compare_gin(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (!U.is_shifted()) continue;
    BettiTable from_complex =
        koszul_betti(stanley_reisner_ideal(balanced_squeezed_complex(U)), ctx.opt.field);
    BettiTable from_formula = koszul_betti(gin_formula(U), ctx.opt.field);
    DiffReport diff = compare_tables(from_complex, from_formula, Grading::Zd);
    if (!diff.empty()) {
      fail(r, "non-face and initial-form tables differ per color at " +
                  describe_diff(diff.differences.front()) + ": " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_compare_shifted(const Ctx& ctx, BatteryResult& r) {
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (!U.is_shifted()) continue;
    BettiTable original =
        koszul_betti(stanley_reisner_ideal(balanced_squeezed_complex(U)), ctx.opt.field);
    BettiTable companion =
        koszul_betti(stanley_reisner_ideal(color_shifted_complex(U)), ctx.opt.field);
    DiffReport diff = compare_tables(original, companion, Grading::Z);
    if (!diff.empty()) {
      fail(r, "total-degree tables of the two complexes differ at " +
                  describe_diff(diff.differences.front()) + ": " + describe(U));
      return;
    }
    ++r.checked;
  }
}

void battery_colon_series(const Ctx&, BatteryResult& r) {
  for (int m = 1; m <= 4; ++m) {
    const RingSignature base(1, {m});
    const RingSignature ring = base.extended();
    // Pairwise products of the non-top variables only, read in the extended
    // ring; the top variable plays the cone role.
    MonomialIdeal pairs = same_color_pairs(base).in_signature(ring);
    MonomialIdeal top_times = sentinel_times_variables(base);

    // Fine numerators: the shifted colon summands add up to the numerator
    // difference of the two quotients.
    std::map<FineDegree, long long> lhs;
    for (int j = 1; j <= m; ++j) {
      Monomial shift = Monomial::of_variable(ring, {1, j}) * Variable{1, m + 1};
      for (const auto& [degree, coeff] : kpolynomial_fine(pairs.colon(
               Monomial::of_variable(ring, {1, j})))) {
        FineDegree moved = degree;
        for (int slot = 0; slot < ring.total_variables(); ++slot)
          moved[slot] += shift.exponents()[slot];
        lhs[moved] += coeff;
      }
    }
    std::map<FineDegree, long long> rhs;
    for (const auto& [degree, coeff] : kpolynomial_fine(pairs)) rhs[degree] += coeff;
    for (const auto& [degree, coeff] : kpolynomial_fine(pairs.plus(top_times)))
      rhs[degree] -= coeff;
    for (auto it = lhs.begin(); it != lhs.end();)
      it = it->second == 0 ? lhs.erase(it) : std::next(it);
    for (auto it = rhs.begin(); it != rhs.end();)
      it = it->second == 0 ? rhs.erase(it) : std::next(it);
    if (lhs != rhs) {
      fail(r, "fine series identity for the colon decomposition fails at m=" + std::to_string(m));
      return;
    }

    // Same identity through the total-degree Hilbert series.
    std::map<int, long long> lhs_z, rhs_z;
    for (int j = 1; j <= m; ++j) {
      HilbertSeries series = hilbert_series(
          pairs.colon(Monomial::of_variable(ring, {1, j})), Grading::Z, m + 3);
      for (const auto& [degree, coeff] : series.numerator) lhs_z[degree[0] + 2] += coeff;
    }
    for (const auto& [degree, coeff] : hilbert_series(pairs, Grading::Z, m + 3).numerator)
      rhs_z[degree[0]] += coeff;
    for (const auto& [degree, coeff] :
         hilbert_series(pairs.plus(top_times), Grading::Z, m + 3).numerator)
      rhs_z[degree[0]] -= coeff;
    for (auto it = lhs_z.begin(); it != lhs_z.end();)
      it = it->second == 0 ? lhs_z.erase(it) : std::next(it);
    for (auto it = rhs_z.begin(); it != rhs_z.end();)
      it = it->second == 0 ? rhs_z.erase(it) : std::next(it);
    if (lhs_z != rhs_z) {
      fail(r, "total-degree series identity for the colon decomposition fails at m=" +
                  std::to_string(m));
      return;
    }
    ++r.checked;
  }
}

void battery_kpoly(const Ctx& ctx, BatteryResult& r) {
  auto check = [&](const MonomialIdeal& ideal) -> bool {
    BettiTable table = koszul_betti(ideal, ctx.opt.field);
    std::map<FineDegree, long long> alternating;
    for (const auto& [k, row] : table.entries())
      for (const auto& [degree, mult] : row) alternating[degree] += (k % 2 ? -mult : mult);
    for (auto it = alternating.begin(); it != alternating.end();)
      it = it->second == 0 ? alternating.erase(it) : std::next(it);
    std::map<FineDegree, long long> numerator = kpolynomial_fine(ideal);
    for (auto it = numerator.begin(); it != numerator.end();)
      it = it->second == 0 ? numerator.erase(it) : std::next(it);
    if (alternating != numerator) {
      fail(r, "alternating table sum is not the series numerator: " + describe(ideal));
      return false;
    }
    ++r.checked;
    return true;
  };
  long long cap = 60;
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    if (r.checked >= cap) break;
    if (!check(ideal)) return;
  }
  long long extra = 0;
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (U.signature().colors() < 2) continue;
    if (++extra > 10) break;
    if (!check(stanley_reisner_ideal(balanced_squeezed_complex(U)))) return;
  }
}

void battery_field_robust(const Ctx& ctx, BatteryResult& r) {
  const FieldConfig modular = FieldConfig::gf(32003);
  long long disagreements = 0;
  std::string first;
  auto record = [&](const MonomialIdeal& ideal) {
    BettiTable rational = koszul_betti(ideal, FieldConfig::rationals());
    BettiTable reduced = koszul_betti(ideal, modular);
    DiffReport diff = compare_tables(rational, reduced, Grading::Fine);
    if (!diff.empty()) {
      ++disagreements;
      if (first.empty())
        first = describe_diff(diff.differences.front()) + ": " + describe(ideal);
    }
    ++r.checked;
  };
  long long taken = 0;
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    if (++taken > 30) break;
    record(ideal);
  }
  taken = 0;
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (++taken > 10) break;
    record(stanley_reisner_ideal(balanced_squeezed_complex(U)));
  }
  // Characteristic dependence is possible in principle, so this battery
  // records rather than asserts.
  std::ostringstream os;
  if (disagreements == 0)
    os << r.checked << " tables agree between exact rationals and GF(32003)";
  else
    os << disagreements << " of " << r.checked << " tables differ; first: " << first;
  r.detail = os.str();
}

void battery_hilbert(const Ctx& ctx, BatteryResult& r) {
  auto check = [&](const MonomialIdeal& ideal) -> bool {
    int truncation = (ideal.is_zero() ? 0 : ideal.d_max()) + 3;
    hilbert_series(ideal, Grading::Zd, truncation);  // self-checking
    HilbertSeries z = hilbert_series(ideal, Grading::Z, truncation);
    HilbertSeries reduced = reduce_z_form(z);

    long long at_one = 0;
    for (const auto& [degree, coeff] : reduced.numerator) at_one += coeff;
    if (at_one == 0) {
      fail(r, "reduced numerator still vanishes at 1: " + describe(ideal));
      return false;
    }
    // Re-expanding the cancelled factors must reproduce the raw numerator.
    int cancelled = z.denominator_exponents[0] - reduced.denominator_exponents[0];
    std::map<FineDegree, long long> expanded = reduced.numerator;
    for (int step = 0; step < cancelled; ++step) {
      std::map<FineDegree, long long> next;
      for (const auto& [degree, coeff] : expanded) {
        next[degree] += coeff;
        next[{degree[0] + 1}] -= coeff;
      }
      for (auto it = next.begin(); it != next.end();)
        it = it->second == 0 ? next.erase(it) : std::next(it);
      expanded = std::move(next);
    }
    std::map<FineDegree, long long> raw = z.numerator;
    for (auto it = raw.begin(); it != raw.end();)
      it = it->second == 0 ? raw.erase(it) : std::next(it);
    if (expanded != raw) {
      fail(r, "cancelled series does not re-expand to the original: " + describe(ideal));
      return false;
    }
    ++r.checked;
    return true;
  };
  long long taken = 0;
  for (const OrderIdeal& U : ctx.order_ideals) {
    if (++taken > 80) break;
    if (!check(complement_ideal(U))) return;
  }
  taken = 0;
  for (const MonomialIdeal& ideal : ctx.csf_ideals) {
    if (++taken > 80) break;
    if (!check(ideal)) return;
  }
}

using BatteryFn = void (*)(const Ctx&, BatteryResult&);

struct Battery {
  const char* name;
  BatteryFn fn;
};

const Battery kBatteries[] = {
    {"orders", battery_orders},
    {"shifted-stable", battery_shifted_stable},
    {"complement", battery_complement},
    {"purity", battery_purity},
    {"flagrec", battery_flagrec},
    {"hvector", battery_hvector},
    {"compare-ideal-complex", battery_compare_ideal_complex},
    {"shelling", battery_shelling},
    {"vd", battery_vd},
    {"sr-formula", battery_sr_formula},
    {"comparison", battery_comparison},
    {"squeezed-across", battery_squeezed_across},
    {"lift-closure", battery_lift_closure},
    {"degree2", battery_degree2},
    {"polarize-hilbert", battery_polarize_hilbert},
    {"linquot", battery_linquot},
    {"hochster-koszul", battery_hochster_koszul},
    {"stable-betti", battery_stable_betti},
    {"cone-polarized", battery_cone_polarized},
    {"cone-squares", battery_cone_squares},
    {"compare-betti", battery_compare_betti},
    {"compare-gin", battery_compare_gin},
    {"compare-shifted", battery_compare_shifted},
    {"colon-series", battery_colon_series},
    {"kpoly", battery_kpoly},
    {"field-robust", battery_field_robust},
    {"hilbert", battery_hilbert},
};

}  // namespace

std::string outcome_name(BatteryOutcome outcome) {
  switch (outcome) {
    case BatteryOutcome::Pass: return "pass";
    case BatteryOutcome::Fail: return "fail";
    case BatteryOutcome::Resource: return "resource";
  }
  throw input_error("unknown outcome");
}

const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Battery& battery : kBatteries) out.emplace_back(battery.name);
    return out;
  }();
  return names;
}

std::vector<BatteryResult> run_verify(const VerifyOptions& options) {
  bool all = options.property == "all";
  if (!all) {
    const auto& names = battery_names();
    if (std::find(names.begin(), names.end(), options.property) == names.end()) {
      std::string known;
      for (const std::string& name : names) known += (known.empty() ? "" : ", ") + name;
      throw input_error("unknown property '" + options.property + "'; expected all, " + known);
    }
  }

  Ctx ctx;
  ctx.opt = options;
  ctx.order_ideals = build_order_ideal_corpus(options.max_count, options.seed);
  ctx.csf_ideals = build_csf_ideal_corpus(options.max_count);

  std::vector<BatteryResult> results;
  for (const Battery& battery : kBatteries) {
    if (!all && options.property != battery.name) continue;
    BatteryResult result;
    result.name = battery.name;
    try {
      battery.fn(ctx, result);
    } catch (const resource_error& error) {
      result.outcome = BatteryOutcome::Resource;
      result.detail = error.what();
    } catch (const property_error& error) {
      result.outcome = BatteryOutcome::Fail;
      result.detail = error.what();
    } catch (const input_error& error) {
      result.outcome = BatteryOutcome::Fail;
      result.detail = error.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace balsq

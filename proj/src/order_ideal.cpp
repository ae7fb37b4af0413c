#include "balsq/order_ideal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace balsq {

namespace {

/// Divisibility closure (divisors only shrink degree, so peel one variable at
/// a time until the set stabilizes).
std::set<Monomial> divisor_closure(const RingSignature& sig, std::set<Monomial> work) {
  std::vector<Monomial> queue(work.begin(), work.end());
  while (!queue.empty()) {
    Monomial w = queue.back();
    queue.pop_back();
    for (const auto& [v, k] : w.factors()) {
      (void)k;
      Monomial div = w.divided_by(Monomial::of_variable(sig, v));
      if (work.insert(div).second) queue.push_back(div);
    }
  }
  return work;
}

std::set<Monomial> base_members(const RingSignature& sig) {
  std::set<Monomial> out;
  out.insert(Monomial::one(sig));
  for (Variable v : sig.variables()) out.insert(Monomial::of_variable(sig, v));
  return out;
}

}  // namespace

OrderIdeal::OrderIdeal(RingSignature sig, std::vector<Monomial> sorted_members)
    : sig_(std::move(sig)), monomials_(std::move(sorted_members)) {
  validate();
}

void OrderIdeal::validate() const {
  std::set<Monomial> all(monomials_.begin(), monomials_.end());
  if (all.size() != monomials_.size()) throw input_error("order ideal: duplicate members");
  if (!all.count(Monomial::one(sig_))) throw input_error("order ideal: missing 1");
  for (Variable v : sig_.variables())
    if (!all.count(Monomial::of_variable(sig_, v)))
      throw input_error("order ideal: missing variable " + Monomial::of_variable(sig_, v).str());
  for (const Monomial& m : monomials_) {
    if (m.signature() != sig_) throw input_error("order ideal: member from another ring");
    if (!m.is_color_squarefree())
      throw input_error("order ideal: member " + m.str() + " is not color-squarefree");
    for (const auto& [v, k] : m.factors()) {
      (void)k;
      if (!all.count(m.divided_by(Monomial::of_variable(sig_, v))))
        throw input_error("order ideal: not closed under divisibility at " + m.str());
    }
  }
}

OrderIdeal OrderIdeal::from_monomials(const RingSignature& sig,
                                      const std::vector<Monomial>& seeds) {
  std::set<Monomial> work = base_members(sig);
  for (const Monomial& m : seeds) {
    if (m.signature() != sig) throw input_error("from_monomials: seed from another ring");
    if (!m.is_color_squarefree())
      throw input_error("from_monomials: seed " + m.str() + " is not color-squarefree");
    work.insert(m);
  }
  work = divisor_closure(sig, std::move(work));
  return OrderIdeal(sig, std::vector<Monomial>(work.begin(), work.end()));
}

OrderIdeal OrderIdeal::smallest_shifted_closure(const RingSignature& sig,
                                                const std::vector<Monomial>& seeds) {
  std::set<Monomial> work = base_members(sig);
  for (const Monomial& m : seeds) {
    if (m.signature() != sig) throw input_error("shifted_closure: seed from another ring");
    if (!m.is_color_squarefree())
      throw input_error("shifted_closure: seed " + m.str() + " is not color-squarefree");
    work.insert(m);
  }
  std::vector<Monomial> queue(work.begin(), work.end());
  while (!queue.empty()) {
    Monomial w = queue.back();
    queue.pop_back();
    for (const auto& [v, k] : w.factors()) {
      (void)k;
      Monomial base = w.divided_by(Monomial::of_variable(sig, v));
      if (work.insert(base).second) queue.push_back(base);
      for (int j = v.index + 1; j <= sig.count(v.color); ++j) {
        Monomial up = base * Variable{v.color, j};
        if (work.insert(up).second) queue.push_back(up);
      }
    }
  }
  return OrderIdeal(sig, std::vector<Monomial>(work.begin(), work.end()));
}

bool OrderIdeal::contains(const Monomial& m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

int OrderIdeal::d_max() const {
  int best = 0;
  for (const Monomial& m : monomials_) best = std::max(best, m.degree());
  return best;
}

bool OrderIdeal::is_shifted() const {
  for (const Monomial& w : monomials_)
    for (const auto& [v, k] : w.factors()) {
      (void)k;
      Monomial base = w.divided_by(Monomial::of_variable(sig_, v));
      for (int j = v.index + 1; j <= sig_.count(v.color); ++j)
        if (!contains(base * Variable{v.color, j})) return false;
    }
  return true;
}

bool OrderIdeal::is_shifted_across_colors() const {
  if (!is_shifted()) return false;
  for (const Monomial& w : monomials_)
    for (const auto& [v, k] : w.factors()) {
      (void)k;
      Monomial base = w.divided_by(Monomial::of_variable(sig_, v));
      // Replacements by prec-larger variables: dense ids above v.
      for (int id = sig_.var_id(v) + 1; id < sig_.total_variables(); ++id) {
        Monomial up = base * sig_.var_at(id);
        if (!up.is_color_squarefree()) continue;
        if (!contains(up)) return false;
      }
    }
  return true;
}

std::vector<long long> OrderIdeal::degree_histogram() const {
  std::vector<long long> out(static_cast<std::size_t>(d_max()) + 1, 0);
  for (const Monomial& m : monomials_) ++out[m.degree()];
  return out;
}

namespace {

struct ExhaustiveWalker {
  const RingSignature& sig;
  const EnumerateOptions& options;
  const std::function<bool(const OrderIdeal&)>& yield;
  // Free elements (degree >= 2) in (degree, revlex) order; all proper
  // divisors of an element of degree k have degree < k, so each element's
  // divisors precede it.
  std::vector<Monomial> elements;
  std::vector<std::vector<std::size_t>> divisor_slots;  // per element
  std::vector<char> chosen;
  std::size_t yielded = 0;
  std::size_t visited = 0;
  bool stopped = false;

  bool emit() {
    if (++visited > options.max_visited)
      throw resource_error("order ideal enumeration exceeded its leaf budget");
    std::vector<Monomial> seeds;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (chosen[i]) seeds.push_back(elements[i]);
    // The walk only admits elements whose divisors are present, so the
    // closure below is a no-op beyond adding 1 and the variables.
    OrderIdeal ideal = OrderIdeal::from_monomials(sig, seeds);
    if (options.shifted && ideal.is_shifted() != *options.shifted) return true;
    if (options.shifted_across_colors &&
        ideal.is_shifted_across_colors() != *options.shifted_across_colors)
      return true;
    ++yielded;
    if (!yield(ideal)) return false;
    return yielded < options.max_count;
  }

  bool walk(std::size_t pos) {
    if (stopped) return false;
    if (pos == elements.size()) {
      if (!emit()) stopped = true;
      return !stopped;
    }
    bool divisors_present = true;
    for (std::size_t slot : divisor_slots[pos])
      if (!chosen[slot]) {
        divisors_present = false;
        break;
      }
    if (divisors_present) {
      chosen[pos] = 1;
      if (!walk(pos + 1)) return false;
      chosen[pos] = 0;
    }
    return walk(pos + 1);
  }
};

}  // namespace

void enumerate_order_ideals(const RingSignature& sig, const EnumerateOptions& options,
                            const std::function<bool(const OrderIdeal&)>& yield) {
  std::vector<Monomial> all_cs = color_squarefree_monomials(sig);
  bool exhaustive;
  switch (options.mode) {
    case EnumerateOptions::Mode::Exhaustive:
      if (all_cs.size() > options.exhaustive_limit)
        throw resource_error("exhaustive order ideal enumeration over " + sig.str() +
                             " exceeds the configured monomial bound");
      exhaustive = true;
      break;
    case EnumerateOptions::Mode::Sample:
      exhaustive = false;
      break;
    case EnumerateOptions::Mode::Auto:
    default:
      exhaustive = all_cs.size() <= options.exhaustive_limit;
      break;
  }

  if (exhaustive) {
    ExhaustiveWalker walker{sig, options, yield, {}, {}, {}, 0, 0, false};
    for (const Monomial& m : all_cs)
      if (m.degree() >= 2) walker.elements.push_back(m);
    walker.divisor_slots.resize(walker.elements.size());
    std::map<Monomial, std::size_t> slot_of;
    for (std::size_t i = 0; i < walker.elements.size(); ++i) slot_of[walker.elements[i]] = i;
    for (std::size_t i = 0; i < walker.elements.size(); ++i)
      for (const auto& [v, k] : walker.elements[i].factors()) {
        (void)k;
        Monomial div = walker.elements[i].divided_by(Monomial::of_variable(sig, v));
        if (div.degree() >= 2) walker.divisor_slots[i].push_back(slot_of.at(div));
      }
    walker.chosen.assign(walker.elements.size(), 0);
    walker.walk(0);
    return;
  }

  // Seeded sampling: random subsets of the degree >= 2 monomials, closed
  // under divisibility afterwards, deduplicated.
  std::vector<Monomial> pool;
  for (const Monomial& m : all_cs)
    if (m.degree() >= 2) pool.push_back(m);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::set<std::vector<FineDegree>> seen;
  std::size_t yielded = 0;
  for (std::size_t attempt = 0; attempt < options.sample_attempts && yielded < options.max_count;
       ++attempt) {
    double p = unit(rng);
    std::vector<Monomial> seeds;
    for (const Monomial& m : pool)
      if (unit(rng) < p) seeds.push_back(m);
    OrderIdeal ideal = OrderIdeal::from_monomials(sig, seeds);
    if (options.shifted && ideal.is_shifted() != *options.shifted) continue;
    if (options.shifted_across_colors &&
        ideal.is_shifted_across_colors() != *options.shifted_across_colors)
      continue;
    std::vector<FineDegree> key;
    for (const Monomial& m : ideal.monomials()) key.push_back(m.exponents());
    if (!seen.insert(key).second) continue;
    ++yielded;
    if (!yield(ideal)) return;
  }
}

std::vector<OrderIdeal> enumerate_order_ideals(const RingSignature& sig,
                                               const EnumerateOptions& options) {
  std::vector<OrderIdeal> out;
  enumerate_order_ideals(sig, options, [&](const OrderIdeal& ideal) {
    out.push_back(ideal);
    return true;
  });
  return out;
}

}  // namespace balsq

#include "balsq/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "balsq/errors.hpp"
#include "balsq/parallel.hpp"

namespace balsq {

namespace {

using Mask = SimplicialComplex::Mask;

FineDegree zero_degree(std::size_t length) { return FineDegree(length, 0); }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::string degree_str(const FineDegree& degree) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (i) out << ',';
    out << degree[i];
  }
  out << ')';
  return out.str();
}

/// Reduced homology dimensions of an abstract downward-closed face list
/// (masks over up to 64 vertices, the empty face included unless the list is
/// empty). Keyed by homological degree, zeros dropped.
std::map<int, long> homology_of_faces(const std::vector<Mask>& faces, const FieldConfig& field) {
  std::map<int, long> dims;
  if (faces.empty()) return dims;

  int max_card = 0;
  for (Mask f : faces) max_card = std::max(max_card, std::popcount(f));
  std::vector<std::vector<Mask>> by_card(max_card + 1);
  for (Mask f : faces) by_card[std::popcount(f)].push_back(f);
  for (auto& level : by_card) std::sort(level.begin(), level.end());

  auto index_of = [&](int card, Mask face) {
    const auto& level = by_card[card];
    auto it = std::lower_bound(level.begin(), level.end(), face);
    if (it == level.end() || *it != face)
      throw property_error("face list is not closed under taking subsets");
    return static_cast<std::size_t>(it - level.begin());
  };

  // ranks[c] = rank of the boundary map from cardinality c to c-1; the
  // map from cardinality 1 to the empty face is the augmentation.
  std::vector<std::size_t> ranks(max_card + 2, 0);
  for (int c = 1; c <= max_card; ++c) {
    SparseMatrix boundary;
    boundary.rows = by_card[c].size();
    boundary.cols = by_card[c - 1].size();
    boundary.row_entries.resize(boundary.rows);
    for (std::size_t r = 0; r < by_card[c].size(); ++r) {
      Mask face = by_card[c][r];
      int position = 0;
      for (Mask rest = face; rest; rest &= rest - 1, ++position) {
        Mask bit = rest & ~(rest - 1);
        int sign = (position % 2 == 0) ? 1 : -1;
        boundary.row_entries[r].push_back({index_of(c - 1, face & ~bit), sign});
      }
    }
    ranks[c] = matrix_rank(boundary, field);
  }

  for (int c = 0; c <= max_card; ++c) {
    long dim = static_cast<long>(by_card[c].size()) - static_cast<long>(ranks[c]) -
               static_cast<long>(ranks[c + 1]);
    if (dim != 0) dims[c - 1] = dim;
  }
  return dims;
}

}  // namespace

std::string grading_name(Grading grading) {
  switch (grading) {
    case Grading::Fine: return "fine";
    case Grading::Zd: return "zd";
    case Grading::Z: return "z";
  }
  throw input_error("unknown grading");
}

Grading parse_grading(const std::string& text) {
  if (text == "fine") return Grading::Fine;
  if (text == "zd") return Grading::Zd;
  if (text == "z") return Grading::Z;
  throw input_error("unknown grading '" + text + "' (expected fine, zd or z)");
}

BettiTable::BettiTable(RingSignature sig, Grading grading)
    : sig_(std::move(sig)), grading_(grading) {}

std::size_t BettiTable::degree_length() const {
  switch (grading_) {
    case Grading::Fine: return static_cast<std::size_t>(sig_.total_variables());
    case Grading::Zd: return static_cast<std::size_t>(sig_.colors());
    case Grading::Z: return 1;
  }
  throw input_error("unknown grading");
}

void BettiTable::add(int k, FineDegree degree, long long multiplicity) {
  if (k < 0) throw input_error("negative homological index in Betti table");
  if (degree.size() != degree_length())
    throw input_error("degree length does not match the table grading");
  if (multiplicity == 0) return;
  auto& row = entries_[k];
  long long& cell = row[degree];
  cell += multiplicity;
  if (cell == 0) {
    row.erase(degree);
    if (row.empty()) entries_.erase(k);
  }
}

long long BettiTable::at(int k, const FineDegree& degree) const {
  auto row = entries_.find(k);
  if (row == entries_.end()) return 0;
  auto cell = row->second.find(degree);
  return cell == row->second.end() ? 0 : cell->second;
}

int BettiTable::max_index() const {
  return entries_.empty() ? -1 : entries_.rbegin()->first;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> sums(static_cast<std::size_t>(max_index() + 1), 0);
  for (const auto& [k, row] : entries_)
    for (const auto& [degree, mult] : row) sums[static_cast<std::size_t>(k)] += mult;
  return sums;
}

BettiTable coarsen(const BettiTable& table, Grading target) {
  if (target == table.grading()) return table;
  bool ok = (table.grading() == Grading::Fine && (target == Grading::Zd || target == Grading::Z)) ||
            (table.grading() == Grading::Zd && target == Grading::Z);
  if (!ok)
    throw input_error("cannot refine a " + grading_name(table.grading()) + " table to " +
                      grading_name(target));

  const RingSignature& sig = table.signature();
  std::vector<int> color_of(static_cast<std::size_t>(sig.total_variables()), 0);
  for (int v = 0; v < sig.total_variables(); ++v)
    color_of[static_cast<std::size_t>(v)] = sig.var_at(v).color - 1;

  auto project = [&](const FineDegree& degree) {
    if (target == Grading::Z) {
      long long total = 0;
      for (int e : degree) total += e;
      return FineDegree{static_cast<int>(total)};
    }
    FineDegree result(static_cast<std::size_t>(sig.colors()), 0);
    for (std::size_t v = 0; v < degree.size(); ++v)
      result[static_cast<std::size_t>(color_of[v])] += degree[v];
    return result;
  };

  BettiTable result(sig, target);
  for (const auto& [k, row] : table.entries())
    for (const auto& [degree, mult] : row) result.add(k, project(degree), mult);
  return result;
}

DiffReport compare_tables(const BettiTable& a, const BettiTable& b, Grading grading) {
  if (grading == Grading::Fine && a.signature() != b.signature())
    throw input_error("fine comparison needs matching ring signatures");
  if (grading == Grading::Zd && a.signature().colors() != b.signature().colors())
    throw input_error("per-color comparison needs matching color counts");

  BettiTable left = coarsen(a, grading);
  BettiTable right = coarsen(b, grading);

  DiffReport report;
  int top = std::max(left.max_index(), right.max_index());
  for (int k = 0; k <= top; ++k) {
    std::map<FineDegree, long long> merged;
    if (auto row = left.entries().find(k); row != left.entries().end())
      for (const auto& [degree, mult] : row->second) merged[degree] = mult;
    if (auto row = right.entries().find(k); row != right.entries().end())
      merged.insert(row->second.begin(), row->second.end());
    for (const auto& [degree, unused] : merged) {
      (void)unused;
      long long lv = left.at(k, degree);
      long long rv = right.at(k, degree);
      if (lv != rv) report.differences.push_back({k, degree, lv, rv});
    }
  }
  return report;
}

std::map<int, long> reduced_homology_dims(const SimplicialComplex& complex,
                                          const FieldConfig& field) {
  return homology_of_faces(complex.all_faces(), field);
}

BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldConfig& field) {
  if (!ideal.is_squarefree())
    throw input_error("homology of induced subcomplexes needs a squarefree ideal");

  const RingSignature& sig = ideal.signature();
  BettiTable table(sig, Grading::Fine);
  SimplicialComplex complex = complex_of_ideal(ideal);

  Mask support = 0;
  for (const Monomial& g : ideal.generators())
    for (const auto& [v, e] : g.factors()) {
      (void)e;
      support |= Mask(1) << sig.var_id(v);
    }
  if (std::popcount(support) > 24)
    throw resource_error("squarefree degree scan over more than 24 supported variables");

  for (Mask sigma = support;; sigma = (sigma - 1) & support) {
    SimplicialComplex restricted = complex.induced(sigma);
    std::map<int, long> dims = homology_of_faces(restricted.all_faces(), field);
    int size = std::popcount(sigma);
    FineDegree degree(static_cast<std::size_t>(sig.total_variables()), 0);
    for (int v = 0; v < sig.total_variables(); ++v)
      if (sigma >> v & 1) degree[static_cast<std::size_t>(v)] = 1;
    for (const auto& [hdeg, dim] : dims) table.add(size - 1 - hdeg, degree, dim);
    if (sigma == 0) break;
  }
  return table;
}

BettiTable koszul_betti(const MonomialIdeal& ideal, const FieldConfig& field,
                        const KoszulOptions& options) {
  const RingSignature& sig = ideal.signature();
  const int n = sig.total_variables();
  BettiTable table(sig, Grading::Fine);
  if (ideal.is_unit()) return table;  // the quotient is the zero module
  table.add(0, zero_degree(static_cast<std::size_t>(n)), 1);
  if (ideal.is_zero()) return table;

  FineDegree lcm(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : ideal.generators())
    for (int v = 0; v < n; ++v)
      lcm[static_cast<std::size_t>(v)] = std::max(lcm[static_cast<std::size_t>(v)],
                                                  g.exponents()[static_cast<std::size_t>(v)]);

  // Scan caps per coordinate: divisors of the lcm, or one step beyond every
  // coordinate when validating the pruning.
  FineDegree caps = lcm;
  if (options.widened_scan)
    for (int& c : caps) c += 1;

  unsigned long long total = 1;
  for (int c : caps) {
    total *= static_cast<unsigned long long>(c) + 1;
    if (total > (1ull << 22)) throw resource_error("degree scan of the resolution is too large");
  }

  std::vector<const FineDegree*> gen_exps;
  gen_exps.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) gen_exps.push_back(&g.exponents());

  // Each multidegree's subset complex is independent, so workers process
  // contiguous step ranges into per-chunk slots and a single in-order
  // reduction fills the table; the result never depends on scheduling.
  const unsigned long long chunk_size = 2048;
  const std::size_t chunk_count = static_cast<std::size_t>((total + chunk_size - 1) / chunk_size);
  using ChunkEntry = std::pair<FineDegree, std::map<int, long>>;
  std::vector<std::vector<ChunkEntry>> chunks(chunk_count);

  parallel_for(chunk_count, [&](std::size_t ci) {
    const unsigned long long begin = ci * chunk_size;
    const unsigned long long end = std::min(total, begin + chunk_size);

    // mixed-radix decode of the first step; coordinate 0 moves fastest
    FineDegree a(static_cast<std::size_t>(n), 0);
    unsigned long long rem = begin;
    for (int v = 0; v < n && rem > 0; ++v) {
      unsigned long long radix = static_cast<unsigned long long>(caps[static_cast<std::size_t>(v)]) + 1;
      a[static_cast<std::size_t>(v)] = static_cast<int>(rem % radix);
      rem /= radix;
    }

    std::vector<int> support;
    std::vector<int> position_in_support(static_cast<std::size_t>(n), -1);
    for (unsigned long long step = begin; step < end; ++step) {
      if (step > begin) {
        for (int v = 0;; ++v) {
          if (a[static_cast<std::size_t>(v)] < caps[static_cast<std::size_t>(v)]) {
            ++a[static_cast<std::size_t>(v)];
            break;
          }
          a[static_cast<std::size_t>(v)] = 0;
        }
      }

      support.clear();
      for (int v = 0; v < n; ++v)
        if (a[static_cast<std::size_t>(v)] > 0) {
          position_in_support[static_cast<std::size_t>(v)] = static_cast<int>(support.size());
          support.push_back(v);
        } else {
          position_in_support[static_cast<std::size_t>(v)] = -1;
        }
      if (support.empty()) continue;
      if (support.size() > 24) throw resource_error("degree support too wide for the subset scan");

      // sigma is a face exactly when x^a / x^sigma still lies in the ideal.
      auto in_ideal = [&](Mask sigma) {
        for (const FineDegree* g : gen_exps) {
          bool divides = true;
          for (int v = 0; v < n && divides; ++v) {
            int available = a[static_cast<std::size_t>(v)];
            int p = position_in_support[static_cast<std::size_t>(v)];
            if (p >= 0 && (sigma >> p & 1)) --available;
            divides = (*g)[static_cast<std::size_t>(v)] <= available;
          }
          if (divides) return true;
        }
        return false;
      };

      if (!in_ideal(0)) continue;  // the subset complex is empty
      std::vector<Mask> faces;
      for (Mask sigma = 0; sigma < (Mask(1) << support.size()); ++sigma)
        if (in_ideal(sigma)) faces.push_back(sigma);

      std::map<int, long> dims = homology_of_faces(faces, field);
      if (dims.empty()) continue;

      bool divides_lcm = true;
      for (int v = 0; v < n; ++v)
        divides_lcm = divides_lcm &&
                      a[static_cast<std::size_t>(v)] <= lcm[static_cast<std::size_t>(v)];
      if (!divides_lcm)
        throw property_error("resolution degree outside the generator lcm at " + degree_str(a));

      chunks[ci].emplace_back(a, std::move(dims));
    }
  });

  for (const auto& chunk : chunks)
    for (const auto& [degree, dims] : chunk)
      for (const auto& [hdeg, dim] : dims) table.add(hdeg + 2, degree, dim);
  return table;
}

BettiTable stable_betti_formula(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw input_error("the closed-form Betti table is not defined for the unit ideal");
  if (!ideal.is_zero() && !is_color_squarefree_stable_across_colors(ideal))
    throw input_error("the closed-form Betti table needs the across-colors stability property");

  const RingSignature& sig = ideal.signature();
  const std::size_t n = static_cast<std::size_t>(sig.total_variables());
  BettiTable table(sig, Grading::Fine);
  table.add(0, zero_degree(n), 1);

  for (const Monomial& u : ideal.generators()) {
    std::vector<Variable> quotient = sm(u);
    if (quotient.size() > 24) throw resource_error("quotient set too large to enumerate subsets");
    for (Mask sigma = 0; sigma < (Mask(1) << quotient.size()); ++sigma) {
      FineDegree degree = u.exponents();
      int size = 0;
      for (std::size_t p = 0; p < quotient.size(); ++p)
        if (sigma >> p & 1) {
          degree[static_cast<std::size_t>(sig.var_id(quotient[p]))] += 1;
          ++size;
        }
      table.add(size + 1, degree, 1);
    }
  }
  return table;
}

BettiTable mapping_cone_betti_polarized(const MonomialIdeal& csf_ideal, const FieldConfig& field) {
  if (!csf_ideal.is_color_squarefree())
    throw input_error("the iterated-cone table needs a color-squarefree ideal");
  const RingSignature& base = csf_ideal.signature();
  RingSignature ext = base.extended();

  MonomialIdeal inner_base =
      csf_ideal.in_signature(ext).plus(same_color_pairs(base).in_signature(ext));

  BettiTable table(ext, Grading::Fine);
  for (const Monomial& u : color_squarefree_monomials(base)) {
    Monomial lifted = u.in_signature(ext);
    FineDegree shift = lifted.exponents();
    for (int color : u.color_support())
      shift[static_cast<std::size_t>(ext.var_id({color, base.count(color) + 1}))] += 1;

    BettiTable inner = koszul_betti(inner_base.colon(lifted), field);
    for (const auto& [k, row] : inner.entries())
      for (const auto& [degree, mult] : row) {
        FineDegree shifted = degree;
        for (std::size_t v = 0; v < shifted.size(); ++v) shifted[v] += shift[v];
        table.add(k + u.degree(), shifted, mult);
      }
  }
  return table;
}

BettiTable mapping_cone_betti_squares(const MonomialIdeal& csf_ideal, const FieldConfig& field) {
  if (!csf_ideal.is_color_squarefree())
    throw input_error("the iterated-cone table needs a color-squarefree ideal");
  const RingSignature& base = csf_ideal.signature();

  MonomialIdeal inner_base = csf_ideal.plus(same_color_pairs(base));

  BettiTable table(base, Grading::Fine);
  for (const Monomial& u : color_squarefree_monomials(base)) {
    BettiTable inner = koszul_betti(inner_base.colon(u), field);
    for (const auto& [k, row] : inner.entries())
      for (const auto& [degree, mult] : row) {
        FineDegree shifted = degree;
        for (std::size_t v = 0; v < shifted.size(); ++v)
          shifted[v] += 2 * u.exponents()[v];
        table.add(k + u.degree(), shifted, mult);
      }
  }
  return table;
}

namespace {

using KPoly = std::map<FineDegree, long long>;

void kpoly_accumulate(KPoly& target, const KPoly& source, const FineDegree& shift, int sign,
                      std::size_t& nodes) {
  (void)nodes;
  for (const auto& [degree, coeff] : source) {
    FineDegree key = degree;
    for (std::size_t v = 0; v < key.size(); ++v) key[v] += shift[v];
    long long& cell = target[key];
    cell += sign * coeff;
    if (cell == 0) target.erase(key);
  }
}

/// Numerator of the Hilbert series of P/I by splitting off the largest
/// generator g: K(I) = K(I - g) - x^deg(g) * K((I - g) : g).
KPoly kpoly_rec(const MonomialIdeal& ideal, std::size_t& nodes) {
  if (++nodes > (std::size_t(1) << 22))
    throw resource_error("Hilbert numerator recursion exceeded its node budget");
  const std::size_t n = static_cast<std::size_t>(ideal.signature().total_variables());
  if (ideal.is_zero()) return {{zero_degree(n), 1}};
  if (ideal.is_unit()) return {};

  std::vector<Monomial> rest_gens(ideal.generators().begin(), ideal.generators().end() - 1);
  const Monomial& g = ideal.generators().back();
  MonomialIdeal rest = MonomialIdeal::minimalize(ideal.signature(), rest_gens);

  KPoly result = kpoly_rec(rest, nodes);
  KPoly colon_part = kpoly_rec(rest.colon(g), nodes);
  kpoly_accumulate(result, colon_part, g.exponents(), -1, nodes);
  return result;
}

}  // namespace

std::map<FineDegree, long long> kpolynomial_fine(const MonomialIdeal& ideal) {
  std::size_t nodes = 0;
  return kpoly_rec(ideal, nodes);
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal, Grading grading, int truncation) {
  if (grading == Grading::Fine)
    throw input_error("the Hilbert series is reported per color (zd) or by total degree (z)");
  if (truncation < 0) throw input_error("negative truncation degree");

  const RingSignature& sig = ideal.signature();
  const int n = sig.total_variables();
  const int d = sig.colors();

  // Guard the verification scan: it enumerates all monomials up to the
  // truncation degree.
  {
    unsigned long long count = 1;
    for (int i = 1; i <= truncation; ++i) {
      count = count * static_cast<unsigned long long>(n + i) / static_cast<unsigned>(i);
      if (count > (1ull << 22))
        throw resource_error("Hilbert verification scan is too large at this truncation");
    }
  }

  HilbertSeries series;
  series.grading = grading;
  series.sig = sig;

  std::map<FineDegree, long long> fine = kpolynomial_fine(ideal);
  std::vector<int> color_of(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) color_of[static_cast<std::size_t>(v)] = sig.var_at(v).color - 1;
  for (const auto& [degree, coeff] : fine) {
    FineDegree key;
    if (grading == Grading::Zd) {
      key.assign(static_cast<std::size_t>(d), 0);
      for (std::size_t v = 0; v < degree.size(); ++v)
        key[static_cast<std::size_t>(color_of[v])] += degree[v];
    } else {
      int total = 0;
      for (int e : degree) total += e;
      key.assign(1, total);
    }
    long long& cell = series.numerator[key];
    cell += coeff;
    if (cell == 0) series.numerator.erase(key);
  }

  if (grading == Grading::Zd)
    series.denominator_exponents = sig.counts();
  else
    series.denominator_exponents = {n};

  // Expand the series up to the truncation degree...
  auto total_of = [](const FineDegree& key) {
    long long t = 0;
    for (int e : key) t += e;
    return t;
  };
  std::map<FineDegree, long long> expansion;
  for (const auto& [key, coeff] : series.numerator)
    if (total_of(key) <= truncation) expansion[key] = coeff;
  std::size_t slots = (grading == Grading::Zd) ? static_cast<std::size_t>(d) : 1;
  for (std::size_t slot = 0; slot < slots; ++slot) {
    int exponent = series.denominator_exponents[slot];
    std::map<FineDegree, long long> next;
    for (const auto& [key, coeff] : expansion) {
      long long base_total = total_of(key);
      for (int k = 0; base_total + k <= truncation; ++k) {
        FineDegree target = key;
        target[slot] += k;
        next[target] += coeff * binomial(exponent - 1 + k, k);
      }
    }
    expansion.clear();
    for (const auto& [key, coeff] : next)
      if (coeff != 0) expansion[key] = coeff;
  }

  // ...and compare against direct monomial counting.
  std::map<FineDegree, long long> counted;
  for (const Monomial& m : monomials_up_to_degree(sig, truncation)) {
    if (ideal.contains(m)) continue;
    FineDegree key;
    if (grading == Grading::Zd) {
      std::vector<int> zd = m.zd_degree();
      key.assign(zd.begin(), zd.end());
    } else {
      key.assign(1, m.degree());
    }
    counted[key] += 1;
  }
  for (auto it = counted.begin(); it != counted.end();)
    it = (it->second == 0) ? counted.erase(it) : std::next(it);

  if (expansion != counted) {
    for (const auto& [key, coeff] : expansion) {
      auto found = counted.find(key);
      long long actual = found == counted.end() ? 0 : found->second;
      if (coeff != actual)
        throw property_error("Hilbert series disagrees with monomial counting at degree " +
                             degree_str(key) + ": series " + std::to_string(coeff) +
                             ", count " + std::to_string(actual));
    }
    for (const auto& [key, count] : counted)
      if (!expansion.count(key))
        throw property_error("Hilbert series disagrees with monomial counting at degree " +
                             degree_str(key) + ": series 0, count " + std::to_string(count));
  }

  return series;
}

HilbertSeries reduce_z_form(const HilbertSeries& series) {
  if (series.grading != Grading::Z)
    throw input_error("h-form reduction applies to the total-degree series");

  int top = 0;
  for (const auto& [key, coeff] : series.numerator) {
    (void)coeff;
    top = std::max(top, key[0]);
  }
  std::vector<long long> coeffs(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& [key, coeff] : series.numerator)
    coeffs[static_cast<std::size_t>(key[0])] = coeff;

  int exponent = series.denominator_exponents.empty() ? 0 : series.denominator_exponents[0];
  while (exponent > 0) {
    long long at_one = 0;
    for (long long c : coeffs) at_one += c;
    if (at_one != 0) break;
    // numerator = (1 - t) * quotient, so the quotient is the prefix sums.
    std::vector<long long> quotient;
    long long run = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size() || (coeffs.size() == 1 && i < 1); ++i) {
      run += coeffs[i];
      quotient.push_back(run);
    }
    while (quotient.size() > 1 && quotient.back() == 0) quotient.pop_back();
    if (quotient.empty()) quotient.push_back(0);
    coeffs = quotient;
    --exponent;
  }

  HilbertSeries reduced;
  reduced.grading = Grading::Z;
  reduced.sig = series.sig;
  reduced.denominator_exponents = {exponent};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) reduced.numerator[{static_cast<int>(i)}] = coeffs[i];
  return reduced;
}

}  // namespace balsq

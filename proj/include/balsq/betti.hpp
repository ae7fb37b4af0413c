#pragma once

#include <map>
#include <string>
#include <vector>

#include "balsq/complex.hpp"
#include "balsq/ideal.hpp"
#include "balsq/linalg.hpp"
#include "balsq/ring.hpp"

namespace balsq {

/// Degree resolution of a Betti table or Hilbert series: one slot per
/// variable, one per color, or total degree only.
enum class Grading { Fine, Zd, Z };

std::string grading_name(Grading grading);
Grading parse_grading(const std::string& text);

/// Betti numbers of a quotient P/I: multiplicity at (homological index k,
/// degree). Degrees have one coordinate per variable (fine), per color (zd),
/// or a single total (z). Zero entries are never stored.
class BettiTable {
 public:
  BettiTable(RingSignature sig, Grading grading);

  const RingSignature& signature() const { return sig_; }
  Grading grading() const { return grading_; }
  std::size_t degree_length() const;

  void add(int k, FineDegree degree, long long multiplicity);
  long long at(int k, const FineDegree& degree) const;
  const std::map<int, std::map<FineDegree, long long>>& entries() const { return entries_; }
  /// Largest homological index with an entry; -1 when the table is empty.
  int max_index() const;
  /// Sum over degrees per homological index, indices 0..max_index.
  std::vector<long long> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  RingSignature sig_;
  Grading grading_;
  std::map<int, std::map<FineDegree, long long>> entries_;
};

/// Sums multiplicities over degree fibers; only fine -> zd -> z moves exist.
BettiTable coarsen(const BettiTable& table, Grading target);

struct BettiDiff {
  int k = 0;
  FineDegree degree;
  long long left = 0;
  long long right = 0;
};

struct DiffReport {
  std::vector<BettiDiff> differences;
  bool empty() const { return differences.empty(); }
};

/// Coarsens both tables to the grading and lists every disagreeing entry.
DiffReport compare_tables(const BettiTable& a, const BettiTable& b, Grading grading);

/// Dimensions of reduced homology over the field, keyed by homological
/// degree (-1 upward); only nonzero dimensions appear.
std::map<int, long> reduced_homology_dims(const SimplicialComplex& complex,
                                          const FieldConfig& field);

/// Fine Betti table of P/I for squarefree I, from the reduced homology of
/// induced subcomplexes of its complex on each squarefree degree.
BettiTable hochster_betti(const MonomialIdeal& ideal, const FieldConfig& field);

struct KoszulOptions {
  /// Also scan degrees beyond the divisors of the generator lcm and check
  /// that all of them vanish (slow; for validation).
  bool widened_scan = false;
};

/// Fine Betti table of P/I for any monomial ideal, from the reduced homology
/// of the subset complexes { sigma : x^a / x^sigma in I } over the divisors
/// a of the generator lcm.
BettiTable koszul_betti(const MonomialIdeal& ideal, const FieldConfig& field,
                        const KoszulOptions& options = {});

/// Closed-form fine Betti table for ideals whose generators can be peeled by
/// linear quotients: beta_{j, deg u + deg sigma} += 1 per generator u and
/// sigma a subset of its quotient variables of size j-1. Requires the
/// across-colors stability predicate.
BettiTable stable_betti_formula(const MonomialIdeal& ideal);

/// Fine Betti table over the extended ring of
/// P'/(J + same-color pairs + sentinel products), assembled from the Betti
/// tables of the colon ideals (J + pairs) : u over all color-squarefree u.
/// J must be a color-squarefree ideal of the base ring.
BettiTable mapping_cone_betti_polarized(const MonomialIdeal& csf_ideal, const FieldConfig& field);

/// Fine Betti table over the base ring of P/(J + same-color squares),
/// assembled the same way with degree shifts 2*deg(u).
BettiTable mapping_cone_betti_squares(const MonomialIdeal& csf_ideal, const FieldConfig& field);

/// Numerator of the fine Hilbert series of P/I over the product of
/// (1 - x_v): the alternating sum over lcms of generator subsets.
std::map<FineDegree, long long> kpolynomial_fine(const MonomialIdeal& ideal);

struct HilbertSeries {
  Grading grading = Grading::Z;
  RingSignature sig;
  /// Keys sized by the grading (d for zd, 1 for z).
  std::map<FineDegree, long long> numerator;
  /// Denominator (1-t_i)^e_i exponents: per color for zd, one entry for z.
  std::vector<int> denominator_exponents;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Hilbert series of the quotient P/I at the requested resolution; the
/// numerator is cross-checked against direct monomial counting up to the
/// truncation degree (errors on mismatch). Grading must be Zd or Z.
HilbertSeries hilbert_series(const MonomialIdeal& ideal, Grading grading, int truncation);

/// Cancels (1-t) factors of a Z-graded series until the numerator no longer
/// divides; the running-example form of the h-polynomial.
HilbertSeries reduce_z_form(const HilbertSeries& series);

}  // namespace balsq

// Acceptance checks for the worked example and the property batteries, one
// budgeted criterion per line. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "balsq/betti.hpp"
#include "balsq/complex.hpp"
#include "balsq/ideal.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"
#include "balsq/verify.hpp"
#include "fixtures.hpp"

using namespace balsq;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool run_batteries(const std::vector<std::string>& names, std::string& detail) {
  for (const std::string& name : names) {
    VerifyOptions options;
    options.property = name;
    std::vector<BatteryResult> results = run_verify(options);
    for (const BatteryResult& result : results)
      if (result.outcome != BatteryOutcome::Pass) {
        detail = result.name + ": " + outcome_name(result.outcome) + " " + result.detail;
        return false;
      }
  }
  return true;
}

SimplicialComplex::Mask face_of(const SimplicialComplex& complex, int l1, int l2, int l3) {
  return (SimplicialComplex::Mask(1) << complex.vertex_id({1, l1})) |
         (SimplicialComplex::Mask(1) << complex.vertex_id({2, l2})) |
         (SimplicialComplex::Mask(1) << complex.vertex_id({3, l3}));
}

bool facets_criterion(std::string& detail) {
  OrderIdeal u = fixtures::shifted_triple();
  if (u.size() != 11) {
    detail = "expected 11 members, got " + std::to_string(u.size());
    return false;
  }
  SimplicialComplex complex = balanced_squeezed_complex(u);
  const std::vector<std::vector<int>> expected_labels = {
      {3, 3, 3}, {1, 3, 3}, {2, 3, 3}, {3, 1, 3}, {3, 2, 3}, {3, 3, 1},
      {3, 3, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 2, 2}};
  std::set<SimplicialComplex::Mask> expected;
  for (const auto& f : expected_labels) expected.insert(face_of(complex, f[0], f[1], f[2]));
  std::set<SimplicialComplex::Mask> actual(complex.facets().begin(), complex.facets().end());
  if (actual != expected) {
    detail = "facet sets differ";
    return false;
  }
  return true;
}

bool flag_criterion(std::string& detail) {
  OrderIdeal u = fixtures::shifted_triple();
  SimplicialComplex complex = balanced_squeezed_complex(u);
  FlagVector fh = flag_h_vector(complex);
  for (unsigned S = 0; S < 8; ++S) {
    long long expected = __builtin_popcount(S) == 1 ? 2 : 1;
    if (fh.counts.at(S) != expected) {
      detail = "flag h entry differs at mask " + std::to_string(S);
      return false;
    }
  }
  if (coarse_vector(fh) != std::vector<long long>{1, 6, 3, 1}) {
    detail = "coarse h-vector differs";
    return false;
  }
  std::vector<long long> f = f_vector(complex);
  if (f.size() != 4 || f[3] != static_cast<long long>(u.size())) {
    detail = "top face count does not equal the member count";
    return false;
  }
  return true;
}

bool nonface_criterion(std::string& detail) {
  OrderIdeal u = fixtures::shifted_triple();
  MonomialIdeal formula = sr_ideal_formula(u);
  if (fixtures::generator_strings(formula) != fixtures::triple_nonface_generators()) {
    detail = "generator list differs from the expected eighteen";
    return false;
  }
  if (formula != stanley_reisner_ideal(balanced_squeezed_complex(u))) {
    detail = "closed form differs from the minimal non-face scan";
    return false;
  }
  return true;
}

bool gin_criterion(std::string& detail) {
  MonomialIdeal gin = gin_formula(fixtures::shifted_triple());
  if (fixtures::generator_strings(gin) != fixtures::triple_gin_generators()) {
    detail = "generator list differs from the expected eighteen";
    return false;
  }
  int squarefree = 0, squares = 0;
  for (const Monomial& g : gin.generators()) (g.is_squarefree() ? squarefree : squares) += 1;
  if (squarefree != 12 || squares != 6) {
    detail = "expected 12 squarefree + 6 square generators";
    return false;
  }
  return true;
}

bool table_criterion(std::string& detail) {
  MonomialIdeal sr = sr_ideal_formula(fixtures::shifted_triple());
  BettiTable z = coarsen(koszul_betti(sr, FieldConfig::rationals()), Grading::Z);
  if (z.totals() != std::vector<long long>{1, 18, 56, 79, 60, 24, 4}) {
    detail = "totals differ";
    return false;
  }
  const std::vector<std::vector<long long>> strands = {
      {1}, {0, 18, 53, 69, 48, 18, 3}, {0, 0, 3, 9, 9, 3, 0}, {0, 0, 0, 1, 3, 3, 1}};
  for (int r = 0; r < static_cast<int>(strands.size()); ++r)
    for (int k = 0; k < static_cast<int>(strands[static_cast<std::size_t>(r)].size()); ++k)
      if (z.at(k, {k + r}) != strands[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]) {
        detail = "strand " + std::to_string(r) + " differs at index " + std::to_string(k);
        return false;
      }
  return true;
}

bool equalities_criterion(std::string& detail) {
  // the worked example first
  OrderIdeal u = fixtures::shifted_triple();
  FieldConfig q = FieldConfig::rationals();
  BettiTable sr_table = koszul_betti(sr_ideal_formula(u), q);
  BettiTable gin_table = koszul_betti(gin_formula(u), q);
  if (!compare_tables(sr_table, gin_table, Grading::Zd).empty()) {
    detail = "sr vs gin tables differ on the worked example";
    return false;
  }
  BettiTable shifted_table =
      koszul_betti(stanley_reisner_ideal(color_shifted_complex(u)), q);
  if (!compare_tables(sr_table, shifted_table, Grading::Z).empty()) {
    detail = "sr vs shifted-companion tables differ on the worked example";
    return false;
  }
  // then every shifted ideal in the standard corpus, via the batteries
  return run_batteries({"compare-gin", "compare-shifted"}, detail);
}

bool formula_criterion(std::string& detail) {
  return run_batteries({"stable-betti", "cone-polarized", "cone-squares", "linquot"}, detail);
}

bool structural_criterion(std::string& detail) {
  return run_batteries({"shifted-stable", "hvector", "vd", "shelling", "comparison",
                        "squeezed-across", "compare-ideal-complex"},
                       detail);
}

bool hochster_criterion(std::string& detail) {
  return run_batteries({"hochster-koszul"}, detail);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"worked-example facets", 1.0, facets_criterion},
      {"flag h-vector and face counts", 1.0, flag_criterion},
      {"non-face ideal closed form", 1.0, nonface_criterion},
      {"initial-ideal closed form", 1.0, gin_criterion},
      {"graded table reproduction", 60.0, table_criterion},
      {"table equalities over the corpus", 600.0, equalities_criterion},
      {"closed formulas vs. scans over the corpus", 600.0, formula_criterion},
      {"structural batteries over the corpus", 600.0, structural_criterion},
      {"homology oracle agreement", 600.0, hochster_criterion},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > criterion.budget_seconds) {
      ok = false;
      detail = "over budget";
    }
    std::printf("[%s] %zu. %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", i + 1, criterion.name.c_str(),
                elapsed, detail.empty() ? "" : (", " + detail).c_str());
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

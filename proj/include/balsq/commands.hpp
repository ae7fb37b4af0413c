#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace balsq {

/// One CLI invocation, fully resolved. Selectors are validated by run_job.
struct JobSpec {
  /// check | complex | decompose | shelling | sr | gin | shift | betti | verify
  std::string command;

  /// Input order ideal: a JSON file path, or an inline monomial list plus
  /// ring shape.
  std::string input_path;
  std::string inline_monomials;
  int inline_d = 0;
  std::vector<int> inline_m;
  /// "divisibility" or "shifted" (closure applied to the seeds).
  std::string closure = "divisibility";

  /// Output format.
  bool json = false;

  /// betti: comma-separated quotient selectors sr | gin | shift | complement.
  std::string targets = "sr";
  /// betti: koszul | hochster | stable | cone-polarized | cone-squares | all.
  std::string method = "koszul";
  /// betti: fine | zd | z.
  std::string grading = "z";
  /// betti + verify: q | gf:<p>.
  std::string field = "q";
  /// betti: report tables in ideal indexing (row k of the ideal = row k+1 of
  /// the quotient).
  bool ideal_indexing = false;

  /// complex: also print the flag vectors.
  bool flag_vectors = false;

  /// verify.
  std::string property = "all";
  long long max_count = 200;
  std::uint64_t seed = 1;
};

/// Executes the job, writing the rendered result to `out`. Returns the
/// process exit code (0 success; verify returns 1 on battery failure and 3
/// when only resource caps were hit). Input and selector problems throw
/// input_error; caps throw resource_error; violated library guarantees throw
/// property_error.
int run_job(const JobSpec& job, std::ostream& out);

}  // namespace balsq

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "balsq/commands.hpp"
#include "balsq/errors.hpp"

namespace {

// BALSQ_THREADS bounds worker parallelism. The degree scan splits into fixed
// chunks reduced in order, so output bytes never depend on the value; it is
// validated here once so every command rejects garbage the same way.
void check_thread_env() {
  const char* raw = std::getenv("BALSQ_THREADS");
  if (raw == nullptr) return;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0)
    throw balsq::input_error("BALSQ_THREADS must be a positive integer, got '" +
                             std::string(raw) + "'");
}

void add_input_options(CLI::App* cmd, balsq::JobSpec& job) {
  cmd->add_option("input", job.input_path, "order-ideal JSON file");
  cmd->add_option("--inline", job.inline_monomials,
                  "inline monomial list, e.g. 'x[1,2]*x[2,2]*x[3,2]'");
  cmd->add_option("--d", job.inline_d, "number of colors for --inline");
  cmd->add_option("--m", job.inline_m, "per-color variable counts for --inline")
      ->delimiter(',');
  cmd->add_option("--closure", job.closure, "closure of the seeds: divisibility | shifted")
      ->check(CLI::IsMember({"divisibility", "shifted"}));
  cmd->add_option("--format", [&job](const std::vector<std::string>& values) {
        job.json = values.back() == "json";
        return true;
      },
      "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"balanced squeezed complexes: construction, decomposition, and Betti numbers"};
  app.require_subcommand(1);
  balsq::JobSpec job;

  CLI::App* check = app.add_subcommand("check", "validate an order ideal and report its stats");
  add_input_options(check, job);

  CLI::App* complex_cmd =
      app.add_subcommand("complex", "facets, f- and h-vector of the balanced complex");
  add_input_options(complex_cmd, job);
  complex_cmd->add_flag("--flag", job.flag_vectors, "also print the flag f- and h-vectors");

  CLI::App* decompose =
      app.add_subcommand("decompose", "vertex-decomposability certificate of the complex");
  add_input_options(decompose, job);

  CLI::App* shelling =
      app.add_subcommand("shelling", "shelling order with restriction faces, verified");
  add_input_options(shelling, job);

  CLI::App* sr = app.add_subcommand("sr", "Stanley-Reisner ideal of the balanced complex");
  add_input_options(sr, job);

  CLI::App* gin = app.add_subcommand("gin", "initial-ideal closed form (shifted input)");
  add_input_options(gin, job);

  CLI::App* shift =
      app.add_subcommand("shift", "color-shifted companion complex and its non-face ideal");
  add_input_options(shift, job);

  CLI::App* betti = app.add_subcommand("betti", "Betti table of a derived quotient");
  add_input_options(betti, job);
  betti->add_option("--target", job.targets,
                    "comma-separated quotients: sr | gin | shift | complement");
  betti->add_option("--method", job.method,
                    "koszul | hochster | stable | cone-polarized | cone-squares | all");
  betti->add_option("--grading", job.grading, "fine | zd | z")
      ->check(CLI::IsMember({"fine", "zd", "z"}));
  betti->add_option("--field", job.field, "q | gf:<p>");
  betti->add_flag("--ideal-indexing", job.ideal_indexing,
                  "report rows in ideal convention (quotient index minus one)");

  CLI::App* verify = app.add_subcommand("verify", "run the property batteries over a corpus");
  verify->add_option("--property", job.property, "battery name, or 'all'");
  verify->add_option("--max-count", job.max_count, "corpus size cap per signature sweep");
  verify->add_option("--seed", job.seed, "sampling seed");
  verify->add_option("--field", job.field, "q | gf:<p>");
  verify->add_option("--format", [&job](const std::vector<std::string>& values) {
        job.json = values.back() == "json";
        return true;
      },
      "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);
  job.command = app.get_subcommands().front()->get_name();

  try {
    check_thread_env();
    return balsq::run_job(job, std::cout);
  } catch (const balsq::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const balsq::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const balsq::property_error& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return 1;
  }
}

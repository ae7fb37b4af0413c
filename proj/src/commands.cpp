#include "balsq/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "balsq/betti.hpp"
#include "balsq/complex.hpp"
#include "balsq/errors.hpp"
#include "balsq/ideal.hpp"
#include "balsq/json_io.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"
#include "balsq/verify.hpp"

namespace balsq {
namespace {

using nlohmann::json;

OrderIdeal resolve_input(const JobSpec& job) {
  if (!job.input_path.empty() && !job.inline_monomials.empty())
    throw input_error("give either an input file or --inline, not both");
  if (!job.input_path.empty()) return load_order_ideal_file(job.input_path).build();
  if (job.inline_monomials.empty())
    throw input_error("command '" + job.command + "' needs an order ideal: pass a file or --inline");
  if (job.inline_d <= 0 || job.inline_m.empty())
    throw input_error("--inline needs the ring shape: --d and --m");
  if (job.closure != "divisibility" && job.closure != "shifted")
    throw input_error("unknown closure '" + job.closure + "' (expected divisibility or shifted)");
  OrderIdealInput input{RingSignature(job.inline_d, job.inline_m), {}, job.closure == "shifted"};
  input.seeds = parse_monomial_list(input.sig, job.inline_monomials);
  return input.build();
}

std::string vector_str(const std::vector<long long>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ")";
  return out.str();
}

std::string yesno(bool value) { return value ? "yes" : "no"; }

void emit(const JobSpec& job, std::ostream& out, const json& doc, const std::string& text) {
  if (job.json)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

int cmd_check(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  MonomialIdeal complement = complement_ideal(ideal);
  const int du = ideal.d_max();
  const int di = complement.d_max();
  const bool bounds_ok = 2 <= di && di <= du + 1;
  const bool shifted = ideal.is_shifted();
  const bool across = ideal.is_shifted_across_colors();
  const bool stable = is_strongly_color_stable(complement);
  const bool stable_across = is_strongly_color_stable_across_colors(complement);

  json doc;
  doc["signature"] = ideal.signature().str();
  doc["members"] = ideal.size();
  doc["degree_histogram"] = ideal.degree_histogram();
  doc["d_max_ideal"] = du;
  doc["shifted"] = shifted;
  doc["shifted_across_colors"] = across;
  doc["complement_generators"] = complement.generator_count();
  doc["d_max_complement"] = di;
  doc["degree_bounds"] = bounds_ok ? "satisfied" : "violated";
  doc["complement_strongly_color_stable"] = stable;
  doc["complement_strongly_color_stable_across_colors"] = stable_across;

  std::ostringstream text;
  text << "signature: " << ideal.signature().str() << "\n"
       << "members: " << ideal.size() << "\n"
       << "members by degree: " << vector_str(ideal.degree_histogram()) << "\n"
       << "d_max(order ideal): " << du << "\n"
       << "shifted: " << yesno(shifted) << "\n"
       << "shifted across colors: " << yesno(across) << "\n"
       << "complement ideal minimal generators: " << complement.generator_count() << "\n"
       << "d_max(complement ideal): " << di << "\n"
       << "degree bounds 2 <= " << di << " <= " << du + 1 << ": "
       << (bounds_ok ? "satisfied" : "violated") << "\n"
       << "complement strongly color-stable: " << yesno(stable) << "\n"
       << "complement strongly color-stable across colors: " << yesno(stable_across) << "\n";
  emit(job, out, doc, text.str());
  if (!bounds_ok)
    throw property_error("complement degree bounds violated: d_max=" + std::to_string(di));
  return 0;
}

int cmd_complex(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  SimplicialComplex complex = balanced_squeezed_complex(ideal);
  std::vector<long long> f = f_vector(complex);
  std::vector<long long> h = h_vector(complex);

  json doc;
  doc["complex"] = complex_to_json(complex);
  doc["f_vector"] = f;
  doc["h_vector"] = h;

  std::ostringstream text;
  text << complex_to_text(complex) << "f-vector: " << vector_str(f) << "\n"
       << "h-vector: " << vector_str(h) << "\n";
  if (job.flag_vectors) {
    FlagVector ff = flag_f_vector(complex);
    FlagVector fh = flag_h_vector(complex);
    doc["flag_f"] = flag_to_json(ff);
    doc["flag_h"] = flag_to_json(fh);
    text << flag_to_text(ff) << flag_to_text(fh);
  }
  emit(job, out, doc, text.str());
  return 0;
}

int cmd_decompose(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  DecompositionTree tree = squeezed_decomposition(ideal);

  json doc;
  doc["vertex_decomposable"] = true;
  doc["nodes"] = tree.node_count();
  doc["tree"] = tree_to_json(tree);

  std::ostringstream text;
  text << "vertex-decomposable: yes (certificate verified, " << tree.node_count() << " nodes)\n"
       << tree_to_text(tree);
  emit(job, out, doc, text.str());
  return 0;
}

int cmd_shelling(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  ShellingOrder shelling = shelling_order(ideal);

  json doc;
  doc["shellable"] = true;
  doc["facets"] = shelling.facets.size();
  doc["shelling"] = shelling_to_json(shelling);

  std::ostringstream text;
  text << "shellable: yes (order verified, " << shelling.facets.size() << " facets)\n"
       << shelling_to_text(shelling);
  emit(job, out, doc, text.str());
  return 0;
}

int cmd_ideal(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  json doc;
  std::ostringstream text;
  if (job.command == "sr") {
    MonomialIdeal sr = sr_ideal_formula(ideal);
    doc["ideal"] = ideal_to_json(sr);
    text << ideal_to_text(sr);
  } else if (job.command == "gin") {
    MonomialIdeal gin = gin_formula(ideal);
    doc["ideal"] = ideal_to_json(gin);
    text << ideal_to_text(gin);
  } else {  // shift
    SimplicialComplex shifted = color_shifted_complex(ideal);
    MonomialIdeal nonfaces = stanley_reisner_ideal(shifted);
    doc["ideal"] = ideal_to_json(nonfaces);
    doc["complex"] = complex_to_json(shifted);
    doc["f_vector"] = f_vector(shifted);
    doc["h_vector"] = h_vector(shifted);
    text << ideal_to_text(nonfaces) << complex_to_text(shifted)
         << "f-vector: " << vector_str(f_vector(shifted)) << "\n"
         << "h-vector: " << vector_str(h_vector(shifted)) << "\n";
  }
  emit(job, out, doc, text.str());
  return 0;
}

struct ComputedTable {
  std::string target;
  std::string method;
  std::string ring;
  std::string quotient_note;
  BettiTable table;
};

MonomialIdeal target_ideal(const std::string& target, const OrderIdeal& ideal) {
  if (target == "sr") return stanley_reisner_ideal(balanced_squeezed_complex(ideal));
  if (target == "gin") return gin_formula(ideal);
  if (target == "shift") return color_polarize(gin_formula(ideal));
  if (target == "complement") return complement_ideal(ideal);
  throw input_error("unknown betti target '" + target +
                    "' (expected sr, gin, shift, or complement)");
}

bool method_applicable(const std::string& method, const MonomialIdeal& ideal, std::string* why) {
  if (method == "koszul") return true;
  if (method == "hochster") {
    if (ideal.is_squarefree()) return true;
    *why = "method hochster needs a squarefree ideal";
    return false;
  }
  if (method == "stable") {
    if (is_color_squarefree_stable_across_colors(ideal)) return true;
    *why = "method stable needs the across-colors exchange property of the generators";
    return false;
  }
  if (method == "cone-polarized" || method == "cone-squares") {
    if (ideal.is_color_squarefree()) return true;
    *why = "method " + method + " needs a color-squarefree ideal";
    return false;
  }
  throw input_error("unknown betti method '" + method +
                    "' (expected koszul, hochster, stable, cone-polarized, cone-squares, or all)");
}

ComputedTable compute_table(const std::string& target, const std::string& method,
                            const MonomialIdeal& ideal, const FieldConfig& field) {
  if (method == "koszul")
    return {target, method, ideal.signature().str(), "", koszul_betti(ideal, field)};
  if (method == "hochster")
    return {target, method, ideal.signature().str(), "", hochster_betti(ideal, field)};
  if (method == "stable")
    return {target, method, ideal.signature().str(), "", stable_betti_formula(ideal)};
  if (method == "cone-polarized")
    return {target, method, ideal.signature().extended().str(),
            "quotient includes the same-color pair and sentinel-product closure",
            mapping_cone_betti_polarized(ideal, field)};
  // cone-squares
  return {target, method, ideal.signature().str(),
          "quotient includes the same-color squares",
          mapping_cone_betti_squares(ideal, field)};
}

int cmd_betti(const JobSpec& job, std::ostream& out) {
  OrderIdeal ideal = resolve_input(job);
  Grading grading = parse_grading(job.grading);
  FieldConfig field = FieldConfig::parse(job.field);

  std::vector<std::string> targets;
  {
    std::string token;
    std::istringstream stream(job.targets);
    while (std::getline(stream, token, ','))
      if (!token.empty()) targets.push_back(token);
  }
  if (targets.empty()) throw input_error("no betti target given");

  std::vector<ComputedTable> tables;
  for (const std::string& target : targets) {
    MonomialIdeal quotient = target_ideal(target, ideal);
    if (job.method == "all") {
      // Every applicable method that presents the same quotient; the cone
      // assemblies change the quotient, so they are explicit-only.
      for (const std::string& method : {"koszul", "hochster", "stable"}) {
        std::string why;
        if (method_applicable(method, quotient, &why))
          tables.push_back(compute_table(target, method, quotient, field));
      }
    } else {
      std::string why;
      if (!method_applicable(job.method, quotient, &why))
        throw input_error(why + "; target '" + target + "' has generators " +
                          ideal_to_text(quotient));
      tables.push_back(compute_table(target, job.method, quotient, field));
    }
  }

  const int shift = job.ideal_indexing ? -1 : 0;
  json doc;
  doc["grading"] = grading_name(grading);
  doc["field"] = field.str();
  doc["tables"] = json::array();
  std::ostringstream text;
  std::vector<BettiTable> coarse;
  for (const ComputedTable& entry : tables) {
    BettiTable at_grading = coarsen(entry.table, grading);
    coarse.push_back(at_grading);
    json table_doc;
    table_doc["target"] = entry.target;
    table_doc["method"] = entry.method;
    table_doc["ring"] = entry.ring;
    if (!entry.quotient_note.empty()) table_doc["note"] = entry.quotient_note;
    table_doc["betti"] = betti_to_json(at_grading, shift);
    doc["tables"].push_back(table_doc);

    text << "target " << entry.target << ", method " << entry.method << ", ring " << entry.ring;
    if (!entry.quotient_note.empty()) text << " (" << entry.quotient_note << ")";
    text << ":\n" << betti_to_text(at_grading, shift) << "\n";
  }

  if (tables.size() > 1) {
    bool agree = true;
    json comparisons = json::array();
    std::ostringstream diff_text;
    for (std::size_t a = 0; a + 1 < tables.size(); ++a) {
      for (std::size_t b = a + 1; b < tables.size(); ++b) {
        std::string left = tables[a].target + "/" + tables[a].method;
        std::string right = tables[b].target + "/" + tables[b].method;
        DiffReport report = compare_tables(coarse[a], coarse[b], grading);
        json cmp;
        cmp["left"] = left;
        cmp["right"] = right;
        cmp["differences"] = report.differences.size();
        comparisons.push_back(cmp);
        if (!report.empty()) {
          agree = false;
          diff_text << left << " vs " << right << ": " << report.differences.size()
                    << " differing entries\n";
        }
      }
    }
    doc["comparisons"] = comparisons;
    doc["agree"] = agree;
    if (agree)
      text << "all methods agree\n";
    else
      text << diff_text.str();
  }
  emit(job, out, doc, text.str());
  return 0;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  VerifyOptions options;
  options.property = job.property;
  options.max_count = job.max_count;
  options.seed = job.seed;
  options.field = FieldConfig::parse(job.field);
  std::vector<BatteryResult> results = run_verify(options);

  int failed = 0;
  int capped = 0;
  json doc;
  doc["batteries"] = json::array();
  std::ostringstream text;
  std::size_t width = 0;
  for (const BatteryResult& result : results) width = std::max(width, result.name.size());
  for (const BatteryResult& result : results) {
    json entry;
    entry["name"] = result.name;
    entry["outcome"] = outcome_name(result.outcome);
    entry["checked"] = result.checked;
    if (!result.detail.empty()) entry["detail"] = result.detail;
    doc["batteries"].push_back(entry);

    text << std::left << std::setw(static_cast<int>(width) + 2) << result.name
         << outcome_name(result.outcome) << "  checked=" << result.checked;
    if (!result.detail.empty()) text << "  " << result.detail;
    text << "\n";
    if (result.outcome == BatteryOutcome::Fail) ++failed;
    if (result.outcome == BatteryOutcome::Resource) ++capped;
  }
  json summary;
  summary["passed"] = results.size() - failed - capped;
  summary["failed"] = failed;
  summary["resource_capped"] = capped;
  doc["summary"] = summary;
  text << "summary: " << results.size() - failed - capped << " passed, " << failed << " failed, "
       << capped << " resource-capped\n";
  emit(job, out, doc, text.str());
  if (failed > 0) return 1;
  if (capped > 0) return 3;
  return 0;
}

}  // namespace

int run_job(const JobSpec& job, std::ostream& out) {
  if (job.command == "check") return cmd_check(job, out);
  if (job.command == "complex") return cmd_complex(job, out);
  if (job.command == "decompose") return cmd_decompose(job, out);
  if (job.command == "shelling") return cmd_shelling(job, out);
  if (job.command == "sr" || job.command == "gin" || job.command == "shift")
    return cmd_ideal(job, out);
  if (job.command == "betti") return cmd_betti(job, out);
  if (job.command == "verify") return cmd_verify(job, out);
  throw input_error("unknown command '" + job.command + "'");
}

}  // namespace balsq

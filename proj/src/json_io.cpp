#include "balsq/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "balsq/errors.hpp"

namespace balsq {

using nlohmann::json;

OrderIdeal OrderIdealInput::build() const {
  return shifted_closure ? OrderIdeal::smallest_shifted_closure(sig, seeds)
                         : OrderIdeal::from_monomials(sig, seeds);
}

namespace {

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw input_error(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& value, const char* context) {
  if (!value.is_number_integer())
    throw input_error(std::string("field '") + context + "' must be an integer");
  return value.get<int>();
}

}  // namespace

OrderIdealInput order_ideal_input_from_json(const json& doc) {
  if (!doc.is_object()) throw input_error("order-ideal input must be a JSON object");
  int d = int_field(require_field(doc, "d"), "d");
  const json& m = require_field(doc, "m");
  if (!m.is_array()) throw input_error("field 'm' must be an array of integers");
  std::vector<int> counts;
  for (const json& entry : m) counts.push_back(int_field(entry, "m"));

  OrderIdealInput input;
  input.sig = RingSignature(d, counts);

  const json& monomials = require_field(doc, "monomials");
  if (!monomials.is_array()) throw input_error("field 'monomials' must be an array");
  for (const json& mono : monomials) {
    if (!mono.is_array())
      throw input_error("each monomial must be an array of [color, index] pairs");
    FineDegree exps(static_cast<std::size_t>(input.sig.total_variables()), 0);
    for (const json& factor : mono) {
      if (!factor.is_array() || factor.size() != 2)
        throw input_error("each factor must be a [color, index] pair, got " + factor.dump());
      Variable v{int_field(factor[0], "color"), int_field(factor[1], "index")};
      if (!input.sig.contains(v))
        throw input_error("factor " + factor.dump() + " is outside " + input.sig.str());
      exps[static_cast<std::size_t>(input.sig.var_id(v))] += 1;
    }
    input.seeds.push_back(Monomial(input.sig, exps));
  }

  if (auto it = doc.find("closure"); it != doc.end()) {
    std::string closure = it->get<std::string>();
    if (closure == "shifted")
      input.shifted_closure = true;
    else if (closure == "divisibility")
      input.shifted_closure = false;
    else
      throw input_error("field 'closure' must be \"divisibility\" or \"shifted\", got \"" +
                        closure + "\"");
  }
  return input;
}

OrderIdealInput load_order_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw input_error("JSON parse error in '" + path + "': " + err.what());
  }
  return order_ideal_input_from_json(doc);
}

std::vector<Monomial> parse_monomial_list(const RingSignature& sig, const std::string& text) {
  std::vector<Monomial> out;
  std::string token;
  auto flush = [&]() {
    if (!token.empty()) {
      out.push_back(Monomial::parse(sig, token));
      token.clear();
    }
  };
  int depth = 0;  // commas inside x[i,j] brackets belong to the factor
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth == 0 && (c == ',' || c == ' ' || c == '\t' || c == '\n'))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

std::string vertex_str(ColoredVertex v) {
  return std::to_string(v.label) + "^(" + std::to_string(v.color) + ")";
}

namespace {

std::vector<ColoredVertex> face_vertices(const SimplicialComplex& complex,
                                         SimplicialComplex::Mask face) {
  std::vector<ColoredVertex> vs;
  for (int id = 0; id < complex.vertex_signature().total_variables(); ++id)
    if (face >> id & 1) vs.push_back(complex.vertex_at(id));
  return vs;
}

std::string face_str(const SimplicialComplex& complex, SimplicialComplex::Mask face) {
  std::vector<ColoredVertex> vs = face_vertices(complex, face);
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += vertex_str(vs[i]);
  }
  return out + "}";
}

std::string color_set_key(unsigned mask) {
  std::string key;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1) {
      if (!key.empty()) key += ",";
      key += std::to_string(i + 1);
    }
  return key;
}

}  // namespace

json monomial_to_json(const Monomial& m) {
  json factors = json::array();
  for (const auto& [v, e] : m.factors())
    for (int rep = 0; rep < e; ++rep) factors.push_back({v.color, v.index});
  return factors;
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(g.str());
  return json{{"ring", ideal.signature().str()}, {"generators", gens}};
}

json complex_to_json(const SimplicialComplex& complex) {
  json vertices = json::array();
  for (int id = 0; id < complex.vertex_signature().total_variables(); ++id) {
    ColoredVertex v = complex.vertex_at(id);
    vertices.push_back({v.color, v.label});
  }
  json facets = json::array();
  for (SimplicialComplex::Mask facet : complex.facets()) {
    json face = json::array();
    for (int id = 0; id < complex.vertex_signature().total_variables(); ++id)
      if (facet >> id & 1) face.push_back(id);
    facets.push_back(face);
  }
  return json{{"universe", complex.vertex_signature().str()},
              {"vertices", vertices},
              {"facets", facets},
              {"dim", complex.dim()},
              {"pure", complex.is_pure()},
              {"balanced", complex.is_balanced()}};
}

json flag_to_json(const FlagVector& flag) {
  json counts = json::object();
  for (const auto& [mask, value] : flag.counts) counts[color_set_key(mask)] = value;
  return json{{"kind", std::string(1, flag.kind)}, {"counts", counts}};
}

json tree_to_json(const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::VoidLeaf: return json{{"kind", "void"}};
    case DecompositionTree::Kind::EmptyLeaf: return json{{"kind", "empty"}};
    case DecompositionTree::Kind::Node:
      return json{{"kind", "node"},
                  {"vertex", {tree.vertex.color, tree.vertex.label}},
                  {"link", tree_to_json(*tree.link)},
                  {"deletion", tree_to_json(*tree.deletion)}};
  }
  throw input_error("unknown tree node kind");
}

json shelling_to_json(const ShellingOrder& shelling) {
  auto faces_json = [&](const std::vector<SimplicialComplex::Mask>& faces) {
    json out = json::array();
    for (SimplicialComplex::Mask face : faces) {
      json one = json::array();
      for (int id = 0; id < shelling.vertex_sig.total_variables(); ++id)
        if (face >> id & 1) {
          Variable v = shelling.vertex_sig.var_at(id);
          one.push_back({v.color, v.index});
        }
      out.push_back(one);
    }
    return out;
  };
  return json{{"universe", shelling.vertex_sig.str()},
              {"facets", faces_json(shelling.facets)},
              {"restrictions", faces_json(shelling.restrictions)}};
}

json betti_to_json(const BettiTable& table, int index_shift) {
  json entries = json::array();
  for (const auto& [k, row] : table.entries()) {
    if (k + index_shift < 0) continue;
    for (const auto& [degree, value] : row)
      entries.push_back({{"k", k + index_shift}, {"degree", degree}, {"value", value}});
  }
  json totals = json::array();
  std::vector<long long> sums = table.totals();
  for (std::size_t k = static_cast<std::size_t>(-index_shift); k < sums.size(); ++k)
    totals.push_back(sums[k]);
  return json{{"ring", table.signature().str()},
              {"grading", grading_name(table.grading())},
              {"entries", entries},
              {"totals", totals}};
}

json hilbert_to_json(const HilbertSeries& series) {
  json numerator = json::array();
  for (const auto& [degree, coeff] : series.numerator)
    numerator.push_back({{"degree", degree}, {"coeff", coeff}});
  return json{{"ring", series.sig.str()},
              {"grading", grading_name(series.grading)},
              {"numerator", numerator},
              {"denominator_exponents", series.denominator_exponents}};
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "ideal of " << ideal.signature().str() << ", " << ideal.generator_count()
      << " minimal generators:\n";
  for (const Monomial& g : ideal.generators()) out << "  " << g.str() << "\n";
  return out.str();
}

std::string complex_to_text(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "complex on " << complex.vertex_signature().str() << ": dim " << complex.dim() << ", "
      << complex.facet_count() << " facets"
      << (complex.is_pure() ? ", pure" : ", not pure")
      << (complex.is_balanced() ? ", balanced" : ", not balanced") << "\n";
  for (SimplicialComplex::Mask facet : complex.facets())
    out << "  " << face_str(complex, facet) << "\n";
  return out.str();
}

std::string flag_to_text(const FlagVector& flag) {
  std::ostringstream out;
  out << "flag " << flag.kind << "-vector:\n";
  for (const auto& [mask, value] : flag.counts) {
    std::string key = color_set_key(mask);
    out << "  S={" << key << "}: " << value << "\n";
  }
  return out.str();
}

namespace {

void tree_text_rec(const DecompositionTree& tree, int depth, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (tree.kind) {
    case DecompositionTree::Kind::VoidLeaf: out << pad << "void\n"; return;
    case DecompositionTree::Kind::EmptyLeaf: out << pad << "empty\n"; return;
    case DecompositionTree::Kind::Node:
      out << pad << "shed " << vertex_str(tree.vertex) << "\n";
      out << pad << "link:\n";
      tree_text_rec(*tree.link, depth + 1, out);
      out << pad << "deletion:\n";
      tree_text_rec(*tree.deletion, depth + 1, out);
      return;
  }
}

}  // namespace

std::string tree_to_text(const DecompositionTree& tree) {
  std::ostringstream out;
  out << "shedding tree, " << tree.node_count() << " nodes:\n";
  tree_text_rec(tree, 1, out);
  return out.str();
}

std::string shelling_to_text(const ShellingOrder& shelling) {
  std::ostringstream out;
  out << "shelling order on " << shelling.vertex_sig.str() << ", " << shelling.facets.size()
      << " facets:\n";
  auto face_text = [&](SimplicialComplex::Mask face) {
    std::string s = "{";
    bool first = true;
    for (int id = 0; id < shelling.vertex_sig.total_variables(); ++id)
      if (face >> id & 1) {
        Variable v = shelling.vertex_sig.var_at(id);
        if (!first) s += ", ";
        s += vertex_str({v.color, v.index});
        first = false;
      }
    return s + "}";
  };
  for (std::size_t i = 0; i < shelling.facets.size(); ++i)
    out << "  " << (i + 1) << ". " << face_text(shelling.facets[i]) << "  restriction "
        << face_text(shelling.restrictions[i]) << "\n";
  return out.str();
}

std::string betti_to_text(const BettiTable& table, int index_shift) {
  std::ostringstream out;
  out << "betti table (" << grading_name(table.grading()) << " grading) of "
      << table.signature().str() << ":\n";

  BettiTable z = coarsen(table, Grading::Z);
  int top_k = z.max_index();
  int shown_min_k = std::max(0, -index_shift);
  if (top_k < shown_min_k) {
    out << "  (empty table)\n";
    return out.str();
  }

  // Strands are keyed by the displayed homological index, so the ideal
  // convention keeps row = degree - shown index.
  int max_strand = 0;
  int min_strand = 0;
  bool any = false;
  for (const auto& [k, row] : z.entries())
    for (const auto& [degree, value] : row) {
      (void)value;
      if (k < shown_min_k) continue;
      int r = degree[0] - k - index_shift;
      max_strand = std::max(max_strand, r);
      min_strand = any ? std::min(min_strand, r) : r;
      any = true;
    }

  int columns = top_k - shown_min_k + 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header, total_row;
  header.push_back("");
  total_row.push_back("total:");
  std::vector<long long> sums = z.totals();
  for (int k = shown_min_k; k <= top_k; ++k) {
    header.push_back(std::to_string(k + index_shift));
    total_row.push_back(std::to_string(sums[static_cast<std::size_t>(k)]));
  }
  cells.push_back(header);
  cells.push_back(total_row);
  for (int r = min_strand; r <= max_strand; ++r) {
    std::vector<std::string> row;
    row.push_back(std::to_string(r) + ":");
    for (int k = shown_min_k; k <= top_k; ++k) {
      long long value = z.at(k, {k + index_shift + r});
      row.push_back(value == 0 ? "." : std::to_string(value));
    }
    cells.push_back(row);
  }

  std::vector<std::size_t> widths(static_cast<std::size_t>(columns) + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  for (const auto& row : cells) {
    out << " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << ' ' << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  }

  if (table.grading() != Grading::Z) {
    out << "entries:\n";
    for (const auto& [k, row] : table.entries()) {
      if (k + index_shift < 0) continue;
      for (const auto& [degree, value] : row) {
        out << "  beta[" << (k + index_shift) << ", (";
        for (std::size_t i = 0; i < degree.size(); ++i) {
          if (i) out << ',';
          out << degree[i];
        }
        out << ")] = " << value << "\n";
      }
    }
  }
  return out.str();
}

std::string hilbert_to_text(const HilbertSeries& series) {
  std::ostringstream out;
  out << "hilbert series (" << grading_name(series.grading) << ") of " << series.sig.str()
      << ":\n  numerator:";
  if (series.numerator.empty()) out << " 0";
  for (const auto& [degree, coeff] : series.numerator) {
    out << " " << (coeff >= 0 ? "+" : "-") << std::abs(coeff) << "*t^(";
    for (std::size_t i = 0; i < degree.size(); ++i) {
      if (i) out << ',';
      out << degree[i];
    }
    out << ")";
  }
  out << "\n  denominator exponents:";
  for (int e : series.denominator_exponents) out << " " << e;
  out << "\n";
  return out.str();
}

}  // namespace balsq

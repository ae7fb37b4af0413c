#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "balsq/betti.hpp"
#include "balsq/complex.hpp"
#include "balsq/ideal.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"

namespace balsq {

/// Parsed order-ideal description: ring shape, seed monomials, and which
/// closure to take of the seeds.
struct OrderIdealInput {
  RingSignature sig;
  std::vector<Monomial> seeds;
  bool shifted_closure = false;

  OrderIdeal build() const;
};

/// Reads { "d": ..., "m": [...], "monomials": [[[color,index],...],...],
/// "closure": "divisibility"|"shifted" }. A monomial is a list of
/// [color, index] factors (repetition = exponent); [] is the monomial 1.
OrderIdealInput order_ideal_input_from_json(const nlohmann::json& doc);
OrderIdealInput load_order_ideal_file(const std::string& path);

/// Splits on commas/whitespace and parses each token as a monomial.
std::vector<Monomial> parse_monomial_list(const RingSignature& sig, const std::string& text);

/// "label^(color)", the notation used for colored vertices.
std::string vertex_str(ColoredVertex v);

nlohmann::json monomial_to_json(const Monomial& m);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
nlohmann::json complex_to_json(const SimplicialComplex& complex);
nlohmann::json flag_to_json(const FlagVector& flag);
nlohmann::json tree_to_json(const DecompositionTree& tree);
nlohmann::json shelling_to_json(const ShellingOrder& shelling);
/// index_shift -1 reports the table in ideal convention (k -> k-1, the
/// homological-index-0 row of the quotient dropped).
nlohmann::json betti_to_json(const BettiTable& table, int index_shift = 0);
nlohmann::json hilbert_to_json(const HilbertSeries& series);

std::string ideal_to_text(const MonomialIdeal& ideal);
std::string complex_to_text(const SimplicialComplex& complex);
std::string flag_to_text(const FlagVector& flag);
std::string tree_to_text(const DecompositionTree& tree);
std::string shelling_to_text(const ShellingOrder& shelling);
/// Total-degree strand grid (header of homological indices, "total:" row,
/// then row r holding the entries of degree k+r); finer gradings append the
/// explicit entry list.
std::string betti_to_text(const BettiTable& table, int index_shift = 0);
std::string hilbert_to_text(const HilbertSeries& series);

}  // namespace balsq

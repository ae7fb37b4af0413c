#pragma once

#include <string>
#include <vector>

#include "balsq/ideal.hpp"
#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"

namespace balsq::fixtures {

// Shifted closure of x[1,2]*x[2,2]*x[3,2] in P(3,(2,2,2)): eleven members,
// degree histogram (1,6,3,1). The worked example used throughout the tests.
inline OrderIdeal shifted_triple() {
  RingSignature sig(3, {2, 2, 2});
  return OrderIdeal::smallest_shifted_closure(sig,
                                              {Monomial::parse(sig, "x[1,2]*x[2,2]*x[3,2]")});
}

// U = {1, x11, x12, x21, x22, x12*x22} in P(2,(2,2)): shifted, d_max 2, and
// its complement ideal is generated in degree two.
inline OrderIdeal two_color_square() {
  RingSignature sig(2, {2, 2});
  return OrderIdeal::from_monomials(sig, {Monomial::parse(sig, "x[1,2]*x[2,2]")});
}

inline MonomialIdeal parse_ideal(const RingSignature& sig,
                                 const std::vector<std::string>& generators) {
  std::vector<Monomial> gens;
  gens.reserve(generators.size());
  for (const std::string& text : generators) gens.push_back(Monomial::parse(sig, text));
  return MonomialIdeal::minimalize(sig, gens);
}

inline std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) out.push_back(g.str());
  return out;
}

// The eighteen minimal non-faces of the complex of shifted_triple(), over
// P(3,(3,3,3)).
inline std::vector<std::string> triple_nonface_generators() {
  return {"x[1,1]*x[1,2]", "x[1,1]*x[1,3]", "x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,1]*x[3,1]",
          "x[1,1]*x[3,2]", "x[1,2]*x[1,3]", "x[1,2]*x[2,1]", "x[1,2]*x[3,1]", "x[2,1]*x[2,2]",
          "x[2,1]*x[2,3]", "x[2,1]*x[3,1]", "x[2,1]*x[3,2]", "x[2,2]*x[2,3]", "x[2,2]*x[3,1]",
          "x[3,1]*x[3,2]", "x[3,1]*x[3,3]", "x[3,2]*x[3,3]"};
}

// The initial-ideal closed form for shifted_triple(): twelve squarefree
// generators plus six squares, over P(3,(3,3,3)).
inline std::vector<std::string> triple_gin_generators() {
  return {"x[1,1]*x[1,1]", "x[1,1]*x[1,2]", "x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,1]*x[3,1]",
          "x[1,1]*x[3,2]", "x[1,2]*x[1,2]", "x[1,2]*x[2,1]", "x[1,2]*x[3,1]", "x[2,1]*x[2,1]",
          "x[2,1]*x[2,2]", "x[2,1]*x[3,1]", "x[2,1]*x[3,2]", "x[2,2]*x[2,2]", "x[2,2]*x[3,1]",
          "x[3,1]*x[3,1]", "x[3,1]*x[3,2]", "x[3,2]*x[3,2]"};
}

// Complement ideal of two_color_square(): nine generators, all of degree 2.
inline std::vector<std::string> square_complement_generators() {
  return {"x[1,1]*x[1,1]", "x[1,1]*x[1,2]", "x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,2]*x[1,2]",
          "x[1,2]*x[2,1]", "x[2,1]*x[2,1]", "x[2,1]*x[2,2]", "x[2,2]*x[2,2]"};
}

}  // namespace balsq::fixtures

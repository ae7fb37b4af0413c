#include "doctest.h"

#include <algorithm>

#include "balsq/complex.hpp"
#include "balsq/ideal.hpp"
#include "fixtures.hpp"

using namespace balsq;
using fixtures::parse_ideal;

TEST_CASE("minimalize keeps a divisibility antichain") {
  RingSignature sig(2, {2, 2});
  MonomialIdeal ideal = parse_ideal(sig, {"x[1,1]", "x[1,1]*x[2,1]", "x[2,1]*x[2,2]"});
  CHECK(ideal.generator_count() == 2);
  CHECK(ideal.contains(Monomial::parse(sig, "x[1,1]*x[2,2]")));
  CHECK_FALSE(ideal.contains(Monomial::parse(sig, "x[2,1]")));
  CHECK_FALSE(ideal.is_zero());
  CHECK(MonomialIdeal(sig).is_zero());
  CHECK(parse_ideal(sig, {"1"}).is_unit());
  CHECK(ideal.d_max() == 2);
  CHECK_THROWS_AS(MonomialIdeal(sig).d_max(), input_error);
}

TEST_CASE("colon sum restriction and extension") {
  RingSignature sig(2, {2, 2});
  MonomialIdeal ideal = parse_ideal(sig, {"x[1,1]*x[1,1]", "x[2,1]*x[2,1]"});
  MonomialIdeal colon = ideal.colon(Monomial::parse(sig, "x[1,1]"));
  CHECK(colon == parse_ideal(sig, {"x[1,1]", "x[2,1]*x[2,1]"}));

  MonomialIdeal sum = ideal.plus(parse_ideal(sig, {"x[1,1]"}));
  CHECK(sum == parse_ideal(sig, {"x[1,1]", "x[2,1]*x[2,1]"}));

  RingSignature ext = sig.extended();
  MonomialIdeal moved = ideal.in_signature(ext);
  CHECK(moved.signature() == ext);
  CHECK(moved.generator_count() == 2);
  CHECK(moved.restrict_to(sig) == ideal);
  // restriction drops generators that use the extra slot
  MonomialIdeal uses_slot = parse_ideal(ext, {"x[1,3]", "x[1,1]*x[2,1]"});
  CHECK(uses_slot.restrict_to(sig) == parse_ideal(sig, {"x[1,1]*x[2,1]"}));
  CHECK_THROWS_AS(uses_slot.in_signature(sig), input_error);
}

TEST_CASE("squarefree flavors of ideals") {
  RingSignature sig(2, {2, 2});
  CHECK(parse_ideal(sig, {"x[1,1]*x[2,1]"}).is_color_squarefree());
  CHECK(parse_ideal(sig, {"x[1,1]*x[1,2]"}).is_squarefree());
  CHECK_FALSE(parse_ideal(sig, {"x[1,1]*x[1,2]"}).is_color_squarefree());
  CHECK_FALSE(parse_ideal(sig, {"x[1,1]*x[1,1]"}).is_squarefree());
}

TEST_CASE("helper ideals of a signature") {
  RingSignature sig(2, {2, 2});
  CHECK(fixtures::generator_strings(same_color_pairs(sig)) ==
        std::vector<std::string>{"x[1,1]*x[1,2]", "x[2,1]*x[2,2]"});
  CHECK(same_color_squares(sig).generator_count() == 6);  // all degree-2 one-color monomials
  MonomialIdeal sentinels = sentinel_times_variables(sig);
  CHECK(sentinels.signature() == sig.extended());
  CHECK(fixtures::generator_strings(sentinels) ==
        std::vector<std::string>{"x[1,1]*x[1,3]", "x[1,2]*x[1,3]", "x[2,1]*x[2,3]",
                                 "x[2,2]*x[2,3]"});
}

TEST_CASE("complement of the square example matches the worked list") {
  MonomialIdeal complement = complement_ideal(fixtures::two_color_square());
  CHECK(fixtures::generator_strings(complement) == fixtures::square_complement_generators());
  CHECK(complement.d_max() == 2);
  CHECK(is_strongly_color_stable(complement));
  CHECK(is_strongly_color_stable_across_colors(complement));
  CHECK(fixtures::generator_strings(csf_generator_part(complement)) ==
        std::vector<std::string>{"x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,2]*x[2,1]"});

  // tiny sanity case: the full one-variable ideal leaves only the square
  RingSignature tiny(1, {1});
  OrderIdeal full = OrderIdeal::from_monomials(tiny, {});
  CHECK(fixtures::generator_strings(complement_ideal(full)) ==
        std::vector<std::string>{"x[1,1]*x[1,1]"});
}

TEST_CASE("non-face ideal formula matches the minimal non-face scan") {
  OrderIdeal u = fixtures::shifted_triple();
  MonomialIdeal formula = sr_ideal_formula(u);
  CHECK(fixtures::generator_strings(formula) == fixtures::triple_nonface_generators());
  CHECK(formula == stanley_reisner_ideal(balanced_squeezed_complex(u)));
  CHECK(formula.is_squarefree());

  MonomialIdeal small = sr_ideal_formula(fixtures::two_color_square());
  CHECK(small == stanley_reisner_ideal(balanced_squeezed_complex(fixtures::two_color_square())));

  // the formula needs at least two colors
  RingSignature line(1, {2});
  OrderIdeal i1 = OrderIdeal::from_monomials(line, {});
  CHECK_THROWS_AS(sr_ideal_formula(i1), input_error);
}

TEST_CASE("complexes and squarefree ideals convert both ways") {
  OrderIdeal u = fixtures::two_color_square();
  SimplicialComplex complex = balanced_squeezed_complex(u);
  MonomialIdeal nonfaces = stanley_reisner_ideal(complex);
  CHECK(complex_of_ideal(nonfaces) == complex);
  CHECK_THROWS_AS(complex_of_ideal(parse_ideal(u.signature(), {"x[1,1]*x[1,1]"})),
                  input_error);
}

TEST_CASE("square polarization moves squares to the sentinel slot") {
  OrderIdeal u = fixtures::two_color_square();
  MonomialIdeal complement = complement_ideal(u);
  MonomialIdeal mapped = phi_map(complement);
  CHECK(mapped == sr_ideal_formula(u));  // closed form of the same ideal
  RingSignature sig = u.signature();
  // a degree-3 generator with a square is outside the map's domain
  CHECK_THROWS_AS(phi_map(parse_ideal(sig, {"x[1,1]*x[1,1]*x[2,1]"})), input_error);
}

TEST_CASE("initial-ideal closed form requires shiftedness") {
  OrderIdeal u = fixtures::shifted_triple();
  MonomialIdeal gin = gin_formula(u);
  CHECK(fixtures::generator_strings(gin) == fixtures::triple_gin_generators());
  CHECK(gin.signature().str() == "P(3,(3,3,3))");
  int squares = 0;
  for (const Monomial& g : gin.generators()) squares += g.is_squarefree() ? 0 : 1;
  CHECK(squares == 6);

  RingSignature sig(2, {2, 2});
  OrderIdeal skew = OrderIdeal::from_monomials(sig, {Monomial::parse(sig, "x[1,1]*x[2,1]")});
  CHECK_THROWS_AS(gin_formula(skew), input_error);
}

TEST_CASE("index polarization per color") {
  RingSignature sig(2, {2, 2});
  MonomialIdeal ideal = parse_ideal(sig, {"x[1,1]*x[1,1]", "x[1,1]*x[1,2]"});
  CHECK(fixtures::generator_strings(color_polarize(ideal)) ==
        std::vector<std::string>{"x[1,1]*x[1,2]", "x[1,1]*x[1,3]"});
  // identity on color-squarefree ideals, staying in the signature
  MonomialIdeal csf = parse_ideal(sig, {"x[1,1]*x[2,2]"});
  CHECK(color_polarize(csf) == csf);
}

TEST_CASE("color-shifted companion of the triple example") {
  OrderIdeal u = fixtures::shifted_triple();
  SimplicialComplex shifted = color_shifted_complex(u);
  CHECK(stanley_reisner_ideal(shifted) == sr_ideal_formula(u));  // coincide here
  CHECK(h_vector(shifted) == std::vector<long long>{1, 6, 3, 1});
  CHECK(is_color_shifted(shifted));
}

TEST_CASE("smaller-variable sets under the reversed order") {
  RingSignature sig(2, {2, 2});
  Monomial u = Monomial::parse(sig, "x[1,2]*x[2,2]");
  CHECK(min_var(u) == Variable{2, 2});
  std::vector<Variable> s = sm(u);
  CHECK(s == std::vector<Variable>{Variable{1, 1}, Variable{2, 1}});
  CHECK(sm(Monomial::one(sig)).empty());
  CHECK(sm(Monomial::parse(sig, "x[1,1]")).empty());
  CHECK(sm(Monomial::parse(sig, "x[2,1]")) == std::vector<Variable>{Variable{1, 1}, Variable{1, 2}});
}

TEST_CASE("linear quotient peeling emits verified steps") {
  RingSignature sig(2, {2, 2});
  MonomialIdeal stable =
      parse_ideal(sig, {"x[1,1]*x[2,1]", "x[1,1]*x[2,2]", "x[1,2]*x[2,1]"});
  REQUIRE(is_color_squarefree_stable_across_colors(stable));
  auto steps = linear_quotients_order(stable);
  REQUIRE(steps.size() == 3);
  CHECK(steps.front().generator.str() == "x[1,1]*x[2,2]");
  CHECK(steps.front().quotient == std::vector<Variable>{Variable{2, 1}});
  CHECK(steps.back().generator.str() == "x[1,1]*x[2,1]");
  CHECK(steps.back().quotient.empty());
  for (const auto& step : steps) CHECK(step.quotient == sm(step.generator));

  // the peeling refuses ideals without the stability property
  MonomialIdeal unstable = sr_ideal_formula(fixtures::shifted_triple());
  CHECK_FALSE(is_color_squarefree_stable_across_colors(unstable));
  CHECK_THROWS_AS(linear_quotients_order(unstable), input_error);
}

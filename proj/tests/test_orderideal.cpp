#include "doctest.h"

#include <algorithm>
#include <set>

#include "balsq/order_ideal.hpp"
#include "fixtures.hpp"

using namespace balsq;

TEST_CASE("divisibility closure adds divisors, variables, and one") {
  RingSignature sig(2, {2, 2});
  OrderIdeal u = OrderIdeal::from_monomials(sig, {Monomial::parse(sig, "x[1,2]*x[2,2]")});
  CHECK(u.size() == 6);
  CHECK(u.contains(Monomial::one(sig)));
  CHECK(u.contains(Monomial::parse(sig, "x[1,1]")));  // variables always join
  CHECK(u.contains(Monomial::parse(sig, "x[1,2]*x[2,2]")));
  CHECK_FALSE(u.contains(Monomial::parse(sig, "x[1,1]*x[2,1]")));
  CHECK(u.d_max() == 2);
  CHECK(u.degree_histogram() == std::vector<long long>{1, 4, 1});
  CHECK(std::is_sorted(u.monomials().begin(), u.monomials().end()));
}

TEST_CASE("color-squarefree seeds are required") {
  RingSignature sig(2, {2, 2});
  CHECK_THROWS_AS(OrderIdeal::from_monomials(sig, {Monomial::parse(sig, "x[1,1]*x[1,2]")}),
                  input_error);
  CHECK_THROWS_AS(OrderIdeal::from_monomials(sig, {Monomial::parse(sig, "x[1,1]*x[1,1]")}),
                  input_error);
}

TEST_CASE("shifted closure of the triple seed has eleven members") {
  OrderIdeal u = fixtures::shifted_triple();
  CHECK(u.size() == 11);
  CHECK(u.d_max() == 3);
  CHECK(u.degree_histogram() == std::vector<long long>{1, 6, 3, 1});
  const RingSignature& sig = u.signature();
  // degree-2 members: exactly the pairwise products of the top indices
  CHECK(u.contains(Monomial::parse(sig, "x[1,2]*x[2,2]")));
  CHECK(u.contains(Monomial::parse(sig, "x[1,2]*x[3,2]")));
  CHECK(u.contains(Monomial::parse(sig, "x[2,2]*x[3,2]")));
  CHECK_FALSE(u.contains(Monomial::parse(sig, "x[1,1]*x[2,2]")));
  CHECK(u.is_shifted());
  CHECK_FALSE(u.is_shifted_across_colors());
}

TEST_CASE("shiftedness detects index-raising escapes") {
  RingSignature sig(2, {2, 2});
  // x11*x21 without x12*x21 breaks the raising property
  std::vector<Monomial> seeds = {Monomial::parse(sig, "x[1,1]*x[2,1]")};
  OrderIdeal u = OrderIdeal::from_monomials(sig, seeds);
  CHECK_FALSE(u.is_shifted());
  OrderIdeal closed = OrderIdeal::smallest_shifted_closure(sig, seeds);
  CHECK(closed.is_shifted());
  CHECK(closed.size() == 9);  // all four pairs join
  CHECK(fixtures::two_color_square().is_shifted());
  CHECK(fixtures::two_color_square().is_shifted_across_colors());
}

TEST_CASE("exhaustive enumeration matches hand counts") {
  auto count = [](RingSignature sig) {
    EnumerateOptions o;
    o.mode = EnumerateOptions::Mode::Exhaustive;
    o.max_count = 100000;
    return enumerate_order_ideals(sig, o).size();
  };
  CHECK(count(RingSignature(1, {1})) == 1);
  CHECK(count(RingSignature(1, {2})) == 1);
  CHECK(count(RingSignature(2, {1, 1})) == 2);
  CHECK(count(RingSignature(2, {2, 1})) == 4);
  CHECK(count(RingSignature(2, {2, 2})) == 16);
  CHECK(count(RingSignature(3, {1, 1, 1})) == 9);
}

TEST_CASE("enumeration filters and caps") {
  RingSignature sig(2, {2, 2});
  EnumerateOptions o;
  o.mode = EnumerateOptions::Mode::Exhaustive;
  o.max_count = 100000;
  o.shifted = true;
  auto shifted = enumerate_order_ideals(sig, o);
  CHECK(shifted.size() == 6);
  for (const OrderIdeal& u : shifted) CHECK(u.is_shifted());

  o.shifted.reset();
  o.max_count = 3;
  CHECK(enumerate_order_ideals(sig, o).size() == 3);
}

TEST_CASE("enumeration is deterministic per seed") {
  RingSignature sig(3, {2, 2, 2});
  EnumerateOptions o;
  o.mode = EnumerateOptions::Mode::Sample;
  o.max_count = 12;
  o.seed = 7;
  auto a = enumerate_order_ideals(sig, o);
  auto b = enumerate_order_ideals(sig, o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  std::set<std::vector<Monomial>> distinct;
  for (const OrderIdeal& u : a) distinct.insert(u.monomials());
  CHECK(distinct.size() == a.size());  // sampling deduplicates
}

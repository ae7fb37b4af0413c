#include "doctest.h"

#include <algorithm>

#include "balsq/ring.hpp"

using namespace balsq;

TEST_CASE("signature enumerates variables color-major") {
  RingSignature sig(3, {2, 2, 2});
  CHECK(sig.colors() == 3);
  CHECK(sig.total_variables() == 6);
  CHECK(sig.count(2) == 2);
  CHECK(sig.var_id({1, 1}) == 0);
  CHECK(sig.var_id({1, 2}) == 1);
  CHECK(sig.var_id({2, 1}) == 2);
  CHECK(sig.var_id({3, 2}) == 5);
  CHECK(sig.var_at(3) == Variable{2, 2});
  CHECK(sig.str() == "P(3,(2,2,2))");
  CHECK(sig.contains({3, 2}));
  CHECK_FALSE(sig.contains({3, 3}));
  CHECK_FALSE(sig.contains({4, 1}));

  RingSignature ext = sig.extended();
  CHECK(ext.str() == "P(3,(3,3,3))");
  CHECK(ext.var_id({1, 3}) == 2);  // the new slot sits after its color
}

TEST_CASE("signature rejects malformed shapes") {
  CHECK_THROWS_AS(RingSignature(2, {1}), input_error);
  CHECK_THROWS_AS(RingSignature(-1, {}), input_error);
  CHECK_THROWS_AS(RingSignature(1, {-1}), input_error);
  CHECK_THROWS_AS(RingSignature(2, {2, 2}).count(3), input_error);
}

TEST_CASE("monomial arithmetic and queries") {
  RingSignature sig(2, {2, 2});
  Monomial one = Monomial::one(sig);
  Monomial a = Monomial::parse(sig, "x[1,2]*x[2,2]");
  Monomial b = Monomial::parse(sig, "x[1,2]");

  CHECK(one.is_one());
  CHECK(one.divides(a));
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.divided_by(b) == Monomial::parse(sig, "x[2,2]"));
  CHECK(a.degree() == 2);
  CHECK(a.zd_degree() == std::vector<int>{1, 1});
  CHECK(a.color_support() == std::vector<int>{1, 2});
  CHECK(a.color_support_mask() == 0b11u);
  CHECK((b * Variable{2, 2}) == a);
  CHECK(a.gcd(b) == b);
  CHECK(a.lcm(b) == a);

  Monomial sq = Monomial::parse(sig, "x[1,1]*x[1,1]");
  CHECK_FALSE(sq.is_squarefree());
  CHECK_FALSE(sq.is_color_squarefree());
  Monomial pair = Monomial::parse(sig, "x[1,1]*x[1,2]");
  CHECK(pair.is_squarefree());
  CHECK_FALSE(pair.is_color_squarefree());
  CHECK(a.is_color_squarefree());

  CHECK(a.str() == "x[1,2]*x[2,2]");
  CHECK(sq.str() == "x[1,1]*x[1,1]");
  CHECK(Monomial::parse(sig, "1") == one);
  CHECK_THROWS_AS(Monomial::parse(sig, "x[1,3]"), input_error);
  CHECK_THROWS_AS(Monomial::parse(sig, "y[1,1]"), input_error);

  CHECK(a.exponent({1, 2}) == 1);
  CHECK(a.exponent({1, 1}) == 0);
  auto fs = pair.factors();
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == Variable{1, 1});
  CHECK(fs[1].second == 1);
}

TEST_CASE("variable orders reverse each other") {
  Variable a{1, 1}, b{1, 2}, c{2, 1};
  CHECK(var_compare_prec(a, b) == std::strong_ordering::less);
  CHECK(var_compare_prec(b, c) == std::strong_ordering::less);
  CHECK(var_compare_sec5(a, b) == std::strong_ordering::greater);
  CHECK(var_compare_sec5(c, b) == std::strong_ordering::less);
  // the reversal is exact on every pair of a small grid
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          Variable u{i, j}, v{k, l};
          CHECK(var_compare_prec(u, v) == var_compare_sec5(v, u));
        }
}

TEST_CASE("revlex prefers large exponents on early variables") {
  RingSignature sig(2, {2, 2});
  Monomial x11x11 = Monomial::parse(sig, "x[1,1]*x[1,1]");
  Monomial x11x12 = Monomial::parse(sig, "x[1,1]*x[1,2]");
  Monomial x22x22 = Monomial::parse(sig, "x[2,2]*x[2,2]");
  CHECK(revlex_compare(x11x11, x11x12) == std::strong_ordering::less);
  CHECK(revlex_compare(x11x12, x22x22) == std::strong_ordering::less);
  CHECK(revlex_compare(Monomial::one(sig), x11x11) == std::strong_ordering::less);
  CHECK(revlex_compare(x11x11, x11x11) == std::strong_ordering::equal);
  // the reversed-order variant flips the variable roles: now x[2,2] is the
  // smallest variable, so a large exponent on it loses last
  CHECK(revlex_compare_sec5(x22x22, x11x12) == std::strong_ordering::less);
  CHECK(revlex_compare_sec5(x11x12, x11x11) == std::strong_ordering::less);
}

TEST_CASE("componentwise index order on same-support monomials") {
  RingSignature sig(2, {2, 2});
  Monomial low = Monomial::parse(sig, "x[1,1]*x[2,1]");
  Monomial mid = Monomial::parse(sig, "x[1,1]*x[2,2]");
  Monomial high = Monomial::parse(sig, "x[1,2]*x[2,2]");
  CHECK(leq_s(low, mid));
  CHECK(leq_s(mid, high));
  CHECK(leq_s(low, high));
  CHECK_FALSE(leq_s(high, low));
  CHECK_FALSE(leq_s(Monomial::parse(sig, "x[1,1]"), low));  // support differs
  CHECK(leq_s(low, low));
  CHECK_THROWS_AS(leq_s(Monomial::parse(sig, "x[1,1]*x[1,2]"), low), input_error);
}

TEST_CASE("exchange order reaches across colors") {
  RingSignature sig(2, {2, 2});
  Monomial low = Monomial::parse(sig, "x[1,1]*x[2,1]");
  Monomial high = Monomial::parse(sig, "x[1,2]*x[2,2]");
  CHECK(leq_cs(low, high));
  CHECK_FALSE(leq_cs(high, low));
  CHECK(leq_cs(high, high));
  // support-preserving chains refuse detours through other colors but keep
  // the componentwise comparisons
  LeqCsOptions strict{/*support_preserving=*/true};
  CHECK(leq_cs(low, high, strict));
}

TEST_CASE("monomial enumeration is sorted and complete") {
  RingSignature sig(2, {2, 1});
  auto deg2 = monomials_of_degree(sig, 2);
  CHECK(deg2.size() == 6);  // C(3+1,2) over three variables
  CHECK(std::is_sorted(deg2.begin(), deg2.end()));
  auto up2 = monomials_up_to_degree(sig, 2);
  CHECK(up2.size() == 1 + 3 + 6);
  auto csf = color_squarefree_monomials(sig);
  // 1, three variables, x11*x21, x12*x21
  CHECK(csf.size() == 6);
  for (const Monomial& m : csf) CHECK(m.is_color_squarefree());
}

#include "doctest.h"

#include <algorithm>
#include <utility>
#include <set>
#include <vector>

#include "balsq/complex.hpp"
#include "balsq/ideal.hpp"
#include "fixtures.hpp"

using namespace balsq;

namespace {

SimplicialComplex::Mask face_of(const SimplicialComplex& complex,
                                const std::vector<ColoredVertex>& vs) {
  SimplicialComplex::Mask mask = 0;
  for (ColoredVertex v : vs) mask |= SimplicialComplex::Mask(1) << complex.vertex_id(v);
  return mask;
}

// The eleven facets of the complex of the shifted-triple example, written as
// label-per-color triples (l1, l2, l3).
const std::vector<std::vector<int>> kTripleFacets = {
    {3, 3, 3}, {1, 3, 3}, {2, 3, 3}, {3, 1, 3}, {3, 2, 3}, {3, 3, 1},
    {3, 3, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 2, 2}};

}  // namespace

TEST_CASE("facet of a monomial pads absent colors with the top label") {
  RingSignature sig(3, {2, 2, 2});
  RingSignature ext = sig.extended();
  SimplicialComplex probe = SimplicialComplex::void_complex(ext);
  Monomial u = Monomial::parse(sig, "x[1,2]*x[2,2]");
  SimplicialComplex::Mask face = facet_of_monomial(u, ext);
  CHECK(face == face_of(probe, {{1, 2}, {2, 2}, {3, 3}}));
  Monomial one = Monomial::one(sig);
  CHECK(facet_of_monomial(one, ext) == face_of(probe, {{1, 3}, {2, 3}, {3, 3}}));
}

TEST_CASE("triple example builds the expected eleven facets") {
  SimplicialComplex complex = balanced_squeezed_complex(fixtures::shifted_triple());
  CHECK(complex.vertex_signature().str() == "P(3,(3,3,3))");
  CHECK(complex.dim() == 2);
  CHECK(complex.is_pure());
  CHECK(complex.is_balanced());
  REQUIRE(complex.facet_count() == 11);

  std::set<SimplicialComplex::Mask> expected;
  for (const auto& labels : kTripleFacets)
    expected.insert(face_of(complex, {{1, labels[0]}, {2, labels[1]}, {3, labels[2]}}));
  std::set<SimplicialComplex::Mask> actual(complex.facets().begin(), complex.facets().end());
  CHECK(actual == expected);

  CHECK(f_vector(complex) == std::vector<long long>{1, 9, 18, 11});
  CHECK(h_vector(complex) == std::vector<long long>{1, 6, 3, 1});
  CHECK(is_color_shifted(complex));
  CHECK_FALSE(is_color_shifted_across_colors(complex));
}

TEST_CASE("flag vectors of the triple example") {
  SimplicialComplex complex = balanced_squeezed_complex(fixtures::shifted_triple());
  FlagVector ff = flag_f_vector(complex);
  FlagVector fh = flag_h_vector(complex);
  CHECK(ff.kind == 'f');
  CHECK(fh.kind == 'h');
  // f_S counts faces with exactly the colors S; the full set recovers #U
  CHECK(ff.counts.at(0b000u) == 1);
  CHECK(ff.counts.at(0b001u) == 3);
  CHECK(ff.counts.at(0b011u) == 6);
  CHECK(ff.counts.at(0b111u) == 11);
  // h_S is 2 on singletons and 1 elsewhere
  for (unsigned S = 0; S < 8; ++S) {
    int size = __builtin_popcount(S);
    CHECK(fh.counts.at(S) == (size == 1 ? 2 : 1));
  }
  CHECK(coarse_vector(fh) == std::vector<long long>{1, 6, 3, 1});
  CHECK(coarse_vector(ff) == std::vector<long long>{1, 9, 18, 11});
}

TEST_CASE("link deletion and induced subcomplexes") {
  SimplicialComplex complex = balanced_squeezed_complex(fixtures::shifted_triple());
  int v33 = complex.vertex_id({3, 3});
  SimplicialComplex lk = complex.link(SimplicialComplex::Mask(1) << v33);
  CHECK(lk.dim() == 1);
  CHECK(lk.facet_count() == 6);  // one per facet containing 3^(3)
  SimplicialComplex del = complex.deletion(v33);
  // five surviving facets plus two edges that became maximal
  CHECK(del.facet_count() == 7);
  for (SimplicialComplex::Mask f : del.facets()) CHECK((f >> v33 & 1) == 0);
  // induced on the facet {2,2,2} keeps exactly that simplex
  SimplicialComplex::Mask triangle =
      face_of(complex, {{1, 2}, {2, 2}, {3, 2}});
  SimplicialComplex ind = complex.induced(triangle);
  CHECK(ind.facets() == std::vector<SimplicialComplex::Mask>{triangle});
  CHECK_THROWS_AS(complex.link(~SimplicialComplex::Mask(0)), input_error);
}

TEST_CASE("void and empty complexes are distinct edge cases") {
  RingSignature sig(2, {1, 1});
  SimplicialComplex void_c = SimplicialComplex::void_complex(sig);
  SimplicialComplex empty_c = SimplicialComplex::empty_complex(sig);
  CHECK(void_c.is_void());
  CHECK_FALSE(void_c.is_empty());
  CHECK(empty_c.is_empty());
  CHECK(void_c.dim() == -1);
  CHECK(empty_c.dim() == -2);
  CHECK(f_vector(void_c) == std::vector<long long>{1});
  CHECK(f_vector(empty_c) == std::vector<long long>{});
}

TEST_CASE("decomposition certificate for the triple example verifies") {
  OrderIdeal u = fixtures::shifted_triple();
  SimplicialComplex complex = balanced_squeezed_complex(u);
  DecompositionTree tree = squeezed_decomposition(u);
  CHECK(tree.kind == DecompositionTree::Kind::Node);
  CHECK(tree.vertex == ColoredVertex{1, 1});  // lowest label of color 1 sheds first
  CHECK(verify_decomposition(complex, tree));
  CHECK(tree.node_count() == 77);

  DecompositionTree copy = std::move(*tree.clone());
  CHECK(verify_decomposition(complex, copy));
  // a broken certificate is rejected: swap the subtrees of the root
  std::swap(copy.link, copy.deletion);
  CHECK_FALSE(verify_decomposition(complex, copy));
}

TEST_CASE("generic decomposability search agrees on small complexes") {
  SimplicialComplex complex = balanced_squeezed_complex(fixtures::two_color_square());
  auto found = is_vertex_decomposable(complex);
  REQUIRE(found.has_value());
  CHECK(verify_decomposition(complex, *found));
}

TEST_CASE("shelling of the triple example follows the member order") {
  OrderIdeal u = fixtures::shifted_triple();
  ShellingOrder shelling = shelling_order(u);
  REQUIRE(shelling.facets.size() == 11);
  SimplicialComplex complex = balanced_squeezed_complex(u);
  // first facet comes from the monomial 1: all sentinel labels
  CHECK(shelling.facets.front() == face_of(complex, {{1, 3}, {2, 3}, {3, 3}}));
  CHECK(shelling.restrictions.front() == 0);
  // last facet comes from the top monomial; its restriction is everything
  CHECK(shelling.facets.back() == face_of(complex, {{1, 2}, {2, 2}, {3, 2}}));
  CHECK(shelling.restrictions.back() == shelling.facets.back());

  ShellingCheck check = verify_shelling(complex, shelling.facets);
  CHECK(check.valid);
  CHECK(check.restrictions == shelling.restrictions);
  // restriction-face sizes reproduce the h-vector
  std::vector<long long> h(4, 0);
  for (SimplicialComplex::Mask r : check.restrictions) h[__builtin_popcountll(r)] += 1;
  CHECK(h == std::vector<long long>{1, 6, 3, 1});

  // reversing the order happens to shell this complex too
  std::vector<SimplicialComplex::Mask> reversed(shelling.facets.rbegin(),
                                                shelling.facets.rend());
  CHECK(verify_shelling(complex, reversed).valid);
  // but a second facet disjoint from the first is rejected
  std::vector<SimplicialComplex::Mask> broken = shelling.facets;
  SimplicialComplex::Mask top = broken.back();
  broken.pop_back();
  broken.insert(broken.begin() + 1, top);
  ShellingCheck rejected = verify_shelling(complex, broken);
  CHECK_FALSE(rejected.valid);
  CHECK(rejected.reason.find("codimension") != std::string::npos);
}

TEST_CASE("monomials of faces recover the order ideal members") {
  OrderIdeal u = fixtures::two_color_square();
  SimplicialComplex complex = balanced_squeezed_complex(u);
  std::vector<Monomial> faces = order_ideal_of_complex(complex);
  // the face monomials over the extended ring contain every member of U
  // (sentinel-free faces) plus the sentinel-bearing ones
  const RingSignature& ext = complex.vertex_signature();
  std::set<Monomial> face_set(faces.begin(), faces.end());
  for (const Monomial& m : u.monomials()) CHECK(face_set.count(m.in_signature(ext)) == 1);
  CHECK(faces.size() == 13);  // 1 + 6 vertices + 6 facet edges
}

TEST_CASE("universe restriction requires fitting faces") {
  RingSignature big(2, {2, 2});
  RingSignature small(2, {1, 1});
  SimplicialComplex fits(big, {0b0101});  // {1^(1), 1^(2)}
  SimplicialComplex moved = restrict_universe(fits, small);
  CHECK(moved.vertex_signature() == small);
  CHECK(moved.facet_count() == 1);
  SimplicialComplex outside(big, {0b0010});  // {2^(1)}
  CHECK_THROWS_AS(restrict_universe(outside, small), input_error);
}

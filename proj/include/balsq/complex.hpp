#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "balsq/order_ideal.hpp"
#include "balsq/ring.hpp"

namespace balsq {

/// Vertex j^(i): label j in 1..#V_i of color i.
struct ColoredVertex {
  int color = 0;
  int label = 0;
  friend auto operator<=>(const ColoredVertex&, const ColoredVertex&) = default;
};

/// A simplicial complex on a colored vertex universe. The universe is encoded
/// as a RingSignature whose count per color is the number of vertices of that
/// color; vertex (i,j) sits at the dense id of x[i,j]. Faces are bit masks
/// over at most 64 vertices. Facets are kept sorted, duplicates and dominated
/// faces removed. facets() == {0} is the void complex {emptyset};
/// facets() == {} is the empty complex.
class SimplicialComplex {
 public:
  using Mask = std::uint64_t;

  SimplicialComplex(RingSignature vertex_sig, std::vector<Mask> faces);
  static SimplicialComplex void_complex(RingSignature vertex_sig);
  static SimplicialComplex empty_complex(RingSignature vertex_sig);

  const RingSignature& vertex_signature() const { return sig_; }
  const std::vector<Mask>& facets() const { return facets_; }

  int vertex_id(ColoredVertex v) const;
  ColoredVertex vertex_at(int id) const;

  bool is_void() const;
  bool is_empty() const;
  /// -1 for the void complex; -2 for the empty complex.
  int dim() const;
  bool is_pure() const;
  /// Every facet has at most one vertex of each color.
  bool is_balanced() const;

  bool contains_face(Mask face) const;
  /// All faces including the empty one, ascending as integers.
  std::vector<Mask> all_faces() const;
  /// Ids of vertices that occur in some facet, ascending.
  std::vector<int> vertices() const;
  std::size_t facet_count() const { return facets_.size(); }

  /// Faces disjoint from `face` whose union with it is a face.
  /// Errors if `face` is not a face of the complex.
  SimplicialComplex link(Mask face) const;
  /// Faces avoiding the vertex.
  SimplicialComplex deletion(int vertex_id) const;
  /// Faces contained in the vertex set `keep`.
  SimplicialComplex induced(Mask keep) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  RingSignature sig_;
  std::vector<Mask> facets_;
};

/// Face counts keyed by color subset (bit i-1 = color i), tagged 'f' or 'h'.
struct FlagVector {
  char kind = 'f';
  std::map<unsigned, long long> counts;
  friend bool operator==(const FlagVector&, const FlagVector&) = default;
};

/// Vertex set of the facet attached to a color-squarefree monomial: the
/// variables of u as vertices plus the top label m_i+1 for each absent color.
/// vertex_sig must be the extended signature of u's ring.
SimplicialComplex::Mask facet_of_monomial(const Monomial& u, const RingSignature& vertex_sig);

/// The balanced complex of a finite color-squarefree monomial set over
/// P(d,m): facets facet_of_monomial(u) on the extended vertex universe.
SimplicialComplex balanced_squeezed_complex(const RingSignature& sig,
                                            const std::vector<Monomial>& members);
SimplicialComplex balanced_squeezed_complex(const OrderIdeal& ideal);

/// Flag f-vector (balanced complexes only; errors otherwise).
FlagVector flag_f_vector(const SimplicialComplex& complex);
/// Flag h-vector via inclusion-exclusion over color subsets.
FlagVector flag_h_vector(const SimplicialComplex& complex);
/// Sums a flag vector over subsets of equal size; entry k collects |S| = k.
std::vector<long long> coarse_vector(const FlagVector& flag);
/// Face counts by cardinality: entry k counts faces with k vertices.
std::vector<long long> f_vector(const SimplicialComplex& complex);
/// Standard h-vector of a pure complex (from the f-vector transform).
std::vector<long long> h_vector(const SimplicialComplex& complex);

/// Certificate that a complex is vertex-decomposable. A node records the
/// shedding vertex and certificates of its link and deletion; leaves are the
/// void or empty complex.
struct DecompositionTree {
  enum class Kind { VoidLeaf, EmptyLeaf, Node };
  Kind kind = Kind::VoidLeaf;
  ColoredVertex vertex;  // nodes only
  std::unique_ptr<DecompositionTree> link;
  std::unique_ptr<DecompositionTree> deletion;

  std::unique_ptr<DecompositionTree> clone() const;
  std::size_t node_count() const;
};

struct DecomposeOptions {
  /// Abort the search once the memo holds this many complexes.
  std::size_t max_memo = std::size_t(1) << 20;
};

/// Searches for a shedding order; returns the certificate or nothing when the
/// complex is not vertex-decomposable. Deterministic vertex order.
std::optional<DecompositionTree> is_vertex_decomposable(const SimplicialComplex& complex,
                                                        const DecomposeOptions& options = {});

/// The constructive decomposition of a balanced squeezed complex: sheds the
/// lowest-label vertex of the smallest active color, recursing through the
/// induced smaller monomial sets. Verified node-by-node before returning.
DecompositionTree squeezed_decomposition(const OrderIdeal& ideal);

/// Checks a certificate against the definition: every node's vertex is a
/// vertex of the current complex and the subtrees certify its link and
/// deletion; leaves must match exactly.
bool verify_decomposition(const SimplicialComplex& complex, const DecompositionTree& tree);

struct ShellingOrder {
  RingSignature vertex_sig;
  std::vector<SimplicialComplex::Mask> facets;
  std::vector<SimplicialComplex::Mask> restrictions;
};

/// Facets of the balanced complex ordered by the (degree, revlex) linear
/// extension of the order ideal; restriction faces are the non-sentinel
/// parts. The result is checked with verify_shelling before returning.
ShellingOrder shelling_order(const OrderIdeal& ideal);

struct ShellingCheck {
  bool valid = false;
  std::string reason;
  std::vector<SimplicialComplex::Mask> restrictions;
};

/// Verifies that the given facet order is a shelling of the complex and
/// infers the restriction faces.
ShellingCheck verify_shelling(const SimplicialComplex& complex,
                              const std::vector<SimplicialComplex::Mask>& order);

/// Replacing a vertex by a higher label of its color keeps faces in the
/// complex. Errors if the complex is not balanced.
bool is_color_shifted(const SimplicialComplex& complex);
/// Additionally, replacing a vertex by any label of a larger color keeps
/// faces in the complex whenever the replacement leaves the face balanced.
bool is_color_shifted_across_colors(const SimplicialComplex& complex);

/// The monomials of the faces of a balanced complex, over the vertex
/// signature read as a ring. Errors on a face with two vertices of a color.
std::vector<Monomial> order_ideal_of_complex(const SimplicialComplex& complex);

/// Moves a complex onto a smaller universe with the same (color, label)
/// names. Errors if some face does not fit.
SimplicialComplex restrict_universe(const SimplicialComplex& complex,
                                    const RingSignature& new_sig);

}  // namespace balsq

#include "balsq/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace balsq {

namespace {

int popcount(SimplicialComplex::Mask m) { return std::popcount(m); }

}  // namespace

SimplicialComplex::SimplicialComplex(RingSignature vertex_sig, std::vector<Mask> faces)
    : sig_(std::move(vertex_sig)) {
  if (sig_.total_variables() > 64)
    throw resource_error("complex universe exceeds 64 vertices");
  Mask universe = sig_.total_variables() == 64
                      ? ~Mask(0)
                      : (Mask(1) << sig_.total_variables()) - 1;
  for (Mask f : faces)
    if (f & ~universe) throw input_error("face uses a vertex outside the universe");
  // Keep maximal faces only.
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Mask f : faces) {
    bool dominated = false;
    for (Mask g : faces)
      if (f != g && (f & ~g) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) facets_.push_back(f);
  }
}

SimplicialComplex SimplicialComplex::void_complex(RingSignature vertex_sig) {
  return SimplicialComplex(std::move(vertex_sig), {Mask(0)});
}

SimplicialComplex SimplicialComplex::empty_complex(RingSignature vertex_sig) {
  return SimplicialComplex(std::move(vertex_sig), {});
}

int SimplicialComplex::vertex_id(ColoredVertex v) const {
  return sig_.var_id(Variable{v.color, v.label});
}

ColoredVertex SimplicialComplex::vertex_at(int id) const {
  Variable v = sig_.var_at(id);
  return ColoredVertex{v.color, v.index};
}

bool SimplicialComplex::is_void() const { return facets_.size() == 1 && facets_[0] == 0; }

bool SimplicialComplex::is_empty() const { return facets_.empty(); }

int SimplicialComplex::dim() const {
  if (is_empty()) return -2;
  int best = -1;
  for (Mask f : facets_) best = std::max(best, popcount(f) - 1);
  return best;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  int d = popcount(facets_[0]);
  for (Mask f : facets_)
    if (popcount(f) != d) return false;
  return true;
}

bool SimplicialComplex::is_balanced() const {
  for (Mask f : facets_) {
    std::vector<int> per_color(sig_.colors(), 0);
    for (int id = 0; id < sig_.total_variables(); ++id)
      if (f & (Mask(1) << id))
        if (++per_color[sig_.var_at(id).color - 1] > 1) return false;
  }
  return true;
}

bool SimplicialComplex::contains_face(Mask face) const {
  for (Mask f : facets_)
    if ((face & ~f) == 0) return true;
  return false;
}

std::vector<SimplicialComplex::Mask> SimplicialComplex::all_faces() const {
  std::set<Mask> faces;
  for (Mask f : facets_) {
    // Every submask of a facet, including 0.
    Mask sub = f;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  return std::vector<Mask>(faces.begin(), faces.end());
}

std::vector<int> SimplicialComplex::vertices() const {
  Mask support = 0;
  for (Mask f : facets_) support |= f;
  std::vector<int> out;
  for (int id = 0; id < sig_.total_variables(); ++id)
    if (support & (Mask(1) << id)) out.push_back(id);
  return out;
}

SimplicialComplex SimplicialComplex::link(Mask face) const {
  if (!contains_face(face)) throw input_error("link: argument is not a face");
  std::vector<Mask> faces;
  for (Mask f : facets_)
    if ((face & ~f) == 0) faces.push_back(f & ~face);
  return SimplicialComplex(sig_, std::move(faces));
}

SimplicialComplex SimplicialComplex::deletion(int vertex_id) const {
  if (vertex_id < 0 || vertex_id >= sig_.total_variables())
    throw input_error("deletion: vertex id out of range");
  Mask bit = Mask(1) << vertex_id;
  std::vector<Mask> faces;
  for (Mask f : facets_) faces.push_back(f & ~bit);
  return SimplicialComplex(sig_, std::move(faces));
}

SimplicialComplex SimplicialComplex::induced(Mask keep) const {
  std::vector<Mask> faces;
  for (Mask f : facets_) faces.push_back(f & keep);
  return SimplicialComplex(sig_, std::move(faces));
}

SimplicialComplex::Mask facet_of_monomial(const Monomial& u, const RingSignature& vertex_sig) {
  if (!u.is_color_squarefree())
    throw input_error("facet_of_monomial: " + u.str() + " is not color-squarefree");
  const RingSignature& sig = u.signature();
  SimplicialComplex::Mask mask = 0;
  unsigned support = u.color_support_mask();
  for (const auto& [v, k] : u.factors()) {
    (void)k;
    mask |= SimplicialComplex::Mask(1) << vertex_sig.var_id(v);
  }
  for (int color = 1; color <= sig.colors(); ++color)
    if (!(support & (1u << (color - 1))))
      mask |= SimplicialComplex::Mask(1)
              << vertex_sig.var_id(Variable{color, sig.count(color) + 1});
  return mask;
}

SimplicialComplex balanced_squeezed_complex(const RingSignature& sig,
                                            const std::vector<Monomial>& members) {
  RingSignature vertex_sig = sig.extended();
  std::vector<SimplicialComplex::Mask> facets;
  for (const Monomial& u : members) {
    if (u.signature() != sig)
      throw input_error("balanced_squeezed_complex: member from another ring");
    facets.push_back(facet_of_monomial(u, vertex_sig));
  }
  if (facets.empty()) return SimplicialComplex::empty_complex(vertex_sig);
  return SimplicialComplex(std::move(vertex_sig), std::move(facets));
}

SimplicialComplex balanced_squeezed_complex(const OrderIdeal& ideal) {
  return balanced_squeezed_complex(ideal.signature(), ideal.monomials());
}

FlagVector flag_f_vector(const SimplicialComplex& complex) {
  if (!complex.is_balanced()) throw input_error("flag_f_vector: complex is not balanced");
  FlagVector out;
  out.kind = 'f';
  for (SimplicialComplex::Mask face : complex.all_faces()) {
    unsigned colors = 0;
    for (int id = 0; id < complex.vertex_signature().total_variables(); ++id)
      if (face & (SimplicialComplex::Mask(1) << id))
        colors |= 1u << (complex.vertex_at(id).color - 1);
    ++out.counts[colors];
  }
  return out;
}

FlagVector flag_h_vector(const SimplicialComplex& complex) {
  FlagVector f = flag_f_vector(complex);
  FlagVector out;
  out.kind = 'h';
  unsigned full = complex.vertex_signature().colors() ? (1u << complex.vertex_signature().colors()) - 1 : 0;
  for (unsigned S = 0;; ++S) {
    if ((S & full) == S) {
      long long h = 0;
      // h_S = sum over T subset S of (-1)^{|S \ T|} f_T.
      for (unsigned T = S;; T = (T - 1) & S) {
        auto it = f.counts.find(T);
        long long fT = it == f.counts.end() ? 0 : it->second;
        int sign = (popcount(S ^ T) % 2 == 0) ? 1 : -1;
        h += sign * fT;
        if (T == 0) break;
      }
      // Entries are kept even when zero so the coarse h-vector keeps its
      // full length d+1.
      out.counts[S] = h;
    }
    if (S == full) break;
  }
  return out;
}

std::vector<long long> coarse_vector(const FlagVector& flag) {
  int top = 0;
  for (const auto& [mask, count] : flag.counts) {
    (void)count;
    top = std::max(top, popcount(mask));
  }
  std::vector<long long> out(static_cast<std::size_t>(top) + 1, 0);
  for (const auto& [mask, count] : flag.counts) out[popcount(mask)] += count;
  return out;
}

std::vector<long long> f_vector(const SimplicialComplex& complex) {
  if (complex.is_empty()) return {};
  std::vector<long long> out(static_cast<std::size_t>(complex.dim()) + 2, 0);
  for (SimplicialComplex::Mask face : complex.all_faces()) ++out[popcount(face)];
  return out;
}

std::vector<long long> h_vector(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw input_error("h_vector: complex is not pure");
  std::vector<long long> f = f_vector(complex);
  if (f.empty()) return {};
  int D = static_cast<int>(f.size()) - 1;  // vertices per facet
  std::vector<long long> h(f.size(), 0);
  // h_k = sum_i (-1)^{k-i} C(D-i, k-i) f_{i-1}, with f stored by cardinality.
  std::vector<std::vector<long long>> choose(D + 1, std::vector<long long>(D + 1, 0));
  for (int n = 0; n <= D; ++n) {
    choose[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : 0);
  }
  for (int k = 0; k <= D; ++k)
    for (int i = 0; i <= k; ++i) {
      int sign = ((k - i) % 2 == 0) ? 1 : -1;
      h[k] += sign * choose[D - i][k - i] * f[i];
    }
  return h;
}

std::unique_ptr<DecompositionTree> DecompositionTree::clone() const {
  auto out = std::make_unique<DecompositionTree>();
  out->kind = kind;
  out->vertex = vertex;
  if (link) out->link = link->clone();
  if (deletion) out->deletion = deletion->clone();
  return out;
}

std::size_t DecompositionTree::node_count() const {
  std::size_t n = 1;
  if (link) n += link->node_count();
  if (deletion) n += deletion->node_count();
  return n;
}

namespace {

struct DecomposeSearch {
  const DecomposeOptions& options;
  const RingSignature& sig;
  // Status per canonical facet list: vertex id of a working shed, -1 none.
  std::map<std::vector<SimplicialComplex::Mask>, int> memo;

  bool decomposable(const SimplicialComplex& complex) {
    if (complex.is_void() || complex.is_empty()) return true;
    if (!complex.is_pure()) return false;
    auto key = complex.facets();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second >= 0;
    if (memo.size() >= options.max_memo)
      throw resource_error("vertex decomposability search exceeded its memo budget");
    memo[key] = -1;  // pessimistic placeholder; cycles cannot occur
    for (int v : complex.vertices()) {
      SimplicialComplex lk = complex.link(SimplicialComplex::Mask(1) << v);
      SimplicialComplex del = complex.deletion(v);
      if (decomposable(lk) && decomposable(del)) {
        memo[key] = v;
        return true;
      }
    }
    return false;
  }

  DecompositionTree build(const SimplicialComplex& complex) {
    DecompositionTree t;
    if (complex.is_void()) {
      t.kind = DecompositionTree::Kind::VoidLeaf;
      return t;
    }
    if (complex.is_empty()) {
      t.kind = DecompositionTree::Kind::EmptyLeaf;
      return t;
    }
    int v = memo.at(complex.facets());
    t.kind = DecompositionTree::Kind::Node;
    t.vertex = complex.vertex_at(v);
    t.link = std::make_unique<DecompositionTree>(
        build(complex.link(SimplicialComplex::Mask(1) << v)));
    t.deletion = std::make_unique<DecompositionTree>(build(complex.deletion(v)));
    return t;
  }
};

}  // namespace

std::optional<DecompositionTree> is_vertex_decomposable(const SimplicialComplex& complex,
                                                        const DecomposeOptions& options) {
  DecomposeSearch search{options, complex.vertex_signature(), {}};
  if (!search.decomposable(complex)) return std::nullopt;
  return search.build(complex);
}

namespace {

DecompositionTree simplex_tree(const RingSignature& vertex_sig, SimplicialComplex::Mask face) {
  if (face == 0) {
    DecompositionTree leaf;
    leaf.kind = DecompositionTree::Kind::VoidLeaf;
    return leaf;
  }
  int v = std::countr_zero(face);
  Variable var = vertex_sig.var_at(v);
  DecompositionTree node;
  node.kind = DecompositionTree::Kind::Node;
  node.vertex = ColoredVertex{var.color, var.index};
  DecompositionTree sub = simplex_tree(vertex_sig, face & (face - 1));
  node.link = std::make_unique<DecompositionTree>(std::move(sub));
  node.deletion = node.link->clone();
  return node;
}

/// Recursive construction over (members, active colors). Members are
/// divisor-closed color-squarefree monomials whose support lies in `active`;
/// the complex at this state has facets facet(u) with sentinels only for
/// active colors outside the support.
DecompositionTree squeezed_rec(const RingSignature& sig, const RingSignature& vertex_sig,
                               const std::vector<Monomial>& members, unsigned active) {
  auto facet_in_state = [&](const Monomial& u) {
    SimplicialComplex::Mask mask = 0;
    for (const auto& [v, k] : u.factors()) {
      (void)k;
      mask |= SimplicialComplex::Mask(1) << vertex_sig.var_id(v);
    }
    unsigned support = u.color_support_mask();
    for (int color = 1; color <= sig.colors(); ++color)
      if ((active & (1u << (color - 1))) && !(support & (1u << (color - 1))))
        mask |= SimplicialComplex::Mask(1)
                << vertex_sig.var_id(Variable{color, sig.count(color) + 1});
    return mask;
  };

  if (members.empty()) {
    DecompositionTree leaf;
    leaf.kind = DecompositionTree::Kind::EmptyLeaf;
    return leaf;
  }
  if (members.size() == 1) return simplex_tree(vertex_sig, facet_in_state(members[0]));

  // Shedding vertex: lowest label of the smallest active color in use.
  Variable shed{0, 0};
  for (int color = 1; color <= sig.colors() && shed.color == 0; ++color) {
    if (!(active & (1u << (color - 1)))) continue;
    int best = 0;
    for (const Monomial& u : members)
      for (const auto& [v, k] : u.factors()) {
        (void)k;
        if (v.color == color && (best == 0 || v.index < best)) best = v.index;
      }
    if (best > 0) shed = Variable{color, best};
  }
  // members.size() >= 2 forces some variable occurrence.
  Monomial shed_var = Monomial::of_variable(sig, shed);
  std::set<Monomial> member_set(members.begin(), members.end());
  std::vector<Monomial> link_members, deletion_members;
  for (const Monomial& u : members) {
    if (!shed_var.divides(u)) deletion_members.push_back(u);
    if (member_set.count(u * shed)) link_members.push_back(u);
  }
  DecompositionTree node;
  node.kind = DecompositionTree::Kind::Node;
  node.vertex = ColoredVertex{shed.color, shed.index};
  node.link = std::make_unique<DecompositionTree>(
      squeezed_rec(sig, vertex_sig, link_members, active & ~(1u << (shed.color - 1))));
  node.deletion = std::make_unique<DecompositionTree>(
      squeezed_rec(sig, vertex_sig, deletion_members, active));
  return node;
}

}  // namespace

DecompositionTree squeezed_decomposition(const OrderIdeal& ideal) {
  const RingSignature& sig = ideal.signature();
  unsigned active = sig.colors() ? (1u << sig.colors()) - 1 : 0;
  DecompositionTree tree =
      squeezed_rec(sig, sig.extended(), ideal.monomials(), active);
  if (!verify_decomposition(balanced_squeezed_complex(ideal), tree))
    throw property_error("squeezed decomposition failed its own verification");
  return tree;
}

bool verify_decomposition(const SimplicialComplex& complex, const DecompositionTree& tree) {
  switch (tree.kind) {
    case DecompositionTree::Kind::VoidLeaf:
      return complex.is_void();
    case DecompositionTree::Kind::EmptyLeaf:
      return complex.is_empty();
    case DecompositionTree::Kind::Node:
      break;
  }
  if (!tree.link || !tree.deletion) return false;
  Variable var{tree.vertex.color, tree.vertex.label};
  if (!complex.vertex_signature().contains(var)) return false;
  int id = complex.vertex_signature().var_id(var);
  SimplicialComplex::Mask bit = SimplicialComplex::Mask(1) << id;
  if (!complex.contains_face(bit)) return false;  // must be an actual vertex
  return verify_decomposition(complex.link(bit), *tree.link) &&
         verify_decomposition(complex.deletion(id), *tree.deletion);
}

ShellingOrder shelling_order(const OrderIdeal& ideal) {
  ShellingOrder out;
  out.vertex_sig = ideal.signature().extended();
  for (const Monomial& u : ideal.monomials()) {
    SimplicialComplex::Mask facet = facet_of_monomial(u, out.vertex_sig);
    SimplicialComplex::Mask restriction = 0;
    for (const auto& [v, k] : u.factors()) {
      (void)k;
      restriction |= SimplicialComplex::Mask(1) << out.vertex_sig.var_id(v);
    }
    out.facets.push_back(facet);
    out.restrictions.push_back(restriction);
  }
  ShellingCheck check = verify_shelling(balanced_squeezed_complex(ideal), out.facets);
  if (!check.valid)
    throw property_error("shelling_order produced a non-shelling: " + check.reason);
  if (check.restrictions != out.restrictions)
    throw property_error("shelling_order restriction faces disagree with verification");
  return out;
}

ShellingCheck verify_shelling(const SimplicialComplex& complex,
                              const std::vector<SimplicialComplex::Mask>& order) {
  ShellingCheck out;
  std::vector<SimplicialComplex::Mask> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.facets()) {
    out.reason = "order is not a permutation of the facets";
    return out;
  }
  if (!complex.is_pure()) {
    out.reason = "complex is not pure";
    return out;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    SimplicialComplex::Mask Fi = order[i];
    SimplicialComplex::Mask restriction = 0;
    if (i > 0) {
      // Codimension-one intersections with earlier facets must cover all
      // earlier intersections, and at least one must exist.
      bool any_ridge = false;
      for (std::size_t j = 0; j < i; ++j) {
        SimplicialComplex::Mask inter = Fi & order[j];
        bool covered = false;
        for (std::size_t k = 0; k < i && !covered; ++k) {
          SimplicialComplex::Mask ridge = Fi & order[k];
          if (popcount(ridge) == popcount(Fi) - 1 && (inter & ~ridge) == 0) covered = true;
        }
        if (!covered) {
          std::ostringstream os;
          os << "facet " << i << " meets facet " << j
             << " outside the union of codimension-one intersections";
          out.reason = os.str();
          return out;
        }
        if (popcount(inter) == popcount(Fi) - 1) any_ridge = true;
      }
      if (!any_ridge) {
        std::ostringstream os;
        os << "facet " << i << " attaches along no codimension-one face";
        out.reason = os.str();
        return out;
      }
      // Restriction face: vertices whose opposite ridge lies in the earlier
      // part.
      SimplicialComplex::Mask f = Fi;
      while (f) {
        SimplicialComplex::Mask bit = f & (~f + 1);
        f &= f - 1;
        for (std::size_t k = 0; k < i; ++k)
          if (((Fi & ~bit) & ~order[k]) == 0) {
            restriction |= bit;
            break;
          }
      }
    }
    out.restrictions.push_back(restriction);
  }
  out.valid = true;
  return out;
}

bool is_color_shifted(const SimplicialComplex& complex) {
  if (!complex.is_balanced()) throw input_error("is_color_shifted: complex is not balanced");
  const RingSignature& sig = complex.vertex_signature();
  for (SimplicialComplex::Mask face : complex.all_faces())
    for (int id = 0; id < sig.total_variables(); ++id) {
      if (!(face & (SimplicialComplex::Mask(1) << id))) continue;
      Variable v = sig.var_at(id);
      SimplicialComplex::Mask base = face & ~(SimplicialComplex::Mask(1) << id);
      for (int label = v.index + 1; label <= sig.count(v.color); ++label) {
        SimplicialComplex::Mask swapped =
            base | (SimplicialComplex::Mask(1) << sig.var_id(Variable{v.color, label}));
        if (!complex.contains_face(swapped)) return false;
      }
    }
  return true;
}

bool is_color_shifted_across_colors(const SimplicialComplex& complex) {
  if (!is_color_shifted(complex)) return false;
  const RingSignature& sig = complex.vertex_signature();
  for (SimplicialComplex::Mask face : complex.all_faces())
    for (int id = 0; id < sig.total_variables(); ++id) {
      if (!(face & (SimplicialComplex::Mask(1) << id))) continue;
      Variable v = sig.var_at(id);
      SimplicialComplex::Mask base = face & ~(SimplicialComplex::Mask(1) << id);
      for (int color = v.color + 1; color <= sig.colors(); ++color) {
        // Skip replacements that would put two vertices of `color` in the face.
        bool occupied = false;
        for (int label = 1; label <= sig.count(color) && !occupied; ++label)
          if (base & (SimplicialComplex::Mask(1) << sig.var_id(Variable{color, label})))
            occupied = true;
        if (occupied) continue;
        for (int label = 1; label <= sig.count(color); ++label) {
          SimplicialComplex::Mask swapped =
              base | (SimplicialComplex::Mask(1) << sig.var_id(Variable{color, label}));
          if (!complex.contains_face(swapped)) return false;
        }
      }
    }
  return true;
}

std::vector<Monomial> order_ideal_of_complex(const SimplicialComplex& complex) {
  const RingSignature& sig = complex.vertex_signature();
  std::vector<Monomial> out;
  for (SimplicialComplex::Mask face : complex.all_faces()) {
    FineDegree exps(sig.total_variables(), 0);
    for (int id = 0; id < sig.total_variables(); ++id)
      if (face & (SimplicialComplex::Mask(1) << id)) exps[id] = 1;
    Monomial m(sig, std::move(exps));
    if (!m.is_color_squarefree())
      throw input_error("order_ideal_of_complex: face with two vertices of one color");
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex restrict_universe(const SimplicialComplex& complex,
                                    const RingSignature& new_sig) {
  const RingSignature& old_sig = complex.vertex_signature();
  std::vector<SimplicialComplex::Mask> faces;
  for (SimplicialComplex::Mask f : complex.facets()) {
    SimplicialComplex::Mask out = 0;
    for (int id = 0; id < old_sig.total_variables(); ++id)
      if (f & (SimplicialComplex::Mask(1) << id)) {
        Variable v = old_sig.var_at(id);
        if (!new_sig.contains(v))
          throw input_error("restrict_universe: face does not fit the new universe");
        out |= SimplicialComplex::Mask(1) << new_sig.var_id(v);
      }
    faces.push_back(out);
  }
  if (complex.is_empty()) return SimplicialComplex::empty_complex(new_sig);
  return SimplicialComplex(new_sig, std::move(faces));
}

}  // namespace balsq

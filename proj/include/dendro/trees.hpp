#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dendro {

enum class Flavour { symmetric, planar };

std::string flavour_name(Flavour f);

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"),
        pos(p) {}
};

// Rooted operadic tree with a fixed planar structure.  Every node of the
// recursive shape is an edge; a vertex sits on top of its output edge and
// carries an ordered list of input edges.  Edge and vertex ids are assigned
// by leftmost depth-first traversal from the root edge, so structurally
// equal trees carry identical ids.
class PlanarTree {
 public:
  struct Edge {
    int below = -1;  // vertex this edge is an input of, -1 for the root edge
    int above = -1;  // vertex sitting on top of this edge, -1 for a leaf
  };
  struct Vertex {
    int out_edge = -1;
    std::vector<int> in_edges;  // planar order, left to right
  };

  PlanarTree();  // the bare edge
  static PlanarTree make_vertex(const std::vector<PlanarTree>& children);

  int n_edges() const { return int(edges_.size()); }
  int n_vertices() const { return int(verts_.size()); }
  static constexpr int root = 0;
  const Edge& edge(int e) const { return edges_[size_t(e)]; }
  const Vertex& vertex(int v) const { return verts_[size_t(v)]; }
  bool is_eta() const { return verts_.empty(); }
  bool is_leaf_edge(int e) const { return edges_[size_t(e)].above < 0; }
  std::vector<int> leaf_edges() const;  // planar order
  int arity(int v) const { return int(verts_[size_t(v)].in_edges.size()); }
  PlanarTree subtree_at(int e) const;  // the subtree rooted at edge e
  std::vector<PlanarTree> children() const;

  std::string render(bool ascii = false) const;
  bool operator==(const PlanarTree& o) const;
  bool operator<(const PlanarTree& o) const;  // by (edge count, render)

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> verts_;
  int append_subtree(const PlanarTree& s, int below_vertex);
};

// Grammar:  Tree := "η" | "e" | "(" Tree* ")"
PlanarTree parse_tree(std::string_view literal);

enum class StdTree { eta, corolla, left_comb };
PlanarTree standard_tree(StdTree kind, int n);

// AHU-style canonical representative of the underlying non-planar tree:
// children recursively canonicalized, then sorted by their encoding.
PlanarTree canonical_form(const PlanarTree& t);
bool is_canonical(const PlanarTree& t);

PlanarTree mirror_tree(const PlanarTree& t);
// edge id i of t corresponds to edge mirror_edge_map(t)[i] of mirror_tree(t)
std::vector<int> mirror_edge_map(const PlanarTree& t);

// Attaches s so that its root edge is identified with the given leaf of t.
PlanarTree graft(const PlanarTree& t, int leaf, const PlanarTree& s);

// All self-isomorphisms of the underlying non-planar tree, as permutations
// of edge ids.  Requires canonical input.
std::vector<std::vector<int>> tree_automorphisms(const PlanarTree& t);

// An operation of the free operad on a tree: a connected region of vertices
// rooted at an edge, together with an ordering of the edges entering the
// region from above.  A region with no vertices is the identity of its root
// edge.
struct SubtreeOp {
  int root_edge = 0;
  uint64_t vmask = 0;
  std::vector<int> leaves;

  int op_arity() const { return int(leaves.size()); }
  bool is_identity() const { return vmask == 0; }
  bool operator==(const SubtreeOp& o) const = default;
  bool operator<(const SubtreeOp& o) const;
};

SubtreeOp op_identity(int edge);
SubtreeOp op_generator(const PlanarTree& t, int v);  // planar leaf order
// Region of op with the leaf list in planar order.
std::vector<int> planar_region_leaves(const PlanarTree& t, int root_edge,
                                      uint64_t vmask);
SubtreeOp op_gamma(const SubtreeOp& p, const std::vector<SubtreeOp>& args);
SubtreeOp op_sigma(const SubtreeOp& p, const std::vector<int>& perm);

// One operation per connected rooted region for the planar flavour; one per
// (region, leaf ordering) pair for the symmetric flavour.  Identities come
// first, then non-identity operations in a deterministic order.
std::vector<SubtreeOp> operations_of_free_operad(const PlanarTree& t,
                                                 Flavour flavour);

// All planar trees with at most max_vertices vertices and vertex arity at
// most max_arity; with canonical_only, one representative per isomorphism
// class of non-planar trees.  Sorted by (vertex count, render).
std::vector<PlanarTree> enumerate_trees(int max_vertices, int max_arity,
                                        bool canonical_only);

// Permutation helpers shared by the operad modules.
std::vector<std::vector<int>> all_permutations(int n);
std::vector<int> compose_perms(const std::vector<int>& p,
                               const std::vector<int>& q);  // p after q
std::vector<int> invert_perm(const std::vector<int>& p);
// Block permutation induced on a composite's inputs: position start_A(i)+o
// maps to start_B(sigma(i))+o, where the B blocks are the A blocks permuted
// by sigma.
std::vector<int> block_permutation(const std::vector<int>& sigma,
                                   const std::vector<int>& block_lengths);

}  // namespace dendro

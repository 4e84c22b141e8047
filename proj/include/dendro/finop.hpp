#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dendro/trees.hpp"

namespace dendro {

struct Violation {
  std::string law;
  std::string detail;
};

// Finite category given by explicit tables.
struct FinCategory {
  struct Arrow {
    int src = 0, tgt = 0;
    std::string name;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> ids;                  // object -> identity arrow
  std::map<std::pair<int, int>, int> comp;  // (g, f) -> g after f

  int n_objects() const { return int(objects.size()); }
  std::vector<int> hom(int x, int y) const;
  std::optional<int> compose(int g, int f) const;
};

std::vector<Violation> validate_category(const FinCategory& c);
bool is_rigid_category(const FinCategory& c);
bool categories_isomorphic(const FinCategory& a, const FinCategory& b);
FinCategory contractible_groupoid(int n_objects);  // J for n = 2

// Finite coloured operad with explicit operation, composition and symmetry
// tables.  Units are ordinary operations flagged in `unit`.  `sym` is empty
// for the planar flavour and total (all arities, all permutations) for the
// symmetric one.
struct FinOperad {
  struct Op {
    std::string name;
    std::vector<int> inputs;
    int output = 0;
  };

  Flavour flavour = Flavour::symmetric;
  std::vector<std::string> colours;
  std::vector<Op> ops;
  std::vector<int> unit;                                     // colour -> op
  std::map<std::pair<int, std::vector<int>>, int> comp;      // gamma
  std::map<std::pair<int, std::vector<int>>, int> sym;       // (op, perm)

  int n_colours() const { return int(colours.size()); }
  int op_arity(int op) const { return int(ops[size_t(op)].inputs.size()); }
  bool is_unit(int op) const;
  std::optional<int> gamma(int op, const std::vector<int>& args) const;
  std::optional<int> act(int op, const std::vector<int>& perm) const;
  std::vector<int> ops_with_output(int colour) const;
  std::vector<int> ops_with_signature(const std::vector<int>& inputs,
                                      int output) const;
  std::vector<int> unary_ops(int from, int to) const;
};

std::vector<Violation> validate_operad(const FinOperad& p);

FinOperad eta_operad(Flavour flavour);
// the contractible groupoid on two objects, as an operad
FinOperad j_operad(Flavour flavour = Flavour::symmetric);
FinOperad free_operad(const PlanarTree& t, Flavour flavour);
// Operation index of a subtree op inside free_operad(t, flavour).
int free_operad_op_index(const FinOperad& p, const PlanarTree& t,
                         const SubtreeOp& op);
FinOperad category_as_operad(const FinCategory& c, Flavour flavour);

FinCategory underlying_category(const FinOperad& p);
bool is_rigid(const FinOperad& p);

struct OperadMap {
  std::vector<int> colour_map;  // colours of source -> colours of target
  std::vector<int> op_map;      // ops of source -> ops of target
};

struct MapBounds {
  size_t max_maps = 200000;
  size_t max_nodes = 5000000;
};

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complete list of operad maps p -> q, ordered lexicographically by colour
// map then op map.  Backtracks over a generating set with signature pruning
// and closure propagation; every produced map is verified against the full
// tables.
std::vector<OperadMap> operad_maps(const FinOperad& p, const FinOperad& q,
                                   const MapBounds& bounds = {});
bool operads_isomorphic(const FinOperad& p, const FinOperad& q);

// Underlying category of the operad of maps p -> q: objects are operad maps,
// morphisms f -> g are colour-indexed families of unary operations
// compatible with every operation of p.
FinCategory internal_hom_category(const FinOperad& p, const FinOperad& q);

// With no tree: whether precomposition with the unique map from the
// contractible groupoid on two objects is a bijection on maps into p.
// With a tree: the same locality for the operad of maps free(t) -> p.
bool locality(const FinOperad& p, const std::optional<PlanarTree>& t);

FinOperad mirror_operad(const FinOperad& p);

std::vector<OperadMap> nerve_at(const FinOperad& p, const PlanarTree& t);

enum class Tri { yes, no, indeterminate };

struct ClassifyBounds {
  int max_ops_for_suboperads = 64;
  int max_nonunit_for_suboperads = 14;
};

struct ClassifyReport {
  bool is_category = false;
  bool is_discrete = false;
  Tri is_pseudo_corolla = Tri::indeterminate;
  std::optional<int> corolla_arity;
  std::string note;  // conventions applied, or why indeterminate
};

ClassifyReport classify_operad(const FinOperad& p,
                               const ClassifyBounds& bounds = {});

// Enumerates all suboperads as (colour set, op set) pairs closed under
// units, composition and the symmetric action.  The empty suboperad is
// included.  Throws BoundExceeded above the configured sizes.
std::vector<std::pair<std::vector<int>, std::vector<int>>> all_suboperads(
    const FinOperad& p, const ClassifyBounds& bounds = {});

// JSON schema (schema id "dendro/finoperad-1"); validation on load.
std::string operad_to_json(const FinOperad& p);
FinOperad operad_from_json(const std::string& text);

}  // namespace dendro

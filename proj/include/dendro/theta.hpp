#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dendro/autocheck.hpp"
#include "dendro/trees.hpp"

namespace dendro {

// Table of dimensions: top row k_1..k_m and bottom row k'_1..k'_{m-1} with
// k_i > k'_i and k_{i+1} > k'_i, entries bounded by the ambient dimension.
struct DimTable {
  std::vector<int> top;
  std::vector<int> bot;
  int ambient = 0;

  int columns() const { return int(top.size()); }
  int height() const;
  bool operator==(const DimTable& o) const {
    return top == o.top && bot == o.bot;
  }
  bool operator<(const DimTable& o) const {
    if (top != o.top) return top < o.top;
    return bot < o.bot;
  }
};

struct TableError {
  std::string message;
  int index = -1;  // failing column pair, when applicable
};

std::optional<TableError> table_violation(const std::vector<int>& top,
                                          const std::vector<int>& bot,
                                          int ambient);
DimTable validate_table(const std::vector<int>& top,
                        const std::vector<int>& bot, int ambient);
// Literal "k1 k2 ... / k'1 ..."; the "/" may be omitted for one column.
DimTable parse_table(const std::string& literal, int ambient);
std::string render_table(const DimTable& t);
DimTable disk_table(int k, int ambient);

// Level-tree form: a planar tree without nullary vertices whose leaf depths,
// read left to right, are the top row, and whose consecutive-leaf meet
// depths are the bottom row.
PlanarTree table_leveltree(const DimTable& t);
DimTable leveltree_table(const PlanarTree& t, int ambient);

// Morphism in the iterated wreath encoding: a monotone map of the top
// segments plus one lower-dimensional morphism per covered target segment.
// fib[i-1] has top[i]-top[i-1] entries, for the target segments
// top[i-1]+1 .. top[i].
struct ThetaMor {
  std::vector<int> top;  // images of 0..m, monotone
  std::vector<std::vector<ThetaMor>> fib;

  bool operator==(const ThetaMor& o) const;
  bool operator<(const ThetaMor& o) const;
  std::string key() const;
};

struct ThetaBounds {
  size_t max_homs = 2000000;
};

std::vector<ThetaMor> hom_tables(const DimTable& s, const DimTable& t,
                                 const ThetaBounds& bounds = {});
ThetaMor theta_identity(const DimTable& t);
ThetaMor theta_compose(const ThetaMor& g, const ThetaMor& f);

bool theta_is_inert(const ThetaMor& f);
bool theta_is_active(const ThetaMor& f, const DimTable& s, const DimTable& t);

struct Factorization {
  ThetaMor active;
  DimTable middle;
  ThetaMor inert;
};

Factorization factor_active_inert(const DimTable& s, const ThetaMor& f,
                                  const DimTable& t);

// The two composites of source/target inclusions between disks; one map
// when k' == k.
std::vector<ThetaMor> disk_monos(int k_lower, int k, int ambient);
ThetaMor disk_mono(int k_lower, int k, bool upper);

// f is a monomorphism iff precomposition is injective on maps from every
// disk of dimension <= ambient.
bool theta_is_mono(const DimTable& s, const ThetaMor& f, const DimTable& t);

// Orientation reversal: at recursion depth d with delta_d = 1 the object's
// blocks are reversed and the segment map is conjugated by the reversal.
DimTable op_delta_obj(const std::vector<int>& delta, const DimTable& t);
ThetaMor apply_op_delta(const std::vector<int>& delta, const ThetaMor& f,
                        const DimTable& s, const DimTable& t);

// Spine of a table: ordered column inclusions plus glue monos between
// consecutive disks.
struct SpineTable {
  std::vector<int> column_dims;   // k_i
  std::vector<int> glue_dims;     // k'_i
  std::vector<ThetaMor> columns;  // D_{k_i} -> T
  // glue_left[i]: D_{k'_i} -> D_{k_i}, glue_right[i]: D_{k'_i} -> D_{k_i+1},
  // with columns[i] . glue_left[i] == columns[i+1] . glue_right[i]
  std::vector<ThetaMor> glue_left;
  std::vector<ThetaMor> glue_right;
};

SpineTable spine_table(const DimTable& t);

// All valid tables with at most max_columns columns and entries at most
// max_height, sorted.
std::vector<DimTable> enumerate_tables(int max_columns, int max_height,
                                       int ambient);

class ThetaSkeleton {
 public:
  ThetaSkeleton(int ambient, std::vector<DimTable> objects);

  int ambient() const { return ambient_; }
  int n_objects() const { return int(objects_.size()); }
  const DimTable& object(int i) const { return objects_[size_t(i)]; }
  const std::vector<ThetaMor>& hom(int s, int t) const;
  int find_object(const DimTable& t) const;
  int find_mor(int s, int t, const ThetaMor& f) const;
  FinCatView view() const;
  std::string manifest() const;
  std::string content_hash() const;

 private:
  int ambient_;
  std::vector<DimTable> objects_;
  std::vector<std::vector<std::vector<ThetaMor>>> hom_;
  std::vector<std::vector<std::map<ThetaMor, int>>> index_;
};

ThetaSkeleton default_theta2_skeleton();  // tables with <= 3 columns, height <= 2

FunctorData build_op_delta(const ThetaSkeleton& sk,
                           const std::vector<int>& delta);

struct DeltaExtract {
  std::optional<std::vector<int>> delta;
  std::string error;
};

// Reads the fix-or-swap behaviour on the disk monos D_{l-1} -> D_l.
DeltaExtract delta_of_functor(const ThetaSkeleton& sk, const FunctorData& F);

}  // namespace dendro

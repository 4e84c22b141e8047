#include "dendro/theta.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dendro {

int DimTable::height() const {
  int h = 0;
  for (int k : top) h = std::max(h, k);
  return h;
}

std::optional<TableError> table_violation(const std::vector<int>& top,
                                          const std::vector<int>& bot,
                                          int ambient) {
  if (top.empty()) return TableError{"a table needs at least one column", -1};
  if (bot.size() + 1 != top.size())
    return TableError{"bottom row must have one entry less than the top row",
                      -1};
  for (size_t i = 0; i < top.size(); ++i)
    if (top[i] < 0) return TableError{"negative entry", int(i)};
  for (size_t i = 0; i < bot.size(); ++i) {
    if (bot[i] < 0) return TableError{"negative entry", int(i)};
    if (!(top[i] > bot[i]))
      return TableError{
          "constraint k_i > k'_i fails at i=" + std::to_string(i + 1),
          int(i + 1)};
    if (!(top[i + 1] > bot[i]))
      return TableError{
          "constraint k_{i+1} > k'_i fails at i=" + std::to_string(i + 1),
          int(i + 1)};
  }
  for (int k : top)
    if (k > ambient)
      return TableError{"height " + std::to_string(k) +
                            " exceeds the ambient dimension " +
                            std::to_string(ambient),
                        -1};
  return std::nullopt;
}

DimTable validate_table(const std::vector<int>& top,
                        const std::vector<int>& bot, int ambient) {
  if (auto err = table_violation(top, bot, ambient))
    throw std::invalid_argument(err->message);
  return DimTable{top, bot, ambient};
}

DimTable parse_table(const std::string& literal, int ambient) {
  std::vector<int> top, bot;
  bool after_slash = false;
  std::istringstream is(literal);
  std::string tok;
  while (is >> tok) {
    if (tok == "/") {
      if (after_slash) throw std::invalid_argument("duplicate '/'");
      after_slash = true;
      continue;
    }
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument("bad table entry: " + tok);
    (after_slash ? bot : top).push_back(v);
  }
  return validate_table(top, bot, ambient);
}

std::string render_table(const DimTable& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.top.size(); ++i) os << (i ? " " : "") << t.top[i];
  os << " /";
  for (size_t i = 0; i < t.bot.size(); ++i) os << " " << t.bot[i];
  return os.str();
}

DimTable disk_table(int k, int ambient) {
  return DimTable{{k}, {}, ambient};
}

// ------------------------------------------------------------- level trees

namespace {
PlanarTree leveltree_build(const DimTable& t, size_t lo, size_t hi, int d) {
  // subtree spanning columns lo..hi at depth d
  if (lo == hi && t.top[lo] == d) return PlanarTree();
  // split at bottom entries equal to d
  std::vector<PlanarTree> cs;
  size_t start = lo;
  for (size_t i = lo; i < hi; ++i) {
    if (t.bot[i] == d) {
      cs.push_back(leveltree_build(t, start, i, d + 1));
      start = i + 1;
    }
  }
  if (start == lo) {
    // no split at this depth: a single deeper child
    return PlanarTree::make_vertex({leveltree_build(t, lo, hi, d + 1)});
  }
  cs.push_back(leveltree_build(t, start, hi, d + 1));
  return PlanarTree::make_vertex(cs);
}
}  // namespace

PlanarTree table_leveltree(const DimTable& t) {
  return leveltree_build(t, 0, size_t(t.columns()) - 1, 0);
}

DimTable leveltree_table(const PlanarTree& t, int ambient) {
  std::vector<int> top, bot;
  // meets of consecutive leaves in different children of a vertex at depth d
  // have depth d; leaves inside one child contribute deeper meets
  std::function<void(int, int)> walk = [&](int e, int d) {
    int v = t.edge(e).above;
    if (v < 0) {
      top.push_back(d);
      return;
    }
    const auto& ins = t.vertex(v).in_edges;
    if (ins.empty())
      throw std::invalid_argument("level trees may not have nullary vertices");
    for (size_t i = 0; i < ins.size(); ++i) {
      if (i) bot.push_back(d);
      walk(ins[i], d + 1);
    }
  };
  walk(PlanarTree::root, 0);
  return validate_table(top, bot, ambient);
}

// ---------------------------------------------------------------- wreath

namespace {

struct Wreath {
  std::vector<Wreath> blocks;
};

// shifted block sub-tables split at bottom entries equal to zero
std::vector<DimTable> block_split(const DimTable& t) {
  std::vector<DimTable> out;
  if (t.columns() == 1 && t.top[0] == 0) return out;  // the point
  size_t start = 0;
  for (size_t i = 0; i + 1 < t.top.size(); ++i) {
    if (t.bot[i] == 0) {
      DimTable b;
      b.ambient = t.ambient - 1;
      for (size_t k = start; k <= i; ++k) {
        b.top.push_back(t.top[k] - 1);
        if (k > start) b.bot.push_back(t.bot[k - 1] - 1);
      }
      out.push_back(std::move(b));
      start = i + 1;
    }
  }
  DimTable b;
  b.ambient = t.ambient - 1;
  for (size_t k = start; k < t.top.size(); ++k) {
    b.top.push_back(t.top[k] - 1);
    if (k > start) b.bot.push_back(t.bot[k - 1] - 1);
  }
  out.push_back(std::move(b));
  return out;
}

DimTable block_join(const std::vector<DimTable>& blocks, int ambient) {
  if (blocks.empty()) return DimTable{{0}, {}, ambient};
  DimTable t;
  t.ambient = ambient;
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (j) t.bot.push_back(0);
    for (size_t k = 0; k < blocks[j].top.size(); ++k) {
      t.top.push_back(blocks[j].top[k] + 1);
      if (k) t.bot.push_back(blocks[j].bot[k - 1] + 1);
    }
  }
  return t;
}

}  // namespace

// ----------------------------------------------------------------- ThetaMor

bool ThetaMor::operator==(const ThetaMor& o) const {
  return top == o.top && fib == o.fib;
}

bool ThetaMor::operator<(const ThetaMor& o) const {
  if (top != o.top) return top < o.top;
  return fib < o.fib;
}

std::string ThetaMor::key() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < top.size(); ++i) os << (i ? "," : "") << top[i];
  for (const auto& fs : fib) {
    os << "|";
    for (size_t j = 0; j < fs.size(); ++j) {
      if (j) os << ";";
      os << fs[j].key();
    }
  }
  os << ")";
  return os.str();
}

namespace {

void hom_rec(const DimTable& s, const DimTable& t, const ThetaBounds& bounds,
             std::vector<ThetaMor>& out);

// all monotone maps [m] -> [p] as vectors of length m+1, lexicographic
void monotone_maps(int m, int p, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(size_t(m) + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i > m) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= p; ++v) {
      cur[size_t(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
}

void hom_rec(const DimTable& s, const DimTable& t, const ThetaBounds& bounds,
             std::vector<ThetaMor>& out) {
  auto sb = block_split(s);
  auto tb = block_split(t);
  int m = int(sb.size()), p = int(tb.size());
  std::vector<std::vector<int>> tops;
  monotone_maps(m, p, tops);
  for (const auto& top : tops) {
    // fibres per source segment i, target segment j in (top[i-1], top[i]]
    std::vector<std::vector<std::vector<ThetaMor>>> pools;  // [i][j-slot]
    bool feasible = true;
    for (int i = 1; i <= m && feasible; ++i) {
      std::vector<std::vector<ThetaMor>> slots;
      for (int j = top[size_t(i) - 1] + 1; j <= top[size_t(i)]; ++j) {
        std::vector<ThetaMor> fs;
        hom_rec(sb[size_t(i) - 1], tb[size_t(j) - 1], bounds, fs);
        if (fs.empty()) feasible = false;
        slots.push_back(std::move(fs));
      }
      pools.push_back(std::move(slots));
    }
    if (!feasible) continue;
    // cartesian product over all slots
    std::vector<std::pair<size_t, size_t>> flat;  // (i-1, slot)
    for (size_t i = 0; i < pools.size(); ++i)
      for (size_t k = 0; k < pools[i].size(); ++k) flat.push_back({i, k});
    std::vector<size_t> idx(flat.size(), 0);
    for (;;) {
      ThetaMor f;
      f.top = top;
      f.fib.assign(size_t(m), {});
      for (size_t x = 0; x < flat.size(); ++x)
        f.fib[flat[x].first].push_back(
            pools[flat[x].first][flat[x].second][idx[x]]);
      out.push_back(std::move(f));
      if (out.size() > bounds.max_homs)
        throw BoundExceeded("hom enumeration exceeded bound");
      size_t x = flat.size();
      bool done = flat.empty();
      while (x > 0) {
        --x;
        if (++idx[x] < pools[flat[x].first][flat[x].second].size()) break;
        idx[x] = 0;
        if (x == 0) done = true;
      }
      if (done) break;
    }
  }
}

}  // namespace

std::vector<ThetaMor> hom_tables(const DimTable& s, const DimTable& t,
                                 const ThetaBounds& bounds) {
  std::vector<ThetaMor> out;
  hom_rec(s, t, bounds, out);
  return out;
}

ThetaMor theta_identity(const DimTable& t) {
  auto tb = block_split(t);
  ThetaMor f;
  int m = int(tb.size());
  for (int i = 0; i <= m; ++i) f.top.push_back(i);
  for (int i = 1; i <= m; ++i)
    f.fib.push_back({theta_identity(tb[size_t(i) - 1])});
  return f;
}

namespace {
const ThetaMor& fibre_at(const ThetaMor& f, int i, int j) {
  // source segment i (1-based), target segment j in (top[i-1], top[i]]
  return f.fib[size_t(i) - 1][size_t(j - f.top[size_t(i) - 1] - 1)];
}
}  // namespace

ThetaMor theta_compose(const ThetaMor& g, const ThetaMor& f) {
  ThetaMor r;
  int m = int(f.top.size()) - 1;
  for (int i = 0; i <= m; ++i) r.top.push_back(g.top[size_t(f.top[size_t(i)])]);
  for (int i = 1; i <= m; ++i) {
    std::vector<ThetaMor> fs;
    for (int j = r.top[size_t(i) - 1] + 1; j <= r.top[size_t(i)]; ++j) {
      // the unique middle segment l covering j
      int found = -1;
      for (int l = f.top[size_t(i) - 1] + 1; l <= f.top[size_t(i)]; ++l)
        if (g.top[size_t(l) - 1] < j && j <= g.top[size_t(l)]) {
          found = l;
          break;
        }
      if (found < 0) throw std::logic_error("wreath composition slot missing");
      fs.push_back(
          theta_compose(fibre_at(g, found, j), fibre_at(f, i, found)));
    }
    r.fib.push_back(std::move(fs));
  }
  return r;
}

bool theta_is_inert(const ThetaMor& f) {
  int m = int(f.top.size()) - 1;
  for (int i = 1; i <= m; ++i)
    if (f.top[size_t(i)] != f.top[0] + i) return false;
  for (const auto& fs : f.fib)
    for (const auto& sub : fs)
      if (!theta_is_inert(sub)) return false;
  return true;
}

bool theta_is_active(const ThetaMor& f, const DimTable& s, const DimTable& t) {
  auto sb = block_split(s);
  auto tb = block_split(t);
  int m = int(sb.size()), p = int(tb.size());
  if (f.top[0] != 0 || f.top[size_t(m)] != p) return false;
  for (int i = 1; i <= m; ++i)
    for (int j = f.top[size_t(i) - 1] + 1; j <= f.top[size_t(i)]; ++j)
      if (!theta_is_active(fibre_at(f, i, j), sb[size_t(i) - 1],
                           tb[size_t(j) - 1]))
        return false;
  return true;
}

Factorization factor_active_inert(const DimTable& s, const ThetaMor& f,
                                  const DimTable& t) {
  auto sb = block_split(s);
  auto tb = block_split(t);
  int m = int(sb.size());
  Factorization r;
  std::vector<DimTable> mid_blocks;
  r.active.top.push_back(0);
  for (int i = 1; i <= m; ++i)
    r.active.top.push_back(f.top[size_t(i)] - f.top[0]);
  r.active.fib.assign(size_t(m), {});
  for (int i = 1; i <= m; ++i)
    for (int j = f.top[size_t(i) - 1] + 1; j <= f.top[size_t(i)]; ++j) {
      Factorization sub = factor_active_inert(
          sb[size_t(i) - 1], fibre_at(f, i, j), tb[size_t(j) - 1]);
      mid_blocks.push_back(sub.middle);
      r.active.fib[size_t(i) - 1].push_back(sub.active);
      r.inert.fib.push_back({sub.inert});
    }
  r.middle = block_join(mid_blocks, t.ambient);
  int q = int(mid_blocks.size());
  for (int j = 0; j <= q; ++j) r.inert.top.push_back(f.top[0] + j);
  return r;
}

ThetaMor disk_mono(int k_lower, int k, bool upper) {
  if (k_lower > k) throw std::invalid_argument("disk_mono needs k' <= k");
  if (k_lower == k) return theta_identity(disk_table(k, k));
  ThetaMor f;
  if (k_lower == 0) {
    f.top = {upper ? 1 : 0};
    return f;
  }
  f.top = {0, 1};
  f.fib = {{disk_mono(k_lower - 1, k - 1, upper)}};
  return f;
}

std::vector<ThetaMor> disk_monos(int k_lower, int k, int ambient) {
  (void)ambient;
  if (k_lower == k) return {theta_identity(disk_table(k, k))};
  return {disk_mono(k_lower, k, false), disk_mono(k_lower, k, true)};
}

bool theta_is_mono(const DimTable& s, const ThetaMor& f, const DimTable& t) {
  (void)t;
  for (int l = 0; l <= s.ambient; ++l) {
    auto probes = hom_tables(disk_table(l, s.ambient), s);
    std::set<std::string> images;
    for (const auto& u : probes) images.insert(theta_compose(f, u).key());
    if (images.size() != probes.size()) return false;
  }
  return true;
}

// ------------------------------------------------------------------ op_delta

namespace {
DimTable op_delta_rec(const std::vector<int>& delta, size_t d,
                      const DimTable& t) {
  auto blocks = block_split(t);
  if (blocks.empty()) return t;
  for (auto& b : blocks) b = op_delta_rec(delta, d + 1, b);
  if (d < delta.size() && delta[d]) std::reverse(blocks.begin(), blocks.end());
  return block_join(blocks, t.ambient);
}

ThetaMor op_delta_mor(const std::vector<int>& delta, size_t d,
                      const ThetaMor& f, const DimTable& s,
                      const DimTable& t) {
  auto sb = block_split(s);
  auto tb = block_split(t);
  int m = int(sb.size()), p = int(tb.size());
  bool flip = d < delta.size() && delta[d] != 0;
  ThetaMor r;
  if (!flip) {
    r.top = f.top;
    r.fib.assign(size_t(m), {});
    for (int i = 1; i <= m; ++i)
      for (int j = f.top[size_t(i) - 1] + 1; j <= f.top[size_t(i)]; ++j)
        r.fib[size_t(i) - 1].push_back(
            op_delta_mor(delta, d + 1, fibre_at(f, i, j), sb[size_t(i) - 1],
                         tb[size_t(j) - 1]));
    return r;
  }
  for (int i = 0; i <= m; ++i)
    r.top.push_back(p - f.top[size_t(m - i)]);
  r.fib.assign(size_t(m), {});
  for (int i = 1; i <= m; ++i)
    for (int j = r.top[size_t(i) - 1] + 1; j <= r.top[size_t(i)]; ++j) {
      int oi = m + 1 - i, oj = p + 1 - j;
      r.fib[size_t(i) - 1].push_back(
          op_delta_mor(delta, d + 1, fibre_at(f, oi, oj), sb[size_t(oi) - 1],
                       tb[size_t(oj) - 1]));
    }
  return r;
}
}  // namespace

DimTable op_delta_obj(const std::vector<int>& delta, const DimTable& t) {
  return op_delta_rec(delta, 0, t);
}

ThetaMor apply_op_delta(const std::vector<int>& delta, const ThetaMor& f,
                        const DimTable& s, const DimTable& t) {
  return op_delta_mor(delta, 0, f, s, t);
}

// -------------------------------------------------------------------- spine

namespace {
ThetaMor column_inclusion(const DimTable& t, int col) {
  if (t.columns() == 1 && t.top[0] == 0) {
    ThetaMor f;
    f.top = {0};
    return f;
  }
  auto blocks = block_split(t);
  int j = 0, local = col, seen = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    int c = blocks[b].columns();
    if (col < seen + c) {
      j = int(b);
      local = col - seen;
      break;
    }
    seen += c;
  }
  const DimTable& blk = blocks[size_t(j)];
  ThetaMor f;
  f.top = {j, j + 1};
  if (blk.columns() == 1 && blk.top[0] == 0) {
    ThetaMor base;
    base.top = {0};
    f.fib = {{base}};
  } else {
    f.fib = {{column_inclusion(blk, local)}};
  }
  return f;
}
}  // namespace

SpineTable spine_table(const DimTable& t) {
  SpineTable s;
  s.column_dims = t.top;
  s.glue_dims = t.bot;
  for (int c = 0; c < t.columns(); ++c)
    s.columns.push_back(column_inclusion(t, c));
  for (size_t i = 0; i < t.bot.size(); ++i) {
    s.glue_left.push_back(disk_mono(t.bot[i], t.top[i], true));
    s.glue_right.push_back(disk_mono(t.bot[i], t.top[i + 1], false));
  }
  return s;
}

// ------------------------------------------------------------- enumeration

std::vector<DimTable> enumerate_tables(int max_columns, int max_height,
                                       int ambient) {
  std::vector<DimTable> out;
  std::function<void(DimTable&)> extend = [&](DimTable& t) {
    out.push_back(t);
    if (t.columns() >= max_columns) return;
    for (int kp = 0; kp < t.top.back(); ++kp)
      for (int k = kp + 1; k <= max_height; ++k) {
        t.bot.push_back(kp);
        t.top.push_back(k);
        extend(t);
        t.bot.pop_back();
        t.top.pop_back();
      }
  };
  for (int k = 0; k <= max_height; ++k) {
    DimTable t{{k}, {}, ambient};
    extend(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- skeleton

ThetaSkeleton::ThetaSkeleton(int ambient, std::vector<DimTable> objects)
    : ambient_(ambient), objects_(std::move(objects)) {
  int n = int(objects_.size());
  hom_.assign(size_t(n), std::vector<std::vector<ThetaMor>>(size_t(n)));
  index_.assign(size_t(n), std::vector<std::map<ThetaMor, int>>(size_t(n)));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      hom_[size_t(s)][size_t(t)] =
          hom_tables(objects_[size_t(s)], objects_[size_t(t)]);
      auto& idx = index_[size_t(s)][size_t(t)];
      for (size_t k = 0; k < hom_[size_t(s)][size_t(t)].size(); ++k)
        idx[hom_[size_t(s)][size_t(t)][k]] = int(k);
    }
}

const std::vector<ThetaMor>& ThetaSkeleton::hom(int s, int t) const {
  return hom_[size_t(s)][size_t(t)];
}

int ThetaSkeleton::find_object(const DimTable& t) const {
  for (size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == t) return int(i);
  return -1;
}

int ThetaSkeleton::find_mor(int s, int t, const ThetaMor& f) const {
  auto it = index_[size_t(s)][size_t(t)].find(f);
  if (it == index_[size_t(s)][size_t(t)].end()) return -1;
  return it->second;
}

FinCatView ThetaSkeleton::view() const {
  FinCatView v;
  v.n_objects = n_objects();
  for (const auto& t : objects_) v.object_names.push_back(render_table(t));
  v.hom_size = [this](int s, int t) { return int(hom(s, t).size()); };
  v.id_index = [this](int o) {
    return find_mor(o, o, theta_identity(object(o)));
  };
  v.compose = [this](int s, int t, int u, int f, int g) {
    (void)t;
    ThetaMor c = theta_compose(hom(t, u)[size_t(g)], hom(s, t)[size_t(f)]);
    int i = find_mor(s, u, c);
    if (i < 0) throw std::logic_error("composite missing from skeleton");
    return i;
  };
  return v;
}

std::string ThetaSkeleton::manifest() const {
  std::string out = "theta skeleton n=" + std::to_string(ambient_) + "\n";
  for (const auto& t : objects_) out += render_table(t) + "\n";
  return out;
}

std::string ThetaSkeleton::content_hash() const {
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx",
           (unsigned long long)fnv1a64(manifest()));
  return buf;
}

ThetaSkeleton default_theta2_skeleton() {
  return ThetaSkeleton(2, enumerate_tables(3, 2, 2));
}

FunctorData build_op_delta(const ThetaSkeleton& sk,
                           const std::vector<int>& delta) {
  FunctorData F;
  F.skeleton_id = sk.content_hash();
  for (int i = 0; i < sk.n_objects(); ++i) {
    int img = sk.find_object(op_delta_obj(delta, sk.object(i)));
    if (img < 0)
      throw std::invalid_argument("skeleton not closed under reversal");
    F.obj.push_back(img);
  }
  for (int s = 0; s < sk.n_objects(); ++s)
    for (int t = 0; t < sk.n_objects(); ++t) {
      std::vector<int> table;
      for (const auto& f : sk.hom(s, t)) {
        ThetaMor m = apply_op_delta(delta, f, sk.object(s), sk.object(t));
        int i = sk.find_mor(F.obj[size_t(s)], F.obj[size_t(t)], m);
        if (i < 0) throw std::logic_error("reversed morphism missing");
        table.push_back(i);
      }
      F.mor[{s, t}] = std::move(table);
    }
  return F;
}

DeltaExtract delta_of_functor(const ThetaSkeleton& sk, const FunctorData& F) {
  DeltaExtract out;
  std::vector<int> delta;
  for (int l = 1; l <= sk.ambient(); ++l) {
    int lo = sk.find_object(disk_table(l - 1, sk.ambient()));
    int hi = sk.find_object(disk_table(l, sk.ambient()));
    if (lo < 0 || hi < 0) {
      out.error = "skeleton lacks a disk of dimension <= " + std::to_string(l);
      return out;
    }
    if (F.obj[size_t(lo)] != lo || F.obj[size_t(hi)] != hi) {
      out.error = "functor does not preserve the disks";
      return out;
    }
    int si = sk.find_mor(lo, hi, disk_mono(l - 1, l, false));
    int ti = sk.find_mor(lo, hi, disk_mono(l - 1, l, true));
    const auto& table = F.mor.at({lo, hi});
    int fs = table[size_t(si)];
    int ft = table[size_t(ti)];
    if (fs == si && ft == ti) {
      delta.push_back(0);
    } else if (fs == ti && ft == si) {
      delta.push_back(1);
    } else {
      out.error = "a disk mono pair is not sent to a disk mono pair";
      return out;
    }
  }
  out.delta = std::move(delta);
  return out;
}

}  // namespace dendro

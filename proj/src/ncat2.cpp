#include "dendro/ncat2.hpp"

#include <stdexcept>

namespace dendro {

namespace {

// generator scheme of a height <= 2 table: objects 0..q and, per hom slot,
// the number s of 2-generators (so s+1 parallel 1-generators)
struct Scheme {
  std::vector<int> s;
  int objects() const { return int(s.size()) + 1; }
};

Scheme scheme_of(const DimTable& t) {
  if (t.height() > 2)
    throw std::invalid_argument("two-functor oracle needs height <= 2");
  Scheme sc;
  if (t.columns() == 1 && t.top[0] == 0) return sc;
  size_t start = 0;
  auto flush = [&](size_t end) {  // columns start..end form one block
    if (end == start && t.top[start] == 1) {
      sc.s.push_back(0);
    } else {
      // all columns in a multi-column or height-2 block have height 2
      sc.s.push_back(int(end - start + 1));
    }
  };
  for (size_t i = 0; i + 1 < t.top.size(); ++i)
    if (t.bot[i] == 0) {
      flush(i);
      start = i + 1;
    }
  flush(t.top.size() - 1);
  return sc;
}

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * uint64_t(n - i) / uint64_t(i + 1);
  return r;
}

}  // namespace

uint64_t monotone_map_count(int m, int p) {
  // multisets of size m+1 over p+1 values
  return binom(m + p + 1, m + 1);
}

uint64_t strict_two_functor_count(const DimTable& s, const DimTable& t) {
  Scheme a = scheme_of(s);
  Scheme b = scheme_of(t);
  int qs = a.objects() - 1, qt = b.objects() - 1;
  // number of non-decreasing (n+1)-tuples over {0..k} is binom(n+k+1, n+1)
  auto chains = [&](int n, int k) { return binom(n + k + 1, n + 1); };
  uint64_t total = 0;
  std::vector<int> obj(size_t(qs) + 1, 0);
  for (;;) {
    uint64_t prod = 1;
    for (int j = 1; j <= qs && prod; ++j) {
      int u = obj[size_t(j) - 1], v = obj[size_t(j)];
      if (u > v) {
        prod = 0;
        break;
      }
      for (int blk = u + 1; blk <= v; ++blk)
        prod *= chains(a.s[size_t(j) - 1], b.s[size_t(blk) - 1]);
    }
    total += prod;
    int i = qs;
    while (i >= 0) {
      if (++obj[size_t(i)] <= qt) break;
      obj[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return total;
}

}  // namespace dendro

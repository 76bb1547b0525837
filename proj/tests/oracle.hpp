#pragma once
// Brute-force oracles that share no code with the library: a byte-per-entry
// GF(2) rank and a Khovanov cube built straight from the PD tuples.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::uint8_t>>;  // rows of 0/1

inline std::size_t naive_rank(Dense m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c])
        for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[r][k];
    ++r;
  }
  return r;
}

using PD = std::vector<std::array<int, 4>>;

// +1 when the over-strand enters at slot b. Orientation comes from the
// under-strands (a in, c out) propagated along over-strands.
inline std::vector<int> signs(const PD& pd) {
  std::map<int, std::vector<std::pair<int, int>>> occ;  // arc -> (crossing, slot)
  for (int i = 0; i < (int)pd.size(); ++i)
    for (int s = 0; s < 4; ++s) occ[pd[i][s]].push_back({i, s});
  // head[(i,s)] = 1 when the arc at slot s of crossing i ends there.
  std::map<std::pair<int, int>, int> head;
  for (int i = 0; i < (int)pd.size(); ++i) {
    head[{i, 0}] = 1;
    head[{i, 2}] = 0;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [arc, v] : occ) {
      auto e0 = v[0], e1 = v[1];
      if (head.count(e0) && !head.count(e1)) head[e1] = 1 - head[e0], changed = true;
      if (head.count(e1) && !head.count(e0)) head[e0] = 1 - head[e1], changed = true;
    }
    for (int i = 0; i < (int)pd.size(); ++i) {
      std::pair<int, int> b{i, 1}, d{i, 3};
      if (head.count(b) && !head.count(d)) head[d] = 1 - head[b], changed = true;
      if (head.count(d) && !head.count(b)) head[b] = 1 - head[d], changed = true;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < (int)pd.size(); ++i) out.push_back(head.count({i, 1}) && head[{i, 1}] ? 1 : -1);
  return out;
}

struct Circles {
  std::map<int, int> of_arc;  // arc -> circle
  int count = 0;
};

inline Circles circles(const PD& pd, std::uint32_t r) {
  std::map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& x : pd)
    for (int a : x) parent[a] = a;
  for (int i = 0; i < (int)pd.size(); ++i) {
    auto [a, b, c, d] = pd[i];
    bool one = (r >> i) & 1;
    auto join = [&](int u, int v) { parent[find(u)] = find(v); };
    if (one) join(a, b), join(c, d);
    else join(a, d), join(b, c);
  }
  Circles out;
  std::map<int, int> id;
  for (auto& [arc, p] : parent) {
    int root = find(arc);
    if (!id.count(root)) id[root] = out.count++;
    out.of_arc[arc] = id[root];
  }
  return out;
}

// Khovanov homology over F2 as (h, q) -> dim. Labels: bit set = v-.
inline std::map<std::pair<int, int>, long long> khovanov_dims(const PD& pd) {
  int k = (int)pd.size();
  auto sg = signs(pd);
  int np = 0, nm = 0;
  for (int s : sg) (s > 0 ? np : nm)++;
  std::vector<Circles> res;
  std::vector<std::size_t> offset{0};
  for (std::uint32_t r = 0; r < (1u << k); ++r) {
    res.push_back(circles(pd, r));
    offset.push_back(offset.back() + (std::size_t{1} << res.back().count));
  }
  std::size_t n = offset.back();
  std::vector<std::pair<int, int>> grade(n);
  for (std::uint32_t r = 0; r < (1u << k); ++r) {
    int ones = __builtin_popcount(r);
    for (std::uint32_t l = 0; l < (1u << res[r].count); ++l) {
      int minus = __builtin_popcount(l);
      grade[offset[r] + l] = {ones - nm, (res[r].count - 2 * minus) + ones + np - 2 * nm};
    }
  }
  // d as a list of (source, target) entries, cancelled mod 2
  std::map<std::pair<std::size_t, std::size_t>, int> d;
  for (std::uint32_t r = 0; r < (1u << k); ++r)
    for (int i = 0; i < k; ++i) {
      if ((r >> i) & 1) continue;
      std::uint32_t s = r | (1u << i);
      const auto& A = res[r];
      const auto& B = res[s];
      for (std::uint32_t l = 0; l < (1u << A.count); ++l) {
        std::map<int, int> arc_label;
        for (auto [arc, c] : A.of_arc) arc_label[arc] = (l >> c) & 1;
        int ca = A.of_arc.at(pd[i][0]), cb = A.of_arc.at(pd[i][1]);
        std::vector<std::map<int, int>> outs;  // target circle -> label
        if (ca != cb) {
          int la = (l >> ca) & 1, lb = (l >> cb) & 1;
          if (la && lb) continue;
          std::map<int, int> o;
          for (auto [arc, c] : B.of_arc) o[c] = arc_label[arc];
          o[B.of_arc.at(pd[i][0])] = la | lb;
          outs.push_back(o);
        } else {
          int la = (l >> ca) & 1;
          int x = B.of_arc.at(pd[i][0]), y = B.of_arc.at(pd[i][1]);
          if (x == y) y = B.of_arc.at(pd[i][3]);
          std::map<int, int> o;
          for (auto [arc, c] : B.of_arc) o[c] = arc_label[arc];
          if (la) {
            o[x] = 1, o[y] = 1;
            outs.push_back(o);
          } else {
            o[x] = 0, o[y] = 1;
            outs.push_back(o);
            o[x] = 1, o[y] = 0;
            outs.push_back(o);
          }
        }
        for (auto& o : outs) {
          std::uint32_t m = 0;
          for (auto [c, v] : o)
            if (v) m |= 1u << c;
          d[{offset[r] + l, offset[s] + m}] ^= 1;
        }
      }
    }
  // blocks (h, q) -> (h+1, q)
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_grade;
  for (std::size_t g = 0; g < n; ++g) by_grade[grade[g]].push_back(g);
  std::map<std::pair<int, int>, long long> rank_out;
  for (auto& [hq, src] : by_grade) {
    auto it = by_grade.find({hq.first + 1, hq.second});
    if (it == by_grade.end()) continue;
    const auto& tgt = it->second;
    Dense m(tgt.size(), std::vector<std::uint8_t>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        auto e = d.find({src[j], tgt[i]});
        if (e != d.end() && e->second) m[i][j] = 1;
      }
    rank_out[hq] = (long long)naive_rank(m);
  }
  std::map<std::pair<int, int>, long long> dims;
  for (auto& [hq, g] : by_grade) {
    long long v = (long long)g.size() - rank_out[hq] - rank_out[{hq.first - 1, hq.second}];
    if (v) dims[hq] = v;
  }
  return dims;
}

}  // namespace oracle

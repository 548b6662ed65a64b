#pragma once

// The fan Σ(Q_n) on the almost positive roots: construction from the
// compatibility relation, smoothness and completeness certification,
// f-vector and Betti numbers.

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "anfan/combinat.hpp"
#include "anfan/exactla.hpp"

namespace anfan {

using RayVector = std::vector<Int>;

/// -i ↦ -e_i, α ↦ Σ_{i∈α} e_i; always primitive.
inline RayVector ray_vector(const AlmostPositive& a, int n) {
  RayVector v(n, Int(0));
  if (a.is_negative()) {
    v[a.neg - 1] = -1;
  } else {
    for (int i = a.pos.lo; i <= a.pos.hi; ++i) v[i - 1] = 1;
  }
  return v;
}

struct Fan {
  int n = 0;
  std::vector<AlmostPositive> rays;
  std::vector<RayVector> ray_vectors;
  // cones_by_dim[k] lists the k-dimensional cones as sorted ray-index sets
  std::vector<std::vector<std::vector<int>>> cones_by_dim;

  const std::vector<std::vector<int>>& max_cones() const {
    return cones_by_dim[n];
  }

  /// f-vector: d[k] = number of k-dimensional cones (d[0] = 1, the origin).
  std::vector<Int> f_vector() const {
    std::vector<Int> d;
    for (const auto& level : cones_by_dim)
      d.push_back(Int(static_cast<unsigned long>(level.size())));
    return d;
  }
};

/// Cones are the pairwise-compatible subsets; enumerated as cliques of the
/// compatibility graph, graded by cardinality.
inline Fan build_fan(int n) {
  Fan f;
  f.n = n;
  f.rays = almost_positive_roots(n);
  for (const auto& r : f.rays) f.ray_vectors.push_back(ray_vector(r, n));
  int m = static_cast<int>(f.rays.size());
  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      compat[i][j] = compatible(f.rays[i], f.rays[j]);

  f.cones_by_dim.assign(n + 1, {});
  f.cones_by_dim[0].push_back({});
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    for (int i = start; i < m; ++i) {
      bool ok = true;
      for (int j : current)
        if (!compat[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(i);
      f.cones_by_dim[current.size()].push_back(current);
      if (static_cast<int>(current.size()) < n) rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return f;
}

struct FanReport {
  bool pass = true;
  std::vector<std::string> issues;

  void fail(std::string msg) {
    pass = false;
    issues.push_back(std::move(msg));
  }
};

/// Every maximal cone must have exactly n rays forming a matrix of
/// determinant ±1.
inline FanReport verify_smooth(const Fan& f) {
  FanReport rep;
  for (const auto& cone : f.max_cones()) {
    if (static_cast<int>(cone.size()) != f.n) {
      rep.fail("maximal cone of wrong cardinality");
      continue;
    }
    std::vector<std::vector<Int>> mat;
    for (int idx : cone) mat.push_back(f.ray_vectors[idx]);
    Int d = det_int(mat);
    if (d != 1 && d != -1) {
      std::string labels;
      for (int idx : cone) labels += to_string(f.rays[idx]) + " ";
      rep.fail("non-unimodular cone {" + labels + "} det=" + d.get_str());
    }
  }
  return rep;
}

/// Completeness via wall pairing: every (n-1)-cone lies in exactly two
/// maximal cones and the adjacency graph through walls is connected.
inline FanReport verify_complete(const Fan& f) {
  FanReport rep;
  const auto& maxc = f.max_cones();
  if (maxc.empty()) {
    rep.fail("no maximal cones");
    return rep;
  }
  std::map<std::vector<int>, std::vector<int>> walls;  // wall -> max cone ids
  for (std::size_t c = 0; c < maxc.size(); ++c) {
    for (std::size_t drop = 0; drop < maxc[c].size(); ++drop) {
      std::vector<int> wall = maxc[c];
      wall.erase(wall.begin() + drop);
      walls[wall].push_back(static_cast<int>(c));
    }
  }
  std::vector<std::vector<int>> adj(maxc.size());
  for (const auto& [wall, owners] : walls) {
    if (owners.size() != 2) {
      std::string labels;
      for (int idx : wall) labels += to_string(f.rays[idx]) + " ";
      rep.fail("wall {" + labels + "} lies in " +
               std::to_string(owners.size()) + " maximal cones");
      continue;
    }
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  // connectivity of the adjacency graph
  std::vector<bool> seen(maxc.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        ++reached;
        q.push(d);
      }
  }
  if (reached != maxc.size()) rep.fail("maximal-cone adjacency graph disconnected");
  return rep;
}

/// b_{2k} = Σ_{i≥k} (-1)^{i-k} C(i,k) d_{n-i}.
inline std::vector<Int> betti_numbers(const Fan& f) {
  std::vector<Int> d = f.f_vector();
  std::vector<Int> b(f.n + 1, Int(0));
  for (int k = 0; k <= f.n; ++k) {
    for (int i = k; i <= f.n; ++i) {
      Int term = binomial(i, k) * d[f.n - i];
      if ((i - k) % 2 == 0)
        b[k] += term;
      else
        b[k] -= term;
    }
  }
  return b;
}

}  // namespace anfan

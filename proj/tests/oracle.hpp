#pragma once

// Reference computations used only by the tests. They are written
// independently of the library code paths they check: plain adjacency
// matrices, naive BFS, Gaussian elimination and a floating-point
// eigensolver.

#include "drg/arrays.hpp"
#include "drg/graphs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace oracle {

using drg::Integer;
using drg::Rational;

inline std::vector<std::vector<char>> adjacency_matrix(const drg::Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::vector<int> bfs(const std::vector<std::vector<char>>& a, int source) {
  const int n = static_cast<int>(a.size());
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w = 0; w < n; ++w) {
      if (a[v][w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

/// Shell sizes |Gamma_i(0)|.
inline std::vector<long> shells(const drg::Graph& g) {
  const auto dist = bfs(adjacency_matrix(g), 0);
  std::vector<long> out(*std::max_element(dist.begin(), dist.end()) + 1, 0);
  for (int d : dist) ++out[d];
  return out;
}

/// Intersection numbers measured from every pair; returns false when they
/// are not constant per distance.
inline bool intersection_numbers(const drg::Graph& g, std::vector<long>& b, std::vector<long>& c) {
  const auto a = adjacency_matrix(g);
  const int n = g.order();
  std::vector<std::vector<int>> dist(n);
  for (int x = 0; x < n; ++x) dist[x] = bfs(a, x);
  int diameter = 0;
  for (int x = 0; x < n; ++x) diameter = std::max(diameter, *std::max_element(dist[x].begin(), dist[x].end()));
  std::vector<long> bb(diameter + 1, -1);
  std::vector<long> cc(diameter + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int i = dist[x][y];
      long up = 0;
      long down = 0;
      for (int z = 0; z < n; ++z) {
        if (!a[y][z]) continue;
        if (dist[x][z] == i + 1) ++up;
        if (dist[x][z] == i - 1) ++down;
      }
      if (bb[i] < 0) bb[i] = up;
      if (cc[i] < 0) cc[i] = down;
      if (bb[i] != up || cc[i] != down) return false;
    }
  }
  b.assign(bb.begin(), bb.end() - 1);
  c.assign(cc.begin() + 1, cc.end());
  return true;
}

inline drg::IntersectionArray array_of(const std::vector<long>& b, const std::vector<long>& c) {
  std::vector<Integer> bi(b.begin(), b.end());
  std::vector<Integer> ci(c.begin(), c.end());
  return drg::IntersectionArray(bi, ci);
}

/// H(d,q): b_i = (d-i)(q-1), c_i = i.
inline drg::IntersectionArray hamming_array(long d, long q) {
  std::vector<long> b;
  std::vector<long> c;
  for (long i = 0; i < d; ++i) b.push_back((d - i) * (q - 1));
  for (long i = 1; i <= d; ++i) c.push_back(i);
  return array_of(b, c);
}

/// J(n,e): b_i = (e-i)(n-e-i), c_i = i^2.
inline drg::IntersectionArray johnson_array(long n, long e) {
  std::vector<long> b;
  std::vector<long> c;
  for (long i = 0; i < e; ++i) b.push_back((e - i) * (n - e - i));
  for (long i = 1; i <= e; ++i) c.push_back(i * i);
  return array_of(b, c);
}

/// The tridiagonal matrix L1 with rows (c_i, a_i, b_i).
inline std::vector<std::vector<Rational>> l1_matrix(const drg::IntersectionArray& arr) {
  const int d = arr.diameter();
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    m[i][i] = arr.k() - arr.b_at(i) - arr.c_at(i);
    if (i > 0) m[i][i - 1] = arr.c_at(i);
    if (i < d) m[i][i + 1] = arr.b_at(i);
  }
  return m;
}

/// det(x I - L1) by exact Gaussian elimination.
inline Rational char_det(const drg::IntersectionArray& arr, const Rational& x) {
  auto m = l1_matrix(arr);
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x : Rational(0)) - m[i][j];
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

/// Eigenvalues of L1 (not symmetric; general solver), real parts, descending.
inline std::vector<double> l1_eigenvalues(const drg::IntersectionArray& arr) {
  const auto m = l1_matrix(arr);
  const int n = static_cast<int>(m.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = m[i][j].get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i].real());
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Distinct adjacency eigenvalues, descending, merged within `merge`.
inline std::vector<double> adjacency_eigenvalues(const drg::Graph& g, double merge = 1e-6) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> all(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(all.rbegin(), all.rend());
  std::vector<double> distinct;
  for (double x : all) {
    if (distinct.empty() || std::abs(distinct.back() - x) > merge) distinct.push_back(x);
  }
  return distinct;
}

/// Head by direct comparison of rows.
inline int head(const drg::IntersectionArray& arr) {
  int h = 0;
  for (int j = 1; j < arr.diameter(); ++j) {
    if (arr.c_at(j) == arr.c_at(1) && arr.a_at(j) == arr.a_at(1) && arr.b_at(j) == arr.b_at(1)) ++h;
  }
  return h;
}

/// Window test in plain integer arithmetic: 3k > 8(a1+1), k > 3 and
/// k < 4 a1 + 10 - 6 c2.
inline bool in_window(long k, long a1, long c2) {
  return k > 3 && 3 * k > 8 * (a1 + 1) && k < 4 * a1 + 10 - 6 * c2;
}

}  // namespace oracle

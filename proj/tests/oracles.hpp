#pragma once

// Brute-force reference computations used as test oracles. Nothing here
// shares code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

// Generalized Cartan matrix of an affine type, node 0 affine, hardcoded.
inline Matrix affine_gcm(char family, int rank) {
  const int n = rank + 1;
  Matrix a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, long long aij, long long aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  if (family == 'A' && rank == 1) {
    link(0, 1, -2, -2);
  } else if (family == 'A') {
    for (int i = 0; i < n; ++i) link(i, (i + 1) % n, -1, -1);
  } else if (family == 'C' && rank == 2) {
    link(0, 1, -1, -2);
    link(1, 2, -2, -1);
  } else if (family == 'G' && rank == 2) {
    link(0, 2, -1, -1);
    link(2, 1, -1, -3);
  } else if (family == 'B' && rank == 3) {
    link(0, 2, -1, -1);
    link(1, 2, -1, -1);
    link(2, 3, -1, -2);
  }
  return a;
}

// Simple reflection s_i acting on the root lattice: alpha_j -> alpha_j - a_ij alpha_i.
// An element is stored as the matrix whose column j is w(alpha_j).
inline Matrix apply_reflection(const Matrix& gcm, int i, const Matrix& w) {
  Matrix out = w;
  const int n = static_cast<int>(gcm.size());
  for (int col = 0; col < n; ++col) {
    long long pairing = 0;  // <alpha_i^vee, w(alpha_col)>
    for (int k = 0; k < n; ++k) pairing += gcm[i][k] * w[k][col];
    out[i][col] -= pairing;
  }
  return out;
}

// Word-length sphere sizes 0..K of the Weyl group of `gcm`, by exhaustive BFS
// with a global visited set.
inline std::vector<std::uint64_t> sphere_sizes(const Matrix& gcm, int max_length) {
  const int n = static_cast<int>(gcm.size());
  Matrix id(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Matrix> seen{id};
  std::vector<Matrix> frontier{id};
  std::vector<std::uint64_t> sizes{1};
  for (int k = 1; k <= max_length && !frontier.empty(); ++k) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        Matrix v = apply_reflection(gcm, i, w);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    if (next.empty()) break;
    sizes.push_back(next.size());
    frontier = std::move(next);
  }
  return sizes;
}

// Order of s_i s_j, or 0 when it exceeds `limit`.
inline int pair_order(const Matrix& gcm, int i, int j, int limit = 12) {
  const int n = static_cast<int>(gcm.size());
  Matrix id(n, std::vector<long long>(n, 0));
  for (int k = 0; k < n; ++k) id[k][k] = 1;
  Matrix w = id;
  for (int m = 1; m <= limit; ++m) {
    w = apply_reflection(gcm, i, apply_reflection(gcm, j, w));
    if (w == id) return m;
  }
  return 0;
}

// Prime field extension F_p[X]/(X^2 - r), elements u + p v.
struct PrimeQuadratic {
  int p;
  int r;  // a non-residue mod p
  int size() const { return p * p; }
  int mul(int x, int y) const {
    const int u1 = x % p, v1 = x / p, u2 = y % p, v2 = y / p;
    const int u = (u1 * u2 + r * (v1 * v2 % p)) % p;
    const int v = (u1 * v2 + u2 * v1) % p;
    return u + p * v;
  }
  int add(int x, int y) const { return (x % p + y % p) % p + p * ((x / p + y / p) % p); }
  int inv(int x) const {
    for (int y = 1; y < size(); ++y)
      if (mul(x, y) == 1) return y;
    return -1;
  }
  bool in_base(int x) const { return x < p; }
};

inline PrimeQuadratic make_prime_quadratic(int p) {
  for (int r = 2; r < p; ++r) {
    bool square = false;
    for (int s = 1; s < p; ++s) square = square || (s * s % p == r);
    if (!square) return {p, r};
  }
  return {p, p - 1};
}

// Orbit sizes (sorted) of x -> a^2 x + b, optionally with x -> 1/(a^2 x c + b)
// for c = x0^-2, x0 the least element outside F_p with x0^2 in F_p.
inline std::vector<int> prime_orbits(int p, bool with_inversion) {
  const PrimeQuadratic k = make_prime_quadratic(p);
  const int n = k.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  int c = 0;
  if (with_inversion) {
    for (int x0 = p; x0 < n && c == 0; ++x0)
      if (k.in_base(k.mul(x0, x0))) c = k.inv(k.mul(x0, x0));
  }
  for (int x = p; x < n; ++x)
    for (int a = 1; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const int a2 = a * a % p;
        unite(x, k.add(k.mul(a2, x), b));
        if (with_inversion) {
          const int d = k.add(k.mul(k.mul(a2, x), c), b);
          if (d != 0) {
            const int y = k.inv(d);
            if (!k.in_base(y)) unite(x, y);
          }
        }
      }
  std::map<int, int> counts;
  for (int x = p; x < n; ++x) ++counts[find(x)];
  std::vector<int> sizes;
  for (const auto& [root, size] : counts) sizes.push_back(size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle

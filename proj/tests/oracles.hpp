#pragma once

// Reference computations used only by the tests. None of them touch the library's Cartan
// matrices or reflection code: roots are written down in Euclidean coordinates, and group
// orders come from hand-listed degrees.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::rational<std::int64_t>;
using Vec = std::vector<Q>;

inline Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Vec unit(int dim, int i) {
  Vec v(static_cast<std::size_t>(dim), Q(0));
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

inline Vec diff(int dim, int i, int j) {
  Vec v = unit(dim, i);
  v[static_cast<std::size_t>(j - 1)] -= 1;
  return v;
}

/// Simple roots in an orthonormal basis, Bourbaki numbering.
inline std::vector<Vec> simple_roots(char family, int n) {
  std::vector<Vec> r;
  switch (family) {
    case 'A':
      for (int i = 1; i <= n; ++i) r.push_back(diff(n + 1, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 1; i < n; ++i) r.push_back(diff(n, i, i + 1));
      if (family == 'B') {
        r.push_back(unit(n, n));
      } else if (family == 'C') {
        Vec v = unit(n, n);
        v.back() = 2;
        r.push_back(v);
      } else {
        Vec v = unit(n, n - 1);
        v.back() = 1;
        r.push_back(v);
      }
      break;
    case 'G':
      r.push_back(diff(3, 1, 2));
      r.push_back({Q(-2), Q(1), Q(1)});
      break;
    case 'F':
      r.push_back(diff(4, 2, 3));
      r.push_back(diff(4, 3, 4));
      r.push_back(unit(4, 4));
      r.push_back({Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)});
      break;
    case 'E': {
      std::vector<Vec> e8;
      Vec a1(8, Q(-1, 2));
      a1[0] = Q(1, 2);
      a1[7] = Q(1, 2);
      e8.push_back(a1);
      Vec a2(8, Q(0));
      a2[0] = 1;
      a2[1] = 1;
      e8.push_back(a2);
      for (int i = 3; i <= 8; ++i) e8.push_back(diff(8, i - 1, i - 2));
      r.assign(e8.begin(), e8.begin() + n);
      break;
    }
    default:
      throw std::invalid_argument("unknown family");
  }
  return r;
}

/// <a, b> = 2 (a, b) / (b, b)
inline Q pairing(const Vec& a, const Vec& b) { return Q(2) * dot(a, b) / dot(b, b); }

/// Solves A x = b over Q (A square, invertible).
inline Vec solve(std::vector<Vec> a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) throw std::runtime_error("singular system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].numerator() == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Weight coordinates m_j = <lambda, alpha_j>, reflected in the Euclidean realization by s_i
/// (1-based), then read back as coordinates.
inline std::vector<std::int64_t> reflect_coordinates(const std::vector<Vec>& roots, const std::vector<std::int64_t>& m,
                                                     int i) {
  const std::size_t n = roots.size();
  // lambda = sum_k x_k alpha_k with sum_k x_k <alpha_k, alpha_j> = m_j
  std::vector<Vec> a(n, Vec(n));
  Vec rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) a[j][k] = pairing(roots[k], roots[j]);
    rhs[j] = m[j];
  }
  const Vec x = solve(a, rhs);
  Vec lambda(roots[0].size(), Q(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t d = 0; d < lambda.size(); ++d) lambda[d] += x[k] * roots[k][d];
  }
  const Vec& alpha = roots[static_cast<std::size_t>(i - 1)];
  const Q c = pairing(lambda, alpha);
  for (std::size_t d = 0; d < lambda.size(); ++d) lambda[d] -= c * alpha[d];
  std::vector<std::int64_t> out;
  for (const auto& root : roots) {
    const Q v = pairing(lambda, root);
    if (v.denominator() != 1) throw std::runtime_error("non-integral coordinate");
    out.push_back(v.numerator());
  }
  return out;
}

/// Degrees of the basic invariants, listed by hand.
inline std::vector<int> degrees(char family, int n) {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int k = 2; k <= n + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= n; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < n; ++k) d.push_back(2 * k);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

/// Coefficients of prod (q^d - 1)/(q - 1), multiplied out term by term.
inline std::vector<std::uint64_t> poincare(const std::vector<int>& degs) {
  std::vector<std::uint64_t> p{1};
  for (int d : degs) {
    std::vector<std::uint64_t> q(p.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (int b = 0; b < d; ++b) q[a + static_cast<std::size_t>(b)] += p[a];
    }
    p = q;
  }
  return p;
}

/// Number of distinct row vectors mu * M over the given matrices (row-major, n x n).
inline std::size_t distinct_images(const std::vector<std::int64_t>& mu, const std::vector<std::vector<std::int32_t>>& mats) {
  const std::size_t n = mu.size();
  std::set<std::vector<std::int64_t>> images;
  for (const auto& m : mats) {
    std::vector<std::int64_t> v(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) v[c] += mu[r] * m[r * n + c];
    }
    images.insert(v);
  }
  return images.size();
}

/// Element orders and conjugacy class sizes of the symmetric group on `n` letters, by listing it.
struct SymmetricGroupData {
  std::map<int, std::uint64_t> orders;
  std::multiset<std::size_t> class_sizes;
};

inline SymmetricGroupData symmetric_group(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[static_cast<std::size_t>(b[k])];
    return c;
  };
  auto inverse = [](const std::vector<int>& a) {
    std::vector<int> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[static_cast<std::size_t>(a[k])] = static_cast<int>(k);
    return c;
  };

  SymmetricGroupData out;
  std::set<std::vector<int>> seen;
  for (const auto& g : all) {
    int order = 1;
    for (auto q = g; q != all.front(); q = compose(q, g)) ++order;
    ++out.orders[order];
    if (seen.count(g)) continue;
    std::set<std::vector<int>> cls;
    for (const auto& h : all) cls.insert(compose(compose(h, g), inverse(h)));
    seen.insert(cls.begin(), cls.end());
    out.class_sizes.insert(cls.size());
  }
  return out;
}

}  // namespace oracle

#pragma once

// Independent reference computations used to check library results. Each
// one takes a deliberately different route from the code under test.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "gradalg/intlin.hpp"
#include "gradalg/laurent.hpp"

namespace oracle {

using gradalg::Integer;
using gradalg::IntMatrix;

// Determinant by cofactor expansion along the first row.
inline Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

/// Invariant factors d_k = D_k / D_{k-1}, with D_k the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, rows, cur);
    subsets(a.cols(), k, cols, cur);
    Integer g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<Integer>> m;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(a(r, c));
          m.push_back(row);
        }
        g = gradalg::gcd_int(g, determinant(m));
      }
    if (g == 0) {
      for (; k <= std::min(a.rows(), a.cols()); ++k) out.emplace_back(0);
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Number of G in (Z/d)^n with B^t G = 0, by exhaustive enumeration.
inline std::size_t count_gradings_mod(const IntMatrix& b, long d) {
  const std::size_t n = b.rows();
  std::vector<long> g(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < b.cols() && ok; ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += b(i, j) * g[i];
      if (s % d != 0) ok = false;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++g[i] == d) g[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Evaluates a Laurent polynomial at a rational point.
inline mpq_class evaluate(const gradalg::LaurentPoly& p, const std::vector<mpq_class>& x) {
  mpq_class total = 0;
  for (const auto& t : p.terms()) {
    mpq_class m = t.coeff;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto e = t.exponent[i];
      for (long s = 0; s < (e < 0 ? -e : e); ++s) m = e > 0 ? mpq_class(m * x[i]) : mpq_class(m / x[i]);
    }
    total += m;
  }
  return total;
}

inline std::vector<mpq_class> random_point(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 17);
  std::vector<mpq_class> x;
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    x.push_back(q);
  }
  return x;
}

/// Number of positive roots of a simply-laced root system given by its
/// Cartan matrix, found by closing the simple roots under reflections.
inline std::size_t positive_root_count(const IntMatrix& cartan) {
  const std::size_t m = cartan.rows();
  std::vector<std::vector<long>> roots;
  auto known = [&](const std::vector<long>& r) {
    for (const auto& x : roots)
      if (x == r) return true;
    return false;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> e(m, 0);
    e[i] = 1;
    roots.push_back(e);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<long> r = roots[idx];
      long pairing = 0;
      for (std::size_t i = 0; i < m; ++i) pairing += r[i] * cartan(j, i).get_si();
      r[j] -= pairing;
      bool positive = true;
      for (auto v : r) positive = positive && v >= 0;
      if (positive && !known(r)) roots.push_back(r);
    }
  return roots.size();
}

}  // namespace oracle

#pragma once

// Euler characteristics of quiver Grassmannians Gr_v(M) by counting
// arrow-stable subspace tuples over F_p for several primes p and
// interpolating the counting polynomial at q = 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/quiver.hpp"
#include "gradalg/ratlin.hpp"

namespace gradalg {

namespace detail {

using ModMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod(a, p);
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return r;
}

inline ModMatrix reduce_matrix(const QMatrix& m, std::int64_t p) {
  ModMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class num = m(i, j).get_num() % p, den = m(i, j).get_den() % p;
      if (den == 0) fail(ErrorKind::BadParameters, "matrix entry has a denominator divisible by p");
      out[i][j] = mod(num.get_si(), p) * inv_mod(den.get_si(), p) % p;
    }
  return out;
}

// A subspace in reduced row echelon form: rows with pivot columns.
struct ModSubspace {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::size_t> pivots;

  bool contains(std::vector<std::int64_t> x, std::int64_t p) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::int64_t c = x[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = mod(x[j] - c * rows[r][j], p);
    }
    for (auto e : x)
      if (e) return false;
    return true;
  }
};

// Every k-dimensional subspace of F_p^d, once each.
inline std::vector<ModSubspace> all_subspaces(std::size_t d, std::size_t k, std::int64_t p) {
  std::vector<ModSubspace> out;
  std::vector<std::size_t> piv(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t from) {
    if (i == k) {
      // Free entries: columns after each pivot that are not pivots themselves.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < d; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      std::vector<std::int64_t> vals(free.size(), 0);
      for (;;) {
        ModSubspace s;
        s.pivots = piv;
        s.rows.assign(k, std::vector<std::int64_t>(d, 0));
        for (std::size_t r = 0; r < k; ++r) s.rows[r][piv[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) s.rows[free[f].first][free[f].second] = vals[f];
        out.push_back(std::move(s));
        std::size_t f = 0;
        while (f < vals.size() && ++vals[f] == p) vals[f++] = 0;
        if (f == vals.size()) break;
      }
      return;
    }
    for (std::size_t c = from; c + (k - i) <= d; ++c) {
      piv[i] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

inline Integer gaussian_binomial(std::size_t d, std::size_t k, std::int64_t q) {
  Integer num = 1, den = 1, qq = q;
  for (std::size_t i = 0; i < k; ++i) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), d - i);
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::int64_t> first_primes(std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t c = 2; out.size() < count; ++c) {
    if (is_prime(c)) out.push_back(c);
  }
  return out;
}

}  // namespace detail

/// Number of subrepresentations of M with dimension vector v over F_p.
inline Integer count_submodules_mod_p(const QuiverRep& m, const std::vector<std::size_t>& v, std::int64_t p) {
  const Quiver& q = m.quiver;
  if (v.size() != q.vertices) fail(ErrorKind::BadShape, "dimension vector length differs from the vertex count");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > m.dims[i]) return 0;
  std::vector<detail::ModMatrix> maps;
  for (const auto& a : m.maps) maps.push_back(detail::reduce_matrix(a, p));
  std::vector<std::vector<detail::ModSubspace>> choices;
  for (std::size_t i = 0; i < q.vertices; ++i) choices.push_back(detail::all_subspaces(m.dims[i], v[i], p));
  std::vector<const detail::ModSubspace*> chosen(q.vertices, nullptr);
  auto stable = [&](std::size_t a) {
    const Arrow& arr = q.arrows[a];
    for (const auto& w : chosen[arr.source]->rows) {
      std::vector<std::int64_t> img(m.dims[arr.target], 0);
      for (std::size_t i = 0; i < img.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) img[i] += maps[a][i][j] * w[j];
        img[i] %= p;
      }
      if (!chosen[arr.target]->contains(img, p)) return false;
    }
    return true;
  };
  Integer count = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t vertex) {
    if (vertex == q.vertices) {
      ++count;
      return;
    }
    for (const auto& s : choices[vertex]) {
      chosen[vertex] = &s;
      bool ok = true;
      // Check every arrow whose endpoints are now both fixed and one of them is this vertex.
      for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
        const Arrow& arr = q.arrows[a];
        if (std::max(arr.source, arr.target) == vertex) ok = stable(a);
      }
      if (ok) walk(vertex + 1);
    }
  };
  walk(0);
  return count;
}

struct GrassmannianEuler {
  Integer chi;
  std::vector<std::pair<std::int64_t, Integer>> point_counts;  ///< (p, count), interpolation primes first
  std::size_t degree_bound = 0;
};

/// chi(Gr_v(M)) from point counts at D+1 primes, D = sum v_i (dim_i - v_i),
/// with one further prime used to validate the interpolated polynomial.
/// `primes` overrides the default choice of the first D+2 primes.
inline GrassmannianEuler quiver_grassmannian_euler(const QuiverRep& m, const std::vector<std::size_t>& v,
                                                   std::vector<std::int64_t> primes = {},
                                                   const Integer& max_enumeration = 50'000'000) {
  check_rep(m);
  if (v.size() != m.quiver.vertices) fail(ErrorKind::BadShape, "dimension vector length differs from the vertex count");
  if (m.total_dim() > 8) fail(ErrorKind::TooLarge, "quiver Grassmannians are limited to total dimension 8");
  GrassmannianEuler out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] <= m.dims[i]) out.degree_bound += v[i] * (m.dims[i] - v[i]);
  const std::size_t needed = out.degree_bound + 2;
  if (primes.empty()) primes = detail::first_primes(needed);
  if (primes.size() < needed) fail(ErrorKind::BadParameters, "not enough primes for the degree bound");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!detail::is_prime(primes[i]))
      fail(ErrorKind::BadParameters, "counting fields must have prime order");
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j]) fail(ErrorKind::BadParameters, "primes must be distinct");
  }
  for (auto p : primes) {
    Integer work = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] <= m.dims[i]) work *= detail::gaussian_binomial(m.dims[i], v[i], p);
    if (work > max_enumeration) fail(ErrorKind::TooLarge, "point count enumeration too large");
  }
  std::vector<std::future<Integer>> jobs;
  for (auto p : primes) jobs.push_back(std::async(std::launch::async, [&, p] { return count_submodules_mod_p(m, v, p); }));
  for (std::size_t i = 0; i < primes.size(); ++i) out.point_counts.emplace_back(primes[i], jobs[i].get());

  const std::size_t k = out.degree_bound + 1;
  auto interpolate = [&](const Rational& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Rational term(out.point_counts[i].second);
      for (std::size_t j = 0; j < k; ++j)
        if (j != i)
          term *= (x - Rational(out.point_counts[j].first)) /
                  Rational(out.point_counts[i].first - out.point_counts[j].first);
      s += term;
    }
    return s;
  };
  for (std::size_t i = k; i < primes.size(); ++i)
    if (interpolate(Rational(out.point_counts[i].first)) != Rational(out.point_counts[i].second))
      fail(ErrorKind::InterpolationMismatch, "point counts are not a polynomial of the expected degree");
  Rational chi = interpolate(Rational(1));
  if (chi.get_den() != 1) fail(ErrorKind::InterpolationMismatch, "interpolated Euler characteristic is not an integer");
  out.chi = chi.get_num();
  return out;
}

}  // namespace gradalg

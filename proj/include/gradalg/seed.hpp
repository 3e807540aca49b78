#pragma once

// Seeds, exchange-matrix mutation and graded seeds. Indices are 0-based:
// mutable vertices are 0..r-1, frozen vertices r..n-1.

#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/ratlin.hpp"

namespace gradalg {

struct Seed {
  std::size_t n = 0;
  std::size_t r = 0;
  IntMatrix B;  ///< n x r
  std::vector<std::string> names;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// A grading G in A^n, one group element per vertex.
struct Grading {
  FgAbelianGroup group;
  GroupVector values;

  friend bool operator==(const Grading&, const Grading&) = default;
};

struct GradedSeed {
  Seed seed;
  std::vector<Grading> gradings;

  friend bool operator==(const GradedSeed&, const GradedSeed&) = default;
};

struct ExchangeVectors {
  IntVector plus;
  IntVector minus;
};

struct Diagnostic {
  ErrorKind kind;
  std::string message;
};

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline Seed make_seed(IntMatrix b, std::size_t r, std::vector<std::string> names = {}) {
  Seed s;
  s.n = b.rows();
  s.r = r;
  s.B = std::move(b);
  s.names = names.empty() ? default_names(s.n) : std::move(names);
  return s;
}

/// Builds the n x r exchange matrix of an ice quiver with the convention
/// B_ij = #(arrows j -> i) - #(arrows i -> j).
inline IntMatrix matrix_from_quiver(std::size_t n, std::size_t r,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  IntMatrix b(n, r);
  for (auto [s, t] : arrows) {
    if (s >= n || t >= n) fail(ErrorKind::IndexOutOfRange, "arrow endpoint out of range");
    if (s < r) b(t, s) += 1;
    if (t < r) b(s, t) -= 1;
  }
  return b;
}

/// Positive integers d with d_i b_ij = -d_j b_ji on the principal part, or
/// nullopt. Found by traversal of the nonzero pattern; each connected
/// component is seeded with d = 1 and then scaled to integers.
inline std::optional<std::vector<Integer>> skew_symmetrizer(const IntMatrix& b, std::size_t r) {
  std::vector<Rational> d(r);
  std::vector<bool> seen(r, false);
  for (std::size_t i = 0; i < r; ++i)
    if (b(i, i) != 0) return std::nullopt;
  for (std::size_t root = 0; root < r; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> queue;
    d[root] = 1;
    seen[root] = true;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < r; ++j) {
        if (b(i, j) == 0 && b(j, i) == 0) continue;
        if (b(i, j) == 0 || b(j, i) == 0) return std::nullopt;
        if ((b(i, j) > 0) == (b(j, i) > 0)) return std::nullopt;
        Rational dj = d[i] * Rational(b(i, j)) / Rational(-b(j, i));
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          queue.push(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Integer lcm_den = 1;
    for (auto i : component) lcm_den = lcm_int(lcm_den, d[i].get_den());
    for (auto i : component) d[i] *= lcm_den;
  }
  std::vector<Integer> out;
  for (const auto& x : d) out.push_back(x.get_num());
  return out;
}

inline std::optional<Diagnostic> validate(const Seed& s) {
  if (s.r > s.n) return Diagnostic{ErrorKind::BadShape, "r exceeds n"};
  if (s.B.rows() != s.n || s.B.cols() != s.r)
    return Diagnostic{ErrorKind::BadShape, "B must be n x r"};
  if (s.names.size() != s.n) return Diagnostic{ErrorKind::BadShape, "expected n names"};
  std::set<std::string> distinct(s.names.begin(), s.names.end());
  if (distinct.size() != s.n) return Diagnostic{ErrorKind::BadShape, "vertex names must be distinct"};
  if (!skew_symmetrizer(s.B, s.r))
    return Diagnostic{ErrorKind::NonSkewSymmetrizable, "principal part is not skew-symmetrizable"};
  return std::nullopt;
}

inline bool is_grading(const Seed& s, const Grading& g) {
  if (g.values.size() != s.n) return false;
  for (const auto& v : g.values)
    if (v.size() != g.group.size()) return false;
  for (const auto& x : transpose_apply(s.B, g.group, g.values))
    if (!g.group.is_zero(x)) return false;
  return true;
}

inline std::optional<Diagnostic> validate(const GradedSeed& gs) {
  if (auto d = validate(gs.seed)) return d;
  for (std::size_t i = 0; i < gs.gradings.size(); ++i) {
    const auto& g = gs.gradings[i];
    if (g.values.size() != gs.seed.n)
      return Diagnostic{ErrorKind::BadShape, "grading " + std::to_string(i) + " has wrong length"};
    if (!is_grading(gs.seed, g))
      return Diagnostic{ErrorKind::InvalidGrading, "grading " + std::to_string(i) + " violates B^t G = 0"};
  }
  return std::nullopt;
}

inline void require_valid(const Seed& s) {
  if (auto d = validate(s)) fail(d->kind, d->message);
}
inline void require_valid(const GradedSeed& gs) {
  if (auto d = validate(gs)) fail(d->kind, d->message);
}

namespace detail {
inline void check_mutable(const Seed& s, std::size_t k) {
  if (k >= s.r)
    fail(ErrorKind::IndexOutOfRange,
         "mutation index " + std::to_string(k + 1) + " outside mutable range 1.." + std::to_string(s.r));
}
}  // namespace detail

inline ExchangeVectors exchange_vectors(const Seed& s, std::size_t k) {
  detail::check_mutable(s, k);
  ExchangeVectors ev{IntVector(s.n), IntVector(s.n)};
  for (std::size_t i = 0; i < s.n; ++i) {
    const Integer& b = s.B(i, k);
    if (b > 0) ev.plus[i] = b;
    if (b < 0) ev.minus[i] = -b;
  }
  ev.plus[k] -= 1;
  ev.minus[k] -= 1;
  return ev;
}

inline Integer sgn(const Integer& x) { return x > 0 ? Integer(1) : (x < 0 ? Integer(-1) : Integer(0)); }

/// Fomin-Zelevinsky matrix mutation at k.
inline Seed mutate_matrix(const Seed& s, std::size_t k) {
  detail::check_mutable(s, k);
  Seed out = s;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.r; ++j) {
      if (i == k || j == k) {
        out.B(i, j) = -s.B(i, j);
        continue;
      }
      Integer prod = s.B(i, k) * s.B(k, j);
      if (prod > 0) out.B(i, j) = s.B(i, j) + sgn(s.B(i, k)) * prod;
    }
  return out;
}

/// Sum of c_i g_i over the vertices, using the Z-module structure of A.
inline FgAbelianGroup::Element pair(const IntVector& c, const Grading& g) {
  auto acc = g.group.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc = g.group.add(acc, g.group.scale(c[i], g.values[i]));
  return acc;
}

/// The new entry is deg(x_k') = b_k^+ . G. The -e_k inside b_k^+ already
/// accounts for the division by x_k.
inline Grading mutate_grading(const Seed& s, const Grading& g, std::size_t k) {
  ExchangeVectors ev = exchange_vectors(s, k);
  Grading out = g;
  out.values[k] = pair(ev.plus, g);
  return out;
}

inline GradedSeed mutate_graded_seed(const GradedSeed& gs, std::size_t k) {
  detail::check_mutable(gs.seed, k);
  GradedSeed out;
  out.seed = mutate_matrix(gs.seed, k);
  for (const auto& g : gs.gradings) out.gradings.push_back(mutate_grading(gs.seed, g, k));
  return out;
}

/// Attaches the Z-gradings spanning ker(B^t), one per basis vector.
inline GradedSeed standard_gradings(const Seed& s) {
  GradedSeed out{s, {}};
  for (const auto& v : kernel_basis(s.B.transpose())) {
    Grading g{FgAbelianGroup::free(1), {}};
    for (const auto& x : v) g.values.push_back({x});
    out.gradings.push_back(std::move(g));
  }
  return out;
}

inline Grading integer_grading(const std::vector<long>& values) {
  Grading g{FgAbelianGroup::free(1), {}};
  for (long v : values) g.values.push_back({Integer(v)});
  return g;
}

}  // namespace gradalg

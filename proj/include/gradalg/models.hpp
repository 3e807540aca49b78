#pragma once

// Built-in seeds: Markov, Dynkin quivers, Grassmannian rectangle seeds, and
// the lattice Z^n(k) = {x in Z^n : k divides sum x_i}.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/dynkin.hpp"
#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/seed.hpp"

namespace gradalg {

inline GradedSeed markov_seed() {
  Seed s = make_seed(IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, 3);
  return {s, {integer_grading({1, 1, 1})}};
}

enum class Orientation {
  Linear,       ///< every edge a -> b with a < b
  Reversed,     ///< every edge b -> a
  Alternating,  ///< the colour class of vertex 0 are sources
};

inline IntMatrix dynkin_exchange_matrix(const DynkinDiagram& d, Orientation o) {
  // Bipartition of the tree, for the alternating orientation.
  std::vector<int> colour(d.rank, -1);
  colour[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : d.edges) {
      if (colour[a] >= 0 && colour[b] < 0) colour[b] = 1 - colour[a], changed = true;
      if (colour[b] >= 0 && colour[a] < 0) colour[a] = 1 - colour[b], changed = true;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (auto [a, b] : d.edges) {
    bool forward = o == Orientation::Linear || (o == Orientation::Alternating && colour[a] == 0);
    arrows.emplace_back(forward ? a : b, forward ? b : a);
  }
  return matrix_from_quiver(d.rank, d.rank, arrows);
}

inline Seed dynkin_seed(char type, std::size_t rank, Orientation o = Orientation::Linear) {
  return make_seed(dynkin_exchange_matrix(dynkin_diagram(type, rank), o), rank);
}

/// Coefficient-free A2 in the orientation 2 -> 1.
inline GradedSeed a2_model() { return standard_gradings(dynkin_seed('A', 2, Orientation::Reversed)); }

/// Linear A3 with its standard grading (1,0,1).
inline GradedSeed a3_model() { return standard_gradings(dynkin_seed('A', 3)); }

// Rectangles seed for Gr(k, n).
//
// Vertex (i, j), 1 <= i <= k, 1 <= j <= n-k, is the Young diagram of i rows
// and j columns, labelled by {1..k-i} u {k-i+j+1..k+j}; the empty diagram is
// labelled {1..k}. Arrows go (i+1,j) -> (i,j), (i,j+1) -> (i,j),
// (i,j) -> (i+1,j+1) and (1,1) -> empty. Mutable vertices are those with
// i < k and j < n-k in row-major order, followed by the frozen vertices:
// empty, then (k,1..n-k), then (k-1..1, n-k), which walks the cyclic
// intervals p12, p23, ..., p1n.

struct GrassmannianVertex {
  std::size_t i = 0, j = 0;  ///< (0, 0) is the empty rectangle
  std::vector<std::size_t> label;
};

inline std::vector<GrassmannianVertex> grassmannian_vertices(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) fail(ErrorKind::BadParameters, "Gr(k, n) needs 1 <= k < n");
  const std::size_t w = n - k;
  auto label = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> l;
    if (i == 0) {
      for (std::size_t a = 1; a <= k; ++a) l.push_back(a);
      return l;
    }
    for (std::size_t a = 1; a <= k - i; ++a) l.push_back(a);
    for (std::size_t a = k - i + j + 1; a <= k + j; ++a) l.push_back(a);
    return l;
  };
  std::vector<GrassmannianVertex> v;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 1; j < w; ++j) v.push_back({i, j, label(i, j)});
  v.push_back({0, 0, label(0, 0)});
  for (std::size_t j = 1; j <= w; ++j) v.push_back({k, j, label(k, j)});
  for (std::size_t i = k - 1; i >= 1; --i) v.push_back({i, w, label(i, w)});
  return v;
}

inline GradedSeed grassmannian_seed(std::size_t k, std::size_t n) {
  auto verts = grassmannian_vertices(k, n);
  const std::size_t nv = verts.size();
  const std::size_t r = (k - 1) * (n - k - 1);
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < nv; ++t)
      if (verts[t].i == i && verts[t].j == j) return t;
    return nv;
  };
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  auto arrow = [&](std::size_t a, std::size_t b) {
    if (a < nv && b < nv) arrows.emplace_back(a, b);
  };
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= n - k; ++j) {
      std::size_t here = index(i, j);
      // Frozen-to-frozen arrows carry no information and are omitted.
      if (i < k) arrow(index(i + 1, j), here);
      if (j < n - k) arrow(index(i, j + 1), here);
      if (i < k && j < n - k) arrow(here, index(i + 1, j + 1));
    }
  arrow(index(1, 1), index(0, 0));
  arrows.erase(std::remove_if(arrows.begin(), arrows.end(),
                              [&](const auto& a) { return a.first >= r && a.second >= r; }),
               arrows.end());

  std::vector<std::string> names;
  for (const auto& v : verts) {
    std::string name = "p";
    for (std::size_t t = 0; t < v.label.size(); ++t)
      name += (n >= 10 && t ? "_" : "") + std::to_string(v.label[t]);
    names.push_back(name);
  }
  Seed seed = make_seed(matrix_from_quiver(nv, r, arrows), r, names);

  Grading plucker = integer_grading(std::vector<long>(nv, 1));
  Grading content{FgAbelianGroup::free(n), {}};
  for (const auto& v : verts) {
    IntVector e(n);
    for (auto a : v.label) e[a - 1] = 1;
    content.values.push_back(std::move(e));
  }
  return {seed, {plucker, content}};
}

/// The lattice Z^n(k) with basis alpha_j = e_{j+1} - e_j (j = 1..n-1) and
/// beta = e_1 + ... + e_k.
class GrassmannianLattice {
 public:
  GrassmannianLattice(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k < 1 || k >= n) fail(ErrorKind::BadParameters, "Z^n(k) needs 1 <= k < n");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }

  bool contains(const IntVector& x) const {
    check(x);
    return sum(x) % Integer(static_cast<unsigned long>(k_)) == 0;
  }

  /// delta(x) = (sum x_i) / k.
  Integer delta(const IntVector& x) const {
    require_member(x);
    return sum(x) / Integer(static_cast<unsigned long>(k_));
  }

  IntVector alpha(std::size_t j) const {
    if (j < 1 || j >= n_) fail(ErrorKind::IndexOutOfRange, "alpha_j needs 1 <= j < n");
    IntVector a(n_);
    a[j] = 1;
    a[j - 1] = -1;
    return a;
  }
  IntVector beta() const {
    IntVector b(n_);
    for (std::size_t i = 0; i < k_; ++i) b[i] = 1;
    return b;
  }

  /// Coordinates (c_1, ..., c_{n-1}, c_beta) with x = sum c_j alpha_j + c_beta beta.
  IntVector to_basis(const IntVector& x) const {
    Integer cb = delta(x);
    IntVector y = x;
    for (std::size_t i = 0; i < k_; ++i) y[i] -= cb;
    IntVector c(n_);
    Integer partial = 0;
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      partial += y[j];
      c[j] = -partial;
    }
    c[n_ - 1] = cb;
    return c;
  }

  IntVector from_basis(const IntVector& c) const {
    check(c);
    IntVector x(n_);
    for (std::size_t j = 1; j < n_; ++j) {
      x[j] += c[j - 1];
      x[j - 1] -= c[j - 1];
    }
    for (std::size_t i = 0; i < k_; ++i) x[i] += c[n_ - 1];
    return x;
  }

 private:
  void check(const IntVector& x) const {
    if (x.size() != n_) fail(ErrorKind::BadShape, "lattice vector must have length n");
  }
  void require_member(const IntVector& x) const {
    if (!contains(x)) fail(ErrorKind::NotInLattice, "coordinate sum not divisible by k");
  }
  static Integer sum(const IntVector& x) { return std::accumulate(x.begin(), x.end(), Integer(0)); }

  std::size_t n_, k_;
};

}  // namespace gradalg

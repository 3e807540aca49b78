#pragma once

// Preprojective algebras of Dynkin diagrams, built degree by degree as
// normal-form paths, together with their injective modules and socle
// filtrations.
//
// Paths are written in traversal order: p.a means "first p, then a". The
// double quiver has arrows 2e: a -> b and 2e+1: b -> a for each edge (a, b).
// The relation at v is
//   rho_v = sum_{t(a)=v} a* a - sum_{s(a)=v} a a*   (traversal order)
// over the original arrows a, i.e. sum a a* - sum a* a in composition order.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/dynkin.hpp"
#include "gradalg/error.hpp"
#include "gradalg/quiver.hpp"
#include "gradalg/ratlin.hpp"

namespace gradalg {

inline Quiver double_quiver(const DynkinDiagram& d) {
  Quiver q{d.rank, {}};
  for (auto [a, b] : d.edges) {
    std::string base = std::to_string(a + 1) + std::to_string(b + 1);
    q.arrows.push_back({a, b, "a" + base});
    q.arrows.push_back({b, a, "a" + base + "*"});
  }
  return q;
}

struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;
};

/// Sparse linear combination of basis elements of one graded piece.
using Combination = std::map<std::size_t, Rational>;

class PreprojectiveAlgebra {
 public:
  explicit PreprojectiveAlgebra(DynkinDiagram diagram) : diagram_(std::move(diagram)), quiver_(double_quiver(diagram_)) {
    build();
  }

  const DynkinDiagram& diagram() const noexcept { return diagram_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  std::size_t top_degree() const noexcept { return basis_.size() - 1; }

  /// Normal-form basis paths of degree d.
  const std::vector<Path>& basis(std::size_t d) const { return basis_.at(d); }

  std::size_t dimension() const {
    std::size_t s = 0;
    for (const auto& b : basis_) s += b.size();
    return s;
  }

  std::size_t end_vertex(const Path& p) const {
    return p.arrows.empty() ? p.start : quiver_.arrows[p.arrows.back()].target;
  }

  /// Reduces a path to normal form, as a combination of basis(len(p)).
  /// Degrees beyond the top give the empty combination.
  Combination reduce(const Path& p) const {
    const std::size_t len = p.arrows.size();
    if (len >= basis_.size()) return {};
    Combination cur{{start_index_.at(p.start), Rational(1)}};
    for (std::size_t d = 0; d < len; ++d) {
      Combination next;
      for (const auto& [b, c] : cur) {
        auto it = append_[d][b].find(p.arrows[d]);
        if (it == append_[d][b].end()) fail(ErrorKind::Internal, "path is not composable");
        for (const auto& [b2, c2] : it->second) next[b2] += c * c2;
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      cur = std::move(next);
      if (cur.empty()) return cur;
    }
    return cur;
  }

  /// Product of basis elements (degree d1, index i) and (degree d2, index j):
  /// the concatenated path in normal form, or empty if not composable.
  Combination multiply(std::size_t d1, std::size_t i, std::size_t d2, std::size_t j) const {
    const Path& p = basis(d1).at(i);
    const Path& q = basis(d2).at(j);
    if (end_vertex(p) != q.start) return {};
    Path pq = p;
    pq.arrows.insert(pq.arrows.end(), q.arrows.begin(), q.arrows.end());
    return reduce(pq);
  }

  /// The relation rho_v as a list of (coefficient, two-arrow path).
  std::vector<std::pair<Rational, std::pair<std::size_t, std::size_t>>> relation(std::size_t v) const {
    std::vector<std::pair<Rational, std::pair<std::size_t, std::size_t>>> out;
    for (std::size_t e = 0; e < diagram_.edges.size(); ++e) {
      std::size_t a = 2 * e, astar = 2 * e + 1;
      if (quiver_.arrows[a].target == v) out.push_back({Rational(1), {astar, a}});
      if (quiver_.arrows[a].source == v) out.push_back({Rational(-1), {a, astar}});
    }
    return out;
  }

 private:
  void build() {
    const std::size_t m = diagram_.rank;
    basis_.emplace_back();
    for (std::size_t v = 0; v < m; ++v) {
      start_index_[v] = v;
      basis_[0].push_back({v, {}});
    }
    // Degree 1: all arrows, no relations.
    append_.emplace_back(m);
    basis_.emplace_back();
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
      append_[0][quiver_.arrows[a].source][a] = Combination{{basis_[1].size(), Rational(1)}};
      basis_[1].push_back({quiver_.arrows[a].source, {a}});
    }
    if (basis_[1].empty()) {
      basis_.pop_back();
      append_.pop_back();
      append_.emplace_back(m);
      return;
    }
    for (std::size_t d = 1;; ++d) {
      if (d > 4 * m + 4) fail(ErrorKind::NotDynkin, "preprojective algebra does not terminate");
      if (!extend(d)) break;
    }
  }

  // Computes degree d+1 from degrees d and d-1. Returns false once it vanishes.
  bool extend(std::size_t d) {
    const auto& cur = basis_[d];
    // Candidates (b, a) with b in basis_d and s(a) = end(b).
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cand_index;
    for (std::size_t b = 0; b < cur.size(); ++b)
      for (std::size_t a = 0; a < quiver_.arrows.size(); ++a)
        if (quiver_.arrows[a].source == end_vertex(cur[b])) {
          cand_index[{b, a}] = cand.size();
          cand.emplace_back(b, a);
        }
    // Relations c.rho_v for c in basis_{d-1} ending at v.
    std::vector<QVector> rels;
    for (std::size_t c = 0; c < basis_[d - 1].size(); ++c) {
      const std::size_t v = end_vertex(basis_[d - 1][c]);
      QVector rel(cand.size());
      for (const auto& [coef, pair] : relation(v)) {
        auto it = append_[d - 1][c].find(pair.first);
        for (const auto& [b, cb] : it->second) rel[cand_index.at({b, pair.second})] += coef * cb;
      }
      rels.push_back(std::move(rel));
    }
    append_.emplace_back(cur.size());
    std::vector<Path> next;
    if (cand.empty()) return false;
    QMatrix relm(rels.size(), cand.size());
    for (std::size_t i = 0; i < rels.size(); ++i)
      for (std::size_t j = 0; j < cand.size(); ++j) relm(i, j) = rels[i][j];
    RowEchelon e = rref(relm);
    std::vector<long> pivot_row(cand.size(), -1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<long>(r);
    // Non-pivot candidates become the basis of degree d+1; pivot candidates
    // are rewritten in terms of them using the reduced relations.
    std::vector<long> new_index(cand.size(), -1);
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (pivot_row[j] < 0) {
        new_index[j] = static_cast<long>(next.size());
        Path p = cur[cand[j].first];
        p.arrows.push_back(cand[j].second);
        next.push_back(std::move(p));
      }
    for (std::size_t j = 0; j < cand.size(); ++j) {
      Combination c;
      if (pivot_row[j] < 0) {
        c[static_cast<std::size_t>(new_index[j])] = 1;
      } else {
        const std::size_t r = static_cast<std::size_t>(pivot_row[j]);
        for (std::size_t f = 0; f < cand.size(); ++f)
          if (pivot_row[f] < 0 && e.reduced(r, f) != 0) c[static_cast<std::size_t>(new_index[f])] = -e.reduced(r, f);
      }
      append_[d][cand[j].first][cand[j].second] = std::move(c);
    }
    bool nonzero = !next.empty();
    basis_.push_back(std::move(next));
    if (!nonzero) basis_.pop_back();
    return nonzero;
  }

  DynkinDiagram diagram_;
  Quiver quiver_;
  std::vector<std::vector<Path>> basis_;
  // append_[d][b][a]: normal form of basis_[d][b] followed by arrow a.
  std::vector<std::vector<std::map<std::size_t, Combination>>> append_;
  std::map<std::size_t, std::size_t> start_index_;
};

inline PreprojectiveAlgebra build_preprojective(const DynkinDiagram& d) {
  if (d.rank > 8) fail(ErrorKind::TooLarge, "preprojective algebras are limited to rank 8");
  return PreprojectiveAlgebra(d);
}

/// Checks sum_{t(a)=v} M_a M_a* - sum_{s(a)=v} M_a* M_a = 0 at every vertex.
inline bool satisfies_preprojective_relations(const QuiverRep& m, const PreprojectiveAlgebra& alg) {
  for (std::size_t v = 0; v < m.quiver.vertices; ++v) {
    QMatrix acc(m.dims[v], m.dims[v]);
    for (const auto& [coef, pair] : alg.relation(v))
      acc = acc + coef * (m.maps[pair.second] * m.maps[pair.first]);
    if (!acc.is_zero()) return false;
  }
  return true;
}

/// The injective module with socle S_i: at vertex j the dual of the span of
/// paths j -> i, with arrow a: j -> k acting by the transpose of q -> a.q.
inline QuiverRep injective_module(const PreprojectiveAlgebra& alg, std::size_t i) {
  const Quiver& q = alg.quiver();
  if (i >= q.vertices) fail(ErrorKind::IndexOutOfRange, "vertex out of range");
  // Global index of each basis path ending at i, grouped by start vertex.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> paths(q.vertices);  // (degree, index)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> local;
  for (std::size_t d = 0; d <= alg.top_degree(); ++d)
    for (std::size_t b = 0; b < alg.basis(d).size(); ++b) {
      const Path& p = alg.basis(d)[b];
      if (alg.end_vertex(p) != i) continue;
      local[{d, b}] = paths[p.start].size();
      paths[p.start].emplace_back(d, b);
    }
  QuiverRep m{q, {}, {}};
  for (std::size_t v = 0; v < q.vertices; ++v) m.dims.push_back(paths[v].size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const std::size_t j = q.arrows[a].source, k = q.arrows[a].target;
    // L: paths(k -> i) -> paths(j -> i), q -> a.q; the arrow acts by L^T.
    QMatrix action(m.dims[k], m.dims[j]);
    for (std::size_t c = 0; c < paths[k].size(); ++c) {
      auto [d, b] = paths[k][c];
      Path pq{j, {a}};
      const auto& tail = alg.basis(d)[b].arrows;
      pq.arrows.insert(pq.arrows.end(), tail.begin(), tail.end());
      for (const auto& [b2, coef] : alg.reduce(pq)) action(c, local.at({d + 1, b2})) = coef;
    }
    m.maps.push_back(std::move(action));
  }
  return m;
}

/// soc_{(l_1, ..., l_s)}(M): W_0 = 0 and W_p is W_{p-1} enlarged at vertex
/// l_p by every vector whose images under the arrows out of l_p lie in W_{p-1}.
inline Submodule socle_sequence_submodule(const QuiverRep& m, const std::vector<std::size_t>& letters) {
  const Quiver& q = m.quiver;
  SubspaceFamily w;
  for (std::size_t v = 0; v < q.vertices; ++v) w.basis.emplace_back(m.dims[v], 0);
  for (auto l : letters) {
    if (l >= q.vertices) fail(ErrorKind::IndexOutOfRange, "socle letter out of range");
    std::vector<QMatrix> blocks;
    std::size_t rows = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].source != l) continue;
      const std::size_t t = q.arrows[a].target;
      blocks.push_back(annihilator(w.basis[t], m.dims[t]) * m.maps[a]);
      rows += blocks.back().rows();
    }
    QMatrix stack(rows, m.dims[l]);
    std::size_t r = 0;
    for (const auto& blk : blocks)
      for (std::size_t i = 0; i < blk.rows(); ++i, ++r)
        for (std::size_t j = 0; j < m.dims[l]; ++j) stack(r, j) = blk(i, j);
    w.basis[l] = m.dims[l] == 0 ? QMatrix(0, 0) : kernel_matrix(stack);
  }
  return restrict_to(m, w);
}

}  // namespace gradalg

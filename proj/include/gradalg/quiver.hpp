#pragma once

// Finite quivers and their representations over Q: homomorphism spaces,
// submodules, quotients, kernels, direct sums.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/ratlin.hpp"

namespace gradalg {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string name;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A representation: one vector space Q^dims[v] per vertex and, for each
/// arrow a, a dims[target] x dims[source] matrix.
struct QuiverRep {
  Quiver quiver;
  std::vector<std::size_t> dims;
  std::vector<QMatrix> maps;

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

inline void check_rep(const QuiverRep& m) {
  if (m.dims.size() != m.quiver.vertices || m.maps.size() != m.quiver.arrows.size())
    fail(ErrorKind::BadShape, "representation does not match its quiver");
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    const Arrow& arr = m.quiver.arrows[a];
    if (m.maps[a].rows() != m.dims[arr.target] || m.maps[a].cols() != m.dims[arr.source])
      fail(ErrorKind::BadShape, "arrow matrix has the wrong shape");
  }
}

inline QuiverRep zero_rep(const Quiver& q) {
  QuiverRep m{q, std::vector<std::size_t>(q.vertices, 0), {}};
  for (const auto& a : q.arrows) m.maps.emplace_back(0, 0), (void)a;
  return m;
}

inline QuiverRep simple_rep(const Quiver& q, std::size_t v) {
  QuiverRep m{q, std::vector<std::size_t>(q.vertices, 0), {}};
  m.dims.at(v) = 1;
  for (const auto& a : q.arrows) m.maps.emplace_back(m.dims[a.target], m.dims[a.source]);
  return m;
}

/// A module homomorphism, one matrix dims_N[v] x dims_M[v] per vertex.
using Morphism = std::vector<QMatrix>;

inline void require_same_quiver(const QuiverRep& m, const QuiverRep& n) {
  if (!(m.quiver == n.quiver)) fail(ErrorKind::AlgebraMismatch, "representations of different quivers");
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

inline bool is_morphism(const QuiverRep& m, const QuiverRep& n, const Morphism& f) {
  for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
    const Arrow& arr = m.quiver.arrows[a];
    if (!(n.maps[a] * f[arr.source] == f[arr.target] * m.maps[a])) return false;
  }
  return true;
}

/// Basis of Hom(M, N): solutions of N_a f_s = f_t M_a for every arrow a.
inline std::vector<Morphism> hom_basis(const QuiverRep& m, const QuiverRep& n) {
  require_same_quiver(m, n);
  const Quiver& q = m.quiver;
  std::vector<std::size_t> offset(q.vertices + 1, 0);
  for (std::size_t v = 0; v < q.vertices; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const std::size_t unknowns = offset[q.vertices];
  if (unknowns == 0) return {};
  // Unknown (v, i, j) is entry (i, j) of f_v.
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return offset[v] + i * m.dims[v] + j; };

  std::size_t equations = 0;
  for (const auto& a : q.arrows) equations += n.dims[a.target] * m.dims[a.source];
  QMatrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    const QMatrix& na = n.maps[ai];
    const QMatrix& ma = m.maps[ai];
    for (std::size_t i = 0; i < n.dims[a.target]; ++i)
      for (std::size_t j = 0; j < m.dims[a.source]; ++j, ++row) {
        // (N_a f_s)_{ij} - (f_t M_a)_{ij} = 0
        for (std::size_t l = 0; l < n.dims[a.source]; ++l)
          if (na(i, l) != 0) sys(row, var(a.source, l, j)) += na(i, l);
        for (std::size_t l = 0; l < m.dims[a.target]; ++l)
          if (ma(l, j) != 0) sys(row, var(a.target, i, l)) -= ma(l, j);
      }
  }
  std::vector<Morphism> out;
  for (const auto& sol : nullspace(sys)) {
    Morphism f;
    for (std::size_t v = 0; v < q.vertices; ++v) {
      QMatrix fv(n.dims[v], m.dims[v]);
      for (std::size_t i = 0; i < n.dims[v]; ++i)
        for (std::size_t j = 0; j < m.dims[v]; ++j) fv(i, j) = sol[var(v, i, j)];
      f.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::size_t hom_dim(const QuiverRep& m, const QuiverRep& n) { return hom_basis(m, n).size(); }

/// Flattens a morphism into one coordinate vector (for span computations).
inline QVector flatten(const Morphism& f) {
  QVector out;
  for (const auto& fv : f)
    for (std::size_t i = 0; i < fv.rows(); ++i)
      for (std::size_t j = 0; j < fv.cols(); ++j) out.push_back(fv(i, j));
  return out;
}

inline std::size_t span_dim(const std::vector<QVector>& vecs) {
  if (vecs.empty() || vecs[0].empty()) return 0;
  return rank(QMatrix::from_columns(vecs, vecs[0].size()));
}

inline QuiverRep direct_sum(const std::vector<QuiverRep>& parts, const Quiver& q) {
  QuiverRep s{q, std::vector<std::size_t>(q.vertices, 0), {}};
  for (const auto& p : parts) {
    require_same_quiver(p, s);
    for (std::size_t v = 0; v < q.vertices; ++v) s.dims[v] += p.dims[v];
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    QMatrix m(s.dims[q.arrows[a].target], s.dims[q.arrows[a].source]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const QMatrix& pm = p.maps[a];
      for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j) m(r0 + i, c0 + j) = pm(i, j);
      r0 += pm.rows();
      c0 += pm.cols();
    }
    s.maps.push_back(std::move(m));
  }
  return s;
}

/// Subspace data at each vertex: the columns of basis[v] span W_v inside M_v.
struct SubspaceFamily {
  std::vector<QMatrix> basis;
};

/// Columns spanning {x : A x = 0}.
inline QMatrix kernel_matrix(const QMatrix& a) {
  return QMatrix::from_columns(nullspace(a), a.cols());
}

/// Rows spanning the annihilator of the column span of w inside Q^dim.
inline QMatrix annihilator(const QMatrix& w, std::size_t dim) {
  if (w.cols() == 0) return QMatrix::identity(dim);
  auto rows = nullspace(w.transpose());
  QMatrix a(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = rows[i][j];
  return a;
}

/// A submodule with its inclusion into the ambient module.
struct Submodule {
  QuiverRep rep;
  Morphism inclusion;  ///< columns are the chosen basis of W_v
};

/// Restricts M to a family of subspaces closed under all arrows.
inline Submodule restrict_to(const QuiverRep& m, const SubspaceFamily& w) {
  const Quiver& q = m.quiver;
  Submodule s{{q, {}, {}}, w.basis};
  for (std::size_t v = 0; v < q.vertices; ++v) s.rep.dims.push_back(w.basis[v].cols());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& arr = q.arrows[a];
    const QMatrix& src = w.basis[arr.source];
    const QMatrix& tgt = w.basis[arr.target];
    QMatrix image = m.maps[a] * src;
    if (tgt.cols() == 0) {
      if (!image.is_zero()) fail(ErrorKind::Internal, "subspace family not closed under arrows");
      s.rep.maps.emplace_back(0, src.cols());
      continue;
    }
    auto x = solve_matrix(tgt, image);
    if (!x) fail(ErrorKind::Internal, "subspace family not closed under arrows");
    s.rep.maps.push_back(std::move(*x));
  }
  return s;
}

/// A quotient with its projection from the ambient module.
struct Quotient {
  QuiverRep rep;
  Morphism projection;
};

inline Quotient quotient_by(const QuiverRep& m, const SubspaceFamily& w) {
  const Quiver& q = m.quiver;
  Quotient out{{q, {}, {}}, {}};
  std::vector<QMatrix> section;
  for (std::size_t v = 0; v < q.vertices; ++v) {
    const std::size_t d = m.dims[v];
    // Extend a basis of W_v by standard vectors to a basis of Q^d.
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < w.basis[v].cols(); ++j) cols.push_back(w.basis[v].col(j));
    cols = independent_subset(cols, d);
    const std::size_t wdim = cols.size();
    for (std::size_t e = 0; e < d; ++e) {
      QVector unit(d);
      unit[e] = 1;
      cols.push_back(unit);
    }
    cols = independent_subset(cols, d);
    QMatrix full = QMatrix::from_columns(cols, d);
    QMatrix inv = d ? *inverse(full) : QMatrix(0, 0);
    QMatrix proj(d - wdim, d), sec(d, d - wdim);
    for (std::size_t i = 0; i < d - wdim; ++i) {
      for (std::size_t j = 0; j < d; ++j) proj(i, j) = inv(wdim + i, j);
      for (std::size_t j = 0; j < d; ++j) sec(j, i) = full(j, wdim + i);
    }
    out.rep.dims.push_back(d - wdim);
    out.projection.push_back(std::move(proj));
    section.push_back(std::move(sec));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& arr = q.arrows[a];
    out.rep.maps.push_back(out.projection[arr.target] * m.maps[a] * section[arr.source]);
  }
  return out;
}

/// Kernel of a morphism f: M -> N as a submodule of M.
inline Submodule kernel_of(const QuiverRep& m, const Morphism& f) {
  SubspaceFamily w;
  for (std::size_t v = 0; v < m.quiver.vertices; ++v) {
    if (m.dims[v] == 0) {
      w.basis.emplace_back(0, 0);
      continue;
    }
    w.basis.push_back(f[v].rows() == 0 ? QMatrix::identity(m.dims[v]) : kernel_matrix(f[v]));
  }
  return restrict_to(m, w);
}

/// Image of a morphism f: M -> N as a subspace family of N.
inline SubspaceFamily image_of(const QuiverRep& n, const Morphism& f) {
  SubspaceFamily w;
  for (std::size_t v = 0; v < n.quiver.vertices; ++v) {
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < f[v].cols(); ++j) cols.push_back(f[v].col(j));
    cols = independent_subset(cols, n.dims[v]);
    w.basis.push_back(cols.empty() ? QMatrix(n.dims[v], 0) : QMatrix::from_columns(cols, n.dims[v]));
  }
  return w;
}

inline Quotient cokernel_of(const QuiverRep& n, const Morphism& f) { return quotient_by(n, image_of(n, f)); }

/// Dimension of the socle at each vertex: vectors killed by every arrow.
inline std::vector<std::size_t> socle_dims(const QuiverRep& m) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.quiver.vertices; ++v) {
    std::size_t rows = 0;
    for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a)
      if (m.quiver.arrows[a].source == v) rows += m.maps[a].rows();
    QMatrix stack(rows, m.dims[v]);
    std::size_t r = 0;
    for (std::size_t a = 0; a < m.quiver.arrows.size(); ++a) {
      if (m.quiver.arrows[a].source != v) continue;
      for (std::size_t i = 0; i < m.maps[a].rows(); ++i, ++r)
        for (std::size_t j = 0; j < m.dims[v]; ++j) stack(r, j) = m.maps[a](i, j);
    }
    out.push_back(m.dims[v] - (rows ? rank(stack) : 0));
  }
  return out;
}

}  // namespace gradalg

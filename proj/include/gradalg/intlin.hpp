#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, integer
// kernels, and finitely generated abelian groups.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"

namespace gradalg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(ErrorKind::BadShape, "ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::BadShape, "matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  IntVector operator*(const IntVector& v) const {
    if (v.size() != cols_) fail(ErrorKind::BadShape, "matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  IntMatrix operator-() const {
    IntMatrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) os << ',';
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ',';
        os << (*this)(i, j).get_str();
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntMatrix matrix_from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::BadShape, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::BadShape, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// U * A * V = S with S diagonal, d_1 | d_2 | ... and U, V unimodular.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      if (S(i, i) != 0) ++r;
    return r;
  }
  IntVector diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// Smallest nonzero |entry| in the trailing block starting at (t, t).
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Integer& x = a(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
        if (best == 1) return true;
      }
    }
  return found;
}

inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Smith normal form with smallest-absolute-value pivoting.
inline SmithDecomposition smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row(dst, src, f);
    u.add_row(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col(dst, src, f);
    v.add_col(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pi = 0, pj = 0;
    if (!detail::find_pivot(a, t, pi, pj)) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -detail::tdiv(a(i, t), a(t, t)));
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -detail::tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived: move it into position.
        std::size_t bi = t, bj = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) best = abs(a(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) best = abs(a(t, j)), bi = t, bj = j;
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_op(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

/// Row-style Hermite normal form: echelon rows, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
inline std::vector<IntVector> hermite_rows(std::vector<IntVector> rows, std::size_t cols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = detail::tdiv(rows[i][c], rows[top][c]);
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (top < rows.size() && rows[top][c] != 0) {
      if (rows[top][c] < 0)
        for (auto& x : rows[top]) x = -x;
      for (std::size_t i = 0; i < top; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[top][j];
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

inline std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

/// Basis of {x in Z^cols : A x = 0}: the columns of V at zero diagonal
/// positions, brought to Hermite normal form.
inline std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) basis.push_back(snf.V.col(j));
  return hermite_rows(std::move(basis), a.cols());
}

/// True iff v lies in the Z-span of the given vectors.
inline bool in_span(const std::vector<IntVector>& generators, IntVector v) {
  const std::size_t cols = v.size();
  auto hnf = hermite_rows(generators, cols);
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    if (v[c] % row[c] != 0) return false;
    Integer q = v[c] / row[c];
    for (std::size_t j = 0; j < cols; ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Finitely generated abelian group Z/d_1 x ... x Z/d_k; d = 0 encodes Z.
class FgAbelianGroup {
 public:
  using Element = IntVector;

  FgAbelianGroup() = default;
  explicit FgAbelianGroup(const std::vector<Integer>& factors) {
    for (const auto& d : factors) {
      if (d < 0) fail(ErrorKind::BadParameters, "negative invariant factor");
      if (d != 1) factors_.push_back(d);
    }
  }
  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(std::vector<Integer>(rank, 0)); }
  static FgAbelianGroup cyclic(const Integer& d) { return FgAbelianGroup(std::vector<Integer>{d}); }

  /// Canonical invariant-factor form of the direct sum of cyclic groups of
  /// the given orders: torsion d_1 | d_2 | ... ascending, free factors last.
  static FgAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders) {
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    auto d = smith_normal_form(diag).diagonal();
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;
    for (const auto& x : d) {
      if (x == 0) ++free_rank;
      else if (x != 1) torsion.push_back(x);
    }
    torsion.resize(torsion.size() + free_rank, Integer(0));
    return FgAbelianGroup(torsion);
  }

  const std::vector<Integer>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }

  std::size_t free_rank() const {
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Integer(0)));
  }
  std::vector<Integer> torsion() const {
    std::vector<Integer> t;
    for (const auto& d : factors_)
      if (d != 0) t.push_back(d);
    return t;
  }

  FgAbelianGroup canonical() const { return from_cyclic_orders(factors_); }
  bool isomorphic_to(const FgAbelianGroup& other) const {
    return canonical().factors_ == other.canonical().factors_;
  }

  Element zero() const { return Element(factors_.size()); }

  Element reduce(Element x) const {
    check(x);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (factors_[i] != 0) mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), factors_[i].get_mpz_t());
    return x;
  }
  Element add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return reduce(std::move(c));
  }
  Element negate(const Element& a) const {
    Element c = a;
    for (auto& x : c) x = -x;
    return reduce(std::move(c));
  }
  Element scale(const Integer& k, const Element& a) const {
    Element c = a;
    for (auto& x : c) x *= k;
    return reduce(std::move(c));
  }
  bool is_zero(const Element& a) const {
    auto r = reduce(a);
    return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
  }
  bool equal(const Element& a, const Element& b) const { return reduce(a) == reduce(b); }

  /// "Z^a x Z/d1 x ..." with the free part first; "0" for the trivial group.
  std::string to_string() const {
    std::vector<std::string> parts;
    std::size_t free = free_rank();
    if (free == 1) parts.push_back("Z");
    else if (free > 1) parts.push_back("Z^" + std::to_string(free));
    for (const auto& d : torsion()) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
    return out;
  }

  /// Parses "Z", "Z^m", "Z/d" and products of these joined by " x ".
  static FgAbelianGroup parse(const std::string& spec) {
    std::vector<Integer> factors;
    std::string s;
    for (char c : spec)
      if (c != ' ') s += c;
    if (s == "0") return FgAbelianGroup();
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find('x', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty() || tok[0] != 'Z') fail(ErrorKind::ParseError, "bad group spec '" + spec + "'");
      try {
        if (tok == "Z") {
          factors.emplace_back(0);
        } else if (tok.size() > 2 && tok[1] == '^') {
          long m = std::stol(tok.substr(2));
          if (m < 0) fail(ErrorKind::ParseError, "negative rank in '" + spec + "'");
          for (long i = 0; i < m; ++i) factors.emplace_back(0);
        } else if (tok.size() > 2 && tok[1] == '/') {
          Integer d(tok.substr(2));
          if (d <= 0) fail(ErrorKind::ParseError, "cyclic order must be positive in '" + spec + "'");
          factors.push_back(d);
        } else {
          fail(ErrorKind::ParseError, "bad group factor '" + tok + "'");
        }
      } catch (const std::invalid_argument&) {
        fail(ErrorKind::ParseError, "bad number in group spec '" + spec + "'");
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return FgAbelianGroup(factors);
  }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  void check(const Element& x) const {
    if (x.size() != factors_.size()) fail(ErrorKind::BadShape, "group element has wrong length");
  }
  std::vector<Integer> factors_;
};

/// A tuple of group elements (g_1, ..., g_n) in A^n.
using GroupVector = std::vector<FgAbelianGroup::Element>;

/// Computes R^t G for G in A^n, R an n x c integer matrix.
inline GroupVector transpose_apply(const IntMatrix& r, const FgAbelianGroup& group, const GroupVector& g) {
  if (g.size() != r.rows()) fail(ErrorKind::BadShape, "grading length does not match matrix rows");
  GroupVector out;
  for (std::size_t j = 0; j < r.cols(); ++j) {
    auto acc = group.zero();
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (r(i, j) != 0) acc = group.add(acc, group.scale(r(i, j), g[i]));
    out.push_back(std::move(acc));
  }
  return out;
}

/// Invariant factors of the subgroup of A^n generated by the given vectors,
/// computed from the relation lattice {c : sum c_j g_j = 0}.
inline FgAbelianGroup subgroup_structure(const std::vector<GroupVector>& generators,
                                         const FgAbelianGroup& group, std::size_t n) {
  const std::size_t t = generators.size();
  const std::size_t m = group.size();
  const std::size_t coords = n * m;
  if (t == 0) return FgAbelianGroup();
  // [ Gm | D ] with Gm the generator coordinates and D the cyclic moduli.
  IntMatrix l(coords, t + coords);
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < m; ++c) l(i * m + c, j) = generators[j].at(i).at(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c) l(i * m + c, t + i * m + c) = group.factors()[c];
  auto kernel = kernel_basis(l);
  IntMatrix rel(t, kernel.size());
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (std::size_t j = 0; j < t; ++j) rel(j, k) = kernel[k][j];
  auto d = smith_normal_form(rel).diagonal();
  std::vector<Integer> orders(t, Integer(0));
  for (std::size_t i = 0; i < d.size(); ++i) orders[i] = d[i];
  return FgAbelianGroup::from_cyclic_orders(orders);
}

/// Solution set {G in A^n : R^t G = 0} for an n x c matrix R.
struct HomSolution {
  FgAbelianGroup group;                ///< the coefficient group A
  std::vector<GroupVector> generators; ///< each generator lies in A^n
  FgAbelianGroup structure;            ///< isomorphism type of the solution group
};

/// Generators are computed one cyclic component of A at a time through the
/// Smith decomposition of R^t; over Z the component generators are exactly
/// kernel_basis(R^t).
inline HomSolution solve_hom_into_group(const IntMatrix& r, const FgAbelianGroup& group) {
  const std::size_t n = r.rows();
  const std::size_t m = group.size();
  HomSolution out{group, {}, {}};
  IntMatrix rt = r.transpose();
  SmithDecomposition snf = smith_normal_form(rt);
  IntVector diag(n, Integer(0));
  for (std::size_t i = 0; i < std::min(rt.rows(), n); ++i) diag[i] = snf.S(i, i);

  std::vector<Integer> orders;
  for (std::size_t c = 0; c < m; ++c) {
    const Integer& d = group.factors()[c];
    auto embed = [&](const IntVector& coords) {
      GroupVector g(n, group.zero());
      for (std::size_t i = 0; i < n; ++i) {
        g[i][c] = coords[i];
        g[i] = group.reduce(g[i]);
      }
      return g;
    };
    if (d == 0) {
      for (const auto& v : kernel_basis(rt)) {
        out.generators.push_back(embed(v));
        orders.emplace_back(0);
      }
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Integer g = gcd_int(d, diag[i]);  // order of the i-th solution generator
      if (g == 1) continue;
      Integer mult = d / g;
      IntVector v = snf.V.col(i);
      for (auto& x : v) x *= mult;
      out.generators.push_back(embed(v));
      orders.push_back(g);
    }
  }
  out.structure = FgAbelianGroup::from_cyclic_orders(orders);
  return out;
}

}  // namespace gradalg

#pragma once

// The categorical layer: the cluster-tilting modules V_k attached to a
// reduced word, their endomorphism quiver, indices and degrees of modules
// in Fac(V), exchange sequences, and a battery of consistency checks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/dynkin.hpp"
#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/preprojective.hpp"
#include "gradalg/quiver.hpp"
#include "gradalg/ratlin.hpp"
#include "gradalg/seed.hpp"
#include "gradalg/weyl.hpp"

namespace gradalg {

namespace detail {

inline Rational trace(const Morphism& f) {
  Rational t = 0;
  for (const auto& fv : f) t += fv.trace();
  return t;
}

inline Morphism combine(const std::vector<Morphism>& basis, const QVector& coeffs) {
  Morphism out = basis.at(0);
  for (auto& fv : out) fv = Rational(0) * fv;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0)
      for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + coeffs[i] * basis[i][v];
  return out;
}

// Indices of candidates that extend span(base) greedily, in order.
inline std::vector<std::size_t> greedy_extension(const std::vector<QVector>& base, const std::vector<QVector>& candidates) {
  if (candidates.empty() || candidates[0].empty()) return {};
  std::vector<QVector> cols = base;
  cols.insert(cols.end(), candidates.begin(), candidates.end());
  RowEchelon e = rref(QMatrix::from_columns(cols, candidates[0].size()));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= base.size()) out.push_back(p - base.size());
  return out;
}

// Morphism from a direct sum: per vertex, the chosen maps side by side.
inline Morphism from_sum(const std::vector<Morphism>& parts, const QuiverRep& target) {
  Morphism out;
  for (std::size_t v = 0; v < target.dims.size(); ++v) {
    QMatrix m(target.dims[v], 0);
    for (const auto& p : parts) m = QMatrix::hcat(m, p[v]);
    out.push_back(std::move(m));
  }
  return out;
}

inline IntVector dim_vector(const QuiverRep& m) {
  IntVector out;
  for (auto d : m.dims) out.emplace_back(static_cast<unsigned long>(d));
  return out;
}

}  // namespace detail

using HomTable = std::vector<std::vector<std::vector<Morphism>>>;

struct EndomorphismData {
  HomTable hom;          ///< hom[j][k]: basis of Hom(V_j, V_k)
  HomTable rad;          ///< rad[j][k]: basis of the radical part
  IntMatrix irreducible;  ///< (j, k): number of irreducible maps V_j -> V_k
  IntMatrix B;            ///< B_jk = irreducible(j,k) - irreducible(k,j)
};

/// Computes End(V_1 + ... + V_n) and its Gabriel quiver. The radical is found
/// with the trace form: x in Hom(V_j, V_k) lies in the radical iff
/// tr(y x) = 0 for every y in Hom(V_k, V_j).
inline EndomorphismData endomorphism_data(const std::vector<QuiverRep>& modules) {
  const std::size_t n = modules.size();
  EndomorphismData out;
  out.hom.assign(n, std::vector<std::vector<Morphism>>(n));
  out.rad = out.hom;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) out.hom[j][k] = hom_basis(modules[j], modules[k]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& xs = out.hom[j][k];
      const auto& ys = out.hom[k][j];
      if (xs.empty()) continue;
      QMatrix form(ys.size(), xs.size());
      for (std::size_t b = 0; b < ys.size(); ++b)
        for (std::size_t a = 0; a < xs.size(); ++a) form(b, a) = detail::trace(compose(ys[b], xs[a]));
      auto null = nullspace(form);
      const std::size_t expected = j == k ? xs.size() - 1 : xs.size();
      if (null.size() != expected)
        fail(ErrorKind::RadicalFailure, j == k ? "endomorphism ring of V" + std::to_string(j + 1) + " is not local"
                                               : "summands V" + std::to_string(j + 1) + " and V" +
                                                     std::to_string(k + 1) + " are isomorphic");
      for (const auto& c : null) out.rad[j][k].push_back(detail::combine(xs, c));
    }
  out.irreducible = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (out.rad[j][k].empty()) continue;
      std::vector<QVector> sq;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& f : out.rad[j][l])
          for (const auto& g : out.rad[l][k]) sq.push_back(flatten(compose(g, f)));
      out.irreducible(j, k) = static_cast<unsigned long>(out.rad[j][k].size() - span_dim(sq));
    }
  out.B = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) out.B(j, k) = out.irreducible(j, k) - out.irreducible(k, j);
  return out;
}

struct EndomorphismQuiver {
  IntMatrix irreducible;
  IntMatrix B;
};

inline EndomorphismQuiver endomorphism_quiver(const std::vector<QuiverRep>& modules) {
  auto d = endomorphism_data(modules);
  return {d.irreducible, d.B};
}

/// The combinatorial shadow of C_w for a reduced word. Indices are 0-based
/// and follow the order V_1, ..., V_n.
struct CategoryModel {
  DynkinDiagram diagram;
  std::vector<std::size_t> word;  ///< as written, (i_n, ..., i_1)
  std::vector<QuiverRep> modules;
  std::vector<std::size_t> proj_indices;
  std::vector<std::size_t> mutable_indices;
  IntMatrix hom_dims;
  IntMatrix L;
  IntMatrix irreducible;
  IntMatrix B;  ///< full n x n antisymmetrised quiver matrix
  IntMatrix Bq;  ///< n x r, the columns of B at mutable_indices
  IntMatrix dim_vectors;  ///< n x m
  HomTable hom, rad;

  std::size_t n() const noexcept { return modules.size(); }
  std::size_t r() const noexcept { return mutable_indices.size(); }
  bool is_projective(std::size_t k) const {
    return std::find(proj_indices.begin(), proj_indices.end(), k) != proj_indices.end();
  }
};

inline CategoryModel birs_modules(const PreprojectiveAlgebra& alg, const std::vector<std::size_t>& word) {
  const DynkinDiagram& d = alg.diagram();
  require_reduced(d, word);
  CategoryModel m;
  m.diagram = d;
  m.word = word;
  const auto seq = letters_from_right(word);
  const std::size_t n = seq.size();
  std::map<std::size_t, QuiverRep> injectives;
  for (std::size_t k = 0; k < n; ++k) {
    if (!injectives.count(seq[k])) injectives.emplace(seq[k], injective_module(alg, seq[k]));
    // soc_{(i_k, i_{k-1}, ..., i_1)}: the letter i_k is applied first.
    std::vector<std::size_t> letters;
    for (std::size_t q = k + 1; q-- > 0;) letters.push_back(seq[q]);
    m.modules.push_back(socle_sequence_submodule(injectives.at(seq[k]), letters).rep);
  }
  for (std::size_t k = 0; k < n; ++k) {
    bool last = std::find(seq.begin() + static_cast<std::ptrdiff_t>(k) + 1, seq.end(), seq[k]) == seq.end();
    (last ? m.proj_indices : m.mutable_indices).push_back(k);
  }
  auto e = endomorphism_data(m.modules);
  m.hom = std::move(e.hom);
  m.rad = std::move(e.rad);
  m.irreducible = std::move(e.irreducible);
  m.B = std::move(e.B);
  m.hom_dims = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m.hom_dims(j, k) = static_cast<unsigned long>(m.hom[j][k].size());
  m.L = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m.L(j, k) = m.hom_dims(j, k) - m.hom_dims(k, j);
  m.Bq = IntMatrix(n, m.r());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m.r(); ++c) m.Bq(i, c) = m.B(i, m.mutable_indices[c]);
  m.dim_vectors = IntMatrix(n, d.rank);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t v = 0; v < d.rank; ++v) m.dim_vectors(k, v) = static_cast<unsigned long>(m.modules[k].dims[v]);
  return m;
}

/// Gradings read off the model: one per vertex of the diagram (Pi-dimension
/// vectors), indexed like the modules.
inline std::vector<Grading> dimension_gradings(const CategoryModel& m) {
  std::vector<Grading> out;
  for (std::size_t v = 0; v < m.diagram.rank; ++v) {
    std::vector<long> values;
    for (std::size_t k = 0; k < m.n(); ++k) values.push_back(m.dim_vectors(k, v).get_si());
    out.push_back(integer_grading(values));
  }
  return out;
}

/// The grading [F V_p] for a projective-injective V_p: G_i = dim Hom(V_i, V_p).
inline Grading projective_grading(const CategoryModel& m, std::size_t p) {
  std::vector<long> values;
  for (std::size_t i = 0; i < m.n(); ++i) values.push_back(m.hom_dims(i, p).get_si());
  return integer_grading(values);
}

/// The model as a graded seed: mutable summands first, then the
/// projective-injectives; gradings are the dimension-vector gradings.
inline GradedSeed model_seed(const CategoryModel& m) {
  std::vector<std::size_t> order = m.mutable_indices;
  order.insert(order.end(), m.proj_indices.begin(), m.proj_indices.end());
  IntMatrix b(m.n(), m.r());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m.n(); ++a) {
    names.push_back("V" + std::to_string(order[a] + 1));
    for (std::size_t c = 0; c < m.r(); ++c) b(a, c) = m.B(order[a], order[c]);
  }
  GradedSeed gs{make_seed(std::move(b), m.r(), names), {}};
  for (const auto& g : dimension_gradings(m)) {
    Grading h{g.group, {}};
    for (auto k : order) h.values.push_back(g.values[k]);
    gs.gradings.push_back(std::move(h));
  }
  return gs;
}

struct Approximation {
  std::vector<std::size_t> multiplicities;  ///< copies of each V_j in the source
  QuiverRep source;
  Morphism map;
  Submodule kernel;
};

/// Minimal right approximation of X by add of the summands flagged in
/// `allowed`. The multiplicity of V_j is the dimension of Hom(V_j, X) modulo
/// maps factoring through radical maps V_j -> V_l with l allowed.
inline Approximation right_approximation(const CategoryModel& m, const QuiverRep& x, const std::vector<bool>& allowed) {
  const std::size_t n = m.n();
  std::vector<std::vector<Morphism>> into(n);
  for (std::size_t l = 0; l < n; ++l)
    if (allowed[l]) into[l] = hom_basis(m.modules[l], x);
  Approximation out;
  out.multiplicities.assign(n, 0);
  std::vector<QuiverRep> parts;
  std::vector<Morphism> maps;
  for (std::size_t j = 0; j < n; ++j) {
    if (!allowed[j] || into[j].empty()) continue;
    std::vector<QVector> factor, cands;
    for (std::size_t l = 0; l < n; ++l)
      if (allowed[l])
        for (const auto& g : m.rad[j][l])
          for (const auto& f : into[l]) factor.push_back(flatten(compose(f, g)));
    for (const auto& f : into[j]) cands.push_back(flatten(f));
    for (auto i : detail::greedy_extension(factor, cands)) {
      parts.push_back(m.modules[j]);
      maps.push_back(into[j][i]);
      ++out.multiplicities[j];
    }
  }
  out.source = direct_sum(parts, x.quiver);
  out.map = detail::from_sum(maps, x);
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    if (rank(out.map[v]) != x.dims[v]) fail(ErrorKind::NotInFac, "module is not a quotient of the allowed summands");
  out.kernel = kernel_of(out.source, out.map);
  return out;
}

/// Multiplicities of a module K in add(V), assuming K lies there, from the
/// linear system H m = (dim Hom(V_j, K))_j.
inline IntVector decompose_in_add(const CategoryModel& m, const QuiverRep& k) {
  const std::size_t n = m.n();
  QVector rhs;
  for (std::size_t j = 0; j < n; ++j) rhs.emplace_back(static_cast<unsigned long>(hom_dim(m.modules[j], k)));
  QMatrix h = QMatrix::from_int(m.hom_dims);
  if (rank(h) != n) fail(ErrorKind::GramSingular, "Hom-dimension matrix is singular");
  auto sol = solve(h, rhs);
  IntVector out;
  for (const auto& q : *sol) {
    if (q.get_den() != 1 || q < 0) fail(ErrorKind::NonIntegralSolution, "kernel does not decompose into summands");
    out.push_back(q.get_num());
  }
  return out;
}

struct IndexResult {
  IntVector index;
  std::vector<FgAbelianGroup::Element> degrees;
};

/// index = [R_X] - [K_X] from the minimal right add(V)-approximation, and
/// deg_G(X) = index . G for each grading.
inline IndexResult index_and_degree(const CategoryModel& m, const QuiverRep& x, const std::vector<Grading>& gradings) {
  for (const auto& g : gradings)
    if (g.values.size() != m.n()) fail(ErrorKind::BadShape, "grading length differs from the number of summands");
  auto approx = right_approximation(m, x, std::vector<bool>(m.n(), true));
  IntVector kern = decompose_in_add(m, approx.kernel.rep);
  IndexResult out;
  for (std::size_t j = 0; j < m.n(); ++j)
    out.index.push_back(Integer(static_cast<unsigned long>(approx.multiplicities[j])) - kern[j]);
  for (const auto& g : gradings) out.degrees.push_back(pair(out.index, g));
  return out;
}

/// The exchange sequence 0 -> V_k* -> R -> V_k -> 0, with R -> V_k the minimal
/// right approximation by the other summands.
struct ExchangeSequence {
  std::size_t k = 0;
  std::vector<std::size_t> middle;
  QuiverRep mutated;
};

inline ExchangeSequence exchange_sequence(const CategoryModel& m, std::size_t k) {
  if (k >= m.n()) fail(ErrorKind::IndexOutOfRange, "summand index out of range");
  if (m.is_projective(k)) fail(ErrorKind::IndexOutOfRange, "projective-injective summands are frozen");
  std::vector<bool> allowed(m.n(), true);
  allowed[k] = false;
  auto approx = right_approximation(m, m.modules[k], allowed);
  return {k, approx.multiplicities, approx.kernel.rep};
}

/// The symmetric bilinear form of the Cartan matrix on dimension vectors.
inline Integer cartan_pairing(const DynkinDiagram& d, const QuiverRep& a, const QuiverRep& b) {
  IntMatrix c = d.cartan();
  Integer s = 0;
  for (std::size_t i = 0; i < d.rank; ++i)
    for (std::size_t j = 0; j < d.rank; ++j)
      s += c(i, j) * static_cast<unsigned long>(a.dims[i]) * static_cast<unsigned long>(b.dims[j]);
  return s;
}

/// dim Ext^1(M, N) = dim Hom(M, N) + dim Hom(N, M) - (dim M, dim N).
inline Integer ext1_dim(const DynkinDiagram& d, const QuiverRep& a, const QuiverRep& b) {
  return Integer(static_cast<unsigned long>(hom_dim(a, b) + hom_dim(b, a))) - cartan_pairing(d, a, b);
}

/// A random module in Fac(V): the cokernel of a random map from a summand
/// into a sum of one or two projective-injectives.
inline QuiverRep sample_fac_module(const CategoryModel& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_p(0, m.proj_indices.size() - 1), pick_n(0, m.n() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2), count(1, 2);
  std::vector<QuiverRep> parts;
  for (int c = count(rng); c > 0; --c) parts.push_back(m.modules[m.proj_indices[pick_p(rng)]]);
  QuiverRep p = direct_sum(parts, m.modules[0].quiver);
  const QuiverRep& src = m.modules[pick_n(rng)];
  auto basis = hom_basis(src, p);
  if (basis.empty()) return p;
  QVector c;
  for (std::size_t i = 0; i < basis.size(); ++i) c.emplace_back(coeff(rng));
  return cokernel_of(p, detail::combine(basis, c)).rep;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "preprojective_relations", "weyl_dimension_vectors", "socles",         "projective_count",
      "l_antisymmetric",         "bl_identity",            "rank",           "dimension_grading",
      "crawley_boevey",          "summand_index",          "exchange_degrees", "projective_degrees",
  };
  return names;
}

namespace detail {

inline std::string vec_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

inline CheckResult run_check(const CategoryModel& m, const PreprojectiveAlgebra& alg, const std::string& name,
                             std::uint64_t rng_seed) {
  const std::size_t n = m.n();
  CheckResult res{name, true, ""};
  auto failing = [&](const std::string& why) {
    if (res.passed) res.detail = why;
    res.passed = false;
  };
  if (name == "preprojective_relations") {
    for (std::size_t k = 0; k < n; ++k)
      if (!satisfies_preprojective_relations(m.modules[k], alg)) failing("V" + std::to_string(k + 1));
  } else if (name == "weyl_dimension_vectors") {
    for (std::size_t k = 0; k < n; ++k) {
      IntVector w = weyl_dimension_vector(m.diagram, m.word, k);
      if (w != m.dim_vectors.row(k)) failing("V" + std::to_string(k + 1) + " weyl " + vec_string(w));
    }
  } else if (name == "socles") {
    const auto seq = letters_from_right(m.word);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> expect(m.diagram.rank, 0);
      expect[seq[k]] = 1;
      if (socle_dims(m.modules[k]) != expect) failing("V" + std::to_string(k + 1));
    }
  } else if (name == "projective_count") {
    std::set<std::size_t> letters(m.word.begin(), m.word.end());
    if (letters.size() != m.proj_indices.size()) failing("|I| differs from the number of distinct letters");
    res.detail = "|I| = " + std::to_string(m.proj_indices.size()) + ", r = " + std::to_string(m.r());
  } else if (name == "l_antisymmetric") {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m.L(j, k) != -m.L(k, j)) failing("entry " + std::to_string(j + 1) + "," + std::to_string(k + 1));
  } else if (name == "bl_identity") {
    for (std::size_t c = 0; c < m.r(); ++c)
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m.Bq(l, c) * m.L(l, j);
        Integer expect = j == m.mutable_indices[c] ? 2 : 0;
        if (s != expect)
          failing("column V" + std::to_string(m.mutable_indices[c] + 1) + " row " + std::to_string(j + 1) + " gives " +
                  s.get_str());
      }
  } else if (name == "rank") {
    std::size_t rk = gradalg::rank(m.Bq);
    res.detail = "rank " + std::to_string(rk);
    if (rk != m.r()) failing("rank " + std::to_string(rk) + " but r = " + std::to_string(m.r()));
  } else if (name == "dimension_grading") {
    for (std::size_t c = 0; c < m.r(); ++c)
      for (std::size_t v = 0; v < m.diagram.rank; ++v) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m.Bq(l, c) * m.dim_vectors(l, v);
        if (s != 0) failing("column V" + std::to_string(m.mutable_indices[c] + 1));
      }
  } else if (name == "crawley_boevey") {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (ext1_dim(m.diagram, m.modules[j], m.modules[k]) != 0)
          failing("Ext^1(V" + std::to_string(j + 1) + ",V" + std::to_string(k + 1) + ") nonzero");
    for (auto k : m.mutable_indices) {
      auto ex = exchange_sequence(m, k);
      if (ext1_dim(m.diagram, ex.mutated, m.modules[k]) != 1 || ext1_dim(m.diagram, m.modules[k], ex.mutated) != 1)
        failing("exchange pair at V" + std::to_string(k + 1) + " is not Ext^1-one");
    }
  } else if (name == "summand_index") {
    auto grads = dimension_gradings(m);
    for (std::size_t k = 0; k < n; ++k) {
      auto ir = index_and_degree(m, m.modules[k], grads);
      IntVector e(n);
      e[k] = 1;
      if (ir.index != e) failing("V" + std::to_string(k + 1) + " index " + vec_string(ir.index));
    }
  } else if (name == "exchange_degrees") {
    std::vector<Grading> grads = dimension_gradings(m);
    for (auto p : m.proj_indices) grads.push_back(projective_grading(m, p));
    for (auto k : m.mutable_indices) {
      auto ex = exchange_sequence(m, k);
      auto star = index_and_degree(m, ex.mutated, grads);
      IntVector mid;
      for (auto x : ex.middle) mid.emplace_back(static_cast<unsigned long>(x));
      IntVector ek(n);
      ek[k] = 1;
      for (const auto& g : grads)
        if (!g.group.equal(pair(mid, g), g.group.add(pair(star.index, g), pair(ek, g))))
          failing("degree not additive on the exchange sequence at V" + std::to_string(k + 1));
      // Dimension-vector degrees are dimension vectors.
      for (std::size_t v = 0; v < m.diagram.rank; ++v)
        if (star.degrees[v][0] != static_cast<unsigned long>(ex.mutated.dims[v]))
          failing("dimension degree of V" + std::to_string(k + 1) + "* differs from its dimension vector");
    }
  } else if (name == "projective_degrees") {
    std::mt19937_64 rng(rng_seed);
    std::vector<Grading> grads;
    for (auto p : m.proj_indices) grads.push_back(projective_grading(m, p));
    const std::size_t samples = 10;
    for (std::size_t s = 0; s < samples; ++s) {
      QuiverRep x = sample_fac_module(m, rng);
      auto ir = index_and_degree(m, x, grads);
      for (std::size_t q = 0; q < m.proj_indices.size(); ++q)
        if (ir.degrees[q][0] != static_cast<unsigned long>(hom_dim(x, m.modules[m.proj_indices[q]])))
          failing("sample " + std::to_string(s) + " at V" + std::to_string(m.proj_indices[q] + 1));
    }
  } else {
    fail(ErrorKind::BadParameters, "unknown check " + name);
  }
  return res;
}

}  // namespace detail

/// Runs the named checks (all of them when `names` is empty).
inline std::vector<CheckResult> run_checks(const CategoryModel& m, const PreprojectiveAlgebra& alg,
                                           std::vector<std::string> names = {}, std::uint64_t rng_seed = 1) {
  if (names.empty()) names = check_names();
  std::vector<CheckResult> out;
  for (const auto& name : names) out.push_back(detail::run_check(m, alg, name, rng_seed));
  return out;
}

/// Deterministic text dump of the model.
inline std::string model_report(const CategoryModel& m) {
  std::ostringstream os;
  auto row = [&](const IntMatrix& a, std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).get_str();
    os << "\n";
  };
  os << "type " << m.diagram.name() << " word ";
  for (std::size_t i = 0; i < m.word.size(); ++i) os << (i ? "," : "") << m.word[i] + 1;
  os << "\nn " << m.n() << " r " << m.r() << "\nprojective";
  for (auto p : m.proj_indices) os << " V" << p + 1;
  os << "\nmutable";
  for (auto p : m.mutable_indices) os << " V" << p + 1;
  os << "\ndim_vectors\n";
  for (std::size_t k = 0; k < m.n(); ++k) os << "V" << k + 1 << " ", row(m.dim_vectors, k);
  os << "hom_dims\n";
  for (std::size_t k = 0; k < m.n(); ++k) row(m.hom_dims, k);
  os << "L\n";
  for (std::size_t k = 0; k < m.n(); ++k) row(m.L, k);
  os << "Bq";
  for (auto p : m.mutable_indices) os << " V" << p + 1;
  os << "\n";
  for (std::size_t k = 0; k < m.n(); ++k) os << "V" << k + 1 << " ", row(m.Bq, k);
  return os.str();
}

}  // namespace gradalg

#pragma once

// Weyl group arithmetic for simply-laced Dynkin diagrams. Weights are stored
// in the fundamental-weight basis and roots in the simple-root basis, both
// with integer entries.
//
// A word is stored as written, (i_n, ..., i_1), with 0-based letters; the
// rightmost letter i_1 acts first.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gradalg/dynkin.hpp"
#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/ratlin.hpp"

namespace gradalg {

/// The word read from the right: element p is i_{p+1}.
inline std::vector<std::size_t> letters_from_right(const std::vector<std::size_t>& word) {
  return {word.rbegin(), word.rend()};
}

inline void check_word(const DynkinDiagram& d, const std::vector<std::size_t>& word) {
  for (auto l : word)
    if (l >= d.rank) fail(ErrorKind::IndexOutOfRange, "word letter outside the diagram");
}

/// s_j on a weight: lambda - lambda_j alpha_j, with alpha_j = C e_j.
inline IntVector reflect_weight(const IntMatrix& cartan, std::size_t j, IntVector lambda) {
  const Integer c = lambda[j];
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] -= c * cartan(i, j);
  return lambda;
}

/// s_j on a root: v - (C v)_j alpha_j.
inline IntVector reflect_root(const IntMatrix& cartan, std::size_t j, IntVector v) {
  Integer pairing = 0;
  for (std::size_t i = 0; i < v.size(); ++i) pairing += cartan(j, i) * v[i];
  v[j] -= pairing;
  return v;
}

inline bool is_positive_root(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; });
}

/// A word is reduced iff s_{i_1} ... s_{i_{p-1}}(alpha_{i_p}) is positive for every p.
inline bool is_reduced(const DynkinDiagram& d, const std::vector<std::size_t>& word) {
  check_word(d, word);
  const IntMatrix c = d.cartan();
  const auto seq = letters_from_right(word);
  for (std::size_t p = 0; p < seq.size(); ++p) {
    IntVector root(d.rank);
    root[seq[p]] = 1;
    for (std::size_t q = p; q-- > 0;) root = reflect_root(c, seq[q], std::move(root));
    if (!is_positive_root(root)) return false;
  }
  return true;
}

inline void require_reduced(const DynkinDiagram& d, const std::vector<std::size_t>& word) {
  if (!is_reduced(d, word)) fail(ErrorKind::NotReduced, "word is not a reduced expression");
}

/// Simple-root coordinates of a weight given in the fundamental-weight basis.
inline IntVector weight_to_roots(const DynkinDiagram& d, const IntVector& lambda) {
  QVector rhs;
  for (const auto& x : lambda) rhs.emplace_back(x);
  auto sol = solve(QMatrix::from_int(d.cartan()), rhs);
  if (!sol) fail(ErrorKind::Internal, "Cartan matrix is singular");
  IntVector out;
  for (const auto& q : *sol) {
    if (q.get_den() != 1) fail(ErrorKind::NonIntegralSolution, "weight is not in the root lattice");
    out.push_back(q.get_num());
  }
  return out;
}

/// omega_{i_k} - s_{i_1} ... s_{i_k}(omega_{i_k}) in simple-root coordinates,
/// for 0-based k.
inline IntVector weyl_dimension_vector(const DynkinDiagram& d, const std::vector<std::size_t>& word, std::size_t k) {
  check_word(d, word);
  if (k >= word.size()) fail(ErrorKind::IndexOutOfRange, "k exceeds the word length");
  const IntMatrix c = d.cartan();
  const auto seq = letters_from_right(word);
  IntVector omega(d.rank);
  omega[seq[k]] = 1;
  IntVector lambda = omega;
  for (std::size_t q = k + 1; q-- > 0;) lambda = reflect_weight(c, seq[q], std::move(lambda));
  for (std::size_t i = 0; i < d.rank; ++i) lambda[i] = omega[i] - lambda[i];
  return weight_to_roots(d, lambda);
}

}  // namespace gradalg

#pragma once

// Grothendieck groups presented by exchange matrices, and grading spaces
// Hom(K0, A) computed both concretely and from invariant factors.

#include <cstddef>
#include <string>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/seed.hpp"

namespace gradalg {

struct K0Presentation {
  std::vector<std::string> generator_names;
  IntMatrix relations;  ///< n x r, one relation per column
  FgAbelianGroup invariants;
};

/// Cokernel of an n x c integer matrix in canonical invariant-factor form.
inline FgAbelianGroup cokernel(const IntMatrix& relations) {
  auto diag = smith_normal_form(relations).diagonal();
  std::vector<Integer> orders(relations.rows(), Integer(0));
  for (std::size_t i = 0; i < diag.size(); ++i) orders[i] = diag[i];
  return FgAbelianGroup::from_cyclic_orders(orders);
}

inline K0Presentation presentation_from_exchange_matrix(const Seed& seed) {
  require_valid(seed);
  return {seed.names, seed.B, cokernel(seed.B)};
}

/// Hom(K, A) from invariant factors: Hom(Z/s, Z/d) = Z/gcd(s, d),
/// Hom(Z/s, Z) = 0, Hom(Z, A) = A.
inline FgAbelianGroup hom_group(const FgAbelianGroup& k, const FgAbelianGroup& a) {
  std::vector<Integer> orders;
  for (const auto& s : k.factors())
    for (const auto& d : a.factors()) {
      if (d == 0) {
        if (s == 0) orders.emplace_back(0);
      } else {
        orders.push_back(gcd_int(s, d));
      }
    }
  return FgAbelianGroup::from_cyclic_orders(orders);
}

struct GradingSpace {
  HomSolution concrete;     ///< {G in A^n : B^t G = 0} with generators
  FgAbelianGroup abstract;  ///< Hom(K0, A)
};

/// Gradings of the seed with values in A. The concrete solution group is
/// measured twice (from the Smith data and from its generators) and compared
/// against Hom(K0, A); any disagreement is an internal error.
inline GradingSpace grading_space(const Seed& seed, const FgAbelianGroup& group) {
  require_valid(seed);
  GradingSpace out{solve_hom_into_group(seed.B, group), hom_group(cokernel(seed.B), group)};
  FgAbelianGroup generated = subgroup_structure(out.concrete.generators, group, seed.n);
  if (!generated.isomorphic_to(out.concrete.structure) || !generated.isomorphic_to(out.abstract))
    fail(ErrorKind::Internal, "grading space " + generated.to_string() + " disagrees with Hom(K0, A) = " +
                                  out.abstract.to_string());
  return out;
}

/// Applies a sequence of mutations to a grading, returning every
/// intermediate graded seed (the first entry is the input).
inline std::vector<GradedSeed> transport_path(const GradedSeed& gs, const std::vector<std::size_t>& sequence) {
  require_valid(gs);
  std::vector<GradedSeed> path{gs};
  for (auto k : sequence) path.push_back(mutate_graded_seed(path.back(), k));
  return path;
}

inline Grading transport_grading(const Seed& seed, const Grading& g, const std::vector<std::size_t>& sequence) {
  return transport_path(GradedSeed{seed, {g}}, sequence).back().gradings.front();
}

}  // namespace gradalg

#pragma once

// Simply-laced Dynkin diagrams. Vertices are 0-based; A_m and D_m, E_m are
// laid out as a chain 0..m-2 with the last vertex attached to vertex m-3
// (D) or vertex 2 (E), and A_m as the plain chain.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"

namespace gradalg {

struct DynkinDiagram {
  char type = 'A';
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< (a, b) with a < b

  std::string name() const { return std::string(1, type) + std::to_string(rank); }

  std::vector<std::size_t> neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (auto [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return out;
  }

  IntMatrix cartan() const {
    IntMatrix c(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) c(i, i) = 2;
    for (auto [a, b] : edges) c(a, b) = c(b, a) = -1;
    return c;
  }
};

inline DynkinDiagram dynkin_diagram(char type, std::size_t rank) {
  DynkinDiagram d{type, rank, {}};
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A':
      if (rank < 1) fail(ErrorKind::NotDynkin, "A_m needs m >= 1");
      chain(rank);
      break;
    case 'D':
      if (rank < 4) fail(ErrorKind::NotDynkin, "D_m needs m >= 4");
      chain(rank - 1);
      d.edges.emplace_back(rank - 3, rank - 1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail(ErrorKind::NotDynkin, "E_m needs 6 <= m <= 8");
      chain(rank - 1);
      d.edges.emplace_back(2, rank - 1);
      break;
    default:
      fail(ErrorKind::NotDynkin, std::string("unknown Dynkin type '") + type + "'");
  }
  return d;
}

}  // namespace gradalg

#pragma once

// Shared test diagrams: the named examples plus seeded random connected
// diagrams.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "racg/diagram.hpp"

namespace suite {

inline racg::CoxeterDiagram triangle() { return racg::CoxeterDiagram(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline racg::CoxeterDiagram path3() { return racg::CoxeterDiagram(3, {{0, 1}, {1, 2}}); }
/// K_{1,3} with centre vertex 1.
inline racg::CoxeterDiagram star4() { return racg::CoxeterDiagram(4, {{0, 1}, {0, 2}, {0, 3}}); }

/// Random spanning tree on a shuffled vertex order plus each remaining pair
/// with probability 2/5.
inline racg::CoxeterDiagram random_connected(std::mt19937_64& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<racg::Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    int a = order[static_cast<std::size_t>(k)], b = order[static_cast<std::size_t>(pick(rng))];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
    used[a][b] = true;
  }
  std::bernoulli_distribution extra(0.4);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!used[a][b] && extra(rng)) edges.push_back({a, b});
  return racg::CoxeterDiagram(n, edges);
}

struct Named {
  std::string name;
  racg::CoxeterDiagram diagram;
};

/// K3, P3, K_{1,3}, cycle complements 5..9 and 20 random connected
/// diagrams with 3 ≤ n ≤ 7 (seed fixed).
inline std::vector<Named> acceptance_suite() {
  std::vector<Named> out{{"K3", triangle()}, {"P3", path3()}, {"K1,3", star4()}};
  for (int n = 5; n <= 9; ++n) out.push_back({"C" + std::to_string(n) + "-complement", racg::cycle_complement(n)});
  std::mt19937_64 rng(20211101);
  std::uniform_int_distribution<int> size(3, 7);
  for (int i = 0; i < 20; ++i) out.push_back({"random-" + std::to_string(i), random_connected(rng, size(rng))});
  return out;
}

}  // namespace suite

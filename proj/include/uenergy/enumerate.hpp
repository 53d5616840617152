#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "uenergy/energy.hpp"
#include "uenergy/graph.hpp"
#include "uenergy/tree_code.hpp"

namespace uenergy {

// Canonical form of a connected unicyclic graph: the rooted tree hanging from
// each cycle vertex (rooted at that vertex, single vertex if bare), read
// around the cycle and normalized to the lexicographically least rotation or
// reflection.
struct UnicyclicCode {
  int cycle_length = 0;
  std::vector<LevelSequence> necklace;

  int order() const;
  // e.g. "4|1|1|1|12" for P_5^4: cycle length, then one level-sequence key per cycle vertex
  std::string to_string() const;

  friend auto operator<=>(const UnicyclicCode&, const UnicyclicCode&) = default;
  friend bool operator==(const UnicyclicCode&, const UnicyclicCode&) = default;
};

// Dihedral normalization of a necklace of rooted trees.
std::vector<LevelSequence> normalize_necklace(std::vector<LevelSequence> necklace);

// Code of an arbitrary connected unicyclic graph; domain_error otherwise.
UnicyclicCode unicyclic_code(const Graph& g);

// Graph for a code: cycle vertices 0..l-1 in necklace order, then the
// non-root vertices of each tree in preorder, tree by tree.
Graph realize(const UnicyclicCode& code);

// Visits every connected unicyclic graph on n vertices exactly once up to
// isomorphism, in increasing code order. invalid_order for n < 3.
void for_each_unicyclic(int n, const std::function<void(const UnicyclicCode&, const Graph&)>& visit);
std::vector<std::pair<UnicyclicCode, Graph>> unicyclic_graphs(int n);
std::int64_t count_unicyclic(int n);

// Shortest selector for the graph: "C:n", "L:n:l", "CP:n:l:a0,..." or "g6:...".
std::string code_spec(const UnicyclicCode& code);

struct RankedGraph {
  UnicyclicCode code;
  Graph graph;
  EnergyValue energy;
  bool tied = false; // enclosure still overlaps a neighbour after refinement
};

struct SearchReport {
  int n = 0;
  std::int64_t graphs = 0;
  std::vector<RankedGraph> ranking; // top-k by energy, descending
  bool ties = false;
};

inline constexpr double tie_refine_tol = 1e-12;

// Exhaustive maximal-energy search over unicyclic graphs of order n. Energies
// come from exact root isolation; overlapping neighbours in the top k (and
// the first entry below it) are recomputed to radius 1e-12, and whatever
// still overlaps is flagged as a tie and ordered by code. jobs <= 0 uses the
// hardware concurrency. The report does not depend on jobs.
SearchReport max_energy_search(int n, int top_k = 5, double tol = default_energy_tol, int jobs = 1);

} // namespace uenergy

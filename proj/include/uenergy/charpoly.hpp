#pragma once

#include <map>
#include <string>
#include <vector>

#include "uenergy/graph.hpp"
#include "uenergy/polynomial.hpp"

namespace uenergy {

// Characteristic polynomial det(xI - A(G)) with memoized tree pieces.
//
// Trees are reduced with the pendant-edge rule phi(T) = x phi(T - v) - phi(T - u - v),
// where v is a leaf and u its neighbour; every intermediate tree is looked up
// by its free-tree code first. A connected unicyclic graph is reduced once
// along a cycle edge uv,
//
//   phi(G) = phi(G - uv) - phi(G - u - v) - 2 phi(G - C),
//
// after which every residual graph is a forest. Disconnected graphs multiply
// their component polynomials; anything with more cycles falls back to the
// exact reference algorithm.
//
// An engine owns its memo table and is not thread-safe; use one per thread.
class CharpolyEngine {
public:
  IntPolynomial operator()(const Graph& g);

  std::size_t memo_size() const noexcept { return tree_memo_.size(); }

private:
  IntPolynomial connected_polynomial(const Graph& g);
  IntPolynomial tree_polynomial(const Graph& tree);
  IntPolynomial unicyclic_polynomial(const Graph& g);

  std::map<std::string, IntPolynomial> tree_memo_;
};

IntPolynomial charpoly(const Graph& g);

// Berkowitz's division-free algorithm over the integers; independent of the
// recurrences above. Limited to n <= 64.
IntPolynomial charpoly_general_reference(const Graph& g);

inline constexpr int reference_max_order = 64;

// Number of k-edge matchings in a forest (domain_error otherwise).
BigInt matching_count(const Graph& forest, int k);

// b_{2k} = (-1)^k a_{2k}, where a_j is the coefficient of x^{n-j}. Throws
// domain_error unless the odd a_j vanish and every b_{2k} is nonnegative.
std::vector<BigInt> bipartite_coefficients(const IntPolynomial& phi);

} // namespace uenergy

#include "uenergy/charpoly.hpp"

#include "uenergy/errors.hpp"
#include "uenergy/tree_code.hpp"

namespace uenergy {

IntPolynomial CharpolyEngine::operator()(const Graph& g) {
  IntPolynomial result = IntPolynomial::constant(1);
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) {
      result *= IntPolynomial::x();
      continue;
    }
    result *= connected_polynomial(comp.size() == static_cast<std::size_t>(g.order()) ? g : g.induced(comp));
  }
  return result;
}

IntPolynomial CharpolyEngine::connected_polynomial(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  if (g.size() + 1 == n) return tree_polynomial(g);
  if (g.size() == n) return unicyclic_polynomial(g);
  return charpoly_general_reference(g);
}

IntPolynomial CharpolyEngine::tree_polynomial(const Graph& tree) {
  const int n = tree.order();
  if (n == 1) return IntPolynomial::x();
  if (n == 2) return IntPolynomial{-1, 0, 1};
  std::string key = level_sequence_key(free_tree_code(tree));
  if (auto it = tree_memo_.find(key); it != tree_memo_.end()) return it->second;

  int leaf = 0;
  while (tree.degree(leaf) != 1) ++leaf;
  const int u = tree.neighbors(leaf).front();
  const int only_leaf[] = {leaf};
  const int both[] = {leaf, u};
  IntPolynomial p = IntPolynomial::x() * tree_polynomial(tree.without_vertices(only_leaf));
  p -= (*this)(tree.without_vertices(both));
  tree_memo_.emplace(std::move(key), p);
  return p;
}

IntPolynomial CharpolyEngine::unicyclic_polynomial(const Graph& g) {
  const auto cycle = unique_cycle(g);
  if (!cycle) throw domain_error("expected a connected unicyclic graph");
  const int u = (*cycle)[0], v = (*cycle)[1];
  const int both[] = {u, v};
  IntPolynomial p = (*this)(g.without_edge(u, v));
  p -= (*this)(g.without_vertices(both));
  p -= BigInt(2) * (*this)(g.without_vertices(*cycle));
  return p;
}

IntPolynomial charpoly(const Graph& g) {
  CharpolyEngine engine;
  return engine(g);
}

IntPolynomial charpoly_general_reference(const Graph& g) {
  const int n = g.order();
  if (n > reference_max_order) throw unsupported_size("reference characteristic polynomial limited to n <= 64");
  if (n == 0) return IntPolynomial::constant(1);

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;

  // Berkowitz: p_r = T_r p_{r-1}, coefficients stored highest degree first
  std::vector<BigInt> p{1, -a[0][0]};
  for (int r = 1; r < n; ++r) {
    // column entries of the Toeplitz matrix: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<BigInt> col(r + 2);
    col[0] = 1;
    col[1] = -a[r][r];
    std::vector<BigInt> s(r);
    for (int i = 0; i < r; ++i) s[i] = a[i][r];
    for (int k = 2; k <= r + 1; ++k) {
      BigInt dot = 0;
      for (int i = 0; i < r; ++i) dot += a[r][i] * s[i];
      col[k] = -dot;
      std::vector<BigInt> next(r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (sgn(a[i][j]) != 0) next[i] += a[i][j] * s[j];
      s = std::move(next);
    }
    std::vector<BigInt> q(r + 2, 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  std::vector<BigInt> coeffs(p.rbegin(), p.rend());
  return IntPolynomial(std::move(coeffs));
}

namespace {

using Series = std::vector<BigInt>; // generating function in the matching size

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series series_add(Series a, const Series& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// (free, matched): matchings of the subtree with the root left unmatched / matched
std::pair<Series, Series> matchings_below(const Graph& f, int v, int parent) {
  Series free_root{1};
  std::vector<std::pair<Series, Series>> kids;
  for (int w : f.neighbors(v))
    if (w != parent) kids.push_back(matchings_below(f, w, v));
  std::vector<Series> total;
  for (const auto& [c0, c1] : kids) total.push_back(series_add(c0, c1));
  for (const auto& t : total) free_root = series_mul(free_root, t);
  Series matched{0};
  for (std::size_t i = 0; i < kids.size(); ++i) {
    Series term{0, 1}; // the edge v-w
    term = series_mul(term, kids[i].first);
    for (std::size_t j = 0; j < kids.size(); ++j)
      if (j != i) term = series_mul(term, total[j]);
    matched = series_add(matched, term);
  }
  return {free_root, matched};
}

} // namespace

BigInt matching_count(const Graph& forest, int k) {
  if (!forest.is_forest()) throw domain_error("matching_count expects a forest");
  if (k < 0) throw domain_error("matching size must be nonnegative");
  Series all{1};
  for (const auto& comp : forest.components()) {
    auto [c0, c1] = matchings_below(forest, comp.front(), -1);
    all = series_mul(all, series_add(c0, c1));
  }
  return k < static_cast<int>(all.size()) ? all[k] : BigInt(0);
}

std::vector<BigInt> bipartite_coefficients(const IntPolynomial& phi) {
  const int n = phi.degree();
  std::vector<BigInt> b;
  for (int j = 0; j <= n; ++j) {
    const BigInt a = phi.coeff(n - j);
    if (j % 2 == 1) {
      if (sgn(a) != 0) throw domain_error("odd-index coefficient a_" + std::to_string(j) + " is nonzero");
      continue;
    }
    BigInt bj = (j / 2) % 2 == 0 ? a : BigInt(-a);
    if (sgn(bj) < 0) throw domain_error("b_" + std::to_string(j) + " is negative");
    b.push_back(bj);
  }
  return b;
}

} // namespace uenergy

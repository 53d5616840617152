#include "uenergy/graph.hpp"

#include <algorithm>
#include <numeric>

#include "uenergy/errors.hpp"

namespace uenergy {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw invalid_order("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw invalid_parameters("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw invalid_parameters("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw invalid_parameters("duplicate edge");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_forest() const {
  return edges_.size() + components().size() == static_cast<std::size_t>(n_);
}

Graph Graph::without_edge(int u, int v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& f : edges_)
    if (f != e) kept.push_back(f);
  if (kept.size() == edges_.size()) throw invalid_parameters("edge not present");
  return Graph(n_, kept);
}

Graph Graph::without_vertices(std::span<const int> removed) const {
  std::vector<char> gone(n_, 0);
  for (int v : removed) gone.at(v) = 1;
  std::vector<int> kept;
  for (int v = 0; v < n_; ++v)
    if (!gone[v]) kept.push_back(v);
  return induced(kept);
}

Graph Graph::induced(std::span<const int> kept) const {
  std::vector<int> label(n_, -1);
  int next = 0;
  for (int v : kept) label.at(v) = next++;
  std::vector<Edge> sub;
  for (auto [u, v] : edges_)
    if (label[u] >= 0 && label[v] >= 0) sub.emplace_back(label[u], label[v]);
  return Graph(next, sub);
}

Graph make_cycle(int n) {
  if (n < 3) throw invalid_order("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph make_path(int n) {
  if (n < 1) throw invalid_order("path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph make_lollipop(int n, int l) {
  if (l < 3 || l > n)
    throw invalid_parameters("lollipop needs 3 <= l <= n, got n=" + std::to_string(n) + " l=" + std::to_string(l));
  std::vector<Edge> e;
  for (int i = 0; i < l; ++i) e.emplace_back(i, (i + 1) % l);
  int prev = 0;
  for (int v = l; v < n; ++v) {
    e.emplace_back(prev, v);
    prev = v;
  }
  return Graph(n, e);
}

Graph make_cycle_with_pendants(int n, int l, std::span<const int> attachment) {
  if (l < 3 || l > n) throw invalid_parameters("cycle with pendants needs 3 <= l <= n");
  if (static_cast<int>(attachment.size()) != l)
    throw invalid_parameters("attachment must list one count per cycle vertex");
  if (std::any_of(attachment.begin(), attachment.end(), [](int a) { return a < 0; }))
    throw invalid_parameters("negative pendant count");
  const int total = std::accumulate(attachment.begin(), attachment.end(), 0);
  if (total != n - l)
    throw invalid_parameters("pendant counts sum to " + std::to_string(total) + ", expected " +
                             std::to_string(n - l));
  std::vector<Edge> e;
  for (int i = 0; i < l; ++i) e.emplace_back(i, (i + 1) % l);
  int next = l;
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < attachment[i]; ++k) e.emplace_back(i, next++);
  return Graph(n, e);
}

std::optional<std::vector<int>> unique_cycle(const Graph& g) {
  if (!g.is_unicyclic()) return std::nullopt;
  const int n = g.order();
  // peel leaves; what survives is the cycle
  std::vector<int> deg = g.degrees();
  std::vector<char> removed(n, 0);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    int v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (int w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }
  int start = 0;
  while (removed[start]) ++start;
  std::vector<int> cycle{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur)) // ascending, so the first hit is the smaller
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    if (next == start || next < 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(cycle.size()) > n) break;
  }
  return cycle;
}

namespace {
constexpr int g6_bias = 63;
}

std::string format_graph6(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order) throw unsupported_size("graph6 output limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + g6_bias));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + g6_bias));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + g6_bias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  const int head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw parse_error("graph6 orders above 62 are not supported", 0);
  if (head < g6_bias || head > 126) throw parse_error("invalid graph6 order byte", 0);
  const int n = head - g6_bias;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes)
    throw parse_error("graph6 length mismatch: expected " + std::to_string(1 + nbytes) + " bytes, got " +
                          std::to_string(text.size()),
                      std::min(text.size(), 1 + nbytes));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const int c = static_cast<unsigned char>(text[1 + k]);
    if (c < g6_bias || c > 126) throw parse_error("invalid graph6 data byte", 1 + k);
    const int value = c - g6_bias;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= nbits) {
        if (set) throw parse_error("nonzero graph6 padding bits", 1 + k);
        continue;
      }
      if (!set) continue;
      // column-major upper triangle: bit index -> (i, j) with i < j
      std::size_t j = 1, start = 0;
      while (start + j <= bit) {
        start += j;
        ++j;
      }
      edges.emplace_back(static_cast<int>(bit - start), static_cast<int>(j));
    }
  }
  return Graph(n, edges);
}

} // namespace uenergy

#include "uenergy/tree_code.hpp"

#include <algorithm>
#include <functional>

#include "uenergy/errors.hpp"

namespace uenergy {

namespace {

LevelSequence rooted_code(const Graph& tree, int v, int parent, int depth) {
  std::vector<LevelSequence> children;
  for (int w : tree.neighbors(v))
    if (w != parent) children.push_back(rooted_code(tree, w, v, depth + 1));
  std::sort(children.begin(), children.end(), std::greater<>());
  LevelSequence out{depth};
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

} // namespace

LevelSequence canonical_level_sequence(const Graph& tree, int root) { return rooted_code(tree, root, -1, 1); }

LevelSequence free_tree_code(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return {};
  if (!tree.connected() || !tree.is_forest()) throw domain_error("free_tree_code expects a tree");
  // strip leaves layer by layer; the last one or two vertices are the centres
  std::vector<int> deg = tree.degrees();
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : tree.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  LevelSequence best;
  for (int c : layer) best = std::max(best, canonical_level_sequence(tree, c));
  return best;
}

std::string level_sequence_key(const LevelSequence& seq) {
  static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(seq.size());
  for (int d : seq) {
    if (d < 0 || d >= 36) throw unsupported_size("level too deep for key encoding");
    out.push_back(digits[d]);
  }
  return out;
}

std::vector<LevelSequence> rooted_trees(int k) {
  if (k < 1) throw invalid_order("rooted trees need k >= 1");
  std::vector<LevelSequence> out;
  LevelSequence L(k);
  for (int i = 0; i < k; ++i) L[i] = i + 1;
  while (true) {
    out.push_back(L);
    int p = k - 1;
    while (p >= 0 && L[p] <= 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (L[q] != L[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < k; ++i) L[i] = L[i - shift];
  }
  return out;
}

std::vector<int> level_sequence_parents(const LevelSequence& seq) {
  std::vector<int> parent(seq.size(), -1);
  std::vector<int> last_at_level(seq.size() + 2, -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int lv = seq[i];
    if (i > 0) parent[i] = last_at_level.at(lv - 1);
    last_at_level.at(lv) = static_cast<int>(i);
  }
  return parent;
}

} // namespace uenergy

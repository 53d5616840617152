#include "uenergy/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "uenergy/charpoly.hpp"
#include "uenergy/errors.hpp"

namespace uenergy {

int UnicyclicCode::order() const {
  int n = 0;
  for (const auto& t : necklace) n += static_cast<int>(t.size());
  return n;
}

std::string UnicyclicCode::to_string() const {
  std::string s = std::to_string(cycle_length);
  for (const auto& t : necklace) s += "|" + level_sequence_key(t);
  return s;
}

namespace {

// true if some rotation or reflection of v is lexicographically smaller
bool has_smaller_image(const std::vector<LevelSequence>& v) {
  const int l = static_cast<int>(v.size());
  for (int dir = 0; dir < 2; ++dir)
    for (int start = 0; start < l; ++start) {
      if (dir == 0 && start == 0) continue;
      for (int k = 0; k < l; ++k) {
        const int idx = dir == 0 ? (start + k) % l : ((start - k) % l + l) % l;
        const auto c = v[idx] <=> v[k];
        if (c < 0) return true;
        if (c > 0) break;
      }
    }
  return false;
}

// all compositions of total into parts positive parts
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (parts == 0) {
    if (total == 0) f(cur);
    return;
  }
  for (int s = 1; s <= total - (parts - 1); ++s) {
    cur.push_back(s);
    compositions(total - s, parts - 1, cur, f);
    cur.pop_back();
  }
}

std::vector<UnicyclicCode> generate_codes(int n) {
  if (n < 3) throw invalid_order("unicyclic graphs need n >= 3");
  std::vector<std::vector<LevelSequence>> trees(n + 1);
  for (int k = 1; k <= n - 2; ++k) trees[k] = rooted_trees(k);

  std::vector<UnicyclicCode> out;
  for (int l = 3; l <= n; ++l) {
    std::vector<int> cur;
    compositions(n, l, cur, [&](const std::vector<int>& sizes) {
      std::vector<LevelSequence> neck(l);
      std::vector<std::size_t> pick(l, 0);
      // odometer over the tree choices at each position
      while (true) {
        for (int i = 0; i < l; ++i) neck[i] = trees[sizes[i]][pick[i]];
        if (!has_smaller_image(neck)) out.push_back({l, neck});
        int i = l - 1;
        while (i >= 0 && ++pick[i] == trees[sizes[i]].size()) pick[i--] = 0;
        if (i < 0) break;
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<LevelSequence> normalize_necklace(std::vector<LevelSequence> v) {
  const int l = static_cast<int>(v.size());
  std::vector<LevelSequence> best = v, cand(l);
  for (int dir = 0; dir < 2; ++dir)
    for (int start = 0; start < l; ++start) {
      for (int k = 0; k < l; ++k) cand[k] = v[dir == 0 ? (start + k) % l : ((start - k) % l + l) % l];
      if (cand < best) best = cand;
    }
  return best;
}

UnicyclicCode unicyclic_code(const Graph& g) {
  const auto cycle = unique_cycle(g);
  if (!cycle) throw domain_error("graph is not connected unicyclic");
  const int l = static_cast<int>(cycle->size());
  Graph forest = g;
  for (int i = 0; i < l; ++i) forest = forest.without_edge((*cycle)[i], (*cycle)[(i + 1) % l]);
  std::vector<LevelSequence> neck;
  for (int v : *cycle) neck.push_back(canonical_level_sequence(forest, v));
  return {l, normalize_necklace(std::move(neck))};
}

Graph realize(const UnicyclicCode& code) {
  const int l = code.cycle_length;
  if (l < 3 || static_cast<int>(code.necklace.size()) != l) throw invalid_parameters("malformed unicyclic code");
  std::vector<Edge> e;
  for (int i = 0; i < l; ++i) e.emplace_back(i, (i + 1) % l);
  int next = l;
  for (int i = 0; i < l; ++i) {
    const auto& seq = code.necklace[i];
    const auto parent = level_sequence_parents(seq);
    std::vector<int> id(seq.size());
    id[0] = i;
    for (std::size_t p = 1; p < seq.size(); ++p) {
      id[p] = next++;
      e.emplace_back(id[parent[p]], id[p]);
    }
  }
  return Graph(next, e);
}

void for_each_unicyclic(int n, const std::function<void(const UnicyclicCode&, const Graph&)>& visit) {
  for (const auto& c : generate_codes(n)) visit(c, realize(c));
}

std::vector<std::pair<UnicyclicCode, Graph>> unicyclic_graphs(int n) {
  std::vector<std::pair<UnicyclicCode, Graph>> out;
  for (auto& c : generate_codes(n)) {
    Graph g = realize(c);
    out.emplace_back(std::move(c), std::move(g));
  }
  return out;
}

std::int64_t count_unicyclic(int n) { return static_cast<std::int64_t>(generate_codes(n).size()); }

std::string code_spec(const UnicyclicCode& code) {
  const int n = code.order(), l = code.cycle_length;
  auto is_path = [](const LevelSequence& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
  };
  auto is_star = [](const LevelSequence& s) {
    return std::all_of(s.begin() + 1, s.end(), [](int d) { return d == 2; });
  };
  if (n == l) return "C:" + std::to_string(n);
  const auto nontrivial = std::count_if(code.necklace.begin(), code.necklace.end(),
                                        [](const LevelSequence& s) { return s.size() > 1; });
  if (nontrivial == 1) {
    const auto& t = *std::find_if(code.necklace.begin(), code.necklace.end(),
                                  [](const LevelSequence& s) { return s.size() > 1; });
    if (is_path(t)) return "L:" + std::to_string(n) + ":" + std::to_string(l);
  }
  if (std::all_of(code.necklace.begin(), code.necklace.end(), is_star)) {
    std::string s = "CP:" + std::to_string(n) + ":" + std::to_string(l) + ":";
    for (int i = 0; i < l; ++i) s += (i ? "," : "") + std::to_string(code.necklace[i].size() - 1);
    return s;
  }
  return "g6:" + format_graph6(realize(code));
}

SearchReport max_energy_search(int n, int top_k, double tol, int jobs) {
  if (top_k < 1) throw invalid_parameters("top-k must be at least 1");
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto graphs = unicyclic_graphs(n);
  const std::size_t total = graphs.size();
  std::vector<RankedGraph> all(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    CharpolyEngine engine;
    for (std::size_t i = next++; i < total; i = next++) {
      all[i].code = graphs[i].first;
      all[i].graph = graphs[i].second;
      all[i].energy = energy_of_poly(engine(all[i].graph), tol);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  auto by_energy = [](const RankedGraph& a, const RankedGraph& b) {
    if (a.energy.value != b.energy.value) return a.energy.value > b.energy.value;
    return a.code < b.code;
  };
  std::sort(all.begin(), all.end(), by_energy);

  // refine overlapping neighbours around the cut until nothing changes
  const std::size_t window = std::min<std::size_t>(top_k + 1, total);
  CharpolyEngine engine;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < window; ++i) {
      auto& a = all[i];
      auto& b = all[i + 1];
      if (!a.energy.overlaps(b.energy)) continue;
      for (RankedGraph* r : {&a, &b})
        if (r->energy.radius > tie_refine_tol) {
          r->energy = energy_of_poly(engine(r->graph), tie_refine_tol);
          changed = true;
        }
    }
    if (changed) std::sort(all.begin(), all.end(), by_energy);
  }

  SearchReport report;
  report.n = n;
  report.graphs = static_cast<std::int64_t>(total);
  // runs of mutually overlapping entries are ties, ordered by code
  for (std::size_t i = 0; i + 1 < window;) {
    std::size_t j = i;
    while (j + 1 < window && all[j].energy.overlaps(all[j + 1].energy)) ++j;
    if (j > i) {
      for (std::size_t k = i; k <= j; ++k) all[k].tied = true;
      std::sort(all.begin() + i, all.begin() + j + 1,
                [](const RankedGraph& a, const RankedGraph& b) { return a.code < b.code; });
      report.ties = true;
    }
    i = j + 1;
  }
  all.resize(std::min<std::size_t>(top_k, total));
  report.ranking = std::move(all);
  return report;
}

} // namespace uenergy

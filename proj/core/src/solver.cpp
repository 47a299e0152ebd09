#include "gturan/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <set>
#include <thread>

#include "gturan/canonical.hpp"
#include "gturan/covering.hpp"
#include "gturan/invariants.hpp"

namespace gturan {

namespace {

struct Node {
  Graph graph;
  Graph canon;
};

// Degree pair of an edge; the canonical deletion edge is always drawn from
// the edges with the largest key, so most children are rejected before any
// canonical labelling is computed.
std::pair<int, int> edge_key(const Graph& h, int u, int v) {
  const int du = h.degree(u);
  const int dv = h.degree(v);
  return {std::max(du, dv), std::min(du, dv)};
}

class Augmenter {
 public:
  Augmenter(int n, const GraphFamily& fam) : n_(n), fam_(fam) {}

  Node root() const {
    Graph g(n_);
    return {g, canonical_graph(g)};
  }

  bool admissible(const Graph& g) const { return is_family_free(g, fam_); }

  /// Children G + e of `parent` whose canonical parent is isomorphic to
  /// `parent`, one per isomorphism class.
  std::vector<Node> children(const Node& parent) const {
    std::vector<Node> out;
    const Graph& g = parent.graph;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (g.has_edge(u, v)) continue;
        Graph h = add_edge(g, u, v);
        const auto key = edge_key(h, u, v);
        bool dominated = false;
        auto top = key;
        for (auto [a, b] : h.edges()) {
          const auto k = edge_key(h, a, b);
          if (k > key) {
            dominated = true;
            break;
          }
          top = std::max(top, k);
        }
        if (dominated) continue;
        if (!admissible(h)) continue;

        CanonicalForm cf = canonical_form(h);
        const auto& lab = cf.labeling;
        std::pair<int, int> deletion{-1, -1};
        std::pair<int, int> deletion_pos{-1, -1};
        for (auto [a, b] : h.edges()) {
          if (edge_key(h, a, b) != top) continue;
          const int la = lab[static_cast<std::size_t>(a)];
          const int lb = lab[static_cast<std::size_t>(b)];
          const std::pair<int, int> pos{std::max(la, lb), std::min(la, lb)};
          if (pos > deletion_pos) {
            deletion_pos = pos;
            deletion = {a, b};
          }
        }
        bool accept = deletion == std::pair<int, int>{u, v};
        if (!accept) accept = canonical_graph(remove_edge(h, deletion.first, deletion.second)) == parent.canon;
        if (!accept) continue;
        assert(admissible(remove_edge(h, deletion.first, deletion.second)));
        if (std::any_of(out.begin(), out.end(), [&](const Node& sib) { return sib.canon == cf.graph; })) continue;
        out.push_back({std::move(h), std::move(cf.graph)});
      }
    }
    return out;
  }

 private:
  int n_;
  const GraphFamily& fam_;
};

template <class Visit>
void walk(const Augmenter& aug, const Node& node, Visit& visit) {
  visit(node.graph);
  for (const Node& child : aug.children(node)) walk(aug, child, visit);
}

// Visits every node above the split depth and collects the subtree roots at it.
template <class Visit>
void walk_prefix(const Augmenter& aug, const Node& node, int split_depth, Visit& visit, std::vector<Node>& frontier) {
  if (node.graph.size() >= split_depth) {
    frontier.push_back(node);
    return;
  }
  visit(node.graph);
  for (const Node& child : aug.children(node)) walk_prefix(aug, child, split_depth, visit, frontier);
}

template <class Result, class Job>
std::vector<Result> run_jobs(std::size_t count, int workers, Job job) {
  std::vector<Result> results(count);
  if (workers <= 0) workers = std::max(1U, std::thread::hardware_concurrency());
  const auto threads = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = job(i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

struct Prepared {
  GraphFamily family;
  int ceiling;
};

Prepared prepare(int n, const GraphFamily& fam, const SolverOptions& options) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (options.ceiling > kHardCeiling) {
    throw CeilingError("ceiling " + std::to_string(options.ceiling) + " above the hard limit " +
                       std::to_string(kHardCeiling));
  }
  Prepared p{options.minimalize_family ? minimalize(fam) : fam, options.ceiling};
  if (p.ceiling <= 0) p.ceiling = default_ceiling(fam);
  if (n > p.ceiling) {
    throw CeilingError("enumeration ceiling exceeded: n = " + std::to_string(n) + " > " + std::to_string(p.ceiling));
  }
  return p;
}

}  // namespace

int default_ceiling(const GraphFamily& fam) {
  const Graph triangle = complete(3);
  const Graph two_edges = matching(2);
  for (const auto& m : fam.members())
    if (contains_subgraph(triangle, m) || contains_subgraph(two_edges, m)) return kHardCeiling;
  return kHardCeiling - 1;
}

void for_each_free(int n, const GraphFamily& fam, const std::function<void(const Graph&)>& visit,
                   const SolverOptions& options) {
  const Prepared prep = prepare(n, fam, options);
  const Augmenter aug(n, prep.family);
  const Node root = aug.root();
  if (!aug.admissible(root.graph)) return;
  auto fn = [&](const Graph& g) { visit(g); };
  walk(aug, root, fn);
}

std::vector<Graph> enumerate_free(int n, const GraphFamily& fam, const SolverOptions& options) {
  const Prepared prep = prepare(n, fam, options);
  const Augmenter aug(n, prep.family);
  const Node root = aug.root();
  std::vector<Graph> out;
  if (!aug.admissible(root.graph)) return out;

  std::vector<Node> frontier;
  auto collect = [&](const Graph& g) { out.push_back(g); };
  walk_prefix(aug, root, options.split_depth, collect, frontier);
  auto parts = run_jobs<std::vector<Graph>>(frontier.size(), options.workers, [&](std::size_t i) {
    std::vector<Graph> local;
    auto push = [&](const Graph& g) { local.push_back(g); };
    walk(aug, frontier[i], push);
    return local;
  });
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

struct Accumulator {
  std::int64_t value = -1;
  std::set<Graph> witnesses;  // canonical
  std::int64_t count = 0;

  void offer(const Graph& g, int r) {
    ++count;
    const std::int64_t v = count_cliques(g, r);
    if (v < value) return;
    if (v > value) {
      value = v;
      witnesses.clear();
    }
    witnesses.insert(canonical_graph(g));
  }

  void absorb(Accumulator&& other) {
    count += other.count;
    if (other.value < value) return;
    if (other.value > value) {
      value = other.value;
      witnesses.clear();
    }
    witnesses.merge(other.witnesses);
  }
};

}  // namespace

ExResult ex_general(int n, int r, const GraphFamily& fam, const SolverOptions& options) {
  if (r < 1) throw std::invalid_argument("ex_general: clique order must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const Prepared prep = prepare(n, fam, options);
  const Augmenter aug(n, prep.family);
  const Node root = aug.root();
  if (!aug.admissible(root.graph)) {
    throw NoAdmissibleGraph("no " + std::to_string(n) + "-vertex graph avoids " + fam.label());
  }

  Accumulator total;
  std::vector<Node> frontier;
  auto offer = [&](const Graph& g) { total.offer(g, r); };
  walk_prefix(aug, root, options.split_depth, offer, frontier);
  auto parts = run_jobs<Accumulator>(frontier.size(), options.workers, [&](std::size_t i) {
    Accumulator local;
    auto visit = [&](const Graph& g) { local.offer(g, r); };
    walk(aug, frontier[i], visit);
    return local;
  });
  for (auto& part : parts) total.absorb(std::move(part));

  ExResult res;
  res.n = n;
  res.r = r;
  res.family_label = fam.label();
  res.family = fam.canonical_members();
  res.value = total.value;
  res.witnesses.assign(total.witnesses.begin(), total.witnesses.end());
  res.enumerated_count = total.count;
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

ExProfile ex_profile(const Graph& f, int r, int s, const SolverOptions& options) {
  if (r < 2) throw std::invalid_argument("ex_profile: r must be at least 2");
  const CountOrInfinity pf = p_of_f(f);
  int top = s;
  if (!pf.is_infinite()) top = std::min(top, pf.value() - 1);
  ExProfile profile;
  for (int p = 1; p <= top; ++p) {
    const std::int64_t value = ex_general(p, r - 1, family_fp(f, p), options).value;
    profile.values.emplace_back(p, value);
    if (!profile.argmax || value > profile.values[static_cast<std::size_t>(*profile.argmax - 1)].second) {
      profile.argmax = p;
    }
  }
  return profile;
}

}  // namespace gturan

#include "acedag/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "acedag/dependency.hpp"
#include "acedag/indexsets.hpp"

namespace acedag {

std::string_view algorithm_name(Algorithm a) { return a == Algorithm::original ? "orig" : "gen"; }

Algorithm parse_algorithm(std::string_view name) {
  if (name == "orig") return Algorithm::original;
  if (name == "gen") return Algorithm::generalized;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected orig or gen)");
}

std::optional<NodeId> EvalGraph::find(const BasisTuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool EvalGraph::is_target(const BasisTuple& t) const {
  return !t.empty() && static_cast<long>(t.order()) <= meta_.nu_max && satisfies_constraints(t, meta_.group) &&
         within_degree(t, meta_.group, meta_.spec);
}

NodeId EvalGraph::add_node(BasisTuple t, std::optional<std::pair<NodeId, NodeId>> parents) {
  if (t.empty()) throw std::logic_error("cannot add the empty tuple to a graph");
  if (contains(t)) throw std::logic_error("tuple [" + format_tuple(t, meta_.group) + "] already in graph");
  const auto id = static_cast<NodeId>(nodes_.size());
  if (t.order() == 1) {
    if (parents) throw std::logic_error("order-1 node must not have parents");
  } else {
    if (!parents) throw std::logic_error("node of order >= 2 needs two parents");
    const auto [a, b] = *parents;
    if (a < 0 || b < 0 || a >= id || b >= id) throw std::logic_error("parent id out of range");
    if (nodes_[a].tuple.merged(nodes_[b].tuple) != t) {
      throw std::logic_error("parents of [" + format_tuple(t, meta_.group) + "] do not union to it");
    }
  }
  const bool aux = t.order() >= 2 && !is_target(t);
  index_.emplace(t, id);
  nodes_.push_back(GraphNode{std::move(t), parents, aux});
  return id;
}

EvalGraph seed_graph(Group g, const DegreeSpec& spec, int nu_max) {
  GraphMeta meta;
  meta.group = g;
  meta.spec = spec;
  meta.nu_max = nu_max;
  EvalGraph graph(meta);
  for (const auto& k : one_particle_indices(g, spec.D)) graph.add_node(BasisTuple::from_sorted({k}), std::nullopt);
  return graph;
}

namespace {

std::optional<NodeId> insert_from_existing_split(EvalGraph& graph, const BasisTuple& t) {
  for (const auto& split : all_splits(t)) {
    auto a = graph.find(split.left);
    if (!a) continue;
    auto b = graph.find(split.right);
    if (!b) continue;
    return graph.add_node(t, std::make_pair(*a, *b));
  }
  return std::nullopt;
}

void require_seed(const EvalGraph& graph, const BasisTuple& t) {
  if (!graph.contains(t)) {
    throw std::invalid_argument("one-particle index [" + format_tuple(t, graph.meta().group) +
                                "] is not a seed of the graph (element degree exceeds D)");
  }
}

// Removes the elements of `part` (a sub-multiset) from `whole`.
BasisTuple remainder(const BasisTuple& whole, const BasisTuple& part) {
  std::vector<OneParticleIndex> rest;
  rest.reserve(whole.order() - part.order());
  std::set_difference(whole.begin(), whole.end(), part.begin(), part.end(), std::back_inserter(rest));
  return BasisTuple::from_sorted(std::move(rest));
}

// Sub-multiset of size s with maximal p-degree; ties go to the largest tuple
// in canonical order.
BasisTuple max_degree_submultiset(const BasisTuple& t, std::size_t s, Group g, Norm p) {
  struct Run {
    OneParticleIndex index;
    int count;
  };
  std::vector<Run> runs;
  for (const auto& k : t) {
    if (!runs.empty() && runs.back().index == k) {
      ++runs.back().count;
    } else {
      runs.push_back({k, 1});
    }
  }
  std::optional<BasisTuple> best;
  std::int64_t best_key = -1;
  std::vector<OneParticleIndex> current;
  auto visit = [&](auto&& self, std::size_t run) -> void {
    if (current.size() == s) {
      auto cand = BasisTuple::from_sorted(current);
      const auto key = degree_key(cand, g, p);
      if (!best || key > best_key || (key == best_key && *best < cand)) {
        best = std::move(cand);
        best_key = key;
      }
      return;
    }
    if (run == runs.size()) return;
    const auto need = s - current.size();
    const auto take_max = std::min<std::size_t>(need, static_cast<std::size_t>(runs[run].count));
    for (std::size_t take = 0; take <= take_max; ++take) {
      current.insert(current.end(), take, runs[run].index);
      self(self, run + 1);
      current.resize(current.size() - take);
    }
  };
  visit(visit, 0);
  return *best;
}

}  // namespace

NodeId insert_original(EvalGraph& graph, const BasisTuple& t) {
  if (auto id = graph.find(t)) return *id;
  if (t.order() < 2) {
    require_seed(graph, t);
  }
  if (auto id = insert_from_existing_split(graph, t)) return *id;

  const auto g = graph.meta().group;
  std::size_t peel = 0;
  int best = -1;
  for (std::size_t i = 0; i < t.order(); ++i) {
    const int d = element_degree(g, t[i]);
    if (d >= best) {
      best = d;
      peel = i;
    }
  }
  const auto single = BasisTuple::from_sorted({t[peel]});
  require_seed(graph, single);
  insert_original(graph, remainder(t, single));
  return insert_original(graph, t);
}

NodeId insert_generalized(EvalGraph& graph, const BasisTuple& t, int n) {
  if (n < 1) throw std::invalid_argument("insert_generalized: n must be >= 1");
  if (auto id = graph.find(t)) return *id;
  if (t.order() < 2) {
    require_seed(graph, t);
  }
  if (auto id = insert_from_existing_split(graph, t)) return *id;

  const auto s = std::min<std::size_t>(static_cast<std::size_t>(n), t.order() - 1);
  const auto head = max_degree_submultiset(t, s, graph.meta().group, graph.meta().spec.p);
  insert_original(graph, head);
  insert_generalized(graph, remainder(t, head), n);
  return insert_generalized(graph, t, n);
}

EvalGraph build(Group g, const DegreeSpec& spec, int nu_max, Algorithm alg, int n) {
  if (nu_max < 1) throw std::invalid_argument("build: nu_max must be >= 1");
  if (alg == Algorithm::generalized && n < 1) throw std::invalid_argument("build: n must be >= 1");
  auto graph = seed_graph(g, spec, nu_max);
  graph.meta().algorithm = alg;
  graph.meta().n = alg == Algorithm::original ? 1 : n;
  for (int nu = 2; nu <= nu_max; ++nu) {
    auto targets = enumerate_K(g, nu, spec);
    std::vector<std::int64_t> keys;
    keys.reserve(targets.size());
    std::vector<std::size_t> order(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
      keys.push_back(degree_key(targets[i], g, spec.p));
      order[i] = i;
    }
    // targets are already canonical, so a stable sort by degree suffices
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (auto i : order) {
      if (alg == Algorithm::original) {
        insert_original(graph, targets[i]);
      } else {
        insert_generalized(graph, targets[i], n);
      }
    }
  }
  return graph;
}

GraphStats stats(const EvalGraph& graph) {
  GraphStats s;
  const auto g = graph.meta().group;
  for (const auto& node : graph.nodes()) {
    const auto order = static_cast<int>(node.tuple.order());
    if (static_cast<int>(s.per_order.size()) < order) {
      for (int o = static_cast<int>(s.per_order.size()) + 1; o <= order; ++o) s.per_order.push_back({o, 0, 0, 0, 0});
    }
    auto& row = s.per_order[order - 1];
    if (order == 1) ++s.num_seeds;
    if (node.parents) ++s.graph_products;
    if (node.auxiliary) {
      ++row.auxiliary;
      continue;
    }
    if (!graph.is_target(node.tuple)) continue;  // non-invariant seed
    ++row.targets;
    s.naive_products += node.tuple.order() - 1;
    if (classify(node.tuple, g) == Dependence::dependent) {
      ++row.dependent;
    } else {
      ++row.independent;
    }
  }
  for (const auto& row : s.per_order) {
    s.num_targets += row.targets;
    s.num_dependent += row.dependent;
    s.num_independent += row.independent;
    s.num_aux += row.auxiliary;
  }
  s.num_total = s.num_targets + s.num_aux;
  s.num_nodes = graph.size();
  s.ratio_dep = s.num_targets ? static_cast<double>(s.num_dependent) / static_cast<double>(s.num_targets) : 0.0;
  s.ratio_aux = s.num_total ? static_cast<double>(s.num_aux) / static_cast<double>(s.num_total) : 0.0;
  return s;
}

std::string validate(const EvalGraph& graph) {
  const auto g = graph.meta().group;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& node = graph.nodes()[i];
    const auto label = "node " + std::to_string(i) + " [" + format_tuple(node.tuple, g) + "]";
    if (graph.find(node.tuple) != static_cast<NodeId>(i)) return label + ": index does not map back to node";
    if (node.tuple.order() == 1) {
      if (node.parents) return label + ": seed has parents";
    } else {
      if (!node.parents) return label + ": missing parents";
      const auto [a, b] = *node.parents;
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= i || static_cast<std::size_t>(b) >= i) {
        return label + ": parent does not precede node";
      }
      if (graph.node(a).tuple.merged(graph.node(b).tuple) != node.tuple) return label + ": parents do not union";
    }
    const bool expect_aux = node.tuple.order() >= 2 && !graph.is_target(node.tuple);
    if (node.auxiliary != expect_aux) return label + ": auxiliary flag disagrees with target set";
  }
  return {};
}

}  // namespace acedag

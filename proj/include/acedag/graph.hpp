#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "acedag/core.hpp"

namespace acedag {

using NodeId = std::int32_t;

enum class Algorithm { original, generalized };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

/// One basis function of the evaluation DAG. Order-1 nodes are seeds and
/// have no parents; every other node is the product of exactly two earlier
/// nodes whose tuples union to this node's tuple.
struct GraphNode {
  BasisTuple tuple;
  std::optional<std::pair<NodeId, NodeId>> parents;
  bool auxiliary = false;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

struct GraphMeta {
  Group group = Group::T;
  DegreeSpec spec;
  int nu_max = kUnboundedOrder;
  Algorithm algorithm = Algorithm::original;
  int n = 1;

  friend bool operator==(const GraphMeta& a, const GraphMeta& b) {
    return a.group == b.group && a.spec.p == b.spec.p && a.spec.D == b.spec.D && a.nu_max == b.nu_max &&
           a.algorithm == b.algorithm && a.n == b.n;
  }
};

/// Recursive evaluation DAG. Node ids are dense and assigned in insertion
/// order, so parents always precede children.
class EvalGraph {
 public:
  explicit EvalGraph(GraphMeta meta) : meta_(meta) {}

  const GraphMeta& meta() const { return meta_; }
  GraphMeta& meta() { return meta_; }
  std::size_t size() const { return nodes_.size(); }
  const GraphNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<GraphNode>& nodes() const { return nodes_; }

  std::optional<NodeId> find(const BasisTuple& t) const;
  bool contains(const BasisTuple& t) const { return index_.count(t) != 0; }

  /// True if `t` belongs to the target basis: invariant, within the degree
  /// cap and of order <= nu_max.
  bool is_target(const BasisTuple& t) const;

  /// Appends a node. Parents must already exist and union to `t`. A node of
  /// order >= 2 is auxiliary iff it is not a target; seeds never are.
  NodeId add_node(BasisTuple t, std::optional<std::pair<NodeId, NodeId>> parents);

  friend bool operator==(const EvalGraph& a, const EvalGraph& b) {
    return a.meta_ == b.meta_ && a.nodes_ == b.nodes_;
  }

 private:
  GraphMeta meta_;
  std::vector<GraphNode> nodes_;
  std::unordered_map<BasisTuple, NodeId, BasisTupleHash> index_;
};

/// A graph holding one order-1 node per one-particle index of element degree
/// <= D, in canonical order.
EvalGraph seed_graph(Group g, const DegreeSpec& spec, int nu_max = kUnboundedOrder);

/// Original insertion heuristic: reuse any split whose parts are both in the
/// graph, otherwise peel off the highest-degree element (ties: the largest
/// index) and recurse on the remainder.
NodeId insert_original(EvalGraph& graph, const BasisTuple& t);

/// Generalized heuristic: as above, but when no split is available peel off
/// the maximal-degree sub-multiset of size min(n, order-1) (inserted with the
/// original heuristic) and recurse on the remainder with parameter n.
NodeId insert_generalized(EvalGraph& graph, const BasisTuple& t, int n);

/// Seeds the graph and inserts every target of order 2..nu_max in increasing
/// order, then increasing p-degree, then canonical order.
EvalGraph build(Group g, const DegreeSpec& spec, int nu_max, Algorithm alg, int n = 1);

struct OrderStats {
  int order = 0;
  std::size_t targets = 0;
  std::size_t dependent = 0;
  std::size_t independent = 0;
  std::size_t auxiliary = 0;
};

struct GraphStats {
  std::vector<OrderStats> per_order;  // index 0 holds order 1
  std::size_t num_targets = 0;
  std::size_t num_dependent = 0;
  std::size_t num_independent = 0;
  std::size_t num_aux = 0;
  /// #targets + #aux; seeds that are not targets are excluded.
  std::size_t num_total = 0;
  std::size_t num_nodes = 0;
  std::size_t num_seeds = 0;
  /// One product per node of order >= 2 versus sum over targets of (order-1).
  std::size_t graph_products = 0;
  std::size_t naive_products = 0;
  double ratio_dep = 0.0;
  double ratio_aux = 0.0;
};

GraphStats stats(const EvalGraph& graph);

/// Line-oriented text format:
///
///   ACEDAG v1 group=<T|SO2|O3|O3F> p=<1|2|inf> D=<int> numax=<int> alg=<orig|gen> n=<int>
///   <id> <aux:0|1> <tuple> <parent_id parent_id | ->
///
/// An unbounded nu_max is written as numax=-1.
std::string serialize(const EvalGraph& graph);

/// Throws FormatError (with byte offset) or UnsupportedVersionError.
EvalGraph deserialize(std::string_view text);

/// Structural checks: parents precede children and union to the child, seeds
/// have no parents, aux flags agree with `is_target`. Returns an empty string
/// when the graph is valid, otherwise a description of the first violation.
std::string validate(const EvalGraph& graph);

}  // namespace acedag

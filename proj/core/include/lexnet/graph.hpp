#ifndef LEXNET_GRAPH_HPP
#define LEXNET_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

// Simple unweighted graph with dense integer node ids and an optional word
// label per node. Holds either a directed or an undirected view; self-loops
// and duplicate links are rejected at insertion. Mutation is single-writer;
// a fully built graph is safe to read from many threads.

namespace lexnet {

using NodeId = std::uint32_t;

enum class Directedness { directed, undirected };

class LexNetwork {
 public:
  explicit LexNetwork(Directedness directedness)
      : directedness_(directedness) {}

  Directedness directedness() const { return directedness_; }
  bool is_directed() const { return directedness_ == Directedness::directed; }

  std::uint64_t node_count() const { return out_.size(); }  // N
  std::uint64_t link_count() const { return links_.size(); }  // K

  // Adds an unlabeled node.
  NodeId add_node();
  // Adds a labeled node; the label must not already be interned.
  NodeId add_node(std::string label);
  // Returns the node for a label, interning a new node on first sight.
  NodeId intern(std::string_view label);
  std::optional<NodeId> find_node(std::string_view label) const;

  // Inserts a link; returns true when newly added. Self-loop and duplicate
  // requests return false and leave the graph unchanged. In an undirected
  // graph (u,v) and (v,u) are the same link.
  bool add_link(NodeId u, NodeId v);
  bool has_link(NodeId u, NodeId v) const;

  // Out-neighbors for directed graphs; all neighbors for undirected ones.
  std::span<const NodeId> out_neighbors(NodeId u) const;
  // In-neighbors for directed graphs; all neighbors for undirected ones.
  std::span<const NodeId> in_neighbors(NodeId u) const;

  // Empty when the node is unlabeled.
  const std::string& label(NodeId u) const;
  // The label, or the decimal node id when unlabeled (used by exports).
  std::string display_label(NodeId u) const;

  // Collapses direction: {u,v} is linked iff u->v or v->u was. Node set and
  // labels are preserved, so K can only shrink or stay equal.
  LexNetwork to_undirected() const;

  // CSV edge list with header `source,target`; labels quoted.
  void write_edge_csv(std::ostream& out) const;
  static LexNetwork read_edge_csv(std::istream& in, Directedness directedness);

  // Every stored link once: (u,v) with u->v for directed graphs, u < v never
  // guaranteed but each undirected pair appears exactly once.
  std::vector<std::pair<NodeId, NodeId>> links() const;

 private:
  void check_node(NodeId u) const;
  static std::uint64_t pack(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  std::uint64_t link_key(NodeId u, NodeId v) const;

  Directedness directedness_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;  // used by directed graphs only
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> by_label_;
  std::unordered_set<std::uint64_t> links_;
};

}  // namespace lexnet

#endif  // LEXNET_GRAPH_HPP

#include "lexnet/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

#include "csv.hpp"
#include "lexnet/errors.hpp"

namespace lexnet {

void LexNetwork::check_node(NodeId u) const {
  if (u >= out_.size()) {
    throw NodeOutOfRange("node " + std::to_string(u) + " out of range (N=" +
                         std::to_string(out_.size()) + ")");
  }
}

std::uint64_t LexNetwork::link_key(NodeId u, NodeId v) const {
  if (directedness_ == Directedness::undirected && u > v) std::swap(u, v);
  return pack(u, v);
}

NodeId LexNetwork::add_node() {
  if (out_.size() >= std::numeric_limits<NodeId>::max()) {
    throw InvariantViolation("node id space exhausted");
  }
  out_.emplace_back();
  in_.emplace_back();
  labels_.emplace_back();
  return static_cast<NodeId>(out_.size() - 1);
}

NodeId LexNetwork::add_node(std::string label) {
  if (by_label_.contains(label)) {
    throw DuplicateLabel("label already interned: '" + label + "'");
  }
  NodeId id = add_node();
  labels_[id] = label;
  by_label_.emplace(std::move(label), id);
  return id;
}

NodeId LexNetwork::intern(std::string_view label) {
  auto it = by_label_.find(std::string(label));
  if (it != by_label_.end()) return it->second;
  return add_node(std::string(label));
}

std::optional<NodeId> LexNetwork::find_node(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

bool LexNetwork::add_link(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) return false;  // self-loops dropped by policy
  if (!links_.insert(link_key(u, v)).second) return false;
  if (directedness_ == Directedness::directed) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  } else {
    out_[u].push_back(v);
    out_[v].push_back(u);
  }
  return true;
}

bool LexNetwork::has_link(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  return links_.contains(link_key(u, v));
}

std::span<const NodeId> LexNetwork::out_neighbors(NodeId u) const {
  check_node(u);
  return out_[u];
}

std::span<const NodeId> LexNetwork::in_neighbors(NodeId u) const {
  check_node(u);
  return directedness_ == Directedness::directed ? std::span<const NodeId>(in_[u])
                                                 : std::span<const NodeId>(out_[u]);
}

const std::string& LexNetwork::label(NodeId u) const {
  check_node(u);
  return labels_[u];
}

std::string LexNetwork::display_label(NodeId u) const {
  check_node(u);
  return labels_[u].empty() ? std::to_string(u) : labels_[u];
}

LexNetwork LexNetwork::to_undirected() const {
  if (directedness_ != Directedness::directed) {
    throw InvalidInput("to_undirected requires a directed graph");
  }
  LexNetwork g(Directedness::undirected);
  g.out_.resize(out_.size());
  g.in_.resize(out_.size());
  g.labels_ = labels_;
  g.by_label_ = by_label_;
  for (std::uint64_t key : links_) {
    const NodeId u = static_cast<NodeId>(key >> 32);
    const NodeId v = static_cast<NodeId>(key & 0xFFFFFFFFu);
    g.add_link(u, v);
  }
  return g;
}

std::vector<std::pair<NodeId, NodeId>> LexNetwork::links() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(links_.size());
  for (std::uint64_t key : links_) {
    out.emplace_back(static_cast<NodeId>(key >> 32),
                     static_cast<NodeId>(key & 0xFFFFFFFFu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LexNetwork::write_edge_csv(std::ostream& out) const {
  out << "source,target\n";
  for (const auto& [u, v] : links()) {
    out << csv::quote(display_label(u)) << ',' << csv::quote(display_label(v))
        << '\n';
  }
}

LexNetwork LexNetwork::read_edge_csv(std::istream& in,
                                     Directedness directedness) {
  LexNetwork g(directedness);
  std::vector<std::string> row;
  bool header = true;
  size_t lineno = 0;
  while (csv::read_row(in, row)) {
    ++lineno;
    if (row.empty() || (row.size() == 1 && row[0].empty())) continue;
    if (header) {
      header = false;
      if (row.size() == 2 && row[0] == "source" && row[1] == "target") continue;
      // fall through: headerless files are accepted
    }
    if (row.size() != 2) {
      throw FormatError("edge list line " + std::to_string(lineno) +
                        ": expected 2 columns, got " +
                        std::to_string(row.size()));
    }
    const NodeId u = g.intern(row[0]);
    const NodeId v = g.intern(row[1]);
    g.add_link(u, v);
  }
  return g;
}

}  // namespace lexnet

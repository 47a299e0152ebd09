#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

/// True iff some injective map V(pattern) -> V(host) sends every pattern edge
/// to a host edge. Not induced; isolated pattern vertices only need distinct
/// images.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// A set of forbidden graphs, deduplicated up to isomorphism.
class GraphFamily {
 public:
  GraphFamily() = default;
  explicit GraphFamily(std::string label) : label_(std::move(label)) {}
  GraphFamily(std::string label, std::initializer_list<Graph> members);
  GraphFamily(std::string label, const std::vector<Graph>& members);

  /// Adds g unless an isomorphic member is present; returns whether it was added.
  bool add(const Graph& g);
  bool contains_isomorphic(const Graph& g) const;

  const std::vector<Graph>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Canonical graphs of the members, sorted; label-independent identity.
  std::vector<Graph> canonical_members() const;

 private:
  std::string label_;
  std::vector<Graph> members_;
  std::vector<Graph> keys_;  // canonical graph per member
};

bool is_family_free(const Graph& g, const GraphFamily& fam);

/// Drops every member containing another member; freeness is unchanged.
GraphFamily minimalize(const GraphFamily& fam);

/// Union of two families (deduplicated). Label is "a ∪ b" unless given.
GraphFamily merge(const GraphFamily& a, const GraphFamily& b, std::string label = {});

}  // namespace gturan

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace inspectra {

// Sorted, duplicate-free index sets over a model's node/component spaces.
// The tag keeps detector positionings and attack plans from mixing.
template <class Tag>
struct IdxSet {
  std::vector<int> v;  // strictly increasing

  IdxSet() = default;
  explicit IdxSet(std::vector<int> ids);

  bool contains(int x) const;
  std::size_t size() const { return v.size(); }
  bool empty() const { return v.empty(); }
  bool operator==(const IdxSet& o) const { return v == o.v; }
  bool operator<(const IdxSet& o) const { return v < o.v; }
};

struct NodeTag {};
struct ComponentTag {};
using NodeSet = IdxSet<NodeTag>;
using ComponentSet = IdxSet<ComponentTag>;

// Detection model: nodes where detectors can sit, components subject to
// attack, and the monitoring set of each node. Immutable after construction;
// declared order of ids fixes all downstream tie-breaking.
class DetectionModel {
 public:
  DetectionModel(std::vector<std::string> nodes,
                 std::vector<std::string> components,
                 std::vector<std::pair<std::string, std::vector<std::string>>> monitoring);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<std::string>& components() const { return components_; }

  int node_index(const std::string& id) const;        // throws ValidationError on unknown id
  int component_index(const std::string& id) const;

  // Monitoring set of node i as component indices (sorted).
  const std::vector<int>& monitored_by(int node) const { return monitor_sets_[node]; }
  // Nodes whose monitoring set contains component e (sorted).
  const std::vector<int>& monitors_of(int component) const { return monitor_nodes_[component]; }

  bool node_monitors(int node, int component) const;

  // Structural and semantic violations; empty iff the model is valid.
  const std::vector<std::string>& validate() const { return violations_; }
  void require_valid() const;  // throws ValidationError listing violations

  // Number of components of T monitored by at least one detector in S.
  int detect(const NodeSet& s, const ComponentSet& t) const;
  // Union of monitoring sets over S.
  ComponentSet monitored_set(const NodeSet& s) const;

  NodeSet node_set_from_ids(const std::vector<std::string>& ids) const;
  ComponentSet component_set_from_ids(const std::vector<std::string>& ids) const;
  std::vector<std::string> node_ids(const NodeSet& s) const;
  std::vector<std::string> component_ids(const ComponentSet& t) const;

  void check_node_set(const NodeSet& s) const;
  void check_component_set(const ComponentSet& t) const;

  // Bitmask words (64 components per word) of node i's monitoring set.
  const std::vector<std::uint64_t>& monitor_mask(int node) const { return monitor_masks_[node]; }
  int mask_words() const { return mask_words_; }

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> components_;
  std::map<std::string, int> node_idx_;
  std::map<std::string, int> component_idx_;
  std::vector<std::vector<int>> monitor_sets_;            // node -> components
  std::vector<std::vector<int>> monitor_nodes_;           // component -> nodes
  std::vector<std::vector<std::uint64_t>> monitor_masks_; // node -> bitmask
  int mask_words_ = 0;
  std::vector<std::string> violations_;
};

}  // namespace inspectra

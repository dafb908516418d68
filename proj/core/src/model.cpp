#include "inspectra/model.hpp"

#include <algorithm>
#include <set>

#include "inspectra/errors.hpp"

namespace inspectra {

template <class Tag>
IdxSet<Tag>::IdxSet(std::vector<int> ids) : v(std::move(ids)) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class Tag>
bool IdxSet<Tag>::contains(int x) const {
  return std::binary_search(v.begin(), v.end(), x);
}

template struct IdxSet<NodeTag>;
template struct IdxSet<ComponentTag>;

DetectionModel::DetectionModel(
    std::vector<std::string> nodes, std::vector<std::string> components,
    std::vector<std::pair<std::string, std::vector<std::string>>> monitoring)
    : nodes_(std::move(nodes)), components_(std::move(components)) {
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (!node_idx_.emplace(nodes_[i], i).second) {
      violations_.push_back("duplicate node " + nodes_[i]);
    }
  }
  for (int e = 0; e < static_cast<int>(components_.size()); ++e) {
    if (!component_idx_.emplace(components_[e], e).second) {
      violations_.push_back("duplicate component " + components_[e]);
    }
  }

  monitor_sets_.assign(nodes_.size(), {});
  monitor_nodes_.assign(components_.size(), {});
  for (const auto& [node_id, comp_ids] : monitoring) {
    auto it = node_idx_.find(node_id);
    if (it == node_idx_.end()) {
      violations_.push_back("unknown node " + node_id + " in monitoring map");
      continue;
    }
    const int i = it->second;
    for (const auto& cid : comp_ids) {
      auto ce = component_idx_.find(cid);
      if (ce == component_idx_.end()) {
        violations_.push_back("unknown component " + cid + " in monitoring set of " + node_id);
        continue;
      }
      monitor_sets_[i].push_back(ce->second);
    }
  }
  for (auto& row : monitor_sets_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  for (int i = 0; i < node_count(); ++i) {
    for (int e : monitor_sets_[i]) monitor_nodes_[e].push_back(i);
  }
  for (int e = 0; e < component_count(); ++e) {
    if (monitor_nodes_[e].empty()) {
      violations_.push_back("uncoverable component " + components_[e]);
    }
  }

  mask_words_ = (component_count() + 63) / 64;
  monitor_masks_.assign(nodes_.size(), std::vector<std::uint64_t>(mask_words_, 0));
  for (int i = 0; i < node_count(); ++i) {
    for (int e : monitor_sets_[i]) {
      monitor_masks_[i][e >> 6] |= std::uint64_t{1} << (e & 63);
    }
  }
}

int DetectionModel::node_index(const std::string& id) const {
  auto it = node_idx_.find(id);
  if (it == node_idx_.end()) throw ValidationError("unknown node " + id);
  return it->second;
}

int DetectionModel::component_index(const std::string& id) const {
  auto it = component_idx_.find(id);
  if (it == component_idx_.end()) throw ValidationError("unknown component " + id);
  return it->second;
}

bool DetectionModel::node_monitors(int node, int component) const {
  return (monitor_masks_[node][component >> 6] >> (component & 63)) & 1;
}

void DetectionModel::require_valid() const {
  if (violations_.empty()) return;
  std::string msg = "invalid detection model:";
  for (const auto& s : violations_) msg += "\n  " + s;
  throw ValidationError(msg);
}

void DetectionModel::check_node_set(const NodeSet& s) const {
  for (int i : s.v) {
    if (i < 0 || i >= node_count()) throw ValidationError("node index out of range");
  }
}

void DetectionModel::check_component_set(const ComponentSet& t) const {
  for (int e : t.v) {
    if (e < 0 || e >= component_count()) throw ValidationError("component index out of range");
  }
}

int DetectionModel::detect(const NodeSet& s, const ComponentSet& t) const {
  check_node_set(s);
  check_component_set(t);
  std::vector<std::uint64_t> acc(mask_words_, 0);
  for (int i : s.v) {
    const auto& m = monitor_masks_[i];
    for (int w = 0; w < mask_words_; ++w) acc[w] |= m[w];
  }
  int count = 0;
  for (int e : t.v) count += static_cast<int>((acc[e >> 6] >> (e & 63)) & 1);
  return count;
}

ComponentSet DetectionModel::monitored_set(const NodeSet& s) const {
  check_node_set(s);
  std::vector<std::uint64_t> acc(mask_words_, 0);
  for (int i : s.v) {
    const auto& m = monitor_masks_[i];
    for (int w = 0; w < mask_words_; ++w) acc[w] |= m[w];
  }
  ComponentSet out;
  for (int e = 0; e < component_count(); ++e) {
    if ((acc[e >> 6] >> (e & 63)) & 1) out.v.push_back(e);
  }
  return out;
}

NodeSet DetectionModel::node_set_from_ids(const std::vector<std::string>& ids) const {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(node_index(id));
  return NodeSet(std::move(idx));
}

ComponentSet DetectionModel::component_set_from_ids(const std::vector<std::string>& ids) const {
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(component_index(id));
  return ComponentSet(std::move(idx));
}

std::vector<std::string> DetectionModel::node_ids(const NodeSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.v.size());
  for (int i : s.v) out.push_back(nodes_.at(i));
  return out;
}

std::vector<std::string> DetectionModel::component_ids(const ComponentSet& t) const {
  std::vector<std::string> out;
  out.reserve(t.v.size());
  for (int e : t.v) out.push_back(components_.at(e));
  return out;
}

}  // namespace inspectra

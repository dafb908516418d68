#pragma once

#include <cstdint>
#include <string>

#include "inspectra/model.hpp"

namespace inspectra {

enum class InstanceFamily { kRandomBipartite, kInterval, kGridHideAndSeek };

struct GenConfig {
  int node_count = 6;
  int component_count = 8;
  double mean_monitor = 2.0;  // target average monitoring-set size
  std::uint64_t seed = 1;
  InstanceFamily family = InstanceFamily::kRandomBipartite;
};

// Deterministic instance generation: the result is a pure function of the
// config. Every family guarantees each component is monitored somewhere; the
// grid family has equal cover and packing numbers.
DetectionModel generate(const GenConfig& config);

InstanceFamily family_from_name(const std::string& name);
std::string family_name(InstanceFamily family);

}  // namespace inspectra

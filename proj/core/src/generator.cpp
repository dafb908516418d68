#include "inspectra/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "inspectra/errors.hpp"

namespace inspectra {
namespace {

// Bounded draw pinned to raw mt19937_64 output, so instances do not depend
// on the standard library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

DetectionModel gen_random_bipartite(const GenConfig& cfg, std::mt19937_64& rng) {
  const int n = cfg.node_count, m = cfg.component_count;
  std::vector<std::set<int>> sets(n);
  // Coverage first: every component lands on a random node.
  for (int e = 0; e < m; ++e) {
    sets[draw_below(rng, n)].insert(e);
  }
  long memberships = m;
  const long target = std::max<long>(m, std::lround(cfg.mean_monitor * n));
  long attempts = 0;
  while (memberships < target && attempts < 64L * target) {
    const int i = static_cast<int>(draw_below(rng, n));
    const int e = static_cast<int>(draw_below(rng, m));
    if (sets[i].insert(e).second) ++memberships;
    ++attempts;
  }
  auto nodes = numbered("v", n);
  auto comps = numbered("e", m);
  std::vector<std::pair<std::string, std::vector<std::string>>> monitoring;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> ids;
    for (int e : sets[i]) ids.push_back(comps[e]);
    monitoring.emplace_back(nodes[i], std::move(ids));
  }
  return DetectionModel(std::move(nodes), std::move(comps), std::move(monitoring));
}

DetectionModel gen_interval(const GenConfig& cfg, std::mt19937_64& rng) {
  const int n = cfg.node_count, m = cfg.component_count;
  // Tile the component line so coverage is guaranteed, then pad each node's
  // window randomly toward the target mean size.
  auto nodes = numbered("v", n);
  auto comps = numbered("e", m);
  std::vector<std::pair<std::string, std::vector<std::string>>> monitoring;
  const int pad_max = std::max(0, static_cast<int>(std::lround(cfg.mean_monitor)) - 1);
  for (int i = 0; i < n; ++i) {
    const int lo_tile = static_cast<int>(static_cast<long>(i) * m / n);
    const int hi_tile = static_cast<int>(static_cast<long>(i + 1) * m / n) - 1;
    int lo = lo_tile, hi = std::max(hi_tile, lo_tile);
    if (pad_max > 0) {
      lo -= static_cast<int>(draw_below(rng, pad_max + 1));
      hi += static_cast<int>(draw_below(rng, pad_max + 1));
    }
    lo = std::max(lo, 0);
    hi = std::min(hi, m - 1);
    std::vector<std::string> ids;
    for (int e = lo; e <= hi; ++e) ids.push_back(comps[e]);
    monitoring.emplace_back(nodes[i], std::move(ids));
  }
  return DetectionModel(std::move(nodes), std::move(comps), std::move(monitoring));
}

DetectionModel gen_grid(const GenConfig& cfg, std::mt19937_64& rng) {
  // Lines are the monitoring locations, grid cells the components: the cover
  // number equals the packing number on any bipartite incidence.
  if (cfg.node_count < 2) throw ValidationError("grid family needs at least two nodes");
  const int rows = cfg.node_count / 2;
  const int cols = cfg.node_count - rows;
  const int cells = rows * cols;
  const int m = std::min(cfg.component_count, cells);
  if (m < 1) throw ValidationError("degenerate config: zero components");

  std::vector<int> cell_ids(cells);
  for (int c = 0; c < cells; ++c) cell_ids[c] = c;
  for (int c = cells - 1; c > 0; --c) {
    std::swap(cell_ids[c], cell_ids[draw_below(rng, c + 1)]);
  }
  cell_ids.resize(m);
  std::sort(cell_ids.begin(), cell_ids.end());

  std::vector<std::string> nodes;
  for (int r = 1; r <= rows; ++r) nodes.push_back("r" + std::to_string(r));
  for (int c = 1; c <= cols; ++c) nodes.push_back("c" + std::to_string(c));
  std::vector<std::string> comps;
  std::vector<std::vector<std::string>> row_sets(rows), col_sets(cols);
  for (int cell : cell_ids) {
    const int r = cell / cols, c = cell % cols;
    std::string id = "x" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
    row_sets[r].push_back(id);
    col_sets[c].push_back(id);
    comps.push_back(std::move(id));
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> monitoring;
  for (int r = 0; r < rows; ++r) monitoring.emplace_back(nodes[r], row_sets[r]);
  for (int c = 0; c < cols; ++c) monitoring.emplace_back(nodes[rows + c], col_sets[c]);
  return DetectionModel(std::move(nodes), std::move(comps), std::move(monitoring));
}

}  // namespace

DetectionModel generate(const GenConfig& config) {
  if (config.node_count < 1) throw ValidationError("degenerate config: zero nodes");
  if (config.component_count < 1) throw ValidationError("degenerate config: zero components");
  std::mt19937_64 rng(config.seed);
  switch (config.family) {
    case InstanceFamily::kRandomBipartite:
      return gen_random_bipartite(config, rng);
    case InstanceFamily::kInterval:
      return gen_interval(config, rng);
    case InstanceFamily::kGridHideAndSeek:
      return gen_grid(config, rng);
  }
  throw ValidationError("unknown instance family");
}

InstanceFamily family_from_name(const std::string& name) {
  if (name == "random-bipartite") return InstanceFamily::kRandomBipartite;
  if (name == "interval") return InstanceFamily::kInterval;
  if (name == "grid-hide-and-seek") return InstanceFamily::kGridHideAndSeek;
  throw ValidationError("unknown instance family: " + name);
}

std::string family_name(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kRandomBipartite: return "random-bipartite";
    case InstanceFamily::kInterval: return "interval";
    case InstanceFamily::kGridHideAndSeek: return "grid-hide-and-seek";
  }
  return "unknown";
}

}  // namespace inspectra

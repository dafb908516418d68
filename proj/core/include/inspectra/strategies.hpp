#pragma once

#include <set>
#include <vector>

#include "inspectra/model.hpp"
#include "inspectra/rational.hpp"

namespace inspectra {

enum class Side { kDefender, kAttacker };

// Probability distribution over canonical action sets (detector positionings
// or attack plans). Actions are sorted index sets; the support is kept sorted
// by action, duplicates merged. Immutable once built.
class MixedStrategy {
 public:
  struct Entry {
    std::vector<int> action;  // sorted indices
    double prob = 0.0;
  };

  MixedStrategy() = default;
  MixedStrategy(Side side, int budget, std::vector<Entry> support);

  Side side() const { return side_; }
  int budget() const { return budget_; }
  const std::vector<Entry>& support() const { return support_; }
  bool empty() const { return support_.empty(); }

  std::set<int> support_sizes() const;
  // Union of support actions. Throws on an empty strategy.
  std::vector<int> basis() const;
  // Per-element probability of appearing in the realized action, indexed
  // over [0, dimension).
  std::vector<double> marginals(int dimension) const;

  bool operator==(const MixedStrategy& o) const;

 private:
  Side side_ = Side::kDefender;
  int budget_ = 0;
  std::vector<Entry> support_;
};

// Wrap-around windows of length `budget` over the given base order, one per
// base element, each with probability 1/n. Every base element ends up with
// marginal budget/n exactly; probabilities are exact rationals internally.
MixedStrategy cyclic_strategy(Side side, const std::vector<int>& base_order, int budget);

// Window index sets of the cyclic construction, in start order (before
// canonical dedup). Exposed for warm starts.
std::vector<std::vector<int>> cyclic_windows(const std::vector<int>& base_order, int budget);

}  // namespace inspectra

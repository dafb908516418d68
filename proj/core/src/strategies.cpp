#include "inspectra/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "inspectra/errors.hpp"

namespace inspectra {

MixedStrategy::MixedStrategy(Side side, int budget, std::vector<Entry> support)
    : side_(side), budget_(budget) {
  if (budget < 0) throw ValidationError("strategy budget must be nonnegative");
  std::map<std::vector<int>, double> merged;
  double total = 0.0;
  for (auto& entry : support) {
    if (entry.prob < -1e-12) throw ValidationError("negative strategy probability");
    if (entry.prob <= 0.0) continue;
    std::sort(entry.action.begin(), entry.action.end());
    entry.action.erase(std::unique(entry.action.begin(), entry.action.end()), entry.action.end());
    if (static_cast<int>(entry.action.size()) > budget) {
      throw ValidationError("support action exceeds budget");
    }
    merged[entry.action] += entry.prob;
    total += entry.prob;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("strategy probabilities must sum to 1");
  }
  support_.reserve(merged.size());
  for (auto& [action, prob] : merged) support_.push_back({action, prob});
}

std::set<int> MixedStrategy::support_sizes() const {
  std::set<int> out;
  for (const auto& e : support_) out.insert(static_cast<int>(e.action.size()));
  return out;
}

std::vector<int> MixedStrategy::basis() const {
  if (support_.empty()) throw ValidationError("empty strategy");
  std::vector<int> out;
  for (const auto& e : support_) out.insert(out.end(), e.action.begin(), e.action.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> MixedStrategy::marginals(int dimension) const {
  std::vector<double> rho(dimension, 0.0);
  for (const auto& e : support_) {
    for (int x : e.action) {
      if (x < 0 || x >= dimension) throw ValidationError("strategy index out of range");
      rho[x] += e.prob;
    }
  }
  return rho;
}

bool MixedStrategy::operator==(const MixedStrategy& o) const {
  if (side_ != o.side_ || budget_ != o.budget_ || support_.size() != o.support_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k].action != o.support_[k].action) return false;
    if (std::abs(support_[k].prob - o.support_[k].prob) > 1e-12) return false;
  }
  return true;
}

std::vector<std::vector<int>> cyclic_windows(const std::vector<int>& base_order, int budget) {
  const int n = static_cast<int>(base_order.size());
  if (budget <= 0 || budget > n) {
    throw ValidationError("cyclic window length must be in [1, base size]");
  }
  {
    std::vector<int> check = base_order;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end()) {
      throw ValidationError("cyclic base elements must be distinct");
    }
  }
  std::vector<std::vector<int>> windows(n);
  for (int k = 0; k < n; ++k) {
    windows[k].reserve(budget);
    for (int j = 0; j < budget; ++j) windows[k].push_back(base_order[(k + j) % n]);
  }
  return windows;
}

MixedStrategy cyclic_strategy(Side side, const std::vector<int>& base_order, int budget) {
  const auto windows = cyclic_windows(base_order, budget);
  const int n = static_cast<int>(windows.size());
  // Exact bookkeeping: identical windows (budget == n) pool their 1/n mass.
  std::map<std::vector<int>, Rational> mass;
  for (auto w : windows) {
    std::sort(w.begin(), w.end());
    auto [it, fresh] = mass.emplace(std::move(w), Rational(1, n));
    if (!fresh) it->second += Rational(1, n);
  }
  std::vector<MixedStrategy::Entry> support;
  support.reserve(mass.size());
  for (const auto& [action, prob] : mass) {
    support.push_back({action, prob.to_double()});
  }
  return MixedStrategy(side, budget, std::move(support));
}

}  // namespace inspectra

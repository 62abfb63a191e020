#include "streamtree/stats/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace streamtree::stats {
namespace {

template <class Count>
double entropy_impl(std::span<const Count> counts) {
  double total = 0.0;
  for (const auto c : counts) total += static_cast<double>(c);
  if (!(total > 0.0)) throw std::domain_error("entropy: class counts are all zero");

  double h = 0.0;
  for (const auto c : counts) {
    const auto v = static_cast<double>(c);
    if (v <= 0.0) continue;
    const double p = v / total;
    h -= p * std::log2(p);
  }
  const double upper = std::log2(static_cast<double>(std::max<std::size_t>(counts.size(), 1)));
  return std::clamp(h, 0.0, upper);
}

}  // namespace

double entropy(std::span<const double> counts) { return entropy_impl(counts); }
double entropy(std::span<const std::uint64_t> counts) { return entropy_impl(counts); }

double info_gain(std::span<const double> parent,
                 const std::vector<std::vector<double>>& children) {
  if (children.empty()) throw std::invalid_argument("info_gain: no children");

  std::vector<double> sums(parent.size(), 0.0);
  for (const auto& child : children) {
    if (child.size() != parent.size())
      throw std::invalid_argument("info_gain: child class vector has the wrong length");
    for (std::size_t c = 0; c < child.size(); ++c) sums[c] += child[c];
  }
  double total = 0.0;
  for (std::size_t c = 0; c < parent.size(); ++c) {
    const double tol = 1e-9 * std::max(1.0, std::abs(parent[c]));
    if (std::abs(sums[c] - parent[c]) > tol)
      throw std::invalid_argument("info_gain: children do not partition the parent");
    total += parent[c];
  }

  const double h_parent = entropy(parent);
  double weighted = 0.0;
  for (const auto& child : children) {
    double n = 0.0;
    for (const double v : child) n += v;
    if (n <= 0.0) continue;
    weighted += (n / total) * entropy(std::span<const double>(child));
  }
  return std::clamp(h_parent - weighted, 0.0, h_parent);
}

}  // namespace streamtree::stats

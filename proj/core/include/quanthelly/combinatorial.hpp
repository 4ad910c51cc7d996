#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quanthelly/measures.hpp"

namespace quanthelly {

using IndexSet = std::vector<std::size_t>;

/// Indexed list of convex bodies of a common dimension.
struct Family {
  std::vector<ConvexBody> members;
  std::vector<std::string> labels;

  std::size_t size() const { return members.size(); }
  int dim() const;
  const ConvexBody& operator[](std::size_t i) const { return members[i]; }

  static Family from_points(const std::vector<Point>& points);
  Family subfamily(const IndexSet& idx) const;
};

/// conv(∪_{i ∈ idx} F_i) for bounded members.
ConvexBody hull_of_union(const Family& f, const IndexSet& idx);

/// Helly number h and inscribed-polytope vertex count c used to size the
/// Tverberg construction.
struct HellyParameters {
  std::size_t h = 3;
  std::size_t c = 1;
};

/// Defaults: nonemptiness h = d+1, c = 1; lattice counts h = 2^d·ceil(λ),
/// c = ceil(λ); volume and perimeter h = 2d, c = default vertex budget.
HellyParameters default_helly_parameters(const Measure& m, int dim, const Scalar& lambda, const Scalar& eps);

/// Picks x_i ∈ classes[i] with every target in conv{x_1..x_n}. Requires
/// n = max(kd, d+1) classes for k targets. Returns indices into the classes.
std::vector<std::size_t> colorful_caratheodory(const std::vector<Point>& targets,
                                               const std::vector<std::vector<Point>>& classes);

struct TverbergOptions {
  std::optional<HellyParameters> params;
  // Maximum number of subfamily hulls intersected to form T0.
  std::size_t subset_budget = 200000;
};

struct TverbergResult {
  std::vector<IndexSet> partition;
  ConvexBody witness;
  MeasureValue achieved = MeasureValue::exact(0);
  // Common level λ = min f(T_i).
  Scalar level;
};

TverbergResult tverberg_partition(const Family& t, std::size_t m, const Measure& msr, const Scalar& eps1,
                                  const Scalar& eps2, const TverbergOptions& options = {});

/// Points with a Tverberg partition into m parts, by exhaustive candidate
/// search (plane only). Parts are minimal around the common point.
TverbergResult classic_tverberg(const std::vector<Point>& points, std::size_t m);

struct SelectionOptions {
  TverbergOptions tverberg;
  // Exhaustive r-tuple scan when C(|T|, r) is at most this.
  std::size_t exhaustive_budget = 200000;
};

struct SelectionResult {
  ConvexBody witness;
  std::vector<IndexSet> tuples;
  std::size_t r = 0;
  Scalar rho_achieved;
  bool exhaustive = false;
};

SelectionResult selection(const Family& t, const Measure& msr, const Scalar& eps, std::size_t m_parts,
                          const SelectionOptions& options = {});

/// Largest number of Tverberg parts the construction supports for n members.
std::size_t max_tverberg_parts(std::size_t n, int dim, const HellyParameters& p);

struct UncoveredOptions {
  // Exhaustive search when C(|T|, k) is at most this, sampling otherwise.
  std::size_t exhaustive_budget = 1000000;
  std::size_t trials = 20000;
  std::uint64_t seed = 1;
  // Index sets checked (unextended) before the general search.
  std::vector<IndexSet> hints;
  // Skip the general search; only the hints are examined.
  bool hints_only = false;
};

struct UncoveredResult {
  std::optional<IndexSet> subset;
  // True when "none found" is a certificate (exhaustive search).
  bool exhaustive = false;
};

/// A subset of size ≥ ceil(ε′|T|) whose hull-union contains no net element,
/// extended greedily to a maximal such subset.
UncoveredResult find_uncovered_subset(const Family& t, const std::vector<ConvexBody>& net, const Scalar& eps_prime,
                                      const UncoveredOptions& options = {});

struct NetOptions {
  UncoveredOptions search;
  SelectionOptions selection;
  // Upper bound on the Tverberg parts used by each selection step.
  std::optional<std::size_t> max_parts;
};

struct NetResult {
  std::vector<ConvexBody> net;
  std::vector<MeasureValue> achieved;
  std::size_t iterations = 0;
  Scalar rho_min;
  // False when coverage was only checked by sampling.
  bool certified = false;
};

NetResult weak_net(const Family& t, const Measure& msr, const Scalar& eps, const Scalar& eps_prime,
                   const NetOptions& options = {});

/// Every ceil(ε′|T|)-subset's hull-union contains a net element (exhaustive).
bool validate_net(const Family& t, const std::vector<ConvexBody>& net, const Scalar& eps_prime);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order
/// until fn returns false. Returns false if stopped early.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn fn) {
  if (k > n) return true;
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const IndexSet&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace quanthelly

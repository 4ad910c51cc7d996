#pragma once

#include <optional>
#include <vector>

#include "quanthelly/combinatorial.hpp"
#include "quanthelly/floating_body.hpp"

namespace quanthelly {

struct HellyReport {
  // All h-subfamilies have f ≥ λ.
  bool hypothesis = true;
  // f(∩F) ≥ (1-ε)λ.
  bool conclusion = true;
  std::optional<IndexSet> violator;
  ConvexBody intersection;
  MeasureValue value = MeasureValue::exact(0);
  // False when the hypothesis was only checked on a sample.
  bool exhaustive = true;

  bool holds() const { return !hypothesis || conclusion; }
};

HellyReport helly_check(const Family& f, std::size_t h, const Measure& msr, const Scalar& lambda, const Scalar& eps,
                        std::size_t budget = 1000000, std::uint64_t seed = 1);

struct CutOptions {
  // Directions for floating bodies (default: axis directions plus every
  // edge normal of the members, so that K(f, ε) ⊆ F whenever
  // f(F ∩ K) ≥ (1-ε) f(K)).
  std::optional<DirectionSet> directions;
  FloatingBodyOptions floating;
  std::size_t budget = 1000000;
};

struct FractionalHellyResult {
  ConvexBody witness;
  MeasureValue achieved = MeasureValue::exact(0);
  // Members containing the witness (exact).
  IndexSet members;
  // The (h-1)-tuple M most often containment-maximal and its cut.
  IndexSet tuple;
  Halfspace cut{Vector{Scalar(1)}, Scalar(0)};
  std::size_t assigned = 0;
  std::size_t qualifying = 0;
  // Counting floor ceil(assigned / (n - h + 1)) on the members containing
  // the witness, reported only.
  std::size_t counting_floor = 0;
};

/// Among h-tuples with f(∩A) ≥ λ, assigns each to its (h-1)-subtuple with
/// the largest minimal v-halfspace and returns the shrink K_M(f, ε) of the
/// most assigned one.
FractionalHellyResult fractional_helly_witness(const Family& f, const Measure& msr, const Scalar& lambda,
                                               const Scalar& eps, std::size_t h, const Direction& v,
                                               const CutOptions& options = {});

struct ColorfulHellyResult {
  std::size_t class_index = 0;
  ConvexBody witness;
  MeasureValue achieved = MeasureValue::exact(0);
  // The containment-maximal colorful (h-1)-tuple as (class, member) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> tuple;
  Halfspace cut{Vector{Scalar(1)}, Scalar(0)};
};

/// Given h color classes whose colorful h-choices all have f ≥ λ, a class
/// whose members all contain a common body of size ≥ (1-ε)λ.
ColorfulHellyResult colorful_helly(const std::vector<Family>& classes, const Measure& msr, const Scalar& lambda,
                                   const Scalar& eps, const Direction& v, const CutOptions& options = {});

}  // namespace quanthelly

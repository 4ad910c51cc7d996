#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quanthelly/combinatorial.hpp"
#include "quanthelly/floating_body.hpp"
#include "quanthelly/lp.hpp"

namespace quanthelly {

struct Candidate {
  ConvexBody body;
  // Members whose intersection generated the candidate.
  IndexSet source;
  // Whether the body is a shrink (floating body or lattice core) of ∩source.
  bool shrunk = false;
  MeasureValue value = MeasureValue::exact(0);
};

/// Finite stand-in for the class of convex sets with f ≥ threshold.
struct CandidatePool {
  std::vector<Candidate> candidates;
  // contained[c][j]: candidate c ⊆ member j.
  std::vector<std::vector<bool>> contained;
  Scalar threshold;

  std::size_t size() const { return candidates.size(); }
};

struct PoolOptions {
  // Floating-body shrinks are kept when f ≥ shrink_threshold (default
  // (1-ε)·λ) and computed at parameter ε over these directions.
  std::optional<Scalar> shrink_threshold;
  std::optional<DirectionSet> directions;
  bool shrink = true;
  std::size_t max_members = 64;
  std::size_t max_pool = 4096;
};

/// Intersections ∩A with |A| ≤ s_max and f ≥ λ, plus their shrinks. For
/// lattice measures with ε = 0 the shrinks are the ceil(λ)-point lattice
/// cores (single points when λ ≤ 1).
CandidatePool build_pool(const Family& f, const Measure& msr, const Scalar& lambda, const Scalar& eps,
                         std::size_t s_max, const PoolOptions& options = {});

/// min Σ w(C) subject to Σ_{C ⊆ F} w(C) ≥ 1 for every member, 0 ≤ w ≤ 1.
/// Throws Infeasible naming a member that contains no candidate.
LPInstance transversal_lp(const Family& f, const CandidatePool& pool);
LPSolution fractional_transversal(const Family& f, const CandidatePool& pool);

/// max Σ w(F) subject to Σ_{F ⊇ C} w(F) ≤ 1 for every candidate, 0 ≤ w ≤ 1.
LPInstance packing_lp(const Family& f, const CandidatePool& pool);
LPSolution fractional_packing(const Family& f, const CandidatePool& pool);

struct PQCheck {
  bool holds = true;
  std::optional<IndexSet> violator;
  // False when only a sample of the p-subsets was examined.
  bool exhaustive = true;
};

PQCheck check_pq(const Family& f, std::size_t p, std::size_t q, const Measure& msr, const Scalar& lambda,
                 std::size_t budget = 200000, std::uint64_t seed = 1);

struct PipelineTranscript {
  Scalar tau;
  Scalar nu;
  bool integral = false;
  // Common denominator of the rounded weights and the multiset size.
  Integer replication;
  std::size_t multiset_size = 0;
  Scalar eps_prime;
  std::size_t pool_size = 0;
  std::size_t s_max = 0;
  std::size_t net_iterations = 0;
  std::vector<std::string> notes;
};

struct PiercingCertificate {
  std::vector<ConvexBody> witnesses;
  // coverage[j]: index of a witness contained in member j.
  std::vector<std::size_t> coverage;
  std::vector<MeasureValue> achieved;
  PipelineTranscript transcript;
};

/// Turns an optimal fractional transversal into a finite set of witnesses
/// through a weak net on the weighted multiset of candidates.
PiercingCertificate replicate_and_round(const Family& f, const CandidatePool& pool, const LPSolution& tau,
                                        const Measure& msr, const Scalar& lambda, const Scalar& eps);

struct PierceOptions {
  std::size_t s_max = 2;
  // Share of ε spent on the candidate shrink.
  Scalar gamma = Scalar(1, 2);
  std::size_t pq_budget = 200000;
  PoolOptions pool;
};

PiercingCertificate pq_pierce(const Family& f, std::size_t p, std::size_t q, const Measure& msr,
                              const Scalar& lambda, const Scalar& eps, const PierceOptions& options = {});

/// Exact re-check: every coverage pair is a containment and every witness
/// has f ≥ (1-ε)·λ.
bool verify_certificate(const Family& f, const PiercingCertificate& cert, const Measure& msr, const Scalar& lambda,
                        const Scalar& eps, std::string* why = nullptr);

}  // namespace quanthelly

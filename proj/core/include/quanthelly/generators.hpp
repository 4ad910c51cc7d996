#pragma once

#include <cstdint>
#include <string>

#include "quanthelly/combinatorial.hpp"

namespace quanthelly {

enum class GeneratorKind {
  RandomPolygons,
  ClusteredVolume,
  ClusteredLattice,
  DoignonWitness,
  BkpCounterexample,
  HalfplaneBundle,
  PointCloud,
  PlantedFractional,
  PlantedLatticeHelly,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomPolygons;
  std::size_t count = 6;
  // Vertices per random polygon.
  std::size_t vertices = 5;
  std::size_t clusters = 3;
  // Members built around the planted common set (planted-fractional).
  std::size_t planted = 0;
  // Coordinates are drawn from [0, extent] on a grid of step 1/denominator.
  std::int64_t extent = 10;
  std::int64_t denominator = 4;
  // Side of the bkp-counterexample square.
  Scalar side = Scalar(1, 10);
  std::uint64_t seed = 1;
};

std::string generator_name(GeneratorKind kind);
GeneratorKind parse_generator(const std::string& name);

/// Deterministic in the spec. Planted structure is re-verified; a failed
/// check throws VerificationFailed.
///
/// random-polygons: hulls of random grid points in random sub-boxes.
/// clustered-volume: boxes around cluster centres, each containing the
///   centre's unit square neighbourhood [c-1, c+1]^2.
/// clustered-lattice: boxes with fractional sides around lattice centres,
///   each containing its centre and no other centre.
/// doignon-witness: the four triangles conv({0,1}^2 minus a corner).
/// bkp-counterexample: the four halfplanes bounding [0, side]^2.
/// halfplane-bundle: halfplanes through random normals, all containing a
///   common random point.
/// point-cloud: points in general position.
/// planted-fractional: `planted` members conv(Q ∪ {p}) with Q = [0,2]x[0,1]
///   and p above Q inside its x-range, plus small boxes elsewhere.
/// planted-lattice-helly: random lattice points z_1..z_n and members
///   conv({z_i : i != j} ∪ extra grid points), so that every (n-1)-subfamily
///   contains a lattice point.
Family generate(const GeneratorSpec& spec);

}  // namespace quanthelly

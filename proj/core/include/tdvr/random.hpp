#pragma once

// Seeded random instances for property tests, the acceptance suite and
// the tdvr-gen tool.

#include <cstdint>
#include <random>
#include <vector>

#include "tdvr/freemod.hpp"

namespace tdvr {

struct InstanceShape {
  std::uint32_t p = 2;
  std::uint32_t a = 2;
  Flavor flavor = Flavor::EquiChar;
  std::size_t nvars = 2;
  std::uint32_t rank = 1;
  std::size_t ngens = 2;
  std::uint64_t max_degree = 3;
  std::size_t max_terms = 4;
  bool x_homogeneous = false;
  /// Every coefficient of a generator a single layer c*pi^i (EquiChar).
  bool pi_homogeneous = false;
};

struct RandomInstance {
  ModulePtr module;
  std::vector<Element> generators;  ///< all nonzero
};

/// Uniform choice of p in {2,3,5}, a in 1..4, n in 1..2, r in 1..2,
/// 1..4 generators of degree <= 3 and either flavor.
InstanceShape random_shape(std::mt19937_64& rng);

/// Random scalar whose valuation is uniform on [0, a] (a meaning zero).
Scalar random_scalar(const RingSpec& ring, std::mt19937_64& rng);

/// A nonzero random element with at most max_terms terms; all of x-degree
/// `degree` when homogeneous is set, otherwise of degree <= degree.
Element random_element(const ModulePtr& module, std::uint64_t degree, bool homogeneous, std::size_t max_terms,
                       std::mt19937_64& rng, bool pi_homogeneous = false);

RandomInstance random_instance(const InstanceShape& shape, std::mt19937_64& rng);

}  // namespace tdvr

#pragma once

// Reduction of a parameter vector to a canonical representative of its
// orbit, with a braid word that carries the input to it.

#include <cstddef>
#include <string>
#include <vector>

#include "braidorbit/core.hpp"
#include "braidorbit/invariants.hpp"

namespace braidorbit {

struct StepRecord {
  std::string step;
  BraidWord word;
};

struct CanonicalResult {
  KVector canonical;
  BraidWord witness;
  OrbitSignature signature;
  std::vector<StepRecord> steps;
};

struct ReduceOptions {
  /// Recompute the signature after every sub-word and fail on any change.
  bool check_each_step = false;
  /// Hard bound on the number of letters one reduction pass may emit.
  std::size_t letter_budget = 50'000'000;
};

/// Dispatches on the modulus of k.
CanonicalResult reduce(const KVector& k, const ReduceOptions& options = {});
CanonicalResult reduce_modular(const KVector& k, const ReduceOptions& options = {});

bool same_orbit(const KVector& a, const KVector& b, const ReduceOptions& options = {});

}  // namespace braidorbit

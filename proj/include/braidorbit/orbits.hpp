#pragma once

// Exhaustive computations over Z_m: orbit partitions, finite matrix groups
// generated by the representation, subspace scans and index formulas.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "braidorbit/core.hpp"
#include "braidorbit/invariants.hpp"

namespace braidorbit {

constexpr std::uint64_t kVectorGuard = 10'000'000;
constexpr std::uint64_t kGroupGuard = 1'000'000;

/// The value of BRAIDORBIT_GUARD if set, else fallback.
std::uint64_t guard_from_env(std::uint64_t fallback);

/// Orbit of k under the generators and their inverses, sorted
/// lexicographically. `letters` fixes the order in which moves are tried
/// (default 1..n, -1..-n).
std::vector<KVector> bfs_orbit(const KVector& k, const std::vector<int>& letters = {});

struct OrbitEntry {
  std::size_t id = 0;
  std::vector<std::uint32_t> codes;  // sorted; see decode_vector
  KVector representative;
  OrbitSignature signature;
};

struct OrbitTable {
  std::size_t n = 0;
  std::uint32_t m = 0;
  std::vector<OrbitEntry> orbits;
  std::uint64_t total = 0;
  bool signatures_constant = true;
  bool signatures_injective = true;
  std::vector<std::string> findings;

  KVector decode(std::uint32_t code) const;
  std::vector<std::size_t> sizes() const;
  /// orbit id, size, signature, representative; then a summary line.
  std::string to_text() const;
  /// One JSON object per orbit.
  std::string to_json_lines() const;
};

std::uint32_t encode_vector(const std::vector<std::uint32_t>& k, std::uint32_t m);
std::vector<std::uint32_t> decode_vector(std::uint32_t code, std::size_t n, std::uint32_t m);

OrbitTable classify_space(std::size_t n, std::uint32_t m, std::uint64_t guard = kVectorGuard);

// ---------------------------------------------------------------------------
// Finite matrix groups

struct GroupOrder {
  std::size_t n = 0;
  std::uint32_t modulus = 0;
  Int order = 0;
  std::size_t generator_count = 0;
};

/// Order of the group generated by the given matrices reduced mod q.
GroupOrder closure_order(const std::vector<IntMatrix>& generators, std::uint32_t q,
                         std::uint64_t guard = kGroupGuard);

/// Order of <rho(sigma_i) mod q>.
GroupOrder representation_order(std::size_t n, std::uint32_t q, std::uint64_t guard = kGroupGuard);

struct Mod2Report {
  GroupOrder group;
  Int expected;                 // (n+1)!
  bool generators_match = false;  // rho(sigma_i) = M(pi_i) mod 2, pi_i = (i-1 i)
  bool same_set = false;          // {M(pi)} over S_{n+1} equals the generated group
  bool ok() const { return group.order == expected && generators_match && same_set; }
};

/// M(pi)_{ij} = delta_{i,pi(j)} + delta_{0,pi(j)} mod 2 for i, j in 1..n,
/// with pi a permutation of {0..n}.
IntMatrix permutation_matrix_mod2(const std::vector<std::size_t>& pi);

Mod2Report mod2_symmetric_group_check(std::size_t n, std::uint64_t guard = kGroupGuard);

struct CongruenceReport {
  std::size_t n = 0;
  std::uint32_t modulus = 0;
  Int order;               // |G mod modulus|
  Int order_mod2;          // |G mod 2|
  Int kernel_in_group;     // elements of G mod modulus that are I mod 2
  Int ambient_kernel;      // elements of the ambient group that are I mod 2
  bool contains_kernel() const { return kernel_in_group == ambient_kernel; }
  std::string to_string() const;
};

/// Evidence at one finite level for the principal level-2 subgroup claim.
/// Ambient group in X coordinates: Sp(n) for even n; for odd n = 2s+1 the
/// matrices [[A, b], [0, 1]] with A in Sp(2s).
CongruenceReport congruence_check(std::size_t n, std::uint32_t modulus = 4, std::uint64_t guard = kGroupGuard);

/// Number of 2s x 2s matrices over Z_q preserving J, by brute force.
Int sp_order_by_enumeration(std::size_t two_s, std::uint32_t q, std::uint64_t guard = 100'000'000);

/// |Sp(2s, F_p)| = p^{s^2} prod_{k=1..s} (p^{2k} - 1) for prime p.
Int sp_order_formula(std::size_t s, std::uint32_t p);

struct SubspaceScan {
  std::size_t n = 0;
  std::size_t checked = 0;
  /// Proper nontrivial invariant subspaces, each as its sorted element masks
  /// (bit i-1 of a mask is k_i).
  std::vector<std::vector<std::uint32_t>> invariant;
};

SubspaceScan invariant_subspace_scan(std::size_t n);

enum class Parity { Even, Odd };

Parity parse_parity(std::string_view text);

/// even: 2^{s^2} prod(2^{2k}-1) / (2s+1)!; odd: 2^{s^2+2s} prod(2^{2k}-1) / (2s+2)!.
/// Throws if the division is not exact.
Int index_counts(std::size_t s, Parity parity);

}  // namespace braidorbit

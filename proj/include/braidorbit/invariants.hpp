#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "braidorbit/core.hpp"

namespace braidorbit {

/// Orbit invariants of a parameter vector. For n = 2s:
///   gamma = gcd(k), alpha = #{i : k_i / gamma odd}, delta = |2 alpha - 2s - 1|.
/// For n = 2s + 1 delta = |2 alpha - 2s - 2| and x = k_1 - k_2 + ... + k_n.
/// Over Z_m gamma = gcd(k, m) (0 for the zero vector) and alpha, delta are
/// only defined when m / gamma is even; x is a residue.
struct OrbitSignature {
  std::size_t n = 0;
  Int gamma = 0;
  std::optional<Int> alpha;
  std::optional<Int> delta;
  std::optional<Int> x;
  std::optional<Int> modulus;

  std::string to_string() const;
  friend bool operator==(const OrbitSignature&, const OrbitSignature&) = default;
};

OrbitSignature signature(const KVector& k);

/// How x is compared for odd n over the integers. Exact treats x and -x as
/// different orbits (they are: x_n is fixed by every generator).
enum class SignConvention { Exact, UpToSign };

/// Compares gamma, delta and x. Alpha is not an orbit invariant and is ignored.
bool signatures_equal(const OrbitSignature& a, const OrbitSignature& b,
                      SignConvention convention = SignConvention::Exact);

}  // namespace braidorbit

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidorbit/core.hpp"

namespace braidorbit {

struct RelationReport {
  std::string id;
  std::size_t n = 0;
  bool holds = false;
  std::optional<IntMatrix> defect;
  std::string note;

  /// "id n holds note" on one line.
  std::string to_string() const;
};

bool all_hold(const std::vector<RelationReport>& reports);

/// Braid and commuting relations, (s_i s_{i+1})^6 = (s_i s_{i+1} s_i)^4 = I,
/// chain relations (s_i ... s_{i+2k-1})^{2(2k+1)} = I for k <= kmax, and the
/// full twist, which is I for odd n and -I for even n.
std::vector<RelationReport> verify_relations(std::size_t n, std::size_t kmax);

/// M^T J M = J for every generator in X coordinates. For odd n the sigma_1
/// defect is compared against x_1 y_n - x_n y_1, both as a matrix and on
/// `samples` random pairs, and the kernel vector is checked.
std::vector<RelationReport> verify_symplectic(std::size_t n, std::size_t samples = 1000,
                                              std::uint64_t seed = 1);

/// (rho(s_i) - I)^2 = 0 and rank(rho(s_i) - I) = 1.
std::vector<RelationReport> verify_transvections(std::size_t n);

enum class Correspondence { GramToSkew, SkewToGram };

/// With S the upper triangle with unit diagonal: G = S + S^T, H = S - S^T.
IntMatrix transvection_correspondence(const IntMatrix& input, Correspondence direction);

}  // namespace braidorbit

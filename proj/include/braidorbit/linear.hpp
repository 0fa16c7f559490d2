#pragma once

// The linear action on parameter vectors, its coordinate frames, the form J
// and the composite words used by the reduction algorithm.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidorbit/core.hpp"

namespace braidorbit {

/// Coordinate frames for a vector of length n.
///  K      the parameters k_1..k_n
///  X      x_i = k_i - k_{i-1} + ... +- k_1
///  PQ     (q_1, p_1, ..., q_s, p_s [, q_{s+1}]) with p_i = x_{2i},
///         q_i = x_{2i-1} - x_{2i+1}; for odd n the last entry is x_n
///  Tilde  (qt_1, pt_1, ..., qt_s, pt_s [, x_n]) with qt_i = q_i + ... + q_s
///         and pt_i = p_i - p_{i-1}
enum class Frame { K, X, PQ, Tilde };

Frame parse_frame(std::string_view name);
std::string to_string(Frame f);

std::vector<Int> transform(std::span<const Int> v, Frame from, Frame to);

/// Matrix of the linear map K -> frame.
IntMatrix frame_matrix(Frame f, std::size_t n);

// ---------------------------------------------------------------------------
// Action

void act_letter(std::vector<Int>& k, int letter);
std::vector<Int> act_k(const BraidWord& w, std::vector<Int> k);
KVector act_k(const BraidWord& w, const KVector& k);

/// Single letter on residues held as machine words, m < 2^31.
void act_letter_mod(std::span<std::uint32_t> k, int letter, std::uint32_t m);

IntMatrix generator_matrix(int letter, std::size_t n);

/// Matrix M with act_k(w, k) = M k. For w = a b this is M(b) M(a).
IntMatrix rho_matrix(const BraidWord& w, std::size_t n);

/// The action of w written in another frame.
IntMatrix frame_action(const BraidWord& w, std::size_t n, Frame f);

// ---------------------------------------------------------------------------
// Symplectic structure

/// Matrix of J in X coordinates: J(X_i, X_j) = delta_{i+1,j} - delta_{i-1,j}.
IntMatrix j_matrix(std::size_t n);

Int eval_J(std::span<const Int> u, std::span<const Int> v);

struct CanonicalBasis {
  std::vector<std::vector<Int>> q;  // Q_i = X_{2i-1} + X_{2i-3} + ... + X_1
  std::vector<std::vector<Int>> p;  // P_i = X_{2i}
  std::optional<std::vector<Int>> kernel;  // odd n only
};

CanonicalBasis canonical_basis(std::size_t n);

// ---------------------------------------------------------------------------
// Composite words

enum class Composite { U, V, Z, VLong };

Composite parse_composite(std::string_view name);

/// U_i = (s_{2i} s_{2i+1} s_{2i})^2, V_i = (s_{2i-1} s_{2i} s_{2i-1})^2,
/// Z_i = s_{2i+1} s_{2i} s_{2i+2} s_{2i+1},
/// VLong = s_1 ... s_{n-1} s_n s_{n-1}^-1 ... s_1^-1 (index ignored).
BraidWord composite_generator(std::size_t n, Composite kind, std::size_t i = 1);

}  // namespace braidorbit

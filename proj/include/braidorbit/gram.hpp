#pragma once

// Rank-2 Gram matrices of reflection vectors, their angle parametrization and
// the nonlinear braid action G -> K G K.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidorbit/core.hpp"

namespace braidorbit {

/// The real number 2cos(pi*r), stored by its angle r folded into [0, 1].
class TwoCosPi {
 public:
  TwoCosPi() = default;
  explicit TwoCosPi(const Rational& r);

  static TwoCosPi two() { return TwoCosPi(Rational(0)); }
  static TwoCosPi zero() { return TwoCosPi(Rational(1, 2)); }

  const Rational& angle() const { return angle_; }
  double value() const;
  bool is_zero() const { return angle_ == Rational(1, 2); }

  TwoCosPi operator-() const;
  friend bool operator==(const TwoCosPi&, const TwoCosPi&) = default;

 private:
  Rational angle_{0};
};

/// Angles phi_1..phi_{n+1} in units of pi, each reduced into [0, 1).
class AngleConfig {
 public:
  AngleConfig() = default;
  explicit AngleConfig(std::vector<Rational> angles);

  std::size_t size() const { return phi_.size(); }
  const std::vector<Rational>& angles() const { return phi_; }
  const Rational& operator[](std::size_t i) const { return phi_[i]; }

  friend bool operator==(const AngleConfig&, const AngleConfig&) = default;
  std::string to_string() const;

 private:
  std::vector<Rational> phi_;
};

AngleConfig parse_angles(std::string_view text);

struct SignWitness {
  std::vector<int> lambda;
  friend bool operator==(const SignWitness&, const SignWitness&) = default;
  std::string to_string() const;
};

class GramMatrix {
 public:
  GramMatrix() = default;

  /// Exact matrix; off-diagonal entries given as angles (row-major, full).
  static GramMatrix exact(std::size_t dim, std::vector<TwoCosPi> entries);
  /// Floating matrix with the given symmetric values (row-major, full).
  static GramMatrix floating(std::size_t dim, std::vector<double> values);

  std::size_t dim() const { return dim_; }
  bool is_exact() const { return std::holds_alternative<std::vector<TwoCosPi>>(data_); }

  const TwoCosPi& exact_entry(std::size_t i, std::size_t j) const;
  double value(std::size_t i, std::size_t j) const;

  /// Text layout: dimension on the first line, then the strict upper
  /// triangle row by row (angles for exact matrices, values otherwise).
  std::string to_string() const;
  /// Full matrix of numeric values, rows separated by newlines.
  std::string values_string(int precision = 12) const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  friend GramMatrix act_gram(const GramMatrix&, const BraidWord&);
  std::size_t dim_ = 0;
  std::variant<std::vector<TwoCosPi>, std::vector<double>> data_;
};

GramMatrix parse_gram(std::string_view text, bool floating);

GramMatrix gram_from_angles(const AngleConfig& a);

/// Largest absolute 3x3 minor of G/2 (numeric).
double max_minor3(const GramMatrix& g);

struct RecoveredAngle {
  double value = 0;
  std::optional<Rational> exact;
};

struct AngleExtraction {
  bool rank_one = false;
  std::vector<RecoveredAngle> angles;  // in [0, 1)
  SignWitness signs;                   // G = diag(signs) gram(angles) diag(signs)

  bool all_rational() const;
  AngleConfig config() const;
};

constexpr double kDefaultTolerance = 1e-9;
constexpr long kDefaultMaxDenominator = 64;

AngleExtraction extract_angles(const GramMatrix& g, double tol = kDefaultTolerance,
                               long max_denominator = kDefaultMaxDenominator);

/// The symmetric matrix K with sigma_i(G) = K G K. It differs from the
/// identity only in the block [[-G_{i,i+1}, 1], [1, 0]] at rows {i, i+1}.
struct KSigma {
  std::size_t dim = 0;
  std::size_t index = 0;
  std::optional<TwoCosPi> corner_exact;
  double corner = 0;

  double entry(std::size_t r, std::size_t c) const;
  std::vector<double> dense() const;
};

KSigma k_sigma(const GramMatrix& g, std::size_t i);

GramMatrix act_gram(const GramMatrix& g, const BraidWord& w);

/// The linearized action on angles: sigma_i sends (phi_i, phi_{i+1}) to
/// (2 phi_i - phi_{i+1}, phi_i).
AngleConfig act_angles(const AngleConfig& a, const BraidWord& w);

std::optional<SignWitness> sign_equivalence(const GramMatrix& g, const GramMatrix& h,
                                            double tol = kDefaultTolerance);

struct FiniteOrbit {
  Int m;
};
struct InfiniteOrbit {};
struct RankOneOrbit {};
using OrbitFiniteness = std::variant<FiniteOrbit, InfiniteOrbit, RankOneOrbit>;

std::string to_string(const OrbitFiniteness& f);

OrbitFiniteness finite_orbit_test(const AngleConfig& a);
OrbitFiniteness finite_orbit_test(const std::vector<double>& angles, double tol = kDefaultTolerance,
                                  long max_denominator = kDefaultMaxDenominator);

KVector angles_to_k(const AngleConfig& a, const Int& m);

}  // namespace braidorbit

#pragma once

// Exact scalars, braid words, integer matrices and parameter vectors shared by
// every other module. All types are plain values.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidorbit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class GuardError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Integers and rationals

/// Least non-negative residue of a modulo m (m > 0).
Int floor_mod(const Int& a, const Int& m);

/// Floor division for a possibly negative numerator, b > 0.
Int floor_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Int& v);

/// Reduces an angle measured in units of pi into [0, 1).
Rational angle_normalize(const Rational& r);

/// Best continued-fraction approximation of x with denominator at most
/// max_denominator, returned only if it lies within tol of x.
std::optional<Rational> snap_to_rational(double x, double tol, long max_denominator);

// ---------------------------------------------------------------------------
// Braid words

/// A word in the generators of B_{n+1}. Letter +i is sigma_i, -i its inverse.
/// Letters act left to right: the first letter is applied first.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::size_t n) : n_(n) {}
  BraidWord(std::size_t n, std::vector<int> letters);

  std::size_t n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int exponent) const;

  BraidWord& append(int letter);
  BraidWord& append(const BraidWord& other);
  BraidWord& append_repeated(const BraidWord& other, const Int& times);

  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<int> letters_;
};

BraidWord parse_braid_word(std::string_view text, std::size_t n);

// ---------------------------------------------------------------------------
// Integer matrices

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntMatrix(std::size_t n, std::vector<Int> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  const std::vector<Int>& data() const { return data_; }

  IntMatrix transposed() const;
  IntMatrix pow(unsigned exponent) const;
  IntMatrix reduced_mod(const Int& m) const;
  std::vector<Int> apply(std::span<const Int> v) const;

  Int determinant() const;
  std::size_t rank() const;
  bool is_zero() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

// ---------------------------------------------------------------------------
// Parameter vectors

/// The parameters k_1..k_n, either over the integers or as residues mod m.
class KVector {
 public:
  KVector() = default;
  explicit KVector(std::vector<Int> entries, std::optional<Int> modulus = std::nullopt);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }
  const std::optional<Int>& modulus() const { return modulus_; }
  bool is_modular() const { return modulus_.has_value(); }
  bool is_zero() const;

  KVector negated() const;

  friend bool operator==(const KVector&, const KVector&) = default;

  /// "k1,k2,...,kn" with a " mod m" suffix for residues.
  std::string to_string() const;

 private:
  std::vector<Int> entries_;
  std::optional<Int> modulus_;
};

/// Parses "1,2,3" or "1,2,3 mod 5".
KVector parse_kvector(std::string_view text);

std::vector<Int> parse_int_list(std::string_view text);
std::string join(std::span<const Int> values, std::string_view sep = ",");

}  // namespace braidorbit

#include "braidorbit/core.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace braidorbit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_int(std::string_view token) {
  std::string_view t = trim(token);
  if (!is_integer_token(t)) throw ParseError("invalid integer '" + std::string(token) + "'");
  if (t.front() == '+') t.remove_prefix(1);
  return Int(std::string(t));
}

}  // namespace

Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(t)) throw ParseError("invalid rational '" + std::string(text) + "'");
    return Rational(parse_int(t));
  }
  auto num = trim(t.substr(0, slash));
  auto den = trim(t.substr(slash + 1));
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  Int d = parse_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(num), d);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational angle_normalize(const Rational& r) {
  const Int& num = numerator(r);
  const Int& den = denominator(r);
  return Rational(floor_mod(num, den), den);
}

std::optional<Rational> snap_to_rational(double x, double tol, long max_denominator) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  std::optional<Rational> best;
  auto consider = [&](long long hh, long long kk) {
    if (kk > max_denominator) return false;
    if (std::fabs(x - static_cast<double>(hh) / static_cast<double>(kk)) <= tol) {
      best = Rational(Int(hh), Int(kk));
      return true;
    }
    return false;
  };
  if (consider(h, k)) return best;
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    double inv = 1.0 / frac;
    long long a = static_cast<long long>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    long long h_next = a * h + h_prev;
    long long k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (consider(h, k)) return best;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

BraidWord::BraidWord(std::size_t n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0) throw ParseError("generator index 0 is not allowed");
    if (static_cast<std::size_t>(std::abs(l)) > n_)
      throw ParseError("generator index " + std::to_string(l) + " exceeds n=" + std::to_string(n_));
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out(n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

BraidWord BraidWord::power(int exponent) const {
  BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord out(n_);
  for (int e = 0; e < std::abs(exponent); ++e) out.append(base);
  return out;
}

BraidWord& BraidWord::append(int letter) {
  if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > n_)
    throw ParseError("generator index " + std::to_string(letter) + " exceeds n=" + std::to_string(n_));
  letters_.push_back(letter);
  return *this;
}

BraidWord& BraidWord::append(const BraidWord& other) {
  if (other.empty()) return *this;
  if (other.n_ > n_) throw DimensionError("cannot append a word on n=" + std::to_string(other.n_) +
                                          " to a word on n=" + std::to_string(n_));
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

BraidWord& BraidWord::append_repeated(const BraidWord& other, const Int& times) {
  for (Int t = 0; t < times; ++t) append(other);
  return *this;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, std::size_t n) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (!is_integer_token(token) || token.size() > 9)
      throw ParseError("invalid generator token '" + token + "'");
    int v = std::stoi(token);
    if (v == 0) throw ParseError("generator index 0 is not allowed (token '" + token + "')");
    if (static_cast<std::size_t>(std::abs(v)) > n)
      throw ParseError("generator index " + token + " exceeds n=" + std::to_string(n));
    letters.push_back(v);
  }
  return BraidWord(n, std::move(letters));
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t n, std::vector<Int> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n)
    throw DimensionError("matrix of dimension " + std::to_string(n) + " needs " +
                         std::to_string(n * n) + " entries");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::pow(unsigned exponent) const {
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::reduced_mod(const Int& m) const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = floor_mod(data_[i], m);
  return out;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != n_) throw DimensionError("vector length does not match matrix dimension");
  std::vector<Int> out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Int IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<Int> a = data_;
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * n_ + c]; };
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::size_t IntMatrix::rank() const {
  std::vector<Int> a = data_;
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * n_ + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_ && rank < n_; ++c) {
    std::size_t p = rank;
    while (p < n_ && at(p, c) == 0) ++p;
    if (p == n_) continue;
    for (std::size_t j = 0; j < n_; ++j) std::swap(at(rank, j), at(p, j));
    for (std::size_t i = rank + 1; i < n_; ++i) {
      if (at(i, c) == 0) continue;
      Int f = at(i, c), g = at(rank, c);
      for (std::size_t j = c; j < n_; ++j) at(i, j) = at(i, j) * g - at(rank, j) * f;
    }
    ++rank;
  }
  return rank;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix dimensions differ");
  const std::size_t n = a.n_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix dimensions differ");
  IntMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix dimensions differ");
  IntMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = -a.data_[i];
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).str();
    }
    out += ']';
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

KVector::KVector(std::vector<Int> entries, std::optional<Int> modulus)
    : entries_(std::move(entries)), modulus_(std::move(modulus)) {
  if (modulus_) {
    if (*modulus_ < 2) throw ParseError("modulus must be at least 2, got " + modulus_->str());
    for (auto& v : entries_) v = floor_mod(v, *modulus_);
  }
}

bool KVector::is_zero() const {
  for (const auto& v : entries_)
    if (v != 0) return false;
  return true;
}

KVector KVector::negated() const {
  std::vector<Int> e = entries_;
  for (auto& v : e) v = -v;
  return KVector(std::move(e), modulus_);
}

std::string KVector::to_string() const {
  std::string out = join(entries_);
  if (modulus_) out += " mod " + modulus_->str();
  return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::string_view t = trim(text);
  if (t.empty()) return out;
  while (true) {
    auto comma = t.find(',');
    out.push_back(parse_int(t.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    t.remove_prefix(comma + 1);
  }
  return out;
}

KVector parse_kvector(std::string_view text) {
  std::string_view t = trim(text);
  std::optional<Int> modulus;
  auto pos = t.find("mod");
  if (pos != std::string_view::npos) {
    modulus = parse_int(t.substr(pos + 3));
    t = t.substr(0, pos);
  }
  auto entries = parse_int_list(t);
  if (entries.empty()) throw ParseError("empty parameter vector");
  return KVector(std::move(entries), std::move(modulus));
}

std::string join(std::span<const Int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

}  // namespace braidorbit

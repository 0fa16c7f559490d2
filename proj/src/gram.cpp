#include "braidorbit/gram.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace braidorbit {

namespace {

// Folds an angle (units of pi) into [0, 1] without changing its cosine.
Rational fold(const Rational& r) {
  Rational t = r - Rational(2 * floor_div(numerator(r), 2 * denominator(r)));
  if (t > 1) t = Rational(2) - t;
  return t;
}

Rational mod2(const Rational& r) {
  return Rational(floor_mod(numerator(r), 2 * denominator(r)), denominator(r));
}

double cos_pi(double r) { return std::cos(std::numbers::pi * r); }

}  // namespace

TwoCosPi::TwoCosPi(const Rational& r) : angle_(fold(r)) {}

double TwoCosPi::value() const {
  if (angle_ == 0) return 2.0;
  if (angle_ == 1) return -2.0;
  if (angle_ == Rational(1, 2)) return 0.0;
  if (angle_ == Rational(1, 3)) return 1.0;
  if (angle_ == Rational(2, 3)) return -1.0;
  return 2.0 * cos_pi(static_cast<double>(angle_));
}

TwoCosPi TwoCosPi::operator-() const { return TwoCosPi(Rational(1) - angle_); }

// ---------------------------------------------------------------------------

AngleConfig::AngleConfig(std::vector<Rational> angles) : phi_(std::move(angles)) {
  for (auto& p : phi_) p = angle_normalize(p);
}

std::string AngleConfig::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    if (i) out += ',';
    out += braidorbit::to_string(phi_[i]);
  }
  return out;
}

AngleConfig parse_angles(std::string_view text) {
  std::vector<Rational> out;
  std::string s(text);
  std::stringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
  if (out.empty()) throw ParseError("empty angle list");
  return AngleConfig(std::move(out));
}

std::string SignWitness::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ',';
    out += lambda[i] > 0 ? "+1" : "-1";
  }
  return out;
}

// ---------------------------------------------------------------------------

GramMatrix GramMatrix::exact(std::size_t dim, std::vector<TwoCosPi> entries) {
  if (entries.size() != dim * dim) throw DimensionError("Gram matrix entry count mismatch");
  for (std::size_t i = 0; i < dim; ++i) {
    if (entries[i * dim + i] != TwoCosPi::two()) throw DimensionError("Gram diagonal must be 2");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i * dim + j] != entries[j * dim + i]) throw DimensionError("Gram matrix must be symmetric");
  }
  GramMatrix g;
  g.dim_ = dim;
  g.data_ = std::move(entries);
  return g;
}

GramMatrix GramMatrix::floating(std::size_t dim, std::vector<double> values) {
  if (values.size() != dim * dim) throw DimensionError("Gram matrix entry count mismatch");
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::fabs(values[i * dim + i] - 2.0) > 1e-12) throw DimensionError("Gram diagonal must be 2");
    for (std::size_t j = 0; j < i; ++j)
      if (std::fabs(values[i * dim + j] - values[j * dim + i]) > 1e-12)
        throw DimensionError("Gram matrix must be symmetric");
  }
  GramMatrix g;
  g.dim_ = dim;
  g.data_ = std::move(values);
  return g;
}

const TwoCosPi& GramMatrix::exact_entry(std::size_t i, std::size_t j) const {
  return std::get<std::vector<TwoCosPi>>(data_)[i * dim_ + j];
}

double GramMatrix::value(std::size_t i, std::size_t j) const {
  if (is_exact()) return exact_entry(i, j).value();
  return std::get<std::vector<double>>(data_)[i * dim_ + j];
}

std::string GramMatrix::to_string() const {
  std::ostringstream out;
  out << dim_;
  if (!is_exact()) out << std::setprecision(12);
  for (std::size_t i = 0; i + 1 < dim_; ++i) {
    out << '\n';
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (j > i + 1) out << ' ';
      if (is_exact())
        out << braidorbit::to_string(exact_entry(i, j).angle());
      else
        out << value(i, j);
    }
  }
  return out.str();
}

std::string GramMatrix::values_string(int precision) const {
  std::ostringstream out;
  out << std::setprecision(precision);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out << '\n';
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out << ' ';
      double v = value(i, j);
      out << (v == 0.0 ? 0.0 : v);
    }
  }
  return out.str();
}

GramMatrix parse_gram(std::string_view text, bool floating) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw ParseError("empty Gram matrix input");
  std::size_t dim = 0;
  try {
    dim = std::stoul(token);
  } catch (const std::exception&) {
    throw ParseError("invalid Gram dimension '" + token + "'");
  }
  if (dim == 0) throw ParseError("Gram dimension must be positive");
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() != dim * (dim - 1) / 2)
    throw ParseError("expected " + std::to_string(dim * (dim - 1) / 2) + " upper-triangle entries, got " +
                     std::to_string(tokens.size()));
  std::size_t t = 0;
  if (floating) {
    std::vector<double> v(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = 2.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j, ++t) {
        double x = 0;
        try {
          std::size_t used = 0;
          x = std::stod(tokens[t], &used);
          if (used != tokens[t].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError("invalid Gram entry '" + tokens[t] + "'");
        }
        v[i * dim + j] = v[j * dim + i] = x;
      }
    return GramMatrix::floating(dim, std::move(v));
  }
  std::vector<TwoCosPi> e(dim * dim, TwoCosPi::two());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++t) e[i * dim + j] = e[j * dim + i] = TwoCosPi(parse_rational(tokens[t]));
  return GramMatrix::exact(dim, std::move(e));
}

GramMatrix gram_from_angles(const AngleConfig& a) {
  const std::size_t d = a.size();
  std::vector<TwoCosPi> e(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e[i * d + j] = TwoCosPi(a[i] - a[j]);
  return GramMatrix::exact(d, std::move(e));
}

double max_minor3(const GramMatrix& g) {
  const std::size_t d = g.dim();
  double worst = 0;
  auto h = [&](std::size_t i, std::size_t j) { return g.value(i, j) / 2.0; };
  for (std::size_t r0 = 0; r0 < d; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < d; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < d; ++r2)
        for (std::size_t c0 = 0; c0 < d; ++c0)
          for (std::size_t c1 = c0 + 1; c1 < d; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < d; ++c2) {
              double m = h(r0, c0) * (h(r1, c1) * h(r2, c2) - h(r1, c2) * h(r2, c1)) -
                         h(r0, c1) * (h(r1, c0) * h(r2, c2) - h(r1, c2) * h(r2, c0)) +
                         h(r0, c2) * (h(r1, c0) * h(r2, c1) - h(r1, c1) * h(r2, c0));
              worst = std::max(worst, std::fabs(m));
            }
  return worst;
}

// ---------------------------------------------------------------------------

bool AngleExtraction::all_rational() const {
  return std::all_of(angles.begin(), angles.end(), [](const RecoveredAngle& a) { return a.exact.has_value(); });
}

AngleConfig AngleExtraction::config() const {
  std::vector<Rational> out;
  for (const auto& a : angles) {
    if (!a.exact) throw RankError("recovered angle " + std::to_string(a.value) + " is not rational");
    out.push_back(*a.exact);
  }
  return AngleConfig(std::move(out));
}

namespace {

AngleExtraction extract_exact(const GramMatrix& g) {
  const std::size_t d = g.dim();
  std::vector<Rational> phi(d);
  for (std::size_t i = 1; i < d; ++i) phi[i] = g.exact_entry(0, i).angle();

  std::size_t k = d;
  for (std::size_t i = 1; i < d; ++i)
    if (phi[i] != 0 && phi[i] != 1) {
      k = i;
      break;
    }
  if (k < d) {
    for (std::size_t i = 1; i < d; ++i) {
      if (i == k) continue;
      const TwoCosPi& e = g.exact_entry(k, i);
      if (e == TwoCosPi(phi[k] + phi[i]) && e != TwoCosPi(phi[k] - phi[i])) phi[i] = mod2(-phi[i]);
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (g.exact_entry(i, j) != TwoCosPi(phi[i] - phi[j]))
        throw RankError("Gram matrix has rank greater than 2 (entry " + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");

  AngleExtraction out;
  out.rank_one = (k == d);
  for (const auto& p : phi) {
    Rational t = mod2(p);
    int lambda = 1;
    if (t >= 1) {
      t -= 1;
      lambda = -1;
    }
    out.angles.push_back({static_cast<double>(t), t});
    out.signs.lambda.push_back(lambda);
  }
  return out;
}

AngleExtraction extract_float(const GramMatrix& g, double tol, long max_den) {
  const std::size_t d = g.dim();
  const double scale = 8.0;
  if (max_minor3(g) > tol * scale) throw RankError("Gram matrix has rank greater than 2");
  auto angle_of = [](double v) { return std::acos(std::clamp(v / 2.0, -1.0, 1.0)) / std::numbers::pi; };

  std::vector<double> phi(d, 0.0);
  for (std::size_t i = 1; i < d; ++i) phi[i] = angle_of(g.value(0, i));
  const double edge = std::sqrt(tol);
  std::size_t k = d;
  for (std::size_t i = 1; i < d; ++i)
    if (phi[i] > edge && phi[i] < 1.0 - edge) {
      k = i;
      break;
    }
  if (k < d) {
    for (std::size_t i = 1; i < d; ++i) {
      if (i == k) continue;
      double e = g.value(k, i);
      double minus = std::fabs(e - 2.0 * cos_pi(phi[k] - phi[i]));
      double plus = std::fabs(e - 2.0 * cos_pi(phi[k] + phi[i]));
      if (plus < minus) phi[i] = 2.0 - phi[i];
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (std::fabs(g.value(i, j) - 2.0 * cos_pi(phi[i] - phi[j])) > tol * scale)
        throw RankError("Gram matrix has rank greater than 2 (entry " + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")");

  AngleExtraction out;
  out.rank_one = (k == d);
  for (double p : phi) {
    double t = std::fmod(p, 2.0);
    if (t < 0) t += 2.0;
    int lambda = 1;
    if (t >= 1.0 - tol) {
      t = std::max(0.0, t - 1.0);
      lambda = -1;
    }
    RecoveredAngle ra{t, snap_to_rational(t, tol, max_den)};
    if (ra.exact && *ra.exact == 1) ra.exact = Rational(0);
    out.angles.push_back(ra);
    out.signs.lambda.push_back(lambda);
  }
  return out;
}

}  // namespace

AngleExtraction extract_angles(const GramMatrix& g, double tol, long max_denominator) {
  if (g.dim() == 0) throw DimensionError("empty Gram matrix");
  return g.is_exact() ? extract_exact(g) : extract_float(g, tol, max_denominator);
}

// ---------------------------------------------------------------------------

double KSigma::entry(std::size_t r, std::size_t c) const {
  const std::size_t a = index - 1, b = index;
  if (r == a && c == a) return corner;
  if ((r == a && c == b) || (r == b && c == a)) return 1.0;
  if (r == b && c == b) return 0.0;
  return r == c ? 1.0 : 0.0;
}

std::vector<double> KSigma::dense() const {
  std::vector<double> out(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] = entry(r, c);
  return out;
}

KSigma k_sigma(const GramMatrix& g, std::size_t i) {
  if (i < 1 || i + 1 > g.dim())
    throw DimensionError("generator index " + std::to_string(i) + " exceeds n=" + std::to_string(g.dim() - 1));
  KSigma k;
  k.dim = g.dim();
  k.index = i;
  if (g.is_exact()) k.corner_exact = -g.exact_entry(i - 1, i);
  k.corner = -g.value(i - 1, i);
  if (k.corner == 0.0) k.corner = 0.0;
  return k;
}

namespace {

// 2cos(pi a) - 2cos(pi b) 2cos(pi c), exact when the rank-2 identity holds.
TwoCosPi combine(const TwoCosPi& a, const TwoCosPi& b, const TwoCosPi& c) {
  const TwoCosPi diff(b.angle() - c.angle());
  const TwoCosPi sum(b.angle() + c.angle());
  if (a == diff) return -sum;
  if (a == sum) return -diff;
  throw RankError("Gram matrix leaves the rank-2 locus under the braid action");
}

void apply_exact(std::vector<TwoCosPi>& e, std::size_t d, int letter) {
  const std::size_t a = static_cast<std::size_t>(std::abs(letter)) - 1, b = a + 1;
  auto at = [&](std::size_t r, std::size_t c) -> TwoCosPi& { return e[r * d + c]; };
  const TwoCosPi g = at(a, b);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == a || j == b) continue;
    TwoCosPi ga = at(a, j), gb = at(b, j);
    TwoCosPi na, nb;
    if (letter > 0) {
      na = combine(gb, g, ga);
      nb = ga;
    } else {
      na = gb;
      nb = combine(ga, g, gb);
    }
    at(a, j) = at(j, a) = na;
    at(b, j) = at(j, b) = nb;
  }
  at(a, b) = at(b, a) = -g;
}

void apply_float(std::vector<double>& v, std::size_t d, int letter) {
  const std::size_t a = static_cast<std::size_t>(std::abs(letter)) - 1, b = a + 1;
  auto at = [&](std::size_t r, std::size_t c) -> double& { return v[r * d + c]; };
  const double g = at(a, b);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == a || j == b) continue;
    double ga = at(a, j), gb = at(b, j);
    double na = letter > 0 ? gb - g * ga : gb;
    double nb = letter > 0 ? ga : ga - g * gb;
    at(a, j) = at(j, a) = na;
    at(b, j) = at(j, b) = nb;
  }
  at(a, b) = at(b, a) = -g;
}

}  // namespace

GramMatrix act_gram(const GramMatrix& g, const BraidWord& w) {
  if (w.n() + 1 != g.dim() && !(w.empty() && w.n() == 0))
    throw DimensionError("word on n=" + std::to_string(w.n()) + " acting on a Gram matrix of dimension " +
                         std::to_string(g.dim()));
  GramMatrix out = g;
  const std::size_t d = g.dim();
  if (auto* e = std::get_if<std::vector<TwoCosPi>>(&out.data_)) {
    for (int l : w.letters()) apply_exact(*e, d, l);
  } else {
    auto& v = std::get<std::vector<double>>(out.data_);
    for (int l : w.letters()) apply_float(v, d, l);
  }
  return out;
}

AngleConfig act_angles(const AngleConfig& a, const BraidWord& w) {
  if (w.n() + 1 != a.size() && !(w.empty() && w.n() == 0))
    throw DimensionError("word on n=" + std::to_string(w.n()) + " acting on " + std::to_string(a.size()) +
                         " angles");
  std::vector<Rational> phi = a.angles();
  for (int l : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    Rational x = phi[i], y = phi[i + 1];
    if (l > 0) {
      phi[i] = 2 * x - y;
      phi[i + 1] = x;
    } else {
      phi[i] = y;
      phi[i + 1] = 2 * y - x;
    }
  }
  return AngleConfig(std::move(phi));
}

// ---------------------------------------------------------------------------

std::optional<SignWitness> sign_equivalence(const GramMatrix& g, const GramMatrix& h, double tol) {
  if (g.dim() != h.dim()) return std::nullopt;
  const std::size_t d = g.dim();
  const bool exact = g.is_exact() && h.is_exact();
  enum class Rel { Zero, Same, Opposite, Mismatch };
  auto relation = [&](std::size_t i, std::size_t j) {
    if (exact) {
      const TwoCosPi& x = g.exact_entry(i, j);
      const TwoCosPi& y = h.exact_entry(i, j);
      if (x.is_zero() && y.is_zero()) return Rel::Zero;
      if (x == y) return Rel::Same;
      if (x == -y) return Rel::Opposite;
      return Rel::Mismatch;
    }
    double x = g.value(i, j), y = h.value(i, j);
    if (std::fabs(x) <= tol && std::fabs(y) <= tol) return Rel::Zero;
    if (std::fabs(x - y) <= tol) return Rel::Same;
    if (std::fabs(x + y) <= tol) return Rel::Opposite;
    return Rel::Mismatch;
  };

  SignWitness w;
  w.lambda.assign(d, 0);
  for (std::size_t root = 0; root < d; ++root) {
    if (w.lambda[root] != 0) continue;
    w.lambda[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Rel r = relation(i, j);
        if (r == Rel::Mismatch) return std::nullopt;
        if (r == Rel::Zero) continue;
        int want = r == Rel::Same ? w.lambda[i] : -w.lambda[i];
        if (w.lambda[j] == 0) {
          w.lambda[j] = want;
          queue.push_back(j);
        } else if (w.lambda[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return w;
}

// ---------------------------------------------------------------------------

std::string to_string(const OrbitFiniteness& f) {
  if (auto* fin = std::get_if<FiniteOrbit>(&f)) return "finite m=" + fin->m.str();
  if (std::holds_alternative<RankOneOrbit>(f)) return "rank-one";
  return "infinite";
}

OrbitFiniteness finite_orbit_test(const AngleConfig& a) {
  Int m = 1;
  bool all_equal = true;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    Rational diff = angle_normalize(a[i + 1] - a[i]);
    if (diff != 0) all_equal = false;
    m = lcm(m, denominator(diff));
  }
  if (all_equal) return RankOneOrbit{};
  return FiniteOrbit{m};
}

OrbitFiniteness finite_orbit_test(const std::vector<double>& angles, double tol, long max_denominator) {
  Int m = 1;
  bool all_equal = true;
  for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
    double diff = std::fmod(angles[i + 1] - angles[i], 1.0);
    if (diff < 0) diff += 1.0;
    if (diff > 1.0 - tol) diff = 0.0;
    auto snapped = snap_to_rational(diff, tol, max_denominator);
    if (!snapped) return InfiniteOrbit{};
    Rational r = angle_normalize(*snapped);
    if (r != 0) all_equal = false;
    m = lcm(m, denominator(r));
  }
  if (all_equal) return RankOneOrbit{};
  return FiniteOrbit{m};
}

KVector angles_to_k(const AngleConfig& a, const Int& m) {
  if (m < 1) throw DimensionError("modulus must be positive");
  if (a.size() < 2) throw DimensionError("need at least two angles");
  std::vector<Int> k;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Rational scaled = Rational(m) * (a[i] - a[0]);
    if (denominator(scaled) != 1)
      throw DimensionError("angle differences are not multiples of 1/" + m.str());
    k.push_back(floor_mod(numerator(scaled), m));
  }
  if (m < 2) return KVector(std::move(k));
  return KVector(std::move(k), m);
}

}  // namespace braidorbit

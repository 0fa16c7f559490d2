#include "braidorbit/verify.hpp"

#include <algorithm>
#include <random>

#include "braidorbit/linear.hpp"

namespace braidorbit {

std::string RelationReport::to_string() const {
  std::string out = id + " " + std::to_string(n) + " " + (holds ? "holds" : "FAILS");
  if (!note.empty()) out += " " + note;
  return out;
}

bool all_hold(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

namespace {

RelationReport compare(std::string id, std::size_t n, const IntMatrix& lhs, const IntMatrix& rhs,
                       std::string note = {}) {
  RelationReport r;
  r.id = std::move(id);
  r.n = n;
  r.holds = lhs == rhs;
  if (!r.holds) r.defect = lhs - rhs;
  r.note = std::move(note);
  return r;
}

std::string idx(std::size_t a) { return "(" + std::to_string(a) + ")"; }
std::string idx(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

std::vector<RelationReport> verify_relations(std::size_t n, std::size_t kmax) {
  if (n < 2) throw DimensionError("relations need n >= 2");
  std::vector<IntMatrix> g(n + 1);
  for (std::size_t i = 1; i <= n; ++i) g[i] = generator_matrix(static_cast<int>(i), n);
  const IntMatrix id = IntMatrix::identity(n);
  std::vector<RelationReport> out;

  // Left-to-right words: the matrix of s_a s_b is M(b) M(a).
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(compare("braid" + idx(i), n, g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1]));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j) out.push_back(compare("commute" + idx(i, j), n, g[i] * g[j], g[j] * g[i]));
  for (std::size_t i = 1; i < n; ++i) {
    const IntMatrix pair = g[i + 1] * g[i];
    const IntMatrix triple = g[i] * g[i + 1] * g[i];
    out.push_back(compare("pair6" + idx(i), n, pair.pow(6), id));
    out.push_back(compare("triple4" + idx(i), n, triple.pow(4), id));
    out.push_back(compare("redundant" + idx(i), n, pair.pow(6), triple.pow(4)));
  }
  for (std::size_t k = 1; k <= kmax && 2 * k <= n; ++k)
    for (std::size_t i = 1; i + 2 * k - 1 <= n; ++i) {
      IntMatrix chain = id;
      for (std::size_t j = i; j <= i + 2 * k - 1; ++j) chain = g[j] * chain;
      out.push_back(compare("chain" + idx(i, k), n, chain.pow(static_cast<unsigned>(2 * (2 * k + 1))), id));
    }
  IntMatrix cox = id;
  for (std::size_t j = 1; j <= n; ++j) cox = g[j] * cox;
  const IntMatrix twist = cox.pow(static_cast<unsigned>(n + 1));
  const bool odd = n % 2 == 1;
  auto rep = compare("full-twist", n, twist, odd ? id : -id);
  rep.note = twist == id ? "full twist = I" : (twist == -id ? "full twist = -I" : "full twist is not +-I");
  out.push_back(std::move(rep));
  return out;
}

std::vector<RelationReport> verify_symplectic(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw DimensionError("symplectic check needs n >= 2");
  const IntMatrix j = j_matrix(n);
  std::vector<RelationReport> out;
  const bool odd = n % 2 == 1;
  IntMatrix defect_form(n);
  defect_form(0, n - 1) = 1;
  defect_form(n - 1, 0) = -1;

  for (std::size_t i = 1; i <= n; ++i) {
    const IntMatrix m = frame_action(BraidWord(n, {static_cast<int>(i)}), n, Frame::X);
    const IntMatrix pulled = m.transposed() * j * m;
    if (odd && i == 1) {
      out.push_back(compare("symplectic-defect(1)", n, pulled - j, defect_form, "defect = x1*yn - xn*y1"));
    } else {
      out.push_back(compare("symplectic" + idx(i), n, pulled, j));
    }
  }
  if (odd) {
    const IntMatrix m = frame_action(BraidWord(n, {1}), n, Frame::X);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-50, 50);
    bool ok = true;
    for (std::size_t t = 0; t < samples && ok; ++t) {
      std::vector<Int> x(n), y(n);
      for (auto& v : x) v = dist(rng);
      for (auto& v : y) v = dist(rng);
      Int lhs = eval_J(m.apply(x), m.apply(y)) - eval_J(x, y);
      ok = lhs == x[0] * y[n - 1] - x[n - 1] * y[0];
    }
    RelationReport r;
    r.id = "symplectic-defect-samples";
    r.n = n;
    r.holds = ok;
    r.note = std::to_string(samples) + " random pairs";
    out.push_back(std::move(r));

    const auto basis = canonical_basis(n);
    std::vector<Int> row(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r2 = 0; r2 < n; ++r2) row[c] += (*basis.kernel)[r2] * j(r2, c);
    RelationReport k;
    k.id = "kernel";
    k.n = n;
    k.holds = std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; });
    k.note = "J(kernel, .) = 0";
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<RelationReport> verify_transvections(std::size_t n) {
  std::vector<RelationReport> out;
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const IntMatrix d = generator_matrix(static_cast<int>(i), n) - id;
    RelationReport r = compare("transvection" + idx(i), n, d * d, IntMatrix(n));
    const std::size_t rank = d.rank();
    if (rank != 1) r.holds = false;
    r.note = "rank " + std::to_string(rank);
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix transvection_correspondence(const IntMatrix& input, Correspondence direction) {
  const std::size_t n = input.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Int want = direction == Correspondence::GramToSkew ? 2 : 0;
    if (input(i, i) != want)
      throw DimensionError(direction == Correspondence::GramToSkew ? "Gram matrix needs diagonal 2"
                                                                   : "skew matrix needs zero diagonal");
    for (std::size_t j = 0; j < i; ++j) {
      const bool ok = direction == Correspondence::GramToSkew ? input(i, j) == input(j, i)
                                                              : input(i, j) == -input(j, i);
      if (!ok)
        throw DimensionError(direction == Correspondence::GramToSkew ? "Gram matrix must be symmetric"
                                                                     : "matrix must be antisymmetric");
    }
  }
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s(i, j) = input(i, j);
  return direction == Correspondence::GramToSkew ? s - s.transposed() : s + s.transposed();
}

}  // namespace braidorbit

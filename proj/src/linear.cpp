#include "braidorbit/linear.hpp"

namespace braidorbit {

namespace {

std::vector<Int> k_to_x(std::span<const Int> k) {
  std::vector<Int> x(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) x[i] = k[i] - (i ? x[i - 1] : Int(0));
  return x;
}

std::vector<Int> x_to_k(std::span<const Int> x) {
  std::vector<Int> k(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) k[i] = x[i] + (i ? x[i - 1] : Int(0));
  return k;
}

std::vector<Int> x_to_pq(std::span<const Int> x) {
  const std::size_t n = x.size(), s = n / 2;
  auto X = [&](std::size_t j) { return j >= 1 && j <= n ? x[j - 1] : Int(0); };
  std::vector<Int> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= s; ++i) {
    out.push_back(X(2 * i - 1) - X(2 * i + 1));
    out.push_back(X(2 * i));
  }
  if (n % 2) out.push_back(X(n));
  return out;
}

std::vector<Int> pq_to_x(std::span<const Int> v) {
  const std::size_t n = v.size(), s = n / 2;
  std::vector<Int> x(n);
  Int tail = n % 2 ? v[n - 1] : Int(0);
  if (n % 2) x[n - 1] = tail;
  for (std::size_t i = s; i >= 1; --i) {
    tail += v[2 * i - 2];
    x[2 * i - 2] = tail;
    x[2 * i - 1] = v[2 * i - 1];
  }
  return x;
}

std::vector<Int> pq_to_tilde(std::span<const Int> v) {
  const std::size_t n = v.size(), s = n / 2;
  std::vector<Int> out(n);
  Int acc = 0;
  for (std::size_t i = s; i >= 1; --i) {
    acc += v[2 * i - 2];
    out[2 * i - 2] = acc;
  }
  for (std::size_t i = 1; i <= s; ++i) out[2 * i - 1] = v[2 * i - 1] - (i > 1 ? v[2 * i - 3] : Int(0));
  if (n % 2) out[n - 1] = v[n - 1];
  return out;
}

std::vector<Int> tilde_to_pq(std::span<const Int> v) {
  const std::size_t n = v.size(), s = n / 2;
  std::vector<Int> out(n);
  Int acc = 0;
  for (std::size_t i = 1; i <= s; ++i) {
    out[2 * i - 2] = v[2 * i - 2] - (i < s ? v[2 * i] : Int(0));
    acc += v[2 * i - 1];
    out[2 * i - 1] = acc;
  }
  if (n % 2) out[n - 1] = v[n - 1];
  return out;
}

int rank_of(Frame f) {
  switch (f) {
    case Frame::K: return 0;
    case Frame::X: return 1;
    case Frame::PQ: return 2;
    case Frame::Tilde: return 3;
  }
  return 0;
}

}  // namespace

Frame parse_frame(std::string_view name) {
  if (name == "K" || name == "k") return Frame::K;
  if (name == "X" || name == "x") return Frame::X;
  if (name == "PQ" || name == "pq") return Frame::PQ;
  if (name == "TILDE" || name == "tilde" || name == "Tilde") return Frame::Tilde;
  throw ParseError("unknown frame '" + std::string(name) + "'");
}

std::string to_string(Frame f) {
  switch (f) {
    case Frame::K: return "K";
    case Frame::X: return "X";
    case Frame::PQ: return "PQ";
    case Frame::Tilde: return "TILDE";
  }
  return "?";
}

std::vector<Int> transform(std::span<const Int> v, Frame from, Frame to) {
  std::vector<Int> cur(v.begin(), v.end());
  int r = rank_of(from);
  const int target = rank_of(to);
  while (r < target) {
    if (r == 0) cur = k_to_x(cur);
    else if (r == 1) cur = x_to_pq(cur);
    else cur = pq_to_tilde(cur);
    ++r;
  }
  while (r > target) {
    if (r == 3) cur = tilde_to_pq(cur);
    else if (r == 2) cur = pq_to_x(cur);
    else cur = x_to_k(cur);
    --r;
  }
  return cur;
}

IntMatrix frame_matrix(Frame f, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Int> e(n);
    e[c] = 1;
    auto col = transform(e, Frame::K, f);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

// ---------------------------------------------------------------------------

void act_letter(std::vector<Int>& k, int letter) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter));
  if (letter == 0 || i > k.size())
    throw DimensionError("generator index " + std::to_string(letter) + " exceeds n=" + std::to_string(k.size()));
  if (i == 1) {
    for (std::size_t j = 1; j < k.size(); ++j) {
      if (letter > 0) k[j] += k[0];
      else k[j] -= k[0];
    }
    return;
  }
  Int& a = k[i - 2];
  Int& b = k[i - 1];
  if (letter > 0) {
    Int na = 2 * a - b;
    b = a;
    a = std::move(na);
  } else {
    Int nb = 2 * b - a;
    a = b;
    b = std::move(nb);
  }
}

std::vector<Int> act_k(const BraidWord& w, std::vector<Int> k) {
  for (int l : w.letters()) act_letter(k, l);
  return k;
}

KVector act_k(const BraidWord& w, const KVector& k) {
  std::vector<Int> v = k.entries();
  if (!k.modulus()) return KVector(act_k(w, std::move(v)));
  const Int& m = *k.modulus();
  for (int l : w.letters()) {
    act_letter(v, l);
    for (auto& e : v) e = floor_mod(e, m);
  }
  return KVector(std::move(v), m);
}

void act_letter_mod(std::span<std::uint32_t> k, int letter, std::uint32_t m) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter));
  if (i == 1) {
    const std::uint64_t k0 = letter > 0 ? k[0] : (m - k[0]) % m;
    for (std::size_t j = 1; j < k.size(); ++j) k[j] = static_cast<std::uint32_t>((k[j] + k0) % m);
    return;
  }
  const std::uint64_t a = k[i - 2], b = k[i - 1];
  if (letter > 0) {
    k[i - 2] = static_cast<std::uint32_t>((2 * a + m - b) % m);
    k[i - 1] = static_cast<std::uint32_t>(a);
  } else {
    k[i - 2] = static_cast<std::uint32_t>(b);
    k[i - 1] = static_cast<std::uint32_t>((2 * b + m - a) % m);
  }
}

IntMatrix generator_matrix(int letter, std::size_t n) { return rho_matrix(BraidWord(n, {letter}), n); }

IntMatrix rho_matrix(const BraidWord& w, std::size_t n) {
  IntMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Int> e(n);
    e[c] = 1;
    auto col = act_k(w, std::move(e));
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

IntMatrix frame_action(const BraidWord& w, std::size_t n, Frame f) {
  IntMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Int> e(n);
    e[c] = 1;
    auto col = transform(act_k(w, transform(e, f, Frame::K)), Frame::K, f);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return m;
}

// ---------------------------------------------------------------------------

IntMatrix j_matrix(std::size_t n) {
  IntMatrix j(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

Int eval_J(std::span<const Int> u, std::span<const Int> v) {
  if (u.size() != v.size()) throw DimensionError("J arguments differ in length");
  Int total = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) total += u[i] * v[i + 1] - u[i + 1] * v[i];
  return total;
}

CanonicalBasis canonical_basis(std::size_t n) {
  CanonicalBasis b;
  const std::size_t s = n / 2;
  for (std::size_t i = 1; i <= s; ++i) {
    std::vector<Int> q(n), p(n);
    for (std::size_t j = 1; j <= 2 * i - 1; j += 2) q[j - 1] = 1;
    p[2 * i - 1] = 1;
    b.q.push_back(std::move(q));
    b.p.push_back(std::move(p));
  }
  if (n % 2) {
    std::vector<Int> k(n);
    for (std::size_t j = 1; j <= n; j += 2) k[j - 1] = 1;
    b.kernel = std::move(k);
  }
  return b;
}

// ---------------------------------------------------------------------------

Composite parse_composite(std::string_view name) {
  if (name == "U") return Composite::U;
  if (name == "V") return Composite::V;
  if (name == "Z") return Composite::Z;
  if (name == "Vlong" || name == "VLong" || name == "VLONG") return Composite::VLong;
  throw ParseError("unknown composite '" + std::string(name) + "'");
}

BraidWord composite_generator(std::size_t n, Composite kind, std::size_t i) {
  const int a = static_cast<int>(i);
  auto need = [&](std::size_t top, const char* name) {
    if (i < 1 || top > n)
      throw DimensionError(std::string(name) + "_" + std::to_string(i) + " needs generators up to " +
                           std::to_string(top) + " but n=" + std::to_string(n));
  };
  switch (kind) {
    case Composite::U:
      need(2 * i + 1, "U");
      return BraidWord(n, {2 * a, 2 * a + 1, 2 * a, 2 * a, 2 * a + 1, 2 * a});
    case Composite::V:
      need(2 * i, "V");
      return BraidWord(n, {2 * a - 1, 2 * a, 2 * a - 1, 2 * a - 1, 2 * a, 2 * a - 1});
    case Composite::Z:
      need(2 * i + 2, "Z");
      return BraidWord(n, {2 * a + 1, 2 * a, 2 * a + 2, 2 * a + 1});
    case Composite::VLong: {
      if (n < 1) throw DimensionError("VLong needs n >= 1");
      std::vector<int> letters;
      for (int j = 1; j <= static_cast<int>(n); ++j) letters.push_back(j);
      for (int j = static_cast<int>(n) - 1; j >= 1; --j) letters.push_back(-j);
      return BraidWord(n, std::move(letters));
    }
  }
  return BraidWord(n);
}

}  // namespace braidorbit

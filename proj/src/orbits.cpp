#include "braidorbit/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "braidorbit/linear.hpp"

namespace braidorbit {

std::uint64_t guard_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("BRAIDORBIT_GUARD");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (!end || *end != '\0' || v == 0) throw ParseError(std::string("invalid BRAIDORBIT_GUARD '") + env + "'");
  return v;
}

namespace {

std::vector<int> default_letters(std::size_t n) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(n); ++i) out.push_back(i);
  for (int i = 1; i <= static_cast<int>(n); ++i) out.push_back(-i);
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

std::uint32_t to_u32_modulus(const KVector& k) {
  if (!k.modulus()) throw DimensionError("orbit enumeration needs a modulus");
  if (*k.modulus() > Int(1u << 30)) throw GuardError("modulus too large for enumeration");
  return static_cast<std::uint32_t>(*k.modulus());
}

}  // namespace

std::uint32_t encode_vector(const std::vector<std::uint32_t>& k, std::uint32_t m) {
  std::uint64_t code = 0;
  for (auto v : k) code = code * m + v;
  return static_cast<std::uint32_t>(code);
}

std::vector<std::uint32_t> decode_vector(std::uint32_t code, std::size_t n, std::uint32_t m) {
  std::vector<std::uint32_t> k(n);
  for (std::size_t i = n; i-- > 0;) {
    k[i] = code % m;
    code /= m;
  }
  return k;
}

std::vector<KVector> bfs_orbit(const KVector& k, const std::vector<int>& letters) {
  const std::uint32_t m = to_u32_modulus(k);
  const std::size_t n = k.size();
  const std::vector<int> order = letters.empty() ? default_letters(n) : letters;
  for (int l : order)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > n)
      throw DimensionError("generator index " + std::to_string(l) + " exceeds n=" + std::to_string(n));
  const std::uint64_t guard = guard_from_env(kVectorGuard);

  using State = std::vector<std::uint32_t>;
  State start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<std::uint32_t>(k[i]);
  std::set<State> seen{start};
  std::deque<State> queue{start};
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    for (int l : order) {
      State next = cur;
      act_letter_mod(next, l, m);
      if (seen.insert(next).second) {
        if (seen.size() > guard) throw GuardError("orbit exceeds the vector guard of " + std::to_string(guard));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<KVector> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(std::vector<Int>(s.begin(), s.end()), Int(m));
  return out;
}

// ---------------------------------------------------------------------------

KVector OrbitTable::decode(std::uint32_t code) const {
  auto v = decode_vector(code, n, m);
  return KVector(std::vector<Int>(v.begin(), v.end()), Int(m));
}

std::vector<std::size_t> OrbitTable::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.codes.size());
  return out;
}

std::string OrbitTable::to_text() const {
  std::string out = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " vectors=" + std::to_string(total) +
                    " orbits=" + std::to_string(orbits.size()) + "\n";
  out += "id\tsize\tsignature\trepresentative\n";
  for (const auto& o : orbits)
    out += std::to_string(o.id) + "\t" + std::to_string(o.codes.size()) + "\t" + o.signature.to_string() + "\t" +
           join(o.representative.entries()) + "\n";
  for (const auto& f : findings) out += "finding: " + f + "\n";
  const bool ok = signatures_constant && signatures_injective;
  out += std::string("signature↔orbit bijection: ") + (ok ? "OK" : "VIOLATED") + "\n";
  return out;
}

std::string OrbitTable::to_json_lines() const {
  std::string out;
  auto opt = [](const std::optional<Int>& v) -> nlohmann::json {
    if (!v) return nullptr;
    return v->str();
  };
  for (const auto& o : orbits) {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["id"] = o.id;
    j["size"] = o.codes.size();
    j["gamma"] = o.signature.gamma.str();
    j["alpha"] = opt(o.signature.alpha);
    j["delta"] = opt(o.signature.delta);
    j["x"] = opt(o.signature.x);
    j["signature"] = o.signature.to_string();
    j["representative"] = join(o.representative.entries());
    out += j.dump() + "\n";
  }
  return out;
}

OrbitTable classify_space(std::size_t n, std::uint32_t m, std::uint64_t guard) {
  if (m < 2) throw DimensionError("modulus must be at least 2");
  if (n < 1) throw DimensionError("n must be positive");
  const std::uint64_t total = checked_power(m, n, guard);
  if (total > guard)
    throw GuardError("m^n exceeds the vector guard of " + std::to_string(guard));
  if (total > 0xFFFFFFFFull) throw GuardError("m^n does not fit the enumeration index");

  OrbitTable table;
  table.n = n;
  table.m = m;
  table.total = total;
  const std::vector<int> letters = default_letters(n);
  std::vector<std::int32_t> orbit_of(total, -1);
  std::vector<std::uint32_t> cur(n);

  for (std::uint64_t code = 0; code < total; ++code) {
    if (orbit_of[code] >= 0) continue;
    const auto id = static_cast<std::int32_t>(table.orbits.size());
    OrbitEntry entry;
    entry.id = static_cast<std::size_t>(id);
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(code)};
    orbit_of[code] = id;
    while (!queue.empty()) {
      const std::uint32_t c = queue.front();
      queue.pop_front();
      entry.codes.push_back(c);
      const auto base = decode_vector(c, n, m);
      for (int l : letters) {
        cur = base;
        act_letter_mod(cur, l, m);
        const std::uint32_t nc = encode_vector(cur, m);
        if (orbit_of[nc] < 0) {
          orbit_of[nc] = id;
          queue.push_back(nc);
        }
      }
    }
    std::sort(entry.codes.begin(), entry.codes.end());
    entry.representative = table.decode(entry.codes.front());
    entry.signature = signature(entry.representative);
    for (auto c : entry.codes) {
      OrbitSignature sig = signature(table.decode(c));
      if (!signatures_equal(sig, entry.signature)) {
        table.signatures_constant = false;
        table.findings.push_back("orbit " + std::to_string(id) + " is not signature-constant: " +
                                 table.decode(c).to_string() + " has " + sig.to_string());
        break;
      }
    }
    table.orbits.push_back(std::move(entry));
  }

  for (std::size_t a = 0; a < table.orbits.size(); ++a)
    for (std::size_t b = a + 1; b < table.orbits.size(); ++b)
      if (signatures_equal(table.orbits[a].signature, table.orbits[b].signature)) {
        table.signatures_injective = false;
        table.findings.push_back("orbits " + std::to_string(a) + " and " + std::to_string(b) +
                                 " share the signature " + table.orbits[a].signature.to_string());
      }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

using Packed = std::string;

Packed pack(const IntMatrix& m, std::uint32_t q) {
  Packed p(m.dim() * m.dim(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<char>(static_cast<std::uint8_t>(floor_mod(m.data()[i], q)));
  return p;
}

Packed multiply(const Packed& a, const Packed& b, std::size_t n, std::uint32_t q) {
  Packed out(n * n, '\0');
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < n; ++k)
        acc += static_cast<std::uint8_t>(a[i * n + k]) * static_cast<std::uint32_t>(static_cast<std::uint8_t>(b[k * n + j]));
      out[i * n + j] = static_cast<char>(acc % q);
    }
  return out;
}

Packed packed_identity(std::size_t n) {
  Packed p(n * n, '\0');
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = 1;
  return p;
}

std::unordered_set<Packed> closure(const std::vector<IntMatrix>& generators, std::uint32_t q, std::uint64_t guard) {
  if (q < 2 || q > 255) throw DimensionError("closure modulus must lie in 2..255");
  if (generators.empty()) throw DimensionError("no generators");
  const std::size_t n = generators.front().dim();
  std::vector<Packed> gens;
  for (const auto& g : generators) gens.push_back(pack(g, q));
  std::unordered_set<Packed> seen{packed_identity(n)};
  std::deque<Packed> queue{packed_identity(n)};
  while (!queue.empty()) {
    Packed cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Packed next = multiply(cur, g, n, q);
      if (seen.insert(next).second) {
        if (seen.size() > guard) throw GuardError("group exceeds the element guard of " + std::to_string(guard));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::vector<IntMatrix> representation_generators(std::size_t n) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(generator_matrix(static_cast<int>(i), n));
  return out;
}

Int factorial(std::size_t k) {
  Int f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

GroupOrder closure_order(const std::vector<IntMatrix>& generators, std::uint32_t q, std::uint64_t guard) {
  GroupOrder g;
  g.n = generators.empty() ? 0 : generators.front().dim();
  g.modulus = q;
  g.generator_count = generators.size();
  g.order = closure(generators, q, guard).size();
  return g;
}

GroupOrder representation_order(std::size_t n, std::uint32_t q, std::uint64_t guard) {
  return closure_order(representation_generators(n), q, guard);
}

IntMatrix permutation_matrix_mod2(const std::vector<std::size_t>& pi) {
  const std::size_t n = pi.size() - 1;
  IntMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m(i - 1, j - 1) = ((pi[j] == i) + (pi[j] == 0)) % 2;
  return m;
}

Mod2Report mod2_symmetric_group_check(std::size_t n, std::uint64_t guard) {
  if (n < 1 || n > 7) throw GuardError("mod-2 check supports 1 <= n <= 7");
  Mod2Report rep;
  const auto gens = representation_generators(n);
  const auto group = closure(gens, 2, guard);
  rep.group.n = n;
  rep.group.modulus = 2;
  rep.group.generator_count = n;
  rep.group.order = group.size();
  rep.expected = factorial(n + 1);

  rep.generators_match = true;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> pi(n + 1);
    std::iota(pi.begin(), pi.end(), 0);
    std::swap(pi[i - 1], pi[i]);
    if (permutation_matrix_mod2(pi) != gens[i - 1].reduced_mod(2)) rep.generators_match = false;
  }

  std::unordered_set<Packed> images;
  std::vector<std::size_t> pi(n + 1);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    images.insert(pack(permutation_matrix_mod2(pi), 2));
  } while (std::next_permutation(pi.begin(), pi.end()));
  rep.same_set = images == group;
  return rep;
}

std::string CongruenceReport::to_string() const {
  return "n=" + std::to_string(n) + " |G mod " + std::to_string(modulus) + "|=" + order.str() + " |G mod 2|=" +
         order_mod2.str() + " kernel in G=" + kernel_in_group.str() + " ambient kernel=" + ambient_kernel.str() +
         (contains_kernel() ? " (contains the full mod-2 kernel at this level; evidence, not a proof)"
                            : " (kernel NOT contained)");
}

CongruenceReport congruence_check(std::size_t n, std::uint32_t modulus, std::uint64_t guard) {
  if (modulus % 2 != 0 || modulus < 4) throw DimensionError("congruence check needs an even modulus >= 4");
  if (n < 1 || n > 6) throw GuardError("congruence check supports n <= 6");
  CongruenceReport rep;
  rep.n = n;
  rep.modulus = modulus;
  const auto gens = representation_generators(n);
  const auto group = closure(gens, modulus, guard);
  rep.order = group.size();
  rep.order_mod2 = closure(gens, 2, guard).size();

  Int in_group = 0;
  for (const auto& g : group) {
    bool unit = true;
    for (std::size_t i = 0; i < n && unit; ++i)
      for (std::size_t j = 0; j < n && unit; ++j)
        unit = static_cast<std::uint8_t>(g[i * n + j]) % 2 == (i == j ? 1u : 0u);
    if (unit) ++in_group;
  }
  rep.kernel_in_group = in_group;

  // Elements I + (modulus/2) A of the ambient group, counted in X coordinates.
  if (n * n > 24) throw GuardError("ambient kernel enumeration too large");
  const std::size_t s2 = n % 2 ? n - 1 : n;
  const IntMatrix j = j_matrix(s2);
  const std::uint32_t half = modulus / 2;
  Int ambient = 0;
  for (std::uint64_t mask = 0; mask < (1ull << (n * n)); ++mask) {
    IntMatrix a = IntMatrix::identity(n);
    for (std::size_t b = 0; b < n * n; ++b)
      if (mask >> b & 1) a(b / n, b % n) += half;
    if (n % 2) {
      bool last_row = true;
      for (std::size_t c = 0; c + 1 < n; ++c) last_row = last_row && a(n - 1, c) == 0;
      if (!last_row || a(n - 1, n - 1) != 1) continue;
    }
    IntMatrix block(s2);
    for (std::size_t r = 0; r < s2; ++r)
      for (std::size_t c = 0; c < s2; ++c) block(r, c) = a(r, c);
    if ((block.transposed() * j * block - j).reduced_mod(modulus).is_zero()) ++ambient;
  }
  rep.ambient_kernel = ambient;
  return rep;
}

Int sp_order_by_enumeration(std::size_t two_s, std::uint32_t q, std::uint64_t guard) {
  if (two_s % 2) throw DimensionError("symplectic dimension must be even");
  const std::size_t cells = two_s * two_s;
  const std::uint64_t total = checked_power(q, cells, guard);
  if (total > guard) throw GuardError("enumeration exceeds the guard of " + std::to_string(guard));
  std::vector<int> jm(cells, 0);
  for (std::size_t i = 0; i + 1 < two_s; ++i) {
    jm[i * two_s + i + 1] = 1;
    jm[(i + 1) * two_s + i] = -1;
  }
  const int qi = static_cast<int>(q);
  std::vector<int> a(cells, 0), ja(cells);
  Int count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t c = 0; c < cells; ++c) {
      a[c] = static_cast<int>(t % q);
      t /= q;
    }
    for (std::size_t r = 0; r < two_s; ++r)
      for (std::size_t c = 0; c < two_s; ++c) {
        int acc = 0;
        for (std::size_t k = 0; k < two_s; ++k) acc += jm[r * two_s + k] * a[k * two_s + c];
        ja[r * two_s + c] = acc;
      }
    bool ok = true;
    for (std::size_t r = 0; r < two_s && ok; ++r)
      for (std::size_t c = 0; c < two_s && ok; ++c) {
        int acc = 0;
        for (std::size_t k = 0; k < two_s; ++k) acc += a[k * two_s + r] * ja[k * two_s + c];
        ok = ((acc - jm[r * two_s + c]) % qi + qi) % qi == 0;
      }
    if (ok) ++count;
  }
  return count;
}

Int sp_order_formula(std::size_t s, std::uint32_t p) {
  Int order = pow(Int(p), static_cast<unsigned>(s * s));
  for (std::size_t k = 1; k <= s; ++k) order *= pow(Int(p), static_cast<unsigned>(2 * k)) - 1;
  return order;
}

SubspaceScan invariant_subspace_scan(std::size_t n) {
  if (n < 1 || n > 6) throw GuardError("subspace scan supports 1 <= n <= 6");
  const std::uint32_t size = 1u << n;
  // Generator images mod 2 as maps on masks.
  std::vector<std::vector<std::uint32_t>> maps;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint32_t> f(size);
    for (std::uint32_t v = 0; v < size; ++v) {
      std::vector<std::uint32_t> k(n);
      for (std::size_t b = 0; b < n; ++b) k[b] = v >> b & 1u;
      act_letter_mod(k, static_cast<int>(i), 2);
      std::uint32_t w = 0;
      for (std::size_t b = 0; b < n; ++b) w |= k[b] << b;
      f[v] = w;
    }
    maps.push_back(std::move(f));
  }
  // A subspace is stored as the bitset of its elements.
  auto span_with = [&](std::uint64_t set, std::uint32_t v) {
    std::uint64_t out = set;
    for (std::uint32_t u = 0; u < size; ++u)
      if (set >> u & 1ull) out |= 1ull << (u ^ v);
    return out;
  };
  std::set<std::uint64_t> all{1ull};
  std::deque<std::uint64_t> queue{1ull};
  while (!queue.empty()) {
    std::uint64_t s = queue.front();
    queue.pop_front();
    for (std::uint32_t v = 1; v < size; ++v)
      if (!(s >> v & 1ull)) {
        std::uint64_t t = span_with(s, v);
        if (all.insert(t).second) queue.push_back(t);
      }
  }
  SubspaceScan scan;
  scan.n = n;
  scan.checked = all.size();
  const std::uint64_t full = size == 64 ? ~0ull : ((1ull << size) - 1);
  for (std::uint64_t s : all) {
    if (s == 1ull || s == full) continue;
    bool invariant = true;
    for (const auto& f : maps)
      for (std::uint32_t u = 0; u < size && invariant; ++u)
        if ((s >> u & 1ull) && !(s >> f[u] & 1ull)) invariant = false;
    if (!invariant) continue;
    std::vector<std::uint32_t> elems;
    for (std::uint32_t u = 0; u < size; ++u)
      if (s >> u & 1ull) elems.push_back(u);
    scan.invariant.push_back(std::move(elems));
  }
  return scan;
}

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw ParseError("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

Int index_counts(std::size_t s, Parity parity) {
  if (s < 1) throw DimensionError("s must be at least 1");
  const unsigned e = static_cast<unsigned>(parity == Parity::Even ? s * s : s * s + 2 * s);
  Int num = pow(Int(2), e);
  for (std::size_t k = 1; k <= s; ++k) num *= pow(Int(2), static_cast<unsigned>(2 * k)) - 1;
  const Int den = factorial(parity == Parity::Even ? 2 * s + 1 : 2 * s + 2);
  if (num % den != 0)
    throw Error("index formula gives the non-integer " + num.str() + "/" + den.str() + " for s=" + std::to_string(s));
  return num / den;
}

}  // namespace braidorbit

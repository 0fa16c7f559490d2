#include "braidorbit/invariants.hpp"

namespace braidorbit {

std::string OrbitSignature::to_string() const {
  auto opt = [](const std::optional<Int>& v) { return v ? v->str() : std::string("-"); };
  return "gamma=" + gamma.str() + ", alpha=" + opt(alpha) + ", delta=" + opt(delta) + ", x=" + opt(x);
}

OrbitSignature signature(const KVector& k) {
  OrbitSignature sig;
  sig.n = k.size();
  sig.modulus = k.modulus();
  const std::size_t s = sig.n / 2;

  Int g = 0;
  for (const auto& v : k.entries()) g = gcd(g, v);
  if (sig.n % 2) {
    Int x = 0;
    for (std::size_t i = 0; i < sig.n; ++i) x += (i % 2 ? -k[i] : k[i]);
    sig.x = k.modulus() ? floor_mod(x, *k.modulus()) : x;
  }
  if (g == 0) return sig;
  if (k.modulus()) {
    g = gcd(g, *k.modulus());
    if ((*k.modulus() / g) % 2 != 0) {
      sig.gamma = g;
      return sig;
    }
  }
  sig.gamma = g;

  Int alpha = 0;
  for (const auto& v : k.entries())
    if (((v / g) % 2) != 0) ++alpha;
  sig.alpha = alpha;
  const Int shift = sig.n % 2 ? Int(2 * s + 2) : Int(2 * s + 1);
  sig.delta = abs(2 * alpha - shift);
  return sig;
}

bool signatures_equal(const OrbitSignature& a, const OrbitSignature& b, SignConvention convention) {
  if (a.n != b.n || a.modulus != b.modulus) throw DimensionError("signatures come from different contexts");
  if (a.gamma != b.gamma || a.delta != b.delta) return false;
  if (a.x.has_value() != b.x.has_value()) return false;
  if (!a.x) return true;
  if (convention == SignConvention::UpToSign && !a.modulus) return abs(*a.x) == abs(*b.x);
  return *a.x == *b.x;
}

}  // namespace braidorbit

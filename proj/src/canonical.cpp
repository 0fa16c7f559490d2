#include "braidorbit/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "braidorbit/linear.hpp"

namespace braidorbit {

namespace {

using Vec = std::vector<Int>;

constexpr std::size_t kMaxIterations = 1'000'000;

struct Moves {
  std::size_t n = 0, s = 0;
  std::vector<BraidWord> qmove, pmove, neg, z;  // 1-based, slot 0 unused
  BraidWord shear;

  explicit Moves(std::size_t n_) : n(n_), s(n_ / 2) {
    qmove.assign(s + 1, BraidWord(n));
    pmove.assign(s + 1, BraidWord(n));
    neg.assign(s + 1, BraidWord(n));
    z.assign(s + 1, BraidWord(n));
    for (std::size_t i = 1; i <= s; ++i) {
      const int a = static_cast<int>(2 * i);
      if (n % 2 == 0 && i == s) {
        BraidWord sigma(n, {a});
        qmove[i] = sigma;
        pmove[i] = sigma * composite_generator(n, Composite::VLong) * sigma.inverse();
      } else {
        qmove[i] = BraidWord(n, {a});
        pmove[i] = BraidWord(n, {a + 1});
      }
    }
    for (std::size_t i = 1; i < s; ++i) z[i] = composite_generator(n, Composite::Z, i);
    for (std::size_t i = 1; i <= s; ++i) {
      BraidWord c(n), base(n);
      if (n % 2 == 0) {
        base = composite_generator(n, Composite::V, 1);
        for (std::size_t j = i - 1; j >= 1; --j) c.append(z[j]);
      } else {
        base = composite_generator(n, Composite::U, s);
        for (std::size_t j = i; j < s; ++j) c.append(z[j]);
      }
      neg[i] = c * base * c.inverse();
    }
    if (s >= 2) shear = composite_generator(n, Composite::U, 1) * neg[1];
  }
};

Vec tilde_q(const Vec& k, std::size_t s) {
  Vec t = transform(k, Frame::K, Frame::Tilde);
  Vec q(s);
  for (std::size_t i = 0; i < s; ++i) q[i] = t[2 * i];
  return q;
}

Vec tilde_unit(std::size_t n, std::size_t j) {
  Vec e(n);
  e[j] = 1;
  return transform(e, Frame::Tilde, Frame::K);
}

Int alternating_sum(const Vec& k) {
  Int x = 0;
  for (std::size_t i = 0; i < k.size(); ++i) x += (i % 2 ? -k[i] : k[i]);
  return x;
}

class Pipeline {
 public:
  Pipeline(const Moves& moves, Vec k, std::optional<Int> m, const ReduceOptions& options, bool logging)
      : mv_(moves), m_(std::move(m)), opt_(options), logging_(logging), k_(std::move(k)), w_(moves.n) {
    if (opt_.check_each_step) expected_ = current_signature();
  }

  void run() {
    euclid();
    step5();
    lift();
    if (mv_.n % 2 == 1 && mv_.n > 1) {
      Int g = gprime();
      if (g != 0 && alternating_sum(k_) % g != 0) {
        begin("6");
        apply(BraidWord(mv_.n, {1}));
        euclid();
        step5();
        lift();
      }
    }
    if (m_)
      for (auto& v : k_) v = floor_mod(v, *m_);
  }

  const Vec& k() const { return k_; }
  const BraidWord& word() const { return w_; }
  std::vector<StepRecord>& log() { return log_; }

 private:
  OrbitSignature current_signature() const {
    return signature(m_ ? KVector(k_, m_) : KVector(k_));
  }

  void begin(std::string label) {
    if (logging_) log_.push_back({std::move(label), BraidWord(mv_.n)});
  }

  void apply(const BraidWord& word, const Int& reps = 1) {
    for (Int r = 0; r < reps; ++r) {
      emitted_ += word.size();
      if (emitted_ > opt_.letter_budget)
        throw GuardError("reduction exceeded its bound of " + std::to_string(opt_.letter_budget) + " letters");
      k_ = act_k(word, std::move(k_));
      w_.append(word);
      if (logging_ && !log_.empty()) log_.back().word.append(word);
    }
    if (opt_.check_each_step) {
      OrbitSignature now = current_signature();
      if (!signatures_equal(now, *expected_))
        throw Error("signature changed during reduction: " + expected_->to_string() + " -> " + now.to_string());
    }
  }

  Int gprime() const {
    Int g = 0;
    for (const auto& v : tilde_q(k_, mv_.s)) g = gcd(g, v);
    return g;
  }

  void euclid() {
    const std::size_t s = mv_.s;
    for (std::size_t i = 1; i <= s; ++i) {
      begin(i == s ? "4" : (i == 1 ? "1" : "2-3"));
      const BraidWord& qm = mv_.qmove[i];
      const BraidWord& pm = mv_.pmove[i];
      for (std::size_t iter = 0;; ++iter) {
        if (iter > kMaxIterations) throw GuardError("Euclidean phase did not terminate");
        Vec v = transform(k_, Frame::K, Frame::PQ);
        const Int q = v[2 * i - 2], p = v[2 * i - 1];
        if (p == 0) break;
        if (q == 0) {
          apply(qm);
          apply(pm);
          apply(qm);
          continue;
        }
        const bool same_sign = (q > 0) == (p > 0);
        if (abs(q) > abs(p)) {
          Int r = abs(q) / abs(p);
          apply(same_sign ? qm : qm.inverse(), r);
        } else {
          Int r = abs(p) / abs(q);
          apply(same_sign ? pm.inverse() : pm, r);
        }
      }
    }
  }

  void step5() {
    const std::size_t s = mv_.s;
    if (s == 0) return;
    begin("5");
    Vec q = tilde_q(k_, s);
    for (std::size_t i = 0; i < s; ++i)
      if (q[i] < 0) apply(mv_.neg[i + 1]);

    for (std::size_t iter = 0;; ++iter) {
      if (iter > kMaxIterations) throw GuardError("step 5 did not terminate");
      q = tilde_q(k_, s);
      const Int mx = *std::max_element(q.begin(), q.end());
      std::optional<Int> b;
      for (const auto& v : q)
        if (v > 0 && v < mx && (!b || v > *b)) b = v;
      if (!b) break;
      const std::size_t a = static_cast<std::size_t>(std::find(q.begin(), q.end(), mx) - q.begin());
      for (std::size_t j = a; j >= 1; --j) apply(mv_.z[j]);
      q = tilde_q(k_, s);
      const std::size_t bi = static_cast<std::size_t>(std::find(q.begin() + 1, q.end(), *b) - q.begin());
      for (std::size_t j = bi; j >= 2; --j) apply(mv_.z[j]);
      q = tilde_q(k_, s);
      if (q[0] != mx || q[1] != *b) throw Error("step 5 failed to position the leading entries");
      const Int r = (q[0] + q[1]) / (2 * q[1]);
      apply(mv_.shear, r);
      q = tilde_q(k_, s);
      if (q[0] < 0) apply(mv_.neg[1]);
    }

    for (bool changed = true; changed;) {
      changed = false;
      q = tilde_q(k_, s);
      for (std::size_t i = 0; i + 1 < s; ++i)
        if (q[i] > q[i + 1]) {
          apply(mv_.z[i + 1]);
          changed = true;
          break;
        }
    }
  }

  void lift() {
    if (!m_) return;
    Int g = gprime();
    if (g != 0 && *m_ % g != 0) {
      begin("lift");
      Vec e = tilde_unit(mv_.n, 1);
      for (std::size_t j = 0; j < k_.size(); ++j) k_[j] += *m_ * e[j];
      euclid();
      step5();
    }
  }

  const Moves& mv_;
  std::optional<Int> m_;
  const ReduceOptions& opt_;
  bool logging_;
  Vec k_;
  BraidWord w_;
  std::vector<StepRecord> log_;
  std::optional<OrbitSignature> expected_;
  std::size_t emitted_ = 0;
};

Vec from_tilde(std::size_t n, const Int& g, std::size_t t, const Int& x, const std::optional<Int>& m) {
  const std::size_t s = n / 2;
  Vec tv(n);
  for (std::size_t i = s - t; i < s; ++i) tv[2 * i] = g;
  if (n % 2) tv[n - 1] = x;
  Vec k = transform(tv, Frame::Tilde, Frame::K);
  if (m)
    for (auto& v : k) v = floor_mod(v, *m);
  return k;
}

CanonicalResult run(const KVector& input, const ReduceOptions& options) {
  const std::size_t n = input.size();
  if (n == 0) throw DimensionError("empty parameter vector");
  const std::optional<Int>& m = input.modulus();
  CanonicalResult result;
  result.signature = signature(input);
  if (input.is_zero()) {
    result.canonical = input;
    result.witness = BraidWord(n);
    return result;
  }

  const Moves moves(n);
  Pipeline main(moves, input.entries(), m, options, true);
  main.run();
  const Vec start = main.k();

  Int g = 0;
  for (const auto& v : start) g = gcd(g, v);
  if (m) g = gcd(g, *m);
  const Int x = n % 2 ? alternating_sum(start) : Int(0);

  std::vector<Vec> candidates;
  for (std::size_t t = 0; t <= moves.s; ++t) {
    Vec c = from_tilde(n, g, t, x, m);
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
  }
  if (std::find(candidates.begin(), candidates.end(), start) == candidates.end())
    throw Error("reduction ended outside the canonical set at " + KVector(start, m).to_string());

  std::map<Vec, std::vector<std::pair<Vec, BraidWord>>> adjacency;
  for (const auto& c : candidates) adjacency[c];
  ReduceOptions quiet = options;
  quiet.check_each_step = false;
  for (const auto& c : candidates) {
    std::vector<std::pair<Vec, BraidWord>> moves_out;
    for (int l = 1; l <= static_cast<int>(n); ++l)
      for (int letter : {l, -l}) {
        BraidWord pre(n, {letter});
        moves_out.emplace_back(act_k(pre, c), pre);
      }
    if (m)
      for (std::size_t j = 0; j < n; ++j) {
        Vec e = tilde_unit(n, j), v = c;
        for (std::size_t i = 0; i < n; ++i) v[i] += *m * e[i];
        moves_out.emplace_back(std::move(v), BraidWord(n));
      }
    for (auto& [v, pre] : moves_out) {
      Pipeline p(moves, std::move(v), m, quiet, false);
      p.run();
      auto it = adjacency.find(p.k());
      if (it == adjacency.end()) continue;
      BraidWord w = pre * p.word();
      adjacency[c].emplace_back(p.k(), w);
      it->second.emplace_back(c, w.inverse());
    }
  }

  std::map<Vec, BraidWord> paths;
  paths.emplace(start, BraidWord(n));
  std::deque<Vec> queue{start};
  while (!queue.empty()) {
    Vec a = queue.front();
    queue.pop_front();
    for (const auto& [b, w] : adjacency[a]) {
      if (paths.count(b)) continue;
      paths.emplace(b, paths.at(a) * w);
      queue.push_back(b);
    }
  }
  const auto best = paths.begin();

  result.canonical = KVector(best->first, m);
  result.witness = main.word() * best->second;
  result.steps = std::move(main.log());
  result.steps.push_back({"normalize", best->second});

  if (n % 2 == 1) {
    for (const auto& rec : result.steps) {
      if (rec.step == "6" || rec.step == "normalize") break;
      for (int l : rec.word.letters())
        if (std::abs(l) == 1) throw Error("sigma_1 used before step 6 in the odd case");
    }
  }
  if (act_k(result.witness, input) != result.canonical)
    throw Error("witness replay does not reproduce the canonical vector");
  if (!signatures_equal(signature(result.canonical), result.signature))
    throw Error("canonical vector has a different signature");
  return result;
}

}  // namespace

CanonicalResult reduce(const KVector& k, const ReduceOptions& options) { return run(k, options); }

CanonicalResult reduce_modular(const KVector& k, const ReduceOptions& options) {
  if (!k.modulus()) throw DimensionError("reduce_modular needs a modulus");
  return run(k, options);
}

bool same_orbit(const KVector& a, const KVector& b, const ReduceOptions& options) {
  if (a.size() != b.size() || a.modulus() != b.modulus())
    throw DimensionError("vectors come from different contexts");
  if (!signatures_equal(signature(a), signature(b))) return false;
  return reduce(a, options).canonical == reduce(b, options).canonical;
}

}  // namespace braidorbit

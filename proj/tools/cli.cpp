#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidorbit/canonical.hpp"
#include "braidorbit/gram.hpp"
#include "braidorbit/invariants.hpp"
#include "braidorbit/linear.hpp"
#include "braidorbit/orbits.hpp"
#include "braidorbit/verify.hpp"

namespace braidorbit {

namespace {

struct Config {
  std::size_t n = 0;
  std::string word;
  std::string k;
  std::string k2;
  std::string file;
  std::string gram;
  std::string angles;
  std::string frame = "K";
  std::string format = "text";
  std::string parity = "even";
  long long mod = 0;
  std::size_t s = 0;
  std::size_t kmax = 0;
  long max_den = kDefaultMaxDenominator;
  double tol = kDefaultTolerance;
  bool floating = false;
  bool verify = false;
  bool verbose = false;
  bool check_steps = false;
  bool up_to_sign = false;
  bool values = false;
};

class Finding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string inline_or_file(const std::string& inline_value, const Config& c, const char* what) {
  if (!inline_value.empty()) return inline_value;
  if (!c.file.empty()) return read_file(c.file);
  throw ParseError(std::string("missing ") + what + " (give it inline or with --file)");
}

KVector vector_input(const std::string& text, const Config& c, std::size_t expected_n) {
  KVector k = parse_kvector(text);
  if (c.mod != 0) {
    if (k.modulus() && *k.modulus() != c.mod) throw ParseError("conflicting moduli");
    k = KVector(k.entries(), Int(c.mod));
  }
  if (expected_n && k.size() != expected_n)
    throw DimensionError("vector has " + std::to_string(k.size()) + " entries but n=" + std::to_string(expected_n));
  return k;
}

void print_vector(std::ostream& out, const KVector& k, Frame frame) {
  if (frame == Frame::K) {
    out << k.to_string() << '\n';
    return;
  }
  auto v = transform(k.entries(), Frame::K, frame);
  out << join(v) << '\n';
}

int cmd_act(const Config& c, std::ostream& out) {
  KVector k = vector_input(inline_or_file(c.k, c, "vector"), c, c.n);
  BraidWord w = parse_braid_word(c.word, k.size());
  print_vector(out, act_k(w, k), parse_frame(c.frame));
  return 0;
}

GramMatrix gram_input(const Config& c) { return parse_gram(inline_or_file(c.gram, c, "Gram matrix"), c.floating); }

int cmd_gram_act(const Config& c, std::ostream& out) {
  GramMatrix g = gram_input(c);
  BraidWord w = parse_braid_word(c.word, g.dim() - 1);
  GramMatrix h = act_gram(g, w);
  out << (c.values ? h.values_string() : h.to_string()) << '\n';
  return 0;
}

int cmd_extract(const Config& c, std::ostream& out) {
  GramMatrix g = gram_input(c);
  AngleExtraction e = extract_angles(g, c.tol, c.max_den);
  std::string angles;
  for (std::size_t i = 0; i < e.angles.size(); ++i) {
    if (i) angles += ',';
    if (e.angles[i].exact) {
      angles += to_string(*e.angles[i].exact);
    } else {
      std::ostringstream ss;
      ss << std::setprecision(12) << '~' << e.angles[i].value;
      angles += ss.str();
    }
  }
  out << "angles: " << angles << '\n';
  out << "signs: " << e.signs.to_string() << '\n';
  if (e.rank_one) out << "degenerate: rank one\n";
  return 0;
}

int cmd_finite(const Config& c, std::ostream& out) {
  const std::string text = inline_or_file(c.angles, c, "angles");
  if (c.floating) {
    std::vector<double> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        a.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ParseError("invalid angle '" + tok + "'");
      }
    }
    out << to_string(finite_orbit_test(a, c.tol, c.max_den)) << '\n';
    return 0;
  }
  AngleConfig a = parse_angles(text);
  auto f = finite_orbit_test(a);
  out << to_string(f) << '\n';
  if (auto* fin = std::get_if<FiniteOrbit>(&f)) out << "k: " << join(angles_to_k(a, fin->m).entries()) << '\n';
  return 0;
}

int cmd_reduce(const Config& c, std::ostream& out) {
  KVector k = vector_input(inline_or_file(c.k, c, "vector"), c, c.n);
  ReduceOptions opt;
  opt.check_each_step = c.check_steps;
  CanonicalResult r = reduce(k, opt);
  out << "canonical: " << r.canonical.to_string() << '\n';
  out << "signature: " << r.signature.to_string() << '\n';
  out << "witness: " << r.witness.to_string() << '\n';
  if (c.verbose)
    for (const auto& s : r.steps) out << "step " << s.step << ": " << s.word.to_string() << '\n';
  if (c.verify) {
    if (act_k(r.witness, k) != r.canonical) throw Finding("witness replay does not reproduce the canonical vector");
    out << "verified: witness replay reproduces the canonical vector\n";
  }
  return 0;
}

int cmd_same_orbit(const Config& c, std::ostream& out) {
  KVector a = vector_input(c.k, c, c.n);
  KVector b = vector_input(c.k2, c, c.n);
  if (a.size() != b.size()) throw DimensionError("vectors differ in length");
  const SignConvention conv = c.up_to_sign ? SignConvention::UpToSign : SignConvention::Exact;
  bool same = false;
  if (c.up_to_sign && !a.modulus() && a.size() % 2 == 1) {
    same = same_orbit(a, b) || same_orbit(a.negated(), b);
  } else {
    same = same_orbit(a, b);
  }
  const bool sig = signatures_equal(signature(a), signature(b), conv);
  out << (same ? "true" : "false") << '\n';
  if (sig != same) throw Finding("signature comparison disagrees with canonical forms");
  return 0;
}

int cmd_signature(const Config& c, std::ostream& out) {
  KVector k = vector_input(inline_or_file(c.k, c, "vector"), c, c.n);
  out << signature(k).to_string() << '\n';
  return 0;
}

int cmd_orbits(const Config& c, std::ostream& out) {
  if (c.mod < 2) throw ParseError("orbits needs --mod m with m >= 2");
  if (c.format != "text" && c.format != "json") throw ParseError("format must be text or json");
  OrbitTable t = classify_space(c.n, static_cast<std::uint32_t>(c.mod), guard_from_env(kVectorGuard));
  out << (c.format == "json" ? t.to_json_lines() : t.to_text());
  if (!t.signatures_constant || !t.signatures_injective) return 1;
  return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const std::size_t kmax = c.kmax ? c.kmax : c.n / 2;
  auto rel = verify_relations(c.n, kmax);
  auto sym = verify_symplectic(c.n);
  auto tra = verify_transvections(c.n);
  bool ok = all_hold(rel) && all_hold(sym) && all_hold(tra);
  if (c.verbose || !ok) {
    for (const auto* list : {&rel, &sym, &tra})
      for (const auto& r : *list)
        if (c.verbose || !r.holds) out << r.to_string() << '\n';
  }
  const std::string twist = rel.back().note;
  if (ok) {
    out << "all relations hold; " << twist << '\n';
    return 0;
  }
  out << "relation check FAILED; " << twist << '\n';
  return 1;
}

int cmd_mod2(const Config& c, std::ostream& out) {
  Mod2Report r = mod2_symmetric_group_check(c.n, guard_from_env(kGroupGuard));
  out << "order=" << r.group.order << " expected=" << r.expected
      << " generators match: " << (r.generators_match ? "yes" : "no")
      << " same set: " << (r.same_set ? "yes" : "no") << '\n';
  return r.ok() ? 0 : 1;
}

int cmd_congruence(const Config& c, std::ostream& out) {
  const std::uint32_t q = c.mod ? static_cast<std::uint32_t>(c.mod) : 4;
  CongruenceReport r = congruence_check(c.n, q, guard_from_env(kGroupGuard));
  out << r.to_string() << '\n';
  return r.contains_kernel() ? 0 : 1;
}

int cmd_index(const Config& c, std::ostream& out) {
  out << index_counts(c.s, parse_parity(c.parity)) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid group orbits on rank-2 Gram matrices and parameter vectors", "braidorbit"};
  app.require_subcommand(1);
  Config c;

  auto* act = app.add_subcommand("act", "apply a braid word to a parameter vector");
  act->add_option("--n", c.n, "number of parameters");
  act->add_option("--word", c.word, "whitespace separated signed generator indices");
  act->add_option("--k", c.k, "vector, e.g. \"1,2,3\" or \"1,2,3 mod 5\"");
  act->add_option("--mod", c.mod, "work modulo m");
  act->add_option("--frame", c.frame, "output frame: K, X, PQ or TILDE");
  act->add_option("--file", c.file, "read the vector from a file");

  auto* gact = app.add_subcommand("gram-act", "apply a braid word to a Gram matrix");
  gact->add_option("--word", c.word, "braid word");
  gact->add_option("--gram", c.gram, "dimension then upper triangle (angles, or values with --float)");
  gact->add_option("--file", c.file, "read the Gram matrix from a file");
  gact->add_flag("--float", c.floating, "floating point entries");
  gact->add_flag("--values", c.values, "print numeric values of the full matrix");

  auto* ext = app.add_subcommand("extract-angles", "recover angles from a rank-2 Gram matrix");
  ext->add_option("--gram", c.gram, "Gram matrix text");
  ext->add_option("--file", c.file, "read the Gram matrix from a file");
  ext->add_flag("--float", c.floating, "floating point entries");
  ext->add_option("--tol", c.tol, "tolerance for floating input");
  ext->add_option("--max-den", c.max_den, "largest denominator when snapping to rationals");

  auto* fin = app.add_subcommand("finite-test", "decide whether the orbit of an angle configuration is finite");
  fin->add_option("--angles", c.angles, "comma separated angles in units of pi");
  fin->add_option("--file", c.file, "read the angles from a file");
  fin->add_flag("--float", c.floating, "decimal angles");
  fin->add_option("--tol", c.tol, "tolerance for decimal angles");
  fin->add_option("--max-den", c.max_den, "largest denominator when snapping to rationals");

  auto* red = app.add_subcommand("reduce", "canonical representative with a witness word");
  red->add_option("--n", c.n, "number of parameters");
  red->add_option("--k", c.k, "vector");
  red->add_option("--mod", c.mod, "work modulo m");
  red->add_option("--file", c.file, "read the vector from a file");
  red->add_flag("--verify", c.verify, "replay the witness and check it");
  red->add_flag("--verbose", c.verbose, "print the word used by each step");
  red->add_flag("--check-steps", c.check_steps, "recheck the signature after every sub-word");

  auto* same = app.add_subcommand("same-orbit", "decide whether two vectors share an orbit");
  same->add_option("--n", c.n, "number of parameters");
  same->add_option("--a", c.k, "first vector")->required();
  same->add_option("--b", c.k2, "second vector")->required();
  same->add_option("--mod", c.mod, "work modulo m");
  same->add_flag("--up-to-sign", c.up_to_sign, "identify k with -k (odd n over the integers)");

  auto* sig = app.add_subcommand("signature", "orbit invariants of a vector");
  sig->add_option("--n", c.n, "number of parameters");
  sig->add_option("--k", c.k, "vector");
  sig->add_option("--mod", c.mod, "work modulo m");
  sig->add_option("--file", c.file, "read the vector from a file");

  auto* orb = app.add_subcommand("orbits", "partition Z_m^n into orbits");
  orb->add_option("--n", c.n, "number of parameters")->required();
  orb->add_option("--mod", c.mod, "modulus")->required();
  orb->add_option("--format", c.format, "text or json");

  auto* ver = app.add_subcommand("verify", "check relations, symplectic invariance and transvections");
  ver->add_option("--n", c.n, "number of parameters")->required();
  ver->add_option("--kmax", c.kmax, "largest chain length k (default n/2)");
  ver->add_flag("--verbose", c.verbose, "print every relation");

  auto* m2 = app.add_subcommand("mod2", "compare the mod-2 image with the symmetric group");
  m2->add_option("--n", c.n, "number of parameters")->required();

  auto* cong = app.add_subcommand("congruence", "mod-4 image against the mod-2 kernel");
  cong->add_option("--n", c.n, "number of parameters")->required();
  cong->add_option("--mod", c.mod, "even modulus (default 4)");

  auto* idx = app.add_subcommand("index", "index formula");
  idx->add_option("--s", c.s, "s >= 1")->required();
  idx->add_option("--parity", c.parity, "even or odd");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (act->parsed()) return cmd_act(c, out);
    if (gact->parsed()) return cmd_gram_act(c, out);
    if (ext->parsed()) return cmd_extract(c, out);
    if (fin->parsed()) return cmd_finite(c, out);
    if (red->parsed()) return cmd_reduce(c, out);
    if (same->parsed()) return cmd_same_orbit(c, out);
    if (sig->parsed()) return cmd_signature(c, out);
    if (orb->parsed()) return cmd_orbits(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
    if (m2->parsed()) return cmd_mod2(c, out);
    if (cong->parsed()) return cmd_congruence(c, out);
    if (idx->parsed()) return cmd_index(c, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Finding& e) {
    err << "finding: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RankError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace braidorbit

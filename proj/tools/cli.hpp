#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ssgamma/serialize.hpp"
#include "ssgamma/ssgamma.hpp"

namespace ssgamma::cli {

enum ExitCode : int { kOk = 0, kMismatch = 2, kConfig = 3 };

inline constexpr const char* kOutputDirEnv = "SSGAMMA_OUTPUT_DIR";

/// "1", "-1", "zeta8^3" or "-zeta8^3".
inline ExactScalar parse_tau_pi(const std::string& text) {
  static const std::regex root_re(R"((-?)zeta(\d+)\^(-?\d+))");
  std::smatch m;
  if (text == "1") return ExactScalar::one();
  if (text == "-1") return ExactScalar::rational(-1);
  if (std::regex_match(text, m, root_re)) {
    const unsigned order = static_cast<unsigned>(std::stoul(m[2]));
    if (order == 0) throw ParseError("zeta0 is not a root of unity");
    ExactScalar r = ExactScalar::root_of_unity(order, std::stoll(m[3]));
    return m[1].length() ? -r : r;
  }
  throw ParseError("tau(w) must be 1, -1 or [-]zetaM^K, got '" + text + "'");
}

inline std::vector<unsigned long> parse_list(const std::string& text) {
  std::vector<unsigned long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad list entry '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

inline Mode parse_mode(const std::string& s) {
  if (s == "support") return Mode::SupportAware;
  if (s == "brute") return Mode::BruteForce;
  throw InvalidArgument("mode must be support or brute");
}

/// Writes to the explicit path, else into $SSGAMMA_OUTPUT_DIR, else to `out`.
inline void emit(const std::string& text, const std::string& path, const std::string& default_name, std::ostream& out) {
  std::filesystem::path target;
  if (!path.empty()) {
    target = path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    target = std::filesystem::path(dir) / default_name;
  } else {
    out << text;
    return;
  }
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream f(target, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + target.string());
  f << text;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline const char* kTableHeader = "p,ell,zeta,tau_j,tau_pi,so_gamma,gl_gamma,match,error\n";

struct TableRow {
  IntegralConfig cfg;
  std::string so_gamma;
  std::string gl_gamma;
  bool match = false;
  std::string error;

  std::string csv() const {
    return std::to_string(cfg.prime) + "," + std::to_string(cfg.ell) + "," + std::to_string(cfg.zeta) + "," +
           std::to_string(cfg.tau_j) + "," + csv_field(cfg.tau_at_uniformizer.to_string()) + "," + csv_field(so_gamma) +
           "," + csv_field(gl_gamma) + "," + (match ? "true" : "false") + "," + csv_field(error) + "\n";
  }
};

inline TableRow table_row(const IntegralConfig& cfg) {
  TableRow row{cfg};
  try {
    const GammaResult so = gamma_so(cfg);
    const ExactScalar gl = gamma_gl_closed(2 * cfg.ell, cfg.tau(), detail::sign_root(cfg.zeta));
    row.so_gamma = so.computed.to_string();
    row.gl_gamma = gl.to_string();
    row.match = so.matches && so.computed == gl;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

struct GammaSoOptions {
  unsigned long p = 0;
  std::size_t ell = 1;
  int zeta = 1;
  unsigned long tau_j = 0;
  std::string tau_pi = "1";
  std::optional<int> level;
  std::optional<int> cutoff;
  std::string mode = "support";
  bool stabilize = false;
  std::string output;
  std::string format = "json";

  IntegralConfig config() const {
    IntegralConfig c;
    c.prime = p;
    c.ell = ell;
    c.zeta = zeta;
    c.tau_j = tau_j;
    c.tau_at_uniformizer = parse_tau_pi(tau_pi);
    c.mode = parse_mode(mode);
    // brute force is exponential in N and V; keep its defaults small
    const bool brute = c.mode == Mode::BruteForce;
    c.level = level.value_or(brute ? 2 : 3);
    c.cutoff = cutoff.value_or(brute ? 1 : 2);
    c.validate();
    return c;
  }
};

inline int cmd_gamma_so(const GammaSoOptions& o, std::ostream& out) {
  const IntegralConfig cfg = o.config();
  GammaResult r = gamma_so(cfg);
  bool ok = r.matches;
  if (o.stabilize) {
    const bool stable = stabilization_check(cfg);
    r.metadata["stabilized"] = stable ? "true" : "false";
    ok = ok && stable;
  }
  const std::string name = "gamma-so_p" + std::to_string(cfg.prime) + "_l" + std::to_string(cfg.ell);
  if (o.format == "csv") {
    const TableRow row = table_row(cfg);
    emit(std::string(kTableHeader) + row.csv(), o.output, name + ".csv", out);
  } else if (o.format == "json") {
    emit(to_json(r).dump(2) + "\n", o.output, name + ".json", out);
  } else {
    throw InvalidArgument("format must be json or csv");
  }
  return ok ? kOk : kMismatch;
}

struct ScanOptions {
  unsigned long p = 0;
  std::size_t ell = 1;
  std::string side = "phi";
  int level = 2;
  int cutoff = 1;
  bool corrupt = false;
  std::string output;
};

inline int cmd_scan_support(const ScanOptions& o, std::ostream& out) {
  IntegralConfig check;
  check.prime = o.p;
  check.ell = o.ell;
  check.level = o.level;
  check.cutoff = o.cutoff;
  check.validate();
  Side side;
  if (o.side == "phi") side = Side::Phi;
  else if (o.side == "phi-star") side = Side::PhiStar;
  else throw InvalidArgument("side must be phi or phi-star");
  const ScanReport rep = scan_support(o.p, o.ell, side, o.level, o.cutoff, o.corrupt);
  Json doc = to_json(rep);
  doc["corrupted_predicate"] = o.corrupt;
  emit(doc.dump(2) + "\n", o.output,
       "scan_p" + std::to_string(o.p) + "_l" + std::to_string(o.ell) + "_" + side_name(side) + ".json", out);
  return rep.matches() ? kOk : kMismatch;
}

struct TableOptions {
  std::string primes = "3,5";
  std::string ells = "1,2";
  std::string tau_pi = "1";
  int level = 3;
  int cutoff = 2;
  std::string mode = "support";
  std::string output;
};

inline int cmd_table(const TableOptions& o, std::ostream& out) {
  const std::vector<unsigned long> primes = parse_list(o.primes);
  const std::vector<unsigned long> ells = parse_list(o.ells);
  const ExactScalar tau_pi = parse_tau_pi(o.tau_pi);
  const Mode mode = parse_mode(o.mode);
  std::string text = kTableHeader;
  bool ok = true;
  for (unsigned long p : primes)
    for (unsigned long ell : ells)
      for (int zeta : {-1, 1}) {
        const unsigned long js = (is_prime(p) && p > 2) ? p - 1 : 1;
        for (unsigned long j = 0; j < js; ++j) {
          IntegralConfig c;
          c.prime = p;
          c.ell = ell;
          c.zeta = zeta;
          c.tau_j = j;
          c.tau_at_uniformizer = tau_pi;
          c.level = o.level;
          c.cutoff = o.cutoff;
          c.mode = mode;
          const TableRow row = table_row(c);
          ok = ok && row.match;
          text += row.csv();
        }
      }
  emit(text, o.output, "table.csv", out);
  return ok ? kOk : kMismatch;
}

struct ParamOptions {
  unsigned long p = 0;
  std::size_t ell = 1;
  int zeta = 1;
  std::string output;
};

inline int cmd_param(const ParamOptions& o, std::ostream& out) {
  const ParamData pd = param_summary(o.p, o.ell, o.zeta);
  emit(to_json(pd).dump(2) + "\n", o.output,
       "param_p" + std::to_string(o.p) + "_l" + std::to_string(o.ell) + ".json", out);
  return pd.single_block_unique ? kOk : kMismatch;
}

struct GammaGlOptions {
  unsigned long p = 0;
  std::size_t n = 2;
  long zeta_k = 0;
  unsigned long tau_j = 0;
  std::string tau_pi = "1";
  int level = 2;
  int cutoff = 1;
  std::string output;
};

inline int cmd_gamma_gl(const GammaGlOptions& o, std::ostream& out) {
  if (!is_prime(o.p) || o.p == 2) throw InvalidArgument("p must be an odd prime");
  if (o.n < 2) throw InvalidArgument("n must be >= 2");
  if (o.tau_j + 1 >= o.p) throw InvalidArgument("tau exponent must lie in 0..p-2");
  GlConfig c;
  c.n = o.n;
  c.prime = o.p;
  c.zeta = RootOfUnity::make(o.n, o.zeta_k);
  c.tau_j = o.tau_j;
  c.tau_at_uniformizer = parse_tau_pi(o.tau_pi);
  c.level = o.level;
  c.cutoff = o.cutoff;
  const GammaResult r = jpss_gl_gamma(c);
  emit(to_json(r).dump(2) + "\n", o.output, "gamma-gl_p" + std::to_string(o.p) + "_n" + std::to_string(o.n) + ".json",
       out);
  return r.matches ? kOk : kMismatch;
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact gamma factors of simple supercuspidals of SO(2l+1) twisted by tame characters"};
  app.require_subcommand(1);

  std::function<int()> action;

  GammaSoOptions so;
  auto* g = app.add_subcommand("gamma-so", "gamma(s, pi x tau, psi) as Phi*/Phi against the closed form");
  g->add_option("--p", so.p, "odd prime")->required();
  g->add_option("--ell", so.ell, "rank l");
  g->add_option("--zeta", so.zeta, "sign +1 or -1");
  g->add_option("--tau-j", so.tau_j, "tau on units: zeta_{p-1}^{j ind}");
  g->add_option("--tau-pi", so.tau_pi, "tau(w): 1, -1 or zetaM^K");
  g->add_option("--level", so.level, "N (default 3, brute 2)");
  g->add_option("--cutoff", so.cutoff, "V (default 2, brute 1)");
  g->add_option("--mode", so.mode, "support or brute");
  g->add_flag("--stabilize", so.stabilize, "re-run at (N+1, V+1)");
  g->add_option("--output,-o", so.output, "output file");
  g->add_option("--format", so.format, "json or csv");
  g->callback([&] { action = [&] { return cmd_gamma_so(so, out); }; });

  ScanOptions sc;
  auto* s = app.add_subcommand("scan-support", "brute-force support of the integrands");
  s->add_option("--p", sc.p, "odd prime")->required();
  s->add_option("--ell", sc.ell, "rank l");
  s->add_option("--side", sc.side, "phi or phi-star");
  s->add_option("--level", sc.level, "N");
  s->add_option("--cutoff", sc.cutoff, "V");
  s->add_flag("--corrupt-predicate", sc.corrupt, "test fixture: weaken the torus condition");
  s->add_option("--output,-o", sc.output, "output file");
  s->callback([&] { action = [&] { return cmd_scan_support(sc, out); }; });

  TableOptions tb;
  auto* t = app.add_subcommand("table", "CSV grid of SO gamma against the GL closed form");
  t->add_option("--primes", tb.primes, "comma separated primes");
  t->add_option("--ells", tb.ells, "comma separated ranks");
  t->add_option("--tau-pi", tb.tau_pi, "tau(w)");
  t->add_option("--level", tb.level, "N");
  t->add_option("--cutoff", tb.cutoff, "V");
  t->add_option("--mode", tb.mode, "support or brute");
  t->add_option("--output,-o", tb.output, "output file");
  t->callback([&] { action = [&] { return cmd_table(tb, out); }; });

  ParamOptions pa;
  auto* pc = app.add_subcommand("param", "Langlands parameter data");
  pc->add_option("--p", pa.p, "prime not dividing 2l")->required();
  pc->add_option("--ell", pa.ell, "rank l");
  pc->add_option("--zeta", pa.zeta, "sign +1 or -1");
  pc->add_option("--output,-o", pa.output, "output file");
  pc->callback([&] { action = [&] { return cmd_param(pa, out); }; });

  GammaGlOptions gl;
  auto* gg = app.add_subcommand("gamma-gl", "GL(n) x GL(1) gamma from both zeta integrals");
  gg->add_option("--p", gl.p, "odd prime")->required();
  gg->add_option("--n", gl.n, "n >= 2");
  gg->add_option("--zeta-k", gl.zeta_k, "zeta = zeta_n^k");
  gg->add_option("--tau-j", gl.tau_j, "tau on units");
  gg->add_option("--tau-pi", gl.tau_pi, "tau(w)");
  gg->add_option("--level", gl.level, "N");
  gg->add_option("--cutoff", gl.cutoff, "V");
  gg->add_option("--output,-o", gl.output, "output file");
  gg->callback([&] { action = [&] { return cmd_gamma_gl(gl, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfig;
  }

  try {
    return action();
  } catch (const BoundaryNonvanishing& e) {
    err << e.what() << "\n";
    return kMismatch;
  } catch (const ZeroDenominator& e) {
    err << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << e.what() << "\n";
    return kConfig;
  }
}

}  // namespace ssgamma::cli

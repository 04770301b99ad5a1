#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ssgamma/characters.hpp"
#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/errors.hpp"
#include "ssgamma/matrix.hpp"
#include "ssgamma/padic.hpp"
#include "ssgamma/scalar.hpp"

namespace ssgamma {

// ---------------------------------------------------------------------------
// Sections of the principal series on SO_2.

/// f_s(h, a) = |det h|^{s - 1/2} tau(a h), reading the upper-left entry of h.
struct SectionSpec {
  TameCharacter tau;

  ExactScalar operator()(const GroupMatrix& h, const mpq_class& a) const {
    if (h.size() != 2) throw BadDimension("sections live on SO_2");
    const mpq_class& z = h(0, 0);
    if (sgn(z) == 0) throw ZeroDivisor("degenerate torus element");
    const int v = valuation(z, h.prime());
    return ExactScalar::rational(1, v, v) * tau(PAdicNumber(a * z, h.prime()));
  }
};

inline ExactScalar section_eval(const SectionSpec& sec, const GroupMatrix& h, const mpq_class& a) { return sec(h, a); }

/// M(tau, s) f_s(h, a) at n = 1: the opposite unipotent radical is trivial and
/// the operator is translation by w_1^{-1}.
inline ExactScalar intertwine_M(const SectionSpec& sec, const GroupMatrix& h, const mpq_class& a) {
  if (h.size() != 2) throw Unsupported("intertwining operator implemented for n = 1 only");
  const GroupMatrix w1 = w_n(1, h.prime());
  return sec(w1.inverse() * h, a);
}

// ---------------------------------------------------------------------------
// Configuration and results.

enum class Mode { SupportAware, BruteForce };

inline std::string mode_name(Mode m) { return m == Mode::SupportAware ? "support" : "brute"; }

struct IntegralConfig {
  unsigned long prime = 3;
  std::size_t ell = 1;
  int zeta = 1;
  unsigned long tau_j = 0;
  ExactScalar tau_at_uniformizer = ExactScalar::one();
  int level = 3;   // N
  int cutoff = 2;  // V
  Mode mode = Mode::SupportAware;
  mpq_class measure_scale = 1;  ///< additive measure is measure_scale * (vol(o) = q^{1/2})

  TameCharacter tau() const { return TameCharacter(prime, tau_j, tau_at_uniformizer); }

  void validate() const {
    if (!is_prime(prime) || prime == 2) throw InvalidArgument("p must be an odd prime");
    if (ell < 1) throw InvalidArgument("l must be >= 1");
    if (zeta != 1 && zeta != -1) throw InvalidArgument("zeta must be +1 or -1");
    if (tau_j + 1 >= prime) throw InvalidArgument("tau exponent must lie in 0..p-2");
    if (level < 1) throw InvalidArgument("level N must be >= 1");
    if (cutoff < 0) throw InvalidArgument("cutoff V must be >= 0");
    if (sgn(measure_scale) <= 0) throw InvalidArgument("measure scale must be positive");
  }
};

struct GammaResult {
  ExactScalar computed;
  ExactScalar predicted;
  bool matches = false;
  std::map<std::string, std::string> metadata;
};

// ---------------------------------------------------------------------------
// Integrand profiles.
//
// Each integral is a finite sum over sample points of
//   weight * W(g(point)) * section(point).
// W contributes zeta^power * phase; the section depends only on the valuation
// and unit residue of its torus argument.  Aggregating the points by those
// four quantities lets one scan serve every (zeta, tau).

struct ProfileKey {
  int power = 0;
  RootOfUnity phase;
  int v = 0;
  unsigned long residue = 1;
  auto operator<=>(const ProfileKey&) const = default;
};

/// How the section's |.|-factor and tau enter, per unit of valuation v.
struct SectionShape {
  int q_half_per_v = 1;
  int s_power_per_v = 1;
  bool inverse_tau = false;
};

struct IntegrandProfile {
  std::map<ProfileKey, mpz_class> counts;
  ExactScalar point_weight;
  std::size_t points = 0;
  std::size_t nonzero_points = 0;
  std::size_t boundary_hits = 0;
  std::string first_boundary_hit;
  SectionShape shape;

  /// sum over points of zeta^power * phase * section factor, times the point weight.
  ExactScalar evaluate(const RootOfUnity& zeta, const TameCharacter& tau) const {
    std::map<int, RootSum> by_valuation;
    for (const auto& [key, count] : counts) {
      RootOfUnity root = key.phase * RootOfUnity::make(zeta.order, static_cast<std::int64_t>(zeta.exponent) * key.power);
      const RootOfUnity unit = tau.unit_root(key.residue);
      root = root * (shape.inverse_tau ? unit.inverse() : unit);
      by_valuation[key.v].add(root, mpq_class(count));
    }
    ExactScalar total;
    for (const auto& [v, sum] : by_valuation) {
      const ExactScalar tau_pi = tau.value_at_uniformizer().pow(shape.inverse_tau ? -v : v);
      total += ExactScalar::monomial(sum.value(), shape.q_half_per_v * v, shape.s_power_per_v * v) * tau_pi;
    }
    return total * point_weight;
  }
};

enum class Side { Phi, PhiStar };

inline std::string side_name(Side s) { return s == Side::Phi ? "phi" : "phi_star"; }

/// One evaluated sample point of an SO integrand.
struct SamplePoint {
  mpq_class z;
  std::vector<mpq_class> y;
  std::optional<WhittakerValue> whittaker;
  bool on_shell = false;
};

namespace detail {

struct DomainSpec {
  std::vector<mpq_class> z_reps;
  std::vector<mpq_class> y_reps;
  ExactScalar z_weight;
  ExactScalar y_weight;
  int shell = 0;  // valuation bound marking the boundary shell, 0 when none
};

inline DomainSpec so_domain(unsigned long p, Side side, Mode mode, int level, int cutoff) {
  DomainSpec d;
  if (mode == Mode::SupportAware) {
    RepSet z{RepSet::Kind::OnePlusP, p, level, 0};
    d.z_reps = z.representatives();
    if (side == Side::PhiStar)
      for (auto& r : d.z_reps) r /= p;  // z in w^{-1}(1 + p)
    d.z_weight = z.weight();
    RepSet y{RepSet::Kind::MaxIdeal, p, level, 0};
    d.y_reps = y.representatives();
    d.y_weight = y.weight();
    return d;
  }
  const int outer = cutoff + 1;
  for (int v = -outer; v <= outer; ++v) {
    RepSet shell{RepSet::Kind::Shell, p, level, v};
    auto reps = shell.representatives();
    d.z_reps.insert(d.z_reps.end(), reps.begin(), reps.end());
    d.z_weight = shell.weight();
  }
  RepSet y{RepSet::Kind::Fractional, p, level, outer};
  d.y_reps = y.representatives();
  d.y_weight = y.weight();
  d.shell = outer;
  return d;
}

/// Calls visit(z, y-indices) for every point of z_reps x y_reps^{count}.
template <typename Visit>
void for_each_tuple(std::size_t count, std::size_t radix, Visit&& visit) {
  std::vector<std::size_t> idx(count, 0);
  while (true) {
    visit(idx);
    std::size_t pos = 0;
    while (pos < count && ++idx[pos] == radix) idx[pos++] = 0;
    if (pos == count) return;
  }
}

}  // namespace detail

/// Visits every sample point of the SO integrand for the given side.
/// The callback receives the point together with the section's torus argument
/// (the upper-left entry fed to tau, already multiplied by a).
template <typename Visit>
void for_each_so_point(unsigned long p, std::size_t ell, Side side, Mode mode, int level, int cutoff, Visit&& visit) {
  const detail::DomainSpec dom = detail::so_domain(p, side, mode, level, cutoff);
  const WhittakerSpec spec = WhittakerSpec::so(ell, p, 1);
  const GroupMatrix left = c_hat(1, ell, p);
  const GroupMatrix right = delta_o(ell, p) * omega_prime(1, ell, p);
  const GroupMatrix om = omega(1, p);
  const GroupMatrix om_inv = om.inverse();
  const GroupMatrix w1_inv = w_n(1, p).inverse();
  const mpq_class b_star = star(b_n(1, p))(0, 0);

  for (const auto& z : dom.z_reps) {
    const GroupMatrix h = torus_so2(z, p);
    const GroupMatrix jh = embed_j(h, ell);
    mpq_class section_arg;
    mpq_class section_det;
    if (side == Side::Phi) {
      section_det = z;
      section_arg = z;
    } else {
      const GroupMatrix hh = w1_inv * om * h * om_inv;
      section_det = hh(0, 0);
      section_arg = b_star * hh(0, 0);
    }
    const bool z_shell = dom.shell != 0 && std::abs(valuation(z, p)) == dom.shell;
    detail::for_each_tuple(ell - 1, dom.y_reps.size(), [&](const std::vector<std::size_t>& idx) {
      std::vector<mpq_class> y(ell - 1);
      bool shell = z_shell;
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = dom.y_reps[idx[i]];
        if (dom.shell != 0 && sgn(y[i]) != 0 && valuation(y[i], p) == -dom.shell) shell = true;
      }
      const GroupMatrix x = xbar(y, ell, p);
      const GroupMatrix g = side == Side::Phi ? x * jh : left * x * jh * right;
      SamplePoint pt{z, std::move(y), whittaker_value(spec, g), shell};
      visit(pt, section_det, section_arg);
    });
  }
}

/// Point weight of the SO domain: z-weight times (y-weight)^{l-1}.
inline ExactScalar so_point_weight(unsigned long p, std::size_t ell, Mode mode, int level, int cutoff, const mpq_class& scale) {
  const detail::DomainSpec dom = detail::so_domain(p, Side::Phi, mode, level, cutoff);
  ExactScalar w = dom.z_weight;
  for (std::size_t i = 0; i + 1 < ell; ++i) w *= dom.y_weight * ExactScalar::rational(scale);
  return w;
}

inline IntegrandProfile build_so_profile(unsigned long p, std::size_t ell, Side side, Mode mode, int level, int cutoff,
                                         const mpq_class& scale = 1) {
  IntegrandProfile prof;
  prof.shape = SectionShape{1, 1, false};
  prof.point_weight = so_point_weight(p, ell, mode, level, cutoff, scale).with_q(p);
  for_each_so_point(p, ell, side, mode, level, cutoff,
                    [&](const SamplePoint& pt, const mpq_class& det, const mpq_class& arg) {
                      ++prof.points;
                      if (!pt.whittaker) return;
                      ++prof.nonzero_points;
                      if (pt.on_shell) {
                        if (prof.boundary_hits++ == 0) prof.first_boundary_hit = "z = " + pt.z.get_str();
                      }
                      const int v = valuation(det, p);
                      const unsigned long r = residue(arg * prime_power(p, -valuation(arg, p)), p, 1).get_ui();
                      prof.counts[ProfileKey{pt.whittaker->power, pt.whittaker->phase, v, r}] += 1;
                    });
  return prof;
}

namespace detail {

using ProfileCacheKey = std::tuple<unsigned long, std::size_t, int, int, int, int, std::string>;

inline std::shared_ptr<const IntegrandProfile> cached_so_profile(unsigned long p, std::size_t ell, Side side, Mode mode,
                                                                 int level, int cutoff, const mpq_class& scale) {
  static std::mutex mutex;
  static std::map<ProfileCacheKey, std::shared_ptr<const IntegrandProfile>> cache;
  const ProfileCacheKey key{p, ell, static_cast<int>(side), static_cast<int>(mode), level,
                            mode == Mode::SupportAware ? 0 : cutoff, scale.get_str()};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto prof = std::make_shared<const IntegrandProfile>(build_so_profile(p, ell, side, mode, level, cutoff, scale));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(prof)).first->second;
}

inline RootOfUnity sign_root(int zeta) { return zeta == -1 ? RootOfUnity{2, 1} : RootOfUnity{}; }

inline ExactScalar evaluate_so(const IntegralConfig& cfg, Side side) {
  cfg.validate();
  const auto prof = cached_so_profile(cfg.prime, cfg.ell, side, cfg.mode, cfg.level, cfg.cutoff, cfg.measure_scale);
  if (prof->boundary_hits > 0)
    throw BoundaryNonvanishing(side_name(side) + " integrand is nonzero on the truncation shell (" +
                               prof->first_boundary_hit + ")");
  return prof->evaluate(sign_root(cfg.zeta), cfg.tau());
}

}  // namespace detail

/// Phi(W, f_s) for the simple supercuspidal of SO_{2l+1} twisted by tame tau.
inline ExactScalar phi_eval(const IntegralConfig& cfg) { return detail::evaluate_so(cfg, Side::Phi); }

/// Phi*(W, f_s); the wedge-square gamma prefactor is 1 for GL_1 and b_1* = -1.
inline ExactScalar phi_star_eval(const IntegralConfig& cfg) { return detail::evaluate_so(cfg, Side::PhiStar); }

/// zeta tau(-w) q^{1/2 - s}.
inline ExactScalar gamma_so_closed(int zeta, const TameCharacter& tau) {
  const ExactScalar tau_minus_pi = tau(PAdicNumber(-static_cast<long>(tau.prime()), tau.prime()));
  return ExactScalar::rational(zeta) * tau_minus_pi * q_half_minus_s();
}

inline std::map<std::string, std::string> run_metadata(const IntegralConfig& cfg) {
  return {
      {"p", std::to_string(cfg.prime)},
      {"ell", std::to_string(cfg.ell)},
      {"zeta", std::to_string(cfg.zeta)},
      {"tau_j", std::to_string(cfg.tau_j)},
      {"tau_pi", cfg.tau_at_uniformizer.to_string()},
      {"level", std::to_string(cfg.level)},
      {"cutoff", std::to_string(cfg.cutoff)},
      {"mode", mode_name(cfg.mode)},
      {"psi_convention", kPsiConvention},
      {"generator", std::to_string(primitive_root(cfg.prime))},
      {"measure", kMeasureConvention},
  };
}

/// gamma(s, pi x tau, psi) = Phi* / Phi, compared with the closed form.
inline GammaResult gamma_so(const IntegralConfig& cfg) {
  const ExactScalar phi = phi_eval(cfg);
  if (phi.is_zero()) throw ZeroDenominator("Phi vanished; support or measure bug");
  const ExactScalar phi_star = phi_star_eval(cfg);
  GammaResult r;
  r.computed = phi_star / phi;
  r.predicted = gamma_so_closed(cfg.zeta, cfg.tau());
  r.matches = r.computed == r.predicted;
  r.metadata = run_metadata(cfg);
  return r;
}

/// Re-runs both integrals at (N+1, V+1) and reports whether they are unchanged.
inline bool stabilization_check(const IntegralConfig& cfg) {
  IntegralConfig finer = cfg;
  ++finer.level;
  ++finer.cutoff;
  return phi_eval(cfg) == phi_eval(finer) && phi_star_eval(cfg) == phi_star_eval(finer);
}

// ---------------------------------------------------------------------------
// GL_n side.

/// tau(-1)^{n-1} tau(w) zeta q^{1/2 - s}.
inline ExactScalar gamma_gl_closed(std::size_t n, const TameCharacter& tau, const RootOfUnity& zeta) {
  if ((zeta.exponent * n) % zeta.order != 0) throw BadRoot("zeta^n must equal omega(w) = 1");
  return tau.at_minus_one().pow(static_cast<int>(n) - 1) * tau.value_at_uniformizer() *
         ExactScalar::monomial(CyclotomicNumber::from_root(zeta)) * q_half_minus_s();
}

struct GlProfiles {
  IntegrandProfile zeta_integral;  ///< Psi(s, W, tau; 0)
  IntegrandProfile dual_integral;  ///< Psi(1 - s, rho(w_{n,1}) W~, tau^{-1}; n - 2)
};

/// Mellin transform of W along diag(a, I_{n-1}) and its functional-equation
/// partner built from W~(g) = W(w_n g^{-t}).
inline GlProfiles build_gl_profiles(std::size_t n, unsigned long p, int level, int cutoff, const mpq_class& scale = 1) {
  if (n < 2) throw BadDimension("GL_n x GL_1 integrals need n >= 2");
  const WhittakerSpec spec = WhittakerSpec::gl(n, p, RootOfUnity{});
  const int outer = cutoff + 1;
  std::vector<mpq_class> a_reps;
  ExactScalar a_weight;
  for (int v = -outer; v <= outer; ++v) {
    RepSet shell{RepSet::Kind::Shell, p, level, v};
    auto reps = shell.representatives();
    a_reps.insert(a_reps.end(), reps.begin(), reps.end());
    a_weight = shell.weight();
  }
  const RepSet x_set{RepSet::Kind::Fractional, p, level, outer};
  const std::vector<mpq_class> x_reps = x_set.representatives();

  GlProfiles out;
  out.zeta_integral.shape = SectionShape{static_cast<int>(n) - 1, 1, false};
  out.zeta_integral.point_weight = a_weight.with_q(p);
  out.dual_integral.shape = SectionShape{static_cast<int>(n) - 3, -1, true};
  ExactScalar dual_weight = a_weight;
  for (std::size_t i = 0; i + 2 < n; ++i) dual_weight *= x_set.weight() * ExactScalar::rational(scale);
  out.dual_integral.point_weight = dual_weight.with_q(p);

  const auto record = [&](IntegrandProfile& prof, const std::optional<WhittakerValue>& w, const mpq_class& a, bool shell) {
    ++prof.points;
    if (!w) return;
    ++prof.nonzero_points;
    if (shell && prof.boundary_hits++ == 0) prof.first_boundary_hit = "a = " + a.get_str();
    const int v = valuation(a, p);
    const unsigned long r = residue(a * prime_power(p, -v), p, 1).get_ui();
    prof.counts[ProfileKey{w->power, w->phase, v, r}] += 1;
  };

  const GroupMatrix long_weyl = antidiagonal_j(n, p);
  GroupMatrix w_n1 = GroupMatrix::identity(n, p, Ambient::GL);
  for (std::size_t i = 1; i < n; ++i) w_n1(i, i) = 0;
  for (std::size_t i = 1; i < n; ++i) w_n1(i, n - i) = 1;

  for (const auto& a : a_reps) {
    const bool a_shell = std::abs(valuation(a, p)) == outer;
    GroupMatrix diag = GroupMatrix::identity(n, p, Ambient::GL);
    diag(0, 0) = a;
    record(out.zeta_integral, whittaker_value(spec, diag), a, a_shell);

    detail::for_each_tuple(n - 2, x_reps.size(), [&](const std::vector<std::size_t>& idx) {
      GroupMatrix g = diag;
      bool shell = a_shell;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        g(i + 1, 0) = x_reps[idx[i]];
        if (sgn(x_reps[idx[i]]) != 0 && valuation(x_reps[idx[i]], p) == -outer) shell = true;
      }
      const GroupMatrix arg = long_weyl * (g * w_n1).inverse().transpose();
      record(out.dual_integral, whittaker_value(spec, arg), a, shell);
    });
  }
  return out;
}

struct GlConfig {
  std::size_t n = 2;
  unsigned long prime = 3;
  RootOfUnity zeta{};
  unsigned long tau_j = 0;
  ExactScalar tau_at_uniformizer = ExactScalar::one();
  int level = 2;
  int cutoff = 1;

  TameCharacter tau() const { return TameCharacter(prime, tau_j, tau_at_uniformizer); }
};

namespace detail {

inline std::shared_ptr<const GlProfiles> cached_gl_profiles(std::size_t n, unsigned long p, int level, int cutoff) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, unsigned long, int, int>, std::shared_ptr<const GlProfiles>> cache;
  const auto key = std::make_tuple(n, p, level, cutoff);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto prof = std::make_shared<const GlProfiles>(build_gl_profiles(n, p, level, cutoff));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(prof)).first->second;
}

}  // namespace detail

/// GL_n x GL_1 gamma factor by exact evaluation of both zeta integrals:
///   Psi(1-s, rho(w_{n,1}) W~, tau^{-1}) = tau(-1)^{n-1} gamma Psi(s, W, tau).
inline GammaResult jpss_gl_gamma(const GlConfig& cfg) {
  if (!is_prime(cfg.prime) || cfg.prime == 2) throw InvalidArgument("p must be an odd prime");
  const TameCharacter tau = cfg.tau();
  const ExactScalar predicted = gamma_gl_closed(cfg.n, tau, cfg.zeta);
  const auto prof = detail::cached_gl_profiles(cfg.n, cfg.prime, cfg.level, cfg.cutoff);
  for (const auto* p : {&prof->zeta_integral, &prof->dual_integral})
    if (p->boundary_hits > 0)
      throw BoundaryNonvanishing("GL integrand nonzero on the truncation shell (" + p->first_boundary_hit + ")");
  const ExactScalar psi0 = prof->zeta_integral.evaluate(cfg.zeta, tau);
  if (psi0.is_zero()) throw ZeroDenominator("GL zeta integral vanished");
  const ExactScalar dual = prof->dual_integral.evaluate(cfg.zeta, tau);
  GammaResult r;
  r.computed = dual / (tau.at_minus_one().pow(static_cast<int>(cfg.n) - 1) * psi0);
  r.predicted = predicted;
  r.matches = r.computed == r.predicted;
  r.metadata = {{"p", std::to_string(cfg.prime)},
                {"n", std::to_string(cfg.n)},
                {"zeta", std::to_string(cfg.zeta.exponent) + "/" + std::to_string(cfg.zeta.order)},
                {"tau_j", std::to_string(cfg.tau_j)},
                {"tau_pi", cfg.tau_at_uniformizer.to_string()},
                {"level", std::to_string(cfg.level)},
                {"cutoff", std::to_string(cfg.cutoff)},
                {"psi_convention", kPsiConvention},
                {"generator", std::to_string(primitive_root(cfg.prime))},
                {"measure", kMeasureConvention}};
  return r;
}

/// Closed forms of both sides agree: SO_{2l+1} against GL_{2l} with trivial central character.
inline bool match_so_gl(std::size_t ell, const TameCharacter& tau, int zeta) {
  return gamma_so_closed(zeta, tau) == gamma_gl_closed(2 * ell, tau, detail::sign_root(zeta));
}

/// Same comparison on computed values of both pipelines.
inline bool match_so_gl_computed(const IntegralConfig& so_cfg, int gl_level = 2, int gl_cutoff = 1) {
  const GammaResult so = gamma_so(so_cfg);
  GlConfig gl;
  gl.n = 2 * so_cfg.ell;
  gl.prime = so_cfg.prime;
  gl.zeta = detail::sign_root(so_cfg.zeta);
  gl.tau_j = so_cfg.tau_j;
  gl.tau_at_uniformizer = so_cfg.tau_at_uniformizer;
  gl.level = gl_level;
  gl.cutoff = gl_cutoff;
  const GammaResult glr = jpss_gl_gamma(gl);
  return so.computed == glr.computed && so.matches && glr.matches;
}

// ---------------------------------------------------------------------------
// Support scans.

struct ScanPoint {
  mpq_class z;
  std::vector<mpq_class> y;
  std::string value;
};

struct ScanReport {
  unsigned long prime = 3;
  std::size_t ell = 1;
  Side side = Side::Phi;
  int level = 2;
  int cutoff = 1;
  std::size_t points = 0;
  std::vector<ScanPoint> nonvanishing;
  std::size_t false_positives = 0;  ///< nonzero where the predicate says zero
  std::size_t false_negatives = 0;  ///< zero where the predicate says nonzero
  bool matches() const { return false_positives == 0 && false_negatives == 0; }
};

/// The support predicates: h in 1 + p (Phi) or h^{-1} in w(1 + p) (Phi*), and x-bar in I++.
/// `corrupt` replaces the torus condition by a strictly weaker one (negative control).
inline bool support_predicate(unsigned long p, std::size_t ell, Side side, const mpq_class& z,
                              const std::vector<mpq_class>& y, bool corrupt = false) {
  bool torus_ok;
  if (side == Side::Phi) torus_ok = in_subset(z, p, corrupt ? Subset::Units : Subset::OnePlusP);
  else torus_ok = corrupt ? in_subset(1 / z, p, Subset::MaxIdeal) : in_subset(1 / z, p, Subset::UniformizerOnePlusP);
  return torus_ok && iwahori_test(xbar(y, ell, p), IwahoriLevel::IPlusPlus);
}

inline ScanReport scan_support(unsigned long p, std::size_t ell, Side side, int level, int cutoff, bool corrupt = false) {
  ScanReport rep;
  rep.prime = p;
  rep.ell = ell;
  rep.side = side;
  rep.level = level;
  rep.cutoff = cutoff;
  const WhittakerSpec spec = WhittakerSpec::so(ell, p, 1);
  for_each_so_point(p, ell, side, Mode::BruteForce, level, cutoff,
                    [&](const SamplePoint& pt, const mpq_class&, const mpq_class&) {
                      ++rep.points;
                      const bool predicted = support_predicate(p, ell, side, pt.z, pt.y, corrupt);
                      if (pt.whittaker) {
                        const CyclotomicNumber value =
                            spec.zeta_value(0) * CyclotomicNumber::from_root(pt.whittaker->phase);
                        std::string text = value.to_string();
                        if (pt.whittaker->power % 2 != 0) text = "zeta * (" + text + ")";
                        rep.nonvanishing.push_back(ScanPoint{pt.z, pt.y, text});
                        if (!predicted) ++rep.false_positives;
                      } else if (predicted) {
                        ++rep.false_negatives;
                      }
                    });
  return rep;
}

}  // namespace ssgamma

// SPDX-License-Identifier: Apache-2.0
#include "qwalk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "qwalk/asymptotics.hpp"
#include "qwalk/correlations.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/observables.hpp"

namespace qwalk::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

// Shared simulation runs; every evolve goes through here so the CPTP check sees all of them.
class Context {
 public:
  explicit Context(const Options& o) : opts(o) {}

  const Options& opts;
  InvariantReport invariants;

  int horizon() const { return opts.quick ? 50 : 100; }
  int quadrature() const { return opts.quick ? 1024 : 4096; }
  bool tampered(const std::string& name) const { return opts.tamper == name; }

  const Trajectory& run(const std::string& spec, int horizon, const CoinSpec& coin = CoinSpec::symmetric(),
                        const std::string& coin_tag = "sym") {
    const std::string key = spec + "|" + std::to_string(horizon) + "|" + coin_tag;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    EvolveOptions eo;
    eo.keep_distributions = true;
    eo.check_invariants = true;
    eo.eigen_check_stride = 10;
    Trajectory tr = evolve_from_origin(coin, parse_schedule(spec), horizon, eo);
    invariants.merge(tr.invariants);
    tr.final_state.reset();
    return cache_.emplace(key, std::move(tr)).first->second;
  }

 private:
  std::map<std::string, Trajectory> cache_;
};

using CheckFn = std::function<void(Context&, CheckResult&)>;

void oracle_equivalence(Context& ctx, CheckResult& r) {
  const int horizon = 50;
  const int n_k = ctx.quadrature();
  double worst_mean = 0;
  double worst_second = 0;
  bool converged = true;
  for (const std::string spec : {"const:1", "const:0", "cos:0.1", "saw:40:0:1"}) {
    for (const auto& [coin, tag] : {std::pair{CoinSpec::symmetric(), "sym"}, std::pair{CoinSpec::up(), "up"}}) {
      const Trajectory& tr = ctx.run(spec, horizon, coin, tag);
      momentum::ExactMomentOptions mo;
      mo.coin = coin;
      const auto series = momentum::exact_moments(parse_schedule(spec), horizon, n_k, mo);
      converged = converged && series.converged;
      for (int t = 0; t <= horizon; ++t) {
        const auto& rec = tr.records[static_cast<size_t>(t)];
        const auto& pt = series.points[static_cast<size_t>(t)];
        const double second = rec.variance + rec.mean * rec.mean;
        worst_mean = std::max(worst_mean, std::abs(rec.mean - pt.mean));
        worst_second = std::max(worst_second, std::abs(second - pt.second));
      }
    }
  }
  r.pass = worst_mean <= 1e-8 && worst_second <= 1e-8 && converged;
  r.measured = "max|d<x>| = " + num(worst_mean, 3) + ", max|d<x^2>| = " + num(worst_second, 3) +
               (converged ? "" : " (quadrature warning)");
  r.threshold = "<= 1e-8 for t <= 50, N_k = " + std::to_string(n_k);
  r.note = "schedules const:1, const:0, cos:0.1, saw:40:0:1; coins (|+>+i|->)/sqrt2 and |+>";
}

void ballistic_constant(Context& ctx, CheckResult& r) {
  const auto bc = asymptotics::ballistic_constants(4096);
  double reference = bc.variance_coefficient;
  if (ctx.tampered(r.name)) reference *= 1.25;
  const int t_far = ctx.opts.quick ? 100 : 200;
  const int t_near = t_far / 2;
  const Trajectory& tr = ctx.run("const:1", t_far, CoinSpec::up(), "up");
  const double far = tr.records[static_cast<size_t>(t_far)].variance / (double(t_far) * t_far);
  const double near = tr.records[static_cast<size_t>(t_near)].variance / (double(t_near) * t_near);
  const double rel = std::abs(far - reference) / reference;
  const bool approach = std::abs(far - reference) < std::abs(near - reference);
  r.pass = rel <= 0.05 && approach;
  r.measured = "V(" + std::to_string(t_far) + ")/t^2 = " + num(far, 7) + " (rel. err " + num(100 * rel, 3) +
               "%), V(" + std::to_string(t_near) + ")/t^2 = " + num(near, 7);
  r.threshold = "within 5% of C2 - C1^2 = " + num(reference, 7) + " and closer than at t/2";
  const Trajectory& sym = ctx.run("const:1", t_near);
  r.note = "coin |+>; the symmetric coin has <x> = 0 and gives V/t^2 = " +
           num(sym.records.back().variance / (double(t_near) * t_near), 5) + " -> C2";
}

void diffusive_limit(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  const Trajectory& tr = ctx.run("const:0", horizon);
  double worst_var = 0;
  double worst_tv = 0;
  for (int t = 0; t <= horizon; ++t) {
    worst_var = std::max(worst_var, std::abs(tr.records[static_cast<size_t>(t)].variance - t));
    worst_tv = std::max(worst_tv, total_variation(tr.distributions[static_cast<size_t>(t)],
                                                  asymptotics::binomial_distribution(t)));
  }
  r.pass = worst_var <= 1e-10 && worst_tv < 1e-10;
  r.measured = "max|V - t| = " + num(worst_var, 3) + ", max TV to binomial = " + num(worst_tv, 3);
  r.threshold = "<= 1e-10 and < 1e-10 for t <= " + std::to_string(horizon);
}

void oscillation_bounds(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  const Trajectory& driven = ctx.run("cos:0.1", horizon);
  const Trajectory& unitary = ctx.run("const:1", horizon);
  double lower = 1e300;
  double upper = 1e300;
  int decreases = 0;
  for (int t = 0; t <= horizon; ++t) {
    const double v = driven.records[static_cast<size_t>(t)].variance;
    lower = std::min(lower, v - (t - 1e-6));
    upper = std::min(upper, unitary.records[static_cast<size_t>(t)].variance + 1e-6 - v);
    if (t < horizon && driven.records[static_cast<size_t>(t + 1)].variance < v) ++decreases;
  }
  const bool bounds = lower >= 0 && upper >= 0;
  const double v32 = driven.records[32].variance;
  const double u32 = unitary.records[32].variance;
  const double v48 = driven.records[48].variance;
  const double quantum_gap = std::abs(v32 - u32) / u32;
  const double classical_gap = std::abs(v48 - 48.0) / 48.0;
  r.pass = bounds && decreases > 0;
  r.measured = std::string("bounds ") + (bounds ? "hold" : "violated") + ", steps with V(t+1) < V(t): " +
               std::to_string(decreases) + "; V(32) = " + num(v32, 5) + " vs unitary " + num(u32, 5) + " (" +
               num(100 * quantum_gap, 3) + "%), V(48) = " + num(v48, 5) + " vs 48 (" + num(100 * classical_gap, 3) +
               "%)";
  r.threshold = "t - 1e-6 <= V <= V_unitary + 1e-6 and at least one decrease (hard); targets 10% at t=32, 25% at t=48";
  r.note = std::string("t=32 target ") + (quantum_gap <= 0.10 ? "met" : "missed") + ", t=48 target " +
           (classical_gap <= 0.25 ? "met" : "missed");
}

void periodic_generality(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  bool ok = true;
  std::string detail;
  for (const std::string spec : {"cos:0.5", "cos:0.3", "saw:40:0:1"}) {
    const auto maxima = local_maxima(ctx.run(spec, horizon).variances());
    ok = ok && maxima.size() >= 2;
    detail += (detail.empty() ? "" : ", ") + spec + ": " + std::to_string(maxima.size());
  }
  r.pass = ok;
  r.measured = "local maxima of V: " + detail;
  r.threshold = ">= 2 each for t <= " + std::to_string(horizon);
}

void entropy_monotonicity(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  double worst = 1e300;
  for (const std::string spec : {"const:1", "const:0", "cos:0.1"}) {
    const auto h = ctx.run(spec, horizon).entropies();
    for (size_t t = 0; t + 1 < h.size(); ++t) worst = std::min(worst, h[t + 1] - h[t]);
  }
  r.pass = worst >= -1e-6;
  r.measured = "min H(t+1) - H(t) = " + num(worst, 4);
  r.threshold = ">= -1e-6 for const:1, const:0, cos:0.1";
}

const std::vector<std::string>& suite_schedules() {
  static const std::vector<std::string> s{"const:1", "const:0", "cos:0.1", "cos:0.5", "cos:0.3", "saw:40:0:1",
                                          "piecewise:0-10=1,10-30=0,30-inf=1"};
  return s;
}

void symmetry_parity(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  double sym = 0;
  double par = 0;
  for (const auto& spec : suite_schedules()) {
    const Trajectory& tr = ctx.run(spec, horizon);
    for (int t = 0; t <= horizon; ++t) {
      const auto& p = tr.distributions[static_cast<size_t>(t)];
      sym = std::max(sym, symmetry_defect(p));
      par = std::max(par, parity_defect(p, t));
    }
  }
  r.pass = sym <= 1e-10 && par == 0.0;
  r.measured = "max symmetry defect = " + num(sym, 3) + ", max odd-parity weight = " + num(par, 3);
  r.threshold = "<= 1e-10 and exactly 0, all schedules, t <= " + std::to_string(horizon);
}

void cptp_invariants(Context& ctx, CheckResult& r) {
  // Make sure every suite schedule has been run even when other checks were filtered out.
  for (const auto& spec : suite_schedules()) ctx.run(spec, ctx.horizon());
  const auto& inv = ctx.invariants;
  r.pass = inv.max_trace_defect <= 1e-12 && inv.max_hermiticity_defect <= 1e-12 && inv.min_eigenvalue >= -1e-10;
  r.measured = "trace defect " + num(inv.max_trace_defect, 3) + ", Hermiticity defect " +
               num(inv.max_hermiticity_defect, 3) + ", min eigenvalue " + num(inv.min_eigenvalue, 3) + " over " +
               std::to_string(inv.steps_checked) + " steps (" + std::to_string(inv.eigen_checks) + " spectra)";
  r.threshold = "1e-12, 1e-12, >= -1e-10 (spectrum every 10th step)";
}

void mixture_reproduction(Context& ctx, CheckResult& r) {
  const auto schedule = DrivingSchedule::cosine(0.1);
  const Trajectory& tr = ctx.run("cos:0.1", 94);
  double worst_abs = 0;
  double worst_signed = 0;
  std::string detail;
  for (const int t : {90, 94}) {
    const auto& sim = tr.distributions[static_cast<size_t>(t)];
    const double w = asymptotics::mixture_weight(schedule, t, asymptotics::MixtureWeight::abs_kappa);
    const double ws = asymptotics::mixture_weight(schedule, t, asymptotics::MixtureWeight::signed_kappa);
    const double tv_abs = total_variation(sim, asymptotics::mixture_distribution(t, w, 4096));
    const double tv_signed = total_variation(sim, asymptotics::signed_mixture_distribution(t, ws, 4096));
    worst_abs = std::max(worst_abs, tv_abs);
    worst_signed = std::max(worst_signed, tv_signed);
    detail += (detail.empty() ? "" : "; ") + std::string("t=") + std::to_string(t) + ": TV(|kappa|) " +
              num(tv_abs, 4) + ", TV(kappa) " + num(tv_signed, 4) + ", V_sim " + num(tr.records[size_t(t)].variance, 5) +
              " vs mixture V " + num(asymptotics::mixture_variance(t, w), 5);
  }
  const bool abs_ok = worst_abs <= 0.1;
  const bool signed_ok = worst_signed <= 0.1;
  r.pass = abs_ok || signed_ok;
  r.measured = detail;
  r.threshold = "TV <= 0.1 at t = 90 and 94 (w = |kappa(t)|, or signed kappa if better)";
  r.note = std::string("variant used: ") + (abs_ok || !signed_ok ? "|kappa|" : "signed kappa");
}

void correlations(Context& ctx, CheckResult& r) {
  const int horizon = ctx.horizon();
  const int stride = 2;
  const OptimizerConfig cfg;
  const auto undriven = correlation_trajectory(DrivingSchedule::constant(1.0), horizon, stride, CoinSpec::symmetric(), cfg);
  const auto classical = correlation_trajectory(DrivingSchedule::constant(0.0), horizon, stride, CoinSpec::symmetric(), cfg);
  const auto driven = correlation_trajectory(DrivingSchedule::cosine(0.1), horizon, stride, CoinSpec::symmetric(), cfg);

  double order_violation = 0;  // max of (D - Q) and (-1e-6 - D)
  for (const auto* series : {&undriven, &classical, &driven}) {
    for (const auto& rec : *series) {
      order_violation = std::max({order_violation, rec.discord - rec.mid - 1e-6, -1e-6 - rec.discord});
    }
  }
  double undriven_gap = 0;
  for (const auto& rec : undriven) undriven_gap = std::max(undriven_gap, std::abs(rec.mid - rec.discord));
  double classical_discord = 0;
  for (const auto& rec : classical) classical_discord = std::max(classical_discord, rec.discord);

  std::vector<double> q;
  for (const auto& rec : driven) q.push_back(rec.mid);
  std::vector<int> q_min;
  for (const int i : local_minima(q)) q_min.push_back(driven[static_cast<size_t>(i)].t);
  const auto v_min = local_minima(ctx.run("cos:0.1", horizon).variances());
  bool aligned = !q_min.empty() && !v_min.empty();
  for (const int tq : q_min) {
    const bool near = std::any_of(v_min.begin(), v_min.end(), [tq](int tv) { return std::abs(tv - tq) <= 3; });
    aligned = aligned && near;
  }

  const bool a = order_violation <= 0;
  const bool b = undriven_gap <= 0.05;
  const bool c = classical_discord <= 1e-3;
  r.pass = a && b && c && aligned;
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  r.measured = std::string("(a) ") + (a ? "ok" : "violated") + ", (b) max|Q-D| undriven = " + num(undriven_gap, 3) +
               ", (c) max D classical = " + num(classical_discord, 3) + ", (d) Q minima at " + list(q_min) +
               ", V minima at " + list(v_min);
  r.threshold = "(a) Q >= D >= -1e-6, (b) <= 0.05, (c) <= 1e-3, (d) every Q minimum within 3 steps of a V minimum";
}

void hand_values(Context& ctx, CheckResult& r) {
  const Trajectory& tr = ctx.run("const:1", ctx.horizon());
  const auto& p1 = tr.distributions[1];
  const auto& p2 = tr.distributions[2];
  double err = std::max(std::abs(p1.at(1) - 0.5), std::abs(p1.at(-1) - 0.5));
  err = std::max({err, std::abs(p2.at(-2) - 0.25), std::abs(p2.at(0) - 0.5), std::abs(p2.at(2) - 0.25)});

  const JointState s1 = step(initial_state(CoinSpec::symmetric(), 2), DrivingSchedule::constant(1.0));
  const CorrelationRecord rec = correlation_record(s1);
  const double corr_err = std::max({std::abs(rec.mutual_info - 2.0), std::abs(rec.classical_corr - 1.0),
                                    std::abs(rec.discord - 1.0), std::abs(rec.mid - 1.0)});
  r.pass = err <= 1e-12 && corr_err <= 2e-3;
  r.measured = "max distribution error " + num(err, 3) + "; t=1 (I, C, D, Q) = (" + num(rec.mutual_info) + ", " +
               num(rec.classical_corr) + ", " + num(rec.discord) + ", " + num(rec.mid) + ")";
  r.threshold = "P(+-1)=1/2, (1/4,1/2,1/4) within 1e-12; (2,1,1,1) within 2e-3";
}

void performance(Context& ctx, CheckResult& r) {
  const auto start = Clock::now();
  const Trajectory tr = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::cosine(0.1), 100);
  const double evolve_s = std::chrono::duration<double>(Clock::now() - start).count();
  double quick_s = 0;
  if (ctx.opts.quick) {
    // The quick suite measures itself; see run().
    quick_s = -1;
  } else {
    Options quick;
    quick.quick = true;
    for (const auto& n : check_names()) {
      if (n != "performance") quick.only.push_back(n);
    }
    const auto q0 = Clock::now();
    (void)run(quick);
    quick_s = std::chrono::duration<double>(Clock::now() - q0).count();
  }
  r.pass = evolve_s < 5.0 && (quick_s < 0 || quick_s < 60.0);
  r.measured = "evolve(100) " + num(evolve_s, 3) + " s" + (quick_s >= 0 ? ", quick suite " + num(quick_s, 3) + " s" : "");
  r.threshold = "< 5 s, quick suite < 60 s";
  (void)tr;
}

struct Entry {
  int id;
  std::string name;
  CheckFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {1, "oracle-equivalence", oracle_equivalence},
      {2, "ballistic-constant", ballistic_constant},
      {3, "diffusive-limit", diffusive_limit},
      {4, "oscillation-bounds", oscillation_bounds},
      {5, "periodic-generality", periodic_generality},
      {6, "entropy-monotonicity", entropy_monotonicity},
      {7, "symmetry-parity", symmetry_parity},
      {8, "cptp-invariants", cptp_invariants},
      {9, "mixture-reproduction", mixture_reproduction},
      {10, "correlations", correlations},
      {11, "hand-values", hand_values},
      {12, "performance", performance},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run(const Options& options) {
  Context ctx(options);
  std::vector<CheckResult> results;
  const auto suite_start = Clock::now();
  for (const auto& e : registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.name) == options.only.end()) {
      continue;
    }
    CheckResult r;
    r.id = e.id;
    r.name = e.name;
    const auto start = Clock::now();
    try {
      e.fn(ctx, r);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.measured = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (options.quick && e.name == "performance" && r.measured.rfind("evolve", 0) == 0) {
      const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
      r.pass = r.seconds < 5.0 && total < 60.0;
      r.measured += ", quick suite " + num(total, 3) + " s";
    }
    results.push_back(std::move(r));
  }
  return results;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << std::left << std::setw(22) << r.name
        << std::right << ' ' << r.measured << " | threshold: " << r.threshold;
    if (!r.note.empty()) out << " | " << r.note;
    out << " (" << num(r.seconds, 3) << " s)\n";
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
  out << results.size() - static_cast<size_t>(failed) << "/" << results.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

}  // namespace qwalk::acceptance

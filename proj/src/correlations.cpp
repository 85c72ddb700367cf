// SPDX-License-Identifier: Apache-2.0
#include "qwalk/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {
namespace {

using std::numbers::pi;

constexpr double kOutcomeFloor = 1e-12;
constexpr double kDegenerateGap = 1e-10;

// The four walker-sized blocks <x,c|rho|y,c'> over the occupied positions.
struct CoinBlocks {
  std::array<std::array<ComplexMatrix, 2>, 2> block;
  double walker_entropy = 0;
};

CoinBlocks split_blocks(const JointState& s) {
  const std::vector<int> pos = s.occupied_positions();
  const auto m = static_cast<Eigen::Index>(pos.size());
  CoinBlocks out;
  for (int c = 0; c < 2; ++c) {
    for (int cp = 0; cp < 2; ++cp) {
      ComplexMatrix b(m, m);
      for (Eigen::Index j = 0; j < m; ++j) {
        const Eigen::Index col = s.index(pos[static_cast<size_t>(j)], static_cast<Coin>(cp));
        for (Eigen::Index i = 0; i < m; ++i) {
          b(i, j) = s.rho()(s.index(pos[static_cast<size_t>(i)], static_cast<Coin>(c)), col);
        }
      }
      out.block[static_cast<size_t>(c)][static_cast<size_t>(cp)] = std::move(b);
    }
  }
  if (m > 0) out.walker_entropy = von_neumann_entropy(ComplexMatrix(out.block[0][0] + out.block[1][1]));
  return out;
}

double conditional_entropy(const CoinBlocks& b, const CoinMeasurement& meas) {
  double h = 0;
  for (const auto& v : meas.vectors()) {
    ComplexMatrix post = ComplexMatrix::Zero(b.block[0][0].rows(), b.block[0][0].cols());
    for (size_t c = 0; c < 2; ++c) {
      for (size_t cp = 0; cp < 2; ++cp) {
        const Complex w = std::conj(v(static_cast<Eigen::Index>(c))) * v(static_cast<Eigen::Index>(cp));
        if (w != Complex(0.0, 0.0)) post += w * b.block[c][cp];
      }
    }
    const double p = post.trace().real();
    if (p < kOutcomeFloor) continue;
    post /= p;
    h += p * spectral_entropy_bits(hermitian_eigenvalues(post));
  }
  return h;
}

struct Candidate {
  double value;  // conditional entropy (minimized)
  double theta;
  double phi;
};

// Deterministic Nelder-Mead on (theta, phi).
template <typename F>
std::pair<Candidate, bool> nelder_mead(F&& f, Candidate start, double scale, const OptimizerConfig& cfg) {
  std::array<Candidate, 3> s{start, Candidate{0, start.theta + scale, start.phi},
                             Candidate{0, start.theta, start.phi + scale}};
  for (size_t i = 1; i < 3; ++i) s[i].value = f(s[i].theta, s[i].phi);
  auto order = [&] { std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.value < b.value; }); };
  order();
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const double spread = s[2].value - s[0].value;
    const double size = std::max({std::abs(s[1].theta - s[0].theta), std::abs(s[2].theta - s[0].theta),
                                  std::abs(s[1].phi - s[0].phi), std::abs(s[2].phi - s[0].phi)});
    if (spread < 0.1 * cfg.tolerance && size < 1e-4) return {s[0], true};

    const double ct = 0.5 * (s[0].theta + s[1].theta);
    const double cp = 0.5 * (s[0].phi + s[1].phi);
    auto point = [&](double a) {
      Candidate c{0, ct + a * (s[2].theta - ct), cp + a * (s[2].phi - cp)};
      c.value = f(c.theta, c.phi);
      return c;
    };
    const Candidate r = point(-1.0);
    if (r.value < s[0].value) {
      const Candidate e = point(-2.0);
      s[2] = e.value < r.value ? e : r;
    } else if (r.value < s[1].value) {
      s[2] = r;
    } else {
      const Candidate c = r.value < s[2].value ? point(-0.5) : point(0.5);
      if (c.value < std::min(r.value, s[2].value)) {
        s[2] = c;
      } else {
        for (size_t i = 1; i < 3; ++i) {
          s[i].theta = s[0].theta + 0.5 * (s[i].theta - s[0].theta);
          s[i].phi = s[0].phi + 0.5 * (s[i].phi - s[0].phi);
          s[i].value = f(s[i].theta, s[i].phi);
        }
      }
    }
    order();
  }
  return {s[0], false};
}

// Folds an arbitrary Bloch direction onto theta in [0, pi/2], phi in [0, 2 pi) (projector pairs are
// invariant under n -> -n).
CoinMeasurement canonical(double theta, double phi) {
  const double x = std::sin(theta) * std::cos(phi);
  const double y = std::sin(theta) * std::sin(phi);
  double z = std::cos(theta);
  double nx = x;
  double ny = y;
  if (z < 0) {
    z = -z;
    nx = -x;
    ny = -y;
  }
  double ph = std::atan2(ny, nx);
  if (ph < 0) ph += 2.0 * pi;
  if (std::hypot(nx, ny) < 1e-15) ph = 0.0;
  return {std::acos(std::clamp(z, -1.0, 1.0)), ph};
}

}  // namespace

std::array<Eigen::Vector2cd, 2> CoinMeasurement::vectors() const {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  return {Eigen::Vector2cd(Complex(c, 0.0), e * s), Eigen::Vector2cd(-std::conj(e) * s, Complex(c, 0.0))};
}

std::array<Eigen::Matrix2cd, 2> CoinMeasurement::projectors() const {
  const auto v = vectors();
  return {v[0] * v[0].adjoint(), v[1] * v[1].adjoint()};
}

double conditional_entropy(const JointState& s, const CoinMeasurement& m) {
  return conditional_entropy(split_blocks(s), m);
}

double measured_mutual_information(const JointState& s, const CoinMeasurement& m) {
  const CoinBlocks b = split_blocks(s);
  return b.walker_entropy - conditional_entropy(b, m);
}

double mutual_information(const JointState& s) {
  const ComplexMatrix joint = restrict_to_positions(s, s.occupied_positions());
  const double s_joint = von_neumann_entropy(joint);
  const double s_coin = von_neumann_entropy(reduced_coin(s));
  const double s_walker = von_neumann_entropy(reduced_walker(s));
  return s_walker + s_coin - s_joint;
}

ClassicalCorrelation classical_correlation(const JointState& s, const OptimizerConfig& cfg) {
  if (cfg.grid < 1) throw ContractViolation("classical_correlation: grid must be >= 1");
  const CoinBlocks b = split_blocks(s);
  auto f = [&](double theta, double phi) { return conditional_entropy(b, CoinMeasurement{theta, phi}); };

  const double dtheta = 0.5 * pi / cfg.grid;
  const double dphi = 2.0 * pi / cfg.grid;
  std::vector<Candidate> grid;
  for (int i = 0; i <= cfg.grid; ++i) {
    const double theta = dtheta * i;
    // At the pole every phi describes the same measurement.
    const int n_phi = i == 0 ? 1 : cfg.grid;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = dphi * j;
      grid.push_back({f(theta, phi), theta, phi});
    }
  }
  std::stable_sort(grid.begin(), grid.end(), [](const auto& a, const auto& c) { return a.value < c.value; });

  Candidate best = grid.front();
  bool converged = true;
  if (cfg.refine) {
    const size_t starts = std::min<size_t>(3, grid.size());
    for (size_t i = 0; i < starts; ++i) {
      const auto [found, ok] = nelder_mead(f, grid[i], 0.5 * dtheta, cfg);
      if (found.value < best.value) best = found;
      if (i == 0) converged = ok;
    }
  }
  ClassicalCorrelation out;
  out.bits = b.walker_entropy - best.value;
  out.argmax = canonical(best.theta, best.phi);
  out.converged = converged;
  return out;
}

double quantum_discord(const JointState& s, const OptimizerConfig& cfg) {
  const double d = mutual_information(s) - classical_correlation(s, cfg).bits;
  return (d < 0.0 && d > -1e-6) ? 0.0 : d;
}

MidResult measurement_induced_disturbance(const JointState& s) {
  const Eigen::Matrix2cd rc = reduced_coin(s);
  const double x = 2.0 * rc(0, 1).real();
  const double y = -2.0 * rc(0, 1).imag();
  const double z = (rc(0, 0) - rc(1, 1)).real();
  const double gap = std::sqrt(x * x + y * y + z * z);

  MidResult out;
  if (gap < kDegenerateGap) {
    out.basis = CoinMeasurement::computational();
    out.fallback = true;
  } else {
    out.basis = canonical(std::acos(std::clamp(z / gap, -1.0, 1.0)), std::atan2(y, x));
  }
  out.bits = mutual_information(s) - measured_mutual_information(s, out.basis);
  return out;
}

CorrelationRecord correlation_record(const JointState& s, const OptimizerConfig& cfg) {
  CorrelationRecord r;
  r.t = s.time();
  r.mutual_info = mutual_information(s);
  const ClassicalCorrelation cc = classical_correlation(s, cfg);
  r.classical_corr = cc.bits;
  r.argmax = cc.argmax;
  r.optimizer_warning = !cc.converged;
  r.discord = r.mutual_info - cc.bits;
  if (r.discord < 0.0 && r.discord > -1e-6) r.discord = 0.0;
  const MidResult mid = measurement_induced_disturbance(s);
  r.mid = mid.bits;
  r.mid_fallback = mid.fallback;
  return r;
}

std::vector<CorrelationRecord> correlation_trajectory(const DrivingSchedule& schedule, int horizon, int stride,
                                                      const CoinSpec& coin, const OptimizerConfig& cfg) {
  if (horizon < 0) throw ConfigError("correlation_trajectory: negative horizon");
  if (stride < 1) throw ConfigError("correlation_trajectory: stride must be >= 1");
  std::vector<CorrelationRecord> out;
  JointState state = initial_state(coin, std::max(horizon, 1));
  out.push_back(correlation_record(state, cfg));
  while (state.time() < horizon) {
    state = step(state, schedule);
    if (state.time() % stride == 0) out.push_back(correlation_record(state, cfg));
  }
  return out;
}

}  // namespace qwalk

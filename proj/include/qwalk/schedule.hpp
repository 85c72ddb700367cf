// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qwalk {

/// Coin coherence-retention factor kappa(t) in [-1, 1], evaluated at integer steps.
class DrivingSchedule {
 public:
  struct Constant {
    double value = 1.0;
  };
  /// kappa(t) = cos(eta t), eta in radians per step.
  struct Cosine {
    double eta = 0.1;
  };
  /// Linear ramp lo -> hi over each period, then instant reset.
  struct Sawtooth {
    int period = 40;
    double lo = 0.0;
    double hi = 1.0;
  };
  /// Half-open segments [start, end); end == nullopt means unbounded.
  struct Piecewise {
    struct Segment {
      int start = 0;
      std::optional<int> end;
      double value = 1.0;
    };
    std::vector<Segment> segments;
  };
  /// values[t] is kappa at step t (values[0] belongs to t = 0).
  struct Table {
    std::vector<double> values;
  };

  using Variant = std::variant<Constant, Cosine, Sawtooth, Piecewise, Table>;

  explicit DrivingSchedule(Variant v);

  static DrivingSchedule constant(double c) { return DrivingSchedule(Constant{c}); }
  static DrivingSchedule cosine(double eta) { return DrivingSchedule(Cosine{eta}); }
  static DrivingSchedule sawtooth(int period = 40, double lo = 0.0, double hi = 1.0) {
    return DrivingSchedule(Sawtooth{period, lo, hi});
  }
  /// kappa = 1 on [0, a), 0 on [a, b), 1 from b on.
  static DrivingSchedule off_on_off(int a, int b);

  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

/// kappa at integer step t >= 0. Throws OutOfRange past the end of a table or
/// outside every piecewise segment.
double kappa_at(const DrivingSchedule& s, int t);

/// Human-readable label such as "cos(t/10)" or "const(0)"; parse_schedule accepts it back.
std::string describe(const DrivingSchedule& s);

/**
 * Parses either the command-line grammar
 *   cos:<eta> | const:<c> | saw:<period>:<lo>:<hi> | piecewise:<t0>-<t1>=<v>,... | table:<v0>,<v1>,...
 * (t1 may be "inf") or any string produced by describe(). Throws ConfigError.
 */
DrivingSchedule parse_schedule(std::string_view text);

}  // namespace qwalk

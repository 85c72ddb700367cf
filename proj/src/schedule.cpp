// SPDX-License-Identifier: Apache-2.0
#include "qwalk/schedule.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/format.hpp"

namespace qwalk {
namespace {

constexpr std::string_view kInfinity = "∞";

void check_value(double v, const char* what) {
  if (!(v >= -1.0 && v <= 1.0)) {
    throw ContractViolation(std::string(what) + ": kappa value outside [-1, 1]");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s) {
  s = trim(s);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("schedule: cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

int to_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("schedule: cannot parse integer '" + std::string(s) + "'");
  }
  return v;
}

std::optional<int> to_bound(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == kInfinity) return std::nullopt;
  return to_int(s);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::string_view strip_wrapped(std::string_view s, std::string_view head, char open, char close) {
  s.remove_prefix(head.size());
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ConfigError("schedule: malformed '" + std::string(head) + "' expression");
  }
  return s.substr(1, s.size() - 2);
}

DrivingSchedule parse_piecewise_segments(const std::vector<std::string_view>& parts) {
  DrivingSchedule::Piecewise pw;
  for (const auto part : parts) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ConfigError("schedule: piecewise segment needs '='");
    const auto range = part.substr(0, eq);
    const auto dash = range.find('-');
    if (dash == std::string_view::npos) throw ConfigError("schedule: piecewise segment needs '-'");
    pw.segments.push_back({to_int(range.substr(0, dash)), to_bound(range.substr(dash + 1)),
                           to_double(part.substr(eq + 1))});
  }
  return DrivingSchedule(pw);
}

// "(0,a,1),(a,b,0),(b,inf,1)" -> segments
DrivingSchedule parse_piecewise_tuples(std::string_view body) {
  DrivingSchedule::Piecewise pw;
  body = trim(body);
  while (!body.empty()) {
    if (body.front() == ',') {
      body.remove_prefix(1);
      continue;
    }
    if (body.front() != '(') throw ConfigError("schedule: malformed piecewise tuple");
    const auto close = body.find(')');
    if (close == std::string_view::npos) throw ConfigError("schedule: unterminated piecewise tuple");
    const auto fields = split(body.substr(1, close - 1), ',');
    if (fields.size() != 3) throw ConfigError("schedule: piecewise tuple needs three fields");
    pw.segments.push_back({to_int(fields[0]), to_bound(fields[1]), to_double(fields[2])});
    body.remove_prefix(close + 1);
  }
  return DrivingSchedule(pw);
}

DrivingSchedule parse_table(const std::vector<std::string_view>& parts) {
  DrivingSchedule::Table table;
  for (const auto p : parts) table.values.push_back(to_double(p));
  return DrivingSchedule(table);
}

// cos(t/10) or cos(0.3t)
DrivingSchedule parse_cos_label(std::string_view body) {
  body = trim(body);
  if (starts_with(body, "t/")) return DrivingSchedule::cosine(1.0 / to_double(body.substr(2)));
  if (!body.empty() && body.back() == 't') return DrivingSchedule::cosine(to_double(body.substr(0, body.size() - 1)));
  throw ConfigError("schedule: malformed cos(...) label");
}

}  // namespace

DrivingSchedule::DrivingSchedule(Variant v) : v_(std::move(v)) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Constant>) {
          check_value(s.value, "const");
        } else if constexpr (std::is_same_v<T, Cosine>) {
          if (!std::isfinite(s.eta)) throw ContractViolation("cos: eta must be finite");
        } else if constexpr (std::is_same_v<T, Sawtooth>) {
          if (s.period < 1) throw ContractViolation("saw: period must be >= 1");
          check_value(s.lo, "saw");
          check_value(s.hi, "saw");
        } else if constexpr (std::is_same_v<T, Piecewise>) {
          if (s.segments.empty()) throw ContractViolation("piecewise: no segments");
          for (size_t i = 0; i < s.segments.size(); ++i) {
            const auto& a = s.segments[i];
            check_value(a.value, "piecewise");
            if (a.end && *a.end <= a.start) throw ContractViolation("piecewise: empty segment");
            for (size_t j = 0; j < i; ++j) {
              const auto& b = s.segments[j];
              const bool a_before_b = a.end && *a.end <= b.start;
              const bool b_before_a = b.end && *b.end <= a.start;
              if (!a_before_b && !b_before_a) throw ContractViolation("piecewise: overlapping segments");
            }
          }
        } else {
          for (const double v : s.values) check_value(v, "table");
        }
      },
      v_);
}

DrivingSchedule DrivingSchedule::off_on_off(int a, int b) {
  Piecewise pw;
  pw.segments = {{0, a, 1.0}, {a, b, 0.0}, {b, std::nullopt, 1.0}};
  return DrivingSchedule(pw);
}

double kappa_at(const DrivingSchedule& s, int t) {
  if (t < 0) throw ContractViolation("kappa_at: negative step index");
  return std::visit(
      [t](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DrivingSchedule::Constant>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Cosine>) {
          return std::cos(v.eta * static_cast<double>(t));
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Sawtooth>) {
          const double phase = static_cast<double>(t % v.period) / static_cast<double>(v.period);
          return v.lo + (v.hi - v.lo) * phase;
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Piecewise>) {
          for (const auto& seg : v.segments) {
            if (t >= seg.start && (!seg.end || t < *seg.end)) return seg.value;
          }
          throw OutOfRange("kappa_at: step " + std::to_string(t) + " is not covered by any segment");
        } else {
          if (static_cast<size_t>(t) >= v.values.size()) {
            throw OutOfRange("kappa_at: step " + std::to_string(t) + " is beyond the table");
          }
          return v.values[static_cast<size_t>(t)];
        }
      },
      s.variant());
}

std::string describe(const DrivingSchedule& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DrivingSchedule::Constant>) {
          return "const(" + format_number(v.value) + ")";
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Cosine>) {
          // Prefer t/d when 1/eta is an exact integer, as in cos(t/10).
          const double inv = 1.0 / v.eta;
          if (v.eta != 0.0 && std::nearbyint(inv) == inv && 1.0 / std::nearbyint(inv) == v.eta) {
            return "cos(t/" + format_number(inv) + ")";
          }
          return "cos(" + format_number(v.eta) + "t)";
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Sawtooth>) {
          return "saw(" + std::to_string(v.period) + "," + format_number(v.lo) + "," + format_number(v.hi) + ")";
        } else if constexpr (std::is_same_v<T, DrivingSchedule::Piecewise>) {
          std::string out = "piecewise[";
          for (size_t i = 0; i < v.segments.size(); ++i) {
            const auto& seg = v.segments[i];
            if (i) out += ",";
            out += "(" + std::to_string(seg.start) + "," +
                   (seg.end ? std::to_string(*seg.end) : std::string(kInfinity)) + "," +
                   format_number(seg.value) + ")";
          }
          return out + "]";
        } else {
          std::string out = "table[";
          for (size_t i = 0; i < v.values.size(); ++i) {
            if (i) out += ",";
            out += format_number(v.values[i]);
          }
          return out + "]";
        }
      },
      s.variant());
}

DrivingSchedule parse_schedule(std::string_view text) {
  const std::string_view s = trim(text);
  try {
    if (starts_with(s, "cos:")) return DrivingSchedule::cosine(to_double(s.substr(4)));
    if (starts_with(s, "const:")) return DrivingSchedule::constant(to_double(s.substr(6)));
    if (starts_with(s, "saw:") || s == "saw") {
      if (s == "saw") return DrivingSchedule::sawtooth();
      const auto f = split(s.substr(4), ':');
      if (f.size() != 3) throw ConfigError("schedule: saw needs <period>:<lo>:<hi>");
      return DrivingSchedule::sawtooth(to_int(f[0]), to_double(f[1]), to_double(f[2]));
    }
    if (starts_with(s, "piecewise:")) return parse_piecewise_segments(split(s.substr(10), ','));
    if (starts_with(s, "table:")) return parse_table(split(s.substr(6), ','));

    if (starts_with(s, "const(")) return DrivingSchedule::constant(to_double(strip_wrapped(s, "const", '(', ')')));
    if (starts_with(s, "cos(")) return parse_cos_label(strip_wrapped(s, "cos", '(', ')'));
    if (starts_with(s, "saw(")) {
      const auto f = split(strip_wrapped(s, "saw", '(', ')'), ',');
      if (f.size() != 3) throw ConfigError("schedule: saw(...) needs three fields");
      return DrivingSchedule::sawtooth(to_int(f[0]), to_double(f[1]), to_double(f[2]));
    }
    if (starts_with(s, "piecewise[")) return parse_piecewise_tuples(strip_wrapped(s, "piecewise", '[', ']'));
    if (starts_with(s, "table[")) return parse_table(split(strip_wrapped(s, "table", '[', ']'), ','));
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("schedule: unrecognized specification '" + std::string(s) + "'");
}

}  // namespace qwalk

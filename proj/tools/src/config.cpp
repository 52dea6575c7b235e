#include "ccrsim/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "ccrsim/errors.hpp"

namespace ccrsim::cli {

namespace {

using interferometer::Experiment;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

bool is_angle(SweepVariable v) { return v == SweepVariable::kAlpha || v == SweepVariable::kPhi; }

SweepVariable parse_variable(std::string_view name) {
  if (name == "alpha") return SweepVariable::kAlpha;
  if (name == "phi") return SweepVariable::kPhi;
  if (name == "overlap") return SweepVariable::kOverlap;
  if (name == "t") return SweepVariable::kTime;
  if (name == "deltaT") return SweepVariable::kDeltaT;
  if (name == "L") return SweepVariable::kLength;
  if (name == "h") return SweepVariable::kHeight;
  throw InvalidInput("sweep: unknown variable " + quoted(name) +
                     " (expected alpha, phi, overlap, t, deltaT, L or h)");
}

void require(bool ok, std::string_view field, const std::string& what) {
  if (!ok) throw InvalidInput(std::string(field) + ": " + what);
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kAlpha: return "alpha";
    case SweepVariable::kPhi: return "phi";
    case SweepVariable::kOverlap: return "overlap";
    case SweepVariable::kTime: return "t";
    case SweepVariable::kDeltaT: return "deltaT";
    case SweepVariable::kLength: return "L";
    case SweepVariable::kHeight: return "h";
  }
  return "?";
}

std::string_view to_string(Mode m) { return m == Mode::kFlat ? "flat" : "newtonian"; }

std::string_view to_string(Experiment e) { return e == Experiment::kQdce ? "qdce" : "qcre"; }

double Sweep::value(std::size_t i) const {
  if (steps <= 1) return start;
  if (i + 1 == steps) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

double parse_number(std::string_view text, std::string_view field) {
  const auto s = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw InvalidInput(std::string(field) + ": cannot parse " + quoted(text) + " as a number");
  }
  return v;
}

double parse_angle(std::string_view text, std::string_view field) {
  auto s = trim(text);
  if (s.size() > 3 && s.substr(s.size() - 3) == "deg") {
    return parse_number(s.substr(0, s.size() - 3), field) * std::numbers::pi / 180.0;
  }
  return parse_number(s, field);
}

Sweep parse_sweep(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    parts.push_back(trim(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos)));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4) throw InvalidInput("sweep: expected var:start:stop:steps, got " + quoted(text));
  Sweep sweep;
  sweep.variable = parse_variable(parts[0]);
  if (is_angle(sweep.variable)) {
    sweep.start = parse_angle(parts[1], "sweep start");
    sweep.stop = parse_angle(parts[2], "sweep stop");
  } else {
    sweep.start = parse_number(parts[1], "sweep start");
    sweep.stop = parse_number(parts[2], "sweep stop");
  }
  const double steps = parse_number(parts[3], "sweep steps");
  if (!(steps >= 1.0 && steps <= 1e7 && std::floor(steps) == steps)) {
    throw InvalidInput("sweep steps: must be a whole number between 1 and 1e7, got " + quoted(parts[3]));
  }
  sweep.steps = static_cast<std::size_t>(steps);
  return sweep;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"experiment", "alpha",  "phi",   "spin_theta", "mode",
                                             "g",          "x0",     "h",     "L",          "u",
                                             "overlap",    "t",      "deltaT", "phase_rate", "sweep"};
  return keys;
}

void ScenarioConfig::set(std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  if (key == "experiment") {
    if (value == "qdce") {
      experiment = Experiment::kQdce;
    } else if (value == "qcre") {
      experiment = Experiment::kQcre;
    } else {
      throw InvalidInput("experiment: expected qdce or qcre, got " + quoted(value));
    }
  } else if (key == "mode") {
    if (value == "flat") {
      mode = Mode::kFlat;
    } else if (value == "newtonian") {
      mode = Mode::kNewtonian;
    } else {
      throw InvalidInput("mode: expected flat or newtonian, got " + quoted(value));
    }
  } else if (key == "alpha") {
    alpha = parse_angle(value, key);
  } else if (key == "phi") {
    phi = parse_angle(value, key);
  } else if (key == "spin_theta" || key == "spin-theta") {
    spin_theta = parse_angle(value, "spin_theta");
  } else if (key == "g") {
    g = parse_number(value, key);
  } else if (key == "x0") {
    x0 = parse_number(value, key);
  } else if (key == "h") {
    h = parse_number(value, key);
  } else if (key == "L") {
    L = parse_number(value, key);
  } else if (key == "u") {
    u = parse_number(value, key);
  } else if (key == "overlap") {
    overlap = parse_number(value, key);
  } else if (key == "t") {
    t = parse_number(value, key);
  } else if (key == "deltaT") {
    delta_t = parse_number(value, key);
  } else if (key == "phase_rate" || key == "phase-rate") {
    phase_rate = parse_number(value, "phase_rate");
  } else if (key == "sweep") {
    sweep = parse_sweep(value);
  } else {
    throw InvalidInput("unknown configuration key " + quoted(key));
  }
}

void ScenarioConfig::validate() const {
  require(alpha >= -1e-12 && alpha <= std::numbers::pi / 2 + 1e-12, "alpha", "must lie in [0, pi/2]");
  require(std::isfinite(phi), "phi", "must be finite");
  require(std::isfinite(spin_theta), "spin_theta", "must be finite");
  require(std::isfinite(g) && g >= 0.0, "g", "must be non-negative");
  require(std::isfinite(x0), "x0", "must be finite");
  require(std::isfinite(h) && h >= 0.0, "h", "must be non-negative");
  require(std::isfinite(L) && L > 0.0, "L", "must be positive");
  require(u > 0.0 && u < 1.0, "u", "must lie in (0, 1), in units of c");
  if (overlap) {
    require(*overlap >= 0.0 && *overlap <= 1.0, "overlap", "must lie in [0, 1]");
    require(mode == Mode::kFlat, "overlap", "only used in flat mode; newtonian mode derives it");
  }
  if (t) {
    require(mode == Mode::kNewtonian, "t", "only used in newtonian mode");
    require(std::isfinite(*t) && *t >= 0.0, "t", "must be non-negative");
  }
  if (delta_t) {
    require(mode == Mode::kNewtonian, "deltaT", "only used in newtonian mode");
    require(std::isfinite(*delta_t) && *delta_t >= 0.0, "deltaT", "must be non-negative");
    require(!t, "deltaT", "cannot be combined with t");
  }
  if (phase_rate) {
    require(std::isfinite(*phase_rate), "phase_rate", "must be finite");
    require(delta_t.has_value() || (sweep && sweep->variable == SweepVariable::kDeltaT), "phase_rate",
            "only used together with deltaT");
  }
  if (sweep) {
    const auto v = sweep->variable;
    const bool newtonian_only = v == SweepVariable::kTime || v == SweepVariable::kDeltaT ||
                                v == SweepVariable::kLength || v == SweepVariable::kHeight;
    if (newtonian_only) require(mode == Mode::kNewtonian, "sweep", "variable needs --mode newtonian");
    if (v == SweepVariable::kOverlap) require(mode == Mode::kFlat, "sweep", "overlap can only be swept in flat mode");
    require(!(v == SweepVariable::kTime && delta_t), "sweep", "cannot sweep t while deltaT is set");
    require(!(v == SweepVariable::kDeltaT && t), "sweep", "cannot sweep deltaT while t is set");
  }
}

ScenarioConfig ScenarioConfig::at(SweepVariable variable, double value) const {
  ScenarioConfig c = *this;
  c.sweep.reset();
  switch (variable) {
    case SweepVariable::kAlpha: c.alpha = value; break;
    case SweepVariable::kPhi: c.phi = value; break;
    case SweepVariable::kOverlap: c.overlap = value; break;
    case SweepVariable::kTime: c.t = value; break;
    case SweepVariable::kDeltaT: c.delta_t = value; break;
    case SweepVariable::kLength: c.L = value; break;
    case SweepVariable::kHeight: c.h = value; break;
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("config: cannot open " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput(path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    try {
      base.set(trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const InvalidInput& e) {
      throw InvalidInput(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

}  // namespace ccrsim::cli

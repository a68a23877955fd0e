// Copyright 2026 The nlmotion Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlmotion/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "nlmotion/fock.hpp"

namespace nlmotion::cli {
namespace {

const std::set<std::string, std::less<>> kCommonKeys = {
    "name",    "scenario",   "omega_abs",   "omega_phase", "alpha_re",   "alpha_im",
    "fock_n",  "times",      "time_unit",   "outputs",     "qgrid_re",   "qgrid_im",
    "qgrid_step", "qgrid_times", "peak_floor", "zones_n_max", "override_cutoff"};
const std::set<std::string, std::less<>> kOneModeKeys = {"k", "eta", "cutoff"};
const std::set<std::string, std::less<>> kMultimodeKeys = {"s1", "s2", "etas", "cutoffs"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    items.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view text, std::string_view want) {
  std::ostringstream msg;
  msg << "key '" << key << "': cannot parse '" << text << "' as " << want;
  throw ConfigError(msg.str());
}

double to_double(std::string_view key, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size() ||
      !std::isfinite(value)) {
    bad_value(key, text, "a finite number");
  }
  return value;
}

int to_int(std::string_view key, std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    bad_value(key, text, "an integer");
  }
  return value;
}

bool to_bool(std::string_view key, std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  bad_value(key, text, "true or false");
}

std::vector<double> to_doubles(std::string_view key, std::string_view text) {
  if (text.empty()) return {};
  std::vector<double> out;
  for (auto item : split_list(text)) out.push_back(to_double(key, item));
  return out;
}

std::vector<int> to_ints(std::string_view key, std::string_view text) {
  if (text.empty()) return {};
  std::vector<int> out;
  for (auto item : split_list(text)) out.push_back(to_int(key, item));
  return out;
}

Interval to_interval(std::string_view key, std::string_view text) {
  const auto values = to_doubles(key, text);
  if (values.size() != 2 || values[0] > values[1]) bad_value(key, text, "'lo, hi' with lo <= hi");
  return {values[0], values[1]};
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    if constexpr (std::is_same_v<T, double>) {
      out += format_number(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

int default_cutoff(const SimulationConfig& c, std::size_t mode) {
  if (c.initial == InitialKind::kFock) {
    return recommended_cutoff(std::sqrt(static_cast<double>(c.fock_n[mode])));
  }
  return recommended_cutoff(Complex(c.alpha_re[mode], c.alpha_im[mode]));
}

void validate(SimulationConfig& c) {
  const std::size_t modes = c.active_mode_count();
  if (c.scenario == Scenario::kResonantMultimode && modes == 0) {
    throw ConfigError("key 'etas': at least one Lamb-Dicke parameter must be > 0");
  }
  for (double eta : c.etas) {
    if (eta < 0.0) throw ConfigError("Lamb-Dicke parameters must be >= 0");
  }
  if (c.omega_abs < 0.0) throw ConfigError("key 'omega_abs': must be >= 0");
  if (c.scenario == Scenario::kOneMode && c.k < 0) {
    throw ConfigError("key 'k': sideband order must be >= 0");
  }

  if (c.initial == InitialKind::kFock) {
    if (c.fock_n.size() != modes) {
      throw ConfigError("key 'fock_n': expected one level per active mode");
    }
    if (std::any_of(c.fock_n.begin(), c.fock_n.end(), [](int n) { return n < 0; })) {
      throw ConfigError("key 'fock_n': levels must be >= 0");
    }
  } else {
    if (c.alpha_re.size() != modes) {
      throw ConfigError("key 'alpha_re': expected one amplitude per active mode");
    }
    if (c.alpha_im.empty()) c.alpha_im.assign(modes, 0.0);
    if (c.alpha_im.size() != modes) {
      throw ConfigError("key 'alpha_im': expected one amplitude per active mode");
    }
  }

  if (c.cutoffs.empty()) {
    for (std::size_t m = 0; m < modes; ++m) c.cutoffs.push_back(default_cutoff(c, m));
  }
  if (c.cutoffs.size() != modes) {
    throw ConfigError(std::string("key '") +
                      (c.scenario == Scenario::kOneMode ? "cutoff" : "cutoffs") +
                      "': expected one cutoff per active mode");
  }
  for (std::size_t m = 0; m < modes; ++m) {
    if (c.cutoffs[m] < 1) throw ConfigError("cutoffs must be >= 1");
    if (c.initial == InitialKind::kFock && c.fock_n[m] >= c.cutoffs[m]) {
      throw ConfigError("key 'fock_n': level must be below the mode cutoff");
    }
  }

  if (c.times.empty()) throw ConfigError("key 'times': at least one sample time is required");
  for (std::size_t i = 1; i < c.times.size(); ++i) {
    if (!(c.times[i] > c.times[i - 1])) {
      throw ConfigError("key 'times': sample times must be strictly increasing");
    }
  }
  try {
    (void)c.time_axis();
  } catch (const InputError& e) {
    throw ConfigError(std::string("key 'time_unit': inconsistent with the scenario: ") + e.what());
  }
  if (c.time_unit == TimeUnit::kEtaOmegaT && c.scenario != Scenario::kOneMode) {
    throw ConfigError("key 'time_unit': eta_omega_t needs the one_mode scenario");
  }

  if (!c.outputs.observables && !c.outputs.qgrid && !c.outputs.zones) {
    throw ConfigError("key 'outputs': request at least one output");
  }
  if (c.scenario != Scenario::kOneMode && (c.outputs.qgrid || c.outputs.zones)) {
    throw ConfigError("key 'outputs': qgrid and zones need the one_mode scenario");
  }
  if (c.outputs.zones && !(c.etas[0] > 0.0)) {
    throw ConfigError("key 'outputs': zones need eta > 0");
  }
  if (!(c.qgrid_step > 0.0)) throw ConfigError("key 'qgrid_step': must be > 0");
  for (double t : c.qgrid_times) {
    if (std::find(c.times.begin(), c.times.end(), t) == c.times.end()) {
      throw ConfigError("key 'qgrid_times': " + format_number(t) + " is not a sample time");
    }
  }
  if (c.peak_floor < 0.0) throw ConfigError("key 'peak_floor': must be >= 0");
  if (c.zones_n_max < 1) throw ConfigError("key 'zones_n_max': must be >= 1");
}

}  // namespace

std::string_view to_string(Scenario scenario) {
  return scenario == Scenario::kOneMode ? "one_mode" : "resonant_multimode";
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::size_t SimulationConfig::active_mode_count() const {
  if (scenario == Scenario::kOneMode) return 1;
  return static_cast<std::size_t>(std::count_if(etas.begin(), etas.end(),
                                                [](double e) { return e > 0.0; }));
}

Complex SimulationConfig::omega() const { return std::polar(omega_abs, omega_phase); }

TimeAxis SimulationConfig::time_axis() const {
  switch (time_unit) {
    case TimeUnit::kRaw:
      return TimeAxis::raw();
    case TimeUnit::kOmegaT:
      return TimeAxis::omega_t(omega_abs);
    case TimeUnit::kEtaOmegaT:
      return TimeAxis::eta_omega_t(etas[0], omega_abs);
  }
  return TimeAxis::raw();
}

SimulationConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!kCommonKeys.contains(key) && !kOneModeKeys.contains(key) &&
        !kMultimodeKeys.contains(key)) {
      throw ConfigError("unknown key '" + key + "'");
    }
    if (!entries.emplace(key, value).second) {
      throw ConfigError("key '" + key + "' given more than once");
    }
  }

  auto has = [&](std::string_view key) { return entries.find(key) != entries.end(); };
  auto get = [&](std::string_view key) -> std::string_view { return entries.find(key)->second; };

  SimulationConfig c;
  if (has("scenario")) {
    if (get("scenario") == "one_mode") {
      c.scenario = Scenario::kOneMode;
    } else if (get("scenario") == "resonant_multimode") {
      c.scenario = Scenario::kResonantMultimode;
    } else {
      bad_value("scenario", get("scenario"), "one_mode or resonant_multimode");
    }
  }

  const bool one_mode = c.scenario == Scenario::kOneMode;
  std::vector<std::string> required = {"scenario", "times"};
  if (one_mode) {
    required.insert(required.end(), {"k", "eta"});
  } else {
    required.insert(required.end(), {"s1", "s2", "etas"});
  }
  std::vector<std::string> missing;
  for (const auto& key : required) {
    if (!has(key)) missing.push_back(key);
  }
  if (!has("alpha_re") && !has("fock_n")) missing.push_back("alpha_re|fock_n");
  if (!missing.empty()) {
    std::string msg = "missing required key(s):";
    for (const auto& key : missing) msg += " " + key;
    msg += "; scenario " + std::string(to_string(c.scenario)) + " requires";
    for (const auto& key : required) msg += " " + key;
    msg += " and an initial state (alpha_re[, alpha_im] or fock_n)";
    throw ConfigError(msg);
  }

  const auto& foreign = one_mode ? kMultimodeKeys : kOneModeKeys;
  for (const auto& [key, value] : entries) {
    if (foreign.contains(key)) {
      throw ConfigError("key '" + key + "' does not apply to scenario " +
                        std::string(to_string(c.scenario)));
    }
  }
  if (has("fock_n") && (has("alpha_re") || has("alpha_im"))) {
    throw ConfigError("key 'fock_n' cannot be combined with alpha_re/alpha_im");
  }

  if (has("name")) c.name = get("name");
  if (one_mode) {
    c.k = to_int("k", get("k"));
    c.etas = {to_double("eta", get("eta")), 0.0, 0.0};
    if (has("cutoff")) c.cutoffs = {to_int("cutoff", get("cutoff"))};
  } else {
    c.s1 = to_int("s1", get("s1"));
    c.s2 = to_int("s2", get("s2"));
    const auto etas = to_doubles("etas", get("etas"));
    if (etas.empty() || etas.size() > 3) bad_value("etas", get("etas"), "one to three values");
    std::copy(etas.begin(), etas.end(), c.etas.begin());
    if (has("cutoffs")) c.cutoffs = to_ints("cutoffs", get("cutoffs"));
  }
  if (has("omega_abs")) c.omega_abs = to_double("omega_abs", get("omega_abs"));
  if (has("omega_phase")) c.omega_phase = to_double("omega_phase", get("omega_phase"));
  if (has("fock_n")) {
    c.initial = InitialKind::kFock;
    c.fock_n = to_ints("fock_n", get("fock_n"));
  } else {
    c.initial = InitialKind::kCoherent;
    c.alpha_re = to_doubles("alpha_re", get("alpha_re"));
    if (has("alpha_im")) c.alpha_im = to_doubles("alpha_im", get("alpha_im"));
  }
  c.times = to_doubles("times", get("times"));
  if (has("time_unit")) {
    try {
      c.time_unit = parse_time_unit(get("time_unit"));
    } catch (const InputError&) {
      bad_value("time_unit", get("time_unit"), "t, omega_t or eta_omega_t");
    }
  } else if (one_mode && c.k == 1) {
    c.time_unit = TimeUnit::kEtaOmegaT;
  } else {
    c.time_unit = c.omega_abs > 0.0 ? TimeUnit::kOmegaT : TimeUnit::kRaw;
  }
  if (has("outputs")) {
    c.outputs = {false, false, false};
    for (auto item : split_list(get("outputs"))) {
      if (item == "observables") {
        c.outputs.observables = true;
      } else if (item == "qgrid") {
        c.outputs.qgrid = true;
      } else if (item == "zones") {
        c.outputs.zones = true;
      } else {
        bad_value("outputs", item, "observables, qgrid or zones");
      }
    }
  }
  if (has("qgrid_re") != has("qgrid_im")) {
    throw ConfigError("keys 'qgrid_re' and 'qgrid_im' must be given together");
  }
  if (has("qgrid_re")) {
    c.qgrid_window = PhaseWindow{to_interval("qgrid_re", get("qgrid_re")),
                                 to_interval("qgrid_im", get("qgrid_im"))};
  }
  if (has("qgrid_step")) c.qgrid_step = to_double("qgrid_step", get("qgrid_step"));
  if (has("qgrid_times")) c.qgrid_times = to_doubles("qgrid_times", get("qgrid_times"));
  if (has("peak_floor")) c.peak_floor = to_double("peak_floor", get("peak_floor"));
  if (has("zones_n_max")) c.zones_n_max = to_int("zones_n_max", get("zones_n_max"));
  if (has("override_cutoff")) c.override_cutoff = to_bool("override_cutoff", get("override_cutoff"));

  validate(c);
  return c;
}

std::string serialize_config(const SimulationConfig& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "name = " << c.name << '\n';
  out << "scenario = " << to_string(c.scenario) << '\n';
  if (c.scenario == Scenario::kOneMode) {
    out << "k = " << c.k << '\n';
    out << "eta = " << format_number(c.etas[0]) << '\n';
  } else {
    out << "s1 = " << c.s1 << '\n';
    out << "s2 = " << c.s2 << '\n';
    out << "etas = " << join(std::vector<double>(c.etas.begin(), c.etas.end())) << '\n';
  }
  out << "omega_abs = " << format_number(c.omega_abs) << '\n';
  out << "omega_phase = " << format_number(c.omega_phase) << '\n';
  if (c.initial == InitialKind::kFock) {
    out << "fock_n = " << join(c.fock_n) << '\n';
  } else {
    out << "alpha_re = " << join(c.alpha_re) << '\n';
    out << "alpha_im = " << join(c.alpha_im) << '\n';
  }
  out << (c.scenario == Scenario::kOneMode ? "cutoff = " : "cutoffs = ") << join(c.cutoffs)
      << '\n';
  out << "times = " << join(c.times) << '\n';
  out << "time_unit = " << to_string(c.time_unit) << '\n';
  std::vector<std::string> outputs;
  if (c.outputs.observables) outputs.emplace_back("observables");
  if (c.outputs.qgrid) outputs.emplace_back("qgrid");
  if (c.outputs.zones) outputs.emplace_back("zones");
  out << "outputs = ";
  for (std::size_t i = 0; i < outputs.size(); ++i) out << (i ? ", " : "") << outputs[i];
  out << '\n';
  if (c.qgrid_window) {
    out << "qgrid_re = " << format_number(c.qgrid_window->re.lo) << ", "
        << format_number(c.qgrid_window->re.hi) << '\n';
    out << "qgrid_im = " << format_number(c.qgrid_window->im.lo) << ", "
        << format_number(c.qgrid_window->im.hi) << '\n';
  }
  out << "qgrid_step = " << format_number(c.qgrid_step) << '\n';
  if (!c.qgrid_times.empty()) out << "qgrid_times = " << join(c.qgrid_times) << '\n';
  out << "peak_floor = " << format_number(c.peak_floor) << '\n';
  out << "zones_n_max = " << c.zones_n_max << '\n';
  out << "override_cutoff = " << (c.override_cutoff ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace nlmotion::cli

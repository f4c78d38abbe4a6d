// Copyright 2026 The SliceKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slicekit/telemetry.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "slicekit/document.h"
#include "slicekit/error.h"

namespace slicekit::telemetry {

namespace {

using document::Node;

constexpr double kRiseFraction = 0.2;
constexpr double kFallFraction = 0.1;

[[noreturn]] void Syntax(const std::string &what) {
  throw ParseError(ParseError::Kind::kSyntax, "scenario: " + what);
}

[[noreturn]] void Invariant(const std::string &what) {
  throw ParseError(ParseError::Kind::kInvariant, "scenario: " + what);
}

// Strict map reader: every key must be consumed.
class Fields {
 public:
  Fields(const Node &node, std::string where) : node_(node), where_(std::move(where)) {
    if (!node.is_map()) Syntax(where_ + " must be a record block");
  }

  const Node *Get(std::string_view key) {
    used_.push_back(std::string(key));
    return node_.Find(key);
  }
  const std::string &Text(std::string_view key) {
    const Node *n = Get(key);
    if (n == nullptr) Syntax(where_ + ": missing key '" + std::string(key) + "'");
    if (!n->is_scalar()) Syntax(where_ + ": '" + std::string(key) + "' must be a scalar");
    return n->scalar;
  }
  std::optional<std::string> OptionalText(std::string_view key) {
    if (node_.Find(key) == nullptr) {
      used_.push_back(std::string(key));
      return std::nullopt;
    }
    return Text(key);
  }
  const std::vector<Node> &Items(std::string_view key) {
    static const std::vector<Node> kEmpty;
    const Node *n = Get(key);
    if (n == nullptr || (n->is_map() && n->entries.empty())) return kEmpty;
    if (!n->is_list()) Syntax(where_ + ": '" + std::string(key) + "' must be a list");
    return n->items;
  }
  void Finish() const {
    for (const auto &[key, value] : node_.entries) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        Syntax(where_ + ": unknown key '" + key + "'");
      }
    }
  }

  const std::string &where() const { return where_; }

 private:
  const Node &node_;
  std::string where_;
  std::vector<std::string> used_;
};

std::uint64_t ParseUint(const std::string &text, const std::string &where) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) Syntax(where + ": '" + text + "' is not an integer");
  return v;
}

double ParseDouble(const std::string &text, const std::string &where) {
  double v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || !std::isfinite(v)) {
    Syntax(where + ": '" + text + "' is not a number");
  }
  return v;
}

std::optional<Action> ParseAction(std::string_view text) {
  for (Action a : {Action::kDownload, Action::kTransfer, Action::kIdle}) {
    if (ActionText(a) == text) return a;
  }
  return std::nullopt;
}

std::optional<Peaks> ReadPeaks(Fields &f) {
  auto cpu = f.OptionalText("peak-cpu-pct");
  auto mem = f.OptionalText("peak-mem-mb");
  if (!cpu && !mem) return std::nullopt;
  if (!cpu || !mem) Syntax(f.where() + ": peak-cpu-pct and peak-mem-mb go together");
  return Peaks{ParseDouble(*cpu, f.where()), ParseDouble(*mem, f.where())};
}

void AddPeaks(Node &n, const Peaks &p) {
  n.Add("peak-cpu-pct", FormatValue(p.cpu_pct));
  n.Add("peak-mem-mb", FormatValue(p.mem_mb));
}

std::uint64_t CeilRational(const Rational &r) {
  std::int64_t f = r.Floor();
  return static_cast<std::uint64_t>(Rational(f) == r ? f : f + 1);
}

// Maximum of the cpu trapezoid over [a, b] within a step of length d.
double CpuMax(double a, double b, double d, double base, double peak) {
  double rise_end = kRiseFraction * d;
  double fall_start = (1 - kFallFraction) * d;
  if (b >= rise_end && a <= fall_start) return peak;
  double v = b < rise_end ? base + (peak - base) * (b / rise_end)
                          : base + (peak - base) * ((d - a) / (d - fall_start));
  return std::clamp(v, std::min(base, peak), std::max(base, peak));
}

double MemMax(double b, double d, double base, double peak) {
  double rise_end = kRiseFraction * d;
  if (b >= rise_end) return peak;
  double v = base + (peak - base) * (b / rise_end);
  return std::clamp(v, std::min(base, peak), std::max(base, peak));
}

}  // namespace

std::string FormatValue(double value) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, p);
}

void MetricStore::Record(const MetricSample &sample, std::optional<std::uint64_t> memory_limit_mb) {
  const std::string name(descriptor::MetricNameText(sample.metric));
  auto out_of_range = [&](const std::string &why) {
    throw Error(Errc::kOutOfRange, name + " " + FormatValue(sample.value) + " for " + sample.vm_id + " " + why);
  };
  if (!std::isfinite(sample.value) || sample.value < 0) out_of_range("must be a non-negative number");
  if (sample.metric == MetricName::kCpuUtilizationPct && sample.value > 100) out_of_range("exceeds 100%");
  if (sample.metric == MetricName::kMemoryUtilizationMb && memory_limit_mb &&
      sample.value > static_cast<double>(*memory_limit_mb)) {
    out_of_range("exceeds the flavor's " + std::to_string(*memory_limit_mb) + " MB");
  }
  std::vector<Point> &series = series_[{sample.vm_id, sample.metric}];
  if (!series.empty() && sample.ts <= series.back().ts) {
    throw Error(Errc::kNonMonotonicTimestamp, name + " for " + sample.vm_id + " at ts " + std::to_string(sample.ts) +
                                                  " does not follow ts " + std::to_string(series.back().ts));
  }
  series.push_back({sample.ts, sample.value});
}

std::vector<Point> MetricStore::Series(std::string_view vm_id, MetricName metric) const {
  auto it = series_.find({std::string(vm_id), metric});
  return it == series_.end() ? std::vector<Point>{} : it->second;
}

std::vector<Point> MetricStore::QueryRange(std::string_view vm_id, MetricName metric, std::uint64_t t0,
                                           std::uint64_t t1) const {
  if (t0 > t1) throw Error(Errc::kBadRange, "range start " + std::to_string(t0) + " is after end " + std::to_string(t1));
  std::vector<Point> out;
  auto it = series_.find({std::string(vm_id), metric});
  if (it == series_.end()) return out;
  const auto &s = it->second;
  auto lo = std::lower_bound(s.begin(), s.end(), t0, [](const Point &p, std::uint64_t t) { return p.ts < t; });
  auto hi = std::upper_bound(s.begin(), s.end(), t1, [](std::uint64_t t, const Point &p) { return t < p.ts; });
  out.assign(lo, hi);
  return out;
}

Summary Summarize(const std::vector<Point> &points) {
  if (points.empty()) throw Error(Errc::kEmptySeries, "series has no samples");
  Summary s{points.front().value, 0, points.size()};
  double total = 0;
  for (const Point &p : points) {
    s.max = std::max(s.max, p.value);
    total += p.value;
  }
  s.mean = total / static_cast<double>(points.size());
  return s;
}

Summary MetricStore::Summarize(std::string_view vm_id, MetricName metric) const {
  auto it = series_.find({std::string(vm_id), metric});
  if (it == series_.end()) {
    throw Error(Errc::kEmptySeries, std::string(descriptor::MetricNameText(metric)) + " for " +
                                        std::string(vm_id) + " has no samples");
  }
  return telemetry::Summarize(it->second);
}

std::string MetricStore::ExportCsv() const {
  std::string out = "vm_id,metric,ts,value\n";
  for (const auto &[key, points] : series_) {
    for (const Point &p : points) {
      out += key.first + "," + std::string(descriptor::MetricNameText(key.second)) + "," + std::to_string(p.ts) +
             "," + FormatValue(p.value) + "\n";
    }
  }
  return out;
}

std::size_t MetricStore::size() const {
  std::size_t n = 0;
  for (const auto &[key, points] : series_) n += points.size();
  return n;
}

MetricStore MetricStore::FromParts(std::map<SeriesKey, std::vector<Point>> series) {
  MetricStore store;
  store.series_ = std::move(series);
  return store;
}

std::string_view ActionText(Action action) {
  switch (action) {
    case Action::kDownload: return "download";
    case Action::kTransfer: return "transfer";
    case Action::kIdle: return "idle";
  }
  return "";
}

Rational Step::Duration() const {
  if (action == Action::kIdle) return Rational(static_cast<std::int64_t>(duration_s));
  return Rational(static_cast<std::int64_t>(bytes) * 8) / (rate_mbps * Rational(1000000));
}

Peaks WorkloadScenario::PeaksOf(const Step &step) const {
  if (step.action == Action::kIdle) return {baseline_cpu_pct, baseline_mem_mb};
  if (step.peaks) return *step.peaks;
  auto it = calibration.find(step.action);
  if (it != calibration.end()) return it->second;
  return {baseline_cpu_pct, baseline_mem_mb};
}

WorkloadScenario ParseScenario(std::string_view text) {
  Node root = document::Parse(text);
  Fields f(root, "document");
  if (f.Text("kind") != "scenario") Syntax("kind must be 'scenario'");
  WorkloadScenario sc;
  sc.id = f.Text("id");
  if (auto v = f.OptionalText("baseline-cpu-pct")) sc.baseline_cpu_pct = ParseDouble(*v, "baseline-cpu-pct");
  if (auto v = f.OptionalText("baseline-mem-mb")) sc.baseline_mem_mb = ParseDouble(*v, "baseline-mem-mb");
  const auto &cal = f.Items("calibration");
  for (std::size_t i = 0; i < cal.size(); ++i) {
    Fields c(cal[i], "calibration[" + std::to_string(i) + "]");
    auto action = ParseAction(c.Text("action"));
    if (!action || *action == Action::kIdle) Syntax(c.where() + ": action must be download or transfer");
    auto peaks = ReadPeaks(c);
    if (!peaks) Syntax(c.where() + ": peaks are required");
    if (!sc.calibration.emplace(*action, *peaks).second) Invariant(c.where() + ": duplicate action");
    c.Finish();
  }
  const auto &steps = f.Items("steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Fields s(steps[i], "steps[" + std::to_string(i) + "]");
    Step step;
    step.vm_id = s.Text("vm");
    auto action = ParseAction(s.Text("action"));
    if (!action) Syntax(s.where() + ": unknown action");
    step.action = *action;
    step.start_ts = ParseUint(s.Text("start"), s.where());
    if (step.action == Action::kIdle) {
      step.duration_s = ParseUint(s.Text("duration-s"), s.where());
    } else {
      step.bytes = ParseUint(s.Text("bytes"), s.where());
      try {
        step.rate_mbps = Rational::Parse(s.Text("rate-mbps"));
      } catch (const Error &) {
        Syntax(s.where() + ": bad rate-mbps");
      }
      if (step.rate_mbps <= Rational(0)) Invariant(s.where() + ": rate must be positive");
      step.peaks = ReadPeaks(s);
    }
    s.Finish();
    sc.steps.push_back(std::move(step));
  }
  f.Finish();
  return sc;
}

std::string Serialize(const WorkloadScenario &sc) {
  Node root = Node::Map();
  root.Add("kind", "scenario");
  root.Add("id", sc.id);
  root.Add("baseline-cpu-pct", FormatValue(sc.baseline_cpu_pct));
  root.Add("baseline-mem-mb", FormatValue(sc.baseline_mem_mb));
  Node cal = Node::List();
  for (const auto &[action, peaks] : sc.calibration) {
    Node c = Node::Map();
    c.Add("action", std::string(ActionText(action)));
    AddPeaks(c, peaks);
    cal.Append(std::move(c));
  }
  root.Add("calibration", std::move(cal));
  Node steps = Node::List();
  for (const Step &s : sc.steps) {
    Node n = Node::Map();
    n.Add("vm", s.vm_id);
    n.Add("action", std::string(ActionText(s.action)));
    n.Add("start", std::to_string(s.start_ts));
    if (s.action == Action::kIdle) {
      n.Add("duration-s", std::to_string(s.duration_s));
    } else {
      n.Add("bytes", std::to_string(s.bytes));
      n.Add("rate-mbps", s.rate_mbps.ToString());
      if (s.peaks) AddPeaks(n, *s.peaks);
    }
    steps.Append(std::move(n));
  }
  root.Add("steps", std::move(steps));
  return document::Emit(root);
}

std::uint64_t SampleCount(const Step &step, std::uint32_t period_s) {
  Rational d = step.Duration();
  if (d == Rational(0)) return 1;
  return CeilRational(d / Rational(period_s));
}

std::vector<MetricSample> GenerateScenario(const WorkloadScenario &scenario, const VmLookup &lookup,
                                           std::uint64_t base_ts) {
  std::vector<std::size_t> order(scenario.steps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scenario.steps[a].start_ts < scenario.steps[b].start_ts;
  });

  std::map<std::string, std::uint64_t, std::less<>> busy_until;
  std::vector<MetricSample> out;
  for (std::size_t idx : order) {
    const Step &step = scenario.steps[idx];
    std::optional<ScenarioVm> vm = lookup(step.vm_id);
    if (!vm) throw Error(Errc::kUnknownVm, "scenario names unknown VM " + step.vm_id);
    if (!vm->active) throw Error(Errc::kInvalidState, "VM " + step.vm_id + " is not Active");
    Peaks peaks = scenario.PeaksOf(step);
    if (peaks.cpu_pct < 0 || peaks.cpu_pct > 100 || scenario.baseline_cpu_pct < 0 ||
        scenario.baseline_cpu_pct > 100) {
      throw Error(Errc::kOutOfRange, "cpu calibration outside [0, 100] for " + step.vm_id);
    }
    if (peaks.mem_mb < 0 || peaks.mem_mb > static_cast<double>(vm->memory_mb) || scenario.baseline_mem_mb < 0 ||
        scenario.baseline_mem_mb > static_cast<double>(vm->memory_mb)) {
      throw Error(Errc::kOutOfRange, "memory calibration exceeds the " + std::to_string(vm->memory_mb) +
                                         " MB flavor of " + step.vm_id);
    }

    std::uint64_t cpu_n = SampleCount(step, vm->cpu_period_s);
    std::uint64_t mem_n = SampleCount(step, vm->mem_period_s);
    std::uint64_t start = base_ts + step.start_ts;
    std::uint64_t end = start + std::max(cpu_n * vm->cpu_period_s, mem_n * vm->mem_period_s);
    auto it = busy_until.find(step.vm_id);
    if (it != busy_until.end() && start < it->second) {
      throw Error(Errc::kOverlappingSteps, "steps of " + step.vm_id + " overlap at ts " + std::to_string(start));
    }
    busy_until[step.vm_id] = end;

    const double d = step.Duration().ToDouble();
    const bool flat = d == 0 || step.action == Action::kIdle;
    for (std::uint64_t j = 0; j < cpu_n; ++j) {
      double a = static_cast<double>(j * vm->cpu_period_s);
      double b = std::min(d, static_cast<double>((j + 1) * vm->cpu_period_s));
      double v = flat ? scenario.baseline_cpu_pct : CpuMax(a, b, d, scenario.baseline_cpu_pct, peaks.cpu_pct);
      out.push_back({step.vm_id, MetricName::kCpuUtilizationPct, start + j * vm->cpu_period_s, v});
    }
    for (std::uint64_t j = 0; j < mem_n; ++j) {
      double b = std::min(d, static_cast<double>((j + 1) * vm->mem_period_s));
      double v = flat ? scenario.baseline_mem_mb : MemMax(b, d, scenario.baseline_mem_mb, peaks.mem_mb);
      out.push_back({step.vm_id, MetricName::kMemoryUtilizationMb, start + j * vm->mem_period_s, v});
    }
  }
  return out;
}

}  // namespace slicekit::telemetry

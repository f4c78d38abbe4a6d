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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slicekit/descriptor.h"
#include "slicekit/rational.h"

namespace slicekit::telemetry {

using descriptor::MetricName;

struct MetricSample {
  std::string vm_id;
  MetricName metric = MetricName::kCpuUtilizationPct;
  std::uint64_t ts = 0;
  double value = 0;

  friend bool operator==(const MetricSample &, const MetricSample &) = default;
};

struct Point {
  std::uint64_t ts = 0;
  double value = 0;

  friend bool operator==(const Point &, const Point &) = default;
};

struct Summary {
  double max = 0;
  double mean = 0;
  std::size_t sample_count = 0;

  friend bool operator==(const Summary &, const Summary &) = default;
};

/// Shortest text that reads back to the same double.
std::string FormatValue(double value);

using SeriesKey = std::pair<std::string, MetricName>;

/// Append-only store of per-(VM, metric) series.
class MetricStore {
 public:
  /// OutOfRange unless the value is finite and non-negative, cpu is at most
  /// 100 and memory at most `memory_limit_mb` (when given).
  /// NonMonotonicTimestamp unless ts is after the series' last sample.
  void Record(const MetricSample &sample, std::optional<std::uint64_t> memory_limit_mb = std::nullopt);

  /// BadRange when t0 > t1. Samples with t0 <= ts <= t1, in order.
  std::vector<Point> QueryRange(std::string_view vm_id, MetricName metric, std::uint64_t t0,
                                std::uint64_t t1) const;
  std::vector<Point> Series(std::string_view vm_id, MetricName metric) const;
  /// EmptySeries.
  Summary Summarize(std::string_view vm_id, MetricName metric) const;

  /// `vm_id,metric,ts,value` with a header line; series in key order.
  std::string ExportCsv() const;
  std::size_t size() const;

  const std::map<SeriesKey, std::vector<Point>> &series() const { return series_; }
  static MetricStore FromParts(std::map<SeriesKey, std::vector<Point>> series);
  friend bool operator==(const MetricStore &, const MetricStore &) = default;

 private:
  std::map<SeriesKey, std::vector<Point>> series_;
};

/// Fold over a series. EmptySeries when empty.
Summary Summarize(const std::vector<Point> &points);

// Workload scenarios.

enum class Action { kDownload, kTransfer, kIdle };

std::string_view ActionText(Action action);

struct Peaks {
  double cpu_pct = 0;
  double mem_mb = 0;

  friend bool operator==(const Peaks &, const Peaks &) = default;
};

struct Step {
  std::string vm_id;
  Action action = Action::kIdle;
  std::uint64_t bytes = 0;
  Rational rate_mbps;
  /// Idle steps only.
  std::uint64_t duration_s = 0;
  std::uint64_t start_ts = 0;
  /// Overrides the action calibration.
  std::optional<Peaks> peaks;

  /// bytes * 8 / (rate * 10^6) seconds for transfers; duration_s for idle.
  Rational Duration() const;
  friend bool operator==(const Step &, const Step &) = default;
};

struct WorkloadScenario {
  std::string id;
  double baseline_cpu_pct = 5;
  double baseline_mem_mb = 0;
  std::map<Action, Peaks> calibration;
  std::vector<Step> steps;

  Peaks PeaksOf(const Step &step) const;
  friend bool operator==(const WorkloadScenario &, const WorkloadScenario &) = default;
};

/// `kind: scenario` document. Throws ParseError.
WorkloadScenario ParseScenario(std::string_view text);
std::string Serialize(const WorkloadScenario &scenario);

/// What the generator needs to know about a VM.
struct ScenarioVm {
  bool active = false;
  std::uint64_t memory_mb = 0;
  std::uint32_t cpu_period_s = 1;
  std::uint32_t mem_period_s = 1;
};

using VmLookup = std::function<std::optional<ScenarioVm>(std::string_view vm_id)>;

/// Number of samples a step emits at `period_s`: ceil(duration / period), and
/// one for a zero-length step.
std::uint64_t SampleCount(const Step &step, std::uint32_t period_s);

/// Generates cpu and memory samples for every step, shifted by `base_ts`.
///
/// CPU follows a trapezoid: linear rise from the baseline to the peak over the
/// first 20% of the step, hold, and linear fall back to the baseline over the
/// last 10%. Memory rises linearly to its peak over the first 20% and holds.
/// Sample j covers [j * period, (j + 1) * period) of the step and reports the
/// maximum of the curve over that window, so the series maximum is the peak.
///
/// UnknownVm, InvalidState (VM not Active), OverlappingSteps (per VM, by the
/// span of emitted samples), OutOfRange (peaks outside the VM's limits).
std::vector<MetricSample> GenerateScenario(const WorkloadScenario &scenario, const VmLookup &lookup,
                                           std::uint64_t base_ts = 0);

}  // namespace slicekit::telemetry

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
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/orchestrator.h"
#include "slicekit/telemetry.h"
#include "slicekit/tenancy.h"

namespace slicekit::registry {

/// The whole session: orchestrator, tenant tree and metric store, plus the
/// operations that span more than one of them.
class Engine {
 public:
  orchestrator::Orchestrator &orchestrator() { return orchestrator_; }
  const orchestrator::Orchestrator &orchestrator() const { return orchestrator_; }
  tenancy::TenantTree &tenants() { return tenants_; }
  const tenancy::TenantTree &tenants() const { return tenants_; }
  telemetry::MetricStore &metrics() { return metrics_; }
  const telemetry::MetricStore &metrics() const { return metrics_; }

  /// Binds a RAN slice to a slice instance in both registries. UnknownSlice;
  /// InvalidState when the instance is Failed or past Running;
  /// AlreadyAttached when either side is already bound.
  void BindTenant(const tenancy::SlicePath &path, std::string_view slice_id);
  /// UnknownPath, InvalidState (not bound), UesAttached.
  void UnbindTenant(const tenancy::SlicePath &path);
  /// SliceNotServing unless the bound instance is Running.
  void AttachUe(std::string ue_id, const tenancy::SlicePath &path);

  /// UnknownVm unless some VIM created the VM; memory is limited by its flavor.
  void RecordMetric(const telemetry::MetricSample &sample);

  /// Replays the scenario starting at the current logical time, records every
  /// sample and advances the clock past the last one. All or nothing.
  std::vector<telemetry::MetricSample> RunScenario(const telemetry::WorkloadScenario &scenario);
  /// Scenario view of a VM: Active flag, flavor memory and the collection
  /// periods its VNFD declares (1 s when it declares none).
  std::optional<telemetry::ScenarioVm> ScenarioVmOf(std::string_view vm_id) const;

  friend bool operator==(const Engine &, const Engine &) = default;

 private:
  const orchestrator::SliceInstance &ServingSlice(const tenancy::SlicePath &path) const;

  orchestrator::Orchestrator orchestrator_;
  tenancy::TenantTree tenants_;
  telemetry::MetricStore metrics_;
};

// Snapshots: "SLK1", a little-endian u32 format version, a stream of
// length-prefixed records and a trailing CRC-32 of the record stream.

inline constexpr std::uint32_t kSnapshotVersion = 1;

std::string EncodeSnapshot(const Engine &engine);
/// CorruptSnapshot on bad magic, checksum or framing; UnsupportedVersion.
Engine DecodeSnapshot(std::string_view bytes);

/// IoError when the file cannot be written or read.
void Save(const Engine &engine, const std::string &path);
Engine Load(const std::string &path);

}  // namespace slicekit::registry

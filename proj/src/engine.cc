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

#include <algorithm>

#include "slicekit/error.h"
#include "slicekit/registry.h"

namespace slicekit::registry {

using orchestrator::LifecycleState;

void Engine::BindTenant(const tenancy::SlicePath &path, std::string_view slice_id) {
  const orchestrator::SliceInstance &slice = orchestrator_.GetSlice(slice_id);
  if (slice.state != LifecycleState::kDay0Done && slice.state != LifecycleState::kDay1Configured &&
      slice.state != LifecycleState::kRunning) {
    throw Error(Errc::kInvalidState, "slice " + slice.slice_id + " is " +
                                         std::string(orchestrator::StateText(slice.state)) +
                                         " and cannot serve a tenant");
  }
  if (slice.tenant_ref) {
    throw Error(Errc::kAlreadyAttached, "slice " + slice.slice_id + " already serves " + *slice.tenant_ref);
  }
  tenants_.Bind(path, slice.slice_id);
  orchestrator_.SetTenantRef(slice_id, path.ToString());
}

void Engine::UnbindTenant(const tenancy::SlicePath &path) {
  std::optional<std::string> instance = tenants_.Get(path).instance;
  tenants_.Unbind(path);
  if (instance) orchestrator_.SetTenantRef(*instance, std::nullopt);
}

void Engine::AttachUe(std::string ue_id, const tenancy::SlicePath &path) {
  bool running = false;
  if (tenants_.FindMno(path.plmn) != nullptr) {
    const tenancy::Mvno *mvno = tenants_.FindMno(path.plmn)->Find(path.mvno);
    const tenancy::RanSlice *ran = mvno == nullptr ? nullptr : mvno->Find(path.slice);
    if (ran != nullptr && ran->instance) {
      const orchestrator::SliceInstance *slice = orchestrator_.FindSlice(*ran->instance);
      running = slice != nullptr && slice->state == LifecycleState::kRunning;
    }
  }
  tenants_.AttachUe(std::move(ue_id), path, running);
}

void Engine::RecordMetric(const telemetry::MetricSample &sample) {
  const nfvi::Vim *host = orchestrator_.vims().FindHost(sample.vm_id);
  if (host == nullptr) throw Error(Errc::kUnknownVm, "no VIM has created " + sample.vm_id);
  metrics_.Record(sample, host->FindVm(sample.vm_id)->flavor.memory_mb);
}

std::optional<telemetry::ScenarioVm> Engine::ScenarioVmOf(std::string_view vm_id) const {
  const nfvi::Vim *host = orchestrator_.vims().FindHost(vm_id);
  if (host == nullptr) return std::nullopt;
  const nfvi::VmRecord &vm = *host->FindVm(vm_id);
  telemetry::ScenarioVm out{vm.state == nfvi::VmState::kActive, vm.flavor.memory_mb, 1, 1};
  if (const descriptor::Vnfd *vnfd = orchestrator_.catalog().FindVnfd(vm.vnfd_id)) {
    for (const descriptor::MetricSpec &m : vnfd->metrics) {
      if (m.target_vdu != vm.vdu_id) continue;
      if (m.name == descriptor::MetricName::kCpuUtilizationPct) out.cpu_period_s = m.collection_period_s;
      if (m.name == descriptor::MetricName::kMemoryUtilizationMb) out.mem_period_s = m.collection_period_s;
    }
  }
  return out;
}

std::vector<telemetry::MetricSample> Engine::RunScenario(const telemetry::WorkloadScenario &scenario) {
  const nfvi::LogicalTime base = orchestrator_.clock().now() + 1;
  std::vector<telemetry::MetricSample> samples = telemetry::GenerateScenario(
      scenario, [this](std::string_view id) { return ScenarioVmOf(id); }, base);
  telemetry::MetricStore next = metrics_;
  nfvi::LogicalTime last = orchestrator_.clock().now();
  for (const telemetry::MetricSample &s : samples) {
    next.Record(s, orchestrator_.vims().FindHost(s.vm_id)->FindVm(s.vm_id)->flavor.memory_mb);
    last = std::max(last, s.ts);
  }
  metrics_ = std::move(next);
  orchestrator_.clock().Set(last);
  return samples;
}

}  // namespace slicekit::registry

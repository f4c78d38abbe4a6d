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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/rational.h"

namespace slicekit::tenancy {

struct CellConfig {
  std::uint32_t total_prbs = 100;

  friend bool operator==(const CellConfig &, const CellConfig &) = default;
};

/// "plmn/mvno/slice".
struct SlicePath {
  std::string plmn;
  std::string mvno;
  std::string slice;

  std::string ToString() const { return plmn + "/" + mvno + "/" + slice; }
  static std::optional<SlicePath> Parse(std::string_view text);
  friend auto operator<=>(const SlicePath &, const SlicePath &) = default;
};

struct RanSlice {
  std::string slice_id;
  /// Fraction of the owning MVNO's quota, in (0, 1].
  Rational guaranteed_share;
  /// Orchestrator slice instance serving this RAN slice.
  std::optional<std::string> instance;
  std::vector<std::string> ues;

  friend bool operator==(const RanSlice &, const RanSlice &) = default;
};

struct Mvno {
  std::string mvno_id;
  /// Relative weight of this MVNO within its MNO's cell.
  Rational quota{1};
  std::vector<RanSlice> ran_slices;

  const RanSlice *Find(std::string_view id) const;
  RanSlice *Find(std::string_view id);
  Rational SharesInUse() const;
  friend bool operator==(const Mvno &, const Mvno &) = default;
};

struct Mno {
  std::string plmn_id;
  CellConfig cell;
  std::vector<Mvno> mvnos;

  const Mvno *Find(std::string_view id) const;
  Mvno *Find(std::string_view id);
  friend bool operator==(const Mno &, const Mno &) = default;
};

class TenantTree {
 public:
  /// Duplicate; InvalidCapacity when the cell has no PRBs.
  void CreateMno(std::string plmn_id, CellConfig cell = {});
  /// UnknownParent, Duplicate, InvalidShare (quota must be positive).
  void CreateMvno(std::string_view plmn_id, std::string mvno_id, Rational quota = Rational(1));
  /// UnknownParent, Duplicate, InvalidShare, ShareExhausted(available).
  void CreateRanSlice(const SlicePath &path, Rational share);

  /// Links a RAN slice to an orchestrator slice instance. UnknownPath;
  /// AlreadyAttached when already bound.
  void Bind(const SlicePath &path, std::string instance_id);
  /// UnknownPath; UesAttached while any UE is attached.
  void Unbind(const SlicePath &path);

  /// UnknownPath; SliceNotServing unless the RAN slice is bound and
  /// `instance_running`; AlreadyAttached when the UE is attached anywhere.
  void AttachUe(std::string ue_id, const SlicePath &path, bool instance_running);
  /// UnknownUe.
  void DetachUe(std::string_view ue_id);

  /// UnknownPath.
  const RanSlice &Get(const SlicePath &path) const;
  const Mno *FindMno(std::string_view plmn_id) const;
  std::optional<SlicePath> FindUe(std::string_view ue_id) const;
  /// The RAN slice bound to `instance_id`, if any.
  std::optional<SlicePath> FindBinding(std::string_view instance_id) const;
  const std::vector<Mno> &mnos() const { return mnos_; }

  /// Share of the whole cell: MVNO weight normalized over the MNO times the
  /// slice share.
  Rational EffectiveShare(const SlicePath &path) const;

  /// Descriptor-grammar document (`kind: tenants`).
  std::string Export() const;
  /// Inverse of Export. Throws ParseError.
  static TenantTree Import(std::string_view text);
  static TenantTree FromParts(std::vector<Mno> mnos);

  friend bool operator==(const TenantTree &, const TenantTree &) = default;

 private:
  RanSlice &Mutable(const SlicePath &path);

  std::vector<Mno> mnos_;
  std::map<std::string, SlicePath, std::less<>> ue_index_;
};

// Radio resource scheduling.

struct PrbDemand {
  std::string slice_id;
  /// Relative weight; normalized over the whole demand set.
  Rational share;
  std::uint64_t demand = 0;
};

struct PrbGrant {
  std::string slice_id;
  std::uint64_t granted = 0;

  friend bool operator==(const PrbGrant &, const PrbGrant &) = default;
};

/// Guaranteed share plus weighted water-filling.
///
/// With weights w normalized to sum 1 and n = total_prbs:
///   1. each slice is guaranteed g = min(demand, floor(w * n));
///   2. the remaining PRBs are water-filled over unsatisfied slices: a level L
///      solves sum(min(residual_i, L * w_i)) = remaining, and each slice gets
///      its residual when capped and floor(L * w_i) otherwise;
///   3. any PRBs still left go one at a time to unsatisfied slices in
///      ascending slice id order.
/// Grants are returned in input order. Throws InvalidShare on a non-positive
/// share and Duplicate on a repeated id.
std::vector<PrbGrant> AllocatePrbs(const CellConfig &cell, const std::vector<PrbDemand> &demands);

/// Tree-aware form: every RAN slice of the MNO takes part (absent ones with
/// zero demand) using its effective share. Keys are "mvno/slice". UnknownSlice
/// for keys that are not registered; UnknownParent for an unknown MNO.
std::vector<PrbGrant> AllocatePrbs(const TenantTree &tree, std::string_view plmn_id,
                                   const std::map<std::string, std::uint64_t> &demands);

/// "0.0"-style text used in share error messages.
std::string ShareText(const Rational &r);

}  // namespace slicekit::tenancy

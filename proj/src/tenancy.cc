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

#include "slicekit/tenancy.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "slicekit/document.h"
#include "slicekit/error.h"

namespace slicekit::tenancy {

namespace {

using document::Node;

template <typename T>
auto *FindById(T &items, std::string_view id, std::string T::value_type::*field) {
  for (auto &item : items) {
    if (item.*field == id) return &item;
  }
  return static_cast<decltype(&items.front())>(nullptr);
}

[[noreturn]] void Syntax(const std::string &what) {
  throw ParseError(ParseError::Kind::kSyntax, what);
}

const Node &Need(const Node &map, std::string_view key) {
  const Node *n = map.Find(key);
  if (n == nullptr) Syntax("tenants: missing key '" + std::string(key) + "'");
  return *n;
}

const std::vector<Node> &Items(const Node &map, std::string_view key) {
  static const std::vector<Node> kEmpty;
  const Node *n = map.Find(key);
  if (n == nullptr || (n->is_map() && n->entries.empty())) return kEmpty;
  if (!n->is_list()) Syntax("tenants: '" + std::string(key) + "' must be a list");
  return n->items;
}

const std::string &Text(const Node &map, std::string_view key) {
  const Node &n = Need(map, key);
  if (!n.is_scalar()) Syntax("tenants: '" + std::string(key) + "' must be a scalar");
  return n.scalar;
}

}  // namespace

std::optional<SlicePath> SlicePath::Parse(std::string_view text) {
  auto a = text.find('/');
  if (a == std::string_view::npos) return std::nullopt;
  auto b = text.find('/', a + 1);
  if (b == std::string_view::npos || text.find('/', b + 1) != std::string_view::npos) return std::nullopt;
  SlicePath p{std::string(text.substr(0, a)), std::string(text.substr(a + 1, b - a - 1)),
              std::string(text.substr(b + 1))};
  if (p.plmn.empty() || p.mvno.empty() || p.slice.empty()) return std::nullopt;
  return p;
}

const RanSlice *Mvno::Find(std::string_view id) const { return const_cast<Mvno *>(this)->Find(id); }

RanSlice *Mvno::Find(std::string_view id) { return FindById(ran_slices, id, &RanSlice::slice_id); }

Rational Mvno::SharesInUse() const {
  Rational sum;
  for (const RanSlice &s : ran_slices) sum += s.guaranteed_share;
  return sum;
}

const Mvno *Mno::Find(std::string_view id) const { return const_cast<Mno *>(this)->Find(id); }

Mvno *Mno::Find(std::string_view id) { return FindById(mvnos, id, &Mvno::mvno_id); }

std::string ShareText(const Rational &r) {
  std::string s = r.ToString();
  if (s.find_first_of("./") == std::string::npos) s += ".0";
  return s;
}

void TenantTree::CreateMno(std::string plmn_id, CellConfig cell) {
  if (!document::IsBareToken(plmn_id) || plmn_id.find('/') != std::string::npos) {
    throw Error(Errc::kInvalidName, "invalid PLMN id '" + plmn_id + "'");
  }
  if (FindMno(plmn_id) != nullptr) throw Error(Errc::kDuplicate, "MNO " + plmn_id + " already exists");
  if (cell.total_prbs == 0) throw Error(Errc::kInvalidCapacity, "cell needs at least one PRB");
  mnos_.push_back({std::move(plmn_id), cell, {}});
}

void TenantTree::CreateMvno(std::string_view plmn_id, std::string mvno_id, Rational quota) {
  Mno *mno = FindById(mnos_, plmn_id, &Mno::plmn_id);
  if (mno == nullptr) throw Error(Errc::kUnknownParent, "unknown MNO " + std::string(plmn_id));
  if (!document::IsBareToken(mvno_id) || mvno_id.find('/') != std::string::npos) {
    throw Error(Errc::kInvalidName, "invalid MVNO id '" + mvno_id + "'");
  }
  if (mno->Find(mvno_id) != nullptr) {
    throw Error(Errc::kDuplicate, "MVNO " + mvno_id + " already exists under " + mno->plmn_id);
  }
  if (quota <= Rational(0)) throw Error(Errc::kInvalidShare, "MVNO quota must be positive");
  mno->mvnos.push_back({std::move(mvno_id), quota, {}});
}

void TenantTree::CreateRanSlice(const SlicePath &path, Rational share) {
  Mno *mno = FindById(mnos_, path.plmn, &Mno::plmn_id);
  Mvno *mvno = mno == nullptr ? nullptr : mno->Find(path.mvno);
  if (mvno == nullptr) throw Error(Errc::kUnknownParent, "unknown MVNO " + path.plmn + "/" + path.mvno);
  if (!document::IsBareToken(path.slice) || path.slice.find('/') != std::string::npos) {
    throw Error(Errc::kInvalidName, "invalid slice id '" + path.slice + "'");
  }
  if (mvno->Find(path.slice) != nullptr) throw Error(Errc::kDuplicate, "slice " + path.ToString() + " already exists");
  if (share <= Rational(0) || share > Rational(1)) {
    throw Error(Errc::kInvalidShare, "share " + ShareText(share) + " is outside (0, 1]");
  }
  Rational available = Rational(1) - mvno->SharesInUse();
  if (share > available) {
    throw Error(Errc::kShareExhausted, "ShareExhausted(" + ShareText(available) + "): " + path.plmn + "/" +
                                           path.mvno + " cannot grant " + ShareText(share));
  }
  mvno->ran_slices.push_back({path.slice, share, std::nullopt, {}});
}

RanSlice &TenantTree::Mutable(const SlicePath &path) {
  Mno *mno = FindById(mnos_, path.plmn, &Mno::plmn_id);
  Mvno *mvno = mno == nullptr ? nullptr : mno->Find(path.mvno);
  RanSlice *slice = mvno == nullptr ? nullptr : mvno->Find(path.slice);
  if (slice == nullptr) throw Error(Errc::kUnknownPath, "unknown tenant path " + path.ToString());
  return *slice;
}

const RanSlice &TenantTree::Get(const SlicePath &path) const {
  return const_cast<TenantTree *>(this)->Mutable(path);
}

void TenantTree::Bind(const SlicePath &path, std::string instance_id) {
  RanSlice &slice = Mutable(path);
  if (slice.instance) {
    throw Error(Errc::kAlreadyAttached, path.ToString() + " is already bound to " + *slice.instance);
  }
  if (auto other = FindBinding(instance_id)) {
    throw Error(Errc::kAlreadyAttached, instance_id + " already serves " + other->ToString());
  }
  slice.instance = std::move(instance_id);
}

void TenantTree::Unbind(const SlicePath &path) {
  RanSlice &slice = Mutable(path);
  if (!slice.instance) throw Error(Errc::kInvalidState, path.ToString() + " is not bound");
  if (!slice.ues.empty()) {
    throw Error(Errc::kUesAttached, path.ToString() + " still has " + std::to_string(slice.ues.size()) + " UEs");
  }
  slice.instance.reset();
}

void TenantTree::AttachUe(std::string ue_id, const SlicePath &path, bool instance_running) {
  RanSlice &slice = Mutable(path);
  if (!slice.instance || !instance_running) {
    throw Error(Errc::kSliceNotServing, path.ToString() + " has no Running slice instance");
  }
  if (auto it = ue_index_.find(ue_id); it != ue_index_.end()) {
    throw Error(Errc::kAlreadyAttached, "UE " + ue_id + " is attached to " + it->second.ToString());
  }
  slice.ues.push_back(ue_id);
  ue_index_.emplace(std::move(ue_id), path);
}

void TenantTree::DetachUe(std::string_view ue_id) {
  auto it = ue_index_.find(ue_id);
  if (it == ue_index_.end()) throw Error(Errc::kUnknownUe, "UE " + std::string(ue_id) + " is not attached");
  RanSlice &slice = Mutable(it->second);
  slice.ues.erase(std::find(slice.ues.begin(), slice.ues.end(), ue_id));
  ue_index_.erase(it);
}

const Mno *TenantTree::FindMno(std::string_view plmn_id) const {
  return FindById(const_cast<std::vector<Mno> &>(mnos_), plmn_id, &Mno::plmn_id);
}

std::optional<SlicePath> TenantTree::FindUe(std::string_view ue_id) const {
  auto it = ue_index_.find(ue_id);
  if (it == ue_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SlicePath> TenantTree::FindBinding(std::string_view instance_id) const {
  for (const Mno &mno : mnos_) {
    for (const Mvno &mvno : mno.mvnos) {
      for (const RanSlice &s : mvno.ran_slices) {
        if (s.instance && *s.instance == instance_id) return SlicePath{mno.plmn_id, mvno.mvno_id, s.slice_id};
      }
    }
  }
  return std::nullopt;
}

Rational TenantTree::EffectiveShare(const SlicePath &path) const {
  const RanSlice &slice = Get(path);
  const Mno &mno = *FindMno(path.plmn);
  Rational total;
  for (const Mvno &m : mno.mvnos) total += m.quota;
  return mno.Find(path.mvno)->quota / total * slice.guaranteed_share;
}

std::string TenantTree::Export() const {
  Node root = Node::Map();
  root.Add("kind", "tenants");
  Node mnos = Node::List();
  for (const Mno &mno : mnos_) {
    Node m = Node::Map();
    m.Add("plmn", mno.plmn_id);
    m.Add("total-prbs", std::to_string(mno.cell.total_prbs));
    Node mvnos = Node::List();
    for (const Mvno &mvno : mno.mvnos) {
      Node v = Node::Map();
      v.Add("id", mvno.mvno_id);
      v.Add("quota", mvno.quota.ToString());
      Node slices = Node::List();
      for (const RanSlice &s : mvno.ran_slices) {
        Node n = Node::Map();
        n.Add("id", s.slice_id);
        n.Add("share", s.guaranteed_share.ToString());
        if (s.instance) n.Add("instance", *s.instance);
        Node ues = Node::List();
        for (const std::string &ue : s.ues) ues.Append(Node::Scalar(ue));
        n.Add("ues", std::move(ues));
        slices.Append(std::move(n));
      }
      v.Add("slices", std::move(slices));
      mvnos.Append(std::move(v));
    }
    m.Add("mvnos", std::move(mvnos));
    mnos.Append(std::move(m));
  }
  root.Add("mnos", std::move(mnos));
  return document::Emit(root);
}

TenantTree TenantTree::Import(std::string_view text) {
  Node root = document::Parse(text);
  if (!root.is_map() || Text(root, "kind") != "tenants") Syntax("tenants: expected 'kind: tenants'");
  std::vector<Mno> mnos;
  for (const Node &m : Items(root, "mnos")) {
    Mno mno;
    mno.plmn_id = Text(m, "plmn");
    const std::string &prbs = Text(m, "total-prbs");
    auto [p, ec] = std::from_chars(prbs.data(), prbs.data() + prbs.size(), mno.cell.total_prbs);
    if (ec != std::errc() || p != prbs.data() + prbs.size()) Syntax("tenants: bad total-prbs '" + prbs + "'");
    for (const Node &v : Items(m, "mvnos")) {
      Mvno mvno{Text(v, "id"), Rational::Parse(Text(v, "quota")), {}};
      for (const Node &s : Items(v, "slices")) {
        RanSlice slice{Text(s, "id"), Rational::Parse(Text(s, "share")), std::nullopt, {}};
        if (s.Find("instance") != nullptr) slice.instance = Text(s, "instance");
        for (const Node &ue : Items(s, "ues")) slice.ues.push_back(ue.scalar);
        mvno.ran_slices.push_back(std::move(slice));
      }
      mno.mvnos.push_back(std::move(mvno));
    }
    mnos.push_back(std::move(mno));
  }
  return FromParts(std::move(mnos));
}

TenantTree TenantTree::FromParts(std::vector<Mno> mnos) {
  TenantTree tree;
  tree.mnos_ = std::move(mnos);
  for (const Mno &mno : tree.mnos_) {
    for (const Mvno &mvno : mno.mvnos) {
      for (const RanSlice &s : mvno.ran_slices) {
        for (const std::string &ue : s.ues) tree.ue_index_.emplace(ue, SlicePath{mno.plmn_id, mvno.mvno_id, s.slice_id});
      }
    }
  }
  return tree;
}

std::vector<PrbGrant> AllocatePrbs(const CellConfig &cell, const std::vector<PrbDemand> &demands) {
  const std::size_t k = demands.size();
  std::set<std::string_view> ids;
  Rational weight_sum;
  for (const PrbDemand &d : demands) {
    if (d.share <= Rational(0)) throw Error(Errc::kInvalidShare, "share of " + d.slice_id + " must be positive");
    if (!ids.insert(d.slice_id).second) throw Error(Errc::kDuplicate, "slice " + d.slice_id + " demanded twice");
    weight_sum += d.share;
  }
  const auto n = static_cast<std::int64_t>(cell.total_prbs);
  std::vector<Rational> w(k);
  std::vector<std::int64_t> grant(k), demand(k);
  std::int64_t remaining = n;
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = demands[i].share / weight_sum;
    demand[i] = static_cast<std::int64_t>(std::min<std::uint64_t>(demands[i].demand, cell.total_prbs));
    grant[i] = std::min(demand[i], (w[i] * Rational(n)).Floor());
    remaining -= grant[i];
  }

  // Water level over unsatisfied slices, processed by how soon they cap.
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < k; ++i) {
    if (grant[i] < demand[i]) open.push_back(i);
  }
  auto cap_level = [&](std::size_t i) { return Rational(demand[i] - grant[i]) / w[i]; };
  std::sort(open.begin(), open.end(), [&](std::size_t a, std::size_t b) { return cap_level(a) < cap_level(b); });
  Rational pool(remaining);
  Rational open_weight;
  for (std::size_t i : open) open_weight += w[i];
  std::vector<bool> capped(k, false);
  std::size_t first_uncapped = 0;
  while (first_uncapped < open.size()) {
    std::size_t i = open[first_uncapped];
    if (cap_level(i) * open_weight > pool) break;
    pool -= Rational(demand[i] - grant[i]);
    open_weight -= w[i];
    capped[i] = true;
    ++first_uncapped;
  }
  std::vector<std::int64_t> extra(k, 0);
  for (std::size_t j = 0; j < open.size(); ++j) {
    std::size_t i = open[j];
    if (capped[i]) {
      extra[i] = demand[i] - grant[i];
    } else {
      extra[i] = (pool * w[i] / open_weight).Floor();
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    grant[i] += extra[i];
    remaining -= extra[i];
  }

  std::vector<std::size_t> by_id(k);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return demands[a].slice_id < demands[b].slice_id; });
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t i : by_id) {
      if (remaining == 0) break;
      if (grant[i] < demand[i]) {
        ++grant[i];
        --remaining;
        progress = true;
      }
    }
  }

  std::vector<PrbGrant> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({demands[i].slice_id, static_cast<std::uint64_t>(grant[i])});
  return out;
}

std::vector<PrbGrant> AllocatePrbs(const TenantTree &tree, std::string_view plmn_id,
                                   const std::map<std::string, std::uint64_t> &demands) {
  const Mno *mno = tree.FindMno(plmn_id);
  if (mno == nullptr) throw Error(Errc::kUnknownParent, "unknown MNO " + std::string(plmn_id));
  std::vector<PrbDemand> all;
  for (const Mvno &mvno : mno->mvnos) {
    for (const RanSlice &s : mvno.ran_slices) {
      std::string key = mvno.mvno_id + "/" + s.slice_id;
      auto it = demands.find(key);
      all.push_back({key, tree.EffectiveShare({mno->plmn_id, mvno.mvno_id, s.slice_id}),
                     it == demands.end() ? 0 : it->second});
    }
  }
  for (const auto &[key, d] : demands) {
    bool known = std::any_of(all.begin(), all.end(), [&](const PrbDemand &p) { return p.slice_id == key; });
    if (!known) throw Error(Errc::kUnknownSlice, "no RAN slice " + key + " under " + mno->plmn_id);
  }
  std::vector<PrbGrant> granted = AllocatePrbs(mno->cell, all);
  std::vector<PrbGrant> out;
  for (const PrbGrant &g : granted) {
    if (demands.count(g.slice_id) != 0) out.push_back(g);
  }
  return out;
}

}  // namespace slicekit::tenancy

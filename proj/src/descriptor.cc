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

#include "slicekit/descriptor.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>

#include "slicekit/document.h"
#include "slicekit/error.h"

namespace slicekit::descriptor {

namespace {

using document::Node;

[[noreturn]] void Syntax(const std::string &what) {
  throw ParseError(ParseError::Kind::kSyntax, what);
}

[[noreturn]] void Invariant(const std::string &what) {
  throw ParseError(ParseError::Kind::kInvariant, what);
}

// Typed view over one map node. Keys that are never read are collected as
// unknown when the record is finished.
class Record {
 public:
  Record(const Node &node, std::string path, std::vector<std::string> *unknown)
      : node_(node), path_(std::move(path)), unknown_(unknown) {
    if (!node.is_map()) Syntax(Where() + "expected a record block");
  }

  Record(const Record &) = delete;
  Record &operator=(const Record &) = delete;

  ~Record() {
    if (unknown_ == nullptr) return;
    for (const auto &[key, value] : node_.entries) {
      if (!read_.contains(key)) unknown_->push_back(path_.empty() ? key : path_ + "." + key);
    }
  }

  const Node *Optional(std::string_view key) {
    read_.insert(std::string(key));
    return node_.Find(key);
  }

  const Node &Required(std::string_view key) {
    const Node *n = Optional(key);
    if (n == nullptr) Syntax(Where() + "missing required key '" + std::string(key) + "'");
    return *n;
  }

  std::string String(std::string_view key) { return AsString(Required(key), key); }

  std::optional<std::string> OptionalString(std::string_view key) {
    const Node *n = Optional(key);
    if (n == nullptr) return std::nullopt;
    return AsString(*n, key);
  }

  std::uint32_t Uint(std::string_view key) { return AsUint(Required(key), key); }

  std::optional<std::uint32_t> OptionalUint(std::string_view key) {
    const Node *n = Optional(key);
    if (n == nullptr) return std::nullopt;
    return AsUint(*n, key);
  }

  /// Items of an optional list; empty when absent.
  const std::vector<Node> &List(std::string_view key, bool required) {
    static const std::vector<Node> kEmpty;
    const Node *n = required ? &Required(key) : Optional(key);
    if (n == nullptr || (n->is_map() && n->entries.empty())) return kEmpty;
    if (!n->is_list()) Syntax(Where() + "'" + std::string(key) + "' must be a list");
    return n->items;
  }

  std::string ItemPath(std::string_view key, std::size_t index) const {
    std::string p = path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    return p + "[" + std::to_string(index) + "]";
  }

  std::string AsString(const Node &n, std::string_view key) const {
    if (!n.is_scalar()) Syntax(Where() + "'" + std::string(key) + "' must be a scalar");
    return n.scalar;
  }

  std::uint32_t AsUint(const Node &n, std::string_view key) const {
    if (!n.is_scalar() || n.quoted || n.scalar.empty()) {
      Syntax(Where() + "'" + std::string(key) + "' must be an unsigned integer");
    }
    std::uint64_t value = 0;
    const char *first = n.scalar.data();
    const char *last = first + n.scalar.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || n.scalar.front() == '+' ||
        value > std::numeric_limits<std::uint32_t>::max()) {
      Syntax(Where() + "'" + std::string(key) + "' must be an unsigned integer");
    }
    return static_cast<std::uint32_t>(value);
  }

  std::string Where() const {
    return "line " + std::to_string(node_.line) + (path_.empty() ? "" : " (" + path_ + ")") + ": ";
  }

 private:
  const Node &node_;
  std::string path_;
  std::vector<std::string> *unknown_;
  std::set<std::string> read_;
};

void ExpectKind(Record &root, std::string_view kind) {
  std::string actual = root.String("kind");
  if (actual != kind) Syntax("expected 'kind: " + std::string(kind) + "', found '" + actual + "'");
}

ParamMap ReadParams(Record &root, std::string_view key) {
  ParamMap params;
  const Node *n = root.Optional(key);
  if (n == nullptr) return params;
  if (!n->is_map()) Syntax("'" + std::string(key) + "' must be a record block");
  for (const auto &[k, v] : n->entries) {
    if (!v.is_scalar()) Syntax("'" + std::string(key) + "." + k + "' must be a scalar");
    params.emplace_back(k, v.scalar);
  }
  return params;
}

void CheckVnfdInvariants(const Vnfd &vnfd) {
  if (vnfd.id.empty()) Invariant("vnfd id must be non-empty");
  if (vnfd.vdus.empty()) Invariant("vnfd '" + vnfd.id + "' must declare ≥1 VDU");
  if (vnfd.mgmt_network == kExternalNetwork) Invariant("mgmt network may not be named 'external'");
  std::set<std::string> vdu_ids;
  for (const Vdu &vdu : vnfd.vdus) {
    if (vdu.id.empty()) Invariant("VDU id must be non-empty");
    if (!vdu_ids.insert(vdu.id).second) Invariant("duplicate VDU id '" + vdu.id + "'");
  }
  std::set<std::string> vl_names;
  for (const InternalVl &vl : vnfd.internal_vls) {
    if (vl.name == vnfd.mgmt_network || vl.name == kExternalNetwork) {
      Invariant("internal vl '" + vl.name + "' reuses a reserved network name");
    }
    if (!vl_names.insert(vl.name).second) Invariant("duplicate internal vl '" + vl.name + "'");
  }
  for (const Vdu &vdu : vnfd.vdus) {
    const Flavor &f = vdu.flavor;
    if (f.vcpus < 1 || f.memory_mb < 1 || f.storage_gb < 1) {
      Invariant("VDU '" + vdu.id + "' flavor fields must all be ≥1");
    }
    std::set<std::string> names;
    int mgmt = 0;
    for (const Interface &itf : vdu.interfaces) {
      if (!names.insert(itf.name).second) {
        Invariant("VDU '" + vdu.id + "' has duplicate interface '" + itf.name + "'");
      }
      if (itf.network == vnfd.mgmt_network) {
        ++mgmt;
      } else if (itf.network != kExternalNetwork && !vl_names.contains(itf.network)) {
        Invariant("VDU '" + vdu.id + "' interface '" + itf.name + "' names unknown network '" +
                  itf.network + "'");
      }
    }
    if (mgmt != 1) {
      Invariant("VDU '" + vdu.id + "' must have exactly one interface on mgmt network '" +
                vnfd.mgmt_network + "'");
    }
  }
  for (const InternalVl &vl : vnfd.internal_vls) {
    if (vl.endpoints.size() < 2) Invariant("internal vl '" + vl.name + "' needs ≥2 endpoints");
    for (const InterfaceRef &ep : vl.endpoints) {
      const Vdu *vdu = vnfd.FindVdu(ep.vdu);
      const Interface *itf = vdu == nullptr ? nullptr : vdu->FindInterface(ep.interface);
      if (itf == nullptr) {
        Invariant("internal vl '" + vl.name + "' endpoint '" + ep.ToString() +
                  "' does not resolve to a VDU interface");
      }
      if (itf->network != vl.name) {
        Invariant("internal vl '" + vl.name + "' endpoint '" + ep.ToString() +
                  "' is attached to network '" + itf->network + "'");
      }
    }
  }
  for (const MetricSpec &m : vnfd.metrics) {
    if (vnfd.FindVdu(m.target_vdu) == nullptr) {
      Invariant("metric '" + std::string(MetricNameText(m.name)) + "' targets unknown VDU '" +
                m.target_vdu + "'");
    }
    if (m.collection_period_s < 1) Invariant("metric collection period must be ≥1 s");
  }
}

// Interfaces an external cp may expose: any declared non-mgmt interface.
bool CpInterfaceResolves(const Vnfd &vnfd, const InterfaceRef &ref) {
  const Vdu *vdu = vnfd.FindVdu(ref.vdu);
  if (vdu == nullptr) return false;
  const Interface *itf = vdu->FindInterface(ref.interface);
  return itf != nullptr && itf->network != vnfd.mgmt_network;
}

void CheckNsdInvariants(const Nsd &nsd, std::span<const Vnfd> known) {
  if (nsd.id.empty()) Invariant("nsd id must be non-empty");
  if (nsd.constituent_vnfds.empty()) Invariant("nsd '" + nsd.id + "' must list ≥1 constituent VNFD");
  std::set<std::string> seen;
  for (const std::string &v : nsd.constituent_vnfds) {
    if (!seen.insert(v).second) Invariant("nsd '" + nsd.id + "' lists VNFD '" + v + "' twice");
  }
  std::set<std::string> cp_names;
  for (const ExternalCp &cp : nsd.external_cps) {
    if (!cp_names.insert(cp.name).second) Invariant("duplicate cp '" + cp.name + "'");
    if (!seen.contains(cp.vnfd)) {
      Invariant("cp '" + cp.name + "' owner '" + cp.vnfd + "' is not a constituent VNFD");
    }
    for (const Vnfd &vnfd : known) {
      if (vnfd.id == cp.vnfd && !CpInterfaceResolves(vnfd, cp.interface)) {
        Invariant("cp '" + cp.name + "' names nonexistent interface '" + cp.interface.ToString() +
                  "' of VNFD '" + cp.vnfd + "'");
      }
    }
  }
}

bool SegmentsConnected(std::size_t count, const std::vector<ChainLink> &links) {
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = count;
  for (const ChainLink &l : links) {
    std::size_t a = find(l.from.segment), b = find(l.to.segment);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

void CheckNsidInvariants(const Nsid &nsid, std::span<const Nsd> known) {
  if (nsid.id.empty()) Invariant("nsid id must be non-empty");
  if (nsid.segments.empty()) Invariant("nsid '" + nsid.id + "' must have ≥1 segment");
  for (const ChainLink &l : nsid.chain_links) {
    for (const ChainEndpoint *ep : {&l.from, &l.to}) {
      if (ep->segment >= nsid.segments.size()) {
        Invariant("chain endpoint '" + ep->ToString() + "' names a missing segment");
      }
    }
    if (l.from.segment == l.to.segment) {
      Invariant("chain link '" + l.from.ToString() + "' -> '" + l.to.ToString() +
                "' must join distinct segments");
    }
  }
  if (!known.empty()) {
    for (const Segment &s : nsid.segments) {
      auto it = std::find_if(known.begin(), known.end(), [&](const Nsd &n) { return n.id == s.nsd; });
      if (it == known.end()) Invariant("segment nsd '" + s.nsd + "' does not resolve");
    }
    for (const ChainLink &l : nsid.chain_links) {
      for (const ChainEndpoint *ep : {&l.from, &l.to}) {
        const std::string &nsd_id = nsid.segments[ep->segment].nsd;
        auto it = std::find_if(known.begin(), known.end(), [&](const Nsd &n) { return n.id == nsd_id; });
        if (it->FindCp(ep->cp) == nullptr) {
          Invariant("chain endpoint '" + ep->ToString() + "' is not an external cp of nsd '" +
                    nsd_id + "'");
        }
      }
    }
  }
  if (!SegmentsConnected(nsid.segments.size(), nsid.chain_links)) {
    Invariant("nsid '" + nsid.id + "' chain graph disconnected");
  }
}

Vnfd ReadVnfd(const Node &root_node) {
  Vnfd vnfd;
  {
    Record root(root_node, "", &vnfd.unknown_keys);
    ExpectKind(root, "vnfd");
    vnfd.id = root.String("id");
    vnfd.mgmt_network = root.String("mgmt-network");
    const auto &vdus = root.List("vdus", true);
    for (std::size_t i = 0; i < vdus.size(); ++i) {
      Record r(vdus[i], root.ItemPath("vdus", i), &vnfd.unknown_keys);
      Vdu vdu;
      vdu.id = r.String("id");
      vdu.image = r.String("image");
      vdu.flavor.vcpus = r.Uint("vcpus");
      vdu.flavor.memory_mb = r.Uint("memory-mb");
      vdu.flavor.storage_gb = r.Uint("storage-gb");
      const auto &itfs = r.List("interfaces", true);
      for (std::size_t j = 0; j < itfs.size(); ++j) {
        Record ir(itfs[j], r.ItemPath("interfaces", j), &vnfd.unknown_keys);
        vdu.interfaces.push_back({ir.String("name"), ir.String("network")});
      }
      vnfd.vdus.push_back(std::move(vdu));
    }
    const auto &vls = root.List("internal-vls", false);
    for (std::size_t i = 0; i < vls.size(); ++i) {
      Record r(vls[i], root.ItemPath("internal-vls", i), &vnfd.unknown_keys);
      InternalVl vl;
      vl.name = r.String("name");
      const auto &eps = r.List("endpoints", true);
      for (const Node &ep : eps) {
        std::string text = r.AsString(ep, "endpoints");
        auto ref = InterfaceRef::Parse(text);
        if (!ref) Syntax(r.Where() + "endpoint '" + text + "' must be 'vdu.interface'");
        vl.endpoints.push_back(*ref);
      }
      vnfd.internal_vls.push_back(std::move(vl));
    }
    const auto &metrics = root.List("metrics", false);
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      Record r(metrics[i], root.ItemPath("metrics", i), &vnfd.unknown_keys);
      MetricSpec m;
      std::string name = r.String("name");
      auto parsed = ParseMetricName(name);
      if (!parsed) Syntax(r.Where() + "unknown metric '" + name + "'");
      m.name = *parsed;
      m.target_vdu = r.String("vdu");
      m.collection_period_s = r.OptionalUint("period-s").value_or(1);
      vnfd.metrics.push_back(std::move(m));
    }
    vnfd.hooks.day0 = ReadParams(root, "day0");
    vnfd.hooks.day1 = ReadParams(root, "day1");
    vnfd.hooks.day2 = ReadParams(root, "day2");
  }
  return vnfd;
}

Nsd ReadNsd(const Node &root_node) {
  Nsd nsd;
  {
    Record root(root_node, "", &nsd.unknown_keys);
    ExpectKind(root, "nsd");
    nsd.id = root.String("id");
    for (const Node &n : root.List("vnfds", true)) nsd.constituent_vnfds.push_back(root.AsString(n, "vnfds"));
    const auto &cps = root.List("cps", false);
    for (std::size_t i = 0; i < cps.size(); ++i) {
      Record r(cps[i], root.ItemPath("cps", i), &nsd.unknown_keys);
      ExternalCp cp;
      cp.name = r.String("name");
      cp.vnfd = r.String("vnfd");
      std::string itf = r.String("interface");
      auto ref = InterfaceRef::Parse(itf);
      if (!ref) Syntax(r.Where() + "interface '" + itf + "' must be 'vdu.interface'");
      cp.interface = *ref;
      nsd.external_cps.push_back(std::move(cp));
    }
  }
  return nsd;
}

ChainEndpoint ReadChainEndpoint(const std::string &text, const Record &r) {
  auto dot = text.find('.');
  std::size_t index = 0;
  if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) {
    Syntax(r.Where() + "chain endpoint '" + text + "' must be 'segment-index.cp-name'");
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + dot, index);
  if (ec != std::errc() || ptr != text.data() + dot) {
    Syntax(r.Where() + "chain endpoint '" + text + "' must start with a segment index");
  }
  return {index, text.substr(dot + 1)};
}

Nsid ReadNsid(const Node &root_node) {
  Nsid nsid;
  {
    Record root(root_node, "", &nsid.unknown_keys);
    ExpectKind(root, "nsid");
    nsid.id = root.String("id");
    const auto &segs = root.List("segments", true);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      Record r(segs[i], root.ItemPath("segments", i), &nsid.unknown_keys);
      Segment s;
      s.nsd = r.String("nsd");
      s.vim_affinity = r.OptionalString("vim");
      nsid.segments.push_back(std::move(s));
    }
    const auto &chain = root.List("chain", false);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      Record r(chain[i], root.ItemPath("chain", i), &nsid.unknown_keys);
      ChainLink l;
      l.from = ReadChainEndpoint(r.String("from"), r);
      l.to = ReadChainEndpoint(r.String("to"), r);
      nsid.chain_links.push_back(std::move(l));
    }
  }
  return nsid;
}

Node ParamsNode(const ParamMap &params) {
  Node n = Node::Map();
  for (const auto &[k, v] : params) n.Add(k, v);
  return n;
}

void AddFinding(ValidationReport &report, Level level, std::string id, std::string code,
                std::string detail) {
  report.findings.push_back({level, std::move(id), std::move(code), std::move(detail)});
}

template <typename T>
void CheckDuplicates(ValidationReport &report, Level level, std::span<const T> items) {
  std::map<std::string, int> counts;
  for (const T &item : items) ++counts[item.id];
  for (const auto &[id, count] : counts) {
    if (count > 1) {
      AddFinding(report, level, id, "duplicate-id", std::to_string(count) + " descriptors share this id");
    }
  }
}

void CheckUnknownKeys(ValidationReport &report, Level level, const std::string &id,
                      const std::vector<std::string> &keys) {
  for (const std::string &k : keys) AddFinding(report, level, id, "unknown-key", k);
}

}  // namespace

const Interface *Vdu::FindInterface(std::string_view name) const {
  for (const Interface &i : interfaces) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

std::optional<InterfaceRef> InterfaceRef::Parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size()) return std::nullopt;
  return InterfaceRef{std::string(text.substr(0, dot)), std::string(text.substr(dot + 1))};
}

std::string_view MetricNameText(MetricName name) {
  switch (name) {
    case MetricName::kCpuUtilizationPct: return "cpu_utilization_pct";
    case MetricName::kMemoryUtilizationMb: return "memory_utilization_mb";
    case MetricName::kThroughputMbps: return "throughput_mbps";
  }
  return "";
}

std::optional<MetricName> ParseMetricName(std::string_view text) {
  for (MetricName m : {MetricName::kCpuUtilizationPct, MetricName::kMemoryUtilizationMb,
                       MetricName::kThroughputMbps}) {
    if (MetricNameText(m) == text) return m;
  }
  return std::nullopt;
}

const Vdu *Vnfd::FindVdu(std::string_view vdu_id) const {
  for (const Vdu &v : vdus) {
    if (v.id == vdu_id) return &v;
  }
  return nullptr;
}

const ExternalCp *Nsd::FindCp(std::string_view name) const {
  for (const ExternalCp &cp : external_cps) {
    if (cp.name == name) return &cp;
  }
  return nullptr;
}

const Vnfd *DescriptorPackage::FindVnfd(std::string_view vnfd_id) const {
  for (const Vnfd &v : vnfds) {
    if (v.id == vnfd_id) return &v;
  }
  return nullptr;
}

const Nsd *DescriptorPackage::FindNsd(std::string_view nsd_id) const {
  for (const Nsd &n : nsds) {
    if (n.id == nsd_id) return &n;
  }
  return nullptr;
}

Vnfd ParseVnfd(std::string_view text) {
  Vnfd vnfd = ReadVnfd(document::Parse(text));
  CheckVnfdInvariants(vnfd);
  return vnfd;
}

Nsd ParseNsd(std::string_view text, std::span<const Vnfd> known_vnfds) {
  Nsd nsd = ReadNsd(document::Parse(text));
  CheckNsdInvariants(nsd, known_vnfds);
  return nsd;
}

Nsid ParseNsid(std::string_view text, std::span<const Nsd> known_nsds) {
  Nsid nsid = ReadNsid(document::Parse(text));
  CheckNsidInvariants(nsid, known_nsds);
  return nsid;
}

AnyDescriptor ParseAny(std::string_view text) {
  Node root = document::Parse(text);
  const Node *kind = root.Find("kind");
  if (kind == nullptr || !kind->is_scalar()) Syntax("missing required key 'kind'");
  if (kind->scalar == "vnfd") {
    Vnfd v = ReadVnfd(root);
    CheckVnfdInvariants(v);
    return v;
  }
  if (kind->scalar == "nsd") {
    Nsd n = ReadNsd(root);
    CheckNsdInvariants(n, {});
    return n;
  }
  if (kind->scalar == "nsid") {
    Nsid n = ReadNsid(root);
    CheckNsidInvariants(n, {});
    return n;
  }
  Syntax("unsupported kind '" + kind->scalar + "'");
}

DescriptorPackage AssemblePackage(std::span<const std::string> documents) {
  DescriptorPackage package;
  int nsid_count = 0;
  for (const std::string &text : documents) {
    AnyDescriptor any = ParseAny(text);
    if (auto *v = std::get_if<Vnfd>(&any)) {
      package.vnfds.push_back(std::move(*v));
    } else if (auto *n = std::get_if<Nsd>(&any)) {
      package.nsds.push_back(std::move(*n));
    } else {
      package.nsid = std::get<Nsid>(std::move(any));
      ++nsid_count;
    }
  }
  if (nsid_count != 1) {
    Invariant("a package holds exactly one NSID, found " + std::to_string(nsid_count));
  }
  return package;
}

std::string Serialize(const Vnfd &vnfd) {
  Node root = Node::Map();
  root.Add("kind", "vnfd");
  root.Add("id", vnfd.id);
  root.Add("mgmt-network", vnfd.mgmt_network);
  Node &vdus = root.Add("vdus", Node::List());
  for (const Vdu &vdu : vnfd.vdus) {
    Node item = Node::Map();
    item.Add("id", vdu.id);
    item.Add("image", vdu.image);
    item.Add("vcpus", std::to_string(vdu.flavor.vcpus));
    item.Add("memory-mb", std::to_string(vdu.flavor.memory_mb));
    item.Add("storage-gb", std::to_string(vdu.flavor.storage_gb));
    Node &itfs = item.Add("interfaces", Node::List());
    for (const Interface &i : vdu.interfaces) {
      Node in = Node::Map();
      in.Add("name", i.name);
      in.Add("network", i.network);
      itfs.Append(std::move(in));
    }
    vdus.Append(std::move(item));
  }
  Node &vls = root.Add("internal-vls", Node::List());
  for (const InternalVl &vl : vnfd.internal_vls) {
    Node item = Node::Map();
    item.Add("name", vl.name);
    Node &eps = item.Add("endpoints", Node::List());
    for (const InterfaceRef &ep : vl.endpoints) eps.Append(Node::Scalar(ep.ToString()));
    vls.Append(std::move(item));
  }
  Node &metrics = root.Add("metrics", Node::List());
  for (const MetricSpec &m : vnfd.metrics) {
    Node item = Node::Map();
    item.Add("name", std::string(MetricNameText(m.name)));
    item.Add("vdu", m.target_vdu);
    item.Add("period-s", std::to_string(m.collection_period_s));
    metrics.Append(std::move(item));
  }
  root.Add("day0", ParamsNode(vnfd.hooks.day0));
  root.Add("day1", ParamsNode(vnfd.hooks.day1));
  root.Add("day2", ParamsNode(vnfd.hooks.day2));
  return document::Emit(root);
}

std::string Serialize(const Nsd &nsd) {
  Node root = Node::Map();
  root.Add("kind", "nsd");
  root.Add("id", nsd.id);
  Node &vnfds = root.Add("vnfds", Node::List());
  for (const std::string &v : nsd.constituent_vnfds) vnfds.Append(Node::Scalar(v));
  Node &cps = root.Add("cps", Node::List());
  for (const ExternalCp &cp : nsd.external_cps) {
    Node item = Node::Map();
    item.Add("name", cp.name);
    item.Add("vnfd", cp.vnfd);
    item.Add("interface", cp.interface.ToString());
    cps.Append(std::move(item));
  }
  return document::Emit(root);
}

std::string Serialize(const Nsid &nsid) {
  Node root = Node::Map();
  root.Add("kind", "nsid");
  root.Add("id", nsid.id);
  Node &segs = root.Add("segments", Node::List());
  for (const Segment &s : nsid.segments) {
    Node item = Node::Map();
    item.Add("nsd", s.nsd);
    if (s.vim_affinity) item.Add("vim", *s.vim_affinity);
    segs.Append(std::move(item));
  }
  Node &chain = root.Add("chain", Node::List());
  for (const ChainLink &l : nsid.chain_links) {
    Node item = Node::Map();
    item.Add("from", l.from.ToString());
    item.Add("to", l.to.ToString());
    chain.Append(std::move(item));
  }
  return document::Emit(root);
}

std::string_view LevelText(Level level) {
  switch (level) {
    case Level::kVnfd: return "vnfd";
    case Level::kNsd: return "nsd";
    case Level::kNsid: return "nsid";
  }
  return "";
}

std::string Finding::ToString() const {
  return std::string(LevelText(level)) + " " + id + " " + code + " " + detail;
}

std::string ValidationReport::ToString() const {
  std::string out;
  for (const Finding &f : findings) out += f.ToString() + "\n";
  return out;
}

ValidationReport ValidatePackage(std::span<const Vnfd> vnfds, std::span<const Nsd> nsds,
                                 const Nsid &nsid) {
  ValidationReport report;
  CheckDuplicates(report, Level::kVnfd, vnfds);
  CheckDuplicates(report, Level::kNsd, nsds);

  auto find_vnfd = [&](const std::string &id) -> const Vnfd * {
    for (const Vnfd &v : vnfds) {
      if (v.id == id) return &v;
    }
    return nullptr;
  };
  auto find_nsd = [&](const std::string &id) -> const Nsd * {
    for (const Nsd &n : nsds) {
      if (n.id == id) return &n;
    }
    return nullptr;
  };

  for (const Vnfd &v : vnfds) CheckUnknownKeys(report, Level::kVnfd, v.id, v.unknown_keys);

  for (const Nsd &n : nsds) {
    CheckUnknownKeys(report, Level::kNsd, n.id, n.unknown_keys);
    for (const std::string &c : n.constituent_vnfds) {
      if (find_vnfd(c) == nullptr) AddFinding(report, Level::kNsd, n.id, "unresolved-constituent", c);
    }
    for (const ExternalCp &cp : n.external_cps) {
      bool constituent = std::find(n.constituent_vnfds.begin(), n.constituent_vnfds.end(),
                                   cp.vnfd) != n.constituent_vnfds.end();
      if (!constituent) {
        AddFinding(report, Level::kNsd, n.id, "cp-owner-not-constituent", cp.name + " " + cp.vnfd);
        continue;
      }
      const Vnfd *owner = find_vnfd(cp.vnfd);
      if (owner != nullptr && !CpInterfaceResolves(*owner, cp.interface)) {
        AddFinding(report, Level::kNsd, n.id, "unresolved-interface",
                   cp.name + " " + cp.vnfd + ":" + cp.interface.ToString());
      }
    }
  }

  CheckUnknownKeys(report, Level::kNsid, nsid.id, nsid.unknown_keys);
  for (const Segment &s : nsid.segments) {
    if (find_nsd(s.nsd) == nullptr) AddFinding(report, Level::kNsid, nsid.id, "unresolved-segment", s.nsd);
  }
  for (const ChainLink &l : nsid.chain_links) {
    for (const ChainEndpoint *ep : {&l.from, &l.to}) {
      if (ep->segment >= nsid.segments.size()) {
        AddFinding(report, Level::kNsid, nsid.id, "unresolved-chain-cp", ep->ToString());
        continue;
      }
      const Nsd *nsd = find_nsd(nsid.segments[ep->segment].nsd);
      if (nsd != nullptr && nsd->FindCp(ep->cp) == nullptr) {
        AddFinding(report, Level::kNsid, nsid.id, "unresolved-chain-cp", ep->ToString());
      }
    }
  }

  std::sort(report.findings.begin(), report.findings.end());
  return report;
}

ValidationReport ValidatePackage(const DescriptorPackage &package) {
  return ValidatePackage(package.vnfds, package.nsds, package.nsid);
}

Resources SegmentBudget(const DescriptorPackage &package, std::size_t segment) {
  if (segment >= package.nsid.segments.size()) {
    throw Error(Errc::kBudgetError, "segment " + std::to_string(segment) + " does not exist");
  }
  const std::string &nsd_id = package.nsid.segments[segment].nsd;
  const Nsd *nsd = package.FindNsd(nsd_id);
  if (nsd == nullptr) throw Error(Errc::kBudgetError, "nsd '" + nsd_id + "' does not resolve");
  Resources total;
  for (const std::string &vnfd_id : nsd->constituent_vnfds) {
    const Vnfd *vnfd = package.FindVnfd(vnfd_id);
    if (vnfd == nullptr) throw Error(Errc::kBudgetError, "vnfd '" + vnfd_id + "' does not resolve");
    for (const Vdu &vdu : vnfd->vdus) total += Resources(vdu.flavor);
  }
  return total;
}

std::map<std::string, Resources> ResourceBudget(const DescriptorPackage &package,
                                                const std::optional<std::string> &default_vim) {
  std::map<std::string, Resources> budget;
  for (std::size_t i = 0; i < package.nsid.segments.size(); ++i) {
    const Segment &s = package.nsid.segments[i];
    std::string vim;
    if (s.vim_affinity) {
      vim = *s.vim_affinity;
    } else if (default_vim) {
      vim = *default_vim;
    } else {
      throw Error(Errc::kBudgetError, "segment " + std::to_string(i) + " (" + s.nsd +
                                          ") has no VIM affinity and no default VIM is configured");
    }
    budget[vim] += SegmentBudget(package, i);
  }
  return budget;
}

}  // namespace slicekit::descriptor

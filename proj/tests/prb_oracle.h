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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "slicekit/rational.h"
#include "slicekit/tenancy.h"

namespace slicekit::testing {

// Reference water-filling by iterative proportional redistribution: each
// round spreads what is left over the still-open slices by weight, caps the
// slices that would overshoot, and repeats until nobody caps.
inline std::vector<std::uint64_t> OraclePrbs(std::uint32_t total, const std::vector<tenancy::PrbDemand> &in) {
  const std::size_t k = in.size();
  Rational sum;
  for (const auto &d : in) sum += d.share;
  std::vector<Rational> w(k);
  std::vector<std::int64_t> g(k), d(k);
  std::int64_t left = total;
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = in[i].share / sum;
    d[i] = std::min<std::int64_t>(static_cast<std::int64_t>(in[i].demand), total);
    g[i] = std::min<std::int64_t>(d[i], (w[i] * Rational(total)).Floor());
    left -= g[i];
  }
  std::vector<bool> open(k), capped(k, false);
  for (std::size_t i = 0; i < k; ++i) open[i] = g[i] < d[i];
  Rational pool(left);
  bool changed = true;
  while (changed) {
    changed = false;
    Rational weight;
    for (std::size_t i = 0; i < k; ++i) {
      if (open[i]) weight += w[i];
    }
    if (weight == Rational(0)) break;
    for (std::size_t i = 0; i < k; ++i) {
      if (!open[i]) continue;
      Rational residual(d[i] - g[i]);
      if (residual <= pool * w[i] / weight) {
        open[i] = false;
        capped[i] = true;
        changed = true;
      }
    }
    if (changed) {
      for (std::size_t i = 0; i < k; ++i) {
        if (capped[i] && !open[i] && g[i] < d[i]) {
          pool -= Rational(d[i] - g[i]);
          left -= d[i] - g[i];
          g[i] = d[i];
        }
      }
    }
  }
  Rational weight;
  for (std::size_t i = 0; i < k; ++i) {
    if (open[i]) weight += w[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!open[i]) continue;
    std::int64_t add = (pool * w[i] / weight).Floor();
    g[i] += add;
    left -= add;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return in[a].slice_id < in[b].slice_id; });
  while (left > 0) {
    bool any = false;
    for (std::size_t i : order) {
      if (left > 0 && g[i] < d[i]) {
        ++g[i];
        --left;
        any = true;
      }
    }
    if (!any) break;
  }
  return {g.begin(), g.end()};
}

}  // namespace slicekit::testing

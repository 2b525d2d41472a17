// Copyright 2026 The kacgal Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Twisting bijections and isogeny push-forwards on H^1, as explicit tables.

#ifndef KACGAL_FUNCTOR_HPP_
#define KACGAL_FUNCTOR_HPP_

#include <vector>

#include "kacgal/groupspec.hpp"
#include "kacgal/kac.hpp"

namespace kacgal {

struct MapRow {
  Labeling source;  // class representative on the source side
  Labeling target;
  bool source_neutral = false;
  bool target_neutral = false;
};

struct TwistMap {
  Labeling source_base;  // q'
  Labeling target_base;  // q
  std::vector<MapRow> rows;
};

// Source: the spec re-based at q'; target: the spec as given.
TwistMap twist(const GroupSpec& spec, const std::vector<std::vector<int>>& q_prime);

struct PushforwardMap {
  std::vector<MapRow> rows;
  std::vector<Labeling> missed;  // target classes outside the image
};

// Requires identical components, tau and q, and F contained in F'.
PushforwardMap pushforward(const GroupSpec& source, const GroupSpec& target);

}  // namespace kacgal

#endif  // KACGAL_FUNCTOR_HPP_

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

// Declarative spec documents (JSON) for GroupSpec.
//
// {
//   "components": [{"type": "E7", "kind": "inner"}, ...],
//   "F": [{"component": 0, "coweight": 1, "mult": 1}, [term, term], {"vector": [...]}],
//   "q": [[2, 0, 0, 0, 0, 0, 0, 0], ...]
// }

#ifndef KACGAL_SPECFILE_HPP_
#define KACGAL_SPECFILE_HPP_

#include <string>

#include "json.hpp"
#include "kacgal/groupspec.hpp"

namespace kacgal {

using Json = nlohmann::ordered_json;

// Throws ParseError on malformed input, ValidationError on bad values.
// A missing "q" leaves spec.q empty.
GroupSpec spec_from_json(const Json& doc);
GroupSpec parse_spec(const std::string& text);
GroupSpec read_spec_file(const std::string& path);  // "-" reads stdin

Json spec_to_json(const GroupSpec& spec);
Json labeling_to_json(const RestrictedData& rd, const Labeling& p);
Json rat_vec_to_json(const RatVec& v);

// Per-component labels from a flat labeling.
std::vector<std::vector<int>> split_labeling(const RestrictedData& rd, const Labeling& p);
std::string format_labeling(const RestrictedData& rd, const Labeling& p);

// Labeling list given as "2,0,0|1,0" or JSON [[2,0,0],[1,0]].
std::vector<std::vector<int>> parse_labeling_text(const std::string& text);

}  // namespace kacgal

#endif  // KACGAL_SPECFILE_HPP_

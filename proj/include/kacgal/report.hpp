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

// Result documents: deterministic JSON and plain-text tables.

#ifndef KACGAL_REPORT_HPP_
#define KACGAL_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "kacgal/functor.hpp"
#include "kacgal/kac.hpp"
#include "kacgal/oracle.hpp"
#include "kacgal/specfile.hpp"

namespace kacgal {

Json h1_json(const RestrictedData& rd, const H1Result& r);
std::string h1_text(const RestrictedData& rd, const H1Result& r);

Json forms_json(const RestrictedData& rd, const std::vector<InnerForm>& forms);
std::string forms_text(const RestrictedData& rd, const std::vector<InnerForm>& forms);

Json twist_json(const RestrictedData& rd, const TwistMap& m);
std::string twist_text(const RestrictedData& rd, const TwistMap& m);

Json push_json(const RestrictedData& rd, const PushforwardMap& m);
std::string push_text(const RestrictedData& rd, const PushforwardMap& m);

Json oracle_json(const H1Result& kac, const OracleResult& oracle, const MatchReport& match);
std::string oracle_text(const H1Result& kac, const OracleResult& oracle, const MatchReport& match);

// Named weights whose restricted coordinates the tables print.
std::vector<std::pair<std::string, RatVec>> table_weights(const AffineComponent& c);
// Marks and c-coefficients mod Z; abbrev keeps only the entries the
// printed tables show (marks <= 2 inner, marks == 2 otherwise).
std::string tables_text(const AffineComponent& c, bool abbrev);

}  // namespace kacgal

#endif  // KACGAL_REPORT_HPP_

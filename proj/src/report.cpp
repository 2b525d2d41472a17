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

#include "kacgal/report.hpp"

#include <algorithm>
#include <sstream>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

std::string describe(const RestrictedData& rd) {
  std::string s;
  for (std::size_t k = 0; k < rd.full.comps.size(); ++k) {
    if (k) s += " + ";
    s += rd.full.comps[k].label() + " " + to_string(rd.full.comps[k].kind);
  }
  return s;
}

std::string factors_text(const FinAbQuotient& q) {
  if (q.invariant_factors().empty()) return "0";
  std::string s;
  for (const Int& d : q.invariant_factors()) {
    if (!s.empty()) s += "+";
    s += "Z/" + d.get_str();
  }
  return s;
}

Json factors_json(const FinAbQuotient& q) {
  Json a = Json::array();
  for (const Int& d : q.invariant_factors()) a.push_back(d.get_si());
  return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string vec_text(const RatVec& v) {
  std::vector<std::string> xs;
  for (const Rat& x : v) xs.push_back(x.get_str());
  return join(xs, " ");
}

std::string int_vec_text(const IntVec& v) {
  std::vector<std::string> xs;
  for (const Int& x : v) xs.push_back(x.get_str());
  return xs.empty() ? "-" : join(xs, " ");
}

// Left-aligned columns separated by two spaces.
std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

Json header_json(const RestrictedData& rd) {
  Json comps = Json::array();
  for (const AffineComponent& c : rd.full.comps)
    comps.push_back(Json{{"label", c.label()}, {"kind", to_string(c.kind)}, {"marks", c.marks}});
  return comps;
}

std::string header_text(const RestrictedData& rd) {
  std::string s = "group: " + describe(rd) + "\n";
  for (const AffineComponent& c : rd.full.comps) {
    std::vector<std::string> m;
    for (int x : c.marks) m.push_back(std::to_string(x));
    s += "marks " + c.label() + ": " + join(m, " ") + "\n";
  }
  s += "F0: " + factors_text(rd.F0) + "  C0: " + factors_text(rd.C0) + "\n";
  return s;
}

Json rows_json(const RestrictedData& rd, const std::vector<MapRow>& rows) {
  Json a = Json::array();
  for (const MapRow& r : rows)
    a.push_back(Json{{"source", labeling_to_json(rd, r.source)},
                     {"target", labeling_to_json(rd, r.target)},
                     {"source_neutral", r.source_neutral},
                     {"target_neutral", r.target_neutral}});
  return a;
}

std::string rows_text(const RestrictedData& rd, const std::vector<MapRow>& rows) {
  std::vector<std::vector<std::string>> t{{"source", "target"}};
  for (const MapRow& r : rows)
    t.push_back({format_labeling(rd, r.source) + (r.source_neutral ? " *" : ""),
                 format_labeling(rd, r.target) + (r.target_neutral ? " *" : "")});
  return render(t);
}

}  // namespace

Json h1_json(const RestrictedData& rd, const H1Result& r) {
  Json doc;
  doc["spec"] = spec_to_json(rd.spec);
  Json d;
  d["components"] = header_json(rd);
  d["labelings"] = r.total;
  d["filtered"] = r.filtered;
  d["F0"] = factors_json(rd.F0);
  d["C0"] = factors_json(rd.C0);
  doc["derived"] = d;
  Json classes = Json::array();
  for (const CohClass& c : r.classes) {
    Json orbit = Json::array();
    for (const Labeling& p : c.orbit) orbit.push_back(labeling_to_json(rd, p));
    Json mod2 = Json::array();
    for (const Int& x : c.cocycle.nu_mod2) mod2.push_back(x.get_si());
    classes.push_back(Json{{"representative", labeling_to_json(rd, c.representative)},
                           {"orbit", orbit},
                           {"nu", rat_vec_to_json(c.cocycle.nu)},
                           {"nu_mod2", mod2},
                           {"signs", c.cocycle.signs},
                           {"neutral", c.neutral}});
  }
  doc["classes"] = classes;
  return doc;
}

std::string h1_text(const RestrictedData& rd, const H1Result& r) {
  std::string s = header_text(rd);
  s += "labelings: " + std::to_string(r.total) + "  filtered: " + std::to_string(r.filtered) +
       "  classes: " + std::to_string(r.classes.size()) + "\n";
  std::vector<std::vector<std::string>> t{{"#", "representative", "orbit", "nu", "nu mod 2"}};
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const CohClass& c = r.classes[i];
    t.push_back({std::to_string(i) + (c.neutral ? "*" : ""), format_labeling(rd, c.representative),
                 std::to_string(c.orbit.size()), vec_text(c.cocycle.nu),
                 int_vec_text(c.cocycle.nu_mod2)});
  }
  return s + render(t);
}

Json forms_json(const RestrictedData& rd, const std::vector<InnerForm>& forms) {
  Json doc;
  doc["components"] = header_json(rd);
  doc["C0"] = factors_json(rd.C0);
  Json a = Json::array();
  for (const InnerForm& f : forms) {
    Json orbit = Json::array();
    for (const Labeling& p : f.orbit) orbit.push_back(labeling_to_json(rd, p));
    a.push_back(Json{{"representative", labeling_to_json(rd, f.representative)}, {"orbit", orbit}});
  }
  doc["forms"] = a;
  return doc;
}

std::string forms_text(const RestrictedData& rd, const std::vector<InnerForm>& forms) {
  std::string s = "group: " + describe(rd) + "\nC0: " + factors_text(rd.C0) +
                  "\ninner forms: " + std::to_string(forms.size()) + "\n";
  std::vector<std::vector<std::string>> t{{"#", "representative", "orbit"}};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::vector<std::string> members;
    for (const Labeling& p : forms[i].orbit) members.push_back(format_labeling(rd, p));
    t.push_back({std::to_string(i), format_labeling(rd, forms[i].representative), join(members, " ")});
  }
  return s + render(t);
}

Json twist_json(const RestrictedData& rd, const TwistMap& m) {
  Json doc;
  doc["source_base"] = labeling_to_json(rd, m.source_base);
  doc["target_base"] = labeling_to_json(rd, m.target_base);
  doc["rows"] = rows_json(rd, m.rows);
  return doc;
}

std::string twist_text(const RestrictedData& rd, const TwistMap& m) {
  return "twist: base " + format_labeling(rd, m.source_base) + " -> base " +
         format_labeling(rd, m.target_base) + "\n" + rows_text(rd, m.rows);
}

Json push_json(const RestrictedData& rd, const PushforwardMap& m) {
  Json doc;
  doc["rows"] = rows_json(rd, m.rows);
  Json missed = Json::array();
  for (const Labeling& p : m.missed) missed.push_back(labeling_to_json(rd, p));
  doc["missed"] = missed;
  return doc;
}

std::string push_text(const RestrictedData& rd, const PushforwardMap& m) {
  std::string s = "push-forward\n" + rows_text(rd, m.rows);
  std::vector<std::string> missed;
  for (const Labeling& p : m.missed) missed.push_back(format_labeling(rd, p));
  s += "not in image: " + (missed.empty() ? std::string("none") : join(missed, " ")) + "\n";
  return s;
}

Json oracle_json(const H1Result& kac, const OracleResult& oracle, const MatchReport& match) {
  Json doc;
  doc["kac"] = kac.classes.size();
  doc["oracle"] = oracle.orbits.size();
  doc["points"] = oracle.point_count;
  doc["match"] = match.ok;
  doc["problems"] = match.problems;
  return doc;
}

std::string oracle_text(const H1Result& kac, const OracleResult& oracle, const MatchReport& match) {
  std::string s = "kac: " + std::to_string(kac.classes.size()) +
                  "  oracle: " + std::to_string(oracle.orbits.size()) +
                  "  points: " + std::to_string(oracle.point_count) + "\n";
  for (const std::string& p : match.problems) s += "  " + p + "\n";
  s += match.ok ? "MATCH\n" : "MISMATCH\n";
  return s;
}

std::vector<std::pair<std::string, RatVec>> table_weights(const AffineComponent& c) {
  std::vector<int> which;
  const SimpleType& t = c.base;
  int l = static_cast<int>(c.rank());
  if (c.kind == PairKind::Outer) {
    if (t.series == Series::A && t.rank % 2 == 1) which = {1};
    if (t.series == Series::D) which = {l};
  } else {
    switch (t.series) {
      case Series::A: which = {1}; break;
      case Series::B: which = {l}; break;
      case Series::C: which = {1}; break;
      case Series::D: which = {l, 1}; break;
      case Series::E:
        if (t.rank != 8) which = {1};
        break;
      default: break;
    }
  }
  auto inv = inverse(c.restricted_cartan);
  if (!inv) fail_internal("singular restricted Cartan matrix");
  std::string prefix = c.kind == PairKind::Inner ? "omega_" : "omegabar_";
  std::vector<std::pair<std::string, RatVec>> out;
  for (int i : which) out.emplace_back(prefix + std::to_string(i), (*inv)[i - 1]);
  return out;
}

std::string tables_text(const AffineComponent& c, bool abbrev) {
  auto shown = [&](int mark) {
    if (!abbrev) return true;
    return c.kind == PairKind::Inner ? mark <= 2 : mark == 2;
  };
  std::vector<std::string> marks;
  for (int m : c.marks) marks.push_back(shown(m) ? std::to_string(m) : ".");
  std::string s = c.label() + " " + to_string(c.kind) + "\n";
  s += "marks: " + join(marks, " ") + "\n";
  for (const auto& [name, w] : table_weights(c)) {
    std::vector<std::string> cs{"-"};
    for (std::size_t i = 0; i < w.size(); ++i)
      cs.push_back(shown(c.marks[i + 1]) ? frac(w[i]).get_str() : ".");
    s += name + ": " + join(cs, " ") + "\n";
  }
  return s;
}

}  // namespace kacgal

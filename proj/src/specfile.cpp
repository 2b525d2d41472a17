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

#include "kacgal/specfile.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw ParseError("unknown key '" + it.key() + "' in " + where);
}

int get_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<int>();
}

Rat get_rat(const Json& v) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("coweight vector entries must be integers or \"p/q\" strings");
}

const Json* find_alias(const Json& obj, std::initializer_list<const char*> names) {
  const Json* hit = nullptr;
  for (const char* n : names)
    if (obj.contains(n)) {
      if (hit) throw ParseError(std::string("duplicate key ") + n);
      hit = &obj.at(n);
    }
  return hit;
}

CoweightTerm parse_term(const Json& t) {
  check_keys(t, {"component", "comp", "coweight", "coweight_index", "mult", "multiplicity"},
             "F term");
  CoweightTerm term;
  const Json* c = find_alias(t, {"component", "comp"});
  const Json* i = find_alias(t, {"coweight", "coweight_index"});
  const Json* m = find_alias(t, {"mult", "multiplicity"});
  if (!c || !i) throw ParseError("F term needs component and coweight");
  int comp = get_int(*c, "component");
  if (comp < 0) throw ParseError("component must be nonnegative");
  term.component = static_cast<std::size_t>(comp);
  term.index = get_int(*i, "coweight");
  term.mult = m ? get_int(*m, "mult") : 1;
  return term;
}

void apply_tau(ComponentSpec& cs, const Json& t) {
  if (t.is_array()) {
    if (cs.kind != PairKind::Outer) fail_validation("tau is not compatible with kind " + to_string(cs.kind));
    Permutation p;
    for (const Json& x : t) p.push_back(get_int(x, "tau entry") - 1);
    cs.tau = p;
    return;
  }
  if (!t.is_string()) throw ParseError("tau must be a string or a permutation");
  std::string s = t.get<std::string>();
  if (s.rfind("swap:", 0) == 0)
    fail_validation("swap pairs are entered as one component of kind swap");
  if (s == "id") {
    if (cs.kind != PairKind::Inner) fail_validation("tau is not compatible with kind " + to_string(cs.kind));
  } else if (s == "flip") {
    if (cs.kind != PairKind::Outer) fail_validation("tau is not compatible with kind " + to_string(cs.kind));
    if (cs.type.series == Series::D && cs.type.rank == 4)
      fail_validation("outer D4 needs an explicit tau permutation");
  } else if (s == "swap") {
    if (cs.kind != PairKind::Swap) fail_validation("tau is not compatible with kind " + to_string(cs.kind));
  } else {
    throw ParseError("unknown tau '" + s + "'");
  }
}

}  // namespace

GroupSpec spec_from_json(const Json& doc) {
  try {
    check_keys(doc, {"name", "comment", "components", "tau", "F", "q"}, "spec");
    GroupSpec spec;
    if (!doc.contains("components") || !doc["components"].is_array())
      throw ParseError("spec needs a components array");
    for (const Json& c : doc["components"]) {
      check_keys(c, {"type", "series", "rank", "kind", "tau", "comment"}, "component");
      ComponentSpec cs;
      if (c.contains("type")) {
        if (c.contains("series") || c.contains("rank"))
          throw ParseError("give either type or series and rank");
        if (!c["type"].is_string()) throw ParseError("type must be a string");
        cs.type = SimpleType::parse(c["type"].get<std::string>());
      } else {
        if (!c.contains("series") || !c.contains("rank") || !c["series"].is_string())
          throw ParseError("component needs type or series and rank");
        cs.type = SimpleType::parse(c["series"].get<std::string>() +
                                    std::to_string(get_int(c["rank"], "rank")));
      }
      if (c.contains("kind")) {
        if (!c["kind"].is_string()) throw ParseError("kind must be a string");
        cs.kind = parse_kind(c["kind"].get<std::string>());
      }
      if (c.contains("tau")) apply_tau(cs, c["tau"]);
      spec.components.push_back(cs);
    }
    if (doc.contains("tau")) {
      const Json& t = doc["tau"];
      if (!t.is_array() || t.size() != spec.components.size())
        throw ParseError("tau needs one entry per component");
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (doc["components"][k].contains("tau")) throw ParseError("tau given twice");
        apply_tau(spec.components[k], t[k]);
      }
    }
    if (doc.contains("F")) {
      if (!doc["F"].is_array()) throw ParseError("F must be an array");
      for (const Json& g : doc["F"]) {
        FGenerator gen;
        if (g.is_array()) {
          for (const Json& t : g) gen.terms.push_back(parse_term(t));
        } else if (g.is_object() && g.contains("vector")) {
          check_keys(g, {"vector"}, "F vector");
          if (!g["vector"].is_array()) throw ParseError("vector must be an array");
          RatVec v;
          for (const Json& x : g["vector"]) v.push_back(get_rat(x));
          gen.vector = v;
        } else {
          gen.terms.push_back(parse_term(g));
        }
        spec.F.push_back(gen);
      }
    }
    if (doc.contains("q")) {
      if (!doc["q"].is_array()) throw ParseError("q must be an array");
      for (const Json& row : doc["q"]) {
        if (!row.is_array()) throw ParseError("q entries must be label arrays");
        std::vector<int> labels;
        for (const Json& x : row) labels.push_back(get_int(x, "label"));
        spec.q.push_back(labels);
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

GroupSpec parse_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return spec_from_json(doc);
}

GroupSpec read_spec_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_spec(text);
}

Json spec_to_json(const GroupSpec& spec) {
  Json doc;
  Json comps = Json::array();
  for (const ComponentSpec& c : spec.components) {
    Json j;
    j["type"] = c.type.name();
    j["kind"] = to_string(c.kind);
    if (c.tau) {
      Json t = Json::array();
      for (int x : *c.tau) t.push_back(x + 1);
      j["tau"] = t;
    }
    comps.push_back(j);
  }
  doc["components"] = comps;
  Json f = Json::array();
  for (const FGenerator& g : spec.F) {
    if (g.vector) {
      f.push_back(Json{{"vector", rat_vec_to_json(*g.vector)}});
      continue;
    }
    Json terms = Json::array();
    for (const CoweightTerm& t : g.terms)
      terms.push_back(Json{{"component", t.component}, {"coweight", t.index}, {"mult", t.mult.get_si()}});
    f.push_back(terms);
  }
  doc["F"] = f;
  doc["q"] = spec.q;
  return doc;
}

Json rat_vec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) {
    if (is_integer(x) && x.get_num().fits_slong_p())
      a.push_back(x.get_num().get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

std::vector<std::vector<int>> split_labeling(const RestrictedData& rd, const Labeling& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < rd.full.comps.size(); ++k) {
    auto b = p.begin() + rd.vertex_offset[k];
    out.emplace_back(b, b + rd.full.comps[k].vertex_count());
  }
  return out;
}

Json labeling_to_json(const RestrictedData& rd, const Labeling& p) {
  return split_labeling(rd, p);
}

std::string format_labeling(const RestrictedData& rd, const Labeling& p) {
  std::string s;
  auto parts = split_labeling(rd, p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += "|";
    for (int x : parts[k]) s += std::to_string(x);
  }
  return s;
}

std::vector<std::vector<int>> parse_labeling_text(const std::string& text) {
  std::vector<std::vector<int>> out;
  if (!text.empty() && text[0] == '[') {
    try {
      Json j = Json::parse(text);
      for (const Json& row : j) {
        std::vector<int> r;
        for (const Json& x : row) r.push_back(get_int(x, "label"));
        out.push_back(r);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    return out;
  }
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, '|')) {
    std::vector<int> r;
    std::stringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty() || item.size() > 6 ||
          item.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad label '" + item + "'");
      r.push_back(std::stoi(item));
    }
    out.push_back(r);
  }
  if (out.empty()) throw ParseError("empty labeling");
  return out;
}

}  // namespace kacgal

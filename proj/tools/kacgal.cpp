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

// kacgal: Galois cohomology of real semisimple groups via Kac labelings.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kacgal/error.hpp"
#include "kacgal/functor.hpp"
#include "kacgal/kac.hpp"
#include "kacgal/oracle.hpp"
#include "kacgal/report.hpp"
#include "kacgal/specfile.hpp"

namespace {

using namespace kacgal;

enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kValidation = 3, kMismatch = 4 };

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

template <typename F>
Outcome guarded(F&& f) {
  Outcome o;
  try {
    o.code = f(o.out);
  } catch (const ParseError& e) {
    o.code = kParse;
    o.err = std::string("parse error: ") + e.what();
  } catch (const ValidationError& e) {
    o.code = kValidation;
    o.err = std::string("invalid: ") + e.what();
  } catch (const InternalError& e) {
    o.code = kInternal;
    o.err = std::string("internal error: ") + e.what();
  }
  return o;
}

int finish(const Outcome& o) {
  std::cout << o.out;
  if (!o.err.empty()) std::cerr << o.err << "\n";
  return o.code;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void fill_default_q(GroupSpec& spec) {
  if (!spec.q.empty()) return;
  for (const ComponentSpec& c : spec.components) {
    AffineComponent a = build_affine(c.kind, c.type, c.tau);
    std::vector<int> q(a.vertex_count(), 0);
    q[0] = 2 / a.m0();
    spec.q.push_back(q);
  }
}

Permutation parse_perm(const std::string& text) {
  Permutation p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4)
      throw ParseError("bad tau permutation '" + text + "'");
    p.push_back(std::stoi(item) - 1);
  }
  return p;
}

GroupSpec single_component(const std::string& type, const std::string& kind, const std::string& tau) {
  GroupSpec spec;
  ComponentSpec c;
  c.type = SimpleType::parse(type);
  c.kind = parse_kind(kind);
  if (!tau.empty()) {
    if (c.kind != PairKind::Outer) fail_validation("tau is not compatible with kind " + kind);
    c.tau = parse_perm(tau);
  }
  spec.components.push_back(c);
  return spec;
}

int run_h1(const std::string& path, bool json, std::string& out) {
  RestrictedData rd = restricted_data(read_spec_file(path));
  H1Result r = h1(rd);
  out += json ? dump(h1_json(rd, r)) : h1_text(rd, r);
  return kOk;
}

int run_batch(const std::string& dir, bool json) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  if (ec) {
    std::cerr << "parse error: cannot read directory " << dir << "\n";
    return kParse;
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const std::string& f : files)
    jobs.push_back(std::async(std::launch::async, [f, json] {
      return guarded([&](std::string& out) { return run_h1(f, json, out); });
    }));
  int worst = kOk;
  Json all = Json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome o = jobs[i].get();
    std::string name = std::filesystem::path(files[i]).filename().string();
    if (json) {
      all[name] = o.code == kOk ? Json::parse(o.out) : Json{{"error", o.err}, {"exit", o.code}};
    } else {
      std::cout << "== " << name << " ==\n" << o.out;
      if (!o.err.empty()) std::cout << o.err << "\n";
    }
    worst = std::max(worst, o.code);
  }
  if (json) std::cout << dump(all);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois cohomology H^1(R, G) of real semisimple groups via Kac labelings"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file;
  std::string batch;
  auto* h1_cmd = app.add_subcommand("h1", "Compute H^1 classes for a spec file");
  h1_cmd->add_option("file", file, "Spec file, or - for stdin");
  h1_cmd->add_option("--batch", batch, "Process every .json file in a directory");
  add_format(h1_cmd);

  std::string type;
  std::string kind = "inner";
  std::string tau;
  auto* forms_cmd = app.add_subcommand("forms", "Inner forms as C0-orbits of Kac labelings");
  forms_cmd->add_option("file", file, "Spec file, or - for stdin");
  forms_cmd->add_option("--type", type, "Simple type, e.g. E7");
  forms_cmd->add_option("--kind", kind, "inner, outer or swap");
  forms_cmd->add_option("--tau", tau, "Explicit involution, e.g. 1,2,4,3");
  add_format(forms_cmd);

  std::string to_file;
  auto* push_cmd = app.add_subcommand("push", "Push-forward along F contained in F'");
  push_cmd->add_option("file", file, "Source spec file")->required();
  push_cmd->add_option("--to", to_file, "Target spec file")->required();
  add_format(push_cmd);

  std::string base;
  auto* twist_cmd = app.add_subcommand("twist", "Twisting bijection to a new base labeling");
  twist_cmd->add_option("file", file, "Spec file")->required();
  twist_cmd->add_option("--base", base, "New base labeling, e.g. 0,0,1,0|1,0")->required();
  add_format(twist_cmd);

  bool corrupt = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare against the brute-force oracle");
  oracle_cmd->add_option("file", file, "Spec file")->required();
  oracle_cmd->add_flag("--corrupt-marks", corrupt)->group("");
  add_format(oracle_cmd);

  bool abbrev = false;
  auto* tables_cmd = app.add_subcommand("tables", "Marks and c-coefficients of one diagram");
  tables_cmd->add_option("--type", type, "Simple type, e.g. E7")->required();
  tables_cmd->add_option("--kind", kind, "inner, outer or swap");
  tables_cmd->add_option("--tau", tau, "Explicit involution, e.g. 1,2,4,3");
  tables_cmd->add_flag("--abbrev", abbrev, "Only the entries the printed tables show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  bool json = format == "json";

  if (h1_cmd->parsed()) {
    if (!batch.empty()) {
      if (!file.empty()) {
        std::cerr << "parse error: give a file or --batch, not both\n";
        return kParse;
      }
      return run_batch(batch, json);
    }
    if (file.empty()) {
      std::cerr << "parse error: missing spec file\n";
      return kParse;
    }
    return finish(guarded([&](std::string& out) { return run_h1(file, json, out); }));
  }
  if (forms_cmd->parsed()) {
    return finish(guarded([&](std::string& out) {
      if (file.empty() == type.empty()) throw ParseError("give a spec file or --type");
      GroupSpec spec = file.empty() ? single_component(type, kind, tau) : read_spec_file(file);
      fill_default_q(spec);
      RestrictedData rd = restricted_data(spec);
      auto forms = inner_forms(rd);
      out += json ? dump(forms_json(rd, forms)) : forms_text(rd, forms);
      return kOk;
    }));
  }
  if (push_cmd->parsed()) {
    return finish(guarded([&](std::string& out) {
      GroupSpec src = read_spec_file(file);
      GroupSpec dst = read_spec_file(to_file);
      PushforwardMap m = pushforward(src, dst);
      RestrictedData rd = restricted_data(src);
      out += json ? dump(push_json(rd, m)) : push_text(rd, m);
      return kOk;
    }));
  }
  if (twist_cmd->parsed()) {
    return finish(guarded([&](std::string& out) {
      GroupSpec spec = read_spec_file(file);
      TwistMap m = twist(spec, parse_labeling_text(base));
      RestrictedData rd = restricted_data(spec);
      out += json ? dump(twist_json(rd, m)) : twist_text(rd, m);
      return kOk;
    }));
  }
  if (oracle_cmd->parsed()) {
    return finish(guarded([&](std::string& out) {
      BuildOptions opts;
      opts.corrupt_marks = corrupt;
      GroupSpec spec = read_spec_file(file);
      RestrictedData rd = restricted_data(spec, opts);
      Comparison c = compare_with_oracle(rd, oracle_rank_bound());
      out += json ? dump(oracle_json(c.kac, c.oracle, c.match)) : oracle_text(c.kac, c.oracle, c.match);
      return c.match.ok ? kOk : kMismatch;
    }));
  }
  if (tables_cmd->parsed()) {
    return finish(guarded([&](std::string& out) {
      GroupSpec spec = single_component(type, kind, tau);
      const ComponentSpec& c = spec.components.front();
      out += tables_text(build_affine(c.kind, c.type, c.tau), abbrev);
      return kOk;
    }));
  }
  return kOk;
}

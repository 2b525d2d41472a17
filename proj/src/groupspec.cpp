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

#include "kacgal/groupspec.hpp"

#include <numeric>
#include <string>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

void corrupt(AffineComponent& c) {
  int& m = c.marks.back();
  m = m > 1 ? m - 1 : m + 1;
}

void check_q(const FullData& fd, const GroupSpec& spec) {
  if (spec.q.size() != fd.comps.size())
    fail_validation("q needs one label vector per component");
  for (std::size_t k = 0; k < fd.comps.size(); ++k) {
    const AffineComponent& c = fd.comps[k];
    const auto& labels = spec.q[k];
    std::string where = " on component " + std::to_string(k);
    if (labels.size() != c.vertex_count()) fail_validation("q has wrong length" + where);
    int sum = 0;
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (labels[b] < 0) fail_validation("negative label" + where);
      if (labels[b] > 2) fail_validation("mark equation violated" + where);
      sum += c.marks[b] * labels[b];
    }
    if (sum != 2) fail_validation("mark equation violated" + where);
  }
}

}  // namespace

RatVec generator_vector(const FullData& fd, const FGenerator& g) {
  if (g.vector) {
    if (g.vector->size() != fd.dim) fail_validation("F-generator vector has wrong length");
    if (!g.terms.empty()) fail_validation("F-generator mixes terms and a vector");
    return *g.vector;
  }
  RatVec v = zero_vec(fd.dim);
  for (const CoweightTerm& t : g.terms) {
    if (t.component >= fd.comps.size())
      fail_validation("F-generator names a missing component");
    std::size_t n = fd.comps[t.component].full_rank;
    if (t.index < 1 || static_cast<std::size_t>(t.index) > n)
      fail_validation("F-generator coweight index out of range");
    v[fd.offset[t.component] + t.index - 1] += Rat(t.mult);
  }
  return v;
}

FullData full_data(const GroupSpec& spec, const BuildOptions& options) {
  FullData fd;
  if (spec.components.empty()) fail_validation("no components");
  for (const ComponentSpec& cs : spec.components) {
    if (cs.tau && cs.kind != PairKind::Outer)
      fail_validation("tau is not compatible with kind " + to_string(cs.kind));
    fd.offset.push_back(fd.dim);
    fd.comps.push_back(build_affine(cs.kind, cs.type, cs.tau, options.choice));
    fd.dim += fd.comps.back().full_rank;
  }
  std::size_t n = fd.dim;
  fd.cartan = zero_mat(n, n);
  fd.tau.resize(n);
  for (std::size_t k = 0; k < fd.comps.size(); ++k) {
    const AffineComponent& c = fd.comps[k];
    std::size_t o = fd.offset[k];
    for (std::size_t i = 0; i < c.full_rank; ++i) {
      fd.tau[o + i] = static_cast<int>(o + c.tau[i]);
      for (std::size_t j = 0; j < c.full_rank; ++j) fd.cartan[o + i][o + j] = c.full_cartan[i][j];
    }
  }
  std::vector<RatVec> coroots = transpose(fd.cartan);
  fd.coroot = Lattice::span(coroots, n);
  fd.coweight = Lattice::standard(n);
  std::vector<RatVec> gens = coroots;
  for (std::size_t g = 0; g < spec.F.size(); ++g) {
    RatVec v = generator_vector(fd, spec.F[g]);
    if (!is_integral(v))
      fail_validation("F-generator not in P∨ (generator " + std::to_string(g) + ")");
    fd.f_vectors.push_back(v);
    gens.push_back(v);
  }
  fd.cocharacter = Lattice::span(gens, n);
  for (const RatVec& v : fd.f_vectors) {
    RatVec tv(n);
    for (std::size_t i = 0; i < n; ++i) tv[fd.tau[i]] = v[i];
    if (!fd.cocharacter.contains(tv)) fail_validation("tau does not preserve F");
  }
  fd.root = Lattice::standard(n);
  fd.weight = dual_lattice(fd.coroot);
  fd.character = dual_lattice(fd.cocharacter);
  return fd;
}

void validate(const GroupSpec& spec, const BuildOptions& options) {
  check_q(full_data(spec, options), spec);
}

std::vector<int> RestrictedData::flat_marks() const {
  std::vector<int> m;
  for (const AffineComponent& c : full.comps) m.insert(m.end(), c.marks.begin(), c.marks.end());
  return m;
}

RatVec RestrictedData::finite_part(const Labeling& p) const {
  RatVec y(dim);
  for (std::size_t k = 0; k < full.comps.size(); ++k)
    for (std::size_t i = 0; i < full.comps[k].rank(); ++i)
      y[offset[k] + i] = p.at(vertex_offset[k] + i + 1);
  return y;
}

RestrictedData restricted_data(const GroupSpec& spec, const BuildOptions& options) {
  RestrictedData rd;
  rd.spec = spec;
  rd.full = full_data(spec, options);
  check_q(rd.full, spec);
  const FullData& fd = rd.full;
  for (std::size_t k = 0; k < fd.comps.size(); ++k) {
    const AffineComponent& c = fd.comps[k];
    rd.offset.push_back(rd.dim);
    rd.vertex_offset.push_back(rd.vertex_count);
    for (std::size_t i = 0; i < c.rank(); ++i) {
      rd.reps.push_back(static_cast<int>(fd.offset[k] + c.reps[i]));
      rd.moved.push_back(c.moved[i]);
    }
    rd.dim += c.rank();
    rd.vertex_count += c.vertex_count();
    rd.q.insert(rd.q.end(), spec.q[k].begin(), spec.q[k].end());
  }
  std::size_t n = fd.dim;
  rd.coweight_restriction = zero_mat(rd.dim, n);
  rd.weight_restriction = zero_mat(rd.dim, n);
  for (std::size_t i = 0; i < rd.dim; ++i) {
    int r = rd.reps[i];
    rd.coweight_restriction[i][r] = 1;
    rd.weight_restriction[i][r] = 1;
    rd.weight_restriction[i][fd.tau[r]] = 1;
  }
  RatMat t = zero_mat(n, n);
  for (std::size_t i = 0; i < n; ++i) t[fd.tau[i]][i] = 1;

  TauProjection xv = project_tau(fd.cocharacter, t, rd.coweight_restriction);
  TauProjection qv = project_tau(fd.coroot, t, rd.coweight_restriction);
  TauProjection pv = project_tau(fd.coweight, t, rd.coweight_restriction);
  rd.X0v = xv.fixed;
  rd.Xt0v = xv.projected;
  rd.Q0v = qv.fixed;
  rd.Qt0v = qv.projected;
  rd.Pt0v = pv.projected;
  rd.Q0 = image(fd.root, rd.weight_restriction);
  rd.X0 = image(fd.character, rd.weight_restriction);
  rd.P0 = image(fd.weight, rd.weight_restriction);
  if (!rd.X0v.is_sublattice_of(rd.Xt0v) || !rd.Xt0v.is_sublattice_of(rd.X0v.scaled(Rat(1, 2))))
    fail_internal("projected cocharacter lattice out of bounds");
  rd.F0 = quotient(rd.Xt0v, rd.Qt0v);
  rd.C0 = quotient(rd.Pt0v, rd.Qt0v);
  rd.X0v_mod2 = quotient(rd.X0v, rd.X0v.scaled(2));
  rd.X0_mod_Q0 = quotient(rd.X0, rd.Q0);
  rd.x0_mod_q0_reps = rd.X0_mod_Q0.elements();
  for (const RatVec& g : rd.C0.generator_lifts()) rd.c0_permutations.push_back(coset_permutation(rd, g));
  rd.f0_permutations = f0_action(rd);
  if (options.corrupt_marks) corrupt(rd.full.comps.front());
  return rd;
}

Permutation coset_permutation(const RestrictedData& rd, const RatVec& y) {
  if (!rd.Pt0v.contains(y)) fail_validation("element is not in the projected coweight lattice");
  Permutation p;
  for (std::size_t k = 0; k < rd.full.comps.size(); ++k) {
    const AffineComponent& c = rd.full.comps[k];
    RatVec part(y.begin() + rd.offset[k], y.begin() + rd.offset[k] + c.rank());
    Permutation local = coset_action(c, reduce_to_alcove(c, part));
    for (int v : local) p.push_back(static_cast<int>(rd.vertex_offset[k]) + v);
  }
  return p;
}

std::vector<Permutation> f0_action(const RestrictedData& rd) {
  std::vector<Permutation> out;
  for (const RatVec& g : rd.F0.generator_lifts()) out.push_back(coset_permutation(rd, g));
  return out;
}

}  // namespace kacgal

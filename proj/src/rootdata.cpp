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

#include "kacgal/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

Rat height(const RatVec& v) {
  Rat h = 0;
  for (const Rat& x : v) h += x;
  return h;
}

RatMat gram_matrix(const RatMat& a) {
  RatVec n = root_norms(a);
  RatMat g = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) g[i][j] = a[i][j] * n[j] / 2;
  return g;
}

bool is_automorphism(const RatMat& a, const Permutation& p) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[p[i]][p[j]] != a[i][j]) return false;
  return true;
}

// e_i in the chain E_n numbering used here
IntMatrix e_cartan(int n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n - 1; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  a[n - 1][n - 4] = a[n - 4][n - 1] = -1;
  return a;
}

}  // namespace

SimpleType SimpleType::make(Series series, int rank) {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 3; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  SimpleType t;
  t.series = series;
  t.rank = rank;
  if (!ok) fail_validation("invalid simple type " + t.name());
  return t;
}

SimpleType SimpleType::parse(const std::string& text) {
  if (text.size() < 2) throw ParseError("bad type: " + text);
  static const std::string letters = "ABCDEFG";
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto pos = letters.find(c);
  if (pos == std::string::npos) throw ParseError("bad type: " + text);
  std::string digits = text.substr(1);
  if (digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char d) { return std::isdigit(d); }))
    throw ParseError("bad type: " + text);
  return make(static_cast<Series>(pos), std::stoi(digits));
}

std::string SimpleType::name() const {
  return std::string(1, "ABCDEFG"[static_cast<int>(series)]) + std::to_string(rank);
}

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::Inner: return "inner";
    case PairKind::Outer: return "outer";
    case PairKind::Swap: return "swap";
  }
  return "inner";
}

PairKind parse_kind(const std::string& text) {
  std::string t;
  for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "inner") return PairKind::Inner;
  if (t == "outer") return PairKind::Outer;
  if (t == "swap") return PairKind::Swap;
  throw ParseError("bad kind: " + text);
}

IntMatrix cartan_matrix(const SimpleType& t) {
  int n = t.rank;
  if (t.series == Series::E) return e_cartan(n);
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      break;
    case Series::G:
      link(0, 1);
      a[1][0] = -3;
      break;
    case Series::E:
      break;
  }
  return a;
}

RatMat fundamental_coweights(const SimpleType& t) {
  auto inv = inverse(to_rat(cartan_matrix(t)));
  if (!inv) fail_internal("singular Cartan matrix");
  return *inv;
}

bool admits_outer(const SimpleType& t) {
  return (t.series == Series::A && t.rank >= 2) || t.series == Series::D ||
         (t.series == Series::E && t.rank == 6);
}

std::optional<Permutation> default_involution(const SimpleType& t) {
  int n = t.rank;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  if (t.series == Series::A && n >= 2) {
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
  }
  if (t.series == Series::D && n != 4) {
    std::swap(p[n - 2], p[n - 1]);
    return p;
  }
  if (t.series == Series::E && n == 6) {
    std::swap(p[0], p[4]);
    std::swap(p[1], p[3]);
    return p;
  }
  return std::nullopt;
}

std::vector<RatVec> positive_roots(const RatMat& a) {
  std::size_t n = a.size();
  std::set<RatVec> seen;
  std::vector<RatVec> roots;
  std::vector<RatVec> layer;
  for (std::size_t i = 0; i < n; ++i) {
    layer.push_back(unit_vec(n, i));
    seen.insert(layer.back());
  }
  while (!layer.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& b : layer) {
      roots.push_back(b);
      for (std::size_t i = 0; i < n; ++i) {
        Rat pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += b[j] * a[j][i];
        int p = 0;
        RatVec down = b;
        for (;;) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (Rat(p) - pairing <= 0) continue;
        RatVec up = b;
        up[i] += 1;
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::stable_sort(roots.begin(), roots.end(), [](const RatVec& x, const RatVec& y) {
    return height(x) < height(y);
  });
  return roots;
}

RatVec root_norms(const RatMat& a) {
  std::size_t n = a.size();
  RatVec norm(n, Rat(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    comp[s] = ncomp;
    norm[s] = 1;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0 || comp[j] >= 0) continue;
        // (a_i, a_j) = a_ij n_j / 2 = a_ji n_i / 2
        norm[j] = norm[i] * a[j][i] / a[i][j];
        comp[j] = ncomp;
        queue.push_back(j);
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    Rat mx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c && norm[i] > mx) mx = norm[i];
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) norm[i] = norm[i] * 2 / mx;
  }
  return norm;
}

RatVec highest_root(const RatMat& a) { return positive_roots(a).back(); }

RatVec highest_short_root(const RatMat& a) {
  RatMat g = gram_matrix(a);
  auto roots = positive_roots(a);
  Rat shortest = -1;
  for (const RatVec& r : roots) {
    Rat len = dot(r, g * r);
    if (shortest < 0 || len < shortest) shortest = len;
  }
  RatVec best;
  for (const RatVec& r : roots)
    if (dot(r, g * r) == shortest) best = r;
  return best;
}

RatVec twisted_affine_root_table(const SimpleType& base) {
  int r = base.rank;
  RatVec a;
  if (base.series == Series::A && r % 2 == 0) {
    a.assign(r / 2, Rat(-2));
  } else if (base.series == Series::A && r >= 3) {
    int l = (r + 1) / 2;
    a.assign(l, Rat(-2));
    a.front() = -1;
    a.back() = -1;
  } else if (base.series == Series::D) {
    a.assign(r - 1, Rat(-1));
  } else if (base.series == Series::E && r == 6) {
    a = {Rat(-2), Rat(-3), Rat(-2), Rat(-1)};
  } else {
    fail_validation("no twisted affine diagram for " + base.name());
  }
  return a;
}

std::string AffineComponent::label() const {
  switch (kind) {
    case PairKind::Inner: return base.name();
    case PairKind::Outer: return "2" + base.name();
    case PairKind::Swap: return base.name() + "+" + base.name();
  }
  return base.name();
}

AffineComponent build_affine(PairKind kind, const SimpleType& base,
                             const std::optional<Permutation>& tau,
                             RepChoice choice) {
  AffineComponent c;
  c.kind = kind;
  c.base = base;
  RatMat a = to_rat(cartan_matrix(base));
  std::size_t l = base.rank;
  if (kind == PairKind::Swap) {
    c.full_rank = 2 * l;
    c.full_cartan = zero_mat(2 * l, 2 * l);
    c.tau.resize(2 * l);
    for (std::size_t i = 0; i < l; ++i) {
      c.tau[i] = static_cast<int>(i + l);
      c.tau[i + l] = static_cast<int>(i);
      for (std::size_t j = 0; j < l; ++j)
        c.full_cartan[i][j] = c.full_cartan[i + l][j + l] = a[i][j];
    }
  } else {
    c.full_rank = l;
    c.full_cartan = a;
    c.tau.resize(l);
    std::iota(c.tau.begin(), c.tau.end(), 0);
    if (kind == PairKind::Outer) {
      if (!admits_outer(base)) fail_validation("no outer form for " + base.name());
      Permutation t;
      if (tau) {
        t = *tau;
      } else if (auto d = default_involution(base)) {
        t = *d;
      } else {
        fail_validation("outer " + base.name() + " needs an explicit tau");
      }
      if (t.size() != l) fail_validation("tau has wrong length");
      std::vector<bool> hit(l, false);
      for (int x : t) {
        if (x < 0 || static_cast<std::size_t>(x) >= l || hit[x])
          fail_validation("tau is not a permutation");
        hit[x] = true;
      }
      for (std::size_t i = 0; i < l; ++i)
        if (t[t[i]] != static_cast<int>(i)) fail_validation("tau is not an involution");
      if (!is_automorphism(a, t)) fail_validation("tau is not a diagram automorphism");
      bool trivial = true;
      for (std::size_t i = 0; i < l; ++i)
        if (t[i] != static_cast<int>(i)) trivial = false;
      if (trivial) fail_validation("outer kind needs a nontrivial tau");
      c.tau = t;
    }
  }

  std::size_t n = c.full_rank;
  for (std::size_t i = 0; i < n; ++i) {
    int t = c.tau[i];
    if (static_cast<int>(i) > t) continue;
    c.reps.push_back(choice == RepChoice::Lowest ? static_cast<int>(i) : t);
    c.moved.push_back(t != static_cast<int>(i));
  }
  std::size_t lb = c.reps.size();
  c.restricted_simple_roots = zero_mat(lb, n);
  for (std::size_t k = 0; k < lb; ++k) {
    c.restricted_simple_roots[k][c.reps[k]] = 1;
    c.restricted_simple_roots[k][c.tau[c.reps[k]]] = 1;
  }
  c.restricted_cartan = zero_mat(lb, lb);
  c.effective_cartan = zero_mat(lb, lb);
  const RatMat& fa = c.full_cartan;
  for (std::size_t i = 0; i < lb; ++i)
    for (std::size_t j = 0; j < lb; ++j) {
      int ri = c.reps[i];
      int rj = c.reps[j];
      Rat v = fa[ri][rj];
      if (c.moved[j]) v += fa[ri][c.tau[rj]];
      c.restricted_cartan[i][j] = v;
    }
  for (std::size_t i = 0; i < lb; ++i)
    for (std::size_t j = 0; j < lb; ++j)
      c.effective_cartan[i][j] = 2 * c.restricted_cartan[i][j] / c.restricted_cartan[j][j];

  switch (kind) {
    case PairKind::Inner:
    case PairKind::Swap:
      c.affine_root_coeffs = -highest_root(a);
      break;
    case PairKind::Outer: {
      bool bc = false;
      for (std::size_t j = 0; j < lb; ++j)
        if (c.restricted_cartan[j][j] == 1) bc = true;
      RatVec hs = highest_short_root(c.effective_cartan);
      c.affine_root_coeffs = Rat(bc ? -2 : -1) * hs;
      if (!tau || *tau == default_involution(base)) {
        if (c.affine_root_coeffs != twisted_affine_root_table(base))
          fail_internal("twisted affine root disagrees with the built-in table for " +
                        base.name());
      }
      break;
    }
  }

  // marks: primitive positive solution of m_0 abar_0 + sum m_i abar_i = 0
  RatVec m(lb + 1);
  m[0] = 1;
  for (std::size_t i = 0; i < lb; ++i) m[i + 1] = -c.affine_root_coeffs[i];
  Int den = lcm_of_denominators(m);
  Int g = 0;
  for (Rat& x : m) {
    x *= Rat(den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  int target = kind == PairKind::Inner ? 1 : 2;
  Int prim0 = m[0].get_num() / g;
  if (target % prim0.get_si() != 0) fail_internal("marks cannot be normalized");
  for (Rat& x : m) {
    Rat y = x / Rat(g) * Rat(target / prim0.get_si());
    if (!is_integer(y) || y <= 0) fail_internal("marks are not positive integers");
    c.marks.push_back(static_cast<int>(y.get_num().get_si()));
  }

  RatMat g0 = gram_matrix(c.effective_cartan);
  RatMat gram = zero_mat(lb + 1, lb + 1);
  RatVec ga = transpose(g0) * c.affine_root_coeffs;
  for (std::size_t i = 0; i < lb; ++i) {
    for (std::size_t j = 0; j < lb; ++j) gram[i + 1][j + 1] = g0[i][j];
    gram[0][i + 1] = gram[i + 1][0] = ga[i];
  }
  gram[0][0] = dot(c.affine_root_coeffs, ga);
  c.affine_cartan = zero_mat(lb + 1, lb + 1);
  for (std::size_t i = 0; i <= lb; ++i)
    for (std::size_t j = 0; j <= lb; ++j)
      c.affine_cartan[i][j] = 2 * gram[i][j] / gram[j][j];

  const RatMat& k = c.affine_cartan;
  for (std::size_t i = 0; i <= lb; ++i)
    for (std::size_t j = i + 1; j <= lb; ++j) {
      if (k[i][j] == 0) continue;
      Edge e;
      e.v = static_cast<int>(i);
      e.w = static_cast<int>(j);
      Rat kij = abs(k[i][j]);
      Rat kji = abs(k[j][i]);
      e.bond = static_cast<int>(std::max(kij, kji).get_num().get_si());
      if (kij > kji) e.arrow_to = e.w;
      if (kji > kij) e.arrow_to = e.v;
      c.edges.push_back(e);
    }
  return c;
}

std::vector<Permutation> diagram_automorphisms(const AffineComponent& c) {
  std::size_t n = c.vertex_count();
  const RatMat& k = c.affine_cartan;
  std::vector<Permutation> out;
  Permutation p(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || c.marks[t] != c.marks[i] || k[t][t] != k[i][i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = k[t][p[j]] == k[i][j] && k[p[j]][t] == k[j][i];
      if (!ok) continue;
      p[i] = static_cast<int>(t);
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
    }
  };
  extend(extend, 0);
  return out;
}

RatVec barycentric(const AffineComponent& c, const RatVec& y) {
  RatVec x(c.vertex_count());
  x[0] = dot(c.affine_root_coeffs, y) + Rat(1, c.m0());
  for (std::size_t i = 0; i < c.rank(); ++i) x[i + 1] = y[i];
  return x;
}

RatVec alcove_vertex(const AffineComponent& c, int vertex) {
  RatVec y = zero_vec(c.rank());
  if (vertex > 0) y[vertex - 1] = Rat(1, c.marks[vertex]);
  return y;
}

namespace {

void reflect_in_place(const AffineComponent& c, int vertex, RatVec& y) {
  std::size_t l = c.rank();
  if (vertex == 0) {
    Rat f = dot(c.affine_root_coeffs, y) + Rat(1, c.m0());
    if (sgn(f) == 0) return;
    for (std::size_t i = 0; i < l; ++i)
      if (sgn(c.affine_cartan[i + 1][0]) != 0) y[i] -= f * c.affine_cartan[i + 1][0];
  } else {
    std::size_t j = vertex - 1;
    if (sgn(y[j]) == 0) return;
    Rat f = y[j];
    for (std::size_t i = 0; i < l; ++i)
      if (sgn(c.effective_cartan[i][j]) != 0) y[i] -= f * c.effective_cartan[i][j];
  }
}

}  // namespace

RatVec reflect(const AffineComponent& c, int vertex, const RatVec& y) {
  RatVec out = y;
  reflect_in_place(c, vertex, out);
  return out;
}

RatVec reduce_to_alcove(const AffineComponent& c, const RatVec& y) {
  RatVec cur = y;
  for (int step = 0; step < 1000000; ++step) {
    RatVec x = barycentric(c, cur);
    std::size_t wall = x.size();
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x[b] < 0) {
        wall = b;
        break;
      }
    if (wall == x.size()) return cur;
    cur = reflect(c, static_cast<int>(wall), cur);
  }
  fail_internal("alcove reduction did not terminate");
}

std::vector<int> special_vertices(const AffineComponent& c) {
  std::vector<int> out{0};
  for (std::size_t b = 1; b < c.vertex_count(); ++b) {
    int m = c.marks[b];
    if (m == 1 || (c.moved[b - 1] && m == 2)) out.push_back(static_cast<int>(b));
  }
  return out;
}

std::vector<int> longest_word(const AffineComponent& c, const std::vector<int>& j) {
  RatVec r(c.rank(), Rat(1));
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int v : j)
      if (r[v] > 0) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    reflect_in_place(c, pick + 1, r);
    word.push_back(pick);
    if (word.size() > 100000) fail_internal("longest element search did not terminate");
  }
  return word;
}

RatVec apply_word(const AffineComponent& c, const std::vector<int>& word, const RatVec& y) {
  RatVec out = y;
  for (int v : word) reflect_in_place(c, v + 1, out);
  return out;
}

RatVec apply_longest(const AffineComponent& c, const std::vector<int>& j,
                     const RatVec& y) {
  return apply_word(c, longest_word(c, j), y);
}

Permutation coset_action(const AffineComponent& c, const RatVec& nu) {
  std::size_t n = c.vertex_count();
  std::vector<RatVec> verts;
  for (std::size_t b = 0; b < n; ++b) verts.push_back(alcove_vertex(c, static_cast<int>(b)));
  int beta = -1;
  for (int b : special_vertices(c))
    if (verts[b] == nu) beta = b;
  if (beta < 0) fail_validation("not an alcove representative of a coset");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  if (beta == 0) return p;
  std::vector<int> all;
  std::vector<int> rest;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    all.push_back(static_cast<int>(i));
    if (static_cast<int>(i) != beta - 1) rest.push_back(static_cast<int>(i));
  }
  std::vector<int> w = longest_word(c, all);
  std::vector<int> w_rest = longest_word(c, rest);
  w.insert(w.end(), w_rest.begin(), w_rest.end());
  for (std::size_t g = 0; g < n; ++g) {
    RatVec img = apply_word(c, w, verts[g]) + nu;
    auto it = std::find(verts.begin(), verts.end(), img);
    if (it == verts.end()) fail_internal("coset action does not preserve the alcove");
    p[g] = static_cast<int>(it - verts.begin());
  }
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& gens,
                                       std::size_t n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> out{id};
  std::set<Permutation> seen{id};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Permutation& g : gens) {
      Permutation h = compose(g, out[i]);
      if (seen.insert(h).second) out.push_back(h);
    }
  return out;
}

}  // namespace kacgal

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

#include "kacgal/lattice.hpp"

#include <algorithm>
#include <utility>

#include "kacgal/error.hpp"

namespace kacgal {

namespace {

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy_row(IntVec& dst, const Int& q, const IntVec& src) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

Int common_denominator(const std::vector<RatVec>& rows) {
  Int l = 1;
  for (const RatVec& r : rows) {
    Int d = lcm_of_denominators(r);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

IntMat scale_to_int(const std::vector<RatVec>& rows, const Int& d) {
  IntMat m;
  m.reserve(rows.size());
  for (const RatVec& r : rows) {
    IntVec row;
    row.reserve(r.size());
    for (const Rat& x : r) {
      Rat y = x * Rat(d);
      row.push_back(y.get_num());
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

IntMat hermite_normal_form(IntMat a) {
  if (a.empty()) return a;
  std::size_t rows = a.size();
  std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    bool found = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = row; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        if (best == rows || abs(a[r][col]) < abs(a[best][col])) best = r;
      }
      if (best == rows) break;
      found = true;
      std::swap(a[row], a[best]);
      bool clean = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        axpy_row(a[r], fdiv(a[r][col], a[row][col]), a[row]);
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a[row][col] < 0)
      for (Int& x : a[row]) x = -x;
    for (std::size_t r = 0; r < row; ++r)
      if (a[r][col] != 0) axpy_row(a[r], fdiv(a[r][col], a[row][col]), a[row]);
    ++row;
  }
  a.resize(row);
  return a;
}

SmithForm smith_normal_form(IntMat a) {
  std::size_t n = a.size();
  SmithForm s;
  s.v.assign(n, IntVec(n, 0));
  s.v_inv.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) s.v[i][i] = s.v_inv[i][i] = 1;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : s.v) std::swap(row[c1], row[c2]);
    std::swap(s.v_inv[c1], s.v_inv[c2]);
  };
  // col_c -= q * col_t
  auto col_op = [&](std::size_t c, std::size_t t, const Int& q) {
    for (auto& row : a) row[c] -= q * row[t];
    for (auto& row : s.v) row[c] -= q * row[t];
    for (std::size_t j = 0; j < n; ++j) s.v_inv[t][j] += q * s.v_inv[c][j];
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t br = n, bc = n;
      for (std::size_t r = t; r < n; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a[r][c] != 0 && (br == n || abs(a[r][c]) < abs(a[br][bc]))) {
            br = r;
            bc = c;
          }
      if (br == n) fail_internal("smith form of a singular matrix");
      std::swap(a[t], a[br]);
      swap_cols(t, bc);
      bool clean = true;
      for (std::size_t r = t + 1; r < n; ++r) {
        if (a[r][t] == 0) continue;
        axpy_row(a[r], tdiv(a[r][t], a[t][t]), a[t]);
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a[t][c] == 0) continue;
        col_op(c, t, tdiv(a[t][c], a[t][t]));
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t r = t + 1; r < n && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t j = 0; j < n; ++j) a[t][j] += a[r][j];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (Int& x : a[t]) x = -x;
    s.diagonal.push_back(a[t][t]);
  }
  return s;
}

Lattice Lattice::span(const std::vector<RatVec>& vectors, std::size_t dim) {
  Lattice l;
  l.dim_ = dim;
  for (const RatVec& v : vectors)
    if (v.size() != dim) fail_validation("lattice generator has wrong dimension");
  if (vectors.empty()) return l;
  Int d = common_denominator(vectors);
  IntMat h = hermite_normal_form(scale_to_int(vectors, d));
  for (const IntVec& row : h) {
    RatVec r(dim);
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j) {
      r[j] = Rat(row[j], d);
      r[j].canonicalize();
      if (piv == dim && row[j] != 0) piv = j;
    }
    l.basis_.push_back(std::move(r));
    l.pivots_.push_back(piv);
  }
  return l;
}

Lattice Lattice::standard(std::size_t dim) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < dim; ++i) rows.push_back(unit_vec(dim, i));
  return span(rows, dim);
}

std::optional<RatVec> Lattice::coordinates(const RatVec& v) const {
  if (v.size() != dim_) fail_validation("vector dimension does not match lattice");
  RatVec rest = v;
  RatVec x(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    x[r] = rest[pivots_[r]] / basis_[r][pivots_[r]];
    if (x[r] != 0)
      for (std::size_t j = pivots_[r]; j < dim_; ++j) rest[j] -= x[r] * basis_[r][j];
  }
  if (!is_zero(rest)) return std::nullopt;
  return x;
}

bool Lattice::contains(const RatVec& v) const {
  auto x = coordinates(v);
  return x && is_integral(*x);
}

RatVec Lattice::reduce(const RatVec& v) const {
  if (v.size() != dim_) fail_validation("vector dimension does not match lattice");
  RatVec out = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Int q = floor_rat(out[pivots_[r]] / basis_[r][pivots_[r]]);
    if (q != 0)
      for (std::size_t j = pivots_[r]; j < dim_; ++j) out[j] -= Rat(q) * basis_[r][j];
  }
  return out;
}

Lattice Lattice::scaled(const Rat& s) const {
  if (s <= 0) fail_validation("lattice scale must be positive");
  Lattice l = *this;
  for (RatVec& row : l.basis_)
    for (Rat& x : row) x *= s;
  return l;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
  if (dim_ != other.dim_) return false;
  for (const RatVec& row : basis_)
    if (!other.contains(row)) return false;
  return true;
}

Lattice image(const Lattice& l, const RatMat& m) {
  std::vector<RatVec> rows;
  for (const RatVec& b : l.basis()) rows.push_back(m * b);
  return Lattice::span(rows, m.size());
}

Lattice intersect_kernel(const Lattice& l, const RatMat& m) {
  std::size_t k = l.rank();
  if (k == 0) return l;
  std::vector<RatVec> images;
  for (const RatVec& b : l.basis()) images.push_back(m * b);
  Int d = common_denominator(images);
  IntMat aug = scale_to_int(images, d);
  std::size_t w = m.size();
  for (std::size_t r = 0; r < k; ++r) {
    aug[r].resize(w + k, 0);
    aug[r][w + r] = 1;
  }
  IntMat h = hermite_normal_form(aug);
  std::vector<RatVec> kernel;
  for (const IntVec& row : h) {
    bool zero = true;
    for (std::size_t j = 0; j < w; ++j)
      if (row[j] != 0) zero = false;
    if (!zero) continue;
    RatVec v = zero_vec(l.dim());
    for (std::size_t r = 0; r < k; ++r)
      if (row[w + r] != 0) v = v + Rat(row[w + r]) * l.basis()[r];
    kernel.push_back(std::move(v));
  }
  return Lattice::span(kernel, l.dim());
}

Lattice dual_lattice(const Lattice& l, const RatMat& pairing) {
  if (l.rank() != l.dim()) fail_validation("dual of a lattice that is not full rank");
  RatMat gbt = pairing * transpose(l.basis());
  auto inv = inverse(gbt);
  if (!inv) fail_validation("degenerate pairing");
  return Lattice::span(*inv, l.dim());
}

Lattice dual_lattice(const Lattice& l) {
  return dual_lattice(l, identity_mat(l.dim()));
}

TauProjection project_tau(const Lattice& l, const RatMat& tau,
                          const RatMat& coords) {
  if (!(image(l, tau) == l)) fail_validation("tau does not preserve the lattice");
  std::size_t n = l.dim();
  RatMat diff = tau;
  RatMat half = tau;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i][i] -= 1;
    for (std::size_t j = 0; j < n; ++j) half[i][j] /= 2;
    half[i][i] += Rat(1, 2);
  }
  TauProjection p;
  p.fixed = image(intersect_kernel(l, diff), coords);
  p.projected = image(l, coords * half);
  return p;
}

FinAbQuotient::FinAbQuotient(const Lattice& big, const Lattice& small)
    : big_(big), small_(small) {
  if (big.dim() != small.dim() || big.rank() != small.rank())
    fail_validation("quotient of lattices of different rank is infinite");
  std::size_t k = big.rank();
  IntMat m(k, IntVec(k));
  for (std::size_t r = 0; r < k; ++r) {
    auto c = big.coordinates(small.basis()[r]);
    if (!c || !is_integral(*c)) fail_validation("not a sublattice");
    for (std::size_t j = 0; j < k; ++j) m[r][j] = (*c)[j].get_num();
  }
  if (k == 0) return;
  SmithForm s = smith_normal_form(std::move(m));
  v_ = s.v;
  while (skip_ < k && s.diagonal[skip_] == 1) ++skip_;
  for (std::size_t i = skip_; i < k; ++i) {
    factors_.push_back(s.diagonal[i]);
    RatVec lift = zero_vec(big.dim());
    for (std::size_t j = 0; j < k; ++j)
      if (s.v_inv[i][j] != 0) lift = lift + Rat(s.v_inv[i][j]) * big.basis()[j];
    lifts_.push_back(small.reduce(lift));
  }
}

Int FinAbQuotient::order() const {
  Int o = 1;
  for (const Int& d : factors_) o *= d;
  return o;
}

IntVec FinAbQuotient::coordinates(const RatVec& x) const {
  auto c = big_.coordinates(x);
  if (!c || !is_integral(*c)) fail_validation("element not in the lattice");
  IntVec out;
  std::size_t k = big_.rank();
  for (std::size_t i = skip_; i < k; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < k; ++j) s += (*c)[j].get_num() * v_[j][i];
    Int d = factors_[i - skip_];
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    out.push_back(r);
  }
  return out;
}

RatVec FinAbQuotient::element(const IntVec& coords) const {
  RatVec v = zero_vec(big_.dim());
  for (std::size_t i = 0; i < lifts_.size(); ++i)
    if (coords.at(i) != 0) v = v + Rat(coords[i]) * lifts_[i];
  return small_.reduce(v);
}

std::vector<RatVec> FinAbQuotient::elements() const {
  std::vector<RatVec> out;
  IntVec c(factors_.size(), 0);
  for (;;) {
    out.push_back(element(c));
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      c[i] += 1;
      if (c[i] < factors_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (c.empty()) return out;
  }
}

FinAbQuotient quotient(const Lattice& big, const Lattice& small) {
  return FinAbQuotient(big, small);
}

}  // namespace kacgal

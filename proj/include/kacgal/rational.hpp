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

// Exact rational scalars, dense vectors and matrices.
//
// Everything numeric in kacgal goes through these types. Matrices are
// row-major vectors of rows; a vector used as a matrix operand is a column.

#ifndef KACGAL_RATIONAL_HPP_
#define KACGAL_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kacgal {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntMatrix = std::vector<std::vector<int>>;

Rat make_rat(long num, long den = 1);
// Parses "3", "-1/2"; throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);

Int floor_rat(const Rat& x);
// x - floor(x), in [0, 1).
Rat frac(const Rat& x);
bool is_integer(const Rat& x);
bool is_integral(const RatVec& v);
Int lcm_of_denominators(const RatVec& v);

RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& s, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

RatMat zero_mat(std::size_t rows, std::size_t cols);
RatMat identity_mat(std::size_t n);
RatMat to_rat(const IntMatrix& m);
RatMat transpose(const RatMat& m);
RatMat operator*(const RatMat& a, const RatMat& b);
RatVec operator*(const RatMat& m, const RatVec& v);
std::optional<RatMat> inverse(const RatMat& m);
// Rank of an arbitrary rational matrix.
std::size_t matrix_rank(RatMat m);

std::string to_string(const Rat& x);
std::string to_string(const RatVec& v, const char* sep = ",");

}  // namespace kacgal

#endif  // KACGAL_RATIONAL_HPP_

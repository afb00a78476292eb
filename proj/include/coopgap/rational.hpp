// Copyright 2026 The coopgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOPGAP_RATIONAL_HPP_
#define COOPGAP_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coopgap {

// Every worth, payoff and polyhedron entry in the library is exact.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

// Canonical text form: "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
std::string to_string(const Rational& value);

// Accepts "p", "p/q", "-p/q" (surrounding whitespace is not allowed).
// Throws ValidationError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned k);

inline int sign(const Rational& value) { return sgn(value); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace coopgap

#endif  // COOPGAP_RATIONAL_HPP_

// Copyright 2026 The Authors.
//
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "friendship/error.hpp"

namespace friendship {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Returns (p, m) with q = p^m and p prime, or nullopt if q is not a prime
/// power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

namespace poly {

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b over GF(p).
inline Poly mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of index, c0 most significant.
inline Poly monic_from_index(std::uint64_t index, std::uint32_t degree,
                             std::uint32_t p) {
  Poly result(degree + 1, 0);
  result[degree] = 1;
  for (std::uint32_t i = degree; i-- > 0;) {
    result[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return result;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Exhaustive trial division by every monic polynomial of degree
/// 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree == 0) return false;
  for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (mod(f, monic_from_index(i, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  poly::Poly modulus;  // monic, degree m
  std::uint64_t size = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of GF(p^m) in polynomial basis. Carries a handle to its field so
/// that arithmetic across different fields is caught.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FieldSpec> field, poly::Poly coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  const poly::Poly& coeffs() const noexcept { return coeffs_; }
  const FieldSpec& field() const noexcept { return *field_; }

  bool is_zero() const {
    for (auto c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Dense index sum c_i p^i; 0 is the zero element, 1 is one.
  std::uint64_t index() const {
    std::uint64_t result = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      result = result * field_->p + coeffs_[i];
    }
    return result;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    poly::Poly r(a.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = (a.coeffs_[i] + b.coeffs_[i]) % a.field_->p;
    }
    return {a.field_, std::move(r)};
  }

  friend FieldElement operator-(const FieldElement& a) {
    const std::uint32_t p = a.field_->p;
    poly::Poly r(a.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p - a.coeffs_[i]) % p;
    return {a.field_, std::move(r)};
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + (-b);
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const auto& f = *a.field_;
    poly::Poly product(2 * f.m - 1, 0);
    for (std::size_t i = 0; i < f.m; ++i) {
      for (std::size_t j = 0; j < f.m; ++j) {
        product[i + j] = static_cast<std::uint32_t>(
            (product[i + j] +
             static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) %
            f.p);
      }
    }
    poly::Poly r = poly::mod(std::move(product), f.modulus, f.p);
    r.resize(f.m, 0);
    return {a.field_, std::move(r)};
  }

  FieldElement pow(std::uint64_t exponent) const {
    poly::Poly one(field_->m, 0);
    one[0] = 1;
    FieldElement result(field_, std::move(one));
    FieldElement base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result = result * base;
      base = base * base;
      exponent >>= 1U;
    }
    return result;
  }

  /// Multiplicative inverse via a^(q-2).
  FieldElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    return pow(field_->size - 2);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) {
      throw Error(ErrorCode::kFieldMismatch,
                  "operands from GF(" + std::to_string(a.field_->size) +
                      ") and GF(" + std::to_string(b.field_->size) + ")");
    }
  }

  std::shared_ptr<const FieldSpec> field_;
  poly::Poly coeffs_;
};

inline FieldElement inv(const FieldElement& a) { return a.inverse(); }

class FiniteField {
 public:
  explicit FiniteField(std::shared_ptr<const FieldSpec> spec)
      : spec_(std::move(spec)) {}

  std::uint32_t characteristic() const noexcept { return spec_->p; }
  std::uint32_t degree() const noexcept { return spec_->m; }
  std::uint64_t size() const noexcept { return spec_->size; }
  const poly::Poly& modulus() const noexcept { return spec_->modulus; }

  FieldElement element(std::uint64_t index) const {
    if (index >= spec_->size) {
      throw Error(ErrorCode::kBadVertex,
                  "element index " + std::to_string(index) + " outside field");
    }
    poly::Poly c(spec_->m, 0);
    for (auto& digit : c) {
      digit = static_cast<std::uint32_t>(index % spec_->p);
      index /= spec_->p;
    }
    return {spec_, std::move(c)};
  }

  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  /// Elements in index order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> all;
    all.reserve(spec_->size);
    for (std::uint64_t i = 0; i < spec_->size; ++i) all.push_back(element(i));
    return all;
  }

 private:
  std::shared_ptr<const FieldSpec> spec_;
};

/// GF(p^m) with the lexicographically smallest monic irreducible modulus,
/// coefficients compared lowest degree first. For m = 1 that is x.
inline FiniteField make_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(ErrorCode::kBadDegree, "extension degree must be >= 1");
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->m = m;
  spec->size = poly::ipow(p, m);
  for (std::uint64_t i = 0; i < spec->size; ++i) {
    auto candidate = poly::monic_from_index(i, m, p);
    if (poly::is_irreducible(candidate, p)) {
      spec->modulus = std::move(candidate);
      break;
    }
  }
  if (spec->modulus.empty()) {
    throw Error(ErrorCode::kInternalInvariantBroken,
                "no irreducible polynomial found");
  }
  return FiniteField(std::move(spec));
}

inline FiniteField make_field_of_order(std::uint64_t q) {
  const auto pm = prime_power(q);
  if (!pm) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  return make_field(pm->first, pm->second);
}

}  // namespace friendship

// Copyright 2026 The lieq Authors
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

#ifndef LIEQ_SCALAR_HPP_
#define LIEQ_SCALAR_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace lieq {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Thrown for malformed user input (bad rationals, bad JSON shapes, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a function's mathematical precondition is not met.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical num/den; mpq_class(num, den) alone does not canonicalize.
inline Scalar rational(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" (optionally signed). Rejects zero denominators.
Scalar parse_scalar(const std::string& text);

// Always "p/q" with q > 0, so "1" prints as "1/1".
std::string format_scalar(const Scalar& x);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& a);
Scalar dot(const Vec& a, const Vec& b);

// Gaussian rational re + i*im.
struct GScalar {
  Scalar re;
  Scalar im;

  GScalar() = default;
  GScalar(Scalar r) : re(std::move(r)) {}  // NOLINT
  GScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
  GScalar(int r) : re(r) {}  // NOLINT

  static GScalar i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GScalar conj() const { return {re, -im}; }

  GScalar& operator+=(const GScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GScalar& operator-=(const GScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GScalar& operator*=(const GScalar& o) {
    Scalar r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator-(const GScalar& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GScalar& a, const GScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GScalar& a, const GScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const GScalar& a, const GScalar& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }
};

GScalar operator/(const GScalar& a, const GScalar& b);

}  // namespace lieq

#endif  // LIEQ_SCALAR_HPP_

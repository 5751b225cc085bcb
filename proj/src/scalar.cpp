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

#include "lieq/scalar.hpp"

#include <cctype>

namespace lieq {

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num.size() > 0 && num[0] == '+') num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw InputError("malformed rational: '" + text + "'");
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator: '" + text + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vec scale(const Scalar& s, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
  return s;
}

GScalar operator/(const GScalar& a, const GScalar& b) {
  Scalar n = b.re * b.re + b.im * b.im;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  GScalar q = a * b.conj();
  return {q.re / n, q.im / n};
}

}  // namespace lieq

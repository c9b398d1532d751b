// Copyright 2026 The ncgeom Authors
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

#ifndef NCG_SCALAR_HPP
#define NCG_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ncg {

/// An element of the Gaussian rationals Q(i), stored as a pair of canonical
/// GMP rationals. Every operation is exact.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im);
  explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar rational(long num, long den);

  /// Parses an exact rational "a" or "a/b". Throws std::invalid_argument.
  static Scalar parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  /// this += a * b without temporaries on the real fast path.
  void add_product(const Scalar& a, const Scalar& b);
  /// this -= a * b.
  void sub_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "a/b" for reals, "a/b+c/d*i" otherwise. Human-readable only.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical rational text: "a" for integers, "a/b" otherwise.
std::string rational_to_string(const mpq_class& q);

}  // namespace ncg

#endif  // NCG_SCALAR_HPP

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lieham {

/// Element a + b*sqrt(d) of Q or Q(sqrt(d)), d square-free and >= 2.
/// A value with b == 0 carries d == 0 and mixes freely with any field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : rat_(std::move(q)) {}
  Scalar(mpq_class rat, mpq_class rad, long d);

  static Scalar sqrt(long d);
  static bool square_free(long d);

  const mpq_class& rational_part() const { return rat_; }
  const mpq_class& radical_part() const { return rad_; }
  long field() const { return d_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(rad_) == 0; }
  bool is_one() const { return d_ == 0 && rat_ == 1; }
  bool is_rational() const { return d_ == 0; }
  int sign() const;

  Scalar inverse() const;
  Scalar conjugate() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.d_ == b.d_ && a.rat_ == b.rat_ && a.rad_ == b.rad_;
  }

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  void normalize();
  static long join_field(long a, long b);

  mpq_class rat_{0};
  mpq_class rad_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lieham

#include "lieham/scalar.hpp"

#include <ostream>

#include "lieham/error.hpp"
#include "lieham/parse.hpp"

namespace lieham {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::UnknownIndeterminate: return "UNKNOWN_INDETERMINATE";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::InvalidAlgebra: return "INVALID_ALGEBRA";
    case ErrorCode::NotACasimir: return "NOT_A_CASIMIR";
    case ErrorCode::MetricIncompatible: return "METRIC_INCOMPATIBLE";
    case ErrorCode::NotACocycle: return "NOT_A_COCYCLE";
    case ErrorCode::NonHydrodynamicDensity: return "NON_HYDRODYNAMIC_DENSITY";
    case ErrorCode::InvalidOperand: return "INVALID_OPERAND";
    case ErrorCode::UnknownEntry: return "UNKNOWN_ENTRY";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "ERROR";
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::Singular, "zero denominator");
  rat_ = mpq_class(num, den);
  rat_.canonicalize();
}

Scalar::Scalar(mpq_class rat, mpq_class rad, long d) : rat_(std::move(rat)), rad_(std::move(rad)), d_(d) {
  rat_.canonicalize();
  rad_.canonicalize();
  if (sgn(rad_) != 0 && !square_free(d)) {
    throw Error(ErrorCode::FieldMismatch, "sqrt(" + std::to_string(d) + ") is not a square-free extension");
  }
  normalize();
}

Scalar Scalar::sqrt(long d) {
  if (d == 0) return Scalar(0);
  if (d == 1) return Scalar(1);
  return Scalar(mpq_class(0), mpq_class(1), d);
}

bool Scalar::square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void Scalar::normalize() {
  if (sgn(rad_) == 0) d_ = 0;
}

long Scalar::join_field(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw Error(ErrorCode::FieldMismatch,
              "cannot combine sqrt(" + std::to_string(a) + ") with sqrt(" + std::to_string(b) + ")");
}

int Scalar::sign() const {
  int sa = sgn(rat_);
  int sb = sgn(rad_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(d) have opposite signs; compare a^2 with d*b^2.
  mpq_class lhs = rat_ * rat_;
  mpq_class rhs = rad_ * rad_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.rad_ = -r.rad_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
  mpq_class norm = rat_ * rat_ - rad_ * rad_ * d_;
  Scalar r;
  r.rat_ = rat_ / norm;
  r.rad_ = -rad_ / norm;
  r.d_ = d_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = join_field(d_, o.d_);
  rat_ += o.rat_;
  rad_ += o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = join_field(d_, o.d_);
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = join_field(d_, o.d_);
  if (d == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  mpq_class a = rat_ * o.rat_ + rad_ * o.rad_ * d;
  mpq_class b = rat_ * o.rad_ + rad_ * o.rat_;
  rat_ = std::move(a);
  rad_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.rad_ = -r.rad_;
  return r;
}

std::string Scalar::str() const {
  if (d_ == 0) return rat_.get_str();
  std::string out;
  if (sgn(rat_) != 0) out = rat_.get_str();
  mpq_class mag = abs(rad_);
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  if (mag != 1) radical = mag.get_str() + "*" + radical;
  if (sgn(rad_) < 0) {
    out += "-" + radical;
  } else {
    if (!out.empty()) out += "+";
    out += radical;
  }
  return out;
}

Scalar Scalar::parse(std::string_view text) { return parse_scalar(text); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace lieham

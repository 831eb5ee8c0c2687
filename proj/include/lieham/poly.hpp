#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieham/scalar.hpp"

namespace lieham {

enum class VarKind { Field, Param };

struct Indeterminate {
  std::string name;
  VarKind kind;
  bool operator==(const Indeterminate&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ordered list of indeterminates. Field variables come first, parameters after.
class Ring {
 public:
  static RingPtr make(std::vector<Indeterminate> vars);
  /// Field variables u1..un followed by the given parameters.
  static RingPtr make(std::size_t n, const std::vector<std::string>& params = {});
  /// Union of two rings; variables of a keep their positions.
  static RingPtr merge(const RingPtr& a, const RingPtr& b);
  /// Ring extended with extra parameters (ignored when already present).
  static RingPtr with_params(const RingPtr& r, const std::vector<std::string>& params);

  std::size_t size() const { return vars_.size(); }
  std::size_t field_count() const { return field_count_; }
  const Indeterminate& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Indeterminate>& vars() const { return vars_; }
  std::optional<std::size_t> index(std::string_view name) const;
  std::size_t require(std::string_view name) const;
  std::vector<std::string> param_names() const;

  bool same_as(const Ring& o) const { return vars_ == o.vars_; }

 private:
  explicit Ring(std::vector<Indeterminate> vars);

  std::vector<Indeterminate> vars_;
  std::size_t field_count_ = 0;
};

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial with Scalar coefficients. Parameter exponents may be
/// negative so that families like g/alpha stay polynomial in the field variables.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar, GrlexGreater>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const Scalar& c);

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Scalar& c) { return Poly(std::move(ring), c); }
  static Poly var(RingPtr ring, std::size_t i, int power = 1);
  static Poly var(const RingPtr& ring, std::string_view name, int power = 1);
  static Poly monomial(RingPtr ring, Exponents e, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws unless the polynomial is constant.
  Scalar constant_value() const;
  Scalar constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  bool depends_on_field_vars() const;
  std::vector<std::size_t> support() const;
  long field() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const Scalar& c);
  Poly pow(unsigned k) const;
  Poly partial(std::size_t var) const;
  Poly partial(std::string_view name) const;

  /// Substitutes values for some indeterminates.
  Poly evaluate(const std::map<std::size_t, Scalar>& values) const;
  Poly evaluate(const std::map<std::string, Scalar>& values) const;
  /// Substitutes polynomials (over the same target ring) for indeterminates.
  /// Indeterminates not in the map are carried over by name into target.
  Poly substitute(const std::map<std::size_t, Poly>& values, const RingPtr& target) const;

  /// Re-expresses the polynomial over another ring, matching indeterminates by name.
  Poly lift(const RingPtr& target) const;

  /// Groups terms by the exponent of one indeterminate.
  std::map<int, Poly> coefficients_in(std::size_t var) const;

  std::string str() const;

 private:
  void check_ring(const Poly& o) const;
  static std::string monomial_str(const Ring& ring, const Exponents& e);

  RingPtr ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace lieham

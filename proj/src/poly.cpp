#include "lieham/poly.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "lieham/error.hpp"

namespace lieham {

Ring::Ring(std::vector<Indeterminate> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  bool params_started = false;
  for (const auto& v : vars_) {
    if (!seen.insert(v.name).second) throw Error(ErrorCode::ParseError, "duplicate indeterminate " + v.name);
    if (v.kind == VarKind::Param) {
      params_started = true;
    } else {
      if (params_started) throw Error(ErrorCode::ParseError, "field variable " + v.name + " after parameters");
      ++field_count_;
    }
  }
}

RingPtr Ring::make(std::vector<Indeterminate> vars) { return RingPtr(new Ring(std::move(vars))); }

RingPtr Ring::make(std::size_t n, const std::vector<std::string>& params) {
  std::vector<Indeterminate> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back({"u" + std::to_string(i), VarKind::Field});
  for (const auto& p : params) vars.push_back({p, VarKind::Param});
  return make(std::move(vars));
}

RingPtr Ring::merge(const RingPtr& a, const RingPtr& b) {
  if (a == b || a->same_as(*b)) return a;
  std::vector<Indeterminate> fields;
  std::vector<Indeterminate> params;
  for (const RingPtr& r : {a, b}) {
    for (const auto& v : r->vars_) {
      auto& dst = v.kind == VarKind::Field ? fields : params;
      auto other_kind = v.kind == VarKind::Field ? params : fields;
      auto same = [&](const Indeterminate& w) { return w.name == v.name; };
      if (std::any_of(other_kind.begin(), other_kind.end(), same)) {
        throw Error(ErrorCode::UnknownIndeterminate, v.name + " is a field variable in one ring and a parameter in the other");
      }
      if (std::none_of(dst.begin(), dst.end(), same)) dst.push_back(v);
    }
  }
  fields.insert(fields.end(), params.begin(), params.end());
  return make(std::move(fields));
}

RingPtr Ring::with_params(const RingPtr& r, const std::vector<std::string>& params) {
  std::vector<Indeterminate> extra;
  for (const auto& p : params) extra.push_back({p, VarKind::Param});
  return merge(r, make(std::move(extra)));
}

std::optional<std::size_t> Ring::index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index(name);
  if (!i) throw Error(ErrorCode::UnknownIndeterminate, std::string(name));
  return *i;
}

std::vector<std::string> Ring::param_names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) {
    if (v.kind == VarKind::Param) out.push_back(v.name);
  }
  return out;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  long da = 0;
  long db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return b < a;
}

Poly::Poly(RingPtr ring, const Scalar& c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.emplace(Exponents(ring_->size(), 0), c);
}

Poly Poly::var(RingPtr ring, std::size_t i, int power) {
  Exponents e(ring->size(), 0);
  e.at(i) = power;
  if (power < 0 && ring->var(i).kind == VarKind::Field) {
    throw Error(ErrorCode::ParseError, "negative power of field variable " + ring->var(i).name);
  }
  return monomial(std::move(ring), std::move(e), Scalar(1));
}

Poly Poly::var(const RingPtr& ring, std::string_view name, int power) { return var(ring, ring->require(name), power); }

Poly Poly::monomial(RingPtr ring, Exponents e, const Scalar& c) {
  Poly p(std::move(ring));
  if (e.size() != p.ring_->size()) throw Error(ErrorCode::ShapeMismatch, "exponent vector length");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) {
    throw Error(ErrorCode::ShapeMismatch, "polynomials over different rings");
  }
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar Poly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidOperand, "expected a constant, got " + str());
  return constant_term();
}

Scalar Poly::constant_term() const {
  if (!ring_) return Scalar(0);
  auto it = terms_.find(Exponents(ring_->size(), 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

bool Poly::depends_on_field_vars() const {
  if (!ring_) return false;
  for (std::size_t i = 0; i < ring_->field_count(); ++i) {
    if (depends_on(i)) return true;
  }
  return false;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (depends_on(i)) out.push_back(i);
  }
  return out;
}

long Poly::field() const {
  long d = 0;
  for (const auto& [e, c] : terms_) {
    if (c.field() != 0) d = c.field();
  }
  return d;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly(a.ring_ ? a.ring_ : b.ring_);
  a.check_ring(b);
  Poly r(a.ring_);
  Exponents e(a.ring_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (!a.ring_ || !b.ring_ || !a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned k) const {
  Poly r(ring_, Scalar(1));
  Poly base = *this;
  while (k) {
    if (k & 1U) r *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return r;
}

Poly Poly::partial(std::size_t var) const {
  Poly r(ring_);
  if (!ring_) return r;
  if (var >= ring_->size()) throw Error(ErrorCode::UnknownIndeterminate, "index " + std::to_string(var));
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * Scalar(e[var]));
  }
  return r;
}

Poly Poly::partial(std::string_view name) const {
  if (!ring_) throw Error(ErrorCode::UnknownIndeterminate, std::string(name));
  return partial(ring_->require(name));
}

Poly Poly::evaluate(const std::map<std::size_t, Scalar>& values) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents out = e;
    Scalar coeff = c;
    for (const auto& [i, v] : values) {
      int p = e[i];
      if (p == 0) continue;
      out[i] = 0;
      if (p < 0) {
        if (v.is_zero()) throw Error(ErrorCode::Singular, "negative power of " + ring_->var(i).name + " at zero");
        Scalar inv = v.inverse();
        for (int k = 0; k < -p; ++k) coeff *= inv;
      } else {
        for (int k = 0; k < p; ++k) coeff *= v;
      }
    }
    r.add_term(out, coeff);
  }
  return r;
}

Poly Poly::evaluate(const std::map<std::string, Scalar>& values) const {
  std::map<std::size_t, Scalar> by_index;
  for (const auto& [name, v] : values) {
    if (!ring_) continue;
    if (auto i = ring_->index(name)) by_index.emplace(*i, v);
  }
  return evaluate(by_index);
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& values, const RingPtr& target) const {
  Poly r(target);
  if (!ring_) return r;
  std::vector<std::optional<std::size_t>> carry(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    if (values.count(i)) continue;
    carry[i] = target->index(ring_->var(i).name);
  }
  for (const auto& [e, c] : terms_) {
    Poly term(target, c);
    Exponents rest(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(i);
      if (it != values.end()) {
        if (e[i] < 0) throw Error(ErrorCode::InvalidOperand, "negative power under substitution");
        term *= it->second.pow(static_cast<unsigned>(e[i]));
      } else if (carry[i]) {
        rest[*carry[i]] += e[i];
      } else {
        throw Error(ErrorCode::UnknownIndeterminate, ring_->var(i).name + " missing from target ring");
      }
    }
    r += term * monomial(target, rest, Scalar(1));
  }
  return r;
}

Poly Poly::lift(const RingPtr& target) const {
  if (ring_ == target) return *this;
  Poly r(target);
  if (!ring_) return r;
  std::vector<std::size_t> map(ring_->size());
  std::vector<bool> used(ring_->size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto j = target->index(ring_->var(i).name);
    if (!j) {
      if (used[i]) throw Error(ErrorCode::UnknownIndeterminate, ring_->var(i).name + " missing from target ring");
      continue;
    }
    map[i] = *j;
  }
  for (const auto& [e, c] : terms_) {
    Exponents out(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) out[map[i]] = e[i];
    }
    r.add_term(out, c);
  }
  return r;
}

std::map<int, Poly> Poly::coefficients_in(std::size_t var) const {
  std::map<int, Poly> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int k = rest[var];
    rest[var] = 0;
    auto it = out.try_emplace(k, Poly(ring_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::string Poly::monomial_str(const Ring& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var(i).name;
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_str(*ring_, e);
    std::string coeff;
    bool negative = false;
    if (mono.empty()) {
      coeff = c.str();
      if (!out.empty() && coeff[0] == '-') {
        negative = true;
        coeff = (-c).str();
      }
    } else if (c.is_rational()) {
      Scalar mag = c;
      if (c.sign() < 0) {
        negative = true;
        mag = -c;
      }
      if (!mag.is_one()) coeff = mag.str() + "*";
      coeff += mono;
    } else {
      coeff = "(" + c.str() + ")*" + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + coeff;
    } else {
      out += (negative ? "-" : "+") + coeff;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace lieham

#include "lieham/parse.hpp"

#include <algorithm>
#include <cctype>

#include "lieham/error.hpp"

namespace lieham {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        acc = acc * invert(unary());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    long k = integer();
    if (negative) return invert(base).pow(static_cast<unsigned>(k));
    return base.pow(static_cast<unsigned>(k));
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("exponent too large");
    return std::stol(digits);
  }

  Poly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return Poly(ring_, Scalar(mpq_class(z)));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "sqrt") {
        expect('(');
        long d = integer();
        expect(')');
        long root = 0;
        while ((root + 1) * (root + 1) <= d) ++root;
        if (root * root == d) return Poly(ring_, Scalar(root));
        if (!Scalar::square_free(d)) fail("sqrt argument must be square-free");
        return Poly(ring_, Scalar::sqrt(d));
      }
      auto idx = ring_->index(name);
      if (!idx) throw Error(ErrorCode::UnknownIndeterminate, name + " in \"" + std::string(text_) + "\"");
      return Poly::var(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Poly invert(const Poly& p) {
    if (p.term_count() != 1) fail("division by a non-monomial");
    const auto& [e, c] = *p.terms().begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && ring_->var(i).kind == VarKind::Field) fail("division by field variable " + ring_->var(i).name);
      inv[i] = -e[i];
    }
    return Poly::monomial(ring_, inv, c.inverse());
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).run(); }

Scalar parse_scalar(std::string_view text) {
  static const RingPtr empty = Ring::make(std::vector<Indeterminate>{});
  try {
    return Parser(text, empty).run().constant_value();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("not a scalar: \"") + std::string(text) + "\"");
  }
}

std::vector<std::string> identifiers_in(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i]) && (i == 0 || !ident_char(text[i - 1]))) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      if (name != "sqrt" && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else {
      ++i;
    }
  }
  return out;
}

bool is_field_var_name(std::string_view name) {
  if (name.size() < 2 || name[0] != 'u') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
         name[1] != '0';
}

bool is_jet_name(std::string_view name) {
  auto us = name.find('_');
  if (us == std::string_view::npos || us + 1 >= name.size()) return false;
  if (!is_field_var_name(name.substr(0, us))) return false;
  auto tail = name.substr(us + 1);
  return std::all_of(tail.begin(), tail.end(), [](char c) { return c == 'x'; });
}

}  // namespace lieham

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace surfinv {

/// Element of Z[t, t^-1] with exact 64-bit coefficients. Zero coefficients
/// are never stored, so equality is structural.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }

  static LaurentPoly monomial(std::int64_t exponent, std::int64_t coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }

  std::int64_t coeff(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, checked_neg(c));
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(checked_add(ea, eb), checked_mul(ca, cb));
    return r;
  }

  /// Evaluation ring hom at t = 1: the sum of coefficients.
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  /// Terms ascending by exponent; the constant term prints bare,
  /// e.g. "2*t^-2 + 21 + 2*t^4".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) s += "-";
        first = false;
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (e == 0) {
        s += std::to_string(mag);
      } else {
        if (mag != 1) s += std::to_string(mag) + "*";
        s += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return s;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  std::map<std::int64_t, std::int64_t> terms_;

  void add_term(std::int64_t e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw std::overflow_error("LaurentPoly overflow");
    return r;
  }
};

}  // namespace surfinv

#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfinv {

// Signed arbitrary-precision integer, base 2^32, sign-magnitude.
// Just enough arithmetic for exact Smith normal form: no allocator
// tricks, no Karatsuba, division is shift-and-subtract.
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t v) {
    if (v < 0) {
      negative_ = true;
      // avoid overflow on INT64_MIN
      std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
      push_u64(mag);
    } else {
      push_u64(static_cast<std::uint64_t>(v));
    }
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.negative_ ? c > 0 : c < 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_ && !r.limbs_.empty();
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    BigInt r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.negative_ = b.negative_;
    }
    if (r.limbs_.empty()) r.negative_ = false;
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.negative_ = a.negative_ != b.negative_;
    return r;
  }

  // Truncated division (C semantics): quotient rounds toward zero,
  // remainder carries the dividend's sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (cmp_mag(a.limbs_, b.limbs_) < 0) {
      r = a;
      return;
    }
    // binary long division on magnitudes
    std::size_t bits = a.limbs_.size() * 32;
    std::vector<std::uint32_t> rem, quo(a.limbs_.size(), 0);
    for (std::size_t k = bits; k-- > 0;) {
      shl1(rem);
      if ((a.limbs_[k / 32] >> (k % 32)) & 1u) {
        if (rem.empty()) rem.push_back(1);
        else {
          // set low bit (rem was just shifted, low bit is 0)
          rem[0] |= 1u;
        }
      }
      if (cmp_mag(rem, b.limbs_) >= 0) {
        rem = sub_mag(rem, b.limbs_);
        quo[k / 32] |= (1u << (k % 32));
      }
    }
    q.limbs_ = std::move(quo);
    q.trim();
    r.limbs_ = std::move(rem);
    r.trim();
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    return a;
  }

  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = to_u64();
    if (negative_) return mag <= (static_cast<std::uint64_t>(1) << 63);
    return mag < (static_cast<std::uint64_t>(1) << 63);
  }

  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    std::uint64_t mag = to_u64();
    if (negative_) return -static_cast<std::int64_t>(mag - 1) - 1;
    return static_cast<std::int64_t>(mag);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<std::uint32_t> m = limbs_;
    while (!m.empty()) {
      // divide magnitude by 10^9, emit remainder
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int d = 0; d < 9; ++d) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  }

private:
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
  bool negative_ = false;

  void push_u64(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }

  std::uint64_t to_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                          (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (!carry && i >= small.size()) break;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      borrow = cur < 0;
      if (cur < 0) cur += (static_cast<std::int64_t>(1) << 32);
      r[i] = static_cast<std::uint32_t>(cur);
      if (!borrow && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static void shl1(std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (auto& limb : v) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) v.push_back(carry);
  }
};

}  // namespace surfinv

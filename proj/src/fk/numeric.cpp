#include "fk/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fk {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid overflow on LLONG_MIN
  uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) mag_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  uint64_t m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ >= 0) return m <= static_cast<uint64_t>(INT64_MAX);
  return m <= static_cast<uint64_t>(INT64_MAX) + 1;
}

int64_t BigInt::to_int64() const {
  uint64_t m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return static_cast<int64_t>(~m + 1);
  return static_cast<int64_t>(m);
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<uint32_t> r(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = r[k] + carry;
      r[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D, normalized so the divisor's top limb has its high bit set.
void BigInt::divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (compare_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  int shift = 0;
  {
    uint32_t top = b.back();
    while (!(top & 0x80000000u)) {
      top <<= 1;
      ++shift;
    }
  }
  auto shl = [&](const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(v.size() + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      out[i] = (v[i] << shift) | carry;
      carry = shift ? static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift)) : 0;
    }
    out[v.size()] = carry;
    return out;
  };
  std::vector<uint32_t> u = shl(a);  // keeps the extra top limb
  std::vector<uint32_t> v = shl(b);
  while (v.size() > b.size()) v.pop_back();  // shift never overflows the divisor
  const size_t n = v.size();
  const size_t m = u.size() - n;  // u has a.size()+1 limbs

  q.assign(m, 0);
  const uint64_t vtop = v[n - 1];
  const uint64_t vsec = v[n - 2];
  for (size_t j = m; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = num - qhat * vtop;
    }
    while (rhat < kBase && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // multiply-subtract qhat * v from u[j .. j+n]
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large; add v back once
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= 0xffffffff;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  // denormalize remainder
  r.assign(u.begin(), u.begin() + n);
  if (shift) {
    uint32_t carry = 0;
    for (size_t i = r.size(); i-- > 0;) {
      uint32_t cur = r[i];
      r[i] = (cur >> shift) | carry;
      carry = static_cast<uint32_t>(static_cast<uint64_t>(cur) << (32 - shift));
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::compare_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  return r;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divrem_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divrem(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divrem(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divrem(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = compare_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> work = mag_;
  std::string digits;
  const std::vector<uint32_t> chunk = {1000000000u};
  while (!work.empty()) {
    std::vector<uint32_t> q, r;
    divrem_mag(work, chunk, q, r);
    uint32_t rem = r.empty() ? 0 : r[0];
    std::string part = std::to_string(rem);
    if (!q.empty()) part.insert(0, 9 - part.size(), '0');
    digits.insert(0, part);
    work = std::move(q);
  }
  return sign_ < 0 ? "-" + digits : digits;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  int sign = 1;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  const BigInt scale(1000000000ll);
  while (i < s.size()) {
    size_t take = std::min<size_t>(9, s.size() - i);
    uint64_t chunk = 0;
    uint64_t mult = 1;
    for (size_t k = 0; k < take; ++k, ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + static_cast<uint64_t>(c - '0');
      mult *= 10;
    }
    r = r * BigInt(static_cast<long long>(mult)) + BigInt(static_cast<long long>(chunk));
  }
  if (sign < 0) r = -r;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------

namespace {

// Bounds under which int64 products/sums cannot overflow in __int128 paths,
// and results are demoted back when they fit.
constexpr int64_t kSmallMax = INT64_MAX;

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) { return v >= INT64_MIN && v <= kSmallMax; }

BigInt big_of_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  // assemble from 62-bit chunks to stay clear of sign pitfalls
  BigInt r;
  BigInt base(1ll << 62);
  unsigned __int128 rest = m;
  std::vector<uint64_t> chunks;
  while (rest) {
    chunks.push_back(static_cast<uint64_t>(rest & ((1ull << 62) - 1)));
    rest >>= 62;
  }
  for (size_t i = chunks.size(); i-- > 0;) {
    r = r * base + BigInt(static_cast<long long>(chunks[i]));
  }
  return neg ? -r : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int64_t g = gcd64(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d.is_zero()) throw std::domain_error("Rational: zero denominator");
  big_ = std::make_unique<Big>(Big{n, d});
  normalize_big();
  try_demote();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<Big>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
  }
  return *this;
}

void Rational::promote() {
  if (!big_) big_ = std::make_unique<Big>(Big{BigInt(num_), BigInt(den_)});
}

void Rational::normalize_big() {
  assert(big_);
  if (big_->den.sign() < 0) {
    big_->num = -big_->num;
    big_->den = -big_->den;
  }
  if (big_->num.is_zero()) {
    big_->den = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(big_->num, big_->den);
  if (BigInt::compare(g, BigInt(1)) != 0) {
    big_->num = big_->num / g;
    big_->den = big_->den / g;
  }
}

void Rational::try_demote() {
  if (!big_) return;
  if (big_->num.fits_int64() && big_->den.fits_int64()) {
    num_ = big_->num.to_int64();
    den_ = big_->den.to_int64();
    big_.reset();
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (r.big_) {
    r.big_->num = -r.big_->num;
  } else {
    if (r.num_ == INT64_MIN) {
      r.promote();
      r.big_->num = -r.big_->num;
    } else {
      r.num_ = -r.num_;
    }
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    big_ = std::make_unique<Big>(Big{big_of_i128(n), big_of_i128(d)});
    return *this;
  }
  promote();
  BigInt on = o.big_ ? o.big_->num : BigInt(o.num_);
  BigInt od = o.big_ ? o.big_->den : BigInt(o.den_);
  big_->num = big_->num * od + on * big_->den;
  big_->den = big_->den * od;
  normalize_big();
  try_demote();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      return *this;
    }
    big_ = std::make_unique<Big>(Big{big_of_i128(n), big_of_i128(d)});
    return *this;
  }
  promote();
  BigInt on = o.big_ ? o.big_->num : BigInt(o.num_);
  BigInt od = o.big_ ? o.big_->den : BigInt(o.den_);
  big_->num = big_->num * on;
  big_->den = big_->den * od;
  normalize_big();
  try_demote();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational inv;
  if (o.big_) {
    inv.big_ = std::make_unique<Big>(Big{o.big_->den, o.big_->num});
    inv.normalize_big();
    inv.try_demote();
  } else {
    inv = o.num_ < 0 ? Rational(-o.den_, -o.num_) : Rational(o.den_, o.num_);
  }
  return *this *= inv;
}

bool Rational::is_zero() const { return big_ ? big_->num.is_zero() : num_ == 0; }

bool Rational::is_integer() const { return big_ ? big_->den == BigInt(1) : den_ == 1; }

bool Rational::is_one() const { return big_ ? false : (num_ == 1 && den_ == 1); }

int Rational::sign() const {
  if (big_) return big_->num.sign();
  return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  BigInt lhs = a.numerator() * b.denominator();
  BigInt rhs = b.numerator() * a.denominator();
  return BigInt::compare(lhs, rhs);
}

BigInt Rational::numerator() const { return big_ ? big_->num : BigInt(num_); }

BigInt Rational::denominator() const { return big_ ? big_->den : BigInt(den_); }

std::string Rational::to_string() const {
  if (big_) {
    std::string s = big_->num.to_string();
    if (big_->den != BigInt(1)) s += "/" + big_->den.to_string();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    BigInt n = BigInt::from_string(s);
    return Rational(n, BigInt(1));
  }
  BigInt n = BigInt::from_string(s.substr(0, slash));
  BigInt d = BigInt::from_string(s.substr(slash + 1));
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace fk

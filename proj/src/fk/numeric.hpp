#ifndef FK_NUMERIC_HPP
#define FK_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <memory>
#include <iosfwd>

namespace fk {

/// Arbitrary-precision signed integer. Magnitude is stored base 2^32,
/// little endian, with no leading zero limbs; zero has an empty magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool fits_int64() const;
  int64_t to_int64() const;  // caller must check fits_int64
  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated division; remainder has the sign of the dividend.
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

  // -1, 0, +1 as a < b, a == b, a > b.
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

 private:
  static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  void trim();

  int sign_ = 0;
  std::vector<uint32_t> mag_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Exact rational number. Values that fit in 64 bits are kept inline;
/// larger values spill into a heap-allocated BigInt pair. Always canonical:
/// denominator positive, gcd(num, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d);
  Rational(const BigInt& n, const BigInt& d);

  static Rational from_string(std::string_view s);  // "p", "-p", "p/q"

  const Rational& operator+() const { return *this; }
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool is_zero() const;
  bool is_integer() const;
  bool is_one() const;
  int sign() const;
  static int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  BigInt numerator() const;
  BigInt denominator() const;
  // Only valid for small inline values; guarded by assertions in debug builds.
  bool is_small() const { return big_ == nullptr; }
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  std::string to_string() const;  // "p" or "p/q", exact

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

 private:
  struct Big {
    BigInt num, den;
  };
  void promote();
  void normalize_big();
  void try_demote();

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace fk

#endif

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gridsym {

// Unsigned arbitrary-precision integer. Little-endian base-2^32 limbs,
// normalized so the top limb is nonzero; zero is the empty limb vector.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit by design, counts are u64-friendly

  static BigUint from_decimal(std::string_view s);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // requires fits_u64()
  std::string to_decimal() const;

  bool operator==(const BigUint&) const = default;
  std::strong_ordering operator<=>(const BigUint& o) const;

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint& operator*=(std::uint32_t s);
  BigUint& operator<<=(unsigned bits);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, std::uint32_t s) { return a *= s; }
  BigUint operator*(const BigUint& o) const;

  // Division by a small divisor; returns the remainder.
  std::uint32_t div_small(std::uint32_t d);

  // Schoolbook long division: num = q*den + r with 0 <= r < den.
  static void divmod(const BigUint& num, const BigUint& den, BigUint& q, BigUint& r);
  BigUint operator/(const BigUint& o) const;
  BigUint operator%(const BigUint& o) const;

  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

BigUint gcd(BigUint a, BigUint b);

// C(n, k) with the zero convention: 0 whenever k < 0 or k > n.
BigUint binomial(long long n, long long k);

// Exact nonnegative rational, kept in lowest terms with den >= 1.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(BigUint num, BigUint den);  // den must be nonzero

  const BigUint& num() const { return num_; }
  const BigUint& den() const { return den_; }

  bool operator==(const Ratio&) const = default;
  std::strong_ordering operator<=>(const Ratio& o) const;

  bool is_one() const { return num_ == den_; }

  // Value scaled by 10^places and rounded half up, as an integer.
  BigUint scaled_rounded(int places) const;
  // Fixed-point rendering, rounded half up ("2.1944" for places=4).
  std::string decimal(int places) const;

 private:
  BigUint num_, den_;
};

}  // namespace gridsym

#include "gridsym/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gridsym {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigUint::to_u64() const {
  assert(fits_u64());
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < o.limbs_.size()) sum += o.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  assert(*this >= o);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                        (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
    borrow = 0;
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  assert(borrow == 0);
  trim();
  return *this;
}

BigUint& BigUint::operator*=(std::uint32_t s) {
  if (s == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint64_t prod = std::uint64_t{limb} * s + carry;
    limb = static_cast<std::uint32_t>(prod);
    carry = prod >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
  if (is_zero() || o.is_zero()) return BigUint{};
  BigUint out;
  out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] +
                          std::uint64_t{limbs_[i]} * o.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint& BigUint::operator<<=(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  const unsigned words = bits / 32, rem = bits % 32;
  if (rem == 0) {
    limbs_.insert(limbs_.begin(), words, 0);
    return *this;
  }
  std::uint32_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> (32 - rem);
    limb = (limb << rem) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
  if (words) limbs_.insert(limbs_.begin(), words, 0);
  return *this;
}

std::uint32_t BigUint::div_small(std::uint32_t d) {
  assert(d != 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t n = (limbs_.size() - 1) * 32;
  while (top) {
    ++n;
    top >>= 1;
  }
  return n;
}

bool BigUint::bit(std::size_t i) const {
  const std::size_t w = i / 32;
  if (w >= limbs_.size()) return false;
  return (limbs_[w] >> (i % 32)) & 1u;
}

void BigUint::divmod(const BigUint& num, const BigUint& den, BigUint& q, BigUint& r) {
  if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
  q = BigUint{};
  r = BigUint{};
  if (num < den) {
    r = num;
    return;
  }
  // Binary long division, high bit first.
  const std::size_t nbits = num.bit_length();
  q.limbs_.assign((nbits + 31) / 32, 0);
  for (std::size_t i = nbits; i-- > 0;) {
    r <<= 1;
    if (num.bit(i)) {
      if (r.limbs_.empty())
        r.limbs_.push_back(1);
      else
        r.limbs_[0] |= 1u;
    }
    if (r >= den) {
      r -= den;
      q.limbs_[i / 32] |= std::uint32_t{1} << (i % 32);
    }
  }
  q.trim();
}

BigUint BigUint::operator/(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return q;
}

BigUint BigUint::operator%(const BigUint& o) const {
  BigUint q, r;
  divmod(*this, o, q, r);
  return r;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::vector<std::uint32_t> chunks;
  while (!tmp.is_zero()) chunks.push_back(tmp.div_small(1'000'000'000u));
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigUint BigUint::from_decimal(std::string_view s) {
  BigUint out;
  if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad decimal digit");
    out *= 10u;
    out += BigUint{static_cast<std::uint64_t>(c - '0')};
  }
  return out;
}

BigUint gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint q, r;
    BigUint::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return BigUint{};
  if (k > n - k) k = n - k;
  BigUint out{1};
  for (long long i = 1; i <= k; ++i) {
    out *= static_cast<std::uint32_t>(n - k + i);
    std::uint32_t rem = out.div_small(static_cast<std::uint32_t>(i));
    assert(rem == 0);  // every prefix product of C(n,k) is integral
    (void)rem;
  }
  return out;
}

Ratio::Ratio(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Ratio: zero denominator");
  BigUint g = gcd(num_, den_);
  if (!g.is_zero() && g != BigUint{1}) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (num_.is_zero()) den_ = BigUint{1};
}

std::strong_ordering Ratio::operator<=>(const Ratio& o) const {
  return (num_ * o.den_) <=> (o.num_ * den_);
}

BigUint Ratio::scaled_rounded(int places) const {
  BigUint scaled = num_;
  for (int i = 0; i < places; ++i) scaled *= 10u;
  // round half up: floor((2*scaled + den) / (2*den))
  BigUint two_n = scaled;
  two_n += scaled;
  two_n += den_;
  BigUint two_d = den_;
  two_d += den_;
  return two_n / two_d;
}

std::string Ratio::decimal(int places) const {
  std::string digits = scaled_rounded(places).to_decimal();
  if (places == 0) return digits;
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return digits;
}

}  // namespace gridsym

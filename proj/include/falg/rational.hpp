/*
   Copyright 2026 The falg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FALG_RATIONAL_HPP
#define FALG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace falg {

/// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
/// Canonical form: zero has an empty limb vector and positive sign.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return sign_ > 0 && limbs_.size() == 1 && limbs_[0] == 1; }
    int signum() const { return limbs_.empty() ? 0 : sign_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);  // truncates toward zero
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // q, r with a = q*b + r, |r| < |b|, r carrying the sign of a.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

    std::string to_string() const;

  private:
    int sign_ = 1;
    std::vector<std::uint32_t> limbs_;  // little-endian

    void normalize();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void shl1_mag();
    void shr1_mag();
    std::uint32_t divmod_small(std::uint32_t d);  // in place on magnitude, returns remainder
    void mul_small_add(std::uint32_t m, std::uint32_t add);
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
};

/// Exact rational number. Denominator is always positive and the fraction
/// is kept reduced. No floating point anywhere.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    static Rational from_string(std::string_view s);  // "num" or "num/den"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // b != 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    std::string to_string() const;  // "3/2", "-7", "0"

  private:
    BigInt num_, den_;
    void reduce();
};

BigInt factorial(unsigned n);
// n (n-1) ... (n-j+1) for any integer n, j >= 0 factors
BigInt falling_factorial(long long n, unsigned j);
// generalized binomial C(m, k) = falling(m, k) / k!, exact in Q
Rational binomial(long long m, unsigned k);
// (-1)^e for any integer e
int neg_one_pow(long long e);

}  // namespace falg

#endif

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

#include "falg/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace falg {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    unsigned long long mag;
    if (v < 0) {
        sign_ = -1;
        mag = ~static_cast<unsigned long long>(v) + 1ULL;
    } else {
        mag = static_cast<unsigned long long>(v);
    }
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

void BigInt::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.sign_ = 1;
    if (r.limbs_.empty()) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
        } else {
            r.sign_ = b.sign_;
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
        }
    }
    r.normalize();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    r.normalize();
    return r;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t limb = i / 32, off = i % 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> off) & 1u;
}

void BigInt::shl1_mag() {
    std::uint32_t carry = 0;
    for (auto& l : limbs_) {
        std::uint32_t next = l >> 31;
        l = (l << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::shr1_mag() {
    std::uint32_t carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint32_t next = limbs_[i] & 1u;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    normalize();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    // binary long division on magnitudes
    BigInt babs = b.abs();
    q = BigInt();
    r = BigInt();
    std::size_t n = a.bit_length();
    q.limbs_.assign((n + 31) / 32, 0);
    for (std::size_t i = n; i-- > 0;) {
        r.shl1_mag();
        if (a.bit(i)) {
            if (r.limbs_.empty())
                r.limbs_.push_back(1);
            else
                r.limbs_[0] |= 1u;
        }
        if (cmp_mag(r, babs) >= 0) {
            r.limbs_ = sub_mag(r.limbs_, babs.limbs_);
            q.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    q.normalize();
    r.normalize();
    if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
    if (!r.is_zero()) r.sign_ = a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    // binary gcd on magnitudes
    BigInt u = a.abs(), v = b.abs();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    unsigned shift = 0;
    while (u.is_even() && v.is_even()) {
        u.shr1_mag();
        v.shr1_mag();
        ++shift;
    }
    while (u.is_even()) u.shr1_mag();
    while (!v.is_zero()) {
        while (v.is_even()) v.shr1_mag();
        if (cmp_mag(u, v) > 0) std::swap(u, v);
        v.limbs_ = sub_mag(v.limbs_, u.limbs_);
        v.normalize();
    }
    for (unsigned i = 0; i < shift; ++i) u.shl1_mag();
    u.sign_ = 1;
    return u;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    int sa = signum(), sb = o.signum();
    if (sa != sb) return sa <=> sb;
    int c = cmp_mag(*this, o);
    if (sa < 0) c = -c;
    return c <=> 0;
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    normalize();
    return static_cast<std::uint32_t>(rem);
}

void BigInt::mul_small_add(std::uint32_t m, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& l : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
        l = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
        carry >>= 32;
    }
    normalize();
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = *this;
    std::string digits;
    while (!t.is_zero()) {
        std::uint32_t rem = t.divmod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r.mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (neg && !r.is_zero()) r.sign_ = -1;
    return r;
}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
    return r;
}

BigInt falling_factorial(long long n, unsigned j) {
    BigInt r(1);
    for (unsigned i = 0; i < j; ++i) r *= BigInt(n - static_cast<long long>(i));
    return r;
}

Rational binomial(long long m, unsigned k) {
    return Rational(falling_factorial(m, k), factorial(k));
}

int neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace falg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagcones {

/// Arbitrary-precision signed integer (32-bit limbs, little endian).
/// Small and simple on purpose: the feasibility solvers and certificates
/// need exactness at desk scale, not throughput.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    /// Parse an optionally signed decimal string.
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    bool odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated division (quotient rounds toward zero). Throws on zero divisor.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    /// True iff the value fits in int64_t; then *out is set.
    bool to_int64(std::int64_t* out) const;

    std::string to_string() const;

    /// Cheap exact bytes for hashing/dedup (sign byte + raw limbs).
    void append_key(std::string& out) const;

    static BigInt gcd(BigInt a, BigInt b);

private:
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    static void trim(std::vector<std::uint32_t>& v);
    void normalize();

    std::vector<std::uint32_t> limbs_;  // empty == zero
    bool negative_ = false;
};

/// Exact rational, always canonical: den > 0, gcd(num, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parse "num/den" or a plain integer string.
    static Rational from_string(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Canonical "num/den" form, e.g. "51/10", "-7/5", "0/1".
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace flagcones

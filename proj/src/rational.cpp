#include "flagcones/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagcones {

BigInt::BigInt(std::int64_t v) {
    negative_ = v < 0;
    // avoid UB on INT64_MIN
    std::uint64_t m = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void BigInt::normalize() {
    trim(limbs_);
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    trim(r);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    trim(r);
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

namespace {

int bit_length(const std::vector<std::uint32_t>& v) {
    if (v.empty()) return 0;
    int bits = static_cast<int>((v.size() - 1) * 32);
    std::uint32_t top = v.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool get_bit(const std::vector<std::uint32_t>& v, int i) {
    std::size_t limb = static_cast<std::size_t>(i) / 32;
    if (limb >= v.size()) return false;
    return (v[limb] >> (i % 32)) & 1u;
}

void set_bit(std::vector<std::uint32_t>& v, int i) {
    std::size_t limb = static_cast<std::size_t>(i) / 32;
    if (limb >= v.size()) v.resize(limb + 1, 0);
    v[limb] |= (1u << (i % 32));
}

// r = (r << 1) | bit, in place
void shl1_or(std::vector<std::uint32_t>& r, bool bit) {
    std::uint32_t carry = bit ? 1u : 0u;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t next = r[i] >> 31;
        r[i] = (r[i] << 1) | carry;
        carry = next;
    }
    if (carry) r.push_back(carry);
}

}  // namespace

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::invalid_argument("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        trim(r);
        return;
    }
    // fast path: both fit in 64 bits
    if (a.size() <= 2 && b.size() <= 2) {
        std::uint64_t ua = a[0] + (a.size() > 1 ? (static_cast<std::uint64_t>(a[1]) << 32) : 0);
        std::uint64_t ub = b[0] + (b.size() > 1 ? (static_cast<std::uint64_t>(b[1]) << 32) : 0);
        std::uint64_t uq = ua / ub, ur = ua % ub;
        while (uq) {
            q.push_back(static_cast<std::uint32_t>(uq & 0xffffffffu));
            uq >>= 32;
        }
        while (ur) {
            r.push_back(static_cast<std::uint32_t>(ur & 0xffffffffu));
            ur >>= 32;
        }
        return;
    }
    // schoolbook binary long division
    int n = bit_length(a);
    for (int i = n - 1; i >= 0; --i) {
        shl1_or(r, get_bit(a, i));
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            set_bit(q, i);
        }
    }
    trim(q);
    trim(r);
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (negative_ == o.negative_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.negative_ = negative_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.negative_ = negative_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.negative_ = o.negative_;
        }
    }
    r.normalize();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.negative_ = !r.limbs_.empty() && (negative_ != o.negative_);
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    std::vector<std::uint32_t> q, rem;
    divmod_mag(limbs_, o.limbs_, q, rem);
    BigInt r;
    r.limbs_ = std::move(q);
    r.negative_ = !r.limbs_.empty() && (negative_ != o.negative_);
    return r;
}

BigInt BigInt::operator%(const BigInt& o) const {
    std::vector<std::uint32_t> q, rem;
    divmod_mag(limbs_, o.limbs_, q, rem);
    BigInt r;
    r.limbs_ = std::move(rem);
    r.negative_ = !r.limbs_.empty() && negative_;
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

bool BigInt::to_int64(std::int64_t* out) const {
    if (limbs_.size() > 2) return false;
    std::uint64_t m = 0;
    if (!limbs_.empty()) m = limbs_[0];
    if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) {
        if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) return false;
        *out = static_cast<std::int64_t>(~m + 1);
    } else {
        if (m > static_cast<std::uint64_t>(INT64_MAX)) return false;
        *out = static_cast<std::int64_t>(m);
    }
    return true;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> cur = limbs_;
    std::string digits;
    const std::vector<std::uint32_t> base{1000000000u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, base, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos >= s.size()) throw std::invalid_argument("BigInt: no digits in '" + s + "'");
    BigInt r;
    const BigInt ten(10);
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        r = r * ten + BigInt(s[pos] - '0');
    }
    if (neg && !r.is_zero()) r.negative_ = true;
    return r;
}

void BigInt::append_key(std::string& out) const {
    out.push_back(negative_ ? '-' : '+');
    out.append(reinterpret_cast<const char*>(limbs_.data()), limbs_.size() * sizeof(std::uint32_t));
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    // Euclid; the 64-bit fast path in divmod_mag covers the common case
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return (num_ * o.den_) < (o.num_ * den_);
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

}  // namespace flagcones

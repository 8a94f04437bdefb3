#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "flagcones/rational.hpp"
#include "flagcones/rng.hpp"

using flagcones::BigInt;
using flagcones::Rational;
using flagcones::Rng;

TEST_CASE("bigint small values round-trip") {
    for (std::int64_t v : {0ll, 1ll, -1ll, 42ll, -42ll, 1000000007ll, -999999999999ll}) {
        BigInt b(v);
        std::int64_t back = 123;
        CHECK(b.to_int64(&back));
        CHECK(back == v);
        CHECK(BigInt::from_string(b.to_string()) == b);
    }
}

TEST_CASE("bigint arithmetic agrees with int128 on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
        std::int64_t a = static_cast<std::int64_t>(rng.next() % 2000000000ull) - 1000000000;
        std::int64_t b = static_cast<std::int64_t>(rng.next() % 2000000000ull) - 1000000000;
        BigInt A(a), B(b);
        __int128 sum = static_cast<__int128>(a) + b;
        __int128 dif = static_cast<__int128>(a) - b;
        __int128 prd = static_cast<__int128>(a) * b;
        std::int64_t out;
        CHECK(((A + B).to_int64(&out) && out == static_cast<std::int64_t>(sum)));
        CHECK(((A - B).to_int64(&out) && out == static_cast<std::int64_t>(dif)));
        BigInt P = A * B;
        CHECK(P.to_string() == [&] {
            __int128 v = prd;
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            if (neg) v = -v;
            std::string s;
            while (v) {
                s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
                v /= 10;
            }
            if (neg) s.push_back('-');
            return std::string(s.rbegin(), s.rend());
        }());
        if (b != 0) {
            std::int64_t q = a / b, r = a % b;
            CHECK(((A / B).to_int64(&out) && out == q));
            CHECK(((A % B).to_int64(&out) && out == r));
        }
    }
}

TEST_CASE("bigint multi-limb division identity") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        BigInt a(1), b(1);
        for (int i = 0; i < 5; ++i) a = a * BigInt(static_cast<std::int64_t>(rng.next() >> 16));
        for (int i = 0; i < 2; ++i) b = b * BigInt(static_cast<std::int64_t>((rng.next() >> 16) | 1));
        if (rng.below(2)) a = -a;
        if (rng.below(2)) b = -b;
        BigInt q = a / b, r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(BigInt::gcd(big * BigInt(35), big * BigInt(21)) == big * BigInt(7));
}

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
    CHECK((Rational(1, 2) - Rational(1, 3)).to_string() == "1/6");
    CHECK((Rational(3, 4) * Rational(2, 9)).to_string() == "1/6");
    CHECK((Rational(3, 4) / Rational(9, 2)).to_string() == "1/6");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational::from_string("51/10") == Rational(51, 10));
    CHECK(Rational::from_string("-7/5") == Rational(-7, 5));
    CHECK(Rational::from_string("4") == Rational(4));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational ordering is dense and exact") {
    Rational a(7, 5), b(29, 10);
    Rational mid = (a + b) / Rational(2);
    CHECK(a < mid);
    CHECK(mid < b);
    CHECK(mid.to_string() == "43/20");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlcoh/bigint.hpp"

#include <random>

using dlcoh::BigInt;

namespace {

std::string i128_str(__int128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (m) {
        s += static_cast<char>('0' + static_cast<int>(m % 10));
        m /= 10;
    }
    if (neg)
        s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("small-value arithmetic agrees with int64") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int it = 0; it < 2000; ++it) {
        long long a = d(rng), b = d(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("arithmetic across the fast/slow boundary matches an int128 oracle") {
    std::mt19937_64 rng(777);
    // magnitudes straddling 2^62
    std::uniform_int_distribution<long long> d(-(3LL << 61), 3LL << 61);
    for (int it = 0; it < 4000; ++it) {
        __int128 a = d(rng), b = d(rng);
        BigInt A(static_cast<long long>(a)), B(static_cast<long long>(b));
        CHECK((A + B).to_string() == i128_str(a + b));
        CHECK((A - B).to_string() == i128_str(a - b));
        CHECK((A * B).to_string() == i128_str(a * b));
        if (b != 0) {
            CHECK((A / B).to_string() == i128_str(a / b));
            CHECK((A % B).to_string() == i128_str(a % b));
        }
    }
}

TEST_CASE("multi-limb division round-trips") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(1, (1LL << 62) - 1);
    for (int it = 0; it < 800; ++it) {
        BigInt a = BigInt(d(rng)) * BigInt(d(rng)) * BigInt(d(rng));
        BigInt b = BigInt(d(rng)) * BigInt(d(rng));
        if (it % 3 == 0)
            a.negate();
        if (it % 5 == 0)
            b.negate();
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::compare_abs(r, b) < 0);
        if (!r.is_zero())
            CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("decimal string round-trip and known large values") {
    // 2^200
    BigInt p = BigInt::pow(BigInt(2), 200);
    CHECK(p.to_string() ==
          "1606938044258990275541962092341162602522202993782792835301376");
    CHECK(BigInt(p.to_string()) == p);

    // 50! has a known value
    BigInt f(1);
    for (int i = 2; i <= 50; ++i)
        f *= BigInt(i);
    CHECK(f.to_string() ==
          "30414093201713378043612608166064768844377641568960512000000000000");
    CHECK(BigInt("-12345678901234567890123456789") ==
          -BigInt("12345678901234567890123456789"));
}

TEST_CASE("gcd, lcm, pow") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
    CHECK(BigInt::lcm(BigInt(4), BigInt(6)) == BigInt(12));
    CHECK(BigInt::pow(BigInt(3), 0) == BigInt(1));
    CHECK(BigInt::pow(BigInt(10), 19).to_string() == "10000000000000000000");

    BigInt a = BigInt::pow(BigInt(2), 80) * BigInt(9);
    BigInt b = BigInt::pow(BigInt(2), 75) * BigInt(15);
    CHECK(BigInt::gcd(a, b) == BigInt::pow(BigInt(2), 75) * BigInt(3));
}

TEST_CASE("edge cases") {
    CHECK(BigInt().is_zero());
    CHECK(BigInt(-1).is_unit());
    CHECK((BigInt(INT64_MIN) + BigInt(0)).to_string() == "-9223372036854775808");
    CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
    CHECK((BigInt(INT64_MIN) * BigInt(-1)).to_string() == "9223372036854775808");
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
    CHECK(BigInt(7).divisible_by(BigInt(7)));
    CHECK_FALSE(BigInt(7).divisible_by(BigInt(2)));
}

#include "doctest.h"

#include "mcloc/bigint.hpp"

using mcloc::BigInt;

namespace {
uint64_t rngState = 0x243f6a8885a308d3ULL;
uint64_t nextRand() {
    uint64_t z = (rngState += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
long long randSmall() { return static_cast<long long>(nextRand() % 2000001) - 1000000; }
}  // namespace

TEST_CASE("small arithmetic agrees with long long") {
    for (int it = 0; it < 2000; ++it) {
        long long a = randSmall(), b = randSmall();
        CHECK((BigInt(a) + BigInt(b)).toString() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).toString() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).toString() == std::to_string(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.toString() == std::to_string(a / b));
            CHECK(r.toString() == std::to_string(a % b));
        }
    }
}

TEST_CASE("multi-limb divmod reconstructs the dividend") {
    for (int it = 0; it < 500; ++it) {
        BigInt a(1), b(1);
        int la = 1 + static_cast<int>(nextRand() % 5), lb = 1 + static_cast<int>(nextRand() % 3);
        for (int i = 0; i < la; ++i)
            a = a * BigInt(static_cast<long long>(nextRand() >> 16)) + BigInt(randSmall());
        for (int i = 0; i < lb; ++i)
            b = b * BigInt(static_cast<long long>(nextRand() >> 16)) + BigInt(randSmall());
        if (b.isZero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.isZero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("gcd is multiplicative and exact division works") {
    for (int it = 0; it < 300; ++it) {
        BigInt a(randSmall()), b(randSmall()), m(randSmall());
        if (m.isZero() || (a.isZero() && b.isZero())) continue;
        CHECK(BigInt::gcd(a * m, b * m) == BigInt::gcd(a, b) * m.abs());
        BigInt g = BigInt::gcd(a, b);
        if (!a.isZero()) CHECK(a.divExact(g) * g == a);
    }
    CHECK(BigInt::gcd(BigInt(0), BigInt(-8)).toString() == "8");
    CHECK(BigInt::gcd(BigInt(12), BigInt(0)).toString() == "12");
}

TEST_CASE("decimal printing round trip") {
    const char* samples[] = {"0", "-1", "99999999999999999999999999",
                             "-123456789012345678901234567890"};
    for (const char* s : samples) CHECK(BigInt::fromString(s).toString() == s);
    BigInt big = BigInt::fromString("340282366920938463463374607431768211456");  // 2^128
    BigInt p(1);
    for (int i = 0; i < 128; ++i) p *= BigInt(2);
    CHECK(p == big);
    BigInt q, r;
    BigInt::divmod(big * big - BigInt(1), big, q, r);
    CHECK(q == big - BigInt(1));
    CHECK(r == big - BigInt(1));
}

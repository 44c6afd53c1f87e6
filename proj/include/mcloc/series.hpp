#pragma once

#include <map>

#include "mcloc/ratfun.hpp"

namespace mcloc {

// Exact rationals and truncated multivariate power series.  Oracle-side
// machinery: expands exponentials e^{beta} = 1 + beta + beta^2/2! + ... to
// read off lowest-degree parts of K-theoretic restriction values.
struct BigRat {
    BigInt num, den;  // den > 0

    BigRat() : num(0), den(1) {}
    BigRat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    explicit BigRat(long long n) : num(n), den(1) {}

    void reduce() {
        if (den.isZero()) throw std::domain_error("BigRat: zero denominator");
        if (num.isZero()) {
            den = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num, den);
        num = num.divExact(g);
        den = den.divExact(g);
        if (den.isNeg()) {
            num = -num;
            den = -den;
        }
    }
    bool isZero() const { return num.isZero(); }
    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num * b.num, a.den * b.den);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        return BigRat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num == b.num && a.den == b.den;
    }
};

class TruncSeries {
public:
    int nv = 0, cap = 0;  // terms of total degree > cap are dropped
    std::map<Expo, BigRat> terms;

    TruncSeries() = default;
    TruncSeries(int nvars, int maxDeg) : nv(nvars), cap(maxDeg) {}

    static int totalDeg(const Expo& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    static TruncSeries constant(int nvars, int maxDeg, BigRat c) {
        TruncSeries s(nvars, maxDeg);
        if (!c.isZero()) s.terms.emplace(Expo(nvars, 0), std::move(c));
        return s;
    }

    void add(const Expo& e, const BigRat& c) {
        if (c.isZero() || totalDeg(e) > cap) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.isZero()) terms.erase(it);
        }
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r = a;
        for (const auto& [e, c] : b.terms) r.add(e, c);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.nv, a.cap);
        Expo e(a.nv);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }

    BigRat constTerm() const {
        auto it = terms.find(Expo(nv, 0));
        return it == terms.end() ? BigRat() : it->second;
    }

    // multiplicative inverse; requires a nonzero constant term
    TruncSeries inverse() const {
        BigRat c0 = constTerm();
        if (c0.isZero()) throw std::domain_error("TruncSeries: constant term vanishes");
        TruncSeries eps = *this;
        eps.terms.erase(Expo(nv, 0));
        // 1/(c0 (1 + eps/c0)) = (1/c0) sum (-eps/c0)^k
        TruncSeries scaled(nv, cap);
        for (const auto& [e, c] : eps.terms) scaled.add(e, BigRat(0) - c / c0);
        TruncSeries acc = constant(nv, cap, BigRat(1) / c0);
        TruncSeries pw = constant(nv, cap, BigRat(1));
        for (int k = 1; k <= cap; ++k) {
            pw = pw * scaled;
            if (pw.terms.empty()) break;
            TruncSeries t = pw;
            for (auto& [e, c] : t.terms) c = c / c0;
            acc = acc + t;
        }
        return acc;
    }

    // exp of the linear form sum coeffs[i] * x_i
    static TruncSeries expLinear(int nvars, int maxDeg, const IVec& coeffs) {
        TruncSeries lin(nvars, maxDeg);
        for (int i = 0; i < nvars; ++i) {
            if (!coeffs[i]) continue;
            Expo e(nvars, 0);
            e[i] = 1;
            lin.add(e, BigRat(coeffs[i]));
        }
        TruncSeries acc = constant(nvars, maxDeg, BigRat(1));
        TruncSeries pw = constant(nvars, maxDeg, BigRat(1));
        BigInt fact(1);
        for (int d = 1; d <= maxDeg; ++d) {
            pw = pw * lin;
            fact *= BigInt(d);
            TruncSeries t = pw;
            for (auto& [e, c] : t.terms) c = c / BigRat(fact, BigInt(1));
            acc = acc + t;
        }
        return acc;
    }

    // terms of the minimal total degree, or empty when the series is 0
    std::pair<int, std::map<Expo, BigRat>> lowestPart() const {
        int best = cap + 1;
        for (const auto& [e, c] : terms) best = std::min(best, totalDeg(e));
        std::map<Expo, BigRat> part;
        for (const auto& [e, c] : terms)
            if (totalDeg(e) == best) part.emplace(e, c);
        return {best, part};
    }
};

}  // namespace mcloc

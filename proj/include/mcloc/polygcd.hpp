#pragma once

#include <stdexcept>

#include "mcloc/laurent.hpp"

namespace mcloc {

// Exact polynomial division in lex order; throws when the division is not
// exact.  Inputs must have nonnegative exponents.
inline LaurentPoly divExactPoly(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.isZero()) throw std::domain_error("divExactPoly: zero divisor");
    LaurentPoly rem = a, quot(a.nv);
    Expo e(a.nv);
    while (!rem.isZero()) {
        const auto& [ea, ca] = rem.leadingTerm();
        const auto& [eb, cb] = b.leadingTerm();
        for (int i = 0; i < a.nv; ++i) {
            e[i] = ea[i] - eb[i];
            if (e[i] < 0) throw std::logic_error("divExactPoly: inexact (monomial)");
        }
        BigInt q, r;
        BigInt::divmod(ca, cb, q, r);
        if (!r.isZero()) throw std::logic_error("divExactPoly: inexact (coefficient)");
        LaurentPoly t = LaurentPoly::monomial(e, q);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

namespace detail {

// lc(v)^(deg u - deg v + 1) * u mod v; the exact power matters for the
// subresultant divisibility used by polyGcd.
inline LaurentPoly pseudoRem(const LaurentPoly& u, const LaurentPoly& v, int var) {
    int m = v.degIn(var);
    LaurentPoly lcv = v.coeffOfPow(var, m);
    LaurentPoly r = u;
    int pending = u.degIn(var) - m + 1;
    while (!r.isZero()) {
        int k = r.degIn(var);
        if (k < m) break;
        LaurentPoly lcr = r.coeffOfPow(var, k);
        Expo shift(r.nv, 0);
        shift[var] = k - m;
        r = r * lcv - v * lcr.shifted(shift);
        --pending;
    }
    for (; pending > 0; --pending) r = r * lcv;
    return r;
}

}  // namespace detail

LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b);

namespace detail {

// coefficients of p as a univariate polynomial in `var` after substituting
// small integers for every other variable
inline std::vector<BigInt> evalToUnivariate(const LaurentPoly& p, int var,
                                            const std::vector<int>& points) {
    std::vector<BigInt> out(p.degIn(var) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms) {
        BigInt val = c;
        for (int v = 0; v < p.nv; ++v) {
            if (v == var) continue;
            for (int k = 0; k < e[v]; ++k) val *= BigInt(points[v]);
        }
        out[e[var]] += val;
    }
    while (out.size() > 1 && out.back().isZero()) out.pop_back();
    return out;
}

inline int uniGcdDegree(std::vector<BigInt> a, std::vector<BigInt> b) {
    auto strip = [](std::vector<BigInt>& p) {
        while (!p.empty() && p.back().isZero()) p.pop_back();
        BigInt g(0);
        for (const auto& c : p) g = BigInt::gcd(g, c);
        if (!g.isZero() && !g.isOne())
            for (auto& c : p) c = c.divExact(g);
    };
    strip(a);
    strip(b);
    while (!a.empty() && !b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        // one pseudo-remainder: a <- lc(b) * a - lc(a) x^{da-db} b
        int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
        BigInt la = a.back(), lb = b.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        strip(a);
        if (static_cast<int>(a.size()) - 1 >= da && !a.empty())
            throw std::logic_error("uniGcdDegree: degree did not drop");
        std::swap(a, b);
    }
    const std::vector<BigInt>& g = a.empty() ? b : a;
    return static_cast<int>(g.size()) - 1;
}

// Sound certificate that gcd(a, b) has degree zero in every variable (so
// the gcd is an integer).  Evaluation points where the leading coefficient
// vanishes are retried; "false" only means inconclusive.
inline bool provablyCoprime(const LaurentPoly& a, const LaurentPoly& b) {
    static const int seeds[4][6] = {{2, 3, 5, 7, 11, 13},
                                    {3, 7, 2, 13, 5, 17},
                                    {5, 2, 11, 3, 19, 7},
                                    {7, 13, 3, 17, 2, 23}};
    for (int v = 0; v < a.nv; ++v) {
        int da = a.degIn(v), db = b.degIn(v);
        if (da == 0 || db == 0) continue;  // gcd already has degree 0 here
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            std::vector<int> pts(a.nv);
            for (int i = 0; i < a.nv; ++i) pts[i] = seeds[attempt][i % 6] + i;
            std::vector<BigInt> ua = evalToUnivariate(a, v, pts);
            if (static_cast<int>(ua.size()) - 1 != da) continue;  // lc vanished
            std::vector<BigInt> ub = evalToUnivariate(b, v, pts);
            if (ub.empty() || (ub.size() == 1 && ub[0].isZero())) continue;
            if (uniGcdDegree(std::move(ua), std::move(ub)) == 0) certified = true;
            else
                return false;
        }
        if (!certified) return false;
    }
    return true;
}

}  // namespace detail

// Content of p with respect to one variable: the gcd of its coefficient
// polynomials.
inline LaurentPoly contentWrt(const LaurentPoly& p, int var) {
    LaurentPoly g(p.nv);
    int lo = p.minDegIn(var), hi = p.degIn(var);
    for (int d = lo; d <= hi; ++d) {
        LaurentPoly c = p.coeffOfPow(var, d);
        if (c.isZero()) continue;
        g = g.isZero() ? std::move(c) : polyGcd(g, c);
        if (g.isOne()) break;
    }
    return g;
}

// Gcd of integer polynomials with nonnegative exponents, including the
// integer content, normalized to positive leading coefficient.  Content and
// primitive part are split once per recursion level; the main-variable part
// runs the subresultant pseudo-remainder sequence, whose divisors are known
// exactly, so no content gcds are needed inside the loop.
inline LaurentPoly polyGcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("polyGcd: ring mismatch");
    auto canon = [](LaurentPoly p) {
        if (!p.isZero() && p.leadingTerm().second.isNeg()) p = -p;
        return p;
    };
    if (a.isZero()) return canon(b);
    if (b.isZero()) return canon(a);
    if (a.isConstant() || b.isConstant())
        return LaurentPoly::constant(a.nv, BigInt::gcd(a.intContent(), b.intContent()));

    auto monomialGcd = [&](const LaurentPoly& mono, const LaurentPoly& other) {
        Expo e = mono.terms.begin()->first, m = other.minExps();
        for (int i = 0; i < mono.nv; ++i) e[i] = std::min(e[i], m[i]);
        return LaurentPoly::monomial(e, BigInt::gcd(mono.intContent(), other.intContent()));
    };
    if (a.terms.size() == 1) return monomialGcd(a, b);
    if (b.terms.size() == 1) return monomialGcd(b, a);

    if (detail::provablyCoprime(a, b))
        return LaurentPoly::constant(a.nv, BigInt::gcd(a.intContent(), b.intContent()));

    int var = -1;
    for (int v = a.nv - 1; v >= 0; --v) {
        if (a.degIn(v) > 0 || b.degIn(v) > 0) { var = v; break; }
    }
    if (var < 0) return LaurentPoly::constant(a.nv, BigInt::gcd(a.intContent(), b.intContent()));

    LaurentPoly ca = contentWrt(a, var), cb = contentWrt(b, var);
    LaurentPoly u = divExactPoly(a, ca), v = divExactPoly(b, cb);
    LaurentPoly cg = polyGcd(ca, cb);

    if (u.degIn(var) == 0 || v.degIn(var) == 0) return canon(cg);
    if (u.degIn(var) < v.degIn(var)) std::swap(u, v);

    LaurentPoly one = LaurentPoly::constant(a.nv, 1);
    LaurentPoly g = one, h = one;
    while (true) {
        int delta = u.degIn(var) - v.degIn(var);
        LaurentPoly r = detail::pseudoRem(u, v, var);
        if (r.isZero()) break;
        if (r.degIn(var) == 0) return canon(cg);  // coprime in the main variable
        u = v;
        LaurentPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        v = divExactPoly(r, divisor);
        g = u.coeffOfPow(var, u.degIn(var));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            LaurentPoly gn = g;
            for (int i = 1; i < delta; ++i) gn *= g;
            LaurentPoly hd = h;
            for (int i = 2; i < delta; ++i) hd *= h;
            h = divExactPoly(gn, hd);
        }
    }
    LaurentPoly cv = contentWrt(v, var);
    return canon(cg * divExactPoly(v, cv));
}

}  // namespace mcloc

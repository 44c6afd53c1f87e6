#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>
#include <stdexcept>
#include <functional>

#include "mcloc/bigint.hpp"

namespace mcloc {

using Expo = std::vector<int32_t>;

// Multivariate Laurent polynomial over the integers.  Terms are kept in a
// map ordered lexicographically by exponent vector, with no zero
// coefficients, so equal polynomials have identical representations.
class LaurentPoly {
public:
    int nv = 0;
    std::map<Expo, BigInt> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nv(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, BigInt c) {
        LaurentPoly p(nvars);
        if (!c.isZero()) p.terms.emplace(Expo(nvars, 0), std::move(c));
        return p;
    }
    static LaurentPoly monomial(Expo e, BigInt c) {
        LaurentPoly p(static_cast<int>(e.size()));
        if (!c.isZero()) p.terms.emplace(std::move(e), std::move(c));
        return p;
    }
    static LaurentPoly variable(int nvars, int v, int power = 1) {
        Expo e(nvars, 0);
        e[v] = power;
        return monomial(std::move(e), BigInt(1));
    }

    bool isZero() const { return terms.empty(); }
    bool isConstant() const {
        if (terms.empty()) return true;
        if (terms.size() != 1) return false;
        for (int x : terms.begin()->first)
            if (x != 0) return false;
        return true;
    }
    bool isOne() const { return isConstant() && !terms.empty() && terms.begin()->second.isOne(); }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nv == b.nv && a.terms == b.terms;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    // Total order compatible with the canonical term order; used for map keys.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nv != b.nv) return a.nv < b.nv;
        auto ia = a.terms.begin(), ib = b.terms.begin();
        for (; ia != a.terms.end() && ib != b.terms.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            int c = BigInt::cmp(ia->second, ib->second);
            if (c != 0) return c < 0;
        }
        return ia == a.terms.end() && ib != b.terms.end();
    }

    void addTerm(const Expo& e, const BigInt& c) {
        if (c.isZero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.isZero()) terms.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        requireSameRing(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms) r.addTerm(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        requireSameRing(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms) r.addTerm(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(nv);
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        requireSameRing(a, b);
        LaurentPoly r(a.nv);
        Expo e(a.nv);
        for (const auto& [ea, ca] : a.terms) {
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
                r.addTerm(e, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly scaled(const BigInt& c) const {
        LaurentPoly r(nv);
        if (c.isZero()) return r;
        for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
        return r;
    }

    LaurentPoly pow(int n) const {
        if (n < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly r = constant(nv, 1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // Leading term in the canonical (lex, last term of the map) order.
    const std::pair<const Expo, BigInt>& leadingTerm() const {
        if (terms.empty()) throw std::logic_error("LaurentPoly: leading term of zero");
        return *terms.rbegin();
    }

    // Componentwise minimum of exponents over all terms.
    Expo minExps() const {
        Expo m(nv, 0);
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < nv; ++i) m[i] = std::min(m[i], e[i]);
        }
        return m;
    }

    LaurentPoly shifted(const Expo& delta) const {
        LaurentPoly r(nv);
        Expo e(nv);
        for (const auto& [e0, c] : terms) {
            for (int i = 0; i < nv; ++i) e[i] = e0[i] + delta[i];
            r.terms.emplace(e, c);
        }
        return r;
    }

    int degIn(int v) const {
        if (terms.empty()) return 0;
        int d = terms.begin()->first[v];
        for (const auto& [e, c] : terms) d = std::max(d, e[v]);
        return d;
    }
    int minDegIn(int v) const {
        if (terms.empty()) return 0;
        int d = terms.begin()->first[v];
        for (const auto& [e, c] : terms) d = std::min(d, e[v]);
        return d;
    }

    // Coefficient of x_v^d, as a polynomial with the v-slot zeroed.
    LaurentPoly coeffOfPow(int v, int d) const {
        LaurentPoly r(nv);
        for (const auto& [e, c] : terms) {
            if (e[v] != d) continue;
            Expo e2 = e;
            e2[v] = 0;
            r.terms.emplace(std::move(e2), c);
        }
        return r;
    }

    // Substitute x_v := sign * x^target (a monomial in the same ring).
    LaurentPoly substVarMonomial(int v, const Expo& target, int sign = 1) const {
        LaurentPoly r(nv);
        Expo e(nv);
        for (const auto& [e0, c] : terms) {
            int d = e0[v];
            for (int i = 0; i < nv; ++i) e[i] = e0[i] + d * target[i] - (i == v ? d : 0);
            BigInt k = c;
            if (sign < 0 && (d & 1)) k = -k;
            r.addTerm(e, k);
        }
        return r;
    }

    // Linear substitution on a subset of variables: exponents of vars[j]
    // are redistributed via e'[vars[i]] += M[i][j] * e[vars[j]].
    LaurentPoly applyLinearOnVars(const std::vector<int>& vars,
                                  const std::vector<std::vector<int>>& M) const {
        LaurentPoly r(nv);
        size_t k = vars.size();
        Expo e(nv);
        for (const auto& [e0, c] : terms) {
            e = e0;
            for (int v : vars) e[v] = 0;
            for (size_t i = 0; i < k; ++i) {
                long long acc = 0;
                for (size_t j = 0; j < k; ++j) acc += static_cast<long long>(M[i][j]) * e0[vars[j]];
                e[vars[i]] = static_cast<int32_t>(acc);
            }
            r.addTerm(e, c);
        }
        return r;
    }

    // Reinterprets the polynomial in a ring with fewer variables; every
    // dropped variable must have exponent 0 throughout.
    LaurentPoly projectVars(const std::vector<int>& keep) const {
        LaurentPoly r(static_cast<int>(keep.size()));
        std::vector<bool> kept(nv, false);
        for (int v : keep) kept[v] = true;
        for (const auto& [e, c] : terms) {
            for (int i = 0; i < nv; ++i)
                if (!kept[i] && e[i] != 0)
                    throw std::logic_error("LaurentPoly::projectVars: dropped variable occurs");
            Expo e2(keep.size());
            for (size_t i = 0; i < keep.size(); ++i) e2[i] = e[keep[i]];
            r.terms.emplace(std::move(e2), c);
        }
        return r;
    }

    // Embeds into a larger ring, variable i mapping to slot where[i].
    LaurentPoly embed(int nvBig, const std::vector<int>& where) const {
        LaurentPoly r(nvBig);
        for (const auto& [e, c] : terms) {
            Expo e2(nvBig, 0);
            for (int i = 0; i < nv; ++i) e2[where[i]] = e[i];
            r.terms.emplace(std::move(e2), c);
        }
        return r;
    }

    BigInt intContent() const {
        BigInt g;
        for (const auto& [e, c] : terms) {
            g = BigInt::gcd(g, c);
            if (g.isOne()) break;
        }
        return g;
    }

    LaurentPoly divExactInt(const BigInt& d) const {
        LaurentPoly r(nv);
        for (const auto& [e, c] : terms) r.terms.emplace(e, c.divExact(d));
        return r;
    }

    std::string toString(const std::vector<std::string>& names) const;

private:
    static void requireSameRing(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nv != b.nv) throw std::invalid_argument("LaurentPoly: ring mismatch");
    }
};

// Canonical text form.  Terms are listed in descending lexicographic
// exponent order; within a term, the last ring variable (the y/q slot)
// prints first, e.g. `t1 + y*t2`.
inline std::string LaurentPoly::toString(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nv)
        throw std::invalid_argument("LaurentPoly::toString: name count mismatch");
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Expo& e = it->first;
        const BigInt& c = it->second;
        std::string mag = c.abs().toString();
        if (first) {
            if (c.isNeg()) out += "-";
            first = false;
        } else {
            out += c.isNeg() ? " - " : " + ";
        }
        std::vector<std::string> factors;
        auto pushVar = [&](int v) {
            if (e[v] == 0) return;
            std::string f = names[v];
            if (e[v] != 1) f += "^" + std::to_string(e[v]);
            factors.push_back(std::move(f));
        };
        pushVar(nv - 1);
        for (int v = 0; v + 1 < nv; ++v) pushVar(v);
        if (factors.empty()) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out += "*";
                out += factors[i];
            }
        }
    }
    return out;
}

}  // namespace mcloc

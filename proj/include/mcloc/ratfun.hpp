#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mcloc/laurent.hpp"
#include "mcloc/polygcd.hpp"

namespace mcloc {

// Exact rational function: integer Laurent numerator over a factored
// denominator content * x^mono * prod(f_i).  The reduced pair
// (numerator, expanded denominator) is canonical: coprime, joint minimal
// exponent zero in every variable, positive leading denominator
// coefficient.  Equality of values coincides with equality of these pairs.
//
// Denominator factors are kept separately because every denominator in this
// library is a product of small irreducibles (binomials, polynomials linear
// in one variable); reduction is then trial division, and the classical
// subresultant gcd only runs as a fallback when a factor is not certified
// irreducible.
class RatFun {
public:
    RatFun() = default;
    explicit RatFun(int nvars) { initRing(nvars); }

    static RatFun fromPoly(LaurentPoly p) {
        RatFun r;
        r.initRing(p.nv);
        r.num_ = std::move(p);
        r.finishReduce(true);
        return r;
    }
    static RatFun fromInt(int nvars, BigInt c) {
        return fromPoly(LaurentPoly::constant(nvars, std::move(c)));
    }
    static RatFun make(LaurentPoly n, LaurentPoly d) {
        if (d.isZero()) throw std::domain_error("RatFun: zero denominator");
        RatFun r;
        r.initRing(n.nv);
        r.num_ = std::move(n);
        r.pushFactor(std::move(d), 1);
        r.finishReduce(false);
        return r;
    }
    static RatFun fromFactoredDen(LaurentPoly n, std::vector<LaurentPoly> denFactors) {
        RatFun r;
        r.initRing(n.nv);
        r.num_ = std::move(n);
        for (auto& f : denFactors) {
            if (f.isZero()) throw std::domain_error("RatFun: zero denominator factor");
            r.pushFactor(std::move(f), 1);
        }
        r.finishReduce(false);
        return r;
    }

    int nvars() const { return num_.nv; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && denTrivial(); }

    const LaurentPoly& num() const { return num_; }
    LaurentPoly den() const {
        LaurentPoly d = LaurentPoly::monomial(denMono_, denC_);
        for (const auto& f : denF_) d *= f;
        return d;
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        if (a.num_ != b.num_) return false;
        if (a.denC_ == b.denC_ && a.denMono_ == b.denMono_ && a.denF_ == b.denF_) return true;
        return a.den() == b.den();
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // Independent equality route for tests.
    static bool crossEqual(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den() == b.num_ * a.den();
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.isZero()) return b;
        if (b.isZero()) return a;
        RatFun r;
        r.initRing(a.nvars());
        // common denominator: lcm of contents, max of monomials, union of
        // factor multisets
        BigInt cg = BigInt::gcd(a.denC_, b.denC_);
        BigInt ma = b.denC_.divExact(cg), mb = a.denC_.divExact(cg);
        Expo monoU(a.nvars());
        Expo shiftA(a.nvars()), shiftB(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) {
            monoU[i] = std::max(a.denMono_[i], b.denMono_[i]);
            shiftA[i] = monoU[i] - a.denMono_[i];
            shiftB[i] = monoU[i] - b.denMono_[i];
        }
        std::vector<LaurentPoly> united, extraA, extraB;
        mergeFactors(a.denF_, b.denF_, united, extraA, extraB);
        LaurentPoly na = a.num_.scaled(ma).shifted(shiftA);
        for (const auto& f : extraA) na *= f;
        LaurentPoly nb = b.num_.scaled(mb).shifted(shiftB);
        for (const auto& f : extraB) nb *= f;
        r.num_ = na + nb;
        r.denC_ = a.denC_ * ma;
        r.denMono_ = std::move(monoU);
        r.denF_ = std::move(united);
        r.denNice_ = a.denNice_ && b.denNice_;
        r.finishReduce(false);
        return r;
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        RatFun r;
        r.initRing(a.nvars());
        r.num_ = a.num_ * b.num_;
        r.denC_ = a.denC_ * b.denC_;
        for (int i = 0; i < a.nvars(); ++i) r.denMono_[i] = a.denMono_[i] + b.denMono_[i];
        r.denF_ = a.denF_;
        r.denF_.insert(r.denF_.end(), b.denF_.begin(), b.denF_.end());
        std::sort(r.denF_.begin(), r.denF_.end());
        r.denNice_ = a.denNice_ && b.denNice_;
        r.finishReduce(false);
        return r;
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.isZero()) throw std::domain_error("RatFun: division by zero");
        RatFun r;
        r.initRing(a.nvars());
        r.num_ = a.num_ * b.den();
        r.denC_ = a.denC_;
        r.denMono_ = a.denMono_;
        r.denF_ = a.denF_;
        r.denNice_ = a.denNice_;
        r.pushFactor(b.num_, 1);
        r.finishReduce(false);
        return r;
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    RatFun inverse() const { return fromInt(nvars(), BigInt(1)) / *this; }

    // Divide by a product of factors without expanding it.
    RatFun divByFactors(const std::vector<LaurentPoly>& fs) const {
        RatFun r = *this;
        for (const auto& f : fs) {
            if (f.isZero()) throw std::domain_error("RatFun: zero denominator factor");
            r.pushFactor(f, 1);
        }
        r.finishReduce(false);
        return r;
    }

    // A product of simple fractions (each with a factor-free denominator),
    // kept as a factor list so division never expands it.
    struct AtomProduct {
        int nv = 0;
        BigInt numContent{1}, denContent{1};
        Expo numShift, denShift;
        std::vector<LaurentPoly> numFactors;

        explicit AtomProduct(int nvars) : nv(nvars), numShift(nvars, 0), denShift(nvars, 0) {}

        void mulAtom(const RatFun& atom) {
            if (!atom.denF_.empty())
                throw std::invalid_argument("AtomProduct: atom has a factored denominator");
            if (atom.isZero()) throw std::domain_error("AtomProduct: zero atom");
            numFactors.push_back(atom.num_);
            // the atom numerator may carry content/monomial; normalize lazily
            denContent = denContent * atom.denC_;
            for (int i = 0; i < nv; ++i) denShift[i] += atom.denMono_[i];
        }

        RatFun expanded() const {
            LaurentPoly n = LaurentPoly::monomial(numShift, numContent);
            for (const auto& f : numFactors) n *= f;
            RatFun r;
            r.initRing(nv);
            r.num_ = std::move(n);
            r.denC_ = denContent;
            r.denMono_ = denShift;
            r.finishReduce(false);
            return r;
        }
    };

    RatFun divByAtomProduct(const AtomProduct& p) const {
        RatFun r = *this;
        // multiply by the atoms' denominators, divide by their numerators
        r.num_ = r.num_.scaled(p.denContent).shifted(p.denShift);
        r.denC_ *= p.numContent;
        for (int i = 0; i < nvars(); ++i) r.denMono_[i] += p.numShift[i];
        for (const auto& f : p.numFactors) r.pushFactor(f, 1);
        r.finishReduce(false);
        return r;
    }
    RatFun mulByAtomProduct(const AtomProduct& p) const {
        RatFun r = *this;
        r.num_ = r.num_.scaled(p.numContent).shifted(p.numShift);
        for (const auto& f : p.numFactors) r.num_ *= f;
        r.denC_ *= p.denContent;
        for (int i = 0; i < nvars(); ++i) r.denMono_[i] += p.denShift[i];
        r.finishReduce(false);
        return r;
    }

    RatFun pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        RatFun r = fromInt(nvars(), BigInt(1));
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // Ring automorphism on the listed variables' exponents.
    RatFun applyLinearOnVars(const std::vector<int>& vars,
                             const std::vector<std::vector<int>>& M) const {
        RatFun r;
        r.initRing(nvars());
        r.num_ = num_.applyLinearOnVars(vars, M);
        r.denC_ = denC_;
        LaurentPoly mono =
            LaurentPoly::monomial(denMono_, BigInt(1)).applyLinearOnVars(vars, M);
        r.num_ = r.num_.shifted([&] {
            Expo neg = mono.terms.begin()->first;
            for (auto& x : neg) x = -x;
            return neg;
        }());
        for (const auto& f : denF_) r.pushFactor(f.applyLinearOnVars(vars, M), 1);
        r.finishReduce(true);  // coprimality is preserved by automorphisms
        return r;
    }

    RatFun substVarMonomial(int v, const Expo& target, int sign = 1) const {
        RatFun r;
        r.initRing(nvars());
        r.num_ = num_.substVarMonomial(v, target, sign);
        r.denC_ = denC_;
        LaurentPoly mono =
            LaurentPoly::monomial(denMono_, BigInt(1)).substVarMonomial(v, target, sign);
        Expo neg = mono.terms.begin()->first;
        for (auto& x : neg) x = -x;
        if (mono.terms.begin()->second.isNeg()) r.num_ = -r.num_;
        r.num_ = r.num_.shifted(neg);
        for (const auto& f : denF_) {
            LaurentPoly g = f.substVarMonomial(v, target, sign);
            if (g.isZero()) throw std::domain_error("RatFun: substitution kills denominator");
            r.pushFactor(std::move(g), 1);
        }
        r.finishReduce(false);
        return r;
    }

    RatFun projectVars(const std::vector<int>& keep) const {
        std::vector<bool> kept(nvars(), false);
        for (int v : keep) kept[v] = true;
        for (int v = 0; v < nvars(); ++v)
            if (!kept[v] && denMono_[v] != 0)
                throw std::logic_error("RatFun::projectVars: dropped variable occurs");
        RatFun r;
        r.num_ = num_.projectVars(keep);
        r.denC_ = denC_;
        r.denMono_.resize(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) r.denMono_[i] = denMono_[keep[i]];
        for (const auto& f : denF_) r.denF_.push_back(f.projectVars(keep));
        std::sort(r.denF_.begin(), r.denF_.end());
        r.denNice_ = denNice_;
        return r;
    }
    RatFun embed(int nvBig, const std::vector<int>& where) const {
        RatFun r;
        r.num_ = num_.embed(nvBig, where);
        r.denC_ = denC_;
        r.denMono_.assign(nvBig, 0);
        for (int i = 0; i < nvars(); ++i) r.denMono_[where[i]] = denMono_[i];
        for (const auto& f : denF_) r.denF_.push_back(f.embed(nvBig, where));
        std::sort(r.denF_.begin(), r.denF_.end());
        r.denNice_ = denNice_;
        return r;
    }

    std::string toString(const std::vector<std::string>& names) const {
        if (denTrivial()) return num_.toString(names);
        return "(" + num_.toString(names) + ")/(" + den().toString(names) + ")";
    }

private:
    LaurentPoly num_;
    BigInt denC_ = BigInt(1);
    Expo denMono_;
    std::vector<LaurentPoly> denF_;  // sorted, canonical, repeats allowed
    bool denNice_ = true;

    void initRing(int nvars) {
        num_ = LaurentPoly::zero(nvars);
        denC_ = BigInt(1);
        denMono_.assign(nvars, 0);
        denF_.clear();
        denNice_ = true;
    }

    bool denTrivial() const {
        if (!denC_.isOne() || !denF_.empty()) return false;
        for (int x : denMono_)
            if (x) return false;
        return true;
    }

    // Certificate of irreducibility for canonical primitive factors:
    // linear in some variable with coprime coefficient pair.
    static bool factorLooksIrreducible(const LaurentPoly& f) {
        if (f.terms.size() <= 1) return true;  // canonical monomials never stored anyway
        for (int v = 0; v < f.nv; ++v) {
            if (f.degIn(v) != 1 || f.minDegIn(v) != 0) continue;
            LaurentPoly a = f.coeffOfPow(v, 1), b = f.coeffOfPow(v, 0);
            if (b.isZero()) continue;
            if (polyGcd(a, b).isOne()) return true;
        }
        return false;
    }

    // Absorb a raw factor into the denominator slots, canonicalizing its
    // monomial part, integer content and sign.
    void pushFactor(LaurentPoly f, int mult) {
        if (f.isZero()) throw std::domain_error("RatFun: zero denominator factor");
        for (int k = 0; k < mult; ++k) {
            Expo m = f.minExps();
            bool shifted = false;
            for (int x : m)
                if (x) shifted = true;
            LaurentPoly g = f;
            if (shifted) {
                Expo neg = m;
                for (auto& x : neg) x = -x;
                g = g.shifted(neg);
                for (int i = 0; i < g.nv; ++i) denMono_[i] += m[i];
            }
            BigInt c = g.intContent();
            if (!c.isOne()) g = g.divExactInt(c);
            denC_ *= c;
            if (g.leadingTerm().second.isNeg()) {
                g = -g;
                num_ = -num_;
            }
            if (g.isOne()) continue;
            denF_.push_back(std::move(g));
        }
        std::sort(denF_.begin(), denF_.end());
        for (const auto& x : denF_) denNice_ = denNice_ && factorLooksIrreducible(x);
    }

    static void mergeFactors(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b,
                             std::vector<LaurentPoly>& united, std::vector<LaurentPoly>& extraA,
                             std::vector<LaurentPoly>& extraB) {
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] < b[j])) {
                united.push_back(a[i]);
                extraB.push_back(a[i]);
                ++i;
            } else if (i == a.size() || b[j] < a[i]) {
                united.push_back(b[j]);
                extraA.push_back(b[j]);
                ++j;
            } else {
                united.push_back(a[i]);
                ++i;
                ++j;
            }
        }
    }

    static bool tryDivide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
        q = LaurentPoly::zero(a.nv);
        LaurentPoly rem = a;
        Expo e(a.nv);
        while (!rem.isZero()) {
            const auto& [ea, ca] = rem.leadingTerm();
            const auto& [eb, cb] = b.leadingTerm();
            for (int i = 0; i < a.nv; ++i) {
                e[i] = ea[i] - eb[i];
                if (e[i] < 0) return false;
            }
            BigInt qq, rr;
            BigInt::divmod(ca, cb, qq, rr);
            if (!rr.isZero()) return false;
            LaurentPoly t = LaurentPoly::monomial(e, qq);
            q += t;
            rem -= t * b;
        }
        return true;
    }

    // Joint monomial shift: per variable, min(num min, den monomial) = 0.
    void shiftCanonical() {
        Expo mn = num_.minExps(), delta(num_.nv);
        bool shift = false;
        for (int i = 0; i < num_.nv; ++i) {
            int m = std::min(mn[i], denMono_[i]);
            delta[i] = -m;
            denMono_[i] -= m;
            shift = shift || m != 0;
        }
        if (shift) num_ = num_.shifted(delta);
    }

    // Restore all canonical invariants.  When `coprime` is known (ring
    // automorphisms of an already reduced value) both the trial divisions
    // and the gcd fallback are skipped.
    void finishReduce(bool coprime) {
        if (num_.isZero()) {
            initRing(num_.nv);
            return;
        }
        shiftCanonical();  // make numerator exponents nonnegative
        if (!coprime && !denF_.empty()) {
            std::vector<LaurentPoly> kept;
            kept.reserve(denF_.size());
            LaurentPoly q(num_.nv);
            for (auto& f : denF_) {
                if (!num_.isConstant() && tryDivide(num_, f, q))
                    num_ = q;
                else
                    kept.push_back(std::move(f));
            }
            denF_ = std::move(kept);
            if (!denNice_ && !denF_.empty()) {
                // composite factors: certify coprimality or reduce by a
                // genuine gcd, factor by factor
                std::vector<LaurentPoly> pending = std::move(denF_);
                denF_.clear();
                for (auto& f : pending) {
                    if (factorLooksIrreducible(f) || detail::provablyCoprime(num_, f)) {
                        denF_.push_back(std::move(f));
                        continue;
                    }
                    LaurentPoly g = polyGcd(num_, f);
                    if (g.isOne() || g.terms.size() == 1) {
                        denF_.push_back(std::move(f));
                        continue;
                    }
                    num_ = divExactPoly(num_, g);
                    pushFactor(divExactPoly(f, g), 1);
                }
                std::sort(denF_.begin(), denF_.end());
            }
        }
        // integer content
        BigInt g = BigInt::gcd(num_.intContent(), denC_);
        if (!g.isOne()) {
            num_ = num_.divExactInt(g);
            denC_ = denC_.divExact(g);
        }
        shiftCanonical();  // reductions can raise the numerator minimum
    }
};

}  // namespace mcloc

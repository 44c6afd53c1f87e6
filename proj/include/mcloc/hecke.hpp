#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mcloc/extaffine.hpp"
#include "mcloc/laurent.hpp"
#include "mcloc/rootdata.hpp"

namespace mcloc {

// Laurent polynomials in q; the coefficient ring of the Hecke algebra.
using QPoly = LaurentPoly;

inline QPoly qConst(long long c) { return LaurentPoly::constant(1, BigInt(c)); }
inline QPoly qMono(int d, long long c = 1) {
    return LaurentPoly::monomial(Expo{d}, BigInt(c));
}
inline QPoly qBar(const QPoly& p) {  // q -> q^{-1}
    QPoly r(1);
    for (const auto& [e, c] : p.terms) r.terms.emplace(Expo{-e[0]}, c);
    return r;
}

// Hecke algebra of a finite Weyl group over Z[q^{+-1}]: sparse elements in
// the standard basis, products via the quadratic relation, inverses of
// basis elements, and R-polynomial extraction (plain and twisted) from the
// defining expansions.
class HeckeFinite {
public:
    using Elem = std::map<int, QPoly>;

    explicit HeckeFinite(const WeylGroup& W) : W_(W) {}

    const WeylGroup& group() const { return W_; }

    static Elem basis(int w) { return Elem{{w, qConst(1)}}; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const QPoly& f) const;
    // right multiplication by T_{s_i}
    Elem mulTs(const Elem& a, int i) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem tsInverse(int i) const;

    // T_{w^{-1}}^{-1}, cached per w
    const Elem& invTwInverse(int w) const;

    // One place owns the bar/q-power bookkeeping of both defining
    // expansions; v = id recovers the plain R-polynomial.
    QPoly rFromExpansion(const Elem& expansion, int v, int u) const;

    // R_{u,w} by the descent recursion, memoized.
    const QPoly& rPoly(int u, int w) const;
    // R_{u,w} read off the expansion of T_{w^{-1}}^{-1}  (oracle route).
    QPoly rPolyDef(int u, int w) const;
    // Twisted R^{(v)}_{u,w} from the expansion of T_v T_{w^{-1}}^{-1}.
    QPoly twistedR(int u, int w, int v) const;

private:
    const WeylGroup& W_;
    mutable std::map<int, Elem> invCache_;
    mutable std::map<std::pair<int, int>, QPoly> rMemo_;
    mutable std::recursive_mutex mu_;

    const QPoly& rPolyLocked(int u, int w) const;
};

// R-polynomials for the extended affine Weyl group, inside bounded Bruhat
// intervals only; zero across different length-zero components.
class RPolyExt {
public:
    explicit RPolyExt(const ExtAffineCtx& E) : E_(E) {}

    const QPoly& rPoly(const ExtElem& u, const ExtElem& w) const;

private:
    const ExtAffineCtx& E_;
    mutable std::map<std::pair<std::vector<long long>, std::vector<long long>>, QPoly> memo_;
    mutable std::recursive_mutex mu_;

    const QPoly& rPolyLocked(const ExtElem& u, const ExtElem& w) const;

    std::vector<long long> key(const ExtElem& g) const {
        std::vector<long long> k{g.w};
        k.insert(k.end(), g.lam.begin(), g.lam.end());
        return k;
    }
};

}  // namespace mcloc

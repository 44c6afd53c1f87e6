#pragma once

#include <map>
#include <vector>

#include "mcloc/richardson.hpp"

namespace mcloc {

// Restrictions of affine SMC classes at a fixed point of the affine flag
// variety, computed by forward dynamic programming over the localized
// right Demazure-Lusztig recursion.  Characters are evaluated on the small
// torus (delta -> 0, alpha_0 = -theta).
struct AffineLocVector {
    ExtElem basepoint;
    std::map<ExtElem, RatFun> values;

    RatFun at(const ExtElem& f, int nvars) const {
        auto it = values.find(f);
        return it == values.end() ? RatFun(nvars) : it->second;
    }
};

class AffineLoc {
public:
    AffineLoc(const ExtAffineCtx& E, const LocCtx& L) : E_(E), L_(L) {}

    const ExtAffineCtx& ext() const { return E_; }
    const LocCtx& loc() const { return L_; }

    // delta vector at a length-zero basepoint
    AffineLocVector deltaVector(const ExtElem& omega) const;
    // one step of the right recursion: values at g s_j from values at g
    AffineLocVector stepRight(const AffineLocVector& vec, int aj) const;
    // SMC(Sigma^f)|_t for all f with nonzero restriction
    AffineLocVector vectorAt(const ExtElem& t) const;
    // same, along an explicit factorization (word-independence checks)
    AffineLocVector vectorAlong(long long omegaPow, const std::vector<int>& word) const;

    struct MainRow {
        int fixedPointRep;  // index in parabolic reps
        RatFun lhs, rhs;
        bool equal;
    };
    struct MainReport {
        int u, w;
        ExtElem f;
        bool pass;
        std::vector<MainRow> rows;
    };
    // Restriction comparison of the finite and affine sides over all torus
    // fixed points of the spherical cell; exact equality required.
    MainReport verifyMain(const Parabolic& P, int u, int w, bool parallel = true) const;

private:
    const ExtAffineCtx& E_;
    const LocCtx& L_;
};

}  // namespace mcloc

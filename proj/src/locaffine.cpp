#include "mcloc/locaffine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcloc {

AffineLocVector AffineLoc::deltaVector(const ExtElem& omega) const {
    if (E_.length(omega) != 0)
        throw std::invalid_argument("deltaVector: basepoint must have length 0");
    AffineLocVector v;
    v.basepoint = omega;
    v.values.emplace(omega, L_.one());
    return v;
}

AffineLocVector AffineLoc::stepRight(const AffineLocVector& vec, int aj) const {
    // (1 + y e^{-g a_j}) SMC(Sigma^f)|_{g s_j}
    //    = (1+y) SMC^f|_g + (1 - e^{-g a_j}) SMC^{f s_j}|_g          (f s_j < f)
    //    = (1+y) e^{-g a_j} SMC^f|_g - y (1 - e^{-g a_j}) SMC^{f s_j}|_g   (f s_j > f)
    const ExtElem& g = vec.basepoint;
    IVec mga = E_.smallTorusRoot(g, aj);
    for (auto& x : mga) x = -x;
    RatFun e = L_.eChar(mga);
    RatFun denom = L_.one() + L_.yVar() * e;
    RatFun oneMinus = L_.one() - e;
    RatFun onePlusY = L_.one() + L_.yVar();

    AffineLocVector out;
    out.basepoint = E_.rightMulSimple(g, aj);

    std::map<ExtElem, char> candidates;
    for (const auto& [f, val] : vec.values) {
        candidates.emplace(f, 0);
        candidates.emplace(E_.rightMulSimple(f, aj), 0);
    }
    int nv = L_.nvars();
    for (const auto& [f, tag] : candidates) {
        ExtElem fs = E_.rightMulSimple(f, aj);
        RatFun vf = vec.at(f, nv), vfs = vec.at(fs, nv);
        RatFun val;
        if (E_.length(fs) < E_.length(f))
            val = (onePlusY * vf + oneMinus * vfs) / denom;
        else
            val = (onePlusY * e * vf - L_.yVar() * oneMinus * vfs) / denom;
        if (!val.isZero()) out.values.emplace(f, std::move(val));
    }
    return out;
}

AffineLocVector AffineLoc::vectorAt(const ExtElem& t) const {
    auto fac = E_.reducedFactorization(t);
    return vectorAlong(fac.omegaPower, fac.word);
}

AffineLocVector AffineLoc::vectorAlong(long long omegaPow, const std::vector<int>& word) const {
    AffineLocVector v = deltaVector(E_.sigmaPow(omegaPow));
    for (int aj : word) v = stepRight(v, aj);
    return v;
}

AffineLoc::MainReport AffineLoc::verifyMain(const Parabolic& P, int u, int w,
                                            bool parallel) const {
    MainReport rep;
    rep.u = u;
    rep.w = w;
    rep.f = E_.makeF(u, w, P.lambda());
    int m = static_cast<int>(P.reps().size());
    rep.rows.resize(m);
    P.mcProjTable(u, w);  // fill the shared cache before the parallel sweep
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int k = 0; k < m; ++k) {
        int v = P.reps()[k];
        MainRow row;
        row.fixedPointRep = k;
        row.lhs = P.lhsMainRestrict(u, w, k);
        // RHS restricted at t_{v lambda} W pulls back to the affine fixed
        // point t_{v lambda}.
        std::vector<long long> vlam = E_.applyCochar(v, P.lambda());
        AffineLocVector vec = vectorAt(E_.translation(vlam));
        row.rhs = vec.at(rep.f, L_.nvars());
        row.equal = row.lhs == row.rhs;
        rep.rows[k] = std::move(row);
    }
    rep.pass = true;
    for (const auto& r : rep.rows) rep.pass = rep.pass && r.equal;
    return rep;
}

}  // namespace mcloc

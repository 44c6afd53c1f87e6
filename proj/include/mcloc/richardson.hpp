#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mcloc/extaffine.hpp"
#include "mcloc/locfinite.hpp"

namespace mcloc {

// A dominant cocharacter with its standard parabolic: W_P is the stabilizer,
// fixed points of G/P are the minimal coset representatives.  Restriction
// tables for open Richardson and open projected Richardson classes, the
// Lefschetz pushforward along G/B -> G/P, and the finite side of the
// comparison with the affine Schubert cells.
class Parabolic {
public:
    Parabolic(const LocCtx& L, std::vector<long long> lambda);

    const LocCtx& loc() const { return L_; }
    const WeylGroup& group() const { return W_; }
    const std::vector<long long>& lambda() const { return lam_; }
    uint32_t pMask() const { return pMask_; }
    const std::vector<int>& reps() const { return reps_; }
    int repPos(int w) const;      // position of the coset of w among reps
    int repPosExact(int w) const; // w must itself be a minimal rep

    // MC(R(u,w)^o)|_z = MC(X(w)^o)|_z * SMC(Y(u)^o)|_z over all z in W.
    std::vector<RatFun> mcRichardsonTable(int u, int w) const;
    // Lefschetz pushforward to G/P: (pi_* F)|_z = sum_{v in z W_P} F|_v / prod_{a in R_P^+}(1 - e^{v a}).
    std::vector<RatFun> pushforwardToP(const std::vector<RatFun>& table) const;

    const std::vector<RatFun>& mcProjTable(int u, int w) const;  // over reps
    RatFun lamYCotangentP(int z) const;  // prod_{a in R^+ \ R_P^+}(1 + y e^{z a})
    const RatFun::AtomProduct& lamYCotangentPAtoms(int z) const;
    RatFun lefschetzP(int v) const;      // prod_{a in R_P^+}(1 - e^{v a})
    const RatFun::AtomProduct& lefschetzPAtoms(int v) const;
    const RatFun::AtomProduct& normalLambdaYAtoms(int v) const;

    std::vector<RatFun> smcProjTable(int u, int w) const;
    RatFun smcProjRestrict(int u, int w, int repIdx) const;
    // Entry point by extended-affine index; NOT_IN_IMAGE when f is not of
    // the form u t_lambda w^{-1}.
    std::pair<int, int> splitOrThrow(const ExtAffineCtx& E, const ExtElem& f) const;

    // Normal-bundle data of G/P inside the spherical Schubert cell: at the
    // fixed point v the conormal weights are e^{v a} with multiplicity
    // <lambda, a> - 1 over the roots a > 0 with <lambda, a> > 0.
    RatFun normalLambdaMinus1(int v) const;
    RatFun normalLambdaY(int v) const;
    RatFun lhsMainRestrict(int u, int w, int repIdx) const;

    // left Weyl action on G/P tables
    std::vector<RatFun> siLP(const std::vector<RatFun>& t, int i) const;

private:
    const LocCtx& L_;
    const WeylGroup& W_;
    std::vector<long long> lam_;
    uint32_t pMask_ = 0;
    std::vector<int> reps_;
    std::vector<int> posOfRep_;  // W index -> rep position or -1
    std::vector<int> wpElems_;
    std::vector<IVec> posRootsP_;     // R_P^+
    std::vector<IVec> posRootsGP_;    // R^+ \ R_P^+
    mutable std::map<std::pair<int, int>, std::vector<RatFun>> mcProjCache_;
    mutable std::map<int, RatFun::AtomProduct> lefPAtoms_, lamPAtoms_, nrmAtoms_;
    mutable std::recursive_mutex mu_;
};

}  // namespace mcloc

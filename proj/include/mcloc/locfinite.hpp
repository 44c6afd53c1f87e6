#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mcloc/hecke.hpp"
#include "mcloc/ring.hpp"
#include "mcloc/subword.hpp"

namespace mcloc {

// Fixed-point localization on G/B under the pinned conventions:
//   - L_mu restricts at w to e^{w mu},
//   - tangent weights at wB are {w a : a < 0}, so the cotangent lambda_y
//     class at w is prod_{a>0}(1 + y e^{w a}),
//   - the structure sheaf of the point wB restricts to
//     prod_{a>0}(1 - e^{w a}) at w and to 0 elsewhere,
//   - the pairing of two classes is sum_z t1[z] t2[z] / prod(1 - e^{z a}).
// A "table" is the vector of restrictions of one class at all fixed points.
class LocCtx {
public:
    explicit LocCtx(const WeylGroup& W);

    const WeylGroup& group() const { return W_; }
    int nvars() const { return nv_; }
    const std::vector<std::string>& names() const { return names_; }

    RatFun zero() const { return RatFun(nv_); }
    RatFun one() const { return RatFun::fromInt(nv_, BigInt(1)); }
    RatFun constant(long long c) const { return RatFun::fromInt(nv_, BigInt(c)); }
    RatFun yVar() const { return RatFun::fromPoly(LaurentPoly::variable(nv_, yIdx_)); }
    RatFun eChar(const IVec& chi) const { return charEval(W_.datum(), chi); }

    RatFun lamYCotangent(int w) const;  // prod_{a>0}(1 + y e^{w a})
    RatFun lefschetzDen(int w) const;   // prod_{a>0}(1 - e^{w a})
    const RatFun::AtomProduct& lefschetzAtoms(int w) const;
    RatFun prefactor(int w) const;      // their quotient

    // Q[q] -> value ring at q = -y.
    RatFun qPolyAtMinusY(const QPoly& p) const;

    WeightScheme smcWeightScheme() const;

    // SMC(Y(u)^о)|_w; columns (fixed w, all u) are cached.
    const std::vector<RatFun>& smcColumn(int w) const;
    RatFun smc(int u, int w) const;
    void buildAllColumns(bool parallel = true) const;

    RatFun mcY(int u, int z) const;  // MC(Y(u)^о)|_z
    RatFun mcX(int w, int z) const;  // MC(X(w)^о)|_z

    std::vector<RatFun> smcTableY(int u) const;
    std::vector<RatFun> mcTableY(int u) const;
    std::vector<RatFun> mcTableX(int w) const;
    std::vector<RatFun> pointTable(int w) const;  // [O_{wB}] restrictions
    // dual classes via inversion of the unitriangular R(-y) matrix
    const std::vector<RatFun>& mcDualTableY(int u) const;

    RatFun wAct(int w, const RatFun& f) const;
    std::vector<RatFun> siL(const std::vector<RatFun>& t, int i) const;

    std::vector<RatFun> bgg(const std::vector<RatFun>& t, int i) const;
    std::vector<RatFun> dlRight(const std::vector<RatFun>& t, int i) const;
    std::vector<RatFun> dlRightDual(const std::vector<RatFun>& t, int i) const;
    std::vector<RatFun> dlLeft(const std::vector<RatFun>& t, int i) const;
    std::vector<RatFun> dlLeftDual(const std::vector<RatFun>& t, int i) const;
    // T_v as a composite in the convention T_{uv} = T_u T_v (the last
    // letter of the word acts first).
    std::vector<RatFun> dlRightDualWord(std::vector<RatFun> t, const std::vector<int>& word) const;

    RatFun pairing(const std::vector<RatFun>& a, const std::vector<RatFun>& b) const;

    const HeckeFinite& hecke() const { return hecke_; }

    // AJS-Billey localization: values in Z[a1..ar], the polynomial ring on
    // the simple roots.
    WeightScheme ajsWeightScheme() const;
    RatFun ajsBilley(int u, int w) const;     // subword-sum route
    RatFun ajsBilleyRec(int u, int w) const;  // recursion (DP) route
    std::vector<std::string> ajsNames() const;

    LimitResult limitToRPoly(int u, int w) const;
    LimitResult limitToTwisted(int u, int v, int w) const;

private:
    const WeylGroup& W_;
    int nv_, yIdx_;
    std::vector<std::string> names_;
    HeckeFinite hecke_;
    mutable std::map<int, std::vector<RatFun>> columns_;
    mutable std::map<int, std::vector<RatFun>> duals_;
    mutable std::map<int, RatFun::AtomProduct> lefAtoms_;
    mutable std::mutex mu_;
};

}  // namespace mcloc

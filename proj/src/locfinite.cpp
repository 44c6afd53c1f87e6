#include "mcloc/locfinite.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcloc {

LocCtx::LocCtx(const WeylGroup& W)
    : W_(W), nv_(valueRingVars(W.datum())), yIdx_(yIndex(W.datum())),
      names_(valueRingNames(W.datum())), hecke_(W) {}

RatFun LocCtx::lamYCotangent(int w) const {
    RatFun acc = one();
    for (const auto& a : W_.datum().posRoots)
        acc *= one() + yVar() * eChar(W_.applyToChar(w, a));
    return acc;
}

RatFun LocCtx::lefschetzDen(int w) const {
    RatFun acc = one();
    for (const auto& a : W_.datum().posRoots)
        acc *= one() - eChar(W_.applyToChar(w, a));
    return acc;
}

const RatFun::AtomProduct& LocCtx::lefschetzAtoms(int w) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = lefAtoms_.find(w);
    if (it != lefAtoms_.end()) return it->second;
    RatFun::AtomProduct p(nv_);
    for (const auto& a : W_.datum().posRoots)
        p.mulAtom(one() - eChar(W_.applyToChar(w, a)));
    return lefAtoms_.emplace(w, std::move(p)).first->second;
}

RatFun LocCtx::prefactor(int w) const {
    return lamYCotangent(w).divByAtomProduct(lefschetzAtoms(w));
}

RatFun LocCtx::qPolyAtMinusY(const QPoly& p) const {
    LaurentPoly out(nv_);
    for (const auto& [e, c] : p.terms) {
        Expo e2(nv_, 0);
        e2[yIdx_] = e[0];
        BigInt k = c;
        if (e[0] & 1) k = -k;
        out.addTerm(e2, k);
    }
    return RatFun::fromPoly(out);
}

WeightScheme LocCtx::smcWeightScheme() const {
    WeightScheme s;
    s.nvars = nv_;
    s.name = "SMC";
    s.requiresReducedWord = false;
    RatFun y = yVar(), one_ = one();
    auto eOf = [this](const IVec& b) { return eChar(b); };
    s.p11 = [eOf, y, one_](const IVec& b) {
        RatFun e = eOf(b);
        return (one_ + y) * e / (e + y);
    };
    s.p12 = [eOf, y, one_](const IVec& b) {
        RatFun e = eOf(b);
        return (e - one_) / (e + y);
    };
    s.p21 = [eOf, y, one_](const IVec& b) {
        RatFun e = eOf(b);
        return (one_ + y) / (e + y);
    };
    s.p22 = [eOf, y, one_](const IVec& b) {
        RatFun e = eOf(b);
        return -y * (e - one_) / (e + y);
    };
    return s;
}

const std::vector<RatFun>& LocCtx::smcColumn(int w) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = columns_.find(w);
        if (it != columns_.end()) return it->second;
    }
    std::vector<RatFun> col = subwordSumDPAll(W_, W_.word(w), smcWeightScheme());
    std::lock_guard<std::mutex> lk(mu_);
    return columns_.emplace(w, std::move(col)).first->second;
}

RatFun LocCtx::smc(int u, int w) const { return smcColumn(w)[u]; }

void LocCtx::buildAllColumns(bool parallel) const {
    int N = W_.size();
    std::vector<std::vector<RatFun>> cols(N);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int w = 0; w < N; ++w) cols[w] = subwordSumDPAll(W_, W_.word(w), smcWeightScheme());
    std::lock_guard<std::mutex> lk(mu_);
    for (int w = 0; w < N; ++w)
        if (!columns_.count(w)) columns_.emplace(w, std::move(cols[w]));
}

RatFun LocCtx::mcY(int u, int z) const { return smc(u, z) * lamYCotangent(z); }

RatFun LocCtx::mcX(int w, int z) const {
    // w0^L(MC(Y(w)^о)) = MC(X(w0 w)^о), localized:
    // MC(X(w)^о)|_z = w0( MC(Y(w0 w)^о)|_{w0 z} )
    int w0 = W_.w0();
    return wAct(w0, mcY(W_.mult(w0, w), W_.mult(w0, z)));
}

std::vector<RatFun> LocCtx::smcTableY(int u) const {
    std::vector<RatFun> t(W_.size());
    for (int z = 0; z < W_.size(); ++z) t[z] = smc(u, z);
    return t;
}

std::vector<RatFun> LocCtx::mcTableY(int u) const {
    std::vector<RatFun> t(W_.size());
    for (int z = 0; z < W_.size(); ++z) t[z] = mcY(u, z);
    return t;
}

std::vector<RatFun> LocCtx::mcTableX(int w) const {
    std::vector<RatFun> t(W_.size());
    for (int z = 0; z < W_.size(); ++z) t[z] = mcX(w, z);
    return t;
}

std::vector<RatFun> LocCtx::pointTable(int w) const {
    std::vector<RatFun> t(W_.size(), zero());
    t[w] = lefschetzDen(w);
    return t;
}

const std::vector<RatFun>& LocCtx::mcDualTableY(int u) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = duals_.find(u);
        if (it != duals_.end()) return it->second;
    }
    // Invert the unitriangular system
    //   SMC(Y(w)^o) = sum_{u >= w} R_{w,u}(-y) MCdual(Y(u)^o)
    // downward in length from w0.
    std::vector<int> byLenDesc(W_.size());
    for (int i = 0; i < W_.size(); ++i) byLenDesc[i] = i;
    std::sort(byLenDesc.begin(), byLenDesc.end(),
              [&](int a, int b) { return W_.length(a) > W_.length(b); });
    std::map<int, std::vector<RatFun>> solved;
    for (int w : byLenDesc) {
        std::vector<RatFun> t = smcTableY(w);
        for (int x : byLenDesc) {
            if (x == w || !W_.bruhatLeq(w, x)) continue;
            RatFun coef = qPolyAtMinusY(hecke_.rPoly(w, x));
            const std::vector<RatFun>& dx = solved.at(x);
            for (int z = 0; z < W_.size(); ++z)
                if (!dx[z].isZero()) t[z] -= coef * dx[z];
        }
        solved.emplace(w, std::move(t));
    }
    std::lock_guard<std::mutex> lk(mu_);
    for (auto& [k, v] : solved)
        if (!duals_.count(k)) duals_.emplace(k, std::move(v));
    return duals_.at(u);
}

RatFun LocCtx::wAct(int w, const RatFun& f) const {
    std::vector<int> vars(W_.datum().charRank);
    for (size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<int>(i);
    return f.applyLinearOnVars(vars, W_.matrix(w));
}

std::vector<RatFun> LocCtx::siL(const std::vector<RatFun>& t, int i) const {
    // s_i^L(gamma)|_z = s_i(gamma|_{s_i z})
    std::vector<RatFun> r(W_.size());
    int si = W_.leftMul(i, W_.id());
    for (int z = 0; z < W_.size(); ++z) r[z] = wAct(si, t[W_.leftMul(i, z)]);
    return r;
}

std::vector<RatFun> LocCtx::bgg(const std::vector<RatFun>& t, int i) const {
    // (pi_i^* pi_{i*} gamma)|_w = (gamma|_w - e^{w a_i} gamma|_{w s_i}) / (1 - e^{w a_i})
    std::vector<RatFun> r(W_.size());
    for (int w = 0; w < W_.size(); ++w) {
        RatFun e = eChar(W_.applyToChar(w, W_.datum().simpleRoots[i]));
        r[w] = (t[w] - e * t[W_.rightMul(w, i)]) / (one() - e);
    }
    return r;
}

std::vector<RatFun> LocCtx::dlRight(const std::vector<RatFun>& t, int i) const {
    // (id + y L_{a_i}) pi* pi_* - id
    std::vector<RatFun> b = bgg(t, i), r(W_.size());
    for (int w = 0; w < W_.size(); ++w) {
        RatFun e = eChar(W_.applyToChar(w, W_.datum().simpleRoots[i]));
        r[w] = (one() + yVar() * e) * b[w] - t[w];
    }
    return r;
}

std::vector<RatFun> LocCtx::dlRightDual(const std::vector<RatFun>& t, int i) const {
    // pi* pi_* (id + y L_{a_i}) - id
    std::vector<RatFun> twisted(W_.size());
    for (int w = 0; w < W_.size(); ++w) {
        RatFun e = eChar(W_.applyToChar(w, W_.datum().simpleRoots[i]));
        twisted[w] = (one() + yVar() * e) * t[w];
    }
    std::vector<RatFun> b = bgg(twisted, i);
    for (int w = 0; w < W_.size(); ++w) b[w] -= t[w];
    return b;
}

std::vector<RatFun> LocCtx::dlLeft(const std::vector<RatFun>& t, int i) const {
    // (1 + y e^{-a_i})/(1 - e^{-a_i}) s_i^L - (1+y)/(1 - e^{-a_i})
    IVec ma = W_.datum().simpleRoots[i];
    for (auto& x : ma) x = -x;
    RatFun em = eChar(ma);
    RatFun c1 = (one() + yVar() * em) / (one() - em);
    RatFun c2 = (one() + yVar()) / (one() - em);
    std::vector<RatFun> s = siL(t, i), r(W_.size());
    for (int w = 0; w < W_.size(); ++w) r[w] = c1 * s[w] - c2 * t[w];
    return r;
}

std::vector<RatFun> LocCtx::dlLeftDual(const std::vector<RatFun>& t, int i) const {
    RatFun ep = eChar(W_.datum().simpleRoots[i]);
    RatFun c1 = (one() + yVar() * ep) / (one() - ep);
    RatFun c2 = (one() + yVar()) / (one() - ep);
    std::vector<RatFun> s = siL(t, i), r(W_.size());
    for (int w = 0; w < W_.size(); ++w) r[w] = c1 * s[w] - c2 * t[w];
    return r;
}

std::vector<RatFun> LocCtx::dlRightDualWord(std::vector<RatFun> t,
                                            const std::vector<int>& word) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = dlRightDual(t, *it);
    return t;
}

RatFun LocCtx::pairing(const std::vector<RatFun>& a, const std::vector<RatFun>& b) const {
    RatFun acc = zero();
    for (int z = 0; z < W_.size(); ++z) {
        if (a[z].isZero() || b[z].isZero()) continue;
        acc += (a[z] * b[z]).divByAtomProduct(lefschetzAtoms(z));
    }
    return acc;
}

std::vector<std::string> LocCtx::ajsNames() const {
    std::vector<std::string> n;
    for (int i = 1; i <= W_.rank(); ++i) n.push_back("a" + std::to_string(i));
    return n;
}

WeightScheme LocCtx::ajsWeightScheme() const {
    WeightScheme s;
    int r = W_.rank();
    s.nvars = r;
    s.name = "AJS-Billey";
    s.requiresReducedWord = true;
    const RootDatum* d = &W_.datum();
    auto one_ = RatFun::fromInt(r, BigInt(1));
    s.p11 = [one_](const IVec&) { return one_; };
    s.p21 = [one_](const IVec&) { return one_; };
    s.p22 = [r](const IVec&) { return RatFun(r); };
    s.p12 = [d, r](const IVec& beta) {
        IVec c = d->alphaCoords(beta);
        LaurentPoly p(r);
        for (int i = 0; i < r; ++i)
            if (c[i]) p.addTerm(LaurentPoly::variable(r, i).terms.begin()->first, BigInt(c[i]));
        return RatFun::fromPoly(p);
    };
    return s;
}

RatFun LocCtx::ajsBilley(int u, int w) const {
    return subwordSum(W_, W_.word(w), u, ajsWeightScheme());
}

RatFun LocCtx::ajsBilleyRec(int u, int w) const {
    return subwordSumDP(W_, W_.word(w), u, ajsWeightScheme());
}

LimitResult LocCtx::limitToRPoly(int u, int w) const {
    return limitAtChamber(W_, prefactor(w) * smc(u, w), W_.id());
}

LimitResult LocCtx::limitToTwisted(int u, int v, int w) const {
    return limitAtChamber(W_, prefactor(w) * smc(u, w), v);
}

}  // namespace mcloc

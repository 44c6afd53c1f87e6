#include "mcloc/richardson.hpp"

namespace mcloc {

Parabolic::Parabolic(const LocCtx& L, std::vector<long long> lambda)
    : L_(L), W_(L.group()), lam_(std::move(lambda)) {
    const RootDatum& d = W_.datum();
    if (static_cast<int>(lam_.size()) != d.charRank)
        throw std::invalid_argument("Parabolic: cocharacter rank mismatch");
    for (int i = 0; i < d.rank; ++i) {
        long long p = d.pairing(lam_, d.simpleRoots[i]);
        if (p < 0) throw std::invalid_argument("Parabolic: cocharacter is not dominant");
        if (p == 0) pMask_ |= 1u << i;
    }
    reps_ = W_.minimalCosetReps(pMask_);
    posOfRep_.assign(W_.size(), -1);
    for (size_t k = 0; k < reps_.size(); ++k) posOfRep_[reps_[k]] = static_cast<int>(k);
    wpElems_ = W_.parabolicElements(pMask_);
    // the stabilizer of lambda must be exactly W_P
    for (int w = 0; w < W_.size(); ++w) {
        bool fixes = true;
        for (const auto& a : d.posRoots) {
            // w lambda = lambda iff <lambda, w^{-1} chi> = <lambda, chi> for all chi
            if (d.pairing(lam_, W_.applyToChar(W_.inverse(w), a)) != d.pairing(lam_, a)) {
                fixes = false;
                break;
            }
        }
        bool inP = std::find(wpElems_.begin(), wpElems_.end(), w) != wpElems_.end();
        if (fixes != inP) throw std::logic_error("Parabolic: stabilizer is not W_P");
    }
    for (const auto& a : d.posRoots) {
        bool inP = true;
        IVec c = d.alphaCoords(a);
        for (int i = 0; i < d.rank; ++i)
            if (c[i] != 0 && !((pMask_ >> i) & 1u)) {
                inP = false;
                break;
            }
        (inP ? posRootsP_ : posRootsGP_).push_back(a);
    }
}

int Parabolic::repPos(int w) const { return posOfRep_[W_.cosetMinRep(w, pMask_)]; }

int Parabolic::repPosExact(int w) const {
    int p = posOfRep_[w];
    if (p < 0) throw std::invalid_argument("Parabolic: not a minimal representative");
    return p;
}

std::vector<RatFun> Parabolic::mcRichardsonTable(int u, int w) const {
    std::vector<RatFun> t(W_.size());
    for (int z = 0; z < W_.size(); ++z) t[z] = L_.mcX(w, z) * L_.smc(u, z);
    return t;
}

RatFun Parabolic::lefschetzP(int v) const {
    RatFun acc = L_.one();
    for (const auto& a : posRootsP_) acc *= L_.one() - L_.eChar(W_.applyToChar(v, a));
    return acc;
}

const RatFun::AtomProduct& Parabolic::lefschetzPAtoms(int v) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = lefPAtoms_.find(v);
    if (it != lefPAtoms_.end()) return it->second;
    RatFun::AtomProduct p(L_.nvars());
    for (const auto& a : posRootsP_) p.mulAtom(L_.one() - L_.eChar(W_.applyToChar(v, a)));
    return lefPAtoms_.emplace(v, std::move(p)).first->second;
}

const RatFun::AtomProduct& Parabolic::lamYCotangentPAtoms(int z) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = lamPAtoms_.find(z);
    if (it != lamPAtoms_.end()) return it->second;
    RatFun::AtomProduct p(L_.nvars());
    for (const auto& a : posRootsGP_)
        p.mulAtom(L_.one() + L_.yVar() * L_.eChar(W_.applyToChar(z, a)));
    return lamPAtoms_.emplace(z, std::move(p)).first->second;
}

const RatFun::AtomProduct& Parabolic::normalLambdaYAtoms(int v) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = nrmAtoms_.find(v);
    if (it != nrmAtoms_.end()) return it->second;
    const RootDatum& d = W_.datum();
    RatFun::AtomProduct p(L_.nvars());
    for (const auto& a : d.posRoots) {
        long long m = d.pairing(lam_, a);
        for (long long r = 1; r < m; ++r)
            p.mulAtom(L_.one() + L_.yVar() * L_.eChar(W_.applyToChar(v, a)));
    }
    return nrmAtoms_.emplace(v, std::move(p)).first->second;
}

RatFun Parabolic::lamYCotangentP(int z) const {
    RatFun acc = L_.one();
    for (const auto& a : posRootsGP_)
        acc *= L_.one() + L_.yVar() * L_.eChar(W_.applyToChar(z, a));
    return acc;
}

std::vector<RatFun> Parabolic::pushforwardToP(const std::vector<RatFun>& table) const {
    std::vector<RatFun> out(reps_.size(), L_.zero());
    for (size_t k = 0; k < reps_.size(); ++k) {
        for (int p : wpElems_) {
            int v = W_.mult(reps_[k], p);
            if (table[v].isZero()) continue;
            out[k] += table[v].divByAtomProduct(lefschetzPAtoms(v));
        }
    }
    return out;
}

const std::vector<RatFun>& Parabolic::mcProjTable(int u, int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto key = std::make_pair(u, w);
    auto it = mcProjCache_.find(key);
    if (it != mcProjCache_.end()) return it->second;
    auto t = pushforwardToP(mcRichardsonTable(u, w));
    return mcProjCache_.emplace(key, std::move(t)).first->second;
}

std::vector<RatFun> Parabolic::smcProjTable(int u, int w) const {
    std::vector<RatFun> t = mcProjTable(u, w);
    for (size_t k = 0; k < reps_.size(); ++k)
        t[k] = t[k].divByAtomProduct(lamYCotangentPAtoms(reps_[k]));
    return t;
}

RatFun Parabolic::smcProjRestrict(int u, int w, int repIdx) const {
    return mcProjTable(u, w)[repIdx].divByAtomProduct(lamYCotangentPAtoms(reps_[repIdx]));
}

std::pair<int, int> Parabolic::splitOrThrow(const ExtAffineCtx& E, const ExtElem& f) const {
    auto s = E.splitF(f, lam_, reps_);
    if (!s) throw std::invalid_argument("NOT_IN_IMAGE: element is not u t_lambda w^{-1}");
    return *s;
}

RatFun Parabolic::normalLambdaMinus1(int v) const {
    const RootDatum& d = W_.datum();
    RatFun acc = L_.one();
    for (const auto& a : d.posRoots) {
        long long m = d.pairing(lam_, a);
        if (m <= 1) continue;
        RatFun f = L_.one() - L_.eChar(W_.applyToChar(v, a));
        acc *= f.pow(static_cast<int>(m - 1));
    }
    return acc;
}

RatFun Parabolic::normalLambdaY(int v) const {
    const RootDatum& d = W_.datum();
    RatFun acc = L_.one();
    for (const auto& a : d.posRoots) {
        long long m = d.pairing(lam_, a);
        if (m <= 1) continue;
        RatFun f = L_.one() + L_.yVar() * L_.eChar(W_.applyToChar(v, a));
        acc *= f.pow(static_cast<int>(m - 1));
    }
    return acc;
}

RatFun Parabolic::lhsMainRestrict(int u, int w, int repIdx) const {
    // closed-embedding restriction: (i_* g)|_p = g|_p * lambda_{-1}(N*_p)
    int v = reps_[repIdx];
    return (smcProjRestrict(u, w, repIdx) * normalLambdaMinus1(v))
        .divByAtomProduct(normalLambdaYAtoms(v));
}

std::vector<RatFun> Parabolic::siLP(const std::vector<RatFun>& t, int i) const {
    std::vector<RatFun> r(reps_.size());
    int si = W_.leftMul(i, W_.id());
    for (size_t k = 0; k < reps_.size(); ++k) {
        int z = W_.leftMul(i, reps_[k]);
        r[k] = L_.wAct(si, t[repPos(z)]);
    }
    return r;
}

}  // namespace mcloc

#include "mcloc/extaffine.hpp"

#include <algorithm>
#include <numeric>

namespace mcloc {

ExtAffineCtx::ExtAffineCtx(const WeylGroup& W) : W_(W), n_(W.datum().charRank) {
    if (W.datum().kind != RootDatum::Kind::GL)
        throw std::invalid_argument("ExtAffineCtx: requires a GL(n) root datum");
    perm_.resize(W.size());
    for (int w = 0; w < W.size(); ++w) {
        perm_[w].assign(n_, 0);
        const IMat& m = W.matrix(w);
        for (int j = 0; j < n_; ++j) {
            for (int i = 0; i < n_; ++i)
                if (m[i][j] == 1) {
                    perm_[w][j] = i;
                    break;
                }
        }
    }
    theta_.assign(n_, 0);
    theta_[0] = 1;
    theta_[n_ - 1] = -1;
    thetaCo_.assign(n_, 0);
    thetaCo_[0] = 1;
    thetaCo_[n_ - 1] = -1;
    IMat m = matIdentity(n_);
    std::swap(m[0], m[n_ - 1]);
    sTheta_ = W.indexOfMatrix(m);
}

std::vector<long long> ExtAffineCtx::applyCochar(int w, const std::vector<long long>& lam) const {
    std::vector<long long> r(n_);
    for (int j = 0; j < n_; ++j) r[perm_[w][j]] = lam[j];
    return r;
}

ExtElem ExtAffineCtx::mul(const ExtElem& a, const ExtElem& b) const {
    // (w t_lam)(v t_mu) = wv t_{v^{-1} lam + mu}
    ExtElem r;
    r.w = W_.mult(a.w, b.w);
    r.lam = applyCochar(W_.inverse(b.w), a.lam);
    for (int i = 0; i < n_; ++i) r.lam[i] += b.lam[i];
    return r;
}

ExtElem ExtAffineCtx::inv(const ExtElem& a) const {
    ExtElem r;
    r.w = W_.inverse(a.w);
    r.lam = applyCochar(a.w, a.lam);
    for (auto& x : r.lam) x = -x;
    return r;
}

long long ExtAffineCtx::length(const ExtElem& g) const {
    // l(w t_lam) = sum_{a>0, wa>0} |<a,lam>| + sum_{a>0, wa<0} |<a,lam>+1|
    long long len = 0;
    const RootDatum& d = W_.datum();
    for (const auto& alpha : d.posRoots) {
        long long p = d.pairing(g.lam, alpha);
        if (d.isPositive(W_.applyToChar(g.w, alpha)))
            len += std::llabs(p);
        else
            len += std::llabs(p + 1);
    }
    return len;
}

ExtElem ExtAffineCtx::simpleElem(int aj) const {
    if (aj == 0) {
        // s_0 = t_{theta^vee} s_theta = s_theta t_{-theta^vee}
        ExtElem r;
        r.w = sTheta_;
        r.lam = thetaCo_;
        for (auto& x : r.lam) x = -x;
        return r;
    }
    return finiteElem(W_.leftMul(aj - 1, W_.id()));
}

AffineRoot ExtAffineCtx::affineSimpleRoot(int aj) const {
    AffineRoot r;
    if (aj == 0) {
        r.finite = theta_;
        for (auto& x : r.finite) x = -x;
        r.level = 1;
    } else {
        r.finite = W_.datum().simpleRoots[aj - 1];
        r.level = 0;
    }
    return r;
}

AffineRoot ExtAffineCtx::actOnAffineRoot(const ExtElem& g, const AffineRoot& r) const {
    // w t_lam (mu + k delta) = w(mu) + (k - <lam, mu>) delta
    AffineRoot out;
    out.finite = W_.applyToChar(g.w, r.finite);
    out.level = r.level - W_.datum().pairing(g.lam, r.finite);
    return out;
}

bool ExtAffineCtx::affineRootPositive(const RootDatum& d, const AffineRoot& r) {
    if (d.isPositive(r.finite)) return r.level >= 0;
    return r.level >= 1;
}

bool ExtAffineCtx::rightDescent(const ExtElem& g, int aj) const {
    return !affineRootPositive(W_.datum(), actOnAffineRoot(g, affineSimpleRoot(aj)));
}

bool ExtAffineCtx::leftDescent(const ExtElem& g, int aj) const {
    return !affineRootPositive(W_.datum(), actOnAffineRoot(inv(g), affineSimpleRoot(aj)));
}

IVec ExtAffineCtx::smallTorusRoot(const ExtElem& g, int aj) const {
    return actOnAffineRoot(g, affineSimpleRoot(aj)).finite;
}

long long ExtAffineCtx::omegaIndex(const ExtElem& g) const {
    return std::accumulate(g.lam.begin(), g.lam.end(), 0LL);
}

ExtElem ExtAffineCtx::sigmaPow(long long m) const {
    // sigma: window [2, 3, ..., n, n+1]
    ExtElem sigma;
    IMat c(n_, IVec(n_, 0));
    for (int j = 0; j < n_; ++j) c[(j + 1) % n_][j] = 1;
    sigma.w = W_.indexOfMatrix(c);
    sigma.lam.assign(n_, 0);
    sigma.lam[n_ - 1] = 1;
    ExtElem r = identity();
    ExtElem step = m >= 0 ? sigma : inv(sigma);
    for (long long i = 0; i < std::llabs(m); ++i) r = mul(r, step);
    return r;
}

ExtAffineCtx::Factorization ExtAffineCtx::reducedFactorization(const ExtElem& g) const {
    Factorization f;
    f.omegaPower = omegaIndex(g);
    ExtElem a = mul(sigmaPow(-f.omegaPower), g);
    if (omegaIndex(a) != 0) throw std::logic_error("reducedFactorization: omega part");
    long long len = length(a);
    while (len > 0) {
        int pick = -1;
        for (int aj = 0; aj < n_; ++aj)
            if (leftDescent(a, aj)) {
                pick = aj;
                break;
            }
        if (pick < 0) throw std::logic_error("reducedFactorization: no descent");
        f.word.push_back(pick);
        a = leftMulSimple(pick, a);
        --len;
    }
    if (!(a == identity())) throw std::logic_error("reducedFactorization: residue not id");
    return f;
}

ExtElem ExtAffineCtx::fromFactorization(const Factorization& f) const {
    ExtElem g = sigmaPow(f.omegaPower);
    for (int aj : f.word) g = rightMulSimple(g, aj);
    return g;
}

bool ExtAffineCtx::bruhatLeq(const ExtElem& f, const ExtElem& g) const {
    std::lock_guard<std::recursive_mutex> lk(bruhatMu_);
    return bruhatLeqLocked(f, g);
}

bool ExtAffineCtx::bruhatLeqLocked(const ExtElem& f, const ExtElem& g) const {
    if (omegaIndex(f) != omegaIndex(g)) return false;
    if (f == g) return true;
    if (length(f) >= length(g)) return false;
    auto k = std::make_pair(key(f), key(g));
    auto it = bruhatMemo_.find(k);
    if (it != bruhatMemo_.end()) return it->second;
    int pick = -1;
    for (int aj = 0; aj < n_; ++aj)
        if (leftDescent(g, aj)) {
            pick = aj;
            break;
        }
    ExtElem sg = leftMulSimple(pick, g);
    bool res = leftDescent(f, pick) ? bruhatLeqLocked(leftMulSimple(pick, f), sg)
                                    : bruhatLeqLocked(f, sg);
    bruhatMemo_.emplace(std::move(k), res);
    return res;
}

ExtElem ExtAffineCtx::makeF(int u, int w, const std::vector<long long>& lam) const {
    requireRank(lam);
    ExtElem r = mul(finiteElem(u), translation(lam));
    return mul(r, finiteElem(W_.inverse(w)));
}

std::optional<std::pair<int, int>> ExtAffineCtx::splitF(const ExtElem& f,
                                                        const std::vector<long long>& lam,
                                                        const std::vector<int>& wpReps) const {
    for (int w : wpReps) {
        ExtElem cand = mul(mul(f, finiteElem(w)), translation([&] {
                               auto neg = lam;
                               for (auto& x : neg) x = -x;
                               return neg;
                           }()));
        bool isFinite = true;
        for (auto x : cand.lam)
            if (x != 0) {
                isFinite = false;
                break;
            }
        if (isFinite) return std::make_pair(cand.w, w);
    }
    return std::nullopt;
}

std::vector<long long> ExtAffineCtx::window(const ExtElem& g) const {
    std::vector<long long> win(n_);
    for (int j = 0; j < n_; ++j) win[j] = perm_[g.w][j] + 1 + static_cast<long long>(n_) * g.lam[j];
    return win;
}

ExtElem ExtAffineCtx::fromWindow(const std::vector<long long>& win) const {
    if (static_cast<int>(win.size()) != n_)
        throw std::invalid_argument("fromWindow: length mismatch");
    ExtElem g;
    g.lam.assign(n_, 0);
    IMat m(n_, IVec(n_, 0));
    std::vector<bool> seen(n_, false);
    for (int j = 0; j < n_; ++j) {
        long long q = win[j] - 1;
        long long lam = q >= 0 ? q / n_ : -((-q + n_ - 1) / n_);
        int res = static_cast<int>(q - lam * n_);
        if (seen[res]) throw std::invalid_argument("fromWindow: residues collide");
        seen[res] = true;
        g.lam[j] = lam;
        m[res][j] = 1;
    }
    g.w = W_.indexOfMatrix(m);
    return g;
}

std::vector<std::vector<long long>> ExtAffineCtx::boundedWindows(int n, int k) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> win(n);
    std::vector<bool> used(n, false);
    long long target = static_cast<long long>(n) * k;
    std::function<void(int, long long)> rec = [&](int i, long long sum) {
        if (i == n) {
            if (sum == target) out.push_back(win);
            return;
        }
        for (long long f = i + 1; f <= i + 1 + n; ++f) {
            int res = static_cast<int>((f - 1) % n);
            if (used[res]) continue;
            long long s2 = sum + f - (i + 1);
            if (s2 > target) continue;
            used[res] = true;
            win[i] = f;
            rec(i + 1, s2);
            used[res] = false;
        }
    };
    rec(0, 0);
    return out;
}

std::string ExtAffineCtx::toString(const ExtElem& g) const {
    std::string s = "(" + W_.elemToString(g.w) + ", [";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(g.lam[i]);
    }
    s += "])";
    return s;
}

}  // namespace mcloc

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "mcloc/rootdata.hpp"

namespace mcloc {

// Element w * t_lambda of the extended affine Weyl group W ext = W x X_*(T),
// stored as the pair (finite part, translation).
struct ExtElem {
    int w = 0;
    std::vector<long long> lam;

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        return a.w == b.w && a.lam == b.lam;
    }
    friend bool operator<(const ExtElem& a, const ExtElem& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.lam < b.lam;
    }
};

struct AffineRoot {
    IVec finite;  // character coordinates
    long long level = 0;
};

// Operations in W ext over a GL(n) root datum: multiplication, the closed
// length formula, descents via the affine-root action, reduced
// factorization through the length-zero subgroup, the indexing map
// u t_lambda w^{-1}, and window (affine permutation) views.
class ExtAffineCtx {
public:
    explicit ExtAffineCtx(const WeylGroup& W);

    const WeylGroup& finiteGroup() const { return W_; }
    int n() const { return n_; }

    ExtElem identity() const { return ExtElem{W_.id(), std::vector<long long>(n_, 0)}; }
    ExtElem translation(std::vector<long long> lam) const {
        requireRank(lam);
        return ExtElem{W_.id(), std::move(lam)};
    }
    ExtElem finiteElem(int w) const { return ExtElem{w, std::vector<long long>(n_, 0)}; }

    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem inv(const ExtElem& a) const;

    long long length(const ExtElem& g) const;

    int affineRank() const { return n_; }  // simple reflections s_0..s_{n-1}
    ExtElem simpleElem(int aj) const;
    AffineRoot affineSimpleRoot(int aj) const;
    AffineRoot actOnAffineRoot(const ExtElem& g, const AffineRoot& r) const;
    static bool affineRootPositive(const RootDatum& d, const AffineRoot& r);

    ExtElem leftMulSimple(int aj, const ExtElem& g) const { return mul(simpleElem(aj), g); }
    ExtElem rightMulSimple(const ExtElem& g, int aj) const { return mul(g, simpleElem(aj)); }
    bool rightDescent(const ExtElem& g, int aj) const;
    bool leftDescent(const ExtElem& g, int aj) const;

    // Character of g(alpha_aj) on the small torus (delta projected to 0).
    IVec smallTorusRoot(const ExtElem& g, int aj) const;

    long long omegaIndex(const ExtElem& g) const;
    ExtElem sigmaPow(long long m) const;

    struct Factorization {
        long long omegaPower = 0;
        std::vector<int> word;  // affine letters; g = sigma^m * prod word
    };
    Factorization reducedFactorization(const ExtElem& g) const;
    ExtElem fromFactorization(const Factorization& f) const;

    bool bruhatLeq(const ExtElem& f, const ExtElem& g) const;

    ExtElem makeF(int u, int w, const std::vector<long long>& lam) const;
    // Inverse of makeF over the given minimal coset representatives;
    // nullopt when f is not of the form u t_lambda w^{-1} (NOT_IN_IMAGE).
    std::optional<std::pair<int, int>> splitF(const ExtElem& f, const std::vector<long long>& lam,
                                              const std::vector<int>& wpReps) const;

    std::vector<long long> window(const ExtElem& g) const;
    ExtElem fromWindow(const std::vector<long long>& win) const;
    static std::vector<std::vector<long long>> boundedWindows(int n, int k);

    std::string toString(const ExtElem& g) const;

    std::vector<long long> applyCochar(int w, const std::vector<long long>& lam) const;

private:
    const WeylGroup& W_;
    int n_;
    std::vector<std::vector<int>> perm_;  // perm_[w][j] = image of j
    int sTheta_;
    IVec theta_;
    std::vector<long long> thetaCo_;
    mutable std::map<std::pair<std::vector<long long>, std::vector<long long>>, bool> bruhatMemo_;
    mutable std::recursive_mutex bruhatMu_;

    bool bruhatLeqLocked(const ExtElem& f, const ExtElem& g) const;

    void requireRank(const std::vector<long long>& lam) const {
        if (static_cast<int>(lam.size()) != n_)
            throw std::invalid_argument("ExtAffineCtx: translation rank mismatch");
    }
    std::vector<long long> key(const ExtElem& g) const {
        std::vector<long long> k{g.w};
        k.insert(k.end(), g.lam.begin(), g.lam.end());
        return k;
    }
};

}  // namespace mcloc

#include "mcloc/subword.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcloc {

SubwordClass classifySubword(const WeylGroup& W, const std::vector<int>& word,
                             const std::vector<bool>& mask, int v) {
    if (mask.size() != word.size())
        throw std::invalid_argument("classifySubword: mask length mismatch");
    SubwordClass c;
    int p = W.id();
    for (size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        bool descent = W.rightDescent(W.mult(v, p), i);
        int pos = static_cast<int>(k) + 1;
        if (mask[k]) {
            (descent ? c.Jminus : c.Jplus).push_back(pos);
            p = W.rightMul(p, i);
        } else {
            (descent ? c.Eminus : c.Eplus).push_back(pos);
        }
    }
    return c;
}

WeightScheme rWeightScheme() {
    WeightScheme s;
    s.nvars = 1;
    s.name = "R";
    s.requiresReducedWord = true;
    auto c = [](long long k) { return RatFun::fromInt(1, BigInt(k)); };
    RatFun q = RatFun::fromPoly(LaurentPoly::variable(1, 0));
    s.p11 = [c](const IVec&) { return c(0); };
    s.p12 = [c](const IVec&) { return c(1); };
    s.p21 = [q, c](const IVec&) { return q - c(1); };
    s.p22 = [q](const IVec&) { return q; };
    return s;
}

WeightScheme constWeightScheme() {
    WeightScheme s;
    s.nvars = 1;
    s.name = "const";
    auto one = [](const IVec&) { return RatFun::fromInt(1, BigInt(1)); };
    s.p11 = s.p12 = s.p21 = s.p22 = one;
    return s;
}

bool wordIsReduced(const WeylGroup& W, const std::vector<int>& word) {
    return W.length(W.fromWord(word)) == static_cast<int>(word.size());
}

std::vector<std::vector<bool>> collectSubwords(const WeylGroup& W, const std::vector<int>& word,
                                               int u) {
    std::vector<std::vector<bool>> out;
    size_t L = word.size();
    std::vector<bool> mask(L, false);
    // DFS in ascending binary order (low position = low bit): unused first
    std::function<void(size_t, int)> rec = [&](size_t k, int p) {
        int rem = static_cast<int>(L - k);
        if (std::abs(W.length(u) - W.length(p)) > rem) return;  // cannot reach u
        if (k == L) {
            if (p == u) out.push_back(mask);
            return;
        }
        rec(k + 1, p);
        mask[k] = true;
        rec(k + 1, W.rightMul(p, word[k]));
        mask[k] = false;
    };
    rec(0, W.id());
    return out;
}

namespace {

void checkScheme(const WeylGroup& W, const std::vector<int>& word, const WeightScheme& scheme) {
    if (scheme.requiresReducedWord && !wordIsReduced(W, word))
        throw std::invalid_argument("NON_REDUCED_WORD: scheme '" + scheme.name +
                                    "' needs a reduced word");
}

RatFun weightOfMask(const WeylGroup& W, const std::vector<int>& word,
                    const std::vector<IVec>& betas, const std::vector<bool>& mask,
                    const WeightScheme& scheme, int v) {
    RatFun acc = RatFun::fromInt(scheme.nvars, BigInt(1));
    int p = W.id();
    for (size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        bool descent = W.rightDescent(W.mult(v, p), i);
        if (mask[k]) {
            acc *= descent ? scheme.p22(betas[k]) : scheme.p12(betas[k]);
            p = W.rightMul(p, i);
        } else {
            acc *= descent ? scheme.p11(betas[k]) : scheme.p21(betas[k]);
        }
        if (acc.isZero()) return acc;
    }
    return acc;
}

}  // namespace

RatFun subwordSumSerial(const WeylGroup& W, const std::vector<int>& word, int u,
                        const WeightScheme& scheme, int v) {
    checkScheme(W, word, scheme);
    std::vector<IVec> betas = W.betaSequence(word);
    RatFun acc = RatFun(scheme.nvars);
    for (const auto& mask : collectSubwords(W, word, u))
        acc += weightOfMask(W, word, betas, mask, scheme, v);
    return acc;
}

RatFun subwordSum(const WeylGroup& W, const std::vector<int>& word, int u,
                  const WeightScheme& scheme, int v) {
    checkScheme(W, word, scheme);
    std::vector<IVec> betas = W.betaSequence(word);
    auto masks = collectSubwords(W, word, u);
    int m = static_cast<int>(masks.size());
    int chunks = 1;
#ifdef _OPENMP
    chunks = std::max(1, std::min(m, omp_get_max_threads() * 4));
#endif
    std::vector<RatFun> partial(chunks, RatFun(scheme.nvars));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int c = 0; c < chunks; ++c) {
        RatFun acc = RatFun(scheme.nvars);
        for (int j = c; j < m; j += chunks)
            acc += weightOfMask(W, word, betas, masks[j], scheme, v);
        partial[c] = std::move(acc);
    }
    RatFun total = RatFun(scheme.nvars);
    for (auto& p : partial) total += p;
    return total;
}

std::vector<RatFun> subwordSumDPAll(const WeylGroup& W, const std::vector<int>& word,
                                    const WeightScheme& scheme, int v) {
    checkScheme(W, word, scheme);
    std::vector<IVec> betas = W.betaSequence(word);
    int N = W.size();
    std::vector<RatFun> T(N, RatFun(scheme.nvars));
    T[W.id()] = RatFun::fromInt(scheme.nvars, BigInt(1));
    for (size_t k = 0; k < word.size(); ++k) {
        int i = word[k];
        RatFun p11 = scheme.p11(betas[k]), p12 = scheme.p12(betas[k]);
        RatFun p21 = scheme.p21(betas[k]), p22 = scheme.p22(betas[k]);
        std::vector<RatFun> T2(N, RatFun(scheme.nvars));
        for (int uu = 0; uu < N; ++uu) {
            int us = W.rightMul(uu, i);
            // unused-letter transition decides by the descent at v u,
            // used-letter transition by the descent at v us
            bool descU = W.rightDescent(W.mult(v, uu), i);
            bool descUs = !W.rightDescent(W.mult(v, us), i);
            RatFun val = (descU ? p11 : p21) * T[uu];
            val += (descUs ? p12 : p22) * T[us];
            T2[uu] = std::move(val);
        }
        T = std::move(T2);
    }
    return T;
}

RatFun subwordSumDP(const WeylGroup& W, const std::vector<int>& word, int u,
                    const WeightScheme& scheme, int v) {
    return subwordSumDPAll(W, word, scheme, v)[u];
}

}  // namespace mcloc

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcloc/ratfun.hpp"
#include "mcloc/rootdata.hpp"

namespace mcloc {

// The four-way position classification of a subword: used/unused crossed
// with descent/ascent of the twisted partial product.  Positions are
// 1-based, matching the tables this mirrors.
struct SubwordClass {
    std::vector<int> Jplus, Jminus, Eplus, Eminus;

    bool reduced() const { return Jminus.empty(); }
    bool distinguished() const { return Eminus.empty(); }
};

SubwordClass classifySubword(const WeylGroup& W, const std::vector<int>& word,
                             const std::vector<bool>& mask, int v /* = id twist */);

// Weights attached to the four classification cases, as functions of the
// running root beta_k.  Encodes one instance of the two-case recursion
//   S_{u,ws} = p11(w a) S_{u,w} + p12(w a) S_{us,w}   (us < u)
//            = p21(w a) S_{u,w} + p22(w a) S_{us,w}   (us > u).
struct WeightScheme {
    int nvars = 0;
    std::string name;
    bool requiresReducedWord = false;
    std::function<RatFun(const IVec&)> p11, p12, p21, p22;
};

// R-polynomial scheme over Z[q^{+-1}]: p11=0, p12=1, p21=q-1, p22=q.
WeightScheme rWeightScheme();
// Constant scheme: every weight 1 (subword counting).
WeightScheme constWeightScheme();

bool wordIsReduced(const WeylGroup& W, const std::vector<int>& word);

// Sum over u-subwords of the word of the classified weight products
// (brute-force enumeration; the independent route against the DP below).
RatFun subwordSumSerial(const WeylGroup& W, const std::vector<int>& word, int u,
                        const WeightScheme& scheme, int v = 0);

// Same value, OpenMP over the collected masks.
RatFun subwordSum(const WeylGroup& W, const std::vector<int>& word, int u,
                  const WeightScheme& scheme, int v = 0);

// Letter-by-letter dynamic programming over partial products; evaluates the
// recursion directly, no subword enumeration.
RatFun subwordSumDP(const WeylGroup& W, const std::vector<int>& word, int u,
                    const WeightScheme& scheme, int v = 0);
// Full DP table for the word: entry [u] is the sum for u.
std::vector<RatFun> subwordSumDPAll(const WeylGroup& W, const std::vector<int>& word,
                                    const WeightScheme& scheme, int v = 0);

// All masks whose selected letters multiply to u, in ascending binary order
// (position 1 = lowest bit).
std::vector<std::vector<bool>> collectSubwords(const WeylGroup& W, const std::vector<int>& word,
                                               int u);

}  // namespace mcloc

#pragma once

#include <string>
#include <vector>

#include "mcloc/locaffine.hpp"

namespace mcloc {

// n-periodic pipe dreams on a k x n fundamental domain.  Tiles are CROSS
// (pipes pass straight through) or ELBOW (bottom -> right, left -> top);
// pipes enter at the bottom edge and exit at the top, only ever moving
// right.  Row 1 is the top row of the domain.
struct PipeDream {
    int k = 0, n = 0;
    std::vector<uint8_t> tiles;  // row-major; 1 = CROSS, 0 = ELBOW

    bool isCross(int r, long long c) const {
        long long j = ((c - 1) % n + n) % n;
        return tiles[static_cast<size_t>(r) * n + j] != 0;
    }
    static PipeDream fromMask(int k, int n, uint64_t mask) {
        PipeDream pd;
        pd.k = k;
        pd.n = n;
        pd.tiles.resize(static_cast<size_t>(k) * n);
        for (size_t t = 0; t < pd.tiles.size(); ++t) pd.tiles[t] = (mask >> t) & 1u;
        return pd;
    }
    std::string ascii() const;  // '+' cross, '%' elbow, one period
};

// window of the affine permutation read off the pipes
std::vector<long long> traceWindow(const PipeDream& pd);

// all tilings with the given reading permutation, in mask order
std::vector<PipeDream> enumeratePipeDreams(const std::vector<long long>& window, int k, int n);
std::vector<PipeDream> enumeratePipeDreamsSerial(const std::vector<long long>& window, int k,
                                                 int n);

// Value ring of the weighted sums: x_1..x_k, t_1..t_n, y.
struct PipeRing {
    int k = 0, n = 0;
    int nv() const { return k + n + 1; }
    int xVar(int i) const { return i; }           // 0-based row
    int tVar(int j) const { return k + j; }       // 0-based column residue
    int yVar() const { return k + n; }
    std::vector<std::string> names() const;
};

// weight of one tiling: product of the four-case tile weights
RatFun pipeDreamWeight(const PipeDream& pd, const PipeRing& ring);

// G~_f: the weighted generating function over all tilings reading f.
RatFun gtilde(const std::vector<long long>& window, int k, int n, bool parallel = true);

// substitute {x_1..x_k} = {t_s : s in S} and land in the t/y ring
RatFun gtildeAtSubset(const RatFun& g, const PipeRing& ring, const std::vector<int>& subset);

struct PositroidRow {
    std::vector<int> subset;  // 1-based column set S
    RatFun pipe, richardson;
    bool equal;
};
struct PositroidReport {
    std::vector<long long> window;
    int u, w;
    bool pass;
    std::vector<PositroidRow> rows;
};

// Fixed-point comparison of G~_f against the projected Richardson class of
// the corresponding pair (u, w) over GL(n) with lambda = (1^k, 0^{n-k}).
PositroidReport verifyPositroid(const std::vector<long long>& window, int k, int n,
                                const LocCtx& L, const Parabolic& P, const ExtAffineCtx& E);

}  // namespace mcloc

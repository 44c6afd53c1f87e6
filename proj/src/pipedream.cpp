#include "mcloc/pipedream.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcloc {

namespace {

enum class Side { Bottom, Left };

// forward trace from the bottom of column c to the top edge
long long traceUp(const PipeDream& pd, long long c) {
    int r = pd.k - 1;
    Side side = Side::Bottom;
    long long col = c;
    while (r >= 0) {
        bool cross = pd.isCross(r, col);
        if (side == Side::Bottom) {
            if (cross) {
                --r;  // straight up
            } else {
                ++col;  // elbow: bottom -> right
                side = Side::Left;
            }
        } else {
            if (cross) {
                ++col;  // straight through
            } else {
                --r;  // elbow: left -> top
                side = Side::Bottom;
            }
        }
    }
    return col;
}

// backward trace from an entering edge of tile (r, c) to the bottom column
long long traceBack(const PipeDream& pd, int r, long long c, Side side) {
    while (true) {
        if (side == Side::Bottom) {
            if (r == pd.k - 1) return c;  // bottom boundary
            // came from the tile below, exiting its top edge
            side = pd.isCross(r + 1, c) ? Side::Bottom : Side::Left;
            ++r;
        } else {
            // came from the left neighbor, exiting its right edge
            side = pd.isCross(r, c - 1) ? Side::Left : Side::Bottom;
            --c;
        }
    }
}

}  // namespace

std::vector<long long> traceWindow(const PipeDream& pd) {
    std::vector<long long> win(pd.n);
    std::vector<bool> seen(pd.n, false);
    for (int i = 1; i <= pd.n; ++i) {
        long long f = traceUp(pd, i);
        if (f < i) throw std::logic_error("traceWindow: pipe moved left");
        int res = static_cast<int>((f - 1) % pd.n);
        if (seen[res]) throw std::logic_error("traceWindow: tiling is ill-formed");
        seen[res] = true;
        win[i - 1] = f;
    }
    return win;
}

std::string PipeDream::ascii() const {
    std::string out;
    for (int r = 0; r < k; ++r) {
        for (int j = 1; j <= n; ++j) out.push_back(isCross(r, j) ? '+' : '%');
        out.push_back('\n');
    }
    return out;
}

std::vector<PipeDream> enumeratePipeDreamsSerial(const std::vector<long long>& window, int k,
                                                 int n) {
    std::vector<PipeDream> out;
    uint64_t total = 1ULL << (static_cast<uint64_t>(k) * n);
    for (uint64_t mask = 0; mask < total; ++mask) {
        PipeDream pd = PipeDream::fromMask(k, n, mask);
        if (traceWindow(pd) == window) out.push_back(std::move(pd));
    }
    return out;
}

std::vector<PipeDream> enumeratePipeDreams(const std::vector<long long>& window, int k, int n) {
    uint64_t total = 1ULL << (static_cast<uint64_t>(k) * n);
    std::vector<uint8_t> hit(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
        PipeDream pd = PipeDream::fromMask(k, n, static_cast<uint64_t>(mask));
        if (traceWindow(pd) == window) hit[mask] = 1;
    }
    std::vector<PipeDream> out;
    for (uint64_t mask = 0; mask < total; ++mask)
        if (hit[mask]) out.push_back(PipeDream::fromMask(k, n, mask));
    return out;
}

std::vector<std::string> PipeRing::names() const {
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n; ++j) v.push_back("t" + std::to_string(j));
    v.push_back("y");
    return v;
}

namespace {

// numerator of the tile weight at (r, j); every tile contributes the
// denominator t_j + y x_i, which is assembled once per domain
LaurentPoly tileNumerator(const PipeDream& pd, const PipeRing& ring, int r, int j) {
    int nv = ring.nv();
    long long a = traceBack(pd, r, j, Side::Left);
    long long b = traceBack(pd, r, j, Side::Bottom);
    if (a == b) throw std::logic_error("tile labels collide");
    LaurentPoly xi = LaurentPoly::variable(nv, ring.xVar(r));
    LaurentPoly tj = LaurentPoly::variable(nv, ring.tVar(j - 1));
    LaurentPoly y = LaurentPoly::variable(nv, ring.yVar());
    LaurentPoly one = LaurentPoly::constant(nv, 1);
    if (!pd.isCross(r, j)) {
        // elbow: (1+y) x_i  if a < b,  (1+y) t_j  if a > b
        return (one + y) * (a < b ? xi : tj);
    }
    // cross: t_j - x_i  if a < b,  -y (t_j - x_i)  if a > b
    LaurentPoly d = tj - xi;
    return a < b ? d : -(y * d);
}

}  // namespace

namespace {

std::vector<LaurentPoly> domainDenFactors(int k, int n, const PipeRing& ring) {
    int nv = ring.nv();
    std::vector<LaurentPoly> den;
    for (int r = 0; r < k; ++r)
        for (int j = 1; j <= n; ++j) {
            LaurentPoly tj = LaurentPoly::variable(nv, ring.tVar(j - 1));
            LaurentPoly yxi = LaurentPoly::variable(nv, ring.yVar()) *
                              LaurentPoly::variable(nv, ring.xVar(r));
            den.push_back(tj + yxi);
        }
    return den;
}

}  // namespace

RatFun pipeDreamWeight(const PipeDream& pd, const PipeRing& ring) {
    int nv = ring.nv();
    LaurentPoly num = LaurentPoly::constant(nv, 1);
    for (int r = 0; r < pd.k; ++r)
        for (int j = 1; j <= pd.n; ++j) num *= tileNumerator(pd, ring, r, j);
    return RatFun::fromFactoredDen(std::move(num), domainDenFactors(pd.k, pd.n, ring));
}

RatFun gtilde(const std::vector<long long>& window, int k, int n, bool parallel) {
    PipeRing ring{k, n};
    int nv = ring.nv();
    auto dreams = parallel ? enumeratePipeDreams(window, k, n)
                           : enumeratePipeDreamsSerial(window, k, n);
    int m = static_cast<int>(dreams.size());
    int chunks = 1;
#ifdef _OPENMP
    chunks = parallel ? std::max(1, std::min(m, omp_get_max_threads() * 4)) : 1;
#endif
    std::vector<LaurentPoly> partial(std::max(chunks, 1), LaurentPoly::zero(nv));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int c = 0; c < chunks; ++c) {
        LaurentPoly acc = LaurentPoly::zero(nv);
        for (int i = c; i < m; i += chunks) {
            LaurentPoly num = LaurentPoly::constant(nv, 1);
            for (int r = 0; r < k; ++r)
                for (int j = 1; j <= n; ++j) num *= tileNumerator(dreams[i], ring, r, j);
            acc += num;
        }
        partial[c] = std::move(acc);
    }
    LaurentPoly total = LaurentPoly::zero(nv);
    for (auto& p : partial) total += p;
    return RatFun::fromFactoredDen(std::move(total), domainDenFactors(k, n, ring));
}

RatFun gtildeAtSubset(const RatFun& g, const PipeRing& ring, const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) != ring.k)
        throw std::invalid_argument("gtildeAtSubset: subset size must be k");
    RatFun cur = g;
    int nv = ring.nv();
    for (int i = 0; i < ring.k; ++i) {
        Expo target(nv, 0);
        target[ring.tVar(subset[i] - 1)] = 1;
        cur = cur.substVarMonomial(ring.xVar(i), target);
    }
    std::vector<int> keep;
    for (int j = 0; j < ring.n; ++j) keep.push_back(ring.tVar(j));
    keep.push_back(ring.yVar());
    return cur.projectVars(keep);
}

PositroidReport verifyPositroid(const std::vector<long long>& window, int k, int n,
                                const LocCtx& L, const Parabolic& P, const ExtAffineCtx& E) {
    PositroidReport rep;
    rep.window = window;
    ExtElem f = E.fromWindow(window);
    auto [u, w] = P.splitOrThrow(E, f);
    rep.u = u;
    rep.w = w;

    PipeRing ring{k, n};
    RatFun g = gtilde(window, k, n);

    // all k-subsets of [n], lexicographically
    std::vector<int> subset(k);
    std::vector<std::vector<int>> subsets;
    std::function<void(int, int)> rec = [&](int pos, int from) {
        if (pos == k) {
            subsets.push_back(subset);
            return;
        }
        for (int v = from; v <= n - (k - pos) + 1; ++v) {
            subset[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);

    rep.pass = true;
    for (const auto& S : subsets) {
        PositroidRow row;
        row.subset = S;
        row.pipe = gtildeAtSubset(g, ring, S);
        // minimal coset representative sending {1..k} increasingly onto S
        std::vector<bool> inS(n + 1, false);
        for (int s : S) inS[s] = true;
        IMat m(n, IVec(n, 0));
        int col = 0;
        for (int s : S) m[s - 1][col++] = 1;
        for (int v = 1; v <= n; ++v)
            if (!inS[v]) m[v - 1][col++] = 1;
        int z = L.group().indexOfMatrix(m);
        row.richardson = P.smcProjRestrict(u, w, P.repPosExact(z));
        row.equal = row.pipe == row.richardson;
        rep.pass = rep.pass && row.equal;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace mcloc

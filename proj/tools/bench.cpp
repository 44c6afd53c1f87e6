// Benchmark of the parallel kernels against their serial reference
// implementations.  Both routes are exact, so results are also compared.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "mcloc/locaffine.hpp"
#include "mcloc/pipedream.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mcloc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-38s serial %7.3fs   parallel %7.3fs   speedup %.2fx   %s\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

void benchSubwordSums() {
    WeylGroup W(RootDatum::simpleType('A', 4));
    std::vector<int> word = parseWord("s4.s3.s1.s4.s2.s1.s3.s2", W.rank());
    WeightScheme rs = rWeightScheme();
    auto t0 = Clock::now();
    std::vector<RatFun> a;
    for (int u = 0; u < W.size(); u += 7) a.push_back(subwordSumSerial(W, word, u, rs));
    double ts = seconds(t0);
    t0 = Clock::now();
    std::vector<RatFun> b;
    for (int u = 0; u < W.size(); u += 7) b.push_back(subwordSum(W, word, u, rs));
    double tp = seconds(t0);
    report("subword sums, A4 eight-letter word", ts, tp, a == b);
}

void benchColumns() {
    WeylGroup W(RootDatum::simpleType('A', 3));
    LocCtx L1(W), L2(W);
    auto t0 = Clock::now();
    L1.buildAllColumns(false);
    double ts = seconds(t0);
    t0 = Clock::now();
    L2.buildAllColumns(true);
    double tp = seconds(t0);
    bool eq = true;
    for (int u = 0; u < W.size(); ++u)
        for (int w = 0; w < W.size(); ++w) eq = eq && L1.smc(u, w) == L2.smc(u, w);
    report("restriction columns, A3", ts, tp, eq);
}

void benchGtilde() {
    auto wins = ExtAffineCtx::boundedWindows(4, 2);
    auto t0 = Clock::now();
    std::vector<RatFun> a;
    for (const auto& w : wins) a.push_back(gtilde(w, 2, 4, false));
    double ts = seconds(t0);
    t0 = Clock::now();
    std::vector<RatFun> b;
    for (const auto& w : wins) b.push_back(gtilde(w, 2, 4, true));
    double tp = seconds(t0);
    report("tiling generating functions, Gr(2,4)", ts, tp, a == b);
}

void benchVerifyMain() {
    WeylGroup W(RootDatum::GL(3));
    LocCtx L(W);
    L.buildAllColumns();
    Parabolic P(L, {1, 0, 0});
    ExtAffineCtx E(W);
    AffineLoc A(E, L);
    auto runAll = [&](bool parallel) {
        bool pass = true;
        for (int w : P.reps())
            for (int u = 0; u < W.size(); ++u) pass = pass && A.verifyMain(P, u, w, parallel).pass;
        return pass;
    };
    auto t0 = Clock::now();
    bool a = runAll(false);
    double ts = seconds(t0);
    t0 = Clock::now();
    bool b = runAll(true);
    double tp = seconds(t0);
    report("fixed-point comparison, GL3", ts, tp, a == b && a);
}

}  // namespace

int main(int argc, char** argv) {
    int repeat = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
    for (int r = 0; r < repeat; ++r) {
        benchSubwordSums();
        benchColumns();
        benchGtilde();
        benchVerifyMain();
    }
    return 0;
}

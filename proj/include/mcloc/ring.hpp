#pragma once

#include <numeric>
#include <optional>

#include "mcloc/ratfun.hpp"
#include "mcloc/rootdata.hpp"

namespace mcloc {

// Value rings are Laurent-polynomial rings over the datum's character
// generators with the parameter y adjoined as the last variable.
inline std::vector<std::string> valueRingNames(const RootDatum& d) {
    auto names = d.genNames;
    names.push_back("y");
    return names;
}
inline int valueRingVars(const RootDatum& d) { return d.charRank + 1; }
inline int yIndex(const RootDatum& d) { return d.charRank; }

// e^{weight} as a Laurent monomial; multiplicative in the weight.
inline RatFun charEval(const RootDatum& d, const IVec& weight) {
    if (static_cast<int>(weight.size()) != d.charRank)
        throw std::invalid_argument("charEval: dimension mismatch with the configured rank");
    Expo e(valueRingVars(d), 0);
    for (int i = 0; i < d.charRank; ++i) e[i] = weight[i];
    return RatFun::fromPoly(LaurentPoly::monomial(std::move(e), BigInt(1)));
}

struct LimitResult {
    bool diverges = false;
    RatFun value;  // in the one-variable ring Z[y^{+-1}]

    static LimitResult divergent() {
        LimitResult r;
        r.diverges = true;
        return r;
    }
    static LimitResult of(RatFun v) {
        LimitResult r;
        r.value = std::move(v);
        return r;
    }
};

namespace detail {

// Solve B c = d exactly over the integers, where B is m x r of full column
// rank with small entries (columns are the images v(alpha_i)).
class ZSolver {
public:
    ZSolver(const std::vector<IVec>& cols, int m) : m_(m), r_(static_cast<int>(cols.size())) {
        B_.assign(m_, std::vector<long long>(r_));
        for (int j = 0; j < r_; ++j)
            for (int i = 0; i < m_; ++i) B_[i][j] = cols[j][i];
        // choose r independent rows greedily
        rows_.clear();
        IMat sub;
        for (int i = 0; i < m_ && static_cast<int>(rows_.size()) < r_; ++i) {
            std::vector<int> cand = rows_;
            cand.push_back(i);
            IMat test(cand.size(), IVec(cand.size()));
            bool ok = true;
            if (static_cast<int>(cand.size()) == r_) {
                for (size_t a = 0; a < cand.size(); ++a)
                    for (int b = 0; b < r_; ++b) test[a][b] = static_cast<int>(B_[cand[a]][b]);
                ok = matDet(test) != 0;
            } else {
                // defer the rank check to the full selection
                ok = true;
            }
            if (ok) rows_ = cand;
        }
        if (static_cast<int>(rows_.size()) != r_) throw std::logic_error("ZSolver: rank deficiency");
        IMat sq(r_, IVec(r_));
        for (int a = 0; a < r_; ++a)
            for (int b = 0; b < r_; ++b) sq[a][b] = static_cast<int>(B_[rows_[a]][b]);
        det_ = matDet(sq);
        if (det_ == 0) {
            // greedy prefix failed; search all row subsets (m, r are tiny)
            std::vector<int> idx(m_);
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<int> pick;
            if (!searchRows(0, pick, sq)) throw std::logic_error("ZSolver: singular basis");
        }
        sq_ = sq;
    }

    // returns integer solution or nullopt (not in the lattice)
    std::optional<IVec> solve(const std::vector<long long>& d) const {
        IVec c(r_);
        for (int i = 0; i < r_; ++i) {
            IMat m2 = sq_;
            for (int a = 0; a < r_; ++a) m2[a][i] = static_cast<int>(d[rows_[a]]);
            long long num = matDet(m2);
            if (num % det_ != 0) return std::nullopt;
            c[i] = static_cast<int>(num / det_);
        }
        for (int i = 0; i < m_; ++i) {
            long long acc = 0;
            for (int j = 0; j < r_; ++j) acc += B_[i][j] * c[j];
            if (acc != d[i]) return std::nullopt;
        }
        return c;
    }

private:
    bool searchRows(size_t start, std::vector<int>& pick, IMat& out) {
        if (static_cast<int>(pick.size()) == r_) {
            IMat sq(r_, IVec(r_));
            for (int a = 0; a < r_; ++a)
                for (int b = 0; b < r_; ++b) sq[a][b] = static_cast<int>(B_[pick[a]][b]);
            if (matDet(sq) != 0) {
                rows_ = pick;
                det_ = matDet(sq);
                out = sq;
                return true;
            }
            return false;
        }
        for (size_t i = start; i < static_cast<size_t>(m_); ++i) {
            pick.push_back(static_cast<int>(i));
            if (searchRows(i + 1, pick, out)) return true;
            pick.pop_back();
        }
        return false;
    }

    int m_, r_;
    std::vector<std::vector<long long>> B_;
    std::vector<int> rows_;
    long long det_ = 0;
    IMat sq_;
};

}  // namespace detail

// Iterated chamber limit: rewrite f in the coordinates z_i = e^{v alpha_i}
// and take univariate limits z -> 0 one variable at a time, in the given
// order of simple-root indices.  The y slot passes through untouched.
inline LimitResult limitAtChamber(const WeylGroup& W, const RatFun& f, int v,
                                  std::vector<int> order = {}) {
    const RootDatum& d = W.datum();
    int r = d.rank, m = d.charRank, yv = yIndex(d);
    if (order.empty()) {
        order.resize(r);
        std::iota(order.begin(), order.end(), 0);
    }
    if (f.isZero()) return LimitResult::of(RatFun(1));

    std::vector<IVec> cols(r);
    for (int i = 0; i < r; ++i) cols[i] = W.applyToChar(v, d.simpleRoots[i]);
    detail::ZSolver solver(cols, m);

    LaurentPoly fden = f.den();
    const Expo& base = fden.terms.begin()->first;
    auto rewrite = [&](const LaurentPoly& p) {
        LaurentPoly out(r + 1);
        for (const auto& [e, c] : p.terms) {
            std::vector<long long> delta(m);
            for (int i = 0; i < m; ++i) delta[i] = e[i] - base[i];
            auto sol = solver.solve(delta);
            if (!sol)
                throw std::invalid_argument(
                    "limitAtChamber: value does not lie in the torus of the root lattice");
            Expo e2(r + 1, 0);
            for (int i = 0; i < r; ++i) e2[i] = (*sol)[i];
            e2[r] = e[yv];
            out.addTerm(e2, c);
        }
        return out;
    };
    LaurentPoly N = rewrite(f.num()), D = rewrite(fden);

    for (int zi : order) {
        if (N.isZero()) return LimitResult::of(RatFun(1));
        int dn = N.minDegIn(zi), dd = D.minDegIn(zi);
        if (dn > dd) return LimitResult::of(RatFun(1));
        if (dn < dd) return LimitResult::divergent();
        N = N.coeffOfPow(zi, dn);
        D = D.coeffOfPow(zi, dd);
    }
    if (N.isZero()) return LimitResult::of(RatFun(1));

    std::vector<int> keep{r};
    return LimitResult::of(RatFun::make(N.projectVars(keep), D.projectVars(keep)));
}

// q |-> -y between one-variable Laurent rings.
inline LaurentPoly qToMinusY(const LaurentPoly& qpoly) {
    LaurentPoly out(1);
    for (const auto& [e, c] : qpoly.terms) {
        BigInt k = c;
        if (e[0] & 1) k = -k;
        out.addTerm(e, k);
    }
    return out;
}

}  // namespace mcloc

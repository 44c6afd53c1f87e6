#include "mcloc/hecke.hpp"

namespace mcloc {

HeckeFinite::Elem HeckeFinite::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [w, p] : b) {
        auto it = r.find(w);
        if (it == r.end()) {
            r.emplace(w, p);
        } else {
            it->second += p;
            if (it->second.isZero()) r.erase(it);
        }
    }
    return r;
}

HeckeFinite::Elem HeckeFinite::scale(const Elem& a, const QPoly& f) const {
    Elem r;
    if (f.isZero()) return r;
    for (const auto& [w, p] : a) {
        QPoly q = p * f;
        if (!q.isZero()) r.emplace(w, std::move(q));
    }
    return r;
}

HeckeFinite::Elem HeckeFinite::mulTs(const Elem& a, int i) const {
    // T_x T_s = T_{xs}            if xs > x
    //         = (q-1) T_x + q T_{xs}   if xs < x
    Elem r;
    auto addTo = [&](int w, const QPoly& p) {
        auto it = r.find(w);
        if (it == r.end()) {
            if (!p.isZero()) r.emplace(w, p);
        } else {
            it->second += p;
            if (it->second.isZero()) r.erase(it);
        }
    };
    QPoly qm1 = qMono(1) - qConst(1);
    for (const auto& [x, p] : a) {
        int xs = W_.rightMul(x, i);
        if (W_.length(xs) > W_.length(x)) {
            addTo(xs, p);
        } else {
            addTo(x, p * qm1);
            addTo(xs, p * qMono(1));
        }
    }
    return r;
}

HeckeFinite::Elem HeckeFinite::mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [z, pz] : b) {
        Elem cur = scale(a, pz);
        for (int i : W_.word(z)) cur = mulTs(cur, i);
        r = add(r, cur);
    }
    return r;
}

HeckeFinite::Elem HeckeFinite::tsInverse(int i) const {
    // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
    Elem r;
    r.emplace(W_.rightMul(W_.id(), i), qMono(-1));
    r.emplace(W_.id(), qMono(-1) - qConst(1));
    return r;
}

const HeckeFinite::Elem& HeckeFinite::invTwInverse(int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = invCache_.find(w);
    if (it != invCache_.end()) return it->second;
    // T_{w^{-1}} = T_{j1} ... T_{jm} along a reduced word of w^{-1};
    // invert factor by factor in reverse.
    const std::vector<int>& word = W_.word(W_.inverse(w));
    Elem acc = basis(W_.id());
    for (auto jt = word.rbegin(); jt != word.rend(); ++jt) acc = mul(acc, tsInverse(*jt));
    return invCache_.emplace(w, std::move(acc)).first->second;
}

QPoly HeckeFinite::rFromExpansion(const Elem& expansion, int v, int u) const {
    // T_v T_{w^{-1}}^{-1} = q^{l(v)} sum_u R^{(v)}_{u,w}(q^{-1}) q^{-l(vu)} T_{vu},
    // so R^{(v)}_{u,w}(q) = bar(coeff of T_{vu}) * q^{l(v) - l(vu)}.
    int vu = W_.mult(v, u);
    auto it = expansion.find(vu);
    if (it == expansion.end()) return QPoly(1);
    return qBar(it->second) * qMono(W_.length(v) - W_.length(vu));
}

const QPoly& HeckeFinite::rPoly(int u, int w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return rPolyLocked(u, w);
}

const QPoly& HeckeFinite::rPolyLocked(int u, int w) const {
    auto k = std::make_pair(u, w);
    auto it = rMemo_.find(k);
    if (it != rMemo_.end()) return it->second;
    QPoly res(1);
    if (W_.length(u) > W_.length(w)) {
        // zero
    } else if (W_.length(w) == 0) {
        if (u == w) res = qConst(1);
    } else {
        int i = 0;
        while (!W_.leftDescent(w, i)) ++i;
        int sw = W_.leftMul(i, w), su = W_.leftMul(i, u);
        if (W_.length(su) < W_.length(u)) {
            res = rPolyLocked(su, sw);
        } else {
            res = (qMono(1) - qConst(1)) * rPolyLocked(su, w) + qMono(1) * rPolyLocked(su, sw);
        }
    }
    return rMemo_.emplace(k, std::move(res)).first->second;
}

QPoly HeckeFinite::rPolyDef(int u, int w) const {
    return rFromExpansion(invTwInverse(w), W_.id(), u);
}

QPoly HeckeFinite::twistedR(int u, int w, int v) const {
    Elem d = mul(basis(v), invTwInverse(w));
    return rFromExpansion(d, v, u);
}

const QPoly& RPolyExt::rPoly(const ExtElem& u, const ExtElem& w) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    return rPolyLocked(u, w);
}

const QPoly& RPolyExt::rPolyLocked(const ExtElem& u, const ExtElem& w) const {
    auto k = std::make_pair(key(u), key(w));
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    QPoly res(1);
    if (E_.omegaIndex(u) != E_.omegaIndex(w) || E_.length(u) > E_.length(w)) {
        // zero
    } else if (E_.length(w) == 0) {
        if (u == w) res = qConst(1);
    } else {
        int i = 0;
        while (!E_.leftDescent(w, i)) ++i;
        ExtElem sw = E_.leftMulSimple(i, w), su = E_.leftMulSimple(i, u);
        if (E_.length(su) < E_.length(u)) {
            res = rPolyLocked(su, sw);
        } else {
            res = (qMono(1) - qConst(1)) * rPolyLocked(su, w) + qMono(1) * rPolyLocked(su, sw);
        }
    }
    return memo_.emplace(std::move(k), std::move(res)).first->second;
}

}  // namespace mcloc

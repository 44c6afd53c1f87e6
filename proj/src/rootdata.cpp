#include "mcloc/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace mcloc {

IVec matApply(const IMat& m, const IVec& v) {
    int n = static_cast<int>(m.size());
    IVec r(n, 0);
    for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += static_cast<long long>(m[i][j]) * v[j];
        r[i] = static_cast<int>(acc);
    }
    return r;
}

IMat matMul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i][k];
            if (!aik) continue;
            for (int j = 0; j < n; ++j) r[i][j] += aik * b[k][j];
        }
    return r;
}

IMat matIdentity(int n) {
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

// Fraction-free (Bareiss) determinant of a small integer matrix.
long long matDet(const IMat& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    long long prev = 1, sign = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) { std::swap(a[p], a[c]); sign = -sign; }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

RootDatum RootDatum::GL(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("RootDatum::GL: rank out of range");
    RootDatum d;
    d.kind = Kind::GL;
    d.label = "GL" + std::to_string(n);
    d.rank = n - 1;
    d.charRank = n;
    d.cartan.assign(d.rank, IVec(d.rank, 0));
    for (int i = 0; i < d.rank; ++i) {
        d.cartan[i][i] = 2;
        if (i > 0) d.cartan[i][i - 1] = -1;
        if (i + 1 < d.rank) d.cartan[i][i + 1] = -1;
    }
    for (int i = 0; i < d.rank; ++i) {
        IVec a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        d.simpleRoots.push_back(std::move(a));
    }
    for (int i = 1; i <= n; ++i) d.genNames.push_back("t" + std::to_string(i));
    d.validateCartan();
    d.computePosRoots();
    d.validate();
    return d;
}

RootDatum RootDatum::simpleType(char type, int r) {
    RootDatum d;
    d.kind = Kind::SimpleType;
    d.label = std::string(1, type) + std::to_string(r);
    d.rank = r;
    d.charRank = r;
    d.cartan.assign(r, IVec(r, 0));
    for (int i = 0; i < r; ++i) d.cartan[i][i] = 2;
    auto link = [&](int i, int j, int cij, int cji) {
        d.cartan[i][j] = cij;
        d.cartan[j][i] = cji;
    };
    switch (type) {
        case 'A':
            if (r < 1 || r > 5) throw std::invalid_argument("type A rank out of range");
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':
            if (r != 2) throw std::invalid_argument("only B2 is supported");
            link(0, 1, -1, -2);
            break;
        case 'C':
            if (r != 2) throw std::invalid_argument("only C2 is supported");
            link(0, 1, -2, -1);
            break;
        case 'G':
            if (r != 2) throw std::invalid_argument("only G2 is supported");
            link(0, 1, -1, -3);
            break;
        default:
            throw std::invalid_argument("unsupported type letter");
    }
    for (int i = 0; i < r; ++i) {
        IVec a(r, 0);
        a[i] = 1;
        d.simpleRoots.push_back(std::move(a));
    }
    for (int i = 1; i <= r; ++i) d.genNames.push_back("z" + std::to_string(i));
    d.validateCartan();
    d.computePosRoots();
    d.validate();
    return d;
}

RootDatum RootDatum::parse(const std::string& spec) {
    if (spec.size() >= 3 && spec.substr(0, 2) == "GL")
        return GL(std::stoi(spec.substr(2)));
    if (spec.rfind("cartan:", 0) == 0) {
        // explicit matrix, rows separated by ';', entries by ','
        IMat cartan;
        std::stringstream rows(spec.substr(7));
        std::string row;
        while (std::getline(rows, row, ';')) {
            IVec r;
            std::stringstream cells(row);
            std::string cell;
            while (std::getline(cells, cell, ',')) r.push_back(std::stoi(cell));
            cartan.push_back(std::move(r));
        }
        return fromCartan(std::move(cartan));
    }
    if (spec.size() >= 2)
        return simpleType(spec[0], std::stoi(spec.substr(1)));
    throw std::invalid_argument("RootDatum::parse: bad spec '" + spec + "'");
}

RootDatum RootDatum::fromCartan(IMat cartan) {
    RootDatum d;
    int r = static_cast<int>(cartan.size());
    for (const auto& row : cartan)
        if (static_cast<int>(row.size()) != r)
            throw std::invalid_argument("fromCartan: matrix is not square");
    d.kind = Kind::SimpleType;
    d.label = "cartan" + std::to_string(r);
    d.rank = r;
    d.charRank = r;
    d.cartan = std::move(cartan);
    for (int i = 0; i < r; ++i) {
        IVec a(r, 0);
        a[i] = 1;
        d.simpleRoots.push_back(std::move(a));
    }
    for (int i = 1; i <= r; ++i) d.genNames.push_back("z" + std::to_string(i));
    d.validateCartan();
    d.computePosRoots();
    d.validate();
    return d;
}

bool RootDatum::isPositive(const IVec& root) const {
    if (kind == Kind::GL) {
        // e_i - e_j with i < j; the first nonzero entry decides
        for (int x : root) {
            if (x > 0) return true;
            if (x < 0) return false;
        }
        throw std::logic_error("isPositive: zero vector");
    }
    IVec c = alphaCoords(root);
    bool pos = false, neg = false;
    for (int x : c) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos == neg) throw std::logic_error("isPositive: not a root");
    return pos;
}

IVec RootDatum::applySimple(int i, const IVec& chi) const {
    if (kind == Kind::GL) {
        IVec r = chi;
        std::swap(r[i], r[i + 1]);
        return r;
    }
    // s_i(chi) = chi - <chi, alpha_i^vee> alpha_i, in root coordinates
    long long pair = 0;
    for (int j = 0; j < rank; ++j) pair += static_cast<long long>(cartan[i][j]) * chi[j];
    IVec r = chi;
    r[i] -= static_cast<int>(pair);
    return r;
}

IMat RootDatum::simpleReflMatrix(int i) const {
    IMat m = matIdentity(charRank);
    for (int j = 0; j < charRank; ++j) {
        IVec e(charRank, 0);
        e[j] = 1;
        IVec im = applySimple(i, e);
        for (int k = 0; k < charRank; ++k) m[k][j] = im[k];
    }
    return m;
}

long long RootDatum::pairing(const std::vector<long long>& lam, const IVec& chi) const {
    if (static_cast<int>(lam.size()) != charRank)
        throw std::invalid_argument("pairing: cocharacter rank mismatch");
    long long acc = 0;
    if (kind == Kind::GL) {
        for (int i = 0; i < charRank; ++i) acc += lam[i] * chi[i];
    } else {
        // lam in coroot coordinates: <alpha_i^vee, chi> = sum_j cartan[i][j] chi_j
        for (int i = 0; i < rank; ++i) {
            long long row = 0;
            for (int j = 0; j < rank; ++j) row += static_cast<long long>(cartan[i][j]) * chi[j];
            acc += lam[i] * row;
        }
    }
    return acc;
}

IVec RootDatum::highestRoot() const {
    const IVec* best = nullptr;
    long long bestHt = -1;
    for (const auto& a : posRoots) {
        IVec c = alphaCoords(a);
        long long ht = std::accumulate(c.begin(), c.end(), 0LL);
        if (ht > bestHt) {
            bestHt = ht;
            best = &a;
        }
    }
    return *best;
}

IVec RootDatum::alphaCoords(const IVec& chi) const {
    if (kind == Kind::SimpleType) return chi;
    // GL(n): root-lattice vectors have coordinate sum 0; alpha-coordinates
    // are the partial sums c_k = chi_1 + ... + chi_k.
    long long s = std::accumulate(chi.begin(), chi.end(), 0LL);
    if (s != 0) throw std::logic_error("alphaCoords: not in the root lattice");
    IVec c(rank, 0);
    int run = 0;
    for (int k = 0; k < rank; ++k) {
        run += chi[k];
        c[k] = run;
    }
    return c;
}

void RootDatum::computePosRoots() {
    std::set<IVec> pos(simpleRoots.begin(), simpleRoots.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IVec> cur(pos.begin(), pos.end());
        for (const auto& a : cur) {
            for (int i = 0; i < rank; ++i) {
                IVec b = applySimple(i, a);
                if (isZeroVec(b)) continue;
                if (isPositive(b) && !pos.count(b)) {
                    pos.insert(b);
                    grew = true;
                }
            }
        }
    }
    posRoots.assign(pos.begin(), pos.end());
}

void RootDatum::validateCartan() const {
    for (int i = 0; i < rank; ++i) {
        if (cartan[i][i] != 2) throw std::logic_error("Cartan: diagonal must be 2");
        for (int j = 0; j < rank; ++j)
            if (i != j && cartan[i][j] > 0) throw std::logic_error("Cartan: positive off-diagonal");
        for (int j = 0; j < rank; ++j)
            if (i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::logic_error("Cartan: not symmetrizable");
    }
    // finite type: leading principal minors positive
    for (int k = 1; k <= rank; ++k) {
        IMat a(k, IVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i][j] = cartan[i][j];
        if (matDet(a) <= 0) throw std::logic_error("Cartan: not of finite type");
    }
}

void RootDatum::validate() const {
    size_t expected = 0;
    if (kind == Kind::GL) {
        expected = static_cast<size_t>(charRank) * (charRank - 1) / 2;
    } else if (label[0] == 'A') {
        expected = static_cast<size_t>(rank) * (rank + 1) / 2;
    } else if (label[0] == 'B' || label[0] == 'C') {
        expected = 4;
    } else if (label[0] == 'G') {
        expected = 6;
    } else {
        return;  // generic Cartan input: the closure and minors are the check
    }
    if (posRoots.size() != expected)
        throw std::logic_error("positive-root closure does not match the classified count");
}

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
    int r = datum_.rank;
    std::vector<IMat> gen(r);
    for (int i = 0; i < r; ++i) gen[i] = datum_.simpleReflMatrix(i);

    // BFS closure
    std::map<IMat, int> seen;
    std::deque<IMat> queue;
    IMat idm = matIdentity(datum_.charRank);
    seen.emplace(idm, 0);
    queue.push_back(idm);
    std::vector<IMat> elems{idm};
    while (!queue.empty()) {
        IMat m = queue.front();
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            IMat m2 = matMul(gen[i], m);
            if (!seen.count(m2)) {
                seen.emplace(m2, static_cast<int>(elems.size()));
                elems.push_back(m2);
                queue.push_back(m2);
            }
        }
    }

    auto lengthOf = [&](const IMat& m) {
        int inv = 0;
        for (const auto& a : datum_.posRoots)
            if (!datum_.isPositive(matApply(m, a))) ++inv;
        return inv;
    };
    auto wordOf = [&](IMat m) {
        std::vector<int> w;
        int len = lengthOf(m);
        while (len > 0) {
            for (int i = 0; i < r; ++i) {
                // left descent: w^{-1} alpha_i < 0, i.e. row test via s_i m shorter
                IMat m2 = matMul(gen[i], m);
                int l2 = lengthOf(m2);
                if (l2 < len) {
                    w.push_back(i);
                    m = std::move(m2);
                    len = l2;
                    break;
                }
            }
        }
        return w;
    };

    std::vector<std::pair<std::pair<int, std::vector<int>>, IMat>> order;
    order.reserve(elems.size());
    for (auto& m : elems) {
        int l = lengthOf(m);
        order.push_back({{l, wordOf(m)}, std::move(m)});
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    int N = static_cast<int>(order.size());
    mats_.resize(N);
    length_.resize(N);
    words_.resize(N);
    for (int k = 0; k < N; ++k) {
        mats_[k] = std::move(order[k].second);
        length_[k] = order[k].first.first;
        words_[k] = std::move(order[k].first.second);
        index_.emplace(mats_[k], k);
    }
    w0_ = N - 1;

    leftMul_.assign(r, std::vector<int>(N));
    rightMul_.assign(r, std::vector<int>(N));
    leftDesc_.assign(N, 0);
    rightDesc_.assign(N, 0);
    inv_.resize(N);
    for (int k = 0; k < N; ++k) {
        for (int i = 0; i < r; ++i) {
            leftMul_[i][k] = index_.at(matMul(gen[i], mats_[k]));
            rightMul_[i][k] = index_.at(matMul(mats_[k], gen[i]));
            if (length_[leftMul_[i][k]] < length_[k]) leftDesc_[k] |= 1u << i;
            if (length_[rightMul_[i][k]] < length_[k]) rightDesc_[k] |= 1u << i;
        }
        IMat t = matIdentity(datum_.charRank);
        for (auto it = words_[k].rbegin(); it != words_[k].rend(); ++it)
            t = matMul(t, gen[*it]);
        inv_[k] = index_.at(t);
    }
}

int WeylGroup::mult(int u, int v) const { return index_.at(matMul(mats_[u], mats_[v])); }

int WeylGroup::fromWord(const std::vector<int>& word) const {
    int w = id();
    for (int i : word) {
        if (i < 0 || i >= rank()) throw std::invalid_argument("fromWord: bad letter");
        w = rightMul(w, i);
    }
    return w;
}

int WeylGroup::indexOfMatrix(const IMat& m) const { return index_.at(m); }

bool WeylGroup::bruhatLeq(int u, int w) const {
    std::lock_guard<std::recursive_mutex> lk(bruhatMu_);
    return bruhatLeqLocked(u, w);
}

bool WeylGroup::bruhatLeqLocked(int u, int w) const {
    if (u == w) return true;
    if (length_[u] >= length_[w]) return false;
    auto key = std::make_pair(u, w);
    auto it = bruhatMemo_.find(key);
    if (it != bruhatMemo_.end()) return it->second;
    int i = 0;
    while (!leftDescent(w, i)) ++i;
    int sw = leftMul(i, w);
    bool res = leftDescent(u, i) ? bruhatLeqLocked(leftMul(i, u), sw) : bruhatLeqLocked(u, sw);
    bruhatMemo_.emplace(key, res);
    return res;
}

std::vector<int> WeylGroup::minimalCosetReps(uint32_t pMask) const {
    std::vector<int> reps;
    for (int w = 0; w < size(); ++w)
        if ((rightDesc_[w] & pMask) == 0) reps.push_back(w);
    // element order is already (length, word)-sorted
    return reps;
}

int WeylGroup::cosetMinRep(int w, uint32_t pMask) const {
    while (true) {
        uint32_t d = rightDesc_[w] & pMask;
        if (!d) return w;
        int i = __builtin_ctz(d);
        w = rightMul(w, i);
    }
}

std::vector<int> WeylGroup::parabolicElements(uint32_t pMask) const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w) {
        bool inside = true;
        for (int i : words_[w])
            if (!((pMask >> i) & 1u)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(w);
    }
    return out;
}

std::vector<IVec> WeylGroup::betaSequence(const std::vector<int>& word) const {
    std::vector<IVec> betas;
    int w = id();
    for (int i : word) {
        betas.push_back(applyToChar(w, datum_.simpleRoots[i]));
        w = rightMul(w, i);
    }
    return betas;
}

std::string WeylGroup::elemToString(int w) const { return wordToString(words_[w]); }

int WeylGroup::parseElem(const std::string& s) const { return fromWord(parseWord(s, rank())); }

std::vector<int> parseWord(const std::string& s, int rank) {
    std::vector<int> word;
    if (s.empty() || s == "e" || s == "id") return word;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 's') throw std::invalid_argument("parseWord: expected 's' in '" + s + "'");
        ++pos;
        size_t end = pos;
        while (end < s.size() && isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw std::invalid_argument("parseWord: missing index");
        int idx = std::stoi(s.substr(pos, end - pos)) - 1;
        if (idx < 0 || idx >= rank) throw std::invalid_argument("parseWord: index out of range");
        word.push_back(idx);
        pos = end;
        if (pos < s.size()) {
            if (s[pos] != '.') throw std::invalid_argument("parseWord: expected '.'");
            ++pos;
        }
    }
    return word;
}

std::string wordToString(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) out += ".";
        out += "s" + std::to_string(word[k] + 1);
    }
    return out;
}

}  // namespace mcloc

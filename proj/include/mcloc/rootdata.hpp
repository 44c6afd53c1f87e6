#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>
#include <cstdint>
#include <stdexcept>

namespace mcloc {

using IVec = std::vector<int>;
using IMat = std::vector<std::vector<int>>;

// A finite crystallographic root datum, realized on a concrete character
// lattice:
//   - GL(n): characters Z^n with generators t1..tn, roots e_i - e_j,
//     cocharacters Z^n with the dot-product pairing;
//   - simple types (A/B/C/G at small rank): characters = root lattice in the
//     simple-root basis with generators z1..zr, reflections from the Cartan
//     matrix, cocharacters = coroot lattice.
struct RootDatum {
    enum class Kind { GL, SimpleType };

    Kind kind = Kind::GL;
    std::string label;
    int rank = 0;       // number of simple roots
    int charRank = 0;   // dimension of the character lattice
    IMat cartan;        // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<IVec> simpleRoots;  // in character coordinates
    std::vector<IVec> posRoots;     // closure of the simples, sorted
    std::vector<std::string> genNames;

    static RootDatum GL(int n);
    static RootDatum simpleType(char type, int r);
    static RootDatum fromCartan(IMat cartan);
    // "A2", "B2", "GL3", or an explicit matrix "cartan:2,-1;-3,2"
    static RootDatum parse(const std::string& spec);

    bool isZeroVec(const IVec& v) const {
        for (int x : v)
            if (x) return false;
        return true;
    }
    // Roots of these data are nonzero vectors whose sign is well defined.
    bool isPositive(const IVec& root) const;

    IVec applySimple(int i, const IVec& chi) const;
    IMat simpleReflMatrix(int i) const;

    // <lambda, chi> for a cocharacter lambda and character chi.
    long long pairing(const std::vector<long long>& lam, const IVec& chi) const;

    IVec highestRoot() const;
    // Integer coordinates of a root-lattice vector in the simple-root basis.
    IVec alphaCoords(const IVec& chi) const;

private:
    void computePosRoots();
    void validateCartan() const;  // must pass before the root closure runs
    void validate() const;
};

// matrix/vector helpers on the character lattice
IVec matApply(const IMat& m, const IVec& v);
IMat matMul(const IMat& a, const IMat& b);
IMat matIdentity(int n);
long long matDet(const IMat& m);

// A finite Weyl group with precomputed index tables: lengths, canonical
// reduced words, simple multiplication tables, descent sets, inverses.
// Elements are identified by index; index 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(RootDatum datum);

    const RootDatum& datum() const { return datum_; }
    int size() const { return static_cast<int>(mats_.size()); }
    int rank() const { return datum_.rank; }
    int id() const { return 0; }
    int w0() const { return w0_; }

    int length(int w) const { return length_[w]; }
    const std::vector<int>& word(int w) const { return words_[w]; }
    int inverse(int w) const { return inv_[w]; }
    int leftMul(int i, int w) const { return leftMul_[i][w]; }
    int rightMul(int w, int i) const { return rightMul_[i][w]; }
    bool leftDescent(int w, int i) const { return (leftDesc_[w] >> i) & 1u; }
    bool rightDescent(int w, int i) const { return (rightDesc_[w] >> i) & 1u; }

    int mult(int u, int v) const;
    int fromWord(const std::vector<int>& word) const;
    int indexOfMatrix(const IMat& m) const;
    const IMat& matrix(int w) const { return mats_[w]; }

    IVec applyToChar(int w, const IVec& chi) const { return matApply(mats_[w], chi); }

    bool bruhatLeq(int u, int w) const;

    // Minimal-length coset representatives of W/W_P, sorted by
    // (length, word); P is a bitmask of simple-root indices.
    std::vector<int> minimalCosetReps(uint32_t pMask) const;
    int cosetMinRep(int w, uint32_t pMask) const;
    std::vector<int> parabolicElements(uint32_t pMask) const;

    std::vector<IVec> betaSequence(const std::vector<int>& word) const;

    std::string elemToString(int w) const;
    int parseElem(const std::string& s) const;

private:
    RootDatum datum_;
    std::vector<IMat> mats_;
    std::map<IMat, int> index_;
    std::vector<int> length_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> leftMul_, rightMul_;
    std::vector<uint32_t> leftDesc_, rightDesc_;
    std::vector<int> inv_;
    int w0_ = 0;
    mutable std::map<std::pair<int, int>, bool> bruhatMemo_;
    mutable std::recursive_mutex bruhatMu_;

    bool bruhatLeqLocked(int u, int w) const;
};

std::vector<int> parseWord(const std::string& s, int rank);
std::string wordToString(const std::vector<int>& word);

}  // namespace mcloc

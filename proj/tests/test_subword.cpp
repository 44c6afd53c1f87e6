#include "doctest.h"

#include "mcloc/subword.hpp"

using namespace mcloc;

namespace {
uint64_t rngState = 0xfeedface12345678ULL;
uint64_t nextRand() {
    uint64_t z = (rngState += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<bool> maskOf(std::initializer_list<int> used, size_t len) {
    std::vector<bool> m(len, false);
    for (int k : used) m[k - 1] = true;
    return m;
}
}  // namespace

TEST_CASE("the five-row classification table") {
    WeylGroup W(RootDatum::simpleType('A', 4));
    std::vector<int> word = parseWord("s4.s3.s1.s4.s2.s1.s3.s2", W.rank());
    int u = W.parseElem("s3.s4.s3.s2");

    auto masks = collectSubwords(W, word, u);
    CHECK(masks.size() == 5);

    struct Row {
        std::vector<bool> mask;
        std::vector<int> Jp, Jm, Ep, Em;
        bool reduced, dist;
    };
    std::vector<Row> rows{
        {maskOf({1, 2, 4, 5}, 8), {1, 2, 4, 5}, {}, {3, 6, 7}, {8}, true, false},
        {maskOf({1, 2, 4, 8}, 8), {1, 2, 4, 8}, {}, {3, 5, 6}, {7}, true, false},
        {maskOf({2, 4, 7, 8}, 8), {2, 4, 7, 8}, {}, {1, 3, 5, 6}, {}, true, true},
        {maskOf({1, 2, 3, 4, 6, 8}, 8), {1, 2, 3, 4, 8}, {6}, {5}, {7}, false, false},
        {maskOf({2, 3, 4, 6, 7, 8}, 8), {2, 3, 4, 7, 8}, {6}, {1, 5}, {}, false, true},
    };
    for (const auto& row : rows) {
        bool found = false;
        for (const auto& m : masks) found = found || m == row.mask;
        CHECK(found);
        SubwordClass c = classifySubword(W, word, row.mask, W.id());
        CHECK(c.Jplus == row.Jp);
        CHECK(c.Jminus == row.Jm);
        CHECK(c.Eplus == row.Ep);
        CHECK(c.Eminus == row.Em);
        CHECK(c.reduced() == row.reduced);
        CHECK(c.distinguished() == row.dist);
    }

    // empty mask of a reduced word: every position lands in E+
    SubwordClass e = classifySubword(W, word, std::vector<bool>(8, false), W.id());
    CHECK(e.Eplus == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(e.Jplus.empty());
    CHECK(e.Jminus.empty());
    CHECK(e.Eminus.empty());

    CHECK_THROWS_AS(classifySubword(W, word, std::vector<bool>(3, false), W.id()),
                    std::invalid_argument);
}

TEST_CASE("appending a letter changes exactly one classification set") {
    WeylGroup W(RootDatum::simpleType('B', 2));
    for (int it = 0; it < 200; ++it) {
        size_t len = 1 + nextRand() % 6;
        std::vector<int> word;
        for (size_t k = 0; k < len; ++k) word.push_back(static_cast<int>(nextRand() % W.rank()));
        std::vector<bool> mask(len);
        for (size_t k = 0; k < len; ++k) mask[k] = nextRand() & 1;
        int s = static_cast<int>(nextRand() % W.rank());
        bool used = nextRand() & 1;
        std::vector<int> word2 = word;
        word2.push_back(s);
        std::vector<bool> mask2 = mask;
        mask2.push_back(used);

        SubwordClass before = classifySubword(W, word, mask, W.id());
        SubwordClass after = classifySubword(W, word2, mask2, W.id());
        int p = W.id();
        for (size_t k = 0; k < len; ++k)
            if (mask[k]) p = W.rightMul(p, word[k]);
        bool descent = W.rightDescent(p, s);
        int pos = static_cast<int>(len) + 1;
        auto plus = [pos](std::vector<int> v) {
            v.push_back(pos);
            return v;
        };
        if (used && descent) {
            CHECK(after.Jminus == plus(before.Jminus));
            CHECK(after.Jplus == before.Jplus);
            CHECK(after.Eplus == before.Eplus);
            CHECK(after.Eminus == before.Eminus);
        } else if (used && !descent) {
            CHECK(after.Jplus == plus(before.Jplus));
            CHECK(after.Eminus == before.Eminus);
        } else if (!used && descent) {
            CHECK(after.Eminus == plus(before.Eminus));
            CHECK(after.Jplus == before.Jplus);
        } else {
            CHECK(after.Eplus == plus(before.Eplus));
            CHECK(after.Jminus == before.Jminus);
        }
    }
}

TEST_CASE("weighted sums: the R scheme") {
    WeylGroup W(RootDatum::simpleType('A', 4));
    std::vector<int> word = parseWord("s4.s3.s1.s4.s2.s1.s3.s2", W.rank());
    int u = W.parseElem("s3.s4.s3.s2");
    WeightScheme rs = rWeightScheme();
    LaurentPoly expect(1);
    for (auto [d, c] : std::vector<std::pair<int, long long>>{{0, 1}, {1, -3}, {2, 4}, {3, -3}, {4, 1}})
        expect.addTerm(Expo{d}, BigInt(c));
    CHECK(subwordSum(W, word, u, rs) == RatFun::fromPoly(expect));
    CHECK(subwordSumSerial(W, word, u, rs) == RatFun::fromPoly(expect));
    CHECK(subwordSumDP(W, word, u, rs) == RatFun::fromPoly(expect));

    // reduced-word precondition
    std::vector<int> bad{0, 0};
    CHECK_THROWS_AS(subwordSum(W, bad, W.id(), rs), std::invalid_argument);
}

TEST_CASE("constant scheme counts subwords") {
    WeylGroup W(RootDatum::simpleType('A', 2));
    WeightScheme ones = constWeightScheme();
    CHECK(subwordSumSerial(W, {0, 0}, W.id(), ones) == RatFun::fromInt(1, BigInt(2)));
    CHECK(subwordSumDP(W, {0, 0}, W.id(), ones) == RatFun::fromInt(1, BigInt(2)));
    CHECK(subwordSumDP(W, {}, W.id(), ones) == RatFun::fromInt(1, BigInt(1)));
}

TEST_CASE("enumeration, DP and the parallel kernel agree") {
    WeylGroup W(RootDatum::simpleType('A', 2));
    WeightScheme rs = rWeightScheme();
    for (int w = 0; w < W.size(); ++w)
        for (int u = 0; u < W.size(); ++u) {
            RatFun a = subwordSumSerial(W, W.word(w), u, rs);
            CHECK(a == subwordSumDP(W, W.word(w), u, rs));
            CHECK(a == subwordSum(W, W.word(w), u, rs));
            for (int v = 0; v < W.size(); ++v)
                CHECK(subwordSumSerial(W, W.word(w), u, rs, v) ==
                      subwordSumDP(W, W.word(w), u, rs, v));
        }
}

TEST_CASE("the R scheme is word-independent across reduced words") {
    WeylGroup W(RootDatum::simpleType('A', 3));
    WeightScheme rs = rWeightScheme();
    for (int w = 0; w < W.size(); ++w) {
        std::vector<int> w1 = W.word(w), w2;
        int x = w;
        while (W.length(x) > 0) {  // greedy right descents give another word
            int i = 0;
            while (!W.rightDescent(x, i)) ++i;
            w2.insert(w2.begin(), i);
            x = W.rightMul(x, i);
        }
        REQUIRE(W.fromWord(w2) == w);
        for (int u = 0; u < W.size(); ++u)
            CHECK(subwordSumDP(W, w1, u, rs) == subwordSumDP(W, w2, u, rs));
    }
}

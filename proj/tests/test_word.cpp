#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlcoh/word.hpp"

#include <set>

using namespace dlcoh;

namespace {

Word w_(std::initializer_list<int> letters, int n) {
    return Word(std::vector<int>(letters), n);
}

// every word over 1..n-1 of the given length
std::vector<Word> all_words(int n, int len) {
    std::vector<Word> out;
    std::vector<int> cur(static_cast<std::size_t>(len), 1);
    if (len == 0)
        return {Word({}, n)};
    while (true) {
        out.push_back(Word(std::vector<int>(cur), n));
        int i = len - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) {
            cur[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace

TEST_CASE("apply_c") {
    CHECK(apply_c(w_({1, 2, 1}, 3)) == w_({2, 1, 1}, 3));
    CHECK(apply_c(w_({1}, 2)) == w_({1}, 2));
    CHECK(apply_c(w_({1, 2, 3}, 4)) == w_({2, 3, 1}, 4));
    CHECK_THROWS_AS(apply_c(Word({}, 3)), std::invalid_argument);
}

TEST_CASE("apply_k") {
    CHECK(apply_k(w_({1, 3}, 4), 1) == w_({3, 1}, 4));
    CHECK(apply_k(w_({2, 4, 1}, 5), 1) == w_({4, 2, 1}, 5));
    CHECK_THROWS_AS(apply_k(w_({1, 2}, 3), 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_k(w_({1, 3}, 4), 2), std::invalid_argument);
}

TEST_CASE("apply_r") {
    CHECK(apply_r(w_({1, 2, 1}, 3), 1) == w_({2, 1, 2}, 3));
    CHECK(apply_r(w_({3, 1, 2, 1}, 4), 2) == w_({3, 2, 1, 2}, 4));
    CHECK_THROWS_AS(apply_r(w_({1, 3, 1}, 4), 1), std::invalid_argument);
    CHECK_THROWS_AS(apply_r(w_({1, 2, 1}, 3), 2), std::invalid_argument);
}

TEST_CASE("contract") {
    CHECK(contract(w_({1, 2, 1}, 3), ContractSide::Left) == w_({2, 1}, 3));
    CHECK(contract(w_({1, 1}, 2), ContractSide::Right) == w_({1}, 2));
    CHECK(contract(w_({1, 2, 1}, 3), ContractSide::Right) == w_({1, 2}, 3));
    CHECK_THROWS_AS(contract(w_({1, 2}, 3), ContractSide::Left), std::invalid_argument);
    CHECK_THROWS_AS(contract(w_({1}, 3), ContractSide::Left), std::invalid_argument);
}

TEST_CASE("moves preserve support, C/K/R preserve length, contract drops one") {
    for (int n = 2; n <= 4; ++n)
        for (int len = 1; len <= 5; ++len)
            for (const auto& w : all_words(n, len)) {
                GeneratorSet supp = support(w);
                CHECK(support(apply_c(w)) == supp);
                CHECK(apply_c(w).length() == w.length());
                for (int pos = 1; pos + 1 <= len; ++pos) {
                    int s = w.letters[static_cast<std::size_t>(pos - 1)];
                    int t = w.letters[static_cast<std::size_t>(pos)];
                    if (std::abs(s - t) >= 2) {
                        CHECK(support(apply_k(w, pos)) == supp);
                        CHECK(apply_k(w, pos).length() == w.length());
                    }
                }
                for (int pos = 1; pos + 2 <= len; ++pos) {
                    int s = w.letters[static_cast<std::size_t>(pos - 1)];
                    int t = w.letters[static_cast<std::size_t>(pos)];
                    if (w.letters[static_cast<std::size_t>(pos + 1)] == s &&
                        std::abs(s - t) == 1) {
                        CHECK(support(apply_r(w, pos)) == supp);
                        CHECK(apply_r(w, pos).length() == w.length());
                    }
                }
                if (len >= 2 && w.letters.front() == w.letters.back()) {
                    CHECK(support(contract(w, ContractSide::Left)) == supp);
                    CHECK(contract(w, ContractSide::Left).length() == w.length() - 1);
                    CHECK(support(contract(w, ContractSide::Right)) == supp);
                }
            }
}

TEST_CASE("K and R agree with the group relations") {
    for (int n = 2; n <= 4; ++n)
        for (int len = 2; len <= 4; ++len)
            for (const auto& w : all_words(n, len)) {
                for (int pos = 1; pos + 1 <= len; ++pos) {
                    int s = w.letters[static_cast<std::size_t>(pos - 1)];
                    int t = w.letters[static_cast<std::size_t>(pos)];
                    if (std::abs(s - t) >= 2)
                        CHECK(weyl_image(apply_k(w, pos)) == weyl_image(w));
                }
                for (int pos = 1; pos + 2 <= len; ++pos) {
                    int s = w.letters[static_cast<std::size_t>(pos - 1)];
                    int t = w.letters[static_cast<std::size_t>(pos)];
                    if (w.letters[static_cast<std::size_t>(pos + 1)] == s &&
                        std::abs(s - t) == 1)
                        CHECK(weyl_image(apply_r(w, pos)) == weyl_image(w));
                }
            }
}

TEST_CASE("reduce_to_coxeter base cases") {
    auto t0 = reduce_to_coxeter(w_({1, 2}, 3));
    CHECK(t0.steps.empty());
    CHECK(t0.result == w_({1, 2}, 3));
    CHECK(t0.completed);

    auto t1 = reduce_to_coxeter(w_({1, 2, 1}, 3));
    REQUIRE(t1.steps.size() == 1);
    CHECK(t1.steps[0].kind == RewriteKind::ContractLeft);
    CHECK(t1.result == w_({2, 1}, 3));

    auto t2 = reduce_to_coxeter(w_({1, 1}, 2));
    REQUIRE(t2.steps.size() == 1);
    CHECK(t2.result == w_({1}, 2));

    CHECK_THROWS_AS(reduce_to_coxeter(Word({}, 3)), std::invalid_argument);
}

TEST_CASE("reduce_to_coxeter: totality and budget bound on small words") {
    for (int n = 2; n <= 4; ++n)
        for (int len = 1; len <= 6; ++len)
            for (const auto& w : all_words(n, len)) {
                std::size_t budget = 10;
                for (int i = 0; i < len; ++i)
                    budget *= 4;
                auto trace = reduce_to_coxeter(w, budget);
                CHECK(trace.completed);
                CHECK(all_distinct_letters(trace.result));
                CHECK(support(trace.result) == support(w));
                CHECK(trace.result.length() == support(w).size());
                trace.validate();
            }
}

TEST_CASE("reduce_to_coxeter: budget exhaustion reports a partial trace") {
    auto trace = reduce_to_coxeter(w_({1, 2, 1, 3, 2, 1}, 4), 2);
    CHECK_FALSE(trace.completed);
    CHECK(trace.budget_used >= 2);
    trace.validate();
}

TEST_CASE("reduced words of the same element reduce to words of equal support") {
    std::vector<int> img{1, 2, 3, 4};
    std::sort(img.begin(), img.end());
    do {
        WeylElement w{std::vector<int>(img)};
        GeneratorSet supp = support(w);
        for (const auto& rw : all_reduced_words(w)) {
            if (rw.empty())
                continue;
            auto trace = reduce_to_coxeter(Word(std::vector<int>(rw), 4));
            CHECK(support(trace.result) == supp);
        }
    } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("subword_positions") {
    auto one = subword_positions(w_({1, 2}, 3), 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].positions == std::vector<int>{1});
    CHECK(one[0].word == w_({1}, 3));
    CHECK(one[1].word == w_({2}, 3));

    auto zero = subword_positions(w_({1, 2}, 3), 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].word.empty());

    auto two = subword_positions(w_({1, 2, 3}, 4), 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0].word == w_({1, 2}, 4));
    CHECK(two[1].word == w_({1, 3}, 4));
    CHECK(two[2].word == w_({2, 3}, 4));

    // repeated letters: position subsets stay distinct even when words agree
    auto rep = subword_positions(w_({1, 1}, 2), 1);
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].word == rep[1].word);
    CHECK(rep[0].positions != rep[1].positions);
}

TEST_CASE("deletion signs: removing r then r' < r flips against r' then r-1") {
    // the sign rule pairs (-1)^r with the 1-based position of the deleted
    // letter; the two orders of deleting two fixed positions must disagree
    Word w = w_({1, 2, 3, 1}, 4);
    for (int r = 2; r <= 4; ++r)
        for (int rp = 1; rp < r; ++rp) {
            int first_then_second = (r % 2) ^ (rp % 2);          // parity of r + r'
            int second_then_first = (rp % 2) ^ ((r - 1) % 2);    // parity of r' + (r-1)
            CHECK(first_then_second != second_then_first);
        }
}

TEST_CASE("trace line format") {
    auto trace = reduce_to_coxeter(w_({1, 2, 1}, 3));
    std::string lines = trace_lines(trace);
    CHECK(lines == "CONTRACT_LEFT 1 1,2,1 -> 2,1 # endpoint-contraction-left\n");
}

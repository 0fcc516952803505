#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlcoh/weyl.hpp"

#include <algorithm>
#include <set>

using namespace dlcoh;

namespace {

std::vector<WeylElement> all_elements(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<WeylElement> out;
    std::sort(img.begin(), img.end());
    do {
        out.push_back(WeylElement(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Oracle for the Bruhat order: u <= v iff some reduced word of v contains
// some reduced word of u as a (not necessarily contiguous) subword.
bool is_subword(const std::vector<int>& small, const std::vector<int>& big) {
    std::size_t i = 0;
    for (int letter : big) {
        if (i < small.size() && small[i] == letter)
            ++i;
    }
    return i == small.size();
}

bool bruhat_leq_oracle(const WeylElement& u, const WeylElement& v) {
    auto uw = all_reduced_words(u);
    auto vw = all_reduced_words(v);
    for (const auto& wv : vw)
        for (const auto& wu : uw)
            if (is_subword(wu, wv))
                return true;
    return false;
}

WeylElement w_of(int n, std::initializer_list<int> letters) {
    return from_word(n, std::vector<int>(letters));
}

}  // namespace

TEST_CASE("length basics") {
    CHECK(length(WeylElement::identity(3)) == 0);
    CHECK(length(WeylElement::generator(2, 1)) == 1);
    CHECK(length(WeylElement({3, 2, 1})) == 3);
    CHECK(from_word(3, {1, 2, 1}) == WeylElement({3, 2, 1}));
}

TEST_CASE("length equals word length of any reduced word") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_elements(n)) {
            auto rw = reduced_word(w);
            CHECK(static_cast<int>(rw.size()) == length(w));
            CHECK(from_word(n, rw) == w);
        }
}

TEST_CASE("exchange property: l(s_i w) = l(w) +- 1") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_elements(n))
            for (int i = 1; i < n; ++i) {
                int d = length(mul(WeylElement::generator(n, i), w)) - length(w);
                CHECK((d == 1 || d == -1));
            }
}

TEST_CASE("bruhat order") {
    WeylElement e = WeylElement::identity(3);
    CHECK(bruhat_leq(e, w_of(3, {1, 2, 1})));
    CHECK(bruhat_leq(w_of(3, {1}), w_of(3, {1, 2, 1})));
    CHECK_FALSE(bruhat_leq(w_of(3, {1, 2}), w_of(3, {2, 1})));
    CHECK_THROWS_AS(bruhat_leq(WeylElement::identity(2), e), std::invalid_argument);

    for (int n = 2; n <= 4; ++n) {
        auto elems = all_elements(n);
        for (const auto& u : elems)
            for (const auto& v : elems)
                CHECK(bruhat_leq(u, v) == bruhat_leq_oracle(u, v));
    }
}

TEST_CASE("support") {
    CHECK(support(WeylElement::identity(3)).empty());
    CHECK(support(w_of(3, {1, 2, 1})) == GeneratorSet({1, 2}));
    CHECK(support(w_of(4, {2})) == GeneratorSet({2}));

    // support = letter set of every reduced word
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_elements(n)) {
            GeneratorSet supp = support(w);
            for (const auto& rw : all_reduced_words(w)) {
                GeneratorSet letters{std::vector<int>(rw)};
                CHECK(letters == supp);
            }
        }
}

TEST_CASE("is_coxeter") {
    CHECK(is_coxeter(w_of(3, {1, 2}), GeneratorSet({1, 2})));
    CHECK_FALSE(is_coxeter(w_of(3, {1, 2, 1}), GeneratorSet({1, 2})));
    CHECK(is_coxeter(WeylElement::identity(3), GeneratorSet()));
    CHECK_THROWS_AS(is_coxeter(w_of(3, {1, 2}), GeneratorSet({1})), std::invalid_argument);
}

TEST_CASE("conjugacy classes and C_min") {
    WeylElement e = WeylElement::identity(3);
    CHECK(conjugacy_class(e) == std::vector<WeylElement>{e});

    auto cls = conjugacy_class(w_of(3, {1}));
    std::set<WeylElement> got(cls.begin(), cls.end());
    std::set<WeylElement> want{WeylElement({2, 1, 3}), WeylElement({1, 3, 2}),
                               WeylElement({3, 2, 1})};
    CHECK(got == want);

    auto cycles = conjugacy_class(w_of(3, {1, 2}));
    std::set<WeylElement> got3(cycles.begin(), cycles.end());
    std::set<WeylElement> want3{WeylElement({2, 3, 1}), WeylElement({3, 1, 2})};
    CHECK(got3 == want3);

    auto mins = cmin(w_of(3, {1}));
    std::set<WeylElement> gotmin(mins.begin(), mins.end());
    std::set<WeylElement> wantmin{WeylElement({2, 1, 3}), WeylElement({1, 3, 2})};
    CHECK(gotmin == wantmin);
    CHECK(cmin(e) == std::vector<WeylElement>{e});
    auto mins2 = cmin(w_of(3, {1, 2, 1}));
    CHECK(std::set<WeylElement>(mins2.begin(), mins2.end()) == wantmin);

    CHECK_THROWS_AS(conjugacy_class(WeylElement::identity(8)), BoundExceeded);
}

TEST_CASE("immediate length-2 descents: complete up to rank 4, plateaus from rank 5") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_elements(n)) {
            int min_len = min_class_length(w);
            bool in_min = length(w) == min_len;
            bool has_drop = false;
            for (int i = 1; i < n; ++i)
                if (length(conjugate_by_generator(w, i)) == length(w) - 2)
                    has_drop = true;
            CHECK(in_min != has_drop);
        }

    // In S_5 exactly ten elements sit above their class minimum with no
    // single-conjugation drop; reaching C_min from them needs equal-length
    // steps first.
    std::vector<WeylElement> stuck;
    for (const auto& w : all_elements(5)) {
        if (length(w) == min_class_length(w))
            continue;
        bool has_drop = false;
        for (int i = 1; i < 5; ++i)
            if (length(conjugate_by_generator(w, i)) == length(w) - 2)
                has_drop = true;
        if (!has_drop)
            stuck.push_back(w);
    }
    CHECK(stuck.size() == 10);
    CHECK(std::count(stuck.begin(), stuck.end(), WeylElement({3, 4, 5, 1, 2})) == 1);
}

TEST_CASE("height") {
    CHECK(height(w_of(3, {1, 2})) == 0);
    CHECK(height(w_of(4, {1, 2, 3})) == 0);
    CHECK(height(w_of(3, {1, 2, 1})) == 1);

    // w' a Coxeter element avoiding s_i, w = s_i w' s_i of full length
    WeylElement wp = w_of(4, {1, 3});   // Coxeter for {s_1, s_3}
    WeylElement w = mul(WeylElement::generator(4, 2), mul(wp, WeylElement::generator(4, 2)));
    REQUIRE(length(w) == length(wp) + 2);
    CHECK(height(wp) == 0);
    CHECK(height(w) == 1);

    // height 0 iff Coxeter element of some W_J
    for (int n = 2; n <= 4; ++n)
        for (const auto& v : all_elements(n)) {
            bool cox = is_coxeter(v, support(v));
            CHECK((height(v) == 0) == cox);
        }

    // the recursion is undefined where no immediate drop exists
    CHECK_THROWS_AS(height(WeylElement({3, 4, 5, 1, 2})), std::logic_error);
}

TEST_CASE("gp_reduce") {
    auto [r1, c1] = gp_reduce(w_of(3, {1}));
    CHECK(r1 == w_of(3, {1}));
    CHECK(c1.steps.empty());

    auto [r2, c2] = gp_reduce(w_of(3, {1, 2, 1}));
    CHECK(r2 == w_of(3, {2}));
    REQUIRE(c2.steps.size() == 1);
    CHECK(c2.steps[0].generator == 1);

    auto [r3, c3] = gp_reduce(w_of(4, {2, 1, 3}));
    CHECK(r3 == w_of(4, {2, 1, 3}));
    CHECK(c3.steps.empty());

    // result length equals the class minimum, chain stays in the class;
    // rank 5 exercises the plateau walk
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_elements(n)) {
            auto [r, chain] = gp_reduce(w);
            CHECK(length(r) == min_class_length(w));
            chain.validate();
            CHECK(chain.last() == r);
            auto mins = cmin(w);
            CHECK(std::count(mins.begin(), mins.end(), r) == 1);
        }
}

TEST_CASE("coxeter_shift_path") {
    auto c0 = coxeter_shift_path(w_of(3, {1, 2}), w_of(3, {1, 2}));
    CHECK(c0.steps.empty());

    auto c1 = coxeter_shift_path(w_of(3, {1, 2}), w_of(3, {2, 1}));
    CHECK(c1.steps.size() >= 1);
    for (const auto& st : c1.steps)
        CHECK(length(st.result) == 2);
    CHECK(c1.last() == w_of(3, {2, 1}));

    auto c2 = coxeter_shift_path(w_of(4, {1, 2, 3}), w_of(4, {3, 2, 1}));
    CHECK(c2.last() == w_of(4, {3, 2, 1}));
    for (const auto& st : c2.steps)
        CHECK(length(st.result) == 3);

    CHECK_THROWS_AS(coxeter_shift_path(w_of(3, {1}), w_of(3, {2, 1})), std::invalid_argument);
}

TEST_CASE("longest_element") {
    CHECK(longest_element(GeneratorSet(), 3) == WeylElement::identity(3));
    CHECK(longest_element(GeneratorSet({1}), 2) == WeylElement::generator(2, 1));
    CHECK(longest_element(GeneratorSet({1, 2}), 3) == WeylElement({3, 2, 1}));
    CHECK(length(longest_element(GeneratorSet({1, 2}), 3)) == 3);
    CHECK(longest_element(GeneratorSet({1, 3}), 4) == WeylElement({2, 1, 4, 3}));

    // oracle: maximal inversion count over the subgroup generated by I
    for (int n = 2; n <= 4; ++n) {
        auto elems = all_elements(n);
        std::vector<GeneratorSet> subsets;
        int m = n - 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i))
                    idx.push_back(i + 1);
            subsets.push_back(GeneratorSet(std::move(idx)));
        }
        for (const auto& I : subsets) {
            int best = 0;
            for (const auto& w : elems)
                if (support(w).subset_of(I))
                    best = std::max(best, length(w));
            CHECK(length(longest_element(I, n)) == best);
        }
    }
}

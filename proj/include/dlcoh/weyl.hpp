#pragma once

// The symmetric group S_n as a Coxeter system.
//
// Elements are stored in one-line notation (images of 1..n); the generators
// s_1..s_{n-1} are the adjacent transpositions. Bruhat length is the
// inversion count. On top of the basics this header provides the conjugacy
// machinery used throughout: conjugacy classes by closure under generator
// conjugation, the minimal-length locus C_min of a class, heights (number of
// length-dropping conjugations needed to reach C_min), reduction into C_min
// by non-increasing conjugation chains, and equal-length conjugation paths
// between Coxeter elements.
//
// Everything here is exact and brute-force; ranks are capped by a caller
// visible bound (default 7, i.e. at most 5040 group elements).

#include "dlcoh/common.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace dlcoh {

struct GeneratorSet {
    std::vector<int> indices;   // sorted, unique, values in 1..n-1

    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<int> idx) : indices(std::move(idx)) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        for (int i : indices)
            if (i < 1)
                throw std::invalid_argument("GeneratorSet: indices must be >= 1");
    }

    static GeneratorSet full(int n) {
        std::vector<int> idx;
        for (int i = 1; i < n; ++i)
            idx.push_back(i);
        return GeneratorSet(std::move(idx));
    }

    bool contains(int i) const {
        return std::binary_search(indices.begin(), indices.end(), i);
    }
    bool subset_of(const GeneratorSet& other) const {
        return std::includes(other.indices.begin(), other.indices.end(),
                             indices.begin(), indices.end());
    }
    std::size_t size() const { return indices.size(); }
    bool empty() const { return indices.empty(); }

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.indices == b.indices;
    }
    friend bool operator<(const GeneratorSet& a, const GeneratorSet& b) {
        return a.indices < b.indices;
    }
};

struct WeylElement {
    std::vector<int> images;   // images[i-1] = w(i), a permutation of 1..n

    WeylElement() = default;
    explicit WeylElement(std::vector<int> img) : images(std::move(img)) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("WeylElement: not a permutation of 1..n");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    int rank() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

    static WeylElement identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<std::size_t>(i)] = i + 1;
        return WeylElement(std::move(img));
    }

    static WeylElement generator(int n, int i) {
        if (i < 1 || i >= n)
            throw std::invalid_argument("generator index out of range");
        WeylElement w = identity(n);
        std::swap(w.images[static_cast<std::size_t>(i - 1)], w.images[static_cast<std::size_t>(i)]);
        return w;
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (images[static_cast<std::size_t>(i)] != i + 1)
                return false;
        return true;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.images == b.images;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) {
        return a.images != b.images;
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b) {
        return a.images < b.images;
    }
};

inline void require_same_rank(const WeylElement& a, const WeylElement& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("rank mismatch");
}

// (u*v)(i) = u(v(i))
inline WeylElement mul(const WeylElement& u, const WeylElement& v) {
    require_same_rank(u, v);
    std::vector<int> img(u.images.size());
    for (int i = 1; i <= u.rank(); ++i)
        img[static_cast<std::size_t>(i - 1)] = u(v(i));
    return WeylElement(std::move(img));
}

inline WeylElement inverse(const WeylElement& w) {
    std::vector<int> img(w.images.size());
    for (int i = 1; i <= w.rank(); ++i)
        img[static_cast<std::size_t>(w(i) - 1)] = i;
    return WeylElement(std::move(img));
}

// s_i * w * s_i
inline WeylElement conjugate_by_generator(const WeylElement& w, int i) {
    WeylElement s = WeylElement::generator(w.rank(), i);
    return mul(s, mul(w, s));
}

inline int length(const WeylElement& w) {
    int inv = 0;
    int n = w.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j))
                ++inv;
    return inv;
}

// right descent: l(w s_i) < l(w)
inline bool has_right_descent(const WeylElement& w, int i) {
    return w(i) > w(i + 1);
}

// left descent: l(s_i w) < l(w)
inline bool has_left_descent(const WeylElement& w, int i) {
    // s_i w swaps the values i, i+1; it shortens w iff i+1 appears before i
    int pos_i = 0, pos_i1 = 0;
    for (int k = 1; k <= w.rank(); ++k) {
        if (w(k) == i)
            pos_i = k;
        else if (w(k) == i + 1)
            pos_i1 = k;
    }
    return pos_i1 < pos_i;
}

inline WeylElement from_word(int n, const std::vector<int>& letters) {
    WeylElement w = WeylElement::identity(n);
    for (int s : letters)
        w = mul(w, WeylElement::generator(n, s));
    return w;
}

// Lexicographically smallest reduced word, by peeling right descents.
inline std::vector<int> reduced_word(const WeylElement& w) {
    std::vector<int> out;
    WeylElement cur = w;
    while (!cur.is_identity()) {
        int d = 0;
        for (int i = 1; i < cur.rank(); ++i)
            if (has_right_descent(cur, i)) {
                d = i;
                break;
            }
        out.push_back(d);
        cur = mul(cur, WeylElement::generator(cur.rank(), d));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// All reduced words, in lexicographic order (descent recursion).
inline std::vector<std::vector<int>> all_reduced_words(const WeylElement& w) {
    if (w.is_identity())
        return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 1; i < w.rank(); ++i) {
        if (!has_left_descent(w, i))
            continue;
        WeylElement rest = mul(WeylElement::generator(w.rank(), i), w);
        for (auto& tail : all_reduced_words(rest)) {
            std::vector<int> word;
            word.reserve(tail.size() + 1);
            word.push_back(i);
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

// Bruhat order via the standard descent recursion:
// for s with l(sv) < l(v):  u <= v  iff  (su <= sv when l(su) < l(u), else u <= sv).
inline bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
    require_same_rank(u, v);
    if (u.is_identity())
        return true;
    if (length(u) > length(v))
        return false;
    int s = 0;
    for (int i = 1; i < v.rank(); ++i)
        if (has_left_descent(v, i)) {
            s = i;
            break;
        }
    WeylElement sv = mul(WeylElement::generator(v.rank(), s), v);
    if (has_left_descent(u, s))
        return bruhat_leq(mul(WeylElement::generator(u.rank(), s), u), sv);
    return bruhat_leq(u, sv);
}

inline GeneratorSet support(const WeylElement& w) {
    std::vector<int> letters = reduced_word(w);
    return GeneratorSet(std::move(letters));
}

// True iff w has a reduced word using each generator of I exactly once.
inline bool is_coxeter(const WeylElement& w, const GeneratorSet& I) {
    GeneratorSet supp = support(w);
    if (!supp.subset_of(I))
        throw std::invalid_argument("is_coxeter: element lies outside W_I");
    return static_cast<std::size_t>(length(w)) == I.size() && supp == I;
}

inline constexpr int kDefaultRankBound = 7;

inline void check_rank_bound(const WeylElement& w, int bound) {
    if (w.rank() > bound)
        throw BoundExceeded("rank " + std::to_string(w.rank()) +
                            " exceeds brute-force bound " + std::to_string(bound));
}

// Closure of {w} under conjugation by generators. The generators generate W,
// so this is the full conjugacy class.
inline std::vector<WeylElement> conjugacy_class(const WeylElement& w,
                                                int bound = kDefaultRankBound) {
    check_rank_bound(w, bound);
    std::set<WeylElement> seen{w};
    std::queue<WeylElement> todo;
    todo.push(w);
    while (!todo.empty()) {
        WeylElement cur = todo.front();
        todo.pop();
        for (int i = 1; i < w.rank(); ++i) {
            WeylElement nxt = conjugate_by_generator(cur, i);
            if (seen.insert(nxt).second)
                todo.push(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<WeylElement> cmin(const WeylElement& w, int bound = kDefaultRankBound) {
    std::vector<WeylElement> cls = conjugacy_class(w, bound);
    int best = length(w);
    for (const auto& v : cls)
        best = std::min(best, length(v));
    std::vector<WeylElement> out;
    for (const auto& v : cls)
        if (length(v) == best)
            out.push_back(v);
    return out;
}

inline int min_class_length(const WeylElement& w, int bound = kDefaultRankBound) {
    std::vector<WeylElement> cls = conjugacy_class(w, bound);
    int best = length(w);
    for (const auto& v : cls)
        best = std::min(best, length(v));
    return best;
}

// ht(w) = 0 on C_min, else 1 + the minimum of ht(sws) over generators s
// dropping the length by exactly 2, the minimum taken over the branches on
// which the recursion is defined. From rank 5 on, elements outside C_min may
// admit no admissible descent at all (only equal-length conjugations); the
// recursion is undefined there and throws.
inline int height(const WeylElement& w, int bound = kDefaultRankBound) {
    check_rank_bound(w, bound);
    int min_len = min_class_length(w, bound);
    // -1 marks an element on which the recursion is undefined
    std::map<WeylElement, int> memo;
    auto rec = [&](auto&& self, const WeylElement& v) -> int {
        if (length(v) == min_len)
            return 0;
        auto it = memo.find(v);
        if (it != memo.end())
            return it->second;
        int best = -1;
        for (int i = 1; i < v.rank(); ++i) {
            WeylElement c = conjugate_by_generator(v, i);
            if (length(c) == length(v) - 2) {
                int h = self(self, c);
                if (h >= 0 && (best < 0 || h + 1 < best))
                    best = h + 1;
            }
        }
        memo[v] = best;
        return best;
    };
    int h = rec(rec, w);
    if (h < 0)
        throw std::logic_error("height: no admissible length-2 descent outside C_min");
    return h;
}

struct ConjugationStep {
    int generator;        // the s used
    WeylElement result;   // s * previous * s
};

struct ConjugationChain {
    WeylElement start;
    std::vector<ConjugationStep> steps;

    const WeylElement& last() const {
        return steps.empty() ? start : steps.back().result;
    }

    // each step must conjugate the previous element, lengths non-increasing
    void validate() const {
        WeylElement cur = start;
        int len = length(cur);
        for (const auto& st : steps) {
            WeylElement expect = conjugate_by_generator(cur, st.generator);
            if (expect != st.result)
                throw std::logic_error("ConjugationChain: step does not conjugate");
            int l = length(st.result);
            if (l > len)
                throw std::logic_error("ConjugationChain: length increased");
            len = l;
            cur = st.result;
        }
    }
};

// Reduction into C_min by generator conjugations with non-increasing
// lengths. An immediate length drop need not exist (from rank 5 on some
// elements only admit equal-length conjugations), so each round walks the
// equal-length plateau breadth-first until a length-2 drop appears.
inline std::pair<WeylElement, ConjugationChain> gp_reduce(const WeylElement& w,
                                                          int bound = kDefaultRankBound) {
    check_rank_bound(w, bound);
    int min_len = min_class_length(w, bound);
    ConjugationChain chain{w, {}};
    WeylElement cur = w;
    while (length(cur) > min_len) {
        int len = length(cur);
        std::map<WeylElement, std::pair<WeylElement, int>> parent;
        std::queue<WeylElement> todo;
        parent.emplace(cur, std::make_pair(cur, 0));
        todo.push(cur);
        std::optional<std::pair<WeylElement, int>> drop;   // (plateau node, generator)
        while (!todo.empty() && !drop) {
            WeylElement node = todo.front();
            todo.pop();
            for (int i = 1; i < cur.rank() && !drop; ++i) {
                WeylElement c = conjugate_by_generator(node, i);
                int l = length(c);
                if (l == len - 2)
                    drop = std::make_pair(node, i);
                else if (l == len && parent.emplace(c, std::make_pair(node, i)).second)
                    todo.push(c);
            }
        }
        if (!drop)
            throw std::logic_error("gp_reduce: no length drop reachable on plateau");

        std::vector<ConjugationStep> rev;
        WeylElement node = drop->first;
        while (node != cur) {
            auto [prev, gen] = parent.at(node);
            rev.push_back({gen, node});
            node = prev;
        }
        std::reverse(rev.begin(), rev.end());
        for (auto& st : rev)
            chain.steps.push_back(std::move(st));
        WeylElement down = conjugate_by_generator(drop->first, drop->second);
        chain.steps.push_back({drop->second, down});
        cur = down;
    }
    chain.validate();
    return {cur, chain};
}

// Equal-length conjugation path between two Coxeter elements of W, by
// breadth-first search on the graph {v : l(v) = l(w1)} with edges v -> svs.
inline ConjugationChain coxeter_shift_path(const WeylElement& w1, const WeylElement& w2,
                                           int bound = kDefaultRankBound) {
    require_same_rank(w1, w2);
    check_rank_bound(w1, bound);
    GeneratorSet full = GeneratorSet::full(w1.rank());
    if (!is_coxeter(w1, full) || !is_coxeter(w2, full))
        throw std::invalid_argument("coxeter_shift_path: inputs must be Coxeter elements of W");

    int len = length(w1);
    std::map<WeylElement, std::pair<WeylElement, int>> parent;   // node -> (prev, gen)
    std::queue<WeylElement> todo;
    parent.emplace(w1, std::make_pair(w1, 0));
    todo.push(w1);
    while (!todo.empty() && parent.find(w2) == parent.end()) {
        WeylElement cur = todo.front();
        todo.pop();
        for (int i = 1; i < w1.rank(); ++i) {
            WeylElement nxt = conjugate_by_generator(cur, i);
            if (length(nxt) != len)
                continue;
            if (parent.emplace(nxt, std::make_pair(cur, i)).second)
                todo.push(nxt);
        }
    }
    if (parent.find(w2) == parent.end())
        throw std::logic_error("coxeter_shift_path: no path found");

    std::vector<ConjugationStep> rev;
    WeylElement cur = w2;
    while (cur != w1) {
        auto [prev, gen] = parent.at(cur);
        rev.push_back({gen, cur});
        cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    ConjugationChain chain{w1, std::move(rev)};
    chain.validate();
    return chain;
}

// Runs of consecutive generator indices; a run {a..b} acts on positions a..b+1.
inline std::vector<std::pair<int, int>> generator_runs(const GeneratorSet& I) {
    std::vector<std::pair<int, int>> runs;
    for (std::size_t k = 0; k < I.indices.size();) {
        std::size_t j = k;
        while (j + 1 < I.indices.size() && I.indices[j + 1] == I.indices[j] + 1)
            ++j;
        runs.emplace_back(I.indices[k], I.indices[j]);
        k = j + 1;
    }
    return runs;
}

// Longest element of W_I: reverse each Levi block.
inline WeylElement longest_element(const GeneratorSet& I, int n) {
    for (int i : I.indices)
        if (i >= n)
            throw std::invalid_argument("longest_element: generator index out of range");
    WeylElement w = WeylElement::identity(n);
    for (auto [a, b] : generator_runs(I))
        std::reverse(w.images.begin() + (a - 1), w.images.begin() + (b + 1));
    return w;
}

}  // namespace dlcoh

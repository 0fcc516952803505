#pragma once

// Words in the free monoid on the generators s_1..s_{n-1}, and the rewrite
// system used to shorten them without changing the invariants we track:
//
//   C              s w'      -> w' s            (cyclic shift)
//   K  at pos      .. s t .. -> .. t s ..       when |s-t| >= 2
//   R  at pos      .. s t s  .. -> .. t s t ..  when |s-t| == 1
//   CONTRACT       s w' s    -> w' s  or  s w'  (drop one endpoint copy)
//
// C, K, R preserve the word length; CONTRACT drops it by one. All four
// preserve the support. reduce_to_coxeter drives a word down to a
// distinct-letter word of length |supp(w)| and returns the full step trace.

#include "dlcoh/weyl.hpp"

#include <cstddef>
#include <map>
#include <queue>
#include <string>
#include <vector>

namespace dlcoh {

struct Word {
    std::vector<int> letters;   // values in 1..n-1
    int n = 1;                  // rank: the ambient group is S_n

    Word() = default;
    Word(std::vector<int> l, int rank) : letters(std::move(l)), n(rank) {
        for (int s : letters)
            if (s < 1 || s >= n)
                throw std::invalid_argument("Word: letter out of range 1..n-1");
    }

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.n == b.n && a.letters == b.letters;
    }
    friend bool operator<(const Word& a, const Word& b) {
        return a.letters < b.letters;
    }
};

inline GeneratorSet support(const Word& w) {
    return GeneratorSet(std::vector<int>(w.letters));
}

inline bool all_distinct_letters(const Word& w) {
    return support(w).size() == w.length();
}

inline WeylElement weyl_image(const Word& w) {
    return from_word(w.n, w.letters);
}

inline std::string word_str(const Word& w) {
    if (w.empty())
        return "e";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(w.letters[i]);
    }
    return out;
}

enum class RewriteKind { C, K, R, ContractLeft, ContractRight };

inline const char* kind_name(RewriteKind k) {
    switch (k) {
        case RewriteKind::C: return "C";
        case RewriteKind::K: return "K";
        case RewriteKind::R: return "R";
        case RewriteKind::ContractLeft: return "CONTRACT_LEFT";
        case RewriteKind::ContractRight: return "CONTRACT_RIGHT";
    }
    return "?";
}

inline const char* kind_justification(RewriteKind k) {
    switch (k) {
        case RewriteKind::C: return "cyclic-shift";
        case RewriteKind::K: return "commutation-swap";
        case RewriteKind::R: return "braid-substitution";
        case RewriteKind::ContractLeft: return "endpoint-contraction-left";
        case RewriteKind::ContractRight: return "endpoint-contraction-right";
    }
    return "?";
}

struct RewriteStep {
    RewriteKind kind;
    int position;        // 1-based index where the rule applied
    Word before;
    Word after;
    std::string justification;
};

inline Word apply_c(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("apply_c: empty word");
    std::vector<int> l(w.letters.begin() + 1, w.letters.end());
    l.push_back(w.letters.front());
    return Word(std::move(l), w.n);
}

inline Word apply_k(const Word& w, int pos) {
    if (pos < 1 || static_cast<std::size_t>(pos) + 1 > w.length())
        throw std::invalid_argument("apply_k: position out of range");
    int s = w.letters[static_cast<std::size_t>(pos - 1)];
    int t = w.letters[static_cast<std::size_t>(pos)];
    if (std::abs(s - t) < 2)
        throw std::invalid_argument("apply_k: letters do not commute");
    Word out = w;
    std::swap(out.letters[static_cast<std::size_t>(pos - 1)],
              out.letters[static_cast<std::size_t>(pos)]);
    return out;
}

inline Word apply_r(const Word& w, int pos) {
    if (pos < 1 || static_cast<std::size_t>(pos) + 2 > w.length())
        throw std::invalid_argument("apply_r: position out of range");
    int s = w.letters[static_cast<std::size_t>(pos - 1)];
    int t = w.letters[static_cast<std::size_t>(pos)];
    int s2 = w.letters[static_cast<std::size_t>(pos + 1)];
    if (s != s2 || std::abs(s - t) != 1)
        throw std::invalid_argument("apply_r: no braid pattern s,t,s at position");
    Word out = w;
    out.letters[static_cast<std::size_t>(pos - 1)] = t;
    out.letters[static_cast<std::size_t>(pos)] = s;
    out.letters[static_cast<std::size_t>(pos + 1)] = t;
    return out;
}

enum class ContractSide { Left, Right };

inline Word contract(const Word& w, ContractSide side) {
    if (w.length() < 2 || w.letters.front() != w.letters.back())
        throw std::invalid_argument("contract: first and last letters differ");
    std::vector<int> l;
    if (side == ContractSide::Left)
        l.assign(w.letters.begin() + 1, w.letters.end());
    else
        l.assign(w.letters.begin(), w.letters.end() - 1);
    return Word(std::move(l), w.n);
}

struct RewriteTrace {
    Word start;
    std::vector<RewriteStep> steps;
    Word result;
    bool completed = true;          // false when the step budget ran out
    std::size_t budget_used = 0;

    void validate() const {
        Word cur = start;
        GeneratorSet supp = support(start);
        for (const auto& st : steps) {
            if (!(st.before == cur))
                throw std::logic_error("RewriteTrace: step does not chain");
            if (!(support(st.after) == supp))
                throw std::logic_error("RewriteTrace: support changed");
            cur = st.after;
        }
        if (!(cur == result))
            throw std::logic_error("RewriteTrace: result mismatch");
        if (completed) {
            if (!all_distinct_letters(result) || result.length() != supp.size())
                throw std::logic_error("RewriteTrace: incomplete reduction marked done");
        }
    }
};

inline constexpr std::size_t kDefaultRewriteBudget = 100000;

namespace detail {

struct Move {
    RewriteKind kind;
    int position;
};

// single C/K/R moves from w, in the deterministic expansion order
inline std::vector<Move> length_preserving_moves(const Word& w) {
    std::vector<Move> out;
    if (!w.empty())
        out.push_back({RewriteKind::C, 1});
    for (int pos = 1; static_cast<std::size_t>(pos) < w.length(); ++pos) {
        int s = w.letters[static_cast<std::size_t>(pos - 1)];
        int t = w.letters[static_cast<std::size_t>(pos)];
        if (std::abs(s - t) >= 2)
            out.push_back({RewriteKind::K, pos});
    }
    for (int pos = 1; static_cast<std::size_t>(pos) + 1 < w.length(); ++pos) {
        int s = w.letters[static_cast<std::size_t>(pos - 1)];
        int t = w.letters[static_cast<std::size_t>(pos)];
        int s2 = w.letters[static_cast<std::size_t>(pos + 1)];
        if (s == s2 && std::abs(s - t) == 1)
            out.push_back({RewriteKind::R, pos});
    }
    return out;
}

inline Word apply_move(const Word& w, const Move& m) {
    switch (m.kind) {
        case RewriteKind::C: return apply_c(w);
        case RewriteKind::K: return apply_k(w, m.position);
        case RewriteKind::R: return apply_r(w, m.position);
        default: throw std::logic_error("apply_move: not a length-preserving move");
    }
}

}  // namespace detail

// Drive w to a distinct-letter word of the same support. Strategy: contract
// whenever the endpoints agree; otherwise breadth-first search over single
// C/K/R moves for the nearest word whose endpoints agree, expanding moves in
// the order C, then K by position, then R by position. The budget counts
// applied steps plus BFS candidate words; on exhaustion the partial trace is
// returned with completed = false.
inline RewriteTrace reduce_to_coxeter(const Word& w,
                                      std::size_t budget = kDefaultRewriteBudget) {
    if (w.empty())
        throw std::invalid_argument("reduce_to_coxeter: empty word");
    RewriteTrace trace;
    trace.start = w;
    Word cur = w;

    auto push_step = [&](RewriteKind kind, int pos, const Word& before, const Word& after) {
        trace.steps.push_back({kind, pos, before, after, kind_justification(kind)});
    };

    while (!all_distinct_letters(cur)) {
        if (cur.letters.front() == cur.letters.back()) {
            if (++trace.budget_used > budget)
                break;
            Word next = contract(cur, ContractSide::Left);
            push_step(RewriteKind::ContractLeft, 1, cur, next);
            cur = std::move(next);
            continue;
        }

        // BFS over C/K/R for a word with matching endpoints
        std::map<Word, std::pair<Word, detail::Move>> parent;
        std::queue<Word> todo;
        parent.emplace(cur, std::make_pair(cur, detail::Move{RewriteKind::C, 0}));
        todo.push(cur);
        std::optional<Word> goal;
        bool out_of_budget = false;
        while (!todo.empty() && !goal && !out_of_budget) {
            Word node = todo.front();
            todo.pop();
            for (const auto& mv : detail::length_preserving_moves(node)) {
                if (++trace.budget_used > budget) {
                    out_of_budget = true;
                    break;
                }
                Word next = detail::apply_move(node, mv);
                if (!parent.emplace(next, std::make_pair(node, mv)).second)
                    continue;
                if (next.letters.front() == next.letters.back()) {
                    goal = next;
                    break;
                }
                todo.push(next);
            }
        }
        if (!goal) {
            if (out_of_budget)
                break;
            // the C/K/R orbit of a repeated-letter word always contains a
            // word with matching endpoints
            throw std::logic_error("reduce_to_coxeter: orbit exhausted without endpoint match");
        }

        std::vector<std::pair<Word, detail::Move>> rev;
        Word node = *goal;
        while (!(node == cur)) {
            auto [prev, mv] = parent.at(node);
            rev.emplace_back(node, mv);
            node = prev;
        }
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
            push_step(it->second.kind, it->second.position, cur, it->first);
            cur = it->first;
        }
    }

    trace.result = cur;
    trace.completed = all_distinct_letters(cur);
    trace.validate();
    return trace;
}

struct SubwordSelection {
    std::vector<int> positions;   // 1-based, ascending
    Word word;
};

// All position subsets of size k, lexicographic, with the subwords they cut.
inline std::vector<SubwordSelection> subword_positions(const Word& w, std::size_t k) {
    if (k > w.length())
        throw std::invalid_argument("subword_positions: k exceeds word length");
    std::vector<SubwordSelection> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == k) {
            std::vector<int> letters;
            letters.reserve(k);
            for (int p : pick)
                letters.push_back(w.letters[static_cast<std::size_t>(p - 1)]);
            out.push_back({pick, Word(std::move(letters), w.n)});
            return;
        }
        std::size_t need = k - pick.size();
        for (std::size_t p = from; p + need <= w.length() + 1; ++p) {
            pick.push_back(static_cast<int>(p));
            self(self, p + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// line format: KIND pos BEFORE -> AFTER # justification
inline std::string step_line(const RewriteStep& st) {
    return std::string(kind_name(st.kind)) + " " + std::to_string(st.position) + " " +
           word_str(st.before) + " -> " + word_str(st.after) + " # " + st.justification;
}

inline std::string trace_lines(const RewriteTrace& trace) {
    std::string out;
    for (const auto& st : trace.steps) {
        out += step_line(st);
        out += '\n';
    }
    return out;
}

}  // namespace dlcoh

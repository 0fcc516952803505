#pragma once

// The acceptance suite: eight exact checks, one pass/fail line each.
//
// Everything is verified twice over wherever two independent routes exist:
// flag enumeration against q-multinomials, cokernel ranks against the
// closed-form dimensions, spectral degeneration against divisor chains.
// Checks are exact (tolerance zero). Check 6 is known to fail at rank 5:
// ten elements of S_5 sit above their class minimum with no single
// conjugation dropping the length (equal-length steps are needed first),
// so the single-step descent claim and the height recursion both break
// there; the suite reports the counterexamples rather than weakening the
// check.

#include "dlcoh/engine.hpp"

#include <chrono>
#include <random>
#include <functional>
#include <iostream>
#include <sstream>

namespace dlcoh {

enum class AcceptanceScale { Small, FullDesk };

inline const char* scale_name(AcceptanceScale s) {
    return s == AcceptanceScale::Small ? "small" : "full-desk";
}

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    AcceptanceScale scale = AcceptanceScale::FullDesk;
    unsigned seed = 0;
    std::ostream* out = &std::cout;
};

namespace detail {

struct ScaleParams {
    int complex_max_n;
    std::vector<long long> qs;
    int gp_max_n;
    int reduce_max_n;
    int reduce_max_len;
    int count_max_n;
    std::vector<std::pair<int, long long>> order_cases;
};

inline ScaleParams params_for(AcceptanceScale s) {
    if (s == AcceptanceScale::Small)
        return {3, {2, 3}, 4, 3, 5, 3, {{2, 2}, {2, 3}}};
    return {4, {2, 3}, 5, 4, 6, 4, {{2, 2}, {2, 3}, {3, 2}}};
}

inline std::vector<Word> distinct_letter_words(int n) {
    std::vector<Word> out;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(Word(std::vector<int>(cur), n));
        for (int s = 1; s < n; ++s) {
            if (used[static_cast<std::size_t>(s)])
                continue;
            used[static_cast<std::size_t>(s)] = true;
            cur.push_back(s);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(s)] = false;
        }
    };
    rec(rec);
    return out;
}

inline std::vector<Word> all_words(int n, int max_len) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(Word(std::vector<int>(cur), n));
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int s = 1; s < n; ++s) {
            cur.push_back(s);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline std::vector<WeylElement> all_elements(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<WeylElement> out;
    do {
        out.push_back(WeylElement(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

inline std::vector<GeneratorSet> all_subsets(int n) {
    std::vector<GeneratorSet> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i + 1 < n; ++i)
            if (mask & (1 << i))
                idx.push_back(i + 1);
        out.push_back(GeneratorSet(std::move(idx)));
    }
    return out;
}

inline FqMatrix random_invertible(int n, const FieldSpec& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    while (true) {
        FqMatrix m(n, n);
        for (auto& e : m.entries)
            e = static_cast<std::uint16_t>(d(rng));
        if (is_invertible(m, f))
            return m;
    }
}

inline FqMatrix random_parabolic(int n, const GeneratorSet& I, const FieldSpec& f,
                                 std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    std::vector<int> cuts = flag_dimensions(I, n);
    auto block_of = [&](int i) {
        int b = 0;
        for (int c : cuts)
            if (i >= c)
                ++b;
        return b;
    };
    while (true) {
        FqMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (block_of(i) <= block_of(j))
                    m.set(i, j, d(rng));
        if (is_invertible(m, f))
            return m;
    }
}

// one complex sweep shared by checks 1-4
struct SweepCase {
    Word word;
    int n;
    long long q;
    long long p;                      // char of q
    std::vector<long long> term_ranks;
    HomologyResult hom;
    BigInt expected_coker;            // [G:P_I] * q^{l(w_0,I)}
};

inline std::vector<SweepCase> complex_sweep(const ScaleParams& sp) {
    std::vector<SweepCase> out;
    for (int n = 2; n <= sp.complex_max_n; ++n)
        for (long long q : sp.qs)
            for (const auto& w : distinct_letter_words(n)) {
                SweepCase c{w, n, q, prime_power_decompose(q).first, {}, {}, BigInt(0)};
                ChainComplex cx = build_stseq(w, n, q);   // throws if d∘d != 0
                for (const auto& t : cx.terms)
                    c.term_ranks.push_back(t.rank);
                c.hom = homology(cx);
                GeneratorSet I = support(w);
                c.expected_coker = parabolic_index(n, q, I) * steinberg_dim(I, n, q);
                out.push_back(std::move(c));
            }
    return out;
}

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
    using Clock = std::chrono::steady_clock;
    const detail::ScaleParams sp = detail::params_for(opt.scale);
    std::vector<CriterionResult> results;

    auto run = [&](int number, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
        CriterionResult r;
        r.number = number;
        r.name = name;
        auto t0 = Clock::now();
        try {
            r.passed = body(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (opt.out) {
            std::ostringstream line;
            line << "criterion " << r.number << " " << (r.passed ? "PASS" : "FAIL") << " "
                 << r.name << " (" << r.seconds << "s)";
            if (!r.detail.empty())
                line << " -- " << r.detail;
            *opt.out << line.str() << std::endl;
        }
        results.push_back(std::move(r));
    };

    std::vector<detail::SweepCase> sweep;

    // 1: d∘d = 0, interior integer homology zero with unit divisors, d_0 injective
    run(1, "complex acyclicity", [&](std::string& detail) {
        sweep = detail::complex_sweep(sp);
        long long bad = 0;
        for (const auto& c : sweep) {
            int top = static_cast<int>(c.term_ranks.size()) - 1;
            bool ok = c.hom.d0_injective;
            for (int k = 1; k < top && ok; ++k)
                ok = c.hom.degrees[static_cast<std::size_t>(k)].free_rank == 0 &&
                     c.hom.degrees[static_cast<std::size_t>(k)].torsion.empty();
            for (int i = 0; i + 1 < top && ok; ++i)
                for (const auto& d : c.hom.boundary_divisors[static_cast<std::size_t>(i)])
                    if (!d.is_one()) {
                        ok = false;
                        break;
                    }
            if (!ok)
                ++bad;
        }
        detail = std::to_string(sweep.size()) + " complexes";
        return bad == 0;
    });

    // 2: cokernel rank equals [G:P_I] * q^{l(w_0,I)}; flagship 1,14,21 -> 8
    run(2, "steinberg cokernel", [&](std::string& detail) {
        long long bad = 0;
        bool flagship = false;
        for (const auto& c : sweep) {
            if (BigInt(c.hom.degrees.back().free_rank) != c.expected_coker)
                ++bad;
            if (c.n == 3 && c.q == 2 && c.word.letters == std::vector<int>{1, 2}) {
                flagship = c.term_ranks == std::vector<long long>{1, 14, 21} &&
                           c.hom.degrees.back().free_rank == 8;
            }
        }
        detail = flagship ? "flagship ranks 1,14,21 cokernel 8" : "flagship case missing";
        return bad == 0 && flagship;
    });

    // 3: exactness survives reduction mod p^m for m in {1,2,3}
    run(3, "mod p^m acyclicity", [&](std::string& detail) {
        long long bad = 0;
        for (const auto& c : sweep)
            for (long long m : {1, 2, 3})
                if (!pm_acyclic(c.hom, c.p, m))
                    ++bad;
        detail = std::to_string(sweep.size() * 3) + " reductions";
        return bad == 0;
    });

    // 4: E2 concentrated at (l(w), 0) with the criterion-2 dimension
    run(4, "spectral degeneration", [&](std::string& detail) {
        long long bad = 0;
        for (const auto& c : sweep) {
            int top = static_cast<int>(c.term_ranks.size()) - 1;
            for (long long m : {1, 2}) {
                bool ok = true;
                for (int k = 0; k < top; ++k)
                    if (c.hom.pm_homology_length(k, c.p, m) != 0)
                        ok = false;
                long long top_len = c.hom.pm_homology_length(top, c.p, m);
                if (top_len % m != 0 || BigInt(top_len / m) != c.expected_coker)
                    ok = false;
                if (!ok)
                    ++bad;
            }
            // the engine-facing page builder must agree on the small cases
            if (c.n <= 3) {
                auto [e1, e2] = spectral_pages(c.word, c.n, c.q, c.p, 1);
                for (int i = 0; i <= top; ++i)
                    if (e1.at(i, 0) != BigInt(c.term_ranks[static_cast<std::size_t>(i)]))
                        ++bad;
                if (e2.at(top, 0) != c.expected_coker)
                    ++bad;
            }
        }
        detail = std::to_string(sweep.size()) + " spectral sequences";
        return bad == 0;
    });

    // 5: flag counts match q-multinomials; group orders match brute force;
    // seeded spot-check of flag canonicity under right parabolic action
    run(5, "counting cross-validation", [&](std::string& detail) {
        long long bad = 0, checked = 0;
        std::mt19937 rng(opt.seed);
        for (int n = 2; n <= sp.count_max_n; ++n)
            for (long long q : sp.qs) {
                FieldSpec f = build_field(static_cast<int>(q));
                for (const auto& I : detail::all_subsets(n)) {
                    auto cosets = enumerate_cosets(n, f, I);
                    ++checked;
                    if (BigInt(static_cast<long long>(cosets.size())) !=
                        parabolic_index(n, q, I))
                        ++bad;
                    for (int it = 0; it < 20; ++it) {
                        FqMatrix g = detail::random_invertible(n, f, rng);
                        FqMatrix pm = detail::random_parabolic(n, I, f, rng);
                        ++checked;
                        if (!(flag_of(mul(g, pm, f), I, f) == flag_of(g, I, f)))
                            ++bad;
                    }
                }
            }
        for (auto [n, q] : sp.order_cases) {
            FieldSpec f = build_field(static_cast<int>(q));
            long long total = 1;
            for (int i = 0; i < n * n; ++i)
                total *= q;
            long long invertible = 0;
            for (long long code = 0; code < total; ++code) {
                long long v = code;
                FqMatrix mtx(n, n);
                for (int i = 0; i < n * n; ++i) {
                    mtx.entries[static_cast<std::size_t>(i)] =
                        static_cast<std::uint16_t>(v % q);
                    v /= q;
                }
                if (is_invertible(mtx, f))
                    ++invertible;
            }
            ++checked;
            if (group_order(n, q) != BigInt(invertible))
                ++bad;
        }
        detail = std::to_string(checked) + " counts";
        return bad == 0;
    });

    // 6: single-step descents, Coxeter connectivity, height-0 characterization
    run(6, "conjugacy reduction suite", [&](std::string& detail) {
        long long no_descent = 0, height_bad = 0, path_bad = 0;
        std::string example;
        for (int n = 2; n <= sp.gp_max_n; ++n) {
            auto elems = detail::all_elements(n);
            for (const auto& w : elems) {
                bool in_min = length(w) == min_class_length(w, sp.gp_max_n);
                bool drop = false;
                for (int i = 1; i < n; ++i)
                    if (length(conjugate_by_generator(w, i)) == length(w) - 2)
                        drop = true;
                if (in_min == drop) {
                    ++no_descent;
                    if (example.empty()) {
                        example = "one-line ";
                        for (int v : w.images)
                            example += std::to_string(v);
                    }
                }
                bool cox = is_coxeter(w, support(w));
                try {
                    if ((height(w, sp.gp_max_n) == 0) != cox)
                        ++height_bad;
                } catch (const std::logic_error&) {
                    ++height_bad;   // recursion undefined: no admissible descent
                }
            }
            GeneratorSet full = GeneratorSet::full(n);
            std::vector<WeylElement> coxeters;
            for (const auto& w : elems)
                if (length(w) == n - 1 && is_coxeter(w, full))
                    coxeters.push_back(w);
            for (const auto& a : coxeters)
                for (const auto& b : coxeters) {
                    try {
                        ConjugationChain chain = coxeter_shift_path(a, b, sp.gp_max_n);
                        for (const auto& st : chain.steps)
                            if (length(st.result) != n - 1)
                                ++path_bad;
                    } catch (const std::exception&) {
                        ++path_bad;
                    }
                }
        }
        std::ostringstream d;
        if (no_descent || height_bad)
            d << no_descent << " elements lack a single-step length-2 descent (e.g. "
              << example << "); height undefined on " << height_bad << " of them; ";
        d << "coxeter connectivity " << (path_bad ? "FAILED" : "ok");
        detail = d.str();
        return no_descent == 0 && height_bad == 0 && path_bad == 0;
    });

    // 7: every word reduces in budget; dimensions ride along the trace
    run(7, "reduction totality", [&](std::string& detail) {
        long long bad = 0, count = 0;
        for (int n = 2; n <= sp.reduce_max_n; ++n)
            for (const auto& w : detail::all_words(n, sp.reduce_max_len)) {
                ++count;
                RewriteTrace trace = reduce_to_coxeter(w);
                if (!trace.completed || !all_distinct_letters(trace.result) ||
                    !(support(trace.result) == support(w)) ||
                    trace.result.length() != support(w).size()) {
                    ++bad;
                    continue;
                }
                for (const auto& st : trace.steps)
                    if (st.kind == RewriteKind::C || st.kind == RewriteKind::K ||
                        st.kind == RewriteKind::R)
                        if (structure_sheaf_cohomology(st.before, n, 2).entry_at(0).dimension !=
                            structure_sheaf_cohomology(st.after, n, 2).entry_at(0).dimension)
                            ++bad;
            }
        detail = std::to_string(count) + " words";
        return bad == 0;
    });

    // 8: one nonzero degree per report, m-independent ranks, Serre pairing
    run(8, "report shape", [&](std::string& detail) {
        long long bad = 0, count = 0;
        for (int n = 2; n <= sp.reduce_max_n; ++n)
            for (long long q : sp.qs) {
                long long p = prime_power_decompose(q).first;
                for (const auto& w : detail::all_words(n, 4)) {
                    ++count;
                    auto o = structure_sheaf_cohomology(w, n, q);
                    auto omega = canonical_sheaf_cohomology(w, n, q);
                    auto compact = compact_support_cohomology(w, n, q, p, 1);
                    auto zp = etale_constant_cohomology(w, n, q, p, kInfiniteM);
                    int L = static_cast<int>(w.length());
                    if (o.nonzero_degree() != 0 || omega.nonzero_degree() != L ||
                        compact.nonzero_degree() != L || zp.nonzero_degree() != 0)
                        ++bad;
                    if (omega.entry_at(L).dimension != o.entry_at(0).dimension)
                        ++bad;
                    BigInt base = etale_constant_cohomology(w, n, q, p, 1)
                                      .entry_at(0).dimension;
                    if (base != o.entry_at(0).dimension || zp.entry_at(0).dimension != base)
                        ++bad;
                    for (long long m : {2, 3})
                        if (etale_constant_cohomology(w, n, q, p, m).entry_at(0).dimension !=
                            base)
                            ++bad;
                }
            }
        detail = std::to_string(count) + " report families";
        return bad == 0;
    });

    return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

}  // namespace dlcoh

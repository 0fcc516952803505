#pragma once

// The answer engine. Every report states, for one word w over S_n and one
// coefficient system, which degrees carry cohomology and what the module in
// that degree is, structurally: an induced-trivial module ind_{P_I}^G 1 (of
// rank [G : P_I]) or an induced-Steinberg module ind_{P_I}^G St_{L_I} (of
// rank [G : P_I] * q^{l(w_0 of W_I)}), with I = supp(w).
//
//   - structure sheaf / constant mod p^m / Z_p on the compactification:
//     everything sits in degree 0, induced trivial;
//   - canonical sheaf on the compactification: degree l(w), induced trivial;
//   - compact support on the open stratum: degree l(w), induced Steinberg.
//
// cross_check ties the formulas back to the induced-module complex: the
// Steinberg cokernel rank, mod p^m acyclicity and the degeneration of the
// stratification spectral sequence are all recomputed from scratch.

#include "dlcoh/complex.hpp"

#include <optional>
#include <string>

namespace dlcoh {

enum class CoefficientKind { StructureSheaf, ModPm, Zp, CanonicalSheaf };

struct CoefficientTag {
    CoefficientKind kind = CoefficientKind::StructureSheaf;
    long long p = 0;
    long long m = 0;

    static CoefficientTag structure_sheaf() { return {CoefficientKind::StructureSheaf, 0, 0}; }
    static CoefficientTag mod_pm(long long p, long long m) {
        return {CoefficientKind::ModPm, p, m};
    }
    static CoefficientTag z_p(long long p) { return {CoefficientKind::Zp, p, 0}; }
    static CoefficientTag canonical_sheaf() { return {CoefficientKind::CanonicalSheaf, 0, 0}; }

    friend bool operator==(const CoefficientTag& a, const CoefficientTag& b) {
        return a.kind == b.kind && a.p == b.p && a.m == b.m;
    }
};

enum class RepKind { Zero, InducedTrivial, InducedSteinberg };

struct RepDescription {
    RepKind kind = RepKind::Zero;
    GeneratorSet parabolic;
    BigInt dimension;

    friend bool operator==(const RepDescription& a, const RepDescription& b) {
        return a.kind == b.kind && a.parabolic == b.parabolic && a.dimension == b.dimension;
    }
};

enum class VarietyKind { Compactified, OpenCompactSupport };

struct CohomologyReport {
    VarietyKind variety = VarietyKind::Compactified;
    Word word;
    int n = 0;
    long long q = 0;
    CoefficientTag coefficients;
    std::map<int, RepDescription> entries;   // nonzero degrees only
    bool cross_checked = false;
    std::optional<RewriteTrace> trace;
    std::vector<std::string> notes;

    RepDescription entry_at(int degree) const {
        auto it = entries.find(degree);
        return it == entries.end() ? RepDescription{} : it->second;
    }
    int nonzero_degree() const {
        if (entries.size() != 1)
            throw std::logic_error("report does not have exactly one nonzero degree");
        return entries.begin()->first;
    }

    friend bool operator==(const CohomologyReport& a, const CohomologyReport& b) {
        bool same_trace = a.trace.has_value() == b.trace.has_value();
        if (same_trace && a.trace.has_value()) {
            same_trace = a.trace->start == b.trace->start &&
                         a.trace->result == b.trace->result &&
                         a.trace->steps.size() == b.trace->steps.size();
            for (std::size_t i = 0; same_trace && i < a.trace->steps.size(); ++i) {
                const auto& x = a.trace->steps[i];
                const auto& y = b.trace->steps[i];
                same_trace = x.kind == y.kind && x.position == y.position &&
                             x.before == y.before && x.after == y.after &&
                             x.justification == y.justification;
            }
        }
        return a.variety == b.variety && a.word == b.word && a.n == b.n && a.q == b.q &&
               a.coefficients == b.coefficients && a.entries == b.entries &&
               a.cross_checked == b.cross_checked && a.notes == b.notes && same_trace;
    }
};

namespace detail {

inline void check_word(const Word& w, int n) {
    if (w.empty())
        throw std::invalid_argument("cohomology: empty word");
    if (w.n != n)
        throw std::invalid_argument("cohomology: word rank mismatch");
}

// only constant coefficients in the defining characteristic are supported
inline void check_characteristic(long long q, long long p) {
    auto [qp, e] = prime_power_decompose(q);
    (void)e;
    if (qp != p)
        throw std::invalid_argument("coefficient characteristic p=" + std::to_string(p) +
                                    " does not divide q=" + std::to_string(q));
}

}  // namespace detail

inline CohomologyReport structure_sheaf_cohomology(const Word& w, int n, long long q) {
    detail::check_word(w, n);
    CohomologyReport rep;
    rep.variety = VarietyKind::Compactified;
    rep.word = w;
    rep.n = n;
    rep.q = q;
    rep.coefficients = CoefficientTag::structure_sheaf();
    GeneratorSet I = support(w);
    rep.entries[0] = {RepKind::InducedTrivial, I, parabolic_index(n, q, I)};
    return rep;
}

inline constexpr long long kInfiniteM = -1;   // m = infinity selects Z_p

inline CohomologyReport etale_constant_cohomology(const Word& w, int n, long long q,
                                                  long long p, long long m) {
    detail::check_word(w, n);
    detail::check_characteristic(q, p);
    if (m != kInfiniteM && m < 1)
        throw std::invalid_argument("etale_constant_cohomology: m must be >= 1");
    CohomologyReport rep;
    rep.variety = VarietyKind::Compactified;
    rep.word = w;
    rep.n = n;
    rep.q = q;
    rep.coefficients =
        m == kInfiniteM ? CoefficientTag::z_p(p) : CoefficientTag::mod_pm(p, m);
    GeneratorSet I = support(w);
    rep.entries[0] = {RepKind::InducedTrivial, I, parabolic_index(n, q, I)};
    if (m != kInfiniteM)
        rep.notes.push_back(
            "H0 of the length-" + std::to_string(m) +
            " Witt vector sheaf is induced of the same rank (not computed here)");
    return rep;
}

// Compact support on the open stratum: one degree, the F+ length of the
// input word (the dimension of the stratum), carrying induced Steinberg.
// Repeated-letter words are first driven to a distinct-letter word of the
// same support; the trace is attached for audit.
inline CohomologyReport compact_support_cohomology(const Word& w, int n, long long q,
                                                   long long p, long long m) {
    detail::check_word(w, n);
    detail::check_characteristic(q, p);
    if (m != kInfiniteM && m < 1)
        throw std::invalid_argument("compact_support_cohomology: m must be >= 1");
    CohomologyReport rep;
    rep.variety = VarietyKind::OpenCompactSupport;
    rep.word = w;
    rep.n = n;
    rep.q = q;
    rep.coefficients =
        m == kInfiniteM ? CoefficientTag::z_p(p) : CoefficientTag::mod_pm(p, m);
    GeneratorSet I = support(w);
    rep.entries[static_cast<int>(w.length())] = {
        RepKind::InducedSteinberg, I, parabolic_index(n, q, I) * steinberg_dim(I, n, q)};
    if (!all_distinct_letters(w))
        rep.trace = reduce_to_coxeter(w);
    return rep;
}

inline CohomologyReport canonical_sheaf_cohomology(const Word& w, int n, long long q) {
    detail::check_word(w, n);
    CohomologyReport rep;
    rep.variety = VarietyKind::Compactified;
    rep.word = w;
    rep.n = n;
    rep.q = q;
    rep.coefficients = CoefficientTag::canonical_sheaf();
    GeneratorSet I = support(w);
    rep.entries[static_cast<int>(w.length())] = {RepKind::InducedTrivial, I,
                                                 parabolic_index(n, q, I)};
    return rep;
}

inline BigInt irreducible_components(const Word& w, int n, long long q) {
    detail::check_word(w, n);
    return parabolic_index(n, q, support(w));
}

struct SpectralPage {
    int page_index = 1;
    std::map<std::pair<int, int>, BigInt> grid;   // nonzero entries only

    BigInt at(int i, int j) const {
        auto it = grid.find({i, j});
        return it == grid.end() ? BigInt(0) : it->second;
    }
};

// E1 row 0 carries the complex term ranks (higher rows vanish); E2 is its
// homology mod p^m and must concentrate at (l(w), 0).
inline std::pair<SpectralPage, SpectralPage> spectral_pages(const Word& w, int n, long long q,
                                                            long long p, long long m,
                                                            long long bound = kDefaultCosetBound) {
    detail::check_word(w, n);
    detail::check_characteristic(q, p);
    if (m < 1)
        throw std::invalid_argument("spectral_pages: m must be >= 1");
    ChainComplex cx = build_stseq(w, n, q, RingTag::mod_pm(p, m), bound);
    HomologyResult h = homology(cx);
    int L = cx.top_degree();

    SpectralPage e1;
    e1.page_index = 1;
    for (int i = 0; i <= L; ++i)
        if (cx.terms[static_cast<std::size_t>(i)].rank)
            e1.grid[{i, 0}] = BigInt(cx.terms[static_cast<std::size_t>(i)].rank);

    SpectralPage e2;
    e2.page_index = 2;
    for (int i = 0; i <= L; ++i) {
        long long len = h.pm_homology_length(i, p, m);
        if (len == 0)
            continue;
        // a nonzero entry must be a free Z/p^m-module: its length divisible
        // by m, and no incoming divisor contributing a proper p-power
        bool free_module = len % m == 0;
        if (i > 0)
            for (const auto& d : h.boundary_divisors[static_cast<std::size_t>(i - 1)]) {
                long long o = ord_p(d, p);
                if (o > 0 && o < m)
                    free_module = false;
            }
        if (!free_module)
            throw std::logic_error("spectral_pages: E2 entry is not a free module");
        e2.grid[{i, 0}] = BigInt(len / m);
    }
    if (e2.grid.size() != 1 || e2.grid.begin()->first != std::make_pair(L, 0))
        throw std::logic_error("spectral_pages: E2 not concentrated at (l(w), 0)");
    return {e1, e2};
}

// End-to-end consistency: formula dimension == complex cokernel rank,
// mod p^m acyclicity, and the E2 page matching the formula. Repeated-letter
// words are routed through their support reduction first.
inline bool cross_check(const Word& w, int n, long long q, long long p, long long m,
                        long long bound = kDefaultCosetBound) {
    detail::check_word(w, n);
    detail::check_characteristic(q, p);
    if (m < 1)
        throw std::invalid_argument("cross_check: m must be >= 1");
    Word v = w;
    if (!all_distinct_letters(v)) {
        RewriteTrace trace = reduce_to_coxeter(w);
        if (!trace.completed)
            return false;
        v = trace.result;
    }
    CohomologyReport compact = compact_support_cohomology(w, n, q, p, m);
    BigInt dim = compact.entry_at(static_cast<int>(w.length())).dimension;

    SteinbergCheck st = steinberg_cokernel(v, n, q, bound);
    if (!st.matches || st.dimension != dim)
        return false;

    ChainComplex cx = build_stseq(v, n, q, RingTag::mod_pm(p, m), bound);
    HomologyResult h = homology(cx);
    if (!pm_acyclic(h, p, m))
        return false;

    try {
        auto [e1, e2] = spectral_pages(v, n, q, p, m, bound);
        (void)e1;
        if (e2.at(static_cast<int>(v.length()), 0) != dim)
            return false;
    } catch (const std::logic_error&) {
        return false;
    }
    return true;
}

}  // namespace dlcoh

#pragma once

// The complex of induced permutation modules attached to a distinct-letter
// word w over S_n at a prime power q.
//
// The degree-i term is indexed by the position subsets of w of size l(w)-i;
// each subword u contributes the free module on the cosets of the parabolic
// of its support, of rank [G : P_supp(u)]. The boundary block for one
// deletion carries the sign (-1)^r, r the 1-based position of the deleted
// letter inside the source subword, and the inclusion matrix that pulls a
// coarse coset back to the finer cosets lying above it. d∘d = 0 is checked
// at construction.
//
// Homology is computed over Z by Smith normal form of the boundaries; the
// mod p^m answers are derived from the same integer divisor chains.

#include "dlcoh/flag.hpp"
#include "dlcoh/intmatrix.hpp"
#include "dlcoh/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace dlcoh {

// q = p^e with p prime
inline std::pair<long long, int> prime_power_decompose(long long q) {
    if (q < 2)
        throw std::invalid_argument("q must be a prime power >= 2");
    long long p = q;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

// Rows indexed by the cosets of P_{I_small}, columns by the cosets of
// P_{I_big} (I_small inside I_big); entry 1 where the row flag projects to
// the column flag.
inline IntMatrix inclusion_matrix(int n, long long q, const GeneratorSet& I_big,
                                  const GeneratorSet& I_small,
                                  long long bound = kDefaultCosetBound) {
    if (!I_small.subset_of(I_big))
        throw std::invalid_argument("inclusion_matrix: I_small must be contained in I_big");
    auto [p, e] = prime_power_decompose(q);
    FieldSpec f = build_field(static_cast<int>(p), e);
    auto fine = enumerate_cosets(n, f, I_small, bound);
    auto coarse = enumerate_cosets(n, f, I_big, bound);
    IntMatrix m(static_cast<int>(fine.size()), static_cast<int>(coarse.size()));
    for (std::size_t r = 0; r < fine.size(); ++r) {
        FlagCoset proj = coset_projection(fine[r], I_small, I_big);
        auto it = std::lower_bound(coarse.begin(), coarse.end(), proj);
        if (it == coarse.end() || !(*it == proj))
            throw std::logic_error("inclusion_matrix: projected flag not found");
        m.at(static_cast<int>(r), static_cast<int>(it - coarse.begin())) = BigInt(1);
    }
    return m;
}

struct RingTag {
    bool modular = false;   // false: Z; true: Z/p^m
    long long p = 0;
    long long m = 0;

    static RingTag integers() { return {}; }
    static RingTag mod_pm(long long p, long long m) { return {true, p, m}; }

    std::string str() const {
        if (!modular)
            return "Z";
        if (m == 1)
            return "Z/" + std::to_string(p);
        return "Z/" + std::to_string(p) + "^" + std::to_string(m);
    }
};

struct SubwordBlock {
    std::vector<int> positions;   // 1-based positions inside the parent word
    Word subword;
    GeneratorSet supp;
    long long cosets = 0;
    long long offset = 0;         // start of this block inside its term
};

struct ComplexTerm {
    int degree = 0;
    std::vector<SubwordBlock> blocks;
    long long rank = 0;
};

struct ChainComplex {
    Word word;
    int n = 0;
    long long q = 0;
    RingTag ring;
    std::vector<ComplexTerm> terms;        // degrees 0..l(w)
    std::vector<IntMatrix> boundaries;     // d_i : term_i -> term_{i+1}

    int top_degree() const { return static_cast<int>(terms.size()) - 1; }
};

inline ChainComplex build_stseq(const Word& w, int n, long long q,
                                RingTag ring = RingTag::integers(),
                                long long bound = kDefaultCosetBound) {
    if (w.empty())
        throw std::invalid_argument("build_stseq: empty word");
    if (w.n != n)
        throw std::invalid_argument("build_stseq: word rank mismatch");
    if (!all_distinct_letters(w))
        throw std::invalid_argument("build_stseq: letters must be pairwise distinct");
    auto [p, e] = prime_power_decompose(q);
    FieldSpec field = build_field(static_cast<int>(p), e);
    int L = static_cast<int>(w.length());

    // coset lists per support (sorted, so index lookup is binary search)
    std::map<GeneratorSet, std::vector<FlagCoset>> coset_lists;
    auto cosets_of = [&](const GeneratorSet& I) -> const std::vector<FlagCoset>& {
        auto it = coset_lists.find(I);
        if (it == coset_lists.end())
            it = coset_lists.emplace(I, enumerate_cosets(n, field, I, bound)).first;
        return it->second;
    };

    ChainComplex cx;
    cx.word = w;
    cx.n = n;
    cx.q = q;
    cx.ring = ring;

    for (int i = 0; i <= L; ++i) {
        ComplexTerm term;
        term.degree = i;
        long long offset = 0;
        for (auto& sel : subword_positions(w, static_cast<std::size_t>(L - i))) {
            SubwordBlock block;
            block.positions = sel.positions;
            block.subword = sel.word;
            block.supp = support(sel.word);
            block.cosets = static_cast<long long>(cosets_of(block.supp).size());
            block.offset = offset;
            offset += block.cosets;
            term.blocks.push_back(std::move(block));
        }
        term.rank = offset;
        cx.terms.push_back(std::move(term));
    }

    // projection index maps per (fine support, coarse support)
    std::map<std::pair<GeneratorSet, GeneratorSet>, std::vector<long long>> proj_cache;
    auto projection_map = [&](const GeneratorSet& fine,
                              const GeneratorSet& coarse) -> const std::vector<long long>& {
        auto key = std::make_pair(fine, coarse);
        auto it = proj_cache.find(key);
        if (it != proj_cache.end())
            return it->second;
        const auto& fine_list = cosets_of(fine);
        const auto& coarse_list = cosets_of(coarse);
        std::vector<long long> map(fine_list.size());
        for (std::size_t r = 0; r < fine_list.size(); ++r) {
            FlagCoset proj = coset_projection(fine_list[r], fine, coarse);
            auto pos = std::lower_bound(coarse_list.begin(), coarse_list.end(), proj);
            if (pos == coarse_list.end() || !(*pos == proj))
                throw std::logic_error("build_stseq: projected flag not found");
            map[r] = pos - coarse_list.begin();
        }
        return proj_cache.emplace(std::move(key), std::move(map)).first->second;
    };

    for (int i = 0; i < L; ++i) {
        const ComplexTerm& src = cx.terms[static_cast<std::size_t>(i)];
        const ComplexTerm& dst = cx.terms[static_cast<std::size_t>(i + 1)];
        IntMatrix d(static_cast<int>(dst.rank), static_cast<int>(src.rank));
        for (const auto& a : src.blocks) {
            for (const auto& b : dst.blocks) {
                // b.positions must be a.positions minus one element
                std::vector<int> diff;
                std::set_difference(a.positions.begin(), a.positions.end(),
                                    b.positions.begin(), b.positions.end(),
                                    std::back_inserter(diff));
                if (diff.size() != 1 ||
                    !std::includes(a.positions.begin(), a.positions.end(),
                                   b.positions.begin(), b.positions.end()))
                    continue;
                int deleted = diff.front();
                int r = 1 + static_cast<int>(std::lower_bound(a.positions.begin(),
                                                              a.positions.end(), deleted) -
                                             a.positions.begin());
                int sign = (r % 2 == 0) ? 1 : -1;
                const auto& proj = projection_map(b.supp, a.supp);
                for (long long fine = 0; fine < b.cosets; ++fine)
                    d.at(static_cast<int>(b.offset + fine),
                         static_cast<int>(a.offset + proj[static_cast<std::size_t>(fine)])) =
                        BigInt(sign);
            }
        }
        cx.boundaries.push_back(std::move(d));
    }

    for (int i = 0; i + 1 < L; ++i)
        if (!(cx.boundaries[static_cast<std::size_t>(i + 1)] *
              cx.boundaries[static_cast<std::size_t>(i)])
                 .is_zero())
            throw std::logic_error("build_stseq: d∘d != 0");

    return cx;
}

inline long long ord_p(BigInt v, long long p) {
    if (v.is_zero())
        throw std::invalid_argument("ord_p of zero");
    long long k = 0;
    v = v.abs();
    BigInt bp(p);
    while (v.divisible_by(bp)) {
        v = v / bp;
        ++k;
    }
    return k;
}

struct DegreeHomology {
    int degree = 0;
    long long free_rank = 0;
    std::vector<BigInt> torsion;   // nonunit divisors of the incoming boundary
};

struct HomologyResult {
    std::vector<long long> term_ranks;
    std::vector<std::vector<BigInt>> boundary_divisors;   // per d_i
    std::vector<DegreeHomology> degrees;                  // 0..top
    bool d0_injective = false;
    BigInt coker_rank;                                    // top-degree free rank

    long long boundary_rank(int i) const {
        if (i < 0 || i >= static_cast<int>(boundary_divisors.size()))
            return 0;
        return static_cast<long long>(boundary_divisors[static_cast<std::size_t>(i)].size());
    }

    // log_p of |ker(d_i mod p^m)| and |im(d_i mod p^m)|
    long long pm_kernel_length(int i, long long p, long long m) const {
        if (i < 0 || i >= static_cast<int>(boundary_divisors.size()))
            return 0;
        const auto& divs = boundary_divisors[static_cast<std::size_t>(i)];
        long long cols = term_ranks[static_cast<std::size_t>(i)];
        long long len = m * (cols - static_cast<long long>(divs.size()));
        for (const auto& d : divs)
            len += std::min(ord_p(d, p), m);
        return len;
    }
    long long pm_image_length(int i, long long p, long long m) const {
        if (i < 0 || i >= static_cast<int>(boundary_divisors.size()))
            return 0;
        const auto& divs = boundary_divisors[static_cast<std::size_t>(i)];
        long long len = 0;
        for (const auto& d : divs)
            len += m - std::min(ord_p(d, p), m);
        return len;
    }

    // log_p |H_k(C ⊗ Z/p^m)|; at the top, d_top is the zero map
    long long pm_homology_length(int k, long long p, long long m) const {
        int top = static_cast<int>(term_ranks.size()) - 1;
        long long ker = k < top ? pm_kernel_length(k, p, m)
                                : m * term_ranks[static_cast<std::size_t>(top)];
        return ker - pm_image_length(k - 1, p, m);
    }
};

inline HomologyResult homology(const ChainComplex& cx) {
    HomologyResult res;
    for (const auto& term : cx.terms)
        res.term_ranks.push_back(term.rank);
    for (const auto& d : cx.boundaries)
        res.boundary_divisors.push_back(elementary_divisors(d));

    int top = cx.top_degree();
    for (int k = 0; k <= top; ++k) {
        DegreeHomology h;
        h.degree = k;
        long long out_rank = k < top ? res.boundary_rank(k) : 0;
        long long in_rank = res.boundary_rank(k - 1);
        h.free_rank = res.term_ranks[static_cast<std::size_t>(k)] - out_rank - in_rank;
        if (k > 0)
            for (const auto& d : res.boundary_divisors[static_cast<std::size_t>(k - 1)])
                if (!d.is_one())
                    h.torsion.push_back(d);
        res.degrees.push_back(std::move(h));
    }
    res.d0_injective =
        top < 1 || res.boundary_rank(0) == res.term_ranks[0];
    res.coker_rank = BigInt(res.degrees.back().free_rank);
    return res;
}

struct SteinbergCheck {
    BigInt dimension;        // rank of coker(d_{l(w)-1}) over Z
    BigInt expected;         // [G : P_I] * q^{l(w_0 of W_I)}
    bool matches = false;
};

inline SteinbergCheck steinberg_cokernel(const Word& w, int n, long long q,
                                         long long bound = kDefaultCosetBound) {
    ChainComplex cx = build_stseq(w, n, q, RingTag::integers(), bound);
    HomologyResult h = homology(cx);
    SteinbergCheck out;
    out.dimension = h.coker_rank;
    GeneratorSet I = support(w);
    out.expected = parabolic_index(n, q, I) * steinberg_dim(I, n, q);
    out.matches = out.dimension == out.expected;
    return out;
}

// Exactness of the reduction mod p^m at the interior degrees, plus
// injectivity of d_0 mod p^m. Derived from the integer divisor chains.
inline bool pm_acyclic(const HomologyResult& h, long long p, long long m) {
    int top = static_cast<int>(h.term_ranks.size()) - 1;
    if (h.pm_kernel_length(0, p, m) != 0)
        return false;
    for (int k = 1; k < top; ++k)
        if (h.pm_homology_length(k, p, m) != 0)
            return false;
    return true;
}

inline bool mod_pm_acyclicity(const Word& w, int n, long long q, long long p, long long m,
                              long long bound = kDefaultCosetBound) {
    if (!is_prime(static_cast<int>(p)) || m < 1)
        throw std::invalid_argument("mod_pm_acyclicity: need a prime p and m >= 1");
    ChainComplex cx = build_stseq(w, n, q, RingTag::mod_pm(p, m), bound);
    return pm_acyclic(homology(cx), p, m);
}

// text export: degree lines, then each boundary as sparse triplets
inline std::string complex_text(const ChainComplex& cx) {
    std::string out = "stseq n=" + std::to_string(cx.n) + " q=" + std::to_string(cx.q) +
                      " word=" + word_str(cx.word) + " ring=" + cx.ring.str() + "\n";
    for (const auto& term : cx.terms)
        out += "degree " + std::to_string(term.degree) + " " + std::to_string(term.rank) + "\n";
    for (std::size_t i = 0; i < cx.boundaries.size(); ++i) {
        const IntMatrix& d = cx.boundaries[i];
        out += "d " + std::to_string(i) + " " + std::to_string(d.rows) + " " +
               std::to_string(d.cols) + "\n";
        for (int r = 0; r < d.rows; ++r)
            for (int c = 0; c < d.cols; ++c)
                if (!d.at(r, c).is_zero())
                    out += std::to_string(r) + " " + std::to_string(c) + " " +
                           d.at(r, c).to_string() + "\n";
    }
    return out;
}

}  // namespace dlcoh

#pragma once

// GL_n(F_q)/P_I as canonical partial flags, plus the q-analog counting that
// cross-checks the enumeration.
//
// A generator subset I determines the flag type: the proper subspace
// dimensions are exactly {1..n-1} \ I. A coset g P_I corresponds to the
// chain of spans of the leading columns of g at those dimensions; each
// subspace is stored canonically as its reduced-row-echelon row basis, so
// coset equality is literal equality of the stored matrices.

#include "dlcoh/bigint.hpp"
#include "dlcoh/fq.hpp"
#include "dlcoh/weyl.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace dlcoh {

struct Composition {
    std::vector<int> parts;   // positive, summing to n

    int total() const {
        int s = 0;
        for (int p : parts)
            s += p;
        return s;
    }
    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts == b.parts;
    }
};

inline void check_generator_set(const GeneratorSet& I, int n) {
    for (int i : I.indices)
        if (i < 1 || i >= n)
            throw std::invalid_argument("generator index out of range for rank " +
                                        std::to_string(n));
}

// Levi block sizes: maximal runs of consecutive indices in I.
inline Composition levi_composition(const GeneratorSet& I, int n) {
    check_generator_set(I, n);
    Composition comp;
    int prev = 0;
    for (int cut = 1; cut < n; ++cut) {
        if (!I.contains(cut)) {
            comp.parts.push_back(cut - prev);
            prev = cut;
        }
    }
    comp.parts.push_back(n - prev);
    return comp;
}

// proper flag dimensions for type I: {1..n-1} \ I
inline std::vector<int> flag_dimensions(const GeneratorSet& I, int n) {
    check_generator_set(I, n);
    std::vector<int> dims;
    for (int d = 1; d < n; ++d)
        if (!I.contains(d))
            dims.push_back(d);
    return dims;
}

inline BigInt gaussian_binomial(int n, int k, long long q) {
    if (k < 0 || k > n)
        return BigInt(0);
    // [n k]_q = [n-1 k]_q + q^{n-k} [n-1 k-1]_q
    std::vector<std::vector<BigInt>> tab(static_cast<std::size_t>(n) + 1,
                                         std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= std::min(i, k); ++j) {
            if (j == 0 || j == i)
                tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = BigInt(1);
            else
                tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                    BigInt::pow(BigInt(q), static_cast<unsigned long long>(i - j)) *
                        tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
    }
    return tab[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Gaussian multinomial [n; n_1,...,n_r]_q for the Levi composition of I;
// the number of F_q-points of G/P_I.
inline BigInt parabolic_index(int n, long long q, const GeneratorSet& I) {
    Composition comp = levi_composition(I, n);
    BigInt out(1);
    int remaining = n;
    for (int part : comp.parts) {
        out *= gaussian_binomial(remaining, part, q);
        remaining -= part;
    }
    return out;
}

// |GL_n(F_q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1)
inline BigInt group_order(int n, long long q) {
    if (n < 1)
        throw std::invalid_argument("group_order: n must be >= 1");
    BigInt out = BigInt::pow(BigInt(q), static_cast<unsigned long long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        out *= BigInt::pow(BigInt(q), static_cast<unsigned long long>(i)) - BigInt(1);
    return out;
}

// |U_{L_I}(F_q)| = q^{l(w_0 of W_I)}
inline BigInt steinberg_dim(const GeneratorSet& I, int n, long long q) {
    int e = length(longest_element(I, n));
    return BigInt::pow(BigInt(q), static_cast<unsigned long long>(e));
}

struct FlagCoset {
    int n = 0;
    std::vector<int> dims;             // proper subspace dimensions, ascending
    std::vector<FqMatrix> subspaces;   // RREF row bases, subspaces[k]: dims[k] x n

    friend bool operator==(const FlagCoset& a, const FlagCoset& b) {
        return a.n == b.n && a.dims == b.dims && a.subspaces == b.subspaces;
    }
    friend bool operator<(const FlagCoset& a, const FlagCoset& b) {
        if (a.n != b.n)
            return a.n < b.n;
        if (a.dims != b.dims)
            return a.dims < b.dims;
        return a.subspaces < b.subspaces;
    }
};

// Canonical flag of the coset g P_I: spans of the leading columns of g.
inline FlagCoset flag_of(const FqMatrix& g, const GeneratorSet& I, const FieldSpec& f) {
    if (g.rows != g.cols)
        throw std::invalid_argument("flag_of: group element must be square");
    if (!is_invertible(g, f))
        throw std::invalid_argument("flag_of: matrix is not invertible");
    int n = g.rows;
    FlagCoset flag;
    flag.n = n;
    flag.dims = flag_dimensions(I, n);
    for (int d : flag.dims) {
        FqMatrix basis(d, n);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i)
                basis.set(j, i, g.at(i, j));   // j-th column of g as a row
        rref(basis, f);
        flag.subspaces.push_back(std::move(basis));
    }
    return flag;
}

// Does the row space of a (RREF) contain the row space of b?
inline bool rowspace_contains(const FqMatrix& big, const FqMatrix& small, const FieldSpec& f) {
    // pivots of big
    std::vector<int> pivot_col(static_cast<std::size_t>(big.rows));
    for (int r = 0; r < big.rows; ++r) {
        int c = 0;
        while (c < big.cols && big.at(r, c) == 0)
            ++c;
        pivot_col[static_cast<std::size_t>(r)] = c;
    }
    for (int r = 0; r < small.rows; ++r) {
        std::vector<int> v(static_cast<std::size_t>(small.cols));
        for (int c = 0; c < small.cols; ++c)
            v[static_cast<std::size_t>(c)] = small.at(r, c);
        for (int br = 0; br < big.rows; ++br) {
            int pc = pivot_col[static_cast<std::size_t>(br)];
            if (pc >= small.cols)
                continue;
            int factor = v[static_cast<std::size_t>(pc)];
            if (factor == 0)
                continue;
            for (int c = 0; c < small.cols; ++c)
                v[static_cast<std::size_t>(c)] =
                    f.sub(v[static_cast<std::size_t>(c)], f.mul(factor, big.at(br, c)));
        }
        for (int c = 0; c < small.cols; ++c)
            if (v[static_cast<std::size_t>(c)] != 0)
                return false;
    }
    return true;
}

// All d-dimensional subspaces of F_q^n as RREF matrices, sorted.
inline std::vector<FqMatrix> enumerate_subspaces(int n, int d, const FieldSpec& f) {
    std::vector<FqMatrix> out;
    std::vector<int> pivots;
    auto emit = [&]() {
        // free entries: (r, c) with c > pivots[r], c not a pivot column
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
        for (int p : pivots)
            is_pivot[static_cast<std::size_t>(p)] = true;
        for (int r = 0; r < d; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)])
                    free_pos.emplace_back(r, c);
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            FqMatrix m(d, n);
            for (int r = 0; r < d; ++r)
                m.set(r, pivots[static_cast<std::size_t>(r)], 1);
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                m.set(free_pos[i].first, free_pos[i].second, vals[i]);
            out.push_back(std::move(m));
            std::size_t i = vals.size();
            while (i > 0 && vals[i - 1] == f.q() - 1)
                vals[--i] = 0;
            if (i == 0)
                break;
            ++vals[i - 1];
        }
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pivots.size()) == d) {
            emit();
            return;
        }
        for (int c = from; c < n; ++c) {
            pivots.push_back(c);
            self(self, c + 1);
            pivots.pop_back();
        }
    };
    if (d == 0) {
        out.push_back(FqMatrix(0, n));
        return out;
    }
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline constexpr long long kDefaultCosetBound = 100000;

// Exhaustive list of canonical flags of type I, sorted.
inline std::vector<FlagCoset> enumerate_cosets(int n, const FieldSpec& f, const GeneratorSet& I,
                                               long long bound = kDefaultCosetBound) {
    BigInt count = parabolic_index(n, f.q(), I);
    if (count > BigInt(bound))
        throw BoundExceeded("enumerate_cosets: " + count.to_string() +
                            " cosets exceed bound " + std::to_string(bound));
    std::vector<int> dims = flag_dimensions(I, n);
    std::vector<std::vector<FqMatrix>> levels;
    for (int d : dims)
        levels.push_back(enumerate_subspaces(n, d, f));

    std::vector<FlagCoset> out;
    FlagCoset cur;
    cur.n = n;
    cur.dims = dims;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == levels.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& sub : levels[level]) {
            if (!cur.subspaces.empty() &&
                !rowspace_contains(sub, cur.subspaces.back(), f))
                continue;
            cur.subspaces.push_back(sub);
            self(self, level + 1);
            cur.subspaces.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    if (BigInt(static_cast<long long>(out.size())) != count)
        throw std::logic_error("enumerate_cosets: enumeration disagrees with q-multinomial");
    return out;
}

// generator set whose flag type the coset carries: {1..n-1} \ dims
inline GeneratorSet flag_type_generators(const FlagCoset& x) {
    std::vector<int> idx;
    for (int i = 1; i < x.n; ++i)
        if (std::find(x.dims.begin(), x.dims.end(), i) == x.dims.end())
            idx.push_back(i);
    return GeneratorSet(std::move(idx));
}

// Forget the subspaces absent from the coarser type: I_fine -> I_coarse
// with I_fine a subset of I_coarse.
inline FlagCoset coset_projection(const FlagCoset& x, const GeneratorSet& I_fine,
                                  const GeneratorSet& I_coarse) {
    if (!I_fine.subset_of(I_coarse))
        throw std::invalid_argument("coset_projection: target type does not coarsen source");
    std::vector<int> fine_dims = flag_dimensions(I_fine, x.n);
    if (fine_dims != x.dims)
        throw std::invalid_argument("coset_projection: flag type does not match I_fine");
    std::vector<int> coarse_dims = flag_dimensions(I_coarse, x.n);
    FlagCoset out;
    out.n = x.n;
    out.dims = coarse_dims;
    for (int d : coarse_dims) {
        auto it = std::find(x.dims.begin(), x.dims.end(), d);
        out.subspaces.push_back(x.subspaces[static_cast<std::size_t>(it - x.dims.begin())]);
    }
    return out;
}

inline FlagCoset coset_projection(const FlagCoset& x, const GeneratorSet& I_coarse) {
    return coset_projection(x, flag_type_generators(x), I_coarse);
}

// Text form: flag type line, then each echelon basis row as a digit string.
inline std::string flag_str(const FlagCoset& x) {
    std::string out = "type";
    for (int d : x.dims)
        out += " " + std::to_string(d);
    out += "\n";
    for (const auto& sub : x.subspaces) {
        for (int r = 0; r < sub.rows; ++r) {
            for (int c = 0; c < sub.cols; ++c)
                out += std::to_string(sub.at(r, c)) + (c + 1 < sub.cols ? "," : "");
            out += "\n";
        }
        out += ";\n";
    }
    return out;
}

}  // namespace dlcoh

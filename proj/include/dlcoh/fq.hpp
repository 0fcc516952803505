#pragma once

// F_q arithmetic (q = p^m <= 256) and dense matrices over F_q.
//
// Field elements are coded as integers 0..q-1, the base-p digits being the
// polynomial-basis coordinates. Multiplication reduces modulo a monic
// irreducible polynomial; irreducibility is checked exhaustively at
// construction. Add/mul/neg/inv are table-driven.

#include "dlcoh/common.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace dlcoh {

inline bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace detail {

// polynomials over F_p as coefficient vectors, lowest degree first
using Poly = std::vector<int>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(out));
}

// remainder of a by monic b
inline Poly poly_mod(Poly a, const Poly& b, int p) {
    a = poly_trim(std::move(a));
    while (a.size() >= b.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            int v = a[shift + i] - lead * b[i] % p;
            a[shift + i] = ((v % p) + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly code_to_poly(int code, int p) {
    Poly out;
    while (code) {
        out.push_back(code % p);
        code /= p;
    }
    return out;
}

inline int poly_to_code(const Poly& a, int p) {
    int code = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        code = code * p + a[i];
    return code;
}

}  // namespace detail

class FieldSpec {
public:
    FieldSpec() = default;

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const {
        if (a == 0)
            throw std::domain_error("FieldSpec: inverse of zero");
        return inv_[static_cast<std::size_t>(a)];
    }

    friend FieldSpec build_field(int p, int m, const std::vector<int>& modulus);

private:
    int p_ = 2, m_ = 1, q_ = 2;
    std::vector<int> modulus_;   // monic: coefficients of 1, x, .., x^{m-1}; leading 1 implicit
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;

    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(b);
    }
};

// default monic irreducible moduli (low coefficients; leading term implicit)
inline const std::map<int, std::vector<int>>& default_moduli() {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1}},         // x^2 + x + 1 over F_2
        {8, {1, 1, 0}},      // x^3 + x + 1 over F_2
        {9, {1, 0}},         // x^2 + 1 over F_3
        {16, {1, 1, 0, 0}},  // x^4 + x + 1 over F_2
        {25, {1, 1}},        // x^2 + x + 1 over F_5
        {27, {1, 2, 0}},     // x^3 + 2x + 1 over F_3
    };
    return table;
}

inline FieldSpec build_field(int p, int m = 1, const std::vector<int>& modulus = {}) {
    if (!is_prime(p))
        throw std::invalid_argument("build_field: p is not prime");
    if (m < 1)
        throw std::invalid_argument("build_field: extension degree must be >= 1");
    long long qll = 1;
    for (int i = 0; i < m; ++i) {
        qll *= p;
        if (qll > 256)
            throw std::invalid_argument("build_field: only q <= 256 is supported");
    }
    int q = static_cast<int>(qll);

    FieldSpec f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;

    if (m > 1) {
        std::vector<int> mod = modulus;
        if (mod.empty()) {
            auto it = default_moduli().find(q);
            if (it == default_moduli().end())
                throw std::invalid_argument("build_field: no default modulus for q=" +
                                            std::to_string(q));
            mod = it->second;
        }
        if (static_cast<int>(mod.size()) != m)
            throw std::invalid_argument("build_field: modulus must have degree m");
        for (int& c : mod)
            c = ((c % p) + p) % p;

        // full monic coefficient vector 1*x^m + ...
        detail::Poly monic = mod;
        monic.push_back(1);

        // exhaustive factor check: no monic divisor of degree 1..m/2
        for (int d = 1; 2 * d <= m; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i)
                count *= p;
            for (long long lo = 0; lo < count; ++lo) {
                detail::Poly div = detail::code_to_poly(static_cast<int>(lo), p);
                div.resize(static_cast<std::size_t>(d), 0);
                div.push_back(1);   // monic of degree d
                if (detail::poly_mod(monic, div, p).empty())
                    throw std::invalid_argument("build_field: modulus is reducible");
            }
        }
        f.modulus_ = mod;
    }

    auto q_sz = static_cast<std::size_t>(q);
    f.add_.assign(q_sz * q_sz, 0);
    f.mul_.assign(q_sz * q_sz, 0);
    f.neg_.assign(q_sz, 0);
    f.inv_.assign(q_sz, 0);

    detail::Poly monic;
    if (m > 1) {
        monic = f.modulus_;
        monic.push_back(1);
    }

    for (int a = 0; a < q; ++a) {
        detail::Poly pa = detail::code_to_poly(a, p);
        for (int b = 0; b < q; ++b) {
            detail::Poly pb = detail::code_to_poly(b, p);
            // digitwise addition, no carries
            detail::Poly sum(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < sum.size(); ++i) {
                int va = i < pa.size() ? pa[i] : 0;
                int vb = i < pb.size() ? pb[i] : 0;
                sum[i] = (va + vb) % p;
            }
            f.add_[f.idx(a, b)] =
                static_cast<std::uint16_t>(detail::poly_to_code(detail::poly_trim(sum), p));

            detail::Poly prod = detail::poly_mul(pa, pb, p);
            if (m > 1)
                prod = detail::poly_mod(std::move(prod), monic, p);
            f.mul_[f.idx(a, b)] = static_cast<std::uint16_t>(detail::poly_to_code(prod, p));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f.add_[f.idx(a, b)] == 0)
                f.neg_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
            if (f.mul_[f.idx(a, b)] == 1)
                f.inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
        }
    }
    return f;
}

struct FqMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint16_t> entries;   // row-major codes

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    int at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
    }
    void set(int r, int c, int v) {
        entries[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)] =
            static_cast<std::uint16_t>(v);
    }

    static FqMatrix identity(int n) {
        FqMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
    friend bool operator<(const FqMatrix& a, const FqMatrix& b) {
        if (a.rows != b.rows)
            return a.rows < b.rows;
        if (a.cols != b.cols)
            return a.cols < b.cols;
        return a.entries < b.entries;
    }
};

inline FqMatrix mul(const FqMatrix& a, const FqMatrix& b, const FieldSpec& f) {
    if (a.cols != b.rows)
        throw std::invalid_argument("FqMatrix mul: dimension mismatch");
    FqMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols; ++j) {
                int prod = f.mul(aik, b.at(k, j));
                if (prod)
                    out.set(i, j, f.add(out.at(i, j), prod));
            }
        }
    return out;
}

// In-place reduced row echelon form; returns the rank.
inline int rref(FqMatrix& m, const FieldSpec& f) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) {
                int t = m.at(pivot, c);
                m.set(pivot, c, m.at(rank, c));
                m.set(rank, c, t);
            }
        int inv = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c)
            m.set(rank, c, f.mul(inv, m.at(rank, c)));
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank)
                continue;
            int factor = m.at(r, col);
            if (factor == 0)
                continue;
            for (int c = 0; c < m.cols; ++c)
                m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(rank, c))));
        }
        ++rank;
    }
    return rank;
}

inline int rank(FqMatrix m, const FieldSpec& f) { return rref(m, f); }

inline bool is_invertible(const FqMatrix& m, const FieldSpec& f) {
    return m.rows == m.cols && rank(m, f) == m.rows;
}

}  // namespace dlcoh

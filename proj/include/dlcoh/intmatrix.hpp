#pragma once

// Dense matrices over Z with arbitrary-precision entries, and Smith normal
// form.
//
// The SNF routine serves two callers with different needs: the homology
// sweep wants divisor chains of large sparse 0/1 incidence matrices fast (no
// transforms), while the exported operation also returns unimodular U, V
// with M = U * D * V, verified by multiplication. Pivoting picks a minimal
// absolute value (early exit on a unit) and rounds quotients to nearest to
// keep entry growth down; divisibility of the remaining submatrix by the
// pivot is restored before the pivot is frozen, which makes the divisor
// chain d_1 | d_2 | ... hold by construction.

#include "dlcoh/bigint.hpp"

#include <utility>
#include <vector>

namespace dlcoh {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> data;   // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    BigInt& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
    }
    const BigInt& at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c)];
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = BigInt(1);
        return m;
    }

    bool is_zero() const {
        for (const auto& v : data)
            if (!v.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols != b.rows)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix out(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < b.cols; ++j) {
                    const BigInt& bkj = b.at(k, j);
                    if (!bkj.is_zero())
                        out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }
};

// determinant by fraction-free elimination; used to certify unimodularity
inline BigInt determinant(IntMatrix m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return BigInt(0);
            for (int j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    BigInt det = m.at(n - 1, n - 1);
    if (sign < 0)
        det.negate();
    return det;
}

struct SmithResult {
    std::vector<BigInt> divisors;   // positive, d_1 | d_2 | ...
    bool has_transforms = false;
    IntMatrix U, V;                 // M = U * diag(divisors) * V when present

    long long rank() const { return static_cast<long long>(divisors.size()); }
};

namespace detail {

// quotient of a by b rounded to nearest (ties toward truncation)
inline BigInt round_quotient(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    if (r.is_zero())
        return q;
    BigInt twice = r.abs() * BigInt(2);
    if (BigInt::compare(twice, b.abs()) > 0)
        q += BigInt(a.sign() * b.sign());
    return q;
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntMatrix& M, bool with_transforms = true) {
    IntMatrix D = M;
    const int R = D.rows, C = D.cols;
    SmithResult res;
    res.has_transforms = with_transforms;
    if (with_transforms) {
        res.U = IntMatrix::identity(R);
        res.V = IntMatrix::identity(C);
    }

    // row/column operations, mirrored into U, V so that M = U * D * V
    auto swap_rows = [&](int i, int j) {
        if (i == j)
            return;
        for (int c = 0; c < C; ++c)
            std::swap(D.at(i, c), D.at(j, c));
        if (with_transforms)
            for (int r = 0; r < R; ++r)
                std::swap(res.U.at(r, i), res.U.at(r, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j)
            return;
        for (int r = 0; r < R; ++r)
            std::swap(D.at(r, i), D.at(r, j));
        if (with_transforms)
            for (int c = 0; c < C; ++c)
                std::swap(res.V.at(i, c), res.V.at(j, c));
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < C; ++c)
            D.at(i, c).negate();
        if (with_transforms)
            for (int r = 0; r < R; ++r)
                res.U.at(r, i).negate();
    };
    // row_i -= q * row_j
    auto row_sub = [&](int i, int j, const BigInt& q) {
        if (q.is_zero())
            return;
        for (int c = 0; c < C; ++c) {
            const BigInt& s = D.at(j, c);
            if (!s.is_zero())
                D.at(i, c) -= q * s;
        }
        if (with_transforms)
            for (int r = 0; r < R; ++r) {
                const BigInt& s = res.U.at(r, i);
                if (!s.is_zero())
                    res.U.at(r, j) += q * s;
            }
    };
    // col_i -= q * col_j
    auto col_sub = [&](int i, int j, const BigInt& q) {
        if (q.is_zero())
            return;
        for (int r = 0; r < R; ++r) {
            const BigInt& s = D.at(r, j);
            if (!s.is_zero())
                D.at(r, i) -= q * s;
        }
        if (with_transforms)
            for (int c = 0; c < C; ++c) {
                const BigInt& s = res.V.at(i, c);
                if (!s.is_zero())
                    res.V.at(j, c) += q * s;
            }
    };

    int t = 0;
    while (t < R && t < C) {
        // minimal |entry| in the active submatrix, early exit on a unit
        int pr = -1, pc = -1;
        for (int i = t; i < R && pr < 0; ++i)
            for (int j = t; j < C; ++j) {
                const BigInt& v = D.at(i, j);
                if (v.is_unit()) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        if (pr < 0) {
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j) {
                    const BigInt& v = D.at(i, j);
                    if (v.is_zero())
                        continue;
                    if (pr < 0 || BigInt::compare_abs(v, D.at(pr, pc)) < 0) {
                        pr = i;
                        pc = j;
                    }
                }
        }
        if (pr < 0)
            break;   // active submatrix is zero
        swap_rows(t, pr);
        swap_cols(t, pc);
        if (D.at(t, t).sign() < 0)
            negate_row(t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (D.at(i, t).is_zero())
                    continue;
                BigInt q = detail::round_quotient(D.at(i, t), D.at(t, t));
                row_sub(i, t, q);
                if (!D.at(i, t).is_zero()) {
                    // remainder is strictly smaller: promote it to the pivot
                    swap_rows(t, i);
                    if (D.at(t, t).sign() < 0)
                        negate_row(t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (D.at(t, j).is_zero())
                    continue;
                BigInt q = detail::round_quotient(D.at(t, j), D.at(t, t));
                col_sub(j, t, q);
                if (!D.at(t, j).is_zero()) {
                    swap_cols(t, j);
                    if (D.at(t, t).sign() < 0)
                        negate_row(t);
                    clean = false;
                }
            }
            if (clean && !D.at(t, t).is_unit()) {
                // make the pivot divide everything that remains
                const BigInt& p = D.at(t, t);
                for (int i = t + 1; i < R && clean; ++i)
                    for (int j = t + 1; j < C; ++j)
                        if (!D.at(i, j).divisible_by(p)) {
                            row_sub(t, i, BigInt(-1));   // row_t += row_i
                            clean = false;
                            break;
                        }
            }
        }
        ++t;
    }

    for (int k = 0; k < t; ++k)
        res.divisors.push_back(D.at(k, k));

    if (with_transforms) {
        IntMatrix diag(R, C);
        for (int k = 0; k < t; ++k)
            diag.at(k, k) = res.divisors[static_cast<std::size_t>(k)];
        if (!(res.U * diag * res.V == M))
            throw std::logic_error("smith_normal_form: U*D*V != M");
    }
    return res;
}

inline std::vector<BigInt> elementary_divisors(const IntMatrix& M) {
    return smith_normal_form(M, false).divisors;
}

inline long long integer_rank(const IntMatrix& M) {
    return static_cast<long long>(elementary_divisors(M).size());
}

}  // namespace dlcoh

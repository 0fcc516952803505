#pragma once

// Signed arbitrary-precision integer with an inline int64 fast path.
//
// Values with |v| < 2^62 live in a single machine word; larger values spill
// into a little-endian base-2^32 magnitude vector. All arithmetic is exact.
// The fast path matters: the Smith normal form routines below operate on
// matrices whose entries are almost always 0 or +-1, and only occasionally
// grow past a machine word during elimination.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlcoh {

class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : small_(v) {}
    BigInt(long v) : small_(v) {}
    BigInt(long long v) : small_(v) { normalize_from_small(); }
    BigInt(unsigned long long v) {
        if (v <= static_cast<unsigned long long>(kFastMax)) {
            small_ = static_cast<long long>(v);
        } else {
            small_ = 1;
            mag_.push_back(static_cast<std::uint32_t>(v));
            mag_.push_back(static_cast<std::uint32_t>(v >> 32));
            trim();
        }
    }

    explicit BigInt(const std::string& decimal) {
        std::size_t i = 0;
        bool neg = false;
        if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
            neg = decimal[i] == '-';
            ++i;
        }
        if (i == decimal.size())
            throw std::invalid_argument("BigInt: empty decimal string");
        BigInt acc;
        for (; i < decimal.size(); ++i) {
            char c = decimal[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: bad digit in decimal string");
            acc = acc * BigInt(10) + BigInt(c - '0');
        }
        if (neg)
            acc.negate();
        *this = std::move(acc);
    }

    bool is_zero() const { return mag_.empty() && small_ == 0; }
    bool is_one() const { return mag_.empty() && small_ == 1; }
    bool is_unit() const { return mag_.empty() && (small_ == 1 || small_ == -1); }
    bool fits_int64() const;
    long long to_int64() const;

    int sign() const {
        if (!mag_.empty())
            return small_ > 0 ? 1 : -1;
        return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
    }

    void negate() {
        if (mag_.empty())
            small_ = -small_;   // |small_| < 2^62, never INT64_MIN
        else
            small_ = -small_;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.negate();
        return r;
    }

    BigInt abs() const { return sign() < 0 ? -*this : *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& r) { *this = *this + r; return *this; }
    BigInt& operator-=(const BigInt& r) { *this = *this - r; return *this; }
    BigInt& operator*=(const BigInt& r) { *this = *this * r; return *this; }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt operator/(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        return q;
    }
    BigInt operator%(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static int compare(const BigInt& a, const BigInt& b);
    static int compare_abs(const BigInt& a, const BigInt& b);

    std::string to_string() const;

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero())
            return BigInt(0);
        return (a * b / gcd(a, b)).abs();
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt acc(1), b = base;
        while (e) {
            if (e & 1)
                acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    bool divisible_by(const BigInt& d) const { return (*this % d).is_zero(); }

private:
    static constexpr long long kFastMax = (1LL << 62) - 1;

    // mag_ empty: value == small_ with |small_| <= kFastMax.
    // mag_ nonempty: value == small_ * mag (small_ is +-1), top limb nonzero.
    long long small_ = 0;
    std::vector<std::uint32_t> mag_;

    void normalize_from_small() {
        if (small_ == INT64_MIN || std::llabs(small_) > kFastMax) {
            unsigned long long m = small_ < 0
                ? (~static_cast<unsigned long long>(small_)) + 1ULL
                : static_cast<unsigned long long>(small_);
            int s = small_ < 0 ? -1 : 1;
            mag_.clear();
            mag_.push_back(static_cast<std::uint32_t>(m));
            mag_.push_back(static_cast<std::uint32_t>(m >> 32));
            small_ = s;
            trim();
        }
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0)
            mag_.pop_back();
        if (mag_.empty()) {
            small_ = 0;
            return;
        }
        if (mag_.size() <= 2) {
            unsigned long long m = mag_[0];
            if (mag_.size() == 2)
                m |= static_cast<unsigned long long>(mag_[1]) << 32;
            if (m <= static_cast<unsigned long long>(kFastMax)) {
                long long v = static_cast<long long>(m);
                small_ = small_ < 0 ? -v : v;
                mag_.clear();
            }
        }
    }

    // Magnitude of the fast value as up-to-2 limbs.
    static int limbs_of_small(long long v, std::uint32_t out[2]) {
        unsigned long long m = v < 0 ? (~static_cast<unsigned long long>(v)) + 1ULL
                                     : static_cast<unsigned long long>(v);
        out[0] = static_cast<std::uint32_t>(m);
        out[1] = static_cast<std::uint32_t>(m >> 32);
        return out[1] ? 2 : (out[0] ? 1 : 0);
    }

    struct View {
        int sign;
        const std::uint32_t* p;
        int n;
    };

    View view(std::uint32_t scratch[2]) const {
        if (!mag_.empty())
            return View{small_ > 0 ? 1 : -1, mag_.data(), static_cast<int>(mag_.size())};
        int n = limbs_of_small(small_, scratch);
        return View{small_ > 0 ? 1 : (small_ < 0 ? -1 : 0), scratch, n};
    }

    static BigInt from_mag(int sign, std::vector<std::uint32_t> mag) {
        BigInt r;
        r.mag_ = std::move(mag);
        r.small_ = sign < 0 ? -1 : 1;
        r.trim();
        return r;
    }

    static int cmp_mag(const std::uint32_t* a, int an, const std::uint32_t* b, int bn);
    static std::vector<std::uint32_t> add_mag(const std::uint32_t* a, int an,
                                              const std::uint32_t* b, int bn);
    static std::vector<std::uint32_t> sub_mag(const std::uint32_t* a, int an,
                                              const std::uint32_t* b, int bn);
    static std::vector<std::uint32_t> mul_mag(const std::uint32_t* a, int an,
                                              const std::uint32_t* b, int bn);
    static void divmod_mag(const std::uint32_t* a, int an, const std::uint32_t* b, int bn,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

inline bool BigInt::fits_int64() const {
    if (mag_.empty())
        return true;
    if (mag_.size() > 2)
        return false;
    unsigned long long m = mag_[0];
    if (mag_.size() == 2)
        m |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (small_ > 0)
        return m <= static_cast<unsigned long long>(INT64_MAX);
    return m <= static_cast<unsigned long long>(INT64_MAX) + 1ULL;
}

inline long long BigInt::to_int64() const {
    if (mag_.empty())
        return small_;
    if (!fits_int64())
        throw std::overflow_error("BigInt: value does not fit in int64");
    unsigned long long m = mag_[0];
    if (mag_.size() == 2)
        m |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (small_ < 0)
        return static_cast<long long>(~m + 1ULL);
    return static_cast<long long>(m);
}

inline int BigInt::cmp_mag(const std::uint32_t* a, int an, const std::uint32_t* b, int bn) {
    if (an != bn)
        return an < bn ? -1 : 1;
    for (int i = an - 1; i >= 0; --i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline std::vector<std::uint32_t> BigInt::add_mag(const std::uint32_t* a, int an,
                                                  const std::uint32_t* b, int bn) {
    if (an < bn) {
        std::swap(a, b);
        std::swap(an, bn);
    }
    std::vector<std::uint32_t> out(static_cast<std::size_t>(an) + 1, 0);
    unsigned long long carry = 0;
    for (int i = 0; i < an; ++i) {
        unsigned long long s = carry + a[i] + (i < bn ? b[i] : 0u);
        out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    out[static_cast<std::size_t>(an)] = static_cast<std::uint32_t>(carry);
    return out;
}

// requires |a| >= |b|
inline std::vector<std::uint32_t> BigInt::sub_mag(const std::uint32_t* a, int an,
                                                  const std::uint32_t* b, int bn) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(an), 0);
    long long borrow = 0;
    for (int i = 0; i < an; ++i) {
        long long d = static_cast<long long>(a[i]) - (i < bn ? b[i] : 0u) - borrow;
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(d);
    }
    return out;
}

inline std::vector<std::uint32_t> BigInt::mul_mag(const std::uint32_t* a, int an,
                                                  const std::uint32_t* b, int bn) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(an) + bn, 0);
    for (int i = 0; i < an; ++i) {
        unsigned long long carry = 0;
        unsigned long long ai = a[i];
        if (ai == 0)
            continue;
        for (int j = 0; j < bn; ++j) {
            unsigned long long cur = out[static_cast<std::size_t>(i + j)] + ai * b[j] + carry;
            out[static_cast<std::size_t>(i + j)] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        int k = i + bn;
        while (carry) {
            unsigned long long cur = out[static_cast<std::size_t>(k)] + carry;
            out[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    return out;
}

// Schoolbook long division on magnitudes: single-limb fast path, otherwise
// base-2^32 with 64-bit trial quotients and correction steps.
inline void BigInt::divmod_mag(const std::uint32_t* a, int an, const std::uint32_t* b, int bn,
                               std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.assign(static_cast<std::size_t>(an), 0);
    if (bn == 1) {
        unsigned long long d = b[0], rem = 0;
        for (int i = an - 1; i >= 0; --i) {
            unsigned long long cur = (rem << 32) | a[i];
            q[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        r.clear();
        if (rem) {
            r.push_back(static_cast<std::uint32_t>(rem));
            if (rem >> 32)
                r.push_back(static_cast<std::uint32_t>(rem >> 32));
        }
        return;
    }
    if (cmp_mag(a, an, b, bn) < 0) {
        q.assign(1, 0);
        r.assign(a, a + an);
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    std::uint32_t top = b[bn - 1];
    while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
    }
    auto shl = [&](const std::uint32_t* src, int n) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(n) + 1, 0);
        std::uint32_t carry = 0;
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] =
                (src[i] << shift) | carry;
            carry = shift ? static_cast<std::uint32_t>(
                                static_cast<unsigned long long>(src[i]) >> (32 - shift))
                          : 0;
        }
        v[static_cast<std::size_t>(n)] = carry;
        while (v.size() > 1 && v.back() == 0)
            v.pop_back();
        return v;
    };
    std::vector<std::uint32_t> u = shl(a, an);
    std::vector<std::uint32_t> v = shl(b, bn);
    int un = static_cast<int>(u.size());
    int vn = static_cast<int>(v.size());
    u.push_back(0);   // one guard limb

    q.assign(static_cast<std::size_t>(un - vn + 1), 0);
    const unsigned long long base = 1ULL << 32;
    for (int j = un - vn; j >= 0; --j) {
        unsigned long long num =
            (static_cast<unsigned long long>(u[static_cast<std::size_t>(j + vn)]) << 32) |
            u[static_cast<std::size_t>(j + vn - 1)];
        unsigned long long vtop = v[static_cast<std::size_t>(vn - 1)];
        unsigned long long qhat = num / vtop;
        unsigned long long rhat = num % vtop;
        if (qhat >= base) {
            qhat = base - 1;
            rhat = num - qhat * vtop;
        }
        // Refine with the second divisor digit (vn >= 2 here) so qhat is at
        // most one too large.
        while (rhat < base &&
               qhat * v[static_cast<std::size_t>(vn - 2)] >
                   (rhat << 32) + u[static_cast<std::size_t>(j + vn - 2)]) {
            --qhat;
            rhat += vtop;
        }

        // u[j..j+vn] -= qhat * v, tracking the final borrow
        long long borrow = 0;
        unsigned long long carry = 0;
        for (int i = 0; i < vn; ++i) {
            unsigned long long prod = qhat * v[static_cast<std::size_t>(i)] + carry;
            carry = prod >> 32;
            long long d = static_cast<long long>(u[static_cast<std::size_t>(j + i)]) -
                          static_cast<long long>(prod & 0xFFFFFFFFULL) - borrow;
            if (d < 0) {
                d += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[static_cast<std::size_t>(j + i)] = static_cast<std::uint32_t>(d);
        }
        long long dtop = static_cast<long long>(u[static_cast<std::size_t>(j + vn)]) -
                         static_cast<long long>(carry) - borrow;
        if (dtop < 0) {
            // qhat was one too large: add the divisor back once
            u[static_cast<std::size_t>(j + vn)] = static_cast<std::uint32_t>(dtop + (1LL << 32));
            --qhat;
            unsigned long long c2 = 0;
            for (int i = 0; i < vn; ++i) {
                unsigned long long s = c2 + u[static_cast<std::size_t>(j + i)] +
                                       v[static_cast<std::size_t>(i)];
                u[static_cast<std::size_t>(j + i)] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            u[static_cast<std::size_t>(j + vn)] += static_cast<std::uint32_t>(c2);
        } else {
            u[static_cast<std::size_t>(j + vn)] = static_cast<std::uint32_t>(dtop);
        }
        q[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(qhat);
    }

    // Remainder = u >> shift, truncated to vn limbs.
    r.assign(u.begin(), u.begin() + vn);
    if (shift) {
        for (int i = 0; i < vn; ++i) {
            std::uint32_t hi = (i + 1 < vn) ? r[static_cast<std::size_t>(i + 1)] : 0;
            r[static_cast<std::size_t>(i)] =
                (r[static_cast<std::size_t>(i)] >> shift) |
                static_cast<std::uint32_t>(static_cast<unsigned long long>(hi) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    while (q.size() > 1 && q.back() == 0)
        q.pop_back();
}

inline int BigInt::compare(const BigInt& a, const BigInt& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb)
        return sa < sb ? -1 : 1;
    if (sa == 0)
        return 0;
    int c = compare_abs(a, b);
    return sa > 0 ? c : -c;
}

inline int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
    std::uint32_t sa[2], sb[2];
    View va = a.view(sa), vb = b.view(sb);
    return cmp_mag(va.p, va.n, vb.p, vb.n);
}

inline BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
        long long s;
        if (!__builtin_add_overflow(a.small_, b.small_, &s))
            return BigInt(s);
    }
    std::uint32_t sa[2], sb[2];
    BigInt::View va = a.view(sa), vb = b.view(sb);
    if (va.sign == 0)
        return b;
    if (vb.sign == 0)
        return a;
    if (va.sign == vb.sign)
        return BigInt::from_mag(va.sign, BigInt::add_mag(va.p, va.n, vb.p, vb.n));
    int c = BigInt::cmp_mag(va.p, va.n, vb.p, vb.n);
    if (c == 0)
        return BigInt(0);
    if (c > 0)
        return BigInt::from_mag(va.sign, BigInt::sub_mag(va.p, va.n, vb.p, vb.n));
    return BigInt::from_mag(vb.sign, BigInt::sub_mag(vb.p, vb.n, va.p, va.n));
}

inline BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt nb = b;
    nb.negate();
    return a + nb;
}

inline BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.mag_.empty() && b.mag_.empty()) {
        long long p;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p))
            return BigInt(p);
    }
    std::uint32_t sa[2], sb[2];
    BigInt::View va = a.view(sa), vb = b.view(sb);
    if (va.sign == 0 || vb.sign == 0)
        return BigInt(0);
    return BigInt::from_mag(va.sign * vb.sign, BigInt::mul_mag(va.p, va.n, vb.p, vb.n));
}

inline void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero())
        throw std::domain_error("BigInt: division by zero");
    if (a.mag_.empty() && b.mag_.empty()) {
        q = BigInt(a.small_ / b.small_);
        r = BigInt(a.small_ % b.small_);
        return;
    }
    std::uint32_t sa[2], sb[2];
    View va = a.view(sa), vb = b.view(sb);
    if (va.sign == 0) {
        q = BigInt(0);
        r = BigInt(0);
        return;
    }
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(va.p, va.n, vb.p, vb.n, qm, rm);
    q = from_mag(va.sign * vb.sign, std::move(qm));
    r = from_mag(va.sign, std::move(rm));
}

inline std::string BigInt::to_string() const {
    if (mag_.empty())
        return std::to_string(small_);
    std::string digits;
    BigInt cur = abs();
    const BigInt chunk(1000000000LL);
    std::vector<long long> parts;
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, chunk, q, r);
        parts.push_back(r.to_int64());
        cur = std::move(q);
    }
    std::string out = sign() < 0 ? "-" : "";
    out += std::to_string(parts.back());
    for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) {
        std::string s = std::to_string(parts[static_cast<std::size_t>(i)]);
        out += std::string(9 - s.size(), '0') + s;
    }
    return out;
}

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace dlcoh

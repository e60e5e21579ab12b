#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamcut/errors.hpp"

namespace hamcut {

// Mod-2 cohomology of real projective space, truncated at degree N: elements
// of F2[a]/(a^(N+1)), one bit per degree.
class TruncatedClass {
public:
    explicit TruncatedClass(std::size_t trunc)
        : trunc_(trunc), words_(trunc / 64 + 1, 0) {}

    static TruncatedClass zero(std::size_t trunc) { return TruncatedClass(trunc); }

    static TruncatedClass one(std::size_t trunc) {
        TruncatedClass c(trunc);
        c.words_[0] = 1;
        return c;
    }

    // a^k; the zero class when k exceeds the truncation
    static TruncatedClass monomial(std::size_t k, std::size_t trunc) {
        TruncatedClass c(trunc);
        if (k <= trunc) c.words_[k / 64] = std::uint64_t(1) << (k % 64);
        return c;
    }

    std::size_t trunc() const { return trunc_; }

    bool coeff(std::size_t k) const {
        if (k > trunc_) return false;
        return (words_[k / 64] >> (k % 64)) & 1;
    }

    void set_coeff(std::size_t k, bool v) {
        if (k > trunc_) return;  // beyond the truncation everything is zero
        std::uint64_t bit = std::uint64_t(1) << (k % 64);
        if (v) words_[k / 64] |= bit;
        else words_[k / 64] &= ~bit;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_one() const {
        if (words_[0] != 1) return false;
        for (std::size_t i = 1; i < words_.size(); ++i)
            if (words_[i] != 0) return false;
        return true;
    }

    // true when every nonzero coefficient sits in exactly degree `deg`
    bool homogeneous_of_degree(std::size_t deg) const {
        for (std::size_t k = 0; k <= trunc_; ++k)
            if (coeff(k) && k != deg) return false;
        return true;
    }

    friend TruncatedClass operator+(const TruncatedClass& a, const TruncatedClass& b) {
        if (a.trunc_ != b.trunc_) throw DimensionMismatch(a.trunc_, b.trunc_);
        TruncatedClass r(a.trunc_);
        for (std::size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = a.words_[i] ^ b.words_[i];
        return r;
    }

    // carryless product truncated at degree N
    friend TruncatedClass operator*(const TruncatedClass& a, const TruncatedClass& b) {
        if (a.trunc_ != b.trunc_) throw DimensionMismatch(a.trunc_, b.trunc_);
        TruncatedClass r(a.trunc_);
        for (std::size_t i = 0; i <= a.trunc_; ++i) {
            if (!a.coeff(i)) continue;
            for (std::size_t j = 0; i + j <= b.trunc_; ++j)
                if (b.coeff(j)) r.set_coeff(i + j, !r.coeff(i + j));
        }
        return r;
    }

    friend bool operator==(const TruncatedClass& a, const TruncatedClass& b) {
        return a.trunc_ == b.trunc_ && a.words_ == b.words_;
    }

private:
    std::size_t trunc_;
    std::vector<std::uint64_t> words_;
};

// Total Stiefel-Whitney class: graded components w_0, w_1, ..., each
// homogeneous of its own degree (so each is 0 or a^i in this base ring).
struct TotalSWClass {
    std::vector<TruncatedClass> w;
    std::size_t trunc = 0;

    static TotalSWClass make(std::vector<TruncatedClass> components, std::size_t trunc) {
        TotalSWClass total;
        total.trunc = trunc;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].trunc() != trunc)
                throw DimensionMismatch(trunc, components[i].trunc());
            if (!components[i].homogeneous_of_degree(i))
                throw Error("total class component " + std::to_string(i) +
                            " has content outside degree " + std::to_string(i));
        }
        total.w = std::move(components);
        return total;
    }

    // zero beyond the stored rank, and beyond the truncation of the ring
    TruncatedClass component(std::size_t i) const {
        if (i < w.size() && i <= trunc) return w[i];
        return TruncatedClass::zero(trunc);
    }

    friend bool operator==(const TotalSWClass& a, const TotalSWClass& b) {
        std::size_t n = std::max(a.w.size(), b.w.size());
        if (a.trunc != b.trunc) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!(a.component(i) == b.component(i))) return false;
        return true;
    }
};

// An element of the projectivized-bundle ring, written in the canonical form
// d_0 + d_1 T + ... + d_m T^m.
struct ProjectiveClass {
    std::vector<TruncatedClass> d;
    std::size_t trunc = 0;

    bool is_zero() const {
        for (const auto& c : d)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ProjectiveClass& a, const ProjectiveClass& b) {
        return a.trunc == b.trunc && a.d == b.d;
    }
};

// Inverse of a unit total class: u with w * u = 1 through total degree N.
// The components are the classes of the stable complement, u_j = w_j(-E).
inline TotalSWClass invert_total_class(const TotalSWClass& w, std::size_t trunc) {
    if (!w.component(0).is_one()) throw NonUnitLeadingTerm();
    std::vector<TruncatedClass> u;
    u.reserve(trunc + 1);
    u.push_back(TruncatedClass::one(trunc));
    for (std::size_t k = 1; k <= trunc; ++k) {
        TruncatedClass acc = TruncatedClass::zero(trunc);
        for (std::size_t i = 1; i <= k; ++i) acc = acc + w.component(i) * u[k - i];
        u.push_back(acc);
    }
    return TotalSWClass::make(std::move(u), trunc);
}

// T^l in the quotient ring H*(B)[T] / (T^(m+1) + w_1 T^m + ... + w_(m+1)),
// computed by repeated multiplication by T with on-the-fly substitution of
// the defining relation (signs are invisible mod 2).
inline ProjectiveClass euler_power_reduce(const TotalSWClass& wE, std::size_t m,
                                          std::size_t l, std::size_t trunc) {
    ProjectiveClass p;
    p.trunc = trunc;
    p.d.assign(m + 1, TruncatedClass::zero(trunc));
    p.d[0] = TruncatedClass::one(trunc);
    for (std::size_t step = 0; step < l; ++step) {
        TruncatedClass top = p.d[m];
        for (std::size_t j = m; j >= 1; --j) p.d[j] = p.d[j - 1];
        p.d[0] = TruncatedClass::zero(trunc);
        if (!top.is_zero())
            for (std::size_t j = 0; j <= m; ++j)
                p.d[j] = p.d[j] + top * wE.component(m + 1 - j);
    }
    return p;
}

// The same class by the direct formula d_j = sum_i w_i(E) w_(l-j-i)(-E),
// i running over 0..m-j; complement classes of negative index are zero.
inline ProjectiveClass euler_power_closed_form(const TotalSWClass& wE, std::size_t m,
                                               std::size_t l, std::size_t trunc) {
    TotalSWClass comp = invert_total_class(wE, trunc);
    ProjectiveClass p;
    p.trunc = trunc;
    p.d.assign(m + 1, TruncatedClass::zero(trunc));
    for (std::size_t j = 0; j <= m; ++j) {
        TruncatedClass acc = TruncatedClass::zero(trunc);
        for (std::size_t i = 0; i + j <= m; ++i) {
            if (l < j + i) continue;  // w_k(-E) with k < 0
            acc = acc + wE.component(i) * comp.component(l - j - i);
        }
        p.d[j] = acc;
    }
    return p;
}

inline bool euler_vanishes(const TotalSWClass& wE, std::size_t m, std::size_t l,
                           std::size_t trunc) {
    return euler_power_reduce(wE, m, l, trunc).is_zero();
}

// Applicability of the point-base criterion: l >= m and the complement
// class in degree l - m is nonzero in the base ring.
inline bool fw_applicable(const TotalSWClass& wE, std::size_t m, std::size_t l,
                          std::size_t trunc) {
    if (l < m) return false;
    TotalSWClass comp = invert_total_class(wE, trunc);
    return !comp.component(l - m).is_zero();
}

// ---------------------------------------------------------------------------
// Text encoding: monomial sums like "1+a+a^2"; total classes as one such
// string per degree.

TruncatedClass parse_class(const std::string& text, std::size_t trunc);
std::string class_to_string(const TruncatedClass& c);
std::string projective_to_string(const ProjectiveClass& p);

}  // namespace hamcut

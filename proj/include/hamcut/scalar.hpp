#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "hamcut/errors.hpp"

namespace hamcut {

// Exact scalar backend. mpq_class keeps values canonical (gcd 1, positive
// denominator), so equality of values is plain equality of representations.
using Rat = mpq_class;

template <typename S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rat>;

inline int sgn(const Rat& v) { return sgn(v.get_num()) ; }
inline int sgn(double v) { return (v > 0.0) - (v < 0.0); }

inline Rat abs_val(const Rat& v) { return abs(v); }
inline double abs_val(double v) { return std::fabs(v); }

inline double to_double(const Rat& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

template <typename S>
S scalar_from_long(long n) {
    if constexpr (is_exact_v<S>) return Rat(n);
    else return static_cast<double>(n);
}

// Aggregation slack for float-mode mass comparisons. Normalized weights are
// rounded, so sums that should hit 1/2 exactly can land a few ulps short.
template <typename S>
inline S mass_slack() {
    if constexpr (is_exact_v<S>) return Rat(0);
    else return 1e-12;
}

template <typename S>
bool mass_at_least(const S& mass, const S& threshold) {
    return mass >= threshold - mass_slack<S>();
}

// ---------------------------------------------------------------------------
// Extended reals: scalars plus the two infinities, enough arithmetic for
// interval endpoints and the gap functional.

enum class ExtTag : std::uint8_t { NegInf, Finite, PosInf };

template <typename S>
struct Ext {
    ExtTag tag = ExtTag::Finite;
    S value{};

    static Ext neg_inf() { return Ext{ExtTag::NegInf, S{}}; }
    static Ext pos_inf() { return Ext{ExtTag::PosInf, S{}}; }
    static Ext finite(S v) { return Ext{ExtTag::Finite, std::move(v)}; }

    bool is_finite() const { return tag == ExtTag::Finite; }
    bool is_neg_inf() const { return tag == ExtTag::NegInf; }
    bool is_pos_inf() const { return tag == ExtTag::PosInf; }

    Ext operator-() const {
        switch (tag) {
            case ExtTag::NegInf: return pos_inf();
            case ExtTag::PosInf: return neg_inf();
            default: return finite(-value);
        }
    }

    friend bool operator==(const Ext& a, const Ext& b) {
        if (a.tag != b.tag) return false;
        return a.tag != ExtTag::Finite || a.value == b.value;
    }

    // NegInf < finite < PosInf
    friend bool operator<(const Ext& a, const Ext& b) {
        if (a.tag == ExtTag::Finite && b.tag == ExtTag::Finite) return a.value < b.value;
        auto rank = [](ExtTag t) { return t == ExtTag::NegInf ? 0 : t == ExtTag::Finite ? 1 : 2; };
        return rank(a.tag) < rank(b.tag);
    }
    friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
    friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
    friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }
};

// Difference with the convention -inf - (+inf) = -inf. Only combinations that
// arise from interval endpoints are needed: lo is never +inf as a maximum of
// lower endpoints unless hi is +inf too.
template <typename S>
Ext<S> ext_sub(const Ext<S>& a, const Ext<S>& b) {
    if (a.is_neg_inf()) return Ext<S>::neg_inf();
    if (b.is_pos_inf()) return Ext<S>::neg_inf();
    if (a.is_pos_inf()) return Ext<S>::pos_inf();
    if (b.is_neg_inf()) return Ext<S>::pos_inf();
    return Ext<S>::finite(a.value - b.value);
}

template <typename S>
Ext<S> ext_max(const Ext<S>& a, const Ext<S>& b) { return a < b ? b : a; }

template <typename S>
Ext<S> ext_min(const Ext<S>& a, const Ext<S>& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Exact scalar text forms: integers as "n", other rationals as "p/q".

inline std::string rat_to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Accepts "p/q", plain integers, and decimal notation with an optional
// exponent ("-3", "0.25", "1.5e3"); every form is read exactly.
Rat parse_rational(const std::string& text);

}  // namespace hamcut

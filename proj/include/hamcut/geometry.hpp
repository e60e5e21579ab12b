#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hamcut/scalar.hpp"

namespace hamcut {

// Projective representatives for affine hyperplanes [f, y] and Hopf points
// [e, x]. Canonical forms make projective equality a plain equality test:
//   exact scalars: integer coordinates, content 1, first nonzero positive;
//   float scalars: unit Euclidean norm, first nonzero positive.

template <typename S>
using Vec = std::vector<S>;

template <typename S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    S acc = scalar_from_long<S>(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <typename S>
S norm_sq(const Vec<S>& a) {
    S acc = scalar_from_long<S>(0);
    for (const S& v : a) acc += v * v;
    return acc;
}

template <typename S>
bool vec_is_zero(const Vec<S>& a) {
    for (const S& v : a)
        if (sgn(v) != 0) return false;
    return true;
}

template <typename S>
Vec<S> negate_coords(Vec<S> a) {
    for (S& v : a) v = -v;
    return a;
}

template <typename S>
Vec<S> add_coords(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

namespace detail {

// Scales `v` in place to its canonical projective representative and returns
// the factor t it was multiplied by (canonical = t * input).
template <typename S>
S canonical_scale(Vec<S>& v) {
    if constexpr (is_exact_v<S>) {
        mpz_class lcm_den(1);
        for (const Rat& c : v) lcm_den = lcm(lcm_den, c.get_den());
        mpz_class gcd_num(0);
        for (const Rat& c : v) {
            mpz_class n = c.get_num() * lcm_den / c.get_den();
            gcd_num = gcd(gcd_num, n);
        }
        int lead = 0;
        for (const Rat& c : v)
            if (sgn(c) != 0) { lead = sgn(c); break; }
        Rat t(lead > 0 ? lcm_den : mpz_class(-lcm_den), gcd_num);
        t.canonicalize();
        for (Rat& c : v) { c *= t; c.canonicalize(); }
        return t;
    } else {
        double n = std::sqrt(to_double(norm_sq(v)));
        int lead = 0;
        for (double c : v)
            if (c != 0.0) { lead = c > 0.0 ? 1 : -1; break; }
        double t = static_cast<double>(lead) / n;
        for (double& c : v) c *= t;
        return t;
    }
}

}  // namespace detail

// A line through the origin, stored as a canonical spanning vector.
template <typename S>
struct Direction {
    Vec<S> e;

    static Direction canonical(Vec<S> coords) {
        if (vec_is_zero(coords)) throw ZeroVector();
        detail::canonical_scale(coords);
        return Direction{std::move(coords)};
    }

    std::size_t dimension() const { return e.size(); }

    friend bool operator==(const Direction& a, const Direction& b) { return a.e == b.e; }
    friend bool operator<(const Direction& a, const Direction& b) { return a.e < b.e; }
};

template <typename S>
struct Hyperplane {
    Vec<S> f;
    S y{};

    std::size_t dimension() const { return f.size(); }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.f == b.f && a.y == b.y;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.y < b.y;
    }
};

template <typename S>
Hyperplane<S> canonicalize_hyperplane(Vec<S> f, S y) {
    if (vec_is_zero(f)) throw ZeroCovector();
    S t = detail::canonical_scale(f);
    return Hyperplane<S>{std::move(f), y * t};
}

// Hopf point [e, x]: the line L = Re together with the point v = x e on it.
// (e, x) and (-e, -x) share a canonical form because the sign flip of e under
// canonicalization carries over to x.
template <typename S>
struct HopfPoint {
    Direction<S> e;
    S x{};

    static HopfPoint canonical(Vec<S> coords, S x) {
        if (vec_is_zero(coords)) throw ZeroVector();
        S t = detail::canonical_scale(coords);
        return HopfPoint{Direction<S>{std::move(coords)}, x / t};
    }

    std::size_t dimension() const { return e.dimension(); }

    Vec<S> point() const {
        Vec<S> v = e.e;
        for (S& c : v) c *= x;
        return v;
    }

    friend bool operator==(const HopfPoint& a, const HopfPoint& b) {
        return a.e == b.e && a.x == b.x;
    }
};

template <typename S>
struct Incidence {
    bool parallel = false;
    S t{};  // meaningful iff !parallel; the point t*e lies on the hyperplane
};

// Float-mode tolerance for classifying f(e) = 0; exact mode tests the sign.
inline constexpr double kParallelTol = 1e-12;

template <typename S>
bool pairing_is_zero(const S& fe, const Vec<S>& f, const Vec<S>& e) {
    if constexpr (is_exact_v<S>) {
        (void)f; (void)e;
        return sgn(fe) == 0;
    } else {
        double fmax = 0.0, emax = 0.0;
        for (double c : f) fmax = std::max(fmax, std::fabs(c));
        for (double c : e) emax = std::max(emax, std::fabs(c));
        return std::fabs(fe) <= kParallelTol * fmax * emax * static_cast<double>(f.size());
    }
}

template <typename S>
Incidence<S> incidence(const Hyperplane<S>& h, const Direction<S>& e) {
    S fe = dot(h.f, e.e);
    if (pairing_is_zero(fe, h.f, e.e)) return Incidence<S>{true, S{}};
    return Incidence<S>{false, h.y / fe};
}

// The bisection inequalities one hyperplane at a time: y f(e) >= x f(e)^2
// and y f(e) <= x f(e)^2. Both hold exactly when the hyperplane passes
// through v = x e or is parallel to e.
template <typename S>
bool star_upper(const Hyperplane<S>& h, const HopfPoint<S>& p) {
    S fe = dot(h.f, p.e.e);
    return h.y * fe >= p.x * fe * fe;
}

template <typename S>
bool star_lower(const Hyperplane<S>& h, const HopfPoint<S>& p) {
    S fe = dot(h.f, p.e.e);
    return h.y * fe <= p.x * fe * fe;
}

}  // namespace hamcut

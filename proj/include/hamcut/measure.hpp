#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamcut/geometry.hpp"

namespace hamcut {

// Finite atomic probability measures on hyperplanes and on points, with the
// weighted-median machinery
// shared by the verifier and the solver.

template <typename S>
struct WeightedFamily {
    std::vector<std::pair<Hyperplane<S>, S>> atoms;  // weights sum to 1
    std::string label;

    // Merges atoms with equal canonical hyperplanes and normalizes weights.
    static WeightedFamily make(std::vector<std::pair<Hyperplane<S>, S>> raw,
                               std::string label = {}) {
        if (raw.empty()) throw Error("family '" + label + "' needs at least one atom");
        std::map<Hyperplane<S>, S> merged;
        S total = scalar_from_long<S>(0);
        for (auto& [h, w] : raw) {
            if (h.dimension() != raw.front().first.dimension())
                throw DimensionMismatch(raw.front().first.dimension(), h.dimension());
            if (!(sgn(w) > 0)) throw Error("family '" + label + "': weights must be positive");
            auto [it, fresh] = merged.emplace(h, w);
            if (!fresh) it->second += w;
            total += w;
        }
        WeightedFamily fam;
        fam.label = std::move(label);
        fam.atoms.reserve(merged.size());
        for (auto& [h, w] : merged) fam.atoms.emplace_back(h, w / total);
        return fam;
    }

    std::size_t dimension() const { return atoms.front().first.dimension(); }

    friend bool operator==(const WeightedFamily& a, const WeightedFamily& b) {
        return a.atoms == b.atoms && a.label == b.label;
    }
};

template <typename S>
struct PointFamily {
    std::vector<std::pair<Vec<S>, S>> atoms;  // weights sum to 1
    std::string label;

    static PointFamily make(std::vector<std::pair<Vec<S>, S>> raw, std::string label = {}) {
        if (raw.empty()) throw Error("family '" + label + "' needs at least one atom");
        std::map<Vec<S>, S> merged;
        S total = scalar_from_long<S>(0);
        for (auto& [v, w] : raw) {
            if (v.size() != raw.front().first.size())
                throw DimensionMismatch(raw.front().first.size(), v.size());
            if (!(sgn(w) > 0)) throw Error("family '" + label + "': weights must be positive");
            auto [it, fresh] = merged.emplace(v, w);
            if (!fresh) it->second += w;
            total += w;
        }
        PointFamily fam;
        fam.label = std::move(label);
        fam.atoms.reserve(merged.size());
        for (auto& [v, w] : merged) fam.atoms.emplace_back(v, w / total);
        return fam;
    }

    std::size_t dimension() const { return atoms.front().first.size(); }

    friend bool operator==(const PointFamily& a, const PointFamily& b) {
        return a.atoms == b.atoms && a.label == b.label;
    }
};

// Per-family mass report for one candidate cut. Closed inequalities: atoms on
// the boundary (or inside the eps fence) count on both sides; the pessimistic
// masses exclude them.
template <typename S>
struct SideReport {
    S upper_mass{};
    S lower_mass{};
    S fence_mass{};
    S upper_pessimistic{};
    S lower_pessimistic{};
    bool satisfied = false;
};

template <typename S>
struct MedianInterval {
    Ext<S> lo = Ext<S>::neg_inf();
    Ext<S> hi = Ext<S>::pos_inf();

    bool whole_line() const { return lo.is_neg_inf() && hi.is_pos_inf(); }

    bool contains(const S& x) const {
        return Ext<S>::finite(x) >= lo && Ext<S>::finite(x) <= hi;
    }

    friend bool operator==(const MedianInterval& a, const MedianInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// ---------------------------------------------------------------------------
// Side masses

// Relative scale of the boundary residual y f(e) - x f(e)^2, used by the
// float-mode fence: near-equality is judged against the atom's magnitude.
template <typename S>
S fence_scale(const Hyperplane<S>& h, const HopfPoint<S>& p) {
    S m = abs_val(h.y);
    for (const S& c : h.f) m = std::max(m, abs_val(c));
    S xq = std::max(scalar_from_long<S>(1), abs_val(p.x));
    return m * xq * norm_sq(p.e.e);
}

template <typename S>
SideReport<S> side_masses_fenced(const WeightedFamily<S>& family, const HopfPoint<S>& p,
                                 const S& eps) {
    if (family.dimension() != p.dimension())
        throw DimensionMismatch(family.dimension(), p.dimension());
    SideReport<S> rep;
    rep.upper_mass = rep.lower_mass = rep.fence_mass = scalar_from_long<S>(0);
    rep.upper_pessimistic = rep.lower_pessimistic = scalar_from_long<S>(0);
    for (const auto& [h, w] : family.atoms) {
        S fe = dot(h.f, p.e.e);
        S residual = h.y * fe - p.x * fe * fe;
        S threshold = eps * fence_scale(h, p);
        if (abs_val(residual) <= threshold) {
            rep.upper_mass += w;
            rep.lower_mass += w;
            rep.fence_mass += w;
        } else if (sgn(residual) > 0) {
            rep.upper_mass += w;
            rep.upper_pessimistic += w;
        } else {
            rep.lower_mass += w;
            rep.lower_pessimistic += w;
        }
    }
    S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
    rep.satisfied = mass_at_least(rep.upper_mass, half) && mass_at_least(rep.lower_mass, half);
    return rep;
}

template <typename S>
SideReport<S> side_masses(const WeightedFamily<S>& family, const HopfPoint<S>& p) {
    return side_masses_fenced(family, p, scalar_from_long<S>(0));
}

template <typename S>
S parallel_mass(const WeightedFamily<S>& family, const Direction<S>& e) {
    if (family.dimension() != e.dimension())
        throw DimensionMismatch(family.dimension(), e.dimension());
    S mass = scalar_from_long<S>(0);
    for (const auto& [h, w] : family.atoms) {
        S fe = dot(h.f, e.e);
        if (pairing_is_zero(fe, h.f, e.e)) mass += w;
    }
    return mass;
}

// ---------------------------------------------------------------------------
// Weighted median intervals

// Incidence parameters of a family along a fixed direction: the weight of the
// parallel class plus the finite parameters t = y / f(e) with their weights.
template <typename S>
struct FamilyParams {
    S parallel{};
    std::vector<std::pair<S, S>> ts;  // (parameter, weight)
};

template <typename S>
FamilyParams<S> incidence_params(const WeightedFamily<S>& family, const Direction<S>& e) {
    if (family.dimension() != e.dimension())
        throw DimensionMismatch(family.dimension(), e.dimension());
    FamilyParams<S> out;
    out.parallel = scalar_from_long<S>(0);
    out.ts.reserve(family.atoms.size());
    for (const auto& [h, w] : family.atoms) {
        Incidence<S> inc = incidence(h, e);
        if (inc.parallel) out.parallel += w;
        else out.ts.emplace_back(inc.t, w);
    }
    return out;
}

// Parameters f(v_i) of a point family under a covector; no parallel class.
template <typename S>
std::vector<std::pair<S, S>> point_params(const PointFamily<S>& family, const Vec<S>& f) {
    if (vec_is_zero(f)) throw ZeroCovector();
    if (family.dimension() != f.size()) throw DimensionMismatch(family.dimension(), f.size());
    std::vector<std::pair<S, S>> out;
    out.reserve(family.atoms.size());
    for (const auto& [v, w] : family.atoms) out.emplace_back(dot(f, v), w);
    return out;
}

// The set of x for which the family is bisected along the direction the
// parameters were taken at: both tail masses must reach tau = 1/2 - parallel.
template <typename S>
MedianInterval<S> median_from_params(FamilyParams<S> params) {
    S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
    S tau = half - params.parallel;
    if (!(tau > mass_slack<S>())) return MedianInterval<S>{};  // whole line
    auto& ts = params.ts;
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    S cum = scalar_from_long<S>(0);
    Ext<S> lo = Ext<S>::pos_inf();
    for (const auto& [t, w] : ts) {
        cum += w;
        if (mass_at_least(cum, tau)) { lo = Ext<S>::finite(t); break; }
    }
    cum = scalar_from_long<S>(0);
    Ext<S> hi = Ext<S>::neg_inf();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        cum += it->second;
        if (mass_at_least(cum, tau)) { hi = Ext<S>::finite(it->first); break; }
    }
    if (!lo.is_finite() || !hi.is_finite()) return MedianInterval<S>{};  // float underflow of tau
    return MedianInterval<S>{lo, hi};
}

template <typename S>
MedianInterval<S> median_interval(const WeightedFamily<S>& family, const Direction<S>& e) {
    return median_from_params(incidence_params(family, e));
}

// ---------------------------------------------------------------------------
// Oracles

// Independent check of the bisection condition: direct mass counting per
// family, with an optional fence for float verification.
template <typename S>
std::vector<SideReport<S>> verify_star(const std::vector<WeightedFamily<S>>& families,
                                       const HopfPoint<S>& p,
                                       const S& eps = scalar_from_long<S>(0)) {
    std::vector<SideReport<S>> reports;
    reports.reserve(families.size());
    for (const auto& fam : families) reports.push_back(side_masses_fenced(fam, p, eps));
    return reports;
}

// Point-family bisection: masses of the closed halfspaces of [f, y].
template <typename S>
std::vector<SideReport<S>> verify_classical(const std::vector<PointFamily<S>>& families,
                                            const Hyperplane<S>& h,
                                            const S& eps = scalar_from_long<S>(0)) {
    std::vector<SideReport<S>> reports;
    reports.reserve(families.size());
    S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
    S fmax = abs_val(h.y);
    for (const S& c : h.f) fmax = std::max(fmax, abs_val(c));
    for (const auto& fam : families) {
        if (fam.dimension() != h.dimension())
            throw DimensionMismatch(fam.dimension(), h.dimension());
        SideReport<S> rep;
        rep.upper_mass = rep.lower_mass = rep.fence_mass = scalar_from_long<S>(0);
        rep.upper_pessimistic = rep.lower_pessimistic = scalar_from_long<S>(0);
        for (const auto& [v, w] : fam.atoms) {
            S vmax = scalar_from_long<S>(1);
            for (const S& c : v) vmax = std::max(vmax, abs_val(c));
            S residual = dot(h.f, v) - h.y;
            S threshold = eps * fmax * vmax;
            if (abs_val(residual) <= threshold) {
                rep.upper_mass += w;
                rep.lower_mass += w;
                rep.fence_mass += w;
            } else if (sgn(residual) > 0) {
                rep.upper_mass += w;  // f(v) >= y
                rep.upper_pessimistic += w;
            } else {
                rep.lower_mass += w;  // f(v) <= y
                rep.lower_pessimistic += w;
            }
        }
        rep.satisfied =
            mass_at_least(rep.upper_mass, half) && mass_at_least(rep.lower_mass, half);
        reports.push_back(rep);
    }
    return reports;
}

template <typename S>
bool all_satisfied(const std::vector<SideReport<S>>& reports) {
    for (const auto& r : reports)
        if (!r.satisfied) return false;
    return true;
}

// Smallest slack min(upper, lower) - 1/2 over the reports.
template <typename S>
S min_margin(const std::vector<SideReport<S>>& reports) {
    S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
    S margin = scalar_from_long<S>(1);
    for (const auto& r : reports) {
        S side = r.upper_mass < r.lower_mass ? r.upper_mass : r.lower_mass;
        S m = side - half;
        if (m < margin) margin = m;
    }
    return margin;
}

}  // namespace hamcut

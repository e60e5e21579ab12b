#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hamcut/instance.hpp"

namespace hamcut {

// Feasibility functional over directions. For a direction e (a covector f in
// classical mode), each family contributes its median interval; a common
// witness x exists iff the intervals intersect, i.e. iff
//   g = max_j lo_j - min_j hi_j <= 0.

template <typename S>
struct GapValue {
    Ext<S> g = Ext<S>::neg_inf();
    int argmax_lo = -1;
    int argmin_hi = -1;
};

template <typename S>
std::vector<MedianInterval<S>> intervals_at(const Instance<S>& inst, const Direction<S>& e) {
    std::vector<MedianInterval<S>> out;
    if (inst.kind == InstanceKind::Hyperplane) {
        out.reserve(inst.hyperplane_families.size());
        for (const auto& fam : inst.hyperplane_families)
            out.push_back(median_interval(fam, e));
    } else {
        out.reserve(inst.point_families.size());
        for (const auto& fam : inst.point_families) {
            FamilyParams<S> params;
            params.parallel = scalar_from_long<S>(0);
            params.ts = point_params(fam, e.e);
            out.push_back(median_from_params(std::move(params)));
        }
    }
    return out;
}

template <typename S>
GapValue<S> gap_of_intervals(const std::vector<MedianInterval<S>>& intervals) {
    GapValue<S> gv;
    Ext<S> max_lo = Ext<S>::neg_inf();
    Ext<S> min_hi = Ext<S>::pos_inf();
    for (int j = 0; j < static_cast<int>(intervals.size()); ++j) {
        if (intervals[j].lo > max_lo) { max_lo = intervals[j].lo; gv.argmax_lo = j; }
        if (intervals[j].hi < min_hi) { min_hi = intervals[j].hi; gv.argmin_hi = j; }
    }
    if (gv.argmax_lo < 0 && !intervals.empty()) gv.argmax_lo = 0;
    if (gv.argmin_hi < 0 && !intervals.empty()) gv.argmin_hi = 0;
    gv.g = ext_sub(max_lo, min_hi);
    return gv;
}

template <typename S>
GapValue<S> gap(const Instance<S>& inst, const Direction<S>& e) {
    if (inst.dimension != e.dimension()) throw DimensionMismatch(inst.dimension, e.dimension());
    return gap_of_intervals(intervals_at(inst, e));
}

// Witness pick inside the interval stack: midpoint of [max lo, min hi], with
// the conventions 0 for the whole line and the finite endpoint when exactly
// one side is unbounded.
template <typename S>
S choose_x_in(const Ext<S>& lo, const Ext<S>& hi) {
    if (lo > hi) throw Infeasible();
    if (!lo.is_finite() && !hi.is_finite()) return scalar_from_long<S>(0);
    if (!lo.is_finite()) return hi.value;
    if (!hi.is_finite()) return lo.value;
    return (lo.value + hi.value) / scalar_from_long<S>(2);
}

template <typename S>
S choose_x(const std::vector<MedianInterval<S>>& intervals) {
    Ext<S> max_lo = Ext<S>::neg_inf();
    Ext<S> min_hi = Ext<S>::pos_inf();
    for (const auto& iv : intervals) {
        max_lo = ext_max(max_lo, iv.lo);
        min_hi = ext_min(min_hi, iv.hi);
    }
    return choose_x_in(max_lo, min_hi);
}

// ---------------------------------------------------------------------------
// Solutions

enum class SolveMethod { Exact2D, Sweep, Degenerate };
enum class CertKind { Exact, Float };

template <typename S>
struct Certificate {
    CertKind kind = CertKind::Exact;
    S eps{};
    S min_margin{};
};

// A maximal feasible arc of directions, bounded by enumerated event
// directions; endpoints may or may not themselves be feasible.
template <typename S>
struct ArcInfo {
    Direction<S> lo;
    Direction<S> hi;
    bool lo_closed = false;
    bool hi_closed = false;
    bool full_circle = false;
};

template <typename S>
struct Solution {
    std::optional<HopfPoint<S>> p;        // hyperplane mode
    std::optional<Hyperplane<S>> cut;     // classical mode
    MedianInterval<S> witness;            // common x-interval at the direction
    std::vector<SideReport<S>> reports;
    Certificate<S> certificate;
    SolveMethod method = SolveMethod::Exact2D;
    std::optional<ArcInfo<S>> arc;        // present for arc representatives

    const Vec<S>& direction_coords() const { return p ? p->e.e : cut->f; }
};

// ---------------------------------------------------------------------------
// Case (ii) degeneracies: directions along which every family has parallel
// mass >= 1/2, so every x on the line is a solution.

namespace detail {

// Spanning set of the kernel of a covector: one vector per non-pivot index.
template <typename S>
std::vector<Vec<S>> kernel_basis(const Vec<S>& f) {
    std::size_t pivot = 0;
    if constexpr (is_exact_v<S>) {
        while (pivot < f.size() && sgn(f[pivot]) == 0) ++pivot;
    } else {
        for (std::size_t i = 1; i < f.size(); ++i)
            if (std::fabs(f[i]) > std::fabs(f[pivot])) pivot = i;
    }
    std::vector<Vec<S>> basis;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j == pivot) continue;
        Vec<S> v(f.size(), scalar_from_long<S>(0));
        v[j] = f[pivot];
        v[pivot] = -f[j];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Spanning set of ker f1 ∩ ker f2 for independent covectors (empty result
// when they are proportional or the dimension is too small).
template <typename S>
std::vector<Vec<S>> pair_kernel_basis(const Vec<S>& f1, const Vec<S>& f2) {
    const std::size_t n = f1.size();
    if (n < 3) return {};
    std::size_t p1 = 0;
    if constexpr (is_exact_v<S>) {
        while (p1 < n && sgn(f1[p1]) == 0) ++p1;
    } else {
        for (std::size_t i = 1; i < n; ++i)
            if (std::fabs(f1[i]) > std::fabs(f1[p1])) p1 = i;
    }
    // eliminate coordinate p1 from f2 (fraction-free row operation)
    Vec<S> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = f1[p1] * f2[i] - f2[p1] * f1[i];
    if (vec_is_zero(g)) return {};
    std::size_t p2 = n;
    if constexpr (is_exact_v<S>) {
        for (std::size_t i = 0; i < n; ++i)
            if (i != p1 && sgn(g[i]) != 0) { p2 = i; break; }
    } else {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != p1 && std::fabs(to_double(g[i])) > best) {
                best = std::fabs(to_double(g[i]));
                p2 = i;
            }
        double gmax = 0.0, fmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            gmax = std::max(gmax, std::fabs(to_double(g[i])));
            fmax = std::max(fmax, std::fabs(to_double(f1[i])) * std::fabs(to_double(f2[i])));
        }
        if (p2 == n || gmax <= 1e-12 * std::max(1.0, fmax)) return {};
    }
    if (p2 == n) return {};
    std::vector<Vec<S>> basis;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == p1 || j == p2) continue;
        Vec<S> v(n, scalar_from_long<S>(0));
        v[j] = f1[p1] * g[p2];
        v[p2] = -(f1[p1] * g[j]);
        v[p1] = f1[p2] * g[j] - f1[j] * g[p2];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

template <typename S>
std::vector<Direction<S>> detect_case_ii(const Instance<S>& inst) {
    if (inst.kind != InstanceKind::Hyperplane)
        throw WrongMode("detect_case_ii expects hyperplane families");
    // distinct atom covectors
    std::set<Vec<S>> covectors;
    for (const auto& fam : inst.hyperplane_families)
        for (const auto& [h, w] : fam.atoms) covectors.insert(h.f);
    std::vector<Vec<S>> fs(covectors.begin(), covectors.end());

    std::set<Vec<S>> candidates;
    auto add_span_samples = [&](const std::vector<Vec<S>>& basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!vec_is_zero(basis[i]))
                candidates.insert(Direction<S>::canonical(basis[i]).e);
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                Vec<S> s = add_coords(basis[i], basis[j]);
                if (!vec_is_zero(s)) candidates.insert(Direction<S>::canonical(s).e);
            }
        }
    };
    for (const auto& f : fs) add_span_samples(detail::kernel_basis(f));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            add_span_samples(detail::pair_kernel_basis(fs[i], fs[j]));

    S half = scalar_from_long<S>(1) / scalar_from_long<S>(2);
    std::vector<Direction<S>> out;
    for (const auto& coords : candidates) {
        Direction<S> e{coords};
        bool all = true;
        for (const auto& fam : inst.hyperplane_families)
            if (!mass_at_least(parallel_mass(fam, e), half)) { all = false; break; }
        if (all) out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact 2-D solver: event enumeration over the projective circle.
//
// Candidate directions are the kernels of the atom covectors together with
// the kernels of the tie covectors y_i f_k - y_k f_i (where two incidence
// parameters cross). Between consecutive candidates the per-family interval
// endpoints come from a fixed atom each, so the sign of the gap is constant
// on every open arc; one rational interior sample per arc decides it.

namespace detail {

// kernel direction of a nonzero 2-D covector
template <typename S>
Direction<S> kernel_direction_2d(const Vec<S>& f) {
    return Direction<S>::canonical(Vec<S>{-f[1], f[0]});
}

// covector annihilating a nonzero 2-D vector
template <typename S>
Direction<S> perp_covector_2d(const Vec<S>& d) {
    return Direction<S>::canonical(Vec<S>{-d[1], d[0]});
}

// Projective angle order on canonical 2-D directions: slope order on the
// right half-plane, with the vertical direction (0,1) largest.
template <typename S>
bool angle_less(const Direction<S>& a, const Direction<S>& b) {
    bool va = sgn(a.e[0]) == 0;
    bool vb = sgn(b.e[0]) == 0;
    if (va || vb) return !va && vb;
    return a.e[1] * b.e[0] < b.e[1] * a.e[0];
}

}  // namespace detail

// hyperplane mode events
inline std::vector<Direction<Rat>> candidate_directions_2d(const Instance<Rat>& inst) {
    if (inst.kind != InstanceKind::Hyperplane)
        throw WrongMode("hyperplane-mode candidate enumeration");
    std::vector<std::pair<Vec<Rat>, Rat>> atoms;  // (f, y) over all families
    for (const auto& fam : inst.hyperplane_families)
        for (const auto& [h, w] : fam.atoms) atoms.emplace_back(h.f, h.y);
    std::set<Vec<Rat>> dirs;
    for (const auto& [f, y] : atoms) dirs.insert(detail::kernel_direction_2d(f).e);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t k = i + 1; k < atoms.size(); ++k) {
            Vec<Rat> c(2);
            c[0] = atoms[i].second * atoms[k].first[0] - atoms[k].second * atoms[i].first[0];
            c[1] = atoms[i].second * atoms[k].first[1] - atoms[k].second * atoms[i].first[1];
            if (vec_is_zero(c)) continue;  // identical incidence parameters everywhere
            dirs.insert(detail::kernel_direction_2d(c).e);
        }
    }
    std::vector<Direction<Rat>> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) out.push_back(Direction<Rat>{d});
    return out;
}

// classical mode events: covectors annihilating point differences
inline std::vector<Direction<Rat>> candidate_covectors_2d(const Instance<Rat>& inst) {
    if (inst.kind != InstanceKind::Classical)
        throw WrongMode("classical-mode candidate enumeration");
    std::vector<Vec<Rat>> pts;
    for (const auto& fam : inst.point_families)
        for (const auto& [v, w] : fam.atoms) pts.push_back(v);
    std::set<Vec<Rat>> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            Vec<Rat> d{pts[i][0] - pts[k][0], pts[i][1] - pts[k][1]};
            if (vec_is_zero(d)) continue;
            dirs.insert(detail::perp_covector_2d(d).e);
        }
    }
    std::vector<Direction<Rat>> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) out.push_back(Direction<Rat>{d});
    return out;
}

namespace detail {

struct Piece {
    Direction<Rat> dir;
    bool is_candidate = false;
    bool feasible = false;
};

// Alternating candidate/sample walk around the projective circle. Candidates
// arrive sorted by angle; the sample after the last candidate sits on the
// wraparound arc toward the negation of the first.
inline std::vector<Piece> circle_pieces(std::vector<Direction<Rat>> candidates,
                                        const Instance<Rat>& inst) {
    if (candidates.empty())
        candidates.push_back(Direction<Rat>::canonical(Vec<Rat>{Rat(1), Rat(0)}));
    if (candidates.size() == 1) {
        // a lone candidate would leave a single arc of angle exactly pi;
        // split it with the perpendicular direction
        const Vec<Rat>& c = candidates.front().e;
        candidates.push_back(Direction<Rat>::canonical(Vec<Rat>{-c[1], c[0]}));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Direction<Rat>& a, const Direction<Rat>& b) { return angle_less(a, b); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const std::size_t k = candidates.size();
    std::vector<Piece> pieces;
    pieces.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        pieces.push_back(Piece{candidates[i], true, false});
        Vec<Rat> next = (i + 1 < k) ? candidates[i + 1].e : negate_coords(candidates[0].e);
        Vec<Rat> mid = add_coords(candidates[i].e, next);
        pieces.push_back(Piece{Direction<Rat>::canonical(std::move(mid)), false, false});
    }
    for (auto& piece : pieces)
        piece.feasible = !(gap(inst, piece.dir).g > Ext<Rat>::finite(Rat(0)));
    return pieces;
}

}  // namespace detail

namespace detail {

template <typename BuildWitness>
std::vector<Solution<Rat>> enumerate_circle_solutions(const Instance<Rat>& inst,
                                                      std::vector<Direction<Rat>> candidates,
                                                      BuildWitness&& build) {
    std::vector<Piece> pieces = circle_pieces(std::move(candidates), inst);
    const std::size_t n = pieces.size();

    std::vector<Solution<Rat>> out;
    auto make_solution = [&](const Direction<Rat>& dir, std::optional<ArcInfo<Rat>> arc) {
        auto intervals = intervals_at(inst, dir);
        Ext<Rat> max_lo = Ext<Rat>::neg_inf();
        Ext<Rat> min_hi = Ext<Rat>::pos_inf();
        for (const auto& iv : intervals) {
            max_lo = ext_max(max_lo, iv.lo);
            min_hi = ext_min(min_hi, iv.hi);
        }
        Rat x = choose_x_in(max_lo, min_hi);
        Solution<Rat> sol = build(dir, x);
        sol.witness = MedianInterval<Rat>{max_lo, min_hi};
        sol.certificate = Certificate<Rat>{CertKind::Exact, Rat(0), min_margin(sol.reports)};
        sol.method = SolveMethod::Exact2D;
        sol.arc = std::move(arc);
        out.push_back(std::move(sol));
    };

    std::size_t first_bad = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!pieces[i].feasible) { first_bad = i; break; }

    if (first_bad == n) {  // feasible everywhere
        ArcInfo<Rat> arc;
        arc.lo = pieces[0].dir;
        arc.hi = pieces[0].dir;
        arc.lo_closed = arc.hi_closed = true;
        arc.full_circle = true;
        make_solution(pieces[1].dir, arc);
        return out;
    }

    // walk maximal feasible runs starting after the first infeasible piece
    std::size_t i = first_bad + 1;
    while (i <= first_bad + n) {
        if (!pieces[i % n].feasible) { ++i; continue; }
        std::size_t run_begin = i;
        while (i <= first_bad + n && pieces[i % n].feasible) ++i;
        std::size_t run_end = i - 1;  // inclusive

        if (run_begin == run_end && pieces[run_begin % n].is_candidate) {
            make_solution(pieces[run_begin % n].dir, std::nullopt);
            continue;
        }
        // arc run: pick the first interior sample as representative
        std::size_t repr = run_begin;
        for (std::size_t j = run_begin; j <= run_end; ++j)
            if (!pieces[j % n].is_candidate) { repr = j; break; }
        ArcInfo<Rat> arc;
        std::size_t b = run_begin % n;
        std::size_t e = run_end % n;
        if (pieces[b].is_candidate) {
            arc.lo = pieces[b].dir;
            arc.lo_closed = true;
        } else {
            // sample s_j sits between candidates c_j and c_{j+1}
            arc.lo = pieces[(b + n - 1) % n].dir;
            arc.lo_closed = false;
        }
        if (pieces[e].is_candidate) {
            arc.hi = pieces[e].dir;
            arc.hi_closed = true;
        } else {
            arc.hi = pieces[(e + 1) % n].dir;
            arc.hi_closed = false;
        }
        arc.full_circle = (run_end - run_begin + 1 == n);
        make_solution(pieces[repr % n].dir, arc);
    }
    return out;
}

}  // namespace detail

// All solutions of a 2-D hyperplane instance: isolated directions exactly,
// one interior representative per feasible arc. Certificates are exact.
inline std::vector<Solution<Rat>> solve_exact_2d(const Instance<Rat>& inst) {
    if (inst.kind != InstanceKind::Hyperplane)
        throw WrongMode("solve_exact_2d expects hyperplane families");
    if (inst.dimension != 2)
        throw WrongDimension("exact enumeration is limited to dimension 2");
    return detail::enumerate_circle_solutions(
        inst, candidate_directions_2d(inst), [&](const Direction<Rat>& dir, const Rat& x) {
            Solution<Rat> sol;
            sol.p = HopfPoint<Rat>{dir, x};
            sol.reports = verify_star(inst.hyperplane_families, *sol.p);
            return sol;
        });
}

// Classical counterpart: enumerates covectors, returns hyperplane cuts.
inline std::vector<Solution<Rat>> solve_classical_exact_2d(const Instance<Rat>& inst) {
    if (inst.kind != InstanceKind::Classical)
        throw WrongMode("solve_classical_exact_2d expects point families");
    if (inst.dimension != 2)
        throw WrongDimension("exact enumeration is limited to dimension 2");
    return detail::enumerate_circle_solutions(
        inst, candidate_covectors_2d(inst), [&](const Direction<Rat>& dir, const Rat& y) {
            Solution<Rat> sol;
            sol.cut = Hyperplane<Rat>{dir.e, y};
            sol.reports = verify_classical(inst.point_families, *sol.cut);
            return sol;
        });
}

// Does a reported solution cover the given canonical direction (isolated
// match or arc membership)?
template <typename S>
bool solution_covers(const Solution<S>& sol, const Direction<S>& d) {
    Direction<S> own{sol.direction_coords()};
    if (own == d) return true;
    if (!sol.arc) return false;
    const ArcInfo<S>& arc = *sol.arc;
    if (arc.full_circle) return true;
    const Direction<S>&L = arc.lo, &H = arc.hi;
    if (L == H) return !(d == L) || (arc.lo_closed && arc.hi_closed);
    if (d == L) return arc.lo_closed;
    if (d == H) return arc.hi_closed;
    if (detail::angle_less(L, H)) return detail::angle_less(L, d) && detail::angle_less(d, H);
    return detail::angle_less(L, d) || detail::angle_less(d, H);
}

}  // namespace hamcut

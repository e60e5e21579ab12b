#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "hamcut/rng.hpp"
#include "hamcut/solver.hpp"

namespace hamcut {

struct SweepConfig {
    std::size_t grid_points = 4096;  // coarse directions per hemisphere scan
    std::uint64_t seed = 0;          // grid jitter / sampling stream
    double tol = 1e-9;               // accept a direction when gap <= tol
    double eps = 1e-7;               // incidence fence for the certificate
    int max_iters = 400;             // simplex iterations per refinement round
    int starts = 16;                 // best grid directions kept for refinement
    double shrink = 0.4;             // radius decay between refinement rounds
    int rounds = 8;                  // refinement rounds per start
    std::optional<double> x_bound;   // optional cap on |x| of the witness
};

struct SweepOutcome {
    std::optional<Solution<double>> solution;
    Vec<double> best_direction;  // best direction seen, canonical coords
    double best_gap = 0.0;       // gap value there
};

namespace detail {

inline void normalize_unit(Vec<double>& v) {
    double n = std::sqrt(dot(v, v));
    if (n > 0.0)
        for (double& c : v) c /= n;
}

// gap as a plain double objective; unbounded-below stacks map far negative
inline double gap_scalar(const Instance<double>& inst, const Vec<double>& coords) {
    GapValue<double> gv = gap(inst, Direction<double>{coords});
    switch (gv.g.tag) {
        case ExtTag::NegInf: return -1e300;
        case ExtTag::PosInf: return 1e300;
        default: return gv.g.value;
    }
}

// deterministic low-discrepancy directions covering one hemisphere's worth
// of projective classes (antipodes collapse under canonicalization)
inline std::vector<Vec<double>> direction_grid(std::size_t dim, std::size_t n,
                                               std::uint64_t seed) {
    std::vector<Vec<double>> out;
    if (dim == 1) {
        out.push_back(Vec<double>{1.0});
        return out;
    }
    if (n == 0) n = 1;
    const double pi = std::acos(-1.0);
    std::uint64_t state = seed ^ 0x5851f42d4c957f2dULL;
    if (dim == 2) {
        double jitter = unit_double(state) * 0.25;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            double th = pi * (static_cast<double>(i) + 0.5 + jitter) / static_cast<double>(n);
            out.push_back(Vec<double>{std::cos(th), std::sin(th)});
        }
        return out;
    }
    if (dim == 3) {
        // Fibonacci lattice over the full sphere
        const double golden = pi * (3.0 - std::sqrt(5.0));
        double phase = unit_double(state) * 2.0 * pi;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = golden * static_cast<double>(i) + phase;
            out.push_back(Vec<double>{r * std::cos(phi), r * std::sin(phi), z});
        }
        return out;
    }
    // higher dimensions: normalized Gaussian samples
    out.reserve(n);
    while (out.size() < n) {
        Vec<double> v(dim);
        for (std::size_t i = 0; i < dim; i += 2) {
            double u1 = std::max(unit_double(state), 1e-300);
            double u2 = unit_double(state);
            double r = std::sqrt(-2.0 * std::log(u1));
            v[i] = r * std::cos(2.0 * pi * u2);
            if (i + 1 < dim) v[i + 1] = r * std::sin(2.0 * pi * u2);
        }
        double norm2 = dot(v, v);
        if (norm2 < 1e-12) continue;
        normalize_unit(v);
        out.push_back(std::move(v));
    }
    return out;
}

// orthonormal frame spanning the tangent space at a unit base direction
inline std::vector<Vec<double>> tangent_frame(const Vec<double>& base) {
    const std::size_t dim = base.size();
    std::size_t drop = 0;
    for (std::size_t i = 1; i < dim; ++i)
        if (std::fabs(base[i]) > std::fabs(base[drop])) drop = i;
    std::vector<Vec<double>> frame;
    frame.reserve(dim - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i == drop) continue;
        Vec<double> v(dim, 0.0);
        v[i] = 1.0;
        double c = dot(v, base);
        for (std::size_t k = 0; k < dim; ++k) v[k] -= c * base[k];
        for (const auto& prev : frame) {
            double d = dot(v, prev);
            for (std::size_t k = 0; k < dim; ++k) v[k] -= d * prev[k];
        }
        normalize_unit(v);
        frame.push_back(std::move(v));
    }
    return frame;
}

inline Vec<double> chart_point(const Vec<double>& base, const std::vector<Vec<double>>& frame,
                               const std::vector<double>& u) {
    Vec<double> p = base;
    for (std::size_t i = 0; i < frame.size(); ++i)
        for (std::size_t k = 0; k < p.size(); ++k) p[k] += u[i] * frame[i][k];
    normalize_unit(p);
    return p;
}

// One Nelder-Mead pass over the tangent chart at `base`; moves `base` to the
// best direction found and returns the gap there.
inline double simplex_round(const Instance<double>& inst, Vec<double>& base, double radius,
                            int max_iters, double stop_below) {
    const std::size_t m = base.size() - 1;
    if (m == 0) return gap_scalar(inst, base);
    std::vector<Vec<double>> frame = tangent_frame(base);

    struct Vertex {
        std::vector<double> u;
        double val;
    };
    auto eval = [&](const std::vector<double>& u) {
        return gap_scalar(inst, chart_point(base, frame, u));
    };
    std::vector<Vertex> simplex;
    simplex.reserve(m + 1);
    {
        std::vector<double> zero(m, 0.0);
        simplex.push_back({zero, eval(zero)});
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> u(m, 0.0);
            u[i] = radius;
            simplex.push_back({u, eval(u)});
        }
    }
    auto by_val = [](const Vertex& a, const Vertex& b) { return a.val < b.val; };
    for (int it = 0; it < max_iters; ++it) {
        std::stable_sort(simplex.begin(), simplex.end(), by_val);
        if (simplex.front().val <= stop_below) break;
        double spread = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            spread = std::max(spread,
                              std::fabs(simplex.back().u[i] - simplex.front().u[i]));
        if (spread < 1e-14) break;

        std::vector<double> centroid(m, 0.0);
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t i = 0; i < m; ++i) centroid[i] += simplex[v].u[i] / double(m);
        auto blend = [&](double c) {
            std::vector<double> u(m);
            for (std::size_t i = 0; i < m; ++i)
                u[i] = centroid[i] + c * (centroid[i] - simplex.back().u[i]);
            return u;
        };
        std::vector<double> refl = blend(1.0);
        double fr = eval(refl);
        if (fr < simplex.front().val) {
            std::vector<double> exp = blend(2.0);
            double fe = eval(exp);
            simplex.back() = (fe < fr) ? Vertex{exp, fe} : Vertex{refl, fr};
            continue;
        }
        if (fr < simplex[m - 1].val) {
            simplex.back() = Vertex{refl, fr};
            continue;
        }
        std::vector<double> ctr = blend(fr < simplex.back().val ? 0.5 : -0.5);
        double fc = eval(ctr);
        if (fc < std::min(fr, simplex.back().val)) {
            simplex.back() = Vertex{ctr, fc};
            continue;
        }
        for (std::size_t v = 1; v <= m; ++v) {
            for (std::size_t i = 0; i < m; ++i)
                simplex[v].u[i] = 0.5 * (simplex[v].u[i] + simplex[0].u[i]);
            simplex[v].val = eval(simplex[v].u);
        }
    }
    std::stable_sort(simplex.begin(), simplex.end(), by_val);
    base = chart_point(base, frame, simplex.front().u);
    return simplex.front().val;
}

inline double refine_direction(const Instance<double>& inst, Vec<double>& dir,
                               const SweepConfig& cfg) {
    double best = gap_scalar(inst, dir);
    Vec<double> cur = dir;
    double radius = 0.4;
    const double stop_below = std::min(0.0, cfg.tol * 0.125);
    for (int round = 0; round < cfg.rounds; ++round) {
        double val = simplex_round(inst, cur, radius, cfg.max_iters, stop_below);
        if (val < best) {
            best = val;
            dir = cur;
        }
        if (best <= cfg.tol * 0.125) break;
        radius *= cfg.shrink;
    }
    return best;
}

// Median interval endpoints of one family together with the gradients of the
// incidence parameters realizing them; mirrors median_from_params so the
// polish below agrees with the gap functional it is driving to zero.
struct EndpointData {
    bool whole = true;
    Ext<double> lo = Ext<double>::neg_inf();
    Ext<double> hi = Ext<double>::pos_inf();
    Vec<double> lo_grad;
    Vec<double> hi_grad;
};

inline EndpointData family_endpoints(const Instance<double>& inst, std::size_t fam_idx,
                                     const Vec<double>& e) {
    struct Item {
        double t;
        double w;
        Vec<double> grad;
    };
    std::vector<Item> items;
    double parallel = 0.0;
    if (inst.kind == InstanceKind::Hyperplane) {
        const auto& fam = inst.hyperplane_families[fam_idx];
        items.reserve(fam.atoms.size());
        for (const auto& [h, w] : fam.atoms) {
            double fe = dot(h.f, e);
            if (pairing_is_zero(fe, h.f, e)) {
                parallel += w;
                continue;
            }
            double t = h.y / fe;
            Vec<double> grad(e.size());
            double c = -t / fe;  // d(y/f(e))/de = -(t/f(e)) f
            for (std::size_t k = 0; k < e.size(); ++k) grad[k] = c * h.f[k];
            items.push_back({t, w, std::move(grad)});
        }
    } else {
        const auto& fam = inst.point_families[fam_idx];
        items.reserve(fam.atoms.size());
        for (const auto& [v, w] : fam.atoms) items.push_back({dot(v, e), w, v});
    }
    EndpointData out;
    double tau = 0.5 - parallel;
    if (!(tau > mass_slack<double>())) return out;  // whole line
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.t < b.t; });
    std::size_t lo_i = items.size(), hi_i = items.size();
    double cum = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        cum += items[i].w;
        if (mass_at_least(cum, tau)) { lo_i = i; break; }
    }
    cum = 0.0;
    for (std::size_t i = items.size(); i-- > 0;) {
        cum += items[i].w;
        if (mass_at_least(cum, tau)) { hi_i = i; break; }
    }
    if (lo_i == items.size() || hi_i == items.size()) return out;
    out.whole = false;
    out.lo = Ext<double>::finite(items[lo_i].t);
    out.hi = Ext<double>::finite(items[hi_i].t);
    out.lo_grad = items[lo_i].grad;
    out.hi_grad = items[hi_i].grad;
    return out;
}

// Gaussian elimination with partial pivoting; overwrites rhs with the
// solution and reports failure on a vanishing pivot.
inline bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-300) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double s = rhs[col];
        for (std::size_t k = col + 1; k < n; ++k) s -= a[col][k] * rhs[k];
        rhs[col] = s / a[col][col];
    }
    return true;
}

// Kink-aware polish. With odd equal-weight families the median intervals are
// single points, so the gap is a nonnegative function that only touches zero
// and the simplex search stalls just above it. Treating the violated interval
// endpoints as smooth residuals t(e) - x and taking damped Gauss-Newton steps
// in (direction chart, x) restores fast local convergence at such minima.
inline double newton_polish(const Instance<double>& inst, Vec<double>& dir,
                            const SweepConfig& cfg) {
    const std::size_t dim = inst.dimension;
    const std::size_t fams = inst.family_count();
    if (dim < 2 || fams == 0) return gap_scalar(inst, dir);
    const std::size_t m = dim - 1;

    Vec<double> e = dir;
    normalize_unit(e);
    double best_gap = gap_scalar(inst, e);
    Vec<double> best_e = e;

    auto endpoints_all = [&](const Vec<double>& at) {
        std::vector<EndpointData> ends;
        ends.reserve(fams);
        for (std::size_t j = 0; j < fams; ++j) ends.push_back(family_endpoints(inst, j, at));
        return ends;
    };
    auto center_of = [](const std::vector<EndpointData>& ends) {
        Ext<double> max_lo = Ext<double>::neg_inf();
        Ext<double> min_hi = Ext<double>::pos_inf();
        for (const auto& d : ends) {
            max_lo = ext_max(max_lo, d.lo);
            min_hi = ext_min(min_hi, d.hi);
        }
        if (max_lo.is_finite() && min_hi.is_finite()) return 0.5 * (max_lo.value + min_hi.value);
        if (max_lo.is_finite()) return max_lo.value;
        if (min_hi.is_finite()) return min_hi.value;
        return 0.0;
    };
    auto merit_of = [](const std::vector<EndpointData>& ends, double x) {
        double phi = 0.0;
        for (const auto& d : ends) {
            if (d.lo.is_finite() && x < d.lo.value) {
                double r = d.lo.value - x;
                phi += r * r;
            } else if (d.hi.is_finite() && x > d.hi.value) {
                double r = d.hi.value - x;
                phi += r * r;
            }
        }
        return phi;
    };

    auto ends = endpoints_all(e);
    double x = center_of(ends);
    double merit = merit_of(ends, x);
    double lambda = 1e-3;
    for (int it = 0; it < 80 && merit > 1e-30; ++it) {
        std::vector<Vec<double>> frame = tangent_frame(e);
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        for (const auto& d : ends) {
            const Vec<double>* grad = nullptr;
            double value = 0.0;
            if (d.lo.is_finite() && x < d.lo.value) {
                grad = &d.lo_grad;
                value = d.lo.value;
            } else if (d.hi.is_finite() && x > d.hi.value) {
                grad = &d.hi_grad;
                value = d.hi.value;
            }
            if (!grad) continue;
            std::vector<double> row(m + 1);
            for (std::size_t i = 0; i < m; ++i) row[i] = dot(*grad, frame[i]);
            row[m] = -1.0;
            rows.push_back(std::move(row));
            rhs.push_back(x - value);  // negated residual value - x
        }
        if (rows.empty()) break;
        std::vector<std::vector<double>> ata(m + 1, std::vector<double>(m + 1, 0.0));
        std::vector<double> atb(m + 1, 0.0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t i = 0; i <= m; ++i) {
                atb[i] += rows[r][i] * rhs[r];
                for (std::size_t k = 0; k <= m; ++k) ata[i][k] += rows[r][i] * rows[r][k];
            }
        bool stepped = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto lhs = ata;
            auto delta = atb;
            for (std::size_t i = 0; i <= m; ++i) lhs[i][i] += lambda * (1.0 + ata[i][i]);
            if (!solve_dense(lhs, delta)) {
                lambda *= 10.0;
                continue;
            }
            double tangent_norm = 0.0;
            for (std::size_t i = 0; i < m; ++i) tangent_norm += delta[i] * delta[i];
            tangent_norm = std::sqrt(tangent_norm);
            if (tangent_norm > 0.5)
                for (double& c : delta) c *= 0.5 / tangent_norm;
            Vec<double> cand = e;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < dim; ++k) cand[k] += delta[i] * frame[i][k];
            normalize_unit(cand);
            auto cand_ends = endpoints_all(cand);
            double cx = x + delta[m];
            double rx = center_of(cand_ends);
            if (merit_of(cand_ends, rx) < merit_of(cand_ends, cx)) cx = rx;
            double cand_merit = merit_of(cand_ends, cx);
            double g = gap_scalar(inst, cand);
            if (g < best_gap) {
                best_gap = g;
                best_e = cand;
            }
            if (cand_merit < merit) {
                e = std::move(cand);
                x = cx;
                ends = std::move(cand_ends);
                merit = cand_merit;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!stepped) break;
        if (best_gap <= cfg.tol * 0.125) break;
    }
    double g = gap_scalar(inst, e);
    if (g < best_gap) {
        best_gap = g;
        best_e = e;
    }
    dir = best_e;
    return best_gap;
}

// Directions orthogonal to dim-1 atom covectors at once. Parallel atoms count
// toward both sides, so median intervals widen at such poles and some
// instances are feasible nowhere else; a grid or simplex search cannot land
// on a measure-zero set, so the candidates are enumerated outright.
inline std::vector<Vec<double>> pole_candidates(const Instance<double>& inst,
                                                std::size_t cap = 20000) {
    std::vector<Vec<double>> out;
    if (inst.kind != InstanceKind::Hyperplane) return out;
    const std::size_t dim = inst.dimension;
    if (dim < 2) return out;

    std::vector<Vec<double>> covs;  // unique covector directions
    for (const auto& fam : inst.hyperplane_families)
        for (const auto& [h, w] : fam.atoms) {
            Vec<double> c = h.f;
            normalize_unit(c);
            for (std::size_t k = 0; k < dim; ++k) {
                if (std::fabs(c[k]) <= 1e-12) continue;
                if (c[k] < 0.0)
                    for (double& x : c) x = -x;
                break;
            }
            bool dup = false;
            for (const auto& prev : covs)
                if (std::fabs(dot(prev, c)) > 1.0 - 1e-12) { dup = true; break; }
            if (!dup) covs.push_back(std::move(c));
        }

    const std::size_t take = dim - 1;
    if (covs.size() < take) return out;
    std::vector<std::size_t> pick(take);
    for (std::size_t i = 0; i < take; ++i) pick[i] = i;
    bool more = true;
    while (more && out.size() < cap) {
        std::vector<Vec<double>> m;
        m.reserve(take);
        for (std::size_t i : pick) m.push_back(covs[i]);
        // reduced row echelon over the tuple; a full-rank tuple leaves a
        // single free column spanning the common kernel
        std::vector<std::pair<std::size_t, std::size_t>> pivots;
        std::vector<bool> is_pivot_col(dim, false);
        std::size_t row = 0;
        for (std::size_t col = 0; col < dim && row < take; ++col) {
            std::size_t best = row;
            for (std::size_t r = row + 1; r < take; ++r)
                if (std::fabs(m[r][col]) > std::fabs(m[best][col])) best = r;
            if (std::fabs(m[best][col]) < 1e-9) continue;
            std::swap(m[best], m[row]);
            for (std::size_t r = 0; r < take; ++r) {
                if (r == row) continue;
                double f = m[r][col] / m[row][col];
                if (f == 0.0) continue;
                for (std::size_t k = 0; k < dim; ++k) m[r][k] -= f * m[row][k];
            }
            pivots.emplace_back(row, col);
            is_pivot_col[col] = true;
            ++row;
        }
        if (row == take) {
            std::size_t free_col = dim;
            for (std::size_t col = 0; col < dim; ++col)
                if (!is_pivot_col[col]) { free_col = col; break; }
            Vec<double> e(dim, 0.0);
            e[free_col] = 1.0;
            for (const auto& [r, c] : pivots) e[c] = -m[r][free_col] / m[r][c];
            normalize_unit(e);
            out.push_back(std::move(e));
        }
        more = false;
        for (std::size_t pos = take; pos-- > 0;) {
            if (pick[pos] + (take - pos) < covs.size()) {
                ++pick[pos];
                for (std::size_t i = pos + 1; i < take; ++i) pick[i] = pick[i - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return out;
}

}  // namespace detail

// Numeric solver for any dimension. Degenerate directions (every family
// concentrated on hyperplanes parallel to e) are handled first because the
// gap functional is unbounded in their neighborhoods; otherwise the best grid
// directions are polished by a tangent-space simplex search and the first
// direction passing the verifier yields a Float certificate.
inline SweepOutcome solve_sweep(const Instance<double>& inst, const SweepConfig& cfg = {}) {
    SweepOutcome outcome;

    auto finish_solution = [&](const Vec<double>& coords, SolveMethod method,
                               double gap_here) -> bool {
        Direction<double> e = Direction<double>::canonical(coords);
        auto intervals = intervals_at(inst, e);
        Ext<double> max_lo = Ext<double>::neg_inf();
        Ext<double> min_hi = Ext<double>::pos_inf();
        for (const auto& iv : intervals) {
            max_lo = ext_max(max_lo, iv.lo);
            min_hi = ext_min(min_hi, iv.hi);
        }
        double x;
        if (max_lo > min_hi) {
            // inverted by at most tol: split the residual interval
            if (!max_lo.is_finite() || !min_hi.is_finite()) return false;
            x = 0.5 * (max_lo.value + min_hi.value);
        } else {
            x = choose_x_in(max_lo, min_hi);
        }
        if (cfg.x_bound) {
            double lo = !max_lo.is_finite() ? -*cfg.x_bound : max_lo.value;
            double hi = !min_hi.is_finite() ? *cfg.x_bound : min_hi.value;
            lo = std::max(lo, -*cfg.x_bound);
            hi = std::min(hi, *cfg.x_bound);
            if (lo > hi + cfg.tol) return false;
            x = std::clamp(x, -*cfg.x_bound, *cfg.x_bound);
        }
        Solution<double> sol;
        if (inst.kind == InstanceKind::Hyperplane) {
            sol.p = HopfPoint<double>{e, x};
            sol.reports = verify_star(inst.hyperplane_families, *sol.p, cfg.eps);
        } else {
            sol.cut = Hyperplane<double>{e.e, x};
            sol.reports = verify_classical(inst.point_families, *sol.cut, cfg.eps);
        }
        if (!all_satisfied(sol.reports)) return false;
        sol.witness = MedianInterval<double>{max_lo, min_hi};
        sol.certificate = Certificate<double>{CertKind::Float, cfg.eps, min_margin(sol.reports)};
        sol.method = method;
        outcome.solution = std::move(sol);
        outcome.best_direction = e.e;
        outcome.best_gap = gap_here;
        return true;
    };

    if (inst.kind == InstanceKind::Hyperplane) {
        auto degenerate = detect_case_ii(inst);
        for (const auto& e : degenerate)
            if (finish_solution(e.e, SolveMethod::Degenerate, -1e300)) return outcome;
    }

    auto grid = detail::direction_grid(inst.dimension, cfg.grid_points, cfg.seed);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        scored.emplace_back(detail::gap_scalar(inst, grid[i]), i);
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    outcome.best_direction = Direction<double>::canonical(grid[scored.front().second]).e;
    outcome.best_gap = scored.front().first;

    // keep the best starts but spread them over distinct basins: a cluster of
    // near-identical grid directions would spend every refinement in one spot
    const std::size_t keep = std::min<std::size_t>(std::max(cfg.starts, 1), scored.size());
    std::vector<std::size_t> starts;
    starts.reserve(keep);
    for (const auto& [val, idx] : scored) {
        if (starts.size() >= keep) break;
        bool fresh = true;
        for (std::size_t chosen : starts)
            if (std::fabs(dot(grid[idx], grid[chosen])) > 0.98) { fresh = false; break; }
        if (fresh) starts.push_back(idx);
    }

    for (std::size_t idx : starts) {
        Vec<double> dir = grid[idx];
        double g = detail::refine_direction(inst, dir, cfg);
        if (g > cfg.tol * 0.125) g = detail::newton_polish(inst, dir, cfg);
        if (g < outcome.best_gap) {
            outcome.best_direction = Direction<double>::canonical(dir).e;
            outcome.best_gap = g;
        }
        if (g <= cfg.tol && finish_solution(dir, SolveMethod::Sweep, g)) return outcome;
    }

    // fallback for feasible sets that only touch zero where atoms go
    // parallel: such directions form a measure-zero set, tested exactly here
    for (const auto& pole : detail::pole_candidates(inst)) {
        double g = detail::gap_scalar(inst, pole);
        if (g < outcome.best_gap) {
            outcome.best_direction = Direction<double>::canonical(pole).e;
            outcome.best_gap = g;
        }
        if (g <= cfg.tol && finish_solution(pole, SolveMethod::Sweep, g)) return outcome;
    }
    return outcome;
}

}  // namespace hamcut

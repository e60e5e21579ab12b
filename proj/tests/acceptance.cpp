// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamcut/gen.hpp"
#include "hamcut/obstruction.hpp"
#include "hamcut/solver.hpp"
#include "hamcut/sweep.hpp"

using namespace hamcut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Instance<Rat> basis_instance(std::size_t dim) {
    std::vector<WeightedFamily<Rat>> fams;
    for (std::size_t j = 0; j < dim; ++j) {
        Vec<Rat> f(dim, Rat(0));
        f[j] = Rat(1);
        fams.push_back(WeightedFamily<Rat>::make({{canonicalize_hyperplane(f, Rat(1)), Rat(1)}}));
    }
    return Instance<Rat>::hyperplanes(dim, std::move(fams));
}

bool feasible_at(const Instance<Rat>& inst, const Direction<Rat>& e) {
    return !(gap(inst, e).g > Ext<Rat>::finite(Rat(0)));
}

// ---------------------------------------------------------------------------

std::string criterion1() {
    auto t0 = Clock::now();

    // planar basis instance: exactly 3 isolated solutions, all verified
    auto sols2 = solve_exact_2d(basis_instance(2));
    if (sols2.size() != 3) return "expected 3 planar solutions, got " + std::to_string(sols2.size());
    std::set<Vec<Rat>> points;
    for (const auto& s : sols2) {
        if (!all_satisfied(s.reports)) return "planar solution fails exact verification";
        if (s.certificate.kind != CertKind::Exact) return "planar certificate is not exact";
        if (s.arc) return "planar solutions should be isolated";
        points.insert(s.p->point());
    }
    std::set<Vec<Rat>> want{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    if (points != want) return "planar solution points differ from the subset-sum oracle";

    // spatial basis instance: of the 13 projective sign patterns exactly the
    // 7 subset indicators are feasible, each verified exactly at x = 1
    auto inst3 = basis_instance(3);
    int feasible = 0, infeasible = 0;
    std::vector<Vec<Rat>> subset_dirs;
    for (int s0 = -1; s0 <= 1; ++s0)
        for (int s1 = -1; s1 <= 1; ++s1)
            for (int s2 = -1; s2 <= 1; ++s2) {
                if (s0 == 0 && s1 == 0 && s2 == 0) continue;
                if (s0 < 0 || (s0 == 0 && (s1 < 0 || (s1 == 0 && s2 < 0))))
                    continue;  // one representative per antipodal pair
                Vec<Rat> e{Rat(s0), Rat(s1), Rat(s2)};
                bool subset = s0 >= 0 && s1 >= 0 && s2 >= 0;
                if (subset) {
                    HopfPoint<Rat> p{Direction<Rat>{e}, Rat(1)};
                    if (!all_satisfied(verify_star(inst3.hyperplane_families, p)))
                        return "subset direction fails exact verification";
                    if (p.point() != e) return "subset witness point is not the indicator vector";
                    subset_dirs.push_back(e);
                    ++feasible;
                } else {
                    if (feasible_at(inst3, Direction<Rat>{e}))
                        return "mixed-sign direction unexpectedly feasible";
                    ++infeasible;
                }
            }
    if (feasible != 7 || infeasible != 6)
        return "sign-pattern census is off: " + std::to_string(feasible) + " feasible";

    // the float sweep lands on one of the 7 verified directions
    SweepConfig cfg;
    cfg.seed = 2;
    auto out = solve_sweep(to_float(inst3), cfg);
    if (!out.solution) return "sweep found no solution on the spatial basis instance";
    const Vec<double>& e = out.solution->p->e.e;
    double best = 0.0;
    for (const auto& d : subset_dirs) {
        double dp = 0.0, nd = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            dp += to_double(d[i]) * e[i];
            nd += to_double(d[i]) * to_double(d[i]);
        }
        best = std::max(best, std::abs(dp) / std::sqrt(nd * dot(e, e)));
    }
    if (best < 1.0 - 1e-6) return "sweep direction is not a subset direction";

    double dt = seconds_since(t0);
    if (dt >= 1.0) return "runtime " + std::to_string(dt) + " s exceeds 1 s";
    return "";
}

std::string criterion2() {
    auto inst = basis_instance(2);
    inst.hyperplane_families.push_back(WeightedFamily<Rat>::make(
        {{canonicalize_hyperplane<Rat>({Rat(1), Rat(1)}, Rat(0)), Rat(1)}}));
    if (!solve_exact_2d(inst).empty()) return "augmented instance should be infeasible";

    // independent exhaustive check: the gap is positive at every event
    // direction and on every open arc between consecutive events
    auto candidates = candidate_directions_2d(inst);
    std::sort(candidates.begin(), candidates.end(),
              [](const Direction<Rat>& a, const Direction<Rat>& b) {
                  return std::atan2(to_double(a.e[1]), to_double(a.e[0])) <
                         std::atan2(to_double(b.e[1]), to_double(b.e[0]));
              });
    if (candidates.size() < 2) return "candidate enumeration collapsed";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (feasible_at(inst, candidates[i])) return "feasible candidate direction exists";
        Vec<Rat> next = i + 1 < candidates.size() ? candidates[i + 1].e
                                                  : negate_coords(candidates[0].e);
        Direction<Rat> mid{add_coords(candidates[i].e, next)};
        if (feasible_at(inst, mid)) return "feasible arc sample exists";
    }
    return "";
}

std::string criterion3() {
    Vec<Rat> f{Rat(1), Rat(0)};
    auto inst = Instance<Rat>::hyperplanes(
        2, {WeightedFamily<Rat>::make({{canonicalize_hyperplane(f, Rat(0)), Rat(1)}}),
            WeightedFamily<Rat>::make({{canonicalize_hyperplane(f, Rat(1)), Rat(1)}})});
    auto sols = solve_exact_2d(inst);
    if (sols.size() != 1) return "expected a single degenerate solution";
    const auto& s = sols[0];
    if (dot(f, s.p->e.e) != Rat(0)) return "solution direction is not in the kernel";
    if (!s.witness.whole_line()) return "x-interval should be unbounded";
    for (long x : {0L, 1L, -1L, 1000000L, -1000000L}) {
        HopfPoint<Rat> p{s.p->e, Rat(x)};
        if (!all_satisfied(verify_star(inst.hyperplane_families, p)))
            return "offset " + std::to_string(x) + " fails verification";
    }
    return "";
}

std::string criterion4() {
    auto t0 = Clock::now();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg;
        cfg.dimension = 2;
        cfg.families = 2;
        cfg.per_family = 1 + std::size_t(seed % 9);
        cfg.seed = seed;
        auto inst = generate_instance(cfg);
        auto sols = solve_exact_2d(inst);
        if (sols.empty()) return "seed " + std::to_string(seed) + " found no planar solution";
        for (const auto& s : sols)
            if (s.certificate.kind != CertKind::Exact || !all_satisfied(s.reports))
                return "seed " + std::to_string(seed) + " produced an unverified solution";
    }
    double planar = seconds_since(t0);
    if (planar >= 30.0) return "planar batch took " + std::to_string(planar) + " s";

    double worst = 0.0, worst_margin = 1.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenConfig cfg;
        cfg.dimension = 3;
        cfg.families = 3;
        cfg.per_family = 5;
        cfg.seed = 1000 + seed;
        auto inst = to_float(generate_instance(cfg));
        auto t1 = Clock::now();
        SweepConfig sweep;
        sweep.seed = seed;
        auto out = solve_sweep(inst, sweep);
        double dt = seconds_since(t1);
        worst = std::max(worst, dt);
        if (!out.solution)
            return "seed " + std::to_string(1000 + seed) + " found no spatial solution (best gap " +
                   std::to_string(out.best_gap) + ")";
        const auto& s = *out.solution;
        if (s.certificate.kind != CertKind::Float || s.certificate.eps != 1e-7)
            return "spatial certificate is not float at eps 1e-7";
        if (!all_satisfied(s.reports)) return "spatial solution fails fenced verification";
        worst_margin = std::min(worst_margin, s.certificate.min_margin);
        if (dt >= 5.0) return "seed " + std::to_string(1000 + seed) + " took " +
                              std::to_string(dt) + " s";
    }
    std::printf("  [4] planar batch %.2fs, spatial worst %.2fs, reported min margin %.3g\n",
                planar, worst, worst_margin);
    return "";
}

std::string criterion5() {
    // 10^4 exact grid directions: two integer fans plus the diagonal seam
    std::vector<Direction<Rat>> grid;
    grid.reserve(10000);
    const long n = 2500;
    for (long k = -(n - 1); k <= n; ++k) grid.push_back(Direction<Rat>::canonical({Rat(n), Rat(k)}));
    for (long k = -(n - 1); k <= n - 1; ++k)
        grid.push_back(Direction<Rat>::canonical({Rat(k), Rat(n)}));
    grid.push_back(Direction<Rat>::canonical({Rat(1), Rat(-1)}));
    std::set<Vec<Rat>> unique;
    for (const auto& d : grid) unique.insert(d.e);
    if (unique.size() != 10000) return "grid has " + std::to_string(unique.size()) + " directions";

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenConfig cfg;
        cfg.dimension = 2;
        cfg.families = 2;
        cfg.per_family = 1 + std::size_t(seed % 4);
        cfg.coord_range = 4;
        cfg.seed = 500 + seed;
        auto inst = generate_instance(cfg);
        auto sols = solve_exact_2d(inst);
        for (const auto& d : grid) {
            if (!feasible_at(inst, d)) continue;
            bool covered = false;
            for (const auto& s : sols)
                if (solution_covers(s, d)) { covered = true; break; }
            if (!covered)
                return "seed " + std::to_string(500 + seed) +
                       ": grid-feasible direction not covered by any enumerated solution";
        }
    }
    return "";
}

std::string criterion6() {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.dimension = 2;
        cfg.families = 2;
        cfg.per_family = 1 + std::size_t(seed % 6);
        cfg.kind = InstanceKind::Classical;
        cfg.seed = 2000 + seed;
        auto inst = generate_instance(cfg);
        auto sols = solve_classical_exact_2d(inst);
        if (sols.empty()) return "seed " + std::to_string(2000 + seed) + " found no cut";
        for (const auto& s : sols)
            if (s.certificate.kind != CertKind::Exact || !all_satisfied(s.reports))
                return "seed " + std::to_string(2000 + seed) + " produced an unverified cut";
    }

    // the symmetric cross admits the vertical-normal cut at offset 1
    auto a = PointFamily<Rat>::make({{{Rat(0), Rat(0)}, Rat(1)}, {{Rat(2), Rat(0)}, Rat(1)}});
    auto b = PointFamily<Rat>::make({{{Rat(1), Rat(1)}, Rat(1)}, {{Rat(1), Rat(-1)}, Rat(1)}});
    auto cross = Instance<Rat>::points(2, {a, b});
    auto sols = solve_classical_exact_2d(cross);
    Direction<Rat> vertical_normal = Direction<Rat>::canonical({Rat(1), Rat(0)});
    bool covered = false;
    for (const auto& s : sols) covered = covered || solution_covers(s, vertical_normal);
    if (!covered) return "cross: covector (1,0) is not covered";
    if (choose_x(intervals_at(cross, vertical_normal)) != Rat(1))
        return "cross: offset at (1,0) is not forced to 1";
    auto reports = verify_classical(cross.point_families,
                                    Hyperplane<Rat>{vertical_normal.e, Rat(1)});
    if (!all_satisfied(reports)) return "cross: cut (f=(1,0), y=1) fails verification";
    return "";
}

std::string criterion7() {
    auto t0 = Clock::now();
    for (std::size_t trunc = 0; trunc <= 4; ++trunc)
        for (std::size_t m = 0; m <= 4; ++m)
            for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
                std::vector<TruncatedClass> comps;
                comps.push_back(TruncatedClass::one(trunc));
                for (std::size_t i = 1; i <= m + 1; ++i)
                    comps.push_back((mask >> (i - 1)) & 1u ? TruncatedClass::monomial(i, trunc)
                                                           : TruncatedClass::zero(trunc));
                auto wE = TotalSWClass::make(std::move(comps), trunc);
                for (std::size_t l = 0; l <= 8; ++l)
                    if (!(euler_power_reduce(wE, m, l, trunc) ==
                          euler_power_closed_form(wE, m, l, trunc)))
                        return "reduction and closed form disagree";
            }

    auto flat = TotalSWClass::make({TruncatedClass::one(0)}, 0);
    for (std::size_t m = 0; m <= 12; ++m)
        for (std::size_t l = 0; l <= 12; ++l)
            if (euler_vanishes(flat, m, l, 0) != (l > m))
                return "point-base vanishing differs from l > m";

    double dt = seconds_since(t0);
    if (dt >= 10.0) return "runtime " + std::to_string(dt) + " s exceeds 10 s";
    return "";
}

// --- criterion 8: randomized property suites, >= 1000 cases each -----------

Rat rand_rat(std::uint64_t& state, long range = 8) {
    return Rat(uniform_long(state, -range, range)) / Rat(uniform_long(state, 1, range));
}

Vec<Rat> rand_nonzero(std::uint64_t& state, std::size_t dim, long range = 6) {
    Vec<Rat> v(dim);
    do {
        for (auto& c : v) c = Rat(uniform_long(state, -range, range));
    } while (vec_is_zero(v));
    return v;
}

WeightedFamily<Rat> rand_family(std::uint64_t& state, std::size_t dim, int atoms) {
    std::vector<std::pair<Hyperplane<Rat>, Rat>> raw;
    for (int i = 0; i < atoms; ++i)
        raw.emplace_back(canonicalize_hyperplane(rand_nonzero(state, dim), rand_rat(state)),
                         Rat(uniform_long(state, 1, 4)));
    return WeightedFamily<Rat>::make(std::move(raw));
}

std::string criterion8() {
    std::uint64_t state = 0xacce97a9ce5eedULL;

    // antipodal symmetry of the gap, hyperplane and classical modes
    for (int i = 0; i < 1000; ++i) {
        std::size_t dim = 2 + std::size_t(i % 2);
        Instance<Rat> inst;
        if (i % 3 == 2) {
            GenConfig cfg;
            cfg.dimension = dim;
            cfg.families = 2;
            cfg.per_family = 1 + std::size_t(i % 4);
            cfg.kind = InstanceKind::Classical;
            cfg.seed = 7000 + std::uint64_t(i);
            inst = generate_instance(cfg);
        } else {
            std::vector<WeightedFamily<Rat>> fams;
            for (int j = 0; j < 2; ++j) fams.push_back(rand_family(state, dim, 1 + i % 4));
            inst = Instance<Rat>::hyperplanes(dim, std::move(fams));
        }
        Vec<Rat> e = rand_nonzero(state, dim);
        if (!(gap(inst, Direction<Rat>{e}).g == gap(inst, Direction<Rat>{negate_coords(e)}).g))
            return "gap changed under antipodal flip (case " + std::to_string(i) + ")";
    }

    // star predicates under representative rescaling: any nonzero hyperplane
    // scale and any positive point scale leave both predicates unchanged; the
    // antipodal point flip (e, x) -> (-e, -x) swaps them, so the bisection
    // condition itself is invariant
    for (int i = 0; i < 1000; ++i) {
        std::size_t dim = 2 + std::size_t(i % 3);
        Hyperplane<Rat> h{rand_nonzero(state, dim), rand_rat(state)};
        HopfPoint<Rat> p{Direction<Rat>{rand_nonzero(state, dim)}, rand_rat(state)};
        Rat t, s;
        do { t = rand_rat(state); } while (sgn(t) == 0);
        do { s = rand_rat(state); } while (!(sgn(s) > 0));
        Vec<Rat> tf(dim), se(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            tf[k] = t * h.f[k];
            se[k] = s * p.e.e[k];
        }
        Hyperplane<Rat> ht{tf, t * h.y};
        HopfPoint<Rat> ps{Direction<Rat>{se}, p.x / s};
        HopfPoint<Rat> pa{Direction<Rat>{negate_coords(p.e.e)}, -p.x};
        if (star_upper(h, p) != star_upper(ht, p) || star_upper(h, p) != star_upper(h, ps))
            return "upper star predicate changed under an admissible rescale";
        if (star_lower(h, p) != star_lower(ht, p) || star_lower(h, p) != star_lower(h, ps))
            return "lower star predicate changed under an admissible rescale";
        if (star_upper(h, pa) != star_lower(h, p) || star_lower(h, pa) != star_upper(h, p))
            return "antipodal flip should swap the star predicates";
    }

    // consequence at the family level: the flip swaps the side masses and
    // preserves satisfaction
    for (int i = 0; i < 1000; ++i) {
        auto fam = rand_family(state, 2, 1 + i % 4);
        HopfPoint<Rat> p{Direction<Rat>{rand_nonzero(state, 2)}, rand_rat(state)};
        HopfPoint<Rat> pa{Direction<Rat>{negate_coords(p.e.e)}, -p.x};
        auto r = side_masses(fam, p);
        auto ra = side_masses(fam, pa);
        if (r.upper_mass != ra.lower_mass || r.lower_mass != ra.upper_mass ||
            r.satisfied != ra.satisfied)
            return "bisection condition is not antipodally invariant";
    }

    // tail monotonicity in the offset
    for (int i = 0; i < 1000; ++i) {
        auto fam = rand_family(state, 2, 1 + i % 5);
        Direction<Rat> e{rand_nonzero(state, 2)};
        Rat x1 = rand_rat(state);
        Rat x2 = x1 + Rat(uniform_long(state, 0, 9)) / Rat(4);
        auto r1 = side_masses(fam, HopfPoint<Rat>{e, x1});
        auto r2 = side_masses(fam, HopfPoint<Rat>{e, x2});
        if (r1.upper_mass < r2.upper_mass || r1.lower_mass > r2.lower_mass)
            return "tail masses are not monotone in x";
    }

    // exact partition of mass
    for (int i = 0; i < 1000; ++i) {
        auto fam = rand_family(state, 3, 1 + i % 5);
        HopfPoint<Rat> p{Direction<Rat>{rand_nonzero(state, 3)}, rand_rat(state)};
        auto r = side_masses(fam, p);
        if (r.upper_mass + r.lower_mass - r.fence_mass != Rat(1))
            return "upper + lower - fence != 1";
    }

    // median interval membership is exactly the satisfaction predicate
    for (int i = 0; i < 1000; ++i) {
        auto fam = rand_family(state, 2, 1 + i % 6);
        Direction<Rat> e{rand_nonzero(state, 2)};
        Rat x = rand_rat(state, 12);
        if (median_interval(fam, e).contains(x) != side_masses(fam, HopfPoint<Rat>{e, x}).satisfied)
            return "median interval disagrees with satisfaction";
    }
    return "";
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Row> rows = {
        {"basis-instance solution census (2-D exact, 3-D sweep)", criterion1},
        {"extra zero-offset family is infeasible, exhaustively", criterion2},
        {"parallel-pencil degeneracy has an unbounded offset line", criterion3},
        {"existence sweep: 200 planar exact + 20 spatial float", criterion4},
        {"exact enumeration matches a 10^4-direction grid oracle", criterion5},
        {"classical mode: 100 random + symmetric cross", criterion6},
        {"obstruction calculator: two-method agreement + point base", criterion7},
        {"property suites (5 x 1000 randomized cases)", criterion8},
    };

    int failures = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto t0 = Clock::now();
        std::string err;
        try {
            err = rows[i].run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        if (err.empty()) {
            std::printf("criterion %zu: PASS (%.2fs) %s\n", i + 1, dt, rows[i].name);
        } else {
            std::printf("criterion %zu: FAIL (%.2fs) %s: %s\n", i + 1, dt, rows[i].name,
                        err.c_str());
            ++failures;
        }
    }
    std::printf("criteria passed: %zu/%zu\n", rows.size() - std::size_t(failures), rows.size());
    return failures == 0 ? 0 : 1;
}

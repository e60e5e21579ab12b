#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamcut/gen.hpp"
#include "hamcut/io.hpp"
#include "hamcut/obstruction.hpp"
#include "hamcut/plot.hpp"

namespace {

using namespace hamcut;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInfeasible = 2;

void print_reports_exact(const std::vector<SideReport<Rat>>& reports) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::printf("  family %zu: upper %s  lower %s  fence %s  %s\n", i,
                    rat_to_string(r.upper_mass).c_str(), rat_to_string(r.lower_mass).c_str(),
                    rat_to_string(r.fence_mass).c_str(),
                    r.satisfied ? "satisfied" : "NOT satisfied");
    }
}

void print_reports_float(const std::vector<SideReport<double>>& reports) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::printf("  family %zu: upper %.9f  lower %.9f  fence %.9f  %s\n", i, r.upper_mass,
                    r.lower_mass, r.fence_mass, r.satisfied ? "satisfied" : "NOT satisfied");
    }
}

std::string joined(const Vec<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s;
}

std::string joined(const Vec<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += number_string(v[i]);
    }
    return s;
}

int run_solve(const std::string& input, const std::string& output, const std::string& mode,
              const std::string& method, SweepConfig cfg) {
    Instance<Rat> inst = load_instance(input);
    if (mode == "hyperplane" && inst.kind != InstanceKind::Hyperplane)
        throw Error("--mode hyperplane given, but the instance has point families");
    if (mode == "classical" && inst.kind != InstanceKind::Classical)
        throw Error("--mode classical given, but the instance has hyperplane families");

    bool use_exact = method == "exact2d" || (method == "auto" && inst.dimension == 2);
    if (method == "exact2d" && inst.dimension != 2)
        throw WrongDimension("--method exact2d requires a 2-dimensional instance");

    if (use_exact) {
        std::vector<Solution<Rat>> sols = inst.kind == InstanceKind::Hyperplane
                                              ? solve_exact_2d(inst)
                                              : solve_classical_exact_2d(inst);
        std::string doc = solutions_to_json(inst, sols);
        if (!output.empty()) write_text_file(output, doc);
        if (sols.empty()) {
            std::printf("infeasible: no direction satisfies every family (exact search)\n");
            return kInfeasible;
        }
        std::printf("%zu solution(s), exact certificates\n", sols.size());
        for (const auto& s : sols) {
            if (s.p)
                std::printf("  e = (%s)  x = %s%s\n", joined(s.p->e.e).c_str(),
                            rat_to_string(s.p->x).c_str(), s.arc ? "  [arc]" : "");
            else
                std::printf("  f = (%s)  y = %s%s\n", joined(s.cut->f).c_str(),
                            rat_to_string(s.cut->y).c_str(), s.arc ? "  [arc]" : "");
        }
        print_reports_exact(sols.front().reports);
        return kOk;
    }

    Instance<double> finst = to_float(inst);
    SweepOutcome out = solve_sweep(finst, cfg);
    std::string doc = sweep_to_json(finst, out, cfg);
    if (!output.empty()) write_text_file(output, doc);
    if (!out.solution) {
        std::printf("best effort: gap %.6e at direction (%s), no certificate at tol %.1e\n",
                    out.best_gap, joined(out.best_direction).c_str(), cfg.tol);
        return kInfeasible;
    }
    const Solution<double>& s = *out.solution;
    if (s.p)
        std::printf("solution: e = (%s)  x = %s  [%s]\n", joined(s.p->e.e).c_str(),
                    number_string(s.p->x).c_str(),
                    s.method == SolveMethod::Degenerate ? "degenerate" : "sweep");
    else
        std::printf("solution: f = (%s)  y = %s  [%s]\n", joined(s.cut->f).c_str(),
                    number_string(s.cut->y).c_str(),
                    s.method == SolveMethod::Degenerate ? "degenerate" : "sweep");
    std::printf("float certificate: eps %.3e, min margin %.9f\n", s.certificate.eps,
                s.certificate.min_margin);
    print_reports_float(s.reports);
    return kOk;
}

int run_verify(const std::string& instance_path, const std::string& solution_path,
               double eps_flag, bool eps_given) {
    Instance<Rat> inst = load_instance(instance_path);
    SolutionView view = load_solution(solution_path);
    if (!view.feasible) throw Error("solution file reports infeasible; nothing to verify");
    if (view.kind != inst.kind)
        throw WrongMode("instance and solution files disagree on the family kind");
    if (view.direction.size() != inst.dimension)
        throw DimensionMismatch(inst.dimension, view.direction.size());

    Rat eps(0);
    if (eps_given) eps = Rat(eps_flag);
    else if (view.eps) eps = *view.eps;

    std::vector<SideReport<Rat>> reports;
    if (inst.kind == InstanceKind::Hyperplane) {
        HopfPoint<Rat> p = HopfPoint<Rat>::canonical(view.direction, view.value);
        reports = verify_star(inst.hyperplane_families, p, eps);
    } else {
        Hyperplane<Rat> h = canonicalize_hyperplane(view.direction, view.value);
        reports = verify_classical(inst.point_families, h, eps);
    }
    print_reports_exact(reports);
    Rat margin = min_margin(reports);
    std::printf("min margin: %s (eps %s)\n", rat_to_string(margin).c_str(),
                rat_to_string(eps).c_str());
    if (!all_satisfied(reports)) {
        std::printf("NOT satisfied\n");
        return kInfeasible;
    }
    std::printf("all families satisfied\n");
    return kOk;
}

int run_gen(const GenConfig& cfg, const std::string& output) {
    Instance<Rat> inst = generate_instance(cfg);
    std::string doc = instance_to_json(inst);
    if (output.empty()) std::fputs(doc.c_str(), stdout);
    else write_text_file(output, doc);
    if (!inst.guaranteed())
        std::fprintf(stderr, "note: %zu families in dimension %zu, existence not guaranteed\n",
                     inst.family_count(), inst.dimension);
    return kOk;
}

int run_obstruction(std::size_t m, std::size_t l, std::size_t trunc, const std::string& we) {
    std::vector<TruncatedClass> comps;
    std::size_t pos = 0;
    while (pos <= we.size()) {
        std::size_t next = we.find(',', pos);
        std::string tok = we.substr(pos, next == std::string::npos ? next : next - pos);
        comps.push_back(parse_class(tok, trunc));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    TotalSWClass wE = TotalSWClass::make(std::move(comps), trunc);
    TotalSWClass comp = invert_total_class(wE, trunc);

    std::printf("base ring: F2[a]/(a^%zu)\n", trunc + 1);
    std::printf("rank m+1 = %zu, power l = %zu\n", m + 1, l);
    for (std::size_t k = 0; k <= trunc; ++k)
        std::printf("w_%zu(-E) = %s\n", k, class_to_string(comp.component(k)).c_str());
    ProjectiveClass reduced = euler_power_reduce(wE, m, l, trunc);
    ProjectiveClass closed = euler_power_closed_form(wE, m, l, trunc);
    std::printf("e(H)^%zu = %s\n", l, projective_to_string(reduced).c_str());
    if (!(reduced == closed))
        std::printf("WARNING: closed form disagrees: %s\n",
                    projective_to_string(closed).c_str());
    std::printf("euler class vanishes: %s\n", reduced.is_zero() ? "yes" : "no");
    bool applicable = fw_applicable(wE, m, l, trunc);
    if (l >= m)
        std::printf("criterion applicable: %s (w_%zu(-E) = %s)\n", applicable ? "yes" : "no",
                    l - m, class_to_string(comp.component(l - m)).c_str());
    else
        std::printf("criterion applicable: no (l < m)\n");
    return kOk;
}

int run_plot(const std::string& instance_path, const std::string& solution_path,
             const std::string& out) {
    Instance<Rat> inst = load_instance(instance_path);
    SolutionView view;
    const SolutionView* view_ptr = nullptr;
    if (!solution_path.empty()) {
        view = load_solution(solution_path);
        if (view.kind != inst.kind)
            throw WrongMode("instance and solution files disagree on the family kind");
        view_ptr = &view;
    }
    std::string svg = render_svg(inst, view_ptr);
    write_text_file(out, svg);
    std::printf("wrote %s\n", out.c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hamcut: bisection solver, verifier, and obstruction calculator"};
    app.require_subcommand(1);

    // solve
    std::string in_path, out_path, mode = "auto", method = "auto";
    SweepConfig cfg;
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("input", in_path, "instance file")->required();
    solve->add_option("output", out_path, "solution file to write");
    solve->add_option("--mode", mode, "hyperplane|classical (default: from the file)")
        ->check(CLI::IsMember({"auto", "hyperplane", "classical"}));
    solve->add_option("--method", method, "auto|exact2d|sweep")
        ->check(CLI::IsMember({"auto", "exact2d", "sweep"}));
    solve->add_option("--tol", cfg.tol, "gap acceptance tolerance (sweep)");
    solve->add_option("--eps", cfg.eps, "verification fence (sweep)");
    solve->add_option("--seed", cfg.seed, "sweep grid seed");
    solve->add_option("--grid", cfg.grid_points, "sweep grid size");
    solve->add_option("--starts", cfg.starts, "refinement starts");
    solve->add_option("--iters", cfg.max_iters, "simplex iterations per round");

    // verify
    std::string v_inst, v_sol;
    double v_eps = 0.0;
    auto* verify = app.add_subcommand("verify", "re-check a solution file");
    verify->add_option("instance", v_inst, "instance file")->required();
    verify->add_option("solution", v_sol, "solution file")->required();
    auto* eps_opt = verify->add_option("--eps", v_eps, "verification fence (default: from the certificate)");

    // gen
    GenConfig gen_cfg;
    std::string g_out, g_kind = "hyperplane";
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--dim", gen_cfg.dimension, "dimension");
    gen->add_option("--families", gen_cfg.families, "number of families");
    gen->add_option("--per-family", gen_cfg.per_family, "elements per family");
    gen->add_option("--seed", gen_cfg.seed, "random seed");
    gen->add_option("--coord-range", gen_cfg.coord_range, "coordinate range");
    gen->add_option("--kind", g_kind, "hyperplane|points")
        ->check(CLI::IsMember({"hyperplane", "points"}));
    gen->add_option("-o,--out", g_out, "output file (default: stdout)");

    // obstruction
    std::size_t o_m = 1, o_l = 1, o_trunc = 0;
    std::string o_we = "1";
    auto* obstruction = app.add_subcommand("obstruction", "evaluate the topological criterion");
    obstruction->add_option("--m", o_m, "bundle rank minus one")->required();
    obstruction->add_option("--l", o_l, "euler class power")->required();
    obstruction->add_option("--trunc", o_trunc, "base ring truncation N");
    obstruction->add_option("--wE", o_we, "total class components by degree, comma separated");

    // plot
    std::string p_inst, p_sol, p_out = "plot.svg";
    auto* plot = app.add_subcommand("plot", "render a 2-D instance to SVG");
    plot->add_option("instance", p_inst, "instance file")->required();
    plot->add_option("solution", p_sol, "solution file (optional)");
    plot->add_option("--out", p_out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (solve->parsed()) return run_solve(in_path, out_path, mode, method, cfg);
        if (verify->parsed()) return run_verify(v_inst, v_sol, v_eps, eps_opt->count() > 0);
        if (gen->parsed()) {
            gen_cfg.kind =
                g_kind == "hyperplane" ? InstanceKind::Hyperplane : InstanceKind::Classical;
            return run_gen(gen_cfg, g_out);
        }
        if (obstruction->parsed()) return run_obstruction(o_m, o_l, o_trunc, o_we);
        if (plot->parsed()) return run_plot(p_inst, p_sol, p_out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInputError;
    }
    return kInputError;
}

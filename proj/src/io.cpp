#include "hamcut/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hamcut {

using ordered_json = nlohmann::ordered_json;

namespace {

Rat number_from_json(const ordered_json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
        if (j.is_number_unsigned()) return Rat(static_cast<unsigned long>(j.get<std::uint64_t>()));
        if (j.is_number_float()) return Rat(j.get<double>());  // exact dyadic read
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a number or numeric string");
}

Vec<Rat> vector_from_json(const ordered_json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    if (j.size() != dim)
        throw ParseError(where + ": has length " + std::to_string(j.size()) + ", expected " +
                         std::to_string(dim));
    Vec<Rat> v;
    v.reserve(dim);
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(number_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

ordered_json vector_to_json(const Vec<Rat>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v) arr.push_back(number_string(c));
    return arr;
}

ordered_json vector_to_json(const Vec<double>& v) {
    ordered_json arr = ordered_json::array();
    for (double c : v) arr.push_back(number_string(c));
    return arr;
}

template <typename S>
ordered_json ext_to_json(const Ext<S>& e) {
    if (e.is_neg_inf()) return "-inf";
    if (e.is_pos_inf()) return "inf";
    return number_string(e.value);
}

template <typename S>
ordered_json reports_to_json(const std::vector<SideReport<S>>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json rep;
        rep["upper_mass"] = number_string(r.upper_mass);
        rep["lower_mass"] = number_string(r.lower_mass);
        rep["fence_mass"] = number_string(r.fence_mass);
        rep["satisfied"] = r.satisfied;
        arr.push_back(std::move(rep));
    }
    return arr;
}

const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::Exact2D: return "exact2d";
        case SolveMethod::Sweep: return "sweep";
        default: return "degenerate";
    }
}

template <typename S>
ordered_json certificate_to_json(const Certificate<S>& c) {
    ordered_json j;
    j["kind"] = c.kind == CertKind::Exact ? "exact" : "float";
    j["eps"] = number_string(c.eps);
    j["min_margin"] = number_string(c.min_margin);
    return j;
}

template <typename S>
ordered_json solution_to_json(InstanceKind kind, const Solution<S>& sol) {
    ordered_json j;
    if (kind == InstanceKind::Hyperplane) {
        j["e"] = vector_to_json(sol.p->e.e);
        j["x"] = number_string(sol.p->x);
        j["v"] = vector_to_json(sol.p->point());
    } else {
        j["f"] = vector_to_json(sol.cut->f);
        j["y"] = number_string(sol.cut->y);
    }
    j["x_interval"] = ordered_json{{"lo", ext_to_json(sol.witness.lo)},
                                   {"hi", ext_to_json(sol.witness.hi)}};
    j["per_family"] = reports_to_json(sol.reports);
    j["method"] = method_name(sol.method);
    j["certificate"] = certificate_to_json(sol.certificate);
    if (sol.arc) {
        ordered_json arc;
        arc["full_circle"] = sol.arc->full_circle;
        if (!sol.arc->full_circle) {
            arc["lo"] = vector_to_json(sol.arc->lo.e);
            arc["hi"] = vector_to_json(sol.arc->hi.e);
            arc["lo_closed"] = sol.arc->lo_closed;
            arc["hi_closed"] = sol.arc->hi_closed;
        }
        j["arc"] = std::move(arc);
    }
    return j;
}

}  // namespace

std::string number_string(const Rat& v) { return rat_to_string(v); }

std::string number_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Instance<Rat> parse_instance_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file: top level must be an object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw ParseError("instance file: missing integer field 'dimension'");
    long dim_raw = doc["dimension"].get<long>();
    if (dim_raw < 1) throw ParseError("instance file: dimension must be >= 1");
    std::size_t dim = static_cast<std::size_t>(dim_raw);

    std::string kind = doc.value("kind", std::string("hyperplane"));
    if (kind != "hyperplane" && kind != "points")
        throw ParseError("instance file: kind must be 'hyperplane' or 'points'");

    if (!doc.contains("families") || !doc["families"].is_array() || doc["families"].empty())
        throw ParseError("instance file: needs a non-empty 'families' array");

    if (kind == "hyperplane") {
        std::vector<WeightedFamily<Rat>> families;
        for (std::size_t fi = 0; fi < doc["families"].size(); ++fi) {
            const auto& fam = doc["families"][fi];
            std::string where = "family " + std::to_string(fi);
            std::string name = fam.value("name", "F" + std::to_string(fi));
            if (!fam.contains("elements") || !fam["elements"].is_array() ||
                fam["elements"].empty())
                throw ParseError(where + ": needs a non-empty 'elements' array");
            std::vector<std::pair<Hyperplane<Rat>, Rat>> atoms;
            for (std::size_t ei = 0; ei < fam["elements"].size(); ++ei) {
                const auto& el = fam["elements"][ei];
                std::string ew = where + " element " + std::to_string(ei);
                if (!el.contains("f")) throw ParseError(ew + ": missing covector 'f'");
                Vec<Rat> f = vector_from_json(el["f"], dim, ew + ": 'f'");
                if (vec_is_zero(f)) throw ParseError(ew + ": covector 'f' is zero");
                if (!el.contains("y")) throw ParseError(ew + ": missing offset 'y'");
                Rat y = number_from_json(el["y"], ew + ": 'y'");
                Rat w(1);
                if (el.contains("w")) w = number_from_json(el["w"], ew + ": 'w'");
                if (!(w > 0)) throw ParseError(ew + ": weight must be positive");
                atoms.emplace_back(canonicalize_hyperplane(std::move(f), std::move(y)),
                                   std::move(w));
            }
            families.push_back(WeightedFamily<Rat>::make(std::move(atoms), name));
        }
        return Instance<Rat>::hyperplanes(dim, std::move(families));
    }

    std::vector<PointFamily<Rat>> families;
    for (std::size_t fi = 0; fi < doc["families"].size(); ++fi) {
        const auto& fam = doc["families"][fi];
        std::string where = "family " + std::to_string(fi);
        std::string name = fam.value("name", "F" + std::to_string(fi));
        if (!fam.contains("elements") || !fam["elements"].is_array() || fam["elements"].empty())
            throw ParseError(where + ": needs a non-empty 'elements' array");
        std::vector<std::pair<Vec<Rat>, Rat>> atoms;
        for (std::size_t ei = 0; ei < fam["elements"].size(); ++ei) {
            const auto& el = fam["elements"][ei];
            std::string ew = where + " element " + std::to_string(ei);
            if (!el.contains("v")) throw ParseError(ew + ": missing point 'v'");
            Vec<Rat> v = vector_from_json(el["v"], dim, ew + ": 'v'");
            Rat w(1);
            if (el.contains("w")) w = number_from_json(el["w"], ew + ": 'w'");
            if (!(w > 0)) throw ParseError(ew + ": weight must be positive");
            atoms.emplace_back(std::move(v), std::move(w));
        }
        families.push_back(PointFamily<Rat>::make(std::move(atoms), name));
    }
    return Instance<Rat>::points(dim, std::move(families));
}

std::string instance_to_json(const Instance<Rat>& inst) {
    ordered_json doc;
    doc["dimension"] = inst.dimension;
    doc["kind"] = inst.kind == InstanceKind::Hyperplane ? "hyperplane" : "points";
    doc["guaranteed"] = inst.guaranteed();
    ordered_json fams = ordered_json::array();
    if (inst.kind == InstanceKind::Hyperplane) {
        for (const auto& fam : inst.hyperplane_families) {
            ordered_json jf;
            jf["name"] = fam.label;
            ordered_json els = ordered_json::array();
            for (const auto& [h, w] : fam.atoms) {
                ordered_json el;
                el["f"] = vector_to_json(h.f);
                el["y"] = number_string(h.y);
                el["w"] = number_string(w);
                els.push_back(std::move(el));
            }
            jf["elements"] = std::move(els);
            fams.push_back(std::move(jf));
        }
    } else {
        for (const auto& fam : inst.point_families) {
            ordered_json jf;
            jf["name"] = fam.label;
            ordered_json els = ordered_json::array();
            for (const auto& [v, w] : fam.atoms) {
                ordered_json el;
                el["v"] = vector_to_json(v);
                el["w"] = number_string(w);
                els.push_back(std::move(el));
            }
            jf["elements"] = std::move(els);
            fams.push_back(std::move(jf));
        }
    }
    doc["families"] = std::move(fams);
    return doc.dump(2) + "\n";
}

std::string solutions_to_json(const Instance<Rat>& inst,
                              const std::vector<Solution<Rat>>& sols) {
    ordered_json doc;
    doc["kind"] = inst.kind == InstanceKind::Hyperplane ? "hyperplane" : "points";
    doc["dimension"] = inst.dimension;
    doc["feasible"] = !sols.empty();
    doc["count"] = sols.size();
    if (!sols.empty()) {
        ordered_json first = solution_to_json(inst.kind, sols.front());
        for (auto& [key, value] : first.items()) doc[key] = value;
        ordered_json all = ordered_json::array();
        for (const auto& s : sols) all.push_back(solution_to_json(inst.kind, s));
        doc["solutions"] = std::move(all);
    }
    return doc.dump(2) + "\n";
}

std::string sweep_to_json(const Instance<double>& inst, const SweepOutcome& outcome,
                          const SweepConfig& cfg) {
    ordered_json doc;
    doc["kind"] = inst.kind == InstanceKind::Hyperplane ? "hyperplane" : "points";
    doc["dimension"] = inst.dimension;
    doc["feasible"] = outcome.solution.has_value();
    doc["count"] = outcome.solution ? 1 : 0;
    if (outcome.solution) {
        ordered_json body = solution_to_json(inst.kind, *outcome.solution);
        for (auto& [key, value] : body.items()) doc[key] = value;
        ordered_json all = ordered_json::array();
        all.push_back(std::move(body));
        doc["solutions"] = std::move(all);
    } else {
        doc["best_direction"] = vector_to_json(outcome.best_direction);
        doc["best_gap"] = number_string(outcome.best_gap);
        doc["tol"] = number_string(cfg.tol);
    }
    return doc.dump(2) + "\n";
}

SolutionView parse_solution_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("solution file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("solution file: top level must be an object");
    SolutionView view;
    std::string kind = doc.value("kind", std::string("hyperplane"));
    if (kind != "hyperplane" && kind != "points")
        throw ParseError("solution file: kind must be 'hyperplane' or 'points'");
    view.kind = kind == "hyperplane" ? InstanceKind::Hyperplane : InstanceKind::Classical;
    view.feasible = doc.value("feasible", true);
    if (!view.feasible) return view;

    const char* dir_key = view.kind == InstanceKind::Hyperplane ? "e" : "f";
    const char* val_key = view.kind == InstanceKind::Hyperplane ? "x" : "y";
    if (!doc.contains(dir_key))
        throw ParseError(std::string("solution file: missing '") + dir_key + "'");
    const auto& dir = doc[dir_key];
    if (!dir.is_array() || dir.empty())
        throw ParseError(std::string("solution file: '") + dir_key +
                         "' must be a non-empty array");
    view.direction = vector_from_json(dir, dir.size(), std::string("'") + dir_key + "'");
    if (vec_is_zero(view.direction))
        throw ParseError(std::string("solution file: '") + dir_key + "' is zero");
    if (!doc.contains(val_key))
        throw ParseError(std::string("solution file: missing '") + val_key + "'");
    view.value = number_from_json(doc[val_key], std::string("'") + val_key + "'");
    if (doc.contains("certificate") && doc["certificate"].is_object() &&
        doc["certificate"].contains("eps"))
        view.eps = number_from_json(doc["certificate"]["eps"], "certificate eps");
    return view;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

Instance<Rat> load_instance(const std::string& path) {
    return parse_instance_json(read_text_file(path));
}

void save_instance(const Instance<Rat>& inst, const std::string& path) {
    write_text_file(path, instance_to_json(inst));
}

SolutionView load_solution(const std::string& path) {
    return parse_solution_json(read_text_file(path));
}

}  // namespace hamcut

#pragma once

#include <cstddef>
#include <vector>

#include "hamcut/measure.hpp"

namespace hamcut {

enum class InstanceKind { Hyperplane, Classical };

// A solver input: weighted hyperplane families or weighted point families.
// Instances with more than `dimension` families are accepted; `guaranteed()`
// records whether the existence bound (families <= dimension) holds.
template <typename S>
struct Instance {
    std::size_t dimension = 0;
    InstanceKind kind = InstanceKind::Hyperplane;
    std::vector<WeightedFamily<S>> hyperplane_families;
    std::vector<PointFamily<S>> point_families;

    static Instance hyperplanes(std::size_t dim, std::vector<WeightedFamily<S>> families) {
        Instance inst;
        inst.dimension = dim;
        inst.kind = InstanceKind::Hyperplane;
        inst.hyperplane_families = std::move(families);
        for (const auto& fam : inst.hyperplane_families)
            if (fam.dimension() != dim) throw DimensionMismatch(dim, fam.dimension());
        return inst;
    }

    static Instance points(std::size_t dim, std::vector<PointFamily<S>> families) {
        Instance inst;
        inst.dimension = dim;
        inst.kind = InstanceKind::Classical;
        inst.point_families = std::move(families);
        for (const auto& fam : inst.point_families)
            if (fam.dimension() != dim) throw DimensionMismatch(dim, fam.dimension());
        return inst;
    }

    std::size_t family_count() const {
        return kind == InstanceKind::Hyperplane ? hyperplane_families.size()
                                                : point_families.size();
    }

    // A common bisecting solution always exists when the number of families
    // does not exceed the dimension.
    bool guaranteed() const { return family_count() <= dimension; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.dimension == b.dimension && a.kind == b.kind &&
               a.hyperplane_families == b.hyperplane_families &&
               a.point_families == b.point_families;
    }
};

inline double rat_vec_entry_to_double(const Rat& v) { return v.get_d(); }

inline Instance<double> to_float(const Instance<Rat>& inst) {
    Instance<double> out;
    out.dimension = inst.dimension;
    out.kind = inst.kind;
    for (const auto& fam : inst.hyperplane_families) {
        std::vector<std::pair<Hyperplane<double>, double>> atoms;
        atoms.reserve(fam.atoms.size());
        for (const auto& [h, w] : fam.atoms) {
            Vec<double> f(h.f.size());
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = h.f[i].get_d();
            atoms.emplace_back(canonicalize_hyperplane<double>(std::move(f), h.y.get_d()),
                               w.get_d());
        }
        out.hyperplane_families.push_back(
            WeightedFamily<double>::make(std::move(atoms), fam.label));
    }
    for (const auto& fam : inst.point_families) {
        std::vector<std::pair<Vec<double>, double>> atoms;
        atoms.reserve(fam.atoms.size());
        for (const auto& [v, w] : fam.atoms) {
            Vec<double> p(v.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = v[i].get_d();
            atoms.emplace_back(std::move(p), w.get_d());
        }
        out.point_families.push_back(PointFamily<double>::make(std::move(atoms), fam.label));
    }
    return out;
}

}  // namespace hamcut

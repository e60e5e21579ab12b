#include "hamcut/gen.hpp"

#include <string>

#include "hamcut/rng.hpp"

namespace hamcut {

Instance<Rat> generate_instance(const GenConfig& cfg) {
    if (cfg.families < 1 || cfg.per_family < 1)
        throw Error("generator needs at least one family and one element per family");
    if (cfg.dimension < 1) throw Error("generator needs dimension >= 1");
    std::uint64_t state = cfg.seed ^ 0x9d2c5680a8e3f1adULL;
    auto coord = [&] { return Rat(uniform_long(state, -cfg.coord_range, cfg.coord_range)); };

    if (cfg.kind == InstanceKind::Hyperplane) {
        std::vector<WeightedFamily<Rat>> families;
        families.reserve(cfg.families);
        for (std::size_t fi = 0; fi < cfg.families; ++fi) {
            std::vector<std::pair<Hyperplane<Rat>, Rat>> atoms;
            atoms.reserve(cfg.per_family);
            for (std::size_t ai = 0; ai < cfg.per_family; ++ai) {
                Vec<Rat> f(cfg.dimension);
                do {
                    for (auto& c : f) c = coord();
                } while (vec_is_zero(f));
                atoms.emplace_back(canonicalize_hyperplane(std::move(f), coord()), Rat(1));
            }
            families.push_back(
                WeightedFamily<Rat>::make(std::move(atoms), "F" + std::to_string(fi)));
        }
        return Instance<Rat>::hyperplanes(cfg.dimension, std::move(families));
    }

    std::vector<PointFamily<Rat>> families;
    families.reserve(cfg.families);
    for (std::size_t fi = 0; fi < cfg.families; ++fi) {
        std::vector<std::pair<Vec<Rat>, Rat>> atoms;
        atoms.reserve(cfg.per_family);
        for (std::size_t ai = 0; ai < cfg.per_family; ++ai) {
            Vec<Rat> v(cfg.dimension);
            for (auto& c : v) c = coord();
            atoms.emplace_back(std::move(v), Rat(1));
        }
        families.push_back(PointFamily<Rat>::make(std::move(atoms), "F" + std::to_string(fi)));
    }
    return Instance<Rat>::points(cfg.dimension, std::move(families));
}

}  // namespace hamcut

#pragma once

#include <cstdint>

#include "hamcut/instance.hpp"

namespace hamcut {

struct GenConfig {
    std::size_t dimension = 2;
    std::size_t families = 2;
    std::size_t per_family = 3;
    std::uint64_t seed = 0;
    long coord_range = 9;  // coordinates drawn from [-range, range]
    InstanceKind kind = InstanceKind::Hyperplane;
};

// Seeded random instance with integer data: covectors are rerolled until
// nonzero, offsets and point coordinates are unconstrained, weights are 1.
Instance<Rat> generate_instance(const GenConfig& cfg);

}  // namespace hamcut

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamcut/measure.hpp"
#include "hamcut/rng.hpp"

using namespace hamcut;

namespace {

Rat random_rat(std::uint64_t& state, long range = 6) {
    long num = uniform_long(state, -range, range);
    long den = uniform_long(state, 1, range);
    return Rat(num) / Rat(den);
}

Vec<Rat> random_covector(std::uint64_t& state, std::size_t dim) {
    Vec<Rat> f(dim);
    do {
        for (auto& c : f) c = Rat(uniform_long(state, -5, 5));
    } while (vec_is_zero(f));
    return f;
}

WeightedFamily<Rat> random_family(std::uint64_t& state, std::size_t dim, int atoms) {
    std::vector<std::pair<Hyperplane<Rat>, Rat>> raw;
    for (int i = 0; i < atoms; ++i) {
        auto f = random_covector(state, dim);
        raw.emplace_back(canonicalize_hyperplane(f, random_rat(state)),
                         Rat(uniform_long(state, 1, 4)));
    }
    return WeightedFamily<Rat>::make(std::move(raw));
}

Direction<Rat> random_direction(std::uint64_t& state, std::size_t dim) {
    return Direction<Rat>::canonical(random_covector(state, dim));
}

WeightedFamily<Rat> line_family(std::initializer_list<std::pair<long, long>> y_w) {
    // atoms on the covector (1, 0) with given offsets and weights
    std::vector<std::pair<Hyperplane<Rat>, Rat>> raw;
    for (auto [y, w] : y_w)
        raw.emplace_back(canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(y)), Rat(w));
    return WeightedFamily<Rat>::make(std::move(raw));
}

}  // namespace

TEST_CASE("family construction merges and normalizes") {
    // scaled copies of one hyperplane merge into a single atom
    auto fam = WeightedFamily<Rat>::make({
        {canonicalize_hyperplane<Rat>({Rat(2), Rat(0)}, Rat(4)), Rat(1)},
        {canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(2)), Rat(3)},
    });
    REQUIRE(fam.atoms.size() == 1);
    CHECK(fam.atoms[0].first == canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(2)));
    CHECK(fam.atoms[0].second == Rat(1));

    auto two = WeightedFamily<Rat>::make({
        {canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(0)), Rat(1)},
        {canonicalize_hyperplane<Rat>({Rat(0), Rat(1)}, Rat(0)), Rat(3)},
    });
    REQUIRE(two.atoms.size() == 2);
    Rat total = two.atoms[0].second + two.atoms[1].second;
    CHECK(total == Rat(1));

    CHECK_THROWS_AS(WeightedFamily<Rat>::make({}), Error);
    CHECK_THROWS_AS(WeightedFamily<Rat>::make({
                        {canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(0)), Rat(0)},
                    }),
                    Error);
}

TEST_CASE("point family construction") {
    auto fam = PointFamily<Rat>::make({
        {{Rat(1), Rat(1)}, Rat(2)},
        {{Rat(1), Rat(1)}, Rat(2)},
        {{Rat(0), Rat(0)}, Rat(4)},
    });
    REQUIRE(fam.atoms.size() == 2);
    for (const auto& [v, w] : fam.atoms) CHECK(w == Rat(1) / Rat(2));
}

TEST_CASE("median interval of a single atom is a point") {
    auto fam = line_family({{3, 1}});
    auto iv = median_interval(fam, Direction<Rat>::canonical({Rat(1), Rat(0)}));
    CHECK(iv.lo == Ext<Rat>::finite(Rat(3)));
    CHECK(iv.hi == Ext<Rat>::finite(Rat(3)));
    CHECK(iv.contains(Rat(3)));
    CHECK_FALSE(iv.contains(Rat(2)));

    // the same family along a skew direction rescales the parameter
    auto skew = median_interval(fam, Direction<Rat>::canonical({Rat(2), Rat(1)}));
    CHECK(skew.lo == Ext<Rat>::finite(Rat(3) / Rat(2)));
}

TEST_CASE("median interval of a weighted three-atom family") {
    auto fam = line_family({{0, 1}, {1, 1}, {2, 2}});
    auto e = Direction<Rat>::canonical({Rat(1), Rat(0)});
    auto iv = median_interval(fam, e);
    CHECK(iv.lo == Ext<Rat>::finite(Rat(1)));
    CHECK(iv.hi == Ext<Rat>::finite(Rat(2)));

    // interval membership agrees with the mass check
    for (long x2 = -2; x2 <= 6; ++x2) {
        Rat x = Rat(x2) / Rat(2);
        HopfPoint<Rat> p{e, x};
        CHECK(side_masses(fam, p).satisfied == iv.contains(x));
    }
}

TEST_CASE("half parallel mass makes the whole line feasible") {
    auto fam = WeightedFamily<Rat>::make({
        {canonicalize_hyperplane<Rat>({Rat(0), Rat(1)}, Rat(0)), Rat(1)},
        {canonicalize_hyperplane<Rat>({Rat(1), Rat(0)}, Rat(0)), Rat(1)},
    });
    auto e = Direction<Rat>::canonical({Rat(1), Rat(0)});
    CHECK(parallel_mass(fam, e) == Rat(1) / Rat(2));
    auto iv = median_interval(fam, e);
    CHECK(iv.whole_line());
    HopfPoint<Rat> p{e, Rat(5)};
    CHECK(side_masses(fam, p).satisfied);
}

TEST_CASE("fence widens float verification") {
    WeightedFamily<double> fam;
    fam.atoms = {{Hyperplane<double>{{1.0, 0.0}, 1.0}, 1.0}};
    HopfPoint<double> p{Direction<double>{{1.0, 0.0}}, 1.0 + 1e-13};

    auto strict = side_masses_fenced(fam, p, 0.0);
    CHECK_FALSE(strict.satisfied);
    CHECK(strict.upper_mass == 0.0);

    auto fenced = side_masses_fenced(fam, p, 1e-7);
    CHECK(fenced.satisfied);
    CHECK(fenced.fence_mass == 1.0);
    CHECK(fenced.upper_pessimistic == 0.0);
    CHECK(fenced.lower_pessimistic == 0.0);
}

TEST_CASE("classical side masses at the symmetric cross") {
    auto a = PointFamily<Rat>::make({{{Rat(0), Rat(0)}, Rat(1)}, {{Rat(2), Rat(0)}, Rat(1)}}, "A");
    auto b = PointFamily<Rat>::make({{{Rat(1), Rat(1)}, Rat(1)}, {{Rat(1), Rat(-1)}, Rat(1)}}, "B");
    Hyperplane<Rat> cut{{Rat(1), Rat(0)}, Rat(1)};
    auto reports = verify_classical<Rat>({a, b}, cut);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].upper_mass == Rat(1) / Rat(2));
    CHECK(reports[0].lower_mass == Rat(1) / Rat(2));
    CHECK(reports[1].upper_mass == Rat(1));
    CHECK(reports[1].lower_mass == Rat(1));
    CHECK(reports[1].fence_mass == Rat(1));
    CHECK(all_satisfied(reports));
    CHECK(min_margin(reports) == Rat(0));
}

TEST_CASE("masses partition: upper + lower - fence = 1") {
    std::uint64_t state = 101;
    for (int i = 0; i < 500; ++i) {
        auto fam = random_family(state, 2, 1 + int(i % 5));
        auto e = random_direction(state, 2);
        HopfPoint<Rat> p{e, random_rat(state)};
        auto rep = side_masses(fam, p);
        CHECK(rep.upper_mass + rep.lower_mass - rep.fence_mass == Rat(1));
        CHECK(rep.upper_pessimistic + rep.lower_pessimistic + rep.fence_mass == Rat(1));
    }
}

TEST_CASE("upper mass is non-increasing in x") {
    std::uint64_t state = 202;
    for (int i = 0; i < 500; ++i) {
        auto fam = random_family(state, 2, 1 + int(i % 4));
        auto e = random_direction(state, 2);
        Rat x1 = random_rat(state);
        Rat x2 = x1 + Rat(uniform_long(state, 0, 5)) / Rat(3);
        auto r1 = side_masses(fam, HopfPoint<Rat>{e, x1});
        auto r2 = side_masses(fam, HopfPoint<Rat>{e, x2});
        CHECK(r1.upper_mass >= r2.upper_mass);
        CHECK(r1.lower_mass <= r2.lower_mass);
    }
}

TEST_CASE("median interval membership equals satisfaction") {
    std::uint64_t state = 303;
    for (int i = 0; i < 500; ++i) {
        auto fam = random_family(state, 3, 1 + int(i % 5));
        auto e = random_direction(state, 3);
        auto iv = median_interval(fam, e);
        Rat x = random_rat(state);
        CHECK(iv.contains(x) == side_masses(fam, HopfPoint<Rat>{e, x}).satisfied);
    }
}

TEST_CASE("interval endpoints are incidence parameters") {
    std::uint64_t state = 404;
    for (int i = 0; i < 200; ++i) {
        auto fam = random_family(state, 2, 2 + int(i % 4));
        auto e = random_direction(state, 2);
        auto iv = median_interval(fam, e);
        if (!iv.lo.is_finite()) continue;
        auto params = incidence_params(fam, e);
        bool lo_hit = false, hi_hit = false;
        for (const auto& [t, w] : params.ts) {
            if (Ext<Rat>::finite(t) == iv.lo) lo_hit = true;
            if (Ext<Rat>::finite(t) == iv.hi) hi_hit = true;
        }
        CHECK(lo_hit);
        CHECK(hi_hit);
        CHECK(iv.lo <= iv.hi);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    auto fam = line_family({{0, 1}});
    CHECK_THROWS_AS(median_interval(fam, Direction<Rat>::canonical({Rat(1), Rat(0), Rat(0)})),
                    DimensionMismatch);
    auto pts = PointFamily<Rat>::make({{{Rat(0), Rat(0)}, Rat(1)}});
    CHECK_THROWS_AS(point_params(pts, Vec<Rat>{Rat(0), Rat(0)}), ZeroCovector);
    CHECK_THROWS_AS(point_params(pts, Vec<Rat>{Rat(1)}), DimensionMismatch);
}

#include "ayt/admissible.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ayt;

TEST_CASE("admissible: examples")
{
    CHECK(is_admissible(DegreeSet::of({0, 3, 4})).admissible);
    CHECK(is_admissible(DegreeSet::of({0, 1, 2, 3, 4})).admissible);
    CHECK(is_admissible(DegreeSet::of({0})).admissible);
    auto rep = is_admissible(DegreeSet::of({0, 9, 16, 25, 144, 169}));
    CHECK(!rep.admissible);
    REQUIRE(rep.witness.has_value());
    auto [i, j, k] = *rep.witness;
    auto s = DegreeSet::of({0, 9, 16, 25, 144, 169});
    CHECK(s.contains(i + j + k));
    CHECK(s.contains(i + j) != s.contains(j + k));
    CHECK(i == 9);
    CHECK(j == 16);
    CHECK(k == 144);
    auto nz = is_admissible(DegreeSet::of({1, 2}));
    CHECK(!nz.admissible);
    CHECK(nz.missing_zero);
}

TEST_CASE("phi family")
{
    CHECK(phi_family(2, 3, std::nullopt).elements == std::vector<uint64_t>{0, 2, 4, 6});
    CHECK(phi_family(1, 0, std::nullopt).elements == std::vector<uint64_t>{0});
    auto inf = phi_family(1, std::nullopt, 5);
    CHECK(inf.elements == std::vector<uint64_t>{0, 1, 2, 3, 4, 5});
    CHECK(inf.cap.has_value());
    for (uint64_t n = 1; n <= 4; ++n)
        for (uint64_t m = 1; m <= 6; ++m)
            CHECK(is_admissible(phi_family(n, m, std::nullopt)).admissible);
    CHECK_THROWS(phi_family(0, 3, std::nullopt));
}

TEST_CASE("set operations")
{
    auto r1 = set_ops(DegreeSet::of({0, 1, 2}), std::nullopt, SetOp::Scale, 3);
    CHECK(r1.result.elements == std::vector<uint64_t>{0, 3, 6});
    CHECK(r1.admissible_report.admissible);
    auto r2 = set_ops(DegreeSet::of({0, 3, 4}), DegreeSet::of({0, 4, 8}), SetOp::Intersect);
    CHECK(r2.result.elements == std::vector<uint64_t>{0, 4});
    CHECK(r2.admissible_report.admissible);
    auto r3 = set_ops(DegreeSet::of({0, 3, 4, 5, 12, 13}), std::nullopt, SetOp::Power, 2);
    CHECK(!r3.admissible_report.admissible);
    CHECK_THROWS(set_ops(DegreeSet::of({0, 1}), std::nullopt, SetOp::Power, 0));
}

/* exhaustive closure properties over subsets of {0..8} */
static std::vector<DegreeSet> all_subsets_with_zero()
{
    std::vector<DegreeSet> out;
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<uint64_t> xs{0};
        for (unsigned b = 0; b < 8; ++b)
            if (mask & (1u << b))
                xs.push_back(b + 1);
        out.push_back(DegreeSet::of(xs));
    }
    return out;
}

TEST_CASE("closure: intersections and scalings of admissible sets are admissible")
{
    auto sets = all_subsets_with_zero();
    std::vector<DegreeSet> adm;
    for (auto& s : sets)
        if (is_admissible(s).admissible)
            adm.push_back(s);
    for (auto& s : adm) {
        for (uint64_t m = 0; m <= 4; ++m)
            CHECK(set_ops(s, std::nullopt, SetOp::Scale, m).admissible_report.admissible);
        for (auto& t : adm)
            CHECK(set_ops(s, t, SetOp::Intersect).admissible_report.admissible);
    }
}

TEST_CASE("closure: cubes of any zero-containing set are admissible")
{
    for (auto& s : all_subsets_with_zero())
        CHECK(set_ops(s, std::nullopt, SetOp::Power, 3).admissible_report.admissible);
}

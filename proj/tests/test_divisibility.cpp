#include "chernum/divisibility.hpp"

#include "chernum/catalog.hpp"

#include <doctest.h>

using namespace chernum;

TEST_SUITE("divisibility") {

TEST_CASE("gcd verdicts for the model families") {
    for (int n = 1; n <= 8; ++n) {
        DivisibilityVerdict v = gcd_chern_numbers(cpn_record(n, Convention::tangent));
        CHECK(v.d == n + 1);
        CHECK(v.chi == n + 1);
        CHECK(v.extremely_divisible);
        CHECK(!v.witnessed);
    }

    DivisibilityVerdict theta3 = gcd_chern_numbers(theta_record(3, Convention::tangent));
    CHECK(theta3.d == 24);
    CHECK(theta3.chi == -24);
    CHECK(theta3.extremely_divisible);
}

TEST_CASE("witnessed verdicts on partial records") {
    ChernRecord permutohedral;
    permutohedral.name = "X^3_Pi";
    permutohedral.dimension = 3;
    permutohedral.convention = Convention::tangent;
    permutohedral.numbers.emplace(Partition{3}, 20);
    permutohedral.numbers.emplace(Partition{1, 1, 1}, 24);
    permutohedral.complete = false;

    DivisibilityVerdict v = gcd_chern_numbers(permutohedral);
    CHECK(!v.extremely_divisible);
    CHECK(v.witnessed);
    CHECK(v.chi == 24);
    CHECK(v.d == 4);

    // partial data with every entry divisible is inconclusive
    ChernRecord inconclusive = permutohedral;
    inconclusive.numbers[Partition{3}] = 48;
    CHECK_THROWS_AS(gcd_chern_numbers(inconclusive), std::invalid_argument);

    ChernRecord no_chi = permutohedral;
    no_chi.numbers.erase(Partition{1, 1, 1});
    CHECK_THROWS_AS(gcd_chern_numbers(no_chi), std::invalid_argument);
}

TEST_CASE("surface verdicts") {
    DivisibilityVerdict k3 = surface_verdict({"K3", 0, 24});
    CHECK(k3.d == 24);
    CHECK(k3.extremely_divisible);

    DivisibilityVerdict theta2 = surface_verdict({"Theta^2", 6, 6});
    CHECK(theta2.extremely_divisible);
    CHECK(chern_slope({"Theta^2", 6, 6}).slope == 1);

    CHECK(surface_verdict({"Enriques", 0, 12}).extremely_divisible);
    CHECK_THROWS_AS(surface_verdict({"bad", 1, 0}), std::invalid_argument);
}

TEST_CASE("del Pezzo scan") {
    auto scan = del_pezzo_scan();
    REQUIRE(scan.size() == 9);
    for (const auto& [d, v] : scan)
        CHECK(v.extremely_divisible == (d == 6 || d == 8 || d == 9));
    CHECK(del_pezzo_surface(9).c1sq == 9);
    CHECK(del_pezzo_surface(9).c2 == 3);
    CHECK(scan.at(7).d == 1); // gcd(7, 5)
}

TEST_CASE("toric scan") {
    auto scan = toric_surface_scan(12);
    REQUIRE(scan.size() == 10);
    for (const auto& [n, v] : scan)
        CHECK(v.extremely_divisible == (n == 3 || n == 4 || n == 6 || n == 12));
    CHECK(toric_surface(6).c1sq == 6);
    CHECK(toric_surface(5).c1sq == 7);
    for (int n = 3; n <= 12; ++n) CHECK(surface_todd(toric_surface(n)) == 1);
}

TEST_CASE("hypersurface scan") {
    auto scan = hypersurface_scan(6);
    for (const auto& [d, v] : scan)
        CHECK(v.extremely_divisible == (d == 1 || d == 2 || d == 4));
    SurfaceRecord v4 = hypersurface_surface(4);
    CHECK(v4.c1sq == 0);
    CHECK(v4.c2 == 24);
    SurfaceRecord v2 = hypersurface_surface(2);
    CHECK(v2.c1sq == 8);
    CHECK(v2.c2 == 4);
    SurfaceRecord v3 = hypersurface_surface(3);
    CHECK(v3.c1sq == 3);
    CHECK(v3.c2 == 9);
}

TEST_CASE("signature, Todd genus, and slope") {
    CHECK(surface_signature({"CP^2", 9, 3}) == 1);
    CHECK(surface_signature({"K3", 0, 24}) == -16);
    CHECK(surface_signature({"Theta^2", 6, 6}) == -2);

    CHECK(surface_todd({"K3", 0, 24}) == 2);
    CHECK(surface_todd({"CP^2", 9, 3}) == 1);

    SlopeResult extremal = chern_slope({"ball quotient", 75, 25});
    CHECK(extremal.slope == 3);
    CHECK(extremal.bmy_ok);
    CHECK(chern_slope({"K3", 0, 24}).slope == 0);
    CHECK(!chern_slope({"over", 76, 25}).bmy_ok);
    CHECK_THROWS_AS(chern_slope({"bad", 1, 0}), std::invalid_argument);

    // c1^2 - 2 chi - 3 tau = 0 identically
    for (int c1sq = -5; c1sq <= 5; ++c1sq)
        for (int c2 = 1; c2 <= 5; ++c2) {
            SurfaceRecord s{"s", c1sq, c2};
            CHECK(Rational(s.c1sq) - 2 * Rational(s.c2) - 3 * surface_signature(s) == 0);
        }
}

TEST_CASE("proportional pairs") {
    auto mu = proportionality_check(surface_to_record({"K3", 0, 24}),
                                    surface_to_record({"Enriques", 0, 12}));
    REQUIRE(mu.has_value());
    CHECK(*mu == 2);

    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto ratio = proportionality_check(theta_power_record(n, k, Convention::tangent),
                                               theta_record(n, Convention::tangent));
            REQUIRE(ratio.has_value());
            CHECK(*ratio == Rational(int_pow(Int(k), n + 1)));
        }

    auto self = proportionality_check(cpn_record(2, Convention::tangent),
                                      cpn_record(2, Convention::tangent));
    CHECK(*self == 1);

    auto none = proportionality_check(cpn_record(3, Convention::tangent),
                                      theta_record(3, Convention::tangent));
    CHECK(!none.has_value());

    // zero against nonzero forces mu = 0; nonzero against zero has no ratio
    ChernRecord zero = surface_to_record({"zero", 0, 0});
    ChernRecord k3 = surface_to_record({"K3", 0, 24});
    auto forced = proportionality_check(zero, k3);
    REQUIRE(forced.has_value());
    CHECK(*forced == 0);
    CHECK(!proportionality_check(k3, zero).has_value());

    CHECK_THROWS_AS(proportionality_check(cpn_record(2, Convention::tangent),
                                          cpn_record(3, Convention::tangent)),
                    std::invalid_argument);
}

TEST_CASE("builtin catalog") {
    Catalog catalog = builtin_catalog();
    CHECK(catalog.version == 1);
    CHECK(!catalog.surfaces.empty());
    CHECK(!catalog.notes.empty());

    bool saw_f3 = false, saw_pi = false, saw_quintic = false;
    for (const CatalogRecord& r : catalog.records) {
        DivisibilityVerdict v = gcd_chern_numbers(r.record);
        if (r.record.name.find("F_3") != std::string::npos) {
            saw_f3 = true;
            CHECK(r.record.numbers.at(Partition{3}) == -6);
            CHECK(r.record.numbers.at(Partition{2, 1}) == 6);
            CHECK(r.record.numbers.at(Partition{1, 1, 1}) == 6);
            CHECK(v.extremely_divisible);
            CHECK(v.d == 6);
        }
        if (r.record.name.find("X^3_Pi") != std::string::npos) {
            saw_pi = true;
            CHECK(!v.extremely_divisible);
            CHECK(v.witnessed);
        }
        if (r.record.name.find("quintic") != std::string::npos) {
            saw_quintic = true;
            CHECK(v.extremely_divisible);
            CHECK(v.chi == -200);
        }
    }
    CHECK(saw_f3);
    CHECK(saw_pi);
    CHECK(saw_quintic);

    for (const CatalogSurface& s : catalog.surfaces)
        CHECK(is_integral(surface_signature(s.surface)));
}

} // TEST_SUITE

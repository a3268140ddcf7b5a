#include "chernum/verify.hpp"

#include "chernum/catalog.hpp"
#include "chernum/chern.hpp"
#include "chernum/cobordism.hpp"
#include "chernum/divisibility.hpp"
#include "chernum/inversion.hpp"
#include "chernum/polytopes.hpp"
#include "chernum/symmetric.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace chernum {

namespace {

// Pascal-triangle binomials, independent of the multiplicative formula.
std::vector<std::vector<Int>> pascal_triangle(int rows) {
    std::vector<std::vector<Int>> t(static_cast<size_t>(rows) + 1);
    for (int i = 0; i <= rows; ++i) {
        t[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                t[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return t;
}

// Catalan numbers by the convolution recurrence.
std::vector<Int> catalan_numbers(int max_n) {
    std::vector<Int> c(static_cast<size_t>(max_n) + 1);
    c[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Int acc = 0;
        for (int i = 0; i < n; ++i) acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
        c[static_cast<size_t>(n)] = acc;
    }
    return c;
}

// Partition counts by the pentagonal-number recurrence.
std::vector<Int> partition_numbers(int max_n) {
    std::vector<Int> p(static_cast<size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Int term = 0;
            if (g1 <= n) term += p[static_cast<size_t>(n - g1)];
            if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
            if (k % 2 == 0) acc -= term;
            else acc += term;
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

struct Runner {
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.name = name;
        try {
            std::string detail;
            r.passed = body(detail);
            r.detail = detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string range_note(int bound) { return "n <= " + std::to_string(bound); }

} // namespace

std::vector<CheckResult> run_verification(int max_n, bool fast_suite) {
    if (max_n < 1) throw std::invalid_argument("run_verification: need max_n >= 1");
    const int big = fast_suite ? std::min(max_n, 6) : max_n;
    const int mid = std::min(big, 8);
    Runner run;

    run.check("partition-count", [&](std::string& detail) {
        auto oracle = partition_numbers(std::min(max_n, 12));
        for (int n = 0; n <= std::min(max_n, 12); ++n)
            if (Int(partitions_of(n).size()) != oracle[static_cast<size_t>(n)]) return false;
        detail = "reverse-lex enumeration count matches pentagonal recurrence, n <= " +
                 std::to_string(std::min(max_n, 12));
        return true;
    });

    run.check("lagrange-two-routes", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            if (lagrange_polynomial(n, LagrangeRoute::recursive).polynomial !=
                lagrange_polynomial(n, LagrangeRoute::direct_formula).polynomial)
                return false;
        }
        detail = "compositional inverse vs direct coefficient formula, " + range_note(big);
        return true;
    });

    run.check("multinv-two-routes", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            if (mult_inversion_polynomial(n, MultInvRoute::recursive).polynomial !=
                mult_inversion_polynomial(n, MultInvRoute::determinant).polynomial)
                return false;
        }
        detail = "reciprocal series vs Hessenberg determinant, " + range_note(big);
        return true;
    });

    run.check("lagrange-composition-roundtrip", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n) {
            SeriesPolyZ f = universal_lagrange_series(n, n + 1);
            SeriesPolyZ g = f.comp_inverse();
            if (!(g.compose(f) == SeriesPolyZ::identity(n + 1))) return false;
            if (!(f.compose(g) == SeriesPolyZ::identity(n + 1))) return false;
        }
        detail = "g(f(x)) = f(g(x)) = x for the universal series, " + range_note(mid);
        return true;
    });

    run.check("multinv-product-roundtrip", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n) {
            SeriesPolyZ u = universal_unit_series(n, n);
            if (!(u * u.recip() == SeriesPolyZ::unit(n))) return false;
        }
        detail = "(1 + sum t_k x^k) times its reciprocal is 1, " + range_note(mid);
        return true;
    });

    run.check("normalization-anchors", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            if (lagrange(n).coeff(Partition::single(n)) != -1) return false;
            if (mult_inversion(n).coeff(Partition::single(n)) != -1) return false;
        }
        detail = "coefficient of t_n is -1 in both L_n and M_n, " + range_note(big);
        return true;
    });

    run.check("theorem-normal-gf", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            PolyZ pipeline = universal_unit_series(n, n).pow(-(n + 1)).coeff(n);
            if (pipeline != lagrange(n) * Int(n + 1)) return false;
        }
        detail = "[x^n](1 + sum t_k x^k)^{-(n+1)} = (n+1) L_n, " + range_note(big);
        return true;
    });

    run.check("theorem-theta-gf", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            PolyZ pipeline = universal_unit_series(n, n).recip().coeff(n) * factorial(n + 1);
            if (pipeline != mult_inversion(n) * factorial(n + 1)) return false;
        }
        detail = "(n+1)! [x^n] recip = (n+1)! M_n, " + range_note(big);
        return true;
    });

    run.check("lagrange-formula-specialized", [&](std::string& detail) {
        std::mt19937 rng(20240803);
        std::uniform_int_distribution<int> dist(-3, 3);
        for (int n = 1; n <= big; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Int> a(static_cast<size_t>(n));
                for (auto& v : a) v = dist(rng);
                SeriesZ f(n + 1);
                f.set_coeff(1, 1);
                for (int k = 1; k <= n; ++k) f.set_coeff(k + 1, a[static_cast<size_t>(k - 1)]);
                Int b_n = f.comp_inverse().coeff(n + 1);
                SeriesZ u = SeriesZ::unit(n);
                for (int k = 1; k <= n; ++k) u.set_coeff(k, a[static_cast<size_t>(k - 1)]);
                if (Int(n + 1) * b_n != u.pow(-(n + 1)).coeff(n)) return false;
            }
        }
        detail = "(n+1) b_n = [x^n](x/f)^{n+1} on random integer series, " + range_note(big);
        return true;
    });

    run.check("catalan-top-chern", [&](std::string& detail) {
        auto cat = catalan_numbers(big);
        auto pascal = pascal_triangle(2 * big);
        for (int n = 1; n <= big; ++n) {
            Int top = cpn_normal_gf(n).coeff(Partition::ones(n));
            Int expected = pascal[static_cast<size_t>(2 * n)][static_cast<size_t>(n)];
            if (n % 2 == 1) expected = -expected;
            if (top != expected) return false;
            if (lagrange(n).coeff(Partition::ones(n)) !=
                (n % 2 == 1 ? -cat[static_cast<size_t>(n)] : cat[static_cast<size_t>(n)]))
                return false;
        }
        detail = "top coefficient vs Pascal triangle and Catalan recurrence, " + range_note(big);
        return true;
    });

    run.check("bell-identity", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n) {
            PolyZ gf = cpn_tangent_gf(n); // internally checked against Bell substitution
            if (gf.coeff(Partition::ones(n)) != n + 1) return false;
        }
        detail = "tangent gf equals shifted Bell polynomial; chi = n+1, " + range_note(mid);
        return true;
    });

    run.check("bell-gcd", [&](std::string& detail) {
        const int bound = std::min(max_n, 12);
        for (int n = 1; n <= bound; ++n)
            for (int k = 1; k <= n; ++k)
                if (bell_gcd(n, k) != divide_exact(Int(k), int_gcd(Int(n), Int(k)))) return false;
        detail = "gcd of Bell coefficients is k/gcd(n,k), 1 <= k <= n <= " + std::to_string(bound);
        return true;
    });

    run.check("divisibility-gcd", [&](std::string& detail) {
        for (int n = 1; n <= big; ++n) {
            if (gcd_coefficients(cpn_tangent_gf(n)) != n + 1) return false;
            if (gcd_coefficients(cpn_normal_gf(n)) != n + 1) return false;
        }
        for (int n = 1; n <= mid; ++n)
            if (gcd_coefficients(theta_tangent_gf(n)) != factorial(n + 1)) return false;
        detail = "gcd(CP^n gfs) = n+1, gcd(Theta gf) = (n+1)!, " + range_note(big);
        return true;
    });

    run.check("duality", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n)
            if (!duality_check(n)) return false;
        detail = "C(tau) C(nu) = 1 as computed series, " + range_note(mid);
        return true;
    });

    run.check("face-counts", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n) {
            if (!match_coefficients(dissection_census(n), lagrange(n))) return false;
            if (!match_coefficients(ordered_partition_census(n), hat_mult_inversion(n)))
                return false;
        }
        detail = "dissections match L_n, ordered set partitions match hat M_n, " + range_note(mid);
        return true;
    });

    run.check("face-counts-cross-routes", [&](std::string& detail) {
        for (int n = 1; n <= mid; ++n)
            if (dissection_census_enumerated(n).counts != dissection_census_counted(n).counts)
                return false;
        for (int n = 1; n <= std::min(mid, 7); ++n)
            if (ordered_partition_census(n).counts !=
                ordered_partition_census_enumerated(n).counts)
                return false;
        for (int n = 1; n <= mid; ++n) {
            Int total = 0;
            for (const auto& [p, c] : ordered_partition_census(n).counts) total += c;
            if (total != fubini_number(n)) return false;
        }
        detail = "explicit enumeration vs counting DP vs Fubini totals, " + range_note(mid);
        return true;
    });

    run.check("cobordism-roundtrip", [&](std::string& detail) {
        const int bound = std::min(max_n, 10);
        SeriesTheta beta = theta_exponential(bound);
        SeriesTheta alpha = beta.comp_inverse();
        if (!(alpha.compose(beta) == SeriesTheta::identity(bound))) return false;
        if (!(beta.compose(alpha) == SeriesTheta::identity(bound))) return false;
        if (!cobordism_consistency_check(mid)) return false;
        detail = "alpha o beta = id through order " + std::to_string(bound) +
                 "; Mischenko entries match CP^n decompositions, " + range_note(mid);
        return true;
    });

    run.check("theta-power-scaling", [&](std::string& detail) {
        for (int n = 1; n <= std::min(big, 4); ++n) {
            for (int k = 1; k <= 3; ++k) {
                theta_power_gf(n, k); // internally checked against k^{n+1} scaling
                auto mu = proportionality_check(theta_power_record(n, k, Convention::tangent),
                                                theta_record(n, Convention::tangent));
                if (!mu || *mu != Rational(int_pow(Int(k), n + 1))) return false;
            }
        }
        auto mu = proportionality_check(surface_to_record({"K3", 0, 24}),
                                        surface_to_record({"Enriques", 0, 12}));
        if (!mu || *mu != 2) return false;
        detail = "Theta^n(k) = k^{n+1} Theta^n, [K3] = 2 [Enriques]; n <= 4, k <= 3";
        return true;
    });

    run.check("propositions-surfaces", [&](std::string& detail) {
        auto dp = del_pezzo_scan();
        for (const auto& [d, v] : dp)
            if (v.extremely_divisible != (d == 6 || d == 8 || d == 9)) return false;
        auto toric = toric_surface_scan(12);
        for (const auto& [n, v] : toric)
            if (v.extremely_divisible != (12 % n == 0)) return false;
        auto hyper = hypersurface_scan(6);
        for (const auto& [d, v] : hyper)
            if (v.extremely_divisible != (d == 1 || d == 2 || d == 4)) return false;
        SurfaceRecord v4 = hypersurface_surface(4);
        if (v4.c1sq != 0 || v4.c2 != 24) return false;
        detail = "del Pezzo {6,8,9}, toric {3,4,6,12}, hypersurfaces {1,2,4}, V_4 = (0,24)";
        return true;
    });

    run.check("basis-conversion", [&](std::string& detail) {
        IntByPartition f3;
        f3.emplace(Partition{3}, 6);
        f3.emplace(Partition{2, 1}, 24);
        f3.emplace(Partition{1, 1, 1}, 48);
        IntByPartition mono = chern_basis_convert(f3, BasisDirection::products_to_monomial);
        Int g = 0;
        for (const auto& [p, c] : mono) g = int_gcd(g, c);
        if (g != 6 || mono.at(Partition::ones(3)) != 6) return false;

        std::mt19937 rng(911);
        std::uniform_int_distribution<int> dist(-20, 20);
        for (int trial = 0; trial < 100; ++trial) {
            int w = 1 + trial % 4;
            IntByPartition data;
            for (const Partition& p : partitions_of(w)) data.emplace(p, dist(rng));
            auto there = chern_basis_convert(data, BasisDirection::monomial_to_products);
            auto back = chern_basis_convert(there, BasisDirection::products_to_monomial);
            if (back != data) return false;
        }
        detail = "F_3 products {48,24,6} -> monomial gcd 6 = chi; 100 random round trips";
        return true;
    });

    run.check("convention-conversion", [&](std::string& detail) {
        for (int n = 1; n <= std::min(big, 6); ++n) {
            ChernRecord tangent = cpn_record(n, Convention::tangent);
            ChernRecord normal = cpn_record(n, Convention::normal);
            if (convert_record(tangent).numbers != normal.numbers) return false;
            if (convert_record(normal).numbers != tangent.numbers) return false;
        }
        detail = "tangent <-> normal numbers agree with both CP^n pipelines, n <= " +
                 std::to_string(std::min(big, 6));
        return true;
    });

    run.check("catalog", [&](std::string& detail) {
        Catalog catalog = builtin_catalog();
        if (catalog.version < 1) return false;
        bool found_f3 = false, found_pi = false;
        for (const CatalogRecord& r : catalog.records) {
            DivisibilityVerdict v = gcd_chern_numbers(r.record);
            if (r.record.name.find("F_3") != std::string::npos) {
                found_f3 = v.extremely_divisible && v.d == 6 && v.chi == 6;
            }
            if (r.record.name.find("X^3_Pi") != std::string::npos) {
                found_pi = !v.extremely_divisible && v.witnessed;
            }
        }
        if (!found_f3 || !found_pi) return false;
        for (const CatalogSurface& s : catalog.surfaces) {
            if (surface_signature(s.surface) * 3 + 2 * Rational(s.surface.c2) !=
                Rational(s.surface.c1sq))
                return false;
            if (!is_integral(surface_signature(s.surface))) return false;
            if (!chern_slope(s.surface).bmy_ok) return false;
        }
        detail = "catalog verdicts (F_3 divisible, X^3_Pi witnessed negative), signatures integral";
        return true;
    });

    return run.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace chernum

from fractions import Fraction

import chernum


def test_lagrange_table():
    assert chernum.lagrange(4) == {
        (4,): -1,
        (3, 1): 6,
        (2, 2): 3,
        (2, 1, 1): -21,
        (1, 1, 1, 1): 14,
    }


def test_mult_inversion_and_hat():
    assert chernum.mult_inversion(3) == {(3,): -1, (2, 1): 2, (1, 1, 1): -1}
    assert chernum.hat_mult_inversion(3) == {(3,): -1, (2, 1): 6, (1, 1, 1): -6}


def test_chern_generating_functions():
    assert chernum.cpn_tangent(2) == {(2,): 3, (1, 1): 3}
    assert chernum.cpn_normal(2) == {(2,): -3, (1, 1): 6}
    assert chernum.theta_tangent(2) == {(2,): -6, (1, 1): 6}
    tangent, normal = chernum.theta_power(2, 2)
    assert tangent == {(2,): -48, (1, 1): 48}
    assert normal == {(2,): 48}
    assert chernum.duality_check(4)


def test_face_censuses():
    assert chernum.dissection_census(4) == {
        (4,): 1,
        (3, 1): 6,
        (2, 2): 3,
        (2, 1, 1): 21,
        (1, 1, 1, 1): 14,
    }
    assert chernum.ordered_partition_census(4)[(2, 1, 1)] == 36


def test_cobordism_classes_are_exact_fractions():
    classes = chernum.mischenko_log(2)
    assert classes[0] == {(1,): Fraction(-1)}
    assert classes[1] == {(2,): Fraction(-1, 2), (1, 1): Fraction(3, 2)}
    assert chernum.decompose_in_theta(
        2, "normal", {(2,): -3, (1, 1): 6}
    ) == classes[1]


def test_divisibility():
    verdict = chernum.gcd_chern_numbers(2, "tangent", {(2,): 3, (1, 1): 3})
    assert verdict["extremely_divisible"]
    assert verdict["d"] == 3

    scans = chernum.del_pezzo_scan()
    divisible = {d for d, v in scans.items() if v["extremely_divisible"]}
    assert divisible == {6, 8, 9}

    assert chernum.surface_verdict(0, 24)["d"] == 24

    cat = chernum.catalog()
    assert cat["version"] == 1
    names = {r["name"] for r in cat["records"]}
    assert any("F_3" in n for n in names)


def test_big_integers_do_not_overflow():
    poly = chernum.theta_tangent(10)
    assert poly[(1,) * 10] == 39916800  # 11!


def test_verification_suite():
    results = chernum.verify(max_n=3, fast=True)
    assert results, "empty verification report"
    failed = [name for name, ok, _ in results if not ok]
    assert failed == []

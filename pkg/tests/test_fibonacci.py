import random

import pytest

from symbol3.algebra import SymbolAlgebra
from symbol3.cyclotomic import CycQ, OMEGA
from symbol3.fibonacci import (
    LEMMAS,
    UNIT_ALGEBRA,
    UnsupportedParams,
    closed_form_norm,
    closed_form_norm_candidate,
    cube_sum,
    fib,
    fib_element,
    fib_identity_suite,
    general_a_norm,
    general_a_norm_candidate,
    generalized_element,
    horadam,
    invertibility_scan,
    omega_free_block_candidate,
    run_lemma_suite,
)
from symbol3.representations import det, lambda_mat


def test_fib_values():
    assert [fib(n) for n in range(9)] == [0, 1, 1, 2, 3, 5, 8, 13, 21]
    assert fib(10) == 55
    for n in range(100):
        assert fib(n + 2) == fib(n + 1) + fib(n)
    with pytest.raises(ValueError):
        fib(-1)


def test_horadam():
    for n in range(100):
        assert horadam(n, 0, 1) == fib(n)
    rng = random.Random(40)
    for _ in range(25):
        p, q = rng.randint(-20, 20), rng.randint(-20, 20)
        n = rng.randint(0, 50)
        assert horadam(n + 1, p, q) == p * fib(n) + q * fib(n + 1)
        p2, q2 = rng.randint(-20, 20), rng.randint(-20, 20)
        assert horadam(n, p, q) + horadam(n, p2, q2) == horadam(n, p + p2, q + q2)


def test_fib_element_layout():
    f0 = fib_element(0)
    expected = {
        (0, 0): 0, (1, 0): 1, (2, 0): 1,
        (0, 1): 2, (1, 1): 3, (2, 1): 5,
        (0, 2): 8, (1, 2): 13, (2, 2): 21,
    }
    for exponents, value in expected.items():
        assert f0.coeff(exponents) == CycQ(value)


def test_fib_element_recurrence():
    for n in range(0, 40, 7):
        assert fib_element(n) + fib_element(n + 1) == fib_element(n + 2)


def test_generalized_element():
    rng = random.Random(41)
    for _ in range(10):
        n = rng.randint(0, 30)
        assert generalized_element(n, 0, 1) == fib_element(n)
        p, q = rng.randint(-9, 9), rng.randint(-9, 9)
        p2, q2 = rng.randint(-9, 9), rng.randint(-9, 9)
        total = generalized_element(n, p, q) + generalized_element(n, p2, q2)
        assert total == generalized_element(n, p + p2, q + q2)
    lucas_like = generalized_element(0, 1, 1)
    by_exponent = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)]
    values = [lucas_like.coeff(e) for e in by_exponent]
    assert values == [CycQ(v) for v in (1, 1, 2, 3, 5, 8, 13, 21, 34)]


def test_identity_suite():
    assert all(ok for _, ok in fib_identity_suite(100))
    # spot instances
    assert fib(1) ** 2 - fib(0) * fib(2) == 1
    assert fib(6) == fib(3) ** 2 + 2 * fib(3) * fib(2)


def test_closed_form_norm_frozen_values():
    # n = 0 evaluated independently by hand through the explicit norm form:
    # 9072 + 2108 - 6642 + 520 + 198 = 5256, with vanishing w-part
    assert closed_form_norm(0) == CycQ(5256)
    assert fib_element(0).reduced_norm() == CycQ(5256)
    d = det(lambda_mat(fib_element(0)))
    assert d == CycQ(5256) ** 3


def test_closed_form_norm_matches_oracle():
    for n in range(31):
        assert closed_form_norm(n) == fib_element(n).reduced_norm()


def test_closed_form_norm_rejects_other_params():
    with pytest.raises(UnsupportedParams):
        closed_form_norm(1, SymbolAlgebra(CycQ(2), CycQ(3)))
    with pytest.raises(UnsupportedParams):
        invertibility_scan(3, SymbolAlgebra(CycQ(2), CycQ(1)))


def test_candidate_closed_form_disagrees():
    # frozen evaluation of the candidate constants at n = 0
    assert closed_form_norm_candidate(0) == CycQ(3804, -14866)
    assert closed_form_norm_candidate(0) != closed_form_norm(0)


def test_general_a_norm():
    for a in (CycQ(2), CycQ(5), OMEGA, CycQ(1) + OMEGA):
        algebra = SymbolAlgebra(a, CycQ(1))
        for n in range(12):
            assert general_a_norm(n, a) == fib_element(n, algebra).reduced_norm()
    # the candidate variant does not survive the same comparison
    algebra = SymbolAlgebra(CycQ(1), CycQ(1))
    assert any(
        general_a_norm_candidate(n, CycQ(1)) != fib_element(n, algebra).reduced_norm()
        for n in range(5)
    )


def test_lemma_suite_statuses_are_frozen():
    rows = run_lemma_suite(30)
    passing_candidates = {r["name"] for r in rows if r["candidate_ok"]}
    assert passing_candidates == {"run_block_0", "run_block_3", "omega2_block_237"}
    for r in rows:
        assert r["candidate_ok"] or r["verified_ok"], r


def test_every_failing_lemma_has_a_corrected_form():
    for lemma in LEMMAS:
        rows = [r for r in run_lemma_suite(10) if r["name"] == lemma.name]
        row = rows[0]
        if not row["candidate_ok"]:
            assert lemma.verified is not None
            assert row["verified_ok"]


def test_invertibility_scan():
    report = invertibility_scan(100)
    assert report["all_invertible"]
    assert report["omega_free_block_positive"]
    assert len(report["rows"]) == 101
    assert report["rows"][0]["eta"] == "5256"
    for row in report["rows"]:
        assert row["invertible"]
        assert CycQ.parse(row["eta"])


def test_omega_free_block_positivity_values():
    assert omega_free_block_candidate(0) == 3804
    for n in range(101):
        assert omega_free_block_candidate(n) > 0


def test_cube_sum_factorization():
    rng = random.Random(42)
    for _ in range(50):
        x, y, z = (rng.randint(-40, 40) for _ in range(3))
        assert 2 * cube_sum(x, y, z) == (x + y + z) * (
            (x - y) ** 2 + (y - z) ** 2 + (z - x) ** 2
        )


def test_fib_inverse_round_trip():
    one = UNIT_ALGEBRA.one()
    for n in (0, 1, 7, 25):
        fe = fib_element(n)
        assert fe * fe.inverse() == one


def test_generalized_elements_form_an_integer_module():
    # integer combinations stay inside the family:
    # alpha * H^(p,q) + beta * H^(p',q') = H^(alpha p, alpha q) + H^(beta p', beta q')
    rng = random.Random(44)
    for _ in range(10):
        n = rng.randint(0, 20)
        p, q, alpha = rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-5, 5)
        assert generalized_element(n, p, q).scale(CycQ(alpha)) == generalized_element(
            n, alpha * p, alpha * q
        )

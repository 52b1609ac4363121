import math
import random

import numpy as np
import pytest

from weil2.arith import parse_prime_power
from weil2.weil import (
    ALMOST_ORDINARY,
    ORDINARY,
    PRANK0_SPLIT,
    NotAdmissible,
    SplitForm,
    WeilCoeffs,
    admissibility,
    bounds_ok,
    group_order,
    is_almost_ordinary,
    is_ordinary,
    is_prank0_split,
    is_simple,
    predicted_curve_count,
    split,
    supersingular_row,
)

PRIME_POWERS_27 = [parse_prime_power(q) for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)]


def W(q, a, b):
    return WeilCoeffs(parse_prime_power(q), a, b)


def test_derived_quantities():
    w = W(2, -1, 2)
    assert w.delta_z == 1 - 4 * (2 - 4) == 9
    assert w.delta_p == 36 - 8 == 28
    assert W(4, -1, 4).delta_p == 128
    assert W(8, -1, 8).delta_p == 544


def test_bounds_examples():
    assert not bounds_ok(W(7, 1, -9))  # delta_p = 25 - 28 < 0
    assert bounds_ok(W(9, 1, -11))
    assert bounds_ok(W(2, 0, 4))  # b = a^2/4 + 2q boundary


def test_bounds_match_float_inequalities():
    rng = random.Random(2024)
    pps = [parse_prime_power(q) for q in (2, 3, 4, 5, 7, 8, 9, 13, 16, 25, 27, 49, 113)]
    for _ in range(100_000):
        pp = rng.choice(pps)
        a = rng.randint(-30, 30)
        b = rng.randint(-3 * pp.q, 3 * pp.q)
        w = WeilCoeffs(pp, a, b)
        rq = math.sqrt(pp.q)
        want = abs(a) <= 4 * rq and 2 * abs(a) * rq - 2 * pp.q <= b <= a * a / 4 + 2 * pp.q
        # floating point is only advisory; skip razor-thin margins
        if abs(abs(a) - 4 * rq) < 1e-9 or abs(2 * abs(a) * rq - 2 * pp.q - b) < 1e-9:
            continue
        assert bounds_ok(w) == want, (pp.q, a, b)


def test_condition_examples():
    assert is_ordinary(W(2, 0, 3))
    assert not is_ordinary(W(2, 1, 0))
    assert is_almost_ordinary(W(2, 1, 0))  # delta_p = 8, odd 2-valuation
    assert supersingular_row(W(2, 0, -2)) == "ss(0,-q)"
    assert supersingular_row(W(2, 0, -4)) == "ss(0,-2q)"
    assert supersingular_row(W(25, 0, 50)) == "ss(0,2q)"
    assert is_prank0_split(W(2, 0, 0))  # delta_z = 16 is a square
    assert supersingular_row(W(2, 0, 0)) is None  # p = 2, q non-square


def test_admissibility_examples():
    v = admissibility(W(4, 0, -1))
    assert v.admissible and v.matched == {ORDINARY} and v.p_rank == 2
    v = admissibility(W(2, -1, 2))
    assert v.admissible and v.matched == {ALMOST_ORDINARY} and v.p_rank == 1
    # delta_p = 5525 = 5^2 * 221 with 221 a residue mod 5: a 5-adic square,
    # so the p-rank 1 condition fails, and nothing else matches
    assert not admissibility(W(25, -1, 25)).admissible


def test_is_simple():
    assert is_simple(W(13, 9, 42))  # delta_z = 17
    assert not is_simple(W(2, -2, 5))  # delta_z = 0
    assert is_simple(W(2, 1, 0))  # delta_z = 17
    with pytest.raises(NotAdmissible):
        is_simple(W(25, -1, 25))


def test_split_examples():
    assert split(W(4, 0, -1)) == SplitForm(3, -3)
    assert split(W(2, -1, 2)) == SplitForm(2, -1)
    assert split(W(5, 0, -1)) is None  # delta_z = 44
    assert split(W(2, 0, 0)) == SplitForm(2, -2)  # s = -t ties break to s >= 0


def test_group_order():
    assert group_order(W(5, 8, 26)) == 100
    assert group_order(W(3, 1, 4)) == 18
    for q in (2, 3, 9, 25):
        assert group_order(W(q, 0, -1)) == q * q


def test_predicted_curve_count():
    w = W(3, 1, 4)
    assert predicted_curve_count(w, 1) == 5
    assert predicted_curve_count(w, 2) == 17
    assert predicted_curve_count(W(7, 0, 5), 1) == 8  # a = 0 gives q + 1
    with pytest.raises(ValueError):
        predicted_curve_count(w, 0)


def test_predicted_curve_count_matches_numeric_power_sums():
    rng = random.Random(5)
    for pp in PRIME_POWERS_27:
        for _ in range(20):
            a = rng.randint(-10, 10)
            b = rng.randint(-2 * pp.q, 2 * pp.q)
            roots = np.roots([1, a, b, a * pp.q, pp.q * pp.q])
            for k in (1, 2, 3, 5, 6):
                pk = np.real(np.sum(roots**k))
                want = round(pp.q**k + 1 - pk)
                assert predicted_curve_count(WeilCoeffs(pp, a, b), k) == want


def _rectangle(pp):
    amax = math.isqrt(16 * pp.q)
    for a in range(-amax, amax + 1):
        for b in range(-2 * pp.q, a * a // 4 + 2 * pp.q + 1):
            yield a, b


def all_admissible_upto_27():
    for pp in PRIME_POWERS_27:
        for a, b in _rectangle(pp):
            w = WeilCoeffs(pp, a, b)
            v = admissibility(w)
            if v.admissible:
                yield w, v


def test_prank0_parity_side_condition_immaterial_through_27():
    # the parity clause of the p-rank-0 condition only matters when q is a
    # square with p = 1 (mod 3); no such q exists below 28, so flipping the
    # clause's sense cannot change any verdict there
    for pp in PRIME_POWERS_27:
        if pp.q_is_square():
            assert pp.p % 3 != 1
    # and directly: both readings coincide on the whole rectangle
    from weil2.arith import is_perfect_square, valuation

    def prank0_flipped(w):
        pp = w.q
        if valuation(w.b, pp.p) < pp.m or 2 * valuation(w.a, pp.p) < pp.m:
            return False
        if not is_perfect_square(w.delta_z)[0]:
            return False
        if pp.q_is_square():
            a1, b1 = w.a // pp.sqrt_q(), w.b // pp.q
            if b1 == 2 and pp.p % 4 == 1:
                return False
            if (a1 - b1) % 2 == 0 and pp.p % 3 == 1:  # flipped parity sense
                return False
        return True

    for pp in PRIME_POWERS_27:
        for a, b in _rectangle(pp):
            w = WeilCoeffs(pp, a, b)
            assert is_prank0_split(w) == prank0_flipped(w), (pp.q, a, b)


def test_p_rank_well_defined():
    # the three condition groups never overlap, so p-rank is unambiguous
    for w, v in all_admissible_upto_27():
        groups = [
            ORDINARY in v.matched,
            ALMOST_ORDINARY in v.matched,
            PRANK0_SPLIT in v.matched or any(c.startswith("ss(") for c in v.matched),
        ]
        assert sum(groups) == 1, (w.q.q, w.a, w.b, v.matched)


def test_root_moduli():
    # a quartic with a repeated quadratic factor is ill-conditioned for a
    # numerical root finder, so split classes go through their exact
    # quadratic factors (simple or double roots of a quadratic stay well
    # within 1e-6); non-split quartics have simple roots
    for w, _ in all_admissible_upto_27():
        st = split(w)
        if st is None:
            roots = np.roots([1, w.a, w.b, w.a * w.q.q, w.q.q**2])
        else:
            roots = np.concatenate(
                [np.roots([1, -st.s, w.q.q]), np.roots([1, -st.t, w.q.q])]
            )
        assert np.all(np.abs(np.abs(roots) ** 2 - w.q.q) < 1e-6), (w.q.q, w.a, w.b)


def test_split_roundtrip_and_order_factorization():
    seen_split = 0
    for w, _ in all_admissible_upto_27():
        st = split(w)
        if st is None:
            continue
        seen_split += 1
        assert abs(st.s) >= abs(st.t)
        if st.s == -st.t:
            assert st.s >= 0
        assert st.s + st.t == -w.a
        assert st.s * st.t == w.b - 2 * w.q.q
        q = w.q.q
        assert group_order(w) == (1 - st.s + q) * (1 - st.t + q)
    assert seen_split > 100


def test_group_order_in_weil_interval():
    # exact-integer relaxation of (sqrt(q)-1)^4 <= P(1) <= (sqrt(q)+1)^4;
    # the lower bound must use floor: q=5, (a,b)=(-8,26) has order 4
    for w, _ in all_admissible_upto_27():
        n = group_order(w)
        q = w.q.q
        assert n > 0
        assert n >= (math.isqrt(q) - 1) ** 4
        assert n <= (math.isqrt(q) + 2) ** 4

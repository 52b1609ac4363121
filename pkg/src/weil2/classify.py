"""Enumeration of isogeny classes with prescribed group-order divisibility.

Two independent routes to the classes with q^2 | #J(F_q):

* :func:`enumerate_order_divisible` scans the whole admissible coefficient
  rectangle and filters by divisibility -- one code path for every k.
* :func:`closed_form` emits the known answer directly: four one-parameter
  families (with their side conditions on q) plus a fixed small-q table.

Their agreement over a range of q is the package's central cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import PrimePower, parse_prime_power
from .jacobian import is_jacobian
from .weil import SplitForm, WeilCoeffs, admissibility, group_order, split

# (a, b) pairs completing the closed form for the finitely many small q
# where classes with #J = c*q^2, c > 1 exist.
SMALL_Q_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((0, 3), (1, 0), (1, 4), (2, 5), (3, 6)),
    3: ((1, 4), (3, 5), (4, 10)),
    4: ((2, 5), (4, 11), (6, 17)),
    5: ((3, 6), (8, 26)),
    7: ((4, 16),),
    9: ((6, 20),),
    13: ((9, 42),),
}

# the classes among the q^2-divisible ones that no Jacobian realizes
NON_JACOBIAN_TABLE: dict[int, frozenset[tuple[int, int]]] = {
    2: frozenset({(-2, 5), (0, 3), (1, 4), (2, 5), (3, 6)}),
    4: frozenset({(6, 17)}),
    5: frozenset({(8, 26)}),
}


@dataclass(frozen=True)
class ClassificationRecord:
    """Everything the package can say about one (q, a, b)."""

    q: PrimePower
    a: int
    b: int
    admissible: bool
    matched: frozenset[str]
    p_rank: int | None
    simple: bool | None
    split: SplitForm | None
    order: int
    c: int | None
    jacobian: bool | None


def classify_record(q: int | PrimePower, a: int, b: int) -> ClassificationRecord:
    """Aggregate admissibility, splitting, order and Jacobian verdicts."""
    pp = q if isinstance(q, PrimePower) else parse_prime_power(q)
    w = WeilCoeffs(pp, a, b)
    verdict = admissibility(w)
    order = group_order(w)
    c = order // pp.q**2 if order % pp.q**2 == 0 else None
    if not verdict.admissible:
        return ClassificationRecord(
            pp, a, b, False, frozenset(), None, None, None, order, c, None
        )
    return ClassificationRecord(
        pp,
        a,
        b,
        True,
        verdict.matched,
        verdict.p_rank,
        verdict.simple,
        split(w),
        order,
        c,
        is_jacobian(w),
    )


def coefficient_rectangle(pp: PrimePower):
    """All (a, b) satisfying a^2 <= 16q, -2q <= b <= a^2/4 + 2q, in lex order."""
    q = pp.q
    amax = math.isqrt(16 * q)
    for a in range(-amax, amax + 1):
        for b in range(-2 * q, a * a // 4 + 2 * q + 1):
            yield a, b


def enumerate_order_divisible(q: int | PrimePower, k: int = 2) -> list[ClassificationRecord]:
    """All admissible classes over F_q with q^k dividing the group order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pp = q if isinstance(q, PrimePower) else parse_prime_power(q)
    qk = pp.q**k
    out = []
    for a, b in coefficient_rectangle(pp):
        w = WeilCoeffs(pp, a, b)
        if group_order(w) % qk != 0:
            continue
        if not admissibility(w).admissible:
            continue
        out.append(classify_record(pp, a, b))
    return out


def closed_form(q: int | PrimePower) -> list[tuple[int, int]]:
    """The (a, b) with q^2 | #J, stated directly instead of enumerated.

    Families, each with its applicability condition on q = p^m:

    * (1, -(q+2))   iff q odd and q > 8
    * (0, -1)       always
    * (-1, q)       iff m odd or p != 1 (mod 4)
    * (-2, 2q+1)    always
    * plus the SMALL_Q_TABLE row for q, if any.
    """
    pp = q if isinstance(q, PrimePower) else parse_prime_power(q)
    qq = pp.q
    out = [(0, -1), (-2, 2 * qq + 1)]
    if qq % 2 == 1 and qq > 8:
        out.append((1, -(qq + 2)))
    if pp.m % 2 == 1 or pp.p % 4 != 1:
        out.append((-1, qq))
    out.extend(SMALL_Q_TABLE.get(qq, ()))
    return sorted(out)


def non_jacobian_exceptions(q: int | PrimePower) -> frozenset[tuple[int, int]]:
    """The q^2-divisible classes not realized by any Jacobian over F_q."""
    pp = q if isinstance(q, PrimePower) else parse_prime_power(q)
    return NON_JACOBIAN_TABLE.get(pp.q, frozenset())

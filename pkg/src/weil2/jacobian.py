"""Which admissible classes contain the Jacobian of a genus-2 curve.

The non-realizable classes are cut out by two finite rule tables: one for
simple surfaces (conditions on (a, b) directly) and one for split surfaces
(conditions on the normalized elliptic trace pair (s, t), consulted per
p-rank).  Rows within a table are OR-ed; a class is a Jacobian class iff
no row matches.
"""

from __future__ import annotations

from .arith import PrimePower, is_squarefree, prime_divisors
from .weil import (
    NotAdmissible,
    NotSimple,
    SplitForm,
    WeilCoeffs,
    admissibility,
    split,
)


def simple_non_jacobian(w: WeilCoeffs) -> bool:
    """Whether a simple admissible class is NOT realized by a Jacobian."""
    verdict = admissibility(w)
    if not verdict.admissible:
        raise NotAdmissible(f"(q,a,b)=({w.q.q},{w.a},{w.b})")
    if not verdict.simple:
        raise NotSimple(f"(q,a,b)=({w.q.q},{w.a},{w.b})")
    return _simple_rows(w)


def _simple_rows(w: WeilCoeffs) -> bool:
    p, q = w.q.p, w.q.q
    a, b = w.a, w.b
    sq = w.q.q_is_square()
    if a * a - b == q and b < 0 and all(r % 3 == 1 for r in prime_divisors(b)):
        return True
    if a != 0:
        return False
    if b == 1 - 2 * q:
        return True
    if b == 2 - 2 * q and p > 2:
        return True
    if b == -q and ((p % 12 == 11 and sq) or (p == 3 and sq) or (p == 2 and not sq)):
        return True
    if b == -2 * q and q in (2, 3):
        return True
    return False


def split_non_jacobian(q: PrimePower, st: SplitForm, p_rank: int) -> bool:
    """Whether a split class with trace pair (s, t) is NOT a Jacobian class.

    (s, t) must carry the normalization |s| >= |t|, s >= 0 when s = -t;
    p_rank is the class's p-rank as returned by admissibility.
    """
    p, qq = q.p, q.q
    s, t = st.s, st.t
    sq = q.q_is_square()
    if abs(s - t) == 1:
        return True
    if p_rank == 2:
        if s == t and t * t - 4 * qq in (-3, -4, -7):
            return True
        if qq == 2 and s == 1 and t == -1:
            return True
    elif p_rank == 1:
        if sq and s * s == 4 * qq and s != t and is_squarefree(s - t):
            return True
    elif p_rank == 0:
        if p > 3 and s * s != t * t:
            return True
        if p == 3 and not sq and s * s == 3 * qq and t * t == 3 * qq:
            return True
        if p == 3 and sq and (s - t) % (3 * q.sqrt_q()) != 0:
            return True
        if p == 2 and (s * s - t * t) % (2 * qq) != 0:
            return True
        if qq in (2, 3) and s == t:
            return True
        if qq in (4, 9) and s * s == 4 * qq and t * t == 4 * qq:
            return True
    return False


def is_jacobian(w: WeilCoeffs) -> bool:
    """Whether the class contains the Jacobian of a genus-2 curve."""
    verdict = admissibility(w)
    if not verdict.admissible:
        raise NotAdmissible(f"(q,a,b)=({w.q.q},{w.a},{w.b})")
    if verdict.simple:
        return not _simple_rows(w)
    st = split(w)
    # non-simple admissible classes always split: simplicity requires delta_z
    # to be a non-square apart from two patterns that are themselves simple
    assert st is not None
    return not split_non_jacobian(w.q, st, verdict.p_rank)

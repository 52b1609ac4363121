"""Weil polynomials of abelian surfaces over F_q.

A pair (a, b) of integers encodes P(X) = X^4 + aX^3 + bX^2 + aqX + q^2.
This module decides whether such a P is the Weil polynomial of an abelian
surface (the Honda-Tate/Rueck admissibility conditions), and computes the
p-rank, simplicity, elliptic splitting, and group order of the class.

Condition names used throughout:

* ``ordinary``        -- b is a p-adic unit; p-rank 2.
* ``almost-ordinary`` -- the p-rank 1 condition (valuation constraints on
  a and b plus a p-adic non-square requirement on delta_p).
* ``prank0-split``    -- p-rank 0 with delta_z a square in Z, so the real
  quadratic x^2 + ax + (b - 2q) factors over Z.
* ``ss(...)``         -- the finitely many supersingular coefficient
  patterns, tagged by their (a^2, b) shape.

All tests are exact integer arithmetic; the root bound |a| <= 4*sqrt(q)
and the segment 2|a|sqrt(q) - 2q <= b <= a^2/4 + 2q are enforced in the
squared form (a^2 <= 16q, delta_p >= 0 with b + 2q >= 0, 4b <= a^2 + 8q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PrimePower, is_perfect_square, valuation, zp_is_square

ORDINARY = "ordinary"
ALMOST_ORDINARY = "almost-ordinary"
PRANK0_SPLIT = "prank0-split"


class NotAdmissible(ValueError):
    """The coefficient pair is not the Weil polynomial of an abelian surface."""


class NotSimple(ValueError):
    """Operation requires a simple isogeny class."""


@dataclass(frozen=True)
class WeilCoeffs:
    """Coefficients (a, b) of X^4 + aX^3 + bX^2 + aqX + q^2 over F_q."""

    q: PrimePower
    a: int
    b: int

    @property
    def delta_z(self) -> int:
        """Discriminant of x^2 + ax + (b - 2q); square in Z iff P splits."""
        return self.a * self.a - 4 * (self.b - 2 * self.q.q)

    @property
    def delta_p(self) -> int:
        """(b + 2q)^2 - 4qa^2; its squareness in Z_p governs p-rank 1."""
        return (self.b + 2 * self.q.q) ** 2 - 4 * self.q.q * self.a * self.a


@dataclass(frozen=True)
class SplitForm:
    """Normalized (s, t) with P = (X^2 - sX + q)(X^2 - tX + q).

    Uniqueness normalization: |s| >= |t|, and s >= 0 when s = -t.
    """

    s: int
    t: int


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    matched: frozenset[str]
    p_rank: int | None = None
    simple: bool | None = None


def bounds_ok(w: WeilCoeffs) -> bool:
    """Coefficient bounds forced by all roots having absolute value sqrt(q)."""
    q = w.q.q
    if w.a * w.a > 16 * q:
        return False
    if 4 * w.b > w.a * w.a + 8 * q:
        return False
    # 2|a|sqrt(q) <= b + 2q, squared: both the sign and delta_p >= 0 must hold.
    return w.b + 2 * q >= 0 and w.delta_p >= 0


def is_ordinary(w: WeilCoeffs) -> bool:
    return valuation(w.b, w.q.p) == 0


def is_almost_ordinary(w: WeilCoeffs) -> bool:
    p, m = w.q.p, w.q.m
    if 2 * valuation(w.b, p) < m or valuation(w.a, p) != 0:
        return False
    d = w.delta_p
    return d == 0 or not zp_is_square(p, d)


def is_prank0_split(w: WeilCoeffs) -> bool:
    p, m, q = w.q.p, w.q.m, w.q.q
    if valuation(w.b, p) < m or 2 * valuation(w.a, p) < m:
        return False
    if not is_perfect_square(w.delta_z)[0]:
        return False
    if w.q.q_is_square():
        a1 = w.a // w.q.sqrt_q()
        b1 = w.b // q
        if b1 == 2 and p % 4 == 1:
            return False
        if (a1 - b1) % 2 != 0 and p % 3 == 1:
            return False
    return True


def supersingular_row(w: WeilCoeffs) -> str | None:
    """Tag of the matching supersingular coefficient pattern, or None."""
    p, q = w.q.p, w.q.q
    a, b = w.a, w.b
    sq = w.q.q_is_square()
    if a == 0:
        if b == 0 and ((sq and p % 8 != 1) or (not sq and p != 2)):
            return "ss(0,0)"
        if b == -q and ((sq and p % 12 != 1) or (not sq and p != 3)):
            return "ss(0,-q)"
        if b == q and not sq:
            return "ss(0,q)"
        if b == -2 * q and not sq:
            return "ss(0,-2q)"
        if b == 2 * q and sq and p % 4 == 1:
            return "ss(0,2q)"
    else:
        a2 = a * a
        if b == q and a2 == q and sq and p % 5 != 1:
            return "ss(a2=q,b=q)"
        if b == q and a2 == 2 * q and not sq and p == 2:
            return "ss(a2=2q,b=q)"
        if b == 3 * q and a2 == 4 * q and sq and p % 3 == 1:
            return "ss(a2=4q,b=3q)"
        if b == 3 * q and a2 == 5 * q and not sq and p == 5:
            return "ss(a2=5q,b=3q)"
    return None


def _simple_criterion(w: WeilCoeffs) -> bool:
    q = w.q.q
    sq = w.q.q_is_square()
    if not is_perfect_square(w.delta_z)[0]:
        return True
    if w.a == 0 and w.b == 2 * q and sq and w.q.p % 4 == 1:
        return True
    if w.a * w.a == 4 * q and w.b == 3 * q and sq and w.q.p % 3 == 1:
        return True
    return False


def admissibility(w: WeilCoeffs) -> AdmissibilityVerdict:
    """Full admissibility verdict, with matched conditions and p-rank."""
    matched = set()
    if is_ordinary(w):
        matched.add(ORDINARY)
    if is_almost_ordinary(w):
        matched.add(ALMOST_ORDINARY)
    if is_prank0_split(w):
        matched.add(PRANK0_SPLIT)
    row = supersingular_row(w)
    if row is not None:
        matched.add(row)
    if not matched or not bounds_ok(w):
        return AdmissibilityVerdict(False, frozenset())
    if ORDINARY in matched:
        p_rank = 2
    elif ALMOST_ORDINARY in matched:
        p_rank = 1
    else:
        p_rank = 0
    return AdmissibilityVerdict(True, frozenset(matched), p_rank, _simple_criterion(w))


def is_simple(w: WeilCoeffs) -> bool:
    """Whether the class is not isogenous to a product of elliptic curves."""
    if not admissibility(w).admissible:
        raise NotAdmissible(f"(q,a,b)=({w.q.q},{w.a},{w.b})")
    return _simple_criterion(w)


def split(w: WeilCoeffs) -> SplitForm | None:
    """The (s, t) with P = (X^2 - sX + q)(X^2 - tX + q), if P so factors."""
    ok, z = is_perfect_square(w.delta_z)
    if not ok:
        return None
    # delta_z = a^2 (mod 4), so z and a share parity and the roots are integral.
    assert (z - w.a) % 2 == 0
    s = (-w.a + z) // 2
    t = (-w.a - z) // 2
    if abs(s) < abs(t):
        s, t = t, s
    # when s = -t the larger-|.| rule leaves s = z/2 >= 0 already
    return SplitForm(s, t)


def group_order(w: WeilCoeffs) -> int:
    """P(1), the number of rational points on any surface in the class."""
    q = w.q.q
    return 1 + w.a + w.b + w.a * q + q * q


def predicted_curve_count(w: WeilCoeffs, k: int = 1) -> int:
    """Point count over F_{q^k} of a genus-2 curve with Weil polynomial P.

    Computed as q^k + 1 - p_k where p_k is the k-th power sum of the roots
    of P, by Newton's identities on the coefficients.
    """
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    q = w.q.q
    e = [-w.a, w.b, -w.a * q, q * q]
    psums: list[int] = []
    for n in range(1, k + 1):
        s = 0
        for i in range(1, min(n, 4) + 1):
            sign = 1 if i % 2 == 1 else -1
            if i < n:
                s += sign * e[i - 1] * psums[n - 1 - i]
            else:  # i == n <= 4: Newton's trailing term
                s += sign * n * e[n - 1]
        psums.append(s)
    return q**k + 1 - psums[k - 1]

"""Exhaustive census of genus-2 curve models over small fields.

Every smooth model is enumerated, its point counts over F_q and F_{q^2}
are taken, and the recovered coefficient pairs (a, b) are tallied.  The
realized set is then compared against what the classification rules
predict -- an independent, brute-force verification of the Jacobian
tables.  Isomorphic duplicates are deliberately kept: only the SET of
realized (a, b) matters.

Models:

* odd q:  y^2 = f(x) with deg f in {5, 6} and f squarefree,
* q = 2^m: Y^2 + H(x,z)Y = F(x,z) in the weighted plane P(1,3,1) with
  deg h <= 3, h != 0, deg f <= 6, kept iff no affine chart has a singular
  point over the algebraic closure.  Roots of the cubic h lie in
  subextensions of degree <= 3, so the singular-point search only ever
  scans F_{q^2} and F_{q^3}.

Two counting routes exist on purpose.  :func:`count_points` is the plain
reference implementation on field elements; the census itself runs a
vectorized engine (numpy) that evaluates whole coefficient blocks at once
by writing evaluation-at-a-point as an F_p-linear map on coefficient
digits.  The test suite pins the two routes against each other.

The census result is persisted as one line-delimited JSON file per q,
bit-identical across runs and across ``jobs`` values.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .arith import PrimePower, parse_prime_power
from .jacobian import is_jacobian
from .weil import WeilCoeffs, admissibility, predicted_curve_count
from .classify import coefficient_rectangle
from . import smallfield
from .smallfield import Field, base_field, extend

SUPPORTED_Q = (2, 3, 4, 5, 7, 9, 13)
HEAVY_Q = (4, 13)  # ~4M / ~63M candidate models; opt-in

CACHE_VERSION = 1
_CHUNK = 1 << 14


class UnsupportedQ(ValueError):
    """Census requested for a field size outside the supported set."""


class ParityViolation(RuntimeError):
    """(a^2 - (q^2 + 1 - N2)) came out odd: a counting bug."""


class InadmissibleCount(RuntimeError):
    """A census point count produced a non-admissible (a, b): a counting bug."""


class VerificationFailure(RuntimeError):
    """Census disagreed with the classification; carries the evidence."""


@dataclass(frozen=True)
class CurveOdd:
    """y^2 = f(x) over odd F_q; f holds 7 field elements, low degree first."""

    q: PrimePower
    f: tuple

    def __post_init__(self):
        assert len(self.f) == 7 and self.q.p != 2


@dataclass(frozen=True)
class CurveChar2:
    """Y^2 + H(x,z)Y = F(x,z) over F_{2^m}; h has 4 entries, f has 7."""

    q: PrimePower
    h: tuple
    f: tuple

    def __post_init__(self):
        assert len(self.h) == 4 and len(self.f) == 7 and self.q.p == 2


@dataclass(frozen=True)
class CensusRecord:
    curve: CurveOdd | CurveChar2
    n1: int
    n2: int
    a: int
    b: int


@dataclass(frozen=True)
class CensusReport:
    q: int
    models: int
    weil_set: frozenset[tuple[int, int]]
    predicted_set: frozenset[tuple[int, int]]
    zeta_checked: int


@lru_cache(maxsize=None)
def _base(p: int, m: int) -> Field:
    return base_field(p, m)


@lru_cache(maxsize=None)
def _ext(p: int, m: int, k: int) -> Field:
    return extend(_base(p, m), k)


def _as_pp(q: int | PrimePower) -> PrimePower:
    return q if isinstance(q, PrimePower) else parse_prime_power(q)


def _check_supported(q: int | PrimePower, heavy: bool) -> PrimePower:
    pp = _as_pp(q)
    if pp.q not in SUPPORTED_Q:
        raise UnsupportedQ(f"census supports q in {SUPPORTED_Q}, got {pp.q}")
    if pp.q in HEAVY_Q and not heavy:
        raise UnsupportedQ(
            f"q={pp.q} is a large run ({pp.q}^7-scale models); pass heavy=True / --heavy"
        )
    return pp


# ---------------------------------------------------------------------------
# reference route: plain field-element arithmetic
# ---------------------------------------------------------------------------


def _poly_eval(field: Field, coeffs, x):
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def _poly_deriv(field: Field, coeffs):
    return tuple(field.nmul(i, coeffs[i]) for i in range(1, len(coeffs)))


def _lifted(pp: PrimePower, coeffs, k: int):
    if k == 1:
        return _base(pp.p, pp.m), coeffs
    K = _ext(pp.p, pp.m, k)
    return K, tuple(K.embed(c) for c in coeffs)


def count_points(curve: CurveOdd | CurveChar2, k: int = 1) -> int:
    """#C(F_{q^k}), counting the points of the smooth weighted model."""
    pp = curve.q
    if isinstance(curve, CurveOdd):
        K, f = _lifted(pp, curve.f, k)
        n = 0
        for x in K.elements():
            n += 1 + K.quadratic_character(_poly_eval(K, f, x))
        if curve.f[6] == _base(pp.p, pp.m).zero:
            n += 1
        else:
            n += 1 + K.quadratic_character(f[6])
        return n
    K, f = _lifted(pp, curve.f, k)
    _, h = _lifted(pp, curve.h, k)
    n = 0
    for x in K.elements():
        n += _artin_schreier_solutions(K, _poly_eval(K, h, x), _poly_eval(K, f, x))
    n += _artin_schreier_solutions(K, h[3], f[6])
    return n


def _artin_schreier_solutions(K: Field, hv, fv) -> int:
    """Solutions y of y^2 + hv*y = fv in K."""
    if hv == K.zero:
        return 1
    u = K.mul(fv, K.pow(K.inv(hv), 2))
    return 2 if K.absolute_trace(u) == 0 else 0


def is_squarefree_poly(field: Field, coeffs) -> bool:
    """gcd(f, f') constant; the smoothness criterion for odd y^2 = f(x)."""
    f = smallfield._trim(field, list(coeffs))
    g = smallfield._trim(field, list(_poly_deriv(field, coeffs)))
    return len(smallfield._pgcd(field, f, g)) == 1


def smoothness_char2(h, f, q: int | PrimePower) -> bool:
    """Whether Y^2 + HY = F is smooth in P(1,3,1) (q a power of 2).

    A singular point forces h(u) = 0 with u in a degree <= 3 subextension,
    v = sqrt(f(u)) there, and h'(u) v = f'(u); both affine charts are
    scanned (the second with reversed coefficients).  The curve misses the
    ambient singular point (0:1:0), where the equation reads 1 = 0.
    """
    pp = _as_pp(q)
    if pp.p != 2:
        raise ValueError("model applies to characteristic 2 only")
    F = _base(pp.p, pp.m)
    if all(c == F.zero for c in h):
        return False
    for k in (2, 3):
        K = _ext(pp.p, pp.m, k)
        for hc, fc in ((h, f), (tuple(reversed(h)), tuple(reversed(f)))):
            hk = tuple(K.embed(c) for c in hc)
            fk = tuple(K.embed(c) for c in fc)
            hd, fd = _poly_deriv(K, hk), _poly_deriv(K, fk)
            for u in K.elements():
                if _poly_eval(K, hk, u) != K.zero:
                    continue
                v = K.sqrt2(_poly_eval(K, fk, u))
                if K.mul(_poly_eval(K, hd, u), v) == _poly_eval(K, fd, u):
                    return False
    return True


def enumerate_curves(q: int | PrimePower, heavy: bool = False):
    """All smooth genus-2 models over F_q, in deterministic coefficient order.

    Reference generator (used for spot checks and sampling); the census
    itself runs the vectorized engine over the same enumeration.
    """
    pp = _check_supported(q, heavy)
    F = _base(pp.p, pp.m)
    els = [F.element_at(i) for i in range(F.order)]
    n = F.order
    if pp.p == 2:
        for hidx in range(1, n**4):
            h = tuple(els[(hidx // n**i) % n] for i in range(4))
            for fidx in range(n**7):
                f = tuple(els[(fidx // n**i) % n] for i in range(7))
                if smoothness_char2(h, f, pp):
                    yield CurveChar2(pp, h, f)
    else:
        for fidx in range(n**7):
            i6 = fidx // n**6
            i5 = (fidx // n**5) % n
            if i6 == 0 and i5 == 0:
                continue
            f = tuple(els[(fidx // n**i) % n] for i in range(7))
            if is_squarefree_poly(F, f):
                yield CurveOdd(pp, f)


def weil_from_counts(q: int | PrimePower, n1: int, n2: int) -> tuple[int, int]:
    """Recover (a, b) from #C(F_q) and #C(F_{q^2})."""
    pp = _as_pp(q)
    a = n1 - pp.q - 1
    t = a * a - (pp.q**2 + 1 - n2)
    if t % 2 != 0:
        raise ParityViolation(f"q={pp.q} N1={n1} N2={n2}")
    b = t // 2
    if not admissibility(WeilCoeffs(pp, a, b)).admissible:
        raise InadmissibleCount(f"q={pp.q} N1={n1} N2={n2} -> (a,b)=({a},{b})")
    return a, b


def census_record(curve: CurveOdd | CurveChar2) -> CensusRecord:
    n1 = count_points(curve, 1)
    n2 = count_points(curve, 2)
    a, b = weil_from_counts(curve.q, n1, n2)
    return CensusRecord(curve, n1, n2, a, b)


# ---------------------------------------------------------------------------
# vectorized engine
# ---------------------------------------------------------------------------
#
# Evaluation of f = sum_i f_i x^i at a fixed point u of K = F_{q^k} is
# F_p-linear in the prime-field digits of the f_i: writing f_i in the
# basis (beta_j) of F_q over F_p, the digits of f(u) are a fixed matrix
# (built from beta_j * u^i) times the digit vector of f.  A whole block of
# curves is then one integer matrix product.  Digit sums stay below 2^11,
# so float64 matmul is exact.


def _eval_matrix(Fq: Field, K: Field, ncoeff: int, deriv: bool = False) -> np.ndarray:
    m = Fq.total_degree
    dk = K.total_degree
    lift = (lambda c: c) if K is Fq else K.embed
    W = np.zeros((ncoeff * m, dk * K.order), dtype=np.float64)
    basis = [Fq.element_at(Fq.p**j) for j in range(m)]
    for iu, u in enumerate(K.elements()):
        for i in range(ncoeff):
            if deriv:
                if i == 0:
                    continue
                term = K.nmul(i, K.pow(u, i - 1))
            else:
                term = K.pow(u, i)
            for j, bj in enumerate(basis):
                val = K.mul(lift(bj), term)
                W[i * m + j, iu * dk : (iu + 1) * dk] = K.flatten(val)
    return W


def _digit_matrix(cols: list[np.ndarray], p: int, m: int) -> np.ndarray:
    D = np.empty((len(cols[0]), len(cols) * m), dtype=np.float64)
    for i, c in enumerate(cols):
        for j in range(m):
            D[:, i * m + j] = (c // p**j) % p
    return D


def _values(D: np.ndarray, W: np.ndarray, p: int, dk: int) -> np.ndarray:
    """Element indices of the evaluations: rows of D against point blocks of W."""
    V = np.asarray(D @ W, dtype=np.int64) % p
    V = V.reshape(len(D), -1, dk)
    pows = p ** np.arange(dk, dtype=np.int64)
    return V @ pows


def _pack(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) + 1024) * 1048576 + (b.astype(np.int64) + 524288)


def _unpack(key: int) -> tuple[int, int]:
    return int(key) // 1048576 - 1024, int(key) % 1048576 - 524288


def _tally(a: np.ndarray, b: np.ndarray) -> Counter:
    keys, counts = np.unique(_pack(a, b), return_counts=True)
    return Counter({_unpack(k): int(c) for k, c in zip(keys, counts)})


# -- odd characteristic -------------------------------------------------------


@lru_cache(maxsize=None)
def _odd_ctx(qint: int):
    pp = parse_prime_power(qint)
    Fq = _base(pp.p, pp.m)
    K2 = _ext(pp.p, pp.m, 2)
    q, p, m = pp.q, pp.p, pp.m
    chi1 = np.array([Fq.quadratic_character(x) for x in Fq.elements()], dtype=np.int64)
    chi2 = np.array([K2.quadratic_character(x) for x in K2.elements()], dtype=np.int64)
    mul = [0] * (q * q)
    sub = [0] * (q * q)
    inv = [0] * q
    els = [Fq.element_at(i) for i in range(q)]
    for x in range(q):
        for y in range(q):
            mul[x * q + y] = Fq.index_of(Fq.mul(els[x], els[y]))
            sub[x * q + y] = Fq.index_of(Fq.sub(els[x], els[y]))
        if x:
            inv[x] = Fq.index_of(Fq.inv(els[x]))
    smul = [[Fq.index_of(Fq.nmul(i, els[x])) for x in range(q)] for i in range(7)]
    return {
        "pp": pp,
        "W1": _eval_matrix(Fq, Fq, 7),
        "W2": _eval_matrix(Fq, K2, 7),
        "chi1": chi1,
        "chi2": chi2,
        "mul": mul,
        "sub": sub,
        "inv": inv,
        "smul": smul,
    }


def _gcd_is_const(f: list[int], g: list[int], q: int, mul, sub, inv) -> bool:
    """Whether gcd(f, g) is a nonzero constant (index-coded coefficients)."""
    while True:
        while g and g[-1] == 0:
            g.pop()
        if not g:
            return len(f) == 1
        if len(g) == 1:
            return True
        il = inv[g[-1]]
        lg = len(g)
        while len(f) >= lg:
            c = mul[f[-1] * q + il]
            if c:
                sh = len(f) - lg
                for i in range(lg - 1):
                    f[sh + i] = sub[f[sh + i] * q + mul[g[i] * q + c]]
            f.pop()
            while f and f[-1] == 0:
                f.pop()
        f, g = g, f


def _sqfree_mask(cols: list[list[int]], f5: int, f6: int, ctx) -> np.ndarray:
    q = ctx["pp"].q
    mul, sub, inv, smul = ctx["mul"], ctx["sub"], ctx["inv"], ctx["smul"]
    c0, c1, c2, c3, c4 = cols
    n = len(c0)
    out = np.zeros(n, dtype=bool)
    for r in range(n):
        f = [c0[r], c1[r], c2[r], c3[r], c4[r], f5, f6]
        if f6 == 0:
            f.pop()
        g = [smul[i][f[i]] for i in range(1, len(f))]
        out[r] = _gcd_is_const(f, g, q, mul, sub, inv)
    return out


def _odd_task(qint: int, f6: int, f5: int) -> tuple[Counter, int]:
    """Census tally for the block of curves with leading coefficients (f6, f5)."""
    ctx = _odd_ctx(qint)
    pp = ctx["pp"]
    q, p, m = pp.q, pp.p, pp.m
    chi1, chi2 = ctx["chi1"], ctx["chi2"]
    inf1 = 1 + int(chi1[f6]) if f6 else 1
    inf2 = 1 + int(chi2[f6]) if f6 else 1
    total = Counter()
    models = 0
    for start in range(0, q**5, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, q**5), dtype=np.int64)
        cols = [(idx // q**i) % q for i in range(5)]
        mask = _sqfree_mask([c.tolist() for c in cols], f5, f6, ctx)
        rows = np.flatnonzero(mask)
        if len(rows) == 0:
            continue
        models += len(rows)
        ccols = [c[rows] for c in cols]
        ccols.append(np.full(len(rows), f5, dtype=np.int64))
        ccols.append(np.full(len(rows), f6, dtype=np.int64))
        D = _digit_matrix(ccols, p, m)
        v1 = _values(D, ctx["W1"], p, m)
        s1 = chi1[v1].sum(axis=1)
        v2 = _values(D, ctx["W2"], p, 2 * m)
        s2 = chi2[v2].sum(axis=1)
        n1 = q + s1 + inf1
        n2 = q * q + s2 + inf2
        a = n1 - q - 1
        t = a * a - (q * q + 1 - n2)
        if np.any(t % 2 != 0):
            raise ParityViolation(f"q={q} block ({f6},{f5})")
        total += _tally(a, t // 2)
    return total, models


# -- characteristic 2 ---------------------------------------------------------


@lru_cache(maxsize=None)
def _char2_ctx(qint: int):
    pp = parse_prime_power(qint)
    F = _base(pp.p, pp.m)
    ctx = {"pp": pp, "K": {}}
    for k in (1, 2, 3):
        K = F if k == 1 else _ext(pp.p, pp.m, k)
        n = K.order
        mul2d = np.empty((n, n), dtype=np.int64)
        els = [K.element_at(i) for i in range(n)]
        for x in range(n):
            for y in range(n):
                mul2d[x, y] = K.index_of(K.mul(els[x], els[y]))
        trace = np.array([K.absolute_trace(x) for x in els], dtype=np.int64)
        sqrt = np.array([K.index_of(K.sqrt2(x)) for x in els], dtype=np.int64)
        invsq = np.zeros(n, dtype=np.int64)
        for x in range(1, n):
            invsq[x] = K.index_of(K.pow(K.inv(els[x]), 2))
        ctx["K"][k] = {
            "field": K,
            "mul": mul2d,
            "trace": trace,
            "sqrt": sqrt,
            "invsq": invsq,
            "Wf": _eval_matrix(F, K, 7),
            "Wfd": _eval_matrix(F, K, 7, deriv=True),
        }
    return ctx


def _h_values(F: Field, K: Field, h_idx: list[int], deriv: bool = False) -> list[int]:
    lift = (lambda c: c) if K is F else K.embed
    coeffs = tuple(lift(F.element_at(i)) for i in h_idx)
    if deriv:
        coeffs = _poly_deriv(K, coeffs)
    return [K.index_of(_poly_eval(K, coeffs, u)) for u in K.elements()]


def _char2_task(qint: int, hidx: int) -> tuple[Counter, int]:
    """Census tally for all f against one fixed h (index-coded, nonzero)."""
    ctx = _char2_ctx(qint)
    pp = ctx["pp"]
    q, p, m = pp.q, pp.p, pp.m
    F = _base(p, m)
    hi = [(hidx // q**i) % q for i in range(4)]
    # column permutation sending the digit block of f_i to that of f_{6-i}
    rev = [c for i in range(7) for c in range((6 - i) * m, (7 - i) * m)]

    total = Counter()
    models = 0
    for start in range(0, q**7, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, q**7), dtype=np.int64)
        cols = [(idx // q**i) % q for i in range(7)]
        D = _digit_matrix(cols, p, m)
        Drev = D[:, rev]
        smooth = np.ones(len(idx), dtype=bool)
        for k in (2, 3):
            tab = ctx["K"][k]
            K = tab["field"]
            dk = K.total_degree
            for hc, Dc in ((hi, D), (list(reversed(hi)), Drev)):
                hv = _h_values(F, K, hc)
                roots = [iu for iu, v in enumerate(hv) if v == 0]
                if not roots:
                    continue
                hd = _h_values(F, K, hc, deriv=True)
                colsel = np.concatenate([np.arange(iu * dk, (iu + 1) * dk) for iu in roots])
                fv = _values(Dc, tab["Wf"][:, colsel], p, dk)
                fd = _values(Dc, tab["Wfd"][:, colsel], p, dk)
                for j, iu in enumerate(roots):
                    sing = tab["mul"][hd[iu]][tab["sqrt"][fv[:, j]]] == fd[:, j]
                    smooth &= ~sing
        rows = np.flatnonzero(smooth)
        if len(rows) == 0:
            continue
        models += len(rows)
        Dm = D[rows]
        f6 = cols[6][rows]
        nk = []
        for k in (1, 2):
            tab = ctx["K"][k]
            K = tab["field"]
            hv = _h_values(F, K, hi)
            fv = _values(Dm, tab["Wf"], p, K.total_degree)
            n = np.zeros(len(rows), dtype=np.int64)
            for iu, hvu in enumerate(hv):
                if hvu == 0:
                    n += 1
                else:
                    u = tab["mul"][fv[:, iu], tab["invsq"][hvu]]
                    n += 2 * (1 - tab["trace"][u])
            # infinity: y^2 + h3 y = f6 (coefficients embed with unchanged index)
            h3 = hi[3]
            if h3 == 0:
                n += 1
            else:
                u = tab["mul"][f6, tab["invsq"][h3]]
                n += 2 * (1 - tab["trace"][u])
            nk.append(n)
        n1, n2 = nk
        a = n1 - q - 1
        t = a * a - (q * q + 1 - n2)
        if np.any(t % 2 != 0):
            raise ParityViolation(f"q={q} h={hidx}")
        total += _tally(a, t // 2)
    return total, models


# ---------------------------------------------------------------------------
# orchestration, cache, verification
# ---------------------------------------------------------------------------


def _worker(args):
    qint, task = args
    if parse_prime_power(qint).p == 2:
        return _char2_task(qint, task)
    return _odd_task(qint, *task)


def run_census(q: int | PrimePower, jobs: int = 1, heavy: bool = False) -> tuple[Counter, int]:
    """Count every smooth model; returns ((a, b) -> model count, total models)."""
    pp = _check_supported(q, heavy)
    qq = pp.q
    if pp.p == 2:
        tasks = [(qq, h) for h in range(1, qq**4)]
    else:
        tasks = [(qq, (f6, f5)) for f6 in range(qq) for f5 in range(qq) if f6 or f5]
    if jobs <= 1:
        results = [_worker(t) for t in tasks]
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_worker, tasks, chunksize=1)
    counts: Counter = Counter()
    models = 0
    for c, n in results:
        counts += c
        models += n
    for a, b in counts:
        if not admissibility(WeilCoeffs(pp, a, b)).admissible:
            raise InadmissibleCount(f"q={qq}: census produced inadmissible ({a},{b})")
    return counts, models


def cache_path(q: int | PrimePower, cache_dir: str | os.PathLike | None = None) -> Path:
    pp = _as_pp(q)
    root = os.environ.get("WEIL_CACHE_DIR") or cache_dir or "census-cache"
    return Path(root) / f"census-q{pp.q}.jsonl"


def load_cache(path: Path, pp: PrimePower) -> tuple[Counter, int] | None:
    """Parse a census cache file; None when missing or stale."""
    try:
        lines = path.read_text().splitlines()
        head = json.loads(lines[0])
        if (head["q"], head["p"], head["m"], head["version"]) != (pp.q, pp.p, pp.m, CACHE_VERSION):
            return None
        counts = Counter()
        for line in lines[1:]:
            rec = json.loads(line)
            counts[(rec["a"], rec["b"])] = rec["count"]
        if sum(counts.values()) != head["models"]:
            return None
        return counts, head["models"]
    except (OSError, ValueError, KeyError, IndexError):
        return None


def write_cache(path: Path, pp: PrimePower, counts: Counter, models: int) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        json.dumps(
            {"q": pp.q, "p": pp.p, "m": pp.m, "models": models, "version": CACHE_VERSION},
            separators=(",", ":"),
        )
    ]
    for (a, b) in sorted(counts):
        lines.append(
            json.dumps({"a": a, "b": b, "count": counts[(a, b)]}, separators=(",", ":"))
        )
    path.write_text("\n".join(lines) + "\n")


def census_counts(
    q: int | PrimePower,
    cache_dir: str | os.PathLike | None = None,
    force: bool = False,
    jobs: int = 1,
    heavy: bool = False,
) -> tuple[Counter, int, bool]:
    """Cached census tally: (counts, models, came_from_cache)."""
    pp = _check_supported(q, heavy)
    path = cache_path(pp, cache_dir)
    if not force:
        cached = load_cache(path, pp)
        if cached is not None:
            return cached[0], cached[1], True
    counts, models = run_census(pp, jobs=jobs, heavy=heavy)
    write_cache(path, pp, counts, models)
    return counts, models, False


def census_weil_set(
    q: int | PrimePower,
    cache_dir: str | os.PathLike | None = None,
    force: bool = False,
    jobs: int = 1,
    heavy: bool = False,
) -> set[tuple[int, int]]:
    """The set of (a, b) realized by at least one smooth genus-2 model."""
    counts, _, _ = census_counts(q, cache_dir, force, jobs, heavy)
    return set(counts)


def predicted_weil_set(q: int | PrimePower) -> set[tuple[int, int]]:
    """What the classification says the census must find: admissible Jacobians."""
    pp = _as_pp(q)
    out = set()
    for a, b in coefficient_rectangle(pp):
        w = WeilCoeffs(pp, a, b)
        if admissibility(w).admissible and is_jacobian(w):
            out.add((a, b))
    return out


def sample_curves(q: int | PrimePower, n: int, heavy: bool = False):
    """n smooth models drawn by a deterministic seeded search."""
    pp = _check_supported(q, heavy)
    F = _base(pp.p, pp.m)
    els = [F.element_at(i) for i in range(F.order)]
    rng = random.Random(f"census-sample-{pp.q}")
    out = []
    while len(out) < n:
        f = tuple(rng.choice(els) for _ in range(7))
        if pp.p == 2:
            h = tuple(rng.choice(els) for _ in range(4))
            if all(c == F.zero for c in h) or not smoothness_char2(h, f, pp):
                continue
            out.append(CurveChar2(pp, h, f))
        else:
            if f[6] == F.zero and f[5] == F.zero:
                continue
            if not is_squarefree_poly(F, f):
                continue
            out.append(CurveOdd(pp, f))
    return out


def verify_census(
    q: int | PrimePower,
    cache_dir: str | os.PathLike | None = None,
    force: bool = False,
    jobs: int = 1,
    heavy: bool = False,
    zeta_samples: int = 50,
) -> CensusReport:
    """Census vs classification, plus per-curve zeta spot checks.

    Raises VerificationFailure (with the offending evidence) whenever the
    realized (a, b) set differs from the predicted one, a realized pair is
    inadmissible, or a sampled curve's F_{q^3} count disagrees with the
    count implied by its own (a, b).
    """
    pp = _check_supported(q, heavy)
    counts, models, _ = census_counts(pp, cache_dir, force, jobs, heavy)
    realized = frozenset(counts)
    for a, b in sorted(realized):
        if not admissibility(WeilCoeffs(pp, a, b)).admissible:
            raise VerificationFailure(f"q={pp.q}: realized pair ({a},{b}) not admissible")
    predicted = frozenset(predicted_weil_set(pp))
    if realized != predicted:
        raise VerificationFailure(
            f"q={pp.q}: census/classification mismatch; "
            f"census-only={sorted(realized - predicted)} "
            f"classification-only={sorted(predicted - realized)}"
        )
    checked = 0
    for curve in sample_curves(pp, zeta_samples, heavy):
        rec = census_record(curve)
        w = WeilCoeffs(pp, rec.a, rec.b)
        n3 = count_points(curve, 3)
        want = predicted_curve_count(w, 3)
        if n3 != want:
            raise VerificationFailure(
                f"q={pp.q}: zeta mismatch on {curve!r}: N3={n3}, implied {want}"
            )
        checked += 1
    return CensusReport(pp.q, models, realized, predicted, checked)

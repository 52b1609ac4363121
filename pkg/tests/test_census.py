import json
from collections import Counter

import pytest

from weil2.arith import parse_prime_power
from weil2.census import (
    CurveChar2,
    CurveOdd,
    InadmissibleCount,
    ParityViolation,
    UnsupportedQ,
    cache_path,
    census_counts,
    census_record,
    census_weil_set,
    count_points,
    enumerate_curves,
    is_squarefree_poly,
    load_cache,
    predicted_weil_set,
    run_census,
    sample_curves,
    smoothness_char2,
    verify_census,
    weil_from_counts,
)
from weil2.smallfield import base_field
from weil2.weil import WeilCoeffs, predicted_curve_count

PP2 = parse_prime_power(2)
PP3 = parse_prime_power(3)


@pytest.fixture(scope="module")
def census2():
    return run_census(2)


@pytest.fixture(scope="module")
def census3():
    return run_census(3)


def test_smoothness_char2_examples():
    assert smoothness_char2((1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0), 2)
    assert not smoothness_char2((0, 1, 0, 0), (0, 0, 0, 0, 0, 1, 0), 2)
    assert not smoothness_char2((0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0), 2)
    # a reducible model Y(Y + H) = 0 is always singular
    assert not smoothness_char2((1, 1, 0, 1), (0, 0, 0, 0, 0, 0, 0), 2)


def test_count_points_examples():
    assert count_points(CurveOdd(PP3, (0, 1, 0, 0, 0, 1, 0)), 1) == 4
    assert count_points(CurveOdd(parse_prime_power(5), (1, 0, 0, 0, 0, 1, 0)), 1) == 6
    c = CurveChar2(PP2, (1, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0))
    assert count_points(c, 1) == 3
    assert count_points(c, 2) == 5


def test_weil_from_counts():
    assert weil_from_counts(2, 3, 5) == (0, 0)
    assert weil_from_counts(3, 4, 14) == (0, 2)  # y^2 = x^5 + x over F_3
    for q in (2, 3, 7):
        assert weil_from_counts(q, q + 1, q * q + 1) == (0, 0)
    with pytest.raises(ParityViolation):
        weil_from_counts(2, 3, 6)
    with pytest.raises(InadmissibleCount):
        weil_from_counts(2, 10, 0)


def test_census_record_roundtrip():
    c = CurveOdd(PP3, (0, 1, 0, 0, 0, 1, 0))
    r = census_record(c)
    assert (r.n1, r.n2, r.a, r.b) == (4, 14, 0, 2)
    # the pair must predict its own counts back
    w = WeilCoeffs(PP3, r.a, r.b)
    assert predicted_curve_count(w, 1) == r.n1
    assert predicted_curve_count(w, 2) == r.n2


def test_unsupported_q():
    with pytest.raises(UnsupportedQ):
        census_weil_set(11)
    with pytest.raises(UnsupportedQ):
        list(enumerate_curves(12 // 2 + 5))
    with pytest.raises(UnsupportedQ):
        run_census(4)  # heavy without opt-in
    with pytest.raises(UnsupportedQ):
        run_census(13)


def test_candidate_counts():
    # odd q: leading coefficient of x^5 or x^6 nonzero
    assert 3**7 - 3**5 == 1944
    n_all = sum(1 for _ in _odd_candidates(3))
    assert n_all == 1944
    # q = 2: 15 nonzero h times 128 f
    assert sum(1 for _ in _char2_candidates(2)) == 1920


def _odd_candidates(q):
    F = base_field(q)
    els = list(F.elements())
    for fidx in range(q**7):
        f = tuple(els[(fidx // q**i) % q] for i in range(7))
        if f[6] == F.zero and f[5] == F.zero:
            continue
        yield f


def _char2_candidates(q):
    pp = parse_prime_power(q)
    F = base_field(pp.p, pp.m)
    els = list(F.elements())
    n = F.order
    for hidx in range(1, n**4):
        h = tuple(els[(hidx // n**i) % n] for i in range(4))
        for fidx in range(n**7):
            yield h, tuple(els[(fidx // n**i) % n] for i in range(7))


def test_batch_equals_reference_q2(census2):
    counts, models = census2
    ref = Counter()
    for cur in enumerate_curves(2):
        r = census_record(cur)
        ref[(r.a, r.b)] += 1
    assert counts == ref
    assert models == sum(ref.values()) == 768


def test_batch_equals_reference_q3(census3):
    counts, models = census3
    ref = Counter()
    for cur in enumerate_curves(3):
        r = census_record(cur)
        ref[(r.a, r.b)] += 1
    assert counts == ref
    assert models == 1296


def test_realized_sets_match_paper_facts(census2):
    counts, _ = census2
    got = set(counts)
    assert (1, 0) in got
    assert (0, 3) not in got
    for pair in ((-2, 5), (1, 4), (2, 5), (3, 6)):
        assert pair not in got
    assert got == predicted_weil_set(2)


def test_smoothness_subextension_scan_equals_full_closure_scan():
    # the singular-point search is confined to F_{q^2} and F_{q^3}; the
    # obligation is that scanning all of F_{q^6} finds nothing more
    F64 = base_field(2, 6)
    n = F64.order
    els = [F64.element_at(i) for i in range(n)]
    mul = [[F64.index_of(F64.mul(a, b)) for b in els] for a in els]
    sqrt = [F64.index_of(F64.sqrt2(a)) for a in els]
    # index-coded evaluation tables: powers[i][u] = index of els[u]^i
    powers = [[F64.index_of(F64.pow(u, i)) for u in els] for i in range(7)]

    def eval_idx(coeffs, u):
        # addition in characteristic 2 is xor of digit indices; the F_2
        # scalars 0/1 keep their index when embedded
        acc = 0
        for i, c in enumerate(coeffs):
            if c:
                acc ^= powers[i][u]
        return acc

    def full_scan_smooth(h, f):
        for hc, fc in ((h, f), (tuple(reversed(h)), tuple(reversed(f)))):
            hd = tuple((i + 1) % 2 * c for i, c in enumerate(hc[1:]))  # char-2 derivative
            fd = tuple((i + 1) % 2 * c for i, c in enumerate(fc[1:]))
            for u in range(n):
                if eval_idx(hc, u):
                    continue
                v = sqrt[eval_idx(fc, u)]
                if mul[eval_idx(hd, u)][v] == eval_idx(fd, u):
                    return False
        return True

    mismatches = []
    for h, f in _char2_candidates(2):
        if smoothness_char2(h, f, 2) != full_scan_smooth(h, f):
            mismatches.append((h, f))
    assert mismatches == []


def test_cache_roundtrip_and_determinism(tmp_path, census3):
    counts, models = census3
    s = census_weil_set(3, cache_dir=tmp_path)
    assert s == set(counts)
    path = cache_path(3, tmp_path)
    text1 = path.read_text()
    head = json.loads(text1.splitlines()[0])
    assert head == {"q": 3, "p": 3, "m": 1, "models": models, "version": 1}
    # reuse is a no-op
    _, _, cached = census_counts(3, cache_dir=tmp_path)
    assert cached
    # jobs > 1 and force produce byte-identical output
    census_counts(3, cache_dir=tmp_path, force=True, jobs=2)
    assert path.read_text() == text1
    loaded = load_cache(path, PP3)
    assert loaded == (counts, models)
    # a stale header invalidates
    path.write_text(text1.replace('"q":3', '"q":5'))
    assert load_cache(path, PP3) is None


def test_sample_curves_deterministic():
    a = sample_curves(3, 10)
    b = sample_curves(3, 10)
    assert a == b
    assert all(isinstance(c, CurveOdd) for c in a)
    F3 = base_field(3)
    for c in a:
        assert is_squarefree_poly(F3, c.f)
    c2 = sample_curves(2, 5)
    assert all(smoothness_char2(c.h, c.f, 2) for c in c2)


def test_verify_census_q3(tmp_path):
    rep = verify_census(3, cache_dir=tmp_path)
    assert rep.q == 3
    assert rep.weil_set == rep.predicted_set
    assert rep.zeta_checked == 50
    assert rep.models == 1296

"""Exact arithmetic in small finite fields and their tower extensions.

Fields are built as towers: a prime field F_p, then extensions of
extensions, each defined by a monic irreducible modulus found by
deterministic exhaustive search.  Elements are plain values -- an int in
[0, p) for the prime field, a fixed-length tuple of base-field elements
for an extension -- so they hash, compare and pickle with no ceremony.

Every element has a canonical index in [0, order): the base-p positional
encoding of its coordinate digits.  Because a base-field element embeds as
a constant vector, its index is unchanged by embedding, which the census
relies on when lifting curve coefficients into extension fields.

The size guard caps towers at total degree 12 over the prime field (the
largest field the census ever touches is F_{4^6} = F_4096).
"""

from __future__ import annotations

from functools import reduce


class SizeGuard(ValueError):
    """Requested extension exceeds the supported field size."""


class EvenCharacteristic(ValueError):
    pass


class OddCharacteristic(ValueError):
    pass


MAX_TOTAL_DEGREE = 12


class Field:
    """A finite field, either F_p or a degree-k extension of another Field."""

    def __init__(self, p: int, base: "Field | None" = None, modulus: tuple | None = None):
        self.p = p
        self.base = base
        if base is None:
            self.degree = 1
            self.total_degree = 1
            self.order = p
            self.modulus = None
            self.zero = 0
            self.one = 1
        else:
            assert modulus is not None and modulus[-1] == base.one
            self.degree = len(modulus) - 1
            self.total_degree = base.total_degree * self.degree
            self.order = base.order**self.degree
            self.modulus = tuple(modulus)
            self.zero = (base.zero,) * self.degree
            self.one = (base.one,) + (base.zero,) * (self.degree - 1)
            # reduction vectors for x^j, j = degree .. 2*degree-2
            self._xpow = self._reduction_table()
        self._squares = None
        if p != 2:
            self._squares = frozenset(self.mul(x, x) for x in self.elements())

    def __repr__(self):
        return f"Field(order={self.order}, p={self.p})"

    # -- enumeration and indexing ------------------------------------------

    def elements(self):
        """All elements exactly once, in index order."""
        return (self.element_at(i) for i in range(self.order))

    def element_at(self, i: int):
        if self.base is None:
            return i
        b = self.base
        return tuple(b.element_at((i // b.order**j) % b.order) for j in range(self.degree))

    def index_of(self, x) -> int:
        if self.base is None:
            return x
        b = self.base
        return sum(b.index_of(c) * b.order**j for j, c in enumerate(x))

    def flatten(self, x) -> tuple[int, ...]:
        """Prime-field digits of x in the tower product basis."""
        if self.base is None:
            return (x,)
        return reduce(lambda acc, c: acc + self.base.flatten(c), x, ())

    def embed(self, c):
        """Lift a base-field element into this field as a constant."""
        if self.base is None:
            raise ValueError("prime field has no base to embed from")
        return (c,) + (self.base.zero,) * (self.degree - 1)

    # -- arithmetic ---------------------------------------------------------

    def add(self, x, y):
        if self.base is None:
            return (x + y) % self.p
        b = self.base
        return tuple(b.add(u, v) for u, v in zip(x, y))

    def neg(self, x):
        if self.base is None:
            return (-x) % self.p
        return tuple(self.base.neg(u) for u in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if self.base is None:
            return (x * y) % self.p
        b = self.base
        k = self.degree
        conv = [b.zero] * (2 * k - 1)
        for i, u in enumerate(x):
            if u == b.zero:
                continue
            for j, v in enumerate(y):
                conv[i + j] = b.add(conv[i + j], b.mul(u, v))
        out = conv[:k]
        for j in range(k, 2 * k - 1):
            cj = conv[j]
            if cj == b.zero:
                continue
            red = self._xpow[j - k]
            for i in range(k):
                out[i] = b.add(out[i], b.mul(cj, red[i]))
        return tuple(out)

    def nmul(self, n: int, x):
        """n-fold sum of x (n an ordinary integer)."""
        n %= self.p
        out = self.zero
        for _ in range(n):
            out = self.add(out, x)
        return out

    def inv(self, x):
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(x, self.order - 2)

    def pow(self, x, n: int):
        if n < 0:
            return self.pow(self.inv(x), -n)
        out = self.one
        acc = x
        while n:
            if n & 1:
                out = self.mul(out, acc)
            acc = self.mul(acc, acc)
            n >>= 1
        return out

    def _reduction_table(self):
        # x^degree = -(m_0 + ... + m_{degree-1} x^{degree-1}), then climb
        b = self.base
        k = self.degree
        top = [b.neg(c) for c in self.modulus[:k]]
        table = [list(top)]
        for _ in range(k - 2):
            prev = table[-1]
            nxt = [b.zero] + prev[: k - 1]
            lead = prev[k - 1]
            if lead != b.zero:
                for i in range(k):
                    nxt[i] = b.add(nxt[i], b.mul(lead, top[i]))
            table.append(nxt)
        return [tuple(row) for row in table]

    # -- characters ---------------------------------------------------------

    def quadratic_character(self, c) -> int:
        """0 for c = 0, +1 for a nonzero square, -1 otherwise (odd p only)."""
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd characteristic")
        if c == self.zero:
            return 0
        return 1 if c in self._squares else -1

    def sqrt2(self, c):
        """The unique square root in characteristic 2 (squaring is bijective)."""
        if self.p != 2:
            raise OddCharacteristic("unique square roots need characteristic 2")
        return self.pow(c, self.order // 2)

    def absolute_trace(self, c) -> int:
        """Trace to F_2: c + c^2 + ... + c^(2^(d-1)); returns 0 or 1."""
        if self.p != 2:
            raise OddCharacteristic("absolute trace implemented for characteristic 2")
        acc = c
        t = c
        for _ in range(self.total_degree - 1):
            acc = self.mul(acc, acc)
            t = self.add(t, acc)
        return 1 if t == self.one else 0


def base_field(p: int, m: int = 1) -> Field:
    """F_{p^m}, built as a degree-m extension of F_p when m > 1."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > MAX_TOTAL_DEGREE:
        raise SizeGuard(f"degree {m} exceeds the cap of {MAX_TOTAL_DEGREE}")
    f = Field(p)
    return f if m == 1 else extend(f, m)


def extend(field: Field, k: int) -> Field:
    """Degree-k extension of ``field``, with a deterministically chosen modulus."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if field.total_degree * k > MAX_TOTAL_DEGREE:
        raise SizeGuard(
            f"degree {field.total_degree * k} over F_{field.p} exceeds "
            f"the cap of {MAX_TOTAL_DEGREE}"
        )
    if k == 1:
        return field
    for idx in range(field.order**k):
        coeffs = tuple(
            field.element_at((idx // field.order**j) % field.order) for j in range(k)
        )
        g = coeffs + (field.one,)
        if _is_irreducible(field, g):
            return Field(field.p, base=field, modulus=g)
    raise AssertionError("no irreducible modulus found")  # impossible


# -- polynomial helpers over a Field (coefficient lists, low to high) --------


def _trim(field: Field, f: list) -> list:
    while f and f[-1] == field.zero:
        f.pop()
    return f


def _pmul(field: Field, f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, u in enumerate(f):
        if u == field.zero:
            continue
        for j, v in enumerate(g):
            out[i + j] = field.add(out[i + j], field.mul(u, v))
    return _trim(field, out)


def _pmod(field: Field, f: list, g: list) -> list:
    f = list(f)
    inv_lead = field.inv(g[-1])
    while len(f) >= len(g):
        coef = field.mul(f[-1], inv_lead)
        shift = len(f) - len(g)
        if coef != field.zero:
            for i, v in enumerate(g):
                f[shift + i] = field.sub(f[shift + i], field.mul(coef, v))
        f.pop()
        _trim(field, f)
        if not f:
            break
    return f


def _pgcd(field: Field, f: list, g: list) -> list:
    f, g = _trim(field, list(f)), _trim(field, list(g))
    while g:
        f, g = g, _pmod(field, f, g)
    return f


def _ppow_mod(field: Field, f: list, n: int, g: list) -> list:
    out = [field.one]
    acc = _pmod(field, list(f), g)
    while n:
        if n & 1:
            out = _pmod(field, _pmul(field, out, acc), g)
        acc = _pmod(field, _pmul(field, acc, acc), g)
        n >>= 1
    return out


def _is_irreducible(field: Field, g: tuple) -> bool:
    """Rabin's test for a monic polynomial of degree >= 2 over ``field``."""
    k = len(g) - 1
    glist = list(g)
    x = [field.zero, field.one]
    # x^(Q^d) mod g for d = 1..k by iterated Q-th powers
    frob = {}
    t = x
    for d in range(1, k + 1):
        t = _ppow_mod(field, t, field.order, glist)
        frob[d] = t
    if _trim(field, [field.sub(u, v) for u, v in _zip_pad(field, frob[k], x)]):
        return False
    for r in _prime_divisors_small(k):
        diff = [field.sub(u, v) for u, v in _zip_pad(field, frob[k // r], x)]
        if len(_pgcd(field, glist, _trim(field, diff))) != 1:
            return False
    return True


def _zip_pad(field: Field, f: list, g: list):
    n = max(len(f), len(g))
    f = f + [field.zero] * (n - len(f))
    g = g + [field.zero] * (n - len(g))
    return zip(f, g)


def _prime_divisors_small(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

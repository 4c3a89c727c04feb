"""Finite fields F_p and towers F_p < F_q < F_{q^r} with table arithmetic.

Elements are plain integers: the coordinate vector over the base field
(power basis, lowest degree first) read as a base-|base| number.  Because
every stage is encoded this way, an element of any tower stage is also a
base-p number whose digits are its coordinates over the prime field, so
addition is carry-less digitwise addition mod p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .caps import Caps, default_caps


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q == p**e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


class Field:
    """A finite field with precomputed addition/multiplication tables.

    Construct through :func:`field_make` or :func:`make_extension`; both
    cache, so a given construction always yields the same object.
    """

    def __init__(self, p: int, base: Field | None, degree: int,
                 modulus: tuple[int, ...] | None):
        self.p = p
        self.base = base
        self.degree = degree
        self.modulus = modulus
        self.order = p if base is None else base.order ** degree
        self.abs_degree = 1 if base is None else base.abs_degree * degree
        if base is None:
            add, mul = _prime_tables(p)
        else:
            add, mul = _extension_tables(base, modulus)
        self._add = _frozen(add)
        self._mul = _frozen(mul)
        zero_cols = np.argmax(add == 0, axis=1)
        self._neg = _frozen(zero_cols)
        inv = np.zeros(self.order, dtype=np.int64)
        inv[1:] = np.argmax(mul[1:] == 1, axis=1)
        self._inv = _frozen(inv)

    @property
    def kind(self) -> str:
        return "prime" if self.base is None else "extension"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def prime_field(self) -> Field:
        f = self
        while f.base is not None:
            f = f.base
        return f

    @property
    def add_table(self) -> np.ndarray:
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul

    @property
    def neg_table(self) -> np.ndarray:
        return self._neg

    @property
    def inv_table(self) -> np.ndarray:
        return self._inv

    # integer-level arithmetic

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self._add[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self._add[self._check(a), self._neg[self._check(b)]])

    def mul(self, a: int, b: int) -> int:
        return int(self._mul[self._check(a), self._check(b)])

    def neg(self, a: int) -> int:
        return int(self._neg[self._check(a)])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        a = self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = int(self._mul[out, a])
            a = int(self._mul[a, a])
            e >>= 1
        return out

    def multiplicative_order(self, a: int) -> int:
        if self._check(a) == 0:
            raise ValueError("zero has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = int(self._mul[x, a])
            k += 1
        return k

    # coordinates over the base field

    def coords(self, a: int) -> tuple[int, ...]:
        a = self._check(a)
        if self.base is None:
            return (a,)
        Q = self.base.order
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, Q)
            out.append(d)
        return tuple(out)

    def from_coords(self, v) -> int:
        v = [int(x) for x in v]
        if len(v) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(v)}")
        Q = self.order if self.base is None else self.base.order
        if any(not 0 <= x < Q for x in v):
            raise ValueError(f"coordinate out of range for base of order {Q}")
        out = 0
        for x in reversed(v):
            out = out * Q + x
        return out

    def elem(self, value: int) -> Elem:
        return Elem(self, self._check(value))

    def elements(self):
        return (Elem(self, a) for a in range(self.order))

    def primitive_element(self) -> int:
        return primitive_element(self)

    # identity

    @property
    def descriptor(self) -> str:
        if self.base is None:
            return f"p={self.p};deg=1"
        head = self.base.descriptor
        if self.base.base is None:
            head = f"p={self.p}"
        mod = ",".join(str(c) for c in self.modulus)
        return f"{head};deg={self.degree};mod=[{mod}]"

    def __repr__(self) -> str:
        return f"Field(order={self.order}, {self.descriptor})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __contains__(self, elem) -> bool:
        return isinstance(elem, Elem) and elem.field == self


@dataclass(frozen=True)
class Elem:
    field: Field
    value: int

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def _other(self, other) -> int:
        if isinstance(other, Elem):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, int):
            return self.field._check(other)
        raise TypeError(f"cannot combine Elem with {type(other).__name__}")

    def __add__(self, other):
        return Elem(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return Elem(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return Elem(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return Elem(self.field, self.field.div(self.value, self._other(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return Elem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return Elem(self.field, self.field.pow(self.value, e))

    def inv(self) -> Elem:
        return Elem(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"Elem({self.value}, order={self.field.order})"


def arith(a: Elem, b: Elem, op: str) -> Elem:
    ops = {"add": Elem.__add__, "sub": Elem.__sub__,
           "mul": Elem.__mul__, "div": Elem.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    if a.field != b.field:
        raise ValueError("field mismatch")
    return ops[op](a, b)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


def _prime_tables(p: int):
    idx = np.arange(p, dtype=np.int64)
    return (idx[:, None] + idx[None, :]) % p, (idx[:, None] * idx[None, :]) % p


def _extension_tables(base: Field, modulus: tuple[int, ...]):
    Q, d = base.order, len(modulus) - 1
    N = Q ** d
    badd, bmul, bneg = base._add, base._mul, base._neg
    idx = np.arange(N, dtype=np.int64)
    digits = np.stack([(idx // Q ** i) % Q for i in range(d)], axis=1)
    weights = Q ** np.arange(d, dtype=np.int64)
    low = np.asarray(modulus[:d], dtype=np.int64)

    # shifted[i] = coordinates of a * x**i for every a
    shifted = [digits]
    for _ in range(1, d):
        prev = shifted[-1]
        top = bneg[prev[:, d - 1]]
        nxt = np.concatenate([np.zeros((N, 1), dtype=np.int64), prev[:, :d - 1]], axis=1)
        nxt = badd[nxt, bmul[top[:, None], low[None, :]]]
        shifted.append(nxt)

    add = np.empty((N, N), dtype=np.int64)
    mul = np.empty((N, N), dtype=np.int64)
    for b in range(N):
        add[:, b] = badd[digits, digits[b][None, :]] @ weights
        acc = np.zeros((N, d), dtype=np.int64)
        for i in range(d):
            coef = digits[b, i]
            if coef:
                acc = badd[acc, bmul[coef, shifted[i]]]
        mul[:, b] = acc @ weights
    return add, mul


# polynomials over a field: coefficient lists, lowest degree first

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, b, field: Field) -> list[int]:
    """Remainder of a modulo b (b nonzero) over ``field``."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = field.inv(b[-1])
    while len(a) >= len(b):
        factor = field.mul(a[-1], lead_inv)
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(factor, c))
        _poly_trim(a)
    return a


def _monic_polys(field: Field, degree: int):
    """Monic polynomials of a degree, in increasing integer encoding."""
    for low in itertools.product(range(field.order), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(poly, field: Field) -> bool:
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(field, d):
            if not poly_mod(poly, f, field):
                return False
    return True


def smallest_irreducible(field: Field, degree: int) -> tuple[int, ...]:
    # _monic_polys yields in integer order of the little-endian coefficient vector
    for low_int in range(field.order ** degree):
        coeffs = []
        t = low_int
        for _ in range(degree):
            t, c = divmod(t, field.order)
            coeffs.append(c)
        poly = coeffs + [1]
        if is_irreducible(poly, field):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


_PRIME_CACHE: dict[int, Field] = {}
_EXT_CACHE: dict[tuple[str, int], Field] = {}


def prime_field(p: int) -> Field:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p not in _PRIME_CACHE:
        _PRIME_CACHE[p] = Field(p, None, 1, None)
    return _PRIME_CACHE[p]


def make_extension(base: Field, degree: int, caps: Caps | None = None) -> Field:
    """Extension of ``base`` of the given degree; degree 1 returns ``base``."""
    if degree < 1:
        raise ValueError("extension degree must be positive")
    if degree == 1:
        return base
    caps = caps or default_caps()
    caps.check("field_order", base.order ** degree, "field order")
    key = (base.descriptor, degree)
    if key not in _EXT_CACHE:
        modulus = smallest_irreducible(base, degree)
        _EXT_CACHE[key] = Field(base.p, base, degree, modulus)
    return _EXT_CACHE[key]


def field_make(p: int, degrees, caps: Caps | None = None) -> Field:
    """Build the tower F_p < F_{p^d1} < F_{p^(d1 d2)} < ... stage by stage."""
    degrees = list(degrees)
    if not degrees:
        raise ValueError("degrees must be nonempty")
    if any(int(d) < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    caps = caps or default_caps()
    total = 1
    for d in degrees:
        total *= int(d)
    if is_prime(p):
        caps.check("field_order", p ** total, "field order")
    f = prime_field(p)
    for d in degrees:
        f = make_extension(f, int(d), caps)
    return f


def parse_descriptor(text: str, caps: Caps | None = None) -> Field:
    """Inverse of :attr:`Field.descriptor`."""
    parts = [s.strip() for s in text.split(";") if s.strip()]
    if not parts or not parts[0].startswith("p="):
        raise ValueError(f"bad field descriptor {text!r}")
    f = prime_field(int(parts[0][2:]))
    rest = parts[1:]
    if rest and rest[0] == "deg=1":
        rest = rest[1:]
    if len(rest) % 2:
        raise ValueError(f"bad field descriptor {text!r}")
    for deg_part, mod_part in zip(rest[::2], rest[1::2]):
        degree = int(deg_part.removeprefix("deg="))
        mod = tuple(int(c) for c in mod_part.removeprefix("mod=").strip("[]").split(","))
        f = make_extension(f, degree, caps)
        if f.modulus != mod:
            raise ValueError(f"modulus {mod} does not match the canonical {f.modulus}")
    return f


def primitive_element(F: Field) -> int:
    """Least element (canonical order) of multiplicative order |F| - 1."""
    target = F.order - 1
    for a in range(1, F.order):
        if F.multiplicative_order(a) == target:
            return a
    raise AssertionError("finite field without a primitive element")


def frobenius_fixed(F: Field, k: int) -> list[int]:
    """Elements with x**k == x."""
    return [x for x in range(F.order) if F.pow(x, k) == x]


class Embedding:
    """Field homomorphism small -> big fixing the common base pointwise."""

    def __init__(self, small: Field, big: Field, table: np.ndarray):
        self.small = small
        self.big = big
        self.table = _frozen(table)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def image(self) -> list[int]:
        return sorted(int(v) for v in self.table)

    def map_array(self, arr: np.ndarray) -> np.ndarray:
        return self.table[np.asarray(arr, dtype=np.int64)]


def subfield_embedding(big: Field, r: int, caps: Caps | None = None) -> Embedding:
    """Embed the degree-r extension of ``big.base`` into ``big``."""
    if big.base is None:
        if r != 1:
            raise ValueError("a prime field has no proper subfield extension")
        return Embedding(big, big, np.arange(big.order))
    if r < 1 or big.degree % r:
        raise ValueError(f"r={r} does not divide the extension degree {big.degree}")
    base = big.base
    if r == 1:
        return Embedding(base, big, np.arange(base.order))
    if r == big.degree:
        return Embedding(big, big, np.arange(big.order))
    small = make_extension(base, r, caps)
    g = primitive_element(small)
    powers_g = [1]
    for _ in range(small.order - 2):
        powers_g.append(small.mul(powers_g[-1], g))
    target = small.order - 1
    for h in range(1, big.order):
        if big.multiplicative_order(h) != target:
            continue
        table = np.zeros(small.order, dtype=np.int64)
        x = 1
        for k in range(target):
            table[powers_g[k]] = x
            x = big.mul(x, h)
        if any(table[c] != c for c in range(base.order)):
            continue
        sadd, badd = small._add, big._add
        if np.array_equal(table[sadd], badd[table[:, None], table[None, :]]):
            return Embedding(small, big, table)
    raise AssertionError("no embedding found")  # would indicate a construction bug

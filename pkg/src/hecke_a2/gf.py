"""Finite fields F_{p^k}.

An element is stored as an integer *code*: the coordinates ``(c_0, ..., c_{k-1})``
in the power basis of the modulus are packed as ``sum(c_i * p**i)``.  For a
prime field the code is simply the residue.  Codes make it cheap to keep whole
matrices in numpy integer arrays; :class:`FieldSpec` provides both scalar and
vectorised arithmetic on them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import (DegreeMismatch, DivisionByZero, FieldMismatch, NonPrime,
                     Reducible, TooLarge)

MAX_EXTENSION_ORDER = 1 << 16
SMALL_TABLE_ORDER = 256  # full q x q operation tables up to this order
FMA_TABLE_ORDER = 16

# Conway polynomials, coefficients low degree first.
CONWAY = {
    (2, 1): (1, 1), (2, 2): (1, 1, 1), (2, 3): (1, 1, 0, 1),
    (3, 1): (1, 1), (3, 2): (2, 2, 1), (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1), (5, 2): (2, 4, 1), (5, 3): (3, 3, 0, 1),
    (7, 1): (4, 1), (7, 2): (3, 6, 1), (7, 3): (4, 0, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- polynomials over F_p as coefficient lists, low degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    m = _trim([x % p for x in m])
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    for low in product(range(p), repeat=deg):
        yield list(low) + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not _polymod(modulus, f, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field F_p[x]/(modulus) of order p**k.

    Construction validates everything (primality, degree, monic, irreducible),
    so any instance in circulation is a genuine field.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        if self.k < 1 or len(self.modulus) != self.k + 1:
            raise DegreeMismatch(
                f"modulus {list(self.modulus)} does not have degree k={self.k}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise DegreeMismatch("modulus coefficients must lie in [0, p)")
        if self.modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if self.k > 1 and not is_irreducible(self.modulus, self.p):
            raise Reducible(f"{list(self.modulus)} factors over F_{self.p}")

    def _ident(self) -> tuple:
        # a degree-1 modulus only picks gen(); arithmetic is the same
        return (self.p, self.k, self.modulus if self.k > 1 else ())

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    # --- codes <-> coordinates ---------------------------------------------

    def coords(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) > self.k:
            raise DegreeMismatch(f"expected at most {self.k} coordinates, got {len(coords)}")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coords))

    # --- tables for extension fields ----------------------------------------

    @cached_property
    def _tables(self):
        """(exp, log, digits) for k > 1; exp/log relative to a primitive element."""
        q = self.order
        if q > MAX_EXTENSION_ORDER:
            raise TooLarge(f"extension fields are limited to order {MAX_EXTENSION_ORDER}")
        digits = np.array([self.coords(c) for c in range(q)], dtype=np.int64)
        for g in range(2, q):
            gpoly = list(self.coords(g))
            exp = [1]
            cur = [1]
            while True:
                cur = _polymod(_polymul(cur, gpoly, self.p), self.modulus, self.p)
                c = self.encode(cur)
                if c == 1:
                    break
                exp.append(c)
            if len(exp) == q - 1:
                break
        exp = np.array(exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        return exp, log, digits

    @cached_property
    def _op_tables(self):
        """Full (add, mul, neg) lookup tables for small extension fields, else None."""
        q = self.order
        if self.k == 1 or q > SMALL_TABLE_ORDER:
            return None
        _, _, digits = self._tables
        w = self._pow_weights
        add = ((digits[:, None, :] + digits[None, :, :]) % self.p) @ w
        neg = (-digits % self.p) @ w
        exp, log, _ = self._tables
        mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        return add, mul, neg

    @cached_property
    def _fma_tables(self):
        """Flat tables of c + a*b and c - a*b indexed by (c*q + a)*q + b, for q <= 16."""
        q = self.order
        if self.k == 1 or q > FMA_TABLE_ORDER:
            return None
        add, mul, neg = self._op_tables
        prod = mul[None, :, :]
        c = np.arange(q)[:, None, None]
        return add[c, prod].ravel(), add[c, neg[prod]].ravel()

    def vfma(self, c, a, b, subtract: bool = False):
        """c + a*b (or c - a*b) elementwise."""
        if self.k == 1:
            return (c - a * b if subtract else c + a * b) % self.p
        tables = self._fma_tables
        if tables is not None:
            q = self.order
            return tables[subtract][(c * q + a) * q + b]
        prod = self.vmul(a, b)
        return self.vsub(c, prod) if subtract else self.vadd(c, prod)

    @cached_property
    def _pow_weights(self):
        return self.p ** np.arange(self.k, dtype=np.int64)

    # --- scalar arithmetic on codes -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        ca, cb = self.coords(a), self.coords(b)
        return self.encode([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.encode([-x for x in self.coords(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self._tables
        return int(exp[(log[a] + log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        exp, log, _ = self._tables
        return int(exp[-log[a] % (self.order - 1)])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if n == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, n, self.p)
        exp, log, _ = self._tables
        return int(exp[log[a] * n % (self.order - 1)])

    # --- vectorised arithmetic on integer arrays of codes -------------------

    def vadd(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self._op_tables is not None:
            return self._op_tables[0][a, b]
        _, _, digits = self._tables
        return ((digits[a] + digits[b]) % self.p) @ self._pow_weights

    def vneg(self, a):
        if self.k == 1:
            return -a % self.p
        if self._op_tables is not None:
            return self._op_tables[2][a]
        _, _, digits = self._tables
        return (-digits[a] % self.p) @ self._pow_weights

    def vsub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if self._op_tables is not None:
            return self._op_tables[1][a, b]
        exp, log, _ = self._tables
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = exp[(log[a] + log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return self._prime_inverses[a]
        exp, log, _ = self._tables
        return exp[-log[a] % (self.order - 1)]

    @cached_property
    def _prime_inverses(self):
        if self.p > MAX_EXTENSION_ORDER:
            raise TooLarge(f"vectorised inverses need p <= {MAX_EXTENSION_ORDER}")
        table = np.zeros(self.p, dtype=np.int64)
        for a in range(1, self.p):
            table[a] = pow(a, -1, self.p)
        return table

    # --- elements -----------------------------------------------------------

    def __call__(self, x) -> "FFElem":
        """Coerce an int (prime-subfield residue), coordinate list or FFElem."""
        if isinstance(x, FFElem):
            if x.field != self:
                raise FieldMismatch(f"{x!r} is not in {self!r}")
            return x
        if isinstance(x, (int, np.integer)):
            return FFElem(self, int(x) % self.p)
        return FFElem(self, self.encode(list(x)))

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 1)

    def gen(self) -> "FFElem":
        """The class of x in F_p[x]/(modulus)."""
        if self.k == 1:
            return FFElem(self, -self.modulus[0] % self.p)
        return FFElem(self, self.p)

    def elements(self) -> list["FFElem"]:
        return [FFElem(self, c) for c in range(self.order)]

    def nonzero(self) -> list["FFElem"]:
        return [FFElem(self, c) for c in range(1, self.order)]

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        return field_make(int(data["p"]), int(data.get("k", 1)), data.get("modulus"))


def field_make(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated field descriptor; ``modulus=None`` picks the built-in Conway polynomial."""
    if modulus is None:
        if (p, k) in CONWAY:
            modulus = CONWAY[(p, k)]
        elif k == 1:
            modulus = (0, 1)
        else:
            raise DegreeMismatch(f"no built-in modulus for p={p}, k={k}")
    return FieldSpec(p, k, tuple(modulus))


def ff_enumerate(field: FieldSpec) -> list["FFElem"]:
    """All elements, zero first, ordered by code."""
    return field.elements()


@dataclass(frozen=True)
class FFElem:
    field: FieldSpec
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coords(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.sub(o, self.code))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def inv(self) -> "FFElem":
        return FFElem(self.field, self.field.inv(self.code))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.mul(self.code, self.field.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FFElem(self.field, self.field.mul(o, self.field.inv(self.code)))

    def __pow__(self, n: int):
        return FFElem(self.field, self.field.power(self.code, n))

    def __eq__(self, other):
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.field.k == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and mono else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

"""Nonzero p-adic numbers modelled by their leading term.

A :class:`VUnit` is ``pi**v * u`` with ``u`` a unit whose residue lives in the
residue field.  Only products, inverses and powers are supported: every
quantity that gets reduced mod p in the lattice construction is a monomial in
q and the character values, so the leading term is exact for them.

The parameter q is ``(v=e, u=1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, InputError, NotIntegral
from .gf import FFElem, FieldSpec


@dataclass(frozen=True)
class PConfig:
    field: FieldSpec
    e: int

    def __post_init__(self):
        if self.e < 1:
            raise InputError(f"valuation of q must be >= 1, got {self.e}")

    @property
    def q(self) -> "VUnit":
        return VUnit(self.e, self.field.one)

    def unit(self, v: int, u) -> "VUnit":
        return VUnit(v, self.field(u))


@dataclass(frozen=True)
class VUnit:
    v: int
    u: FFElem

    def __post_init__(self):
        if not self.u:
            raise InputError("unit part of a VUnit must be nonzero")

    def __mul__(self, other: "VUnit") -> "VUnit":
        if not isinstance(other, VUnit):
            return NotImplemented
        if other.u.field != self.u.field:
            raise FieldMismatch("VUnits over different residue fields")
        return VUnit(self.v + other.v, self.u * other.u)

    def inv(self) -> "VUnit":
        return VUnit(-self.v, self.u.inv())

    def __truediv__(self, other: "VUnit") -> "VUnit":
        return self * other.inv()

    def __pow__(self, n: int) -> "VUnit":
        return VUnit(self.v * n, self.u ** n)

    @property
    def is_integral(self) -> bool:
        return self.v >= 0

    def reduce(self) -> FFElem:
        """Image in the residue field; zero when the valuation is positive."""
        if self.v < 0:
            raise NotIntegral(f"valuation {self.v} < 0")
        return self.u if self.v == 0 else self.u.field.zero

    def congruent(self, other: "VUnit") -> bool:
        return self.v == other.v and self.u == other.u

    def __repr__(self):
        return f"({self.v},{self.u!r})"

    def to_json(self) -> dict:
        return {"v": self.v, "u": self.u.to_json()}

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict) -> "VUnit":
        u = data["u"]
        return cls(int(data["v"]), field(u if isinstance(u, list) else int(u)))

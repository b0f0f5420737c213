"""The named modules M1, M2, M3, N3, P3, L6, K6 and their tilde variants.

Six-dimensional modules use the basis (v, Tv, T^2 v, w, Tw, T^2 w), three
dimensional ones (v, Tv, T^2 v), and T acts as the cyclic shift with T^3 = z
on each block.  M2 and its tilde live on (w, Tw) with T^2 = -y^2 - y T.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import linalg as la
from .errors import BadParams
from .gf import FFElem, FieldSpec
from .repcore import Rep, rep_make

# kind -> (dimension, parameter names, display template)
KINDS: dict[str, tuple[int, tuple[str, ...], str]] = {
    "M1_0": (1, ("y",), "M1(0,{y})"),
    "M1_-1": (1, ("y",), "M1(-1,{y})"),
    "M2": (2, ("y",), "M2({y})"),
    "M2~": (2, ("y",), "M2~({y})"),
    "M3": (3, ("z", "y"), "M3({z},{y})"),
    "M3~": (3, ("z", "y"), "M3~({z},{y})"),
    "N3": (3, ("z", "y"), "N3({z},{y})"),
    "N3~": (3, ("z", "y"), "N3~({z},{y})"),
    "P3": (3, ("z",), "P3({z})"),
    "P3~": (3, ("z",), "P3~({z})"),
    "L6": (6, ("z", "y"), "L6({z},{y})"),
    "L6~": (6, ("z", "y"), "L6~({z},{y})"),
    "K6": (6, ("z", "y", "y'"), "K6({z},{y},{y'})"),
}


@dataclass(frozen=True, order=False)
class SimpleLabel:
    kind: str
    params: tuple[FFElem, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"unknown module kind {self.kind!r}")
        names = KINDS[self.kind][1]
        if len(self.params) != len(names):
            raise BadParams(f"{self.kind} takes parameters {names}")
        fields = {x.field for x in self.params}
        if len(fields) != 1:
            raise BadParams("parameters must lie in one field")
        for name, x in zip(names, self.params):
            if not x:
                raise BadParams(f"{self.kind}: parameter {name} must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.params[0].field

    @property
    def dim(self) -> int:
        return KINDS[self.kind][0]

    def param(self, name: str) -> FFElem:
        return self.params[KINDS[self.kind][1].index(name)]

    def __str__(self):
        names = KINDS[self.kind][1]
        return KINDS[self.kind][2].format(**{n: repr(x) for n, x in zip(names, self.params)})

    __repr__ = __str__

    def sort_key(self) -> tuple:
        return (self.dim, list(KINDS).index(self.kind), tuple(x.code for x in self.params))

    def to_json(self) -> dict:
        names = KINDS[self.kind][1]
        return {"kind": self.kind, "name": str(self),
                "params": {n: x.to_json() for n, x in zip(names, self.params)}}

    @classmethod
    def from_json(cls, field: FieldSpec, data: dict) -> "SimpleLabel":
        kind = data["kind"]
        if kind not in KINDS:
            raise BadParams(f"unknown module kind {kind!r}")
        params = data["params"]
        if isinstance(params, dict):
            params = [params[n] for n in KINDS[kind][1]]
        return cls(kind, tuple(field(x if isinstance(x, list) else int(x)) for x in params))


def label(kind: str, *params) -> SimpleLabel:
    if not params:
        raise BadParams("at least one parameter is required")
    field = next((x.field for x in params if isinstance(x, FFElem)), None)
    if field is None:
        raise BadParams("pass FFElem parameters (or mix ints with at least one FFElem)")
    return SimpleLabel(kind, tuple(field(x) for x in params))


def _shift(z: FFElem, blocks: int) -> list[list[FFElem]]:
    f = z.field
    n = 3 * blocks
    m = [[f.zero] * n for _ in range(n)]
    for b in range(blocks):
        o = 3 * b
        m[o + 1][o] = f.one
        m[o + 2][o + 1] = f.one
        m[o][o + 2] = z
    return m


def _from_images(f: FieldSpec, images: list[dict[int, FFElem]]) -> list[list[FFElem]]:
    """Matrix whose j-th column is the image of the j-th basis vector."""
    n = len(images)
    m = [[f.zero] * n for _ in range(n)]
    for j, img in enumerate(images):
        for i, c in img.items():
            m[i][j] = c
    return m


def make_module(lab: SimpleLabel) -> Rep:
    f = lab.field
    one = f.one
    k = lab.kind
    if k in ("M1_0", "M1_-1"):
        y = lab.param("y")
        T, S = [[y]], [[f.zero if k == "M1_0" else -one]]
    elif k in ("M2", "M2~"):
        y = lab.param("y")
        T = [[f.zero, -y * y], [one, -y]]
        S = [[-one, f.zero], [f.zero, f.zero]] if k == "M2" else [[f.zero, f.zero], [f.zero, -one]]
    elif KINDS[k][0] == 3:
        z = lab.param("z")
        T = _shift(z, 1)
        if k == "M3":
            y = lab.param("y")
            imgs = [{}, {2: y.inv()}, {2: -one}]
        elif k == "M3~":
            y = lab.param("y")
            imgs = [{0: -one}, {2: -y.inv()}, {2: -one}]
        elif k == "N3":
            y = lab.param("y")
            imgs = [{0: -one}, {}, {1: -y, 2: -one}]
        elif k == "N3~":
            y = lab.param("y")
            imgs = [{}, {}, {1: y, 2: -one}]
        elif k == "P3":
            imgs = [{}, {}, {2: -one}]
        else:  # P3~
            imgs = [{0: -one}, {}, {2: -one}]
        S = _from_images(f, imgs)
    else:
        z = lab.param("z")
        T = _shift(z, 2)
        y = lab.param("y")
        if k == "L6":
            imgs = [{}, {5: one}, {2: -one}, {3: -one}, {2: y / z}, {5: -one}]
        elif k == "L6~":
            imgs = [{3: one}, {}, {2: -one}, {3: -one}, {2: y / z}, {5: -one}]
        else:  # K6
            y2 = lab.param("y'")
            imgs = [{3: one}, {5: y / y2}, {2: -one}, {3: -one}, {2: y2 / z}, {5: -one}]
        S = _from_images(f, imgs)
    return rep_make(f, la.asmat(f, T), la.asmat(f, S), name=str(lab))


@dataclass(frozen=True)
class Expectation:
    irreducible: bool
    sub: Optional[SimpleLabel] = None
    quotient: Optional[SimpleLabel] = None


def expected_irreducible(lab: SimpleLabel) -> Expectation:
    """Irreducibility criterion attached to each kind, with the stated socle/head."""
    k = lab.kind
    if k in ("M3", "M3~", "N3", "N3~"):
        z, y = lab.params
        if y ** 3 != z:
            return Expectation(True)
        sub, quo = {
            "M3": (label("M1_0", y), label("M2", y)),
            "M3~": (label("M2~", y), label("M1_-1", y)),
            "N3": (label("M1_-1", y), label("M2", y)),
            "N3~": (label("M2~", y), label("M1_0", y)),
        }[k]
        return Expectation(False, sub, quo)
    if k == "K6":
        z, y, y2 = lab.params
        return Expectation(y * y != y2 and y2 * y2 != z * y)
    return Expectation(True)


def all_labels(field: FieldSpec, kinds=None, simple_only: bool = False) -> list[SimpleLabel]:
    """Every label over ``field`` (optionally restricted to simple ones)."""
    units = field.nonzero()
    out = []
    for kind in (kinds or KINDS):
        n = len(KINDS[kind][1])
        for params in np.ndindex(*([len(units)] * n)):
            lab = SimpleLabel(kind, tuple(units[i] for i in params))
            if simple_only and not expected_irreducible(lab).irreducible:
                continue
            out.append(lab)
    return out

"""The curves y^q + y = x^s over F_{q^2}, s | q+1, and their affine points."""

from __future__ import annotations

import csv
import io
from functools import cached_property
from math import gcd
from typing import NamedTuple

import numpy as np

from .galois import Field, FieldElement


class CurveError(ValueError):
    pass


class AffinePoint(NamedTuple):
    """A rational affine point, coordinates as canonical encodings."""

    x: int
    y: int


class Curve:
    """y^q + y = x^s over ``field`` (which must be F_{q^2}).

    ``s = (q+1)/2`` gives the genus (q-1)^2/4 maximal curve, ``s = q+1`` the
    Hermitian curve.  The point at infinity is implicit.
    """

    def __init__(self, field: Field, s: int):
        q = field.q
        if s < 2:
            raise CurveError(f"s must be at least 2, got {s}")
        if (q + 1) % s:
            raise CurveError(f"s={s} does not divide q+1={q + 1}")
        self.field = field
        self.q = q
        self.s = int(s)
        self.genus = (q - 1) * (self.s - 1) // 2
        assert gcd(q, self.s) == 1

    def __repr__(self):
        return f"Curve(q={self.q}, s={self.s}, genus={self.genus})"

    def is_on_curve(self, x, y) -> bool:
        x = _as_value(self.field, x)
        y = _as_value(self.field, y)
        F = self.field
        lhs = F.add(F.conj(y), y)
        return bool(lhs == F.pow(x, self.s))

    @cached_property
    def _points(self) -> np.ndarray:
        F = self.field
        elems = F.elements()
        lhs = F.add(F.conj(elems), elems)  # trace onto F_q
        rhs = F.pow(elems, self.s)
        by_value: dict[int, list[int]] = {}
        for y, v in enumerate(lhs.tolist()):
            by_value.setdefault(v, []).append(y)
        pts = [(x, y) for x, v in enumerate(rhs.tolist()) for y in by_value.get(v, [])]
        arr = np.array(pts, dtype=np.int64).reshape(-1, 2)
        arr.flags.writeable = False
        return arr

    def points_array(self) -> np.ndarray:
        """Affine points as an (n, 2) array sorted by (enc(x), enc(y))."""
        return self._points

    def enumerate_points(self) -> list[AffinePoint]:
        return [AffinePoint(int(x), int(y)) for x, y in self._points]

    @property
    def n_affine(self) -> int:
        return len(self._points)

    @property
    def hasse_weil_count(self) -> int:
        """q^2 + 1 + 2gq, the rational point count of a maximal curve."""
        return self.q**2 + 1 + 2 * self.genus * self.q

    def is_maximal(self) -> bool:
        return self.n_affine + 1 == self.hasse_weil_count


def curve_new(field: Field, s: int) -> Curve:
    return Curve(field, s)


def _as_value(field: Field, a) -> int:
    if isinstance(a, FieldElement):
        if a.field != field:
            raise CurveError("coordinate belongs to a different field")
        return a.value
    a = int(a)
    if not 0 <= a < field.size:
        raise CurveError(f"encoding {a} outside [0, {field.size})")
    return a


def points_to_csv(points) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y"])
    for x, y in points:
        w.writerow([int(x), int(y)])
    return buf.getvalue()


def points_from_csv(text: str) -> list[AffinePoint]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["x", "y"]:
        raise ValueError("point CSV must start with header 'x,y'")
    return [AffinePoint(int(x), int(y)) for x, y in rows[1:] if (x, y)]

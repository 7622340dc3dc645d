"""The Weierstrass semigroup <q, s> at the point at infinity.

x has pole order q and y has pole order s at infinity, so L(m P_inf) is
spanned by the monomials x^i y^j with iq + js <= m.  Taking 0 <= j <= q-1
gives each semigroup element exactly one representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _check(q: int, s: int):
    if gcd(q, s) != 1:
        raise ValueError(f"generators {q} and {s} are not coprime")


def elements_up_to(q: int, s: int, m: int) -> list[int]:
    """Semigroup elements 0 <= h <= m, ascending."""
    _check(q, s)
    if m < 0:
        return []
    hit = set()
    for j in range(min(q - 1, m // s) + 1):
        for i in range((m - j * s) // q + 1):
            hit.add(i * q + j * s)
    return sorted(hit)


def genus(q: int, s: int) -> int:
    return (q - 1) * (s - 1) // 2


def gaps(q: int, s: int) -> list[int]:
    _check(q, s)
    g = genus(q, s)
    if g == 0:
        return []
    members = set(elements_up_to(q, s, 2 * g - 1))
    return [h for h in range(2 * g) if h not in members]


def _qs(curve_or_q, s=None) -> tuple[int, int]:
    if s is None:
        return curve_or_q.q, curve_or_q.s
    return int(curve_or_q), int(s)


def ell(curve, m: int, s: int | None = None) -> int:
    """dim L(m P_inf).  Accepts a Curve, or ``(q, m, s=...)``."""
    q, s = _qs(curve, s)
    if m < 0:
        return 0
    g = genus(q, s)
    if m >= 2 * g - 1:
        return m + 1 - g
    return len(elements_up_to(q, s, m))


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent pairs (i, j) for x^i y^j spanning L(m P_inf)."""

    q: int
    s: int
    m: int
    entries: tuple[tuple[int, int], ...]

    @property
    def pole_orders(self) -> list[int]:
        return [i * self.q + j * self.s for i, j in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def monomial_basis(curve, m: int, s: int | None = None) -> MonomialBasis:
    q, s = _qs(curve, s)
    _check(q, s)
    pairs = []
    if m >= 0:
        for j in range(min(q - 1, m // s) + 1):
            for i in range((m - j * s) // q + 1):
                pairs.append((i, j))
    pairs.sort(key=lambda ij: ij[0] * q + ij[1] * s)
    return MonomialBasis(q, s, m, tuple(pairs))


def half_range_count(q: int, s: int, m: int) -> int:
    """#{(i, j) : iq + js <= m, i >= 0, 0 <= j <= (q-1)/2}.

    This is the literal count with the narrower y-exponent range; it undercounts
    dim L(m P_inf) once a pole order needs j > (q-1)/2 (e.g. q=3, m=4).
    """
    if m < 0:
        return 0
    jmax = (q - 1) // 2
    return sum((m - j * s) // q + 1 for j in range(jmax + 1) if j * s <= m)

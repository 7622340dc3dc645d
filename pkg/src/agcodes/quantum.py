"""Stabilizer codes from Hermitian self-orthogonal codes over F_{q^2}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .agcode import ENUMERATION_GUARD, LinearCode, dual_distance, hermitian_gram, is_hermitian_self_orthogonal


class NotSelfOrthogonalError(ValueError):
    def __init__(self, code: LinearCode):
        gram = hermitian_gram(code) if code.k else np.zeros((0, 0))
        self.failed_entries = int(np.count_nonzero(gram))
        super().__init__(
            f"{code} is not Hermitian self-orthogonal "
            f"({self.failed_entries} nonzero Gram entries of {code.k * code.k})"
        )


@dataclass(frozen=True)
class QuantumParams:
    n: int
    logical: int
    d_lower: int
    q: int
    exact_distance: bool
    k: int
    source_m: int | None = None

    def report(self) -> dict:
        return {
            "n": self.n,
            "logical": self.logical,
            "d_lower": self.d_lower,
            "exact": self.exact_distance,
            "q": self.q,
            "source_m": self.source_m,
        }

    def __str__(self):
        return f"[[{self.n}, {self.logical}, {'' if self.exact_distance else '>='}{self.d_lower}]]_{self.q}"


def _require(code: LinearCode):
    if not is_hermitian_self_orthogonal(code):
        raise NotSelfOrthogonalError(code)


def derive_params(code: LinearCode, distance_mode: str = "auto") -> QuantumParams:
    """[[n, n - 2k, d]]_q with d bounded below by the Hermitian dual distance.

    ``auto`` uses the exact dual distance when the code is small enough to
    enumerate and the designed bound m - 2g + 2 otherwise; ``exact`` and
    ``bound`` force one route.
    """
    _require(code)
    F = code.field
    if distance_mode not in ("auto", "exact", "bound"):
        raise ValueError(f"unknown distance mode {distance_mode!r}")
    m = code.meta.m if code.meta is not None else None
    exact = distance_mode == "exact" or (
        distance_mode == "auto" and code.codebook_size <= ENUMERATION_GUARD
    )
    if exact:
        d = dual_distance(code)
    else:
        if code.meta is None:
            raise ValueError("the designed bound needs a code built from a curve")
        g = code.meta.curve.genus
        d = max(code.meta.m - 2 * g + 2, 1)
    return QuantumParams(code.n, code.n - 2 * code.k, int(d), F.q, exact, code.k, m)


@dataclass(frozen=True)
class StabilizerMatrix:
    """2k rows (a | b) over F_q, entries stored as encodings in the ambient field."""

    field: object
    rows: np.ndarray

    @property
    def n(self) -> int:
        return self.rows.shape[1] // 2

    @property
    def a(self) -> np.ndarray:
        return self.rows[:, : self.n]

    @property
    def b(self) -> np.ndarray:
        return self.rows[:, self.n :]

    def rank(self) -> int:
        return linalg.rank(self.field, self.rows) if len(self.rows) else 0

    def symplectic_products(self) -> np.ndarray:
        F = self.field
        if len(self.rows) == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return F.sub(F.matmul(self.a, self.b.T), F.matmul(self.b, self.a.T))


def split_basis(field, v):
    """Write ``v = a + b*gamma`` with a, b in F_q and gamma the primitive root."""
    F = field
    v = np.asarray(v, dtype=np.int64)
    gamma = F.generator
    denom = F.sub(gamma, F.conj(gamma))
    b = F.div(F.sub(v, F.conj(v)), denom)
    a = F.sub(v, F.mul(b, gamma))
    return a, b


def build_stabilizer(code: LinearCode) -> StabilizerMatrix:
    _require(code)
    F = code.field
    G = code.generator
    if code.k == 0:
        return StabilizerMatrix(F, np.zeros((0, 2 * code.n), dtype=np.int64))
    rows = []
    for v in G:
        for w in (v, F.mul(F.generator, v)):
            a, b = split_basis(F, w)
            rows.append(np.concatenate([a, b]))
    stab = StabilizerMatrix(F, np.array(rows, dtype=np.int64))
    if not verify_commutation(stab):
        raise ArithmeticError("expanded stabilizer rows do not commute")
    return stab


def verify_commutation(stab: StabilizerMatrix) -> bool:
    return not stab.symplectic_products().any()


def quantum_report(code: LinearCode, distance_mode: str = "auto") -> dict:
    params = derive_params(code, distance_mode)
    stab = build_stabilizer(code)
    out = params.report()
    out["k"] = params.k
    out["stabilizer_rows"] = int(len(stab.rows))
    out["stabilizer_rank"] = stab.rank()
    out["commutes"] = verify_commutation(stab)
    return out


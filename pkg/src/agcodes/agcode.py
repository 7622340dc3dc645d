"""One-point AG codes C_L(D, m P_inf) on y^q + y = x^s and their analysis."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from . import linalg
from .curve import Curve
from .galois import Field
from .semigroup import ell, monomial_basis, half_range_count

ENUMERATION_GUARD = 10**7
_CHUNK = 1 << 16
_CODEBOOK_CACHE_LIMIT = 1 << 20


class GuardExceeded(ValueError):
    """Raised when an exhaustive computation would exceed its size guard."""

    def __init__(self, what: str, needed: int, limit: int = ENUMERATION_GUARD):
        super().__init__(f"{what} needs {needed} codewords, guard is {limit}")
        self.needed = needed
        self.limit = limit


@dataclass(frozen=True)
class CodeMeta:
    curve: Curve
    m: int
    support: np.ndarray


class LinearCode:
    """A linear [n, k] code over a field, stored by a full-rank generator."""

    def __init__(self, field: Field, generator, n: int | None = None, meta: CodeMeta | None = None):
        G = np.asarray(generator, dtype=np.int64)
        if G.ndim != 2:
            if n is None:
                raise ValueError("an empty generator needs an explicit length n")
            G = G.reshape(0, n)
        self.field = field
        self.generator = G
        self.generator.flags.writeable = False
        self.n = G.shape[1]
        self.k = G.shape[0]
        self.meta = meta

    def __repr__(self):
        tag = f", m={self.meta.m}" if self.meta else ""
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.size}){tag})"

    @classmethod
    def from_rows(cls, field: Field, rows, n: int | None = None, meta=None) -> "LinearCode":
        """Build a code from any spanning set of rows (reduced to full rank)."""
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim != 2:
            rows = rows.reshape(0, n)
        return cls(field, linalg.row_basis(field, rows), n=rows.shape[1], meta=meta)

    @property
    def codebook_size(self) -> int:
        return self.field.size**self.k

    def iter_codewords(self, chunk: int = _CHUNK) -> Iterator[tuple[int, np.ndarray]]:
        """Yield ``(start, words)`` over all codewords in lexicographic message order.

        Message index ``t`` has base-|F| digits ``(t_0, ..., t_{k-1})`` with
        ``t_0`` most significant, so index order is lexicographic order of the
        message tuple.
        """
        F, k, Q = self.field, self.k, self.field.size
        if k == 0:
            yield 0, np.zeros((1, self.n), dtype=np.int64)
            return
        weights = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        total = Q**k
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            msgs = (idx[:, None] // weights[None, :]) % Q
            words = np.zeros((len(idx), self.n), dtype=np.int64)
            for i in range(k):
                words = F.add(words, F.mul(msgs[:, i : i + 1], self.generator[i][None, :]))
            yield start, words

    @cached_property
    def _codebook(self) -> np.ndarray:
        return np.concatenate([w for _, w in self.iter_codewords()], axis=0)

    def codebook(self) -> np.ndarray:
        if self.codebook_size > _CODEBOOK_CACHE_LIMIT:
            raise GuardExceeded("caching the codebook", self.codebook_size, _CODEBOOK_CACHE_LIMIT)
        return self._codebook


# -- construction -----------------------------------------------------------

def evaluation_matrix(curve: Curve, m: int, support=None) -> np.ndarray:
    """Rows: basis monomials of L(m P_inf) evaluated at the support points."""
    F = curve.field
    pts = curve.points_array() if support is None else np.asarray(support, dtype=np.int64)
    basis = monomial_basis(curve, m)
    if len(basis) == 0:
        return np.zeros((0, len(pts)), dtype=np.int64)
    xs, ys = pts[:, 0], pts[:, 1]
    rows = [F.mul(F.pow(xs, i), F.pow(ys, j)) for i, j in basis]
    return np.array(rows, dtype=np.int64)


def _validate_support(curve: Curve, support) -> np.ndarray:
    pts = np.asarray(support, dtype=np.int64).reshape(-1, 2)
    if len({(int(x), int(y)) for x, y in pts}) != len(pts):
        raise ValueError("support contains duplicate points")
    for x, y in pts:
        if not curve.is_on_curve(int(x), int(y)):
            raise ValueError(f"support point ({x}, {y}) is not on {curve}")
    return pts


def build_code(curve: Curve, m: int, support=None) -> LinearCode:
    """C_L(D, m P_inf) with D the support (all affine points by default).

    Negative ``m`` gives the zero code.
    """
    pts = curve.points_array() if support is None else _validate_support(curve, support)
    E = evaluation_matrix(curve, m, pts)
    meta = CodeMeta(curve, int(m), pts)
    return LinearCode.from_rows(curve.field, E, n=len(pts), meta=meta)


@dataclass(frozen=True)
class DimensionPrediction:
    value: int
    paper_case: int
    agrees_with_paper: bool
    case_value: int


def paper_case(curve: Curve, m: int, n: int | None = None) -> int:
    n = curve.n_affine if n is None else n
    g = curve.genus
    if m < 0:
        return 1
    if m <= curve.q:
        return 2
    if m < n:
        return 3
    if m <= n + 2 * g - 2:
        return 4
    return 5


def case_formula_dimension(curve: Curve, m: int, n: int | None = None) -> int:
    """The five-case dimension formula evaluated literally."""
    n = curve.n_affine if n is None else n
    q, s, g = curve.q, curve.s, curve.genus
    case = paper_case(curve, m, n)
    if case == 1:
        return 0
    if case == 2:
        return half_range_count(q, s, m)
    if case == 3:
        return m + 1 - g
    if case == 4:
        return n - half_range_count(q, s, n + 2 * g - 2 - m)
    return n


def predicted_dimension(curve: Curve, m: int) -> DimensionPrediction:
    """Authoritative dim C_L(D, m P_inf) for the full affine support.

    Below n this is the semigroup count; in the window n <= m <= n + 2g - 2
    it is the rank of the evaluation matrix; above it the code is the full space.
    """
    n, g = curve.n_affine, curve.genus
    if m < 0:
        value = 0
    elif m < n:
        value = ell(curve, m)
    elif m <= n + 2 * g - 2:
        value = linalg.rank(curve.field, evaluation_matrix(curve, m))
    else:
        value = n
    case_value = case_formula_dimension(curve, m, n)
    return DimensionPrediction(value, paper_case(curve, m, n), value == case_value, case_value)


# -- duals and orthogonality ------------------------------------------------

def dual(code: LinearCode) -> LinearCode:
    H = linalg.null_space(code.field, code.generator, code.n)
    return LinearCode(code.field, H, n=code.n)


def hermitian_dual(code: LinearCode) -> LinearCode:
    """{v : sum v_i c_i^q = 0 for all c in C}, i.e. the dual of conj(C)."""
    F = code.field
    H = linalg.null_space(F, F.conj(code.generator), code.n)
    return LinearCode(F, H, n=code.n)


def hermitian_gram(code: LinearCode) -> np.ndarray:
    """G conj(G)^T; zero exactly when the code is Hermitian self-orthogonal."""
    F = code.field
    G = code.generator
    return F.matmul(G, F.conj(G).T)


def is_hermitian_self_orthogonal(code: LinearCode) -> bool:
    if code.k == 0:
        return True
    if 2 * code.k > code.n:
        return False
    return not hermitian_gram(code).any()


@dataclass(frozen=True)
class ScanRow:
    m: int
    k: int
    designed_d: int
    self_orthogonal: bool
    paper_predicts: bool


SCAN_HEADER = ("m", "k", "designed_d", "self_orthogonal", "paper_predicts")


def scan_self_orthogonality(curve: Curve, m_max: int) -> list[ScanRow]:
    n, g = curve.n_affine, curve.genus
    if m_max > n + 2 * g:
        raise ValueError(f"m_max={m_max} exceeds n + 2g = {n + 2 * g}")
    rows = []
    for m in range(0, m_max + 1):
        code = build_code(curve, m)
        rows.append(
            ScanRow(m, code.k, n - m, is_hermitian_self_orthogonal(code), 2 * m <= n + 2 * g - 2)
        )
    return rows


def scan_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    for r in rows:
        w.writerow([r.m, r.k, r.designed_d, str(r.self_orthogonal).lower(), str(r.paper_predicts).lower()])
    return buf.getvalue()


# -- weights and distances --------------------------------------------------

@dataclass
class WeightEnumerator:
    counts: list[int] = dc_field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def min_distance(self) -> int | None:
        """Smallest positive weight present, or None for the zero code."""
        for w, a in enumerate(self.counts):
            if w > 0 and a > 0:
                return w
        return None

    def __eq__(self, other):
        if isinstance(other, WeightEnumerator):
            return list(self.counts) == list(other.counts)
        return list(self.counts) == list(other)


def _guard(code: LinearCode, what: str):
    if code.codebook_size > ENUMERATION_GUARD:
        raise GuardExceeded(what, code.codebook_size)


def _prime_expansion(code: LinearCode) -> np.ndarray:
    """F_p generator of the code viewed as an F_p-space: rows t^r * g_i, flattened digits."""
    F = code.field
    t_pows = np.array([F.pow(F.generator, r) for r in range(F.deg)], dtype=np.int64)
    rows = F.mul(t_pows[None, :, None], code.generator[:, None, :]).reshape(-1, code.n)
    return F.coeffs(rows).reshape(len(rows), code.n * F.deg)


def weight_enumerator(code: LinearCode) -> WeightEnumerator:
    """Exact A_0..A_n, enumerating the code as an F_p-linear space."""
    _guard(code, "weight enumeration")
    F, n = code.field, code.n
    counts = np.zeros(n + 1, dtype=np.int64)
    if code.k == 0:
        counts[0] = 1
        return WeightEnumerator(counts.tolist())
    Gp = _prime_expansion(code).astype(np.float64)
    r = Gp.shape[0]
    total = F.p**r
    place = F.p ** np.arange(r - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coef = ((idx[:, None] // place[None, :]) % F.p).astype(np.float64)
        digits = np.rint(coef @ Gp).astype(np.int64) % F.p
        wt = digits.reshape(len(idx), n, F.deg).any(axis=2).sum(axis=1)
        counts += np.bincount(wt, minlength=n + 1)
    return WeightEnumerator(counts.tolist())


def min_distance(code: LinearCode, mode: str = "exhaustive") -> tuple[int, bool]:
    """Minimum distance as ``(d, exact)``.

    ``exhaustive`` scans every codeword with field-table arithmetic,
    ``enumerator`` reads d off :func:`weight_enumerator`, ``bound`` returns the
    designed distance n - m (at least 1) without enumerating.  A code with no
    nonzero codeword reports n + 1.
    """
    if mode == "bound":
        if code.meta is None:
            raise ValueError("bound mode needs a code built from a curve")
        return max(code.n - code.meta.m, 1), False
    if code.k == 0:
        return code.n + 1, True
    if mode == "enumerator":
        return weight_enumerator(code).min_distance(), True
    if mode != "exhaustive":
        raise ValueError(f"unknown distance mode {mode!r}")
    _guard(code, "exhaustive distance")
    best = code.n
    for start, words in code.iter_codewords():
        wt = (words != 0).sum(axis=1)
        if start == 0:
            wt = wt[1:]
        best = min(best, int(wt.min()))
    return best, True


def krawtchouk(w: int, v: int, n: int, Q: int) -> int:
    return sum(
        (-1) ** j * (Q - 1) ** (w - j) * comb(v, j) * comb(n - v, w - j) for j in range(w + 1)
    )


def macwilliams_dual_enumerator(we: WeightEnumerator, n: int, k: int, Q: int) -> WeightEnumerator:
    """Weight enumerator of the dual of an [n, k] code over an alphabet of size Q."""
    A = list(we.counts) if isinstance(we, WeightEnumerator) else list(we)
    if len(A) != n + 1:
        raise ValueError(f"enumerator has {len(A)} entries, expected {n + 1}")
    scale = Q**k
    B = []
    for w in range(n + 1):
        total = sum(A[v] * krawtchouk(w, v, n, Q) for v in range(n + 1) if A[v])
        b = Fraction(total, scale)
        if b.denominator != 1 or b < 0:
            raise ArithmeticError(f"MacWilliams coefficient B_{w} = {b} is not a nonnegative integer")
        B.append(int(b))
    return WeightEnumerator(B)


def dual_distance(code: LinearCode) -> int | None:
    """d of the (Euclidean or Hermitian) dual via the MacWilliams transform."""
    B = macwilliams_dual_enumerator(weight_enumerator(code), code.n, code.k, code.field.size)
    return B.min_distance()


def dual_distance_by_columns(code: LinearCode, max_checks: int = 10**6) -> int | None:
    """Smallest number of linearly dependent columns of the generator.

    This equals the minimum weight of the dual and needs no dual codewords.
    """
    F, G = code.field, code.generator
    if code.k == 0:
        return 1
    checks = 0
    for w in range(1, min(code.n, code.k + 1) + 1):
        for cols in combinations(range(code.n), w):
            checks += 1
            if checks > max_checks:
                raise GuardExceeded("column-subset search", checks, max_checks)
            if linalg.rank(F, G[:, cols]) < w:
                return w
    return None


# -- matrix file format -----------------------------------------------------

def export_generator(code: LinearCode) -> str:
    lines = [f"{code.field.size} {code.n} {code.k}"]
    lines += [" ".join(str(int(v)) for v in row) for row in code.generator]
    return "\n".join(lines) + "\n"


def import_generator(text: str, field: Field) -> LinearCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    Q, n, k = (int(t) for t in lines[0].split())
    if Q != field.size:
        raise ValueError(f"file alphabet {Q} does not match field size {field.size}")
    rows = np.array([[int(t) for t in ln.split()] for ln in lines[1 : 1 + k]], dtype=np.int64)
    rows = rows.reshape(k, n)
    field.check(rows)
    if linalg.rank(field, rows) != k:
        raise ValueError("generator rows are not linearly independent")
    return LinearCode(field, rows, n=n)

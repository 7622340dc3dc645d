"""scikit-learn style wrapper around a one-point AG code.

``fit`` builds the code from its hyperparameters, ``transform`` encodes rows of
messages, ``inverse_transform`` decodes rows of received words.  Message and
word arrays hold canonical field encodings.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .agcode import build_code, is_hermitian_self_orthogonal, min_distance
from .channel import decode_erasures, decode_nearest
from .curve import Curve
from .galois import field_new
from .linalg import solve_left


def check_symbols(X, field, width: int, what: str = "X") -> np.ndarray:
    """Validate a 2-D array of field encodings with ``width`` columns."""
    X = check_array(X, dtype=np.int64, ensure_2d=True, ensure_min_features=0)
    if X.shape[1] != width:
        raise ValueError(f"{what} has {X.shape[1]} columns, expected {width}")
    field.check(X)
    return X


class OnePointCode(TransformerMixin, BaseEstimator):
    """C_L(D, m P_inf) on y^q + y = x^s over F_{q^2}, q = p**e.

    Parameters
    ----------
    p, e : int
        Characteristic and exponent; q = p**e.
    s : int or None
        Exponent of x; defaults to (q + 1) // 2.
    m : int
        Pole order bound at infinity.
    decoder : {"nearest", "erasure"}
        Used by ``inverse_transform``.  With "erasure", negative entries in the
        received words mark erasures.
    """

    def __init__(self, p=3, e=1, s=None, m=4, decoder="nearest"):
        self.p = p
        self.e = e
        self.s = s
        self.m = m
        self.decoder = decoder

    def fit(self, X=None, y=None):
        field = field_new(self.p, self.e)
        s = (field.q + 1) // 2 if self.s is None else self.s
        if self.decoder not in ("nearest", "erasure"):
            raise ValueError(f"unknown decoder {self.decoder!r}")
        self.field_ = field
        self.curve_ = Curve(field, s)
        self.code_ = build_code(self.curve_, self.m)
        self.n_ = self.code_.n
        self.k_ = self.code_.k
        self.n_features_in_ = self.k_
        return self

    def transform(self, X):
        check_is_fitted(self, "code_")
        X = check_symbols(X, self.field_, self.k_)
        if self.k_ == 0:
            return np.zeros((len(X), self.n_), dtype=np.int64)
        return self.field_.matmul(X, self.code_.generator)

    def inverse_transform(self, X):
        check_is_fitted(self, "code_")
        X = check_array(X, dtype=np.int64, ensure_2d=True)
        if X.shape[1] != self.n_:
            raise ValueError(f"received words have {X.shape[1]} symbols, expected {self.n_}")
        out = np.zeros((len(X), self.k_), dtype=np.int64)
        for t, word in enumerate(X):
            if self.decoder == "nearest":
                self.field_.check(word)
                out[t], _ = decode_nearest(self.code_, word)
                continue
            erased = word < 0
            self.field_.check(word[~erased])
            codeword = decode_erasures(self.code_, np.where(erased, 0, word), erased)
            if codeword is None:
                out[t] = -1
            else:
                out[t] = solve_left(self.field_, self.code_.generator, codeword)
        return out

    def minimum_distance(self, mode: str = "exhaustive") -> tuple[int, bool]:
        check_is_fitted(self, "code_")
        return min_distance(self.code_, mode)

    def is_self_orthogonal(self) -> bool:
        check_is_fitted(self, "code_")
        return is_hermitian_self_orthogonal(self.code_)

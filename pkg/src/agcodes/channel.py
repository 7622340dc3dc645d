"""Encode / transmit / decode experiments over q^2-ary channels.

Randomness comes from numpy's PCG64 bit generator.  Trial ``t`` of an
experiment seeded with ``seed`` draws everything from ``default_rng(seed + t)``
so reports do not depend on execution order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .agcode import ENUMERATION_GUARD, GuardExceeded, LinearCode

RNG_NAME = "numpy.random.PCG64"
KINDS = ("symmetric", "erasure")


@dataclass(frozen=True)
class ChannelSpec:
    kind: str
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"channel kind must be one of {KINDS}, got {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {self.p}")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "p": self.p, "seed": self.seed, "rng": RNG_NAME}


@dataclass(frozen=True)
class TransmissionReport:
    trials: int
    word_errors: int
    symbol_errors_injected: int
    decoder: str


def encode(code: LinearCode, message) -> np.ndarray:
    msg = code.field.check(message).reshape(-1)
    if len(msg) != code.k:
        raise ValueError(f"message length {len(msg)} != k = {code.k}")
    if code.k == 0:
        return np.zeros(code.n, dtype=np.int64)
    return code.field.matmul(msg[None, :], code.generator)[0]


def transmit(spec: ChannelSpec, word, Q: int, rng: np.random.Generator | None = None):
    """Pass ``word`` through the channel; returns ``(received, mask)``.

    For the symmetric channel the mask marks corrupted symbols, for the erasure
    channel it marks erased ones (whose received value is set to 0).
    """
    rng = np.random.default_rng(spec.seed) if rng is None else rng
    word = np.asarray(word, dtype=np.int64)
    hit = rng.random(word.shape) < spec.p
    received = word.copy()
    if spec.kind == "symmetric":
        # uniform over the Q - 1 other symbols
        draw = rng.integers(0, Q - 1, size=word.shape)
        draw = draw + (draw >= word)
        received[hit] = draw[hit]
    else:
        received[hit] = 0
    return received, hit


def decode_nearest(code: LinearCode, received) -> tuple[np.ndarray, np.ndarray]:
    """Minimum Hamming distance decoding by exhaustive search.

    Ties go to the lexicographically smallest message.
    """
    if code.codebook_size > ENUMERATION_GUARD:
        raise GuardExceeded("nearest-codeword decoding", code.codebook_size)
    r = np.asarray(received, dtype=np.int64)
    best_idx, best_dist = 0, code.n + 1
    try:
        chunks = [(0, code.codebook())]
    except GuardExceeded:
        chunks = code.iter_codewords()
    for start, words in chunks:
        dist = (words != r[None, :]).sum(axis=1)
        i = int(np.argmin(dist))
        if dist[i] < best_dist:
            best_idx, best_dist = start + i, int(dist[i])
    Q = code.field.size
    msg = np.array([(best_idx // Q ** (code.k - 1 - j)) % Q for j in range(code.k)], dtype=np.int64)
    return msg, encode(code, msg)


def decode_erasures(code: LinearCode, received, erased):
    """Recover the codeword from its non-erased symbols, or None.

    None means the surviving positions do not determine a unique codeword
    (or are inconsistent with every codeword).
    """
    r = np.asarray(received, dtype=np.int64)
    mask = np.zeros(code.n, dtype=bool)
    erased = np.asarray(erased)
    if erased.dtype == bool:
        mask = erased.copy()
    elif erased.size:
        mask[erased.astype(np.int64)] = True
    keep = np.flatnonzero(~mask)
    if code.k == 0:
        return np.zeros(code.n, dtype=np.int64) if not r[keep].any() else None
    if len(keep) < code.k:
        return None
    msg = linalg.solve_left(code.field, code.generator[:, keep], r[keep])
    if msg is None:
        return None
    return encode(code, msg)


def wer_experiment(code: LinearCode, spec: ChannelSpec, trials: int) -> TransmissionReport:
    """Word error count over ``trials`` random messages."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    Q = code.field.size
    decoder = "nearest" if spec.kind == "symmetric" else "erasure"
    if decoder == "nearest" and code.codebook_size > ENUMERATION_GUARD:
        raise GuardExceeded("nearest-codeword decoding", code.codebook_size)
    word_errors = injected = 0
    for t in range(trials):
        rng = np.random.default_rng(spec.seed + t)
        msg = rng.integers(0, Q, size=code.k)
        word = encode(code, msg)
        received, mask = transmit(spec, word, Q, rng)
        injected += int(mask.sum())
        if decoder == "nearest":
            _, decoded = decode_nearest(code, received)
        else:
            decoded = decode_erasures(code, received, mask)
        if decoded is None or not np.array_equal(decoded, word):
            word_errors += 1
    return TransmissionReport(trials, word_errors, injected, decoder)

"""Finite-prefix tests for Hausdorff and Stieltjes moment conditions.

A sequence of reals is a Hausdorff moment sequence exactly when all of its
iterated backward differences

    sum_{n=0}^{m} (-1)^n C(m, n) gamma_{n+j}   (j, m >= 0)

are nonnegative; Stieltjes necessary conditions ask the Hankel matrix
(gamma_{i+j}) and its shift (gamma_{i+j+1}) to be positive semidefinite.
Only a finite prefix is ever available here, so a passing verdict means "no
violation among the tested pairs", never membership.  Verdicts carry the
tested ranges for that reason, and a failing verdict always carries an
explicit witness.

Two backends: the exact path works in Fractions and decides signs exactly;
the float path works in doubles against an absolute tolerance.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .rational import format_rat, parse_rat

DEFAULT_FLOAT_TOL = 1e-10

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class MomentSeq:
    """Finite prefix gamma_0..gamma_N under moment testing."""

    values: tuple
    backend: str

    def __post_init__(self):
        if self.backend not in (EXACT, FLOAT):
            raise ValueError(f"unknown backend {self.backend!r}")
        if len(self.values) == 0:
            raise ValueError("a moment prefix needs at least one entry")
        if self.backend == EXACT:
            if not all(isinstance(v, Fraction) for v in self.values):
                raise TypeError("exact backend requires Fraction entries")
        else:
            if not all(isinstance(v, float) for v in self.values):
                raise TypeError("float backend requires float entries")

    @classmethod
    def exact(cls, values) -> "MomentSeq":
        return cls(tuple(Fraction(v) for v in values), EXACT)

    @classmethod
    def floats(cls, values) -> "MomentSeq":
        return cls(tuple(float(v) for v in values), FLOAT)

    @classmethod
    def from_file(cls, path, backend: str = EXACT) -> "MomentSeq":
        """Load one value per line; '#' starts a comment.

        Entries may be 'p/q' strings, integers, or decimal literals.  On the
        exact backend decimal literals convert exactly.
        """
        entries = []
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                entries.append(parse_rat(line))
        if not entries:
            raise ValueError(f"no values in sequence file {path}")
        if backend == EXACT:
            return cls.exact(entries)
        return cls.floats(entries)

    @property
    def top_index(self) -> int:
        return len(self.values) - 1

    def to_floats(self) -> "MomentSeq":
        if self.backend == FLOAT:
            return self
        return MomentSeq.floats(self.values)


@dataclass(frozen=True)
class MomentVerdict:
    """Outcome of a finite-depth necessary-conditions check.

    ``witness`` is (m, j) for a difference violation and
    ('hankel', shift, order) for a Hankel violation; ``detail`` is the
    offending value.  Passing verdicts record the ranges actually tested.
    """

    status: str                  # "pass" | "fail"
    mode: str                    # "hausdorff" | "stieltjes"
    depth: int                   # max difference order m, or Hankel order K
    top_index: int               # largest sequence index examined
    witness: Optional[tuple] = None
    detail: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def render(self) -> str:
        def fmt(v):
            return format_rat(v) if isinstance(v, Fraction) else repr(v)

        if self.passed:
            key = "depth" if self.mode == "hausdorff" else "order"
            return f"PASS {key}={self.depth} n={self.top_index}"
        if self.mode == "hausdorff":
            m, j = self.witness
            return f"FAIL m={m} j={j} value={fmt(self.detail)}"
        _, shift, order = self.witness
        return f"FAIL hankel={shift} order={order} value={fmt(self.detail)}"


def diff_transform(seq: MomentSeq, m: int, j: int):
    """Alternating binomial sum sum_n (-1)^n C(m,n) gamma_{n+j}, exact or float."""
    if m < 0 or j < 0:
        raise ValueError("order and shift must be nonnegative")
    if j + m > seq.top_index:
        raise ValueError(
            f"prefix too short: need index {j + m}, have {seq.top_index}"
        )
    vals = seq.values
    if seq.backend == EXACT:
        total = Fraction(0)
    else:
        total = 0.0
    for n in range(m + 1):
        term = math.comb(m, n) * vals[n + j]
        total = total + term if n % 2 == 0 else total - term
    return total


def hausdorff_test(
    seq: MomentSeq,
    depth: int,
    max_index: Optional[int] = None,
    tol: float = DEFAULT_FLOAT_TOL,
) -> MomentVerdict:
    """Check all differences with m <= depth, j + m <= min(N, max_index).

    The first violation in lexicographic (m, j) order is reported, so
    failures are deterministic and citable.  A pass certifies only the
    tested range.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    cap = seq.top_index if max_index is None else min(seq.top_index, max_index)
    floor = 0 if seq.backend == EXACT else -abs(tol)
    for m in range(depth + 1):
        for j in range(cap - m + 1):
            value = diff_transform(seq, m, j)
            if value < floor:
                return MomentVerdict(
                    "fail", "hausdorff", depth, cap, witness=(m, j), detail=value
                )
    return MomentVerdict("pass", "hausdorff", depth, cap)


def _det_exact(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            factor = m[r][c] * inv
            if factor:
                for cc in range(c, n):
                    m[r][cc] -= factor * m[c][cc]
    return det


def _hankel(values: Sequence, size: int, shift: int) -> list[list]:
    return [[values[i + j + shift] for j in range(size)] for i in range(size)]


def _psd_exact(matrix: list[list[Fraction]]):
    """Exact PSD decision: leading minors first, full principal sweep on ties.

    Returns (ok, order, value).  Strictly positive leading minors certify
    positive definiteness; a strictly negative principal minor certifies
    failure.  When a leading minor vanishes the leading sequence alone is
    inconclusive and every principal minor is examined.
    """
    n = len(matrix)
    tie = False
    for k in range(1, n + 1):
        d = _det_exact([row[:k] for row in matrix[:k]])
        if d < 0:
            return False, k, d
        if d == 0:
            tie = True
    if not tie:
        return True, None, None
    indices = range(n)
    for size in range(1, n + 1):
        for subset in itertools.combinations(indices, size):
            sub = [[matrix[r][c] for c in subset] for r in subset]
            d = _det_exact(sub)
            if d < 0:
                return False, size, d
    return True, None, None


def stieltjes_test(
    seq: MomentSeq,
    order: int,
    tol: float = DEFAULT_FLOAT_TOL,
) -> MomentVerdict:
    """Necessary Stieltjes conditions via the Hankel matrix and its shift.

    The unshifted matrix has size order+1.  The shifted one needs index
    2*order+1, so when only 2*order entries are available it is truncated
    by one row and column.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    n = seq.top_index
    if 2 * order > n:
        raise ValueError(f"prefix too short: need index {2 * order}, have {n}")
    shifted_size = order + 1 if 2 * order + 1 <= n else order

    if seq.backend == EXACT:
        for shift, size in ((0, order + 1), (1, shifted_size)):
            ok, k, value = _psd_exact(_hankel(seq.values, size, shift))
            if not ok:
                return MomentVerdict(
                    "fail", "stieltjes", order, n,
                    witness=("hankel", shift, k), detail=value,
                )
        return MomentVerdict("pass", "stieltjes", order, n)

    import numpy as np

    for shift, size in ((0, order + 1), (1, shifted_size)):
        h = np.array(_hankel(seq.values, size, shift), dtype=float)
        eigs = np.linalg.eigvalsh(h)
        low = float(eigs.min())
        if low < -abs(tol):
            return MomentVerdict(
                "fail", "stieltjes", order, n,
                witness=("hankel", shift, size), detail=low,
            )
    return MomentVerdict("pass", "stieltjes", order, n)


def boundedness_check(seq: MomentSeq, bound) -> bool:
    """True when every entry is at most the bound.

    A bounded Stieltjes moment sequence is automatically a Hausdorff moment
    sequence, so this justifies following a Stieltjes pass with the
    difference test after rescaling by the bound.
    """
    if seq.backend == EXACT:
        bound = Fraction(bound)
    else:
        bound = float(bound)
    return all(v <= bound for v in seq.values)

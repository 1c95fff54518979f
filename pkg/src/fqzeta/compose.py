"""Carry-free compositions with q-even part constraints.

Two conventions are used, distinguished by which end of the tuple is the
unconstrained slot:

* head-free: tuples (m_0, ..., m_d) of d+1 parts whose carry-free base-p
  sum is the target k, with m_i > 0 and q-even for 1 <= i <= d; these
  index the monomials of the degree-d power sum at exponent -k, and the
  weight d*m_0 + (d-1)*m_1 + ... + m_{d-1} is the t-degree of the
  corresponding monomial.
* tail-free: tuples (X_1, ..., X_d) of d parts summing carry-free to N,
  with X_i > 0 and q-even for i < d; the weight is X_1 + 2*X_2 + ... +
  d*X_d.  Reversal is a bijection between tail-free d-part compositions
  of N and head-free (d-1)-part-index compositions of N.

Enumeration is organized through class matrices: the matrix whose columns
are the digit class vectors of the parts.  Grouping by matrix bounds the
work by digit sums rather than by the size of the target, and inside one
matrix class the "monotone representative" (largest p-powers to the
earliest parts, per digit class) is simultaneously the lexicographically
largest and the unique minimum-weight member, which gives fast structural
routes to the greedy, modest and optimal compositions.  Full enumeration
is kept alongside as the independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .digitlab import (
    ClassVector,
    PrimePower,
    base_digits,
    capacity_equals,
    capacity_exceeds,
    carry_free_add,
    digit_class_vector,
    digit_sum_coords,
)
from .errors import EmptySetError, ResourceLimitError

__all__ = [
    "Composition",
    "ClassMatrix",
    "PowerClasses",
    "HEAD",
    "TAIL",
    "power_classes",
    "valid_class_matrices",
    "monotone_rep",
    "enumerate_head_free",
    "enumerate_tail_free",
    "tail_free_nonempty",
    "greedy",
    "modest",
    "optimal_set",
    "greedy_by_enumeration",
    "modest_by_enumeration",
    "optimal_set_by_enumeration",
]

HEAD = "head"
TAIL = "tail"

DIGIT_SUM_LIMIT = 24
ENUMERATION_LIMIT = 2_000_000


@dataclass(frozen=True)
class Composition:
    """A carry-free composition in one of the two conventions.

    parts are (m_0..m_d) for kind=HEAD (d+1 parts, head unconstrained) or
    (X_1..X_d) for kind=TAIL (d parts, tail unconstrained).
    """

    q: PrimePower
    parts: tuple[int, ...]
    kind: str
    target: int

    def __post_init__(self) -> None:
        if self.kind not in (HEAD, TAIL):
            raise ValueError(f"unknown kind {self.kind!r}")
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if carry_free_add(self.parts, self.q.p) != self.target:
            raise ValueError("parts must sum carry-free to the target")
        cons = self.constrained_slice
        if any(p <= 0 or not self.q.is_q_even(p) for p in cons):
            raise ValueError("constrained parts must be positive and q-even")

    @property
    def constrained_slice(self) -> tuple[int, ...]:
        if self.kind == HEAD:
            return self.parts[1:]
        return self.parts[:-1]

    @property
    def weight(self) -> int:
        """Convention weight; equals the t-degree of the matching power-sum
        monomial in the head-free convention."""
        if self.kind == HEAD:
            d = len(self.parts) - 1
            return sum((d - j) * m for j, m in enumerate(self.parts))
        return sum((j + 1) * x for j, x in enumerate(self.parts))

    def reversed(self) -> "Composition":
        kind = TAIL if self.kind == HEAD else HEAD
        return Composition(self.q, self.parts[::-1], kind, self.target)

    def class_columns(self) -> tuple[tuple[int, ...], ...]:
        """Digit class vector of each part (zero vector for zero parts)."""
        f = self.q.f
        cols = []
        for part in self.parts:
            if part == 0:
                cols.append((0,) * f)
            else:
                cols.append(digit_class_vector(part, self.q).entries)
        return tuple(cols)


@dataclass(frozen=True)
class ClassMatrix:
    """Columns are the per-part digit class vectors of a tail-free
    composition class; all but the last column must be even-class."""

    q: PrimePower
    columns: tuple[tuple[int, ...], ...]
    target: int

    @property
    def parts_count(self) -> int:
        return len(self.columns)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-major view (one row per digit class), as usually displayed."""
        f = self.q.f
        return tuple(tuple(col[i] for col in self.columns) for i in range(f))

    def is_valid(self) -> bool:
        total = digit_class_vector(self.target, self.q).entries
        sums = tuple(sum(col[i] for col in self.columns) for i in range(self.q.f))
        if sums != total:
            return False
        for col in self.columns[:-1]:
            v = ClassVector(self.q, col)
            if v.is_zero or not _even_dot(self.q, col):
                return False
        return True


@dataclass(frozen=True)
class PowerClasses:
    """Non-increasing p-power values of a positive integer, split by the
    residue class (mod f) of the exponent."""

    q: PrimePower
    target: int
    sequences: tuple[tuple[int, ...], ...]

    @classmethod
    def from_integer(cls, n: int, q: PrimePower) -> "PowerClasses":
        if n <= 0:
            raise ValueError("n must be positive")
        seqs: list[list[int]] = [[] for _ in range(q.f)]
        digits = base_digits(n, q.p)
        for j in range(len(digits) - 1, -1, -1):
            seqs[j % q.f].extend([q.p**j] * digits[j])
        return cls(q, n, tuple(tuple(s) for s in seqs))


def power_classes(n: int, q: PrimePower) -> PowerClasses:
    return PowerClasses.from_integer(n, q)


def _even_dot(q: PrimePower, entries: Sequence[int]) -> bool:
    # Divisibility of the weighted digit count by q-1; equivalent to the
    # integrality of every digit-sum coordinate.
    dot = sum(e * q.p**i for i, e in enumerate(entries))
    return dot % (q.q - 1) == 0


def _digit_guard(n: int, q: PrimePower, digit_limit: int) -> None:
    total = sum(base_digits(n, q.p))
    if total > digit_limit:
        raise ResourceLimitError(
            f"base-{q.p} digit sum of {n} is {total}, above the limit "
            f"{digit_limit}; raise digit_limit explicitly to proceed"
        )


# ---------------------------------------------------------------------------
# valid class matrices
# ---------------------------------------------------------------------------


def _iter_columns(
    remaining: tuple[int, ...], cols_left: int, q: PrimePower
) -> Iterator[tuple[tuple[int, ...], ...]]:
    if cols_left == 1:
        yield (remaining,)
        return
    # candidate even-class columns below the remaining budget, in
    # lexicographic order so the overall matrix order is deterministic
    for cand in itertools.product(*[range(e + 1) for e in remaining]):
        if not any(cand) or not _even_dot(q, cand):
            continue
        rest = tuple(r - c for r, c in zip(remaining, cand))
        if any(rest):
            coords = digit_sum_coords(ClassVector(q, rest))
            if min(coords) < cols_left - 2:
                continue
        elif cols_left > 2:
            continue
        for tail in _iter_columns(rest, cols_left - 1, q):
            yield (cand,) + tail


def valid_class_matrices(
    n: int, d: int, q: PrimePower, digit_limit: int = DIGIT_SUM_LIMIT
) -> tuple[ClassMatrix, ...]:
    """All d-column class matrices for tail-free compositions of n.

    Columns sum to the digit class vector of n and all but the last are
    nonzero even-class.  Returned sorted by flattened column entries.
    """
    if n <= 0 or d <= 0:
        raise ValueError("need n >= 1 and d >= 1")
    _digit_guard(n, q, digit_limit)
    total = digit_class_vector(n, q).entries
    mats = [
        ClassMatrix(q, cols, n) for cols in _iter_columns(total, d, q)
    ]
    mats.sort(key=lambda m: m.columns)
    return tuple(mats)


def _monotone_parts(
    columns: Sequence[Sequence[int]], n: int, q: PrimePower
) -> tuple[int, ...]:
    # Assign, inside every digit class, the largest available p-powers to
    # the earliest columns; the per-class counts are the column entries.
    classes = power_classes(n, q).sequences
    parts = [0] * len(columns)
    for c in range(q.f):
        seq = classes[c]
        pos = 0
        for i, col in enumerate(columns):
            take = col[c]
            parts[i] += sum(seq[pos : pos + take])
            pos += take
        if pos != len(seq):
            raise ValueError("column sums do not match the class vector")
    return tuple(parts)


def monotone_rep(matrix: ClassMatrix) -> Composition:
    """The unique monotone representative of a valid class matrix.

    Within the matrix class it is lexicographically the largest composition
    and the unique one of minimum weight.
    """
    if not matrix.is_valid():
        raise ValueError("matrix is not valid for its target")
    parts = _monotone_parts(matrix.columns, matrix.target, matrix.q)
    return Composition(matrix.q, parts, TAIL, matrix.target)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _bounded_compositions(
    total: int, caps: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for y in range(min(total, caps[0]) + 1):
        for rest in _bounded_compositions(total - y, caps[1:]):
            yield (y,) + rest


def _class_assignments(
    powers: tuple[tuple[int, int], ...], caps: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    # powers: (value, multiplicity) per distinct p-power of one digit class
    if not powers:
        if not any(caps):
            yield (0,) * len(caps)
        return
    (val, mult) = powers[0]
    rest = powers[1:]
    for combo in _bounded_compositions(mult, caps):
        new_caps = tuple(c - y for c, y in zip(caps, combo))
        for tail_sums in _class_assignments(rest, new_caps):
            yield tuple(s + y * val for s, y in zip(tail_sums, combo))


def _iter_matrix_expansion(
    matrix: ClassMatrix,
) -> Iterator[tuple[int, ...]]:
    q = matrix.q
    digits = base_digits(matrix.target, q.p)
    per_class: list[list[tuple[int, int]]] = [[] for _ in range(q.f)]
    for j in range(len(digits) - 1, -1, -1):
        if digits[j]:
            per_class[j % q.f].append((q.p**j, digits[j]))
    class_options = []
    for c in range(q.f):
        caps = tuple(col[c] for col in matrix.columns)
        opts = list(_class_assignments(tuple(per_class[c]), caps))
        class_options.append(opts)
    for pick in itertools.product(*class_options):
        yield tuple(sum(vals) for vals in zip(*pick))


def iter_tail_free_parts(
    n: int,
    d: int,
    q: PrimePower,
    digit_limit: int = DIGIT_SUM_LIMIT,
) -> Iterator[tuple[int, ...]]:
    """Lazily yield the part tuples of every tail-free composition."""
    for matrix in valid_class_matrices(n, d, q, digit_limit):
        yield from _iter_matrix_expansion(matrix)


def enumerate_tail_free(
    n: int,
    d: int,
    q: PrimePower,
    digit_limit: int = DIGIT_SUM_LIMIT,
    max_results: int = ENUMERATION_LIMIT,
) -> tuple[Composition, ...]:
    """The complete set of tail-free compositions of n with d parts,
    sorted lexicographically on parts."""
    out = []
    for parts in iter_tail_free_parts(n, d, q, digit_limit):
        out.append(parts)
        if len(out) > max_results:
            raise ResourceLimitError(
                f"more than {max_results} compositions; raise max_results"
            )
    out.sort()
    return tuple(Composition(q, p, TAIL, n) for p in out)


def enumerate_head_free(
    k: int,
    d: int,
    q: PrimePower,
    digit_limit: int = DIGIT_SUM_LIMIT,
    max_results: int = ENUMERATION_LIMIT,
) -> tuple[Composition, ...]:
    """The complete head-free index set for the degree-d power sum at
    exponent -k: d+1 parts, head unconstrained; sorted on parts.

    Empty exactly when d exceeds the vanishing threshold of k.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return (Composition(q, (k,), HEAD, k),)
    out = []
    for parts in iter_tail_free_parts(k, d + 1, q, digit_limit):
        out.append(parts[::-1])
        if len(out) > max_results:
            raise ResourceLimitError(
                f"more than {max_results} compositions; raise max_results"
            )
    out.sort()
    return tuple(Composition(q, p, HEAD, k) for p in out)


def tail_free_nonempty(n: int, d: int, q: PrimePower) -> bool:
    """Emptiness criterion: d-part tail-free compositions of n exist iff
    the class vector of n splits exactly into d-1 even parts or its
    capacity exceeds d-1."""
    if n <= 0 or d <= 0:
        return False
    v = digit_class_vector(n, q)
    return capacity_equals(v, d - 1) or capacity_exceeds(v, d - 1)


# ---------------------------------------------------------------------------
# greedy / modest / optimal
# ---------------------------------------------------------------------------


def _tail_monotone_reps(
    n: int, d: int, q: PrimePower, digit_limit: int
) -> list[tuple[int, ...]]:
    mats = valid_class_matrices(n, d, q, digit_limit)
    return [_monotone_parts(m.columns, n, q) for m in mats]


def modest(
    target: int,
    d: int,
    q: PrimePower,
    kind: str = HEAD,
    digit_limit: int = DIGIT_SUM_LIMIT,
) -> Composition:
    """The modest composition.

    kind=HEAD: the element of the head-free index set whose reversal is
    lexicographically largest (it indexes the unique lowest-degree monomial
    of the power sum).  kind=TAIL: the lexicographically largest tail-free
    composition.  Computed structurally as a maximum over monotone
    representatives of valid class matrices.
    """
    if kind == HEAD:
        if d == 0:
            return Composition(q, (target,), HEAD, target)
        reps = _tail_monotone_reps(target, d + 1, q, digit_limit)
        if not reps:
            raise EmptySetError(f"no head-free compositions of {target} at d={d}")
        return Composition(q, max(reps)[::-1], HEAD, target)
    reps = _tail_monotone_reps(target, d, q, digit_limit)
    if not reps:
        raise EmptySetError(f"no tail-free compositions of {target} at d={d}")
    return Composition(q, max(reps), TAIL, target)


def greedy(
    k: int,
    d: int,
    q: PrimePower,
    digit_limit: int = DIGIT_SUM_LIMIT,
) -> Composition:
    """Lexicographically largest head-free composition; it indexes the
    unique maximal-degree monomial of the power sum."""
    if d == 0:
        return Composition(q, (k,), HEAD, k)
    mats = valid_class_matrices(k, d + 1, q, digit_limit)
    if not mats:
        raise EmptySetError(f"no head-free compositions of {k} at d={d}")
    best: Optional[tuple[int, ...]] = None
    for m in mats:
        head_cols = m.columns[::-1]
        parts = _monotone_parts(head_cols, k, q)
        if best is None or parts > best:
            best = parts
    return Composition(q, best, HEAD, k)


def optimal_set(
    n: int,
    d: int,
    q: PrimePower,
    digit_limit: int = DIGIT_SUM_LIMIT,
) -> tuple[Composition, ...]:
    """All minimum-weight tail-free compositions of n with d parts.

    Any minimum-weight composition is the monotone representative of its
    own class matrix, so the minimum over representatives is exhaustive.
    """
    reps = _tail_monotone_reps(n, d, q, digit_limit)
    if not reps:
        raise EmptySetError(f"no tail-free compositions of {n} at d={d}")
    comps = [Composition(q, parts, TAIL, n) for parts in reps]
    best = min(c.weight for c in comps)
    winners = sorted(
        (c for c in comps if c.weight == best), key=lambda c: c.parts
    )
    return tuple(winners)


# ---------------------------------------------------------------------------
# brute-force routes (oracles for the structural implementations)
# ---------------------------------------------------------------------------


def greedy_by_enumeration(k: int, d: int, q: PrimePower, **kw) -> Composition:
    comps = enumerate_head_free(k, d, q, **kw)
    if not comps:
        raise EmptySetError(f"no head-free compositions of {k} at d={d}")
    return max(comps, key=lambda c: c.parts)


def modest_by_enumeration(
    target: int, d: int, q: PrimePower, kind: str = HEAD, **kw
) -> Composition:
    if kind == HEAD:
        comps = enumerate_head_free(target, d, q, **kw)
        key = lambda c: c.parts[::-1]
    else:
        comps = enumerate_tail_free(target, d, q, **kw)
        key = lambda c: c.parts
    if not comps:
        raise EmptySetError(f"no compositions of {target} at d={d}")
    return max(comps, key=key)


def optimal_set_by_enumeration(
    n: int, d: int, q: PrimePower, **kw
) -> tuple[Composition, ...]:
    comps = enumerate_tail_free(n, d, q, **kw)
    if not comps:
        raise EmptySetError(f"no tail-free compositions of {n} at d={d}")
    best = min(c.weight for c in comps)
    return tuple(c for c in comps if c.weight == best)

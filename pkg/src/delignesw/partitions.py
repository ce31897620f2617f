"""Exact Young-diagram combinatorics.

Partitions are the universal index type of the package: they label symmetric
group irreducibles, Schur functors, highest weights and block members.  All
arithmetic is exact (Python integers).
"""

from __future__ import annotations

from functools import total_ordering
from math import factorial
from typing import Iterable, Iterator

from .errors import ConstraintViolation


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty diagram.

    Value type: structural equality and hashing, canonical form (no trailing
    zeros) enforced at construction.  Sorts by size first, then
    reverse-lexicographically, which is the deterministic order used
    everywhere in this package.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for i, p in enumerate(ps):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {ps}")
            if i > 0 and ps[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {ps}")
        self._parts: tuple[int, ...] = tuple(ps)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of nonzero rows."""
        return len(self._parts)

    def row(self, i: int) -> int:
        """The i-th part (1-indexed), zero beyond the last row."""
        if i < 1:
            raise IndexError("rows are 1-indexed")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def conjugate(self) -> "Partition":
        if not self._parts:
            return Partition()
        cols = [sum(1 for p in self._parts if p > j) for j in range(self._parts[0])]
        return Partition(cols)

    def hooks(self) -> list[int]:
        """Hook lengths of all cells, row by row."""
        conj = self.conjugate()
        return [
            self.row(i) - j + conj.row(j) - i + 1
            for i in range(1, self.length + 1)
            for j in range(1, self.row(i) + 1)
        ]

    def sort_key(self) -> tuple:
        return (self.size, tuple(-p for p in self._parts))

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Comma-separated parts; the empty string denotes the empty diagram."""
        return ",".join(str(p) for p in self._parts)

    @staticmethod
    def from_text(text: str) -> "Partition":
        text = text.strip()
        if not text:
            return Partition()
        return Partition(int(piece) for piece in text.split(","))

    def to_json(self) -> list[int]:
        return list(self._parts)


EMPTY = Partition()


def contains(mu: Partition, lam: Partition) -> bool:
    """Whether mu fits inside lam, i.e. mu_i <= lam_i for every row."""
    return all(mu.row(i) <= lam.row(i) for i in range(1, mu.length + 1))


def tilde(lam: Partition, n: int) -> Partition:
    """Pad lam to size n by adding a top row of length n - |lam|.

    Raises ConstraintViolation when the new top row would be shorter than the
    first row of lam (no diagram of size n has lam below its top row).
    """
    head = n - lam.size
    if lam.row(1) > head:
        raise ConstraintViolation(
            f"cannot pad {lam!r} to size {n}: top row {head} < first part {lam.row(1)}"
        )
    return Partition([head] + list(lam.parts))


def _canonical_order(ps: Iterable[Partition]) -> list[Partition]:
    # largest first: size descending, then reverse-lexicographic
    return sorted(ps, key=lambda p: (-p.size, tuple(-x for x in p.parts)))


def remove_horizontal_strips(lam: Partition) -> list[Partition]:
    """All mu obtained from lam by removing boxes, no two in the same column.

    Equivalently all mu interlacing lam: lam_{i+1} <= mu_i <= lam_i.  Includes
    lam itself and the maximal removal.  Ordered by size descending, then
    reverse-lexicographically.
    """
    results: list[Partition] = []

    def build(i: int, prefix: list[int]) -> None:
        if i > lam.length:
            results.append(Partition(prefix))
            return
        lo, hi = lam.row(i + 1), lam.row(i)
        for part in range(hi, lo - 1, -1):
            build(i + 1, prefix + [part])

    build(1, [])
    return _canonical_order(results)


def add_horizontal_strip(lam: Partition, m: int) -> list[Partition]:
    """All partitions of size |lam| + m containing lam with lam' / lam a
    horizontal strip.  Ordered reverse-lexicographically."""
    if m < 0:
        raise ValueError("strip size must be non-negative")
    results: list[Partition] = []

    def build(i: int, prefix: list[int], budget: int) -> None:
        if i > lam.length + 1:
            if budget == 0:
                results.append(Partition(prefix))
            return
        base = lam.row(i)
        # row i may grow up to the previous row of lam (strip condition),
        # unbounded for the top row
        cap = base + budget if i == 1 else min(lam.row(i - 1), base + budget)
        for part in range(cap, base - 1, -1):
            if i > 1 and prefix and part > prefix[-1]:
                continue
            build(i + 1, prefix + [part], budget - (part - base))

    build(1, [], m)
    return _canonical_order(results)


def dim_symmetric_group_irrep(lam: Partition) -> int:
    """Dimension of the symmetric group irreducible labelled by lam, via the
    hook length formula."""
    num = factorial(lam.size)
    den = 1
    for h in lam.hooks():
        den *= h
    assert num % den == 0
    return num // den


def dim_schur_gl(lam: Partition, n_vars: int) -> int:
    """Dimension of the Schur functor of lam applied to an n_vars-dimensional
    space: the hook content formula, zero when the diagram is too long."""
    if n_vars < 0:
        raise ValueError("variable count must be non-negative")
    if lam.length > n_vars:
        return 0
    num = 1
    for i in range(1, lam.length + 1):
        for j in range(1, lam.row(i) + 1):
            num *= n_vars + j - i
    den = 1
    for h in lam.hooks():
        den *= h
    assert num % den == 0
    return num // den


def enumerate_partitions(d: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order, optionally with at
    most max_length rows."""
    if d < 0:
        raise ValueError("cannot partition a negative integer")
    out: list[Partition] = []

    def build(remaining: int, cap: int, rows_left: int | None, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if rows_left is not None and rows_left == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            build(
                remaining - part,
                part,
                None if rows_left is None else rows_left - 1,
                prefix + [part],
            )

    build(d, d, max_length, [])
    return out


def partitions_up_to(size_bound: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of size 0..size_bound, sizes ascending, reverse-lex in
    each size."""
    out: list[Partition] = []
    for d in range(size_bound + 1):
        out.extend(enumerate_partitions(d, max_length))
    return out

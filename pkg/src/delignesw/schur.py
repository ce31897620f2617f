"""Degree-graded symmetric functions in the Schur basis.

Vectors are truncated jointly by total degree and by number of rows, which
models characters of polynomial modules over a general linear algebra with a
fixed number of variables.  Coefficients are exact integers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .partitions import Partition, add_horizontal_strip, dim_schur_gl, remove_horizontal_strips


def _fits(p: Partition, max_degree: int, max_length: int | None) -> bool:
    if p.size > max_degree:
        return False
    return max_length is None or p.length <= max_length


class SchurVector:
    """Finitely supported integer combination of Schur-function labels.

    ``max_degree`` bounds the total degree and ``max_length`` (``None`` for
    unbounded) bounds the number of rows; keys outside either bound are
    silently dropped, so all operations stay inside the truncated quotient.
    Equality compares coefficients and both bounds.
    """

    __slots__ = ("_coeffs", "max_degree", "max_length")

    def __init__(
        self,
        coefficients: dict[Partition, int] | None = None,
        max_degree: int = 0,
        max_length: int | None = None,
    ):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        if max_length is not None and max_length < 0:
            raise ValueError("max_length must be non-negative or None")
        self.max_degree = max_degree
        self.max_length = max_length
        self._coeffs: dict[Partition, int] = {}
        if coefficients:
            for p, c in coefficients.items():
                if c != 0 and _fits(p, max_degree, max_length):
                    self._coeffs[p] = int(c)

    @classmethod
    def zero(cls, max_degree: int, max_length: int | None = None) -> "SchurVector":
        return cls({}, max_degree, max_length)

    @classmethod
    def schur(cls, p: Partition, max_degree: int, max_length: int | None = None) -> "SchurVector":
        """The basis vector s_p (zero if p violates a bound)."""
        return cls({p: 1}, max_degree, max_length)

    def coefficient(self, p: Partition) -> int:
        return self._coeffs.get(p, 0)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs)

    def items(self) -> list[tuple[Partition, int]]:
        return [(p, self._coeffs[p]) for p in self.support()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def same_bounds(self, other: "SchurVector") -> bool:
        return self.max_degree == other.max_degree and self.max_length == other.max_length

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurVector)
            and self.same_bounds(other)
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((frozenset(self._coeffs.items()), self.max_degree, self.max_length))

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if not self.same_bounds(other):
            raise ValueError("cannot add vectors with different truncation bounds")
        merged = dict(self._coeffs)
        for p, c in other._coeffs.items():
            merged[p] = merged.get(p, 0) + c
        return SchurVector(merged, self.max_degree, self.max_length)

    def __neg__(self) -> "SchurVector":
        return SchurVector({p: -c for p, c in self._coeffs.items()}, self.max_degree, self.max_length)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def scaled(self, scalar: int) -> "SchurVector":
        return SchurVector(
            {p: scalar * c for p, c in self._coeffs.items()}, self.max_degree, self.max_length
        )

    def truncated(self, max_degree: int, max_length: int | None) -> "SchurVector":
        return SchurVector(dict(self._coeffs), max_degree, max_length)

    def graded_piece(self, degree: int) -> "SchurVector":
        """The part supported on labels of the given size."""
        return SchurVector(
            {p: c for p, c in self._coeffs.items() if p.size == degree},
            self.max_degree,
            self.max_length,
        )

    def __repr__(self) -> str:
        if self.is_zero():
            body = "0"
        else:
            pieces = []
            for p, c in self.items():
                label = f"s[{p.to_text()}]"
                pieces.append(label if c == 1 else f"{c}*{label}")
            body = " + ".join(pieces)
        return f"SchurVector({body}; D={self.max_degree}, L={self.max_length})"

    def to_json(self) -> dict:
        return {
            "terms": [{"partition": p.to_json(), "coeff": c} for p, c in self.items()],
            "max_degree": self.max_degree,
            "max_length": self.max_length,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "SchurVector":
        coeffs = {
            Partition(term["partition"]): int(term["coeff"]) for term in payload["terms"]
        }
        return cls(coeffs, int(payload["max_degree"]), payload["max_length"])


def pieri(m: int, v: SchurVector) -> SchurVector:
    """Multiply by the complete homogeneous function of degree m: every label
    picks up a horizontal strip of m boxes."""
    if m < 0:
        raise ValueError("strip size must be non-negative")
    acc: dict[Partition, int] = {}
    for p, c in v.items():
        if p.size + m > v.max_degree:
            continue
        for q in add_horizontal_strip(p, m):
            acc[q] = acc.get(q, 0) + c
    return SchurVector(acc, v.max_degree, v.max_length)


@lru_cache(maxsize=None)
def _lr_expansion(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of s_mu * s_nu.

    Enumerates chains of horizontal-strip additions, one strip per row of nu,
    subject to the lattice condition: after placing letter i, the number of
    i's within the first t rows may not exceed the number of (i-1)'s within
    the first t-1 rows.  Chains satisfying this are exactly the
    Littlewood-Richardson skew tableaux of content nu.
    """
    counts: dict[Partition, int] = {}
    letters = nu.parts

    def place_letter(shape: tuple[int, ...], prev_rows: tuple[int, ...], idx: int) -> None:
        if idx == len(letters):
            p = Partition(shape)
            counts[p] = counts.get(p, 0) + 1
            return
        strip = letters[idx]
        n_rows = len(shape) + 1
        prev_prefix = [0]
        for q in range(n_rows):
            prev_prefix.append(prev_prefix[-1] + (prev_rows[q] if q < len(prev_rows) else 0))

        def fill(row: int, acc: list[int], used: int, cur_prefix: int) -> None:
            if used == strip:
                rows = tuple(acc) + (0,) * (n_rows - len(acc))
                new_shape = tuple(
                    (shape[q] if q < len(shape) else 0) + rows[q] for q in range(n_rows)
                )
                while new_shape and new_shape[-1] == 0:
                    new_shape = new_shape[:-1]
                place_letter(new_shape, rows[: len(new_shape)], idx + 1)
                return
            if row > n_rows:
                return
            base = shape[row - 1] if row - 1 < len(shape) else 0
            above = shape[row - 2] if row >= 2 else None
            cap = strip - used if above is None else min(above - base, strip - used)
            # lattice: cells of this letter in rows <= row stay bounded by
            # cells of the previous letter in rows <= row - 1
            lattice_cap = prev_prefix[row - 1] - cur_prefix if idx > 0 else cap
            cap = min(cap, lattice_cap)
            for add in range(max(cap, 0), -1, -1):
                fill(row + 1, acc + [add], used + add, cur_prefix + add)

        fill(1, [], 0, 0)

    place_letter(mu.parts, (), 0)
    return tuple(sorted(counts.items(), key=lambda item: item[0].sort_key()))


def lr_coefficients(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Littlewood-Richardson expansion of s_mu * s_nu as a plain dict."""
    a, b = (mu, nu) if mu.sort_key() <= nu.sort_key() else (nu, mu)
    return dict(_lr_expansion(a, b))


def lr_multiply(a: SchurVector, b: SchurVector) -> SchurVector:
    """Product in the Schur basis, truncated to the tighter of the two bounds."""
    max_degree = min(a.max_degree, b.max_degree)
    if a.max_length is None:
        max_length = b.max_length
    elif b.max_length is None:
        max_length = a.max_length
    else:
        max_length = min(a.max_length, b.max_length)
    acc: dict[Partition, int] = {}
    for p, cp in a.items():
        for q, cq in b.items():
            if p.size + q.size > max_degree:
                continue
            for target, mult in lr_coefficients(p, q).items():
                acc[target] = acc.get(target, 0) + cp * cq * mult
    return SchurVector(acc, max_degree, max_length)


def branch_remove_variable(v: SchurVector) -> SchurVector:
    """Branch one variable away: every label is replaced by the sum of its
    horizontal-strip removals, and the length bound drops by one."""
    if v.max_length is None:
        new_length: int | None = None
    else:
        new_length = max(v.max_length - 1, 0)
    acc: dict[Partition, int] = {}
    for p, c in v.items():
        for q in remove_horizontal_strips(p):
            acc[q] = acc.get(q, 0) + c
    return SchurVector(acc, v.max_degree, new_length)


def principal_specialize(v: SchurVector, n_vars: int) -> int:
    """Total dimension over n_vars variables: sum of coeff * dim of the Schur
    functor."""
    return sum(c * dim_schur_gl(p, n_vars) for p, c in v.items())

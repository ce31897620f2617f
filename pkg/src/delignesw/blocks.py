"""Block combinatorics of interpolation categories at parameter nu.

Two diagrams are equivalent when the sequences (nu - |lam|, lam_1 - 1,
lam_2 - 2, ...) agree as multisets.  For non-negative integer nu the
non-trivial classes are infinite increasing chains, recovered exactly by a
distinguished-entry reconstruction; for every other nu all classes are
singletons.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConstraintViolation
from .partitions import Partition

DEFAULT_CHAIN_COUNT = 8


class Nu:
    """The interpolation parameter: a non-negative integer or a generic symbol.

    Negative integers and non-integral values behave identically at the label
    level, so they are collapsed into the generic variant.
    """

    __slots__ = ("_value",)

    def __init__(self, value: int | None = None):
        if value is not None:
            value = int(value)
            if value < 0:
                value = None
        self._value = value

    @classmethod
    def generic(cls) -> "Nu":
        return cls(None)

    @classmethod
    def of(cls, value: int) -> "Nu":
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> "Nu":
        text = text.strip()
        if text.lower() == "generic":
            return cls.generic()
        return cls(int(text))

    @property
    def is_generic(self) -> bool:
        return self._value is None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ConstraintViolation("generic parameter has no integer value")
        return self._value

    def __eq__(self, other) -> bool:
        return isinstance(other, Nu) and self._value == other._value

    def __hash__(self) -> int:
        return hash(("Nu", self._value))

    def __repr__(self) -> str:
        return f"Nu({self._value!r})"

    def __str__(self) -> str:
        return "generic" if self._value is None else str(self._value)

    def to_json(self) -> int | str:
        return "generic" if self._value is None else self._value


@dataclass(frozen=True)
class FormalEntry:
    """The symbol nu - offset, distinct from every integer."""

    offset: int

    def __repr__(self) -> str:
        return "nu" if self.offset == 0 else f"nu-{self.offset}"


@dataclass(frozen=True)
class CSequence:
    """Truncated content sequence of a diagram at parameter nu.

    The head entry is nu - |lam| (formal when nu is generic) and the i-th
    following entry is lam_i - i; ``depth`` is the total number of entries.
    Compared as a multiset.
    """

    entries: tuple
    depth: int

    def multiset(self) -> Counter:
        return Counter(self.entries)


def c_sequence(nu: Nu, lam: Partition, depth: int) -> CSequence:
    if depth < lam.length + 1:
        raise ConstraintViolation(
            f"depth {depth} too small for {lam!r}: need at least {lam.length + 1}"
        )
    head = FormalEntry(lam.size) if nu.is_generic else nu.value - lam.size
    tail = tuple(lam.row(i) - i for i in range(1, depth))
    return CSequence((head,) + tail, depth)


def equivalent(nu: Nu, lam: Partition, mu: Partition) -> bool:
    """Whether lam and mu lie in the same block at parameter nu."""
    if nu.is_generic:
        return lam == mu
    depth = max(lam.length, mu.length) + 1
    return c_sequence(nu, lam, depth).multiset() == c_sequence(nu, mu, depth).multiset()


@lru_cache(maxsize=None)
def _trivial_class(v: int, lam: Partition) -> bool:
    """A class is a singleton exactly when the head entry collides with a
    row entry or with the -i tail."""
    head = v - lam.size
    if any(lam.row(i) - i == head for i in range(1, lam.length + 1)):
        return True
    return lam.size - v > lam.length


@lru_cache(maxsize=None)
def _members_up_to_size(v: int, lam: Partition, size_bound: int) -> tuple[Partition, ...]:
    """All class members of size <= size_bound, ascending.

    At depth K every entry of the truncated multiset may act as the head
    nu - |mu| of a candidate member; the remaining entries, sorted strictly
    decreasing, must reconstruct a partition of the matching size.  Depth
    max(len, size_bound) + 1 sees every member with size <= size_bound.
    """
    depth = max(lam.length, size_bound, 1) + 1
    entries = [v - lam.size] + [lam.row(i) - i for i in range(1, depth)]
    found: set[Partition] = set()
    for head in set(entries):
        rest = list(entries)
        rest.remove(head)
        rest.sort(reverse=True)
        if any(rest[i] == rest[i + 1] for i in range(len(rest) - 1)):
            continue
        rows = [rest[i] + i + 1 for i in range(len(rest))]
        if rows and rows[-1] < 0:
            continue
        mu = Partition(rows)
        if v - mu.size == head and mu.size <= size_bound:
            found.add(mu)
    return tuple(sorted(found, key=lambda p: p.size))


@dataclass(frozen=True)
class BlockClass:
    """A nu-equivalence class: a singleton or the first members of a chain."""

    kind: str  # "trivial" | "chain"
    members: tuple[Partition, ...]

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    def to_json(self) -> dict:
        return {"kind": self.kind, "members": [p.to_json() for p in self.members]}


def block_class(nu: Nu, lam: Partition, count: int = DEFAULT_CHAIN_COUNT) -> BlockClass:
    """The class of lam, materialized to ``count`` members when it is a chain."""
    if count < 1:
        raise ValueError("count must be positive")
    if nu.is_generic or _trivial_class(nu.value, lam):
        return BlockClass("trivial", (lam,))
    v = nu.value
    # one new member per tail entry, so the first `count` members all have
    # size at most v + len(lam) + count
    members = _members_up_to_size(v, lam, v + lam.length + count)
    return BlockClass("chain", members[:count])


def class_from_core(n: int, mu: Partition, count: int = DEFAULT_CHAIN_COUNT) -> BlockClass:
    """The chain attached to a diagram mu of size n: its minimal member is mu
    with the top row removed."""
    if n < 0:
        raise ConstraintViolation("parameter must be a non-negative integer")
    if mu.size != n:
        raise ConstraintViolation(f"{mu!r} has size {mu.size}, expected {n}")
    minimal = Partition(mu.parts[1:])
    return block_class(Nu.of(n), minimal, count)


@lru_cache(maxsize=None)
def successor(nu: Nu, lam: Partition) -> Partition | None:
    """The next member of lam's chain, or None when the class is trivial."""
    if nu.is_generic or _trivial_class(nu.value, lam):
        return None
    v = nu.value
    # any member satisfies |lam| <= v + len(lam), so the successor fits below
    members = _members_up_to_size(v, lam, v + lam.length + 1)
    for mu in members:
        if mu.size > lam.size:
            return mu
    raise AssertionError(f"chain of {lam!r} at nu={v} has no successor below bound")


def fil_level_deligne(nu: Nu, lam: Partition) -> int:
    """Smallest filtration level containing the simple labelled by lam: its
    own length for singleton classes, the successor's length otherwise."""
    succ = successor(nu, lam)
    return lam.length if succ is None else succ.length

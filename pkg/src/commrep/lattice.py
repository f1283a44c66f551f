"""Finite bounded lattices given by explicit meet and join tables.

Elements are the dense indices ``0 .. m-1``; the names supplied at
construction are used only at the I/O boundary.  Construction always runs
the full axiom check (commutativity, associativity, idempotence,
absorption, order consistency, existence of top and bottom), so any
``Lattice`` instance in circulation is a genuine bounded lattice and
downstream code never re-validates.

Conventions:
    - ``leq(a, b)`` holds iff ``meet(a, b) == a`` (equivalently
      ``join(a, b) == b``).
    - ``lower_covers(a)`` returns the elements directly below ``a``.
    - ``big_meet([])`` is the top element, ``big_join([])`` the bottom.
"""

from __future__ import annotations

import math
from functools import reduce
from numbers import Integral
from typing import Iterable, Sequence

import numpy as np

__all__ = ["Lattice", "LatticeError", "chain", "divisor_lattice"]


class LatticeError(ValueError):
    """An axiom violation in the supplied tables; the message carries a witness."""


def _as_table(table, m: int, label: str) -> np.ndarray:
    arr = np.asarray(table)
    if arr.shape != (m, m):
        raise LatticeError(f"{label} table must be {m}x{m}, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise LatticeError(f"{label} table must contain element indices")
    if arr.min(initial=0) < 0 or arr.max(initial=0) >= m:
        bad = np.argwhere((arr < 0) | (arr >= m))[0]
        raise LatticeError(
            f"{label} table entry at {tuple(bad)} is out of range 0..{m - 1}"
        )
    return arr.astype(np.intp)


class Lattice:
    """A finite bounded lattice over named elements.

    Parameters
    ----------
    names : sequence of distinct element names.
    meet_table, join_table : m x m tables of element indices.
    """

    def __init__(self, names: Sequence[str], meet_table, join_table):
        names = tuple(str(n) for n in names)
        if not names:
            raise LatticeError("a lattice needs at least one element")
        if len(set(names)) != len(names):
            raise LatticeError("element names must be distinct")
        m = len(names)
        self.names = names
        self.m = m
        self._meet = _as_table(meet_table, m, "meet")
        self._join = _as_table(join_table, m, "join")
        self._index = {n: i for i, n in enumerate(names)}
        self._validate()

        leq = self._meet == np.arange(m)[:, None]  # leq[a, b] iff a <= b
        lt = leq & ~np.eye(m, dtype=bool)
        self._leq = leq
        self._covers = lt & ~(lt @ lt)  # covers[a, b] iff b covers a

        tops = np.flatnonzero(leq.all(axis=0))
        bottoms = np.flatnonzero(leq.all(axis=1))
        if len(tops) != 1 or len(bottoms) != 1:
            raise LatticeError("lattice must have a unique top and bottom")
        self.top = int(tops[0])
        self.bottom = int(bottoms[0])

        for arr in (self._meet, self._join, self._leq, self._covers):
            arr.setflags(write=False)
        self._hash = hash((names, self._meet.tobytes(), self._join.tobytes()))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_leq(cls, names: Sequence[str], leq_matrix) -> "Lattice":
        """Build a lattice from a boolean order matrix (leq[a][b] iff a <= b).

        Meets and joins are computed as greatest lower / least upper bounds
        and then validated like directly supplied tables.
        """
        names = tuple(str(n) for n in names)
        m = len(names)
        leq = np.asarray(leq_matrix, dtype=bool)
        if leq.shape != (m, m):
            raise LatticeError(f"leq matrix must be {m}x{m}, got shape {leq.shape}")
        meet = np.zeros((m, m), dtype=np.intp)
        join = np.zeros((m, m), dtype=np.intp)
        for a in range(m):
            for b in range(m):
                meet[a, b] = cls._bound(leq, names, a, b, lower=True)
                join[a, b] = cls._bound(leq, names, a, b, lower=False)
        lat = cls(names, meet, join)
        if not np.array_equal(lat.leq_matrix, leq):
            bad = np.argwhere(lat.leq_matrix != leq)[0]
            a, b = (int(x) for x in bad)
            raise LatticeError(
                f"relation is not a lattice order: derived order disagrees "
                f"at ({names[a]}, {names[b]})"
            )
        return lat

    @staticmethod
    def _bound(leq: np.ndarray, names, a: int, b: int, lower: bool) -> int:
        if lower:
            cand = np.flatnonzero(leq[:, a] & leq[:, b])
            hits = [int(c) for c in cand if leq[cand, c].all()]
        else:
            cand = np.flatnonzero(leq[a, :] & leq[b, :])
            hits = [int(c) for c in cand if leq[c, cand].all()]
        if len(hits) != 1:
            kind = "greatest lower" if lower else "least upper"
            raise LatticeError(
                f"order has no {kind} bound for ({names[a]}, {names[b]})"
            )
        return hits[0]

    # -- validation --------------------------------------------------------

    def _validate(self) -> None:
        m = self.m
        idx = np.arange(m)
        for label, t in (("meet", self._meet), ("join", self._join)):
            bad = np.argwhere(t != t.T)
            if len(bad):
                a, b = (int(x) for x in bad[0])
                raise LatticeError(
                    f"{label} is not commutative at ({self._fmt(a)}, {self._fmt(b)})"
                )
            bad = np.flatnonzero(t[idx, idx] != idx)
            if len(bad):
                a = int(bad[0])
                raise LatticeError(f"{label} is not idempotent at {self._fmt(a)}")
            left = t[t, :]  # left[a, b, c] = t[t[a, b], c]
            right = t[:, t]  # right[a, b, c] = t[a, t[b, c]]
            bad = np.argwhere(left != right)
            if len(bad):
                a, b, c = (int(x) for x in bad[0])
                raise LatticeError(
                    f"{label} is not associative at "
                    f"({self._fmt(a)}, {self._fmt(b)}, {self._fmt(c)})"
                )
        rows = idx[:, None]
        bad = np.argwhere(self._meet[rows, self._join] != rows)
        if len(bad):
            a, b = (int(x) for x in bad[0])
            raise LatticeError(
                f"absorption a∧(a∨b)=a fails at ({self._fmt(a)}, {self._fmt(b)})"
            )
        bad = np.argwhere(self._join[rows, self._meet] != rows)
        if len(bad):
            a, b = (int(x) for x in bad[0])
            raise LatticeError(
                f"absorption a∨(a∧b)=a fails at ({self._fmt(a)}, {self._fmt(b)})"
            )
        meets_a = self._meet == idx[:, None]
        joins_b = self._join == idx[None, :]
        bad = np.argwhere(meets_a != joins_b)
        if len(bad):
            a, b = (int(x) for x in bad[0])
            raise LatticeError(
                f"order is inconsistent at ({self._fmt(a)}, {self._fmt(b)}): "
                "a∧b=a must coincide with a∨b=b"
            )

    def _fmt(self, i: int) -> str:
        return self.names[i]

    # -- queries -----------------------------------------------------------

    def meet(self, a: int, b: int) -> int:
        return int(self._meet[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self._join[a, b])

    def leq(self, a: int, b: int) -> bool:
        return bool(self._leq[a, b])

    def lower_covers(self, a: int) -> tuple[int, ...]:
        """All b with b < a and nothing strictly between."""
        return tuple(int(b) for b in np.flatnonzero(self._covers[:, a]))

    def big_meet(self, elems: Iterable[int]) -> int:
        return reduce(self.meet, elems, self.top)

    def big_join(self, elems: Iterable[int]) -> int:
        return reduce(self.join, elems, self.bottom)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown lattice element {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def resolve(self, elem) -> int:
        """Accept an element given as an index or as a name."""
        if isinstance(elem, str):
            return self.index(elem)
        if isinstance(elem, Integral) and not isinstance(elem, bool):
            i = int(elem)
            if 0 <= i < self.m:
                return i
            raise ValueError(f"element index {i} out of range 0..{self.m - 1}")
        raise ValueError(f"cannot interpret {elem!r} as a lattice element")

    @property
    def meet_table(self) -> np.ndarray:
        return self._meet

    @property
    def join_table(self) -> np.ndarray:
        return self._join

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.names == other.names
            and np.array_equal(self._meet, other._meet)
            and np.array_equal(self._join, other._join)
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Lattice({list(self.names)!r})"


def chain(m: int, names: Sequence[str] | None = None) -> Lattice:
    """The m-element chain 0 < 1 < ... < m-1."""
    if names is None:
        names = [str(i) for i in range(m)]
    idx = np.arange(m)
    meet = np.minimum(idx[:, None], idx[None, :])
    join = np.maximum(idx[:, None], idx[None, :])
    return Lattice(names, meet, join)


def divisor_lattice(n: int) -> Lattice:
    """Divisors of n ordered by divisibility, with gcd as meet and lcm as join."""
    divs = [d for d in range(1, n + 1) if n % d == 0]
    pos = {d: i for i, d in enumerate(divs)}
    m = len(divs)
    meet = np.zeros((m, m), dtype=np.intp)
    join = np.zeros((m, m), dtype=np.intp)
    for i, a in enumerate(divs):
        for j, b in enumerate(divs):
            meet[i, j] = pos[math.gcd(a, b)]
            join[i, j] = pos[a * b // math.gcd(a, b)]
    return Lattice([str(d) for d in divs], meet, join)

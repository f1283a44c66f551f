"""Between operation sequences and their occurrence-count encodings.

A symmetric operation sequence on an m-element lattice assigns a lattice
element to every finite multiset of lattice elements; encoding multisets
as occurrence-count vectors turns the sequence into a function from N^m
into the lattice, antitone exactly when prepending arguments never raises
the value.  This module evaluates (extended) bracket expressions through a
representation of that function, converts representations to equality sets
and back, and ships the worked example sequences used throughout the test
suite and the demos.

Equalities come in two kinds.  A plain equality states the value of the
sequence on one multiset of arguments.  An extended equality additionally
names a set of elements that may be inserted arbitrarily often; its value
is the meet over all such insertions, which on the encoding side is the
continuation evaluated with INF in the coordinates of the named elements.
A representation's canonical points translate into plain equalities whose
largest symmetric antitone model is the represented sequence; the points
of a complete representation translate into extended equalities that pin
the sequence down uniquely.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .antitone import Rep, equal_fn
from .lattice import Lattice, chain, divisor_lattice
from .vectors import INF, Vec, unit, vadd, vsub

__all__ = [
    "CommEquality",
    "ExtCommEquality",
    "args_from_vector",
    "encode_args",
    "eval_commutator",
    "eval_extended",
    "example",
    "largest_from_equalities",
    "reduced_equalities",
    "satisfies",
    "to_equalities",
    "to_extended_equalities",
]


@dataclass(frozen=True)
class CommEquality:
    """States that the sequence takes value ``rhs`` on the argument multiset
    ``args`` (a sorted tuple of element indices; order never matters)."""

    args: tuple[int, ...]
    rhs: int

    def render(self, lattice: Lattice) -> str:
        inner = ",".join(lattice.name(a) for a in self.args)
        return f"[{inner}] = {lattice.name(self.rhs)}"


@dataclass(frozen=True)
class ExtCommEquality:
    """Like :class:`CommEquality` with a set ``unbounded`` of elements that
    may additionally occur any number of times; the stated value is the
    meet over all such paddings."""

    unbounded: frozenset[int]
    args: tuple[int, ...]
    rhs: int

    def render(self, lattice: Lattice) -> str:
        s = ",".join(sorted(lattice.name(u) for u in self.unbounded))
        inner = ",".join(lattice.name(a) for a in self.args)
        return f"[{{{s}}}; {inner}] = {lattice.name(self.rhs)}"


def _resolve_args(lattice: Lattice, args) -> tuple[int, ...]:
    return tuple(sorted(lattice.resolve(a) for a in args))


def make_equality(lattice: Lattice, args, rhs) -> CommEquality:
    return CommEquality(_resolve_args(lattice, args), lattice.resolve(rhs))


def make_extended_equality(lattice: Lattice, unbounded, args, rhs) -> ExtCommEquality:
    return ExtCommEquality(
        frozenset(lattice.resolve(u) for u in unbounded),
        _resolve_args(lattice, args),
        lattice.resolve(rhs),
    )


def encode_args(lattice: Lattice, args) -> Vec:
    """Occurrence-count vector of an argument multiset."""
    counts = Counter(lattice.resolve(a) for a in args)
    return tuple(counts.get(j, 0) for j in range(lattice.m))


def args_from_vector(lattice: Lattice, vec: Vec) -> tuple[int, ...]:
    """Expand an occurrence-count vector back into a sorted argument tuple."""
    out = []
    for j, c in enumerate(vec):
        out.extend([j] * c)
    return tuple(out)


def _require_encoding(rep: Rep) -> None:
    if rep.dim != rep.lattice.m:
        raise ValueError(
            f"sequence evaluation needs dimension {rep.lattice.m}, got {rep.dim}"
        )


def eval_commutator(rep: Rep, args) -> int:
    """Value of the encoded sequence on an argument multiset.

    The empty multiset evaluates to top, consistently with the encoding's
    value at the zero vector.
    """
    _require_encoding(rep)
    return rep.eval(encode_args(rep.lattice, args))


def eval_extended(rep: Rep, unbounded, args) -> int:
    """Value of an extended bracket: ``unbounded`` elements may be inserted
    arbitrarily often, so their coordinates are INF in the encoding."""
    _require_encoding(rep)
    lat = rep.lattice
    s = {lat.resolve(u) for u in unbounded}
    base = encode_args(lat, args)
    vec = tuple(INF if j in s else base[j] for j in range(lat.m))
    return rep.eval_ext(vec)


def satisfies(rep: Rep, eq: CommEquality | ExtCommEquality) -> bool:
    """Whether the encoded sequence attains the stated equality exactly."""
    if isinstance(eq, ExtCommEquality):
        return eval_extended(rep, eq.unbounded, eq.args) == eq.rhs
    return eval_commutator(rep, eq.args) == eq.rhs


def to_equalities(rep: Rep) -> tuple[CommEquality, ...]:
    """One plain equality per canonical point.

    The represented sequence is the largest symmetric antitone sequence
    satisfying the returned set.
    """
    _require_encoding(rep)
    lat = rep.lattice
    return tuple(
        CommEquality(args_from_vector(lat, vec), val)
        for vec, val in rep.canonical().points
    )


def to_extended_equalities(rep: Rep) -> tuple[ExtCommEquality, ...]:
    """One extended equality per point of a complete representation.

    The returned set pins the sequence down uniquely among symmetric
    antitone sequences.  Several complete point sets exist; the one
    produced by :meth:`Rep.complete` is used, so the output is a valid
    pinning set rather than one particular hand-picked presentation.
    """
    _require_encoding(rep)
    lat = rep.lattice
    out = []
    for vec, val in rep.complete().points:
        unbounded = frozenset(j for j, c in enumerate(vec) if c == INF)
        finite = tuple(c if c != INF else 0 for c in vec)
        out.append(ExtCommEquality(unbounded, args_from_vector(lat, finite), val))
    return tuple(out)


def largest_from_equalities(
    lattice: Lattice, eqs
) -> tuple[Rep, tuple[tuple[CommEquality, bool], ...]]:
    """The largest symmetric antitone sequence below the stated values.

    Returns its representation together with, for each input equality,
    whether the sequence attains it with equality.  An inconsistent set
    shows up as equalities that are not attained (the function passes
    strictly below them).
    """
    eqs = tuple(eqs)
    rep = Rep(
        lattice,
        lattice.m,
        [(encode_args(lattice, e.args), e.rhs) for e in eqs],
    )
    report = tuple((e, satisfies(rep, e)) for e in eqs)
    return rep, report


def _monotone_closed_rep(lattice: Lattice, pairs) -> Rep:
    """Largest sequence with boundedness and monotony below the given points.

    Unit points (element j at its own singleton bracket) force boundedness;
    monotony is forced by closing every constraint under replacing one
    occurrence by a smaller element, which only adds constraints any
    monotone sequence below the originals must satisfy.
    """
    m = lattice.m
    work = [(unit(m, j), j) for j in range(m)]
    work.extend((tuple(v), val) for v, val in pairs)
    seen = set(work)
    while work:
        b, beta = work.pop()
        for j in range(m):
            if b[j] == 0:
                continue
            for i in range(m):
                if i == j or not lattice.leq(i, j):
                    continue
                moved = vadd(vsub(b, unit(m, j)), unit(m, i))
                item = (moved, beta)
                if item not in seen:
                    seen.add(item)
                    work.append(item)
    return Rep(lattice, m, seen)


def reduced_equalities(rep: Rep) -> tuple[CommEquality, ...]:
    """A pruned equality set determining the sequence as the largest one
    satisfying boundedness, monotony, omission and symmetry.

    Starting from the canonical equalities, the trivial ones are dropped
    (the empty bracket, and singleton brackets attaining their own
    argument), then any equality that the largest bounded monotone
    sequence through the remaining ones already attains.
    """
    _require_encoding(rep)
    lat = rep.lattice

    def trivial(e: CommEquality) -> bool:
        if not e.args:
            return e.rhs == lat.top  # the empty bracket is top by encoding
        return len(e.args) == 1 and e.args[0] == e.rhs

    kept = [e for e in to_equalities(rep) if not trivial(e)]
    for e in sorted(kept, key=lambda q: (len(q.args), q.args, q.rhs)):
        rest = [q for q in kept if q != e]
        closed = _monotone_closed_rep(
            lat, [(encode_args(lat, q.args), q.rhs) for q in rest]
        )
        if equal_fn(closed, rep):
            kept = rest
    return tuple(kept)


def example(name: str) -> tuple[Lattice, Rep]:
    """A named example: a lattice and an encoded sequence on it.

    - ``div52``: divisors of 52 under divisibility, with a two-point
      representation in two variables (not a sequence encoding; its
      dimension differs from the lattice size on purpose).
    - ``B``: the three element chain 0 < alpha < 1 with the sequence whose
      binary value on (1, 1) is alpha, which hits 0 as soon as alpha and 1
      mix, and which stays at alpha for any number of 1 arguments.
    - ``B7``: as ``B`` except that eight or more 1 arguments collapse the
      value to 0 while up to seven keep alpha.
    """
    key = name.lower()
    if key == "div52":
        lat = divisor_lattice(52)
        rep = Rep(lat, 2, [((10, 20), "26"), ((30, 5), "4")])
        return lat, rep
    if key in ("b", "b7"):
        lat = chain(3, ["0", "alpha", "1"])
        pts = [
            ((0, 0, 0), "1"),
            ((0, 1, 0), "alpha"),
            ((0, 0, 2), "alpha"),
            ((1, 0, 0), "0"),
            ((0, 1, 1), "0"),
            ((0, 2, 0), "0"),
        ]
        if key == "b7":
            pts.append(((0, 0, 8), "0"))
        return lat, Rep(lat, 3, pts)
    raise ValueError(f"unknown example {name!r} (expected div52, B or B7)")

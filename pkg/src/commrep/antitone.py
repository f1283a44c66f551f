"""Antitone maps from N^d into a finite lattice, given by finite point sets.

A representation is a finite set of pairs (vector, element).  The function
it represents sends x to the meet of all prescribed values whose vector
lies below x (the empty meet being the top element); this is the largest
antitone function lying below every prescribed point.  The same rule,
applied verbatim to vectors with INF coordinates, evaluates the canonical
antitone continuation of the function to the INF-extended domain.

Besides evaluation, this module computes

  - level sets ``{x : F(x) <= alpha}`` as :class:`~commrep.upset.UpSet`,
  - the canonical representation (minimal vectors of each value class),
  - a complete representation: a finite subset of the extended graph
    through which exactly one antitone function passes,
  - the decision procedure :func:`check_complete` for that property,

and the pointwise comparisons and combinations used elsewhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .lattice import Lattice
from .upset import UpSet, min_elements
from .vectors import (
    INF,
    Vec,
    as_ext_vec,
    as_nat_vec,
    residual,
    vleq,
    vsup,
    zero,
)

__all__ = [
    "ExtRep",
    "Rep",
    "check_complete",
    "equal_fn",
    "join_fn",
    "le_pointwise",
    "step",
]


class Rep:
    """A finite representation of an antitone map from N^dim into a lattice.

    Points may be passed in any order; duplicate vectors are merged by
    taking the meet of their values, which leaves the represented function
    unchanged.  Element values may be given as indices or names.
    """

    def __init__(self, lattice: Lattice, dim: int, points: Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        merged: dict[Vec, int] = {}
        for vec, val in points:
            v = as_nat_vec(vec, dim)
            e = lattice.resolve(val)
            merged[v] = lattice.meet(merged[v], e) if v in merged else e
        self.lattice = lattice
        self.dim = dim
        self.points: tuple[tuple[Vec, int], ...] = tuple(sorted(merged.items()))
        self._values: dict[Vec, int] = {}
        self._levels: dict[int, UpSet] = {}
        self._profile: dict[int, tuple[Vec, ...]] | None = None

    # -- evaluation ---------------------------------------------------------

    def eval(self, x) -> int:
        """Value at a finite vector: the meet of prescribed values below x."""
        return self._value_at(as_nat_vec(x, self.dim))

    def eval_ext(self, x) -> int:
        """Value of the antitone continuation at a vector with INF allowed.

        Coincides with the meet of the values at all finite points below x,
        and with :meth:`eval` on finite input.
        """
        return self._value_at(as_ext_vec(x, self.dim))

    def _value_at(self, x: Vec) -> int:
        try:
            return self._values[x]
        except KeyError:
            v = self.lattice.big_meet(
                val for vec, val in self.points if vleq(vec, x)
            )
            self._values[x] = v
            return v

    def witness(self, x) -> Vec:
        """A finite b <= x at which the function attains eval_ext(x).

        Computed as the supremum of all prescribed vectors below x (the
        zero vector if there are none).
        """
        x = as_ext_vec(x, self.dim)
        b = zero(self.dim)
        for vec, _ in self.points:
            if vleq(vec, x):
                b = vsup(b, vec)
        return b

    # -- level sets and derived representations ------------------------------

    def _meet_profile(self) -> dict[int, tuple[Vec, ...]]:
        # For every attainable meet value v, the minimal suprema of subsets
        # of prescribed vectors whose values meet to v.  Grouping subset
        # suprema by their meet value explores all subsets without the
        # exponential enumeration; dominated suprema are dropped as they can
        # never produce new minimal level-set elements.
        if self._profile is None:
            lat = self.lattice
            prof: dict[int, set[Vec]] = {lat.top: {zero(self.dim)}}
            for vec, val in self.points:
                updates: dict[int, set[Vec]] = {}
                for mval, anti in prof.items():
                    nv = lat.meet(mval, val)
                    bucket = updates.setdefault(nv, set())
                    for s in anti:
                        bucket.add(vsup(s, vec))
                for nv, vecs in updates.items():
                    prof[nv] = min_elements(prof.get(nv, set()) | vecs)
            self._profile = {v: tuple(sorted(a)) for v, a in prof.items()}
        return self._profile

    def sublevel(self, alpha) -> UpSet:
        """The upward closed set {x : eval(x) <= alpha}.

        A minimal solution is always the supremum of the prescribed vectors
        lying below it, so the minimal generators are found among subset
        suprema whose value meet drops below alpha.
        """
        alpha = self.lattice.resolve(alpha)
        if alpha not in self._levels:
            prof = self._meet_profile()
            pts = [
                v
                for mval, anti in prof.items()
                if self.lattice.leq(mval, alpha)
                for v in anti
            ]
            self._levels[alpha] = UpSet.from_points(self.dim, pts)
        return self._levels[alpha]

    def canonical(self) -> "Rep":
        """The canonical representation: minimal vectors of each value class.

        The minimal vectors attaining exactly alpha are the minimal vectors
        of the alpha-sublevel that do not already occur in the sublevel of
        an element covered by alpha.  The result represents the same
        function and is a subset of its graph.
        """
        return _rep_from_level_minima(
            self.lattice, self.dim, [self.sublevel(a) for a in range(self.lattice.m)]
        )

    def complete(self) -> "ExtRep":
        """A finite subset of the extended graph pinning the function uniquely.

        For every lattice element the minimal vectors of its sublevel and
        the maximal vectors outside it are collected; exactly one antitone
        function passes through the resulting evaluated point set, which
        :func:`check_complete` accepts.
        """
        pts: dict[Vec, int] = {}
        for a in range(self.lattice.m):
            level = self.sublevel(a)
            for vec in level.gens:
                pts.setdefault(vec, self._value_at(vec))
            for vec in level.complement_maxima():
                pts.setdefault(vec, self._value_at(vec))
        return ExtRep(self.lattice, self.dim, sorted(pts.items()))

    # -- properties of the represented function ------------------------------

    def finitely_determinable(self) -> bool:
        """Whether a finite subset of the plain (un-extended) graph can pin
        the function down: true iff the value along every coordinate axis
        eventually reaches bottom, i.e. the continuation at INF times each
        unit vector is bottom."""
        lat = self.lattice
        for i in range(self.dim):
            axis = tuple(INF if j == i else 0 for j in range(self.dim))
            if self._value_at(axis) != lat.bottom:
                return False
        return True

    def shifted(self, a) -> "Rep":
        """Representation of x -> eval(x + a) for finite a."""
        a = as_nat_vec(a, self.dim)
        return Rep(
            self.lattice,
            self.dim,
            [(residual(vec, a), val) for vec, val in self.points],
        )

    def _compatible(self, other) -> None:
        if self.lattice != other.lattice:
            raise ValueError("representations use different lattices")
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Rep)
            and self.lattice == other.lattice
            and self.dim == other.dim
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.lattice, self.dim, self.points))

    def __repr__(self) -> str:
        pts = ", ".join(
            f"({list(v)}, {self.lattice.name(e)})" for v, e in self.points
        )
        return f"Rep(dim={self.dim}, points=[{pts}])"


class ExtRep:
    """A finite set of (extended vector, element) points.

    Intended as a subset of the extended graph of some antitone function;
    conflicting values on one vector are rejected outright since no
    function could pass through them.
    """

    def __init__(self, lattice: Lattice, dim: int, points: Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        seen: dict[Vec, int] = {}
        for vec, val in points:
            v = as_ext_vec(vec, dim)
            e = lattice.resolve(val)
            if v in seen and seen[v] != e:
                raise ValueError(f"conflicting values at {v}")
            seen[v] = e
        self.lattice = lattice
        self.dim = dim
        self.points: tuple[tuple[Vec, int], ...] = tuple(sorted(seen.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtRep)
            and self.lattice == other.lattice
            and self.dim == other.dim
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.lattice, self.dim, self.points))

    def __repr__(self) -> str:
        pts = ", ".join(
            f"({list(v)}, {self.lattice.name(e)})" for v, e in self.points
        )
        return f"ExtRep(dim={self.dim}, points=[{pts}])"


def check_complete(rep: Rep, ext: ExtRep) -> bool:
    """Decide whether ``ext`` pins down the function of ``rep`` uniquely.

    True iff (i) every point of ``ext`` lies on the extended graph, and
    (ii) for every lattice element alpha, the meet of ``ext`` values at
    points below each minimal sublevel vector stays below alpha, while the
    join of ``ext`` values at points above each maximal complement vector
    does not drop below alpha.
    """
    if rep.lattice != ext.lattice:
        raise ValueError("representation and point set use different lattices")
    if rep.dim != ext.dim:
        raise ValueError(f"dimension mismatch: {rep.dim} vs {ext.dim}")
    lat = rep.lattice
    for vec, val in ext.points:
        if rep.eval_ext(vec) != val:
            return False
    for a in range(lat.m):
        level = rep.sublevel(a)
        for b in level.gens:
            bound = lat.big_meet(d for dv, d in ext.points if vleq(dv, b))
            if not lat.leq(bound, a):
                return False
        for b in level.complement_maxima():
            bound = lat.big_join(d for dv, d in ext.points if vleq(b, dv))
            if lat.leq(bound, a):
                return False
    return True


def step(lattice: Lattice, b, beta) -> Rep:
    """The single-point representation: beta above b, top elsewhere."""
    b = tuple(b)
    return Rep(lattice, len(b), [(b, beta)])


def le_pointwise(r1: Rep, r2: Rep) -> bool:
    """Whether r1's function lies below r2's function everywhere.

    It suffices to compare at the prescribed vectors of r2: the function of
    r2 is the largest antitone map below its prescribed points, so any
    antitone map below it there is below it everywhere.
    """
    r1._compatible(r2)
    return all(
        r1.lattice.leq(r1.eval(vec), r2.eval(vec)) for vec, _ in r2.points
    )


def equal_fn(r1: Rep, r2: Rep) -> bool:
    """Whether two representations define the same function."""
    return le_pointwise(r1, r2) and le_pointwise(r2, r1)


def join_fn(r1: Rep, r2: Rep) -> Rep:
    """A representation of the pointwise join of the two functions.

    The sublevel of the join at alpha is the intersection of the operands'
    sublevels (a join drops below alpha iff both operands do), and a
    representation is recovered from those level sets.
    """
    r1._compatible(r2)
    lat = r1.lattice
    levels = [r1.sublevel(a) & r2.sublevel(a) for a in range(lat.m)]
    return _rep_from_level_minima(lat, r1.dim, levels)


def _rep_from_level_minima(
    lattice: Lattice, dim: int, levels: Sequence[UpSet]
) -> Rep:
    # levels[a] must be the a-sublevel of an antitone function; the minimal
    # vectors attaining exactly a are levels[a].gens minus the generators of
    # the sublevels of the lower covers of a.
    pts = []
    for a in range(lattice.m):
        gens = set(levels[a].gens)
        for b in lattice.lower_covers(a):
            gens -= set(levels[b].gens)
        pts.extend((v, a) for v in gens)
    return Rep(lattice, dim, pts)

"""Decision procedures for structural properties of encoded operation sequences.

An operation sequence on an m-element lattice that is symmetric in its
arguments is a function of the occurrence counts alone, hence a map from
N^m into the lattice: coordinate j counts how often lattice element j
occurs among the arguments (elements in the order the lattice declares
them).  These checks therefore require ``rep.dim == rep.lattice.m``.

Property names follow the common numbering for commutator-style operation
sequences:

  - hc1, boundedness: every value lies below each of its arguments.
  - hc2, monotony: replacing an argument by a smaller one cannot raise
    the value.
  - hc3, omission: prepending arguments cannot raise the value.  Holds
    automatically here, since every represented function is antitone.
  - hc4, symmetry: argument order is irrelevant.  Holds automatically,
    occurrence-count vectors carry no order.
  - hc7, join distributivity: the value at a join of arguments is the
    join of the values.
  - hc8, nesting: feeding a value back in as an argument stays below the
    original value.

Each ``check_hc*`` function decides its property for the whole infinite
sequence from the finite representation alone; ``admissibility_report``
bundles them with first-counterexample witnesses.
"""

from __future__ import annotations

from itertools import product

from .antitone import Rep
from .vectors import unit, vadd, vsub

__all__ = [
    "admissibility_report",
    "check_hc1",
    "check_hc2",
    "check_hc3",
    "check_hc4",
    "check_hc7",
    "check_hc8",
    "is_admissible",
]


def _require_encoding(rep: Rep) -> None:
    if rep.dim != rep.lattice.m:
        raise ValueError(
            f"encoded sequences need dimension {rep.lattice.m} "
            f"(one coordinate per lattice element), got {rep.dim}"
        )


def _hc1_witness(rep: Rep):
    # By antitony a violation, if any, already shows at a unit vector.
    _require_encoding(rep)
    lat = rep.lattice
    for j in range(lat.m):
        v = rep.eval(unit(rep.dim, j))
        if not lat.leq(v, j):
            return {
                "property": "hc1",
                "point": unit(rep.dim, j),
                "argument": lat.name(j),
                "value": lat.name(v),
            }
    return None


def _hc2_witness(rep: Rep):
    # The canonical points suffice: any other vector dominates a canonical
    # vector of the same value, and the replacement step factors through it.
    _require_encoding(rep)
    lat = rep.lattice
    for b, beta in rep.canonical().points:
        for j in range(lat.m):
            if b[j] == 0:
                continue
            for i in range(lat.m):
                if i == j or not lat.leq(i, j):
                    continue
                moved = vadd(vsub(b, unit(rep.dim, j)), unit(rep.dim, i))
                v = rep.eval(moved)
                if not lat.leq(v, beta):
                    return {
                        "property": "hc2",
                        "point": b,
                        "replaced": lat.name(j),
                        "by": lat.name(i),
                        "value": lat.name(v),
                        "bound": lat.name(beta),
                    }
    return None


def _hc8_witness(rep: Rep):
    # Assumes hc2.  For each canonical point a and each b below a, replace
    # the b-part of the arguments by the single element eval(b).
    _require_encoding(rep)
    lat = rep.lattice
    for a, alpha in rep.canonical().points:
        for b in product(*(range(c + 1) for c in a)):
            j = rep.eval(b)
            nested = vadd(vsub(a, b), unit(rep.dim, j))
            v = rep.eval(nested)
            if not lat.leq(v, alpha):
                return {
                    "property": "hc8",
                    "point": a,
                    "inner": b,
                    "inner_value": lat.name(j),
                    "value": lat.name(v),
                    "bound": lat.name(alpha),
                }
    return None


def _hc7_triple_ok(rep: Rep, i: int, j: int, k: int, alpha: int) -> bool:
    level = rep.sublevel(alpha)
    ek = level.shift(unit(rep.dim, k))
    ei = level.shift(unit(rep.dim, i))
    ej = level.shift(unit(rep.dim, j))
    return ek == ei & ej


def _hc7_witness(rep: Rep):
    # F(x + e_k) must agree with F(x + e_i) v F(x + e_j) whenever element k
    # is the join of i and j.  Two antitone functions agree iff all their
    # sublevels do, and shifting by a unit vector turns a sublevel U into
    # {x : x + e in U}, while the join's sublevel is the intersection.
    _require_encoding(rep)
    lat = rep.lattice
    for i in range(lat.m):
        for j in range(i, lat.m):
            k = lat.join(i, j)
            for alpha in range(lat.m):
                if _hc7_triple_ok(rep, i, j, k, alpha):
                    continue
                x = _hc7_distinguishing_point(rep, i, j, k, alpha)
                lhs = rep.eval(vadd(x, unit(rep.dim, k)))
                rhs = lat.join(
                    rep.eval(vadd(x, unit(rep.dim, i))),
                    rep.eval(vadd(x, unit(rep.dim, j))),
                )
                return {
                    "property": "hc7",
                    "joined": (lat.name(i), lat.name(j)),
                    "join": lat.name(k),
                    "point": x,
                    "value_at_join": lat.name(lhs),
                    "join_of_values": lat.name(rhs),
                }
    return None


def _hc7_distinguishing_point(rep: Rep, i, j, k, alpha):
    level = rep.sublevel(alpha)
    ek = level.shift(unit(rep.dim, k))
    both = level.shift(unit(rep.dim, i)) & level.shift(unit(rep.dim, j))
    for g in ek.gens:
        if not both.member(g):
            return g
    for g in both.gens:
        if not ek.member(g):
            return g
    raise AssertionError("sublevels differ but no separating generator found")


def check_hc1(rep: Rep) -> bool:
    """Boundedness: the value at each unit vector lies below its element."""
    return _hc1_witness(rep) is None


def check_hc2(rep: Rep) -> bool:
    """Monotony: replacing an occurrence by a smaller element never raises
    the value.  Checked on the canonical representation."""
    return _hc2_witness(rep) is None


def check_hc3(rep: Rep) -> bool:
    """Omission.  Always true: represented functions are antitone."""
    _require_encoding(rep)
    return True


def check_hc4(rep: Rep) -> bool:
    """Symmetry.  Always true: the occurrence-count encoding is symmetric."""
    _require_encoding(rep)
    return True


def check_hc7(rep: Rep) -> bool:
    """Join distributivity in each argument."""
    return _hc7_witness(rep) is None


def check_hc8(rep: Rep) -> bool:
    """Nesting.  Requires hc2; raises ValueError when it fails."""
    if not check_hc2(rep):
        raise ValueError("hc8 test requires hc2 (monotony) to hold")
    return _hc8_witness(rep) is None


def is_admissible(rep: Rep) -> bool:
    """Whether the encoded sequence satisfies hc1, hc2, hc7 and hc8
    (hc3 and hc4 hold by encoding)."""
    if not (check_hc1(rep) and check_hc2(rep)):
        return False
    return check_hc7(rep) and check_hc8(rep)


def admissibility_report(rep: Rep) -> dict:
    """Per-property outcome with a first counterexample witness when false."""
    report: dict = {}
    w1 = _hc1_witness(rep)
    w2 = _hc2_witness(rep)
    w7 = _hc7_witness(rep)
    report["hc1"] = {"holds": w1 is None, "witness": w1}
    report["hc2"] = {"holds": w2 is None, "witness": w2}
    report["hc3"] = {"holds": True, "note": "antitone by construction"}
    report["hc4"] = {"holds": True, "note": "occurrence counts carry no order"}
    report["hc7"] = {"holds": w7 is None, "witness": w7}
    if w2 is None:
        w8 = _hc8_witness(rep)
        report["hc8"] = {"holds": w8 is None, "witness": w8}
    else:
        report["hc8"] = {"holds": None, "note": "not evaluated, needs hc2"}
    report["admissible"] = all(
        report[p]["holds"] is True for p in ("hc1", "hc2", "hc7", "hc8")
    )
    return report

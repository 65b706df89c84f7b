"""The Boolean ring of finite and cofinite sets of naturals.

Addition is symmetric difference, multiplication is intersection, 1 is the
set of all naturals.  Every element is represented exactly by a flag plus a
finite support: the set itself when finite, its complement when cofinite.

Ideals here are generated by finitely many sets, optionally together with
the socle (the ideal of all finite sets); that family is closed under the
questions asked below and contains every ideal the checks need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

_BOUND = 1 << 64


@dataclass(frozen=True)
class BoolSet:
    cofinite: bool
    support: frozenset[int]

    @property
    def is_zero(self) -> bool:
        return not self.cofinite and not self.support

    @property
    def is_one(self) -> bool:
        return self.cofinite and not self.support


def _checked(elems: Iterable[int]) -> frozenset[int]:
    s = frozenset(elems)
    for n in s:
        if not isinstance(n, int) or n < 0 or n >= _BOUND:
            raise ValueError(f"set elements must be naturals below 2**64, got {n!r}")
    return s


def finite(elems: Iterable[int] = ()) -> BoolSet:
    return BoolSet(False, _checked(elems))


def cofinite_complement(elems: Iterable[int] = ()) -> BoolSet:
    """The set of all naturals except the given ones."""
    return BoolSet(True, _checked(elems))


ZERO = finite()
ONE = cofinite_complement()


def bool_add(x: BoolSet, y: BoolSet) -> BoolSet:
    # symmetric difference; the flag/support split makes this one rule
    return BoolSet(x.cofinite != y.cofinite, x.support ^ y.support)


def bool_mul(x: BoolSet, y: BoolSet) -> BoolSet:
    if x.cofinite and y.cofinite:
        return BoolSet(True, x.support | y.support)
    if x.cofinite:
        return BoolSet(False, y.support - x.support)
    if y.cofinite:
        return BoolSet(False, x.support - y.support)
    return BoolSet(False, x.support & y.support)


def bool_union(x: BoolSet, y: BoolSet) -> BoolSet:
    if x.cofinite and y.cofinite:
        return BoolSet(True, x.support & y.support)
    if x.cofinite:
        return BoolSet(True, x.support - y.support)
    if y.cofinite:
        return BoolSet(True, y.support - x.support)
    return BoolSet(False, x.support | y.support)


def subset(x: BoolSet, y: BoolSet) -> bool:
    return bool_mul(x, y) == x


def diff_finite(x: BoolSet, y: BoolSet) -> bool:
    """Whether x minus y is a finite set."""
    return (not x.cofinite) or y.cofinite


@dataclass(frozen=True)
class CofinIdeal:
    """Ideal generated by gens, together with all finite sets if plus_socle.

    In a Boolean ring the ideal on finitely many generators is just the set
    of ring elements contained in the union of the generators.
    """

    gens: tuple[BoolSet, ...]
    plus_socle: bool = False

    def union(self) -> BoolSet:
        u = ZERO
        for g in self.gens:
            u = bool_union(u, g)
        return u


SOCLE = CofinIdeal((), plus_socle=True)


def ideal_member(I: CofinIdeal, x: BoolSet) -> bool:
    u = I.union()
    if subset(x, u):
        return True
    return I.plus_socle and diff_finite(x, u)


def soc_projection(x: BoolSet) -> int:
    """Image of x in the two-element quotient by the socle: 0 or 1."""
    return 1 if x.cofinite else 0


def ascending_chain(n: int) -> list[CofinIdeal]:
    """Principal ideals on {1}, {1,2}, ..., {1..n}; strictly ascending."""
    if n < 2:
        raise ValueError("need n >= 2 for a chain worth looking at")
    return [CofinIdeal((finite(range(1, k + 1)),)) for k in range(1, n + 1)]


@dataclass(frozen=True)
class EssentialVerdict:
    """kind is essential_improper, essential_proper or not_essential;
    witness is a singleton missed by the ideal when not essential."""

    kind: str
    quotient_order: int | None
    witness: BoolSet | None


def is_essential_ideal(I: CofinIdeal) -> EssentialVerdict:
    """Decide essentiality against the minimal ideals (the singletons).

    An ideal without the socle misses the singleton of any natural outside
    its union; one containing the socle meets every singleton, and is then
    proper exactly when the union is finite, in which case it IS the socle
    and the quotient has two elements.
    """
    u = I.union()
    if I.plus_socle:
        if u.cofinite:
            return EssentialVerdict("essential_improper", 1, None)
        return EssentialVerdict("essential_proper", 2, None)
    if u.is_one:
        return EssentialVerdict("essential_improper", 1, None)
    if u.cofinite:
        missing = min(u.support)
    else:
        missing = 0
        while missing in u.support:
            missing += 1
    return EssentialVerdict("not_essential", None, finite([missing]))


def parse_boolset(text: str) -> BoolSet:
    t = text.strip()
    cof = t.startswith("~")
    if cof:
        t = t[1:].strip()
    if not (t.startswith("{") and t.endswith("}")):
        raise ValueError(f"expected a set literal like {{1,2}} or ~{{}}, got {text!r}")
    body = t[1:-1].strip()
    elems = []
    if body:
        for part in body.split(","):
            p = part.strip()
            if not p.isdigit():
                raise ValueError(f"bad set element {part!r} in {text!r}")
            elems.append(int(p))
    return BoolSet(cof, _checked(elems))


def format_boolset(x: BoolSet) -> str:
    body = "{" + ", ".join(str(n) for n in sorted(x.support)) + "}"
    return "~" + body if x.cofinite else body

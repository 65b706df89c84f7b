"""Exact ideal arithmetic in imaginary quadratic orders Z[w], w = sqrt(-s).

Elements are pairs u + v*w with integer coordinates.  A nonzero ideal is
stored in Hermite normal form as a triple (a, b, c) standing for the
lattice Z*a + Z*(b + c*w) with

    a > 0,  c > 0,  c | a,  c | b,  0 <= b < a,  a*c | b^2 + s*c^2.

The last divisibility is exactly closure under multiplication by w, so a
valid triple is the same thing as a nonzero ideal.  The norm is a*c.

s is any positive integer, squarefree or not.  Non-maximal orders such as
Z[sqrt(-3)] are first-class citizens here: colon ideals, the divisibility
test and the factorisation routine all report honestly when unique
factorisation into maximal ideals breaks down, instead of assuming the
Dedekind property.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .arith import invmod, is_prime, is_squarefree, mod_sqrt, smallest_prime_factor, xgcd
from .finring import ELEMENT_CAP, ENUM_CAP, CapExceeded, FiniteRing, LocalFactor, _build_ring
from .finring import ideal_generators as _fin_ideal_generators
from .finring import prime_spectrum as _fin_prime_spectrum


class StepCapExceeded(RuntimeError):
    """Factorisation ran past its step budget; .steps holds the budget."""

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps


@dataclass(frozen=True)
class QuadOrder:
    """The order Z[sqrt(-s)] for a positive integer s."""

    s: int

    def __post_init__(self):
        # any s >= 1 gives a domain: x^2 + s has no rational root for -s < 0
        if self.s < 1:
            raise ValueError("s must be a positive integer")

    def mul(self, x: QElem, y: QElem) -> QElem:
        return QElem(x.u * y.u - self.s * x.v * y.v, x.u * y.v + x.v * y.u)

    def norm(self, x: QElem) -> int:
        return x.u * x.u + self.s * x.v * x.v

    def ideal(self, a: int, b: int, c: int) -> QIdeal:
        return QIdeal(self.s, a, b, c)

    def unit_ideal(self) -> QIdeal:
        return QIdeal(self.s, 1, 0, 1)

    def principal(self, g: QElem) -> QIdeal:
        return ideal_from_generators(self, [g])

    def is_maximal_order(self) -> bool:
        # the full ring of integers is Z[w] exactly when -s is 2 or 3 mod 4
        # and s has no square factor
        return is_squarefree(self.s) and self.s % 4 != 3


@dataclass(frozen=True)
class QElem:
    u: int
    v: int

    def __add__(self, other: QElem) -> QElem:
        return QElem(self.u + other.u, self.v + other.v)

    def __neg__(self) -> QElem:
        return QElem(-self.u, -self.v)

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0


@dataclass(frozen=True)
class QIdeal:
    """HNF triple; see the module docstring for the invariants."""

    s: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.c <= 0:
            raise ValueError("HNF triple needs a > 0 and c > 0")
        if self.a % self.c or self.b % self.c:
            raise ValueError("HNF triple needs c | a and c | b")
        if not 0 <= self.b < self.a:
            raise ValueError("HNF triple needs 0 <= b < a")
        if (self.b * self.b + self.s * self.c * self.c) % (self.a * self.c):
            raise ValueError("lattice is not closed under multiplication by w")

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def is_unit_ideal(self) -> bool:
        return self.a == 1

    def basis(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, 0), (self.b, self.c)


@dataclass(frozen=True)
class FracIdeal:
    """num / den in lowest terms; den a positive integer."""

    num: QIdeal
    den: int

    @staticmethod
    def make(num: QIdeal, den: int) -> FracIdeal:
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = gcd(gcd(num.a, num.b), gcd(num.c, den))
        return FracIdeal(QIdeal(num.s, num.a // g, num.b // g, num.c // g), den // g)

    @property
    def is_unit_ideal(self) -> bool:
        return self.den == 1 and self.num.is_unit_ideal


# ---------------------------------------------------------------------------
# lattice plumbing


def _hnf_rows(order: QuadOrder, rows: list[tuple[int, int]]) -> QIdeal:
    """HNF triple of the full-rank lattice spanned by (u, v) rows."""
    px, py = 0, 0
    xs: list[int] = []
    for x, y in rows:
        if y == 0:
            xs.append(x)
        elif py == 0:
            px, py = x, y
        else:
            g, t, q = xgcd(py, y)
            nx = t * px + q * x
            xs.append(px - (py // g) * nx)
            xs.append(x - (y // g) * nx)
            px, py = nx, g
    a = 0
    for x in xs:
        a = gcd(a, x)
    if a == 0 or py == 0:
        raise ValueError("lattice is not full rank")
    if py < 0:
        px, py = -px, -py
    return QIdeal(order.s, a, px % a, py)


def ideal_from_generators(order: QuadOrder, gens: list[QElem]) -> QIdeal:
    """Ideal generated by the given elements; they cannot all be zero."""
    rows: list[tuple[int, int]] = []
    for g in gens:
        if g.is_zero:
            continue
        rows.append((g.u, g.v))
        rows.append((-order.s * g.v, g.u))  # w * g
    if not rows:
        raise ValueError("the zero ideal has no HNF triple")
    return _hnf_rows(order, rows)


def member(order: QuadOrder, I: QIdeal, x: QElem) -> bool:
    if x.v % I.c:
        return False
    return (x.u - (x.v // I.c) * I.b) % I.a == 0


def ideal_contains(order: QuadOrder, outer: QIdeal, inner: QIdeal) -> bool:
    return member(order, outer, QElem(inner.a, 0)) and member(
        order, outer, QElem(inner.b, inner.c)
    )


def ideal_mul(order: QuadOrder, I: QIdeal, J: QIdeal) -> QIdeal:
    # the four pairwise products of the Z-bases span the product lattice
    s = order.s
    rows = [
        (I.a * J.a, 0),
        (I.a * J.b, I.a * J.c),
        (I.b * J.a, I.c * J.a),
        (I.b * J.b - s * I.c * J.c, I.b * J.c + I.c * J.b),
    ]
    return _hnf_rows(order, rows)


def _restrict(
    basis: tuple[tuple[int, int], tuple[int, int]],
    f: tuple[int, int],
    m: int,
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Sublattice of span(basis) where f.(u,v) vanishes mod m.

    Writing a lattice point as alpha*r1 + beta*r2, the condition becomes a
    single congruence alpha*t1 + beta*t2 = 0 (mod m) whose solution lattice
    is Z*(m/g, 0) + Z*(x0, e); mapping back through the basis finishes.
    """
    (r1x, r1y), (r2x, r2y) = basis
    fu, fv = f
    t1 = (fu * r1x + fv * r1y) % m
    t2 = (fu * r2x + fv * r2y) % m
    g = gcd(t1, m)
    e = g // gcd(g, t2)
    m1 = m // g
    x0 = (-(e * t2 // g) * invmod(t1 // g, m1)) % m1
    return (m1 * r1x, m1 * r1y), (x0 * r1x + e * r2x, x0 * r1y + e * r2y)


def colon_ideal(order: QuadOrder, I: QIdeal, J: QIdeal) -> QIdeal:
    """(I : J) = {x in the order : x*J is contained in I}.

    Each generator p + q*w of J contributes two congruences on x = (u, v):
    the w-part of x*(p + q*w) must vanish mod c_I, and the remainder after
    subtracting the matching multiple of b_I + c_I*w must vanish mod a_I.
    """
    s = order.s
    basis = ((1, 0), (0, 1))
    for p, q in J.basis():
        basis = _restrict(basis, (q, p), I.c)
        basis = _restrict(
            basis,
            (p * I.c - q * I.b, -s * q * I.c - p * I.b),
            I.a * I.c,
        )
    return _hnf_rows(order, list(basis))


def inverse_fractional(order: QuadOrder, I: QIdeal) -> FracIdeal:
    """The fractional inverse candidate (R : I) / 1.

    For an invertible ideal this is a true inverse; in general it is only
    the largest fractional ideal J with I*J inside the order, so callers
    must multiply back to find out (is_invertible does exactly that).
    """
    n = I.norm
    num = colon_ideal(order, order.ideal(n, 0, n), I)
    return FracIdeal.make(num, n)


def frac_mul(order: QuadOrder, F: FracIdeal, G: FracIdeal) -> FracIdeal:
    return FracIdeal.make(ideal_mul(order, F.num, G.num), F.den * G.den)


def is_invertible(order: QuadOrder, I: QIdeal) -> bool:
    inv = inverse_fractional(order, I)
    prod = FracIdeal.make(ideal_mul(order, I, inv.num), inv.den)
    return prod.is_unit_ideal


@dataclass(frozen=True)
class DivisionResult:
    divides: bool
    witness: QIdeal | None
    candidate: QIdeal  # the colon ideal that was tried, kept for diagnostics


def divides(order: QuadOrder, I: QIdeal, J: QIdeal) -> DivisionResult:
    """Whether an integral H with I*H = J exists; the witness is H.

    The test is conclusive without invertibility: any H' with I*H' = J
    sits inside (J : I), so J = I*H' <= I*(J : I) <= J forces equality
    throughout, and it suffices to try H = (J : I).
    """
    H = colon_ideal(order, J, I)
    if ideal_mul(order, I, H) == J:
        return DivisionResult(True, H, H)
    return DivisionResult(False, None, H)


# ---------------------------------------------------------------------------
# maximal ideals and factorisation


def residue_ring_mod_prime(order: QuadOrder, p: int) -> FiniteRing:
    """The order modulo p, as a finite ring Z_p[x]/(x^2 + s)."""
    sbar = order.s % p
    fac = LocalFactor(p, (sbar, 0, 1))
    return _build_ring((fac,), fac.piece())


def maximal_ideals_above(order: QuadOrder, p: int, enum_cap: int | None = None) -> list[QIdeal]:
    """Maximal ideals containing the prime p, via the residue ring.

    Reduces mod p, reads the maximal ideals off the finite ring's ideal
    lattice, and pulls back generators.  Honest but quadratic in p; the cap
    rejects p with p^2 past the enumeration budget."""
    cap = ENUM_CAP if enum_cap is None else enum_cap
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p * p > cap:
        raise CapExceeded(f"residue ring order {p * p} exceeds cap {cap}", cap)
    Rbar = residue_ring_mod_prime(order, p)
    out = []
    for M in _fin_prime_spectrum(Rbar, cap):
        gens = [QElem(p, 0)]
        for i in _fin_ideal_generators(Rbar, M):
            gens.append(QElem(i % p, i // p))
        out.append(ideal_from_generators(order, gens))
    return sorted(out, key=lambda I: (I.a, I.b, I.c))


def _maximals_above_direct(order: QuadOrder, p: int) -> list[QIdeal]:
    """Same answer as maximal_ideals_above, by quadratic reciprocity data."""
    s = order.s
    if p == 2:
        return [order.ideal(2, s % 2, 1)]
    d = (-s) % p
    if d == 0:
        return [order.ideal(p, 0, 1)]
    t = mod_sqrt(d, p)
    if t is None:
        return [order.ideal(p, 0, p)]
    t = min(t, p - t)
    return [order.ideal(p, t, 1), order.ideal(p, p - t, 1)]


@dataclass(frozen=True)
class FactorResult:
    """Factorisation into maximal ideals, or the (divisor, ideal) pair
    where greedy division got stuck."""

    factors: tuple[QIdeal, ...] | None
    stuck_at: QIdeal | None = None
    failed_divisor: QIdeal | None = None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.factors is not None


def factor_into_maximals(order: QuadOrder, I: QIdeal, step_cap: int = 64) -> FactorResult:
    """Greedy division by maximal ideals above the smallest prime in the norm.

    In a maximal order this terminates with the unique factorisation.  In a
    non-maximal order it can get stuck, and the stuck ideal is returned: it
    is either divisible by no maximal ideal above its norm's smallest prime
    factor, or contained in one that fails to divide it.  Norms strictly
    decrease at every successful step, so step_cap is only a tripwire.
    """
    factors: list[QIdeal] = []
    cur = I
    steps = 0
    while not cur.is_unit_ideal:
        if steps >= step_cap:
            raise StepCapExceeded(f"factorisation exceeded {step_cap} steps", step_cap)
        steps += 1
        p = smallest_prime_factor(cur.norm)
        cands = [P for P in _maximals_above_direct(order, p) if ideal_contains(order, P, cur)]
        if not cands:
            return FactorResult(None, cur, None, "no maximal ideal above the norm contains it")
        P = min(cands, key=lambda M: (M.a, M.b, M.c))
        res = divides(order, P, cur)
        if not res.divides:
            return FactorResult(None, cur, P, "a maximal ideal contains it but does not divide it")
        assert res.witness is not None and res.witness.norm < cur.norm
        factors.append(P)
        cur = res.witness
    factors.sort(key=lambda M: (M.a, M.b, M.c))
    return FactorResult(tuple(factors))


def is_maximal_ideal(order: QuadOrder, I: QIdeal) -> bool:
    """Certified check: the quotient is a field iff the norm is p with the
    ideal proper, or p^2 with the ideal (p) and x^2 + s irreducible mod p."""
    n = I.norm
    if n == 1:
        return False
    if is_prime(n):
        return True
    p = smallest_prime_factor(n)
    if n != p * p or I.a != p or I.b != 0 or I.c != p:
        return False
    if p == 2 or order.s % p == 0:
        return False
    return mod_sqrt((-order.s) % p, p) is None


# ---------------------------------------------------------------------------
# quotients and chains


def quotient_ring(order: QuadOrder, I: QIdeal, element_cap: int | None = None) -> FiniteRing:
    """The residue ring of the order mod I, with lazily computed operations.

    Representatives are u + v*w with 0 <= u < a and 0 <= v < c, numbered
    u + a*v, so 0 and 1 land on indices 0 and 1.
    """
    cap = ELEMENT_CAP if element_cap is None else element_cap
    if I.is_unit_ideal:
        raise ValueError("cannot form the quotient by the unit ideal")
    if I.norm > cap:
        raise CapExceeded(f"quotient order {I.norm} exceeds element cap {cap}", cap)
    s, a, b, c = order.s, I.a, I.b, I.c

    def reduce(U: int, V: int) -> int:
        v = V % c
        u = (U - ((V - v) // c) * b) % a
        return u + a * v

    def add(i: int, j: int) -> int:
        return reduce(i % a + j % a, i // a + j // a)

    def mul(i: int, j: int) -> int:
        u1, v1 = i % a, i // a
        u2, v2 = j % a, j // a
        return reduce(u1 * u2 - s * v1 * v2, u1 * v2 + v1 * u2)

    def neg(i: int) -> int:
        return reduce(-(i % a), -(i // a))

    desc = f"Z[sqrt(-{s})]/" + format_ideal(I)
    fmt = lambda i: f"[{format_element(QElem(i % a, i // a))}]"
    return FiniteRing(desc, I.norm, 1, add, mul, neg, None, fmt)


def ideals_containing(order: QuadOrder, I: QIdeal) -> list[QIdeal]:
    """All integral ideals containing I, sorted by (norm, a, b, c).

    Containment forces the norm to divide I's norm, so candidate triples
    are enumerated per divisor and filtered by the two basis memberships.
    """
    n = I.norm
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        cc = 1
        while cc * cc <= d:
            if d % (cc * cc) == 0:
                aa = d // cc
                for bb in range(0, aa, cc):
                    if (bb * bb + order.s * cc * cc) % (aa * cc):
                        continue
                    J = order.ideal(aa, bb, cc)
                    if ideal_contains(order, J, I):
                        out.append(J)
            cc += 1
    out.sort(key=lambda J: (J.norm, J.a, J.b, J.c))
    return out


def containment_chain_length(order: QuadOrder, I: QIdeal) -> int:
    """Composition length of (order mod I): the longest strict chain of
    ideals from I up to the whole order."""
    chain = ideals_containing(order, I)
    chain.sort(key=lambda J: J.norm)  # whole order first
    best: dict[QIdeal, int] = {}
    for J in chain:
        b = 0
        for K in chain:
            if K.norm >= J.norm:
                break
            if ideal_contains(order, K, J):
                b = max(b, best[K] + 1)
        best[J] = b
    return best[I]


def random_ideal(order: QuadOrder, rng, bound: int = 20) -> QIdeal:
    """Ideal on two random generators with coordinates in [-bound, bound]."""
    while True:
        gens = [
            QElem(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(2)
        ]
        if any(not g.is_zero for g in gens):
            return ideal_from_generators(order, gens)


# ---------------------------------------------------------------------------
# parsing and formatting


_ORDER_RE = re.compile(r"\AZ\[\s*sqrt\(\s*-\s*(\d+)\s*\)\s*\]\Z")


def parse_order(text: str) -> QuadOrder:
    m = _ORDER_RE.match(text.strip())
    if not m:
        raise ValueError(f"expected an order like Z[sqrt(-14)], got {text!r}")
    return QuadOrder(int(m.group(1)))


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*(w)?|(w))\s*")


def parse_element(text: str) -> QElem:
    """Parse "3+2*w", "15w", "-w+5", "7" and friends."""
    u = v = 0
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad element literal {text!r} at offset {pos}")
        sign, coeff, star_w, bare_w = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing sign in element literal {text!r}")
        k = -1 if sign == "-" else 1
        if bare_w or star_w:
            v += k * (1 if coeff is None else int(coeff))
        else:
            u += k * int(coeff)
        pos = m.end()
        first = False
    if first:
        raise ValueError("empty element literal")
    return QElem(u, v)


def format_element(x: QElem) -> str:
    if x.v == 0:
        return str(x.u)
    if x.v == 1:
        w = "w"
    elif x.v == -1:
        w = "-w"
    else:
        w = f"{x.v}*w"
    if x.u == 0:
        return w
    return f"{x.u}+{w}" if not w.startswith("-") else f"{x.u}{w}"


def parse_ideal(order: QuadOrder, text: str) -> QIdeal:
    """Parse "(g1, g2, ...)" where each generator is an element literal."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ValueError(f"expected a parenthesised generator list, got {text!r}")
    parts = [p for p in t[1:-1].split(",")]
    if not any(p.strip() for p in parts):
        raise ValueError("ideal literal needs at least one generator")
    gens = [parse_element(p) for p in parts if p.strip()]
    return ideal_from_generators(order, gens)


def format_ideal(I: QIdeal) -> str:
    # always echo the HNF basis so output round-trips through parse_ideal
    return f"({I.a}, {format_element(QElem(I.b, I.c))})"

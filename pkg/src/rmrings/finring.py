"""Exact engine for finite commutative rings.

Supported rings are Z_n, quotients Z_n[x]/(f) with f monic of degree >= 1,
and finite direct products of such factors.  Elements are identified with
indices 0..order-1 in a mixed-radix encoding and index 0 is always zero, so
an ideal is a bit mask over indices and lattice work reduces to integer bit
arithmetic.

Two caps keep everything at desk scale: ELEMENT_CAP bounds the ring order
for element arithmetic, ENUM_CAP bounds full ideal-lattice enumeration.
Both can be overridden per call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

ELEMENT_CAP = 4096
ENUM_CAP = 512

# above this order, helper rows are computed on the fly instead of cached
_ROW_CACHE_LIMIT = 1024


class RingParseError(ValueError):
    """Malformed ring descriptor; .position is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class CapExceeded(ValueError):
    """An operation would exceed a configured size cap."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


@dataclass(frozen=True)
class LocalFactor:
    """One factor Z_n or Z_n[x]/(f); poly holds f's coefficients ascending."""

    n: int
    poly: tuple[int, ...] | None = None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly) - 1

    @property
    def size(self) -> int:
        return self.n ** self.degree

    def piece(self) -> str:
        if self.poly is None:
            return f"Z{self.n}"
        return f"Z{self.n}[x]/({_poly_str(self.poly)})"


def _poly_str(poly: tuple[int, ...]) -> str:
    parts = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append("x" if c == 1 else f"{c}x")
        else:
            parts.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
    return "+".join(parts)


class FiniteRing:
    """A finite commutative ring with exact arithmetic on element indices.

    Instances are immutable after construction; the row caches are
    memoization only.  Rings built from a descriptor carry their factors,
    rings built from explicit operations (quotients, residue rings of
    quadratic ideals) have factors None.
    """

    def __init__(
        self,
        descriptor: str,
        order: int,
        one: int,
        add: Callable[[int, int], int],
        mul: Callable[[int, int], int],
        neg: Callable[[int], int],
        factors: tuple[LocalFactor, ...] | None = None,
        format_fn: Callable[[int], str] | None = None,
    ):
        if order < 2:
            raise ValueError("ring must have at least two elements")
        if one == 0:
            raise ValueError("ring must have 1 != 0")
        self.descriptor = descriptor
        self.order = order
        self.one = one
        self.factors = factors
        self._add = add
        self._mul = mul
        self._neg = neg
        self._format = format_fn
        self._mul_rows: dict[int, list[int]] = {}
        self._add_rows: dict[int, list[int]] = {}
        self._ideals: list[IdealF] | None = None
        # construction-time sanity: 0 and 1 act as they must
        for a in range(order):
            if mul(one, a) != a or add(0, a) != a:
                raise ValueError(f"inconsistent operations in {descriptor!r}")

    def add(self, a: int, b: int) -> int:
        return self._add(a, b)

    def mul(self, a: int, b: int) -> int:
        return self._mul(a, b)

    def neg(self, a: int) -> int:
        return self._neg(a)

    def mul_row(self, g: int) -> list[int]:
        row = self._mul_rows.get(g)
        if row is None:
            m = self._mul
            row = [m(g, a) for a in range(self.order)]
            if self.order <= _ROW_CACHE_LIMIT:
                self._mul_rows[g] = row
        return row

    def add_row(self, g: int) -> list[int]:
        row = self._add_rows.get(g)
        if row is None:
            f = self._add
            row = [f(g, a) for a in range(self.order)]
            if self.order <= _ROW_CACHE_LIMIT:
                self._add_rows[g] = row
        return row

    def format_element(self, i: int) -> str:
        if self._format is not None:
            return self._format(i)
        if self.factors is None:
            return str(i)
        parts = []
        v = i
        for fac in self.factors:
            v, local = divmod(v, fac.size)
            parts.append(_format_local(fac, local))
        return parts[0] if len(parts) == 1 else "(" + ", ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"FiniteRing({self.descriptor!r}, order={self.order})"


def _format_local(fac: LocalFactor, local: int) -> str:
    if fac.poly is None or fac.degree == 1:
        return str(local % fac.n)
    coeffs = []
    v = local
    for _ in range(fac.degree):
        v, r = divmod(v, fac.n)
        coeffs.append(r)
    s = _poly_str(tuple(coeffs) + (0,))  # reuse term printer, degree < deg f
    return s if s else "0"


# ---------------------------------------------------------------------------
# construction


def _local_ops(fac: LocalFactor):
    """Return (size, add, mul, neg) acting on local element indices."""
    n = fac.n
    if fac.degree == 1:
        # Z_n, possibly presented as Z_n[x]/(x+c)
        return n, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, lambda a: -a % n
    d = fac.degree
    size = fac.size
    coeffs: list[tuple[int, ...]] = []
    for i in range(size):
        t, v = [], i
        for _ in range(d):
            v, r = divmod(v, n)
            t.append(r)
        coeffs.append(tuple(t))
    # rows for x^(d+t) reduced mod f, t = 0..d-2
    assert fac.poly is not None
    base = tuple(-c % n for c in fac.poly[:d])
    red = [base]
    for _ in range(d - 2):
        prev = red[-1]
        carry = prev[d - 1]
        shifted = (0,) + prev[: d - 1]
        red.append(tuple((shifted[j] + carry * base[j]) % n for j in range(d)))

    def encode(t: Iterable[int]) -> int:
        v = 0
        for c in reversed(tuple(t)):
            v = v * n + c
        return v

    def add(a: int, b: int) -> int:
        ca, cb = coeffs[a], coeffs[b]
        return encode((x + y) % n for x, y in zip(ca, cb))

    def neg(a: int) -> int:
        return encode(-x % n for x in coeffs[a])

    def mul(a: int, b: int) -> int:
        ca, cb = coeffs[a], coeffs[b]
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        out = prod[:d]
        for t in range(d - 1):
            c = prod[d + t]
            if c:
                row = red[t]
                for j in range(d):
                    out[j] += c * row[j]
        return encode(v % n for v in out)

    return size, add, mul, neg


def _build_ring(factors: tuple[LocalFactor, ...], descriptor: str) -> FiniteRing:
    ops = [_local_ops(f) for f in factors]
    if len(factors) == 1:
        size, add, mul, neg = ops[0]
        return FiniteRing(descriptor, size, 1, add, mul, neg, factors)
    sizes = [o[0] for o in ops]
    adds = [o[1] for o in ops]
    muls = [o[2] for o in ops]
    negs = [o[3] for o in ops]
    order = 1
    strides = []
    for sz in sizes:
        strides.append(order)
        order *= sz
    coords: list[tuple[int, ...]] = []
    for i in range(order):
        v, t = i, []
        for sz in sizes:
            v, r = divmod(v, sz)
            t.append(r)
        coords.append(tuple(t))

    def add(a: int, b: int) -> int:
        ca, cb = coords[a], coords[b]
        return sum(f(x, y) * st for f, x, y, st in zip(adds, ca, cb, strides))

    def mul(a: int, b: int) -> int:
        ca, cb = coords[a], coords[b]
        return sum(f(x, y) * st for f, x, y, st in zip(muls, ca, cb, strides))

    def neg(a: int) -> int:
        return sum(f(x) * st for f, x, st in zip(negs, coords[a], strides))

    one = sum(strides)  # local index 1 in every factor
    return FiniteRing(descriptor, order, one, add, mul, neg, factors)


# ---------------------------------------------------------------------------
# descriptor parsing


def _skip_ws(s: str, i: int) -> int:
    while i < len(s) and s[i].isspace():
        i += 1
    return i


def _read_int(s: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(s) and s[j].isdigit():
        j += 1
    if j == i:
        raise RingParseError("expected an integer", i)
    return int(s[i:j]), j


def _parse_poly(s: str, i: int, end: int, n: int) -> tuple[int, ...]:
    deg_coeff: dict[int, int] = {}
    i = _skip_ws(s, i)
    if i >= end:
        raise RingParseError("empty polynomial", i)
    sgn = 1
    if s[i] == "-":
        sgn = -1
        i += 1
    elif s[i] == "+":
        i += 1
    while True:
        i = _skip_ws(s, i)
        if i >= end:
            raise RingParseError("expected a polynomial term", i)
        coeff = None
        if s[i].isdigit():
            coeff, i = _read_int(s, i)
            j = _skip_ws(s, i)
            if j < end and s[j] == "*":
                i = _skip_ws(s, j + 1)
                if i >= end or s[i] != "x":
                    raise RingParseError("expected 'x' after '*'", i)
        exp = 0
        j = _skip_ws(s, i)
        if j < end and s[j] == "x":
            i = j + 1
            exp = 1
            j = _skip_ws(s, i)
            if j < end and s[j] == "^":
                exp, i = _read_int(s, _skip_ws(s, j + 1))
                if exp < 1:
                    raise RingParseError("exponent must be positive", j)
        if coeff is None:
            if exp == 0:
                raise RingParseError("expected a polynomial term", i)
            coeff = 1
        deg_coeff[exp] = deg_coeff.get(exp, 0) + sgn * coeff
        i = _skip_ws(s, i)
        if i >= end:
            break
        if s[i] == "+":
            sgn = 1
        elif s[i] == "-":
            sgn = -1
        else:
            raise RingParseError("expected '+' or '-' in polynomial", i)
        i += 1
    d = max(deg_coeff)
    coeffs = [deg_coeff.get(k, 0) % n for k in range(d + 1)]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise RingParseError("polynomial must have degree at least 1", end)
    if coeffs[-1] != 1:
        raise RingParseError("polynomial is not monic", end)
    return tuple(coeffs)


def _parse_local(s: str, i: int) -> tuple[LocalFactor, int]:
    i = _skip_ws(s, i)
    if i >= len(s) or s[i] != "Z":
        raise RingParseError("expected 'Z'", i)
    n, i = _read_int(s, i + 1)
    if n < 2:
        raise RingParseError("modulus must be at least 2", i)
    j = _skip_ws(s, i)
    if j < len(s) and s[j] == "[":
        for tok in ("[", "x", "]", "/", "("):
            j = _skip_ws(s, j)
            if j >= len(s) or s[j] != tok:
                raise RingParseError(f"expected {tok!r}", j)
            j += 1
        k = s.find(")", j)
        if k < 0:
            raise RingParseError("unterminated polynomial", j)
        poly = _parse_poly(s, j, k, n)
        return LocalFactor(n, poly), k + 1
    return LocalFactor(n, None), i


def parse_ring(spec: str, element_cap: int | None = None) -> FiniteRing:
    """Parse a descriptor like "Z6", "Z5[x]/(x^2)" or "Z2 * Z3".

    Whitespace is insignificant.  The returned ring's descriptor is the
    canonical form: coefficients reduced mod n, zero terms dropped, factors
    sorted, no spaces.
    """
    cap = ELEMENT_CAP if element_cap is None else element_cap
    factors: list[LocalFactor] = []
    i = _skip_ws(spec, 0)
    while True:
        fac, i = _parse_local(spec, i)
        factors.append(fac)
        i = _skip_ws(spec, i)
        if i >= len(spec):
            break
        if spec[i] != "*":
            raise RingParseError("expected '*' between factors", i)
        i += 1
    factors.sort(key=lambda f: (f.n, f.degree, f.poly or ()))
    order = 1
    for f in factors:
        order *= f.size
    if order > cap:
        raise CapExceeded(f"ring order {order} exceeds element cap {cap}", cap)
    descriptor = "*".join(f.piece() for f in factors)
    return _build_ring(tuple(factors), descriptor)


def elem_op(R: FiniteRing, op: str, a: int, b: int | None = None) -> int:
    """Apply "add", "mul" or "neg" to element indices, with validation."""
    if not 0 <= a < R.order:
        raise IndexError(f"element index {a} out of range for order {R.order}")
    if op == "neg":
        if b is not None:
            raise ValueError("neg takes a single element")
        return R.neg(a)
    if b is None or not 0 <= b < R.order:
        raise IndexError(f"element index {b} out of range for order {R.order}")
    if op == "add":
        return R.add(a, b)
    if op == "mul":
        return R.mul(a, b)
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# ideals as bit masks


@dataclass(frozen=True)
class IdealF:
    """An ideal stored as a membership bit mask over element indices."""

    ring: FiniteRing
    members: int

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def contains(self, i: int) -> bool:
        return (self.members >> i) & 1 == 1

    def elements(self) -> list[int]:
        return list(_bits(self.members))

    @property
    def is_zero(self) -> bool:
        return self.members == 1

    @property
    def is_unit_ideal(self) -> bool:
        return self.members == (1 << self.ring.order) - 1


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _translate(R: FiniteRing, mask: int, t: int) -> int:
    """Bit mask of {m + t : m in mask}."""
    if R.order <= _ROW_CACHE_LIMIT:
        row = R.add_row(t)
        out = 0
        for b in _bits(mask):
            out |= 1 << row[b]
        return out
    f = R._add
    out = 0
    for b in _bits(mask):
        out |= 1 << f(b, t)
    return out


def _subgroup_close(R: FiniteRing, mask: int) -> int:
    """Additive subgroup generated by the set bits; 0 always included."""
    H = 1
    for g in list(_bits(mask)):
        if (H >> g) & 1:
            continue
        mults = []
        m = g
        while not (H >> m) & 1:
            mults.append(m)
            m = R.add(m, g)
        new = H
        for m in mults:
            new |= _translate(R, H, m)
        H = new
    return H


def _subgroup_sum(R: FiniteRing, A: int, B: int) -> int:
    """Sum of two additive subgroups given as masks."""
    u = A | B
    if u == A:
        return A
    if u == B:
        return B
    res = A
    for b in _bits(B):
        if not (res >> b) & 1:
            res |= _translate(R, res, b)
    return res


def principal_mask(R: FiniteRing, g: int) -> int:
    # {r*g : r in R} is already an additive subgroup
    out = 0
    for v in R.mul_row(g):
        out |= 1 << v
    return out


def ideal_generate(R: FiniteRing, gens: Iterable[int]) -> IdealF:
    """Smallest ideal containing the given element indices."""
    mask = 1
    for g in gens:
        if not 0 <= g < R.order:
            raise IndexError(f"element index {g} out of range for order {R.order}")
        mask |= principal_mask(R, g)
    return IdealF(R, _subgroup_close(R, mask))


def enumerate_ideals(R: FiniteRing, enum_cap: int | None = None) -> list[IdealF]:
    """All ideals, sorted by (size, bit mask).

    Join-closure of the principal ideals: complete because every ideal is a
    finite sum of principal ideals.
    """
    cap = ENUM_CAP if enum_cap is None else enum_cap
    if R.order > cap:
        raise CapExceeded(f"ring order {R.order} exceeds enumeration cap {cap}", cap)
    if R._ideals is not None:
        return R._ideals
    seen = {1}
    for g in range(1, R.order):
        seen.add(principal_mask(R, g))
    queue = list(seen)
    while queue:
        I = queue.pop()
        for J in list(seen):
            u = I | J
            if u == I or u == J:
                continue
            K = _subgroup_sum(R, I, J)
            if K not in seen:
                seen.add(K)
                queue.append(K)
    out = [IdealF(R, m) for m in seen]
    out.sort(key=lambda I: (I.size, I.members))
    R._ideals = out
    return out


def ideal_sum(R: FiniteRing, I: IdealF, J: IdealF) -> IdealF:
    return IdealF(R, _subgroup_sum(R, I.members, J.members))


def ideal_intersection(R: FiniteRing, I: IdealF, J: IdealF) -> IdealF:
    return IdealF(R, I.members & J.members)


def ideal_product(R: FiniteRing, I: IdealF, J: IdealF) -> IdealF:
    mask = 0
    for a in _bits(I.members):
        row = R.mul_row(a)
        for b in _bits(J.members):
            mask |= 1 << row[b]
    return IdealF(R, _subgroup_close(R, mask))


def ideal_generators(R: FiniteRing, I: IdealF) -> list[int]:
    """A small generating set, greedily chosen in index order."""
    gens: list[int] = []
    cur = 1
    for m in _bits(I.members):
        if not (cur >> m) & 1:
            gens.append(m)
            cur = ideal_generate(R, gens).members
            if cur == I.members:
                break
    return gens


# ---------------------------------------------------------------------------
# structure


def nilradical(R: FiniteRing) -> IdealF:
    """All nilpotent elements; a^(2^k) with 2^k >= order decides."""
    k = max(1, (R.order - 1).bit_length()) + 1
    mask = 0
    for a in range(R.order):
        b = a
        for _ in range(k):
            b = R.mul(b, b)
            if b == 0:
                break
        if b == 0:
            mask |= 1 << a
    return IdealF(R, mask)


def minimal_ideals(R: FiniteRing, enum_cap: int | None = None) -> list[IdealF]:
    ideals = enumerate_ideals(R, enum_cap)
    nonzero = [I for I in ideals if I.members != 1]
    return [
        M
        for M in nonzero
        if not any(J.members != M.members and J.members | M.members == M.members for J in nonzero)
    ]


def maximal_ideals(R: FiniteRing, enum_cap: int | None = None) -> list[IdealF]:
    ideals = enumerate_ideals(R, enum_cap)
    full = (1 << R.order) - 1
    proper = [I for I in ideals if I.members != full]
    return [
        P
        for P in proper
        if not any(J.members != P.members and J.members | P.members == J.members for J in proper)
    ]


def prime_spectrum(R: FiniteRing, enum_cap: int | None = None) -> list[IdealF]:
    """All prime ideals.

    In a finite commutative ring primes and maximals coincide, so the
    candidates are read off the lattice; each is then verified against the
    definition (complement multiplicatively closed) and its quotient is
    checked to be a field.
    """
    out = maximal_ideals(R, enum_cap)
    for P in out:
        comp = [a for a in range(R.order) if not (P.members >> a) & 1]
        for a in comp:
            row = R.mul_row(a)
            for b in comp:
                if (P.members >> row[b]) & 1:
                    raise RuntimeError(f"lattice-maximal ideal failed the prime test in {R.descriptor}")
        S, _ = quotient(R, P)
        for a in range(1, S.order):
            if not any(S.mul(a, b) == S.one for b in range(S.order)):
                raise RuntimeError(f"quotient by a maximal ideal is not a field in {R.descriptor}")
    return out


def socle(R: FiniteRing, enum_cap: int | None = None) -> IdealF:
    """Sum of the minimal nonzero ideals."""
    mask = 1
    for M in minimal_ideals(R, enum_cap):
        mask = _subgroup_sum(R, mask, M.members)
    return IdealF(R, mask)


def is_essential(R: FiniteRing, E: IdealF, enum_cap: int | None = None) -> bool:
    """E meets every nonzero ideal.

    Checked against every minimal ideal: any nonzero ideal of a finite ring
    contains a minimal one, so this is equivalent to the full quantifier
    (and to containing the socle).
    """
    return all(M.members & E.members != 1 for M in minimal_ideals(R, enum_cap))


def quotient(R: FiniteRing, I: IdealF) -> tuple[FiniteRing, list[int]]:
    """Quotient ring R/I and the projection index map.

    Cosets are numbered by their smallest member, ascending; coset 0 is I
    itself, so index 0 stays zero.
    """
    if I.is_unit_ideal:
        raise ValueError("cannot form the quotient by the unit ideal")
    members = I.elements()
    coset_of = [-1] * R.order
    reps: list[int] = []
    for a in range(R.order):
        if coset_of[a] < 0:
            idx = len(reps)
            reps.append(a)
            if R.order <= _ROW_CACHE_LIMIT:
                row = R.add_row(a)
                for m in members:
                    coset_of[row[m]] = idx
            else:
                for m in members:
                    coset_of[R.add(a, m)] = idx
    q = len(reps)
    if q * I.size != R.order:
        raise RuntimeError("coset partition of the wrong size")

    def qadd(i: int, j: int) -> int:
        return coset_of[R.add(reps[i], reps[j])]

    def qmul(i: int, j: int) -> int:
        return coset_of[R.mul(reps[i], reps[j])]

    def qneg(i: int) -> int:
        return coset_of[R.neg(reps[i])]

    gens = ideal_generators(R, I)
    gen_text = ", ".join(R.format_element(g) for g in gens) if gens else "0"
    desc = f"({R.descriptor})/({gen_text})"
    fmt = lambda i: f"[{R.format_element(reps[i])}]"
    S = FiniteRing(desc, q, coset_of[R.one], qadd, qmul, qneg, None, fmt)
    return S, coset_of


@dataclass(frozen=True)
class DecomposeResult:
    """Either the maximal ideals presenting R as a product of fields, or a
    nonzero nilpotent witness showing why no such presentation exists."""

    maximal_ideals: tuple[IdealF, ...] | None
    field_orders: tuple[int, ...] | None
    nilpotent_witness: int | None

    @property
    def ok(self) -> bool:
        return self.nilpotent_witness is None


def decompose_fields(R: FiniteRing, enum_cap: int | None = None) -> DecomposeResult:
    """Present a reduced ring as a product of fields, or fail with a witness."""
    nil = nilradical(R)
    if nil.size > 1:
        witness = next(b for b in _bits(nil.members) if b != 0)
        return DecomposeResult(None, None, witness)
    maxs = maximal_ideals(R, enum_cap)
    full = (1 << R.order) - 1
    inter = full
    for i, M in enumerate(maxs):
        inter &= M.members
        for Mj in maxs[i + 1 :]:
            if _subgroup_sum(R, M.members, Mj.members) != full:
                raise RuntimeError(f"maximal ideals not comaximal in {R.descriptor}")
    if inter != 1:
        raise RuntimeError(f"reduced ring with nonzero Jacobson radical in {R.descriptor}")
    orders = tuple(R.order // M.size for M in maxs)
    prod = 1
    for o in orders:
        prod *= o
    if prod != R.order:
        raise RuntimeError(f"field orders do not multiply to the ring order in {R.descriptor}")
    return DecomposeResult(tuple(maxs), orders, None)


def composition_length(R: FiniteRing, enum_cap: int | None = None) -> int:
    """Length of a longest strictly ascending chain from 0 to R."""
    ideals = enumerate_ideals(R, enum_cap)
    length: dict[int, int] = {1: 0}
    for I in ideals:  # sorted by size, so sub-ideals come first
        if I.members == 1:
            continue
        best = 0
        for J in ideals:
            if J.size >= I.size:
                break
            if J.members | I.members == I.members:
                best = max(best, length[J.members] + 1)
        length[I.members] = best
    return length[(1 << R.order) - 1]


def jacobson_radical(R: FiniteRing, enum_cap: int | None = None) -> IdealF:
    mask = (1 << R.order) - 1
    for M in maximal_ideals(R, enum_cap):
        mask &= M.members
    return IdealF(R, mask)


def is_nilpotent_ideal(R: FiniteRing, I: IdealF) -> bool:
    cur = I
    while True:
        if cur.members == 1:
            return True
        nxt = ideal_product(R, cur, I)
        if nxt.members == cur.members:
            return False
        cur = nxt


def rm_poly_criterion(R: FiniteRing) -> bool:
    """Whether R[x] satisfies the restricted minimum condition.

    For a finite (hence Artinian) coefficient ring this holds iff R is
    reduced, i.e. iff R decomposes as a product of fields.
    """
    return nilradical(R).size == 1


def prime_witness(R: FiniteRing, I: IdealF) -> tuple[int, int] | None:
    """A pair (a, b) with a*b in I but neither factor in I, if one exists.

    Pairs with a nonzero product are preferred since they are more
    informative to display.
    """
    fallback = None
    m = I.members
    for a in range(1, R.order):
        if (m >> a) & 1:
            continue
        row = R.mul_row(a)
        for b in range(a, R.order):
            if (m >> b) & 1:
                continue
            v = row[b]
            if (m >> v) & 1:
                if v != 0:
                    return (a, b)
                if fallback is None:
                    fallback = (a, b)
    return fallback


def format_ideal(R: FiniteRing, I: IdealF, max_elems: int = 16) -> str:
    if I.size <= max_elems:
        return "{" + ", ".join(R.format_element(e) for e in I.elements()) + "}"
    gens = ideal_generators(R, I)
    return "<" + ", ".join(R.format_element(g) for g in gens) + f"> ({I.size} elements)"

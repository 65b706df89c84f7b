"""Finite ring engine: parser, ideal lattice, structure maps.

Lattice-level results are cross-checked against the brute-force oracles in
oracles.py; the small golden values were computed by hand.
"""

import pytest

from rmrings import finring as fr
from tests import oracles


def ring(desc, **kw):
    return fr.parse_ring(desc, **kw)


def ideal_as_set(ideal):
    return frozenset(ideal.elements())


def mask_of(R, subset):
    out = 0
    for e in subset:
        out |= 1 << e
    return fr.IdealF(R, out)


# ----------------------------------------------------------------- parsing


def test_parse_canonical_descriptors():
    assert ring("Z6").descriptor == "Z6"
    assert ring("  Z6 ").descriptor == "Z6"
    assert ring("Z3*Z2").descriptor == "Z2*Z3"
    assert ring("Z5[x]/(x^2+7x+6)").descriptor == "Z5[x]/(x^2+2x+1)"
    assert ring("Z5[x]/(x^2+0x+0)").descriptor == "Z5[x]/(x^2)"
    assert ring("Z2[x]/(x^2+x+1)").descriptor == "Z2[x]/(x^2+x+1)"
    assert ring("Z2*Z2*Z3").descriptor == "Z2*Z2*Z3"
    assert ring("Z7[x]/(x+3)").order == 7


def test_parse_same_ring_same_tables():
    A = ring("Z3*Z2")
    B = ring("Z2*Z3")
    assert A.descriptor == B.descriptor
    assert all(A.add(x, y) == B.add(x, y) for x in range(6) for y in range(6))


@pytest.mark.parametrize(
    "bad,pos",
    [
        ("Zx6", 1),
        ("Z6[x]/(2x^2)", 11),
        ("Z6[y]/(x^2)", 3),
        ("Z0", 2),
        ("Z6**Z2", 3),
        ("Z6 junk", 3),
        ("", 0),
    ],
)
def test_parse_errors_carry_position(bad, pos):
    with pytest.raises(fr.RingParseError) as exc:
        ring(bad)
    assert exc.value.position == pos


def test_element_cap():
    with pytest.raises(fr.CapExceeded) as exc:
        ring("Z5000")
    assert exc.value.limit == fr.ELEMENT_CAP
    assert ring("Z5000", element_cap=6000).order == 5000


def test_ring_axioms_sampled():
    for desc in ("Z6[x]/(x^2)", "Z4[x]/(x^2+2)", "Z2*Z3*Z5"):
        R = ring(desc)
        n = R.order
        for a in range(0, n, 5):
            for b in range(0, n, 7):
                assert R.add(a, b) == R.add(b, a)
                assert R.mul(a, b) == R.mul(b, a)
                assert R.add(a, R.neg(a)) == 0
                for c in (1, n - 1):
                    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
                    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))


def test_format_element_degree_two():
    R = ring("Z6[x]/(x^2)")
    assert R.format_element(0) == "0"
    assert R.format_element(8) == "x+2"
    assert R.format_element(9) == "x+3"
    assert R.format_element(30) == "5x"
    assert R.format_element(1) == "1"


def test_format_element_product():
    R = ring("Z2*Z3")
    # product elements render componentwise
    assert R.format_element(0) == "(0, 0)"
    assert R.format_element(R.one) == "(1, 1)"


# ------------------------------------------------------------ ideal lattice


def test_z6_ideals_golden():
    R = ring("Z6")
    sets = [ideal_as_set(I) for I in fr.enumerate_ideals(R)]
    assert sets == [
        frozenset({0}),
        frozenset({0, 3}),
        frozenset({0, 2, 4}),
        frozenset({0, 1, 2, 3, 4, 5}),
    ]


def test_z4_ideals_golden():
    R = ring("Z4")
    sets = [ideal_as_set(I) for I in fr.enumerate_ideals(R)]
    assert sets == [frozenset({0}), frozenset({0, 2}), frozenset({0, 1, 2, 3})]


SMALL_CORPUS = ["Z2", "Z4", "Z6", "Z8", "Z12", "Z9", "Z10", "Z2*Z2", "Z2*Z3",
                "Z2[x]/(x^2)", "Z3[x]/(x^2)", "Z2[x]/(x^2+x+1)", "Z2[x]/(x^2+x)"]

MEDIUM_CORPUS = ["Z5[x]/(x^2)", "Z4[x]/(x^2+2)", "Z6[x]/(x^2)", "Z3*Z3",
                 "Z2*Z2*Z3", "Z16", "Z27", "Z2*Z2*Z2", "Z5*Z5", "Z3[x]/(x^2+1)"]


@pytest.mark.parametrize("desc", SMALL_CORPUS)
def test_enumerate_matches_all_subsets(desc):
    R = ring(desc)
    got = {ideal_as_set(I) for I in fr.enumerate_ideals(R)}
    assert got == oracles.ideals_all_subsets(R)


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_enumerate_matches_subgroup_closure(desc):
    R = ring(desc)
    got = {ideal_as_set(I) for I in fr.enumerate_ideals(R)}
    assert got == oracles.ideals_subgroup_closure(R)


def test_enum_cap():
    R = ring("Z2*Z2*Z2")
    assert len(fr.enumerate_ideals(R)) == 8
    with pytest.raises(fr.CapExceeded) as exc:
        fr.enumerate_ideals(R, enum_cap=5)
    assert exc.value.limit == 5


def test_ideal_arithmetic_against_sets():
    R = ring("Z12")
    ideals = fr.enumerate_ideals(R)
    for I in ideals:
        for J in ideals:
            s = ideal_as_set(fr.ideal_sum(R, I, J))
            assert s == ideal_as_set(fr.ideal_generate(R, list(I.elements()) + list(J.elements())))
            m = ideal_as_set(fr.ideal_intersection(R, I, J))
            assert m == ideal_as_set(I) & ideal_as_set(J)
            p = ideal_as_set(fr.ideal_product(R, I, J))
            prods = [R.mul(a, b) for a in I.elements() for b in J.elements()]
            assert p == ideal_as_set(fr.ideal_generate(R, prods))


def test_ideal_generators_regenerate():
    R = ring("Z6[x]/(x^2)")
    for I in fr.enumerate_ideals(R):
        gens = fr.ideal_generators(R, I)
        assert ideal_as_set(fr.ideal_generate(R, gens)) == ideal_as_set(I)
        assert len(gens) <= 2


# -------------------------------------------------------- structure theory


def test_nilradical_golden():
    R = ring("Z5[x]/(x^2)")
    nil = fr.nilradical(R)
    assert ideal_as_set(nil) == {0, 5, 10, 15, 20}
    assert fr.prime_witness(R, nil) is None  # (x) is prime

    R = ring("Z6[x]/(x^2)")
    nil = fr.nilradical(R)
    assert ideal_as_set(nil) == {0, 6, 12, 18, 24, 30}
    w = fr.prime_witness(R, nil)
    assert w is not None
    a, b = w
    assert not nil.contains(a) and not nil.contains(b)
    assert nil.contains(R.mul(a, b))


def test_zero_divisor_product_golden():
    R = ring("Z6[x]/(x^2)")
    # (x+2)(x+3) = x^2 + 5x + 6 = 5x here
    assert R.mul(8, 9) == 30


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_nilradical_is_prime_intersection(desc):
    R = ring(desc)
    primes = fr.prime_spectrum(R)
    meet = (1 << R.order) - 1
    for P in primes:
        meet &= P.members
    nil = fr.nilradical(R)
    assert nil.members == meet


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_prime_spectrum_definitional(desc):
    R = ring(desc)
    ideals = fr.enumerate_ideals(R)
    prime_sets = {ideal_as_set(P) for P in fr.prime_spectrum(R)}
    for I in ideals:
        s = ideal_as_set(I)
        if len(s) == R.order:
            continue
        complement = [x for x in range(R.order) if x not in s]
        closed = all(R.mul(a, b) not in s for a in complement for b in complement)
        assert (s in prime_sets) == closed


def test_spectrum_counts():
    assert len(fr.prime_spectrum(ring("Z5[x]/(x^2)"))) == 1
    assert len(fr.prime_spectrum(ring("Z6[x]/(x^2)"))) == 2
    assert len(fr.prime_spectrum(ring("Z30"))) == 3


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_socle_and_minimals_against_oracle(desc):
    R = ring(desc)
    lattice = oracles.ideals_subgroup_closure(R)
    nonzero = [s for s in lattice if len(s) > 1]
    minimal = {s for s in nonzero if not any(t < s for t in nonzero)}
    got_min = {ideal_as_set(I) for I in fr.minimal_ideals(R)}
    assert got_min == minimal
    union = set()
    for s in minimal:
        union |= s
    soc_set = oracles._closure(R, union)
    assert ideal_as_set(fr.socle(R)) == soc_set


def test_socle_z4_golden():
    assert ideal_as_set(fr.socle(ring("Z4"))) == {0, 2}


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_essential_matches_bruteforce_and_socle(desc):
    R = ring(desc)
    lattice = oracles.ideals_subgroup_closure(R)
    soc = ideal_as_set(fr.socle(R))
    for s in lattice:
        E = mask_of(R, s)
        brute = oracles.essential_bruteforce(R, lattice, s)
        assert fr.is_essential(R, E) == brute
        assert brute == (soc <= s)


def test_maximal_ideals_and_jacobson():
    R = ring("Z12")
    maxes = {ideal_as_set(M) for M in fr.maximal_ideals(R)}
    assert maxes == {frozenset({0, 2, 4, 6, 8, 10}), frozenset({0, 3, 6, 9})}
    assert ideal_as_set(fr.jacobson_radical(R)) == {0, 6}
    assert fr.is_nilpotent_ideal(R, fr.jacobson_radical(R))


# ------------------------------------------------------ quotients, lengths


def test_quotient_golden():
    R = ring("Z6[x]/(x^2)")
    nil = fr.nilradical(R)
    Q, coset = fr.quotient(R, nil)
    assert Q.order == 6
    assert Q.descriptor == "(Z6[x]/(x^2))/(x)"
    # quotient of order 6 with trivial nilradical is Z6 in disguise
    assert ideal_as_set(fr.nilradical(Q)) == {0}
    assert sorted(I.size for I in fr.enumerate_ideals(Q)) == [1, 2, 3, 6]


@pytest.mark.parametrize("desc", ["Z12", "Z6[x]/(x^2)", "Z2*Z4"])
def test_quotient_map_is_homomorphism(desc):
    R = ring(desc)
    for I in fr.enumerate_ideals(R):
        if I.is_unit_ideal:
            continue
        Q, coset = fr.quotient(R, I)
        assert Q.order * I.size == R.order
        assert coset[0] == 0 and coset[R.one] == Q.one
        for a in range(0, R.order, 3):
            for b in range(0, R.order, 5):
                assert coset[R.add(a, b)] == Q.add(coset[a], coset[b])
                assert coset[R.mul(a, b)] == Q.mul(coset[a], coset[b])


def test_quotient_kernel():
    R = ring("Z6[x]/(x^2)")
    I = fr.ideal_generate(R, [6])
    Q, coset = fr.quotient(R, I)
    assert {x for x in range(R.order) if coset[x] == 0} == ideal_as_set(I)


def test_decompose_fields_golden():
    dec = fr.decompose_fields(ring("Z6"))
    assert dec.ok and dec.field_orders == (3, 2)
    dec = fr.decompose_fields(ring("Z30"))
    assert dec.ok and dec.field_orders == (5, 3, 2)
    dec = fr.decompose_fields(ring("Z2[x]/(x^2+x)"))
    assert dec.ok and dec.field_orders == (2, 2)
    dec = fr.decompose_fields(ring("Z2[x]/(x^2+x+1)"))
    assert dec.ok and dec.field_orders == (4,)


def test_decompose_fields_obstruction():
    dec = fr.decompose_fields(ring("Z12"))
    assert not dec.ok
    R = ring("Z12")
    w = dec.nilpotent_witness
    assert w != 0 and R.mul(w, w) == 0 or fr.nilradical(R).contains(w)


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_decompose_iff_reduced(desc):
    R = ring(desc)
    dec = fr.decompose_fields(R)
    assert dec.ok == (fr.nilradical(R).size == 1)
    if dec.ok:
        prod = 1
        for q in dec.field_orders:
            prod *= q
        assert prod == R.order


@pytest.mark.parametrize(
    "desc,length",
    [
        ("Z4", 2),
        ("Z6", 2),
        ("Z12", 3),
        ("Z8", 3),
        ("Z2*Z2", 2),
        ("Z6[x]/(x^2)", 4),
        ("Z5[x]/(x^2)", 2),
        ("Z2[x]/(x^2+x+1)", 1),
        ("Z16", 4),
    ],
)
def test_composition_length_golden(desc, length):
    assert fr.composition_length(ring(desc)) == length


@pytest.mark.parametrize("desc", SMALL_CORPUS + MEDIUM_CORPUS)
def test_composition_length_matches_bruteforce(desc):
    R = ring(desc)
    lattice = oracles.ideals_subgroup_closure(R)
    assert fr.composition_length(R) == oracles.longest_chain_bruteforce(
        lattice, frozenset({0})
    )


def test_composition_length_additive_over_products():
    assert fr.composition_length(ring("Z4*Z6")) == fr.composition_length(
        ring("Z4")
    ) + fr.composition_length(ring("Z6"))


def test_degree_three_quotient():
    R = ring("Z2[x]/(x^3)")
    assert R.order == 8
    nil = fr.nilradical(R)
    assert nil.size == 4
    assert fr.composition_length(R) == 3
    x = 2  # coefficient vector (0, 1, 0)
    assert R.mul(x, R.mul(x, x)) == 0
    assert R.mul(x, x) == 4


# ------------------------------------------------------------- RM criterion


@pytest.mark.parametrize(
    "desc,expect",
    [
        ("Z6", True),
        ("Z4", False),
        ("Z5[x]/(x^2)", False),
        ("Z2[x]/(x^2+x+1)", True),
        ("Z2*Z3*Z5", True),
        ("Z2[x]/(x^2+x)", True),
        ("Z12", False),
    ],
)
def test_rm_poly_criterion(desc, expect):
    assert fr.rm_poly_criterion(ring(desc)) == expect


def test_format_ideal():
    R = ring("Z6")
    ideals = fr.enumerate_ideals(R)
    assert fr.format_ideal(R, ideals[0]) == "{0}"
    assert fr.format_ideal(R, ideals[1]) == "{0, 3}"
    big = ring("Z6[x]/(x^2)")
    full = fr.enumerate_ideals(big)[-1]
    text = fr.format_ideal(big, full)
    assert "{" not in text  # falls back to generators once past the size cap


def test_elem_op():
    R = ring("Z6")
    assert fr.elem_op(R, "add", 4, 5) == 3
    assert fr.elem_op(R, "mul", 4, 5) == 2
    assert fr.elem_op(R, "neg", 4) == 2
    with pytest.raises(IndexError):
        fr.elem_op(R, "add", 6, 0)
    with pytest.raises(IndexError):
        fr.elem_op(R, "mul", 0, -1)
    with pytest.raises(ValueError):
        fr.elem_op(R, "neg", 1, 2)
    with pytest.raises(ValueError):
        fr.elem_op(R, "pow", 1, 2)

"""Presented graded algebras: normal forms, bases, counting, span membership."""

import itertools
import random

import pytest

from chowlab.algebra import (
    F2,
    Z,
    AlgebraPresentation,
    GeneratorSpec,
    free_polynomial_ring,
)
from chowlab.errors import ConfigurationError, PresentationError, UsageError
from chowlab.grassmann import max_orth_ring


def _maxorth(n):
    return max_orth_ring(n).ring


def test_normal_form_square_rewrites():
    ring = _maxorth(4)
    assert ring.monomial({"e1": 2}) == ring.gen("e2")
    assert ring.monomial({"e3": 2}).is_zero
    for name in ("e1", "e2", "e3"):
        assert ring.monomial({name: 1}) == ring.gen(name)


def test_normal_form_unknown_generator():
    ring = _maxorth(4)
    with pytest.raises(PresentationError):
        ring.monomial({"x": 1})


def test_multiply_examples():
    ring = _maxorth(4)
    e1, e2 = ring.gen("e1"), ring.gen("e2")
    x = e1 + e2
    assert x * ring.one() == x
    assert e1 * e1 == e2
    assert (e1 + e2) * e1 == e2 + ring.monomial({"e1": 1, "e2": 1})


def test_multiply_bilinear_random():
    rng = random.Random(11)
    ring = _maxorth(5)

    def rand_elt():
        pairs = []
        for _ in range(rng.randint(0, 4)):
            mono = {f"e{i}": rng.randint(0, 2) for i in range(1, 5)}
            pairs.append((1, mono))
        return ring.element(pairs)

    for _ in range(40):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z


def test_degree_additivity_random():
    rng = random.Random(5)
    ring = _maxorth(6)
    for _ in range(30):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        basis1, basis2 = ring.degree_basis(d1), ring.degree_basis(d2)
        if not basis1 or not basis2:
            continue
        m1 = rng.choice(basis1)
        m2 = rng.choice(basis2)
        from chowlab.algebra import Element

        prod = Element(ring, {m1: 1}) * Element(ring, {m2: 1})
        if not prod.is_zero:
            assert prod.homogeneous_degree() == d1 + d2


def test_degree_basis_examples():
    ring = _maxorth(4)
    named = [ring.monomial_named(m) for m in ring.degree_basis(3)]
    assert {frozenset(d.items()) for d in named} == {
        frozenset({("e3", 1)}),
        frozenset({("e1", 1), ("e2", 1)}),
    }
    assert ring.degree_basis(0) == [(0, 0, 0)]
    assert [ring.monomial_named(m) for m in ring.degree_basis(6)] == [
        {"e1": 1, "e2": 1, "e3": 1}
    ]


def test_degree_basis_against_exhaustive_enumeration():
    # independent oracle: filter raw exponent boxes by the normal-form predicate
    for n in (3, 4, 5):
        ring = _maxorth(n)
        for d in range(11):
            expected = set()
            ranges = [range(0, 2) for _ in range(n - 1)]  # square-free bound
            for exps in itertools.product(*ranges):
                if sum(e * i for e, i in zip(exps, range(1, n))) == d:
                    expected.add(exps)
            assert set(ring.degree_basis(d)) == expected


def test_poincare_examples():
    assert _maxorth(4).poincare() == [1, 1, 1, 2, 1, 1, 1]
    assert _maxorth(4).poincare().total == 8
    assert _maxorth(6).poincare().total == 32
    empty = AlgebraPresentation([], F2, truncation=4)
    assert empty.poincare(4) == [1]


def test_poincare_duality_maxorth():
    for n in range(2, 8):
        p = _maxorth(n).poincare()
        assert p.is_palindromic()
        assert p.degree == n * (n - 1) // 2
        assert p.total == 2 ** (n - 1)


def test_span_membership_over_z():
    ring = free_polynomial_ring([("a", 1), ("b", 1)], Z, truncation=4)
    a, b = ring.gen("a"), ring.gen("b")
    sym = a * a + b * b
    twice = 2 * a * b
    ok, coeffs = ring.span_membership(2 * a * b, [sym, twice])
    assert ok and coeffs == [0, 1]
    ok, coeffs = ring.span_membership(a * b, [sym, twice])
    assert not ok and coeffs is None
    ok, coeffs = ring.span_membership(ring.zero(), [sym, twice])
    assert ok and coeffs == [0, 0]


def test_span_membership_mixed_degree_rejected():
    ring = free_polynomial_ring([("a", 1), ("b", 1)], Z, truncation=4)
    with pytest.raises(UsageError):
        ring.span_membership(ring.gen("a"), [ring.gen("a") * ring.gen("b")])


def test_truncation_projects_high_degrees():
    ring = free_polynomial_ring([("a", 1)], Z, truncation=3)
    a = ring.gen("a")
    assert (a ** 3) == ring.monomial({"a": 3})
    assert (a ** 4).is_zero


def test_unbounded_generator_requires_truncation():
    with pytest.raises(ConfigurationError):
        AlgebraPresentation([GeneratorSpec("a", 1)], Z, truncation=None)


def test_replacement_validation():
    with pytest.raises(PresentationError):
        # non-homogeneous replacement
        AlgebraPresentation(
            [
                GeneratorSpec("a", 1, power_bound=2, replacement=((1, (("b", 1),)),)),
                GeneratorSpec("b", 3),
            ],
            Z,
            truncation=6,
        )
    with pytest.raises(PresentationError):
        # termination shape violated: g^2 -> h^4 with deg h = deg g / 2
        AlgebraPresentation(
            [
                GeneratorSpec("g", 2, power_bound=2, replacement=((1, (("h", 4),)),)),
                GeneratorSpec("h", 1, power_bound=5),
            ],
            F2,
        )


def test_rewrite_termination_on_random_inputs():
    # fuel must never exhaust on the shipped presentation shapes
    rng = random.Random(3)
    ring = _maxorth(6)
    for _ in range(50):
        mono = {f"e{i}": rng.randint(0, 4) for i in range(1, 6)}
        elt = ring.monomial(mono)
        if not elt.is_zero:
            assert elt.is_homogeneous()


def test_presentation_json_roundtrip():
    ring = _maxorth(4)
    data = ring.to_json()
    clone = AlgebraPresentation.from_json(data)
    assert clone.to_json() == data
    assert clone.poincare() == ring.poincare()
    x = clone.gen("e1") * clone.gen("e1")
    assert x == clone.gen("e2")


def test_element_canonical_pairs():
    ring = _maxorth(4)
    x = ring.gen("e2") + ring.monomial({"e1": 1, "e2": 1}) + ring.gen("e1")
    pairs = x.to_pairs()
    degrees = [sum(e * int(n[1:]) for n, e in m.items()) for _, m in pairs]
    assert degrees == sorted(degrees)
    assert all(c == 1 for c, _ in pairs)


def test_rewrite_fuel_guard_on_cyclic_rules():
    # these replacement shapes pass the static check but cycle dynamically;
    # the fuel counter must turn the loop into an explicit error
    from chowlab.errors import RewriteLimitError

    ring = AlgebraPresentation(
        [
            GeneratorSpec("g", 1, power_bound=2, replacement=((1, (("g", 1), ("h", 1))),)),
            GeneratorSpec("h", 1, power_bound=2, replacement=((1, (("g", 1), ("h", 1))),)),
        ],
        F2,
    )
    with pytest.raises(RewriteLimitError):
        ring.monomial({"g": 2, "h": 2})


def test_degree_basis_oracle_all_shipped_presentations():
    # independent oracle on every shipped presentation shape, d <= 10
    from chowlab.grassmann import odd_quotient_ring, prev_max_orth_ring
    from chowlab.weil import build as build_weil

    rings = [
        max_orth_ring(5).ring,
        prev_max_orth_ring(2).ring,
        odd_quotient_ring(2),
        build_weil(2, Z, 10).ring,
        free_polynomial_ring([("a", 1), ("b", 2)], Z, truncation=10),
    ]
    for ring in rings:
        degrees = [g.degree for g in ring.generators]
        bounds = [g.power_bound for g in ring.generators]
        for d in range(11):
            caps = [
                min(d // deg, (b - 1) if b is not None else d)
                for deg, b in zip(degrees, bounds)
            ]
            expected = {
                exps
                for exps in itertools.product(*[range(c + 1) for c in caps])
                if sum(e * deg for e, deg in zip(exps, degrees)) == d
            }
            assert set(ring.degree_basis(d)) == expected, (ring, d)

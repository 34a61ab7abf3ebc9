"""Invariants of a variable-swap involution and generation checks modulo norms.

The ambient ring is a polynomial ring with swapped variable pairs (a_i, b_i)
and optional fixed variables.  The invariant module in each degree has the
fixed monomials and the orbit sums m + sigma(m) as a basis; the norm module
is spanned by all m + sigma(m) (fixed monomials contributing 2m over Z and
nothing mod 2).  Every "generated modulo norms" statement is tested
degreewise as a lattice-spanning problem, never by materializing the
quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraPresentation, Element, free_polynomial_ring
from .errors import ConfigurationError, UsageError


@dataclass(frozen=True)
class SwapInvolution:
    """A degree-preserving involution swapping variable pairs and fixing the rest."""

    pairs: tuple[tuple[str, str], ...]
    fixed: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((a, b) for a, b in self.pairs))
        object.__setattr__(self, "fixed", tuple(self.fixed))

    def validate_against(self, A: AlgebraPresentation) -> None:
        names = [g.name for g in A.generators]
        touched = [n for pair in self.pairs for n in pair] + list(self.fixed)
        if sorted(touched) != sorted(names):
            raise ConfigurationError("involution does not partition the generator set")
        degree = {g.name: g.degree for g in A.generators}
        for a, b in self.pairs:
            if degree[a] != degree[b]:
                raise ConfigurationError(f"swapped pair ({a}, {b}) mixes degrees")

    def bind(self, A: AlgebraPresentation) -> "BoundSwap":
        self.validate_against(A)
        return BoundSwap(self, A)


class BoundSwap:
    """A swap involution bound to one presentation, acting on exponent tuples."""

    def __init__(self, sigma: SwapInvolution, A: AlgebraPresentation):
        self.sigma = sigma
        self.algebra = A
        index = {g.name: i for i, g in enumerate(A.generators)}
        perm = list(range(len(A.generators)))
        for a, b in sigma.pairs:
            perm[index[a]], perm[index[b]] = index[b], index[a]
        self._perm = tuple(perm)

    def permute(self, mono: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(mono[self._perm[i]] for i in range(len(mono)))

    def apply(self, x: Element) -> Element:
        terms = {}
        for mono, c in x.terms.items():
            terms[self.permute(mono)] = c
        return Element(self.algebra, self.algebra._normalize(list(terms.items())))

    def orbit_pairs(self, d: int):
        """Fixed monomials and canonical orbit pairs of the degree-d basis.

        Requires the normal basis to be stable under the swap (true for free
        rings and for presentations whose bounds and rules are symmetric).
        """
        basis = self.algebra.degree_basis(d)
        basis_set = set(basis)
        fixed, orbits = [], []
        for mono in basis:
            image = self.permute(mono)
            if image not in basis_set:
                raise ConfigurationError(
                    "normal basis is not stable under the swap involution"
                )
            if image == mono:
                fixed.append(mono)
            elif mono < image:
                orbits.append((mono, image))
        return fixed, orbits


def swap_polynomial_ring(
    r_pairs: int, k_fixed: int, coefficients: str, truncation: int
) -> tuple[AlgebraPresentation, SwapInvolution]:
    """Degree-one polynomial ring with k fixed variables and r swapped pairs."""
    names = [(f"t{j}", 1) for j in range(1, k_fixed + 1)]
    pairs = []
    for i in range(1, r_pairs + 1):
        names += [(f"a{i}", 1), (f"b{i}", 1)]
        pairs.append((f"a{i}", f"b{i}"))
    ring = free_polynomial_ring(names, coefficients, truncation)
    sigma = SwapInvolution(pairs=tuple(pairs), fixed=tuple(f"t{j}" for j in range(1, k_fixed + 1)))
    return ring, sigma


def invariant_basis(sigma: SwapInvolution, A: AlgebraPresentation, d: int) -> list[Element]:
    """Basis of the invariant module in degree d: fixed monomials and orbit sums."""
    fixed, orbits = sigma.bind(A).orbit_pairs(d)
    out = [Element(A, {mono: 1}) for mono in fixed]
    out += [Element(A, {mono: 1, image: 1}) for mono, image in orbits]
    return out


def antisymmetric_rank(sigma: SwapInvolution, A: AlgebraPresentation, d: int) -> int:
    """Rank of the span of all m - sigma(m) in degree d (the orbit count)."""
    _, orbits = sigma.bind(A).orbit_pairs(d)
    return len(orbits)


def norm_image_basis(sigma: SwapInvolution, A: AlgebraPresentation, d: int) -> list[Element]:
    """Spanning set of the norm module in degree d: all m + sigma(m)."""
    fixed, orbits = sigma.bind(A).orbit_pairs(d)
    out = []
    for mono in fixed:
        nu = Element(A, A._normalize([(mono, 2)]))
        if not nu.is_zero:
            out.append(nu)
    out += [Element(A, {mono: 1, image: 1}) for mono, image in orbits]
    return out


def norm_image_spanners(A: AlgebraPresentation, apply_sigma, d: int) -> list[Element]:
    """Norm spanning set for an arbitrary involution given by its action on elements."""
    out = []
    seen = set()
    for x in A.basis_elements(d):
        nu = x + apply_sigma(x)
        if nu.is_zero:
            continue
        key = tuple(sorted(nu.terms.items()))
        if key not in seen:
            seen.add(key)
            out.append(nu)
    return out


def generator_products(A: AlgebraPresentation, generators, d: int) -> list[Element]:
    """All products of the given homogeneous elements with total degree d."""
    degrees = []
    for g in generators:
        gd = g.homogeneous_degree()
        if gd is None or gd < 1:
            raise UsageError("generators must be homogeneous of positive degree")
        degrees.append(gd)
    out: list[Element] = []

    def rec(i: int, remaining: int, acc: Element) -> None:
        if acc.is_zero:
            return
        if i == len(degrees):
            if remaining == 0:
                out.append(acc)
            return
        power = acc
        e = 0
        while True:
            rec(i + 1, remaining - e * degrees[i], power)
            e += 1
            if e * degrees[i] > remaining:
                break
            power = power * generators[i]

    rec(0, d, A.one())
    return out


@dataclass(frozen=True)
class DegreeCheck:
    d: int
    passed: bool
    witness: Element | None = None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "pass": self.passed,
            "witness": self.witness.to_pairs() if self.witness is not None else None,
        }


@dataclass(frozen=True)
class GenerationReport:
    check: str
    params: dict
    degrees: tuple[DegreeCheck, ...]

    @property
    def passed(self) -> bool:
        return all(dc.passed for dc in self.degrees)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": dict(self.params),
            "degrees": [dc.to_json() for dc in self.degrees],
            "pass": self.passed,
        }


def quotient_generation_check(
    sigma: SwapInvolution,
    A: AlgebraPresentation,
    generators,
    max_degree: int,
    check_name: str = "quotient_generation",
    params: dict | None = None,
) -> GenerationReport:
    """Degreewise test that the invariant lattice modulo norms is generated as stated.

    In each degree every invariant basis element must lie in the span of the
    degree-d products of the given generators together with the norm module.
    """
    results = []
    for d in range(max_degree + 1):
        spanners = generator_products(A, generators, d) + norm_image_basis(sigma, A, d)
        solver = A.span_solver(spanners, d)
        witness = None
        for v in invariant_basis(sigma, A, d):
            if not solver.contains(A.vectorize([v], d)[0]):
                witness = v
                break
        results.append(DegreeCheck(d=d, passed=witness is None, witness=witness))
    return GenerationReport(
        check=check_name, params=params or {}, degrees=tuple(results)
    )


def codim_le2_generation_check(
    k_fixed: int, r_pairs: int, max_degree: int, coefficients: str = "Z"
) -> GenerationReport:
    """Generation by the fixed degree-1 variables and the degree-2 orbit products."""
    if k_fixed not in (0, 1):
        raise UsageError("k_fixed must be 0 or 1")
    ring, sigma = swap_polynomial_ring(r_pairs, k_fixed, coefficients, max_degree)
    gens = [ring.gen(f"t{j}") for j in range(1, k_fixed + 1)]
    gens += [ring.gen(f"a{i}") * ring.gen(f"b{i}") for i in range(1, r_pairs + 1)]
    return quotient_generation_check(
        sigma,
        ring,
        gens,
        max_degree,
        check_name="codim_le2_generation",
        params={"k_fixed": k_fixed, "r_pairs": r_pairs, "coefficients": coefficients},
    )


@dataclass(frozen=True)
class ObstructionReport:
    """The degree-3 witness separating integral generation from generation after doubling."""

    witness: Element
    witness_in_low_degree_span: bool
    doubled_in_low_degree_span: bool
    witness_is_norm: bool

    @property
    def passed(self) -> bool:
        return (
            not self.witness_in_low_degree_span
            and self.doubled_in_low_degree_span
            and self.witness_is_norm
        )

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_pairs(),
            "witness_in_low_degree_span": self.witness_in_low_degree_span,
            "doubled_in_low_degree_span": self.doubled_in_low_degree_span,
            "witness_is_norm": self.witness_is_norm,
            "pass": self.passed,
        }


def non_generation_witness() -> ObstructionReport:
    """a_1 a_2 a_3 + b_1 b_2 b_3 escapes the ring generated by low-degree invariants over Z.

    The same element doubled is a product combination of degree <= 2
    invariants, and it is itself a norm.
    """
    ring, sigma = swap_polynomial_ring(3, 0, "Z", truncation=3)
    p = ring.monomial({"a1": 1, "a2": 1, "a3": 1}) + ring.monomial(
        {"b1": 1, "b2": 1, "b3": 1}
    )
    deg1 = invariant_basis(sigma, ring, 1)
    deg2 = invariant_basis(sigma, ring, 2)
    spanners: list[Element] = []
    for i in range(len(deg1)):
        for j in range(i, len(deg1)):
            for k in range(j, len(deg1)):
                spanners.append(deg1[i] * deg1[j] * deg1[k])
    for x in deg1:
        for y in deg2:
            spanners.append(x * y)
    in_span, _ = ring.span_membership(p, spanners)
    doubled, _ = ring.span_membership(2 * p, spanners)
    is_norm, _ = ring.span_membership(p, norm_image_basis(sigma, ring, 3))
    return ObstructionReport(
        witness=p,
        witness_in_low_degree_span=in_span,
        doubled_in_low_degree_span=doubled,
        witness_is_norm=is_norm,
    )

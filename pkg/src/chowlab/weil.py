"""Split model of a quadratic Weil transfer of a projective bundle.

Two rank-r projective-bundle rings over a common base are glued by the
involution swapping the two factors; the distinguished degree-2 class is
c = a*b.  The checks verify that modulo the norm module the invariants form
a free module on 1, c, ..., c^(r-1) over the base invariants, with the
single monic relation sum_i c_i c'_i c^(r-i) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraPresentation, Element, GeneratorSpec
from .errors import ConfigurationError
from .invariants import (
    SwapInvolution,
    generator_products,
    invariant_basis,
    norm_image_basis,
    quotient_generation_check,
)
from .linalg import f2_kernel, z_kernel


@dataclass(frozen=True)
class DoubleBundleRing:
    """The glued double projective-bundle presentation with its swap involution."""

    r: int
    coefficients: str
    D: int
    ring: AlgebraPresentation = field(compare=False)
    base: AlgebraPresentation = field(compare=False)
    sigma: SwapInvolution = field(compare=False)
    base_sigma: SwapInvolution = field(compare=False)

    def c(self) -> Element:
        return self.ring.gen("a") * self.ring.gen("b")

    def chern_pair(self, i: int) -> Element:
        """The invariant product c_i * c'_i (1 for i = 0)."""
        if i == 0:
            return self.ring.one()
        return self.ring.gen(f"c{i}") * self.ring.gen(f"cp{i}")

    def apply_sigma(self, x: Element) -> Element:
        return self.sigma.bind(self.ring).apply(x)

    def norm_spanners(self, d: int) -> list[Element]:
        return norm_image_basis(self.sigma, self.ring, d)

    def base_in_full(self, x: Element) -> Element:
        """Reinterpret a base-ring element inside the full ring (names agree)."""
        return self.ring.element([(c, named) for c, named in x.to_pairs()])


def _fiber_rule(r: int, chern_prefix: str, fiber_name: str):
    # a^r -> sum_{i=1..r} (-1)^(i+1) c_i a^(r-i)
    terms = []
    for i in range(1, r + 1):
        sign = 1 if i % 2 == 1 else -1
        mono = {f"{chern_prefix}{i}": 1}
        if r - i:
            mono[fiber_name] = r - i
        terms.append((sign, tuple(sorted(mono.items()))))
    return tuple(terms)


def build(r: int, coefficients: str, D: int) -> DoubleBundleRing:
    """Construct the rank-r double-bundle ring truncated above degree D."""
    if D < 2 * r:
        raise ConfigurationError(f"truncation D={D} must be at least 2r={2 * r}")
    gens = []
    for prefix in ("c", "cp"):
        gens += [GeneratorSpec(f"{prefix}{i}", degree=i) for i in range(1, r + 1)]
    gens.append(GeneratorSpec("a", degree=1, power_bound=r, replacement=_fiber_rule(r, "c", "a")))
    gens.append(GeneratorSpec("b", degree=1, power_bound=r, replacement=_fiber_rule(r, "cp", "b")))
    ring = AlgebraPresentation(gens, coefficients, truncation=D)
    base = AlgebraPresentation(
        [GeneratorSpec(f"{p}{i}", degree=i) for p in ("c", "cp") for i in range(1, r + 1)],
        coefficients,
        truncation=D,
    )
    pairs = tuple((f"c{i}", f"cp{i}") for i in range(1, r + 1))
    sigma = SwapInvolution(pairs=pairs + (("a", "b"),))
    base_sigma = SwapInvolution(pairs=pairs)
    return DoubleBundleRing(
        r=r,
        coefficients=coefficients,
        D=D,
        ring=ring,
        base=base,
        sigma=sigma,
        base_sigma=base_sigma,
    )


def _mutated(R: DoubleBundleRing) -> DoubleBundleRing:
    """Same ring but with the fiber relations replaced by a^r = b^r = 0."""
    gens = []
    for g in R.ring.generators:
        if g.name in ("a", "b"):
            gens.append(GeneratorSpec(g.name, degree=1, power_bound=R.r, replacement=()))
        else:
            gens.append(g)
    ring = AlgebraPresentation(gens, R.coefficients, truncation=R.D)
    return DoubleBundleRing(
        r=R.r,
        coefficients=R.coefficients,
        D=R.D,
        ring=ring,
        base=R.base,
        sigma=R.sigma,
        base_sigma=R.base_sigma,
    )


def relation_element(R: DoubleBundleRing) -> Element:
    """sum_{i=0..r} c_i c'_i c^(r-i), normalized in the ring."""
    c = R.c()
    acc = R.ring.zero()
    for i in range(R.r + 1):
        acc = acc + R.chern_pair(i) * c ** (R.r - i)
    return acc


def product_relation_check(R: DoubleBundleRing) -> bool:
    """Does the product relation land in the norm module in degree 2r?"""
    elt = relation_element(R)
    if elt.is_zero:
        return True
    ok, _ = R.ring.span_membership(elt, R.norm_spanners(2 * R.r))
    return ok


@dataclass(frozen=True)
class FreenessReport:
    r: int
    coefficients: str
    D: int
    spanning: dict
    freeness: dict
    module_rank: int
    relation_in_norms: bool
    mutation_rejected: bool
    mutation_witness: list

    @property
    def passed(self) -> bool:
        return (
            all(self.spanning.values())
            and all(self.freeness.values())
            and self.relation_in_norms
            and self.mutation_rejected
        )

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "coefficients": self.coefficients,
            "D": self.D,
            "spanning": {str(k): v for k, v in self.spanning.items()},
            "freeness": {str(k): v for k, v in self.freeness.items()},
            "module_rank": self.module_rank,
            "relation_in_norms": self.relation_in_norms,
            "mutation_rejected": self.mutation_rejected,
            "mutation_witness": self.mutation_witness,
            "pass": self.passed,
        }


def _power_monomials(R: DoubleBundleRing, d: int) -> list[Element]:
    """Products (c_1 c'_1)^m1 ... (c_r c'_r)^mr * c^k with k < r and total degree d."""
    pair_degrees = [2 * i for i in range(1, R.r + 1)]
    out = []
    c = R.c()
    for k in range(R.r):
        remaining_total = d - 2 * k
        if remaining_total < 0:
            continue
        exps = [0] * R.r

        def rec(i: int, remaining: int) -> None:
            if i == R.r:
                if remaining == 0:
                    acc = c ** k
                    for j, e in enumerate(exps):
                        acc = acc * R.chern_pair(j + 1) ** e
                    out.append(acc)
                return
            for e in range(remaining // pair_degrees[i] + 1):
                exps[i] = e
                rec(i + 1, remaining - e * pair_degrees[i])
            exps[i] = 0

        rec(0, remaining_total)
    return out


def freeness_check(R: DoubleBundleRing) -> FreenessReport:
    """Module spanning and freeness of 1, c, ..., c^(r-1) modulo norms, per degree.

    Spanning: every invariant class is a combination of base-pair monomials
    times powers of c, modulo norms.  Freeness: the kernel of the evaluation
    of such combinations into invariants-mod-norms is exactly the tuple of
    base norm modules, verified by both inclusions on kernel bases.
    """
    ring, base = R.ring, R.base
    c = R.c()
    spanning: dict[int, bool] = {}
    freeness: dict[int, bool] = {}
    for d in range(R.D - 2 * R.r + 1):
        norms = R.norm_spanners(d)
        spanners = _power_monomials(R, d) + norms
        solver = ring.span_solver(spanners, d)
        ok = True
        for v in invariant_basis(R.sigma, ring, d):
            if not solver.contains(ring.vectorize([v], d)[0]):
                ok = False
                break
        spanning[d] = ok
        freeness[d] = _kernel_matches_base_norms(R, d)
    relation_ok = product_relation_check(R)
    mutated = _mutated(R)
    mutated_relation = relation_element(mutated)
    mutation_rejected = not product_relation_check(mutated)
    return FreenessReport(
        r=R.r,
        coefficients=R.coefficients,
        D=R.D,
        spanning=spanning,
        freeness=freeness,
        module_rank=R.r,
        relation_in_norms=relation_ok,
        mutation_rejected=mutation_rejected,
        mutation_witness=mutated_relation.to_pairs(),
    )


def _kernel_matches_base_norms(R: DoubleBundleRing, d: int) -> bool:
    ring, base = R.ring, R.base
    c = R.c()
    labels: list[tuple[int, int]] = []  # (k, index into base invariant basis)
    vectors: list[Element] = []
    base_inv: dict[int, list[Element]] = {}
    for k in range(R.r):
        bd = d - 2 * k
        if bd < 0:
            continue
        base_inv[k] = invariant_basis(R.base_sigma, base, bd)
        for idx, beta in enumerate(base_inv[k]):
            labels.append((k, idx))
            vectors.append(R.base_in_full(beta) * c ** k)
    norms = R.norm_spanners(d)
    all_vecs = ring.vectorize(vectors + norms, d)
    base_norm_solvers = {
        k: base.span_solver(norm_image_basis(R.base_sigma, base, d - 2 * k), d - 2 * k)
        for k in base_inv
    }

    # inclusion 1: base norms times c^k land in the full norm module
    full_solver = ring.span_solver(norms, d)
    for k in base_inv:
        for nu in norm_image_basis(R.base_sigma, base, d - 2 * k):
            vec = ring.vectorize([R.base_in_full(nu) * c ** k], d)[0]
            if not full_solver.contains(vec):
                return False

    # inclusion 2: kernel combinations have all coefficients in the base norms
    if ring.coefficients == "F2":
        kernel = f2_kernel(all_vecs)
        coeff_of = lambda mask, i: (mask >> i) & 1
    else:
        kernel = z_kernel(all_vecs)
        coeff_of = lambda vec, i: vec[i]
    for combo in kernel:
        for k, betas in base_inv.items():
            acc = base.zero()
            for i, (kk, idx) in enumerate(labels):
                if kk != k:
                    continue
                coeff = coeff_of(combo, i)
                if coeff:
                    acc = acc + betas[idx] * coeff
            if acc.is_zero:
                continue
            vec = base.vectorize([acc], d - 2 * k)[0]
            if not base_norm_solvers[k].contains(vec):
                return False
    return True


def base_generation_check(R: DoubleBundleRing, max_degree: int | None = None):
    """The base invariants modulo norms are generated by the products c_i c'_i."""
    if max_degree is None:
        max_degree = R.D - 2 * R.r
    gens = [R.base.gen(f"c{i}") * R.base.gen(f"cp{i}") for i in range(1, R.r + 1)]
    return quotient_generation_check(
        R.base_sigma,
        R.base,
        gens,
        max_degree,
        check_name="weil_base_generation",
        params={"r": R.r, "coefficients": R.coefficients},
    )

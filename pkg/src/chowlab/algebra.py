"""Graded commutative algebras presented by generators and pure power rewrite rules.

A presentation consists of named generators with positive degrees.  Each
generator may carry a rule ``g^k -> replacement`` (possibly zero); monomials
are kept in normal form, i.e. with every exponent below its generator's
power bound and total degree at most the truncation bound.  Degrees above
the truncation are projected to zero, which models working "up to degree D"
in an infinite polynomial ring.

Coefficients are either ``"F2"`` or ``"Z"``; linear algebra in fixed degree
is delegated to :mod:`chowlab.linalg`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ConfigurationError,
    PresentationError,
    RewriteLimitError,
    UsageError,
)
from .linalg import F2Span, ZSpan
from .polynomials import PoincarePolynomial

F2 = "F2"
Z = "Z"

_REWRITE_FUEL = 1_000_000


def _freeze_monomial(mono) -> tuple[tuple[str, int], ...]:
    if isinstance(mono, dict):
        items = mono.items()
    else:
        items = mono
    return tuple(sorted((str(n), int(e)) for n, e in items if int(e) != 0))


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator: degree, optional power bound and rewrite image of g^bound.

    ``replacement`` holds (coefficient, monomial) pairs with name-keyed
    monomials; an empty replacement with a finite bound means g^bound = 0.
    """

    name: str
    degree: int
    power_bound: int | None = None
    replacement: tuple[tuple[int, tuple[tuple[str, int], ...]], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "replacement",
            tuple((int(c), _freeze_monomial(m)) for c, m in self.replacement),
        )
        if self.degree < 1:
            raise PresentationError(f"generator {self.name!r} must have positive degree")
        if self.power_bound is not None and self.power_bound < 1:
            raise PresentationError(f"generator {self.name!r} power bound must be >= 1")
        if self.power_bound is None and self.replacement:
            raise PresentationError(f"generator {self.name!r} is unbounded but has a replacement")


class AlgebraPresentation:
    """A graded commutative algebra over F2 or Z given by generators and rules."""

    def __init__(self, generators, coefficients: str, truncation: int | None = None):
        generators = tuple(generators)
        if coefficients not in (F2, Z):
            raise PresentationError(f"unknown coefficient ring {coefficients!r}")
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise PresentationError("generator names must be distinct")
        if truncation is not None and truncation < 0:
            raise PresentationError("truncation degree must be nonnegative")
        if truncation is None and any(g.power_bound is None for g in generators):
            raise ConfigurationError(
                "a power-unbounded generator requires a finite truncation degree"
            )
        self.generators = generators
        self.coefficients = coefficients
        self.truncation = truncation
        self._index = {g.name: i for i, g in enumerate(generators)}
        self._degrees = tuple(g.degree for g in generators)
        self._bounds = tuple(g.power_bound for g in generators)
        self._replacements: dict[int, tuple[tuple[int, tuple[int, ...]], ...]] = {}
        for i, g in enumerate(generators):
            if g.power_bound is None:
                continue
            terms = []
            for coeff, mono in g.replacement:
                exps = self._exps_from_named(mono)
                self._validate_replacement(g, exps)
                terms.append((coeff, exps))
            self._replacements[i] = tuple(terms)
        self._basis_cache: dict[int, tuple[tuple[int, ...], ...]] = {}

    # -- construction helpers ------------------------------------------------

    def _exps_from_named(self, mono) -> tuple[int, ...]:
        exps = [0] * len(self.generators)
        for name, e in dict(mono).items():
            if name not in self._index:
                raise PresentationError(f"unknown generator name {name!r}")
            if e < 0:
                raise PresentationError(f"negative exponent for {name!r}")
            exps[self._index[name]] = e
        return tuple(exps)

    def _validate_replacement(self, g: GeneratorSpec, exps: tuple[int, ...]) -> None:
        i = self._index[g.name]
        target_degree = g.power_bound * g.degree
        if self.monomial_degree(exps) != target_degree:
            raise PresentationError(
                f"replacement monomial for {g.name!r} is not homogeneous of degree {target_degree}"
            )
        factors = sum(exps)
        if exps[i] >= g.power_bound or factors > g.power_bound:
            raise PresentationError(
                f"replacement for {g.name!r} violates the termination shape"
            )

    def monomial_degree(self, exps) -> int:
        return sum(e * d for e, d in zip(exps, self._degrees))

    @property
    def max_degree(self) -> int:
        """Top degree carrying a nonzero monomial (truncation or bound-limited)."""
        if self.truncation is not None:
            return self.truncation
        return sum((b - 1) * d for b, d in zip(self._bounds, self._degrees))

    # -- normalization -------------------------------------------------------

    def _reduce_coeff(self, c: int) -> int:
        return c % 2 if self.coefficients == F2 else c

    def _normalize(self, raw_terms) -> dict[tuple[int, ...], int]:
        pending = {}
        for mono, coeff in raw_terms:
            pending[mono] = pending.get(mono, 0) + coeff
        out: dict[tuple[int, ...], int] = {}
        fuel = _REWRITE_FUEL
        while pending:
            mono, coeff = pending.popitem()
            coeff = self._reduce_coeff(coeff)
            if coeff == 0:
                continue
            if self.truncation is not None and self.monomial_degree(mono) > self.truncation:
                continue
            hot = None
            for i, e in enumerate(mono):
                b = self._bounds[i]
                if b is not None and e >= b:
                    hot = i
                    break
            if hot is None:
                new = out.get(mono, 0) + coeff
                new = self._reduce_coeff(new)
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
                continue
            fuel -= 1
            if fuel <= 0:
                raise RewriteLimitError("rewrite fuel exhausted; presentation may not terminate")
            rest = list(mono)
            rest[hot] -= self._bounds[hot]
            for rc, rmono in self._replacements[hot]:
                new_mono = tuple(x + y for x, y in zip(rest, rmono))
                pending[new_mono] = pending.get(new_mono, 0) + coeff * rc
        return out

    # -- element constructors -------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, self._normalize([(tuple([0] * len(self.generators)), 1)]))

    def gen(self, name: str) -> "Element":
        return self.monomial({name: 1})

    def monomial(self, mono, coeff: int = 1) -> "Element":
        """Normal form of ``coeff * product(g^e)`` for a name-keyed monomial."""
        exps = self._exps_from_named(_freeze_monomial(mono))
        return Element(self, self._normalize([(exps, coeff)]))

    def normal_form(self, mono, coeff: int = 1) -> "Element":
        return self.monomial(mono, coeff)

    def element(self, pairs) -> "Element":
        """Build a normalized element from (coeff, name-monomial) pairs."""
        raw = []
        for coeff, mono in pairs:
            raw.append((self._exps_from_named(_freeze_monomial(mono)), int(coeff)))
        return Element(self, self._normalize(raw))

    def multiply(self, x: "Element", y: "Element") -> "Element":
        return x * y

    # -- bases and counting ----------------------------------------------------

    def degree_basis(self, d: int) -> list[tuple[int, ...]]:
        """All normal-form monomials of degree ``d`` in canonical order."""
        if d < 0:
            raise UsageError("degree must be nonnegative")
        if self.truncation is not None and d > self.truncation:
            raise UsageError(f"degree {d} exceeds truncation {self.truncation}")
        if d not in self._basis_cache:
            out: list[tuple[int, ...]] = []
            exps = [0] * len(self.generators)

            def rec(i: int, remaining: int) -> None:
                if i == len(self.generators):
                    if remaining == 0:
                        out.append(tuple(exps))
                    return
                deg = self._degrees[i]
                cap = remaining // deg
                if self._bounds[i] is not None:
                    cap = min(cap, self._bounds[i] - 1)
                for e in range(cap + 1):
                    exps[i] = e
                    rec(i + 1, remaining - e * deg)
                exps[i] = 0

            rec(0, d)
            out.sort()
            self._basis_cache[d] = tuple(out)
        return list(self._basis_cache[d])

    def poincare(self, up_to: int | None = None) -> PoincarePolynomial:
        """Poincare polynomial with coefficient |degree basis| at each degree."""
        if up_to is None:
            up_to = self.max_degree
        if self.truncation is not None and up_to > self.truncation:
            raise UsageError(f"degree {up_to} exceeds truncation {self.truncation}")
        return PoincarePolynomial([len(self.degree_basis(d)) for d in range(up_to + 1)])

    def basis_elements(self, d: int) -> list["Element"]:
        return [Element(self, {m: 1}) for m in self.degree_basis(d)]

    # -- linear algebra in fixed degree ----------------------------------------

    def vectorize(self, elements, d: int):
        """Coordinate vectors of homogeneous degree-d elements on the degree basis."""
        index = {m: i for i, m in enumerate(self.degree_basis(d))}
        if self.coefficients == F2:
            out = []
            for x in elements:
                mask = 0
                for mono in x.terms:
                    mask |= 1 << index[mono]
                out.append(mask)
            return out
        width = len(index)
        vecs = []
        for x in elements:
            row = [0] * width
            for mono, c in x.terms.items():
                row[index[mono]] = c
            vecs.append(row)
        return vecs

    def span_solver(self, spanners, d: int):
        """A prepared membership solver for the span of homogeneous elements."""
        vecs = self.vectorize(spanners, d)
        if self.coefficients == F2:
            return F2Span(vecs)
        return ZSpan(vecs, width=len(self.degree_basis(d)))

    def span_membership(self, target: "Element", spanners) -> tuple[bool, list[int] | None]:
        """Decide membership of ``target`` in the span of ``spanners``; witness on success."""
        degrees = {x.homogeneous_degree() for x in spanners if not x.is_zero}
        degrees.discard(None)
        if len(degrees) > 1:
            raise UsageError("spanners must share a single degree")
        if target.is_zero:
            return True, [0] * len(spanners)
        d = target.homogeneous_degree()
        if d is None:
            raise UsageError("target must be homogeneous")
        if degrees and degrees != {d}:
            raise UsageError("target and spanners have mixed degrees")
        solver = self.span_solver(spanners, d)
        vec = self.vectorize([target], d)[0]
        wit = solver.witness(vec)
        if wit is None:
            return False, None
        if self.coefficients == F2:
            return True, [(wit >> i) & 1 for i in range(len(spanners))]
        return True, wit

    # -- ring maps ---------------------------------------------------------------

    def substitute(self, x: "Element", images: dict[str, "Element"], codomain=None):
        """Apply the map sending each generator to its image, extended over terms."""
        target = codomain if codomain is not None else self
        missing = [g.name for g in self.generators if g.name not in images]
        if missing:
            raise ConfigurationError(f"missing images for generators: {missing}")
        acc = target.zero()
        for mono, coeff in x.terms.items():
            term = target.one() * coeff
            for i, e in enumerate(mono):
                if e:
                    term = term * (images[self.generators[i].name] ** e)
            acc = acc + term
        return acc

    # -- serialization -------------------------------------------------------------

    def monomial_named(self, exps) -> dict[str, int]:
        return {self.generators[i].name: e for i, e in enumerate(exps) if e}

    def to_json(self) -> dict:
        return {
            "coefficients": self.coefficients,
            "truncation": self.truncation,
            "generators": [
                {
                    "name": g.name,
                    "degree": g.degree,
                    "power_bound": g.power_bound,
                    "replacement": [[c, dict(m)] for c, m in g.replacement],
                }
                for g in self.generators
            ],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [
            GeneratorSpec(
                name=g["name"],
                degree=g["degree"],
                power_bound=g.get("power_bound"),
                replacement=tuple(
                    (c, _freeze_monomial(m)) for c, m in g.get("replacement", [])
                ),
            )
            for g in data["generators"]
        ]
        return cls(gens, data["coefficients"], data.get("truncation"))

    def __repr__(self) -> str:
        names = ",".join(g.name for g in self.generators)
        return f"AlgebraPresentation([{names}], {self.coefficients}, truncation={self.truncation})"


class Element:
    """A normalized element: map from normal-form monomials to nonzero coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraPresentation, terms: dict):
        self.algebra = algebra
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None (zero element included)."""
        degs = {self.algebra.monomial_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({self.algebra.monomial_degree(m) for m in self.terms}) <= 1

    def coefficient(self, mono) -> int:
        exps = self.algebra._exps_from_named(_freeze_monomial(mono))
        return self.terms.get(exps, 0)

    def _check_compatible(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise UsageError("elements belong to different presentations")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.algebra.one() * other
        self._check_compatible(other)
        raw = list(self.terms.items()) + list(other.terms.items())
        return Element(self.algebra, self.algebra._normalize(raw))

    __radd__ = __add__

    def __neg__(self):
        return Element(
            self.algebra,
            self.algebra._normalize([(m, -c) for m, c in self.terms.items()]),
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(
                self.algebra,
                self.algebra._normalize([(m, c * other) for m, c in self.terms.items()]),
            )
        self._check_compatible(other)
        raw = []
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                raw.append((tuple(x + y for x, y in zip(m1, m2)), c1 * c2))
        return Element(self.algebra, self.algebra._normalize(raw))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers are not defined")
        acc = self.algebra.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def to_pairs(self) -> list:
        """Canonical (coefficient, name-monomial) pairs sorted by monomial order."""
        keys = sorted(self.terms, key=lambda m: (self.algebra.monomial_degree(m), m))
        return [[self.terms[m], self.algebra.monomial_named(m)] for m in keys]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for coeff, named in self.to_pairs():
            factors = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in sorted(named.items())
            )
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(factors)
            elif coeff == -1:
                parts.append(f"-{factors}")
            else:
                parts.append(f"{coeff}*{factors}")
        return " + ".join(parts)


def free_polynomial_ring(names_degrees, coefficients: str, truncation: int) -> AlgebraPresentation:
    """Polynomial ring on (name, degree) pairs truncated above ``truncation``."""
    gens = [GeneratorSpec(name=n, degree=d) for n, d in names_degrees]
    return AlgebraPresentation(gens, coefficients, truncation)

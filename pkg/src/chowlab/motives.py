"""Formal motive bookkeeping: isotropic decomposition recursion and its arithmetic.

Atoms are Tate, SpecK (the class of the quadratic extension point) and
Essential(n, r) (the part of the rank-r isotropic grassmannian motive
complementary to all SpecK shifts).  The recursion splits one hyperbolic
plane off a rank-n space:

    Essential(n, r) = Essential(n-2, r-1)
                      + Essential(n-2, r)(2r)
                      + Essential(n-2, r-1)(2n-2r-1)

with Essential(n, 0) the Tate unit and out-of-range atoms zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UsageError
from .polynomials import PoincarePolynomial, poly_mul, poly_sub


# -- dimensions ------------------------------------------------------------


def dim_unitary(n: int, r: int) -> int:
    """Dimension of the variety of r-dimensional totally isotropic subspaces, r(2n-3r)."""
    if not 0 <= r <= n // 2:
        raise UsageError(f"r={r} out of range for n={n}")
    return r * (2 * n - 3 * r)


def dim_orthogonal(n: int, m: int) -> int:
    """Dimension of the totally singular m-grassmannian of a 2n-dimensional form."""
    if not 0 <= m <= n:
        raise UsageError(f"m={m} out of range for n={n}")
    prod = m * (4 * n - 3 * m - 1)
    assert prod % 2 == 0
    return prod // 2


# -- atoms and motives -------------------------------------------------------


@dataclass(frozen=True, order=True)
class Atom:
    kind: str
    n: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.kind not in ("Tate", "SpecK", "Essential"):
            raise UsageError(f"unknown atom kind {self.kind!r}")
        if self.kind == "Essential":
            if self.n is None or self.r is None or not 0 <= self.r <= self.n // 2:
                raise UsageError(f"Essential atom out of range: n={self.n}, r={self.r}")
        elif self.n is not None or self.r is not None:
            raise UsageError(f"{self.kind} atom takes no parameters")

    def __repr__(self) -> str:
        if self.kind == "Essential":
            return f"Essential({self.n},{self.r})"
        return self.kind


TATE = Atom("Tate")
SPEC_K = Atom("SpecK")


def essential(n: int, r: int) -> Atom:
    return Atom("Essential", n, r)


@dataclass(frozen=True)
class Motive:
    """A finite multiset of shifted atoms, plus an optional unspecified SpecK remainder."""

    summands: tuple[tuple[Atom, int], ...] = ()
    speck_residual: bool = False

    def __post_init__(self):
        ordered = tuple(sorted(self.summands, key=lambda s: (s[1], s[0])))
        object.__setattr__(self, "summands", ordered)

    def shifted(self, i: int) -> "Motive":
        return Motive(tuple((a, s + i) for a, s in self.summands), self.speck_residual)

    def __add__(self, other: "Motive") -> "Motive":
        return Motive(
            self.summands + other.summands,
            self.speck_residual or other.speck_residual,
        )

    def poincare(self) -> PoincarePolynomial:
        """Tate realization; defined only when no SpecK content is present."""
        if self.speck_residual or any(a.kind == "SpecK" for a, _ in self.summands):
            raise UsageError("Poincare polynomial undefined with SpecK summands")
        acc = PoincarePolynomial()
        for atom, shift in self.summands:
            if atom.kind == "Tate":
                acc = acc + PoincarePolynomial.monomial(shift)
            else:
                acc = acc + essential_poincare(atom.n, atom.r).shift(shift)
        return acc

    def to_json(self) -> dict:
        out = {"summands": [{"atom": repr(a), "shift": s} for a, s in self.summands]}
        if self.speck_residual:
            out["speck_residual"] = True
        return out

    def __repr__(self) -> str:
        parts = [
            (repr(a) if s == 0 else f"{a!r}({s})") for a, s in self.summands
        ]
        if self.speck_residual:
            parts.append("SpecK-residual")
        return " + ".join(parts) if parts else "0"


def _step_shifts(n: int, r: int) -> tuple[int, int]:
    # closed forms of (dim X_r - dim X'_r)/2 and dim X_r - dim X'_{r-1}
    i, j = 2 * r, 2 * n - 2 * r - 1
    if r <= (n - 2) // 2:
        assert i == (dim_unitary(n, r) - dim_unitary(n - 2, r)) // 2
    if 0 <= r - 1 <= (n - 2) // 2:
        assert j == dim_unitary(n, r) - dim_unitary(n - 2, r - 1)
    return i, j


def decompose_step(n: int, r: int) -> Motive:
    """One isotropic splitting step of the essential motive."""
    if r == 0:
        return Motive(((essential(n, 0), 0),))
    if n < 2 or not 1 <= r <= n // 2:
        raise UsageError(f"decompose_step needs n >= 2 and 1 <= r <= n/2; got n={n}, r={r}")
    i, j = _step_shifts(n, r)
    summands = []
    for rr, shift in ((r - 1, 0), (r, i), (r - 1, j)):
        if 0 <= rr <= (n - 2) // 2:
            summands.append((essential(n - 2, rr), shift))
    return Motive(tuple(summands))


@lru_cache(maxsize=None)
def _essential_coeffs(n: int, r: int) -> tuple[int, ...]:
    if r < 0 or r > n // 2:
        return ()
    if r == 0:
        return (1,)
    i, j = _step_shifts(n, r)
    acc = PoincarePolynomial(_essential_coeffs(n - 2, r - 1))
    acc = acc + PoincarePolynomial(_essential_coeffs(n - 2, r)).shift(i)
    acc = acc + PoincarePolynomial(_essential_coeffs(n - 2, r - 1)).shift(j)
    return acc.coeffs


def essential_poincare(n: int, r: int) -> PoincarePolynomial:
    """Tate multiplicities of Essential(n, r), expanded through the split recursion."""
    if not 0 <= r <= n // 2:
        raise UsageError(f"r={r} out of range for n={n}")
    return PoincarePolynomial(_essential_coeffs(n, r))


def split_quadric_poincare(n: int) -> PoincarePolynomial:
    """Poincare polynomial of the split quadric of a 2n-dimensional form."""
    if n < 1:
        raise UsageError("n must be >= 1")
    coeffs = [1] * (2 * n - 1)
    coeffs[n - 1] += 1
    return PoincarePolynomial(coeffs)


# -- reported checks ----------------------------------------------------------


@dataclass(frozen=True)
class KvadrikaReport:
    n: int
    binding: bool
    delta: tuple[int, ...]
    passed: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "binding": self.binding,
            "delta": list(self.delta),
            "pass": self.passed,
        }


def kvadrika_check(n: int) -> KvadrikaReport:
    """Compare the split quadric with (1+q) times the line-grassmannian essential part.

    Even n: the difference must vanish (binding).  Odd n: the residual is
    recorded without judgement.
    """
    if n < 2:
        raise UsageError("n must be >= 2")
    lhs = split_quadric_poincare(n).to_list()
    rhs = poly_mul([1, 1], essential_poincare(n, 1).to_list())
    delta = poly_sub(lhs, rhs)
    while delta and delta[-1] == 0:
        delta.pop()
    binding = n % 2 == 0
    passed = (not delta) if binding else True
    return KvadrikaReport(n=n, binding=binding, delta=tuple(delta), passed=passed)


@dataclass(frozen=True)
class DvaMrReport:
    n: int
    r: int
    shift_odd: int
    shift_even: int | None
    positivity: bool
    dominance: dict = field(default_factory=dict)
    passed: bool = True

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "shift_odd": self.shift_odd,
            "shift_even": self.shift_even,
            "positivity": self.positivity,
            "dominance": dict(self.dominance),
            "pass": self.passed,
        }


def dvamr_check(n: int, r: int, with_dominance: bool = True) -> DvaMrReport:
    """Shift positivity and coefficientwise dominance of the doubled essential motive.

    The m = 2r comparison is skipped for n = 2, where only a single copy of
    the essential part embeds.  For m = n the ambient grassmannian has two
    components and the per-component polynomial is used.
    """
    if not 1 <= r <= n // 2:
        raise UsageError(f"r={r} out of range for n={n}")
    shift_odd = dim_orthogonal(n, 2 * r - 1) - dim_unitary(n, r)
    shift_even = dim_orthogonal(n, 2 * r) - dim_unitary(n, r) if n > 2 else None
    positivity = shift_odd > 0 and (shift_even is None or shift_even > 0)
    dominance: dict[str, bool] = {}
    if with_dominance:
        from .finitefields import orth_count_polynomial

        ess = essential_poincare(n, r)
        targets = [(2 * r - 1, shift_odd)]
        if n > 2:
            targets.append((2 * r, shift_even))
        for m, delta in targets:
            ambient = orth_count_polynomial(n, m)
            if m == n:
                from .polynomials import poly_divexact

                ambient = PoincarePolynomial(poly_divexact(ambient.to_list(), [2]))
            doubled = ess * PoincarePolynomial.exterior([delta])
            dominance[f"m={m}"] = ambient.dominates(doubled)
    passed = positivity and all(dominance.values())
    return DvaMrReport(
        n=n,
        r=r,
        shift_odd=shift_odd,
        shift_even=shift_even,
        positivity=positivity,
        dominance=dominance,
        passed=passed,
    )


def j_min(n: int) -> tuple[int, ...]:
    """Smallest J-invariant value for binary-divisible forms: even integers below n-1."""
    if n < 2 or n % 2:
        raise UsageError("n must be even and >= 2")
    return tuple(range(0, n - 1, 2))


def cd2_identity_check(n: int) -> bool:
    """Arithmetic consistency of the canonical 2-dimension bookkeeping for even n."""
    j = j_min(n)
    dim_y_component = dim_orthogonal(n, n)
    cd2 = dim_y_component - sum(j)
    return (
        n * n // 4 == n * (n - 1) // 2 - sum(j)
        and dim_y_component == n * (n - 1) // 2
        and cd2 == dim_unitary(n, n // 2)
    )


def witt_decompose_whole(n: int, r: int, witt_h: int) -> Motive:
    """Whole-motive decomposition after splitting ``witt_h`` hyperbolic planes.

    Ends in explicit Tate and Essential summands plus an unspecified SpecK
    residual bucket (individual SpecK shifts are never computed).
    """
    if witt_h < 0 or witt_h > n // 2:
        raise UsageError(f"witt_h={witt_h} out of range for n={n}")
    if r < 0 or r > n // 2:
        return Motive()
    if r == 0:
        return Motive(((TATE, 0),))
    if witt_h == 0:
        return Motive(((essential(n, r), 0),), speck_residual=True)
    i, j = _step_shifts(n, r)
    out = witt_decompose_whole(n - 2, r - 1, witt_h - 1)
    out = out + witt_decompose_whole(n - 2, r, witt_h - 1).shifted(i)
    out = out + witt_decompose_whole(n - 2, r - 1, witt_h - 1).shifted(j)
    return Motive(out.summands, speck_residual=True)

"""Binomial presentations and height bounds from their exponent lattice.

A pure-difference binomial x^u - x^w is stored as the single exponent vector
u - w.  The rational span of a presentation's exponent vectors has a dimension
that squeezes the ideal's height from both sides: height <= span_dim <=
bigheight, with equality on the left exactly when the ideal is unmixed.
Unmixedness is not decidable from the raw vectors, so it enters only as a
caller assertion that the report echoes back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import InternalInvariantViolation, LengthMismatch, ZeroGenerator
from .linalg import (
    IntegerMatrix,
    lattice_basis,
    rational_rank,
    smith_normal_form,
)

__all__ = [
    "ExponentVector",
    "BinomialPresentation",
    "HeightBoundReport",
    "from_monomial_pair",
    "split_signs",
    "height_bounds",
]

ExponentVector = tuple[int, ...]


def from_monomial_pair(u: Sequence[int], w: Sequence[int]) -> ExponentVector:
    """Exponent vector of the binomial x^u - x^w."""
    if len(u) != len(w):
        raise LengthMismatch(f"monomials of lengths {len(u)} and {len(w)}")
    if any(x < 0 for x in u) or any(x < 0 for x in w):
        raise ValueError("monomial exponents must be nonnegative")
    return tuple(int(a) - int(b) for a, b in zip(u, w))


def split_signs(v: Sequence[int]) -> tuple[ExponentVector, ExponentVector]:
    """Split v into (v_plus, v_minus), both nonnegative with disjoint support."""
    return (
        tuple(x if x > 0 else 0 for x in v),
        tuple(-x if x < 0 else 0 for x in v),
    )


@dataclass(frozen=True)
class BinomialPresentation:
    """Generators of a pure-difference binomial ideal in n variables."""

    n: int
    variable_names: tuple[str, ...]
    generators: tuple[ExponentVector, ...]

    def __post_init__(self):
        names = tuple(str(s) for s in self.variable_names)
        if len(names) != self.n:
            raise LengthMismatch(f"{len(names)} names for {self.n} variables")
        gens = []
        for k, g in enumerate(self.generators):
            t = tuple(int(x) for x in g)
            if len(t) != self.n:
                raise LengthMismatch(
                    f"generator {k} has length {len(t)}, expected {self.n}"
                )
            if not any(t):
                raise ZeroGenerator(f"generator {k} is the zero vector")
            gens.append(t)
        object.__setattr__(self, "variable_names", names)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def with_default_names(
        cls, generators: Sequence[Sequence[int]], prefix: str = "x"
    ) -> "BinomialPresentation":
        gens = [tuple(g) for g in generators]
        if not gens:
            raise ZeroGenerator("presentation needs at least one generator")
        n = len(gens[0])
        names = tuple(f"{prefix}{i + 1}" for i in range(n))
        return cls(n=n, variable_names=names, generators=tuple(gens))

    @cached_property
    def generator_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.generators, cols=self.n)


@dataclass(frozen=True)
class HeightBoundReport:
    """Dimension of the rational exponent span, with its lattice data.

    span_dim == len(basis) == len(elementary_divisors) always holds; the
    bounds statement tightens to an equality only under the caller's
    unmixedness assertion.
    """

    span_dim: int
    unmixed: bool
    basis: tuple[ExponentVector, ...]
    elementary_divisors: tuple[int, ...]

    def statement(self) -> str:
        if self.unmixed:
            return f"height = {self.span_dim} (unmixed asserted; equals bigheight)"
        return f"height <= {self.span_dim} <= bigheight"


def height_bounds(p: BinomialPresentation, unmixed: bool = False) -> HeightBoundReport:
    """Height bounds for the ideal presented by `p`.

    Computes the rational rank of the generator matrix three ways at once:
    Bareiss rank, Hermite lattice basis size, and Smith divisor count; they
    must agree.
    """
    m = p.generator_matrix
    rank = rational_rank(m)
    basis = lattice_basis(p.generators)
    divisors = smith_normal_form(m).divisors
    if len(basis) != rank or len(divisors) != rank:
        raise InternalInvariantViolation(
            f"span dimension disagreement: rank {rank}, basis {len(basis)}, "
            f"divisors {len(divisors)}"
        )
    return HeightBoundReport(
        span_dim=rank,
        unmixed=unmixed,
        basis=basis,
        elementary_divisors=divisors,
    )

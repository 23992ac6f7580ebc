"""Position operators: how ranked-with-ties data turns into numbers.

A position operator assigns every alternative of a weak order a numeric
position, starting at 1 for the best.  On linear orders there is only one
sensible assignment (1, 2, 3, ...); the operators differ in how they treat
ties:

* ``standard`` gives a tie the highest covered rank (the 1-1-3 pattern),
* ``modified`` gives it the lowest covered rank (2-2-3),
* ``fractional`` averages the covered ranks (1.5-1.5-3),
* ``dense`` numbers the tiers themselves (1-1-2), leaving no gaps.

All positions are exact :class:`fractions.Fraction` values so that
equalities and orderings between positions are decidable, never an
artifact of floating-point rounding.

The module also ships a family of deliberately flawed operators
(``quotient``, ``affine``, ``plus-n``, ``list-index``,
``dense-over-tiercount``).  Each one narrowly misses a specific
invariance property while keeping the others, which makes them the
standard foils for the axiom checks in :mod:`rankops.axioms`.  Every
operator, good or flawed, is registered by name so the checking engine
can iterate over the full set uniformly.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Union

from .orders import AltId, WeakOrder, label_key

Position = Fraction
Rational = Union[int, Fraction, str]

__all__ = [
    "Position",
    "PositionAssignment",
    "PositionOperator",
    "Domain",
    "NotLinear",
    "NegativeCoefficient",
    "UnknownOperator",
    "sequential",
    "dense",
    "dense_via_chain",
    "standard",
    "modified",
    "fractional",
    "quotient",
    "affine",
    "plus_n",
    "list_index",
    "dense_over_tier_count",
    "make_affine_operator",
    "get_operator",
    "REGISTRY",
    "OPERATOR_NAMES",
]


class NotLinear(ValueError):
    """Raised when an operator restricted to linear orders sees a tie."""


class NegativeCoefficient(ValueError):
    """Raised for affine coefficients below zero."""


class UnknownOperator(ValueError):
    """Raised by :func:`get_operator` for names outside the registry."""


class PositionAssignment(Mapping):
    """Immutable map from every alternative of an order to its position."""

    __slots__ = ("_positions",)

    def __init__(self, positions: Mapping[AltId, Rational]):
        self._positions = {alt: Fraction(value) for alt, value in positions.items()}

    def __getitem__(self, alt: AltId) -> Fraction:
        return self._positions[alt]

    def __iter__(self) -> Iterator[AltId]:
        return iter(self._positions)

    def __len__(self) -> int:
        return len(self._positions)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PositionAssignment):
            return self._positions == other._positions
        if isinstance(other, Mapping):
            return self._positions == dict(other)
        return NotImplemented

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{alt!r}: {value}" for alt, value in sorted(self._positions.items(), key=lambda kv: label_key(kv[0]))
        )
        return f"PositionAssignment({{{parts}}})"


class Domain(Enum):
    """Which orders an operator accepts."""

    ALL_WEAK_ORDERS = "all-weak-orders"
    LINEAR_ONLY = "linear-only"


@dataclass(frozen=True)
class PositionOperator:
    """A named, pure map from weak orders to position assignments."""

    name: str
    domain: Domain
    fn: Callable[[WeakOrder], PositionAssignment] = field(compare=False)
    params: tuple[tuple[str, Fraction], ...] = ()

    def in_domain(self, order: WeakOrder) -> bool:
        return self.domain is Domain.ALL_WEAK_ORDERS or order.is_linear

    def __call__(self, order: WeakOrder) -> PositionAssignment:
        if not self.in_domain(order):
            raise NotLinear(f"operator {self.name!r} is defined on linear orders only")
        return self.fn(order)


# ----- the principal operators --------------------------------------------


def sequential(order: WeakOrder) -> PositionAssignment:
    """The unique 1..n assignment on a linear order, best first."""
    if not order.is_linear:
        raise NotLinear("sequential positions require a linear order")
    n = order.n
    return PositionAssignment(
        {alt: Fraction(n - order.dominated_count(alt)) for alt in order.ground}
    )


def dense(order: WeakOrder) -> PositionAssignment:
    """Dense rank: one more than the number of tiers strictly above.

    Whole tiers are numbered 1, 2, 3, ... so the assigned values are
    exactly 1 through the tier count, with no gaps.
    """
    return PositionAssignment(
        {alt: Fraction(depth) for depth, tier in enumerate(order.tiers, start=1) for alt in tier}
    )


def dense_via_chain(order: WeakOrder) -> PositionAssignment:
    """Dense rank computed along a maximal strict chain.

    The chain's elements receive 1, 2, ... down the chain, and each value
    is propagated to all alternatives with the same dominated count.  This
    is an independent route to the same assignment as :func:`dense` and is
    kept as a cross-check.
    """
    by_count = {
        order.dominated_count(rep): Fraction(depth)
        for depth, rep in enumerate(order.maximal_chain(), start=1)
    }
    return PositionAssignment(
        {alt: by_count[order.dominated_count(alt)] for alt in order.ground}
    )


def standard(order: WeakOrder) -> PositionAssignment:
    """Competition rank: ties get the highest rank they cover."""
    positions: dict[AltId, Fraction] = {}
    above = 0
    for tier in order.tiers:
        for alt in tier:
            positions[alt] = Fraction(above + 1)
        above += len(tier)
    return PositionAssignment(positions)


def modified(order: WeakOrder) -> PositionAssignment:
    """Ties get the lowest rank they cover (count of weakly-better ones)."""
    positions: dict[AltId, Fraction] = {}
    covered = 0
    for tier in order.tiers:
        covered += len(tier)
        for alt in tier:
            positions[alt] = Fraction(covered)
    return PositionAssignment(positions)


def fractional(order: WeakOrder) -> PositionAssignment:
    """Mid-rank: ties receive the mean of the integer ranks they cover."""
    positions: dict[AltId, Fraction] = {}
    above = 0
    for tier in order.tiers:
        covered = range(above + 1, above + len(tier) + 1)
        value = Fraction(sum(covered), len(tier))
        for alt in tier:
            positions[alt] = value
        above += len(tier)
    return PositionAssignment(positions)


# ----- foil operators -------------------------------------------------------
#
# Each of these is useful only because of the precise property it breaks;
# see the expected verdict matrix in rankops.axioms.


def quotient(order: WeakOrder) -> PositionAssignment:
    """Dense rank divided by the size of the alternative's own tier.

    Coincides with the dense rank on linear orders, but cloning into a
    tier grows the denominator, so positions are not stable under
    duplication.
    """
    base = dense(order)
    return PositionAssignment(
        {alt: base[alt] / len(order.tier_of(alt)) for alt in order.ground}
    )


def affine(order: WeakOrder, a: Rational, b: Rational) -> PositionAssignment:
    """An affine rescaling a*dense + b with non-negative coefficients.

    Stable under cloning for any coefficients, but agrees with the 1..n
    sequence on linear orders only when a = 1 and b = 0.
    """
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise NegativeCoefficient(f"coefficients must be non-negative, got a={a}, b={b}")
    base = dense(order)
    return PositionAssignment({alt: a * base[alt] + b for alt in order.ground})


def plus_n(order: WeakOrder) -> PositionAssignment:
    """Dense rank shifted by the number of alternatives off linear orders.

    The shift switches off exactly on linear orders, so deleting a bottom
    tier can flip an order into the unshifted regime and change every
    surviving position.
    """
    base = dense(order)
    if order.is_linear:
        return base
    shift = Fraction(order.n)
    return PositionAssignment({alt: base[alt] + shift for alt in order.ground})


_TRAILING_DIGITS = re.compile(r"([0-9]+)$")


def _intrinsic_label_value(label: AltId) -> Fraction:
    """A position read off the label itself, ignoring the order.

    Integer labels map to themselves and labels with a digit suffix map to
    that number, so a ground set x1, x2, x3 yields 1, 2, 3.  Any other
    string maps to a deterministic fraction in (0, 1) that preserves the
    lexicographic order of the labels.
    """
    if isinstance(label, int):
        return Fraction(label)
    match = _TRAILING_DIGITS.search(label)
    if match:
        return Fraction(int(match.group(1)))
    value = Fraction(0)
    scale = 1
    for byte in label.encode("utf-8"):
        scale *= 257
        value += Fraction(byte + 1, scale)
    return value


def list_index(order: WeakOrder) -> PositionAssignment:
    """Positions taken from the labels alone, e.g. x3 is always third.

    Because the value is intrinsic to the label, restricting or reshaping
    the order never moves anybody, but the assignment is blind to the
    preference structure (tied alternatives get distinct positions, and a
    label numbered against the ranking breaks the 1..n sequence).
    """
    return PositionAssignment(
        {alt: _intrinsic_label_value(alt) for alt in order.ground}
    )


def dense_over_tier_count(order: WeakOrder) -> PositionAssignment:
    """Dense rank divided by the total number of tiers.

    A contraction of the dense rank: cloning keeps it unchanged, but
    removing the bottom tier shrinks the denominator and rescales every
    surviving position.
    """
    base = dense(order)
    tiers = order.num_tiers
    return PositionAssignment({alt: base[alt] / tiers for alt in order.ground})


# ----- registry -------------------------------------------------------------


def make_affine_operator(
    a: Rational, b: Rational, name: str | None = None
) -> PositionOperator:
    """Build the affine operator for given coefficients.

    The default name serialises the coefficients as exact fractions, e.g.
    ``affine:a=2/1,b=1/1``.
    """
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise NegativeCoefficient(f"coefficients must be non-negative, got a={a}, b={b}")
    if name is None:
        name = f"affine:a={a.numerator}/{a.denominator},b={b.numerator}/{b.denominator}"
    return PositionOperator(
        name=name,
        domain=Domain.ALL_WEAK_ORDERS,
        fn=lambda order: affine(order, a, b),
        params=(("a", a), ("b", b)),
    )


def _register() -> dict[str, PositionOperator]:
    def op(name: str, fn: Callable[[WeakOrder], PositionAssignment], domain: Domain = Domain.ALL_WEAK_ORDERS) -> PositionOperator:
        return PositionOperator(name=name, domain=domain, fn=fn)

    entries = [
        op("dense", dense),
        op("dense-chain", dense_via_chain),
        op("standard", standard),
        op("modified", modified),
        op("fractional", fractional),
        op("sequential", sequential, Domain.LINEAR_ONLY),
        op("quotient", quotient),
        # Canonical non-identity instance; other coefficients via get_operator.
        make_affine_operator(2, 1, name="affine"),
        op("plus-n", plus_n),
        op("list-index", list_index),
        op("dense-over-tiercount", dense_over_tier_count),
    ]
    return {entry.name: entry for entry in entries}


REGISTRY: dict[str, PositionOperator] = _register()
OPERATOR_NAMES: tuple[str, ...] = tuple(REGISTRY)


def get_operator(name: str) -> PositionOperator:
    """Look up a registered operator, or build a parameterised affine one.

    Accepts the stable registry names plus the serialised affine form
    ``affine:a=<p>/<q>,b=<p>/<q>`` (plain integers are accepted too).
    """
    if name in REGISTRY:
        return REGISTRY[name]
    if name.startswith("affine:"):
        params: dict[str, Fraction] = {}
        for part in name[len("affine:") :].split(","):
            key, _, raw = part.partition("=")
            key = key.strip()
            if key not in ("a", "b") or key in params:
                raise UnknownOperator(f"bad affine parameter list in {name!r}")
            try:
                params[key] = Fraction(raw.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise UnknownOperator(f"bad affine coefficient in {name!r}: {exc}") from None
        if set(params) != {"a", "b"}:
            raise UnknownOperator(f"affine form needs both a= and b=: {name!r}")
        return make_affine_operator(params["a"], params["b"])
    raise UnknownOperator(f"no operator named {name!r}")

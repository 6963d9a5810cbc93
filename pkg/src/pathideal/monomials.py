"""Exact arithmetic for monomials and monomial ideals in a fixed ambient ring.

Monomials are dense exponent vectors over variables x1..xn.  Ideals store
their unique minimal generating set, sorted lexicographically by exponent
vector, so equal ideals compare equal structurally.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    AmbientMismatchError,
    ExponentOverflowError,
    SizeCapExceededError,
)

__all__ = [
    "EXPONENT_CAP",
    "POWER_PRODUCT_CAP",
    "Monomial",
    "MonomialIdeal",
    "variable",
    "unit",
    "parse_monomial",
    "format_monomial",
    "mono_divides",
    "mono_gcd",
    "mono_lcm",
    "mono_mul",
    "mono_pow",
    "mono_quotient",
    "minimalize",
    "colon_by_monomial",
    "ideal_sum",
    "ideal_power",
    "generated_by_variables",
]

# Hard cap on any single exponent or total degree; exceeding it is an error,
# never a silent wrap.
EXPONENT_CAP = 1 << 16

# Default cap on the number of s-fold generator products enumerated by
# ideal_power before minimalization.
POWER_PRODUCT_CAP = 200_000


@dataclass(frozen=True)
class Monomial:
    """A monomial as a dense exponent vector; the zero vector is the unit 1."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents!r}")
        if any(e > EXPONENT_CAP for e in self.exponents):
            raise ExponentOverflowError(
                f"exponent above cap {EXPONENT_CAP} in {self.exponents!r}"
            )

    @property
    def ambient(self) -> int:
        """Number of variables of the ambient ring."""
        return len(self.exponents)

    @property
    def degree(self) -> int:
        """Total degree."""
        return sum(self.exponents)

    def degree_of(self, var: int) -> int:
        """Exponent of x_var (1-based index)."""
        if not 1 <= var <= self.ambient:
            raise IndexError(f"variable x{var} outside ambient {self.ambient}")
        return self.exponents[var - 1]

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_variable(self) -> bool:
        return self.degree == 1

    def support(self) -> frozenset[int]:
        """1-based indices of the variables dividing this monomial."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def __str__(self) -> str:
        return format_monomial(self)


def variable(ambient: int, index: int) -> Monomial:
    """The monomial x_index (1-based) in an ambient ring of the given size."""
    if not 1 <= index <= ambient:
        raise IndexError(f"variable x{index} outside ambient {ambient}")
    return Monomial(tuple(1 if i == index - 1 else 0 for i in range(ambient)))


def unit(ambient: int) -> Monomial:
    """The monomial 1."""
    return Monomial((0,) * ambient)


_TERM_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, ambient: int) -> Monomial:
    """Parse the text form, e.g. ``x1^2*x3`` or ``1``."""
    text = text.strip()
    if text == "1":
        return unit(ambient)
    exps = [0] * ambient
    for term in text.split("*"):
        m = _TERM_RE.match(term.strip())
        if m is None:
            raise ValueError(f"malformed monomial term {term!r} in {text!r}")
        idx, exp = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= idx <= ambient:
            raise ValueError(f"variable x{idx} outside ambient {ambient}")
        exps[idx - 1] += exp
    return Monomial(tuple(exps))


def format_monomial(m: Monomial) -> str:
    """Render the text form: ``*``-joined powers, ``1`` for the unit."""
    if m.is_unit():
        return "1"
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def _same_ambient(a: Monomial, b: Monomial) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatchError(
            f"ambient mismatch: {a.ambient} vs {b.ambient} variables"
        )


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b (componentwise <=)."""
    _same_ambient(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    _same_ambient(a, b)
    return Monomial(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _same_ambient(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _same_ambient(a, b)
    exps = tuple(x + y for x, y in zip(a.exponents, b.exponents))
    if sum(exps) > EXPONENT_CAP:
        raise ExponentOverflowError(
            f"degree {sum(exps)} above cap {EXPONENT_CAP}"
        )
    return Monomial(exps)


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("negative power")
    if a.degree * k > EXPONENT_CAP:
        raise ExponentOverflowError(
            f"degree {a.degree * k} above cap {EXPONENT_CAP}"
        )
    return Monomial(tuple(e * k for e in a.exponents))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b), i.e. componentwise max(a_k - b_k, 0)."""
    _same_ambient(a, b)
    return Monomial(tuple(max(x - y, 0) for x, y in zip(a.exponents, b.exponents)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held as its minimal generating set.

    Generators are pairwise incomparable under divisibility and sorted
    lexicographically by exponent vector.  The zero ideal has no generators.
    Build instances through minimalize() unless the input is already in this
    canonical form.
    """

    ambient: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.ambient < 0:
            raise ValueError("negative ambient")
        seen: set[tuple[int, ...]] = set()
        for g in self.generators:
            if g.ambient != self.ambient:
                raise AmbientMismatchError(
                    f"generator ambient {g.ambient} != ideal ambient {self.ambient}"
                )
            if g.exponents in seen:
                raise ValueError(f"duplicate generator {g}")
            seen.add(g.exponents)
        exps = [g.exponents for g in self.generators]
        if exps != sorted(exps):
            raise ValueError("generators not sorted canonically")
        # Pairwise incomparability; quadratic, fine at desk scale.
        for a, b in itertools.combinations(self.generators, 2):
            if mono_divides(a, b) or mono_divides(b, a):
                raise ValueError(f"non-minimal generators {a}, {b}")

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        if m.ambient != self.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {m.ambient} vs {self.ambient}"
            )
        return any(mono_divides(g, m) for g in self.generators)

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def support(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for g in self.generators:
            out |= g.support()
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def minimalize(gens: Iterable[Monomial], ambient: int | None = None) -> MonomialIdeal:
    """Drop duplicates and any generator divisible by another one.

    The ambient is inferred from the generators; pass it explicitly to build
    the zero ideal from an empty iterable.
    """
    gens = list(gens)
    if not gens:
        if ambient is None:
            raise ValueError("ambient required for an empty generating set")
        return MonomialIdeal(ambient, ())
    amb = gens[0].ambient
    if ambient is not None and ambient != amb:
        raise AmbientMismatchError(f"ambient mismatch: {ambient} vs {amb}")
    for g in gens[1:]:
        _same_ambient(gens[0], g)
    # Sort by degree then lex; a proper divisor always precedes its multiples,
    # and equal-degree distinct monomials never divide each other.
    ordered = sorted(set(g.exponents for g in gens), key=lambda e: (sum(e), e))
    kept: list[Monomial] = []
    for exps in ordered:
        m = Monomial(exps)
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=lambda g: g.exponents)
    return MonomialIdeal(amb, tuple(kept))


def colon_by_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal I : m, minimalized."""
    if m.ambient != ideal.ambient:
        raise AmbientMismatchError(
            f"ambient mismatch: {m.ambient} vs {ideal.ambient}"
        )
    return minimalize(
        (mono_quotient(g, m) for g in ideal.generators), ambient=ideal.ambient
    )


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The sum I + J, minimalized."""
    if a.ambient != b.ambient:
        raise AmbientMismatchError(
            f"ambient mismatch: {a.ambient} vs {b.ambient}"
        )
    return minimalize(a.generators + b.generators, ambient=a.ambient)


def ideal_power(
    ideal: MonomialIdeal, s: int, max_products: int = POWER_PRODUCT_CAP
) -> MonomialIdeal:
    """The power I^s via all s-fold generator products, minimalized.

    Aborts with SizeCapExceededError when the product count would exceed
    max_products; never truncates silently.
    """
    if s < 1:
        raise ValueError(f"power must be >= 1, got {s}")
    if ideal.is_zero():
        return ideal
    q = len(ideal.generators)
    count = math.comb(q + s - 1, s)
    if count > max_products:
        raise SizeCapExceededError(
            f"I^{s} needs {count} products of {q} generators, cap {max_products}",
            count=count,
        )
    products = []
    for combo in itertools.combinations_with_replacement(ideal.generators, s):
        acc = combo[0]
        for g in combo[1:]:
            acc = mono_mul(acc, g)
        products.append(acc)
    return minimalize(products, ambient=ideal.ambient)


def generated_by_variables(ideal: MonomialIdeal) -> bool:
    """True iff every minimal generator has degree 1 (vacuously for 0)."""
    return all(g.degree == 1 for g in ideal.generators)

"""Linear-quotient certificates and quasi-linearity checks for power ideals.

Generators of a power are ordered lexicographically by their composition,
largest first.  Coloning each generator against its predecessors then yields
ideals generated by variables exactly in the overlap regime t <= n <= 2t,
where the variable set also follows a closed form read off the composition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import ColonFormMismatchError
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    minimalize,
    mono_pow,
    mono_quotient,
)
from .path_ideals import (
    Composition,
    PathIdealSpec,
    composition_to_monomial,
    compositions_desc,
    line_graph_generators,
    power_generators,
)

__all__ = [
    "QuotientCertificate",
    "QuotientFailure",
    "QuasiLinearResult",
    "QuasiLinearBreak",
    "sort_for_linear_quotients",
    "closed_form_colon",
    "linear_quotients_check",
    "quasi_linear_check",
    "quasi_linear_witness",
]


@dataclass(frozen=True)
class QuotientCertificate:
    """Successful linear-quotient run over an ordered generating set.

    colon_variables[m] holds the 1-based variable indices generating the
    colon of order[m + 1] against its predecessors; variable_counts mirrors
    the set sizes.
    """

    order: tuple[Composition, ...]
    colon_variables: tuple[frozenset[int], ...]
    variable_counts: tuple[int, ...]

    def census(self) -> dict[int, int]:
        """How many colon steps produced exactly k variables, per k."""
        return dict(sorted(Counter(self.variable_counts).items()))


@dataclass(frozen=True)
class QuotientFailure:
    """First position whose prefix colon is not generated by variables."""

    position: int  # 1-based index into the processing order
    composition: Composition
    offender: Monomial


@dataclass(frozen=True)
class QuasiLinearResult:
    """Outcome of checking (G(I) \\ {u}) : u for every generator u."""

    is_quasi_linear: bool
    witness: tuple[Monomial, Monomial] | None  # (generator, offending colon gen)


@dataclass(frozen=True)
class QuasiLinearBreak:
    """Evidence that the top power generator breaks quasi-linearity.

    For alpha = u_{n-t+1}^s and J generated by the remaining power
    generators, the colon J : alpha is recorded together with the two facts
    that force a non-variable generator: x_{n-t} is the unique degree-one
    generator, and it does not divide u_1^s.
    """

    excluded: Monomial
    colon_generators: tuple[Monomial, ...]
    variable: int
    unique_degree_one: bool
    variable_misses_first_power: bool

    @property
    def valid(self) -> bool:
        return self.unique_degree_one and self.variable_misses_first_power


def sort_for_linear_quotients(comps: list[Composition]) -> list[Composition]:
    """Sort compositions of a common total lexicographically, largest first."""
    if comps:
        totals = {c.total for c in comps}
        if len(totals) > 1:
            raise ValueError(f"mixed composition totals {sorted(totals)}")
        lengths = {len(c.parts) for c in comps}
        if len(lengths) > 1:
            raise ValueError(f"mixed part counts {sorted(lengths)}")
    return sorted(comps, key=lambda c: c.parts, reverse=True)


def closed_form_colon(comp: Composition) -> frozenset[int]:
    """Predicted colon variables {lambda - 1 : part lambda > 0, lambda >= 2}.

    Positions are 1-based; the first part contributes nothing because there
    is no variable x_0.
    """
    return frozenset(
        idx for idx, part in enumerate(comp.parts) if part and idx >= 1
    )


def linear_quotients_check(
    spec: PathIdealSpec,
    s: int,
    order: list[Composition] | None = None,
) -> QuotientCertificate | QuotientFailure:
    """Run the prefix-colon test over the power generators in order.

    The default order is the lexicographically decreasing one.  Each step
    colons one generator against all earlier ones; success means every such
    colon is generated by variables.  In the overlap regime t <= n <= 2t
    the brute-force variable set must also match closed_form_colon, and a
    mismatch raises ColonFormMismatchError.
    """
    pairs = power_generators(spec, s)
    by_parts = {c.parts: m for c, m in pairs}
    if order is None:
        ordered = [c for c, _ in pairs]
    else:
        ordered = list(order)
        if sorted(c.parts for c in ordered) != sorted(by_parts):
            raise ValueError("order is not a permutation of the power generators")
    check_closed_form = spec.t <= spec.n <= 2 * spec.t
    monos = [by_parts[c.parts] for c in ordered]
    colon_vars: list[frozenset[int]] = []
    counts: list[int] = []
    for m in range(1, len(ordered)):
        quotients = (mono_quotient(monos[i], monos[m]) for i in range(m))
        colon = minimalize(quotients, ambient=spec.n)
        for g in colon.generators:
            if g.degree != 1:
                return QuotientFailure(m + 1, ordered[m], g)
        found = frozenset(next(iter(g.support())) for g in colon.generators)
        if check_closed_form:
            predicted = closed_form_colon(ordered[m])
            if found != predicted:
                raise ColonFormMismatchError(
                    f"colon at position {m + 1} gave {sorted(found)}, "
                    f"closed form predicts {sorted(predicted)}"
                )
        colon_vars.append(found)
        counts.append(len(found))
    return QuotientCertificate(tuple(ordered), tuple(colon_vars), tuple(counts))


def quasi_linear_check(ideal: MonomialIdeal) -> QuasiLinearResult:
    """Check whether (G(I) \\ {u}) : u is variable-generated for every u.

    The ideal must be generated in a single degree; fewer than two
    generators pass vacuously.  Generators are scanned in stored order and
    the first failure is returned as a witness.
    """
    degs = set(ideal.generator_degrees())
    if len(degs) > 1:
        raise ValueError(f"mixed generator degrees {sorted(degs)}")
    if len(ideal.generators) < 2:
        return QuasiLinearResult(True, None)
    for u in ideal.generators:
        rest = minimalize(
            (g for g in ideal.generators if g != u), ambient=ideal.ambient
        )
        colon = colon_by_monomial(rest, u)
        for g in colon.generators:
            if g.degree != 1:
                return QuasiLinearResult(False, (u, g))
    return QuasiLinearResult(True, None)


def quasi_linear_witness(spec: PathIdealSpec, s: int) -> QuasiLinearBreak:
    """Build the explicit quasi-linearity breaker for n >= 2t + 1.

    Excluding alpha = u_{n-t+1}^s, the colon of the remaining power
    generators by alpha has x_{n-t} as its only degree-one generator (it
    arises from u_{n-t} * u_{n-t+1}^{s-1}), yet x_{n-t} does not divide
    u_1^s, so the colon cannot be generated by variables.
    """
    if spec.n < 2 * spec.t + 1:
        raise ValueError(f"need n >= 2t+1, got n={spec.n}, t={spec.t}")
    if s < 1:
        raise ValueError(f"power must be >= 1, got {s}")
    gens = line_graph_generators(spec)
    alpha = mono_pow(gens[-1], s)
    rest = [
        m
        for c, m in power_generators(spec, s)
        if m.exponents != alpha.exponents
    ]
    colon = colon_by_monomial(minimalize(rest, ambient=spec.n), alpha)
    degree_one = [g for g in colon.generators if g.degree == 1]
    var = spec.n - spec.t
    unique = len(degree_one) == 1 and degree_one[0].support() == frozenset({var})
    first_power = mono_pow(gens[0], s)
    misses = first_power.degree_of(var) == 0
    return QuasiLinearBreak(
        excluded=alpha,
        colon_generators=colon.generators,
        variable=var,
        unique_degree_one=unique,
        variable_misses_first_power=misses,
    )

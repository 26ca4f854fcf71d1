"""Radicals: prime-intersection route, element-cube route, and their comparison.

The two routes are computed independently and never merged: the element
characterization has a known proof gap, so radical_report records agreement
or the exact symmetric difference instead of asserting equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GammaStructure, InputError, full_mask, mask_elements
from .ideals import enumerate_ideals, is_ideal, is_maximal, is_prime


def radical_by_primes(s: GammaStructure, mask: int) -> int:
    """Intersection of all prime ideals containing the subset; carrier if none."""
    if mask >> s.order:
        raise InputError(f"subset {bin(mask)} has bits beyond order {s.order}")
    top = full_mask(s.order)
    out = top
    hit = False
    for ideal in enumerate_ideals(s):
        if ideal == top or ideal & mask != mask:
            continue
        if is_prime(s, ideal).ok:
            out &= ideal
            hit = True
    return out if hit else top


def radical_by_elements(s: GammaStructure, mask: int, iterate: str = "once") -> int:
    """Elements whose ternary cube lands in the subset.

    iterate="once" applies exactly one self-cubing, as the characterization
    is printed. iterate="fixpoint" marks every element some chain of repeated
    cubings (any parameter pair at each step) sends into the subset.
    """
    if mask >> s.order:
        raise InputError(f"subset {bin(mask)} has bits beyond order {s.order}")
    if iterate not in ("once", "fixpoint"):
        raise InputError(f"iterate must be 'once' or 'fixpoint', got {iterate!r}")
    n, m = s.order, s.gamma_size
    cubes = {a: {s.ternary[al][be][a][a][a] for al in range(m) for be in range(m)}
             for a in range(n)}
    if iterate == "once":
        return sum(1 << a for a in range(n) if cubes[a] & set(mask_elements(mask)))
    # fixpoint: reachability along a -> cube(a) edges into the subset
    target = set(mask_elements(mask))
    out = 0
    for a in range(n):
        seen = {a}
        frontier = [a]
        found = a in target
        while frontier and not found:
            x = frontier.pop()
            for y in cubes[x]:
                if y in target:
                    found = True
                    break
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if found:
            out |= 1 << a
    return out


@dataclass(frozen=True)
class RadicalReport:
    """Both radicals of one ideal, with the exact disagreement if any."""

    ideal: int
    by_primes: int
    by_elements: int
    # the element route can land outside the ideal lattice; flagged, not fixed
    by_elements_is_ideal: bool = True

    @property
    def agree(self) -> bool:
        return self.by_primes == self.by_elements

    @property
    def only_by_primes(self) -> tuple[int, ...]:
        return mask_elements(self.by_primes & ~self.by_elements)

    @property
    def only_by_elements(self) -> tuple[int, ...]:
        return mask_elements(self.by_elements & ~self.by_primes)

    def to_dict(self) -> dict:
        return {
            "ideal": list(mask_elements(self.ideal)),
            "by_primes": list(mask_elements(self.by_primes)),
            "by_elements": list(mask_elements(self.by_elements)),
            "agree": self.agree,
            "only_by_primes": list(self.only_by_primes),
            "only_by_elements": list(self.only_by_elements),
            "by_elements_is_ideal": self.by_elements_is_ideal,
        }


def radical_report(s: GammaStructure, mask: int) -> RadicalReport:
    by_elements = radical_by_elements(s, mask)
    return RadicalReport(ideal=mask,
                         by_primes=radical_by_primes(s, mask),
                         by_elements=by_elements,
                         by_elements_is_ideal=is_ideal(s, by_elements).ok)


def jacobson_radical(s: GammaStructure) -> int:
    """Intersection of all maximal ideals; carrier if there are none."""
    top = full_mask(s.order)
    out = top
    hit = False
    for ideal in enumerate_ideals(s):
        if ideal == top:
            continue
        if is_maximal(s, ideal).ok:
            out &= ideal
            hit = True
    return out if hit else top


def is_semisimple(s: GammaStructure) -> bool:
    return jacobson_radical(s) == 1

"""Ideals of a finite structure: recognition, generation, classification.

Subsets of the carrier travel as int bitmasks (bit i = element i). An ideal
must contain 0, be closed under addition, and absorb ternary products when
any single argument lies in it. Classification predicates return Verdicts
whose witness is the first counterexample in the documented scan order, so
outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (GammaStructure, InputError, Verdict, full_mask,
                   mask_elements, subset_sort_key)


def is_ideal(s: GammaStructure, mask: int) -> Verdict:
    """Membership, additive closure, and one-argument absorption checks.

    Witnesses: ("missing-zero",), ("additive-closure", a, b),
    ("absorption", a, b, c, al, be) with at least one argument in the subset.
    """
    if mask == 0:
        raise InputError("subset is empty")
    if mask >> s.order:
        raise InputError(f"subset {bin(mask)} has bits beyond order {s.order}")
    if not mask & 1:
        return Verdict(False, ("missing-zero",))
    members = mask_elements(mask)
    add = s.addition
    for a in members:
        for b in members:
            if not mask >> add[a][b] & 1:
                return Verdict(False, ("additive-closure", a, b))
    n, m = s.order, s.gamma_size
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not (mask >> a & 1 or mask >> b & 1 or mask >> c & 1):
                    continue
                for al in range(m):
                    for be in range(m):
                        if not mask >> s.ternary[al][be][a][b][c] & 1:
                            return Verdict(False, ("absorption", a, b, c, al, be))
    return Verdict(True)


def generated_ideal(s: GammaStructure, seed: int = 0) -> int:
    """Least ideal containing the seed subset: close over 0, sums, absorption."""
    if seed >> s.order:
        raise InputError(f"seed {bin(seed)} has bits beyond order {s.order}")
    n, m = s.order, s.gamma_size
    cur = seed | 1
    while True:
        nxt = cur
        members = mask_elements(cur)
        for a in members:
            row = s.addition[a]
            for b in members:
                nxt |= 1 << row[b]
        for al in range(m):
            for be in range(m):
                cube = s.ternary[al][be]
                for x in members:
                    for a in range(n):
                        for b in range(n):
                            nxt |= 1 << cube[x][a][b]
                            nxt |= 1 << cube[a][x][b]
                            nxt |= 1 << cube[a][b][x]
        if nxt == cur:
            return cur
        cur = nxt


@lru_cache(maxsize=None)
def enumerate_ideals(s: GammaStructure) -> tuple[int, ...]:
    """Every ideal, ascending by size then bitmask. 2^n subset scan."""
    found = []
    for mask in range(1, 1 << s.order):
        if mask & 1 and is_ideal(s, mask).ok:
            found.append(mask)
    return tuple(sorted(found, key=subset_sort_key))


def _require_proper(s: GammaStructure, mask: int, what: str) -> None:
    if mask == full_mask(s.order):
        raise InputError(f"{what} is only defined for proper subsets")
    if mask >> s.order:
        raise InputError(f"subset {bin(mask)} has bits beyond order {s.order}")


def is_prime(s: GammaStructure, mask: int) -> Verdict:
    """Products landing in the subset must have an argument in it.

    Witness (a, b, c, al, be): the product is in the subset, no argument is.
    Scan order: elements (a, b, c) lexicographic, then parameters (al, be).
    """
    _require_proper(s, mask, "primeness")
    n, m = s.order, s.gamma_size
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mask >> a & 1 or mask >> b & 1 or mask >> c & 1:
                    continue
                for al in range(m):
                    for be in range(m):
                        if mask >> s.ternary[al][be][a][b][c] & 1:
                            return Verdict(False, (a, b, c, al, be))
    return Verdict(True)


def is_semiprime(s: GammaStructure, mask: int) -> Verdict:
    """Cube in the subset forces the element in. Witness (a, al, be)."""
    _require_proper(s, mask, "semiprimeness")
    for a in range(s.order):
        if mask >> a & 1:
            continue
        for al in range(s.gamma_size):
            for be in range(s.gamma_size):
                if mask >> s.ternary[al][be][a][a][a] & 1:
                    return Verdict(False, (a, al, be))
    return Verdict(True)


def is_maximal(s: GammaStructure, mask: int) -> Verdict:
    """No ideal strictly between the subset and the carrier. Witness (between_mask,)."""
    _require_proper(s, mask, "maximality")
    top = full_mask(s.order)
    for other in enumerate_ideals(s):
        if other != mask and other != top and mask & other == mask:
            return Verdict(False, (other,))
    return Verdict(True)


def is_primary(s: GammaStructure, mask: int, shared_params: bool = True) -> Verdict:
    """Product in the subset with first argument outside forces a cube in.

    With shared_params the cubes use the same (al, be) as the product, exactly
    as the condition is printed; shared_params=False quantifies each cube's
    parameters independently. Witness (a, b, c, al, be).
    """
    _require_proper(s, mask, "primariness")
    n, m = s.order, s.gamma_size

    def cube_in(x: int, al: int, be: int) -> bool:
        if shared_params:
            return bool(mask >> s.ternary[al][be][x][x][x] & 1)
        return any(mask >> s.ternary[ga][de][x][x][x] & 1
                   for ga in range(m) for de in range(m))

    for a in range(n):
        if mask >> a & 1:
            continue
        for b in range(n):
            for c in range(n):
                for al in range(m):
                    for be in range(m):
                        if not mask >> s.ternary[al][be][a][b][c] & 1:
                            continue
                        if not (cube_in(b, al, be) or cube_in(c, al, be)):
                            return Verdict(False, (a, b, c, al, be))
    return Verdict(True)


@dataclass(frozen=True)
class IdealInfo:
    """Classification of one ideal. Verdicts are None for the whole carrier."""

    mask: int
    proper: bool
    prime: Optional[Verdict]
    semiprime: Optional[Verdict]
    maximal: Optional[Verdict]
    primary: Optional[Verdict]

    def tags(self) -> tuple[str, ...]:
        out = []
        if self.prime and self.prime.ok:
            out.append("P")
        if self.semiprime and self.semiprime.ok:
            out.append("SP")
        if self.maximal and self.maximal.ok:
            out.append("MAX")
        if self.primary and self.primary.ok:
            out.append("PRI")
        return tuple(out)


def classify_ideal(s: GammaStructure, mask: int) -> IdealInfo:
    proper = mask != full_mask(s.order)
    if not proper:
        return IdealInfo(mask, False, None, None, None, None)
    return IdealInfo(mask, True,
                     prime=is_prime(s, mask),
                     semiprime=is_semiprime(s, mask),
                     maximal=is_maximal(s, mask),
                     primary=is_primary(s, mask))


@dataclass(frozen=True)
class IdealLattice:
    """All ideals with covering pairs (indices into .ideals) and classifications."""

    ideals: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    info: tuple[IdealInfo, ...]


@lru_cache(maxsize=None)
def ideal_lattice(s: GammaStructure) -> IdealLattice:
    ideals = enumerate_ideals(s)
    covers = []
    for i, lo in enumerate(ideals):
        for j, hi in enumerate(ideals):
            if lo == hi or lo & hi != lo:
                continue
            if any(k not in (i, j) and lo & mid == lo and mid & hi == mid
                   for k, mid in enumerate(ideals)):
                continue
            covers.append((i, j))
    info = tuple(classify_ideal(s, mask) for mask in ideals)
    return IdealLattice(ideals=ideals, covers=tuple(sorted(covers)), info=info)


def lattice_dot(s: GammaStructure) -> str:
    """Hasse diagram of the ideal lattice in DOT, stable node order."""
    lat = ideal_lattice(s)
    lines = ["digraph ideal_lattice {", "  rankdir=BT;"]
    for i, info in enumerate(lat.info):
        label = s.set_label(info.mask)
        badges = " ".join(info.tags())
        if badges:
            label = f"{label}\\n{badges}"
        label = label.replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in lat.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

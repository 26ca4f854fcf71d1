"""Finite ternary module actions: scalars on the outside, carrier in the middle.

An action table assigns a carrier element to a m b for scalars a, b and
carrier m. Verification covers the carrier monoid, additivity in all three
slots, and scalar-slot zero absorption. The associativity axiom as printed
mixes five factors into an untyped scalar product, so two modes exist:
"surrogate" checks the well-typed exchange law
a (b m c) d = b (a m d) c (parameters following their scalars), while
"printed" refuses to guess and reports an unevaluated verdict with a note.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator, Optional

from .core import (GammaStructure, InputError, ResourceLimitError, Verdict,
                   Violation, full_mask, mask_elements, max_order,
                   structure_from_dict, structure_to_dict, subset_sort_key)
from .enumeration import enumerate_additive_monoids
from .ideals import is_ideal, is_prime

ASSOC_LAWS = ("surrogate", "printed")
PRINTED_ASSOC_NOTE = (
    "associativity as printed multiplies four scalars and the carrier in one "
    "expression, which has no parse under a ternary product; not evaluated")

_SUBMODULE_SCAN_CAP = 16


def _as_grid(rows, size: int, what: str):
    grid = tuple(tuple(int(v) for v in row) for row in rows)
    if len(grid) != size or any(len(row) != size for row in grid):
        raise InputError(f"{what} must be a {size}x{size} table")
    for row in grid:
        for v in row:
            if not 0 <= v < size:
                raise InputError(f"{what} entry {v} out of range 0..{size - 1}")
    return grid


@dataclass(frozen=True)
class ModuleAction:
    """Carrier monoid plus action tables indexed action[al][be][a][m][b]."""

    scalar: GammaStructure
    carrier_order: int
    carrier_addition: tuple
    action: tuple

    def __post_init__(self):
        n, m, k = self.scalar.order, self.scalar.gamma_size, self.carrier_order
        if k < 1:
            raise InputError(f"carrier order must be positive, got {k}")
        object.__setattr__(self, "carrier_addition",
                           _as_grid(self.carrier_addition, k, "carrier addition"))
        act = tuple(
            tuple(
                tuple(
                    tuple(tuple(int(v) for v in row) for row in plane)
                    for plane in self.action[al][be])
                for be in range(m))
            for al in range(m))
        if len(self.action) != m or any(len(self.action[al]) != m for al in range(m)):
            raise InputError(f"action must carry {m}x{m} parameter tables")
        for al in range(m):
            for be in range(m):
                cube = act[al][be]
                if len(cube) != n:
                    raise InputError(f"action table {al},{be} must have {n} scalar planes")
                for plane in cube:
                    if len(plane) != k or any(len(row) != n for row in plane):
                        raise InputError(
                            f"action table {al},{be} planes must be {k}x{n}")
                    for row in plane:
                        for v in row:
                            if not 0 <= v < k:
                                raise InputError(
                                    f"action value {v} out of range 0..{k - 1}")
        object.__setattr__(self, "action", act)

    def act(self, a: int, al: int, m: int, be: int, b: int) -> int:
        return self.action[al][be][a][m][b]

    @property
    def carrier_elements(self) -> range:
        return range(self.carrier_order)


def regular_module(s: GammaStructure) -> ModuleAction:
    """The structure acting on itself through its own ternary product."""
    return ModuleAction(scalar=s, carrier_order=s.order,
                        carrier_addition=s.addition, action=s.ternary)


def zero_module(s: GammaStructure, carrier_order: int = 1,
                carrier_addition=None) -> ModuleAction:
    """Every action result is 0; any carrier monoid works."""
    if carrier_addition is None:
        if carrier_order != 1:
            raise InputError("carrier addition required when carrier order > 1")
        carrier_addition = ((0,),)
    n, m, k = s.order, s.gamma_size, carrier_order
    zero_plane = tuple(tuple(0 for _ in range(n)) for _ in range(k))
    cube = tuple(zero_plane for _ in range(n))
    action = tuple(tuple(cube for _ in range(m)) for _ in range(m))
    return ModuleAction(scalar=s, carrier_order=k,
                        carrier_addition=carrier_addition, action=action)


# ---------------------------------------------------------------------------
# axioms

def _check_carrier_monoid(madd, k: int) -> Optional[Violation]:
    for a in range(k):
        if madd[0][a] != a:
            return Violation("carrier-identity", (a,), madd[0][a], a)
    for a in range(k):
        for b in range(a + 1, k):
            if madd[a][b] != madd[b][a]:
                return Violation("carrier-commutativity", (a, b),
                                 madd[a][b], madd[b][a])
    for a in range(k):
        for b in range(k):
            for c in range(k):
                lhs = madd[madd[a][b]][c]
                rhs = madd[a][madd[b][c]]
                if lhs != rhs:
                    return Violation("carrier-associativity", (a, b, c), lhs, rhs)
    return None


@dataclass(frozen=True)
class ModuleAxiomReport:
    carrier_monoid: Optional[Violation]
    additivity: Optional[Violation]
    absorbing_zero: Optional[Violation]
    assoc_law: str
    associativity: Optional[Violation]
    assoc_evaluated: bool
    assoc_note: Optional[str]
    commutativity: Optional[Violation]
    commutativity_checked: bool

    @property
    def passed(self) -> Optional[bool]:
        """True/False when decidable; None when the associativity mode could
        not be evaluated and nothing else failed."""
        hard = [self.carrier_monoid, self.additivity, self.absorbing_zero]
        if self.commutativity_checked:
            hard.append(self.commutativity)
        if self.assoc_evaluated:
            hard.append(self.associativity)
        if any(v is not None for v in hard):
            return False
        if not self.assoc_evaluated:
            return None
        return True

    def failures(self) -> tuple:
        out = []
        for v in (self.carrier_monoid, self.additivity, self.absorbing_zero,
                  self.associativity, self.commutativity):
            if v is not None:
                out.append(v)
        return tuple(out)

    def to_dict(self) -> dict:
        def enc(v):
            return None if v is None else {
                "law": v.law, "args": list(v.args), "lhs": v.lhs, "rhs": v.rhs}
        return {
            "carrier_monoid": enc(self.carrier_monoid),
            "additivity": enc(self.additivity),
            "absorbing_zero": enc(self.absorbing_zero),
            "assoc_law": self.assoc_law,
            "associativity": enc(self.associativity),
            "assoc_evaluated": self.assoc_evaluated,
            "assoc_note": self.assoc_note,
            "commutativity": enc(self.commutativity),
            "commutativity_checked": self.commutativity_checked,
            "passed": self.passed,
        }


def _check_module_additivity(a_: ModuleAction) -> Optional[Violation]:
    s, k = a_.scalar, a_.carrier_order
    n, m = s.order, s.gamma_size
    madd = a_.carrier_addition
    for al in range(m):
        for be in range(m):
            cube = a_.action[al][be]
            for x in range(n):
                for y in range(n):
                    xy = s.addition[x][y]
                    for mm in range(k):
                        for b in range(n):
                            lhs = cube[xy][mm][b]
                            rhs = madd[cube[x][mm][b]][cube[y][mm][b]]
                            if lhs != rhs:
                                return Violation("module-additivity-0",
                                                 (x, y, mm, b, al, be), lhs, rhs)
            for a in range(n):
                for m1 in range(k):
                    for m2 in range(k):
                        ms = madd[m1][m2]
                        for b in range(n):
                            lhs = cube[a][ms][b]
                            rhs = madd[cube[a][m1][b]][cube[a][m2][b]]
                            if lhs != rhs:
                                return Violation("module-additivity-1",
                                                 (a, m1, m2, b, al, be), lhs, rhs)
            for a in range(n):
                for mm in range(k):
                    for x in range(n):
                        for y in range(n):
                            xy = s.addition[x][y]
                            lhs = cube[a][mm][xy]
                            rhs = madd[cube[a][mm][x]][cube[a][mm][y]]
                            if lhs != rhs:
                                return Violation("module-additivity-2",
                                                 (a, mm, x, y, al, be), lhs, rhs)
    return None


def _check_module_zero(a_: ModuleAction) -> Optional[Violation]:
    # zero pins the scalar slots only; the printed law says nothing about
    # a zero in the middle
    s, k = a_.scalar, a_.carrier_order
    n, m = s.order, s.gamma_size
    for al in range(m):
        for be in range(m):
            cube = a_.action[al][be]
            for mm in range(k):
                for b in range(n):
                    if cube[0][mm][b] != 0:
                        return Violation("module-absorbing-zero", (0, mm, b, al, be),
                                         cube[0][mm][b], 0)
            for a in range(n):
                for mm in range(k):
                    if cube[a][mm][0] != 0:
                        return Violation("module-absorbing-zero", (a, mm, 0, al, be),
                                         cube[a][mm][0], 0)
    return None


def _check_module_assoc_surrogate(a_: ModuleAction) -> Optional[Violation]:
    s, k = a_.scalar, a_.carrier_order
    n, m = s.order, s.gamma_size
    act = a_.action
    for al in range(m):
        for be in range(m):
            for ga in range(m):
                for de in range(m):
                    for a in range(n):
                        for b in range(n):
                            for c in range(n):
                                for d in range(n):
                                    for mm in range(k):
                                        inner = act[ga][de][b][mm][c]
                                        lhs = act[al][be][a][inner][d]
                                        inner2 = act[al][be][a][mm][d]
                                        rhs = act[ga][de][b][inner2][c]
                                        if lhs != rhs:
                                            return Violation(
                                                "module-assoc-surrogate",
                                                (a, b, c, d, mm, al, be, ga, de),
                                                lhs, rhs)
    return None


def _check_module_commutative(a_: ModuleAction) -> Optional[Violation]:
    s, k = a_.scalar, a_.carrier_order
    n, m = s.order, s.gamma_size
    for al in range(m):
        for be in range(m):
            for a in range(n):
                for mm in range(k):
                    for b in range(n):
                        lhs = a_.action[al][be][a][mm][b]
                        rhs = a_.action[be][al][b][mm][a]
                        if lhs != rhs:
                            return Violation("module-commutativity",
                                             (a, mm, b, al, be), lhs, rhs)
    return None


def verify_module_axioms(a_: ModuleAction, assoc_law: str = "surrogate",
                         commutative: bool = False) -> ModuleAxiomReport:
    """Exhaustive check; first witness per family, scan order as written."""
    if assoc_law not in ASSOC_LAWS:
        raise InputError(f"assoc_law must be one of {ASSOC_LAWS}, got {assoc_law!r}")
    carrier = _check_carrier_monoid(a_.carrier_addition, a_.carrier_order)
    additivity = _check_module_additivity(a_)
    zero = _check_module_zero(a_)
    if assoc_law == "surrogate":
        assoc = _check_module_assoc_surrogate(a_)
        evaluated, note = True, None
    else:
        assoc, evaluated, note = None, False, PRINTED_ASSOC_NOTE
    comm = _check_module_commutative(a_) if commutative else None
    return ModuleAxiomReport(
        carrier_monoid=carrier,
        additivity=additivity,
        absorbing_zero=zero,
        assoc_law=assoc_law,
        associativity=assoc,
        assoc_evaluated=evaluated,
        assoc_note=note,
        commutativity=comm,
        commutativity_checked=commutative,
    )


# ---------------------------------------------------------------------------
# submodules and annihilators

def enumerate_submodules(a_: ModuleAction) -> tuple:
    """Additively closed carrier subsets containing 0 and closed under the
    action, as bitmasks sorted by size then value."""
    k = a_.carrier_order
    if k > _SUBMODULE_SCAN_CAP:
        raise ResourceLimitError(
            f"carrier order {k} exceeds submodule scan cap {_SUBMODULE_SCAN_CAP}")
    s = a_.scalar
    n, m = s.order, s.gamma_size
    madd = a_.carrier_addition
    out = []
    for mask in range(1, 1 << k, 2):
        members = mask_elements(mask)
        ok = all(mask >> madd[x][y] & 1 for x in members for y in members)
        if ok:
            ok = all(mask >> a_.action[al][be][a][mm][b] & 1
                     for mm in members
                     for a in range(n) for b in range(n)
                     for al in range(m) for be in range(m))
        if ok:
            out.append(mask)
    return tuple(sorted(out, key=subset_sort_key))


def is_simple_module(a_: ModuleAction) -> bool:
    return a_.carrier_order > 1 and len(enumerate_submodules(a_)) == 2


@dataclass(frozen=True)
class AnnihilatorResult:
    """Scalars killing the whole carrier from the first slot."""

    mask: int
    proper: bool
    ideal: Verdict
    prime: Optional[Verdict]

    def to_dict(self) -> dict:
        return {
            "elements": list(mask_elements(self.mask)),
            "proper": self.proper,
            "ideal": self.ideal.ok,
            "ideal_witness": None if self.ideal.ok else list(self.ideal.witness),
            "prime": None if self.prime is None else self.prime.ok,
            "prime_witness": (None if self.prime is None or self.prime.ok
                              else list(self.prime.witness)),
        }


def annihilator(a_: ModuleAction) -> AnnihilatorResult:
    """First-slot annihilator; primeness evaluated only for simple modules
    with a proper annihilator, reported rather than assumed."""
    s, k = a_.scalar, a_.carrier_order
    n, m = s.order, s.gamma_size
    mask = 0
    for a in range(n):
        if all(a_.action[al][be][a][mm][b] == 0
               for al in range(m) for be in range(m)
               for mm in range(k) for b in range(n)):
            mask |= 1 << a
    proper = mask != full_mask(n)
    prime = None
    if proper and is_simple_module(a_):
        prime = is_prime(s, mask)
    return AnnihilatorResult(mask=mask, proper=proper,
                             ideal=is_ideal(s, mask), prime=prime)


# ---------------------------------------------------------------------------
# enumeration of actions

def _action_cells(n: int, m: int, k: int) -> list:
    return [(al, be, a, mm, b)
            for al in range(m) for be in range(m)
            for a in range(1, n) for mm in range(k) for b in range(1, n)]


def _actions_for_carrier(s: GammaStructure, k: int, madd) -> Iterator[ModuleAction]:
    """Backtracking over free action cells with additivity replayed as soon
    as its last cell lands; scalar-zero cells are pinned to 0 up front."""
    n, m = s.order, s.gamma_size
    cells = _action_cells(n, m, k)
    cell_id = {cell: i for i, cell in enumerate(cells)}

    def key(al, be, a, mm, b) -> int:
        if a == 0 or b == 0:
            return -1
        return cell_id[(al, be, a, mm, b)]

    buckets = [[] for _ in cells]
    for al in range(m):
        for be in range(m):
            for x in range(n):
                for y in range(x, n):
                    xy = s.addition[x][y]
                    for mm in range(k):
                        for b in range(n):
                            ks = (key(al, be, xy, mm, b),
                                  key(al, be, x, mm, b),
                                  key(al, be, y, mm, b))
                            if max(ks) >= 0:
                                buckets[max(ks)].append(ks)
                            ks = (key(al, be, b, mm, xy),
                                  key(al, be, b, mm, x),
                                  key(al, be, b, mm, y))
                            if max(ks) >= 0:
                                buckets[max(ks)].append(ks)
            for a in range(n):
                for m1 in range(k):
                    for m2 in range(m1, k):
                        ms = madd[m1][m2]
                        for b in range(n):
                            ks = (key(al, be, a, ms, b),
                                  key(al, be, a, m1, b),
                                  key(al, be, a, m2, b))
                            if max(ks) >= 0:
                                buckets[max(ks)].append(ks)
    vals = [0] * len(cells)

    def value(kk: int) -> int:
        return 0 if kk < 0 else vals[kk]

    def build() -> ModuleAction:
        act = [[[[[0] * n for _ in range(k)] for _ in range(n)]
                for _ in range(m)] for _ in range(m)]
        for i, (al, be, a, mm, b) in enumerate(cells):
            act[al][be][a][mm][b] = vals[i]
        return ModuleAction(scalar=s, carrier_order=k, carrier_addition=madd,
                            action=act)

    def fill(i: int) -> Iterator[ModuleAction]:
        if i == len(cells):
            yield build()
            return
        for v in range(k):
            vals[i] = v
            if all(value(l) == madd[value(r1)][value(r2)]
                   for l, r1, r2 in buckets[i]):
                yield from fill(i + 1)

    if not cells:
        yield build()
        return
    yield from fill(0)


def enumerate_module_actions(s: GammaStructure, carrier_order: int,
                             carrier_addition=None) -> Iterator[ModuleAction]:
    """All additivity-satisfying actions on carriers of the given order."""
    if carrier_addition is not None:
        carriers = (_as_grid(carrier_addition, carrier_order, "carrier addition"),)
    else:
        carriers = enumerate_additive_monoids(carrier_order)
    for madd in carriers:
        yield from _actions_for_carrier(s, carrier_order, madd)


def find_primitive_ideals(s: GammaStructure, carrier_cap: Optional[int] = None,
                          limit: Optional[int] = None) -> tuple:
    """Proper annihilators of simple module actions, deduplicated.

    carrier_cap defaults to the scalar order; limit bounds how far the cap
    may be pushed and defaults to the global order cap.
    """
    if limit is None:
        limit = max_order()
    if carrier_cap is None:
        carrier_cap = min(s.order, limit)
    if carrier_cap > limit:
        raise ResourceLimitError(
            f"carrier cap {carrier_cap} exceeds limit {limit}")
    found = set()
    for k in range(2, carrier_cap + 1):
        for action in enumerate_module_actions(s, k):
            result = annihilator(action)
            if result.proper and is_simple_module(action):
                found.add(result.mask)
    return tuple(sorted(found, key=subset_sort_key))


# ---------------------------------------------------------------------------
# homomorphisms between modules over the same scalars

def find_module_homomorphisms(src: ModuleAction, dst: ModuleAction,
                              surjective_only: bool = False) -> list:
    """Carrier maps fixing 0, additive, and commuting with every action."""
    if (src.scalar.addition != dst.scalar.addition
            or src.scalar.ternary != dst.scalar.ternary):
        return []
    s = src.scalar
    n, m = s.order, s.gamma_size
    out = []
    for tail in iproduct(range(dst.carrier_order), repeat=src.carrier_order - 1):
        f = (0,) + tail
        if surjective_only and len(set(f)) != dst.carrier_order:
            continue
        if any(f[src.carrier_addition[x][y]]
               != dst.carrier_addition[f[x]][f[y]]
               for x in range(src.carrier_order)
               for y in range(src.carrier_order)):
            continue
        if any(f[src.action[al][be][a][mm][b]]
               != dst.action[al][be][a][f[mm]][b]
               for al in range(m) for be in range(m)
               for a in range(n) for mm in range(src.carrier_order)
               for b in range(n)):
            continue
        out.append(f)
    return out


def kernel_mask(f) -> int:
    return sum(1 << i for i, v in enumerate(f) if v == 0)


def image_mask(f) -> int:
    out = 0
    for v in f:
        out |= 1 << v
    return out


def is_submodule(a_: ModuleAction, mask: int) -> bool:
    return mask in enumerate_submodules(a_)


# ---------------------------------------------------------------------------
# serialization

def module_to_dict(a_: ModuleAction) -> dict:
    s = a_.scalar
    action = {}
    for al in range(s.gamma_size):
        for be in range(s.gamma_size):
            action[f"{al},{be}"] = [
                [list(row) for row in plane] for plane in a_.action[al][be]]
    return {
        "scalar": structure_to_dict(s),
        "carrier_order": a_.carrier_order,
        "carrier_addition": [list(row) for row in a_.carrier_addition],
        "action": action,
    }


def module_from_dict(d: dict) -> ModuleAction:
    try:
        scalar = d["scalar"]
        k = d["carrier_order"]
        madd = d["carrier_addition"]
        action_raw = d["action"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"module file missing field: {exc}") from exc
    if isinstance(scalar, str):
        from .core import load_structure
        s = load_structure(scalar)
    else:
        s = structure_from_dict(scalar)
    m = s.gamma_size
    expected = {f"{al},{be}" for al in range(m) for be in range(m)}
    if set(action_raw) != expected:
        raise InputError(
            f"action keys {sorted(action_raw)} do not match parameter grid")
    action = [[action_raw[f"{al},{be}"] for be in range(m)] for al in range(m)]
    return ModuleAction(scalar=s, carrier_order=k, carrier_addition=madd,
                        action=action)


def dumps_module(a_: ModuleAction) -> str:
    return json.dumps(module_to_dict(a_), indent=2, sort_keys=True) + "\n"

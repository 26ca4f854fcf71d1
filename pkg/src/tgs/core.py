"""Core representation of finite commutative ternary gamma-semirings.

A structure is a finite carrier {0..n-1} with a commutative monoid addition
(identity at index 0) and a family of ternary products indexed by ordered
parameter pairs (alpha, beta) drawn from a finite parameter set {0..m-1}:

    t(a, alpha, b, beta, c) -> element

Axioms checked by verify_axioms:

    additive_monoid     addition is commutative, associative, has identity 0
    ternary_assoc       t(t(a,al,b,be,c), ga, d, de, e) == t(a, al, b, be, t(c,ga,d,de,e))
    distributive        t is additive in each of the three element arguments
    absorbing_zero      any zero element argument forces the product to 0
    commutative         t(a,al,b,be,c) == t(b,be,a,al,c) == t(c,al,b,be,a)

Witnesses are always the first violating tuple in the documented scan order,
so repeated runs (and independent reimplementations of the same contract)
agree byte for byte.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Optional, Sequence

DEFAULT_MAX_ORDER = 5
DEFAULT_MAX_GAMMA = 2


class InputError(ValueError):
    """Malformed input: bad tables, bad indices, bad files."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the configured size caps."""


class ConsistencyError(RuntimeError):
    """Internal invariant broke mid-computation (e.g. representative-dependent quotient)."""


def max_order() -> int:
    """Enumeration order cap; TGS_MAX_ORDER overrides the default of 5."""
    raw = os.environ.get("TGS_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"TGS_MAX_ORDER must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InputError(f"TGS_MAX_ORDER must be >= 1, got {value}")
    return value


# ---------------------------------------------------------------------------
# element subsets as bitmasks

def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def mask_elements(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def mask_size(mask: int) -> int:
    return mask.bit_count()


def subset_sort_key(mask: int) -> tuple[int, int]:
    # ascending by size, ties by bitmask value
    return (mask.bit_count(), mask)


# ---------------------------------------------------------------------------
# verdicts and witnesses

@dataclass(frozen=True)
class Violation:
    """One failed law instance. args is the scan tuple; lhs/rhs the two sides."""

    law: str
    args: tuple
    lhs: int
    rhs: int

    def describe(self) -> str:
        cells = ",".join(str(a) for a in self.args)
        return f"{self.law}({cells}): {self.lhs} != {self.rhs}"


class Verdict(NamedTuple):
    """Boolean outcome plus the first counterexample tuple, if any."""

    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts; None means the axiom holds."""

    additive_monoid: Optional[Violation]
    ternary_assoc: Optional[Violation]
    distributive: Optional[Violation]
    absorbing_zero: Optional[Violation]
    commutative: Optional[Violation]
    require_commutative: bool = True

    @property
    def passed(self) -> bool:
        core = (self.additive_monoid, self.ternary_assoc,
                self.distributive, self.absorbing_zero)
        if any(v is not None for v in core):
            return False
        return self.commutative is None or not self.require_commutative

    def failures(self) -> list[Violation]:
        out = [v for v in (self.additive_monoid, self.ternary_assoc,
                           self.distributive, self.absorbing_zero) if v is not None]
        if self.require_commutative and self.commutative is not None:
            out.append(self.commutative)
        return out

    def to_dict(self) -> dict:
        def enc(v: Optional[Violation]):
            if v is None:
                return None
            return {"law": v.law, "args": list(v.args), "lhs": v.lhs, "rhs": v.rhs}

        return {
            "passed": self.passed,
            "additive_monoid": enc(self.additive_monoid),
            "ternary_assoc": enc(self.ternary_assoc),
            "distributive": enc(self.distributive),
            "absorbing_zero": enc(self.absorbing_zero),
            "commutative": enc(self.commutative),
        }


# ---------------------------------------------------------------------------
# the structure itself

def _as_grid(rows, n: int, what: str) -> tuple[tuple[int, ...], ...]:
    if len(rows) != n:
        raise InputError(f"{what} must have {n} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"{what} row {i} must have {n} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InputError(f"{what}[{i}][{j}] = {v!r} out of range 0..{n - 1}")
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class GammaStructure:
    """Operation tables for one finite structure. Hashable; tables are nested tuples.

    addition[a][b] and ternary[alpha][beta][a][b][c] are element indices.
    Construction validates shapes and ranges only; axioms are a separate check.
    """

    order: int
    gamma_size: int
    addition: tuple
    ternary: tuple
    names: tuple = ()

    def __post_init__(self):
        n, m = self.order, self.gamma_size
        if n < 1:
            raise InputError(f"order must be >= 1, got {n}")
        if m < 1:
            raise InputError(f"gamma size must be >= 1, got {m}")
        object.__setattr__(self, "addition", _as_grid(self.addition, n, "addition"))
        if len(self.ternary) != m:
            raise InputError(f"ternary must have {m} alpha-layers, got {len(self.ternary)}")
        layers = []
        for al, layer in enumerate(self.ternary):
            if len(layer) != m:
                raise InputError(f"ternary[{al}] must have {m} beta-layers, got {len(layer)}")
            cubes = []
            for be, cube in enumerate(layer):
                if len(cube) != n:
                    raise InputError(f"ternary[{al}][{be}] must have {n} planes, got {len(cube)}")
                cubes.append(tuple(_as_grid(plane, n, f"ternary[{al}][{be}][{a}]")
                                   for a, plane in enumerate(cube)))
            layers.append(tuple(cubes))
        object.__setattr__(self, "ternary", tuple(layers))
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))
        else:
            names = tuple(str(x) for x in self.names)
            if len(names) != n:
                raise InputError(f"names must have {n} entries, got {len(names)}")
            object.__setattr__(self, "names", names)

    # fast unchecked lookups for inner loops
    def add(self, a: int, b: int) -> int:
        return self.addition[a][b]

    def tern(self, a: int, al: int, b: int, be: int, c: int) -> int:
        return self.ternary[al][be][a][b][c]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def params(self) -> range:
        return range(self.gamma_size)

    @property
    def carrier_mask(self) -> int:
        return full_mask(self.order)

    def is_additive_group(self) -> bool:
        return all(any(self.addition[a][b] == 0 for b in self.elements) for a in self.elements)

    def element_label(self, i: int) -> str:
        return self.names[i]

    def set_label(self, mask: int) -> str:
        return "{" + ",".join(self.names[i] for i in mask_elements(mask)) + "}"


def ternary_product(s: GammaStructure, a: int, alpha: int, b: int, beta: int, c: int) -> int:
    """Table lookup with range validation on every index."""
    n, m = s.order, s.gamma_size
    for name, v, hi in (("a", a, n), ("b", b, n), ("c", c, n),
                        ("alpha", alpha, m), ("beta", beta, m)):
        if not 0 <= v < hi:
            raise InputError(f"{name} = {v} out of range 0..{hi - 1}")
    return s.ternary[alpha][beta][a][b][c]


# ---------------------------------------------------------------------------
# axiom verification

def _check_additive_monoid(s: GammaStructure) -> Optional[Violation]:
    add = s.addition
    n = s.order
    for a in range(n):
        if add[0][a] != a:
            return Violation("additive-identity", (0, a), add[0][a], a)
        if add[a][0] != a:
            return Violation("additive-identity", (a, 0), add[a][0], a)
    for a in range(n):
        for b in range(n):
            if add[a][b] != add[b][a]:
                return Violation("additive-commutativity", (a, b), add[a][b], add[b][a])
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = add[add[a][b]][c]
                rhs = add[a][add[b][c]]
                if lhs != rhs:
                    return Violation("additive-associativity", (a, b, c), lhs, rhs)
    return None


def _check_absorbing_zero(s: GammaStructure) -> Optional[Violation]:
    n, m = s.order, s.gamma_size
    t = s.ternary
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if a and b and c:
                    continue
                for al in range(m):
                    for be in range(m):
                        v = t[al][be][a][b][c]
                        if v != 0:
                            return Violation("absorbing-zero", (a, b, c, al, be), v, 0)
    return None


def _check_distributive(s: GammaStructure) -> Optional[Violation]:
    n, m = s.order, s.gamma_size
    add = s.addition
    t = s.ternary
    # position 0: t(x+y, b, c) == t(x,b,c) + t(y,b,c), then positions 1 and 2
    for pos in range(3):
        for x in range(n):
            for y in range(n):
                xy = add[x][y]
                for b in range(n):
                    for c in range(n):
                        for al in range(m):
                            for be in range(m):
                                cube = t[al][be]
                                if pos == 0:
                                    lhs = cube[xy][b][c]
                                    rhs = add[cube[x][b][c]][cube[y][b][c]]
                                elif pos == 1:
                                    lhs = cube[b][xy][c]
                                    rhs = add[cube[b][x][c]][cube[b][y][c]]
                                else:
                                    lhs = cube[b][c][xy]
                                    rhs = add[cube[b][c][x]][cube[b][c][y]]
                                if lhs != rhs:
                                    return Violation(f"distributivity-{pos}",
                                                     (x, y, b, c, al, be), lhs, rhs)
    return None


def _check_ternary_assoc(s: GammaStructure) -> Optional[Violation]:
    n, m = s.order, s.gamma_size
    t = s.ternary
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    for e in range(n):
                        for al in range(m):
                            for be in range(m):
                                inner_l = t[al][be][a][b][c]
                                for ga in range(m):
                                    for de in range(m):
                                        lhs = t[ga][de][inner_l][d][e]
                                        rhs = t[al][be][a][b][t[ga][de][c][d][e]]
                                        if lhs != rhs:
                                            return Violation(
                                                "ternary-associativity",
                                                (a, b, c, d, e, al, be, ga, de), lhs, rhs)
    return None


def _check_commutative(s: GammaStructure) -> Optional[Violation]:
    n, m = s.order, s.gamma_size
    t = s.ternary
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for al in range(m):
                    for be in range(m):
                        v = t[al][be][a][b][c]
                        w = t[be][al][b][a][c]
                        if v != w:
                            return Violation("commutativity-swap01", (a, b, c, al, be), v, w)
                        w = t[al][be][c][b][a]
                        if v != w:
                            return Violation("commutativity-swap02", (a, b, c, al, be), v, w)
    return None


def verify_axioms(s: GammaStructure, require_commutative: bool = True) -> AxiomReport:
    """Check every axiom over the whole table; first lex witness per axiom."""
    return AxiomReport(
        additive_monoid=_check_additive_monoid(s),
        ternary_assoc=_check_ternary_assoc(s),
        distributive=_check_distributive(s),
        absorbing_zero=_check_absorbing_zero(s),
        commutative=_check_commutative(s),
        require_commutative=require_commutative,
    )


# ---------------------------------------------------------------------------
# relabeling and canonical form

def apply_permutation(s: GammaStructure, sigma: Sequence[int]) -> GammaStructure:
    """Relabel elements by sigma (a bijection with sigma[0] == 0); names travel along."""
    n, m = s.order, s.gamma_size
    sigma = tuple(sigma)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise InputError(f"sigma must be a permutation of 0..{n - 1}, got {sigma}")
    if sigma[0] != 0:
        raise InputError("sigma must fix the zero element")
    add = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            add[sigma[a]][sigma[b]] = sigma[s.addition[a][b]]
    tern = [[[[[0] * n for _ in range(n)] for _ in range(n)] for _ in range(m)] for _ in range(m)]
    for al in range(m):
        for be in range(m):
            cube = s.ternary[al][be]
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        tern[al][be][sigma[a]][sigma[b]][sigma[c]] = sigma[cube[a][b][c]]
    names = [""] * n
    for a in range(n):
        names[sigma[a]] = s.names[a]
    return GammaStructure(order=n, gamma_size=m, addition=add, ternary=tern, names=tuple(names))


def _serialize_tables(order, gamma_size, addition, ternary) -> bytes:
    out = bytearray((order, gamma_size))
    for row in addition:
        out.extend(row)
    for al in range(gamma_size):
        for be in range(gamma_size):
            cube = ternary[al][be]
            for plane in cube:
                for row in plane:
                    out.extend(row)
    return bytes(out)


def zero_fixing_permutations(n: int):
    for tail in permutations(range(1, n)):
        yield (0,) + tail


def canonical_form(s: GammaStructure, gamma_relabeling: bool = False) -> bytes:
    """Lexicographically minimal table serialization over all 0-fixing relabelings.

    Parameters are treated as labeled: gamma permutations do not act unless
    gamma_relabeling is set (off by default).
    """
    n, m = s.order, s.gamma_size
    best = None
    for sigma in zero_fixing_permutations(n):
        add = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                add[sigma[a]][sigma[b]] = sigma[s.addition[a][b]]
        cubes = {}
        for al in range(m):
            for be in range(m):
                src = s.ternary[al][be]
                dst = [[[0] * n for _ in range(n)] for _ in range(n)]
                for a in range(n):
                    for b in range(n):
                        for c in range(n):
                            dst[sigma[a]][sigma[b]][sigma[c]] = sigma[src[a][b][c]]
                cubes[(al, be)] = dst
        if gamma_relabeling:
            param_perms = list(permutations(range(m)))
        else:
            param_perms = [tuple(range(m))]
        for tau in param_perms:
            tern = [[cubes[(tau[al], tau[be])] for be in range(m)] for al in range(m)]
            cand = _serialize_tables(n, m, add, tern)
            if best is None or cand < best:
                best = cand
    return best


def structure_from_bytes(data: bytes) -> GammaStructure:
    """Rebuild a structure from a table serialization (canonical_form output)."""
    if len(data) < 2:
        raise InputError("serialized structure too short")
    n, m = data[0], data[1]
    need = 2 + n * n + m * m * n * n * n
    if len(data) != need:
        raise InputError(f"serialized structure has {len(data)} bytes, expected {need}")
    pos = 2
    addition = tuple(tuple(data[pos + a * n + b] for b in range(n)) for a in range(n))
    pos += n * n
    cubes = []
    for _ in range(m * m):
        cube = tuple(
            tuple(tuple(data[pos + a * n * n + b * n + c] for c in range(n))
                  for b in range(n))
            for a in range(n))
        cubes.append(cube)
        pos += n * n * n
    ternary = tuple(tuple(cubes[al * m + be] for be in range(m)) for al in range(m))
    return GammaStructure(order=n, gamma_size=m, addition=addition, ternary=ternary)


def structures_isomorphic(s1: GammaStructure, s2: GammaStructure) -> bool:
    if (s1.order, s1.gamma_size) != (s2.order, s2.gamma_size):
        return False
    return canonical_form(s1) == canonical_form(s2)


# ---------------------------------------------------------------------------
# JSON interchange

def structure_to_dict(s: GammaStructure) -> dict:
    tern = {}
    for al in range(s.gamma_size):
        for be in range(s.gamma_size):
            tern[f"{al},{be}"] = [[list(row) for row in plane] for plane in s.ternary[al][be]]
    return {
        "order": s.order,
        "gamma": s.gamma_size,
        "names": list(s.names),
        "addition": [list(row) for row in s.addition],
        "ternary": tern,
    }


def structure_from_dict(d: dict) -> GammaStructure:
    if not isinstance(d, dict):
        raise InputError(f"structure document must be an object, got {type(d).__name__}")
    for key in ("order", "gamma", "addition", "ternary"):
        if key not in d:
            raise InputError(f"structure document missing key {key!r}")
    n = d["order"]
    m = d["gamma"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"order must be a positive integer, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise InputError(f"gamma must be a positive integer, got {m!r}")
    tern_obj = d["ternary"]
    if not isinstance(tern_obj, dict):
        raise InputError("ternary must be an object keyed by 'alpha,beta'")
    expected = {f"{al},{be}" for al in range(m) for be in range(m)}
    got = set(tern_obj)
    if got != expected:
        missing = sorted(expected - got)
        extra = sorted(got - expected)
        parts = []
        if missing:
            parts.append(f"missing keys {missing}")
        if extra:
            parts.append(f"unexpected keys {extra}")
        raise InputError("ternary: " + "; ".join(parts))
    tern = [[tern_obj[f"{al},{be}"] for be in range(m)] for al in range(m)]
    names = d.get("names") or [str(i) for i in range(n)]
    return GammaStructure(order=n, gamma_size=m, addition=d["addition"],
                          ternary=tern, names=tuple(str(x) for x in names))


def dumps_structure(s: GammaStructure) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(structure_to_dict(s), indent=2, sort_keys=True) + "\n"


def parse_structure(text: str) -> GammaStructure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return structure_from_dict(doc)


def load_structure(path) -> GammaStructure:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_structure(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from exc

"""Prime spectrum: points, closed sets, topology checks, connectedness.

Points are prime ideals (as bitmasks). closed_set(s, I) collects the primes
containing I. verify_topology re-proves the closed-set laws exhaustively for
one structure; connected components come from the clopen sets of the finite
topology and are cross-compared with idempotent decompositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional

from .core import (GammaStructure, InputError, Verdict, full_mask,
                   mask_elements, subset_sort_key)
from .ideals import enumerate_ideals, generated_ideal, is_ideal, is_prime
from .quotient import bourne_congruence, normalize_partition, quotient_structure
from .radicals import radical_by_primes


def spectrum_points(s: GammaStructure) -> tuple[int, ...]:
    """All prime ideals, ascending by size then bitmask."""
    top = full_mask(s.order)
    return tuple(i for i in enumerate_ideals(s) if i != top and is_prime(s, i).ok)


def closed_set(s: GammaStructure, mask: int) -> frozenset:
    """Primes containing the given subset."""
    return frozenset(p for p in spectrum_points(s) if p & mask == mask)


@dataclass(frozen=True)
class TopologyCheck:
    name: str
    ok: bool
    witness: Optional[tuple] = None


def _closure_of_point(family: list, point: int, every: frozenset) -> frozenset:
    out = every
    for c in family:
        if point in c:
            out = out & c
    return out


def verify_topology(s: GammaStructure) -> list[TopologyCheck]:
    """Re-derive the closed-set laws for this structure, one named check each."""
    ideals = enumerate_ideals(s)
    points = spectrum_points(s)
    every = frozenset(points)
    vmap = {i: closed_set(s, i) for i in ideals}
    family = sorted(set(vmap.values()), key=lambda c: (len(c), sorted(c)))
    checks = []

    bottom = generated_ideal(s, 0)
    checks.append(TopologyCheck(
        "bottom-closed-set-is-all", vmap[bottom] == every,
        None if vmap[bottom] == every else (sorted(every - vmap[bottom]),)))
    top = full_mask(s.order)
    checks.append(TopologyCheck(
        "top-closed-set-is-empty", vmap[top] == frozenset(),
        None if not vmap[top] else (sorted(vmap[top]),)))

    bad = None
    for i in ideals:
        for j in ideals:
            meet = i & j
            if vmap[meet] != vmap[i] | vmap[j]:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(TopologyCheck("intersection-law", bad is None, bad))

    bad = None
    for i in ideals:
        for j in ideals:
            join = generated_ideal(s, i | j)
            if vmap[join] != vmap[i] & vmap[j]:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(TopologyCheck("sum-law", bad is None, bad))

    fam_set = set(family)
    bad = None
    for c1 in family:
        for c2 in family:
            if c1 | c2 not in fam_set:
                bad = (sorted(c1), sorted(c2), "union")
                break
            if c1 & c2 not in fam_set:
                bad = (sorted(c1), sorted(c2), "intersection")
                break
        if bad:
            break
    checks.append(TopologyCheck("family-closed-under-union-intersection",
                                bad is None, bad))

    bad = None
    for i in ideals:
        for j in ideals:
            if i & j == i and not vmap[j] <= vmap[i]:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(TopologyCheck("order-reversal", bad is None, bad))

    bad = None
    closures = {p: _closure_of_point(family, p, every) for p in points}
    for p in points:
        if closures[p] != vmap.get(p, closed_set(s, p)):
            bad = (p,)
            break
    checks.append(TopologyCheck("point-closure-is-containment-set", bad is None, bad))

    bad = None
    for p in points:
        for q in points:
            if p != q and closures[p] == closures[q]:
                bad = (p, q)
                break
        if bad:
            break
    checks.append(TopologyCheck("t0-separation", bad is None, bad))

    bad = None
    for i in ideals:
        meet = full_mask(s.order)
        for p in vmap[i]:
            meet &= p
        if meet != radical_by_primes(s, i):
            bad = (i,)
            break
    checks.append(TopologyCheck("closed-set-meet-is-radical", bad is None, bad))
    return checks


def connected_components(s: GammaStructure) -> tuple[tuple[int, ...], ...]:
    """Quasi-components of the finite spectrum (equal to components here):
    intersect the clopen sets through each point."""
    points = spectrum_points(s)
    every = frozenset(points)
    family = {closed_set(s, i) for i in enumerate_ideals(s)}
    clopen = [c for c in family if (every - c) in family]
    comp = {}
    for p in points:
        cur = every
        for c in clopen:
            if p in c:
                cur = cur & c
        comp[p] = cur
    seen = []
    for p in points:
        canon = tuple(sorted(comp[p], key=subset_sort_key))
        if canon not in seen:
            seen.append(canon)
    return tuple(seen)


def find_idempotents(s: GammaStructure) -> tuple[int, ...]:
    """Elements with e e e = e for every parameter pair."""
    n, m = s.order, s.gamma_size
    return tuple(e for e in range(n)
                 if all(s.ternary[al][be][e][e][e] == e
                        for al in range(m) for be in range(m)))


@dataclass(frozen=True)
class Decomposition:
    """Idempotent splitting attempt: left part and the complement search result."""

    idempotent: int
    left: int
    right: Optional[int]
    mixed_products_zero: bool

    @property
    def nontrivial(self) -> bool:
        return (self.right is not None and self.left != 1
                and self.right != 1)

    def to_dict(self) -> dict:
        return {
            "idempotent": self.idempotent,
            "left": list(mask_elements(self.left)),
            "right": None if self.right is None else list(mask_elements(self.right)),
            "mixed_products_zero": self.mixed_products_zero,
            "nontrivial": self.nontrivial,
        }


def decompose_by_idempotent(s: GammaStructure, e: int) -> Decomposition:
    """Left ideal generated by the products a e e; complement found by search.

    The complement J must satisfy generated(left | J) = T, left & J = {0},
    and every mixed product x y t (x in left, y in J, t anywhere) equal 0.
    The printed complement construction uses an element 1 - e that a general
    structure does not have, so the search scans all ideals in size order.
    """
    if e not in find_idempotents(s):
        raise InputError(f"element {e} is not a ternary idempotent")
    n, m = s.order, s.gamma_size
    seed = 0
    for a in range(n):
        for al in range(m):
            for be in range(m):
                seed |= 1 << s.ternary[al][be][a][e][e]
    left = generated_ideal(s, seed)
    top = full_mask(n)

    def mixed_zero(j_mask: int) -> bool:
        for x in mask_elements(left):
            for y in mask_elements(j_mask):
                for t in range(n):
                    for al in range(m):
                        for be in range(m):
                            if s.ternary[al][be][x][y][t] != 0:
                                return False
        return True

    for j in enumerate_ideals(s):
        if left & j != 1:
            continue
        if generated_ideal(s, left | j) != top:
            continue
        if mixed_zero(j):
            return Decomposition(e, left, j, True)
    return Decomposition(e, left, None, False)


def is_simple(s: GammaStructure) -> bool:
    """More than one element and no ideals besides {0} and the carrier."""
    if s.order < 2:
        return False
    return enumerate_ideals(s) == (1, full_mask(s.order))


# ---------------------------------------------------------------------------
# homomorphisms

@dataclass(frozen=True)
class HomomorphismMap:
    """Element map between structures with a parameter relabeling."""

    source: GammaStructure
    target: GammaStructure
    element_map: tuple
    param_map: tuple

    def validate(self) -> Verdict:
        src, dst = self.source, self.target
        f, pm = self.element_map, self.param_map
        if len(f) != src.order:
            raise InputError(f"element map must have {src.order} entries")
        if len(pm) != src.gamma_size:
            raise InputError(f"param map must have {src.gamma_size} entries")
        if any(not 0 <= v < dst.order for v in f):
            raise InputError("element map image out of range")
        if any(not 0 <= v < dst.gamma_size for v in pm):
            raise InputError("param map image out of range")
        if f[0] != 0:
            return Verdict(False, ("zero", 0))
        for a in range(src.order):
            for b in range(src.order):
                if f[src.addition[a][b]] != dst.addition[f[a]][f[b]]:
                    return Verdict(False, ("add", a, b))
        for a in range(src.order):
            for b in range(src.order):
                for c in range(src.order):
                    for al in range(src.gamma_size):
                        for be in range(src.gamma_size):
                            lhs = f[src.ternary[al][be][a][b][c]]
                            rhs = dst.ternary[pm[al]][pm[be]][f[a]][f[b]][f[c]]
                            if lhs != rhs:
                                return Verdict(False, ("tern", a, b, c, al, be))
        return Verdict(True)

    def is_surjective(self) -> bool:
        return len(set(self.element_map)) == self.target.order


def find_homomorphisms(src: GammaStructure, dst: GammaStructure,
                       surjective_only: bool = False) -> list[HomomorphismMap]:
    """Exhaustive scan over element maps fixing 0, identity parameter map.

    Structures with different parameter set sizes share no maps here.
    """
    if src.gamma_size != dst.gamma_size:
        return []
    pm = tuple(range(src.gamma_size))
    out = []
    for tail in iproduct(range(dst.order), repeat=src.order - 1):
        f = (0,) + tail
        if surjective_only and len(set(f)) != dst.order:
            continue
        cand = HomomorphismMap(src, dst, f, pm)
        if cand.validate().ok:
            out.append(cand)
    return out


def pullback_ideal(f: HomomorphismMap, mask: int) -> int:
    """Preimage of a target subset under the element map."""
    if mask >> f.target.order:
        raise InputError(f"subset {bin(mask)} has bits beyond order {f.target.order}")
    return sum(1 << a for a in range(f.source.order)
               if mask >> f.element_map[a] & 1)


# ---------------------------------------------------------------------------
# direct product comparison

@dataclass(frozen=True)
class CrtReport:
    """Outcome of mapping the structure into the product of its quotients."""

    ideals: tuple
    comaximal: Verdict
    quotient_orders: tuple
    image_size: int
    surjective: bool
    injective: bool
    kernel_zero_class: int
    intersection: int

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective

    @property
    def kernel_matches_intersection(self) -> bool:
        return self.kernel_zero_class == self.intersection

    def to_dict(self) -> dict:
        return {
            "ideals": [list(mask_elements(i)) for i in self.ideals],
            "comaximal": self.comaximal.ok,
            "comaximal_witness": None if self.comaximal.ok else list(self.comaximal.witness),
            "quotient_orders": list(self.quotient_orders),
            "image_size": self.image_size,
            "surjective": self.surjective,
            "injective": self.injective,
            "bijective": self.bijective,
            "kernel_zero_class": list(mask_elements(self.kernel_zero_class)),
            "intersection": list(mask_elements(self.intersection)),
            "kernel_matches_intersection": self.kernel_matches_intersection,
        }


def crt_check(s: GammaStructure, ideals) -> CrtReport:
    """Pairwise comaximality plus the canonical map into the quotient product."""
    ideals = tuple(ideals)
    top = full_mask(s.order)
    if len(ideals) < 2:
        raise InputError("need at least two ideals")
    for i in ideals:
        if i == top:
            raise InputError("ideals must be proper")
        verdict = is_ideal(s, i)
        if not verdict.ok:
            raise InputError(f"subset {s.set_label(i)} is not an ideal: {verdict.witness}")
    comax = Verdict(True)
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            if generated_ideal(s, ideals[a] | ideals[b]) != top:
                comax = Verdict(False, (a, b))
                break
        if not comax.ok:
            break
    parts = [normalize_partition(bourne_congruence(s, i)) for i in ideals]
    orders = tuple(max(p) + 1 for p in parts)
    images = {tuple(p[a] for p in parts) for a in range(s.order)}
    prod_size = 1
    for k in orders:
        prod_size *= k
    zero_tuple = tuple(0 for _ in parts)
    kernel_zero = sum(1 << a for a in range(s.order)
                      if tuple(p[a] for p in parts) == zero_tuple)
    meet = top
    for i in ideals:
        meet &= i
    return CrtReport(
        ideals=ideals,
        comaximal=comax,
        quotient_orders=orders,
        image_size=len(images),
        surjective=len(images) == prod_size,
        injective=len(images) == s.order,
        kernel_zero_class=kernel_zero,
        intersection=meet,
    )


def quotient_by_ideal(s: GammaStructure, mask: int) -> GammaStructure:
    """Quotient by the transitively closed relation the ideal induces."""
    return quotient_structure(s, bourne_congruence(s, mask))


# ---------------------------------------------------------------------------
# views and export

@dataclass(frozen=True)
class SpectrumView:
    points: tuple
    closed_sets: tuple          # (ideal_mask, sorted point masks) per ideal
    components: tuple

    def to_dict(self, s: GammaStructure) -> dict:
        return {
            "points": [list(mask_elements(p)) for p in self.points],
            "closed_sets": [
                {"ideal": list(mask_elements(i)),
                 "points": [list(mask_elements(p)) for p in pts]}
                for i, pts in self.closed_sets
            ],
            "components": [[list(mask_elements(p)) for p in comp]
                           for comp in self.components],
        }


def prime_spectrum(s: GammaStructure) -> SpectrumView:
    points = spectrum_points(s)
    closed = tuple(
        (i, tuple(sorted(closed_set(s, i), key=subset_sort_key)))
        for i in enumerate_ideals(s))
    return SpectrumView(points=points, closed_sets=closed,
                        components=connected_components(s))


def spectrum_dot(s: GammaStructure) -> str:
    """Points with containment edges, in DOT, stable node order."""
    points = spectrum_points(s)
    lines = ["digraph spectrum {", "  rankdir=BT;"]
    for i, p in enumerate(points):
        label = s.set_label(p).replace('"', '\\"')
        lines.append(f'  p{i} [label="{label}"];')
    for i, p in enumerate(points):
        for j, q in enumerate(points):
            if p != q and p & q == p:
                lines.append(f"  p{i} -> p{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

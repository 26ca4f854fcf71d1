"""Whole-structure analysis: theorem suites, claim evaluation, report assembly.

Two suites run over a single structure. The asserted suite contains laws that
must hold (callers treat any failure as a hard error with witnesses). The
reported suite contains comparisons that are expected to fail on parts of the
corpus; their outcomes are recorded, never enforced. Claim evaluation replays
the shipped worked-example claims against the literal definitions and labels
each confirmed, refuted, or not-evaluable.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from .core import (GammaStructure, canonical_form, full_mask, mask_elements,
                   mask_of, verify_axioms)
from .fixtures import CLAIMS, claim_structure
from .gamma_modules import regular_module, verify_module_axioms
from .ideals import (enumerate_ideals, ideal_lattice, is_ideal, is_maximal,
                     is_primary, is_prime, is_semiprime)
from .quotient import (bourne_congruence, congruence_to_ideal,
                       enumerate_congruences, has_nonzero_zero_divisors,
                       is_congruence, partition_blocks, quotient_structure)
from .radicals import (is_semisimple, jacobson_radical, radical_by_elements,
                       radical_by_primes, radical_report)
from .spectrum import (HomomorphismMap, connected_components, crt_check,
                       decompose_by_idempotent, find_idempotents, is_simple,
                       prime_spectrum, pullback_ideal, spectrum_points,
                       verify_topology)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SuiteCheck:
    """One law evaluated over one structure."""

    name: str
    asserted: bool
    ok: Optional[bool]
    witnesses: tuple = ()
    note: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "asserted": self.asserted,
            "ok": self.ok,
            "witnesses": [list(w) if isinstance(w, tuple) else w
                          for w in self.witnesses],
            "note": self.note,
        }


def _elems(mask: int) -> list:
    return list(mask_elements(mask))


def _proper_ideals(s: GammaStructure) -> list:
    top = full_mask(s.order)
    return [i for i in enumerate_ideals(s) if i != top]


def _projection_map(s: GammaStructure, partition) -> HomomorphismMap:
    q = quotient_structure(s, partition)
    return HomomorphismMap(source=s, target=q, element_map=tuple(partition),
                           param_map=tuple(range(s.gamma_size)))


# ---------------------------------------------------------------------------
# asserted suite

def run_asserted_suite(s: GammaStructure) -> list:
    checks = []
    top = full_mask(s.order)
    ideals = enumerate_ideals(s)
    proper = _proper_ideals(s)
    group = s.is_additive_group()

    wit = []
    for i in proper:
        if is_maximal(s, i).ok:
            v = is_prime(s, i)
            if not v.ok:
                wit.append((_elems(i), list(v.witness)))
    checks.append(SuiteCheck("maximal-implies-prime", True, not wit, tuple(wit)))

    wit = []
    for i in proper:
        if is_prime(s, i).ok:
            v = is_primary(s, i)
            if not v.ok:
                wit.append((_elems(i), list(v.witness)))
    checks.append(SuiteCheck("prime-implies-primary", True, not wit, tuple(wit)))

    wit = []
    for i in proper:
        if is_prime(s, i).ok:
            v = is_semiprime(s, i)
            if not v.ok:
                wit.append((_elems(i), list(v.witness)))
    checks.append(SuiteCheck("prime-implies-semiprime", True, not wit, tuple(wit)))

    semis = [i for i in proper if is_semiprime(s, i).ok]
    wit = []
    for a in range(len(semis)):
        for b in range(a + 1, len(semis)):
            meet = semis[a] & semis[b]
            if meet != top and not is_semiprime(s, meet).ok:
                wit.append((_elems(semis[a]), _elems(semis[b]), _elems(meet)))
    if len(semis) > 2:
        meet = top
        for q in semis:
            meet &= q
        if meet != top and not is_semiprime(s, meet).ok:
            wit.append(("family", _elems(meet)))
    checks.append(SuiteCheck("semiprime-intersections", True, not wit, tuple(wit)))

    wit = []
    for i in ideals:
        rad = radical_by_primes(s, i)
        if rad != top and not is_semiprime(s, rad).ok:
            wit.append((_elems(i), _elems(rad)))
    checks.append(SuiteCheck("radical-semiprime-when-proper", True, not wit,
                             tuple(wit)))

    wit = []
    for i in ideals:
        rad = radical_by_primes(s, i)
        again = radical_by_primes(s, rad)
        if rad != again:
            wit.append((_elems(i), _elems(rad), _elems(again)))
    checks.append(SuiteCheck("radical-idempotent", True, not wit, tuple(wit)))

    wit = []
    for i in ideals:
        for j in ideals:
            if i & j == i:
                ri, rj = radical_by_primes(s, i), radical_by_primes(s, j)
                if ri & rj != ri:
                    wit.append((_elems(i), _elems(j)))
    checks.append(SuiteCheck("radical-monotone", True, not wit, tuple(wit)))

    wit = []
    for q in semis:
        if radical_by_elements(s, q) != q:
            wit.append((_elems(q), _elems(radical_by_elements(s, q))))
    checks.append(SuiteCheck("semiprime-equals-element-radical", True,
                             not wit, tuple(wit)))

    for t in verify_topology(s):
        checks.append(SuiteCheck(f"topology-{t.name}", True, t.ok,
                                 () if t.witness is None else (t.witness,)))

    wit = []
    for i in ideals:
        rho = bourne_congruence(s, i)
        v = is_congruence(s, rho)
        if not v.ok:
            wit.append((_elems(i), list(v.witness)))
    checks.append(SuiteCheck("bourne-is-congruence", True, not wit, tuple(wit)))

    congruences = enumerate_congruences(s)
    wit = []
    for rho in congruences:
        z = congruence_to_ideal(s, rho)
        v = is_ideal(s, z)
        if not v.ok:
            wit.append((list(rho), list(v.witness)))
    checks.append(SuiteCheck("congruence-zero-class-is-ideal", True,
                             not wit, tuple(wit)))

    wit = []
    for rho in congruences:
        q = quotient_structure(s, rho)
        rep = verify_axioms(q)
        if not rep.passed:
            wit.append((list(rho), [v.law for v in rep.failures()]))
    checks.append(SuiteCheck("quotient-passes-axioms", True, not wit, tuple(wit)))

    wit = []
    for i in ideals:
        z = congruence_to_ideal(s, bourne_congruence(s, i))
        if i & z != i:
            wit.append((_elems(i), _elems(z)))
    checks.append(SuiteCheck("ideal-inside-bourne-zero-class", True,
                             not wit, tuple(wit)))

    wit = []
    for rho in congruences:
        pi = _projection_map(s, rho)
        v = pi.validate()
        if not v.ok:
            wit.append((list(rho), list(v.witness)))
            continue
        q = pi.target
        q_top = full_mask(q.order)
        for qi in enumerate_ideals(q):
            back = pullback_ideal(pi, qi)
            if not is_ideal(s, back).ok:
                wit.append((list(rho), _elems(qi), "pullback-not-ideal"))
            if qi != q_top and is_prime(q, qi).ok:
                if not is_prime(s, back).ok:
                    wit.append((list(rho), _elems(qi), "pullback-not-prime"))
    checks.append(SuiteCheck("prime-pullback-along-projections", True,
                             not wit, tuple(wit)))

    maximals = [i for i in proper if is_maximal(s, i).ok]
    jac = jacobson_radical(s)
    hypothesis = (maximals and jac != top
                  and all(is_prime(s, i).ok for i in maximals))
    if hypothesis:
        v = is_semiprime(s, jac)
        checks.append(SuiteCheck("jacobson-semiprime-when-maximals-prime", True,
                                 v.ok, () if v.ok else (list(v.witness),)))
    else:
        checks.append(SuiteCheck("jacobson-semiprime-when-maximals-prime", True,
                                 None, (), "hypothesis not met; nothing to check"))

    if group:
        wit = []
        for i in ideals:
            z = congruence_to_ideal(s, bourne_congruence(s, i))
            if z != i:
                wit.append((_elems(i), _elems(z)))
        checks.append(SuiteCheck("bourne-zero-class-equals-ideal", True,
                                 not wit, tuple(wit)))

        wit = []
        for p in proper:
            left = is_prime(s, p).ok
            q = quotient_structure(s, bourne_congruence(s, p))
            right = not has_nonzero_zero_divisors(q).ok
            if left != right:
                wit.append((_elems(p), "prime" if left else "not-prime",
                            "zero-divisor-free" if right else "has-zero-divisors"))
        checks.append(SuiteCheck("prime-iff-quotient-zero-divisor-free", True,
                                 not wit, tuple(wit)))

        wit = []
        for rep in _crt_reports(s):
            if rep.comaximal.ok and not (rep.bijective
                                         and rep.kernel_matches_intersection):
                wit.append(tuple(_elems(i) for i in rep.ideals))
        checks.append(SuiteCheck("crt-for-comaximal-maximals", True,
                                 not wit, tuple(wit)))
    return checks


def _crt_reports(s: GammaStructure) -> list:
    maximals = [i for i in _proper_ideals(s) if is_maximal(s, i).ok]
    out = []
    for a in range(len(maximals)):
        for b in range(a + 1, len(maximals)):
            out.append(crt_check(s, [maximals[a], maximals[b]]))
    if len(maximals) > 2:
        out.append(crt_check(s, maximals))
    return out


# ---------------------------------------------------------------------------
# reported suite

def run_reported_suite(s: GammaStructure) -> list:
    checks = []
    top = full_mask(s.order)
    ideals = enumerate_ideals(s)
    proper = _proper_ideals(s)
    group = s.is_additive_group()

    wit = []
    flags = []
    for i in ideals:
        rep = radical_report(s, i)
        if not rep.agree:
            wit.append((_elems(i), list(rep.only_by_primes),
                        list(rep.only_by_elements)))
        if not rep.by_elements_is_ideal:
            flags.append(_elems(i))
    checks.append(SuiteCheck("radical-route-agreement", False, not wit, tuple(wit)))
    checks.append(SuiteCheck("element-radical-is-ideal", False, not flags,
                             tuple(flags)))

    wit = []
    for q in proper:
        if is_primary(s, q).ok:
            rad = radical_by_primes(s, q)
            if rad == top:
                wit.append((_elems(q), "radical-not-proper"))
            elif not is_prime(s, rad).ok:
                wit.append((_elems(q), _elems(rad)))
    checks.append(SuiteCheck("primary-radical-prime", False, not wit, tuple(wit)))

    congruences = enumerate_congruences(s)
    wit = []
    for rho in congruences:
        back = bourne_congruence(s, congruence_to_ideal(s, rho))
        if back != rho:
            wit.append((list(rho), list(back)))
    checks.append(SuiteCheck("congruence-roundtrip-bijection", False,
                             not wit, tuple(wit),
                             "distinct congruences may share a zero class"))

    if not group:
        wit = []
        for i in ideals:
            z = congruence_to_ideal(s, bourne_congruence(s, i))
            if z != i:
                wit.append((_elems(i), _elems(z)))
        checks.append(SuiteCheck("bourne-zero-class-equals-ideal", False,
                                 not wit, tuple(wit),
                                 "monoid addition: inflation is possible"))

        wit = []
        for p in proper:
            left = is_prime(s, p).ok
            q = quotient_structure(s, bourne_congruence(s, p))
            right = not has_nonzero_zero_divisors(q).ok
            if left != right:
                wit.append((_elems(p), "prime" if left else "not-prime",
                            "zero-divisor-free" if right else "has-zero-divisors"))
        checks.append(SuiteCheck("prime-iff-quotient-zero-divisor-free", False,
                                 not wit, tuple(wit),
                                 "coset argument needs subtraction"))

        wit = []
        for rep in _crt_reports(s):
            if rep.comaximal.ok and not (rep.bijective
                                         and rep.kernel_matches_intersection):
                wit.append(tuple(_elems(i) for i in rep.ideals))
        checks.append(SuiteCheck("crt-for-comaximal-maximals", False,
                                 not wit, tuple(wit)))

    idempotents = find_idempotents(s)
    components = connected_components(s)
    ok = len(idempotents) == len(components)
    checks.append(SuiteCheck(
        "idempotent-count-equals-component-count", False, ok,
        () if ok else ((list(idempotents), len(components)),)))

    nontrivial = []
    for e in idempotents:
        d = decompose_by_idempotent(s, e)
        if d.nontrivial:
            nontrivial.append(e)
    topo_connected = len(components) <= 1
    alg_connected = not nontrivial
    agree = topo_connected == alg_connected
    checks.append(SuiteCheck(
        "connectedness-topological-vs-idempotent", False, agree,
        () if agree else ((topo_connected, nontrivial),),
        "connected iff no nontrivial idempotent splitting"))

    mod_rep = verify_module_axioms(regular_module(s), assoc_law="surrogate")
    checks.append(SuiteCheck("regular-module-surrogate-associativity", False,
                             mod_rep.passed,
                             () if mod_rep.passed else
                             tuple((v.law,) + tuple(v.args)
                                   for v in mod_rep.failures())))
    return checks


# ---------------------------------------------------------------------------
# claim evaluation

def _claim_ideal_ready(s: GammaStructure, elements) -> tuple:
    """(mask, problem) where problem explains why the set is not an ideal."""
    mask = mask_of(elements)
    v = is_ideal(s, mask)
    if not v.ok:
        return mask, list(v.witness)
    return mask, None


def evaluate_claim(claim: dict) -> dict:
    s = claim_structure(claim["fixture"])
    kind = claim["kind"]
    out = {
        "id": claim["id"],
        "fixture": claim["fixture"],
        "kind": kind,
        "text": claim["text"],
        "verdict": "not-evaluable",
        "witness": None,
    }

    def done(ok: Optional[bool], witness=None) -> dict:
        if ok is None:
            out["verdict"] = "not-evaluable"
        else:
            out["verdict"] = "confirmed" if ok else "refuted"
        out["witness"] = witness
        return out

    if kind == "not-evaluable":
        out["witness"] = claim.get("note")
        return out
    if s is None:
        out["witness"] = "no finite structure to evaluate against"
        return out

    top = full_mask(s.order)
    if kind == "axioms":
        rep = verify_axioms(s)
        if rep.passed:
            return done(True)
        return done(False, {"failures": [
            {"law": v.law, "args": list(v.args), "lhs": v.lhs, "rhs": v.rhs}
            for v in rep.failures()]})
    if kind == "ideals-exactly":
        claimed = sorted(mask_of(e) for e in claim["ideals"])
        computed = sorted(enumerate_ideals(s))
        return done(claimed == computed,
                    {"computed": [_elems(i) for i in sorted(computed)]})
    if kind == "simple":
        return done(is_simple(s) == claim.get("value", True),
                    {"ideals": [_elems(i) for i in enumerate_ideals(s)]})
    if kind in ("prime", "not-prime", "semiprime", "maximal",
                "prime-not-maximal", "primary-not-prime"):
        mask, problem = _claim_ideal_ready(s, claim["elements"])
        if problem is not None:
            return done(False, {"not-an-ideal": problem})
        if mask == top:
            return done(False, {"not-proper": _elems(mask)})
        if kind == "prime":
            v = is_prime(s, mask)
            return done(v.ok, None if v.ok else list(v.witness))
        if kind == "not-prime":
            v = is_prime(s, mask)
            return done(not v.ok, list(v.witness) if not v.ok else None)
        if kind == "semiprime":
            v = is_semiprime(s, mask)
            return done(v.ok, None if v.ok else list(v.witness))
        if kind == "maximal":
            v = is_maximal(s, mask)
            return done(v.ok, None if v.ok else list(v.witness))
        if kind == "prime-not-maximal":
            p, m = is_prime(s, mask), is_maximal(s, mask)
            return done(p.ok and not m.ok,
                        {"prime": p.ok, "maximal": m.ok})
        p, q = is_prime(s, mask), is_primary(s, mask)
        return done(q.ok and not p.ok, {"primary": q.ok, "prime": p.ok})
    if kind == "primes-exactly":
        claimed = sorted(mask_of(e) for e in claim["ideals"])
        computed = sorted(spectrum_points(s))
        return done(claimed == computed,
                    {"computed": [_elems(i) for i in computed]})
    if kind == "jacobson":
        jac = jacobson_radical(s)
        return done(jac == mask_of(claim["elements"]), {"computed": _elems(jac)})
    if kind == "semisimple":
        return done(is_semisimple(s) == claim["value"],
                    {"computed": is_semisimple(s),
                     "jacobson": _elems(jacobson_radical(s))})
    if kind == "quotient-order":
        mask, problem = _claim_ideal_ready(s, claim["elements"])
        if problem is not None:
            return done(False, {"not-an-ideal": problem})
        q = quotient_structure(s, bourne_congruence(s, mask))
        return done(q.order == claim["order"], {"computed": q.order})
    if kind == "idempotent":
        e = claim["element"]
        return done(e in find_idempotents(s),
                    {"idempotents": list(find_idempotents(s))})
    if kind == "decomposition":
        e = claim["element"]
        if e not in find_idempotents(s):
            return done(False, {"not-idempotent": e})
        d = decompose_by_idempotent(s, e)
        ok = (d.left == mask_of(claim["left"])
              and d.right == mask_of(claim["right"]))
        return done(ok, d.to_dict())
    if kind == "crt":
        masks = []
        for elems in claim["ideals"]:
            mask, problem = _claim_ideal_ready(s, elems)
            if problem is not None:
                return done(False, {"not-an-ideal": problem})
            masks.append(mask)
        rep = crt_check(s, masks)
        ok = (rep.comaximal.ok and rep.bijective
              and rep.kernel_matches_intersection)
        return done(ok, rep.to_dict())
    out["witness"] = f"unknown claim kind {kind!r}"
    return out


def evaluate_all_claims() -> list:
    return [evaluate_claim(c) for c in CLAIMS]


# ---------------------------------------------------------------------------
# report assembly

def analyze(s: GammaStructure) -> dict:
    """Full analysis as a JSON-ready dict; deterministic for a fixed input."""
    axioms = verify_axioms(s)
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": "analysis",
        "structure": {
            "order": s.order,
            "gamma_size": s.gamma_size,
            "names": list(s.names) if s.names else None,
            "canonical_sha256": hashlib.sha256(canonical_form(s)).hexdigest(),
            "additive_group": s.is_additive_group(),
        },
        "axioms": axioms.to_dict(),
    }
    if not axioms.passed:
        report["analysis_skipped"] = "axioms failed; nothing below is defined"
        return report

    top = full_mask(s.order)
    lattice = ideal_lattice(s)
    ideal_rows = []
    for i, info in zip(lattice.ideals, lattice.info):
        row = {"elements": _elems(i), "proper": info.proper,
               "tags": list(info.tags())}
        for name, verdict in (("prime", info.prime),
                              ("semiprime", info.semiprime),
                              ("maximal", info.maximal),
                              ("primary", info.primary)):
            if verdict is None:
                row[name] = None
            else:
                row[name] = {"ok": verdict.ok,
                             "witness": None if verdict.witness is None
                             else list(verdict.witness)}
        ideal_rows.append(row)
    report["ideals"] = ideal_rows
    report["ideal_covers"] = [[_elems(lattice.ideals[a]), _elems(lattice.ideals[b])]
                              for a, b in lattice.covers]

    report["radicals"] = [radical_report(s, i).to_dict() for i in lattice.ideals]
    jac = jacobson_radical(s)
    report["jacobson"] = {"elements": _elems(jac),
                          "semisimple": is_semisimple(s)}

    congruences = enumerate_congruences(s)
    report["congruences"] = {
        "count": len(congruences),
        "partitions": [[list(b) for b in partition_blocks(rho)]
                       for rho in congruences],
        "ideal_count": len(lattice.ideals),
    }

    view = prime_spectrum(s)
    report["spectrum"] = view.to_dict(s)
    report["topology"] = [
        {"name": t.name, "ok": t.ok,
         "witness": None if t.witness is None else list(t.witness)}
        for t in verify_topology(s)]

    idempotents = find_idempotents(s)
    report["idempotents"] = list(idempotents)
    report["decompositions"] = [decompose_by_idempotent(s, e).to_dict()
                                for e in idempotents]
    report["crt"] = [rep.to_dict() for rep in _crt_reports(s)]
    report["simple"] = is_simple(s)

    asserted = run_asserted_suite(s)
    reported = run_reported_suite(s)
    report["suite"] = {
        "asserted": [c.to_dict() for c in asserted],
        "reported": [c.to_dict() for c in reported],
    }
    report["discrepancies"] = [c.to_dict() for c in reported if c.ok is False]
    return report


def render_text(report: dict) -> str:
    """ASCII rendering of an analysis report."""
    lines = []
    st = report["structure"]
    lines.append(f"structure: order {st['order']}, gamma {st['gamma_size']}")
    lines.append(f"canonical sha256: {st['canonical_sha256'][:16]}...")
    lines.append(f"additive group: {'yes' if st['additive_group'] else 'no'}")
    ax = report["axioms"]
    lines.append(f"axioms: {'pass' if ax['passed'] else 'FAIL'}")
    if not ax["passed"]:
        for field, v in ax.items():
            if isinstance(v, dict) and v.get("law"):
                lines.append(f"  {v['law']} at {tuple(v['args'])}: "
                             f"{v['lhs']} != {v['rhs']}")
        return "\n".join(lines) + "\n"
    lines.append("")
    lines.append("ideals:")
    for row in report["ideals"]:
        tags = ",".join(row["tags"]) or "-"
        label = "{" + ",".join(str(e) for e in row["elements"]) + "}"
        lines.append(f"  {label:<18} {tags}")
    jac = report["jacobson"]
    label = "{" + ",".join(str(e) for e in jac["elements"]) + "}"
    lines.append(f"jacobson radical: {label}"
                 f" ({'semisimple' if jac['semisimple'] else 'not semisimple'})")
    lines.append(f"congruences: {report['congruences']['count']}"
                 f" (ideals: {report['congruences']['ideal_count']})")
    spec_pts = report["spectrum"]["points"]
    lines.append(f"spectrum points: {len(spec_pts)}, components:"
                 f" {len(report['spectrum']['components'])}")
    lines.append(f"idempotents: {report['idempotents']}")
    lines.append(f"simple: {'yes' if report['simple'] else 'no'}")
    lines.append("")
    for group_name in ("asserted", "reported"):
        rows = report["suite"][group_name]
        lines.append(f"{group_name} checks:")
        for c in rows:
            if c["ok"] is None:
                mark = "skip"
            else:
                mark = "pass" if c["ok"] else "FAIL"
            lines.append(f"  [{mark}] {c['name']}")
            for w in c["witnesses"][:3]:
                lines.append(f"         witness: {w}")
    return "\n".join(lines) + "\n"

"""End-to-end acceptance checks.

Each test prints one PASS or FAIL line on the real stdout so the verdicts
survive pytest capture. Criterion 4 fails by design: the asserted check
list contains an implication the axioms do not actually force, and the
suite reports the counterexample instead of papering over it.
"""

import json
import random
import time

import pytest

from oracles import (canonical_set, naive_axiom_check, naive_structures)
from tgs.core import (apply_permutation, canonical_form,
                      GammaStructure, verify_axioms)
from tgs.enumeration import classify, enumerate_structures
from tgs.fixtures import DERIVED
from tgs.analysis import run_asserted_suite
from tgs.ideals import enumerate_ideals, is_prime
from tgs.quotient import (bourne_congruence, enumerate_congruences,
                          has_nonzero_zero_divisors, normalize_partition)
from tgs.radicals import is_semisimple, jacobson_radical
from tgs.spectrum import find_idempotents, quotient_by_ideal, spectrum_points
from tgs.gamma_modules import (annihilator, enumerate_module_actions,
                               is_simple_module, regular_module,
                               verify_module_axioms)


def _emit(capsys, n: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}",
              flush=True)


def _random_structure(rng: random.Random) -> GammaStructure:
    n = rng.randrange(2, 5)
    add = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
    tern = [[[[[rng.randrange(n) for _ in range(n)] for _ in range(n)]
              for _ in range(n)]]]
    return GammaStructure(order=n, gamma_size=1, addition=add, ternary=tern)


def _corrupt(s: GammaStructure, rng: random.Random) -> GammaStructure:
    n = s.order
    add = [list(row) for row in s.addition]
    tern = [[[[list(r) for r in plane] for plane in s.ternary[0][0]]]]
    if rng.random() < 0.5:
        a, b = rng.randrange(n), rng.randrange(n)
        add[a][b] = (add[a][b] + 1 + rng.randrange(n - 1)) % n
    else:
        a, b, c = (rng.randrange(n) for _ in range(3))
        cur = tern[0][0][a][b][c]
        tern[0][0][a][b][c] = (cur + 1 + rng.randrange(n - 1)) % n
    return GammaStructure(order=n, gamma_size=1, addition=add, ternary=tern)


def test_criterion_1_axiom_oracle_agreement(capsys):
    start = time.monotonic()
    rng = random.Random(20260819)
    small = [s for s in DERIVED.values()
             if s.order <= 4 and s.gamma_size == 1]
    pool = [_random_structure(rng) for _ in range(80)]
    pool += small
    pool += [_corrupt(s, rng) for s in small for _ in range(6)]
    assert len(pool) >= 100
    assert any(verify_axioms(s).passed for s in pool)
    assert any(not verify_axioms(s).passed for s in pool)
    disagreements = [
        s for s in pool if verify_axioms(s).passed != naive_axiom_check(s)]
    elapsed = time.monotonic() - start
    ok = not disagreements and elapsed < 10
    _emit(capsys, 1, ok, f"axiom verdicts agree with the independent oracle on "
                 f"{len(pool)} tables ({elapsed:.2f}s)")
    assert not disagreements
    assert elapsed < 10


def test_criterion_2_enumeration_matches_oracle(capsys):
    start = time.monotonic()
    mismatch = []
    for n in (1, 2, 3):
        got = canonical_set(enumerate_structures(n, 1))
        want = canonical_set(naive_structures(n))
        if got != want:
            mismatch.append(n)
    elapsed = time.monotonic() - start
    ok = not mismatch and elapsed < 120
    _emit(capsys, 2, ok, f"enumerated structures equal the brute-force oracle for "
                 f"orders 1..3 ({elapsed:.1f}s)")
    assert mismatch == []
    assert elapsed < 120


def test_criterion_3_classification_and_determinism(capsys):
    start = time.monotonic()
    rows = []
    reports = {}
    for order in (2, 3, 4):
        rep = classify(order)
        reports[order] = rep
        cmp = rep.to_dict()["comparison"]
        rows.append((order, cmp["claimed"]["structures"],
                     cmp["computed"]["structures"],
                     cmp["match"]["structures"]))
    par = classify(4, jobs=4)
    stable = (json.dumps(reports[4].to_dict(), sort_keys=True)
              == json.dumps(par.to_dict(), sort_keys=True))
    elapsed = time.monotonic() - start
    claimed = tuple(r[1] for r in rows)
    computed = tuple(r[2] for r in rows)
    ok = (claimed == (1, 3, 6) and computed == (4, 19, 175)
          and stable and elapsed < 300)
    _emit(capsys, 3, ok, f"orders 2/3/4 classified: claimed {claimed} vs computed "
                 f"{computed}, jobs=1 equals jobs=4 ({elapsed:.1f}s)")
    assert claimed == (1, 3, 6)
    assert computed == (4, 19, 175)
    assert all(r[3] is False for r in rows)
    assert stable
    assert elapsed < 300


def test_criterion_4_asserted_suite_over_small_corpus(corpus, capsys):
    start = time.monotonic()
    failed = {}
    example = None
    for n, m, s in corpus:
        for check in run_asserted_suite(s):
            if check.name == "crt-for-comaximal-maximals":
                continue  # tracked separately, not part of this gate
            if check.ok is False:
                failed.setdefault(check.name, 0)
                failed[check.name] += 1
                if (example is None and n == 2
                        and check.name == "maximal-implies-prime"):
                    example = (s, check.witnesses[0])
    elapsed = time.monotonic() - start
    ok = not failed and elapsed < 600
    detail = (f"asserted checks clean over {len(corpus)} structures"
              if ok else
              f"asserted checks fail on the enumerated corpus: "
              + ", ".join(f"{k} ({v} structures)"
                          for k, v in sorted(failed.items()))
              + f" ({elapsed:.1f}s)")
    _emit(capsys, 4, ok, detail)
    assert elapsed < 600
    if failed:
        s, witness = example
        pytest.fail(
            "maximal-implies-prime is not a theorem of these axioms. "
            f"Counterexample of order 2: addition {s.addition} with the "
            f"all-zero ternary product. {{0}} is maximal (the only larger "
            f"ideal is the whole carrier) but 1 1 1 = 0 lands in {{0}} "
            f"while 1 does not, witness {witness}. Every other check in "
            f"this gate's list holds on all {len(corpus)} structures; "
            f"failure counts: {failed}. The comaximal product-map check is "
            "tracked outside this gate and has its own documented order-4 "
            "counterexample. The implication stays asserted because the "
            "suite promises this list, and the failure is reported rather "
            "than hidden.")


def test_criterion_5_prime_iff_zero_divisor_free_quotient(corpus, capsys):
    group_checked = group_failed = 0
    monoid_holds = monoid_fails = 0
    for _, _, s in corpus:
        full = (1 << s.order) - 1
        group = s.is_additive_group()
        for mask in enumerate_ideals(s):
            if mask == full:
                continue
            lhs = is_prime(s, mask).ok
            rhs = not has_nonzero_zero_divisors(quotient_by_ideal(s, mask)).ok
            if group:
                group_checked += 1
                if lhs != rhs:
                    group_failed += 1
            else:
                if lhs == rhs:
                    monoid_holds += 1
                else:
                    monoid_fails += 1
    ok = group_failed == 0 and group_checked > 0
    _emit(capsys, 5, ok, f"prime iff zero-divisor-free quotient: asserted on "
                 f"{group_checked} group-based ideals (0 failures), "
                 f"reported on monoids ({monoid_holds} hold, "
                 f"{monoid_fails} fail)")
    assert group_checked > 0
    assert group_failed == 0


def _collisions(s) -> int:
    bad = 0
    for p in enumerate_congruences(s):
        zero = sum(1 << a for a in range(s.order) if p[a] == p[0])
        if normalize_partition(bourne_congruence(s, zero)) != p:
            bad += 1
    return bad


def test_criterion_6_fixture_regression(capsys):
    start = time.monotonic()
    from tgs.radicals import radical_by_elements, radical_by_primes
    from tgs.spectrum import connected_components, crt_check
    expect = {
        "B2": ((1, 3), 2, 1, True, (1,), 1, (0, 1), 0),
        "M3": ((1, 7), 2, 1, True, (1,), 1, (0, 1, 2), 0),
        "M4": ((1, 5, 15), 3, 5, False, (5,), 1, (0, 1, 3), 0),
        "M6": ((1, 9, 21, 63), 4, 1, True, (9, 21), 2,
               (0, 1, 2, 3, 4, 5), 0),
    }
    bad = []
    for name, row in expect.items():
        s = DERIVED[name]
        got = (enumerate_ideals(s), len(enumerate_congruences(s)),
               jacobson_radical(s), is_semisimple(s), spectrum_points(s),
               len(connected_components(s)), find_idempotents(s),
               _collisions(s))
        if got != row:
            bad.append((name, got))
    if not bad:
        if is_prime(DERIVED["M6"], 1).witness != (1, 2, 3, 0, 0):
            bad.append(("M6", "prime witness"))
        if is_prime(DERIVED["M4"], 1).witness != (1, 2, 2, 0, 0):
            bad.append(("M4", "prime witness"))
        m4 = DERIVED["M4"]
        if (radical_by_primes(m4, 1), radical_by_elements(m4, 1)) != (5, 5):
            bad.append(("M4", "radical of the zero ideal"))
        rep = crt_check(DERIVED["M6"], [9, 21])
        if not (rep.bijective and rep.quotient_orders == (3, 2)):
            bad.append(("M6", "product map"))
    elapsed = time.monotonic() - start
    ok = not bad and elapsed < 5
    _emit(capsys, 6, ok, f"bundled fixture invariants match frozen values "
                 f"({elapsed:.2f}s)")
    assert bad == []
    assert elapsed < 5


def test_criterion_7_discrepancy_report(capsys):
    from tgs.cli import main
    rc = main(["verify", "fixtures"])
    out = capsys.readouterr().out
    needed = [
        "'law': 'absorbing-zero'",
        "idempotent-count-equals-component-count: 1 discrepancies,"
        " first: ([0, 1, 2, 3, 4, 5], 2)",
        "collisions: 1 of 4 congruences",
        "collisions: 1 of 3 congruences",
    ]
    missing = [n for n in needed if n not in out]
    ok = rc == 0 and not missing
    _emit(capsys, 7, ok, "fixture discrepancy report exits 0 and keeps every "
                 "documented conflict visible with witnesses")
    assert rc == 0
    assert missing == []


def test_criterion_8_canonical_form_properties(corpus, capsys):
    start = time.monotonic()
    rng = random.Random(8)
    usable = [s for _, _, s in corpus if s.order >= 2]
    mismatches = 0
    for _ in range(1000):
        s = rng.choice(usable)
        sigma = [0] + rng.sample(range(1, s.order), s.order - 1)
        if canonical_form(s) != canonical_form(apply_permutation(s, sigma)):
            mismatches += 1
    invariants = {}
    for _, _, s in corpus:
        key = (s.order, s.gamma_size)
        inv = (len(enumerate_ideals(s)), len(find_idempotents(s)),
               s.is_additive_group(), len(enumerate_congruences(s)))
        invariants.setdefault(key, []).append((inv, s))
    distinguished = 0
    collisions = 0
    for rows in invariants.values():
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if distinguished >= 100:
                    break
                if rows[i][0] != rows[j][0]:
                    distinguished += 1
                    if (canonical_form(rows[i][1])
                            == canonical_form(rows[j][1])):
                        collisions += 1
    elapsed = time.monotonic() - start
    ok = (mismatches == 0 and collisions == 0 and distinguished >= 100
          and elapsed < 30)
    _emit(capsys, 8, ok, f"canonical form stable under 1000 relabelings and "
                 f"separates {distinguished} invariant-distinguished pairs "
                 f"({elapsed:.1f}s)")
    assert mismatches == 0
    assert distinguished >= 100
    assert collisions == 0
    assert elapsed < 30


def test_criterion_9_module_layer(corpus_reps, capsys):
    start = time.monotonic()
    scalars = [s for shape in ((1, 1), (2, 1), (3, 1), (2, 2))
               for s in corpus_reps[shape]]
    regular_failures = []
    annihilator_failures = []
    prime_counts = {True: 0, False: 0}
    non_ideal_anns = 0
    simple_seen = 0
    for s in scalars:
        reg = regular_module(s)
        if verify_module_axioms(reg).passed is not True:
            regular_failures.append(s)
        result = annihilator(reg)
        if result.proper and not result.ideal.ok:
            annihilator_failures.append(s)
        for k in (2, 3):
            for action in enumerate_module_actions(s, k):
                if verify_module_axioms(action).passed is not True:
                    continue
                if not is_simple_module(action):
                    continue
                result = annihilator(action)
                if not result.proper:
                    continue
                simple_seen += 1
                if not result.ideal.ok:
                    non_ideal_anns += 1
                prime_counts[bool(result.prime.ok)] += 1
    elapsed = time.monotonic() - start
    ok = (not regular_failures and not annihilator_failures
          and simple_seen > 0 and elapsed < 120)
    _emit(capsys, 9, ok, f"regular modules pass the working associativity law on "
                 f"{len(scalars)} scalar structures and their proper "
                 f"annihilators are ideals; {simple_seen} simple modules "
                 f"tabulated: {prime_counts[True]} prime annihilators, "
                 f"{prime_counts[False]} not prime, {non_ideal_anns} not "
                 f"even ideals ({elapsed:.1f}s)")
    assert regular_failures == []
    assert annihilator_failures == []
    assert simple_seen > 0
    assert elapsed < 120

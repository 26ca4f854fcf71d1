import pytest

from tgs.core import ConsistencyError, canonical_form, verify_axioms
from tgs.fixtures import DERIVED, mod_mul_structure
from tgs.ideals import enumerate_ideals, is_ideal
from tgs.quotient import (bourne_congruence, congruence_to_ideal,
                          enumerate_congruences, has_nonzero_zero_divisors,
                          is_congruence, kernel_partition, normalize_partition,
                          partition_blocks, quotient_structure)
from tgs.spectrum import find_homomorphisms

from oracles import naive_congruences

CONGRUENCE_COUNTS = {"B2": 2, "M3": 2, "M4": 3, "M6": 4, "L3": 4, "N3": 3}


@pytest.mark.parametrize("name", sorted(CONGRUENCE_COUNTS))
def test_congruence_counts_frozen(name):
    s = DERIVED[name]
    found = enumerate_congruences(s)
    assert len(found) == CONGRUENCE_COUNTS[name]
    assert sorted(found) == naive_congruences(s)


def test_n3_congruences_exact():
    assert enumerate_congruences(DERIVED["N3"]) == (
        (0, 0, 0), (0, 1, 1), (0, 1, 2))


def test_congruences_match_oracle_on_corpus(corpus_reps):
    for shape in ((3, 1), (2, 2)):
        for s in corpus_reps[shape]:
            assert sorted(enumerate_congruences(s)) == naive_congruences(s)
    for s in list(corpus_reps[(4, 1)])[:20]:
        assert sorted(enumerate_congruences(s)) == naive_congruences(s)


def test_is_congruence_witnesses():
    s = DERIVED["L3"]
    v = is_congruence(s, (0, 1, 0))  # merging 0 and 2 breaks addition by 1
    assert not v.ok
    kind = v.witness[0]
    assert kind in ("add", "tern")


def test_bourne_congruence_frozen():
    s = DERIVED["M6"]
    assert bourne_congruence(s, 9) == (0, 1, 2, 0, 1, 2)
    assert bourne_congruence(s, 21) == (0, 1, 0, 1, 0, 1)
    assert bourne_congruence(s, 1) == (0, 1, 2, 3, 4, 5)
    assert bourne_congruence(s, 63) == (0, 0, 0, 0, 0, 0)


def test_bourne_always_congruence(corpus):
    for _, _, s in corpus:
        for i in enumerate_ideals(s):
            assert is_congruence(s, bourne_congruence(s, i)).ok


def test_bourne_zero_class():
    s = DERIVED["M6"]  # additive group: zero class equals the ideal
    for i in enumerate_ideals(s):
        assert congruence_to_ideal(s, bourne_congruence(s, i)) == i
    n3 = DERIVED["N3"]  # saturating monoid: {0,2} inflates to T
    rho = bourne_congruence(n3, 5)
    assert congruence_to_ideal(n3, rho) != 5


def test_zero_class_is_ideal(corpus):
    for _, _, s in corpus[:120]:
        for rho in enumerate_congruences(s):
            assert is_ideal(s, congruence_to_ideal(s, rho)).ok


def test_quotient_m6_by_03_is_m3():
    s = DERIVED["M6"]
    q = quotient_structure(s, bourne_congruence(s, 9))
    assert q.order == 3
    assert q.names == ("{0,3}", "{1,4}", "{2,5}")
    assert verify_axioms(q).passed
    assert canonical_form(q) == canonical_form(DERIVED["M3"])


def test_quotient_m6_by_024_is_mod2():
    s = DERIVED["M6"]
    q = quotient_structure(s, bourne_congruence(s, 21))
    assert q.order == 2
    assert canonical_form(q) == canonical_form(mod_mul_structure(2))


def test_quotients_pass_axioms(corpus):
    for _, _, s in corpus[:120]:
        for rho in enumerate_congruences(s):
            assert verify_axioms(quotient_structure(s, rho)).passed


def test_quotient_rejects_non_congruence():
    with pytest.raises(ConsistencyError):
        quotient_structure(DERIVED["L3"], (0, 1, 0))


def test_partition_helpers():
    assert normalize_partition((1, 0, 1)) == (0, 1, 0)
    assert partition_blocks((0, 1, 0, 1)) == ((0, 2), (1, 3))
    assert kernel_partition((0, 2, 0)) == (0, 1, 0)


def test_roundtrip_collisions_frozen():
    # distinct congruences sharing a zero class, counted per fixture
    expected = {"B2": 0, "M3": 0, "M4": 0, "M6": 0, "L3": 1, "N3": 1}
    for name, s in DERIVED.items():
        bad = sum(1 for rho in enumerate_congruences(s)
                  if bourne_congruence(s, congruence_to_ideal(s, rho)) != rho)
        assert bad == expected[name]


def test_zero_divisor_reports():
    s = DERIVED["M6"]
    v = has_nonzero_zero_divisors(s)
    assert v.ok and v.witness == (1, 2, 3, 0, 0)
    q = quotient_structure(s, bourne_congruence(s, 9))
    assert not has_nonzero_zero_divisors(q).ok


def test_first_isomorphism_over_corpus_homs(corpus_reps):
    reps = [s for shape in ((1, 1), (2, 1), (3, 1)) for s in corpus_reps[shape]]
    checked = 0
    for src in reps:
        for dst in reps:
            for f in find_homomorphisms(src, dst, surjective_only=True):
                q = quotient_structure(src, kernel_partition(f.element_map))
                assert canonical_form(q) == canonical_form(dst)
                checked += 1
    assert checked > len(reps)  # identity maps alone guarantee this many

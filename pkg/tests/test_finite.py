import itertools

import pytest

from oracles import brute_semirings, closure_ideals
from semiringkit.core import MCSet
from semiringkit.errors import (
    AxiomViolation,
    CapExceeded,
    NotMCSet,
    ParseError,
    TableShapeError,
    ZeroEqualsOne,
    ZeroSemiring,
)
from semiringkit.finite import (
    FiniteSemiring,
    boolean_table,
    canonical_form,
    chain3,
    check_saturated_complement,
    classify_ideal,
    dump_table,
    enumerate_ideals,
    enumerate_semirings,
    ideal_generated,
    ideal_summary,
    is_isomorphism,
    is_saturated,
    load_table,
    localize_finite,
    maximal_ideals,
    mc_sets,
    spectrum,
    table_violations,
    validate_tables,
    z2,
)

U = 2  # the middle element of chain3

BOOL_ADD = ((0, 1), (1, 1))
BOOL_MUL = ((0, 0), (0, 1))


def universe(max_order=3):
    for n in range(2, max_order + 1):
        yield from enumerate_semirings(n)


# ---------------------------------------------------------------- validation


def test_boolean_tables_validate():
    S = validate_tables(2, BOOL_ADD, BOOL_MUL)
    assert S.order == 2 and S.add(1, 1) == 1


def test_absorption_violation_is_named():
    with pytest.raises(AxiomViolation) as exc:
        validate_tables(2, BOOL_ADD, ((0, 1), (1, 1)))
    assert exc.value.axiom == "absorption"
    assert exc.value.witness == (0, 1)


def test_chain3_validates():
    S = chain3()
    validate_tables(3, S.add_table, S.mul_table)
    assert S.add(U, 1) == 1 and S.mul(U, 1) == U


def test_bad_shapes():
    with pytest.raises(TableShapeError):
        validate_tables(2, ((0, 1),), BOOL_MUL)
    with pytest.raises(TableShapeError):
        validate_tables(2, ((0, 1), (1, 2)), BOOL_MUL)
    with pytest.raises(ZeroEqualsOne):
        validate_tables(1, ((0,),), ((0,),))


def test_every_violated_axiom_reported():
    add = ((0, 1, 2), (1, 2, 0), (2, 1, 1))  # not commutative
    mul = ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    axioms = {v.axiom for v in table_violations(3, add, mul)}
    assert "additive commutativity" in axioms


# ---------------------------------------------------------------- ideals


def test_ideal_generated_examples():
    assert ideal_generated(boolean_table(), {1}) == {0, 1}
    assert ideal_generated(chain3(), {U}) == {0, U}
    assert ideal_generated(chain3(), set()) == {0}


def test_enumerate_ideals_examples():
    assert enumerate_ideals(boolean_table()) == [{0}, {0, 1}]
    assert enumerate_ideals(chain3()) == [{0}, {0, U}, {0, 1, 2}]
    assert enumerate_ideals(z2()) == [{0}, {0, 1}]


@pytest.mark.parametrize("S", list(universe(4)), ids=lambda s: s.describe())
def test_ideals_match_closure_oracle(S):
    assert set(enumerate_ideals(S)) == closure_ideals(S.add_table, S.mul_table)


def test_classify_examples():
    flags = classify_ideal(chain3(), {0, U})
    assert flags.subtractive and flags.prime and flags.maximal and flags.principal
    flags = classify_ideal(boolean_table(), {0})
    assert flags.subtractive and flags.prime and flags.maximal and flags.principal
    whole = classify_ideal(chain3(), {0, 1, 2})
    assert not whole.proper and not whole.prime and not whole.maximal


@pytest.mark.parametrize("S", list(universe(4)), ids=lambda s: s.describe())
def test_flag_invariants(S):
    for I in enumerate_ideals(S):
        f = classify_ideal(S, I)
        assert not f.maximal or f.proper
        assert not f.prime or f.proper


def test_spectrum_examples():
    assert spectrum(chain3()) == [{0}, {0, U}]
    assert spectrum(boolean_table()) == [{0}]
    assert spectrum(z2()) == [{0}]


@pytest.mark.parametrize("S", list(universe(4)), ids=lambda s: s.describe())
def test_maximal_ideals_are_prime(S):
    primes = set(spectrum(S))
    assert all(M in primes for M in maximal_ideals(S))


# ---------------------------------------------------------------- MC-sets


def test_saturated_complement_examples():
    v = check_saturated_complement(chain3(), {1})
    assert v.holds and [0, U] in v.witness["covering_primes"]
    v = check_saturated_complement(boolean_table(), {1})
    assert v.holds and v.witness["covering_primes"] == [[0]]
    v = check_saturated_complement(chain3(), {U, 1})
    assert v.holds and v.witness["saturated"]
    with pytest.raises(NotMCSet):
        check_saturated_complement(chain3(), {U})


def test_saturated_complement_whole_universe():
    count = 0
    for S in universe(3):
        for W in mc_sets(S):
            assert check_saturated_complement(S, W).holds
            count += 1
    assert count == 27


def test_saturation_brute_force():
    S = chain3()
    for W in mc_sets(S):
        brute = all((S.mul(a, b) in W) <= (a in W and b in W)
                    for a, b in itertools.product(range(3), repeat=2))
        assert is_saturated(S, W) == brute


# ---------------------------------------------------------------- enumeration


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumeration_matches_brute_force(n):
    brute = set(brute_semirings(n))
    found = [(S.add_table, S.mul_table) for S in enumerate_semirings(n)]
    assert len(found) == len(set(found))
    assert set(found) == brute


def test_enumeration_counts_frozen():
    # counts taken from the brute-force oracle in oracles.py
    assert [sum(1 for _ in enumerate_semirings(n)) for n in (2, 3, 4)] == [2, 6, 69]
    assert [sum(1 for _ in enumerate_semirings(n, unique=True)) for n in (2, 3, 4)] == [2, 6, 36]


def test_order_two_is_boolean_and_z2():
    tables = {(S.add_table, S.mul_table) for S in enumerate_semirings(2)}
    assert tables == {(BOOL_ADD, BOOL_MUL), (z2().add_table, z2().mul_table)}


def test_chain3_in_stream():
    c = chain3()
    assert any(S.add_table == c.add_table and S.mul_table == c.mul_table
               for S in enumerate_semirings(3))


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_semirings(9))


def test_isomorphism_classes_by_relabelling():
    classes = set()
    for add, mul in brute_semirings(4):
        forms = []
        for perm in ((0, 1, 2, 3), (0, 1, 3, 2)):
            inv = {p: i for i, p in enumerate(perm)}
            A = tuple(tuple(perm[add[inv[a]][inv[b]]] for b in range(4)) for a in range(4))
            M = tuple(tuple(perm[mul[inv[a]][inv[b]]] for b in range(4)) for a in range(4))
            forms.append((A, M))
        classes.add(min(forms))
    assert len(classes) == 36
    assert len({canonical_form(a, m) for a, m in brute_semirings(4)}) == 36


# ---------------------------------------------------------------- localization


@pytest.mark.parametrize("S", list(universe(3)), ids=lambda s: s.describe())
def test_localize_at_units_is_isomorphic(S):
    L = localize_finite(S, MCSet.units())
    mapping = {a: L.image(a) for a in S.elements()}
    assert is_isomorphism(S, L.semiring, mapping)


def test_localize_chain3_at_u():
    L = localize_finite(chain3(), {U, 1})
    # u becomes a unit: (u, u) ~ (1, 1), so the quotient is Boolean
    assert L.semiring.order == 2
    assert L.of(U, U) == L.image(1)
    assert L.image(U) == 1


def test_localize_with_zero_collapses():
    with pytest.raises(ZeroSemiring):
        localize_finite(chain3(), {0, 1, 2})


def test_localized_tables_are_semirings():
    for S in universe(3):
        for W in mc_sets(S):
            if 0 in W:
                continue
            R = localize_finite(S, W).semiring
            assert not table_violations(R.order, R.add_table, R.mul_table)


# ---------------------------------------------------------------- table files


def test_table_round_trip():
    for S in universe(3):
        T = load_table(dump_table(S))
        assert (T.add_table, T.mul_table) == (S.add_table, S.mul_table)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        load_table("order 2\nadd\n0 1\n1 x\nmul\n0 0\n0 1\n")
    assert exc.value.line == 4 and exc.value.column == 3
    with pytest.raises(ParseError):
        load_table("order 2\nadd\n0 1\n1 1 1\nmul\n0 0\n0 1\n")
    with pytest.raises(ParseError):
        load_table("add\n0 1\n")


def test_summary_line_counts():
    assert ideal_summary(chain3()) == {"ideals": 3, "primes": 2, "subtractive": True,
                                       "principal": True}


def test_finite_semiring_repr():
    assert "chain3" in repr(chain3())
    assert isinstance(chain3(), FiniteSemiring)

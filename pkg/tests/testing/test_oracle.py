from raag_piling_utils.testing.oracle import (
    InstanceBounds,
    all_group_specs,
    brute_force_is_conjugate,
    conjugacy_orbit,
    equivalent_class,
    find_disagreements,
    oracle_equal,
    random_instance,
    random_rewrite,
    reduced_words,
    rewrite_normal_form,
    scaling_instance,
)
from raag_piling_utils.utils.exceptions import BudgetExceeded
from raag_piling_utils.utils.words import GroupSpec, concat, inverse
import random
import pytest

F1 = GroupSpec.free(1)
F2 = GroupSpec.free(2)
Z2 = GroupSpec.abelian(2)
P4 = GroupSpec(4, frozenset({(1, 4), (2, 3), (2, 4)}))


def test_equivalent_class():
    assert equivalent_class([1, 2], Z2, 2) == {(1, 2), (2, 1)}
    assert () in equivalent_class([1, -1], F2, 2)
    assert equivalent_class([1], F1, 1) == {(1,)}
    assert equivalent_class([1, 2], F2, 2) == {(1, 2)}


def test_equivalent_class_guards():
    with pytest.raises(ValueError):
        equivalent_class([1, 2, 3], GroupSpec.free(3), 2)
    with pytest.raises(BudgetExceeded) as e:
        equivalent_class([1, 2], Z2, 2, state_cap=1)
    assert e.value.cap == 1


def test_equivalent_class_cap_from_environment(monkeypatch):
    monkeypatch.setenv("RAAG_ORACLE_STATE_CAP", "3")
    with pytest.raises(BudgetExceeded):
        equivalent_class([], F2, 2)


@pytest.mark.parametrize(
    "w, spec, expected",
    [
        ([2, 1], Z2, (1, 2)),
        ([-3, 1, -2], GroupSpec(3, frozenset({(1, 3)})), (1, -3, -2)),
        ([1, 2, -1], Z2, (2,)),
        ([1, 2, -1], F2, (1, 2, -1)),
        ([1, 4, 2, -1, -2], P4, (1, 2, -1, -2, 4)),
        ([], F2, ()),
    ],
)
def test_rewrite_normal_form(w, spec, expected):
    assert rewrite_normal_form(w, spec) == expected


def test_rewrite_normal_form_is_shortlex_least_of_class():
    from raag_piling_utils.utils.words import shortlex_key

    for w in reduced_words(P4, 3):
        smallest = min(equivalent_class(w, P4, len(w)), key=shortlex_key)
        assert rewrite_normal_form(w, P4) == smallest


def test_oracle_equal():
    assert oracle_equal([1, 2], [2, 1], Z2)
    assert not oracle_equal([1, 2], [2, 1], F2)
    assert oracle_equal([1, 4, -1], [4], P4)


def test_brute_force_is_conjugate():
    assert brute_force_is_conjugate([1, 2], [2, 1], F2, 1)
    assert not brute_force_is_conjugate([1], [2], F2, 3)
    assert brute_force_is_conjugate([1, 2, -1], [2], F2, 0) is False
    assert brute_force_is_conjugate([1, 2, -1], [2], F2, 1)
    for w in [(), (1,), (1, 2, -1, 2)]:
        assert brute_force_is_conjugate(w, w, P4, 0)


def test_brute_force_is_conjugate_symmetric():
    words = list(reduced_words(F2, 2))
    for w1 in words:
        for w2 in words:
            assert brute_force_is_conjugate(w1, w2, F2, 2) == brute_force_is_conjugate(
                w2, w1, F2, 2
            )


def test_conjugacy_orbit():
    assert conjugacy_orbit([], F2, 3) == {()}
    assert conjugacy_orbit([1], Z2, 3) == {(1,)}
    assert conjugacy_orbit([1], F2, 1) == {(1,), (-2, 1, 2), (2, 1, -2)}


def test_reduced_words():
    words = list(reduced_words(F2, 2))
    assert len(words) == 1 + 4 + 12
    assert words[0] == ()
    assert len(set(words)) == len(words)


def test_all_group_specs():
    specs = all_group_specs(3)
    assert len(specs) == 8
    assert len(set(specs)) == 8
    assert GroupSpec.free(3) in specs
    assert GroupSpec.abelian(3) in specs


def test_random_rewrite_preserves_element():
    rng = random.Random(0)
    for w in [(1, 2, -1, 2, 3, -4), (2, 4, 2), ()]:
        v = random_rewrite(w, P4, rng, steps=20)
        assert oracle_equal(w, v, P4)


def test_random_instance():
    assert random_instance(3) == random_instance(3)
    spec, _, _ = random_instance(5, InstanceBounds(density=0.0))
    assert spec.is_free
    spec, _, _ = random_instance(5, InstanceBounds(n_range=(3, 3), density=1.0))
    assert spec.is_abelian
    assert spec.n_generators == 3


def test_random_instance_conjugate_pair():
    bounds = InstanceBounds(n_range=(2, 3), word_length_range=(0, 4), conjugator_length_range=(0, 2))
    for seed in range(20):
        spec, w1, w2 = random_instance(seed, bounds)
        assert brute_force_is_conjugate(w1, w2, spec, 2)


def test_scaling_instance():
    spec, w1, w2 = scaling_instance(40, seed=1)
    assert spec == P4
    assert len(w1) == 40
    assert len(w2) == 60
    assert w2[10:50] == w1
    assert w2[:10] == inverse(w2[50:])
    assert concat(w2[:10], w1, w2[50:]) == w2


def test_find_disagreements():
    def wrong(w1, w2, spec):
        return True

    def right(w1, w2, spec):
        return len(w1) == len(w2) and sorted(w1) == sorted(w2)

    assert find_disagreements(F1, 2, 2, right) == []
    failed = find_disagreements(F1, 1, 1, wrong)
    assert ((1,), (-1,), True, False) in failed
    assert ((), (), True, True) not in failed


def test_random_instance_default_bounds_reach_six_generators():
    assert InstanceBounds().n_range == (1, 6)
    sizes = {random_instance(seed)[0].n_generators for seed in range(300)}
    assert sizes == {1, 2, 3, 4, 5, 6}

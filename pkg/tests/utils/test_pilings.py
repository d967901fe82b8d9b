from raag_piling_utils.utils.exceptions import InvalidLetter, MalformedPiling
from raag_piling_utils.utils.graphs import graph_from_edges
from raag_piling_utils.utils.pilings import (
    Piling,
    check_piling,
    cyclically_reduce,
    empty_piling,
    normal_form_word,
    parse_piling,
    piling_of_word,
    push_letter,
    support,
    word_of,
)
from raag_piling_utils.utils.words import GroupSpec, concat, inverse
import pytest

F2 = GroupSpec.free(2)


def _spec(entry):
    return GroupSpec(entry["n"], frozenset(tuple(p) for p in entry["commuting"]))


def _piling(columns):
    return Piling(tuple(tuple(c) for c in columns))


@pytest.mark.parametrize("n", [1, 3, 4])
def test_empty_piling(n):
    p = empty_piling(GroupSpec.free(n))
    assert p.columns == ((),) * n
    assert p.is_empty
    assert str(p) == "[" + ",".join(["[]"] * n) + "]"


def test_push_letter():
    g = graph_from_edges(F2)
    p = push_letter(empty_piling(F2), 1, g)
    assert p == _piling([[1], [0]])
    assert push_letter(p, -1, g).is_empty


def test_push_letter_cancels_through_commuting_letter():
    spec = GroupSpec(3, frozenset({(1, 3)}))
    p = piling_of_word([1, 3], spec)
    p = push_letter(p, -1, graph_from_edges(spec))
    assert p == _piling([[], [0], [1]])
    assert normal_form_word(p, spec) == (3,)


def test_push_letter_rejects_bad_letter():
    with pytest.raises(InvalidLetter):
        push_letter(empty_piling(F2), 3, graph_from_edges(F2))


def test_push_letter_accepts_neighbour_table():
    spec = GroupSpec(4, frozenset({(1, 4), (2, 3), (2, 4)}))
    g = graph_from_edges(spec)
    p = q = empty_piling(spec)
    for k in [1, 2, -1, 2, 3, -4, 4, -3]:
        p = push_letter(p, k, g)
        q = push_letter(q, k, spec.neighbour_table)
        assert p == q
    assert p == piling_of_word([1, 2, -1, 2], spec)


def test_piling_of_word(worked_examples):
    for entry in worked_examples["piling_of_word"]:
        assert piling_of_word(entry["word"], _spec(entry)) == _piling(entry["piling"])


def test_piling_of_word_validates():
    with pytest.raises(InvalidLetter):
        piling_of_word([1, 0], F2)


def test_normal_form_word(worked_examples):
    for entry in worked_examples["normal_form_word"]:
        spec = _spec(entry)
        p = _piling(entry["piling"])
        assert normal_form_word(p, spec) == tuple(entry["word"])
        assert piling_of_word(entry["word"], spec) == p
    assert normal_form_word(empty_piling(F2), F2) == ()
    assert word_of is normal_form_word


def test_normal_form_of_commuting_pair():
    z2 = GroupSpec.abelian(2)
    assert normal_form_word(piling_of_word([2, 1], z2), z2) == (1, 2)


def test_support():
    assert support(piling_of_word([2, 3, -4], GroupSpec(4, frozenset({(1, 4), (2, 3), (2, 4)})))) == {2, 3, 4}
    assert support(empty_piling(F2)) == frozenset()
    assert support(_piling([[0, 0], [1], [1], []])) == {2, 3}


def test_piling_counts_and_text():
    p = _piling([[1, 0, 0, -1, 0], [0, 1, 1, 0, 1]])
    assert p.n_columns == 2
    assert p.bead_count == 10
    assert p.signed_bead_count == 5
    assert str(p) == "[[1,0,0,-1,0],[0,1,1,0,1]]"
    assert parse_piling(str(p), F2) == p
    assert p.to_list() == [[1, 0, 0, -1, 0], [0, 1, 1, 0, 1]]


@pytest.mark.parametrize(
    "text",
    [
        "[[1,0],[0,1",
        "[1,2]",
        "{}",
        "[[2],[0]]",
        "[[true],[0]]",
        "[[1],[]]",
        "[[1]]",
        "[[1.0,0],[0,-1.0]]",
    ],
)
def test_parse_piling_rejects(text):
    with pytest.raises(MalformedPiling):
        parse_piling(text, F2)


@pytest.mark.parametrize("bead", [1.0, -1.0, 0.0, True, "1"])
def test_piling_rejects_non_int_beads(bead):
    with pytest.raises(MalformedPiling):
        Piling(((bead,), (0,)))


def test_check_piling():
    check_piling(piling_of_word([1, 2, 2, -1, 2], F2), F2)
    with pytest.raises(MalformedPiling):
        check_piling(_piling([[1], [0], []]), F2)
    with pytest.raises(MalformedPiling):
        check_piling(_piling([[1, 0], [0]]), F2)


def test_cyclically_reduce(worked_examples):
    for entry in worked_examples["cyclically_reduce"]:
        spec = _spec(entry)
        result = cyclically_reduce(piling_of_word(entry["word"], spec), spec)
        assert normal_form_word(result.reduced, spec) == tuple(entry["reduced"])
        assert result.conjugator == tuple(entry["conjugator"])
        c = result.conjugator
        rebuilt = concat(c, normal_form_word(result.reduced, spec), inverse(c))
        assert piling_of_word(rebuilt, spec) == piling_of_word(entry["word"], spec)


def test_cyclically_reduce_empty():
    result = cyclically_reduce(empty_piling(F2), F2)
    assert result.reduced.is_empty
    assert result.conjugator == ()


def test_cyclically_reduce_checks_column_count():
    with pytest.raises(MalformedPiling):
        cyclically_reduce(_piling([[1]]), F2)

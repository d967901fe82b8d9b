# Standard
from dataclasses import dataclass
from typing import Sequence
import logging

# Local Packages
from raag_piling_utils.utils.exceptions import EmptyPiling, NotNonSplit
from raag_piling_utils.utils.pilings import (
    BeadStacks,
    Piling,
    check_piling,
    piling_of_word,
    support,
)
from raag_piling_utils.utils.words import GroupSpec, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PyramidalResult:
    """input = conjugator * pyramidal_piling * conjugator^-1.

    rounds counts the peel and push-back rounds; it never exceeds the
    signed bead count of the input.
    """

    pyramidal_piling: Piling
    conjugator: Word
    rounds: int = 0


def _pivot_column(p: Piling) -> int:
    supported = support(p)
    if not supported:
        raise EmptyPiling("a pyramidal decomposition needs a nonempty piling")
    return min(supported)


def _peel(stacks: BeadStacks, pivot: int) -> list[int]:
    """Extract, least rank first, every letter that does not lie above the pivot.

    The pivot is the lowest signed bead of column `pivot`; it is the only
    letter of that generator that can ever be bottom-exposed here, so
    skipping the column keeps it and everything stacked on it.
    """
    peeled = []
    while True:
        letter = stacks.first_exposed(skip=pivot)
        if not letter:
            return peeled
        stacks.remove_bottom(abs(letter))
        peeled.append(letter)


def pyramidal_decomp(p: Piling, spec: GroupSpec) -> tuple[Piling, Piling]:
    """Split p = p0 * p1 where p1 is the pyramid above the pivot."""
    pivot = _pivot_column(p)
    check_piling(p, spec)
    stacks = BeadStacks.from_piling(p, spec)
    p0_word = _peel(stacks, pivot)
    return piling_of_word(p0_word, spec), stacks.to_piling()


def pyramidal(p: Piling, spec: GroupSpec) -> PyramidalResult:
    """Cyclically permute p until it is a pyramid over its pivot."""
    pivot = _pivot_column(p)
    check_piling(p, spec)
    bound = p.signed_bead_count
    stacks = BeadStacks.from_piling(p, spec)
    conjugator: list[int] = []
    rounds = 0
    while True:
        peeled = _peel(stacks, pivot)
        if not peeled:
            break
        rounds += 1
        if rounds > bound:
            raise NotNonSplit(
                f"support {sorted(support(p))} is split; no pyramid after {bound} rounds"
            )
        conjugator.extend(peeled)
        # the piling of word(p1) + word(p0) is p1 with p0's letters pushed on top
        for k in peeled:
            stacks.push(k)
    logger.debug(f"pyramidal form reached after {rounds} rounds")
    return PyramidalResult(stacks.to_piling(), tuple(conjugator), rounds)


def cyclic_normal_form(p: Piling, spec: GroupSpec) -> Word:
    """Normal form of a pyramidal piling with the pivot generator ordered last.

    Greedy extraction as in normal_form_word, except that letters of the
    pivot generator are only taken when no other letter is exposed. Two
    pyramidal pilings on the same support are conjugate exactly when these
    words are cyclic permutations of each other.
    """
    if p.is_empty:
        return ()
    return tuple(BeadStacks.from_piling(p, spec).drain(deferred=_pivot_column(p)))


def _prefix_function(pattern: Sequence[int]) -> list[int]:
    table = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = table[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        table[i] = k
    return table


def _find(pattern: Sequence[int], text: Sequence[int]) -> int:
    """Index of the first occurrence of pattern in text, or -1."""
    table = _prefix_function(pattern)
    k = 0
    for i, letter in enumerate(text):
        while k and letter != pattern[k]:
            k = table[k - 1]
        if letter == pattern[k]:
            k += 1
        if k == len(pattern):
            return i - k + 1
    return -1


def is_cyclic_permutation(w: Sequence[int], v: Sequence[int]) -> tuple[bool, Word | None]:
    """Decide whether w is a rotation of v.

    On success also returns y, the shortest prefix of v with
    w = rotate(v, len(y)), so that w = y^-1 * v * y.
    """
    w, v = tuple(w), tuple(v)
    if len(w) != len(v):
        return False, None
    if not w:
        return True, ()
    k = _find(w, v + v[:-1])
    if k < 0:
        return False, None
    return True, v[:k]

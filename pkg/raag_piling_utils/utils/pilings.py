# Standard
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence
import json
import logging

# Local Packages
from raag_piling_utils.utils.exceptions import InvalidLetter, MalformedPiling
from raag_piling_utils.utils.words import GroupSpec, Word, validate_word

logger = logging.getLogger(__name__)

BEADS = (-1, 0, 1)


@dataclass(frozen=True)
class Piling:
    """N columns of beads, each read bottom to top.

    A letter k deposits sign(k) in column |k| and a 0 bead in every column
    joined to |k| in the defining graph. Equal group elements have
    identical pilings.
    """

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        try:
            columns = tuple(tuple(column) for column in self.columns)
        except TypeError:
            raise MalformedPiling(f"piling must be a sequence of columns, got {self.columns!r}")
        for index, column in enumerate(columns):
            for bead in column:
                if type(bead) is not int or bead not in BEADS:
                    raise MalformedPiling(f"column {index + 1} holds bead {bead!r}")
        object.__setattr__(self, "columns", columns)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(str(b) for b in c) + "]" for c in self.columns) + "]"

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    @property
    def bead_count(self) -> int:
        return sum(len(column) for column in self.columns)

    @property
    def signed_bead_count(self) -> int:
        return sum(len(column) - column.count(0) for column in self.columns)

    @property
    def is_empty(self) -> bool:
        return not any(self.columns)

    def to_list(self) -> list[list[int]]:
        return [list(column) for column in self.columns]


@dataclass(frozen=True)
class CyclicReductionResult:
    reduced: Piling
    conjugator: Word


class BeadStacks:
    """Mutable working copy of a piling used inside the algorithms.

    Columns are deques indexed 1..N (slot 0 is unused) so that beads can be
    removed from the bottom and the top in constant time.
    """

    __slots__ = ("columns", "neighbours")

    def __init__(self, columns, neighbours: Sequence[Sequence[int]] | Mapping):
        self.columns = [deque()] + [deque(column) for column in columns]
        self.neighbours = neighbours

    @classmethod
    def from_piling(cls, p: Piling, spec: GroupSpec) -> "BeadStacks":
        if p.n_columns != spec.n_generators:
            raise MalformedPiling(
                f"piling has {p.n_columns} columns but the group has {spec.n_generators} generators"
            )
        return cls(p.columns, spec.neighbour_table)

    @classmethod
    def empty(cls, spec: GroupSpec) -> "BeadStacks":
        return cls([()] * spec.n_generators, spec.neighbour_table)

    def to_piling(self) -> Piling:
        return Piling(tuple(tuple(column) for column in self.columns[1:]))

    def signed_bead_count(self) -> int:
        return sum(len(column) - column.count(0) for column in self.columns)

    def push(self, k: int) -> None:
        columns = self.columns
        i = abs(k)
        sign = 1 if k > 0 else -1
        column = columns[i]
        others = self.neighbours[i]
        if (
            column
            and column[-1] == -sign
            and all(columns[j] and columns[j][-1] == 0 for j in others)
        ):
            column.pop()
            for j in others:
                columns[j].pop()
        else:
            column.append(sign)
            for j in others:
                columns[j].append(0)

    def bottom_letter(self, i: int) -> int:
        """The letter whose beads all sit at the bottom of their columns, or 0."""
        columns = self.columns
        column = columns[i]
        if not column or column[0] == 0:
            return 0
        for j in self.neighbours[i]:
            if not columns[j] or columns[j][0] != 0:
                return 0
        return column[0] * i

    def top_letter(self, i: int) -> int:
        columns = self.columns
        column = columns[i]
        if not column or column[-1] == 0:
            return 0
        for j in self.neighbours[i]:
            if not columns[j] or columns[j][-1] != 0:
                return 0
        return column[-1] * i

    def remove_bottom(self, i: int) -> None:
        columns = self.columns
        columns[i].popleft()
        for j in self.neighbours[i]:
            columns[j].popleft()

    def remove_top(self, i: int) -> None:
        columns = self.columns
        columns[i].pop()
        for j in self.neighbours[i]:
            columns[j].pop()

    def first_exposed(self, skip: int = 0) -> int:
        """Bottom-exposed letter of least rank, ignoring column `skip`.

        Ranks grow with the generator index, so the lowest exposed column wins.
        """
        for i in range(1, len(self.columns)):
            if i != skip:
                letter = self.bottom_letter(i)
                if letter:
                    return letter
        return 0

    def drain(self, deferred: int = 0) -> list[int]:
        """Empty the stacks, returning the extracted letters in order.

        Letters of generator `deferred` are only taken when nothing else is
        exposed.
        """
        word = []
        for _ in range(self.signed_bead_count()):
            letter = self.first_exposed(skip=deferred)
            if not letter and deferred:
                letter = self.bottom_letter(deferred)
            if not letter:
                raise MalformedPiling("nonempty piling has no bottom-exposed letter")
            self.remove_bottom(abs(letter))
            word.append(letter)
        if any(self.columns):
            raise MalformedPiling("piling holds 0 beads that belong to no letter")
        return word


def check_piling(p: Piling, spec: GroupSpec) -> None:
    """Raise MalformedPiling unless column count and bead counts are consistent."""
    if p.n_columns != spec.n_generators:
        raise MalformedPiling(
            f"piling has {p.n_columns} columns but the group has {spec.n_generators} generators"
        )
    signed = [0] + [len(column) - column.count(0) for column in p.columns]
    for j in range(1, spec.n_generators + 1):
        expected = signed[j] + sum(signed[i] for i in spec.neighbours(j))
        if len(p.columns[j - 1]) != expected:
            raise MalformedPiling(
                f"column {j} holds {len(p.columns[j - 1])} beads, expected {expected}"
            )


def parse_piling(text: str, spec: GroupSpec | None = None) -> Piling:
    """Parse the bracket syntax `[[1,0],[0,0,-1],[-1,0]]`."""
    try:
        columns = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedPiling(f"cannot parse piling {text!r}: {e.msg}")
    if not isinstance(columns, list) or not all(isinstance(c, list) for c in columns):
        raise MalformedPiling(f"piling must be a list of lists, got {text!r}")
    p = Piling(tuple(tuple(c) for c in columns))
    if spec is not None:
        check_piling(p, spec)
    return p


def empty_piling(spec: GroupSpec) -> Piling:
    return Piling(((),) * spec.n_generators)


def push_letter(p: Piling, k: int, graph) -> Piling:
    """Push one letter onto a copy of p, cancelling against an exposed inverse.

    graph is the defining graph (a networkx graph on 1..N) or a prebuilt
    neighbour table such as GroupSpec.neighbour_table. Passing a graph costs
    O(N + E) per call to build the table; folding many letters should pass
    the table, or use piling_of_word.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k == 0 or abs(k) > p.n_columns:
        raise InvalidLetter(0, k)
    if isinstance(graph, (Mapping, tuple, list)):
        neighbours = graph
    else:
        neighbours = {i: tuple(sorted(graph.neighbors(i))) for i in graph.nodes}
    stacks = BeadStacks(p.columns, neighbours)
    stacks.push(k)
    return stacks.to_piling()


def piling_of_word(w: Sequence[int], spec: GroupSpec) -> Piling:
    validate_word(w, spec)
    stacks = BeadStacks.empty(spec)
    for k in w:
        stacks.push(k)
    return stacks.to_piling()


def normal_form_word(p: Piling, spec: GroupSpec) -> Word:
    """The shortlex-least word representing p."""
    return tuple(BeadStacks.from_piling(p, spec).drain())


word_of = normal_form_word


def support(p: Piling) -> frozenset[int]:
    return frozenset(i for i, column in enumerate(p.columns, start=1) if any(column))


def cyclically_reduce(p: Piling, spec: GroupSpec) -> CyclicReductionResult:
    """Strip matching letters from both ends of p.

    Returns (reduced, c) with p = c * reduced * c^-1 in the group.
    """
    check_piling(p, spec)
    stacks = BeadStacks.from_piling(p, spec)
    n = spec.n_generators
    conjugator = []
    while True:
        for i in range(1, n + 1):
            letter = stacks.bottom_letter(i)
            if letter and stacks.top_letter(i) == -letter:
                stacks.remove_bottom(i)
                stacks.remove_top(i)
                conjugator.append(letter)
                break
        else:
            break
    logger.debug(f"cyclic reduction removed {len(conjugator)} letter pairs")
    return CyclicReductionResult(stacks.to_piling(), tuple(conjugator))

# Standard
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

# Local Packages
from raag_piling_utils.utils.exceptions import InvalidGroupSpec, InvalidLetter

# A word is an immutable sequence of nonzero signed generator indices.
# Generator i is written i, its inverse -i; the empty tuple is the identity.
Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """A right-angled Artin group presentation.

    Generators are 1..n_generators. commuting_pairs lists the pairs (a, b),
    a < b, whose generators commute; every other pair is joined by an edge
    of the defining graph.
    """

    n_generators: int
    commuting_pairs: frozenset[tuple[int, int]] = frozenset()
    _neighbours: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        n = self.n_generators
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidGroupSpec(f"generator count must be a non-negative int, got {n!r}")

        pairs = set()
        for pair in self.commuting_pairs:
            try:
                a, b = pair
            except (TypeError, ValueError):
                raise InvalidGroupSpec(f"commuting pair {pair!r} is not a pair")
            if not all(isinstance(x, int) and not isinstance(x, bool) for x in (a, b)):
                raise InvalidGroupSpec(f"commuting pair {pair!r} must hold ints")
            if a == b:
                raise InvalidGroupSpec(f"commuting pair {pair!r} is a self pair")
            if not (1 <= a <= n and 1 <= b <= n):
                raise InvalidGroupSpec(
                    f"commuting pair {pair!r} out of range for {n} generators"
                )
            pairs.add((min(a, b), max(a, b)))
        object.__setattr__(self, "commuting_pairs", frozenset(pairs))

        neighbours = [()]
        for i in range(1, n + 1):
            neighbours.append(
                tuple(
                    j
                    for j in range(1, n + 1)
                    if j != i and (min(i, j), max(i, j)) not in pairs
                )
            )
        object.__setattr__(self, "_neighbours", tuple(neighbours))

    @classmethod
    def free(cls, n: int) -> "GroupSpec":
        return cls(n)

    @classmethod
    def abelian(cls, n: int) -> "GroupSpec":
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def from_string(cls, n: int, text: str | None) -> "GroupSpec":
        """Parse the commuting grammar `a,b;c,d;...`; empty text is the free group."""
        pairs = []
        for chunk in (text or "").split(";"):
            if not chunk.strip():
                continue
            parts = chunk.split(",")
            if len(parts) != 2:
                raise InvalidGroupSpec(f"cannot parse commuting pair {chunk.strip()!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InvalidGroupSpec(f"cannot parse commuting pair {chunk.strip()!r}")
        return cls(n, frozenset(pairs))

    @property
    def is_free(self) -> bool:
        return not self.commuting_pairs

    @property
    def is_abelian(self) -> bool:
        n = self.n_generators
        return len(self.commuting_pairs) == n * (n - 1) // 2

    def commutes(self, a: int, b: int) -> bool:
        """True when generators a and b commute (a generator commutes with itself)."""
        return a == b or (min(a, b), max(a, b)) in self.commuting_pairs

    def neighbours(self, i: int) -> tuple[int, ...]:
        """Generators joined to i in the defining graph, in increasing order."""
        return self._neighbours[i]

    @property
    def neighbour_table(self) -> tuple[tuple[int, ...], ...]:
        # slot 0 is unused so that generator i sits at index i
        return self._neighbours

    def commuting_string(self) -> str:
        return ";".join(f"{a},{b}" for a, b in sorted(self.commuting_pairs))


def validate_word(w: Sequence[int], spec: GroupSpec) -> None:
    for index, k in enumerate(w):
        if isinstance(k, bool) or not isinstance(k, int):
            raise InvalidLetter(index, k)
        if k == 0 or abs(k) > spec.n_generators:
            raise InvalidLetter(index, k)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-k for k in reversed(w))


def concat(*words: Sequence[int]) -> Word:
    """Plain sequence concatenation, no cancellation."""
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def rotate(w: Sequence[int], k: int) -> Word:
    """Return z + y where w = y + z and len(y) = k (k taken modulo len(w))."""
    w = tuple(w)
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def letter_rank(k: int) -> int:
    """Position of a letter in the order 1 < -1 < 2 < -2 < ..."""
    return 2 * k - 1 if k > 0 else -2 * k


def shortlex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    return len(w), tuple(letter_rank(k) for k in w)


def shortlex_less(u: Sequence[int], v: Sequence[int]) -> bool:
    return shortlex_key(u) < shortlex_key(v)


def parse_word(text: str | None) -> Word:
    """Parse `-2,-2,-4,3`; blank text is the empty word."""
    if text is None or not text.strip():
        return ()
    letters = []
    for index, token in enumerate(text.split(",")):
        try:
            letters.append(int(token.strip()))
        except ValueError:
            raise InvalidLetter(index, token.strip())
    return tuple(letters)


def format_word(w: Iterable[int]) -> str:
    return ",".join(str(k) for k in w)

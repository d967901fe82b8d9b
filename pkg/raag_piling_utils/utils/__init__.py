# Standard
from typing import List, Optional
import random

# Local Packages
from raag_piling_utils.utils.words import GroupSpec, Word


def random_letter(rng: random.Random, n_generators: int) -> int:
    return rng.randint(1, n_generators) * rng.choice((1, -1))


def random_reduced_word(rng: random.Random, spec: GroupSpec, length: int) -> Word:
    """
    Draws a word of the given length with no adjacent inverse pair (it may still
    cancel once letters are shuffled past commuting generators).

    :param rng: source of randomness, shared so callers stay reproducible
    :param spec: the group the letters are drawn from
    :param length: number of letters
    """
    if length and spec.n_generators < 1:
        raise ValueError("cannot draw letters from a group with no generators")
    word: List[int] = []
    while len(word) < length:
        k = random_letter(rng, spec.n_generators)
        if word and word[-1] == -k:
            continue
        word.append(k)
    return tuple(word)


def sample_words(
    spec: GroupSpec,
    num_words: int,
    length_min: int = 0,
    length_max: int = 12,
    seed: Optional[int] = None,
) -> List[Word]:
    """
    Samples reduced words with lengths drawn uniformly from [length_min, length_max].

    Args:
        spec (GroupSpec): the group
        num_words (int): how many words to return
        length_min (int): shortest length allowed
        length_max (int): longest length allowed
        seed (int): seed for the generator, None for a fresh one

    Returns:
        List[Word]: the sampled words
    """
    if length_min > length_max:
        raise ValueError(f"{length_min=} is larger than {length_max=}")
    rng = random.Random(seed)
    return [
        random_reduced_word(rng, spec, rng.randint(length_min, length_max))
        for _ in range(num_words)
    ]

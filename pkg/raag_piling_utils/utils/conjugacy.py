# Standard
from dataclasses import dataclass
from typing import Sequence
import logging

# Third Party
import numpy as np

# Local Packages
from raag_piling_utils.utils.exceptions import (
    NotAbelianGroup,
    NotFreeGroup,
    WitnessVerificationFailed,
)
from raag_piling_utils.utils.graphs import factorise, graph_from_edges, graphs_to_nsfactors
from raag_piling_utils.utils.metrics_utils import exponent_sum_vector
from raag_piling_utils.utils.pilings import (
    cyclically_reduce,
    normal_form_word,
    piling_of_word,
)
from raag_piling_utils.utils.pyramidal import (
    cyclic_normal_form,
    is_cyclic_permutation,
    pyramidal,
)
from raag_piling_utils.utils.words import (
    GroupSpec,
    Word,
    concat,
    inverse,
    shortlex_less,
    validate_word,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyResult:
    """Verdict plus, when conjugate, a witness x with w1 = x^-1 * w2 * x."""

    conjugate: bool
    witness: Word | None = None

    def __bool__(self):
        return self.conjugate

    def to_dict(self) -> dict:
        return {
            "conjugate": self.conjugate,
            "witness": None if self.witness is None else list(self.witness),
        }


NOT_CONJUGATE = ConjugacyResult(False)


def identity(w: Sequence[int], spec: GroupSpec) -> bool:
    """Word problem: is w trivial in the group."""
    return piling_of_word(w, spec).is_empty


def equal(w1: Sequence[int], w2: Sequence[int], spec: GroupSpec) -> bool:
    # pilings are canonical, so equal pilings means equal normal forms
    return piling_of_word(w1, spec) == piling_of_word(w2, spec)


def reduce_word(w: Sequence[int], spec: GroupSpec) -> Word:
    """Shortlex normal form of the element represented by w."""
    return normal_form_word(piling_of_word(w, spec), spec)


def _verified(
    w1: Sequence[int], w2: Sequence[int], x: Word, spec: GroupSpec
) -> ConjugacyResult:
    if not equal(w1, concat(inverse(x), w2, x), spec):
        raise WitnessVerificationFailed(w1, w2, x)
    logger.debug(f"conjugate, witness of length {len(x)}")
    return ConjugacyResult(True, x)


def is_conjugate_free(
    w1: Sequence[int], w2: Sequence[int], spec: GroupSpec
) -> ConjugacyResult:
    """Free groups: cyclically reduced words are conjugate iff they are rotations."""
    if not spec.is_free:
        raise NotFreeGroup(f"{len(spec.commuting_pairs)} commuting pairs given")
    validate_word(w1, spec)
    validate_word(w2, spec)

    r1 = cyclically_reduce(piling_of_word(w1, spec), spec)
    r2 = cyclically_reduce(piling_of_word(w2, spec), spec)
    found, y = is_cyclic_permutation(
        normal_form_word(r1.reduced, spec), normal_form_word(r2.reduced, spec)
    )
    if not found:
        return NOT_CONJUGATE
    x = reduce_word(concat(r2.conjugator, y, inverse(r1.conjugator)), spec)
    return _verified(w1, w2, x, spec)


def is_conjugate_abelian(
    w1: Sequence[int], w2: Sequence[int], spec: GroupSpec
) -> ConjugacyResult:
    """Free abelian groups: conjugate iff equal, i.e. same exponent sums."""
    if not spec.is_abelian:
        raise NotAbelianGroup(
            f"{len(spec.commuting_pairs)} of {spec.n_generators * (spec.n_generators - 1) // 2} pairs commute"
        )
    validate_word(w1, spec)
    validate_word(w2, spec)

    n = spec.n_generators
    if not np.array_equal(exponent_sum_vector(w1, n), exponent_sum_vector(w2, n)):
        return NOT_CONJUGATE
    return _verified(w1, w2, (), spec)


def _is_conjugate_general(
    w1: Sequence[int], w2: Sequence[int], spec: GroupSpec
) -> ConjugacyResult:
    # Step 1: cyclic reduction, w1 = d1 P d1^-1 and w2 = d2 Q d2^-1
    r1 = cyclically_reduce(piling_of_word(w1, spec), spec)
    r2 = cyclically_reduce(piling_of_word(w2, spec), spec)
    d1, d2 = r1.conjugator, r2.conjugator
    if r1.reduced.is_empty and r2.reduced.is_empty:
        return _verified(w1, w2, reduce_word(concat(d2, inverse(d1)), spec), spec)

    # Step 2: the supports of the non-split factors must coincide
    g = graph_from_edges(spec)
    p_components = factorise(g, r1.reduced)
    q_components = factorise(g, r2.reduced)
    if set(p_components) != set(q_components):
        return NOT_CONJUGATE

    p_factors = graphs_to_nsfactors(
        p_components, normal_form_word(r1.reduced, spec), spec
    )
    q_factors = dict(
        zip(
            q_components,
            graphs_to_nsfactors(q_components, normal_form_word(r2.reduced, spec), spec),
        )
    )

    # Step 3: factorwise, pyramidal forms must agree up to rotation.
    # P_i = s_i P~_i s_i^-1, Q_i = t_i Q~_i t_i^-1 and P~_i = y_i^-1 Q~_i y_i
    # give P_i = z_i^-1 Q_i z_i with z_i = t_i y_i s_i^-1.
    z: list[int] = []
    for component, p_factor in zip(p_components, p_factors):
        p_pyramid = pyramidal(p_factor, spec)
        q_pyramid = pyramidal(q_factors[component], spec)
        found, y = is_cyclic_permutation(
            cyclic_normal_form(p_pyramid.pyramidal_piling, spec),
            cyclic_normal_form(q_pyramid.pyramidal_piling, spec),
        )
        if not found:
            logger.debug(f"factor {sorted(component)} is not a rotation")
            return NOT_CONJUGATE
        z.extend(concat(q_pyramid.conjugator, y, inverse(p_pyramid.conjugator)))

    # the z_i live on pairwise commuting supports, so P = z^-1 Q z
    x = reduce_word(concat(d2, z, inverse(d1)), spec)
    return _verified(w1, w2, x, spec)


def _decide(
    w1: Sequence[int], w2: Sequence[int], spec: GroupSpec, force_general: bool
) -> ConjugacyResult:
    if not force_general:
        if spec.is_free:
            return is_conjugate_free(w1, w2, spec)
        if spec.is_abelian:
            return is_conjugate_abelian(w1, w2, spec)
    return _is_conjugate_general(w1, w2, spec)


def is_conjugate(
    w1: Sequence[int],
    w2: Sequence[int],
    spec: GroupSpec,
    force_general: bool = False,
) -> ConjugacyResult:
    """Decide whether w1 and w2 are conjugate.

    The witness x satisfies w1 = x^-1 * w2 * x and is checked before it is
    returned. Free and free abelian presentations go through their fast
    paths unless force_general is set.

    The pipeline always runs on the shortlex-ordered pair, so swapping the
    arguments returns the inverse witness.
    """
    validate_word(w1, spec)
    validate_word(w2, spec)
    if shortlex_less(w2, w1):
        result = _decide(w2, w1, spec, force_general)
        if not result.conjugate:
            return result
        return _verified(w1, w2, reduce_word(inverse(result.witness), spec), spec)
    return _decide(w1, w2, spec, force_general)

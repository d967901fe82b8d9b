from ._version import __version__
from .utils.conjugacy import ConjugacyResult, equal, identity, is_conjugate, reduce_word
from .utils.pilings import Piling, normal_form_word, piling_of_word
from .utils.words import GroupSpec, Word

__all__ = [
    "__version__",
    "ConjugacyResult",
    "GroupSpec",
    "Piling",
    "Word",
    "equal",
    "identity",
    "is_conjugate",
    "normal_form_word",
    "piling_of_word",
    "reduce_word",
]

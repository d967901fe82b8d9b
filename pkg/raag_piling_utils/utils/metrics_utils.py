from typing import Sequence

import numpy as np


def exponent_sum_vector(w: Sequence[int], n_generators: int) -> np.ndarray:
    """
    Sign-weighted count of every generator in a word, i.e. the image of the word in the
    abelianisation Z^N. Entry i (1-based) holds the exponent sum of generator i; entry 0 is
    unused and always 0.
    Args:
        w (sequence of int): The word
        n_generators (int): The generator count N of the group

    Returns:
        np.ndarray: int64 vector of length N + 1.

    Example:
        >>> exponent_sum_vector([1, 2, -1, 2], 2)
        array([0, 0, 2])
    """
    letters = np.asarray(w, dtype=np.int64)
    return np.bincount(
        np.abs(letters), weights=np.sign(letters), minlength=n_generators + 1
    ).astype(np.int64)


def list_mean(val_list):
    """
    Calculates the mean for all the values in a given list.
    Args:
        val_list (list): The list of values

    Returns:
        float: mean value calculated.
    """
    return float(np.mean(val_list))


def loglog_slope(lengths, seconds):
    """
    Fits log(seconds) = slope * log(length) + c by least squares. A slope close to 1 means the
    measured cost grows linearly with the input length.
    Args:
        lengths (list): Input sizes, all positive
        seconds (list): Wall times for the matching sizes, all positive

    Returns:
        float: the fitted slope.
    """
    if len(lengths) != len(seconds) or len(lengths) < 2:
        raise ValueError(
            f"need at least two matching measurements, got {len(lengths)} lengths and {len(seconds)} timings"
        )
    slope, _ = np.polyfit(np.log(lengths), np.log(seconds), 1)
    return float(slope)

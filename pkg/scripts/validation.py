import argparse
import logging
import sys

from tqdm import tqdm

from raag_piling_utils.testing.oracle import (
    all_group_specs,
    find_disagreements,
    print_failed_cases,
)
from raag_piling_utils.utils.conjugacy import is_conjugate
from raag_piling_utils.utils.raag_setup import dprint, setup_logging

logger = logging.getLogger(__name__)
setup_logging("INFO")

parser = argparse.ArgumentParser(
    description="Script to compare is_conjugate with the brute-force oracle on every small instance"
)
parser.add_argument(
    "--n",
    type=int,
    default=3,
    help="Number of generators; every commuting subset is swept",
)
parser.add_argument(
    "--max_word_len",
    type=int,
    default=3,
    help="Longest reduced word compared",
)
parser.add_argument(
    "--max_conj_len",
    type=int,
    default=4,
    help="Longest conjugator the oracle searches",
)
parser.add_argument(
    "--force_general",
    action="store_true",
    help="Skip the free and free abelian fast paths",
)
args = parser.parse_args()


def decide(w1, w2, spec):
    return is_conjugate(w1, w2, spec, force_general=args.force_general).conjugate


total_failed = 0
for spec in tqdm(all_group_specs(args.n), desc="presentations"):
    failed_cases = find_disagreements(spec, args.max_word_len, args.max_conj_len, decide)
    logger.info(
        f"commuting={spec.commuting_string()!r}: {len(failed_cases)} disagreements"
    )
    print_failed_cases(spec, failed_cases)
    total_failed += len(failed_cases)

dprint(f"{total_failed} disagreements in total")
sys.exit(1 if total_failed else 0)

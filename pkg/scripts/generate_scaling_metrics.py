import argparse
import json
import logging
import os
import time

from tqdm import tqdm

from raag_piling_utils.testing.oracle import scaling_instance
from raag_piling_utils.utils.conjugacy import is_conjugate
from raag_piling_utils.utils.metrics_utils import list_mean, loglog_slope
from raag_piling_utils.utils.raag_setup import dprint, env_list, setup_logging

logger = logging.getLogger(__name__)
setup_logging("INFO")

parser = argparse.ArgumentParser(
    description="Script to time is_conjugate on growing conjugate pairs and fit the log-log slope"
)
parser.add_argument(
    "--lengths",
    type=str,
    default=",".join(
        str(n) for n in env_list("RAAG_TEST_SCALING_LENGTHS", "1000,10000,100000")
    ),
    help="Comma separated word lengths to time, e.g. 1000,10000,100000",
)
parser.add_argument(
    "--repeats",
    type=int,
    default=3,
    help="Timings per length; the fastest one is kept",
)
parser.add_argument(
    "--seed",
    type=int,
    default=0,
    help="Seed for the random instances",
)
parser.add_argument(
    "--output_path",
    type=str,
    default=None,
    help="Write the metrics as JSON to this path",
)
args = parser.parse_args()


def time_instance(length, seed, repeats):
    spec, w1, w2 = scaling_instance(length, seed)
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = is_conjugate(w1, w2, spec)
        timings.append(time.perf_counter() - start)
    if not result:
        raise RuntimeError(f"generated pair of length {length} was not recognised as conjugate")
    return min(timings), list_mean(timings), len(result.witness)


lengths = [int(n) for n in args.lengths.split(",") if n.strip()]
rows = []
for length in tqdm(lengths, desc="lengths"):
    best, mean, witness_len = time_instance(length, args.seed, args.repeats)
    logger.info(f"length {length}: best {best:.4f}s mean {mean:.4f}s witness {witness_len}")
    rows.append(
        {"length": length, "seconds": best, "mean_seconds": mean, "witness_length": witness_len}
    )

metrics = {"rows": rows}
if len(rows) > 1:
    metrics["loglog_slope"] = loglog_slope(
        [r["length"] for r in rows], [r["seconds"] for r in rows]
    )
    dprint(f"log-log slope: {metrics['loglog_slope']:.3f}")

if args.output_path is not None:
    with open(args.output_path, "w", encoding="utf-8") as f:
        json.dump(metrics, f, indent=2)
    logger.info(f"metrics written to {os.path.abspath(args.output_path)}")
else:
    print(json.dumps(metrics, indent=2))

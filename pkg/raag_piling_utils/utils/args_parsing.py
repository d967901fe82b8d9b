# Standard
from typing import Optional, Sequence
import argparse

# Local Packages
from raag_piling_utils.utils.exceptions import RaagError
from raag_piling_utils.utils.pilings import parse_piling
from raag_piling_utils.utils.raag_setup import dprint
from raag_piling_utils.utils.words import GroupSpec, parse_word

# subcommand -> number of words it reads
SUBCOMMANDS = {
    "conjugate": 2,
    "equal": 2,
    "normal-form": 1,
    "identity": 1,
    "reduce-cyclic": 1,
    "factor": 1,
    "draw": 1,
    "piling": 1,
    "pyramidal": 1,
}
ACCEPTS_PILING = {"normal-form", "reduce-cyclic", "factor", "draw", "pyramidal"}

HELP = {
    "conjugate": "Decide whether two words are conjugate and print a witness.",
    "equal": "Decide whether two words represent the same element.",
    "normal-form": "Print the shortlex normal form of a word or piling.",
    "identity": "Decide whether a word is trivial.",
    "reduce-cyclic": "Print the cyclically reduced normal form and its conjugator.",
    "factor": "Print the non-split factors of a cyclically reduced word or piling.",
    "draw": "Write an SVG drawing of a piling.",
    "piling": "Print the piling of a word.",
    "pyramidal": "Print the pyramidal form of a non-split word or piling.",
}


def _add_group_args(parser: argparse.ArgumentParser):
    args_group = parser.add_argument_group("Group presentation")
    args_group.add_argument(
        "--n",
        type=int,
        required=True,
        help="Number of generators N; generators are 1..N.",
    )
    args_group.add_argument(
        "--commuting",
        type=str,
        default="",
        help=(
            "Commuting pairs as 'a,b;c,d;...', e.g. '1,4;2,3;2,4'. "
            "An empty string is the free group."
        ),
    )


def _add_input_args(parser: argparse.ArgumentParser, n_words: int, piling: bool):
    args_input = parser.add_argument_group("Input")
    if n_words == 2:
        args_input.add_argument(
            "--w1",
            type=str,
            default=None,
            help="First word, e.g. --w1=-2,1,3 (use '=' when it starts with a minus).",
        )
        args_input.add_argument("--w2", type=str, default=None, help="Second word.")
    else:
        args_input.add_argument(
            "--word",
            type=str,
            default=None,
            help="Word as comma separated signed generators, e.g. --word=1,-3,-2.",
        )
    if piling:
        args_input.add_argument(
            "--piling",
            type=str,
            default=None,
            help="Piling in bracket syntax, e.g. '[[1,0],[0,0,-1],[-1,0]]'.",
        )
    args_input.add_argument(
        "--file",
        type=str,
        default=None,
        help="Read the word(s) from a file, one word per line.",
    )


def _add_output_args(parser: argparse.ArgumentParser):
    args_output = parser.add_argument_group("Output")
    args_output.add_argument(
        "--json",
        action="store_true",
        help="Print the result as a JSON object.",
    )
    args_output.add_argument(
        "--verbose",
        action="store_true",
        help="Print the parsed arguments and pipeline diagnostics to stderr.",
    )


def _add_draw_args(parser: argparse.ArgumentParser):
    args_draw = parser.add_argument_group("Drawing")
    args_draw.add_argument("--out", type=str, default="piling.svg", help="Output SVG path.")
    args_draw.add_argument(
        "--scale",
        type=float,
        default=100.0,
        help="Distance between strings in SVG units.",
    )
    args_draw.add_argument("--plus-colour", type=str, default="red")
    args_draw.add_argument("--zero-colour", type=str, default="grey")
    args_draw.add_argument("--minus-colour", type=str, default="blue")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raag-pilings",
        description="Word and conjugacy problems in right-angled Artin groups.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, n_words in SUBCOMMANDS.items():
        sub = subparsers.add_parser(command, help=HELP[command], description=HELP[command])
        _add_group_args(sub)
        _add_input_args(sub, n_words, command in ACCEPTS_PILING)
        _add_output_args(sub)
        if command == "draw":
            _add_draw_args(sub)
        if command == "conjugate":
            sub.add_argument(
                "--force-general",
                action="store_true",
                help="Skip the free and free abelian fast paths.",
            )
    return parser


def _read_words(path: str) -> list:
    with open(path, encoding="utf-8") as f:
        return [parse_word(line) for line in f.read().splitlines()]


def get_args(
    parser: argparse.ArgumentParser, argv: Optional[Sequence[str]] = None
) -> argparse.Namespace:
    """Parse argv and attach the derived `spec`, `words` and `piling` attributes.

    Malformed words, pilings or commuting lists raise the matching RaagError.
    """
    args = parser.parse_args(argv)
    n_words = SUBCOMMANDS[args.command]

    # Add convenient arguments to parser
    args.spec = GroupSpec.from_string(args.n, args.commuting)
    args.piling = getattr(args, "piling", None)
    if args.piling is not None:
        args.piling = parse_piling(args.piling, args.spec)

    if args.file is not None:
        words = _read_words(args.file)
    elif n_words == 2:
        words = [parse_word(w) for w in (args.w1, args.w2) if w is not None]
    else:
        words = [] if args.word is None else [parse_word(args.word)]

    if args.piling is None and len(words) < n_words:
        raise RaagError(f"{args.command} needs {n_words} word(s), got {len(words)}")
    args.words = words[:n_words]

    if args.verbose:
        dprint("=" * 60)
        dprint(args)
        dprint("=" * 60)
    return args

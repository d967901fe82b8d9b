"""Command line front end, installed as `raag-pilings`.

Exit codes: 0 for a positive verdict (or plain success), 1 for a negative
verdict, 2 for invalid input, 3 when the SVG cannot be written.
"""

# Standard
from typing import Optional, Sequence
import json
import logging
import sys

# Local Packages
from raag_piling_utils.utils.args_parsing import build_parser, get_args
from raag_piling_utils.utils.conjugacy import equal, identity, is_conjugate
from raag_piling_utils.utils.exceptions import NotNonSplit
from raag_piling_utils.utils.graphs import factorise, graph_from_edges, graphs_to_nsfactors
from raag_piling_utils.utils.pilings import (
    Piling,
    cyclically_reduce,
    normal_form_word,
    piling_of_word,
)
from raag_piling_utils.utils.pyramidal import cyclic_normal_form, pyramidal
from raag_piling_utils.utils.raag_setup import dprint, setup_logging
from raag_piling_utils.utils.render import RenderOptions, save_piling
from raag_piling_utils.utils.words import concat, format_word

logger = logging.getLogger(__name__)


def _input_piling(args) -> Piling:
    if args.piling is not None:
        return args.piling
    return piling_of_word(args.words[0], args.spec)


def _emit(args, payload: dict, lines: Sequence[str]):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _verdict(args, key: str, value: bool) -> int:
    _emit(args, {key: value}, ["true" if value else "false"])
    return 0 if value else 1


def run_conjugate(args) -> int:
    w1, w2 = args.words
    result = is_conjugate(w1, w2, args.spec, force_general=args.force_general)
    lines = ["true", format_word(result.witness)] if result else ["false"]
    _emit(args, result.to_dict(), lines)
    return 0 if result else 1


def run_equal(args) -> int:
    return _verdict(args, "equal", equal(*args.words, args.spec))


def run_identity(args) -> int:
    return _verdict(args, "identity", identity(args.words[0], args.spec))


def run_normal_form(args) -> int:
    w = normal_form_word(_input_piling(args), args.spec)
    _emit(args, {"normal_form": list(w)}, [format_word(w)])
    return 0


def run_piling(args) -> int:
    p = piling_of_word(args.words[0], args.spec)
    _emit(args, {"piling": p.to_list()}, [str(p)])
    return 0


def run_reduce_cyclic(args) -> int:
    result = cyclically_reduce(_input_piling(args), args.spec)
    reduced = normal_form_word(result.reduced, args.spec)
    _emit(
        args,
        {
            "reduced": list(reduced),
            "piling": result.reduced.to_list(),
            "conjugator": list(result.conjugator),
        },
        [format_word(reduced), format_word(result.conjugator)],
    )
    return 0


def run_factor(args) -> int:
    p = _input_piling(args)
    components = factorise(graph_from_edges(args.spec), p)
    factors = graphs_to_nsfactors(components, normal_form_word(p, args.spec), args.spec)
    _emit(
        args,
        {
            "supports": [sorted(c) for c in components],
            "factors": [f.to_list() for f in factors],
        },
        [str(f) for f in factors],
    )
    return 0


def run_pyramidal(args) -> int:
    reduction = cyclically_reduce(_input_piling(args), args.spec)
    components = factorise(graph_from_edges(args.spec), reduction.reduced)
    if len(components) > 1:
        raise NotNonSplit(
            f"cyclically reduced input splits into supports {[sorted(c) for c in components]}"
        )
    result = pyramidal(reduction.reduced, args.spec)
    # input = c * reduced * c^-1 and reduced = u * pyramid * u^-1
    conjugator = concat(reduction.conjugator, result.conjugator)
    cyclic_word = cyclic_normal_form(result.pyramidal_piling, args.spec)
    _emit(
        args,
        {
            "piling": result.pyramidal_piling.to_list(),
            "cyclic_normal_form": list(cyclic_word),
            "conjugator": list(conjugator),
        },
        [str(result.pyramidal_piling), format_word(conjugator)],
    )
    return 0


def run_draw(args) -> int:
    opts = RenderOptions(
        scale=args.scale,
        plus_colour=args.plus_colour,
        zero_colour=args.zero_colour,
        minus_colour=args.minus_colour,
        filename=args.out,
    )
    p = _input_piling(args)
    try:
        path = save_piling(p, opts)
    except OSError as e:
        dprint(f"cannot write {args.out}: {e}")
        return 3
    _emit(args, {"path": path}, [path])
    return 0


COMMANDS = {
    "conjugate": run_conjugate,
    "equal": run_equal,
    "identity": run_identity,
    "normal-form": run_normal_form,
    "piling": run_piling,
    "reduce-cyclic": run_reduce_cyclic,
    "factor": run_factor,
    "pyramidal": run_pyramidal,
    "draw": run_draw,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging("WARNING")
    parser = build_parser()
    try:
        args = get_args(parser, argv)
        if args.verbose:
            logging.getLogger("raag_piling_utils").setLevel(logging.DEBUG)
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as e:
        # RaagError is a ValueError; OSError here comes from reading --file
        dprint(f"error: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())

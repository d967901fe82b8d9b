"""SVG drawings of pilings.

Each generator gets a vertical string; its beads are stacked from the
bottom. Signed beads are filled with the plus or minus colour and carry a
+ or - glyph, 0 beads use the zero colour. Strings are labelled a1..aN
underneath.
"""

# Standard
from dataclasses import dataclass
import logging
import os

# Third Party
import drawsvg as draw

# Local Packages
from raag_piling_utils.utils.exceptions import EmptyGroup
from raag_piling_utils.utils.pilings import Piling

logger = logging.getLogger(__name__)

SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
MINUS_SIGN = "−"


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 100.0
    plus_colour: str = "red"
    zero_colour: str = "grey"
    minus_colour: str = "blue"
    filename: str = "piling.svg"

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    def colour(self, bead: int) -> str:
        if bead > 0:
            return self.plus_colour
        if bead < 0:
            return self.minus_colour
        return self.zero_colour


def generator_label(i: int) -> str:
    return "a" + str(i).translate(SUBSCRIPTS)


def draw_piling(p: Piling, opts: RenderOptions = RenderOptions()) -> str:
    """Render p as a standalone SVG document and return its text."""
    if p.n_columns == 0:
        raise EmptyGroup("cannot draw a piling with no columns")

    s = opts.scale
    height_in_beads = max(len(column) for column in p.columns)
    width = s * (p.n_columns + 1)
    height = s * (height_in_beads + 2)
    base = s * (height_in_beads + 1)

    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill="white"))

    for j, column in enumerate(p.columns, start=1):
        x = s * j
        d.append(draw.Line(x, s * 0.5, x, base, stroke="black", stroke_width=s * 0.04))
        for level, bead in enumerate(column):
            y = base - s * (level + 0.5)
            d.append(
                draw.Circle(
                    x, y, s * 0.4,
                    fill=opts.colour(bead),
                    stroke="black",
                    stroke_width=s * 0.02,
                )
            )
            if bead:
                d.append(
                    draw.Text(
                        "+" if bead > 0 else MINUS_SIGN,
                        s * 0.5,
                        x, y,
                        fill="white",
                        text_anchor="middle",
                        dominant_baseline="central",
                    )
                )
        d.append(
            draw.Text(
                generator_label(j),
                s * 0.35,
                x, base + s * 0.5,
                fill="black",
                text_anchor="middle",
                dominant_baseline="central",
            )
        )

    return d.as_svg()


def save_piling(p: Piling, opts: RenderOptions = RenderOptions(), path: str | None = None) -> str:
    """Write the drawing of p to path (default opts.filename) and return the path."""
    path = path or opts.filename
    svg = draw_piling(p, opts)
    with open(path, "w", encoding="utf-8") as f:
        f.write(svg)
    logger.info(f"piling drawing written to {os.path.abspath(path)}")
    return path

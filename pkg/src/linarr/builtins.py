"""Named arrangements: Ziegler's pair, the smooth-conic pair, and their 10-line extensions."""

from __future__ import annotations

from functools import lru_cache

from .arrangement import Arrangement, add_line, move_triple_point
from .parse import parse_linear_factors

AZ_TEXT = "xyz(x+y-z)(x-y+z)(2x-2y+z)(2x-y-2z)(2x+y+z)(2x-y-z)"
AD_TEXT = "xy(x-y-z)(x-y+z)(2x+y-2z)(x+3y-3z)(3x+2y+3z)(x+5y+5z)(7x-4y-z)"
ADP_TEXT = "xy(4x-5y-5z)(x-y+z)(16x+13y-20z)(x+3y-3z)(3x+2y+3z)(x+5y+5z)(7x-4y-z)"
TRIANGLE_TEXT = "xyz"

# the conic line added to AZ, AZp to get the 10-line pair
EXTRA_LINE = "x-y-z"
MOVED_FROM = (0, 1, 1)
# (0:2:1) as printed creates a seventh triple point at (1:-2:0); (0:3:1) keeps the lattice
MOVED_TO = (0, 3, 1)

# diagonals of the hexagon used for the octic of each 9-line built-in
DIAGONALS = {
    "AZ": ("x", "y", "z"),
    "AZp": ("x", "y", "z"),
    "AD": ("x", "y", "7x-4y-z"),
    "ADp": ("x", "y", "7x-4y-z"),
}

NAMES = ("AZ", "AZp", "AD", "ADp", "BZ", "BZp", "TRIANGLE")


def _from_text(text: str) -> Arrangement:
    return Arrangement.of(parse_linear_factors(text))


@lru_cache(maxsize=None)
def builtin(name: str) -> Arrangement:
    if name == "AZ":
        return _from_text(AZ_TEXT)
    if name == "AZp":
        return move_triple_point(builtin("AZ"), MOVED_FROM, MOVED_TO)
    if name == "AD":
        return _from_text(AD_TEXT)
    if name == "ADp":
        return _from_text(ADP_TEXT)
    if name == "BZ":
        return add_line(builtin("AZ"), _from_text(EXTRA_LINE).lines[0])
    if name == "BZp":
        return add_line(builtin("AZp"), _from_text(EXTRA_LINE).lines[0])
    if name == "TRIANGLE":
        return _from_text(TRIANGLE_TEXT)
    raise KeyError(f"unknown built-in arrangement {name!r}; known: {', '.join(NAMES)}")


def builtin_hexagon(name: str):
    from .hexagon import hexagon_from_arrangement
    return hexagon_from_arrangement(builtin(name), DIAGONALS[name])

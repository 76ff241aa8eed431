"""Reference quartic factors of the octic gap elements of AZ and AD, used as fixed test data."""

from __future__ import annotations

from linarr.parse import parse

QZ_TEXT = ("12x^4-12x^3y+3x^2y^2-6xy^3+3y^4-4x^3z+12x^2yz-2xy^2z+3y^3z-13x^2z^2"
           "+6xyz^2-6y^2z^2+2xz^3-3yz^3+3z^4")
QD_TEXT = ("51x^4+8x^3y+29x^2y^2+17xy^3+75y^4+12x^3z-13x^2yz+19xy^2z-15y^3z-186x^2z^2"
           "+26xyz^2-210y^2z^2-12xz^3+15yz^3+135z^4")

# octic = Pascal line * diagonals * quartic
OCTIC_AZ = parse(f"x y z (y-3z) ({QZ_TEXT})")
OCTIC_AD = parse(f"x y (7x-4y-z) (x-y-19z) ({QD_TEXT})")

CONIC_AZ = parse("2x^2-3xy+y^2-xz-z^2")
CONIC_AD = parse("x^2+y^2-z^2")

# six off-conic vertices whose sides and diagonals meet only in the expected points
GENERIC_VERTICES = [(0, 0, 1), (5, 0, 1), (7, 3, 1), (4, 7, 1), (-1, 6, 1), (-3, 2, 1)]

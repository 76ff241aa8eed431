"""From six points on a conic to an element of the saturation missing from J.

Run with ``python3 demos/pascal_octic.py [AZ|AD]``.
"""

from __future__ import annotations

import sys

from linarr.builtins import builtin, builtin_hexagon
from linarr.hexagon import pascal_line, pascal_octic, six_points_on_conic
from linarr.singular import congruent_mod_jacobian, defect_sequence, gap_certificate


def main(name: str = "AZ") -> None:
    h = builtin_hexagon(name)
    conic = six_points_on_conic([p.coords for p in h.vertices])
    print(f"vertices   {', '.join(str(v) for v in h.vertices)}")
    print(f"conic      {conic.conic} ({conic.kind})")
    print(f"opposite   {', '.join(str(b) for b in h.opposite_points)}")
    print(f"pascal     {pascal_line(h)}")
    oc = pascal_octic(h)
    print(f"tangent    rank {oc.system.rank}, c = {oc.system.solution}")
    print(f"quartic    {oc.quartic}")
    a = builtin(name)
    rep = defect_sequence(a)
    print(f"defects    {rep.defects} (last nonzero at k = {rep.threshold})")
    gap = gap_certificate(a, 8)
    same = congruent_mod_jacobian(a.polynomial(), oc.octic, gap.h)
    print(f"octic      in I_8 and not in J_8: {oc.certification['certified']}; "
          f"matches the elimination representative: {same}")


if __name__ == "__main__":
    main(*sys.argv[1:2])

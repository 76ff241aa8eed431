"""Two arrangements with the same combinatorics but different Jacobian relations.

Run with ``python3 demos/ziegler_pair.py``.
"""

from __future__ import annotations

from linarr.arrangement import intersection_lattice, lattice_isomorphic, total_tjurina
from linarr.builtins import builtin
from linarr.syzygy import minimal_generator_degrees


def describe(name: str) -> None:
    a = builtin(name)
    lat = intersection_lattice(a)
    prof = minimal_generator_degrees(a.polynomial())
    print(f"{name}: {len(a)} lines, multiple points {lat.multiplicity_counts()}, "
          f"tau {total_tjurina(lat)}")
    print(f"  relation degrees (up to {prof.cap}): {prof.generators}; mdr = {prof.mdr}")


def main() -> None:
    for pair in (("AZ", "AZp"), ("BZ", "BZp")):
        for name in pair:
            describe(name)
        iso, sigma = lattice_isomorphic(intersection_lattice(builtin(pair[0])),
                                        intersection_lattice(builtin(pair[1])))
        print(f"  lattices isomorphic: {iso} (line map {sigma})\n")


if __name__ == "__main__":
    main()

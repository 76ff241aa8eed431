"""Random hexagons: on a conic the arrangement has mdr 5, off a conic mdr 6.

Run with ``python3 demos/hexagon_search.py [COUNT] [SEED]``.
"""

from __future__ import annotations

import sys

from linarr.search import run_search, summarize


def main(count: int = 40, seed: int = 0) -> None:
    results = run_search(count, "mixed", seed)
    for r in results[:8]:
        where = "on conic " if r.on_conic else "off conic"
        status = f"mdr {r.mdr}, tangent rank {r.tangent_rank}" if r.generic else r.reason
        print(f"{r.index:>3} {where} {status}")
    s = summarize(results)
    print(f"... {s.samples} samples, {s.generic} generic")
    for key, counts in sorted(s.mdr_counts.items()):
        print(f"{key:>9}: " + ", ".join(f"mdr {m}: {n}" for m, n in sorted(counts.items())))


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))

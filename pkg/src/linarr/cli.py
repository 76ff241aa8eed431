"""Command-line interface: ``linarr <command> INPUT [flags]``.

Exit codes: 0 success, 2 parse error, 3 degenerate input, 4 failed internal
invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arrangement import ArrangementError, intersection_lattice, lattice_isomorphic, total_tjurina
from .hexagon import (
    NoOcticError, ProportionalBranchError, pascal_line, pascal_octic, six_points_on_conic,
    tangent_system,
)
from .inputs import PARSE_ERRORS, ResolvedInput, arrangement_to_json, resolve
from .poly import InhomogeneousError, LinearForm
from .render import render_arrangement
from .search import MODES, run_search, summarize, to_csv
from .singular import (
    DefectReport, GapCertificate, NonOrdinaryPointError, defect_sequence, gap_certificate,
)
from .syzygy import SyzygyProfile, mdr, minimal_generator_degrees

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_INVARIANT = 0, 2, 3, 4

TRUST_CAVEAT = ("input is not a product of linear forms; reducedness is assumed, "
                "and only the syzygy profile is computed")


class DegenerateInput(Exception):
    """Raised by a command when its input lacks the structure it needs."""


# ---------------------------------------------------------------------------
# reports


@dataclass
class AnalysisReport:
    input: str
    polynomial: str
    degree: int
    profile: SyzygyProfile
    lattice: dict | None = None
    tau: int | None = None
    defects: DefectReport | None = None
    gap: GapCertificate | None = None
    hexagon: dict | None = None
    caveat: str | None = None

    def to_json(self) -> dict:
        return {"input": self.input, "polynomial": self.polynomial, "degree": self.degree,
                "lattice": self.lattice, "tau": self.tau, "profile": self.profile.to_json(),
                "defects": self.defects.to_json() if self.defects else None,
                "gap": self.gap.to_json() if self.gap else None,
                "hexagon": self.hexagon, "caveat": self.caveat}

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        return cls(
            input=data["input"], polynomial=data["polynomial"], degree=data["degree"],
            profile=SyzygyProfile.from_json(data["profile"]),
            lattice=data.get("lattice"), tau=data.get("tau"),
            defects=DefectReport.from_json(data["defects"]) if data.get("defects") else None,
            gap=GapCertificate.from_json(data["gap"]) if data.get("gap") else None,
            hexagon=data.get("hexagon"), caveat=data.get("caveat"))

    def __eq__(self, other):
        return isinstance(other, AnalysisReport) and self.to_json() == other.to_json()

    def check(self) -> None:
        """τ must agree between the lattice and defect sections."""
        if self.defects is not None and self.defects.tau != self.tau:
            raise AssertionError(f"tau {self.tau} from the lattice, {self.defects.tau} from defects")
        if self.defects is not None and self.defects.mdr != self.profile.mdr:
            raise AssertionError("mdr differs between profile and defect sections")


def hexagon_section(ri: ResolvedInput) -> dict | None:
    h = ri.hexagon
    if h is None:
        return None
    conic = six_points_on_conic([p.coords for p in h.vertices])
    line = pascal_line(h)
    ts = tangent_system(h)
    section = {
        "vertices": h.to_json()["vertices"],
        "on_conic": conic.on_conic,
        "conic": str(conic.conic) if conic.conic is not None else None,
        "conic_kind": conic.kind,
        "pascal_line": str(line) if line is not None else None,
        "tangent_rank": ts.rank,
        "tangent_solution": list(ts.solution) if ts.solution else None,
        "octic": None,
        "octic_reason": None,
    }
    try:
        oc = pascal_octic(h)
        section["octic"] = str(oc.octic)
        section["quartic"] = str(oc.quartic)
        section["octic_certified"] = oc.certification["certified"]
    except NoOcticError as exc:
        section["octic_reason"] = str(exc)
    return section


def analyze(ri: ResolvedInput, cap: int | None = None) -> AnalysisReport:
    f = ri.polynomial
    profile = minimal_generator_degrees(f, cap)
    rep = AnalysisReport(ri.label, str(f), f.degree, profile)
    if ri.arrangement is None:
        rep.caveat = TRUST_CAVEAT
        return rep
    a = ri.arrangement
    lat = intersection_lattice(a)
    rep.lattice = lat.summary()
    rep.tau = total_tjurina(lat)
    rep.defects = defect_sequence(a, r=profile.mdr)
    k = rep.defects.threshold
    if profile.mdr < f.degree - 1 and k >= 0:
        rep.gap = gap_certificate(a, k)
    rep.hexagon = hexagon_section(ri)
    rep.check()
    return rep


def _format_analysis(rep: AnalysisReport) -> str:
    p = rep.profile
    out = [f"input      {rep.input}", f"degree     {rep.degree}", f"f          {rep.polynomial}"]
    if rep.caveat:
        out.append(f"caveat     {rep.caveat}")
    if rep.lattice is not None:
        pts = ", ".join(f"{c} points of multiplicity {m}" for m, c in rep.lattice["points"].items())
        out.append(f"lattice    {rep.lattice['lines']} lines; {pts}")
        out.append(f"tau        {rep.tau}")
    out.append(f"mdr        {p.mdr}")
    out.append(f"exponents  {p.generators} (found up to degree {p.cap})")
    out.append(f"free       {'yes' if p.free else 'no'}")
    if rep.defects is not None:
        out.append(f"defects    {rep.defects.defects}")
        out.append(f"threshold  defect_k = 0 iff k > {rep.defects.threshold}: "
                   f"{'holds' if rep.defects.consistent_with_threshold() else 'fails'}")
    if rep.gap is not None:
        out.append(f"gap        degree {rep.gap.degree}: {rep.gap.h}")
    if rep.hexagon is not None:
        hx = rep.hexagon
        out.append(f"conic      {hx['conic'] or 'none'}" + (f" ({hx['conic_kind']})" if hx["conic_kind"] else ""))
        out.append(f"pascal     {hx['pascal_line'] or 'none'}")
        out.append(f"tangent    rank {hx['tangent_rank']}, solution {hx['tangent_solution']}")
        out.append(f"octic      {hx['octic'] or 'none: ' + hx['octic_reason']}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# commands


def _emit(args, payload: dict | None, text: str) -> None:
    body = json.dumps(payload, indent=2) + "\n" if args.json else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def cmd_analyze(args) -> int:
    rep = analyze(resolve(args.input), args.cap)
    _emit(args, rep.to_json(), _format_analysis(rep))
    return EXIT_OK


def _need_arrangement(ri: ResolvedInput):
    if ri.arrangement is None:
        raise DegenerateInput(f"{ri.label}: not a product of linear forms")
    return ri.arrangement


def compare(a: ResolvedInput, b: ResolvedInput) -> dict:
    la = intersection_lattice(_need_arrangement(a))
    lb = intersection_lattice(_need_arrangement(b))
    iso, sigma = lattice_isomorphic(la, lb)
    pa, pb = mdr(a.polynomial), mdr(b.polynomial)
    notes = []
    for ri, r in ((a, pa), (b, pb)):
        if 2 * r == ri.polynomial.degree:
            notes.append(f"mdr({ri.label}) = d/2 = {r}")
    return {"a": a.label, "b": b.label, "isomorphic": iso,
            "witness": list(sigma) if sigma else None,
            "mdr": [pa, pb], "ziegler_pair": iso and pa != pb, "notes": notes}


def cmd_compare(args) -> int:
    res = compare(resolve(args.a), resolve(args.b))
    verdict = "ZIEGLER PAIR" if res["ziegler_pair"] else "not a Ziegler pair"
    lines = [f"lattices   {'isomorphic' if res['isomorphic'] else 'not isomorphic'}"
             + (f", line map {res['witness']}" if res["witness"] else ""),
             f"mdr        {res['a']}: {res['mdr'][0]}, {res['b']}: {res['mdr'][1]}"]
    lines += [f"note       {n}" for n in res["notes"]]
    lines.append(verdict)
    res["verdict"] = verdict
    _emit(args, res, "\n".join(lines))
    return EXIT_OK


def cmd_defects(args) -> int:
    ri = resolve(args.input)
    rep = defect_sequence(_need_arrangement(ri))
    text = "\n".join([f"tau {rep.tau}, d {rep.d}, mdr {rep.mdr}",
                      "k  dim_I  dim_J  defect"]
                     + [f"{k:<2} {i:>5} {j:>6} {df:>7}"
                        for k, (i, j, df) in enumerate(zip(rep.dim_I, rep.dim_J, rep.defects))]
                     + [f"defect_k = 0 iff k > {rep.threshold}: "
                        f"{'holds' if rep.consistent_with_threshold() else 'fails'}"])
    _emit(args, rep.to_json(), text)
    return EXIT_OK


def _need_hexagon(ri: ResolvedInput):
    if ri.hexagon is None:
        raise DegenerateInput(f"{ri.label}: no hexagon structure (needs 9 lines with 6 triple points)")
    return ri.hexagon


def cmd_octic(args) -> int:
    ri = resolve(args.input)
    oc = pascal_octic(_need_hexagon(ri))
    text = "\n".join([f"pascal     {oc.pascal_line}",
                      f"tangent    rank {oc.system.rank}, solution {list(oc.system.solution)}",
                      f"quartic    {oc.quartic}",
                      f"octic      {oc.octic}",
                      f"certified  {oc.certification['certified']}"])
    _emit(args, oc.to_json(), text)
    return EXIT_OK


def cmd_pascal(args) -> int:
    h = _need_hexagon(resolve(args.input))
    conic = six_points_on_conic([p.coords for p in h.vertices])
    line = pascal_line(h)
    payload = {"on_conic": conic.on_conic,
               "conic": str(conic.conic) if conic.conic is not None else None,
               "conic_kind": conic.kind,
               "opposite_points": [str(p) for p in h.opposite_points],
               "pascal_line": str(line) if line is not None else None}
    text = "\n".join([f"conic      {payload['conic'] or 'none'}",
                      f"opposite   {', '.join(payload['opposite_points'])}",
                      f"pascal     {payload['pascal_line'] or 'not collinear'}"])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_search(args) -> int:
    results = run_search(args.count, args.mode, args.seed, args.jobs)
    data = to_csv(results)
    summary = summarize(results).to_json()
    text = (f"{summary['samples']} samples, {summary['generic']} generic; "
            f"degenerate {summary['degenerate']}; mdr by position {summary['mdr_counts']}; "
            f"off-conic mdr 5 at {summary['off_conic_mdr5']}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(data)
        sys.stdout.write((json.dumps(summary, indent=2) if args.json else text) + "\n")
    else:
        sys.stdout.write(data)
        sys.stderr.write(text + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    ri = resolve(args.input)
    a = _need_arrangement(ri)
    conic = pascal = quartic = None
    if ri.hexagon is not None:
        c = six_points_on_conic([p.coords for p in ri.hexagon.vertices])
        if c.on_conic:
            conic = c.conic
            pascal = pascal_line(ri.hexagon)
            try:
                quartic = pascal_octic(ri.hexagon).quartic
            except NoOcticError:
                quartic = None
    chart = LinearForm.of(args.chart)
    scene = render_arrangement(a, conic, pascal, quartic, chart=chart)
    out = args.out or "figure.svg"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(scene.to_svg())
    counts = {k: scene.count(k) for k in ("arrangement", "conic", "pascal", "quartic")}
    text = (f"wrote {out}: {counts['arrangement']} lines, {counts['conic']} conic pieces, "
            f"{counts['pascal']} Pascal line, {counts['quartic']} quartic pieces")
    if args.json:
        sys.stdout.write(json.dumps({"out": out, "counts": counts}, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def cmd_lattice(args) -> int:
    ri = resolve(args.input)
    lat = intersection_lattice(_need_arrangement(ri))
    payload = {"arrangement": arrangement_to_json(ri.arrangement), **lat.summary(),
               "tau": total_tjurina(lat),
               "multiple_points": [{"point": [str(c) for c in mp.point.coords],
                                    "multiplicity": mp.multiplicity, "lines": list(mp.lines)}
                                   for mp in lat.points]}
    lines = [f"{i}: {l}" for i, l in enumerate(ri.arrangement.lines)]
    lines += [f"{mp.point}  m={mp.multiplicity}  lines {list(mp.lines)}" for mp in lat.points]
    lines.append(f"counts {lat.summary()['points']}, tau {payload['tau']}")
    if args.other:
        other = intersection_lattice(_need_arrangement(resolve(args.other)))
        iso, sigma = lattice_isomorphic(lat, other)
        payload["isomorphic"] = iso
        payload["witness"] = list(sigma) if sigma else None
        lines.append(f"isomorphic to {args.other}: {iso}" + (f", line map {list(sigma)}" if sigma else ""))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)

    def d(v):
        return v if defaults else argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(0), help="random seed (search)")
    p.add_argument("--cap", type=int, default=d(None), help="highest degree for syzygy generators")
    p.add_argument("--out", default=d(None), help="output path")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linarr", parents=[_global_flags(True)],
        description="Exact invariants of plane line arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(False)]
    inp = "built-in name (AZ, AZp, AD, ADp, BZ, BZp, TRIANGLE), JSON/text file, or expression"

    p = sub.add_parser("analyze", parents=common, help="full report")
    p.add_argument("input", help=inp)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", parents=common, help="lattice isomorphism and mdr of two inputs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("defects", parents=common, help="defect sequence of the singular scheme")
    p.add_argument("input", help=inp)
    p.set_defaults(func=cmd_defects)

    p = sub.add_parser("octic", parents=common, help="octic built from the Pascal line and quartic")
    p.add_argument("input", help=inp)
    p.set_defaults(func=cmd_octic)

    p = sub.add_parser("pascal", parents=common, help="conic through the vertices and Pascal line")
    p.add_argument("input", help=inp)
    p.set_defaults(func=cmd_pascal)

    p = sub.add_parser("search", parents=common, help="random hexagon experiment as CSV")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--mode", choices=MODES, default="mixed")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", parents=common, help="SVG picture in an affine chart")
    p.add_argument("input", help=inp)
    p.add_argument("--chart", default="z", help="line sent to infinity (default z)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("lattice", parents=common, help="intersection lattice (optionally compared)")
    p.add_argument("input", help=inp)
    p.add_argument("other", nargs="?")
    p.set_defaults(func=cmd_lattice)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (*PARSE_ERRORS, InhomogeneousError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ArrangementError, DegenerateInput, NoOcticError, NonOrdinaryPointError,
            ProportionalBranchError) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except AssertionError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.  JSON goes
to stdout, progress and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__, forcing, mr_classify, parallel_paths, scan, witness
from .errors import ProbeIEPError
from .graph import ProbeGraph, emit_graph6, parse_graph6
from .linalg import RationalMatrix, nullity

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("probeiep")


class UsageError(Exception):
    pass


def _parse_nonprobes(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise UsageError(f"--nonprobes expects comma-separated integers, got {text!r}") from None


def _read_graphs(args) -> list[tuple[str, object]]:
    """(source line, Graph) pairs from positional graph6 strings, --input, or stdin."""
    lines: list[str] = list(args.graphs or [])
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="ascii")
        lines.extend(text.splitlines())
    elif not lines:
        lines = sys.stdin.read().splitlines()
    out = []
    for line in lines:
        line = line.strip()
        if line:
            out.append((line, parse_graph6(line)))
    if not out:
        raise UsageError("no graph6 input")
    return out


def _emit(args, records: list[dict], text_lines: list[str]) -> None:
    if args.json:
        payload = records[0] if len(records) == 1 else records
        json.dump(payload, sys.stdout, indent=2, sort_keys=False)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands


def cmd_recognize(args) -> int:
    records, lines = [], []
    status = EXIT_OK
    for src, g in _read_graphs(args):
        rec = parallel_paths.recognize(g)
        item = {"graph6": emit_graph6(g), **rec.to_json()}
        if args.verify:
            bf = parallel_paths.find_certificate_bruteforce(g) is not None
            item["brute_force"] = bf
            if bf != rec.result:
                status = EXIT_CHECK
        records.append(item)
        lines.append(f"{src}\t{'yes' if rec.result else 'no'}\t{rec.reason}")
    _emit(args, records, lines)
    return status


def cmd_zf(args) -> int:
    nonprobes = _parse_nonprobes(args.nonprobes)
    records, lines = [], []
    for src, g in _read_graphs(args):
        if args.mode == "standard":
            if nonprobes:
                raise UsageError("standard mode takes no non-probes")
            z, wit = forcing.zero_forcing_number(g)
        else:
            z, wit = forcing.probe_zero_forcing_number(ProbeGraph(g, nonprobes))
        records.append({"graph6": emit_graph6(g), "N": sorted(nonprobes), "mode": args.mode,
                        "Z": z, "witness": sorted(wit)})
        lines.append(f"{src}\tZ={z}\twitness={sorted(wit)}")
    _emit(args, records, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    nonprobes = _parse_nonprobes(args.nonprobes)
    records, lines = [], []
    for src, g in _read_graphs(args):
        pg = ProbeGraph(g, nonprobes)
        cls = mr_classify.classify(pg)
        item = cls.to_json(pg)
        if args.witness_out:
            path = Path(args.witness_out)
            path.write_text(witness.nullity_witness(pg).to_text())
            item["witness_file"] = str(path)
        records.append(item)
        iv = cls.interval
        lines.append(f"{src}\t{cls.verdict.value}\tvalue={cls.value}\tinterval=[{iv.lower},{iv.upper}]")
    _emit(args, records, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    nonprobes = _parse_nonprobes(args.nonprobes)
    records, lines = [], []
    status = EXIT_OK
    for src, g in _read_graphs(args):
        pg = ProbeGraph(g, nonprobes)
        m = witness.nullity_witness(pg)
        item = witness.witness_envelope(pg, m)
        if not item["in_class"] or nullity(m) != len(nonprobes):
            status = EXIT_CHECK
        if args.realization:
            top = RationalMatrix.from_text(Path(args.realization).read_text())
            real = witness.Realization(top)
            qc = witness.construct_Q(pg, real)
            sb = witness.sandwich_bounds(pg, real)
            item["sandwich"] = sb.to_json()
            item["Q"] = qc.Q.to_text()
        item["interval"] = witness.mr_interval(pg).to_json()
        records.append(item)
        lines.append(f"{src}\trank={item['claimed_rank']}\tnullity={item['claimed_nullity']}"
                     f"\tin_class={item['in_class']}")
        if not args.json:
            lines.append(m.to_text())
    _emit(args, records, lines)
    return status


def cmd_scan(args) -> int:
    threads = scan.resolve_threads(args.threads)
    log.info("scan %s up to n=%d with %d thread(s)", args.check, args.n, threads)
    report = scan.run_scan(args.check, args.n, threads, progress=lambda msg: log.info("%s", msg))
    if args.json:
        json.dump(report.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"{report.check}\tn<={args.n}\ttested={report.tested}\tfailed={report.failed}"
              f"\t{report.wall_time:.1f}s")
        for ex in report.exhibits:
            print("  " + json.dumps(ex))
    return EXIT_OK if report.ok else EXIT_CHECK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="probeiep", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("graphs", nargs="*", help="graph6 strings (default: read stdin)")
        sp.add_argument("-i", "--input", help="file with one graph6 per line ('-' for stdin)")
        sp.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("recognize", help="two-parallel-paths recognition")
    graph_input(sp)
    sp.add_argument("--verify", action="store_true", help="also run the brute-force search; exit 1 on mismatch")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("zf", help="(probe) zero forcing number")
    graph_input(sp)
    sp.add_argument("--nonprobes", help="comma-separated non-probe labels")
    sp.add_argument("--mode", choices=["probe", "standard"], default="probe")
    sp.set_defaults(func=cmd_zf)

    sp = sub.add_parser("classify", help="extreme minimum-rank classification")
    graph_input(sp)
    sp.add_argument("--nonprobes", help="comma-separated non-probe labels")
    sp.add_argument("--witness-out", help="write the nullity witness matrix to this file")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("witness", help="nullity witness and rank bounds")
    graph_input(sp)
    sp.add_argument("--nonprobes", help="comma-separated non-probe labels")
    sp.add_argument("--realization", help="text matrix [A | B] (probe rows, probe-order columns)")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("scan", help="batch verification over enumerated graphs")
    sp.add_argument("--check", required=True, choices=sorted(scan.CHECKS))
    sp.add_argument("--n", type=int, default=6, help="largest vertex count")
    sp.add_argument("--threads", type=int, default=None,
                    help=f"worker threads (overrides ${scan.THREADS_ENV})")
    sp.add_argument("--json", action="store_true", help="JSON report")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ProbeIEPError, ValueError, OSError) as exc:
        print(f"probeiep {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

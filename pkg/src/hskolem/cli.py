"""Command-line surface: construct, verify, search, survey, convert.

Exit codes: 0 success / verified, 1 verification failed, 2 no labeling
exists for the requested order, 3 search bound exceeded, 64 usage error,
65 unreadable or malformed input, 70 internal contradiction.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, core, search, verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_GRACEFUL = 2
EXIT_BOUND = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_CONTRADICTION = 70

_KINDS = {
    "skolem": core.SequenceKind.SKOLEM,
    "hooked-skolem": core.SequenceKind.HOOKED_SKOLEM,
    "hooked": core.SequenceKind.HOOKED,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_search_flags(p):
    p.add_argument("--mode", choices=search.MODES, default="exists")
    p.add_argument("--limit", type=int, default=None,
                   help="max solutions for --mode enum")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="override the exhaustive-search bound")


def build_parser() -> _Parser:
    parser = _Parser(prog="hskolem", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_construct = sub.add_parser("construct")
    csub = p_construct.add_subparsers(dest="target", required=True, parser_class=_Parser)
    p_cnk2 = csub.add_parser("nk2")
    p_cnk2.add_argument("--n", type=int, required=True)
    p_cnk2.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify")
    vsub = p_verify.add_subparsers(dest="target", required=True, parser_class=_Parser)
    p_vlab = vsub.add_parser("labeling")
    p_vlab.add_argument("--file", required=True)
    p_vseq = vsub.add_parser("sequence")
    p_vseq.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p_vseq.add_argument("--d", type=int, default=1)
    p_vseq.add_argument("--seq", required=True)

    p_search = sub.add_parser("search")
    ssub = p_search.add_subparsers(dest="target", required=True, parser_class=_Parser)
    p_snk2 = ssub.add_parser("nk2")
    p_snk2.add_argument("--n", type=int, required=True)
    p_snk2.add_argument("--k", type=int, required=True)
    p_snk2.add_argument("--d", type=int, required=True)
    _add_search_flags(p_snk2)
    p_sgraph = ssub.add_parser("graph")
    p_sgraph.add_argument("--edges", required=True, help="edge-list file")
    p_sgraph.add_argument("--p", type=int, default=None,
                          help="expected vertex count (checked against the file)")
    p_sgraph.add_argument("--k", type=int, required=True)
    p_sgraph.add_argument("--d", type=int, required=True)
    _add_search_flags(p_sgraph)
    p_sseq = ssub.add_parser("sequence")
    p_sseq.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p_sseq.add_argument("--m", type=int, required=True)
    p_sseq.add_argument("--d", type=int, default=1)
    _add_search_flags(p_sseq)

    p_survey = sub.add_parser("survey")
    usub = p_survey.add_subparsers(dest="target", required=True, parser_class=_Parser)
    p_unk2 = usub.add_parser("nk2")
    p_unk2.add_argument("--n-max", type=int, required=True)
    p_unk2.add_argument("--k", type=int, required=True)
    p_unk2.add_argument("--d", type=int, required=True)
    p_unk2.add_argument("--search-up-to", type=int, default=0)
    p_unk2.add_argument("--jobs", type=int, default=1)
    p_unk2.add_argument("--force", action="store_true")

    p_convert = sub.add_parser("convert")
    p_convert.add_argument("--from", dest="from_form",
                           choices=("pairs", "sequence"), required=True)
    p_convert.add_argument("--to", dest="to_form",
                           choices=("pairs", "sequence"), required=True)
    p_convert.add_argument("--kind", choices=sorted(_KINDS), default="hooked")
    p_convert.add_argument("--d", type=int, default=1)
    p_convert.add_argument("--in", dest="source", required=True,
                           help="path to a file, or the value inline")

    return parser


def _read_source(source: str) -> str:
    path = Path(source)
    try:
        if path.is_file():
            return path.read_text()
    except OSError:
        pass
    return source


def load_edge_list(text: str) -> core.Graph:
    """First line "p <int>", then one "u v" edge per line (1-based)."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("p "):
        raise core.ParseError('edge-list file must start with "p <int>"')
    try:
        p = int(lines[0].split()[1])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except (ValueError, IndexError) as exc:
        raise core.ParseError(f"bad edge-list line: {exc}") from exc
    return core.Graph(p, tuple(edges))


def _cmd_construct(args) -> int:
    try:
        ps = construct.construct_nk2_21(args.n)
    except construct.NotGraceful:
        print("not (2,1)-hooked Skolem graceful: n ≡ 0 or 3 (mod 4)",
              file=sys.stderr)
        return EXIT_NOT_GRACEFUL
    if args.format == "json":
        print(core.pair_system_to_json(ps, 2, 1))
    else:
        print(core.format_pairs(ps))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.target == "labeling":
        try:
            text = Path(args.file).read_text()
            ps, k, d = core.pair_system_from_json(text)
        except (OSError, core.ParseError, core.DomainError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DATA
        report = verify.verify_pair_system(ps, k, d)
    else:
        kind = _KINDS[args.kind]
        try:
            s = core.parse_sequence(args.seq, kind=kind, d=args.d)
        except core.ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DATA
        if kind is core.SequenceKind.SKOLEM:
            report = verify.verify_skolem_sequence(s)
        elif kind is core.SequenceKind.HOOKED_SKOLEM:
            report = verify.verify_hooked_skolem_sequence(s)
        else:
            report = verify.verify_hooked_sequence(s, args.d)
    print(report.to_text())
    return EXIT_OK if report.valid else EXIT_INVALID


def _print_outcome(outcome, mode, render) -> None:
    if mode == "exists":
        print("true" if outcome.exists else "false")
    elif mode == "count":
        print(outcome.count)
    elif mode == "first":
        print(render(outcome.solutions[0]) if outcome.solutions else "none")
    else:
        for sol in outcome.solutions:
            print(render(sol))


def _cmd_search(args) -> int:
    try:
        if args.target == "nk2":
            outcome = search.search_nk2(args.n, args.k, args.d, args.mode,
                                        limit=args.limit, jobs=args.jobs,
                                        force=args.force)
            render = core.format_pairs
        elif args.target == "graph":
            try:
                g = load_edge_list(Path(args.edges).read_text())
            except (OSError, core.ParseError, core.DomainError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_DATA
            if args.p is not None and args.p != g.p:
                print(f"error: --p {args.p} != file p {g.p}", file=sys.stderr)
                return EXIT_DATA
            outcome = search.search_graph(g, args.k, args.d, args.mode,
                                          limit=args.limit, jobs=args.jobs,
                                          force=args.force)
            render = lambda f: " ".join(str(x) for x in f.labels)
        else:
            kind = _KINDS[args.kind]
            kwargs = dict(mode=args.mode, limit=args.limit, jobs=args.jobs,
                          force=args.force)
            if kind is core.SequenceKind.SKOLEM:
                outcome = search.search_skolem(args.m, **kwargs)
            elif kind is core.SequenceKind.HOOKED_SKOLEM:
                outcome = search.search_hooked_skolem(args.m, **kwargs)
            else:
                outcome = search.search_hooked_sequence(args.d, args.m, **kwargs)
            render = core.format_sequence
    except search.BoundExceeded as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_BOUND
    _print_outcome(outcome, args.mode, render)
    return EXIT_OK


def _cmd_survey(args) -> int:
    try:
        rows = search.survey_nk2(range(1, args.n_max + 1), args.k, args.d,
                                 search_up_to=args.search_up_to,
                                 jobs=args.jobs, force=args.force)
    except search.BoundExceeded as exc:
        print(f"error: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_BOUND
    except search.ContradictionDetected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    print(f"{'n':>4}  {'parity':<8}  search")
    for row in rows:
        feasible = "yes" if row.parity_feasible else "no"
        found = "-" if row.exists is None else ("true" if row.exists else "false")
        print(f"{row.n:>4}  {feasible:<8}  {found}")
    return EXIT_OK


def _cmd_convert(args) -> int:
    kind = _KINDS[args.kind]
    text = _read_source(args.source)
    try:
        if args.from_form == "pairs":
            if text.lstrip().startswith("{"):
                ps, _, _ = core.pair_system_from_json(text)
            else:
                ps = core.parse_pairs(text)
            s = None
        else:
            s = core.parse_sequence(text, kind=kind, d=args.d)
            ps = None
        if args.to_form == "sequence":
            if s is None:
                s = core.pairs_to_sequence(ps, kind, d=args.d)
            print(core.format_sequence(s))
        else:
            if ps is None:
                ps = core.sequence_to_pairs(s)
            print(core.format_pairs(ps))
    except core.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


_DISPATCH = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "survey": _cmd_survey,
    "convert": _cmd_convert,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    return _DISPATCH[args.command](args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

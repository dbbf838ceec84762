"""
CLI Application Module
Command-line interface for the 5-move invariant engine
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, Tuple

from config import Config
from engine import CheckRow, InvariantEngine, InvariantReport
from errors import KnotMovesError, SpecRangeError

logger = logging.getLogger(__name__)


def _status(message: str):
    print(message, file=sys.stderr)


def parse_point(text: Optional[str]) -> Optional[Tuple[int, int]]:
    """'24,32' -> (24, 32): a0 = zeta^24, x0 = zeta^32 + zeta^-32"""
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise SpecRangeError("--point takes two zeta powers, e.g. --point=24,32")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise SpecRangeError(f"--point values must be integers, got '{text}'") from None


class KnotMovesCLI:
    """Command-line interface for the invariant engine"""

    def __init__(self, limit: Optional[int] = None):
        """Initialize CLI application"""
        errors = Config.validate_config()
        if errors:
            _status("❌ Configuration errors:")
            for error in errors:
                _status(f"   - {error}")
            sys.exit(1)

        self.engine = InvariantEngine(limit=limit)

    # ------------------------------------------------------------- output

    @staticmethod
    def emit_json(data):
        print(json.dumps(data, indent=2))

    @staticmethod
    def print_report(report: InvariantReport):
        print(f"📊 {report.spec}")
        print(f"   crossings:   {report.crossings}")
        print(f"   components:  {report.components}")
        print(f"   col_5:       {report.col5}")
        print(f"   col_3:       {report.col3}")
        print(f"   F(1,x0):     {report.f_special} ({report.f_float:.{Config.FLOAT_DIGITS}f})")
        print(f"   |V(t)|:      {report.v_abs:.{Config.FLOAT_DIGITS}f}")
        print(f"   V(t,5):      {report.class5}")
        if report.kauffman is not None:
            print(f"   F(a,x):      {report.kauffman}")
        if report.f_set is not None:
            members = ", ".join(str(m) for m in report.f_set.members)
            print(f"   Set(F):      {{{members}}}")

    @staticmethod
    def table_csv(rows: List[CheckRow]) -> str:
        columns: List[str] = []
        for r in rows:
            for name in r.checks:
                if name not in columns:
                    columns.append(name)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["id", "status"] + columns + ["note"])
        for r in rows:
            cells = ["" if c not in r.checks else ("PASS" if r.checks[c] else "FAIL") for c in columns]
            writer.writerow([r.key, r.status] + cells + [r.note])
        return buffer.getvalue()

    # ------------------------------------------------------------- commands

    def cmd_compute(self, args) -> int:
        report = self.engine.report(args.spec, kauffman=args.kauffman, point=parse_point(args.point))
        if args.json:
            self.emit_json(report.to_json())
        else:
            self.print_report(report)
        return 0

    def cmd_compare(self, args) -> int:
        verdict = self.engine.compare(args.spec_a, args.spec_b, point=parse_point(args.point))
        if args.json:
            self.emit_json(verdict.to_json())
        else:
            print(verdict.label)
        return 0

    def cmd_table(self, args) -> int:
        if args.which == "4.1":
            only = None
            if args.only is not None:
                try:
                    only = int(args.only)
                except ValueError:
                    raise SpecRangeError(f"--only takes a row number, got '{args.only}'") from None
            rows = self.engine.table41(only)
        else:
            rows = self.engine.table71(args.only)

        if args.json:
            self.emit_json([r.to_json() for r in rows])
        else:
            sys.stdout.write(self.table_csv(rows))

        failed = [r.key for r in rows if r.status == "FAIL"]
        if failed:
            _status(f"❌ {len(failed)} FAIL: {', '.join(failed)}")
            return 1
        _status(f"✅ {len(rows)} rows checked")
        return 0

    def cmd_density(self, args) -> int:
        points = self.engine.density(args.kmax)
        if args.json:
            self.emit_json([p.to_json() for p in points])
        else:
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(["k1", "k2", "v_abs"])
            for p in points:
                writer.writerow([p.k1, p.k2, f"{p.value:.{Config.FLOAT_DIGITS}f}"])
        _status(f"✅ {len(points)} values, pairwise distinct")
        return 0

    def cmd_reduce_rational(self, args) -> int:
        p, _, q = args.fraction.partition("/")
        try:
            reduction = self.engine.reduce_rational(int(p), int(q or 1))
        except ValueError:
            raise SpecRangeError(f"expected p/q, got '{args.fraction}'") from None
        data = reduction.to_json()
        if args.json:
            self.emit_json(data)
        else:
            print(f"[{data['fraction']}] = {data['continued_fraction']}")
            print(f"   tangle class:  [{data['class12']}]")
            print(f"   closure class: {data['link_class']}  F = {data['F']}  |V| = {data['v_abs']}")
        return 0

    def cmd_reduce_montesinos(self, args) -> int:
        reduction = self.engine.reduce_montesinos(args.spec, with_report=not args.no_report)
        if args.json:
            self.emit_json(reduction.to_json())
            return 0
        print(f"{reduction.spec} -> {reduction.canonical}")
        print(f"   V(t,5):  {reduction.class5}")
        if reduction.report is not None:
            mark = "✓" if reduction.consistent else "❌"
            print(f"   direct computation agrees: {mark}")
        for flag in reduction.flags:
            _status(f"⚠️  {flag}")
        return 0

    def cmd_move(self, args) -> int:
        result = self.engine.move(args.spec, args.edge_a, args.edge_b, args.move, args.face)
        if args.json:
            self.emit_json(result.to_json())
        else:
            print(f"site: edges {result.site.edge_a}, {result.site.edge_b} on face {result.site.face}")
            self.print_report(result.before)
            self.print_report(result.after)
        return 0

    def cmd_sites(self, args) -> int:
        sites = self.engine.sites(args.spec)
        if args.json:
            self.emit_json([{"edge_a": s.edge_a, "edge_b": s.edge_b, "face": s.face} for s in sites])
        else:
            for s in sites:
                print(f"{s.edge_a}\t{s.edge_b}\t{s.face}")
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotmoves", description="5-move and (2,2)-move link invariants")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON on stdout")
    common.add_argument("--limit", type=int, default=None, help="crossing cap for both skein engines")

    tabular = argparse.ArgumentParser(add_help=False)
    tabular.add_argument("--csv", action="store_true", help="CSV on stdout, the default for this command")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="invariant report of one link")
    p.add_argument("spec")
    p.add_argument("--kauffman", action="store_true", help="include the Kauffman polynomial F(a,x)")
    p.add_argument("--point", help="Set(F) at a0=zeta^i, x0=zeta^j+zeta^-j, given as i,j")
    p.set_defaults(handler="cmd_compute")

    p = sub.add_parser("compare", parents=[common], help="try to distinguish two links")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.add_argument("--point", help="also compare Set(F) at this point")
    p.set_defaults(handler="cmd_compare")

    p = sub.add_parser("table", parents=[common, tabular], help="recompute a catalog table")
    p.add_argument("which", choices=["4.1", "7.1"])
    p.add_argument("--only", help="row number (4.1) or box name (7.1)")
    p.set_defaults(handler="cmd_table")

    p = sub.add_parser("density", parents=[common, tabular], help="|1+t|^k1 |1-t|^k2 values")
    p.add_argument("kmax", type=int)
    p.set_defaults(handler="cmd_density")

    p = sub.add_parser("reduce-rational", parents=[common], help="classify a rational tangle p/q")
    p.add_argument("fraction")
    p.set_defaults(handler="cmd_reduce_rational")

    p = sub.add_parser("reduce-montesinos", parents=[common], help="canonical class of a Montesinos link")
    p.add_argument("spec")
    p.add_argument("--no-report", action="store_true", help="skip the direct invariant computation")
    p.set_defaults(handler="cmd_reduce_montesinos")

    p = sub.add_parser("move", parents=[common], help="apply a move at a site")
    p.add_argument("spec")
    p.add_argument("edge_a", type=int)
    p.add_argument("edge_b", type=int)
    p.add_argument("move", help="twist:<k> or rational:<p>/<q>")
    p.add_argument("--face", type=int, default=None)
    p.set_defaults(handler="cmd_move")

    p = sub.add_parser("sites", parents=[common], help="list co-facial move sites")
    p.add_argument("spec")
    p.set_defaults(handler="cmd_sites")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for CLI application"""
    Config.setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.json and getattr(args, "csv", False):
        parser.error("--json and --csv are exclusive")
    try:
        cli = KnotMovesCLI(limit=args.limit)
        return getattr(cli, args.handler)(args)
    except KnotMovesError as e:
        _status(f"❌ {e}")
        return e.exit_code
    except KeyboardInterrupt:
        _status("\n👋 Interrupted")
        return 130


if __name__ == "__main__":
    sys.exit(main())

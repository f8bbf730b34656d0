"""Command line: ``spingraphs {classes,graph,types,verify}``.

Exit codes: 0 success, 1 usage error, 2 validation or invariant failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import atlas, verify
from .atlas import (
    GENUS_CEILING,
    GenusError,
    classes_for_genus,
    class_count,
    iter_surface_types,
    total_class_count,
)
from .export import render
from .graphs import exceptional_graph, standard_graph, validate, weierstrass_graph

log = logging.getLogger("spingraphs")

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt_tuple(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _check_genus(g: int, ceiling: int) -> None:
    try:
        atlas.check_genus(g, ceiling)
    except GenusError as exc:
        raise UsageError(str(exc)) from None


def cmd_classes(genus: int, order: int | None = None, fmt: str = "table",
                ceiling: int = GENUS_CEILING) -> str:
    _check_genus(genus, ceiling)
    if order is not None and not 0 <= order <= genus - 1:
        raise UsageError(f"--order must lie in 0..{genus - 1}")
    classes = classes_for_genus(genus, ceiling)
    if order is not None:
        classes = [c for c in classes if c.r == order]
    orders = range(genus) if order is None else [order]
    counts = {r: class_count(genus, r) for r in orders}
    total = total_class_count(genus)

    if fmt == "json":
        doc = {
            "genus": genus,
            "order": order,
            "classes": [
                {
                    "label": c.label,
                    "r": c.r,
                    "s": c.s,
                    "khat": list(c.khat),
                    "i": c.i,
                    "p": list(c.p),
                    "branch_number": c.branch_number,
                    "vertices": c.vertex_count,
                }
                for c in classes
            ],
            "N": {str(r): n for r, n in counts.items()},
            "M": total,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "table":
        raise UsageError(f"classes supports --format table|json, not {fmt}")

    rows = [("class", "r", "khat", "(i;p)", "B_r", "vertices")]
    for c in classes:
        ip = str(c.i) + (";" + ",".join(map(str, c.p)) if c.p else "")
        rows.append((c.label, str(c.r), _fmt_tuple(c.khat), f"({ip})", str(c.branch_number), str(c.vertex_count)))
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.append("")
    lines.append(" ".join(f"N({r})={n}" for r, n in counts.items()))
    lines.append(f"M={total}")
    return "\n".join(lines) + "\n"


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed partition {text!r}: expected comma-separated integers") from None
    return parts


def cmd_graph(genus: int, standard: bool = False, weierstrass: bool = False,
              partition: str | None = None, fmt: str = "dot",
              ceiling: int = GENUS_CEILING) -> str:
    _check_genus(genus, ceiling)
    if sum([standard, weierstrass, partition is not None]) != 1:
        raise UsageError("choose exactly one of --standard, --weierstrass, --partition")
    if fmt not in ("dot", "json"):
        raise UsageError(f"graph supports --format dot|json, not {fmt}")
    if standard:
        graph = standard_graph(genus)
    elif weierstrass:
        graph = weierstrass_graph(genus)
    else:
        khat = _parse_partition(partition)
        try:
            cls = atlas.ExceptionalClass(genus, tuple(sorted(khat)))
        except ValueError as exc:
            raise UsageError(f"malformed partition {partition!r}: {exc}") from None
        graph = exceptional_graph(genus, cls)
    problems = validate(graph)
    if problems:
        raise ValidationFailure("; ".join(problems))
    return render(graph, fmt)


def cmd_types(genus: int, fmt: str = "table", check_paper: bool = False,
              ceiling: int = GENUS_CEILING) -> str:
    _check_genus(genus, ceiling)
    classes = classes_for_genus(genus, ceiling)
    published = atlas.PUBLISHED_SURFACE_TYPES.get(genus) if check_paper else None

    def flag(t):
        if published is None:
            return None
        return t in published

    if fmt == "json":
        types = []
        for t in iter_surface_types(genus):
            entry = {"counts": list(t)}
            if check_paper:
                entry["published"] = flag(t)
            types.append(entry)
        doc = {
            "genus": genus,
            "classes": [{"label": c.label, "khat": list(c.khat), "branch_number": c.branch_number} for c in classes],
            "budget": 4 * genus,
            "types": types,
            "count": len(types),
        }
        if published is not None:
            doc["published_count"] = sum(1 for e in types if e["published"])
            doc["unpublished_count"] = sum(1 for e in types if not e["published"])
        return json.dumps(doc, indent=2) + "\n"
    if fmt != "table":
        raise UsageError(f"types supports --format table|json, not {fmt}")

    header = " ".join(c.label for c in classes)
    lines = [f"# genus {genus}: sum m*B = {4 * genus}; B = " + ",".join(str(c.branch_number) for c in classes),
             f"# {header}"]
    n = listed = 0
    for t in iter_surface_types(genus):
        n += 1
        row = _fmt_tuple(t)
        f = flag(t)
        if f is not None:
            listed += f
            row += "  published" if f else "  NOT-PUBLISHED"
        lines.append(row)
    lines.append(f"# {n} surface types")
    if published is not None:
        lines.append(f"# {listed} published, {n - listed} absent from the published list")
    return "\n".join(lines) + "\n"


def cmd_verify(max_genus: int, ceiling: int = GENUS_CEILING) -> int:
    _check_genus(max_genus, ceiling)
    report = verify.run(max_genus, ceiling)
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    if not report.ok:
        for v in report.violations:
            print(f"violation: {v}", file=sys.stderr)
        print(f"verify: {len(report.violations)} violations in {report.checks} checks", file=sys.stderr)
        return EXIT_INVALID
    print(f"verify: {report.checks} checks passed for 2 <= g <= {max_genus}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spingraphs", description=__doc__.splitlines()[0])
    parser.add_argument("--ceiling", type=int, default=GENUS_CEILING, help="largest accepted genus")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classes", help="list exceptional classes")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("graph", help="export one spin graph")
    p.add_argument("--genus", type=int, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--standard", action="store_true")
    which.add_argument("--weierstrass", action="store_true")
    which.add_argument("--partition", metavar="K0,K1,...")
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = sub.add_parser("types", help="enumerate surface types")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--check-paper", action="store_true", help="flag membership in the published lists (g=2,3)")

    p = sub.add_parser("verify", help="run the invariant sweep")
    p.add_argument("--max-genus", type=int, default=8)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if args.command == "verify":
            return cmd_verify(args.max_genus, args.ceiling)
        if args.command == "classes":
            out = cmd_classes(args.genus, args.order, args.format, args.ceiling)
        elif args.command == "graph":
            out = cmd_graph(args.genus, args.standard, args.weierstrass, args.partition,
                            args.format, args.ceiling)
        else:
            out = cmd_types(args.genus, args.format, args.check_paper, args.ceiling)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailure as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

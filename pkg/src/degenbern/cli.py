"""Command-line front end: exact tables in JSON/CSV/LaTeX and identity
verification runs.

Every command emits a single OutputDocument.  Documents are
byte-deterministic: dict insertion order is fixed by construction, no
timestamps or environment data are included, and parallel execution
(--threads) only distributes pure computations whose results are
reassembled in input order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, bernoulli
from .scalars import (
    DomainError,
    Rational,
    domain_from_string,
    scalar_to_json,
    scalar_to_latex,
    scalar_to_text,
)
from .combinatorics import (
    degenerate_stirling2,
    scaled_degenerate_stirling,
    stirling1_signed,
)
from .ode_coeffs import (
    coeff_explicit_falling,
    coeff_explicit_stirling,
    coeff_triangle,
)
from .verify import (
    HigherOrderContext,
    verify_all,
    verify_classical_derivative,
    verify_convolution,
    verify_higher_order,
    verify_ode,
    verify_singular,
)


class CLIError(Exception):
    """Flag combinations the library cannot honor."""


MULTINOMIAL_CAP = bernoulli.MULTINOMIAL_CAP


def ordered_map(fn, items, threads: int):
    """Map preserving input order; threads > 1 distributes the calls."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# cells and emitters


def cell_to_json(cell):
    if cell is None or isinstance(cell, bool):
        return cell
    if isinstance(cell, int):
        return cell
    return scalar_to_json(cell)


def cell_to_text(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return "true" if cell else "false"
    if isinstance(cell, int):
        return str(cell)
    return scalar_to_text(cell)


def cell_to_latex(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return r"\mathrm{true}" if cell else r"\mathrm{false}"
    if isinstance(cell, int):
        return str(cell)
    return scalar_to_latex(cell)


def make_document(command: list[str], lam_desc, order, payload: dict) -> dict:
    return {
        "schema_version": 1,
        "generator": {"name": "degenbern", "version": __version__},
        "command": command,
        "lambda": lam_desc,
        "order": order,
        "payload": payload,
    }


def emit_json(doc: dict) -> str:
    body = dict(doc)
    payload = dict(doc["payload"])
    if "rows" in payload:
        payload["rows"] = [
            [cell_to_json(c) for c in row] for row in payload["rows"]
        ]
    body["payload"] = payload
    return json.dumps(body, indent=2) + "\n"


def emit_csv(doc: dict) -> str:
    payload = doc["payload"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_ALL)
    if "reports" in payload:
        writer.writerow(["identity", "parameters", "verdict", "witness"])
        for rep in payload["reports"]:
            params = ";".join(f"{k}={v}" for k, v in rep["parameters"].items())
            witness = (
                json.dumps(rep["witness"], separators=(",", ":"))
                if rep["witness"] is not None
                else ""
            )
            writer.writerow([rep["identity"], params, rep["verdict"], witness])
    else:
        writer.writerow(payload["columns"])
        for row in payload["rows"]:
            writer.writerow([cell_to_text(c) for c in row])
    return buf.getvalue()


def _latex_escape(name: str) -> str:
    return name.replace("_", r"\_")


def emit_latex(doc: dict) -> str:
    payload = doc["payload"]
    lam = doc["lambda"]
    head = [
        f"% degenbern {__version__}",
        f"% command: {' '.join(doc['command'])}",
        f"% lambda: {lam if lam is not None else '-'}"
        + (f", order: {doc['order']}" if doc["order"] is not None else ""),
    ]
    lines = list(head)
    if "reports" in payload:
        lines.append(r"\begin{tabular}{lll}")
        lines.append(r"identity & parameters & verdict \\")
        lines.append(r"\hline")
        for rep in payload["reports"]:
            params = "; ".join(f"{k}={v}" for k, v in rep["parameters"].items())
            lines.append(
                f"{_latex_escape(rep['identity'])} & {_latex_escape(params)}"
                f" & {rep['verdict']} \\\\"
            )
        lines.append(r"\end{tabular}")
    else:
        cols = payload["columns"]
        lines.append(r"\begin{tabular}{" + "l" * len(cols) + "}")
        lines.append(" & ".join(_latex_escape(c) for c in cols) + r" \\")
        lines.append(r"\hline")
        for row in payload["rows"]:
            lines.append(" & ".join(cell_to_latex(c) for c in row) + r" \\")
        lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def emit(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return emit_json(doc)
    if fmt == "csv":
        return emit_csv(doc)
    if fmt == "latex":
        return emit_latex(doc)
    raise CLIError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# subcommands


def run_b(args, command: list[str]) -> tuple[dict, int]:
    domain = domain_from_string(args.lam)
    max_n = args.max_n
    r = args.order_r
    if max_n < 0:
        raise CLIError("--max-n must be nonnegative")
    if r < 1:
        raise CLIError("--order-r must be at least 1")
    route = args.route
    if r > 1:
        if route not in ("series", "all"):
            raise CLIError(
                "for --order-r > 1 only the series route (and its "
                "convolution cross-check via --route all) is defined"
            )
        names = ["series"] if route == "series" else ["series", "convolution"]
    else:
        if route in ("multinomial", "all") and max_n > MULTINOMIAL_CAP:
            raise CLIError(
                f"the multinomial route is capped at n <= {MULTINOMIAL_CAP}; "
                "pick an explicit --route for larger tables"
            )
        if route == "all":
            names = ["series", "recurrence", "multinomial", "explicit"]
        else:
            names = [route]

    def compute(name: str):
        if r > 1:
            if name == "series":
                return bernoulli.row_higher_order(r, max_n, domain).values
            return bernoulli.convolution_row(r, max_n, domain).values
        if name == "series":
            return bernoulli.row_via_series(max_n, domain).values
        if name == "recurrence":
            return bernoulli.row_via_recurrence(max_n, domain).values
        if name == "multinomial":
            return bernoulli.row_via_multinomial(max_n, domain).values
        return bernoulli.row_via_explicit(max_n, domain, "a_form").values

    columns_values = ordered_map(compute, names, args.threads)
    with_agree = len(names) > 1
    columns = ["n"] + names + (["agree"] if with_agree else [])
    rows = []
    all_agree = True
    for n in range(max_n + 1):
        row = [n] + [vals[n] for vals in columns_values]
        if with_agree:
            agree = all(v == row[1] for v in row[2:])
            all_agree = all_agree and agree
            row.append(agree)
        rows.append(row)
    payload = {
        "kind": "bernoulli_second_kind",
        "order_r": r,
        "columns": columns,
        "rows": rows,
    }
    if with_agree:
        payload["all_agree"] = all_agree
    doc = make_document(command, domain.describe(), max_n + 1, payload)
    return doc, 0


def run_a(args, command: list[str]) -> tuple[dict, int]:
    domain = domain_from_string(args.lam)
    max_N = args.max_N
    if max_N < 1:
        raise CLIError("--max-N must be at least 1")
    route = args.route
    lam_is_zero = (not domain.is_symbolic) and not domain.lam
    if route == "falling" and lam_is_zero:
        raise CLIError("the falling-factorial route is undefined at lambda = 0")
    table = coeff_triangle(max_N, domain)

    def entry(route_name: str, i: int, N: int):
        if route_name == "recurrence":
            return table.value(i, N)
        if route_name == "falling":
            return coeff_explicit_falling(i, N, domain)
        return coeff_explicit_stirling(i, N, domain)

    compare_routes = ["recurrence", "stirling"]
    if route == "all" and not lam_is_zero:
        compare_routes.append("falling")
    shown = "recurrence" if route == "all" else route
    with_agree = route == "all"

    def build_row(N: int):
        row = [N]
        agree = True
        for i in range(max_N + 1):
            if i > N:
                row.append(None)
                continue
            value = entry(shown, i, N)
            if with_agree:
                for other in compare_routes:
                    if other != shown and entry(other, i, N) != value:
                        agree = False
            row.append(value)
        if with_agree:
            row.append(agree)
        return row

    rows = ordered_map(build_row, range(1, max_N + 1), args.threads)
    columns = ["N"] + [f"i={i}" for i in range(max_N + 1)]
    if with_agree:
        columns.append("agree")
    payload = {
        "kind": "derivative_coefficients",
        "route": route,
        "columns": columns,
        "rows": rows,
    }
    if with_agree:
        payload["all_agree"] = all(row[-1] for row in rows)
        if lam_is_zero:
            payload["notes"] = [
                "falling route skipped: undefined at lambda = 0"
            ]
    doc = make_document(command, domain.describe(), None, payload)
    return doc, 0


def run_stirling(args, command: list[str]) -> tuple[dict, int]:
    max_n = args.max_n
    if max_n < 0:
        raise CLIError("--max-n must be nonnegative")
    kind = args.kind
    if kind == "first":
        table = stirling1_signed(max_n)
        cell = lambda n, k: Rational(table.value(n, k))
        lam_desc = None
    elif kind == "deg2":
        table = degenerate_stirling2(max_n, domain_from_string("sym"))
        cell = table.value
        lam_desc = "sym"
    else:
        sym = domain_from_string("sym")
        cell = lambda n, k: scaled_degenerate_stirling(n, k, sym)
        lam_desc = "sym"

    def build_row(n: int):
        return [n] + [
            cell(n, k) if k <= n else None for k in range(max_n + 1)
        ]

    rows = ordered_map(build_row, range(max_n + 1), args.threads)
    payload = {
        "kind": f"stirling_{kind.replace('-', '_')}",
        "columns": ["n"] + [f"k={k}" for k in range(max_n + 1)],
        "rows": rows,
    }
    doc = make_document(command, lam_desc, None, payload)
    return doc, 0


def run_classical(args, command: list[str]) -> tuple[dict, int]:
    max_n = args.max_n
    if max_n < 0:
        raise CLIError("--max-n must be nonnegative")
    routes = ["limit", "stirling"]
    values = ordered_map(
        lambda r: bernoulli.classical_row(max_n, route=r),
        routes,
        args.threads,
    )
    rows = []
    all_agree = True
    for n in range(max_n + 1):
        agree = values[0][n] == values[1][n]
        all_agree = all_agree and agree
        rows.append([n, values[0][n], values[1][n], agree])
    payload = {
        "kind": "classical_bernoulli_second_kind",
        "columns": ["n", "limit", "stirling", "agree"],
        "rows": rows,
        "all_agree": all_agree,
    }
    doc = make_document(command, "0", max_n + 1, payload)
    return doc, 0


def run_verify(args, command: list[str]) -> tuple[dict, int]:
    domain = domain_from_string(args.lam)
    max_N = args.max_N
    if max_N < 1:
        raise CLIError("--max-N must be at least 1")
    max_j = args.max_j
    if max_j < 0:
        raise CLIError("--max-j must be nonnegative")
    order = args.order if args.order is not None else 2 * max_N + 8
    if order < 2:
        raise CLIError("--order must be at least 2")
    suite = args.suite
    if suite == "all":
        reports = verify_all(
            N_max=max_N, n_max=max_N, order=order, domain=domain, max_j=max_j
        )
    else:
        closures = []
        if suite == "ode":
            coeffs = coeff_triangle(max_N, domain)
            closures = [
                (lambda N=N: verify_ode(N, order, domain, coeffs))
                for N in range(1, max_N + 1)
            ]
        elif suite == "cor34":
            coeffs = coeff_triangle(max_N, domain)
            closures = [
                (lambda n=n: verify_convolution(n, domain, coeffs))
                for n in range(1, max_N + 1)
            ]
        elif suite == "eq41":
            closures = [
                (lambda N=N: verify_classical_derivative(N, order, "eq41"))
                for N in range(1, max_N + 1)
            ]
        elif suite == "eq42":
            closures = [
                (lambda n=n: verify_classical_derivative(n, order, "eq42"))
                for n in range(1, max_N + 1)
            ]
        elif suite == "thm41":
            ctx = HigherOrderContext(domain, max_N, max_j + max_N)
            closures = [
                (lambda j=j, N=N: verify_higher_order(j, N, domain, ctx))
                for N in range(1, max_N + 1)
                for j in range(max_j + 1)
            ]
        elif suite == "cor42":
            if max_N < 2:
                raise CLIError("the singular-part suite needs --max-N >= 2")
            ctx = HigherOrderContext(domain, max_N, max_N - 1)
            closures = [
                (lambda j=j, N=N: verify_singular(j, N, domain, ctx))
                for N in range(2, max_N + 1)
                for j in range(-(N - 1), 0)
            ]
        reports = ordered_map(lambda fn: fn(), closures, args.threads)
    all_pass = all(r.passed for r in reports)
    payload = {
        "kind": "verification",
        "suite": suite,
        "reports": [r.to_json_dict() for r in reports],
        "all_pass": all_pass,
    }
    doc = make_document(command, domain.describe(), order, payload)
    return doc, 0 if all_pass else 1


# ---------------------------------------------------------------------------
# parser and entry point


def _add_common(p: argparse.ArgumentParser, with_lambda: bool = True) -> None:
    if with_lambda:
        p.add_argument(
            "--lambda",
            dest="lam",
            default="sym",
            help='deformation parameter: "sym" or a rational like "1/2"',
        )
    p.add_argument(
        "--format",
        choices=("json", "csv", "latex"),
        default="json",
        help="output format (default json)",
    )
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for independent cells/reports (default 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenbern",
        description=(
            "Exact tables of deformed Bernoulli numbers of the second kind, "
            "their coefficient triangles, and mechanical identity checks."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"degenbern {__version__}"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_b = sub.add_parser("b", help="deformed Bernoulli rows b^(r)_n")
    p_b.add_argument("--max-n", dest="max_n", type=int, required=True)
    p_b.add_argument("--order-r", dest="order_r", type=int, default=1)
    p_b.add_argument(
        "--route",
        choices=("series", "recurrence", "multinomial", "explicit", "all"),
        default="series",
    )
    _add_common(p_b)
    p_b.set_defaults(runner=run_b)

    p_a = sub.add_parser("a", help="derivative-coefficient triangle")
    p_a.add_argument("--max-N", dest="max_N", type=int, required=True)
    p_a.add_argument(
        "--route",
        choices=("recurrence", "falling", "stirling", "all"),
        default="recurrence",
    )
    _add_common(p_a)
    p_a.set_defaults(runner=run_a)

    p_s = sub.add_parser("stirling", help="Stirling-type triangles")
    p_s.add_argument(
        "--kind", choices=("first", "deg2", "scaled-deg2"), required=True
    )
    p_s.add_argument("--max-n", dest="max_n", type=int, required=True)
    _add_common(p_s, with_lambda=False)
    p_s.set_defaults(runner=run_stirling)

    p_c = sub.add_parser(
        "classical", help="classical Bernoulli numbers of the second kind"
    )
    p_c.add_argument("--max-n", dest="max_n", type=int, required=True)
    _add_common(p_c, with_lambda=False)
    p_c.set_defaults(runner=run_classical)

    p_v = sub.add_parser("verify", help="identity verification suites")
    p_v.add_argument(
        "--suite",
        choices=("ode", "cor34", "eq41", "eq42", "thm41", "cor42", "all"),
        default="all",
    )
    p_v.add_argument("--max-N", dest="max_N", type=int, default=8)
    p_v.add_argument("--max-j", dest="max_j", type=int, default=8)
    p_v.add_argument("--order", type=int, default=None)
    _add_common(p_v)
    p_v.set_defaults(runner=run_verify)

    return parser


def _logical_command(argv: list[str]) -> list[str]:
    """The command echoed into documents: the query without execution
    knobs, so outputs stay byte-identical across thread counts."""
    out = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token == "--threads":
            skip = True
            continue
        if token.startswith("--threads="):
            continue
        out.append(token)
    return out


def main(argv=None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    command = _logical_command(raw)
    parser = build_parser()
    args = parser.parse_args(raw)
    try:
        doc, code = args.runner(args, command)
        sys.stdout.write(emit(doc, args.format))
        return code
    except (CLIError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

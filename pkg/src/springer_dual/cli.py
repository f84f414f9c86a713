"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when a verification run
finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import exceptional
from .az import ParameterError, UnipotentParam, az_dual
from .duality import im_dual_tempered, max_marked, min_marked
from .orbits import SO, SP, OrbitError, enumerate_marked, make_marked, marked_from_json
from .partitions import SequenceError
from .symbols import SymbolError, gsc_forward, marked_symbol, to_classical_symbol


class InputError(ValueError):
    """Malformed command-line input."""


def parse_lambda(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", ",").split(",") if x]
    except ValueError:
        raise InputError(f"cannot parse partition {text!r}") from None


def parse_eps(text: str | None) -> dict[int, int]:
    """``"2=+1,4=-1"`` (``+``/``-`` are accepted for ``+1``/``-1``)."""
    out: dict[int, int] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            value, sign = item.split("=")
            s = sign.strip()
            out[int(value)] = {"+": 1, "-": -1}.get(s, None) or int(s)
        except ValueError:
            raise InputError(f"cannot parse sign {item!r}; expected VALUE=+1 or VALUE=-1") from None
    return out


def _load_json(text: str):
    path = Path(text)
    if not text.lstrip().startswith(("{", "[")) and path.exists():
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def marked_from_args(args):
    if getattr(args, "input", None):
        return marked_from_json(_load_json(args.input))
    if args.group is None or args.lam is None:
        raise InputError("give --group and --lambda, or --input")
    return make_marked(args.group, parse_lambda(args.lam), parse_eps(args.eps), args.degenerate)


# ---------------------------------------------------------------- output


def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}-\n{_pretty(x, indent + 1)}" if isinstance(x, dict) else f"{pad}- {x}" for x in obj)
    return f"{pad}{obj}"


def _tsv(rows: list[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0])
    out = ["\t".join(cols)]
    for r in rows:
        out.append("\t".join(_cell(r[c]) for c in cols))
    return "\n".join(out)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def emit(data, fmt: str, out_path: str | None):
    if fmt == "json":
        text = json.dumps(data, ensure_ascii=False, sort_keys=False)
    elif fmt == "tsv":
        text = _tsv(data if isinstance(data, list) else [data])
    else:
        text = _pretty(data)
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


# ---------------------------------------------------------------- commands


def _gsc_record(m) -> dict:
    key, b = gsc_forward(m)
    sym = marked_symbol(m)
    row_a, row_b = to_classical_symbol(sym)
    return {"input": m.to_json(), "family": key.to_json(), "bipartition": b.to_json(),
            "symbol": sym.to_json(), "classical_symbol": [list(row_a), list(row_b)]}


def cmd_gsc(args):
    return _gsc_record(marked_from_args(args))


def cmd_max(args):
    m = max_marked(marked_from_args(args))
    data = m.to_json()
    data["defect"] = gsc_forward(m)[0].k
    return data


def cmd_min(args):
    m = min_marked(marked_from_args(args))
    data = m.to_json()
    data["defect"] = gsc_forward(m)[0].k
    return data


def cmd_dual(args):
    return im_dual_tempered(marked_from_args(args)).to_json()


def cmd_az(args):
    if not args.input:
        raise InputError("az needs --input with a JSON parameter")
    return az_dual(UnipotentParam.from_json(_load_json(args.input))).to_json()


def cmd_exceptional(args):
    if args.orbit is None:
        return [r.to_json() for r in exceptional.enumerate_group(args.group_name)]
    if args.eps_label is None:
        raise InputError("give both ORBIT and EPS, or neither")
    return exceptional.lookup(args.group_name, args.orbit, args.eps_label).to_json()


def cmd_table(args):
    rows = []
    sizes = range(0, args.max_size + 1, 2) if args.group == SP else range(args.max_size + 1)
    pairs = [m for size in sizes for m in enumerate_marked(args.group, size)]
    for m in pairs:
        key, b = gsc_forward(m)
        dual = im_dual_tempered(m)
        rows.append({"size": m.size, "lambda": list(m.lam), "eps": m.to_json()["eps"],
                     "degenerate": getattr(m, "degenerate", None),
                     "k": key.k, "bipartition": str(b), "max": str(max_marked(m)),
                     "min": str(dual.marked)})
    return rows


def cmd_verify(args):
    from .greens.verify import verify_theorems, verify_type_a
    if args.group == "A":
        return verify_type_a(args.max_size)
    return verify_theorems(args.group, args.max_size)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="springer-dual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, marked=True):
        p.add_argument("--format", choices=("json", "tsv", "pretty"), default="json")
        p.add_argument("--out", help="write the output to this file")
        if marked:
            p.add_argument("--group", choices=(SP, SO))
            p.add_argument("--lambda", dest="lam", help="parts, comma separated")
            p.add_argument("--eps", help="signs by part value, e.g. 2=+1,4=-1")
            p.add_argument("--degenerate", choices=("+", "-"), help="tag of a degenerate SO orbit")
            p.add_argument("--input", help="marked partition as JSON (inline or file)")

    for name, fn, help_text in [("gsc", cmd_gsc, "symbol, family and bipartition"),
                                ("max", cmd_max, "maximal constituent"),
                                ("min", cmd_min, "sign-twisted minimal constituent"),
                                ("dual", cmd_dual, "orbit data of the dual tempered module")]:
        p = sub.add_parser(name, help=help_text)
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("az", help="dual orbit of an SO(2n+1) tempered unipotent parameter")
    common(p, marked=False)
    p.add_argument("--input", help="parameter JSON (inline or file)")
    p.set_defaults(func=cmd_az)

    p = sub.add_parser("exceptional", help="look up the exceptional-group tables")
    common(p, marked=False)
    p.add_argument("group_name", metavar="GROUP")
    p.add_argument("orbit", nargs="?", metavar="ORBIT")
    p.add_argument("eps_label", nargs="?", metavar="EPS")
    p.set_defaults(func=cmd_exceptional)

    p = sub.add_parser("table", help="every pair of a group with its image and dual")
    common(p, marked=False)
    p.add_argument("--group", choices=(SP, SO), required=True)
    p.add_argument("--max-size", type=int, required=True, help="2n for Sp, N for SO")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the algorithms against Green functions")
    common(p, marked=False)
    p.add_argument("--group", choices=(SP, SO, "A"), required=True)
    p.add_argument("--max-size", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


DOMAIN_ERRORS = (InputError, OrbitError, SymbolError, SequenceError, ParameterError,
                 exceptional.UnknownKey)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data = args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    emit(data, args.format, args.out)
    if args.command == "verify":
        if not data["ok"]:
            print(f"verification failed: {len(data['counterexamples'])} counterexample(s)", file=sys.stderr)
            return 2
        print("all families pass", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())

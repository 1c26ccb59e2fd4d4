"""Command-line interface: ``leglab <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusError, corpus_check, default_corpus_dir, verify_unknotting
from .diagram import KnotMetadata, PDCode, PDError, front_to_pd, seifert_genus_upper, signature
from .front import FrontDiagram, FrontError, _with_orientation
from .skein import DEFAULT_CROSSING_CAP, SkeinError, homfly, homfly_bound, kauffman, kauffman_bound
from .tau import TauError, bound_table, sandwich, tau_from_metadata


class CliError(Exception):
    def __init__(self, code: str, message: str, detail=None):
        super().__init__(message)
        self.code = code
        self.detail = detail


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("io-error", str(exc))
    except json.JSONDecodeError as exc:
        raise CliError("parse-error", f"{path}: {exc}")


def _load(path: str) -> tuple[FrontDiagram, dict]:
    """A front plus the raw corpus fields, if the file is a corpus entry."""
    data = _read_json(path)
    extra = {}
    if "front" in data:
        extra = data
        data = data["front"]
    return FrontDiagram.from_dict(data), extra


def _oriented(args, front):
    return _with_orientation(front, args.orientation == "reversed")


def _metadata(args, front_name, extra, pd) -> KnotMetadata:
    if extra.get("metadata"):
        meta = dict(extra["metadata"])
    else:
        meta = {
            "name": front_name or Path(args.front).stem,
            "signature": signature(pd),
            "seifert_genus_upper": seifert_genus_upper(pd),
        }
    if getattr(args, "unknotting", None) is not None:
        meta["unknotting_upper"] = args.unknotting
    if getattr(args, "fourball", None) is not None:
        meta["fourball_genus"] = args.fourball
    if getattr(args, "alternating", False):
        meta["alternating"] = True
    return KnotMetadata.from_dict(meta)


def cmd_invariants(args):
    front, _ = _load(args.front)
    f = _oriented(args, front)
    out = {"name": front.name}
    out.update(f.invariants.to_dict())
    return out


def cmd_pd(args):
    front, _ = _load(args.front)
    pd = front_to_pd(_oriented(args, front))
    return {"name": front.name, "pd": pd.to_text(), "crossings": len(pd), "writhe": pd.writhe}


def _polys(args, pd):
    return homfly(pd, cap=args.crossing_cap), kauffman(pd, cap=args.crossing_cap)


def cmd_polys(args):
    front, _ = _load(args.front)
    pd = front_to_pd(_oriented(args, front))
    P, F = _polys(args, pd)
    return {
        "name": front.name,
        "homfly": P.to_string(),
        "kauffman": F.to_string(),
        "homfly_bound": homfly_bound(P),
        "kauffman_bound": kauffman_bound(F),
    }


def _tau(meta, inv):
    est = tau_from_metadata(meta)
    if meta.unknotting_upper is not None:
        sw = sandwich(inv.tb, inv.r, meta.unknotting_upper)
        est = sw if est is None else est.intersect(sw)
    return est


def cmd_bounds(args):
    front, extra = _load(args.front)
    f = _oriented(args, front)
    pd = front_to_pd(f)
    meta = _metadata(args, front.name, extra, pd)
    polys = _polys(args, pd) if len(pd) <= args.crossing_cap else None
    report = bound_table(f.invariants, meta, _tau(meta, f.invariants), polys)
    return report.to_dict()


def cmd_tau(args):
    front, extra = _load(args.front)
    f = _oriented(args, front)
    inv = f.invariants
    pinned = (extra.get("metadata") or {}).get("unknotting_upper")
    if args.unknotting is None and pinned is None:
        raise CliError("usage", "an unknotting bound is needed (--unknotting N)")
    meta = _metadata(args, front.name, extra, front_to_pd(f))
    est = _tau(meta, inv)
    out = {"name": front.name, "tb": inv.tb, "r": inv.r}
    out.update(est.to_dict())
    if est.determined:
        out["tau"] = est.value
    return out


def cmd_verify(args):
    if args.pd is not None:
        pd = PDCode.parse(args.pd)
    elif args.front is not None:
        front, extra = _load(args.front)
        pd = front_to_pd(_oriented(args, front))
        if args.switch is None and extra.get("unknotting_certificate") is not None:
            args.switch = extra["unknotting_certificate"]
    else:
        raise CliError("usage", "give a front file or --pd")
    switches = args.switch or []
    status = verify_unknotting(pd, switches, cap=args.crossing_cap)
    return {"switches": list(switches), "crossings": len(pd), "result": status}


def cmd_corpus(args):
    directory = args.directory or default_corpus_dir()
    report = corpus_check(directory, cap=args.crossing_cap, reverse=args.orientation == "reversed")
    return report


def _table(obj) -> str:
    if hasattr(obj, "to_table"):
        return obj.to_table()
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    lines = []
    for key, val in obj.items():
        if key == "bounds" and isinstance(val, list):
            lines.append("bounds:")
            for b in val:
                if b["applicable"]:
                    lines.append(f"  {b['name']:<10} {b['quantity']:<7} <= {b['value']:>4}  slack {b['slack']}")
                else:
                    lines.append(f"  {b['name']:<10} n/a")
        elif isinstance(val, dict):
            lines.append(f"{key}: " + ", ".join(f"{k}={v}" for k, v in val.items()))
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    def shared(defaults: bool) -> argparse.ArgumentParser:
        # subcommands must not reset flags given before the command name
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        q = argparse.ArgumentParser(add_help=False)
        q.add_argument("--format", choices=("json", "table"), default=d("json"))
        q.add_argument("--crossing-cap", type=int, default=d(DEFAULT_CROSSING_CAP))
        q.add_argument("--orientation", choices=("canonical", "reversed"), default=d("canonical"))
        return q

    common = shared(False)
    p = argparse.ArgumentParser(prog="leglab", description=__doc__, parents=[shared(True)])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="writhe, tb, r and cusp counts")
    s.add_argument("front")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("pd", parents=[common], help="planar diagram code of a front")
    s.add_argument("front")
    s.set_defaults(func=cmd_pd)

    s = sub.add_parser("polys", parents=[common], help="HOMFLY and Kauffman polynomials")
    s.add_argument("front")
    s.set_defaults(func=cmd_polys)

    s = sub.add_parser("bounds", parents=[common], help="table of upper bounds on tb + |r|")
    s.add_argument("front")
    s.add_argument("--unknotting", type=int)
    s.add_argument("--fourball", type=int)
    s.add_argument("--alternating", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("tau", parents=[common], help="sandwich estimate for tau")
    s.add_argument("front")
    s.add_argument("--unknotting", type=int)
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("verify-unknotting", parents=[common], help="check an unknotting certificate")
    s.add_argument("front", nargs="?")
    s.add_argument("--pd", help='PD code text, e.g. "PD[X(1,4,2,5), ...]"')
    s.add_argument("--switch", type=int, nargs="*", help="0-based crossing indices to change")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("corpus-check", parents=[common], help="verify every corpus entry")
    s.add_argument("directory", nargs="?", help="defaults to $LEGLAB_CORPUS or the shipped corpus")
    s.set_defaults(func=cmd_corpus)
    return p


def _error(code: str, message: str, detail=None) -> dict:
    out = {"error": code, "message": message}
    if detail is not None:
        out["detail"] = detail
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "unknotting", None) is not None and args.unknotting < 0:
            raise CliError("usage", "--unknotting must be non-negative")
        result = args.func(args)
    except CliError as exc:
        print(json.dumps(_error(exc.code, str(exc), exc.detail)))
        return 2
    except FrontError as exc:
        print(json.dumps(exc.to_dict()))
        return 2
    except (PDError, SkeinError, TauError, CorpusError) as exc:
        code = getattr(exc, "code", None) or type(exc).__name__
        print(json.dumps(_error(code, str(exc))))
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        print(json.dumps(_error("invalid-input", str(exc))))
        return 2

    if args.format == "table":
        print(_table(result))
    else:
        payload = result.to_dict() if hasattr(result, "to_dict") else result
        print(json.dumps(payload, indent=2, sort_keys=False))
    if hasattr(result, "ok"):
        return 0 if result.ok else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

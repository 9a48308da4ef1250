"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combitypes import render_label

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def _need_r(args, r_min: int = 2):
    if args.r is None:
        raise UsageError("--r is required here")
    if args.r < r_min:
        raise UsageError(f"--r must be at least {r_min}")
    return args.r


def _check_n(n: int, lo: int = 1, hi: int | None = None):
    if n < lo or (hi is not None and n > hi):
        bound = f" and at most {hi}" if hi is not None else ""
        raise UsageError(f"--n must be at least {lo}{bound}")


def _emit_element(terms: dict, weight: int, field: str, fmt: str, title: str) -> str:
    from .serialize import element_to_json, element_to_latex, element_to_text

    if fmt == "json":
        return _dump(element_to_json(terms, weight, field))
    if fmt == "latex":
        return f"{title} = {element_to_latex(terms)}"
    return f"{title} = {element_to_text(terms)}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_zeta(args) -> int:
    _check_n(args.n)
    if args.kind == "A":
        from .symcore import zassenhaus_zetas

        terms = zassenhaus_zetas(args.n)[args.n].terms
        title = f"zeta_{args.n}"
    elif args.kind == "level":
        from .peakcore import level_zetas

        r = _need_r(args, 1)
        terms = level_zetas(args.n, r)[args.n].terms
        title = f"zeta^({r})_{args.n}"
    else:
        from .mrbsym import bsym_space, solve_bsym_zetas

        zetas, tildes = solve_bsym_zetas(args.n)
        elem = (tildes if args.tilde else zetas)[args.n]
        terms = bsym_space(args.n).coordinates(elem)
        title = ("ztilde_" if args.tilde else "zeta_") + str(args.n) + " (BSym, S~ basis)"
    print(_emit_element(dict(terms), args.n, "QQ", args.format, title))
    return 0


def _system_report(family: str, n: int, r, elems: dict, coords: dict, flags: dict,
                   fmt: str) -> str:
    from .serialize import element_to_json, element_to_text

    if fmt == "json":
        return _dump({"family": family, "n": n, "r": r, "field": "QQ",
                      "idempotents": [{"label": render_label(lam),
                                       "element": element_to_json(coords[lam], n)}
                                      for lam in elems],
                      "checks": flags})
    lines = [f"{family} idempotents, n={n}" + (f", r={r}" if r else "") + f": {len(elems)}"]
    for lam in elems:
        lines.append(f"e[{render_label(lam)}] = {element_to_text(coords[lam])}")
    lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in flags.items()))
    return "\n".join(lines)


def cmd_idempotents(args) -> int:
    from .verify import _dict_add, _system_checks

    _check_n(args.n)
    fam = args.family
    try:
        if fam == "A":
            from .symcore import S, internal_product, typeA_idempotents, zero

            elems = typeA_idempotents(args.n, "both")
            coords = {k: v.terms for k, v in elems.items()}
            flags = _system_checks(elems, S(args.n), internal_product, zero())
            r = None
        elif fam == "peak":
            from .peakcore import peak_idempotents
            from .symcore import S, internal_product, zero

            r = _need_r(args)
            elems = peak_idempotents(args.n, r, "both")
            coords = {k: v.terms for k, v in elems.items()}
            flags = _system_checks(elems, S(args.n), internal_product, zero())
        else:
            from .mrbsym import bsym_idempotents, bsym_model, bsym_space
            from .symcore import S

            elems = bsym_idempotents(args.n, "both")
            space = bsym_space(args.n)
            coords = {k: space.coordinates(v) for k, v in elems.items()}
            flags = _system_checks(coords, space.coordinates(S(args.n)), bsym_model(args.n).mul,
                                   {}, _dict_add)
            r = None
        flags = dict({"routes_agree": True}, **flags)
    except AssertionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    print(_system_report(fam, args.n, r, elems, coords, flags, args.format))
    return 0 if all(flags.values()) else 1


def _cartan(args):
    from .reptheory import q_cartan

    _check_n(args.n)
    if args.family == "A":
        from .reptheory import sym_model

        return q_cartan(sym_model(args.n))
    if args.family == "B":
        from .mrbsym import bsym_model

        return q_cartan(bsym_model(args.n))
    from .peakmodel import build_peak_algebra

    return q_cartan(build_peak_algebra(args.n, _need_r(args)).algebra)


def cmd_cartan(args) -> int:
    C = _cartan(args)
    if args.format == "json":
        print(_dump(C.to_json()))
    elif args.format == "latex":
        print(C.to_latex("q"), end="")
    else:
        print(C.to_text("q"), end="")
    return 0


def cmd_quiver(args) -> int:
    from .reptheory import quiver

    C = _cartan(args)
    arrows = sorted(quiver(C).items(),
                    key=lambda kv: (C.labels.index(kv[0][0]), C.labels.index(kv[0][1])))
    if args.format == "json":
        print(_dump({"vertices": [render_label(x) for x in C.labels],
                     "arrows": [{"from": render_label(a), "to": render_label(b), "multiplicity": m}
                                for (a, b), m in arrows]}))
    else:
        for (a, b), m in arrows:
            print(f"{render_label(a)} -> {render_label(b)}" + (f" (x{m})" if m != 1 else ""))
    return 0


def cmd_conjecture(args) -> int:
    from .peakmodel import build_peak_algebra
    from .reptheory import conjecture_cartan, q_cartan

    _check_n(args.n)
    r = _need_r(args)
    if args.graded and r != 2:
        raise UsageError("--graded is only defined for r = 2")
    comb = conjecture_cartan(args.n, r, graded=args.graded)
    computed = q_cartan(build_peak_algebra(args.n, r).algebra)
    ok = comb == computed if args.graded else comb.at_one() == computed.at_one()
    if args.format == "json":
        print(_dump({"n": args.n, "r": r, "graded": args.graded, "match": ok,
                     "combinatorial": comb.to_json(),
                     "computed": computed.to_json()}))
    else:
        print(comb.to_text("q"), end="")
        print("match" if ok else "conjecture discrepancy")
    return 0 if ok else 1


def cmd_verify(args) -> int:
    from .verify import SECTIONS, run_battery

    sections = None
    if args.sections:
        sections = [s.strip() for s in args.sections.split(",") if s.strip()]
        bad = [s for s in sections if s not in SECTIONS]
        if bad:
            raise UsageError(f"unknown sections {bad}; choose from {', '.join(SECTIONS)}")
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    report = run_battery(sections, args.max_n, args.jobs)
    if args.no_timings:
        report.pop("timings")
    if args.format == "json":
        text = _dump(report) + "\n"
    else:
        lines = []
        for c in report["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            line = f"{status} [{c['section']}] {c['name']}"
            diff = c["detail"].get("first_diff") if isinstance(c["detail"], dict) else None
            if diff and not c["pass"]:
                line += f"  first difference: {json.dumps(diff, sort_keys=True)}"
            lines.append(line)
        s = report["summary"]
        lines.append(f"{s['passed']}/{s['checks']} checks passed")
        if "timings" in report:
            lines.append(f"wall time: {report['timings']['total']} s")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["summary"]["ok"] else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="peakalg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="expansion of a Zassenhaus-type element")
    z.add_argument("--kind", choices=["A", "B", "level"], default="A")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--r", type=int)
    z.add_argument("--tilde", action="store_true", help="with --kind B: the tilde element")
    z.add_argument("--format", choices=["text", "json", "latex"], default="text")
    z.set_defaults(func=cmd_zeta)

    i = sub.add_parser("idempotents", help="complete system of orthogonal idempotents")
    i.add_argument("--family", "--kind", dest="family", choices=["A", "B", "peak"], default="A")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--r", type=int)
    i.add_argument("--format", choices=["text", "json"], default="json")
    i.set_defaults(func=cmd_idempotents)

    for name, func, helptext in (("cartan", cmd_cartan, "q-Cartan matrix"),
                                 ("quiver", cmd_quiver, "quiver from the q-Cartan matrix")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("--family", "--kind", dest="family", choices=["A", "B", "peak"],
                       default="peak")
        c.add_argument("--n", type=int, required=True)
        c.add_argument("--r", type=int)
        c.add_argument("--format", choices=["text", "json", "latex"], default="text")
        c.set_defaults(func=func)

    k = sub.add_parser("conjecture", help="combinatorial Cartan matrix against the computed one")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--r", type=int, required=True)
    k.add_argument("--graded", action="store_true")
    k.add_argument("--format", choices=["text", "json"], default="text")
    k.set_defaults(func=cmd_conjecture)

    v = sub.add_parser("verify-paper", help="run the verification battery")
    v.add_argument("--sections", help="comma separated subset of sections")
    v.add_argument("--max-n", type=int, default=9)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.add_argument("--no-timings", action="store_true", help="omit wall-time fields")
    v.add_argument("--output", help="write the report to this file")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

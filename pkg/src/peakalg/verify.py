"""Verification battery behind ``verify-paper``.

Checks are grouped in sections.  Every section is a list of tasks; a
task returns a list of check records ``{"section", "name", "pass",
"hard", "detail"}``.  Tasks are independent, so they may run in worker
processes; results are always reported in task order, and wall times
are kept apart from the payload so that two runs give identical reports.
"""

from __future__ import annotations

import operator
import time
from concurrent.futures import ProcessPoolExecutor

from .combitypes import refines, render_label, rpeak_compositions
from .exactmath import Cyclo

__all__ = ["SECTIONS", "DEFAULT_MAX_N", "plan", "run_task", "run_battery"]

SECTIONS = ("golden", "expansions", "typeA", "typeB", "peak", "models", "lemmas",
            "bridge", "conjecture", "alternative")
DEFAULT_MAX_N = 9


def _check(section: str, name: str, ok: bool, detail=None, hard: bool = True) -> dict:
    return {"section": section, "name": name, "pass": bool(ok), "hard": hard,
            "detail": detail if detail is not None else {}}


def _system_checks(elems: dict, total, mul, zero, add=operator.add) -> dict:
    """Idempotency, pairwise orthogonality and completeness of a family."""
    idem = orth = True
    acc = zero
    for a, x in elems.items():
        acc = add(acc, x)
        for b, y in elems.items():
            p = mul(x, y)
            if a == b:
                idem &= p == x
            else:
                orth &= not p
    return {"idempotent": idem, "orthogonal": orth, "complete": acc == total}


# ---------------------------------------------------------------------------
# tasks


def task_golden(n: int, r: int) -> list[dict]:
    from .golden import compare_cartan, load_golden
    from .peakmodel import build_peak_algebra
    from .reptheory import q_cartan

    model = build_peak_algebra(n, r)
    computed = q_cartan(model.algebra)
    cmp = compare_cartan(computed, load_golden(n, r))
    detail = {"dim": model.dim, "orientation": cmp["orientation"],
              "model_checks": model.checks}
    if cmp["first_diff"]:
        detail["first_diff"] = cmp["first_diff"]
    ok = cmp["match"] and cmp["orientation"] == "rows=simples"
    return [_check("golden", f"C_{n}^({r})", ok, detail)]


def task_expansions() -> list[dict]:
    from .golden import check_expansion, expansion_keys

    out = []
    for key in expansion_keys():
        res = check_expansion(key)
        detail = {"mode": res["mode"], "terms": res["terms"]}
        if res.get("first_diff"):
            detail["first_diff"] = res["first_diff"]
        out.append(_check("expansions", key, res["match"], detail))
    return out


def task_typeA_idempotents(n: int) -> list[dict]:
    from .symcore import S, internal_product, typeA_idempotents, zero

    try:
        E = typeA_idempotents(n, "both")
        flags = {"routes_agree": True}
    except AssertionError as exc:
        return [_check("typeA", f"idempotents n={n}", False, {"error": str(exc)})]
    flags.update(_system_checks(E, S(n), internal_product, zero()))
    return [_check("typeA", f"idempotents n={n}", all(flags.values()),
                   dict(flags, count=len(E)))]


def task_typeA_cartan(n: int) -> list[dict]:
    from .reptheory import q_cartan, quiver, sym_model, typeA_cartan_claim

    C = q_cartan(sym_model(n))
    claim = typeA_cartan_claim(n)
    literal = C == claim or C.transpose() == claim
    detail = {}
    if not literal:
        for key in claim.labels:
            for other in claim.labels:
                a, b = C[(key, other)], claim[(key, other)]
                if a != b and "first_diff" not in detail:
                    detail["first_diff"] = {"row": render_label(key), "col": render_label(other),
                                            "computed": a.render("t"), "claimed": b.render("t")}
    out = [_check("typeA", f"q-Cartan literal formula n={n}", literal, detail)]
    graded = all((not p) or (p.is_homogeneous() and p.degree() == len(b) - len(a)
                             and refines(b, a))
                 for (a, b), p in C.entries.items())
    out.append(_check("typeA", f"q-Cartan homogeneous in length difference n={n}", graded))

    def adds_two_distinct(lam, mu):
        for i in range(len(lam)):
            for j in range(i + 1, len(lam)):
                if lam[i] != lam[j]:
                    rest = lam[:i] + lam[i + 1:j] + lam[j + 1:] + (lam[i] + lam[j],)
                    if tuple(sorted(rest, reverse=True)) == mu:
                        return True
        return False

    arrows = set(quiver(C))
    predicted = {(a, b) for a in C.labels for b in C.labels if adds_two_distinct(a, b)}
    out.append(_check("typeA", f"quiver n={n}", arrows == predicted, {"arrows": len(arrows)}))
    return out


def task_typeB(n: int) -> list[dict]:
    from .mrbsym import bsym_idempotents, bsym_model, bsym_space
    from .symcore import S

    try:
        E = bsym_idempotents(n, "both")
    except AssertionError as exc:
        return [_check("typeB", f"idempotents n={n}", False, {"error": str(exc)})]
    space = bsym_space(n)
    model = bsym_model(n)
    coords = {lam: space.coordinates(e) for lam, e in E.items()}
    total = space.coordinates(S(n))
    flags = {"routes_agree": True}
    flags.update(_system_checks(coords, total, model.mul, {}, _dict_add))
    return [_check("typeB", f"idempotents n={n}", all(flags.values()), dict(flags, count=len(E)))]


def _dict_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def task_peak(n: int, r: int) -> list[dict]:
    from .peakcore import peak_idempotents
    from .symcore import S, internal_product, zero
    from .zetaengine import engine

    try:
        E = peak_idempotents(n, r, "both")
    except AssertionError as exc:
        return [_check("peak", f"idempotents n={n} r={r}", False, {"error": str(exc)})]
    flags = {"routes_agree": True}
    flags.update(_system_checks(E, S(n), internal_product, zero()))
    allowed = {x.word() for x in rpeak_compositions(n, r)}
    eng = engine(n, r)
    flags["in_peak_algebra"] = all(W in allowed for e in E.values() for W in eng.elem_to_zeta(e))
    flags["rational"] = all(not isinstance(c, Cyclo) for e in E.values() for c in e.terms.values())
    return [_check("peak", f"idempotents n={n} r={r}", all(flags.values()),
                   dict(flags, count=len(E)))]


def task_models(n: int, r: int, power: int = 1) -> list[dict]:
    from .peakmodel import PeakAlgebraError, build_peak_algebra

    name = f"model n={n} r={r}" + (f" root power {power}" if power != 1 else "")
    try:
        model = build_peak_algebra(n, r, power)
    except PeakAlgebraError as exc:
        return [_check("models", name, False, {"error": str(exc)})]
    return [_check("models", name, True, dict(model.checks, dim=model.dim))]


def task_lemmas(max_n: int) -> list[dict]:
    from .lemmas import run_all

    return [_check("lemmas", rep.name, rep.passed, {"cases": rep.cases, "failures": rep.failures})
            for rep in run_all(max_n)]


def task_bridge(n: int) -> list[dict]:
    from .mrbsym import bsym_idempotents, epsilon_bridge, project_to_sym
    from .peakcore import peak_idempotents
    from .combitypes import is_rpeak
    from .reptheory import cartan_restriction_check
    from .symcore import zero

    res = epsilon_bridge(n)
    dims = (res["projection_dim"] == res["peak_dim"] == res["corner_dim"]
            and res["projection_equals_peak"])
    out = [_check("bridge", f"projection and corner n={n}", dims, res)]
    E = bsym_idempotents(n, "closed")
    P = peak_idempotents(n, 2, "closed")
    proj_ok = all(project_to_sym(e) == (P[lam] if is_rpeak(lam, 2) else zero())
                  for lam, e in E.items())
    out.append(_check("bridge", f"projected idempotents n={n}", proj_ok))
    if n <= 5:
        try:
            ok = cartan_restriction_check(n)
        except AssertionError:
            ok = False
        out.append(_check("bridge", f"Cartan restriction n={n}", ok))
    return out


def task_conjecture(n: int, r: int) -> list[dict]:
    from .peakmodel import build_peak_algebra
    from .reptheory import conjecture_cartan, q_cartan

    C = q_cartan(build_peak_algebra(n, r).algebra)
    comb = conjecture_cartan(n, r)
    ok = comb.at_one() == C.at_one() and comb.labels == C.labels
    out = [_check("conjecture", f"t=1 n={n} r={r}", ok,
                  {} if ok else {"flag": "conjecture discrepancy"})]
    if r == 2:
        graded = conjecture_cartan(n, r, graded=True) == C
        out.append(_check("conjecture", f"graded n={n} r=2", graded))
    return out


def task_alternative(n: int) -> list[dict]:
    from .mrbsym import ano_idempotents, sharp_letter
    from .peakcore import peak_idempotents
    from .symcore import S, internal_product, zero
    from .zetaengine import engine

    fam = ano_idempotents(n)
    out = []
    E, Es = fam["E"], fam["E_sharp"]
    flags = _system_checks(Es, sharp_letter(n), internal_product, zero())
    flags["idempotent"] = all(internal_product(e, e) == e.scale(2 ** len(lam))
                              for lam, e in Es.items())
    out.append(_check("alternative", f"E_sharp orthogonal, sum S#_n n={n}",
                      all(flags.values()), flags))
    flagsE = _system_checks(E, None, internal_product, zero())
    flagsE.pop("complete")
    out.append(_check("alternative", f"E orthogonal idempotents n={n}", all(flagsE.values()), flagsE))
    eta = fam["eta"]
    eta_ok = all(internal_product(eta[k], eta[k]) == eta[k] for k in range(1, n + 1))
    out.append(_check("alternative", f"eta idempotent through weight {n}", eta_ok))
    Ep = fam["E_peak"]
    flagsP = _system_checks(Ep, S(n), internal_product, zero())
    allowed = {x.word() for x in rpeak_compositions(n, 2)}
    eng = engine(n, 2)
    flagsP["in_peak_algebra"] = all(W in allowed for e in Ep.values() for W in eng.elem_to_zeta(e))
    out.append(_check("alternative", f"E~ complete orthogonal in P_n n={n}",
                      all(flagsP.values()), flagsP))
    if n == 4:
        P = peak_idempotents(n, 2)
        differ = sorted(render_label(lam) for lam in P if P[lam] != Ep[lam])
        out.append(_check("alternative", "E~ differs from e^(2) at n=4", bool(differ),
                          {"labels": differ}))
    return out


TASKS = {
    "golden": task_golden, "expansions": task_expansions,
    "typeA_idempotents": task_typeA_idempotents, "typeA_cartan": task_typeA_cartan,
    "typeB": task_typeB, "peak": task_peak, "models": task_models, "lemmas": task_lemmas,
    "bridge": task_bridge, "conjecture": task_conjecture, "alternative": task_alternative,
}


def plan(sections=None, max_n: int = DEFAULT_MAX_N) -> list[tuple]:
    """Ordered list of (task name, args) for the requested sections."""
    from .golden import golden_cells

    sections = list(SECTIONS) if not sections else list(sections)
    unknown = [s for s in sections if s not in SECTIONS]
    if unknown:
        raise ValueError(f"unknown sections: {', '.join(unknown)}")
    tasks: list[tuple] = []
    for sec in SECTIONS:
        if sec not in sections:
            continue
        if sec == "golden":
            tasks += [("golden", cell) for cell in golden_cells(max_n)]
        elif sec == "expansions":
            tasks.append(("expansions", ()))
        elif sec == "typeA":
            tasks += [("typeA_idempotents", (n,)) for n in range(1, min(7, max_n) + 1)]
            tasks += [("typeA_cartan", (n,)) for n in range(1, min(6, max_n) + 1)]
        elif sec == "typeB":
            tasks += [("typeB", (n,)) for n in range(1, min(6, max_n) + 1)]
        elif sec == "peak":
            tasks += [("peak", (n, r)) for r in (2, 3, 4) for n in range(1, min(7, max_n) + 1)]
        elif sec == "models":
            tasks += [("models", (n, r)) for r in range(2, 9) for n in range(1, min(8, max_n) + 1)]
            tasks += [("models", (n, 3, 2)) for n in range(1, min(4, max_n) + 1)]
        elif sec == "lemmas":
            tasks.append(("lemmas", (min(6, max_n),)))
        elif sec == "bridge":
            tasks += [("bridge", (n,)) for n in range(1, min(6, max_n) + 1)]
        elif sec == "conjecture":
            tasks += [("conjecture", (n, 2)) for n in range(1, min(7, max_n) + 1)]
            tasks += [("conjecture", (n, r)) for r in (3, 4, 5) for n in range(1, min(6, max_n) + 1)]
        elif sec == "alternative":
            tasks += [("alternative", (n,)) for n in range(1, min(5, max_n) + 1)]
    return tasks


def run_task(task: tuple) -> tuple[list[dict], float]:
    name, args = task
    start = time.perf_counter()
    checks = TASKS[name](*args)
    return checks, time.perf_counter() - start


def _task_label(task: tuple) -> str:
    name, args = task
    return name + "(" + ",".join(str(a) for a in args) + ")"


def run_battery(sections=None, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> dict:
    """Run the battery; returns the report (``timings`` holds all wall times)."""
    tasks = plan(sections, max_n)
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        # pool.map preserves task order, so reports do not depend on jobs
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    checks, timings = [], {}
    for task, (res, secs) in zip(tasks, results):
        checks.extend(res)
        timings[_task_label(task)] = round(secs, 3)
    failed = [f"{c['section']}: {c['name']}" for c in checks if c["hard"] and not c["pass"]]
    report = {
        "command": "verify-paper",
        "parameters": {"sections": [s for s in SECTIONS if not sections or s in sections],
                       "max_n": max_n},
        "summary": {"checks": len(checks), "passed": sum(c["pass"] for c in checks),
                    "failed": failed, "ok": not failed},
        "checks": checks,
        "timings": dict(timings, total=round(time.perf_counter() - start, 3)),
    }
    return report

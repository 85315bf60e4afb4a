"""Command line front end: ``predynkin <subcommand> problem.json``.

Problem files are JSON objects.  Events are lists of 1-indexed elements
(``[1, 2]``) or the shorthand strings used in output (``"12"``);
rationals are strings such as ``"3/10"`` or integers.  Recognised
fields::

    n          ground set size (required)
    system     generating events; the domain is their pre-Dynkin hull
    measure    [{"event": ..., "value": ...}]; missing hull values are
               derived from complements and disjoint sums
    psi        reference probability, one entry per atom
    gambles    list of gambles (one entry per atom)
    gamma      distortion breakpoints [[x, y], ...]
    measures   finite list of probability vectors
    expectation  [{"basis": [gamble, ...], "values": [...]}]
    lower, upper  {event: value} tables for precise-events
    event, cond, depth  operation parameters (also settable by flags)

The result document echoes the canonical problem, names the operation
and carries the result.  Exit status is 0 for every answered question
(including "not extendable"), 2 for malformed input and 3 when a size
cap is hit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import (
    ConditioningError,
    EmptyPolytope,
    NotExtendable,
    PreDynkinError,
    SizeLimitExceeded,
)
from .galois import (
    PiecewiseLinearConcave,
    ReferenceMeasure,
    bipolar_closure,
    certainty_system,
    credal,
    distorted_credal,
    dual_credal,
    dual_credal_finite,
)
from .lp import Vector
from .measure import (
    ImpreciseProbability,
    PartialProbability,
    ValidationReport,
    check_ip_axioms,
    coherent_extension_table,
    credal_set,
    gbr_conditional,
    horn_tarski_falsify,
    inner_outer,
    is_extendable,
    precise_events,
    validate_measure,
)
from .polytope import CredalPolytope
from .previsions import (
    PartialExpectation,
    from_measure,
    generalized_dual_credal,
    is_extendable_prevision,
    natural_extension,
    precise_gambles,
    precise_restriction,
    prevision_credal,
    validate_partial_expectation,
    violation_search,
)
from .setsystem import GroundSet, SetSystem, blocks, is_pre_dynkin, pre_dynkin_hull

EXIT_OK, EXIT_INPUT, EXIT_SIZE = 0, 2, 3
DEFAULT_DEPTH = 4


class ProblemError(ValueError):
    """Malformed problem file; the message names the offending field."""


# ---------------------------------------------------------------- parsing


RATIONAL = re.compile(r"[-+]?\d+(/\d+)?")


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ProblemError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not RATIONAL.fullmatch(value.strip()):
        raise ProblemError(f"{where}: {value!r} is not of the form 'p' or 'p/q'")
    try:
        return Fraction(value.strip())
    except ZeroDivisionError:
        raise ProblemError(f"{where}: {value!r} is not a rational") from None


def _rationals(values: Any, where: str, length: int | None = None) -> Vector:
    if not isinstance(values, list):
        raise ProblemError(f"{where}: expected a list")
    if length is not None and len(values) != length:
        raise ProblemError(f"{where}: expected {length} entries, got {len(values)}")
    return tuple(_rational(v, f"{where}[{i}]") for i, v in enumerate(values))


def _event(ground: GroundSet, value: Any, where: str) -> int:
    if isinstance(value, list) and not all(isinstance(k, int) and not isinstance(k, bool) for k in value):
        raise ProblemError(f"{where}: event lists hold integers")
    if not isinstance(value, (list, str)):
        raise ProblemError(f"{where}: expected an element list or a label, got {value!r}")
    try:
        return ground.parse(value)
    except PreDynkinError as exc:
        raise ProblemError(f"{where}: {exc}") from None


@dataclass(frozen=True)
class Problem:
    ground: GroundSet
    system: tuple[int, ...] | None = None
    measure: tuple[tuple[int, Fraction], ...] | None = None
    psi: Vector | None = None
    gambles: tuple[Vector, ...] | None = None
    gamma: tuple[tuple[Fraction, Fraction], ...] | None = None
    measures: tuple[Vector, ...] | None = None
    expectation: tuple[tuple[tuple[Vector, ...], Vector], ...] | None = None
    lower: tuple[tuple[int, Fraction], ...] | None = None
    upper: tuple[tuple[int, Fraction], ...] | None = None
    event: int | None = None
    cond: int | None = None
    depth: int | None = None

    FIELDS = (
        "n", "system", "measure", "psi", "gambles", "gamma", "measures",
        "expectation", "lower", "upper", "event", "cond", "depth",
    )

    @classmethod
    def parse(cls, doc: Any) -> "Problem":
        if not isinstance(doc, dict):
            raise ProblemError("problem file must hold a JSON object")
        unknown = sorted(set(doc) - set(cls.FIELDS))
        if unknown:
            raise ProblemError(f"unknown field(s): {', '.join(unknown)}")
        n = doc.get("n")
        if isinstance(n, bool) or not isinstance(n, int):
            raise ProblemError("n: required integer ground set size")
        if n < 1:
            raise ProblemError("n: the ground set needs at least one element")
        g = GroundSet(n)  # beyond the cap this raises SizeLimitExceeded
        kw: dict[str, Any] = {}
        if "system" in doc:
            if not isinstance(doc["system"], list):
                raise ProblemError("system: expected a list of events")
            kw["system"] = tuple(
                sorted({_event(g, e, f"system[{i}]") for i, e in enumerate(doc["system"])})
            )
        if "measure" in doc:
            items = doc["measure"]
            if not isinstance(items, list):
                raise ProblemError("measure: expected a list of {event, value} objects")
            table: dict[int, Fraction] = {}
            for i, item in enumerate(items):
                if not isinstance(item, dict) or set(item) != {"event", "value"}:
                    raise ProblemError(f"measure[{i}]: expected keys 'event' and 'value'")
                e = _event(g, item["event"], f"measure[{i}].event")
                v = _rational(item["value"], f"measure[{i}].value")
                if table.setdefault(e, v) != v:
                    raise ProblemError(f"measure[{i}]: conflicting values for {g.label(e)}")
            kw["measure"] = tuple(sorted(table.items()))
        if "psi" in doc:
            kw["psi"] = _rationals(doc["psi"], "psi", n)
        if "gambles" in doc:
            if not isinstance(doc["gambles"], list):
                raise ProblemError("gambles: expected a list")
            kw["gambles"] = tuple(
                _rationals(f, f"gambles[{i}]", n) for i, f in enumerate(doc["gambles"])
            )
        if "gamma" in doc:
            if not isinstance(doc["gamma"], list):
                raise ProblemError("gamma: expected a list of [x, y] pairs")
            kw["gamma"] = tuple(
                tuple(_rationals(p, f"gamma[{i}]", 2)) for i, p in enumerate(doc["gamma"])
            )
        if "measures" in doc:
            if not isinstance(doc["measures"], list):
                raise ProblemError("measures: expected a list")
            kw["measures"] = tuple(
                _rationals(m, f"measures[{i}]", n) for i, m in enumerate(doc["measures"])
            )
        if "expectation" in doc:
            subs = doc["expectation"]
            if not isinstance(subs, list):
                raise ProblemError("expectation: expected a list of subspaces")
            parsed = []
            for i, sub in enumerate(subs):
                if not isinstance(sub, dict) or set(sub) != {"basis", "values"}:
                    raise ProblemError(f"expectation[{i}]: expected keys 'basis' and 'values'")
                if not isinstance(sub["basis"], list):
                    raise ProblemError(f"expectation[{i}].basis: expected a list")
                basis = tuple(
                    _rationals(b, f"expectation[{i}].basis[{j}]", n)
                    for j, b in enumerate(sub["basis"])
                )
                vals = _rationals(sub["values"], f"expectation[{i}].values", len(basis))
                parsed.append((basis, vals))
            kw["expectation"] = tuple(parsed)
        for key in ("lower", "upper"):
            if key in doc:
                tab = doc[key]
                if not isinstance(tab, dict):
                    raise ProblemError(f"{key}: expected an object keyed by event label")
                kw[key] = tuple(
                    sorted(
                        (_event(g, k, f"{key}[{k!r}]"), _rational(v, f"{key}[{k!r}]"))
                        for k, v in tab.items()
                    )
                )
        for key in ("event", "cond"):
            if key in doc:
                kw[key] = _event(g, doc[key], key)
        if "depth" in doc:
            d = doc["depth"]
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                raise ProblemError("depth: expected a nonnegative integer")
            kw["depth"] = d
        return cls(g, **kw)

    def to_json(self) -> dict:
        g = self.ground
        ev = g.elements
        out: dict[str, Any] = {"n": g.n}
        if self.system is not None:
            out["system"] = [ev(e) for e in self.system]
        if self.measure is not None:
            out["measure"] = [{"event": ev(e), "value": str(v)} for e, v in self.measure]
        if self.psi is not None:
            out["psi"] = [str(v) for v in self.psi]
        if self.gambles is not None:
            out["gambles"] = [[str(v) for v in f] for f in self.gambles]
        if self.gamma is not None:
            out["gamma"] = [[str(x), str(y)] for x, y in self.gamma]
        if self.measures is not None:
            out["measures"] = [[str(v) for v in m] for m in self.measures]
        if self.expectation is not None:
            out["expectation"] = [
                {"basis": [[str(v) for v in b] for b in basis], "values": [str(v) for v in vals]}
                for basis, vals in self.expectation
            ]
        for key in ("lower", "upper"):
            tab = getattr(self, key)
            if tab is not None:
                out[key] = {g.label(e): str(v) for e, v in tab}
        for key in ("event", "cond"):
            val = getattr(self, key)
            if val is not None:
                out[key] = ev(val)
        if self.depth is not None:
            out["depth"] = self.depth
        return out

    # -- derived module inputs

    def need(self, *fields: str) -> None:
        missing = [f for f in fields if getattr(self, f) is None]
        if missing:
            raise ProblemError(f"this operation needs field(s): {', '.join(missing)}")

    def set_system(self) -> SetSystem:
        self.need("system")
        return SetSystem(self.ground, self.system)

    def probability(self) -> PartialProbability:
        self.need("measure")
        system = SetSystem(self.ground, self.system) if self.system is not None else None
        return PartialProbability.from_assignments(self.ground, dict(self.measure), system)

    def reference(self) -> ReferenceMeasure:
        self.need("psi")
        return ReferenceMeasure(self.ground, self.psi)

    def partial_expectation(self) -> PartialExpectation:
        if self.expectation is not None:
            return PartialExpectation(self.ground, self.expectation)
        return from_measure(self.probability())


# ---------------------------------------------------------------- output


def _labels(S: SetSystem) -> list[str]:
    return S.labels()


def _vec(v) -> list[str] | None:
    return None if v is None else [str(x) for x in v]


def _report(g: GroundSet, rep: ValidationReport) -> dict:
    out = []
    for v in rep.violations:
        item: dict[str, Any] = {"clause": v.clause}
        if hasattr(v, "events"):
            item["events"] = [g.label(e) for e in v.events]
        else:
            item["subspaces"] = list(v.subspaces)
            item["gamble"] = _vec(v.gamble)
        item["detail"] = v.detail
        out.append(item)
    return {"ok": rep.ok, "violations": out}


def _table(ip: ImpreciseProbability, lo: str, hi: str) -> list[dict]:
    g = ip.ground
    return [
        {"event": g.label(e), lo: str(ip.lower[e]), hi: str(ip.upper[e])}
        for e in g.all_events()
    ]


def _polytope(P: CredalPolytope) -> dict:
    return {
        "equalities": [{"gamble": _vec(r), "value": str(c)} for r, c in P.equalities],
        "inequalities": [{"gamble": _vec(r), "bound": str(c)} for r, c in P.inequalities],
    }


def _finding_measure(ctx: "Context") -> PartialProbability:
    mu = ctx.problem.probability()
    rep = validate_measure(mu)
    if not rep.ok:
        raise ProblemError(
            "measure is not a valid probability: "
            + "; ".join(v.detail for v in rep.violations)
        )
    return mu


# ---------------------------------------------------------------- operations


@dataclass
class Context:
    problem: Problem
    depth: int
    parallel: int


def op_hull(ctx: Context) -> dict:
    S = ctx.problem.set_system()
    H = pre_dynkin_hull(S)
    return {"generators": _labels(S), "hull": _labels(H)}


def op_blocks(ctx: Context) -> dict:
    D = pre_dynkin_hull(ctx.problem.set_system())
    return {"domain": _labels(D), "blocks": [_labels(b) for b in blocks(D)]}


def op_validate(ctx: Context) -> dict:
    mu = ctx.problem.probability()
    g = mu.ground
    return {
        "domain": _labels(mu.domain),
        "values": {g.label(e): str(v) for e, v in mu.table.items()},
        "report": _report(g, validate_measure(mu)),
    }


def op_extendable(ctx: Context) -> dict:
    ok, nu = is_extendable(_finding_measure(ctx))
    return {"extendable": ok, "witness": _vec(nu)}


def op_extend(ctx: Context) -> dict:
    mu = _finding_measure(ctx)
    try:
        ip = coherent_extension_table(mu, parallel=ctx.parallel)
    except NotExtendable:
        return {"extendable": False, "table": None}
    g = mu.ground
    out: dict[str, Any] = {"extendable": True, "table": _table(ip, "lower", "upper")}
    if ctx.problem.event is not None:
        e = ctx.problem.event
        out["event"] = {"event": g.label(e), "lower": str(ip.lower[e]), "upper": str(ip.upper[e])}
    return out


def op_inner_outer(ctx: Context) -> dict:
    mu = _finding_measure(ctx)
    ip = inner_outer(mu)
    g = mu.ground
    rep = check_ip_axioms(ip)
    return {
        "table": _table(ip, "inner", "outer"),
        "outer_subadditivity_failures": [
            [g.label(e) for e in v.events] for v in rep.violations if v.clause == "subadditivity"
        ],
        "inner_superadditivity_failures": [
            [g.label(e) for e in v.events] for v in rep.violations if v.clause == "superadditivity"
        ],
    }


def op_bayes(ctx: Context) -> dict:
    p = ctx.problem
    p.need("event", "cond")
    mu = _finding_measure(ctx)
    g = mu.ground
    try:
        lo, hi = gbr_conditional(mu, p.event, p.cond)
    except NotExtendable:
        return {"extendable": False, "lower": None, "upper": None}
    except ConditioningError as exc:
        raise ProblemError(f"cond: {exc}") from None
    return {
        "extendable": True,
        "event": g.label(p.event),
        "cond": g.label(p.cond),
        "lower": str(lo),
        "upper": str(hi),
    }


def op_precise_events(ctx: Context) -> dict:
    p = ctx.problem
    g = p.ground
    if p.lower is not None or p.upper is not None:
        p.need("lower", "upper")
        lower, upper = dict(p.lower), dict(p.upper)
        missing = [g.label(e) for e in g.all_events() if e not in lower or e not in upper]
        if missing:
            raise ProblemError(f"lower/upper: missing events {', '.join(missing)}")
        ip = ImpreciseProbability.from_tables(g, lower, upper)
        source = "tables"
    else:
        try:
            ip = coherent_extension_table(_finding_measure(ctx), parallel=ctx.parallel)
        except NotExtendable:
            return {"source": "coherent extension", "extendable": False}
        source = "coherent extension"
    D, flag = precise_events(ip)
    return {
        "source": source,
        "events": _labels(D),
        "pre_dynkin": flag,
        "axioms": _report(g, check_ip_axioms(ip)),
    }


def op_bipolar(ctx: Context) -> dict:
    psi = ctx.problem.reference()
    A = ctx.problem.set_system()
    C = bipolar_closure(psi, A)
    return {
        "system": _labels(A),
        "hull": _labels(pre_dynkin_hull(A)),
        "closure": _labels(C),
        "closed": C == A,
    }


def op_dual(ctx: Context) -> dict:
    p = ctx.problem
    psi = p.reference()
    if p.measures is not None:
        return {"source": "measures", "dual": _labels(dual_credal_finite(psi, p.measures))}
    Q = credal(psi, p.set_system())
    return {
        "source": "credal set of system",
        "dual": _labels(dual_credal(psi, Q, method="lp", parallel=ctx.parallel)),
    }


def op_galois_audit(ctx: Context) -> dict:
    psi = ctx.problem.reference()
    A = ctx.problem.set_system()
    g = psi.ground
    H = pre_dynkin_hull(A)
    mA = credal(psi, A)
    C = dual_credal(psi, mA)
    zero_closed = True
    for a in C.events:
        if psi(a) == 0:
            if any(b & a == b and b not in C for b in g.all_events()):
                zero_closed = False
            comp = g.full ^ a
            if any(c & comp == comp and c not in C for c in g.all_events()):
                zero_closed = False
    laws = {
        "hull_invariance": mA.same_set(credal(psi, H)),
        "extensive": H.issubset(C),
        "pseudo_inverse": mA.same_set(credal(psi, C)),
        "closure_idempotent": dual_credal(psi, credal(psi, C)) == C,
        "dual_is_pre_dynkin": is_pre_dynkin(C),
        "measure_zero_closedness": zero_closed,
        "hull_equals_closure": H == C,
    }
    return {"hull": _labels(H), "closure": _labels(C), "laws": laws}


def op_distort(ctx: Context) -> dict:
    p = ctx.problem
    psi = p.reference()
    p.need("gamma")
    gamma = PiecewiseLinearConcave(p.gamma)
    M = distorted_credal(psi, gamma)
    dual = dual_credal(psi, M)
    cert = certainty_system(psi)
    return {
        "gamma_is_identity": gamma.is_identity,
        "dual": _labels(dual),
        "certainty": _labels(cert),
        "dual_equals_certainty": dual == cert,
        "point_polytope": M.same_set(CredalPolytope.point(psi.ground, psi.atom_mass)),
    }


def op_certainty(ctx: Context) -> dict:
    return {"certainty": _labels(certainty_system(ctx.problem.reference()))}


def _expectation_doc(E: PartialExpectation) -> list[dict]:
    return [
        {"basis": [_vec(b) for b in basis], "values": _vec(vals)} for basis, vals in E.subspaces
    ]


def op_prevision_from_measure(ctx: Context) -> dict:
    E = from_measure(_finding_measure(ctx))
    return {
        "expectation": _expectation_doc(E),
        "report": _report(E.ground, validate_partial_expectation(E)),
    }


def op_prevision_extend(ctx: Context) -> dict:
    p = ctx.problem
    E = p.partial_expectation()
    g = E.ground
    ok, nu = is_extendable_prevision(E)
    viol = violation_search(E)
    out: dict[str, Any] = {
        "report": _report(g, validate_partial_expectation(E)),
        "extendable": ok,
        "witness": _vec(nu),
        "violation": None if viol is None else [{"subspace": i, "gamble": _vec(f)} for i, f in viol],
    }
    if ok and p.gambles is not None:
        fs = list(p.gambles)
        run: Callable = lambda f: natural_extension(E, f)  # noqa: E731
        if ctx.parallel > 1:
            with ThreadPoolExecutor(max_workers=ctx.parallel) as pool:
                bounds = list(pool.map(run, fs))
        else:
            bounds = [run(f) for f in fs]
        out["natural_extension"] = [
            {"gamble": _vec(f), "lower": str(lo), "upper": str(hi)} for f, (lo, hi) in zip(fs, bounds)
        ]
    return out


def op_precise_gambles(ctx: Context) -> dict:
    p = ctx.problem
    if p.measures is not None:
        raise ProblemError("precise-gambles works on a credal polytope, not a measure list")
    if p.expectation is not None:
        Q = prevision_credal(p.partial_expectation())
        source = "expectation"
    elif p.measure is not None:
        Q = credal_set(_finding_measure(ctx))
        source = "measure"
    else:
        Q = credal(p.reference(), p.set_system())
        source = "credal set of system"
    try:
        S = precise_gambles(Q)
    except EmptyPolytope:
        return {"source": source, "empty": True}
    R = precise_restriction(Q)
    out = {
        "source": source,
        "empty": False,
        "dimension": S.dim,
        "basis": [_vec(b) for b in S.basis],
        "annihilator": [_vec(a) for a in S.annihilator()],
        "restriction": _expectation_doc(R),
        "restriction_report": _report(p.ground, validate_partial_expectation(R)),
    }
    if p.psi is not None:
        out["dual_subspace"] = [_vec(b) for b in generalized_dual_credal(p.reference(), Q).basis]
    return out


def op_falsify(ctx: Context) -> dict:
    mu = _finding_measure(ctx)
    g = mu.ground
    fam = horn_tarski_falsify(mu, ctx.depth)
    ok, _ = is_extendable(mu)
    return {
        "depth": ctx.depth,
        "extendable": ok,
        "family": None if fam is None else {
            "B": [g.label(e) for e in fam[0]],
            "A": [g.label(e) for e in fam[1]],
        },
    }


OPERATIONS: dict[str, Callable[[Context], dict]] = {
    "hull": op_hull,
    "blocks": op_blocks,
    "validate": op_validate,
    "extendable": op_extendable,
    "extend": op_extend,
    "inner-outer": op_inner_outer,
    "bayes": op_bayes,
    "precise-events": op_precise_events,
    "bipolar": op_bipolar,
    "dual": op_dual,
    "galois-audit": op_galois_audit,
    "distort": op_distort,
    "certainty": op_certainty,
    "prevision-from-measure": op_prevision_from_measure,
    "prevision-extend": op_prevision_extend,
    "precise-gambles": op_precise_gambles,
    "falsify": op_falsify,
}


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="predynkin",
        description="Exact computations on pre-Dynkin systems, credal sets and partial expectations.",
    )
    ap.add_argument("subcommand", choices=sorted(OPERATIONS))
    ap.add_argument("path", nargs="?", help="problem file (or use --input)")
    ap.add_argument("--input", dest="input_path", help="problem file")
    ap.add_argument("--depth", type=int, help="search depth for falsify")
    ap.add_argument("--event", help="event such as 13 or [1,3]")
    ap.add_argument("--cond", help="conditioning event for bayes")
    ap.add_argument("--parallel", type=int, default=1, help="worker threads for per-event solves")
    return ap


def _load(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns the exit code and the text for stdout."""
    ap = build_parser()
    args = ap.parse_args(argv)
    path = args.input_path or args.path
    if path is None:
        raise ProblemError("no problem file given")
    if args.path and args.input_path and args.path != args.input_path:
        raise ProblemError("give the problem file once, either positionally or with --input")
    if args.parallel < 1:
        raise ProblemError("--parallel must be at least 1")
    raw = _load(path)
    problem = Problem.parse(raw)
    overrides: dict[str, Any] = {}
    if args.event is not None:
        overrides["event"] = _event(problem.ground, args.event, "--event")
    if args.cond is not None:
        overrides["cond"] = _event(problem.ground, args.cond, "--cond")
    if args.depth is not None:
        if args.depth < 0:
            raise ProblemError("--depth must be nonnegative")
        overrides["depth"] = args.depth
    if overrides:
        problem = Problem(**{**problem.__dict__, **overrides})
    depth = problem.depth if problem.depth is not None else DEFAULT_DEPTH
    ctx = Context(problem, depth, args.parallel)
    result = OPERATIONS[args.subcommand](ctx)
    doc = {"operation": args.subcommand, "input": problem.to_json(), "result": result}
    return EXIT_OK, json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        code, text = run(argv)
    except ProblemError as exc:
        print(f"predynkin: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitExceeded as exc:
        print(f"predynkin: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except PreDynkinError as exc:
        print(f"predynkin: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

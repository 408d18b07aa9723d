"""Batch front end: ``gorenstein-wp run FILE...`` and ``gorenstein-wp list``.

Exit codes: 0 success, 2 invalid input, 3 precision exhausted, 4 the point
is not Gorenstein.  Errors go to stderr as a JSON object with a ``code``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import jsonschema

from .enumerative import (
    AD4_CUSP,
    ad_node,
    evaluate_class,
    harris_mumford_degrees,
    hyperelliptic_class_g3,
    hyperflex_class_g3,
    hyperflex_count,
    jet_c1,
    jet_c2,
    pencil_nodes,
    quartic_pencil_degrees,
    sw_class,
)
from .errors import NonGorenstein, PrecisionExhausted
from .localring import BranchModel, build_singular_point, gorenstein_test_monomial, semigroup_from_generators
from .series import DEFAULT_PRECISION, TruncatedSeries, parse_polynomial
from .wronskian import (
    LocalLinearSystem,
    brill_segre,
    certification_precision,
    point_weight,
    vanishing_sequence,
    wl_wronskian,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECISION = 3
EXIT_NON_GORENSTEIN = 4

_INT = {"type": "integer"}
_POS = {"type": "integer", "minimum": 1}
_NONNEG = {"type": "integer", "minimum": 0}


def _kind(name: str, props: Dict[str, Any], required: List[str]) -> Dict[str, Any]:
    return {
        "if": {"properties": {"kind": {"const": name}}},
        "then": {
            "properties": {"kind": {}, "description": {"type": "string"}, **props},
            "required": required,
            "additionalProperties": False,
        },
    }


SCENARIO_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {
            "enum": ["singularity", "semigroup", "brill-segre", "jet-chern", "pencil", "sw-class", "hyperflex-g3"]
        }
    },
    "allOf": [
        _kind(
            "singularity",
            {
                "r": _NONNEG,
                "precision": _POS,
                "branches": {
                    "type": "array",
                    "minItems": 1,
                    "items": {
                        "type": "object",
                        "required": ["name", "multiplier", "sections"],
                        "additionalProperties": False,
                        "properties": {
                            "name": {"type": "string"},
                            "variable": {"type": "string", "pattern": "^[A-Za-z_][A-Za-z_0-9]*$"},
                            "multiplier": {"type": "string"},
                            "sections": {"type": "array", "minItems": 1, "items": {"type": "string"}},
                        },
                    },
                },
            },
            ["r", "branches"],
        ),
        _kind(
            "semigroup",
            {"generators": {"type": "array", "minItems": 1, "items": _POS}},
            ["generators"],
        ),
        _kind("brill-segre", {"r": _NONNEG, "d": _INT, "g": _INT}, ["r", "d", "g"]),
        _kind("jet-chern", {"k": _NONNEG}, ["k"]),
        _kind("pencil", {"n": _POS, "d": _POS}, ["n", "d"]),
        _kind("sw-class", {"g": _POS}, ["g"]),
        _kind("hyperflex-g3", {}, []),
    ],
}


class ScenarioError(Exception):
    def __init__(self, code: int, kind: str, message: str, **extra):
        super().__init__(message)
        self.code = code
        self.kind = kind
        self.extra = extra

    def to_json(self) -> Dict[str, Any]:
        return {"code": self.code, "error": self.kind, "message": str(self), **self.extra}


def rational(x) -> Any:
    """Integers stay integers; other rationals become the string ``p/q``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def validate(scenario: Any) -> None:
    try:
        jsonschema.validate(scenario, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ScenarioError(EXIT_INVALID, "invalid-input", f"{where}: {exc.message}") from None


# -- singularity ----------------------------------------------------------

def _parse_branch_text(text: str, variable: str, where: str) -> Dict[int, Fraction]:
    try:
        terms, var = parse_polynomial(text)
    except ValueError as exc:
        raise ScenarioError(EXIT_INVALID, "invalid-input", f"{where}: {exc}") from None
    if var is not None and var != variable:
        raise ScenarioError(
            EXIT_INVALID, "invalid-input", f"{where}: uses variable {var!r}, branch declares {variable!r}"
        )
    return terms


def _resolve_precision(
    scenario: Dict[str, Any], flag: Optional[int], bound: int, notices: List[str]
) -> int:
    explicit = flag if flag is not None else scenario.get("precision")
    if explicit is None:
        if bound > DEFAULT_PRECISION:
            notices.append(f"precision raised from {DEFAULT_PRECISION} to certification bound {bound}")
            return bound
        return DEFAULT_PRECISION
    if explicit < bound:
        notices.append(f"precision {explicit} is below the certification bound {bound}")
    return explicit


def run_singularity(scenario: Dict[str, Any], flag_precision: Optional[int], notices: List[str]) -> Dict[str, Any]:
    r = scenario["r"]
    raw = []
    for bi, br in enumerate(scenario["branches"]):
        var = br.get("variable", "t")
        if len(br["sections"]) != r + 1:
            raise ScenarioError(
                EXIT_INVALID,
                "invalid-input",
                f"branches/{bi}: {len(br['sections'])} sections given, r+1 = {r + 1} expected",
            )
        mult = _parse_branch_text(br["multiplier"], var, f"branches/{bi}/multiplier")
        secs = [
            _parse_branch_text(s, var, f"branches/{bi}/sections/{j}") for j, s in enumerate(br["sections"])
        ]
        raw.append((br["name"], var, mult, secs))

    max_deg = max((max(t, default=0) for _, _, _, secs in raw for t in secs), default=0)
    max_cond = max(min(mult, default=0) for _, _, mult, _ in raw)
    bound = certification_precision(r, max_deg, max_cond)
    prec = _resolve_precision(scenario, flag_precision, bound, notices)

    try:
        branches = [
            BranchModel.from_multiplier(name, TruncatedSeries.from_terms(mult, prec), var)
            for name, var, mult, _ in raw
        ]
        point = build_singular_point(branches)
        sections = tuple(
            tuple(TruncatedSeries.from_terms(raw[b][3][j], prec) for b in range(len(raw))) for j in range(r + 1)
        )
        system = LocalLinearSystem(sections)
        # dependent sections have a vanishing Wronskian; report that as bad input, not as precision
        profiles = [vanishing_sequence(system.on_branch(b)) for b in range(len(raw))]
        report = point_weight(point, system)
        wronskians = wl_wronskian(point, system)
    except NonGorenstein as exc:
        raise ScenarioError(EXIT_NON_GORENSTEIN, "non-gorenstein", str(exc), n_P=exc.n_p) from None
    except PrecisionExhausted as exc:
        raise ScenarioError(
            EXIT_PRECISION,
            "precision-exhausted",
            str(exc),
            branch=exc.branch,
            suggested_precision=max(exc.suggested_precision or 0, bound),
        ) from None
    except ValueError as exc:
        raise ScenarioError(EXIT_INVALID, "invalid-input", str(exc)) from None

    per_branch = []
    for branch, order, w, prof in zip(point.branches, report.per_branch_order, wronskians, profiles):
        per_branch.append(
            {
                "name": branch.name,
                "variable": branch.variable,
                "conductor_order": branch.conductor_order,
                "wronskian_order": order.k,
                "wronskian_leading_coefficient": rational(w[order.k]),
                "vanishing_sequence": list(prof.vanishing_sequence),
                "gap_sequence": list(prof.gap_sequence),
                "vanishing_weight": prof.weight,
            }
        )
    return {
        "kind": "singularity",
        "r": r,
        "precision": prec,
        "n_P": point.n_p,
        "delta_P": point.delta_p,
        "branches": per_branch,
        "per_branch_orders": [o.k for o in report.per_branch_order],
        "total_weight": report.total_weight,
        "lower_bound": report.lower_bound,
        "extraweight": report.extraweight,
    }


# -- the scalar kinds -------------------------------------------------------

def _class_json(c) -> Dict[str, Any]:
    return {name: rational(v) for name, v in c.symbols().items()}


def run_scalar(scenario: Dict[str, Any]) -> Dict[str, Any]:
    kind = scenario["kind"]
    if kind == "semigroup":
        try:
            s = semigroup_from_generators(scenario["generators"])
        except ValueError as exc:
            raise ScenarioError(EXIT_INVALID, "invalid-input", str(exc)) from None
        rep = gorenstein_test_monomial(s)
        return {
            "kind": kind,
            "generators": list(s.generators),
            "gaps": sorted(s.gaps),
            "delta": s.delta,
            "conductor": s.conductor,
            "frobenius": s.frobenius,
            "symmetric": s.symmetric,
            "n_P": rep.n_p,
            "gorenstein": rep.is_gorenstein,
        }
    if kind == "brill-segre":
        r, d, g = scenario["r"], scenario["d"], scenario["g"]
        return {"kind": kind, "r": r, "d": d, "g": g, "total_weight": brill_segre(r, d, g)}
    if kind == "jet-chern":
        k = scenario["k"]
        zeta, eta = jet_c1(k)
        a, b, c = jet_c2(k)
        return {
            "kind": kind,
            "k": k,
            "c1": {"zeta": zeta, "eta": eta},
            "c2": {"eta^2": a, "eta*zeta": b, "zeta^2": c},
        }
    if kind == "pencil":
        n, d = scenario["n"], scenario["d"]
        out = {"kind": kind, "n": n, "d": d, "nodes": pencil_nodes(n, d)}
        if n == 2:
            out["ad_node_4"] = ad_node(4)
            out["hyperflexes"] = hyperflex_count(d)
        return out
    if kind == "sw-class":
        g = scenario["g"]
        br = sw_class(g)
        return {
            "kind": kind,
            "g": g,
            "m": {str(i): v for i, v in sorted(br.m.items())},
            "c": {str(i): rational(v) for i, v in sorted(br.c.items())},
            "b": {str(i): rational(v) for i, v in sorted(br.b.items())},
            "a0": rational(br.a0),
            "lambda_coeff": rational(br.lambda_coeff),
            "class": _class_json(br.final),
            "harris_mumford_degree": rational(evaluate_class(br.final, harris_mumford_degrees(g))),
        }
    if kind == "hyperflex-g3":
        hf = hyperflex_class_g3()
        return {
            "kind": kind,
            "class": _class_json(hf.divisor_class),
            "hyperelliptic_class": _class_json(hyperelliptic_class_g3()),
            "printed_class": {"lambda": hf.printed[0], "delta0": -hf.printed[1], "delta1": -hf.printed[2]},
            "delta1_discrepancy": hf.delta1_discrepancy,
            "quartic_pencil_count": rational(evaluate_class(hf.divisor_class, quartic_pencil_degrees())),
            "ad4_cusp_reference": AD4_CUSP,
        }
    raise ScenarioError(EXIT_INVALID, "invalid-input", f"unknown kind {kind!r}")


def evaluate(scenario: Any, precision: Optional[int] = None, notices: Optional[List[str]] = None) -> Dict[str, Any]:
    """Validate and run one scenario.  Notices (e.g. precision changes) are appended to ``notices``."""
    validate(scenario)
    if notices is None:
        notices = []
    if scenario["kind"] == "singularity":
        return run_singularity(scenario, precision, notices)
    return run_scalar(scenario)


# -- bundled scenarios ------------------------------------------------------

def _bundle_dir():
    return resources.files("gorenstein_wp") / "scenarios"


def list_bundled(pattern: str = "") -> List[Tuple[str, str, str]]:
    """Sorted ``(name, kind, description)`` for shipped scenarios whose name contains ``pattern``."""
    out = []
    for entry in _bundle_dir().iterdir():
        if not entry.name.endswith(".json"):
            continue
        name = entry.name[: -len(".json")]
        if pattern and pattern not in name:
            continue
        data = json.loads(entry.read_text())
        out.append((name, data["kind"], data.get("description", "")))
    return sorted(out)


def load_scenario(ref: str) -> Any:
    """Read a scenario from a path, or from the bundle when ``ref`` names a shipped scenario."""
    path = Path(ref)
    try:
        if path.exists():
            text = path.read_text()
        else:
            name = ref[: -len(".json")] if ref.endswith(".json") else ref
            entry = _bundle_dir() / f"{name}.json"
            if not entry.is_file():
                raise ScenarioError(EXIT_INVALID, "invalid-input", f"no such file or bundled scenario: {ref}")
            text = entry.read_text()
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(EXIT_INVALID, "invalid-input", f"{ref}: not valid JSON ({exc})") from None


def render(report: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                walk(f"{prefix}[{i}]", item)
        else:
            lines.append(f"{prefix}: {json.dumps(value)}")

    walk("", report)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gorenstein-wp",
        description="Weierstrass weights at Gorenstein singularities and related enumerative counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate scenario files (paths or bundled names)")
    run.add_argument("files", nargs="+")
    run.add_argument("--precision", type=int, default=None, help="working precision for series (default 64)")
    run.add_argument("--format", choices=("json", "text"), default="json")
    lst = sub.add_parser("list", help="list bundled scenarios")
    lst.add_argument("filter", nargs="?", default="")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for name, kind, desc in list_bundled(args.filter):
            print(f"{name}\t{kind}\t{desc}")
        return EXIT_OK

    if args.precision is not None and args.precision < 1:
        print(json.dumps({"code": EXIT_INVALID, "error": "invalid-input", "message": "--precision must be positive"}),
              file=sys.stderr)
        return EXIT_INVALID

    status = EXIT_OK
    for ref in args.files:
        notices: List[str] = []
        try:
            report = evaluate(load_scenario(ref), args.precision, notices)
        except ScenarioError as exc:
            report = None
            error = exc
        for note in notices:
            print(f"notice: {ref}: {note}", file=sys.stderr)
        if report is None:
            print(json.dumps({"file": ref, **error.to_json()}, sort_keys=True), file=sys.stderr)
            status = status or error.code
            continue
        sys.stdout.write(render(report, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())

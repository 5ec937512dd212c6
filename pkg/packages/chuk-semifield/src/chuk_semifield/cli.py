"""Command-line front end.

Every subcommand is turned into a ``JobSpec`` and executed by ``execute``;
``run --job job.yaml`` reads the same spec from YAML. Results are printed as
JSON with sorted keys.

Exit codes: 0 success (a verdict was computed), 1 parameter error,
2 internal consistency failure.

Usage:
    chuk-semifield build --p 2 --m 2 --family knuth2 --params '{"k": 1, "alpha": 2}' --out s.json
    chuk-semifield nuclei --in s.json
    chuk-semifield count --p 3 --m 10 --k 1 --l 2
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from chuk_semifield import __version__
from chuk_semifield.checks import crosscheck, selftest
from chuk_semifield.config import get_settings, load_settings, require_budget, set_settings
from chuk_semifield.core.knuth import knuth_orbit
from chuk_semifield.core.nuclei import nuclei
from chuk_semifield.core.spread import transpose
from chuk_semifield.equivalence.classify import (
    NewFamilyParams,
    centralizer_count,
    centralizer_formula,
    classify_pair,
    new_family_count,
)
from chuk_semifield.equivalence.invariants import invariants
from chuk_semifield.equivalence.isotopy import brute_force_isotopic
from chuk_semifield.errors import ClassifierInapplicable, ConsistencyError, ParameterError
from chuk_semifield.families.registry import get_family_registry
from chuk_semifield.io import (
    dumps,
    export_spread_set,
    load_presemifield,
    save_presemifield,
    write_json,
)
from chuk_semifield.models import ClassificationReport, FieldSpec, JobSpec
from chuk_semifield.types import Command, ExitCode

logger = logging.getLogger(__name__)

Payload = dict[str, Any]


# ============================================================================
# Handlers
# ============================================================================


def _axiom_cost(order: int, n: int) -> int:
    # one n x n rank per nonzero element, on each side
    return 2 * order * n**3


def _nuclei_cost(n: int) -> int:
    return 2 * n**5


def _field(job: JobSpec) -> Any:
    assert job.field is not None
    return job.field.context()


def _field_info(job: JobSpec) -> Payload:
    ctx = _field(job)
    info = ctx.to_dict()
    info["order"] = ctx.order
    info["generator"] = ctx.generator
    if ctx.p != 2:
        info["smallest_nonsquare"] = ctx.smallest_nonsquare()
    return info


def _build(job: JobSpec) -> Payload:
    assert job.family is not None
    assert job.field is not None
    if job.params.get("check", True):
        n = 2 * job.field.m
        require_budget(_axiom_cost(job.field.p**n, n), f"axiom check of {job.family}", slow=job.slow)
    S = get_family_registry().build(job.family, _field(job), job.params)
    if job.output is not None:
        save_presemifield(S, job.output)
    return {"label": S.label, "order": S.order, "metadata": S.metadata}


def _verify(job: JobSpec) -> Payload:
    S = load_presemifield(job.inputs[0])
    require_budget(_axiom_cost(S.order, S.n), f"axiom check at order {S.order}", slow=job.slow)
    report = S.verify_axioms()
    return {"label": S.label, "order": S.order, "axioms": report.to_dict(), "summary": report.summary()}


def _nuclei(job: JobSpec) -> Payload:
    S = load_presemifield(job.inputs[0])
    require_budget(_nuclei_cost(S.n), f"nuclei at order {S.order}", slow=job.slow)
    N = nuclei(S)
    return {"label": S.label, "nuclei": N.to_dict(), "triple": str((N.left, N.middle, N.right))}


def _orbit(job: JobSpec) -> Payload:
    S = load_presemifield(job.inputs[0])
    require_budget(6 * _nuclei_cost(S.n), f"Knuth orbit at order {S.order}", slow=job.slow)
    members = [
        {"label": member.label, "nuclei": nuclei(member.semifield).to_dict()}
        for member in knuth_orbit(S)
    ]
    return {"label": S.label, "size": len(members), "members": members}


def _derived(job: JobSpec) -> Payload:
    S = load_presemifield(job.inputs[0])
    out = S.dual() if job.command == Command.DUAL else transpose(S)
    if job.output is not None:
        save_presemifield(out, job.output)
    return {"label": out.label, "metadata": out.metadata}


def _spread(job: JobSpec) -> Payload:
    S = load_presemifield(job.inputs[0])
    if job.output is not None:
        export_spread_set(S, job.output)
    return {"label": S.label, "members": S.order, "output": str(job.output) if job.output else None}


def _isotopic(job: JobSpec) -> Payload:
    S1, S2 = (load_presemifield(path) for path in job.inputs)
    records = [invariants(S1), invariants(S2)]
    payload: Payload = {"invariants": [r.model_dump() for r in records]}
    if records[0].rules_out_isotopy(records[1]):
        payload.update(isotopic=False, reason="invariants differ")
        return payload
    witness = brute_force_isotopic(S1, S2, slow=job.slow)
    payload["isotopic"] = witness is not None
    if witness is not None:
        payload["witness"] = witness.to_dict()
    return payload


def _classify(job: JobSpec) -> Payload:
    assert job.field is not None
    base = {"p": job.field.p, "m": job.field.m}
    if job.field.modulus is not None:
        base["modulus"] = tuple(job.field.modulus)
    try:
        first = NewFamilyParams.model_validate({**base, **job.params["first"]})
        second = NewFamilyParams.model_validate({**base, **job.params["second"]})
    except KeyError as exc:
        raise ParameterError(f"classify needs params.{exc.args[0]}") from exc
    verdict = classify_pair(first, second)
    limit = get_settings().invariant_order_limit
    records = []
    if first.p ** (2 * first.m) <= limit:
        records = [invariants(P.build()).model_dump() for P in (first, second)]
    bounds = new_family_count(first.p, first.m, verdict.first.k, verdict.first.l)
    report = ClassificationReport(
        params=[first.model_dump(), second.model_dump()],
        verdict=verdict.to_dict(),
        invariants=records,
        bounds=bounds.model_dump(),
    )
    return report.model_dump()


def _kl(job: JobSpec) -> tuple[int, int]:
    try:
        return int(job.params["k"]), int(job.params["l"])
    except KeyError as exc:
        raise ParameterError(f"{job.command.value} needs params.{exc.args[0]}") from exc


def _count(job: JobSpec) -> Payload:
    assert job.field is not None
    k, l = _kl(job)
    return new_family_count(job.field.p, job.field.m, k, l).model_dump()


def _centralizer(job: JobSpec) -> Payload:
    assert job.field is not None
    p, m = job.field.p, job.field.m
    k, l = _kl(job)
    return {"count": centralizer_count(p, m, k, l, slow=job.slow), "formula": centralizer_formula(p, m, k)}


def _suite(job: JobSpec) -> Payload:
    max_order = int(job.params.get("max_order", 256))
    run = crosscheck if job.command == Command.CROSSCHECK else selftest
    report = run(max_order)
    if not report.passed:
        logger.error(report.summary())
        raise ConsistencyError(f"{report.suite} failed: {report.counts()}")
    return report.to_dict()


_HANDLERS: dict[Command, Callable[[JobSpec], Payload]] = {
    Command.FIELD_INFO: _field_info,
    Command.BUILD: _build,
    Command.VERIFY: _verify,
    Command.NUCLEI: _nuclei,
    Command.ORBIT: _orbit,
    Command.DUAL: _derived,
    Command.TRANSPOSE: _derived,
    Command.SPREAD: _spread,
    Command.ISOTOPIC: _isotopic,
    Command.CLASSIFY: _classify,
    Command.COUNT: _count,
    Command.CENTRALIZER: _centralizer,
    Command.CROSSCHECK: _suite,
    Command.SELFTEST: _suite,
}

# File commands that estimate their cost before running
_GUARDED = frozenset({Command.VERIFY, Command.NUCLEI, Command.ORBIT})

# Commands whose --out receives the JSON payload itself
_JSON_OUTPUT = frozenset(
    {Command.FIELD_INFO, Command.VERIFY, Command.NUCLEI, Command.ORBIT, Command.ISOTOPIC,
     Command.CLASSIFY, Command.COUNT, Command.CENTRALIZER, Command.CROSSCHECK, Command.SELFTEST}
)


def execute(job: JobSpec) -> Payload:
    logger.debug("executing %s", job.command.value)
    payload = _HANDLERS[job.command](job)
    if job.output is not None and job.command in _JSON_OUTPUT:
        write_json(payload, job.output)
    return payload


# ============================================================================
# Argument parsing
# ============================================================================


def _json_arg(text: str) -> dict[str, Any]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"malformed JSON parameters: {exc}") from exc
    if not isinstance(value, dict):
        raise ParameterError("JSON parameters must be an object")
    return value


def _modulus_arg(text: str) -> list[int]:
    return [int(v) for v in text.split(",")]


def _add_field(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="characteristic")
    parser.add_argument("--m", type=int, required=True, help="extension degree")
    parser.add_argument("--modulus", type=_modulus_arg, help="coefficients, lowest degree first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chuk-semifield", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--settings", type=Path, help="YAML settings file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(Command.FIELD_INFO.value, help="describe GF(p^m)")
    _add_field(p)

    p = sub.add_parser(Command.BUILD.value, help="build a named family")
    _add_field(p)
    p.add_argument("--family", required=True, help="registered family name")
    p.add_argument("--params", default="{}", help="family parameters as JSON")
    p.add_argument("--slow", action="store_true", help="allow an axiom check above cost_limit")
    p.add_argument("--out", type=Path)

    for command, text in (
        (Command.VERIFY, "check for zero divisors"),
        (Command.NUCLEI, "left, middle and right nucleus orders"),
        (Command.ORBIT, "Knuth orbit with nuclei"),
        (Command.DUAL, "swap the arguments"),
        (Command.TRANSPOSE, "transpose via the dual spread"),
        (Command.SPREAD, "export the spread set as text"),
    ):
        p = sub.add_parser(command.value, help=text)
        p.add_argument("--in", dest="inputs", type=Path, required=True)
        if command in _GUARDED:
            p.add_argument("--slow", action="store_true", help="allow work above cost_limit")
        p.add_argument("--out", type=Path)

    p = sub.add_parser(Command.ISOTOPIC.value, help="exhaustive isotopy search")
    p.add_argument("--in", dest="inputs", type=Path, action="append", required=True)
    p.add_argument("--slow", action="store_true", help="allow orders up to 81")
    p.add_argument("--out", type=Path)

    p = sub.add_parser(Command.CLASSIFY.value, help="classify two new-family members")
    _add_field(p)
    p.add_argument("--first", required=True, help='JSON {"k", "l", "alpha", "eta"}')
    p.add_argument("--second", required=True, help='JSON {"k", "l", "alpha", "eta"}')
    p.add_argument("--out", type=Path)

    for command, text in (
        (Command.COUNT, "isotopism classes of the new family"),
        (Command.CENTRALIZER, "centralizer of the gamma autotopisms"),
    ):
        p = sub.add_parser(command.value, help=text)
        _add_field(p)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--slow", action="store_true", help="allow work above cost_limit")
        p.add_argument("--out", type=Path)

    for command, text in (
        (Command.CROSSCHECK, "family correspondences"),
        (Command.SELFTEST, "exhaustive property checks"),
    ):
        p = sub.add_parser(command.value, help=text)
        p.add_argument("--max-order", type=int, default=256)
        p.add_argument("--out", type=Path)

    p = sub.add_parser("run", help="execute a YAML job file")
    p.add_argument("--job", type=Path, required=True)
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    command = Command(args.command)
    data: dict[str, Any] = {"command": command, "verbose": args.verbose, "slow": getattr(args, "slow", False)}
    if getattr(args, "p", None) is not None:
        data["field"] = FieldSpec(p=args.p, m=args.m, modulus=args.modulus)
    inputs = getattr(args, "inputs", None)
    if inputs is not None:
        data["inputs"] = inputs if isinstance(inputs, list) else [inputs]
    if getattr(args, "out", None) is not None:
        data["output"] = args.out
    if command == Command.BUILD:
        data.update(family=args.family, params=_json_arg(args.params))
    elif command == Command.CLASSIFY:
        data["params"] = {"first": _json_arg(args.first), "second": _json_arg(args.second)}
    elif command in (Command.COUNT, Command.CENTRALIZER):
        data["params"] = {"k": args.k, "l": args.l}
    elif command in (Command.CROSSCHECK, Command.SELFTEST):
        data["params"] = {"max_order": args.max_order}
    return JobSpec.model_validate(data)


def load_job(path: Path) -> JobSpec:
    data = yaml.safe_load(path.read_text())
    if not isinstance(data, dict):
        raise ParameterError(f"job file {path} must hold a mapping")
    return JobSpec.model_validate(data)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.settings is not None:
            set_settings(load_settings(args.settings))
        job = load_job(args.job) if args.command == "run" else job_from_args(args)
        if job.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        payload = execute(job)
    except ConsistencyError as exc:
        print(f"consistency error: {exc}", file=sys.stderr)
        return ExitCode.CONSISTENCY_ERROR
    except ClassifierInapplicable as exc:
        print(f"classifier inapplicable: {exc}", file=sys.stderr)
        return ExitCode.PARAMETER_ERROR
    except (ParameterError, ValidationError, KeyError, OSError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return ExitCode.PARAMETER_ERROR
    sys.stdout.write(dumps(payload))
    return ExitCode.OK


if __name__ == "__main__":
    sys.exit(main())

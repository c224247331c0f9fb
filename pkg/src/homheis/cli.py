"""Command-line front end: ``homheis <subcommand> FILE [flags]``.

Every subcommand reads one algebra JSON file and prints a JSON report with
sorted keys. Exit codes: 0 on success, 2 on bad input, 1 on internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohomology import (
    FormulaComparison,
    adjoint_b2_verify,
    cohomology_report,
    faithful_h1_hom_report,
    faithful_h1_prediction,
    trivial_h2_predictions,
)
from .derivations import der_block_check, der_dim_compare, der_space, derivation_table
from .errors import FieldError, HomLieError, ValidationError
from .exactla import Matrix, as_scalar
from .heisenberg import (
    HeisenbergAlgebra,
    build_heisenberg,
    decompose,
    normal_form_dim3,
    split_heisenberg_abelian,
)
from .homlie import (
    HomLieAlgebra,
    adjoint_rep,
    is_heisenberg_type,
    validate_hom_lie,
)
from .representations import (
    check_representation,
    is_faithful,
    minimal_faithful,
    trivial_rep,
)
from .symplectic import is_lambda_symplectic

DEFAULT_MAX_DIM = 25


class InputError(HomLieError):
    """Bad file, bad JSON or data outside the accepted schema."""


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------
def max_dim() -> int:
    raw = os.environ.get("HOMLIE_MAX_DIM", str(DEFAULT_MAX_DIM))
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"HOMLIE_MAX_DIM must be an integer, got {raw!r}") from None


def parse_algebra_data(data) -> HomLieAlgebra | HeisenbergAlgebra:
    """Heisenberg schema when "m" is present, generic schema otherwise."""
    if not isinstance(data, dict):
        raise InputError("top-level JSON value must be an object")
    cap = max_dim()
    if "m" in data:
        for key in ("lambda", "P"):
            if key not in data:
                raise InputError(f"Heisenberg input is missing field {key!r}")
        m = data["m"]
        if not isinstance(m, int):
            raise InputError("field 'm' must be an integer")
        if 2 * m + 1 > cap:
            raise InputError(f"dimension {2 * m + 1} exceeds HOMLIE_MAX_DIM={cap}")
        H = build_heisenberg(m, as_scalar(data["lambda"]), Matrix.from_json(data["P"]))
        if "alpha" in data and Matrix.from_json(data["alpha"]) != H.P:
            raise InputError("fields 'alpha' and 'P' disagree")
        return H
    dim = data.get("dim")
    if isinstance(dim, int) and dim > cap:
        raise InputError(f"dimension {dim} exceeds HOMLIE_MAX_DIM={cap}")
    L = HomLieAlgebra.from_json(data)
    report = validate_hom_lie(L)
    if not report.ok:
        raise ValidationError("algebra fails the Hom-Lie axioms", report.witnesses)
    return L


def parse_algebra(path: str) -> HomLieAlgebra | HeisenbergAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_algebra_data(data)


def algebra_json(obj) -> dict:
    if isinstance(obj, HeisenbergAlgebra):
        out = obj.algebra.to_json()
        out.update(obj.to_json())
        return out
    return obj.to_json()


def _algebra(obj) -> HomLieAlgebra:
    return obj.algebra if isinstance(obj, HeisenbergAlgebra) else obj


def _require_heisenberg(obj, what: str) -> HeisenbergAlgebra:
    if not isinstance(obj, HeisenbergAlgebra):
        raise InputError(f"{what} needs Heisenberg input (fields m, lambda, P)")
    return obj


def _representation(obj, kind: str, dimT: int):
    L = _algebra(obj)
    if kind == "trivial":
        return trivial_rep(L, dimT)
    if kind == "adjoint":
        return adjoint_rep(L)
    return minimal_faithful(_require_heisenberg(obj, "the faithful module"))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------
def cmd_check(obj, args) -> dict:
    L = _algebra(obj)
    out = validate_hom_lie(L).to_json()
    out["dim"] = L.dim
    out["heisenberg_type"] = is_heisenberg_type(L).to_json()
    return out


def cmd_heisenberg(obj, args) -> dict:
    if isinstance(obj, HeisenbergAlgebra):
        return {
            "algebra": algebra_json(obj),
            "block_diagonal": obj.is_block_diagonal(),
            "symplectic": is_lambda_symplectic(obj.symplectic_block, obj.lam).to_json(),
        }
    return {"splitting": split_heisenberg_abelian(obj).to_json()}


def cmd_normal_form(obj, args) -> dict:
    H = _require_heisenberg(obj, "normal-form")
    if H.m != 1:
        raise InputError("normal-form is defined for m = 1 only")
    return normal_form_dim3(H.P).to_json()


def cmd_decompose(obj, args) -> dict:
    return decompose(_require_heisenberg(obj, "decompose")).to_json()


def cmd_der(obj, args) -> dict:
    L = _algebra(obj)
    space = der_space(L, args.k)
    out = space.to_json()
    if isinstance(obj, HeisenbergAlgebra) and obj.is_block_diagonal():
        out["block_checks"] = [der_block_check(obj, D, args.k).ok for D in space.generators]
        try:
            out["formula"] = der_dim_compare(obj, args.k).to_json()
        except FieldError as exc:
            out["formula"] = {"skipped": str(exc)}
    return out


def cmd_rep(obj, args) -> dict:
    R = _representation(obj, args.rep, args.dimT)
    out = R.to_json()
    out["kind"] = args.rep
    out["check"] = check_representation(_algebra(obj), R).to_json()
    out["faithful"] = is_faithful(R)
    return out


def _comparisons(obj, args, report) -> list:
    if not isinstance(obj, HeisenbergAlgebra):
        return []
    if args.rep == "trivial" and args.degree == 2 and not args.hom_restricted:
        got = [report.Z.dim, report.B.dim, report.dim_H]
        return [
            FormulaComparison(name, pred, val)
            for (name, pred), val in zip(trivial_h2_predictions(obj.m, args.dimT), got)
        ]
    if args.rep == "faithful" and args.degree == 1:
        if args.hom_restricted:
            try:
                return faithful_h1_hom_report(obj, args.r).comparisons
            except FieldError:
                return []
        return [FormulaComparison("dim H1 = m(m+3)/2", faithful_h1_prediction(obj.m), report.dim_H)]
    return []


def cmd_cohomology(obj, args) -> dict:
    L = _algebra(obj)
    R = _representation(obj, args.rep, args.dimT)
    report = cohomology_report(L, R, args.degree, args.r, args.hom_restricted)
    report.comparisons = _comparisons(obj, args, report)
    out = report.to_json()
    out["rep"] = args.rep
    if args.rep == "adjoint" and args.degree == 2 and isinstance(obj, HeisenbergAlgebra) and not args.hom_restricted:
        out["generator_lists"] = adjoint_b2_verify(obj, args.r).to_json()
    return out


def _attempt(fn):
    """Run one ledger entry; input-level failures become data."""
    try:
        return {"status": "ok", "result": fn()}
    except (HomLieError, ValueError) as exc:
        return {"status": "skipped", "reason": str(exc)}


def cmd_verify_paper(obj, args) -> dict:
    L = _algebra(obj)
    table = derivation_table(1)
    mismatches = [f"derivation_table: {row.name}: {flag}" for row in table for flag in row.flags]
    ledger = {
        "validation": validate_hom_lie(L).to_json(),
        "derivation_table": [row.to_json() for row in table],
    }
    if not isinstance(obj, HeisenbergAlgebra):
        ledger["note"] = "only generic checks apply to non-Heisenberg input"
        ledger["mismatches"] = sorted(mismatches)
        return ledger
    H = obj
    ledger["derivations"] = {
        str(k): _attempt(lambda k=k: der_dim_compare(H, k).to_json()) for k in (-1, 0, 1, 2)
    }

    def trivial():
        rep = cohomology_report(L, trivial_rep(L, 1), 2, args.r, False)
        got = [rep.Z.dim, rep.B.dim, rep.dim_H]
        rep.comparisons = [FormulaComparison(n, p, v) for (n, p), v in zip(trivial_h2_predictions(H.m, 1), got)]
        return rep.to_json()

    def faithful():
        rep = cohomology_report(L, minimal_faithful(H), 1, args.r, False)
        rep.comparisons = [FormulaComparison("dim H1 = m(m+3)/2", faithful_h1_prediction(H.m), rep.dim_H)]
        return rep.to_json()

    ledger["trivial_h2"] = _attempt(trivial)
    ledger["faithful_h1"] = _attempt(faithful)
    ledger["faithful_h1_hom"] = _attempt(lambda: faithful_h1_hom_report(H, args.r).to_json())
    ledger["adjoint_lists"] = _attempt(lambda: adjoint_b2_verify(H, args.r).to_json())
    for key, entry in ledger.items():
        if key in ("validation", "derivation_table"):
            continue
        entries = [(f"{key} k={k}", e) for k, e in entry.items()] if key == "derivations" else [(key, entry)]
        for tag, e in entries:
            res = e.get("result")
            if not isinstance(res, dict):
                continue
            if res.get("match") is False:
                mismatches.append(f"{tag}: dimension formula")
            for c in res.get("comparisons", []):
                if not c["match"]:
                    mismatches.append(f"{tag}: {c['formula']}")
            if res.get("b2_failures") or res.get("z2_failures"):
                mismatches.append(f"{tag}: generator list entries fail")
    ledger["mismatches"] = sorted(set(mismatches))
    return ledger


COMMANDS = {
    "check": cmd_check,
    "heisenberg": cmd_heisenberg,
    "normal-form": cmd_normal_form,
    "decompose": cmd_decompose,
    "der": cmd_der,
    "rep": cmd_rep,
    "cohomology": cmd_cohomology,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homheis", description="Exact computations for Heisenberg Hom-Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="algebra JSON file")
        p.add_argument("--output", help="write the report here instead of stdout")
        return p

    add("check", "validate the Hom-Lie axioms")
    add("heisenberg", "Heisenberg invariants, or split off an abelian factor")
    add("normal-form", "canonical twisting map for m = 1")
    add("decompose", "generalized-eigenspace decomposition")
    p = add("der", "alpha^k-derivations")
    p.add_argument("--k", type=int, default=1)
    for name, help_text in (("rep", "build and check a representation"), ("cohomology", "Z/B/H dimensions")):
        p = add(name, help_text)
        p.add_argument("--rep", choices=("trivial", "adjoint", "faithful"), default="trivial")
        p.add_argument("--dimT", type=int, default=1, help="dimension of the trivial module")
        if name == "cohomology":
            p.add_argument("--degree", type=int, default=1)
            p.add_argument("--r", type=int, default=1)
            p.add_argument("--hom-restricted", action="store_true")
    p = add("verify-paper", "run every formula comparison on the input")
    p.add_argument("--r", type=int, default=1)
    return parser


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "degree", 0) < 0 or getattr(args, "dimT", 1) < 1:
            raise InputError("--degree must be >= 0 and --dimT >= 1")
        if getattr(args, "k", 0) < -1:
            raise InputError("--k must be >= -1")
        obj = parse_algebra(args.input)
        report = COMMANDS[args.command](obj, args)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        for w in exc.witnesses:
            print(f"  witness: {json.dumps(w, sort_keys=True)}", file=stderr)
        return 2
    except (HomLieError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    text = dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

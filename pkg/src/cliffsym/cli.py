"""Command-line interface: classification reports, CPT groups and Cayley tables.

Exit codes: 0 success, 2 usage error, 1 mathematical error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from .algebra_core import Signature, blade_label
from .discrete_symmetries import (
    AutomorphismMatrices, CptResult, InvalidPhase, NoSolution, PhaseAssignment, Theorem1Violation,
    assemble, build_cpt_group, build_quotient_pt_group, gamma_label, general_generating_table,
    generator_reality, parse_phase, pi_dot_sign, theorem1_form, theorem1_predicted_sign,
)
from .group_engine import LimitExceeded, Unrecognized, center, order_structure
from .spinor_rep import (
    FactorsInvalid, GammaBasis, IdempotentSpec, NotIdempotent, NotPrimitive, NotSemisimpleSplit,
    RingUnrecognized, canonical_idempotents, even_subalgebra_signature, gamma_matrices,
    parse_factors,
)
from .structure_theory import (
    center_type, idempotent_factor_count, particle_class, ring_class, salingaros_group,
    salingaros_type,
)

SCHEMA = "cliffsym/1"
MAX_N = 8


class UsageError(ValueError):
    pass


class UnknownIdempotent(UsageError):
    pass


MATH_ERRORS = (
    NoSolution, Theorem1Violation, FactorsInvalid, NotIdempotent, NotPrimitive, RingUnrecognized,
    NotSemisimpleSplit, Unrecognized, LimitExceeded,
)


# -- report builders ------------------------------------------------------------

def _signature(p: int, q: int) -> Signature:
    try:
        sig = Signature(p, q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return sig


def classify_report(sig: Signature) -> Dict:
    if sig.n > MAX_N:
        raise UsageError(f"p+q must be at most {MAX_N}")
    group = salingaros_group(sig)
    st = salingaros_type(sig)
    return {
        "schema": SCHEMA,
        "command": "classify",
        "signature": [sig.p, sig.q],
        "n": sig.n,
        "p_minus_q_mod_8": sig.mod8,
        "ring": ring_class(sig).id,
        "salingaros_type": {"family": st.family, "symbol": st.symbol, "label": st.central_product_label},
        "group_order": group.order,
        "order_structure": list(order_structure(group).as_tuple()),
        "center": center_type(sig).name,
        "center_order": center(group).order,
        "idempotent_factors": idempotent_factor_count(sig),
        "particle_class": particle_class(sig),
    }


def resolve_idempotent(sig: Signature, selector: str) -> IdempotentSpec:
    if ":" in selector:
        try:
            return parse_factors(selector)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    index = _selector_index(selector)
    specs = canonical_idempotents(sig, limit=index)
    for spec in specs:
        if spec.name == selector:
            return spec
    raise UnknownIdempotent(f"no idempotent named {selector!r} for {sig}")


def _selector_index(selector: str) -> int:
    body = selector[1:-1] if len(selector) > 2 else ""
    if not (selector.startswith("f") and selector[-1] in "+-" and body.isdigit() and int(body) > 0):
        raise UnknownIdempotent(f"idempotent selector must look like 'f1+' or 'e13:+,e24:+'; got {selector!r}")
    return int(body)


def _matrix_strings(basis: GammaBasis) -> List[List[List[str]]]:
    return [basis.ring_matrix(i) for i in range(basis.sig.n)]


def _matrix_pairs(m) -> List:
    return [[x.to_pairs() for x in row] for row in m]


def basis_report(basis: GammaBasis) -> Dict:
    complex_gens, real_gens = generator_reality(basis)
    return {
        "idempotent": {"name": basis.source.name, "factors": basis.source.selector(),
                       "expression": basis.source.label()},
        "division_ring": {"id": basis.ring.ring_id, "basis": basis.ring.labels(),
                          "units": [list(u) for u in basis.ring.unit_map]},
        "ideal_basis": [blade_label(m) + "f" if m else "f" for m in basis.ideal_blades],
        "gamma_ring": _matrix_strings(basis),
        "gamma_complex": [_matrix_pairs(m) for m in basis.matrices],
        "symmetric": [basis.is_ring_symmetric(i) for i in range(basis.sig.n)],
        "complex_generators": complex_gens,
        "real_generators": real_gens,
    }


def _theorem1(A: AutomorphismMatrices) -> Optional[Dict]:
    pi = A.blade("Pi")
    if A.basis.ring.ring_id != "H" or pi == 0:
        return None
    count = theorem1_form(pi, A.basis)
    return {"pi_pi_dot": pi_dot_sign(pi, A.basis), "generators": count,
            "predicted": theorem1_predicted_sign(count)}


def group_report(result: CptResult) -> Dict:
    return {
        "elements": [{"slot": e.slot, "matrix": e.matrix_symbol, "label": e.label} for e in result.elements],
        "squares_of": list(result.square_slots),
        "signature": result.signature_string,
        "group": result.group_id.name,
        "cover": result.cover_id.name,
        "cover_from_signature": None if result.cover_lookup is None else result.cover_lookup.name,
        "cover_order": result.cover.order,
        "abelian": result.cover.is_abelian(),
        "cp_commutation": result.cp_commutation,
        "table": result.rendered_table(),
    }


def cpt_report(sig: Signature, selector: str, phases: PhaseAssignment) -> Dict:
    if sig.mod8 in (1, 5):
        return quotient_report(sig, selector, phases)
    spec = resolve_idempotent(sig, selector)
    A = assemble(gamma_matrices(spec, sig))
    result = build_cpt_group(A, phases)
    return {
        "schema": SCHEMA,
        "command": "cpt",
        "signature": [sig.p, sig.q],
        "phases": result.phases.describe(),
        "spinor_representation": basis_report(A.basis),
        "automorphisms": {k: gamma_label(v) for k, v in A.blades if k != "1"},
        "E_is_scalar": A.E_is_scalar,
        "Pi_is_scalar": A.Pi_is_scalar,
        "theorem1": _theorem1(A),
        "cpt": group_report(result),
        "_result": result,
    }


def quotient_report(sig: Signature, selector: str, phases: PhaseAssignment) -> Dict:
    even = even_subalgebra_signature(sig)
    spec = resolve_idempotent(even, selector)
    result = build_quotient_pt_group(sig, spec, phases)
    report = group_report(result)
    return {
        "schema": SCHEMA,
        "command": "quotient-pt",
        "signature": [sig.p, sig.q],
        "quotient_signature": [even.p, even.q],
        "phases": result.phases.describe(),
        "spinor_representation": basis_report(gamma_matrices(spec, even)),
        "reduced_pt": report,
        "_result": result,
    }


def atlas_reports(max_n: int) -> List[Dict]:
    if not 1 <= max_n <= MAX_N:
        raise UsageError(f"max-n must be between 1 and {MAX_N}")
    out = []
    for n in range(1, max_n + 1):
        for p in range(n, -1, -1):
            out.append(classify_report(Signature(p, n - p)))
    return out


# -- rendering ------------------------------------------------------------------

def _public(report: Dict) -> Dict:
    return {k: v for k, v in report.items() if not k.startswith("_")}


def to_json(data) -> str:
    if isinstance(data, dict):
        data = _public(data)
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def aligned_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cells = [[""] + list(header)] + [[h] + list(r) for h, r in zip(header, rows)]
    widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def latex_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = "c|" + "c" * len(header)
    lines = [f"\\begin{{tabular}}{{{cols}}}",
             " & " + " & ".join(f"${h}$" for h in header) + " \\\\ \\hline"]
    for h, row in zip(header, rows):
        lines.append(f"${h}$ & " + " & ".join(f"${x}$" for x in row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _text_dict(report: Dict, indent: int = 0) -> List[str]:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if key.startswith("_") or key in ("table", "gamma_complex", "schema"):
            continue
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text_dict(value, indent + 1))
        else:
            lines.append(f"{pad}{key}: {_flat(value)}")
    return lines


def _flat(value) -> str:
    if isinstance(value, dict) and "label" in value:
        return value["label"]
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    if value is None:
        return "-"
    return str(value)


def render_group_report(report: Dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    result: CptResult = report["_result"]
    if fmt == "latex":
        return latex_table(result.labels(latex=True), result.rendered_table(latex=True))
    text = "\n".join(_text_dict(report)) + "\n\n"
    return text + aligned_table(result.labels(), result.rendered_table())


def render_symbolic(fmt: str) -> str:
    table = general_generating_table()
    header = [entry.render(fmt == "latex") for entry in table[0]]
    rows = [[entry.render(fmt == "latex") for entry in row] for row in table]
    if fmt == "json":
        return to_json({"schema": SCHEMA, "command": "mult-table", "header": header, "table": rows})
    if fmt == "latex":
        return latex_table(header, rows)
    return aligned_table(header, rows)


# -- argument parsing ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliffsym", description="Discrete symmetry groups of real Clifford algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, needs_pq=True):
        if needs_pq:
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    def phases(sp):
        for name in ("eta-p", "eta-t", "eta-c"):
            sp.add_argument(f"--{name}", default="+1", help="+1, -1, +i, -i, sym+ or sym-")

    common(sub.add_parser("classify", help="ring, Salingaros group and particle class"))
    cpt = sub.add_parser("cpt", help="CPT group of a spinor representation")
    common(cpt)
    cpt.add_argument("--idem", default="f1+")
    phases(cpt)
    qpt = sub.add_parser("quotient-pt", help="reduced PT group on the simple quotient")
    common(qpt)
    qpt.add_argument("--idem", default="f1+")
    phases(qpt)
    atlas = sub.add_parser("atlas", help="classification reports for all small signatures")
    common(atlas, needs_pq=False)
    atlas.add_argument("--max-n", type=int, default=6)
    mult = sub.add_parser("mult-table", help="symbolic or concrete CPT multiplication table")
    mult.add_argument("--p", type=int)
    mult.add_argument("--q", type=int)
    mult.add_argument("--idem", default="f1+")
    mult.add_argument("--format", choices=("text", "json", "latex"), default="text")
    mult.add_argument("--out")
    phases(mult)
    return parser


def _phases(args) -> PhaseAssignment:
    try:
        return PhaseAssignment(parse_phase(args.eta_p), parse_phase(args.eta_t), parse_phase(args.eta_c))
    except InvalidPhase as exc:
        raise UsageError(str(exc)) from None


def run(argv: Optional[Sequence[str]] = None) -> str:
    return execute(build_parser().parse_args(argv))


def execute(args: argparse.Namespace) -> str:
    fmt = args.format
    if args.command == "classify":
        report = classify_report(_signature(args.p, args.q))
        return to_json(report) if fmt == "json" else "\n".join(_text_dict(report)) + "\n"
    if args.command == "cpt":
        return render_group_report(cpt_report(_signature(args.p, args.q), args.idem, _phases(args)), fmt)
    if args.command == "quotient-pt":
        sig = _signature(args.p, args.q)
        if sig.mod8 not in (1, 5):
            raise NotSemisimpleSplit(f"{sig} is not of type p-q ≡ 1 or 5 (mod 8)")
        return render_group_report(quotient_report(sig, args.idem, _phases(args)), fmt)
    if args.command == "atlas":
        reports = atlas_reports(args.max_n)
        if fmt == "json" or args.out:
            return to_json(reports)
        return "".join("\n".join(_text_dict(r)) + "\n\n" for r in reports)
    if args.command == "mult-table":
        if args.p is None and args.q is None:
            return render_symbolic(fmt)
        if args.p is None or args.q is None:
            raise UsageError("mult-table needs both --p and --q, or neither")
        report = cpt_report(_signature(args.p, args.q), args.idem, _phases(args))
        result: CptResult = report["_result"]
        if fmt == "json":
            return to_json({"schema": SCHEMA, "command": "mult-table", "signature": [args.p, args.q],
                            "header": result.labels(), "table": result.rendered_table()})
        if fmt == "latex":
            return latex_table(result.labels(latex=True), result.rendered_table(latex=True))
        return aligned_table(result.labels(), result.rendered_table())
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text = execute(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MATH_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

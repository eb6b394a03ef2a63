"""Report envelopes and the JSON / CSV / table renderers.

Every rational value is serialized as {"num": int, "den": int} — never as
a float.  JSON output is canonical (sorted keys, two-space indent) so
that parse + re-serialize is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import __version__
from .filtrations import jordan_blocks, saito_filtration
from .frobenius import charpoly_A0, initial_data, pairing_matrix
from .reflexive import ReflexiveRecord
from .spectrum import spectral_polynomial, spectrum_direct
from .weights import WeightSystem


def encode_rational(value: Fraction | int) -> dict[str, int]:
    f = Fraction(value)
    return {"num": f.numerator, "den": f.denominator}


def rational_text(value: Fraction | int) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def envelope(
    kind: str,
    payload: dict[str, Any],
    w: WeightSystem | None = None,
    warnings: list[str] | None = None,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "tool_version": __version__,
        "input": (
            {"weights": list(w.weights), "mu": w.mu, "n": w.n}
            if w is not None
            else {}
        ),
        "payload": {kind: payload},
        "warnings": list(warnings or ()),
    }
    return doc


def to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def spectrum_payload(w: WeightSystem) -> dict[str, Any]:
    spec = spectrum_direct(w)
    return {
        "s": [encode_rational(v) for v in spec.values],
        "sigma": [encode_rational(v) for v in spec.spectral_numbers],
        "alpha": [encode_rational(v) for v in spec.fractional_parts],
        "spectral_polynomial": [
            {"root": encode_rational(root), "multiplicity": mult}
            for root, mult in spectral_polynomial(w)
        ],
    }


def frobenius_payload(w: WeightSystem) -> dict[str, Any]:
    data = initial_data(w)
    return {
        "a0": [[encode_rational(x) for x in row] for row in data.a0],
        "ainf_diagonal": [
            encode_rational(data.a_inf[k][k]) for k in range(data.mu)
        ],
        "g": [list(row) for row in data.metric],
        "e0": data.unit_index,
        "pairing": [list(row) for row in pairing_matrix(w).coefficients],
        "charpoly": [encode_rational(c) for c in charpoly_A0(w)],
    }


def jordan_payload(w: WeightSystem) -> dict[str, Any]:
    data = jordan_blocks(w)
    classes = []
    for alpha, blocks in sorted(data.classes().items()):
        classes.append(
            {
                "alpha": encode_rational(alpha),
                "blocks": [
                    {
                        "start": b.start,
                        "size": b.size,
                        "value": encode_rational(b.value),
                    }
                    for b in blocks
                ],
            }
        )
    return {
        "classes": classes,
        "nu": list(data.nu),
        "offsets": list(data.offset),
        "size_multiset": {
            str(size): count for size, count in sorted(data.size_multiset().items())
        },
    }


def filtrations_payload(w: WeightSystem) -> dict[str, Any]:
    report = saito_filtration(w)

    def index_map(mapping: dict[int, frozenset[int]]) -> dict[str, list[int]]:
        return {str(level): sorted(members) for level, members in mapping.items()}

    return {
        "hp": index_map(report.hp),
        "gp": index_map(report.gp),
        "m": index_map(report.m),
        "w": index_map(report.w),
        "primitive": sorted(report.primitive),
        "conjugation": list(report.conj),
    }


def reflexive_payload(records: list[ReflexiveRecord], n: int) -> dict[str, Any]:
    return {
        "dimension": n,
        "count": len(records),
        "systems": [
            {"weights": list(r.weights.weights), "mu": r.mu, "q": list(r.q)}
            for r in records
        ],
    }


def verify_payload(results: dict[str, list[str]]) -> dict[str, Any]:
    return {
        "suites": {name: ("ok" if not bad else "failed") for name, bad in results.items()},
        "failures": [msg for bad in results.values() for msg in bad],
    }


# --- plain-text / CSV renderers ------------------------------------------


def render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(headers: list[str], rows: list[list[str]]) -> str:
    out = [",".join(headers)]
    out.extend(",".join(row) for row in rows)
    return "\n".join(out) + "\n"


def spectrum_rows(w: WeightSystem) -> tuple[list[str], list[list[str]]]:
    spec = spectrum_direct(w)
    headers = ["k", "s", "sigma", "alpha"]
    rows = [
        [
            str(k),
            rational_text(spec.values[k]),
            rational_text(spec.spectral_numbers[k]),
            rational_text(spec.fractional_parts[k]),
        ]
        for k in range(spec.mu)
    ]
    return headers, rows


def jordan_rows(w: WeightSystem) -> tuple[list[str], list[list[str]]]:
    data = jordan_blocks(w)
    headers = ["alpha", "value", "start", "size"]
    rows = [
        [
            rational_text(b.alpha),
            rational_text(b.value),
            str(b.start),
            str(b.size),
        ]
        for b in data.blocks
    ]
    return headers, rows


def filtration_rows(w: WeightSystem) -> tuple[list[str], list[list[str]]]:
    report = saito_filtration(w)
    headers = ["filtration", "level", "indices"]
    rows = []
    for name, mapping in (("H", report.hp), ("G", report.gp), ("M", report.m), ("W", report.w)):
        for level in sorted(mapping):
            rows.append(
                [name, str(level), " ".join(str(k) for k in sorted(mapping[level]))]
            )
    rows.append(["primitive", "", " ".join(str(k) for k in sorted(report.primitive))])
    rows.append(["conjugation", "", " ".join(str(k) for k in report.conj)])
    return headers, rows


def reflexive_table_text(records: list[ReflexiveRecord]) -> str:
    lines = []
    for r in records:
        lines.append(
            " ".join(str(wi) for wi in r.weights.weights) + f" | {r.mu}"
        )
    return "\n".join(lines) + ("\n" if lines else "")


def reflexive_csv(records: list[ReflexiveRecord], n: int) -> str:
    headers = [f"w{i}" for i in range(n + 1)] + ["mu"]
    rows = [
        [str(wi) for wi in r.weights.weights] + [str(r.mu)] for r in records
    ]
    return render_csv(headers, rows)

"""Structured-data derivation files.

A derivation is a JSON object with fields ``rule``, ``conclusion`` (sequent
text), optional ``annotation``, and ``premises`` (nested list).  Dumping is
canonical (sorted keys, two-space indent, trailing newline) so files round-trip
bit-exact through load/dump.
"""

from __future__ import annotations

import json
from typing import Any

from .syntax import format_formula, parse_formula
from .kernel import (
    Annotation, Context, ContextSplit, Derivation, RuleId,
    format_sequent, parse_sequent,
)


class DerivationFormatError(ValueError):
    pass


def derivation_to_data(d: Derivation) -> dict[str, Any]:
    out: dict[str, Any] = {
        "rule": d.rule.value,
        "conclusion": format_sequent(d.conclusion),
        "premises": [derivation_to_data(p) for p in d.premises],
    }
    if d.annotation is not None:
        ann: dict[str, Any] = {}
        if d.annotation.principal is not None:
            ann["principal"] = format_formula(d.annotation.principal)
        if d.annotation.cut_formula is not None:
            ann["cut_formula"] = format_formula(d.annotation.cut_formula)
        if d.annotation.context_split is not None:
            sp = d.annotation.context_split
            ann["context_split"] = {
                "gamma": _context_to_data(sp.gamma),
                "delta": _context_to_data(sp.delta),
                "gamma_prime": _context_to_data(sp.gamma_prime),
                "delta_prime": _context_to_data(sp.delta_prime),
            }
        if ann:
            out["annotation"] = ann
    return out


def _context_to_data(ctx: Context) -> list[str]:
    return [format_formula(f) for f in ctx.expand()]


def _context_from_data(data: list[str]) -> Context:
    return Context.from_iter(parse_formula(t) for t in data)


def derivation_from_data(data: dict[str, Any]) -> Derivation:
    try:
        rule = RuleId(data["rule"])
    except (KeyError, ValueError) as e:
        raise DerivationFormatError(f"bad or missing rule id: {e}") from e
    try:
        conclusion = parse_sequent(data["conclusion"])
    except KeyError as e:
        raise DerivationFormatError("missing conclusion") from e
    premises = tuple(derivation_from_data(p) for p in data.get("premises", []))
    ann_data = data.get("annotation")
    annotation = None
    if ann_data:
        split = None
        if "context_split" in ann_data:
            spd = ann_data["context_split"]
            split = ContextSplit(
                gamma=_context_from_data(spd["gamma"]),
                delta=_context_from_data(spd["delta"]),
                gamma_prime=_context_from_data(spd["gamma_prime"]),
                delta_prime=_context_from_data(spd["delta_prime"]),
            )
        annotation = Annotation(
            principal=parse_formula(ann_data["principal"]) if "principal" in ann_data else None,
            cut_formula=parse_formula(ann_data["cut_formula"]) if "cut_formula" in ann_data else None,
            context_split=split,
        )
    return Derivation(conclusion, rule, premises, annotation)


def dumps_derivation(d: Derivation) -> str:
    return json.dumps(derivation_to_data(d), indent=2, sort_keys=True) + "\n"


def loads_derivation(text: str) -> Derivation:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise DerivationFormatError("expected a JSON object")
    return derivation_from_data(data)


def save_derivation(d: Derivation, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_derivation(d))


def load_derivation(path) -> Derivation:
    with open(path, encoding="utf-8") as fh:
        return loads_derivation(fh.read())


def load_derivations(path) -> list[Derivation]:
    """Load a file holding either one derivation object or a list of them."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return [derivation_from_data(item) for item in data]
    if isinstance(data, dict):
        return [derivation_from_data(data)]
    raise DerivationFormatError("expected a JSON object or list")


def dumps_derivations(ds: list[Derivation]) -> str:
    if len(ds) == 1:
        return dumps_derivation(ds[0])
    return json.dumps([derivation_to_data(d) for d in ds], indent=2, sort_keys=True) + "\n"

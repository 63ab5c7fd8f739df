"""JSON wire formats.

Scalars travel as strings ('p/q' or integers) so exactness survives the
round trip; systems carry materialized coefficient windows plus an optional
closed-form tag that reconstructs unbounded streams on load.
"""

from __future__ import annotations

from .chains import ChainSequence, GammaSeq, ParameterSeq
from .errors import OpchainError
from .scalars import format_scalar, parse_rational
from .systems import ThreeTermSystem


def values_to_json(values) -> list[str]:
    return [format_scalar(v) for v in values]


def values_from_json(items) -> list:
    return [parse_rational(s) for s in items]


def system_to_json(sys: ThreeTermSystem, depth: int, closed_form: dict | None = None) -> dict:
    doc = {
        "b": values_to_json(sys.b.window(1, depth)),
        "a2": values_to_json(sys.a2.window(1, max(depth - 1, 0))),
    }
    if closed_form is not None:
        doc["closed_form"] = closed_form
    return doc


def system_from_json(doc: dict) -> ThreeTermSystem:
    cf = doc.get("closed_form")
    if cf is not None:
        from . import families

        name = cf.get("name")
        params = cf.get("params", {})
        if name == "laguerre":
            return families.laguerre_system(parse_rational(params["alpha"]))
        if name == "e_family":
            return families.e_family_system(parse_rational(params["alpha"]))
        if name == "laguerre_assoc1":
            return families.e_family_system(parse_rational(params["alpha"]))
        if name == "routh_romanovski":
            return families.rr_system(families.RRParams(parse_rational(params["p"])))
        raise OpchainError(f"unknown closed form {name!r}")
    b = values_from_json(doc["b"])
    a2 = values_from_json(doc.get("a2", []))
    return ThreeTermSystem.from_values(b, a2)


def gamma_to_json(gamma: GammaSeq, upto: int) -> dict:
    return {"gamma": values_to_json(gamma.window(1, upto))}


def gamma_from_json(doc: dict) -> GammaSeq:
    return GammaSeq.from_values(values_from_json(doc["gamma"]))


def chain_to_json(chain: ChainSequence, upto: int) -> dict:
    doc = {"d": values_to_json(chain.window(1, upto))}
    if chain.parameters is not None:
        doc["parameters"] = params_to_json(chain.parameters)
    return doc


def params_to_json(ps: ParameterSeq) -> dict:
    doc = {"g": values_to_json(ps.g), "minimal": ps.minimal}
    if ps.horizon is not None:
        doc["horizon"] = ps.horizon
    return doc

"""Reading and writing recurrence specs as TOML or JSON.

A spec file is a flat mapping::

    family = "thm2"          # or "prop1", "thm4"
    p = 2
    s = 2
    modulus = [1, 1, 1]      # optional, ascending coefficients
    ell = 1
    r = 2
    k = 2
    lambda_init = ["1,0"]
    alpha = ["0,1", "1,0"]
    beta = ["0,1"]

Field elements are written as ``"c0,c1,..."`` coordinate strings, as
coordinate lists, or as plain integers for prime-subfield elements.
``prop1`` files use ``eps1``/``eps2`` instead of ``k``/``alpha``/``beta``;
``thm4`` files add ``gamma``, call the initial values ``u_init`` and give
``beta`` as k rows of r-1 entries.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import SpecError
from .field import FieldCtx, make_field
from .recurrences import AnySpec, CFSequenceSpec, HyperquadraticSpec, PowerRecurrenceSpec

FAMILIES = {
    "thm2": HyperquadraticSpec,
    "hyperquadratic": HyperquadraticSpec,
    "prop1": CFSequenceSpec,
    "cf": CFSequenceSpec,
    "thm4": PowerRecurrenceSpec,
    "power": PowerRecurrenceSpec,
}


def field_from_dict(data: Mapping[str, Any]) -> FieldCtx:
    try:
        p = int(data["p"])
    except KeyError as exc:
        raise SpecError("missing field characteristic 'p'", field="p") from exc
    s = int(data.get("s", 1))
    modulus = data.get("modulus")
    return make_field(p, s, modulus)


def _require(data, key):
    if key not in data:
        raise SpecError(f"missing '{key}'", field=key)
    return data[key]


def spec_from_dict(data: Mapping[str, Any]) -> AnySpec:
    family = str(data.get("family", "thm2")).lower()
    if family not in FAMILIES:
        raise SpecError(f"unknown family {family!r}", field="family")
    ctx = field_from_dict(data)
    cls = FAMILIES[family]
    if cls is HyperquadraticSpec:
        return HyperquadraticSpec(
            field=ctx,
            ell=int(_require(data, "ell")),
            r=int(_require(data, "r")),
            k=int(_require(data, "k")),
            lambda_init=list(_require(data, "lambda_init")),
            alpha=list(_require(data, "alpha")),
            beta=list(_require(data, "beta")),
        )
    if cls is CFSequenceSpec:
        return CFSequenceSpec(
            field=ctx,
            ell=int(_require(data, "ell")),
            r=int(_require(data, "r")),
            lambda_init=list(_require(data, "lambda_init")),
            eps1=_require(data, "eps1"),
            eps2=_require(data, "eps2"),
        )
    return PowerRecurrenceSpec(
        field=ctx,
        ell=int(_require(data, "ell")),
        r=int(_require(data, "r")),
        k=int(_require(data, "k")),
        gamma=int(_require(data, "gamma")),
        u_init=list(_require(data, "u_init")),
        alpha=list(_require(data, "alpha")),
        beta=[list(row) for row in _require(data, "beta")],
    )


def spec_to_dict(spec: AnySpec) -> dict:
    ctx = spec.field
    out: dict[str, Any] = {"family": spec.family, **ctx.to_json(), "ell": spec.ell, "r": spec.r}
    if isinstance(spec, HyperquadraticSpec):
        out.update(
            k=spec.k,
            lambda_init=[str(x) for x in spec.lambda_init],
            alpha=[str(x) for x in spec.alpha],
            beta=[str(x) for x in spec.beta],
        )
    elif isinstance(spec, CFSequenceSpec):
        out.update(
            lambda_init=[str(x) for x in spec.lambda_init],
            eps1=str(spec.eps1),
            eps2=str(spec.eps2),
        )
    else:
        out.update(
            k=spec.k,
            gamma=spec.gamma,
            u_init=[str(x) for x in spec.u_init],
            alpha=[str(x) for x in spec.alpha],
            beta=[[str(x) for x in row] for row in spec.beta],
        )
    return out


def load_spec(path: str | Path) -> AnySpec:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{path}: invalid JSON: {exc}") from exc
    else:
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise SpecError(f"{path}: invalid TOML: {exc}") from exc
    return spec_from_dict(data)

"""Catalog of homogeneous almost complex models."""
from __future__ import annotations

from .g2 import build_g2_model, octonion_table
from .model import ConstructionError, Model, check_model, invariant_report
from .params import (ALL_CASES, AD_CASES_SU2, AD_CASES_SU11, G2_CASES, SCHEMA, SL2C_CASES,
                     V_CASES_SU2, V_CASES_SU11, ModelParams, params_from_dict, schema_text)
from .tables import build_ad_row, build_sl2c_row, build_vc_row, omega_forms
from .validate import ParameterError, check_params, validate_params

_G2_CACHE: dict[str, Model] = {}


def build_model(params: ModelParams) -> Model:
    """Validate the parameters and construct the model."""
    case = params.case
    if case in G2_CASES:
        form = "compact" if case == "G2c" else "split"
        if form not in _G2_CACHE:
            _G2_CACHE[form] = build_g2_model(form)
        return _G2_CACHE[form]
    check_params(params)
    if case in V_CASES_SU2 + V_CASES_SU11:
        return build_vc_row(params)
    if case in AD_CASES_SU2 + AD_CASES_SU11:
        return build_ad_row(params)
    if case in SL2C_CASES:
        return build_sl2c_row(params)
    raise ValueError(f"unknown case {case!r}")


def model_from_dict(obj: dict, exact: bool = True) -> Model:
    return build_model(params_from_dict(obj, exact))


__all__ = [
    "ALL_CASES", "SCHEMA", "ConstructionError", "Model", "ModelParams", "ParameterError",
    "build_g2_model", "build_model", "check_model", "check_params", "invariant_report",
    "model_from_dict", "octonion_table", "omega_forms", "params_from_dict", "schema_text",
    "validate_params",
]

"""Kahler, strongly nearly Kahler and G2 claim suites."""
from __future__ import annotations

from ..catalog import build_model, params_from_dict
from ..catalog.g2 import octonion_table
from ..geometry import (ce_differential, cosmological_constant, curvature, degeneracy_class, dJ_power,
                        is_totally_skew, nabla_omega, nijenhuis, nomizu_connection, omega_form,
                        snk_check)
from ..lie import algebra_derivations
from ..linalg import sym_signature
from ..scalar import array_is_zero, format_scalar, is_zero
from .grids import SNK_RT
from .report import ClaimReport

KAHLER_LAMBDA = -2  # Ric = -2 g; the field-equation constant is -4
KAHLER_COSMO = -4


def _fmt(v):
    return None if v is None else format_scalar(v)


def kahler_model1_points() -> list[dict]:
    return [{"case": "A1.1", "alpha": a, "r": r, "eps": "1", "q": "i", "b": f"{a}i"}
            for a in ("1", "2", "-1") for r in ("0", "1", "1/2")]


def kahler_model2_points() -> list[dict]:
    return [{"case": "A1.3", "alpha": "0", "beta": "0", "eps": e, "r": r, "q": q, "b": b}
            for e in ("0", "1") for r in ("0", "1") for q, b in (("i", "i"), ("i", "2i"), ("i", "-i"))]


def verify_kahler(literal: bool = False) -> list[ClaimReport]:
    """With ``literal`` also require Ric = -4 g as printed (the computed value is -2 g)."""
    rep1 = ClaimReport("kahler", "model1")
    for spec in kahler_model1_points():
        model = build_model(params_from_dict(spec))
        w = omega_form(model)
        cur = curvature(model)
        lam = cur.einstein_lambda(model.tol)
        pt = rep1.add(spec)
        pt.check("d_omega_zero", ce_differential(model, w).is_zero())
        pt.check("integrable", degeneracy_class(nijenhuis(model)) == "ZERO")
        pt.check("nabla_omega_zero", array_is_zero(nabla_omega(model)))
        pt.check("einstein_lambda", lam is not None and is_zero(lam - KAHLER_LAMBDA), {"lambda": _fmt(lam)})
        pt.check("cosmological_constant", lam is not None
                 and is_zero(cosmological_constant(lam) - KAHLER_COSMO), {"lambda": _fmt(lam)})
        pt.check("weyl_nonzero", not cur.weyl_is_zero())
        if literal:
            pt.check("ricci_minus_4g", array_is_zero(cur.ricci + 4 * cur.metric), {"lambda": _fmt(lam)})
        sig = tuple(sym_signature(model.metric))
        want = (6, 0, 0) if model.params.alpha > 0 else (2, 4, 0)
        pt.check("signature", sig == want, list(sig))

    rep2 = ClaimReport("kahler", "model2")
    for spec in kahler_model2_points():
        model = build_model(params_from_dict(spec))
        cur = curvature(model)
        pt = rep2.add(spec)
        pt.check("kahler", array_is_zero(nabla_omega(model)))
        if spec["eps"] == "0":
            pt.check("flat", cur.is_flat())
        else:
            pt.check("not_einstein", cur.einstein_lambda() is None)
            pt.check("weyl_nonzero", not cur.weyl_is_zero())
    return [rep1, rep2]


def ricci_literal_check(spec: dict | None = None) -> bool:
    """Whether Ric = -4 g holds literally at the model-1 point (it does not: Ric = -2 g)."""
    spec = spec or kahler_model1_points()[0]
    cur = curvature(build_model(params_from_dict(spec)))
    return array_is_zero(cur.ricci + 4 * cur.metric)


def snk_points() -> list[dict]:
    r, t = SNK_RT
    pts = [{"case": "A2.1", "r": r, "t": t}, {"case": "A4.1", "r": r, "t": t}]
    for tt, rr, b in (("1", "-3/2", "1/2i"), ("2", "-3/4", "i")):
        pts.append({"case": "A3.2", "r": rr, "eps": "1", "alpha": "0", "p": f"{tt}i+{tt}j",
                    "u": "-1/2k", "q": "i", "b": b})
    return pts


def snk_details(model) -> dict:
    A = nabla_omega(model, nomizu_connection(model))
    dw = ce_differential(model, omega_form(model)).to_tensor()
    third = 3 if model.exact else 3.0
    return {
        "nonzero": not array_is_zero(A, model.tol),
        "totally_skew": is_totally_skew(A, model.tol),
        "equals_third_d_omega": array_is_zero(A - dw / third, model.tol),
    }


def verify_snk() -> ClaimReport:
    rep = ClaimReport("snk", "points")
    models = [(spec, build_model(params_from_dict(spec))) for spec in snk_points()]
    models.append(({"case": "G2c"}, build_model(params_from_dict({"case": "G2c"}))))
    for spec, model in models:
        d = snk_details(model)
        pt = rep.add(spec)
        for k, v in d.items():
            pt.check(k, v)
        pt.check("snk_check", snk_check(model))
        lam = curvature(model).einstein_lambda(model.tol)
        rep.extra[spec["case"] + ("" if spec["case"] != "A3.2" else "@t=" + spec["p"][0])] = _fmt(lam)
    return rep


def g2_facts(form: str) -> dict:
    M = octonion_table(form == "split")
    der = algebra_derivations(M)
    model = build_model(params_from_dict({"case": "G2s" if form == "split" else "G2c"}))
    w = omega_form(model)
    cur = curvature(model)
    lam = cur.einstein_lambda(model.tol)
    return {
        "der_dim": len(der),
        "stabilizer_dim": model.nh,
        "signature": tuple(sym_signature(model.metric)),
        "nijenhuis_class": degeneracy_class(nijenhuis(model)),
        "einstein_lambda": _fmt(lam),
        "snk": snk_check(model),
        "dJ2_zero": dJ_power(model, w, 2).is_zero(),
        "dJ3_zero": dJ_power(model, w, 3).is_zero(),
        "dJ4_zero": dJ_power(model, w, 4).is_zero(),
    }


G2_SIGNATURE = {"compact": (6, 0, 0), "split": (4, 2, 0)}


def verify_g2(literal_dJ3: bool = False) -> ClaimReport:
    """Structure claims for both forms.

    The printed "d_J^3 omega != 0" is only checked when ``literal_dJ3`` is set; for a
    nearly Kahler structure d_J^2 omega is a multiple of omega^2, which is closed.
    """
    rep = ClaimReport("g2", "forms")
    for form in ("compact", "split"):
        f = g2_facts(form)
        pt = rep.add({"form": form})
        pt.check("der_dim_14", f["der_dim"] == 14, f["der_dim"])
        pt.check("stabilizer_dim_8", f["stabilizer_dim"] == 8, f["stabilizer_dim"])
        pt.check("signature", f["signature"] == G2_SIGNATURE[form], list(f["signature"]))
        pt.check("ndg", f["nijenhuis_class"] == "NDG", f["nijenhuis_class"])
        pt.check("einstein", f["einstein_lambda"] is not None)
        pt.check("dJ2_nonzero", not f["dJ2_zero"])
        pt.check("dJ3_zero", f["dJ3_zero"])
        pt.check("dJ4_zero", f["dJ4_zero"])
        if literal_dJ3:
            pt.check("dJ3_nonzero", not f["dJ3_zero"])
        rep.extra[form] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in f.items()}
    return rep

"""Strong Kahler with torsion: integrable J, d_J^2 omega = 0, d omega != 0."""
from __future__ import annotations

import math

from ..catalog import build_model, params_from_dict
from ..catalog.params import ModelParams
from ..geometry import ce_differential, degeneracy_class, dJ_power, nijenhuis, omega_form
from ..quaternion import GQuat
from .report import ClaimReport

THETAS = (0.7, 0.9, 1.1, math.pi / 2, 1.8, 2.2, 2.4)


def skt_status(model) -> dict:
    w = omega_form(model)
    tol = model.tol
    return {
        "integrable": degeneracy_class(nijenhuis(model), tol) == "ZERO",
        "dJ2_zero": dJ_power(model, w, 2).is_zero(tol),
        "d_omega_nonzero": not ce_differential(model, w).is_zero(tol),
    }


def is_skt(model) -> bool:
    return all(skt_status(model).values())


def _quat(*c) -> GQuat:
    return GQuat(*(float(x) for x in c), eps=-1)


def theta_point(theta: float, sign: int = 1, shift: float = 0.0) -> ModelParams:
    """A1.2 with q = cos t i + sin t j and p = +-sqrt(3 sin^2 t - 1) q + sin t k (+ shift q)."""
    s, c = math.sin(theta), math.cos(theta)
    root = sign * math.sqrt(3 * s * s - 1) + shift
    q = _quat(0, c, s, 0)
    p = _quat(0, root * c, root * s, s)
    return params_from_dict({"case": "A1.2", "params": {"q": q, "p": p, "b": q}}, exact=False)


def exact_points() -> dict[str, list[tuple[dict, bool]]]:
    """Exact theorem points (expected SKT) and nearby controls (expected not SKT)."""
    a34 = dict(q="i", alpha="0", eps="1", p="1/2i+1/2j", u="-1/2k")
    return {
        "case2": [
            ({"case": "A1.3", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "1", "r": "0"}, True),
            ({"case": "A1.3", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "1", "r": "1"}, True),
            ({"case": "A3.4", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "1", "p": "0", "u": "2i"}, True),
            ({"case": "A3.4", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "1", "p": "0", "u": "-i"}, True),
            ({"case": "A1.3", "q": "i", "alpha": "0", "beta": "0", "eps": "1", "r": "0"}, False),
            ({"case": "A1.3", "q": "i", "alpha": "0", "beta": "1/2", "eps": "1", "r": "0"}, False),
            ({"case": "A3.4", "q": "i", "alpha": "0", "beta": "-1/2", "eps": "0", "p": "0", "u": "2i"}, False),
        ],
        "case3": [
            ({"case": "A3.4", **a34, "beta": "-1"}, True),
            ({"case": "A3.4", **a34, "beta": "1/2"}, True),
            ({"case": "A3.4", **a34, "beta": "0"}, False),
            ({"case": "A3.4", **a34, "beta": "1"}, False),
        ],
    }


def verify_skt_theorem(thetas=THETAS) -> list[ClaimReport]:
    reports = []
    for name, pts in exact_points().items():
        rep = ClaimReport("skt", name)
        for spec, expected in pts:
            model = build_model(params_from_dict(spec))
            st = skt_status(model)
            pt = rep.add({**spec, "expect_skt": expected})
            pt.check("skt" if expected else "not_skt", all(st.values()) == expected, st)
        reports.append(rep)

    rep = ClaimReport("skt", "case1")
    for theta in thetas:
        if 3 * math.sin(theta) ** 2 - 1 < 0:
            continue
        for sign in (1, -1):
            st = skt_status(build_model(theta_point(theta, sign)))
            pt = rep.add({"theta": round(theta, 6), "sign": sign, "expect_skt": True})
            pt.check("skt", all(st.values()), st)
        st = skt_status(build_model(theta_point(theta, 1, shift=0.25)))
        pt = rep.add({"theta": round(theta, 6), "sign": 1, "shift": 0.25, "expect_skt": False})
        pt.check("not_skt", not all(st.values()), st)
    rep.extra["float_tol"] = 1e-9
    reports.append(rep)
    return reports


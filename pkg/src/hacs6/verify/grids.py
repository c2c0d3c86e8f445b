"""Default rational parameter grids, filtered by the row constraints."""
from __future__ import annotations

from itertools import product

from ..catalog import params_from_dict, validate_params
from ..catalog.params import ModelParams

SQ3 = "1/3*sqrt3"
SNK_RT = (SQ3, "2/3*sqrt3")

_RT = [("0", "1"), ("0", "-1"), ("1", "2"), ("1/2", "1"), ("-1", "3"), ("2", "-1"),
       ("1/3", "1/2"), ("0", "2"), SNK_RT]

# imaginary split quaternions with q^2 = -1
SPLIT_Q = ["i", "-i", "5/4i+3/4k", "5/3i+4/3j", "3i+2j+2k"]
SPLIT_NULL = ["i+j", "i-j", "i+k", "2i+2j"]
SPLIT_IM = ["0", "i", "j", "k", "1/2i", "-1/2k", "i+j", "j+k", "2i"]


def _make(case, rows, limit=None):
    out, seen = [], set()
    for kw in rows:
        d = {k: v for k, v in kw.items() if v is not None}
        P = params_from_dict({"case": case, "params": d})
        if validate_params(P):
            continue
        key = str(sorted(d.items()))
        if key in seen:
            continue
        seen.add(key)
        out.append(P)
        if limit and len(out) >= limit:
            break
    return out


def _grid(**axes):
    names = list(axes)
    for vals in product(*axes.values()):
        yield dict(zip(names, vals))


def default_grid(case: str) -> list[ModelParams]:
    if case == "A1.1":
        rows = list(_grid(alpha=["1", "2"], r=["0", "1"], eps=["0", "1"], q=["i", "j", "3/5j+4/5k"]))
        rows += [dict(alpha="2", r="1", eps="1", q="i", b="2i"), dict(alpha="2", r="0", eps="1", q="j", b="2i"),
                 dict(alpha="1", r="1", eps="0", q="i", b="i")]
        return _make(case, rows)
    if case == "A1.2":
        return _make(case, _grid(q=["i", "j", "3/5i+4/5k"], p=["0", "i", "j", "k", "i+k", "1/2j-k"]))
    if case == "A1.3":
        rows = [dict(eps=e, alpha=a, beta=b, r=r, q=q)
                for (e, a) in (("0", "0"), ("0", "1"), ("1", "0"))
                for b in ("0", "1/2") for r in ("0", "1") for q in ("i", "j")]
        rows += [dict(eps="1", alpha="0", beta="0", r="1", q="j", b="2i"),
                 dict(eps="0", alpha="0", beta="0", r="1", q="i", b="j")]
        return _make(case, rows)
    if case == "A1.4":
        return _make(case, _grid(eps=["-1", "1"], q=["i", "-i", "j", "3/5j+4/5k", "1/3i+2/3j+2/3k"]))
    if case == "A3.1":
        rows = list(_grid(r=["0", "1"], eps=["0", "1"], q=["i", "5/4i+3/4k"], p=["i", "j", "2i", "i+2j"]))
        rows += [dict(r="1", eps="1", q="i", p=p, b=b) for p in ("j", "k", "i+2j") for b in SPLIT_IM[1:]]
        return _make(case, rows)
    if case == "A3.2":
        rows = list(_grid(r=["0", "1", "-3/2"], eps=["0", "1"], alpha=["0", "1"], q=["i", "5/4i+3/4k"],
                          p=SPLIT_NULL, u=SPLIT_IM + ["-1/2k+1/2i", "1/2i+1/2j-1/2k"]))
        rows += [dict(r="-3/2", eps="1", alpha="0", p="i+j", u="-1/2k", q="i", b="1/2i"),
                 dict(r="-3/4", eps="1", alpha="0", p="2i+2j", u="-1/2k", q="i", b="i")]
        pts = _make(case, rows)
        return pts[::max(1, len(pts) // 24)] + pts[-2:]
    if case == "A3.3":
        pts = _make(case, _grid(q=["i", "5/4i+3/4k", "5/3i+4/3j"], p=["0", "i", "j", "i+j"], u=["0", "i", "k", "j+k"]))
        return pts[::2]
    if case == "A3.4":
        rows = list(_grid(eps=["0"], alpha=["0", "1"], beta=["0", "-1/2"], q=["i", "5/4i+3/4k"], p=["0"],
                          u=["0", "i", "2i", "j"]))
        rows += list(_grid(eps=["1"], alpha=["0"], beta=["-1", "1/2", "0", "-1/2"], q=["i", "5/4i+3/4k"],
                           p=SPLIT_NULL, u=SPLIT_IM + ["-1/2k", "1/2k", "-1/2j"]))
        return _make(case, rows)
    if case == "A3.5":
        return _make(case, _grid(p=["i", "j"], q=SPLIT_Q))
    if case[:2] in ("A2", "A4"):
        return _make(case, [dict(r=r, t=t) for r, t in _RT])
    if case == "A5.1":
        rows = [dict(eps=e, alpha=a, beta=b, gamma=g)
                for (e, a) in (("0", "0"), ("0", "1"), ("1", "0")) for b in ("0", "1") for g in ("0", "2")]
        return _make(case, rows)
    if case == "A5.2":
        return _make(case, [dict(r=r) for r in ("0", "1", "2", "-1", "1/2", "3", "-2", "5")]
                     + [dict(r="2", lam="i"), dict(r="1", lam="1+2i")])
    if case in ("A6", "G2c", "G2s"):
        return [params_from_dict({"case": case})]
    raise ValueError(f"unknown case {case!r}")


def type2_grid(case: str, p: str | None = None) -> list[ModelParams]:
    """Rational unit points q for the type-II sweeps (Pythagorean quadruples on S^2,
    rational points of the hyperboloid a^2 - b^2 - c^2 = 1 in the split case)."""
    if case == "A1.4":
        qs = ["i", "-i", "j", "k", "3/5j+4/5k", "-4/5j+3/5k", "5/13j-12/13k", "-j"]
        quads = [(1, 2, 2, 3), (2, 3, 6, 7), (1, 4, 8, 9), (4, 4, 7, 9), (2, 6, 9, 11), (6, 6, 7, 11)]
        for a, b, c, d in quads:
            qs += [f"{a}/{d}i+{b}/{d}j+{c}/{d}k", f"-{c}/{d}i+{a}/{d}j-{b}/{d}k", f"{b}/{d}i-{c}/{d}j+{a}/{d}k"]
        qs += ["3/5i+4/5j", "-3/5i+4/5k"]
        return _make(case, [dict(eps=e, q=q) for q in qs for e in ("-1", "1")])
    if case == "A3.5":
        qs = ["i", "-i", "5/4i+3/4k", "5/4i-3/4k", "-5/4i+3/4k", "5/3i+4/3k", "13/12i+5/12k",
              "5/4i+3/4j", "5/3i+4/3j", "3i+2j+2k", "-3i+2j-2k", "9i+4j+8k", "17/15i+8/15k",
              "17/15i+8/15j", "25/7i+24/7k", "3i-2j+2k", "13/5i+12/5j", "41/9i+40/9k",
              "9i+8j+4k", "11/3i+2/3j+10/3k", "7/3i+2/3j+2k", "-13/12i-5/12k"]
        ps = [p] if p else ["i", "j"]
        return _make(case, [dict(p=pp, q=q) for pp in ps for q in qs])
    raise ValueError("type-II sweeps cover A1.4 and A3.5")

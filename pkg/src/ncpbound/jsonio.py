"""JSON encoding and decoding for the library's value types.

Encoding (`to_json`) is total on the public report and value types and
produces plain dict/list/scalar trees ready for json.dumps.  Decoding
covers exactly the shapes the command line accepts as input: base fields,
places, abelian extensions, Brauer classes, and central extensions.
Derived fields emitted by the encoders ("degree", "index", "str", ...)
are ignored on the way back in.
"""

from __future__ import annotations

import json
import re
from functools import singledispatch

from .arith import QZ
from .brauer import BrauerClass, index, make_class
from .covers import BoundReport, CertReport, Cover, kernel_profile
from .errors import ValidationError
from .extensions import AbExt, LocalData, build_extension
from .fields import (
    BaseField,
    FqtElt,
    Place,
    QQ,
    fqt_from_factors,
    infinite_place,
    poly_place,
    prime_place,
    rational_function_field,
    real_place,
)
from .groupext import CentralExt, Lemma35Report, ext_build
from .isolation import IsolationReport
from .worked import PaperReport, SuiteReport


# ---------------------------------------------------------------- encoding


@singledispatch
def to_json(obj):
    """Convert a library value to a JSON-ready tree.

    Scalars pass through; tuples and lists map elementwise; unknown types
    are rejected rather than silently stringified.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


@to_json.register
def _(obj: QZ):
    return str(obj)


@to_json.register
def _(obj: BaseField):
    if obj.is_rationals():
        return {"kind": "Q"}
    return {"kind": "Fq", "q": obj.q}


@to_json.register
def _(obj: Place):
    if obj.kind == "prime":
        return {"kind": "prime", "p": obj.p, "str": str(obj)}
    if obj.kind == "real":
        return {"kind": "real", "str": "real"}
    if obj.kind == "poly":
        return {"kind": "poly", "q": obj.base.q, "coeffs": list(obj.coeffs), "str": str(obj)}
    return {"kind": "inf", "q": obj.base.q, "str": "inf"}


@to_json.register
def _(obj: FqtElt):
    return {
        "c": obj.c,
        "factors": [[list(coeffs), e] for coeffs, e in obj.factors],
        "str": str(obj),
    }


@to_json.register
def _(obj: AbExt):
    return {
        "base": to_json(obj.base),
        "n": obj.n,
        "radicands": [to_json(f) for f in obj.radicands],
        "orders": list(obj.orders),
        "degree": obj.degree,
        "str": obj.describe(),
    }


@to_json.register
def _(obj: BrauerClass):
    out = {"invariants": [[to_json(P), str(v)] for P, v in obj.invariants]}
    if obj.invariants:
        out["base"] = to_json(obj.invariants[0][0].base)
    out["index"] = index(obj)
    return out


@to_json.register
def _(obj: Cover):
    return {
        "M": to_json(obj.M),
        "L": to_json(obj.L),
        "rel_degree": obj.rel_degree,
        "kernel_profile": list(kernel_profile(obj)),
    }


@to_json.register
def _(obj: LocalData):
    return {
        "place": to_json(obj.place),
        "degree": obj.degree,
        "ram_index": obj.ram_index,
        "res_degree": obj.res_degree,
        "unramified": obj.is_unramified(),
        "frobenius": list(obj.frobenius),
    }


@to_json.register
def _(obj: CertReport):
    return {
        "condition": obj.condition,
        "m": obj.m,
        "p": obj.p,
        "n": obj.n,
        "S": [to_json(P) for P in obj.S],
        "witness": to_json(obj.witness) if obj.witness is not None else None,
        "checks": [[name, ok, detail] for name, ok, detail in obj.checks],
        "passed": obj.passed,
    }


@to_json.register
def _(obj: BoundReport):
    return {
        "p": obj.p,
        "chi_order": obj.chi_order,
        "s": obj.s,
        "r": obj.r,
        "t_degree": obj.t_degree,
        "sylow_noncyclic": obj.sylow_noncyclic,
        "ceiling": obj.ceiling,
        "exact": obj.exact,
        "interval": list(obj.interval),
        "notes": list(obj.notes),
    }


@to_json.register
def _(obj: IsolationReport):
    return {
        "p": obj.p,
        "u1": obj.u1,
        "u2": obj.u2,
        "gap": obj.gap,
        "isolated_place": to_json(obj.isolated_place) if obj.isolated_place else None,
    }


@to_json.register
def _(obj: CentralExt):
    return {
        "p": obj.p,
        "a": obj.a,
        "orders": list(obj.orders),
        "t": list(obj.t),
        "c": list(obj.c),
        "kernel_order": obj.kernel_order,
        "order": obj.order,
    }


@to_json.register
def _(obj: Lemma35Report):
    return {
        "p": obj.p,
        "homomorphism": obj.homomorphism,
        "criterion": obj.criterion,
        "consistent": obj.consistent,
    }


@to_json.register
def _(obj: PaperReport):
    return {
        "example": obj.example,
        "params": {k: to_json(v) for k, v in obj.params},
        "checks": [[name, ok, detail] for name, ok, detail in obj.checks],
        "verdict": obj.verdict,
    }


@to_json.register
def _(obj: SuiteReport):
    return {
        "seed": obj.seed,
        "mutation": obj.mutation,
        "batteries": [[name, ok, detail] for name, ok, detail in obj.batteries],
        "failed": list(obj.failed_names),
        "passed": obj.passed,
    }


# ---------------------------------------------------------------- decoding


def base_from_json(obj) -> BaseField:
    """Accepts {"kind": "Q"}, {"kind": "Fq", "q": 7}, "Q", or "F7(t)"."""
    if isinstance(obj, str):
        s = obj.strip()
        if s == "Q":
            return QQ
        m = re.fullmatch(r"F_?(\d+)\(t\)", s)
        if m:
            return rational_function_field(int(m.group(1)))
        raise ValidationError(f"unknown base field {obj!r}")
    if isinstance(obj, dict):
        kind = obj.get("kind")
        if kind == "Q":
            return QQ
        if kind == "Fq":
            return rational_function_field(obj.get("q", 0))
        if "q" in obj and kind is None:
            return rational_function_field(obj["q"])
    raise ValidationError(f"cannot read a base field from {obj!r}")


_TERM = re.compile(r"^(\d+)?\*?(?:t(?:\^(\d+))?)?$")


def parse_poly_text(text: str, q: int) -> tuple:
    """Coefficient tuple (constant first) from text like "t^2+2*t-1"."""
    s = text.replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValidationError("empty polynomial")
    coeffs: dict[int, int] = {}
    for piece in re.findall(r"[+-]?[^+-]+", s):
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        m = _TERM.fullmatch(body)
        if not m or (m.group(1) is None and "t" not in body):
            raise ValidationError(f"cannot read polynomial term {piece!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if "t" in body:
            deg = int(m.group(2)) if m.group(2) is not None else 1
        else:
            deg = 0
        coeffs[deg] = (coeffs.get(deg, 0) + sign * coeff) % q
    top = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(top + 1))


def parse_fqt_text(text: str, q: int) -> FqtElt:
    """Factored element from text: "3*t*(t+1)^2", chunks joined by "*".

    Each parenthesized or bare chunk must itself be irreducible; composite
    chunks are rejected by the element constructor, not factored here.
    """
    s = text.replace(" ", "")
    chunks = re.findall(r"\((?:[^()]+)\)(?:\^\d+)?|[^*()]+", s)
    if "*".join(chunks).replace("*", "") != s.replace("*", ""):
        raise ValidationError(f"cannot read factored element {text!r}")
    c = 1
    factors = []
    for chunk in chunks:
        if re.fullmatch(r"\d+", chunk):
            c = c * int(chunk) % q
            continue
        m = re.fullmatch(r"\((.+)\)\^(\d+)|\((.+)\)|(.+)\^(\d+)|(.+)", chunk)
        poly_text = m.group(1) or m.group(3) or m.group(6)
        if poly_text is None and m.group(4) is not None:
            poly_text, exp = m.group(4), int(m.group(5))
        else:
            exp = int(m.group(2)) if m.group(2) else 1
        factors.append((parse_poly_text(poly_text, q), exp))
    return fqt_from_factors(q, c, factors)


def fqt_from_json(obj, q: int) -> FqtElt:
    if isinstance(obj, str):
        return parse_fqt_text(obj, q)
    if isinstance(obj, dict):
        factors = [(tuple(coeffs), e) for coeffs, e in obj.get("factors", [])]
        return fqt_from_factors(q, obj.get("c", 1), factors)
    raise ValidationError(f"cannot read a function-field element from {obj!r}")


def parse_place_text(base: BaseField, text: str) -> Place:
    """Place from command-line text: "5" or "real" over Q, "inf" or a
    monic irreducible like "t+4" (parentheses optional) over F_q(t)."""
    s = text.strip()
    if base.is_rationals():
        if s == "real":
            return real_place()
        try:
            p = int(s)
        except ValueError:
            raise ValidationError(f"not a place of Q: {text!r}") from None
        return prime_place(p)
    if s == "inf":
        return infinite_place(base.q)
    return poly_place(base.q, parse_poly_text(s, base.q))


def place_from_json(obj, base: BaseField | None = None) -> Place:
    if isinstance(obj, (str, int)):
        if base is None:
            raise ValidationError(f"place {obj!r} given as text needs a base field")
        return parse_place_text(base, str(obj))
    if not isinstance(obj, dict):
        raise ValidationError(f"cannot read a place from {obj!r}")
    kind = obj.get("kind")
    if kind == "prime":
        return prime_place(obj.get("p", 0))
    if kind == "real":
        return real_place()
    if kind == "poly":
        return poly_place(obj.get("q", 0), tuple(obj.get("coeffs", ())))
    if kind == "inf":
        return infinite_place(obj.get("q", 0))
    raise ValidationError(f"unknown place kind {kind!r}")


def ext_from_json(obj) -> AbExt:
    """Extension from {"base": ..., "n": ..., "radicands": [...]}."""
    if not isinstance(obj, dict):
        raise ValidationError(f"cannot read an extension from {obj!r}")
    for key in ("base", "n", "radicands"):
        if key not in obj:
            raise ValidationError(f"extension JSON lacks {key!r}")
    base = base_from_json(obj["base"])
    n = obj["n"]
    if base.is_rationals():
        radicands = []
        for r in obj["radicands"]:
            if not isinstance(r, int):
                raise ValidationError(f"radicands over Q are integers, got {r!r}")
            radicands.append(r)
    else:
        radicands = [fqt_from_json(r, base.q) for r in obj["radicands"]]
    return build_extension(base, n, radicands)


def class_from_json(obj) -> BrauerClass:
    """Brauer class from {"invariants": [[place, "a/b"], ...], "base": ...}."""
    if not isinstance(obj, dict) or "invariants" not in obj:
        raise ValidationError("Brauer class JSON needs an 'invariants' list")
    base = base_from_json(obj["base"]) if "base" in obj else None
    pairs = []
    for row in obj["invariants"]:
        if not isinstance(row, (list, tuple)) or len(row) != 2:
            raise ValidationError(f"invariant rows are [place, value], got {row!r}")
        place = place_from_json(row[0], base)
        pairs.append((place, QZ.parse(str(row[1]))))
    return make_class(pairs)


def central_from_json(obj) -> CentralExt:
    if not isinstance(obj, dict):
        raise ValidationError(f"cannot read a central extension from {obj!r}")
    for key in ("p", "a", "orders", "t", "c"):
        if key not in obj:
            raise ValidationError(f"central extension JSON lacks {key!r}")
    return ext_build(obj["p"], obj["a"], obj["orders"], obj["t"], obj["c"])


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def load_extension(path: str) -> AbExt:
    return ext_from_json(load_json(path))


def load_class(path: str) -> BrauerClass:
    return class_from_json(load_json(path))

"""Conversion between library objects and plain JSON-ready values.

Polynomials serialize as coefficient arrays, constant term first, in
the element encoding of their field ("a/b" strings over Q, residues
over F_p, coefficient vectors over extensions).  Matrices carry their
field descriptor.  A small text form like "x^2 - 2" is accepted for
polynomials over Q and prime fields.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .exactfield import elem_from_json, elem_to_json, make_field
from .exactmat import Matrix, companion
from .typealg import Partition
from .upoly import Poly

_TERM = re.compile(r"^(-)?(\d+(?:/\d+)?)?(x(?:\^(\d+))?)?$")


def parse_poly_text(ctx, text):
    """Parse '3x^2 - x + 1/2' into a Poly over ctx."""
    s = text.replace(" ", "").replace("**", "^").replace("*", "")
    if not s:
        raise ParseError("empty polynomial text")
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    coeffs = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m or not term:
            raise ParseError("bad polynomial term %r in %r" % (term, text))
        sign, digits, xpart, exp_s = m.groups()
        if digits is None and xpart is None:
            raise ParseError("bad polynomial term %r in %r" % (term, text))
        coef = Fraction(digits) if digits is not None else Fraction(1)
        if sign:
            coef = -coef
        exp = 0 if xpart is None else (1 if exp_s is None else int(exp_s))
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    top = max(coeffs)
    vals = [coeffs.get(i, Fraction(0)) for i in range(top + 1)]
    try:
        return Poly(ctx, [ctx.elem(v) for v in vals])
    except (TypeError, ValueError) as exc:
        raise ParseError("cannot coerce %r over %s" % (text, ctx.short_name())) from exc


def poly_to_json(p):
    return [elem_to_json(c) for c in p.coeffs]


def poly_from_json(ctx, val):
    if isinstance(val, str):
        return parse_poly_text(ctx, val)
    if isinstance(val, (list, tuple)):
        return Poly(ctx, [elem_from_json(ctx, v) for v in val])
    raise ParseError("polynomial must be a coefficient array or text, got %r" % (val,))


def matrix_to_json(m):
    return {
        "field": m.ctx.descriptor(),
        "rows": [[elem_to_json(e) for e in row] for row in m.rows],
    }


def matrix_from_json(obj):
    if not isinstance(obj, dict) or "field" not in obj:
        raise ParseError("matrix JSON must be an object with a 'field' key")
    ctx = make_field(obj["field"])
    if "companion" in obj:
        return companion(poly_from_json(ctx, obj["companion"]))
    rows = obj.get("rows")
    if not isinstance(rows, list) or not rows:
        raise ParseError("matrix JSON needs a nonempty 'rows' array")
    try:
        return Matrix(ctx, [[elem_from_json(ctx, v) for v in row] for row in rows])
    except TypeError as exc:
        raise ParseError("bad matrix rows: %s" % exc) from exc


def partition_to_json(lam):
    return list(lam.parts)


def partition_from_json(val):
    if not isinstance(val, (list, tuple)):
        raise ParseError("partition must be an array of parts")
    try:
        return Partition(val)
    except (TypeError, ValueError) as exc:
        raise ParseError("bad partition: %s" % exc) from exc


def cycle_type_to_json(t):
    return [
        {"poly": poly_to_json(f), "partition": list(lam.parts)} for f, lam in t.entries
    ]


def green_type_to_json(t):
    return [{"degree": d, "partition": list(lam.parts)} for d, lam in t.entries]


def generalized_type_to_json(t):
    return [
        {"class_rep": poly_to_json(f), "partition": list(lam.parts)}
        for f, lam in t.entries
    ]


def certificate_to_json(cert):
    out = {
        "conjugate": cert.conjugate,
        "generalized_type_x": generalized_type_to_json(cert.gentype_x),
        "generalized_type_y": generalized_type_to_json(cert.gentype_y),
        "p": None if cert.p is None else poly_to_json(cert.p),
        "q": None if cert.q is None else poly_to_json(cert.q),
        "conjugator": None if cert.conjugator is None else matrix_to_json(cert.conjugator),
    }
    return out


def variation_report_to_json(rep):
    return {
        "equal": rep.equal,
        "kind": rep.kind,
        "variation": list(rep.variation),
        "details": rep.details,
    }


def permutation_from_text(val, n=None):
    from .permcent import Permutation

    if isinstance(val, str):
        return Permutation.parse(val, n=n)
    if isinstance(val, (list, tuple)):
        p = Permutation(val)
        return p if n is None else p.extend(n)
    raise ParseError("permutation must be cycle text or an image array")


def verify_report_to_json(rep):
    """Report without the elapsed time, so output is byte-stable."""
    return {
        "suite": rep.suite,
        "seed": rep.seed,
        "scale": rep.scale,
        "instances_checked": rep.instances_checked,
        "failures": list(rep.failures),
    }

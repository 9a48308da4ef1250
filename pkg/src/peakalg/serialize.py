"""JSON, LaTeX and text forms of elements and matrices.

Element JSON: ``{"weight": n, "field": "QQ", "terms": [{"label": "3.1", "coeff": "-1/2"}]}``.
Labels are compositions ``3.1.1`` (barred parts ``2'``) or headed labels
``h;t1,t2``.  Terms are listed by label length, then lexicographically.
"""

from __future__ import annotations

from gmpy2 import mpq

from .combitypes import Headed, parse_label, render_label
from .exactmath import format_coeff, parse_coeff
from .reptheory import CartanMatrix, TPoly

__all__ = ["term_key", "element_to_json", "element_from_json", "element_to_text",
           "element_to_latex", "cartan_from_json"]


def term_key(label) -> tuple:
    if isinstance(label, Headed):
        word = label.word()
        return (len(word), word, label.head)
    return (len(label), tuple(abs(x) for x in label), tuple(label))


def element_to_json(terms: dict, weight: int, field: str = "QQ") -> dict:
    return {"weight": weight, "field": field,
            "terms": [{"label": render_label(k), "coeff": format_coeff(terms[k])}
                      for k in sorted(terms, key=term_key)]}


def element_from_json(data: dict) -> dict:
    """Inverse of ``element_to_json``; returns {label: coefficient}."""
    field = data.get("field", "QQ")
    r = None if field == "QQ" else int(field.rsplit("_", 1)[1].rstrip(")"))
    return {parse_label(t["label"]): parse_coeff(t["coeff"], r) for t in data["terms"]}


def _basis_symbol(label, latex: bool) -> str:
    if isinstance(label, Headed):
        # S~^(h; t) = S_h S^{t #}
        tail = "".join(str(x) for x in label.tail)
        head = (f"S_{{{label.head}}}" if latex else f"S_{label.head}") if label.head else ""
        if not tail:
            return head or "1"
        sharp = f"S^{{{tail}\\sharp}}" if latex else f"S#^{tail}"
        return head + (" " if head else "") + sharp
    if len(label) == 1 and label[0] > 0:
        return f"S_{{{label[0]}}}" if latex else f"S_{label[0]}"
    parts = "".join(f"\\bar{{{-x}}}" if x < 0 else str(x) for x in label) if latex else \
        ".".join(f"{-x}'" if x < 0 else str(x) for x in label)
    return f"S^{{{parts}}}" if latex else f"S^{parts}"


def _signed_terms(terms: dict, latex: bool):
    for k in sorted(terms, key=term_key):
        c = terms[k]
        text = format_coeff(c)
        negative = text.startswith("-") and " " not in text
        if negative:
            text = text[1:]
        if latex and "/" in text and " " not in text:
            num, den = text.split("/")
            text = f"\\frac{{{num}}}{{{den}}}"
        if " " in text:
            text = f"({text})"
        coef = "" if text == "1" else text + (" " if latex else "*")
        yield negative, coef + _basis_symbol(k, latex)


def _join(terms: dict, latex: bool) -> str:
    if not terms:
        return "0"
    out = ""
    for i, (neg, body) in enumerate(_signed_terms(terms, latex)):
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def element_to_text(terms: dict) -> str:
    return _join(terms, latex=False)


def element_to_latex(terms: dict) -> str:
    return _join(terms, latex=True)


def cartan_from_json(data: dict) -> CartanMatrix:
    labels = [parse_label(x) for x in data["labels"]]
    entries = {(a, b): TPoly.parse(tok, "t") for a, row in zip(labels, data["rows"])
               for b, tok in zip(labels, row)}
    return CartanMatrix(labels, entries, data.get("name", ""))

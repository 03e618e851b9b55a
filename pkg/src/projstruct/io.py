"""Text formats: exact scalar literals, series, and action files.

Scalar literals are exact: ``3``, ``-1/2``, ``1/2+3/4*i``, ``2w`` (``w`` is a
primitive cube root of unity), ``z12^5``.  Decimal points are rejected.

Action files are line oriented; ``#`` starts a comment::

    genus 3
    base fuchsian
    generator J
    row 1 0 0 0 0 0
    ...                       (one row per coordinate)
    translation 0 0 0 0 0 0   (optional, defaults to zero)
    end
    generator R modulus 10    (diagonal root-of-unity action)
    exponents 2 3 4 5 6 7 8 9 0 1 2 3
    signs 1 1 1 1 1 1 1 1 1 -1 -1 -1   (optional)
    end
"""
from __future__ import annotations

import re
from fractions import Fraction

from .action import ActionGroup, AffineAutAction, MonomialAction
from .errors import ParseError
from .scalars import I, ZETA3, ZETA12, Scalar, format_scalar
from .series import TruncatedSeries

__all__ = ["parse_scalar", "parse_series", "format_series", "read_action_file", "write_action_file"]

_UNIT = {"i": I, "w": ZETA3, "z12": ZETA12}
_TERM = re.compile(r"(\d+(?:/\d+)?)?\*?(z12|i|w)?(?:\^(\d+))?")


def parse_scalar(text: str) -> Scalar:
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty scalar literal")
    if "." in s:
        raise ParseError(f"floating literal {text!r} not accepted; use p/q")
    total: Scalar = Fraction(0)
    pos = 0
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(1) or m.group(2)):
            raise ParseError(f"cannot parse scalar literal {text!r}")
        coef = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(3) and not m.group(2):
            raise ParseError(f"exponent without a root of unity in {text!r}")
        value: Scalar = coef
        if m.group(2):
            value = coef * _UNIT[m.group(2)] ** int(m.group(3) or 1)
        total = total + sign * value
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ParseError(f"unexpected {s[pos]!r} in {text!r}")
    return total


def parse_series(text: str, order: int | None = None) -> TruncatedSeries:
    """Coefficients ``c0 c1 ...`` separated by commas or whitespace; ``order`` pads with zeros."""
    tokens = [tok for tok in re.split(r"[,\s]+", text.strip()) if tok]
    if not tokens:
        raise ParseError("empty series")
    coeffs = [parse_scalar(tok) for tok in tokens]
    if order is not None and order < len(coeffs) - 1:
        raise ParseError(f"{len(coeffs)} coefficients do not fit order {order}")
    return TruncatedSeries(coeffs, order)


def format_series(s: TruncatedSeries) -> list[str]:
    return [format_scalar(c) for c in s.coeffs]


def read_action_file(text: str) -> ActionGroup:
    genus = None
    base = "fuchsian"
    gens = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        try:
            if current is None:
                if key == "genus":
                    genus = int(rest[0])
                elif key == "base":
                    base = rest[0]
                elif key == "generator":
                    current = {"label": rest[0] if rest else f"g{len(gens)}", "rows": [], "t": None}
                    if len(rest) >= 3 and rest[1] == "modulus":
                        current["modulus"] = int(rest[2])
                else:
                    raise ParseError(f"unknown keyword {key!r}")
            elif key == "row":
                current["rows"].append([parse_scalar(x) for x in rest])
            elif key == "translation":
                current["t"] = [parse_scalar(x) for x in rest]
            elif key == "exponents":
                current["exponents"] = [int(x) for x in rest]
            elif key == "signs":
                current["signs"] = [int(x) for x in rest]
            elif key == "end":
                gens.append(_build_generator(current))
                current = None
            else:
                raise ParseError(f"unknown keyword {key!r} inside generator")
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        except (IndexError, KeyError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if current is not None:
        raise ParseError("generator block not closed with 'end'")
    if genus is None:
        raise ParseError("missing 'genus' line")
    return ActionGroup(tuple(gens), genus, base)


def _build_generator(block: dict):
    if "modulus" in block:
        if block["rows"] or block["t"]:
            raise ParseError("a monomial generator takes exponents/signs, not rows")
        return MonomialAction(block["modulus"], tuple(block["exponents"]), block.get("signs"), label=block["label"])
    if not block["rows"]:
        raise ParseError(f"generator {block['label']!r} has no rows")
    return AffineAutAction(tuple(map(tuple, block["rows"])), block["t"], label=block["label"])


def write_action_file(G: ActionGroup) -> str:
    lines = [f"genus {G.genus}", f"base {G.base}"]
    for gen in G.generators:
        if isinstance(gen, MonomialAction):
            lines.append(f"generator {gen.label or 'g'} modulus {gen.modulus}")
            lines.append("exponents " + " ".join(map(str, gen.exponents)))
            if any(s == -1 for s in gen.signs):
                lines.append("signs " + " ".join(map(str, gen.signs)))
        else:
            lines.append(f"generator {gen.label or 'g'}")
            lines.extend("row " + " ".join(map(format_scalar, row)) for row in gen.P)
            if not gen.is_linear:
                lines.append("translation " + " ".join(map(format_scalar, gen.t)))
        lines.append("end")
    return "\n".join(lines) + "\n"

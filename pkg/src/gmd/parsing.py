"""Text front end: ring declarations, polynomial expressions, ideal and point files.

Grammar summary::

    ring GF(3)[t1,t2,t3] order=grevlex vars=t3,t1,t2
    ideal:
      t1*t6 - t3*t4,
      t2*t6 - t3*t5
    primes:
      (t2, t3, t4) (t1, t3, t4)

An ``intersect:`` section may replace ``ideal:``; it lists parenthesised
generator blocks and the ideal is their intersection.  ``--`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .fields import QQ, PrimeField, is_prime
from .monomials import ORDER_KINDS, MonomialOrder
from .polynomial import PolyRing, Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


def strip_comment(line: str) -> str:
    i = line.find("--")
    return line if i < 0 else line[:i]


# ---------------------------------------------------------------- tokenizer

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokens(text: str, line: int, col0: int):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text.rstrip())))
    return [(k, v, line, col0 + c) for k, v, c in out]


class _ExprParser:
    """Recursive descent over + - * / ^ with implicit multiplication by juxtaposition."""

    def __init__(self, text: str, ring: PolyRing, line: int = 1, col0: int = 1):
        self.toks = _tokens(text, line, col0)
        self.i = 0
        self.ring = ring
        self.index = {v: k for k, v in enumerate(ring.variables)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self):
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while True:
            kind, val = self.peek()[:2]
            if kind == "op" and val == "*":
                self.take()
                f = f * self.unary()
            elif kind == "op" and val == "/":
                tok = self.take()
                g = self.unary()
                if len(g) != 1 or g.degree() != 0:
                    self.fail("division only by nonzero constants", tok)
                c = g.leading_coefficient
                f = f * self.ring.field.inv(c)
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                f = f * self.unary()
            else:
                return f

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            f = self.unary()
            return -f if op == "-" else f
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "-":
                self.fail("negative exponent")
            if tok[0] != "num":
                self.fail("exponent must be a non-negative integer")
            self.take()
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val = tok[:2]
        if kind == "num":
            return self.ring.constant(Fraction(int(val)))
        if kind == "name":
            if val not in self.index:
                self.fail(f"unknown variable {val!r}", tok)
            return self.ring.gen(self.index[val])
        if kind == "op" and val == "(":
            f = self.expr()
            close = self.take()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return f
        self.fail("unexpected end of expression" if kind == "end" else f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ring: PolyRing, line: int = 1, column: int = 1) -> Polynomial:
    return _ExprParser(strip_comment(text), ring, line, column).parse()


# ------------------------------------------------------------------- rings

_RING = re.compile(
    r"^\s*ring\s+(?P<field>QQ|GF\s*\(\s*(?P<p>[^)]*)\))\s*\[(?P<vars>[^\]]*)\](?P<rest>.*)$")


def parse_field(text: str, line: int = 1, column: int = 1):
    text = text.strip()
    if text == "QQ":
        return QQ
    m = re.fullmatch(r"GF\s*\(\s*(\d+)\s*\)", text)
    if not m:
        raise ParseError(f"unknown field {text!r}", line, column)
    p = int(m.group(1))
    if not is_prime(p):
        raise ParseError(f"composite characteristic {p}", line, column)
    return PrimeField(p)


def parse_ring(text: str, line: int = 1) -> PolyRing:
    text = strip_comment(text)
    m = _RING.match(text)
    if not m:
        stripped = text.lstrip()
        col = len(text) - len(stripped) + 1
        if not stripped.startswith("ring"):
            raise ParseError("expected 'ring'", line, col)
        raise ParseError("malformed ring declaration", line, col)
    field = parse_field(m.group("field"), line, m.start("field") + 1)
    names = [v.strip() for v in m.group("vars").split(",")]
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise ParseError(f"bad variable name {v!r}", line, m.start("vars") + 1)
    seen = set()
    for v in names:
        if v in seen:
            raise ParseError(f"duplicate variable {v!r}", line, m.start("vars") + 1)
        seen.add(v)
    kind, perm = "grevlex", None
    rest = m.group("rest")
    rest_col = m.start("rest") + 1
    for opt in re.finditer(r"\S+", rest):
        key, _, value = opt.group().partition("=")
        col = rest_col + opt.start()
        if key == "order":
            if value not in ORDER_KINDS:
                raise ParseError(f"unknown monomial order {value!r}", line, col)
            kind = value
        elif key == "vars":
            ranked = value.split(",")
            if sorted(ranked) != sorted(names):
                raise ParseError("vars= must list every variable exactly once", line, col)
            perm = [names.index(v) for v in ranked]
        else:
            raise ParseError(f"unknown option {opt.group()!r}", line, col)
    return PolyRing(names, field, MonomialOrder(kind, len(names), perm))


# -------------------------------------------------------------- ideal files

@dataclass
class IdealFile:
    ring: PolyRing
    generators: list
    components: list = field(default_factory=list)
    primes: list = field(default_factory=list)

    def ideal(self, **flags):
        """The ideal, intersecting components if given; ``flags`` are user assertions."""
        from .groebner import Ideal, intersect
        if self.components:
            parts = [Ideal(self.ring, gens) for gens in self.components]
            out = parts[0]
            for J in parts[1:]:
                out = intersect(out, J)
            gb = out.groebner_basis()
            return Ideal(self.ring, gb, _gb=gb, **flags)
        return Ideal(self.ring, self.generators, **flags)

    def with_ring(self, ring) -> "IdealFile":
        """Same data transported to a ring with the same variables (e.g. another order)."""
        move = lambda f: ring.from_terms(f.terms)
        return IdealFile(ring, [move(g) for g in self.generators],
                         [[move(g) for g in c] for c in self.components],
                         [[move(g) for g in c] for c in self.primes])

    def prime_ideals(self):
        from .groebner import Ideal
        return [Ideal(self.ring, gens, radical=True) for gens in self.primes]


def _split_top(text: str, sep: str = ","):
    """Split on ``sep`` at parenthesis depth zero, keeping start offsets."""
    depth, start, out = 0, 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def _poly_list(chunks, ring):
    """chunks: (text, line, column) pieces; returns polynomials."""
    polys = []
    pending = None
    for text, line, col in chunks:
        for piece, off in _split_top(text):
            if not piece.strip():
                continue
            if pending is not None:
                pending = (pending[0] + " " + piece, pending[1], pending[2])
            else:
                pending = (piece, line, col + off)
            if pending[0].rstrip()[-1:] in "+-*^/(":
                continue
            polys.append(parse_polynomial(pending[0], ring, pending[1], pending[2]))
            pending = None
    if pending is not None:
        raise ParseError("expression ends with an operator", pending[1], pending[2])
    return polys


def _blocks(chunks, ring, what: str):
    """Parenthesised generator groups, possibly spanning lines."""
    text = ""
    origin = []
    for t, line, col in chunks:
        for i, ch in enumerate(t):
            origin.append((line, col + i))
        text += t
        origin.append((line, col + len(t)))
        text += "\n"
    blocks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace() or ch == ",":
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' to open a {what} block", *origin[i])
        depth, j = 0, i
        while j < len(text):
            if text[j] == "(":
                depth += 1
            elif text[j] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        if depth:
            raise ParseError(f"unclosed {what} block", *origin[i])
        inner = text[i + 1:j]
        gens = []
        for piece, off in _split_top(inner):
            if piece.strip():
                line, col = origin[i + 1 + off]
                gens.append(parse_polynomial(piece.replace("\n", " "), ring, line, col))
        if not gens:
            raise ParseError(f"empty {what} block", *origin[i])
        blocks.append(gens)
        i = j + 1
    return blocks


def parse_ideal_file(text: str) -> IdealFile:
    lines = text.splitlines()
    ring = None
    section = None
    chunks: dict[str, list] = {"ideal": [], "primes": [], "intersect": []}
    seen = set()
    for no, raw in enumerate(lines, 1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        if ring is None:
            ring = parse_ring(line, no)
            continue
        m = re.match(r"\s*(ideal|primes|intersect)\s*:", line)
        if m:
            section = m.group(1)
            seen.add(section)
            rest = line[m.end():]
            if rest.strip():
                chunks[section].append((rest, no, m.end() + 1))
            continue
        if section is None:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'ideal:' section", no, col)
        chunks[section].append((line, no, 1))
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1)
    if "ideal" in seen and "intersect" in seen:
        raise ParseError("use either 'ideal:' or 'intersect:', not both", len(lines), 1)
    gens = _poly_list(chunks["ideal"], ring)
    components = _blocks(chunks["intersect"], ring, "intersect")
    primes = _blocks(chunks["primes"], ring, "prime")
    for block in primes:
        for f in block:
            if f.degree() != 1 or not f.is_homogeneous():
                raise ParseError(f"prime generator {f} is not a linear form", len(lines), 1)
    gens = [g for g in gens if g]
    if not gens and not components:
        raise ParseError("the ideal has no nonzero generators", len(lines), 1)
    return IdealFile(ring, gens, components, primes)


def load_ideal_file(path) -> IdealFile:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_file(fh.read())


# -------------------------------------------------------------- point files

_POINTS = re.compile(r"^\s*points\s+(GF\s*\([^)]*\))\s+dim\s*=\s*(\d+)\s*$")


def parse_points_text(text: str):
    """Returns (field, s, [(coords, line), ...]) with coordinates reduced mod p."""
    field_ = None
    s = None
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        if field_ is None:
            m = _POINTS.match(line)
            if not m:
                raise ParseError("expected header 'points GF(p) dim=s'", no, 1)
            field_ = parse_field(m.group(1), no, m.start(1) + 1)
            s = int(m.group(2))
            if s < 1:
                raise ParseError("dim must be positive", no, m.start(2) + 1)
            continue
        body = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        body = body.strip("[]")
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError("expected a point '(c1 : ... : cs)'", no, col)
        parts = re.split(r"[:,]", body[1:-1])
        if len(parts) != s:
            raise ParseError(f"expected {s} coordinates, got {len(parts)}", no, col)
        coords = []
        for part in parts:
            part = part.strip()
            if not re.fullmatch(r"[+-]?\d+", part):
                raise ParseError(f"coordinate {part!r} is not in the field", no, col)
            coords.append(int(part) % field_.p)
        rows.append((tuple(coords), no))
    if field_ is None:
        raise ParseError("missing points header", 1, 1)
    return field_, s, rows

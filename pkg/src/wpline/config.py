"""JSON configurations for verifying user-supplied homomorphism pairs.

A configuration names two algebras, a coefficient field, named constants
given by their defining polynomials, group generator images in "l;l1,..."
notation, and algebra generator images as term lists whose coefficients are
small expressions over integers and the named constants.  Parsing keeps the
raw strings so that parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import CoordinateAlgebra
from .field import ConstantUnavailable, Field, field_from_spec
from .homverify import AlgebraHom
from .stringgroup import GroupHom, WeightSequence


def parse_scalar(text: str, field: Field, env: dict | None = None):
    """Evaluate a coefficient expression: ints, named constants, + - * / ^ ()."""
    env = env or {}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if tok is None or (kind is not None and tok[0] != kind):
            raise ValueError("bad expression %r near position %d" % (text, pos))
        pos += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() and peek()[0] in "+-":
            op = take()[0]
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term():
        node = parse_unary()
        while peek() and peek()[0] in "*/":
            op = take()[0]
            rhs = parse_unary()
            node = node * rhs if op == "*" else node / rhs
        return node

    def parse_unary():
        if peek() and peek()[0] == "-":
            take()
            return -parse_unary()
        return parse_power()

    def parse_power():
        base = parse_atom()
        if peek() and peek()[0] == "^":
            take()
            tok = take("int")
            return base ** int(tok[1])
        return base

    def parse_atom():
        tok = take()
        kind, val = tok
        if kind == "int":
            return field(int(val))
        if kind == "name":
            if val not in env:
                raise ValueError("unknown constant %r in expression %r" % (val, text))
            return env[val]
        if kind == "(":
            node = parse_expr()
            take(")")
            return node
        raise ValueError("bad expression %r" % text)

    value = parse_expr()
    if pos != len(tokens):
        raise ValueError("trailing input in expression %r" % text)
    return value


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            out.append((ch, ch))
            i += 1
        else:
            raise ValueError("unexpected character %r in expression %r" % (ch, text))
    return out


@dataclass
class VerifyConfig:
    """A verification job as loaded from JSON, with raw strings preserved."""

    source_weights: tuple[int, ...]
    source_params: tuple[str, ...]
    target_weights: tuple[int, ...]
    target_params: tuple[str, ...]
    field_spec: str
    constants: dict  # name -> list of coefficient expressions, ascending degree
    pi: tuple[str, ...]
    phi: tuple  # per generator: list of [coeff expression, exponent vector]
    window: int = 20

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyConfig":
        try:
            return cls(
                source_weights=tuple(int(p) for p in data["source"]["weights"]),
                source_params=tuple(str(v) for v in data["source"].get("params", [])),
                target_weights=tuple(int(p) for p in data["target"]["weights"]),
                target_params=tuple(str(v) for v in data["target"].get("params", [])),
                field_spec=str(data["field"]),
                constants={str(k): [str(c) for c in v]
                           for k, v in data.get("constants", {}).items()},
                pi=tuple(str(s) for s in data["pi"]),
                phi=tuple(tuple((str(c), tuple(int(a) for a in e)) for c, e in gen)
                          for gen in data["phi"]),
                window=int(data.get("window", 20)),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed verification config: %s" % exc) from None

    def to_dict(self) -> dict:
        return {
            "source": {"weights": list(self.source_weights),
                       "params": list(self.source_params)},
            "target": {"weights": list(self.target_weights),
                       "params": list(self.target_params)},
            "field": self.field_spec,
            "constants": {k: list(v) for k, v in self.constants.items()},
            "pi": list(self.pi),
            "phi": [[[c, list(e)] for c, e in gen] for gen in self.phi],
            "window": self.window,
        }

    @classmethod
    def load(cls, path: str) -> "VerifyConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def dump(self, path: str):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def build(self) -> tuple[Field, dict, AlgebraHom]:
        """Materialize field, constants and the algebra homomorphism."""
        field = field_from_spec(self.field_spec)
        env: dict = {}
        for name, coeffs in self.constants.items():
            poly = [parse_scalar(c, field, env) for c in coeffs]
            root = field.find_root(poly)
            if root is None:
                raise ConstantUnavailable(
                    "constant %r has no root in %s" % (name, field.name))
            env[name] = root
        src_w = WeightSequence(self.source_weights)
        tgt_w = WeightSequence(self.target_weights)
        source = CoordinateAlgebra(src_w, field,
                                   [parse_scalar(v, field, env) for v in self.source_params])
        target = CoordinateAlgebra(tgt_w, field,
                                   [parse_scalar(v, field, env) for v in self.target_params])
        pi = GroupHom(src_w, tgt_w, [tgt_w.parse(s) for s in self.pi])
        images = [target.element([(parse_scalar(c, field, env), e) for c, e in gen])
                  for gen in self.phi]
        phi = AlgebraHom(source, target, pi, images)
        return field, env, phi

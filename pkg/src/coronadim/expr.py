"""Parser for the textual graph expression language.

Grammar::

    expr := IDENT '(' arg (',' arg)* ')'
    arg  := INTEGER | expr

Identifiers are case-insensitive: path, cycle, complete, empty, kst, star,
wheel, fan, join, union, complement, corona. ``corona(g, h)`` may carry a
third integer argument k (default 1). Whitespace is insignificant. Error
offsets are 1-based character positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExprSyntaxError, InvalidDescriptorError
from .graph import EXPR_NAMES, FAMILY_SIGNATURES, FamilyDescriptor

_TAGS = {EXPR_NAMES.get(tag, tag): tag for tag in FAMILY_SIGNATURES}

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")


@dataclass(frozen=True)
class GraphExpression:
    source: str
    descriptor: FamilyDescriptor

    def __str__(self) -> str:
        return str(self.descriptor)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _offset(self) -> int:
        tok = self._peek()
        return (tok[2] if tok else len(self.text)) + 1

    def _expect(self, value: str) -> None:
        tok = self._peek()
        if tok is None or tok[1] != value:
            found = "end of input" if tok is None else repr(tok[1])
            raise ExprSyntaxError(f"expected {value!r}, found {found}", self._offset())
        self.i += 1

    def parse(self) -> FamilyDescriptor:
        desc = self._expr()
        if self._peek() is not None:
            raise ExprSyntaxError("trailing input after expression", self._offset())
        return desc

    def _expr(self) -> FamilyDescriptor:
        tok = self._peek()
        if tok is None or tok[0] != "ident":
            found = "end of input" if tok is None else repr(tok[1])
            raise ExprSyntaxError(f"expected a family name, found {found}", self._offset())
        name_offset = self._offset()
        name = tok[1].lower()
        tag = _TAGS.get(name)
        if tag is None:
            raise ExprSyntaxError(f"unknown family {tok[1]!r}", name_offset)
        self.i += 1
        self._expect("(")
        args = [self._arg()]
        while self._peek() is not None and self._peek()[1] == ",":
            self.i += 1
            args.append(self._arg())
        self._expect(")")
        if tag == "corona" and len(args) == 2:
            args.append(1)
        expected = len(FAMILY_SIGNATURES[tag])
        if len(args) != expected:
            raise ExprSyntaxError(
                f"{name} takes {expected} arguments, got {len(args)}", name_offset
            )
        try:
            return FamilyDescriptor(tag, tuple(args))
        except InvalidDescriptorError as exc:
            raise ExprSyntaxError(str(exc), name_offset) from None

    def _arg(self):
        tok = self._peek()
        if tok is not None and tok[0] == "int":
            self.i += 1
            return int(tok[1])
        return self._expr()


def parse_graph_expr(text: str) -> GraphExpression:
    return GraphExpression(text, _Parser(text).parse())

"""Plain-text gluing table format.

    tets <n>
    # comment lines and blank lines are ignored
    <t>:<p0><p1><p2><p3>  ...   (4 tokens per line, one line per tetrahedron)

Token j of line i describes face j of tetrahedron i: target tetrahedron
t (0-based) and the images p0 p1 p2 p3 of vertex labels 0..3 under the
gluing permutation.  An unglued face is written as `-`.  Parsing checks
tokens only; topological validity (involution included) is a separate
stage, so a syntactically well-formed but non-involutive table parses
fine and is then flagged by validate()."""

import re

from .perm4 import Perm4
from .triangulation import Triangulation, Gluing

_TOKEN = re.compile(r"^(\d+):([0-9]{4})$")


class ParseError(ValueError):
    """A malformed gluing table; carries 1-based line and column."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        super().__init__("line %d, column %d: %s" % (line, column, message))


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield lineno, line


def parse(text):
    """Parse a gluing table; raises ParseError with position on the
    first malformed token."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, 1, "missing `tets <n>` header") from None
    m = re.match(r"^\s*tets\s+(\d+)\s*$", header)
    if m is None:
        raise ParseError(lineno, 1 + len(header) - len(header.lstrip()),
                         "expected `tets <n>` header")
    n = int(m.group(1))

    table = []
    for lineno, line in lines:
        if len(table) == n:
            raise ParseError(lineno, 1, "more than %d tetrahedron lines" % n)
        tokens = line.split()
        if len(tokens) != 4:
            raise ParseError(lineno, 1,
                             "expected 4 face tokens, found %d" % len(tokens))
        faces = []
        for tok in tokens:
            col = line.index(tok) + 1
            if tok == "-":
                faces.append(None)
                continue
            m = _TOKEN.match(tok)
            if m is None:
                raise ParseError(lineno, col,
                                 "malformed token %r (want t:p0p1p2p3 or -)"
                                 % tok)
            target = int(m.group(1))
            digits = tuple(int(c) for c in m.group(2))
            if sorted(digits) != [0, 1, 2, 3]:
                raise ParseError(lineno, col,
                                 "%r is not a permutation of 0123"
                                 % m.group(2))
            if target >= n:
                raise ParseError(lineno, col,
                                 "tetrahedron index %d out of range (tets %d)"
                                 % (target, n))
            faces.append(Gluing(target, Perm4(digits)))
        table.append(faces)
    if len(table) != n:
        raise ParseError(lineno if table else 1, 1,
                         "expected %d tetrahedron lines, found %d"
                         % (n, len(table)))
    return Triangulation(table)


def serialize(tri):
    """Canonical text form: parse(serialize(tri)) == tri exactly, and
    serialize is byte-stable."""
    out = ["tets %d" % tri.size]
    for t in range(tri.size):
        tokens = []
        for f in range(4):
            g = tri.gluing(t, f)
            if g is None:
                tokens.append("-")
            else:
                tokens.append("%d:%s" % (g.tet,
                                         "".join(map(str, g.perm.images))))
        out.append(" ".join(tokens))
    return "\n".join(out) + "\n"

"""Line-oriented text formats and the shared report structure.

Every format starts with a kind line, then ``key: value`` headers, then
body lines.  ``#`` starts a comment anywhere on a line.

``semihypergroup``::

    semihypergroup
    elements: a b c
    table:
    a * a = a
    a * b = 1/2 a + 1/2 b
    ...

One line per ordered pair, all ``n^2`` pairs required.  Coefficients are
integers or ``p/q`` (an omitted coefficient is 1); decimal literals are
rejected.  An empty right-hand side is the zero measure.

``group``: ``elements:`` then ``table:`` lines ``x y = z``.
``subgroup``: just ``elements:``.
``map``: ``from: <file>``, ``to: <file>``, then lines ``x -> y``.
``action``: ``acting: <group file>``, ``target: <group file>``, then one
line per acting element ``h : a ; x -> y, ...``.  This encodes
``x^h = a psi_h(x)``; the ``; ...`` part lists ``psi_h`` and may be
omitted when ``psi_h`` is the identity.  Unlisted points are fixed.

File references are resolved relative to the referring file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .core import ConvolutionTable, ElementSet, Measure, Semihypergroup, check_axioms
from .errors import AxiomError, ParseError
from .groups import AffineAction, CayleyTable

__all__ = [
    "ShgDocument",
    "Report",
    "KINDS",
    "parse_document",
    "render_document",
    "document_from_semihypergroup",
    "document_from_group",
    "table_from_document",
    "parse_measure",
    "parse_table",
    "parse_shg",
    "render_shg",
    "parse_group",
    "render_group",
    "parse_subgroup",
    "parse_map",
    "parse_action",
    "load_semihypergroup",
    "load_table",
    "load_group",
    "load_subgroup",
    "load_map",
    "load_action",
]

KINDS = ("semihypergroup", "group", "subgroup", "map", "action")

_HEADERS = {
    "semihypergroup": ("elements",),
    "group": ("elements",),
    "subgroup": ("elements",),
    "map": ("from", "to"),
    "action": ("acting", "target"),
}
_HAS_TABLE = ("semihypergroup", "group")

_INT_OR_FRACTION = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+(?:\.\d*)?[eE][+-]?\d+)")


@dataclass(frozen=True)
class ShgDocument:
    """A parsed document.

    ``body`` rows by kind: ``(x, y, ((z, w), ...))`` for semihypergroups,
    ``(x, y, z)`` for groups, ``(x, y)`` for maps and
    ``(h, a, ((x, y), ...))`` for actions.  ``lines`` records the source
    line of each body row and does not take part in equality.
    """

    kind: str
    elements: tuple[str, ...]
    body: tuple = ()
    headers: tuple[tuple[str, str], ...] = ()
    lines: tuple[int, ...] = field(default=(), compare=False)

    def header(self, key: str) -> str:
        return dict(self.headers)[key]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _check_name(name: str, known: ElementSet | None, line: int, col: int) -> str:
    if not name:
        raise ParseError("missing element name", line, col)
    if known is not None and name not in known:
        raise ParseError(f"unknown element {name!r}", line, col)
    return name


def _coefficient(token: str, line: int, col: int) -> Fraction:
    if _INT_OR_FRACTION.fullmatch(token):
        try:
            return Fraction(token)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {token!r}", line, col) from None
    if _DECIMAL.fullmatch(token):
        raise ParseError(
            f"decimal literal {token!r} is not allowed; write weights as p/q", line, col
        )
    raise ParseError(f"bad coefficient {token!r}", line, col)


def _tokens(text: str, offset: int):
    """Whitespace-separated tokens with their 1-based columns."""
    return [(m.group(), offset + m.start() + 1) for m in re.finditer(r"\S+", text)]


def _parse_terms(rhs: str, offset: int, known: ElementSet, line: int):
    terms = []
    if not rhs.strip():
        return ()
    for m in re.finditer(r"[^+]+|\+", rhs):
        if m.group() == "+":
            continue
        toks = _tokens(m.group(), offset + m.start())
        if not toks:
            raise ParseError("empty term", line, offset + m.start() + 1)
        if len(toks) == 1:
            coef, (name, col) = Fraction(1), toks[0]
        elif len(toks) == 2:
            coef = _coefficient(toks[0][0], line, toks[0][1])
            name, col = toks[1]
        else:
            raise ParseError("a term is 'coefficient name' or 'name'", line, toks[2][1])
        terms.append((_check_name(name, known, line, col), coef))
    if re.search(r"\+\s*$|^\s*\+|\+\s*\+", rhs):
        raise ParseError("dangling '+'", line, offset + 1)
    # canonical form: repeated names merged, zero terms dropped, element order
    merged: dict[str, Fraction] = {}
    for name, coef in terms:
        merged[name] = merged.get(name, Fraction(0)) + coef
    return tuple((z, merged[z]) for z in known.names if merged.get(z))


def parse_measure(text: str, carrier: ElementSet) -> Measure:
    """Parse ``1/2 a + b`` (the right-hand-side syntax) into a measure."""
    return Measure.from_mapping(carrier, dict(_parse_terms(text, 0, carrier, 1)))


def _parse_body_line(kind, text, known, line):
    if kind == "semihypergroup":
        if "=" not in text:
            raise ParseError("expected 'x * y = terms'", line, 1)
        lhs, rhs = text.split("=", 1)
        if "*" not in lhs:
            raise ParseError("expected 'x * y' before '='", line, 1)
        left, right = lhs.split("*", 1)
        x = _tokens(left, 0)
        y = _tokens(right, len(left) + 1)
        if len(x) != 1 or len(y) != 1:
            raise ParseError("expected exactly one element on each side of '*'", line, 1)
        (xn, xc), (yn, yc) = x[0], y[0]
        return (
            _check_name(xn, known, line, xc),
            _check_name(yn, known, line, yc),
            _parse_terms(rhs, len(lhs) + 1, known, line),
        )
    if kind == "group":
        if "=" not in text:
            raise ParseError("expected 'x y = z'", line, 1)
        lhs, rhs = text.split("=", 1)
        left = _tokens(lhs, 0)
        right = _tokens(rhs, len(lhs) + 1)
        if len(left) != 2 or len(right) != 1:
            raise ParseError("expected 'x y = z'", line, 1)
        return tuple(_check_name(t, known, line, c) for t, c in left + right)
    if kind == "map":
        toks = _tokens(text, 0)
        if len(toks) != 3 or toks[1][0] != "->":
            raise ParseError("expected 'x -> y'", line, 1)
        return (toks[0][0], toks[2][0])
    if kind == "action":
        if ":" not in text:
            raise ParseError("expected 'h : a' or 'h : a ; x -> y, ...'", line, 1)
        head, rest = text.split(":", 1)
        h = _tokens(head, 0)
        translation, _, auto = rest.partition(";")
        a = _tokens(translation, len(head) + 1)
        if len(h) != 1 or len(a) != 1:
            raise ParseError("expected one acting element and one translation", line, 1)
        pairs = []
        base = len(head) + 1 + len(translation) + 1
        if auto.strip():
            for m in re.finditer(r"[^,]+", auto):
                toks = _tokens(m.group(), base + m.start())
                if len(toks) != 3 or toks[1][0] != "->":
                    raise ParseError("expected 'x -> y'", line, base + m.start() + 1)
                pairs.append((toks[0][0], toks[2][0]))
        return (h[0][0], a[0][0], tuple(pairs))
    raise ParseError(f"{kind} documents have no body", line, 1)


def parse_document(text: str) -> ShgDocument:
    """Syntax-level parse; no algebraic validation."""
    kind = None
    headers: dict[str, str] = {}
    elements: ElementSet | None = None
    in_table = False
    body = []
    lines = []
    seen_pairs: dict[tuple, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line.strip():
            continue
        if kind is None:
            word = line.strip()
            if word not in KINDS:
                raise ParseError(
                    f"unknown document kind {word!r}; expected one of {', '.join(KINDS)}",
                    number,
                    1,
                )
            kind = word
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not in_table and sep and key in _HEADERS[kind]:
            if key in headers:
                raise ParseError(f"duplicate header {key!r}", number, 1)
            headers[key] = value.strip()
            if key == "elements":
                try:
                    elements = ElementSet(tuple(value.split()))
                except ValueError as exc:
                    raise ParseError(str(exc), number, len(key) + 2) from None
                if not elements.names:
                    raise ParseError("empty element list", number, len(key) + 2)
            continue
        if not in_table and line.strip() == "table:":
            if kind not in _HAS_TABLE:
                raise ParseError(f"{kind} documents have no table", number, 1)
            if elements is None:
                raise ParseError("'elements:' must come before 'table:'", number, 1)
            in_table = True
            continue
        if kind in _HAS_TABLE and not in_table:
            raise ParseError(f"unexpected line {line.strip()!r}", number, 1)
        if kind == "subgroup":
            raise ParseError(f"unexpected line {line.strip()!r}", number, 1)
        if kind in ("map", "action"):
            missing = [h for h in _HEADERS[kind] if h not in headers]
            if missing:
                raise ParseError(f"header {missing[0]!r} must come first", number, 1)
        row = _parse_body_line(kind, line, elements, number)
        key = row[:2] if kind in _HAS_TABLE else row[:1]
        if key in seen_pairs:
            what = f"({key[0]}, {key[1]})" if len(key) == 2 else key[0]
            raise ParseError(f"duplicate entry for {what} (first on line {seen_pairs[key]})", number, 1)
        seen_pairs[key] = number
        body.append(row)
        lines.append(number)
    if kind is None:
        raise ParseError("empty document")
    for h in _HEADERS[kind]:
        if h not in headers:
            raise ParseError(f"missing header {h!r}")
    if kind in _HAS_TABLE:
        n = len(elements)
        if not in_table:
            raise ParseError("missing 'table:' section")
        missing = [
            (x, y) for x in elements for y in elements if (x, y) not in seen_pairs
        ]
        if missing:
            x, y = missing[0]
            raise ParseError(f"{len(missing)} of {n * n} products missing, first {x} * {y}")
    if kind in ("map", "action"):
        names = tuple(r[0] for r in body)
        header_rows = tuple((h, headers[h]) for h in _HEADERS[kind])
        return ShgDocument(kind, names, tuple(body), header_rows, tuple(lines))
    return ShgDocument(kind, elements.names, tuple(body), (), tuple(lines))


def _render_terms(terms) -> str:
    return " + ".join(name if w == 1 else f"{w} {name}" for name, w in terms)


def render_document(doc: ShgDocument) -> str:
    """Canonical text: headers in fixed order, rows in element order."""
    out = [doc.kind]
    out += [f"{k}: {v}" for k, v in doc.headers]
    if doc.kind in ("semihypergroup", "group", "subgroup"):
        out.append("elements: " + " ".join(doc.elements))
    pos = {name: i for i, name in enumerate(doc.elements)}
    if doc.kind in _HAS_TABLE:
        out.append("table:")
        for row in sorted(doc.body, key=lambda r: (pos[r[0]], pos[r[1]])):
            if doc.kind == "semihypergroup":
                x, y, terms = row
                terms = sorted(terms, key=lambda t: pos[t[0]])
                out.append(f"{x} * {y} = {_render_terms(terms)}".rstrip())
            else:
                out.append(f"{row[0]} {row[1]} = {row[2]}")
    elif doc.kind == "map":
        out += [f"{x} -> {y}" for x, y in doc.body]
    elif doc.kind == "action":
        for h, a, pairs in doc.body:
            line = f"{h} : {a}"
            if pairs:
                line += " ; " + ", ".join(f"{x} -> {y}" for x, y in pairs)
            out.append(line)
    return "\n".join(out) + "\n"


def document_from_semihypergroup(S: Semihypergroup | ConvolutionTable) -> ShgDocument:
    table = S.table if isinstance(S, Semihypergroup) else S
    names = table.carrier.names
    body = tuple(
        (names[x], names[y], tuple(table.entries[x][y].items()))
        for x in range(len(names))
        for y in range(len(names))
    )
    return ShgDocument("semihypergroup", names, body)


def document_from_group(G: CayleyTable) -> ShgDocument:
    names = G.names
    body = tuple(
        (names[x], names[y], names[G.product[x][y]])
        for x in range(len(names))
        for y in range(len(names))
    )
    return ShgDocument("group", names, body)


def _expect(doc: ShgDocument, kind: str) -> None:
    if doc.kind != kind:
        raise ParseError(f"expected a {kind} document, got {doc.kind}", 1, 1)


def table_from_document(doc: ShgDocument) -> ConvolutionTable:
    _expect(doc, "semihypergroup")
    carrier = ElementSet(doc.elements)
    products = {(x, y): dict(terms) for x, y, terms in doc.body}
    return ConvolutionTable.from_products(carrier, products)


def _pair_lines(doc: ShgDocument) -> dict[tuple[str, str], int]:
    return {(row[0], row[1]): ln for row, ln in zip(doc.body, doc.lines)}


def parse_table(text: str) -> tuple[ConvolutionTable, ShgDocument]:
    """Parse a semihypergroup document without checking the axioms."""
    doc = parse_document(text)
    return table_from_document(doc), doc


def axiom_failure_line(doc: ShgDocument, report) -> int | None:
    """Source line of the first product named by a failing report."""
    lines = _pair_lines(doc)
    if not report.a3_ok:
        return lines.get(report.a3_violation)
    if not report.a1_ok:
        return lines.get(report.a1_violation[:2])
    return None


def parse_shg(text: str) -> Semihypergroup:
    """Parse and validate; axiom failures name the offending line."""
    table, doc = parse_table(text)
    report = check_axioms(table)
    if not report.passed:
        line = axiom_failure_line(doc, report)
        where = f"line {line}: " if line is not None else ""
        raise AxiomError(report, where + report.summary())
    return Semihypergroup(table)


def render_shg(S: Semihypergroup | ConvolutionTable) -> str:
    return render_document(document_from_semihypergroup(S))


def parse_group(text: str) -> CayleyTable:
    doc = parse_document(text)
    _expect(doc, "group")
    carrier = ElementSet(doc.elements)
    table = [[None] * len(carrier) for _ in carrier]
    for x, y, z in doc.body:
        table[carrier.position(x)][carrier.position(y)] = z
    return CayleyTable.from_product(carrier, table)


def render_group(G: CayleyTable) -> str:
    return render_document(document_from_group(G))


def parse_subgroup(text: str) -> tuple[str, ...]:
    doc = parse_document(text)
    _expect(doc, "subgroup")
    return doc.elements


def parse_map(text: str) -> tuple[str, str, dict[str, str]]:
    """``(from, to, mapping)`` with the file references unresolved."""
    doc = parse_document(text)
    _expect(doc, "map")
    return doc.header("from"), doc.header("to"), dict(doc.body)


def parse_action(text: str, acting: CayleyTable, target: CayleyTable) -> AffineAction:
    """Build the action described by an action document over given groups."""
    doc = parse_document(text)
    _expect(doc, "action")
    return _action_from_document(doc, acting, target)


def _action_from_document(doc, acting: CayleyTable, target: CayleyTable) -> AffineAction:
    rows = dict(zip((r[0] for r in doc.body), zip(doc.body, doc.lines)))
    maps = []
    for h in acting.names:
        if h not in rows:
            raise ParseError(f"no line for acting element {h!r}")
        (_, a, pairs), line = rows[h]
        psi = list(range(len(target)))
        try:
            for x, y in pairs:
                psi[target.elements.position(x)] = target.elements.position(y)
            a_idx = target.elements.position(a)
        except KeyError as exc:
            raise ParseError(f"unknown target element {exc.args[0]!r}", line) from None
        maps.append((a_idx, tuple(psi)))
    extra = set(rows) - set(acting.names)
    if extra:
        raise ParseError(f"lines for unknown acting elements: {', '.join(sorted(extra))}")
    return AffineAction(acting, target, tuple(maps))


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_table(path) -> tuple[ConvolutionTable, ShgDocument]:
    return parse_table(_read(path))


def load_semihypergroup(path) -> Semihypergroup:
    return parse_shg(_read(path))


def load_group(path) -> CayleyTable:
    return parse_group(_read(path))


def load_subgroup(path) -> tuple[str, ...]:
    return parse_subgroup(_read(path))


def load_map(path) -> tuple[Path, Path, dict[str, str]]:
    src, dst, mapping = parse_map(_read(path))
    base = Path(path).parent
    return base / src, base / dst, mapping


def load_action(path) -> AffineAction:
    doc = parse_document(_read(path))
    _expect(doc, "action")
    base = Path(path).parent
    acting = load_group(base / doc.header("acting"))
    target = load_group(base / doc.header("target"))
    return _action_from_document(doc, acting, target)


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, (list, tuple)) for v in value):
            return ", ".join("{" + ", ".join(v) + "}" for v in value)
        return "{" + ", ".join(str(v) for v in value) + "}"
    if value is None:
        return "none"
    return str(value)


@dataclass
class Report:
    """Ordered ``(key, value)`` records behind both output formats.

    Values are strings, ints, bools, ``None``, lists of names (rendered as
    sets) or lists of such lists.
    """

    records: list[tuple[str, object]] = field(default_factory=list)

    def add(self, key: str, value) -> None:
        self.records.append((key, value))

    def extend(self, records) -> None:
        self.records.extend(records)

    def text(self) -> str:
        return "".join(f"{k}: {_text_value(v)}\n" for k, v in self.records)

    def json_lines(self) -> str:
        return "".join(json.dumps({"key": k, "value": v}) + "\n" for k, v in self.records)

    def render(self, fmt: str) -> str:
        return self.json_lines() if fmt == "json-lines" else self.text()

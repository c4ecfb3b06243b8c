"""Graphviz DOT output for all automata, and DFA import from DOT.

Supported input subset:

    digraph NAME {
      node [shape = doublecircle]; 4;        defaults followed by node lists
      2 [shape = circle];                     single nodes with attributes
      init [shape = point];  init -> 1;       a marker node points at the initial state
      1 -> 3 [label = "b & ~a"];              conjunctions of literals (&, ∧; ~, !, ¬)
    }

`doublecircle` marks accepting states. A label may be a disjunction of
conjunctions separated by `|`, `∨` or `\\n`; `true` or an empty label covers
every letter. With a variable order, MONA's bit-string labels (`0X1`) are
decoded too, and MONA's dummy initial state `0`, whose single unconditional
edge reads no position, is replaced by its successor. Letters left uncovered
go to an added rejecting sink.
"""

from __future__ import annotations

import re

from ..errors import DotFormatError
from ..logic.formula import ATOM_PATTERN, RESERVED_ATOM
from ..trace.model import SymbolTable
from .afw import Afw
from .dfa import Dfa, _edges_from_tree
from .guards import Guard, TRUE_GUARD, consistent, guard_text, tree_from_edges, tree_paths
from .nfa import Nfa

_MARKER_SHAPES = {"point", "box", "plaintext", "plain", "none"}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def afw_to_dot(afw: Afw) -> str:
    """States as circles; a conjunct with other than one successor goes through a ∀-node."""
    lines = ["digraph afw {", "  rankdir=LR;", "  init [shape=point];"]
    for q in range(len(afw.states)):
        lines.append(f"  {q} [shape=circle, label={_quote(afw.label(q))}];")
    lines.append(f"  init -> {afw.initial};")
    for q, conjuncts in enumerate(afw.delta):
        for c, conjunct in enumerate(conjuncts):
            label = _quote(guard_text(conjunct.conditions))
            if len(conjunct.successors) == 1:
                lines.append(f"  {q} -> {next(iter(conjunct.successors))} [label={label}];")
                continue
            hub = f"u{q}_{c}"
            lines.append(f'  {hub} [shape=box, label="∀"];')
            lines.append(f"  {q} -> {hub} [label={label}];")
            for successor in sorted(conjunct.successors):
                lines.append(f"  {hub} -> {successor};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def nfa_to_dot(nfa: Nfa) -> str:
    lines = ["digraph nfa {", "  rankdir=LR;", "  init [shape=point];"]
    for q in range(len(nfa.states)):
        shape = "doublecircle" if q in nfa.finals else "circle"
        lines.append(f"  {q} [shape={shape}, label={_quote(nfa.label(q))}];")
    for q in sorted(nfa.initial):
        lines.append(f"  init -> {q};")
    for source, guard, target in nfa.transitions:
        lines.append(f"  {source} -> {target} [label={_quote(guard_text(guard))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_to_dot(dfa: Dfa) -> str:
    lines = ["digraph dfa {", "  rankdir=LR;", "  init [shape=point];"]
    for q in range(dfa.size):
        shape = "doublecircle" if q in dfa.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append(f"  init -> {dfa.initial};")
    for q, out in enumerate(dfa.edges):
        for guard, target in out:
            lines.append(f"  {q} -> {target} [label={_quote(guard_text(guard))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ #
#  Import                                                             #
# ------------------------------------------------------------------ #
_ID = r'(?:"[^"]*"|[A-Za-z0-9_.]+)'
_EDGE = re.compile(rf"^({_ID})\s*->\s*({_ID})\s*(?:\[(.*)\])?$", re.S)
_NODE = re.compile(rf"^({_ID})\s*(?:\[(.*)\])?$", re.S)
_DEFAULTS = re.compile(r"^(node|edge|graph)\s*\[(.*)\]$", re.S)
_GRAPH_ATTR = re.compile(r"^[A-Za-z_]+\s*=")
_ATTR = re.compile(r'([A-Za-z_]+)\s*=\s*("(?:[^"\\]|\\.)*"|[^,;\s\]]+)')
_BITS = re.compile(r"^[01X]+$")


def _statements(text: str) -> list[tuple[int, str]]:
    """Split the graph body into (line, statement) at `;` and newlines outside quotes."""
    open_at = text.find("{")
    close_at = text.rfind("}")
    if not re.match(r"\s*(strict\s+)?digraph\b", text) or open_at < 0 or close_at < open_at:
        raise DotFormatError("expected 'digraph NAME { ... }'", 1)
    line = text.count("\n", 0, open_at) + 1
    statements, current, start, quoted, escaped = [], [], line, False, False
    for char in text[open_at + 1:close_at]:
        if quoted:
            current.append(char)
            if escaped:
                escaped = False
            elif char == "\\":
                escaped = True
            elif char == '"':
                quoted = False
            if char == "\n":
                line += 1
            continue
        if char == '"':
            quoted = True
            current.append(char)
        elif char in ";\n":
            statement = "".join(current).strip()
            if statement and not statement.startswith(("//", "#")):
                statements.append((start, statement))
            current = []
            if char == "\n":
                line += 1
            start = line
        else:
            if not current or not "".join(current).strip():
                start = line
            current.append(char)
    statement = "".join(current).strip()
    if statement:
        statements.append((start, statement))
    return statements


def _attributes(text: str | None) -> dict[str, str]:
    if not text:
        return {}
    attrs = {}
    for key, value in _ATTR.findall(text):
        if value.startswith('"'):
            value = value[1:-1].replace('\\"', '"')
        attrs[key] = value
    return attrs


def _node_id(token: str) -> str:
    return token[1:-1] if token.startswith('"') else token


def _parse_label(label: str, line: int, variable_order: list[str] | None) -> list[Guard]:
    """Label text as a list of alternative guards."""
    guards = []
    for part in re.split(r"\\n|\n|\||∨|,", label):
        part = part.strip()
        if part in ("", "true", "⊤"):
            guards.append(TRUE_GUARD)
            continue
        if variable_order is not None and _BITS.match(part):
            if len(part) != len(variable_order):
                raise DotFormatError(f"bit label {part!r} does not fit {len(variable_order)} variables", line)
            guards.append(frozenset((name, bit == "1")
                                    for name, bit in zip(variable_order, part) if bit != "X"))
            continue
        literals = set()
        for raw in re.split(r"&|∧", part):
            literal = raw.strip()
            polarity = True
            while literal[:1] in ("~", "!", "¬"):
                polarity = not polarity
                literal = literal[1:].strip()
            if not ATOM_PATTERN.match(literal) or literal == RESERVED_ATOM:
                raise DotFormatError(f"bad literal {raw.strip()!r} in label {label!r}", line)
            literals.add((literal, polarity))
        if not consistent(literals):
            raise DotFormatError(f"contradictory label {label!r}", line)
        guards.append(frozenset(literals))
    return guards


def _drop_mona_dummy(start: str, states: list[str], edges: dict[str, list[tuple[Guard, str]]]) -> str:
    """MONA's state 0 reads no letter: an unconditional edge into the real initial state."""
    out = edges[start]
    targets = {target for _, target in out}
    entered = any(target == start for n in states for _, target in edges[n])
    if start != "0" or len(targets) != 1 or entered or any(guard != TRUE_GUARD for guard, _ in out):
        return start
    states.remove(start)
    del edges[start]
    return targets.pop()


def dfa_from_dot(text: str, atoms: list[str] | None = None,
                 variable_order: list[str] | None = None) -> Dfa:
    """Read a DFA in the supported DOT subset; see the module docstring."""
    default_shape = "circle"
    shapes: dict[str, str] = {}
    order_seen: list[str] = []
    initial: list[str] = []
    raw_edges: list[tuple[int, str, str, list[Guard]]] = []

    def declare(name: str, shape: str | None):
        if name not in shapes:
            order_seen.append(name)
            shapes[name] = shape or default_shape
        elif shape is not None:
            shapes[name] = shape

    for line, statement in _statements(text):
        if match := _DEFAULTS.match(statement):
            if match.group(1) == "node":
                default_shape = _attributes(match.group(2)).get("shape", default_shape)
            continue
        if match := _EDGE.match(statement):
            source, target = _node_id(match.group(1)), _node_id(match.group(2))
            attrs = _attributes(match.group(3))
            declare(source, None)
            declare(target, None)
            raw_edges.append((line, source, target,
                              _parse_label(attrs.get("label", ""), line, variable_order)))
            continue
        if _GRAPH_ATTR.match(statement):
            continue
        if match := _NODE.match(statement):
            declare(_node_id(match.group(1)), _attributes(match.group(2)).get("shape"))
            continue
        raise DotFormatError(f"unsupported statement: {statement}", line)

    markers = {n for n, shape in shapes.items() if shape in _MARKER_SHAPES or n == "init"}
    states = [n for n in order_seen if n not in markers]
    edges: dict[str, list[tuple[Guard, str]]] = {n: [] for n in states}
    for line, source, target, guards in raw_edges:
        if source in markers:
            if target in markers:
                raise DotFormatError("edge between marker nodes", line)
            initial.append(target)
            continue
        if target in markers:
            raise DotFormatError(f"edge into marker node {target}", line)
        edges[source].extend((guard, target) for guard in guards)
    if len(set(initial)) != 1:
        raise DotFormatError(f"expected exactly one initial state, found {len(set(initial))}")
    start = initial[0]
    if variable_order is not None:
        start = _drop_mona_dummy(start, states, edges)

    mentioned = {name for out in edges.values() for guard, _ in out for name, _ in guard}
    symbols = SymbolTable.for_atoms(set(atoms or ()) | mentioned | set(variable_order or ()))
    order = list(symbols.atoms)

    def clash(values: list) -> str:
        raise DotFormatError(f"overlapping edges lead to different states: {sorted(values)}")

    sink = object()
    trees = {n: tree_from_edges(edges[n], order, default=sink, on_overlap=clash) for n in states}
    needs_sink = any(value is sink for tree in trees.values() for _, value in tree_paths(tree))
    ids: dict[object, int] = {n: i for i, n in enumerate(states)}
    labels = list(states)
    if needs_sink:
        ids[sink] = len(states)
        labels.append("sink")
    out = [_edges_from_tree(trees[n], ids) for n in states]
    if needs_sink:
        out.append(((TRUE_GUARD, ids[sink]),))
    finals = frozenset(ids[n] for n in states if shapes[n] == "doublecircle")
    return Dfa(symbols, ids[start], tuple(out), finals, tuple(labels))

"""HOA v1 input and output.

The parser handles the subset of the format that transition-based
Emerson-Lei automata need: explicit and implicit edges, aliases,
state-based acceptance signatures (pushed onto the outgoing edges),
multiple Start: lines, and block comments.  Alternation (conjunctions in
Start: or edge destinations), state labels, complemented acceptance sets
like Fin(!0), and the constant acceptance formulas t/f are rejected with
a position-carrying error.

Serialization is deterministic: transitions are written in construction
order with minterm labels, so equal automata always produce identical
bytes.
"""

from __future__ import annotations

from .acceptance import And, Fin, Inf, Or, format_acc, leaf_colours, parse_acc
from .automata import MAX_AP, TELA, Alphabet, Transition

__all__ = ["HoaParseError", "parse_hoa", "serialize_hoa"]

TOOL_NAME = "buchicompl"


class HoaParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind: str, value, line: int, col: int):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"_Token({self.kind}, {self.value!r})"


_PUNCT = set("[](){}&|!")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)

    def err(msg):
        raise HoaParseError(msg, line, col)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end == -1:
                err("unterminated comment")
            skipped = text[i : end + 2]
            line += skipped.count("\n")
            if "\n" in skipped:
                col = len(skipped) - skipped.rfind("\n")
            else:
                col += len(skipped)
            i = end + 2
            continue
        start_line, start_col = line, col
        if ch == '"':
            j = i + 1
            out = []
            while j < n and text[j] != '"':
                if text[j] == "\\" and j + 1 < n:
                    out.append(text[j + 1])
                    j += 2
                else:
                    if text[j] == "\n":
                        err("newline in string")
                    out.append(text[j])
                    j += 1
            if j >= n:
                err("unterminated string")
            tokens.append(_Token("string", "".join(out), start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), start_line, start_col))
            col += j - i
            i = j
            continue
        if ch == "@":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            if j == i + 1:
                err("empty alias name")
            tokens.append(_Token("alias", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch in "_-":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            word = text[i:j]
            if j < n and text[j] == ":":
                tokens.append(_Token("header", word, start_line, start_col))
                j += 1
            else:
                tokens.append(_Token("ident", word, start_line, start_col))
            col += j - i
            i = j
            continue
        err(f"unexpected character {ch!r}")
    tokens.append(_Token("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def err(self, msg: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise HoaParseError(msg, tok.line, tok.col)

    def expect(self, kind: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            self.err(f"expected {kind}, got {t.value!r}")
        return self.next()


def _parse_label(p: _Parser, n_ap: int, aliases: dict[str, tuple[int, ...]]):
    """Parse a boolean label expression and return the tuple of symbols
    (valuation bitmasks) it covers."""
    n_syms = 1 << n_ap

    def parse_or():
        acc = parse_and()
        while p.peek().kind == "|":
            p.next()
            rhs = parse_and()
            acc = tuple(
                s for s in range(n_syms) if s in set(acc) or s in set(rhs)
            )
        return acc

    def parse_and():
        acc = parse_not()
        while p.peek().kind == "&":
            p.next()
            rhs = set(parse_not())
            acc = tuple(s for s in acc if s in rhs)
        return acc

    def parse_not():
        if p.peek().kind == "!":
            p.next()
            inner = set(parse_not())
            return tuple(s for s in range(n_syms) if s not in inner)
        return parse_atom()

    def parse_atom():
        t = p.peek()
        if t.kind == "(":
            p.next()
            inner = parse_or()
            p.expect(")")
            return inner
        if t.kind == "int":
            p.next()
            if t.value >= n_ap:
                p.err(f"AP index {t.value} out of range", t)
            return tuple(s for s in range(n_syms) if s >> t.value & 1)
        if t.kind == "ident" and t.value == "t":
            p.next()
            return tuple(range(n_syms))
        if t.kind == "ident" and t.value == "f":
            p.next()
            return ()
        if t.kind == "alias":
            p.next()
            got = aliases.get(t.value)
            if got is None:
                p.err(f"unknown alias {t.value}", t)
            return got
        p.err(f"unexpected token {t.value!r} in label")

    return parse_or()


def _parse_acc_sig(p: _Parser, n_colours: int) -> frozenset[int]:
    p.expect("{")
    out = set()
    while p.peek().kind == "int":
        t = p.next()
        if t.value >= n_colours:
            p.err(f"acceptance set {t.value} out of range", t)
        out.add(t.value)
    p.expect("}")
    return frozenset(out)


def parse_hoa(text: str) -> TELA:
    p = _Parser(text)
    first = p.expect("header")
    if first.value != "HOA":
        p.err("file must start with HOA: v1", first)
    version = p.expect("ident")
    if version.value != "v1":
        p.err(f"unsupported HOA version {version.value!r}", version)

    n_states: int | None = None
    initial: set[int] = set()
    ap: tuple[str, ...] | None = None
    n_colours: int | None = None
    acceptance = None
    aliases: dict[str, tuple[int, ...]] = {}
    pending_aliases: list[tuple[_Token, int]] = []

    # Header section.
    while True:
        t = p.peek()
        if t.kind == "ident" and t.value == "--BODY--":
            p.next()
            break
        if t.kind == "eof":
            p.err("missing --BODY--")
        if t.kind != "header":
            p.err(f"expected a header item, got {t.value!r}")
        p.next()
        key = t.value
        if key == "States":
            n_states = p.expect("int").value
        elif key == "Start":
            s = p.expect("int")
            if p.peek().kind == "&":
                p.err("alternating automata are not supported")
            initial.add(s.value)
        elif key == "AP":
            count = p.expect("int").value
            if count > MAX_AP:
                p.err(f"too many atomic propositions ({count} > {MAX_AP})", t)
            names = []
            for _ in range(count):
                names.append(p.expect("string").value)
            ap = tuple(names)
        elif key == "Acceptance":
            n_colours = p.expect("int").value
            parts = []
            depth = 0
            while True:
                nt = p.peek()
                if nt.kind in ("header", "eof"):
                    break
                if nt.kind == "ident" and nt.value == "--BODY--" and depth == 0:
                    break
                if nt.kind == "(":
                    depth += 1
                if nt.kind == ")":
                    depth -= 1
                if nt.kind == "!":
                    p.err("complemented acceptance sets are not supported")
                parts.append(nt)
                p.next()
            formula = " ".join(str(x.value) for x in parts)
            try:
                acceptance = parse_acc(formula)
            except ValueError as e:
                p.err(str(e), t)
        elif key == "Alias":
            name = p.peek()
            if name.kind != "alias":
                p.err("Alias: needs an @name")
            p.next()
            pending_aliases.append((name, p.pos))
            # Skip the expression for now; aliases may reference APs that
            # are declared later, so they are resolved before the body.
            depth = 0
            while True:
                nt = p.peek()
                if nt.kind in ("header", "eof"):
                    break
                if nt.kind == "ident" and nt.value == "--BODY--" and depth == 0:
                    break
                if nt.kind == "(":
                    depth += 1
                if nt.kind == ")":
                    depth -= 1
                p.next()
        elif key in ("tool", "name", "acc-name", "properties"):
            while p.peek().kind in ("ident", "string", "int") and not (
                p.peek().kind == "ident" and p.peek().value == "--BODY--"
            ):
                p.next()
        else:
            # Unknown headers are ignored per the format's extension rule.
            while p.peek().kind in (
                "ident", "string", "int", "!", "&", "|", "(", ")", "alias",
            ) and not (
                p.peek().kind == "ident" and p.peek().value == "--BODY--"
            ):
                p.next()

    if n_states is None:
        p.err("missing States: header")
    if n_colours is None or acceptance is None:
        p.err("missing Acceptance: header")
    if ap is None:
        ap = ()
    alphabet = Alphabet(ap)
    if any(c >= n_colours for c in leaf_colours(acceptance)):
        p.err("acceptance formula references an undeclared set")

    for name_tok, pos in pending_aliases:
        saved = p.pos
        p.pos = pos
        aliases[name_tok.value] = _parse_label(p, len(ap), aliases)
        p.pos = saved

    transitions: list[Transition] = []
    state_sets: dict[int, frozenset[int]] = {}
    names: dict[int, str] = {}
    seen_states: set[int] = set()
    cur: int | None = None
    implicit_count = 0

    while True:
        t = p.peek()
        if t.kind == "ident" and t.value == "--END--":
            p.next()
            break
        if t.kind == "eof":
            p.err("missing --END--")
        if t.kind == "header" and t.value == "State":
            p.next()
            if p.peek().kind == "[":
                p.err("state labels are not supported")
            sid = p.expect("int")
            if not (0 <= sid.value < n_states):
                p.err(f"state id {sid.value} out of range", sid)
            if sid.value in seen_states:
                p.err(f"state {sid.value} defined twice", sid)
            seen_states.add(sid.value)
            cur = sid.value
            implicit_count = 0
            if p.peek().kind == "string":
                names[cur] = p.next().value
            if p.peek().kind == "{":
                state_sets[cur] = _parse_acc_sig(p, n_colours)
            continue
        if cur is None:
            p.err("edge before any State: line")
        if t.kind == "[":
            p.next()
            syms = _parse_label(p, len(ap), aliases)
            p.expect("]")
            dst = p.expect("int")
            if not (0 <= dst.value < n_states):
                p.err(f"destination {dst.value} out of range", dst)
            if p.peek().kind == "&":
                p.err("alternating automata are not supported")
            colours = frozenset()
            if p.peek().kind == "{":
                colours = _parse_acc_sig(p, n_colours)
            for s in syms:
                transitions.append(Transition(cur, s, dst.value, colours))
            continue
        if t.kind == "int":
            # Implicit labels: one edge per symbol in numeric order.
            dst = p.next()
            if not (0 <= dst.value < n_states):
                p.err(f"destination {dst.value} out of range", dst)
            if p.peek().kind == "&":
                p.err("alternating automata are not supported")
            if implicit_count >= alphabet.size:
                p.err("too many implicit edges for this alphabet", dst)
            colours = frozenset()
            if p.peek().kind == "{":
                colours = _parse_acc_sig(p, n_colours)
            transitions.append(
                Transition(cur, implicit_count, dst.value, colours)
            )
            implicit_count += 1
            continue
        p.err(f"unexpected token {t.value!r} in body")

    if p.peek().kind != "eof":
        p.err("content after --END--")
    for q in initial:
        if not (0 <= q < n_states):
            raise HoaParseError(f"initial state {q} out of range", 1, 1)

    if state_sets:
        transitions = [
            Transition(
                t.src,
                t.sym,
                t.dst,
                t.colours | state_sets.get(t.src, frozenset()),
            )
            for t in transitions
        ]
    state_names = None
    if names:
        state_names = tuple(
            names.get(q, str(q)) for q in range(n_states)
        )
    return TELA(
        n_states=n_states,
        alphabet=alphabet,
        transitions=tuple(transitions),
        initial=frozenset(initial),
        n_colours=n_colours,
        acceptance=acceptance,
        state_names=state_names,
    )


def _acc_name(tela: TELA) -> str | None:
    if tela.acceptance == Inf(0) and tela.n_colours == 1:
        return "Buchi"
    if tela.acceptance == Fin(0) and tela.n_colours == 1:
        return "co-Buchi"
    # And-chain of distinct Inf atoms covering 0..k-1.
    atoms = []
    stack = [tela.acceptance]
    while stack:
        node = stack.pop()
        if isinstance(node, And):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Inf):
            atoms.append(node.colour)
        else:
            return None
    if sorted(atoms) == list(range(tela.n_colours)):
        return f"generalized-Buchi {tela.n_colours}"
    return None


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def serialize_hoa(tela: TELA, name: str | None = None) -> str:
    lines = ["HOA: v1", f"tool: {_quote(TOOL_NAME)}"]
    if name is not None:
        lines.append(f"name: {_quote(name)}")
    lines.append(f"States: {tela.n_states}")
    for q in sorted(tela.initial):
        lines.append(f"Start: {q}")
    lines.append(
        f"AP: {len(tela.alphabet.ap)}"
        + "".join(" " + _quote(a) for a in tela.alphabet.ap)
    )
    lines.append(f"Acceptance: {tela.n_colours} {format_acc(tela.acceptance)}")
    acc_name = _acc_name(tela)
    if acc_name is not None:
        lines.append(f"acc-name: {acc_name}")
    lines.append("properties: trans-labels explicit-labels trans-acc")
    lines.append("--BODY--")
    by_src: dict[int, list[Transition]] = {q: [] for q in range(tela.n_states)}
    for t in tela.transitions:
        by_src[t.src].append(t)
    for q in range(tela.n_states):
        head = f"State: {q}"
        if tela.state_names is not None:
            head += " " + _quote(tela.state_names[q])
        lines.append(head)
        for t in by_src[q]:
            sig = ""
            if t.colours:
                sig = " {" + " ".join(str(c) for c in sorted(t.colours)) + "}"
            lines.append(f"[{tela.alphabet.symbol_label(t.sym)}] {t.dst}{sig}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"

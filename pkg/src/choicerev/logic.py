"""Propositional formulas, belief bases and classical consequence.

Formulas are immutable trees; belief bases are finite sets of formulas
under structural identity.  Every consequence predicate decides its
question by enumerating all valuations over the atoms involved.  The
enumeration is bit-parallel: a formula's truth table over ``n`` atoms is
packed into an integer with ``2**n`` bits, so a set of formulas is
satisfiable iff the AND of its tables is nonzero.
"""

from __future__ import annotations

import contextlib
import contextvars
import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Formula", "Atom", "Top", "Bottom", "Not", "And", "Or", "Implies", "Iff",
    "TOP", "BOTTOM", "BeliefBase", "Valuation", "Caps", "use_caps", "current_caps",
    "CapacityError", "ParseError", "parse_formula", "atom_universe",
    "valuations", "evaluate", "is_consistent", "entails", "implies_some",
    "implies_all", "equivalent", "equivalent_sets", "conjunction_of",
    "disjunction_of", "negate", "truth_table",
]


class CapacityError(ValueError):
    """An input exceeds one of the configured enumeration caps."""


class ParseError(ValueError):
    """Malformed formula text.

    ``offset`` is a byte offset into the UTF-8 encoding of the input.
    """

    def __init__(self, message: str, offset: int, expected: str | None = None):
        self.message = message
        self.offset = offset
        self.expected = expected
        detail = f"{message} at byte {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


# ---------------------------------------------------------------------------
# Caps

@dataclass(frozen=True)
class Caps:
    atoms: int = 16
    remainder_base: int = 14
    partial_sum: int = 12
    negation: int = 10


_CAPS: contextvars.ContextVar[Caps] = contextvars.ContextVar("choicerev_caps", default=Caps())


def current_caps() -> Caps:
    return _CAPS.get()


@contextlib.contextmanager
def use_caps(**overrides: int) -> Iterator[Caps]:
    """Temporarily override enumeration caps for the current context."""
    caps = Caps(**{**current_caps().__dict__, **overrides})
    token = _CAPS.set(caps)
    try:
        yield caps
    finally:
        _CAPS.reset(token)


# ---------------------------------------------------------------------------
# Formula AST

_PREC = {"Iff": 1, "Implies": 2, "Or": 3, "And": 4}


class Formula:
    """Base class of formula nodes.

    Ordering between formulas is the ordering of their canonical text.
    """

    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError

    def __str__(self) -> str:
        return _render(self)

    def __lt__(self, other: Formula) -> bool:
        return str(self) < str(other)

    def __le__(self, other: Formula) -> bool:
        return str(self) <= str(other)

    def __gt__(self, other: Formula) -> bool:
        return str(self) > str(other)

    def __ge__(self, other: Formula) -> bool:
        return str(self) >= str(other)

    # Connective sugar for building formulas in code and tests.
    def __invert__(self) -> Formula:
        return Not(self)

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __rshift__(self, other: Formula) -> Formula:
        return Implies(self, other)


@dataclass(frozen=True, eq=True, repr=False, order=False)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _IDENT.fullmatch(self.name) or self.name in _KEYWORDS:
            raise ValueError(f"invalid atom name {self.name!r}")

    def atoms(self):
        return frozenset((self.name,))

    def __repr__(self):
        return f"Atom({self.name!r})"


@dataclass(frozen=True, eq=True, repr=False, order=False)
class Top(Formula):
    def atoms(self):
        return frozenset()

    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, eq=True, repr=False, order=False)
class Bottom(Formula):
    def atoms(self):
        return frozenset()

    def __repr__(self):
        return "Bottom()"


@dataclass(frozen=True, eq=True, repr=False, order=False)
class Not(Formula):
    child: Formula

    def atoms(self):
        return self.child.atoms()

    def __repr__(self):
        return f"Not({self.child!r})"


@dataclass(frozen=True, eq=True, repr=False, order=False)
class _Binary(Formula):
    left: Formula
    right: Formula

    def atoms(self):
        return self.left.atoms() | self.right.atoms()

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class And(_Binary):
    pass


class Or(_Binary):
    pass


class Implies(_Binary):
    pass


class Iff(_Binary):
    pass


TOP = Top()
BOTTOM = Bottom()

_SYMBOL = {"And": "&", "Or": "|", "Implies": "->", "Iff": "<->"}


@functools.lru_cache(maxsize=1 << 16)
def _render(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        inner = _render(f.child)
        return "~" + (f"({inner})" if isinstance(f.child, _Binary) else inner)
    kind = type(f).__name__
    prec = _PREC[kind]
    left, right = _render(f.left), _render(f.right)
    if _needs_parens(f.left, prec, kind, "left"):
        left = f"({left})"
    if _needs_parens(f.right, prec, kind, "right"):
        right = f"({right})"
    return f"{left} {_SYMBOL[kind]} {right}"


def _needs_parens(child: Formula, prec: int, kind: str, side: str) -> bool:
    if not isinstance(child, _Binary):
        return False
    cprec = _PREC[type(child).__name__]
    if cprec != prec:
        return cprec < prec
    # Same connective: & and | associate left, -> and <-> associate right.
    if kind in ("And", "Or"):
        return side == "right"
    return side == "left"


def negate(f: Formula) -> Formula:
    return Not(f)


def conjunction_of(base: Iterable[Formula]) -> Formula:
    """Right-nested conjunction of ``base`` in canonical order."""
    members = sorted(BeliefBase(base))
    if not members:
        raise ValueError("conjunction of an empty set")
    return functools.reduce(lambda acc, f: And(f, acc), reversed(members[:-1]), members[-1])


def disjunction_of(formulas: Sequence[Formula]) -> Formula:
    """Left-nested disjunction of ``formulas`` in the given order."""
    if not formulas:
        raise ValueError("disjunction of an empty sequence")
    return functools.reduce(Or, formulas)


# ---------------------------------------------------------------------------
# Parser

_IDENT = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")
_KEYWORDS = frozenset({"true", "false"})

_TOKEN_SPEC = [
    ("WS", r"\s+"),
    ("IFF", r"<->|↔"),
    ("IMP", r"->|→"),
    ("AND", r"&|∧"),
    ("OR", r"\||∨"),
    ("NOT", r"~|¬|!"),
    ("TOP", r"⊤"),
    ("BOT", r"⊥"),
    ("LP", r"\("),
    ("RP", r"\)"),
    ("ID", _IDENT.pattern),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in _TOKEN_SPEC))


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize())
        self.i = 0

    def _offset(self, pos: int) -> int:
        return len(self.text[:pos].encode("utf-8"))

    def _tokenize(self) -> Iterator[_Token]:
        pos = 0
        while pos < len(self.text):
            m = _TOKEN_RE.match(self.text, pos)
            if m is None:
                raise ParseError(f"unexpected character {self.text[pos]!r}", self._offset(pos),
                                 "a formula token")
            if m.lastgroup != "WS":
                kind = m.lastgroup
                if kind == "ID" and m.group() == "true":
                    kind = "TOP"
                elif kind == "ID" and m.group() == "false":
                    kind = "BOT"
                yield _Token(kind, m.group(), pos)
            pos = m.end()
        yield _Token("EOF", "", len(self.text))

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: str, expected: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(tok, expected)
        self.i += 1
        return tok

    def fail(self, tok: _Token, expected: str):
        what = "end of input" if tok.kind == "EOF" else f"{tok.text!r}"
        raise ParseError(f"unexpected {what}", self._offset(tok.pos), expected)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek().kind != "EOF":
            self.fail(self.peek(), "a binary connective or end of input")
        return f

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek().kind == "IFF":
            self.i += 1
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disj()
        if self.peek().kind == "IMP":
            self.i += 1
            return Implies(left, self.implies())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek().kind == "OR":
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "AND":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.i += 1
            return Not(self.unary())
        if tok.kind == "ID":
            self.i += 1
            return Atom(tok.text)
        if tok.kind == "TOP":
            self.i += 1
            return TOP
        if tok.kind == "BOT":
            self.i += 1
            return BOTTOM
        if tok.kind == "LP":
            self.i += 1
            f = self.iff()
            self.take("RP", "')'")
            return f
        self.fail(tok, "an atom, constant, negation or '('")


def parse_formula(text: str) -> Formula:
    """Parse formula text.

    Precedence from tightest: negation, ``&``, ``|``, ``->``, ``<->``.
    ``&`` and ``|`` associate left; ``->`` and ``<->`` associate right.
    Unicode connectives and ``⊤``/``⊥`` are accepted alongside ASCII.

    >>> parse_formula("p | q & r")
    Or(Atom('p'), And(Atom('q'), Atom('r')))
    """
    return _Parser(text).parse()


def _coerce(f: Union[Formula, str]) -> Formula:
    return parse_formula(f) if isinstance(f, str) else f


# ---------------------------------------------------------------------------
# Belief bases

class BeliefBase:
    """Finite set of formulas under structural identity.

    Iteration follows canonical formula order.  Strings are parsed on
    construction, so ``BeliefBase(["p", "p -> q"])`` works.
    """

    __slots__ = ("_set", "_order", "_hash")

    def __init__(self, formulas: Iterable[Union[Formula, str]] = ()):
        self._set = frozenset(_coerce(f) for f in formulas)
        self._order: tuple[Formula, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, fs: frozenset) -> BeliefBase:
        obj = cls.__new__(cls)
        obj._set, obj._order, obj._hash = fs, None, None
        return obj

    @property
    def formulas(self) -> tuple[Formula, ...]:
        if self._order is None:
            self._order = tuple(sorted(self._set, key=str))
        return self._order

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self._set)

    def __contains__(self, f: object) -> bool:
        return f in self._set

    def __bool__(self) -> bool:
        return bool(self._set)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BeliefBase):
            return self._set == other._set
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._set)
        return self._hash

    def __le__(self, other: BeliefBase) -> bool:
        return self._set <= _fs(other)

    def __lt__(self, other: BeliefBase) -> bool:
        return self._set < _fs(other)

    def __ge__(self, other: BeliefBase) -> bool:
        return self._set >= _fs(other)

    def __gt__(self, other: BeliefBase) -> bool:
        return self._set > _fs(other)

    def __or__(self, other) -> BeliefBase:
        return BeliefBase._wrap(self._set | _fs(other))

    def __and__(self, other) -> BeliefBase:
        return BeliefBase._wrap(self._set & _fs(other))

    def __sub__(self, other) -> BeliefBase:
        return BeliefBase._wrap(self._set - _fs(other))

    def isdisjoint(self, other) -> bool:
        return self._set.isdisjoint(_fs(other))

    def add(self, *formulas: Union[Formula, str]) -> BeliefBase:
        return self | BeliefBase(formulas)

    def texts(self) -> list[str]:
        return [str(f) for f in self]

    def sort_key(self) -> tuple[str, ...]:
        return tuple(self.texts())

    def __repr__(self) -> str:
        return "BeliefBase([" + ", ".join(repr(str(f)) for f in self) + "])"

    def __str__(self) -> str:
        return "{" + ", ".join(self.texts()) + "}"


def _fs(x) -> frozenset:
    if isinstance(x, BeliefBase):
        return x._set
    return frozenset(_coerce(f) for f in x)


# ---------------------------------------------------------------------------
# Semantics

@dataclass(frozen=True)
class Valuation:
    """Truth assignment over a fixed atom universe."""

    assignment: Mapping[str, bool] = field(default_factory=dict)

    def __getitem__(self, atom: str) -> bool:
        return self.assignment[atom]

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self.assignment)


def valuations(universe: Sequence[str]) -> Iterator[Valuation]:
    """All ``2**len(universe)`` valuations.

    Valuation ``v`` gives atom ``i`` the value of bit ``i`` of ``v``, the same
    order as the bits of :func:`truth_table`.
    """
    universe = list(universe)
    for v in range(1 << len(universe)):
        yield Valuation({a: bool(v >> i & 1) for i, a in enumerate(universe)})


def evaluate(f: Formula, v: Valuation) -> bool:
    """Truth value of ``f`` under ``v`` (plain recursive evaluation)."""
    if isinstance(f, Atom):
        return v[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not evaluate(f.child, v)
    a, b = evaluate(f.left, v), evaluate(f.right, v)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    return a == b


def atom_universe(bases: Iterable[Iterable[Formula]]) -> tuple[str, ...]:
    """Sorted atoms occurring in any formula of any base."""
    atoms: set[str] = set()
    for base in bases:
        for f in base:
            atoms |= f.atoms()
    cap = current_caps().atoms
    if len(atoms) > cap:
        raise CapacityError(f"atom universe of size {len(atoms)} exceeds cap {cap}")
    return tuple(sorted(atoms))


@functools.lru_cache(maxsize=64)
def _atom_masks(n: int) -> tuple[int, ...]:
    # Bit v of atom i's mask is bit i of valuation index v.
    size = 1 << n
    masks = []
    for i in range(n):
        block = (1 << (1 << i)) - 1          # 2**i ones
        period = block << (1 << i)           # ones in the upper half of each 2**(i+1) block
        m = 0
        step = 1 << (i + 1)
        for start in range(0, size, step):
            m |= period << start
        masks.append(m)
    return tuple(masks)


@functools.lru_cache(maxsize=1 << 18)
def truth_table(f: Formula, universe: tuple[str, ...]) -> int:
    """Models of ``f`` over ``universe`` packed into a ``2**n``-bit integer."""
    full = (1 << (1 << len(universe))) - 1
    if isinstance(f, Atom):
        return _atom_masks(len(universe))[universe.index(f.name)]
    if isinstance(f, Top):
        return full
    if isinstance(f, Bottom):
        return 0
    if isinstance(f, Not):
        return full ^ truth_table(f.child, universe)
    a, b = truth_table(f.left, universe), truth_table(f.right, universe)
    if isinstance(f, And):
        return a & b
    if isinstance(f, Or):
        return a | b
    if isinstance(f, Implies):
        return (full ^ a) | b
    return full ^ (a ^ b)


class Semantics:
    """Truth tables of formulas over one fixed universe."""

    __slots__ = ("universe", "full")

    def __init__(self, *bases: Iterable[Formula]):
        self.universe = atom_universe(bases)
        self.full = (1 << (1 << len(self.universe))) - 1

    def table(self, f: Formula) -> int:
        return truth_table(f, self.universe)

    def models(self, base: Iterable[Formula]) -> int:
        m = self.full
        for f in base:
            m &= self.table(f)
        return m

    def entails(self, models: int, f: Formula) -> bool:
        return models & ~self.table(f) == 0


def is_consistent(base: Iterable[Formula]) -> bool:
    """True iff some valuation satisfies every member of ``base``."""
    base = list(base)
    sem = Semantics(base)
    return sem.models(base) != 0


def entails(base: Iterable[Formula], f: Union[Formula, str]) -> bool:
    f = _coerce(f)
    base = list(base)
    sem = Semantics(base, [f])
    return sem.entails(sem.models(base), f)


def implies_some(base: Iterable[Formula], targets: Iterable[Formula]) -> bool:
    """``base`` entails at least one member of ``targets`` (false if empty)."""
    base, targets = list(base), list(targets)
    sem = Semantics(base, targets)
    m = sem.models(base)
    return any(sem.entails(m, t) for t in targets)


def implies_all(base: Iterable[Formula], targets: Iterable[Formula]) -> bool:
    """``base`` entails every member of ``targets`` (true if empty)."""
    base, targets = list(base), list(targets)
    sem = Semantics(base, targets)
    m = sem.models(base)
    return all(sem.entails(m, t) for t in targets)


def equivalent(f: Formula, g: Formula) -> bool:
    sem = Semantics([f, g])
    return sem.table(f) == sem.table(g)


def equivalent_sets(a: Iterable[Formula], b: Iterable[Formula]) -> bool:
    """Every member of each set is equivalent to some member of the other."""
    a, b = list(a), list(b)
    sem = Semantics(a, b)
    ta = {sem.table(f) for f in a}
    tb = {sem.table(f) for f in b}
    return ta == tb

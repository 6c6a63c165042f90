"""Homogeneous forms stored by symmetric-tensor coordinates.

A form of degree ``d`` in ``n`` variables is kept as the map ``alpha -> v_alpha``
over sorted index tuples, with the convention that the monomial ``x^alpha``
carries the coefficient ``multinomial(d; alpha) * v_alpha``.  So
``6*x0*x1*x2`` has ``v_012 = 1`` and ``x0^3 + 3*x0^2*x1`` has
``v_000 = v_001 = 1``.
"""

from __future__ import annotations

import json
import random
import re
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial
from numbers import Rational

from .errors import FormSyntaxError, ShapeError
from .poly import Poly


def multi_indices(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All sorted index tuples of the given length, in lexicographic order."""
    return list(combinations_with_replacement(range(nvars), degree))


def multinomial(alpha) -> int:
    """Number of distinct orderings of the index tuple ``alpha``."""
    out = factorial(len(alpha))
    for k in Counter(alpha).values():
        out //= factorial(k)
    return out


def exponents(alpha, nvars: int) -> tuple[int, ...]:
    e = [0] * nvars
    for i in alpha:
        e[i] += 1
    return tuple(e)


def index_of(exps) -> tuple[int, ...]:
    return tuple(i for i, k in enumerate(exps) for _ in range(k))


class Form:
    """Homogeneous form with rational tensor coordinates.

    ``coeffs`` never holds explicit zeros; missing keys read as zero through
    ``form[alpha]``, which also accepts unsorted index tuples.
    """

    __slots__ = ("nvars", "degree", "_coeffs")

    def __init__(self, nvars: int, degree: int, coeffs=None):
        if nvars < 1 or degree < 0:
            raise ShapeError(f"invalid form shape nvars={nvars}, degree={degree}")
        self.nvars = nvars
        self.degree = degree
        clean = {}
        for alpha, c in (coeffs or {}).items():
            key = tuple(sorted(alpha))
            if len(key) != degree or any(not 0 <= i < nvars for i in key):
                raise ShapeError(f"index {alpha} does not fit nvars={nvars}, degree={degree}")
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self._coeffs = clean

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __getitem__(self, alpha) -> Fraction:
        return self._coeffs.get(tuple(sorted(alpha)), Fraction(0))

    def items(self):
        return sorted(self._coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (self.nvars, self.degree, self._coeffs) == (
            other.nvars,
            other.degree,
            other._coeffs,
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self._coeffs.items())))

    def __bool__(self):
        return bool(self._coeffs)

    def _check_compatible(self, other):
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ShapeError("forms of different shape")

    def __add__(self, other: Form) -> Form:
        self._check_compatible(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, 0) + c
        return Form(self.nvars, self.degree, out)

    def __neg__(self) -> Form:
        return Form(self.nvars, self.degree, {a: -c for a, c in self._coeffs.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, scalar) -> Form:
        if not isinstance(scalar, Rational):
            return NotImplemented
        return Form(self.nvars, self.degree, {a: c * scalar for a, c in self._coeffs.items()})

    __rmul__ = __mul__

    def monomial_coefficients(self) -> dict[tuple[int, ...], Fraction]:
        """Map exponent vectors to the ordinary monomial coefficients."""
        return {
            exponents(a, self.nvars): multinomial(a) * c for a, c in self._coeffs.items()
        }

    @classmethod
    def from_monomials(cls, nvars: int, degree: int, monomials) -> Form:
        coeffs = {}
        for exps, c in monomials.items():
            if len(exps) != nvars or sum(exps) != degree:
                raise ShapeError(f"monomial {exps} is not of degree {degree} in {nvars} variables")
            alpha = index_of(exps)
            coeffs[alpha] = Fraction(c) / multinomial(alpha)
        return cls(nvars, degree, coeffs)

    @classmethod
    def from_poly(cls, p: Poly, degree: int) -> Form:
        if not p.is_homogeneous(degree):
            raise ShapeError(f"polynomial is not homogeneous of degree {degree}")
        return cls.from_monomials(p.nvars, degree, p.terms)

    def to_poly(self) -> Poly:
        return Poly(self.nvars, self.monomial_coefficients())

    def __call__(self, *point):
        return self.to_poly()(*point)

    def __repr__(self):
        return f"Form({self.nvars}, {self.degree}, {print_form(self)!r})"


class LinearChange:
    """Square rational matrix acting on forms by ``f -> f(g x)``."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ShapeError("linear change must be a non-empty square matrix")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> LinearChange:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def determinant(self) -> Fraction:
        from .linalg import Matrix, det

        return det(Matrix(self.rows))

    def __matmul__(self, other: LinearChange) -> LinearChange:
        if self.size != other.size:
            raise ShapeError("linear changes of different size")
        n = self.size
        return LinearChange(
            [[sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other):
        if not isinstance(other, LinearChange):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LinearChange({[[str(x) for x in r] for r in self.rows]})"


# ----------------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\^|\*|\+|-|/|\(|\)))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise FormSyntaxError(f"unexpected character {text[start]!r}", start)
        start = m.start(m.lastindex)
        word = m.group(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(word), start, word))
        elif m.group(2) is not None:
            tokens.append(("var", int(word), start - 1, "x" + word))
        else:
            tokens.append((word, None, start, word))
        pos = m.end()
    tokens.append(("end", None, len(text), "end of input"))
    return tokens


_KIND_NAMES = {"num": "integer", ")": "')'"}


class _Parser:
    # sum  := neg (("+" | "-") neg)*
    # neg  := "-" neg | prod
    # prod := pow ("*" pow)*
    # pow  := atom ("^" INT)?
    # atom := INT ("/" INT)? | VAR | "(" sum ")"

    def __init__(self, text: str, nvars: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise FormSyntaxError(f"expected {_KIND_NAMES.get(kind, kind)}, found {tok[3]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise FormSyntaxError("empty expression", 0)
        value = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            raise FormSyntaxError(f"unexpected {tok[3]!r}", tok[2])
        return value

    def sum(self):
        value = self.neg()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.neg()
            value = value + rhs if op == "+" else value - rhs
        return value

    def neg(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.neg()
        return self.prod()

    def prod(self):
        value = self.power()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.power()
        return value

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("num")[1]
            return base**k
        return base

    def atom(self):
        kind, val, pos, word = self.peek()
        if kind == "num":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                _, den, dpos, _ = self.take("num")
                if den == 0:
                    raise FormSyntaxError("zero denominator", dpos)
                return Poly.constant(Fraction(val, den), self.nvars)
            return Poly.constant(val, self.nvars)
        if kind == "var":
            self.take()
            if val >= self.nvars:
                raise ShapeError(f"variable x{val} out of range for {self.nvars} variables (position {pos})")
            return Poly.variable(val, self.nvars)
        if kind == "(":
            self.take()
            value = self.sum()
            self.take(")")
            return value
        raise FormSyntaxError(f"unexpected {word!r}", pos)


def parse_poly(text: str, nvars: int) -> Poly:
    return _Parser(text, nvars).parse()


def parse_form(text: str, nvars: int, degree: int) -> Form:
    """Parse polynomial text such as ``"x0^3+6*x0*x1*x2"`` into a Form."""
    p = parse_poly(text, nvars)
    if not p.is_homogeneous(degree):
        found = sorted({sum(e) for e in p.terms})
        raise ShapeError(f"expected a form of degree {degree}, found terms of degree {found}")
    return Form.from_poly(p, degree)


def _monomial_text(alpha) -> str:
    return "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in sorted(Counter(alpha).items()))


def print_form(f: Form) -> str:
    parts = []
    for alpha, v in f.items():
        c = multinomial(alpha) * v
        mono = _monomial_text(alpha)
        if not mono:
            term = str(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{c}*{mono}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) or "0"


# ----------------------------------------------------------------------------
# JSON

def form_to_json(f: Form) -> dict:
    if f.nvars > 10:
        raise ShapeError("the JSON key format supports at most 10 variables")
    return {
        "nvars": f.nvars,
        "degree": f.degree,
        "coeffs": {"".join(map(str, a)): str(c) for a, c in f.items()},
    }


def form_from_json(data) -> Form:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        nvars, degree, coeffs = int(data["nvars"]), int(data["degree"]), data["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"malformed form JSON: {exc}") from None
    parsed = {}
    for key, value in coeffs.items():
        if not key.isdigit() and degree:
            raise ShapeError(f"bad coefficient key {key!r}")
        parsed[tuple(int(ch) for ch in key)] = Fraction(value)
    return Form(nvars, degree, parsed)


def dumps(f: Form) -> str:
    return json.dumps(form_to_json(f), sort_keys=False)


def loads(text: str) -> Form:
    return form_from_json(json.loads(text))


# ----------------------------------------------------------------------------
# constructions

def power_of_linear(l, d: int) -> Form:
    """The form ``(sum_i l_i x_i)^d``; its tensor coordinates are products of the ``l_i``."""
    l = [Fraction(x) for x in l]
    coeffs = {}
    for alpha in multi_indices(len(l), d):
        c = Fraction(1)
        for i in alpha:
            c *= l[i]
        coeffs[alpha] = c
    return Form(len(l), d, coeffs)


def sum_of_powers(ls, d: int, nvars: int | None = None) -> Form:
    ls = list(ls)
    if not ls:
        if nvars is None:
            raise ShapeError("nvars is required for an empty sum")
        return Form(nvars, d)
    n = len(ls[0])
    if any(len(l) != n for l in ls) or (nvars is not None and nvars != n):
        raise ShapeError("linear forms of different arity")
    total = {}
    for l in ls:
        for a, c in power_of_linear(l, d)._coeffs.items():
            total[a] = total.get(a, 0) + c
    return Form(n, d, total)


def act(g: LinearChange, f: Form) -> Form:
    """Return ``x -> f(g x)``."""
    if g.size != f.nvars:
        raise ShapeError(f"linear change of size {g.size} on a form in {f.nvars} variables")
    n, d, m = f.nvars, f.degree, g.rows
    # dense tensor, then one mode at a time: T'[..j..] = sum_i T[..i..] g[i][j]
    tensor = {idx: f[idx] for idx in product(range(n), repeat=d)}
    for mode in range(d):
        new = {}
        for idx in product(range(n), repeat=d):
            s = Fraction(0)
            for i in range(n):
                t = tensor[idx[:mode] + (i,) + idx[mode + 1:]]
                if t:
                    s += t * m[i][idx[mode]]
            new[idx] = s
        tensor = new
    return Form(n, d, {a: tensor[a] for a in multi_indices(n, d)})


def polar_contract(f: Form, x):
    """Contract the tensor of ``f`` once with the vector ``x``.

    Returns the coordinates ``beta -> sum_i x_i v_{i beta}``.  With a
    rational vector the result is a Form of degree ``d - 1``; with symbolic
    entries (Polys) it is a dict over sorted index tuples.
    """
    x = list(x)
    if len(x) != f.nvars:
        raise ShapeError(f"vector of length {len(x)} for a form in {f.nvars} variables")
    if f.degree < 1:
        raise ShapeError("cannot polarize a constant")
    concrete = all(isinstance(xi, Rational) for xi in x)
    out = {}
    for beta in multi_indices(f.nvars, f.degree - 1):
        s = 0
        for i in range(f.nvars):
            c = f[(i,) + beta]
            if c and x[i] != 0:
                s = s + x[i] * c
        out[beta] = s
    if concrete:
        return Form(f.nvars, f.degree - 1, out)
    return out


# ----------------------------------------------------------------------------
# seeded sampling

def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_linear(nvars: int, seed=None, bound: int = 5) -> list[Fraction]:
    """Nonzero integer vector with entries in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = _rng(seed)
    while True:
        l = [Fraction(rng.randint(-bound, bound)) for _ in range(nvars)]
        if any(l):
            return l


def random_form(nvars: int, degree: int, seed=None, bound: int = 3) -> Form:
    """Form whose monomial coefficients are integers in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = _rng(seed)
    monos = {exponents(a, nvars): rng.randint(-bound, bound) for a in multi_indices(nvars, degree)}
    return Form.from_monomials(nvars, degree, monos)


def random_sl(nvars: int, seed=None, bound: int = 2) -> LinearChange:
    """Product of a lower and an upper unitriangular integer matrix (determinant 1)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = _rng(seed)

    def tri(lower):
        return LinearChange(
            [
                [
                    1 if i == j else (rng.randint(-bound, bound) if (i > j) == lower else 0)
                    for j in range(nvars)
                ]
                for i in range(nvars)
            ]
        )

    return tri(True) @ tri(False)


def random_sum_of_powers(nvars: int, degree: int, k: int, seed=None, bound: int = 5) -> Form:
    rng = _rng(seed)
    return sum_of_powers([random_linear(nvars, rng, bound) for _ in range(k)], degree, nvars)

"""Exact polynomials: dense univariate in t, sparse multivariate in t1..tm.

Univariate polynomials carry the vectors of the rank-one module families
and all action-table entries; multivariate polynomials carry vectors of
tensor-product modules.  Coefficients are Gaussian rationals throughout,
so all arithmetic is exact.

Polynomial literals follow the grammar

    poly ::= term (('+'|'-') term)*
    term ::= scalar | [scalar '*'] varpow ('*' varpow)*
    varpow ::= var ['^' uint]
    var  ::= 't' | 't' uint

e.g. ``2*t^3 - 1/2*t + 1`` (univariate) and ``t1^2*t2`` (multivariate).
Scalars bind tightly (no internal whitespace), so a complex coefficient
like ``1/2+2/3i*t`` parses as (1/2 + 2/3i)*t while ``1/2 + 2/3i*t`` is a
two-term sum.  ``str()`` output re-parses to an equal value.

A global degree cap (default 64) makes runaway closure loops fail loudly
instead of silently producing enormous polynomials.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterable, Iterator, Union

from .errors import (
    DegreeOverflowError,
    ParseError,
    ZeroPolynomialError,
)
from .scalars import GaussianRational, ONE, ZERO, ScalarLike, scalar, scan_scalar

__all__ = [
    "Polynomial",
    "MultiPolynomial",
    "T",
    "P_ZERO",
    "P_ONE",
    "constant",
    "monomial",
    "shift",
    "degree_leading",
    "parse_polynomial",
    "set_degree_cap",
    "degree_cap",
]

_degree_cap = 64


def set_degree_cap(n: int) -> None:
    """Set the global degree cap (per variable).  Must be >= 1."""
    global _degree_cap
    if n < 1:
        raise ValueError("degree cap must be at least 1")
    _degree_cap = n


def degree_cap() -> int:
    return _degree_cap


def _check_cap(deg: int) -> None:
    if deg > _degree_cap:
        raise DegreeOverflowError(
            f"degree {deg} exceeds the configured cap {_degree_cap}"
        )


class Polynomial:
    """Dense univariate polynomial over Q(i).

    ``coeffs[k]`` is the coefficient of t^k; trailing zeros are stripped,
    so the zero polynomial has an empty tuple and every nonzero polynomial
    has a nonzero leading coefficient.  The degree of the zero polynomial
    is None, never a number that could leak into arithmetic.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        _check_cap(len(cs) - 1)
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @staticmethod
    def _raw(cs: tuple[GaussianRational, ...]) -> "Polynomial":
        """Trusted constructor: already stripped and within the cap."""
        p = object.__new__(Polynomial)
        p.coeffs = cs
        return p

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else ZERO

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for k, c in enumerate(b):
            cs[k] = cs[k] + c
        while cs and not cs[-1]:
            cs.pop()
        return Polynomial._raw(tuple(cs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        cs = []
        for k in range(n):
            x = self.coeffs[k] if k < len(self.coeffs) else ZERO
            y = other.coeffs[k] if k < len(other.coeffs) else ZERO
            cs.append(x - y)
        while cs and not cs[-1]:
            cs.pop()
        return Polynomial._raw(tuple(cs))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return P_ZERO
            _check_cap(len(self.coeffs) + len(other.coeffs) - 2)
            cs = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for j, x in enumerate(self.coeffs):
                if not x:
                    continue
                for k, y in enumerate(other.coeffs):
                    cs[j + k] = cs[j + k] + x * y
            return Polynomial._raw(tuple(cs))
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        acc = P_ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c: ScalarLike) -> "Polynomial":
        c = scalar(c)
        if not c:
            return P_ZERO
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def shift(self, c: ScalarLike) -> "Polynomial":
        """The substitution t -> t - c, i.e. return g with g(t) = f(t - c).

        Degree and leading coefficient are preserved.  Integer c uses an
        integer-power fast path (the common case for loop actions).
        """
        n = len(self.coeffs)
        if n <= 1:
            return self
        if isinstance(c, GaussianRational):
            ci = c.as_int()
            if ci is not None:
                c = ci
        if isinstance(c, int):
            if c == 0:
                return self
            negc_pows = [1]
            for _ in range(n - 1):
                negc_pows.append(negc_pows[-1] * (-c))
            out = [ZERO] * n
            for k, fk in enumerate(self.coeffs):
                if not fk:
                    continue
                for j in range(k + 1):
                    out[j] = out[j] + fk.mul_int(comb(k, j) * negc_pows[k - j])
            return Polynomial._raw(tuple(out))
        c = scalar(c)
        if not c:
            return self
        negc = -c
        pows: list[GaussianRational] = [ONE]
        for _ in range(n - 1):
            pows.append(pows[-1] * negc)
        out = [ZERO] * n
        for k, fk in enumerate(self.coeffs):
            if not fk:
                continue
            for j in range(k + 1):
                out[j] = out[j] + fk.mul_int(comb(k, j)) * pows[k - j]
        return Polynomial._raw(tuple(out))

    def mul_linear(self, root: ScalarLike) -> "Polynomial":
        """Multiply by (t - root) in O(degree) scalar operations."""
        if not self.coeffs:
            return P_ZERO
        root = scalar(root)
        _check_cap(len(self.coeffs))
        cs = [ZERO] * (len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            cs[k + 1] = cs[k + 1] + c
            if root:
                cs[k] = cs[k] - c * root
        return Polynomial._raw(tuple(cs))

    def divide_linear(self, root: ScalarLike) -> tuple["Polynomial", GaussianRational]:
        """Synthetic division by (t - root): returns (quotient, remainder)."""
        root = scalar(root)
        n = len(self.coeffs) - 1
        if n < 0:
            return P_ZERO, ZERO
        if n == 0:
            return P_ZERO, self.coeffs[0]
        q: list[GaussianRational] = [ZERO] * n
        q[n - 1] = self.coeffs[n]
        for k in range(n - 1, 0, -1):
            q[k - 1] = self.coeffs[k] + root * q[k]
        rem = self.coeffs[0] + root * q[0]
        while q and not q[-1]:
            q.pop()
        return Polynomial._raw(tuple(q)), rem

    def evaluate(self, x: ScalarLike) -> GaussianRational:
        x = scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = None if k == 0 else ("t" if k == 1 else f"t^{k}")
            pieces.append((c, mono))
        return _render_terms(pieces)

    def __repr__(self) -> str:
        return f"poly({str(self)!r})"


def _render_term(c: GaussianRational, mono: str | None) -> str:
    if mono is None:
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


def _render_terms(pieces: list[tuple[GaussianRational, str | None]]) -> str:
    out = [_render_term(*pieces[0])]
    for c, mono in pieces[1:]:
        s = str(c)
        if s.startswith("-") and str(-c) == s[1:]:
            out.append(" - " + _render_term(-c, mono))
        else:
            out.append(" + " + _render_term(c, mono))
    return "".join(out)


P_ZERO = Polynomial._raw(())
P_ONE = Polynomial._raw((ONE,))
T = Polynomial._raw((ZERO, ONE))


def constant(c: ScalarLike) -> Polynomial:
    return Polynomial((c,))


def monomial(k: int, c: ScalarLike = 1) -> Polynomial:
    return Polynomial([0] * k + [c])


def shift(f: "Polynomial | MultiPolynomial", c: ScalarLike, var: int = 0):
    """f(.., t_var - c, ..): module-level spelling of the shift operation."""
    if isinstance(f, MultiPolynomial):
        return f.shift_var(var, c)
    return f.shift(c)


def degree_leading(f: Polynomial) -> tuple[int, GaussianRational]:
    """(degree, leading coefficient); raises ZeroPolynomialError on 0."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no degree")
    return f.degree, f.leading


class MultiPolynomial:
    """Sparse polynomial in t1..tm: exponent-vector -> nonzero coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], ScalarLike] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        clean: dict[tuple[int, ...], GaussianRational] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            for e in exps:
                if e < 0:
                    raise ValueError("negative exponent")
                _check_cap(e)
            c = scalar(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @staticmethod
    def _raw(nvars: int, terms: dict[tuple[int, ...], GaussianRational]) -> "MultiPolynomial":
        mp = object.__new__(MultiPolynomial)
        mp.nvars = nvars
        mp.terms = terms
        return mp

    @staticmethod
    def constant(nvars: int, c: ScalarLike) -> "MultiPolynomial":
        c = scalar(c)
        return MultiPolynomial._raw(nvars, {(0,) * nvars: c} if c else {})

    @staticmethod
    def variable(nvars: int, k: int) -> "MultiPolynomial":
        exps = [0] * nvars
        exps[k] = 1
        return MultiPolynomial._raw(nvars, {tuple(exps): ONE})

    @staticmethod
    def from_polynomial(p: Polynomial, nvars: int = 1, var: int = 0) -> "MultiPolynomial":
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                exps = [0] * nvars
                exps[var] = k
                terms[tuple(exps)] = c
        return MultiPolynomial._raw(nvars, terms)

    def to_polynomial(self) -> Polynomial:
        """Inverse of the nvars=1 embedding."""
        if self.nvars != 1:
            raise ValueError("only single-variable polynomials embed back")
        if not self.terms:
            return P_ZERO
        deg = max(e[0] for e in self.terms)
        cs = [ZERO] * (deg + 1)
        for (e,), c in self.terms.items():
            cs[e] = c
        return Polynomial._raw(tuple(cs))

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, ...] | None:
        """Per-variable maximum exponent, or None for the zero polynomial."""
        if not self.terms:
            return None
        return tuple(max(e[k] for e in self.terms) for k in range(self.nvars))

    @property
    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.nvars, ZERO)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other: "MultiPolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        self._require_same(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            acc = c if acc is None else acc + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return MultiPolynomial._raw(self.nvars, terms)

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        return self + (-other)

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["MultiPolynomial", ScalarLike]) -> "MultiPolynomial":
        if isinstance(other, MultiPolynomial):
            self._require_same(other)
            terms: dict[tuple[int, ...], GaussianRational] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    for x in e:
                        _check_cap(x)
                    acc = terms.get(e)
                    acc = c1 * c2 if acc is None else acc + c1 * c2
                    if acc:
                        terms[e] = acc
                    else:
                        terms.pop(e, None)
            return MultiPolynomial._raw(self.nvars, terms)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: ScalarLike) -> "MultiPolynomial":
        c = scalar(c)
        if not c:
            return MultiPolynomial._raw(self.nvars, {})
        return MultiPolynomial._raw(self.nvars, {e: x * c for e, x in self.terms.items()})

    def shift_var(self, k: int, c: ScalarLike) -> "MultiPolynomial":
        """Substitute t_k -> t_k - c, leaving the other variables alone."""
        c = scalar(c)
        if not c or not self.terms:
            return self
        negc = -c
        max_e = max(e[k] for e in self.terms)
        pows: list[GaussianRational] = [ONE]
        for _ in range(max_e):
            pows.append(pows[-1] * negc)
        terms: dict[tuple[int, ...], GaussianRational] = {}
        for exps, coef in self.terms.items():
            ek = exps[k]
            base = list(exps)
            for j in range(ek + 1):
                base[k] = j
                e = tuple(base)
                contrib = coef.mul_int(comb(ek, j)) * pows[ek - j]
                acc = terms.get(e)
                acc = contrib if acc is None else acc + contrib
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        return MultiPolynomial._raw(self.nvars, terms)

    def mul_linear_var(self, k: int, root: ScalarLike) -> "MultiPolynomial":
        """Multiply by (t_k - root)."""
        root = scalar(root)
        terms: dict[tuple[int, ...], GaussianRational] = {}
        for exps, coef in self.terms.items():
            up = list(exps)
            up[k] += 1
            _check_cap(up[k])
            e_up = tuple(up)
            acc = terms.get(e_up)
            acc = coef if acc is None else acc + coef
            if acc:
                terms[e_up] = acc
            else:
                terms.pop(e_up, None)
            if root:
                contrib = -(coef * root)
                acc = terms.get(exps)
                acc = contrib if acc is None else acc + contrib
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        return MultiPolynomial._raw(self.nvars, terms)

    # -- rendering -----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        pieces = []
        for exps in order:
            factors = []
            for k, e in enumerate(exps):
                if e == 1:
                    factors.append(f"t{k + 1}")
                elif e > 1:
                    factors.append(f"t{k + 1}^{e}")
            mono = "*".join(factors) if factors else None
            pieces.append((self.terms[exps], mono))
        return _render_terms(pieces)

    def __repr__(self) -> str:
        return f"mpoly({self.nvars}, {str(self)!r})"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _scan_varpow(text: str, i: int) -> tuple[int | None, int, int]:
    """Scan 't'[index]['^'exp]; returns (var index or None for bare t, exp, next)."""
    if i >= len(text) or text[i] != "t":
        raise ParseError("expected a variable", i)
    i += 1
    idx: int | None = None
    if i < len(text) and text[i].isdigit():
        idx, i = _scan_uint_at(text, i)
        if idx < 1:
            raise ParseError("variable indices start at 1", i - 1)
    exp = 1
    j = _skip_ws(text, i)
    if j < len(text) and text[j] == "^":
        j = _skip_ws(text, j + 1)
        exp, j = _scan_uint_at(text, j)
        i = j
    return idx, exp, i


def _scan_uint_at(text: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        raise ParseError("expected an integer", i)
    return int(text[i:j]), j


def parse_polynomial(text: str) -> Polynomial | MultiPolynomial:
    """Parse a polynomial literal.

    Returns a univariate Polynomial when only the bare variable ``t``
    occurs (including pure constants), and a MultiPolynomial when indexed
    variables ``t1``, ``t2``, ... occur.  Mixing the two forms is an error.
    """
    # term accumulator: exponent tuple keyed sparse map, var count inferred
    raw_terms: list[tuple[GaussianRational, dict[int, int]]] = []
    uses_bare = False
    uses_indexed = False
    i = _skip_ws(text, 0)
    if i == len(text):
        raise ParseError("empty polynomial", i)
    first = True
    while True:
        sign = 1
        if not first:
            if i >= len(text):
                break
            if text[i] == "+":
                i = _skip_ws(text, i + 1)
            elif text[i] == "-":
                sign = -1
                i = _skip_ws(text, i + 1)
            else:
                raise ParseError(f"expected '+' or '-', found {text[i]!r}", i)
        first = False
        coef = ONE
        powers: dict[int, int] = {}
        have_scalar = False
        if i < len(text) and (text[i].isdigit() or text[i] == "-"):
            c, i = scan_scalar(text, i)
            coef = c
            have_scalar = True
        need_var = False
        if have_scalar:
            j = _skip_ws(text, i)
            if j < len(text) and text[j] == "*":
                i = _skip_ws(text, j + 1)
                need_var = True
        else:
            need_var = True
        if need_var:
            while True:
                idx, exp, i = _scan_varpow(text, i)
                if idx is None:
                    uses_bare = True
                    key = 0
                else:
                    uses_indexed = True
                    key = idx - 1
                powers[key] = powers.get(key, 0) + exp
                j = _skip_ws(text, i)
                if j < len(text) and text[j] == "*":
                    i = _skip_ws(text, j + 1)
                    continue
                break
        if sign < 0:
            coef = -coef
        raw_terms.append((coef, powers))
        i = _skip_ws(text, i)
        if i == len(text):
            break
    if uses_bare and uses_indexed:
        raise ParseError("cannot mix bare 't' with indexed variables", 0)
    if uses_indexed:
        nvars = 1 + max(max(p) if p else 0 for _, p in raw_terms)
        terms: dict[tuple[int, ...], GaussianRational] = {}
        for coef, powers in raw_terms:
            exps = [0] * nvars
            for k, e in powers.items():
                exps[k] = e
            e = tuple(exps)
            acc = terms.get(e)
            acc = coef if acc is None else acc + coef
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        for e in terms:
            for x in e:
                _check_cap(x)
        return MultiPolynomial._raw(nvars, terms)
    deg = max((p.get(0, 0) for _, p in raw_terms), default=0)
    _check_cap(deg)
    cs = [ZERO] * (deg + 1)
    for coef, powers in raw_terms:
        k = powers.get(0, 0)
        cs[k] = cs[k] + coef
    while cs and not cs[-1]:
        cs.pop()
    return Polynomial._raw(tuple(cs))


def parse_univariate(text: str) -> Polynomial:
    """Parse a polynomial literal that must be univariate in t."""
    p = parse_polynomial(text)
    if isinstance(p, MultiPolynomial):
        raise ParseError("expected a univariate polynomial in t", 0)
    return p


def window_monomials(nvars: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    """Degree-lex enumeration of all exponent vectors with entries <= max_degree."""
    exps = sorted(product(range(max_degree + 1), repeat=nvars), key=lambda e: (sum(e), e))
    return iter(exps)

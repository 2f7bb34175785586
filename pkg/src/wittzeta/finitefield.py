"""Finite field extensions and brute-force affine point enumeration.

Elements of F_{p^k} are residue polynomials modulo a monic irreducible of
degree k, stored as length-k tuples of integers in 0..p-1 (ascending
degree).  Tuples keep elements hashable, which the Frobenius-orbit
machinery in ``wittzeta.varieties`` relies on.

The default modulus for every (p, k) is the lexicographically smallest
monic irreducible, by ascending coefficient tuple, so field construction
is deterministic across runs.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, SpecError
from .rings import IntPolynomial

DEFAULT_ENUM_BUDGET = 1 << 24

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if n < 0 or k < 1:
        raise ValueError("nonnegative radicand and positive index required")
    if k == 1 or n < 2:
        return n
    hi = 1 << (n.bit_length() // k + 1)
    lo = 0
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Write q as p**k with p prime, or raise SpecError."""
    if q < 2:
        raise SpecError(f"{q} is not a prime power")
    for k in range(q.bit_length(), 0, -1):
        p = _integer_root(q, k)
        if p**k == q and is_prime(p):
            return p, k
    raise SpecError(f"{q} is not a prime power")


# --- polynomials over F_p, as trimmed ascending int lists ---


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a nonzero m."""
    r = list(a)
    inv = pow(m[-1], p - 2, p)
    while len(r) >= len(m):
        c = (r[-1] * inv) % p
        if c:
            shift = len(r) - len(m)
            for i, y in enumerate(m):
                r[shift + i] = (r[shift + i] - c * y) % p
        r.pop()
    return _ptrim(r)


def _ppowmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, b, p), m, p)
        e >>= 1
        if e:
            b = _pmod(_pmul(b, b, p), m, p)
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    x, y = list(a), list(b)
    while y:
        x, y = y, _pmod(x, y, p)
    if x:
        inv = pow(x[-1], p - 2, p)
        x = [(c * inv) % p for c in x]
    return x


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Monic f of degree >= 1 has no irreducible factor of degree <= deg/2."""
    k = len(f) - 1
    b = [0, 1]
    for _ in range(k // 2):
        b = _ppowmod(b, p, f, p)
        g = _pgcd(_ptrim([(c - d) % p for c, d in itertools.zip_longest(b, [0, 1], fillvalue=0)]), f, p)
        if len(g) - 1 > 0:
            return False
    return True


def find_irreducible(p: int, k: int) -> IntPolynomial:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Candidates are ordered by their ascending coefficient tuple
    (c0, ..., c_{k-1}), so the result is deterministic; for k = 1 this is
    the polynomial z itself.
    """
    if not is_prime(p):
        raise SpecError(f"{p} is not prime")
    if k < 1:
        raise SpecError("extension degree must be at least 1")
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return IntPolynomial(f)
    raise RuntimeError("unreachable: irreducibles of every degree exist")


class FiniteField:
    """F_{p^k} with elements as length-k coefficient tuples.

    The modulus may be supplied explicitly (it is verified to be monic,
    reduced and irreducible) and defaults to ``find_irreducible(p, k)``.
    """

    __slots__ = ("p", "k", "modulus", "size", "_red")

    def __init__(self, p: int, k: int, modulus: IntPolynomial | None = None):
        if not is_prime(p):
            raise SpecError(f"{p} is not prime")
        if k < 1:
            raise SpecError("extension degree must be at least 1")
        if modulus is None:
            modulus = find_irreducible(p, k)
        if modulus.degree != k or modulus.leading() != 1:
            raise SpecError(f"modulus must be monic of degree {k}")
        if any(not 0 <= c < p for c in modulus.coeffs):
            raise SpecError("modulus coefficients must be reduced mod p")
        if not _is_irreducible(list(modulus.coeffs), p):
            raise SpecError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.size = p**k
        # reduction rows: _red[j - k] expresses z^j as a reduced tuple
        rows: list[tuple[int, ...]] = []
        if k > 1:
            row = [(-c) % p for c in modulus.coeffs[:k]]
            rows.append(tuple(row))
            for _ in range(k - 2):
                over = row[-1]
                row = [0] + row[:-1]
                if over:
                    row = [(c + over * r) % p for c, r in zip(row, rows[0])]
                rows.append(tuple(row))
        self._red = tuple(rows)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.k - 1)

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def neg(self, x: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((-a) % p for a in x)

    def sub(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (x[0] * y[0] % p,)
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    conv[i + j] += a * b
        out = conv[:k]
        for j in range(k, 2 * k - 1):
            c = conv[j]
            if c:
                row = self._red[j - k]
                for i in range(k):
                    out[i] += c * row[i]
        return tuple(c % p for c in out)

    def pow(self, x: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            x = self.inv(x)
            e = -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    def inv(self, x: tuple[int, ...]) -> tuple[int, ...]:
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(x, self.size - 2)

    def elements(self) -> Iterator[tuple[int, ...]]:
        """All field elements, in ascending coefficient-tuple order."""
        return itertools.product(range(self.p), repeat=self.k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.k})"


class MultiPoly:
    """Sparse multivariate integer polynomial: exponent tuple -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        if nvars < 1:
            raise ValueError("a multivariate polynomial needs at least one variable")
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps!r} for {nvars} variables")
            if c:
                clean[tuple(exps)] = c
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def evaluate(self, field: FiniteField, point: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
        acc = field.zero
        for exps, c in self.terms.items():
            term = field.from_int(c)
            for x, e in zip(point, exps):
                if e:
                    term = field.mul(term, field.pow(x, e))
            acc = field.add(acc, term)
        return acc

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.terms!r})"


# --- minimal expression grammar: integers, variables, + - * ^, parentheses ---


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise SpecError(f"unexpected character {ch!r} in polynomial {text!r}")
    return tokens


def parse_polynomial(text: str, varnames: Sequence[str]) -> MultiPoly:
    """Parse an expression over the named variables into a MultiPoly."""
    nvars = len(varnames)
    index = {name: i for i, name in enumerate(varnames)}
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str:
        return tokens[pos][0] if pos < len(tokens) else ""

    def take(kind: str) -> str:
        nonlocal pos
        if peek() != kind:
            raise SpecError(f"expected {kind!r} at token {pos} in polynomial {text!r}")
        value = tokens[pos][1]
        pos += 1
        return value

    def parse_expr() -> MultiPoly:
        node = parse_term()
        while peek() in ("+", "-"):
            op = take(peek())
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term() -> MultiPoly:
        node = parse_unary()
        while peek() == "*":
            take("*")
            node = node * parse_unary()
        return node

    def parse_unary() -> MultiPoly:
        if peek() == "-":
            take("-")
            return -parse_unary()
        return parse_power()

    def parse_power() -> MultiPoly:
        base = parse_atom()
        if peek() == "^":
            take("^")
            return base ** int(take("int"))
        return base

    def parse_atom() -> MultiPoly:
        kind = peek()
        if kind == "int":
            return MultiPoly.constant(nvars, int(take("int")))
        if kind == "name":
            name = take("name")
            if name not in index:
                raise SpecError(f"unknown variable {name!r} in polynomial {text!r}")
            return MultiPoly.variable(nvars, index[name])
        if kind == "(":
            take("(")
            node = parse_expr()
            take(")")
            return node
        raise SpecError(f"unexpected end of polynomial {text!r}")

    result = parse_expr()
    if pos != len(tokens):
        raise SpecError(f"trailing tokens in polynomial {text!r}")
    return result


def iter_affine_solutions(
    polys: Sequence[MultiPoly],
    nvars: int,
    field: FiniteField,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every point of the affine vanishing locus, by full enumeration.

    Refuses to start if the number of candidate tuples exceeds the budget.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    for f in polys:
        if f.nvars != nvars:
            raise ValueError("polynomial arity does not match the variable count")
    required = field.size**nvars
    if required > budget:
        raise BudgetError(
            f"enumeration needs {required} tuples, budget is {budget}",
            required=required,
            budget=budget,
        )
    for point in itertools.product(field.elements(), repeat=nvars):
        if all(f.evaluate(field, point) == field.zero for f in polys):
            yield point


def count_affine_points(
    polys: Sequence[MultiPoly],
    nvars: int,
    field: FiniteField,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> int:
    """Number of solutions of the system over the field, by enumeration."""
    return sum(1 for _ in iter_affine_solutions(polys, nvars, field, budget))

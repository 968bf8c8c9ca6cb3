"""
Exact Scalar Module
Polynomials with rational coefficients in declared symbols, kept in normal
form modulo square rules (sym^2 -> polynomial in lower symbols), plus a
fraction layer for division
"""

import ast
import keyword
import logging
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from errors import (
    DivisionByZeroError,
    ParseError,
    RuleViolationError,
    SymbolTableError,
    TableMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_PARSER_GLOBALS = {
    "Integer": sp.Integer,
    "Rational": sp.Rational,
    "Float": sp.Float,
    "Symbol": sp.Symbol,
}
_BINARY_OPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.BitXor)
_UNARY_OPS = (ast.UAdd, ast.USub)


@dataclass(frozen=True)
class SquareRule:
    """Rewrite rule symbol^2 -> replacement (replacement stored as sorted term items)"""

    symbol: str
    terms: tuple

    def replacement(self, table):
        """Replacement polynomial as a Scalar of the given table"""
        return Scalar(table, dict(self.terms))


class SymbolTable:
    """Ordered symbol names together with a triangular system of square rules"""

    def __init__(self, symbols, relations=None):
        """
        Args:
            symbols: ordered symbol names, e.g. ["a", "m", "s", "t0", "t2"]
            relations: mapping symbol -> replacement of its square, given as an
                expression string, int or Fraction (e.g. {"s": "3"})
        """
        names = [str(name) for name in symbols]
        for name in names:
            if not _NAME.match(name) or keyword.iskeyword(name):
                raise SymbolTableError(f"invalid symbol name {name!r}", field="symbols")
        if len(set(names)) != len(names):
            raise SymbolTableError("symbol names must be unique", field="symbols")

        self.symbols = tuple(names)
        self._index = {name: i for i, name in enumerate(names)}
        self._sympy = tuple(sp.Symbol(name) for name in names)
        self._power_cache = {}

        rules = []
        for name, rhs in (relations or {}).items():
            if name not in self._index:
                raise SymbolTableError(f"relation for undeclared symbol {name!r}", field="relations")
            position = self._index[name]
            terms = self._polynomial_terms(rhs, field=f"relations.{name}")
            for exps in terms:
                if any(exps[j] for j in range(position, len(names))):
                    raise SymbolTableError(
                        f"rule for {name} must only use symbols declared before {name}",
                        field=f"relations.{name}",
                    )
            rules.append(SquareRule(name, tuple(sorted(terms.items()))))
        rules.sort(key=lambda rule: self._index[rule.symbol])
        self.rules = tuple(rules)
        self._rule_terms = {self._index[r.symbol]: dict(r.terms) for r in rules}

    # ------------------------------------------------------------------
    # identity
    # ------------------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SymbolTable):
            return NotImplemented
        return self.symbols == other.symbols and self.rules == other.rules

    def __hash__(self):
        return hash((self.symbols, self.rules))

    def __repr__(self):
        rules = ", ".join(f"{r.symbol}^2->{r.replacement(self)}" for r in self.rules)
        return f"SymbolTable({list(self.symbols)}; {rules})"

    # ------------------------------------------------------------------
    # lookups
    # ------------------------------------------------------------------
    @property
    def size(self):
        return len(self.symbols)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise SymbolTableError(f"unknown symbol {name!r}") from None

    def is_ruled(self, name):
        return self.index(name) in self._rule_terms

    @property
    def ruled_indices(self):
        return sorted(self._rule_terms)

    def rule_for(self, name):
        """Return the SquareRule of a symbol, or None when the symbol is free"""
        for rule in self.rules:
            if rule.symbol == name:
                return rule
        return None

    def relations(self):
        """Relations as {symbol: expression string}, the inverse of the constructor input"""
        return {rule.symbol: str(rule.replacement(self)) for rule in self.rules}

    def sympy_symbols(self):
        return self._sympy

    def extended(self, symbols, relations=None):
        """New table with extra symbols appended after the existing ones"""
        merged = dict(self.relations())
        merged.update(relations or {})
        return SymbolTable(list(self.symbols) + list(symbols), merged)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    def zero_exponents(self):
        return (0,) * len(self.symbols)

    def constant(self, value):
        value = Fraction(value)
        return Scalar(self, {self.zero_exponents(): value} if value else {}, normalized=True)

    def zero(self):
        return Scalar(self, {}, normalized=True)

    def one(self):
        return self.constant(1)

    def symbol(self, name):
        exps = [0] * len(self.symbols)
        exps[self.index(name)] = 1
        return Scalar(self, {tuple(exps): Fraction(1)}, normalized=True)

    def element(self, value):
        """Coerce int, Fraction, str, Scalar or ScalarFraction into a ScalarFraction"""
        if isinstance(value, ScalarFraction):
            _check_table(self, value.table)
            return value
        if isinstance(value, Scalar):
            _check_table(self, value.table)
            return ScalarFraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ValidationError(f"cannot use {value!r} as an exact scalar (rationals only)")
        return ScalarFraction(self.constant(value))

    # ------------------------------------------------------------------
    # parsing
    # ------------------------------------------------------------------
    def _to_sympy(self, text, field=None):
        if isinstance(text, bool):
            raise ParseError(f"expected an expression, got {text!r}", field=field)
        if isinstance(text, (int, Fraction)):
            return sp.Rational(text.numerator, text.denominator)
        if not isinstance(text, str):
            raise ParseError(f"expected an expression string, got {type(text).__name__}", field=field)
        if not text.strip():
            raise ParseError("empty expression", field=field)
        self._check_grammar(text, field)
        local = dict(zip(self.symbols, self._sympy))
        try:
            expr = parse_expr(
                text,
                local_dict=local,
                global_dict=dict(_PARSER_GLOBALS),
                transformations=_TRANSFORMATIONS,
            )
        except Exception as exc:
            raise ParseError(f"cannot parse {text!r}: {exc}", field=field) from None
        if not isinstance(expr, sp.Expr):
            raise ParseError(f"{text!r} is not an arithmetic expression", field=field)
        if expr.atoms(sp.Float):
            raise ParseError(f"{text!r} contains a float; use exact rationals", field=field)
        unknown = {str(sym) for sym in expr.free_symbols} - set(self.symbols)
        if unknown:
            raise ParseError(f"undeclared symbol(s) {sorted(unknown)} in {text!r}", field=field)
        return expr

    def _check_grammar(self, text, field=None):
        """
        Accept only integers, declared symbols, + - * / ^ **, unary signs and
        parentheses; parse_expr evaluates its input, so nothing else may reach it

        Raises:
            ParseError: with the 1-based column of the first offending token
        """
        source = text.strip()
        shift = len(text) - len(text.lstrip())
        try:
            tree = ast.parse(source, mode="eval")
        except SyntaxError as exc:
            column = (exc.offset or 1) + shift
            raise ParseError(f"cannot parse {text!r}: {exc.msg} at column {column}", field=field) from None

        for node in ast.walk(tree):
            column = getattr(node, "col_offset", 0) + shift + 1
            if isinstance(node, (ast.Expression, ast.Load) + _BINARY_OPS + _UNARY_OPS):
                continue
            if isinstance(node, ast.BinOp) and isinstance(node.op, _BINARY_OPS):
                continue
            if isinstance(node, ast.UnaryOp) and isinstance(node.op, _UNARY_OPS):
                continue
            if isinstance(node, ast.Constant):
                if isinstance(node.value, int) and not isinstance(node.value, bool):
                    continue
                if isinstance(node.value, float):
                    raise ParseError(f"{text!r} contains a float at column {column}; use exact rationals",
                                     field=field)
                raise ParseError(f"literal {node.value!r} at column {column} is not allowed in {text!r}",
                                 field=field)
            if isinstance(node, ast.Name):
                if node.id in self._index:
                    continue
                raise ParseError(f"undeclared symbol {node.id!r} at column {column} in {text!r}", field=field)
            raise ParseError(f"unsupported syntax ({type(node).__name__}) at column {column} in {text!r}",
                             field=field)

    def _terms_from_sympy(self, expr, field=None):
        if not self.symbols:
            if not expr.is_Rational:
                raise ParseError(f"{expr} is not a rational number", field=field)
            return {(): Fraction(int(expr.p), int(expr.q))}
        try:
            poly = sp.Poly(expr, *self._sympy, domain=sp.QQ)
        except sp.PolynomialError as exc:
            raise ParseError(f"{expr} is not a polynomial: {exc}", field=field) from None
        return {
            tuple(monom): Fraction(int(coeff.p), int(coeff.q))
            for monom, coeff in poly.as_dict().items()
            if coeff != 0
        }

    def _polynomial_terms(self, text, field=None):
        expr = self._to_sympy(text, field=field)
        numerator, denominator = sp.fraction(sp.together(expr))
        if denominator.free_symbols:
            raise ParseError(f"{text!r} must be a polynomial", field=field)
        return self._terms_from_sympy(sp.expand(numerator / denominator), field=field)

    def parse_scalar(self, text, field=None):
        """Parse a polynomial expression into a normalized Scalar"""
        return Scalar(self, self._polynomial_terms(text, field=field))

    def parse(self, text, field=None):
        """
        Parse an expression string (rationals, symbols, + - * / ^, parentheses)

        Returns:
            ScalarFraction in normal form
        """
        expr = self._to_sympy(text, field=field)
        numerator, denominator = sp.fraction(sp.together(expr))
        num = Scalar(self, self._terms_from_sympy(sp.expand(numerator), field=field))
        den = Scalar(self, self._terms_from_sympy(sp.expand(denominator), field=field))
        if den.is_zero():
            raise ParseError(f"{text!r} divides by zero under the declared rules", field=field)
        return ScalarFraction(num, den)

    # ------------------------------------------------------------------
    # rewriting support
    # ------------------------------------------------------------------
    def _rule_power(self, position, power):
        key = (position, power)
        if key not in self._power_cache:
            result = {self.zero_exponents(): Fraction(1)}
            for _ in range(power):
                result = _multiply_terms(result, self._rule_terms[position])
            self._power_cache[key] = result
        return self._power_cache[key]


def _check_table(left, right):
    if left is not right and left != right:
        raise TableMismatchError("operands belong to different symbol tables")


def _multiply_terms(left, right):
    out = defaultdict(Fraction)
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _reduce_terms(terms, table):
    # Highest ruled symbol first: its replacement only mentions lower symbols,
    # so one descending pass reaches the normal form.
    for position in reversed(table.ruled_indices):
        if not any(exps[position] >= 2 for exps in terms):
            continue
        out = defaultdict(Fraction)
        for exps, coeff in terms.items():
            power = exps[position]
            if power < 2:
                out[exps] += coeff
                continue
            quotient, remainder = divmod(power, 2)
            base = exps[:position] + (remainder,) + exps[position + 1:]
            for rexps, rcoeff in table._rule_power(position, quotient).items():
                out[tuple(x + y for x, y in zip(base, rexps))] += coeff * rcoeff
        terms = {e: c for e, c in out.items() if c}
    return terms


def normalize(raw, table):
    """
    Reduce a polynomial to its normal form under the table's square rules

    Args:
        raw: Scalar or mapping exponent-tuple -> rational coefficient
        table: SymbolTable providing the rules

    Returns:
        Scalar in normal form (idempotent)
    """
    terms = raw.terms if isinstance(raw, Scalar) else raw
    cleaned = {tuple(e): Fraction(c) for e, c in terms.items() if c}
    return Scalar(table, _reduce_terms(cleaned, table), normalized=True)


class Scalar:
    """Polynomial over the rationals in normal form; immutable by convention"""

    __slots__ = ("table", "terms")

    def __init__(self, table, terms=None, normalized=False):
        self.table = table
        cleaned = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}
        for exps in cleaned:
            if len(exps) != table.size:
                raise ValidationError("exponent vector does not match the symbol table")
        self.terms = cleaned if normalized else _reduce_terms(cleaned, table)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            _check_table(self.table, other.table)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.table.constant(other)
        return NotImplemented

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return Scalar(self.table, out, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.table, {e: -c for e, c in self.terms.items()}, normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.table.zero()
        return Scalar(self.table, _multiply_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise ValidationError("only non-negative integer powers are supported")
        result = self.table.one()
        for _ in range(power):
            result = result * self
        return result

    def __truediv__(self, other):
        return ScalarFraction(self) / other

    def __rtruediv__(self, other):
        return self.table.element(other) / ScalarFraction(self)

    def scale(self, factor):
        factor = Fraction(factor)
        return Scalar(self.table, {e: c * factor for e, c in self.terms.items()}, normalized=True)

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValidationError(f"{self} is not a constant")
        return self.terms.get(self.table.zero_exponents(), Fraction(0))

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, ScalarFraction) else NotImplemented
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -----------------------------------------------------
    def free_symbols(self):
        used = set()
        for exps in self.terms:
            used.update(self.table.symbols[i] for i, e in enumerate(exps) if e)
        return used

    def degree(self, name):
        position = self.table.index(name)
        return max((exps[position] for exps in self.terms), default=0)

    def split(self, name):
        """Write self = head + tail*name for a symbol of degree at most one"""
        position = self.table.index(name)
        head, tail = {}, {}
        for exps, coeff in self.terms.items():
            if exps[position] == 0:
                head[exps] = coeff
            elif exps[position] == 1:
                tail[exps[:position] + (0,) + exps[position + 1:]] = coeff
            else:
                raise ValidationError(f"{self} has degree above one in {name}")
        return (Scalar(self.table, head, normalized=True),
                Scalar(self.table, tail, normalized=True))

    def leading_coefficient(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def embed(self, table):
        """Re-express in a table that extends this one (same leading symbols and rules)"""
        if table.symbols[: self.table.size] != self.table.symbols:
            raise TableMismatchError("target table does not extend the source table")
        pad = (0,) * (table.size - self.table.size)
        return Scalar(table, {e + pad: c for e, c in self.terms.items()})

    def substitute(self, bindings):
        return substitute(self, bindings)

    # -- output --------------------------------------------------------
    def to_sympy(self):
        symbols = self.table.sympy_symbols()
        total = sp.Integer(0)
        for exps, coeff in self.terms.items():
            term = sp.Rational(coeff.numerator, coeff.denominator)
            for sym, power in zip(symbols, exps):
                if power:
                    term *= sym ** power
            total += term
        return total

    def __str__(self):
        return sp.sstr(self.to_sympy()).replace("**", "^")

    def __repr__(self):
        return f"Scalar({self})"


class ScalarFraction:
    """Quotient num/den of Scalars; the element type of every vector, matrix and tensor"""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.table.one()
        _check_table(num.table, den.table)
        if den.is_zero():
            raise DivisionByZeroError("division by a scalar whose normal form is zero")
        self.num, self.den = _reduce_fraction(num, den)

    @property
    def table(self):
        return self.num.table

    def _coerce(self, other):
        if isinstance(other, ScalarFraction):
            _check_table(self.table, other.table)
            return other
        if isinstance(other, Scalar):
            _check_table(self.table, other.table)
            return ScalarFraction(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ScalarFraction(self.table.constant(other))
        return NotImplemented

    def _is_one(self, scalar):
        return scalar.terms == {self.table.zero_exponents(): 1}

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return ScalarFraction(self.num + other.num, self.den)
        return ScalarFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        result = object.__new__(ScalarFraction)
        result.num, result.den = -self.num, self.den
        return result

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ScalarFraction(self.table.zero())
        if self._is_one(self.den) and self._is_one(other.den):
            result = object.__new__(ScalarFraction)
            result.num, result.den = self.num * other.num, self.den
            return result
        return ScalarFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.num.is_zero():
            raise DivisionByZeroError("inverse of zero")
        return ScalarFraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, power):
        if not isinstance(power, int):
            raise ValidationError("only integer powers are supported")
        base = self if power >= 0 else self.inv()
        result = ScalarFraction(self.table.one())
        for _ in range(abs(power)):
            result = result * base
        return result

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self._is_one(self.den)

    def as_scalar(self):
        if not self.is_polynomial():
            raise ValidationError(f"{self} is not a polynomial")
        return self.num

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None

    def free_symbols(self):
        return self.num.free_symbols() | self.den.free_symbols()

    def substitute(self, bindings):
        num = substitute(self.num, bindings)
        den = substitute(self.den, bindings)
        if den.is_zero():
            raise DivisionByZeroError(f"denominator of {self} vanishes under {dict(bindings)}")
        return ScalarFraction(num, den)

    def embed(self, table):
        return ScalarFraction(self.num.embed(table), self.den.embed(table))

    def to_sympy(self):
        return self.num.to_sympy() / self.den.to_sympy()

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"ScalarFraction({self})"


def _polynomial_gcd(num, den):
    symbols = num.table.sympy_symbols()
    if not symbols:
        return None
    left = sp.Poly(num.to_sympy(), *symbols, domain=sp.QQ)
    right = sp.Poly(den.to_sympy(), *symbols, domain=sp.QQ)
    common = sp.gcd(left, right)
    if common.is_ground:
        return None
    return left.exquo(common), right.exquo(common)


def _from_poly(poly, table):
    return Scalar(table, {
        tuple(monom): Fraction(int(coeff.p), int(coeff.q))
        for monom, coeff in poly.as_dict().items()
    })


def _reduce_fraction(num, den):
    table = num.table
    if num.is_zero():
        return num, table.one()
    if den.is_constant():
        value = den.constant_value()
        return (num if value == 1 else num.scale(1 / value)), table.one()

    # Rationalize: multiply by the conjugate in each ruled symbol, highest first.
    for position in reversed(table.ruled_indices):
        name = table.symbols[position]
        if den.degree(name) == 0:
            continue
        head, tail = den.split(name)
        conjugate = head - tail * table.symbol(name)
        reduced = den * conjugate
        if reduced.is_zero():
            raise DivisionByZeroError(f"{den} is a zero divisor under the declared rules")
        num, den = num * conjugate, reduced

    if den.is_constant():
        return num.scale(1 / den.constant_value()), table.one()

    quotients = _polynomial_gcd(num, den)
    if quotients is not None:
        num, den = (_from_poly(q, table) for q in quotients)
        if den.is_constant():
            return num.scale(1 / den.constant_value()), table.one()

    lead = den.leading_coefficient()
    return num.scale(1 / lead), den.scale(1 / lead)


def substitute(value, bindings):
    """
    Evaluate the bound symbols at rational values, leaving the others untouched

    Args:
        value: Scalar (ScalarFraction values use their own substitute method)
        bindings: mapping symbol name -> int or Fraction

    Returns:
        Scalar in normal form
    """
    if isinstance(value, ScalarFraction):
        return value.substitute(bindings)
    table = value.table
    values = {}
    for name, bound in bindings.items():
        if isinstance(bound, bool) or not isinstance(bound, (int, Fraction)):
            raise ValidationError(f"binding for {name} must be an exact rational, got {bound!r}")
        values[table.index(name)] = Fraction(bound)

    for position, bound in values.items():
        if position not in table._rule_terms:
            continue
        name = table.symbols[position]
        rhs = _evaluate(Scalar(table, table._rule_terms[position]), values)
        if not rhs.is_constant():
            raise RuleViolationError(
                f"cannot bind ruled symbol {name}: its rule still depends on {sorted(rhs.free_symbols())}"
            )
        if rhs.constant_value() != bound * bound:
            raise RuleViolationError(
                f"binding {name}={bound} violates {name}^2 = {rhs}"
            )
    return _evaluate(value, values)


def _evaluate(value, values):
    table = value.table
    out = defaultdict(Fraction)
    for exps, coeff in value.terms.items():
        factor = coeff
        kept = list(exps)
        for position, bound in values.items():
            if exps[position]:
                factor *= bound ** exps[position]
                kept[position] = 0
        out[tuple(kept)] += factor
    return normalize(out, table)


def sign_of(value):
    """
    Exact sign of a constant element, or None when it cannot be decided

    Decidable values are rationals and r0 + r1*v with v^2 -> q for a positive
    rational q (v is read as the positive root).
    """
    if isinstance(value, ScalarFraction):
        top, bottom = sign_of(value.num), sign_of(value.den)
        if top is None or bottom is None:
            return None
        return top * bottom
    if value.is_zero():
        return 0
    if value.is_constant():
        return 1 if value.constant_value() > 0 else -1
    used = value.free_symbols()
    if len(used) != 1:
        return None
    name = used.pop()
    rule = value.table.rule_for(name)
    if rule is None or value.degree(name) != 1:
        return None
    square = rule.replacement(value.table)
    if not square.is_constant() or square.constant_value() <= 0:
        return None
    head, tail = value.split(name)
    r0, r1, q = head.constant_value(), tail.constant_value(), square.constant_value()
    if r0 >= 0 and r1 >= 0:
        return 1
    if r0 <= 0 and r1 <= 0:
        return -1
    # opposite signs: compare r0^2 with r1^2 * q
    dominant = r0 if r0 * r0 > r1 * r1 * q else r1
    return 1 if dominant > 0 else -1


def _rational_sqrt(value):
    if value < 0:
        return None
    top, bottom = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if top * top == value.numerator and bottom * bottom == value.denominator:
        return Fraction(top, bottom)
    return None


def sqrt_exact(value):
    """
    Positive square root of a constant, exactly, when it lies in Q or Q*v for a
    ruled symbol v with a positive constant rule; None otherwise
    """
    element = value if isinstance(value, ScalarFraction) else ScalarFraction(value)
    table = element.table
    if not element.is_constant():
        return None
    target = element.constant_value()
    root = _rational_sqrt(target)
    if root is not None:
        return table.element(root)
    for rule in table.rules:
        square = rule.replacement(table)
        if not square.is_constant() or square.constant_value() <= 0:
            continue
        root = _rational_sqrt(target / square.constant_value())
        if root is not None:
            return ScalarFraction(table.symbol(rule.symbol).scale(root))
    return None

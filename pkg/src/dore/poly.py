"""Sparse exact multivariate polynomials over a fixed scalar context.

A monomial is a tuple of nonnegative exponents aligned with the
context's ordered generator list; a polynomial maps monomials to
nonzero field scalars.  Instances are immutable value objects: every
operation returns a new canonical polynomial, and mixing contexts is a
hard error, never a coercion.

Terms print in degree-lexicographic order, leading term first, so equal
polynomials always render identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContextMismatch, UnknownGenerator
from .fields import Field, Scalar

Monomial = tuple  # exponent tuple, one entry per generator


@dataclass(frozen=True)
class Context:
    """A scalar field together with an ordered list of generator names."""

    field: Field
    generators: tuple[str, ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"duplicate generator names in {self.generators}")
        for name in self.generators:
            if not name.isidentifier():
                raise ValueError(f"generator name {name!r} is not an identifier")

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise UnknownGenerator(
                f"{name!r} is not one of the declared generators {list(self.generators)}"
            ) from None

    def require_same(self, other: "Context") -> None:
        if self != other:
            raise ContextMismatch(f"contexts differ: {self} vs {other}")


def deglex_key(mono: Monomial):
    return (sum(mono), mono)


def format_monomial(ctx: Context, mono: Monomial) -> str:
    """Render a monomial like ``x^2*z``; the empty monomial renders as ""."""
    parts = []
    for name, e in zip(ctx.generators, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial; construct through the classmethods."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict):
        self.ctx = ctx
        self.terms = terms  # canonical: no zero coefficients

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_terms(cls, ctx: Context, items) -> "Polynomial":
        """Merge like terms and drop zeros (canonicalization)."""
        field = ctx.field
        acc: dict = {}
        for mono, coeff in items:
            if len(mono) != len(ctx.generators):
                raise ValueError(f"exponent tuple {mono} does not fit {ctx.generators}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            mono = tuple(mono)
            acc[mono] = field.add(acc.get(mono, field.zero()), field.of(coeff))
        return cls(ctx, {m: c for m, c in acc.items() if not field.is_zero(c)})

    @classmethod
    def zero(cls, ctx: Context) -> "Polynomial":
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: Context) -> "Polynomial":
        return cls.const(ctx, 1)

    @classmethod
    def const(cls, ctx: Context, value) -> "Polynomial":
        c = ctx.field.of(value)
        if ctx.field.is_zero(c):
            return cls(ctx, {})
        return cls(ctx, {(0,) * len(ctx.generators): c})

    @classmethod
    def gen(cls, ctx: Context, name: str) -> "Polynomial":
        i = ctx.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(ctx.generators)))
        return cls(ctx, {mono: ctx.field.one()})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self.ctx.require_same(other.ctx)
        field = self.ctx.field
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = field.add(out.get(mono, field.zero()), c)
            if field.is_zero(s):
                out.pop(mono, None)
            else:
                out[mono] = s
        return Polynomial(self.ctx, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        field = self.ctx.field
        return Polynomial(self.ctx, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self.ctx.require_same(other.ctx)
        field = self.ctx.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = field.add(out.get(mono, field.zero()), field.mul(c1, c2))
                if field.is_zero(s):
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return Polynomial(self.ctx, out)

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take a nonnegative integer")
        result = Polynomial.one(self.ctx)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, scalar) -> "Polynomial":
        field = self.ctx.field
        c = field.of(scalar)
        if field.is_zero(c):
            return Polynomial.zero(self.ctx)
        return Polynomial(self.ctx, {m: field.mul(v, c) for m, v in self.terms.items()})

    def substitute(self, images: dict[str, "Polynomial"]) -> "Polynomial":
        """Apply the algebra endomorphism sending each generator to its image."""
        if set(images) != set(self.ctx.generators):
            raise ValueError("substitution needs exactly one image per generator")
        for img in images.values():
            self.ctx.require_same(img.ctx)
        result = Polynomial.zero(self.ctx)
        for mono, c in self.terms.items():
            term = Polynomial.const(self.ctx, c)
            for name, e in zip(self.ctx.generators, mono):
                if e:
                    term = term * images[name] ** e
            result = result + term
        return result

    # -- queries -----------------------------------------------------------

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(tuple(mono), self.ctx.field.zero())

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if not self.terms:
            return self.ctx.field.zero()
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Maximum total degree of any term; 0 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        field = self.ctx.field
        pieces = []
        for mono in sorted(self.terms, key=deglex_key, reverse=True):
            neg, mag = field.split_sign(self.terms[mono])
            mstr = format_monomial(self.ctx, mono)
            if not mstr:
                body = field.to_str(mag)
            elif mag == field.one():
                body = mstr
            else:
                body = f"{field.to_str(mag)}*{mstr}"
            pieces.append((neg, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"

"""Exact arithmetic in the free associative algebra over the rationals.

Elements are sparse noncommutative polynomials: finite maps from words
(tuples of generator indices) to nonzero `Fraction` coefficients.  Words do
not commute, so `x*y` and `y*x` are distinct monomials.  All values are
immutable after construction and all operations are pure.

The canonical term order is degree-lexicographic: words compare first by
length, then lexicographically by generator index.  Printing and iteration
follow that order, so output is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import GeneratorSetMismatchError, PolyParseError

# A word is a tuple of 0-based generator indices; () is the unit monomial.
Word = tuple[int, ...]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INT_RE = re.compile(r"[0-9]+")


def default_names(count: int) -> tuple[str, ...]:
    """Default generator names: x, y, z for up to three, else x1..xN."""
    if count <= 3:
        return ("x", "y", "z")[:count]
    return tuple(f"x{i + 1}" for i in range(count))


@dataclass(frozen=True)
class GeneratorSet:
    """A finite ordered alphabet of free generators."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise ValueError("need at least one generator")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"generator names must be distinct: {self.names}")
        for name in self.names:
            if not _IDENT_RE.fullmatch(name):
                raise ValueError(f"invalid generator name: {name!r}")

    @classmethod
    def of_size(cls, count: int) -> "GeneratorSet":
        return cls(default_names(count))

    @property
    def count(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word_str(self, word: Word) -> str:
        """Render a word in the polynomial grammar (e.g. ``x^2*y``)."""
        if not word:
            return "1"
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            run = j - i
            name = self.names[word[i]]
            parts.append(name if run == 1 else f"{name}^{run}")
            i = j
        return "*".join(parts)


def word_key(word: Word) -> tuple[int, Word]:
    """Sort key for the degree-lexicographic order."""
    return (len(word), word)


class NcPoly:
    """A noncommutative polynomial with exact rational coefficients.

    Supports +, -, *, scalar multiplication and exact equality.  The term
    table never stores a zero coefficient.
    """

    __slots__ = ("gens", "_terms")

    def __init__(self, gens: GeneratorSet, terms: Mapping[Word, Fraction] | None = None):
        table: dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                for idx in word:
                    if not 0 <= idx < gens.count:
                        raise ValueError(f"word {word} uses generator index {idx} "
                                         f"outside 0..{gens.count - 1}")
                table[tuple(word)] = coeff
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_terms", table)

    def __setattr__(self, name, value):
        raise AttributeError("NcPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, gens: GeneratorSet) -> "NcPoly":
        return cls(gens)

    @classmethod
    def one(cls, gens: GeneratorSet) -> "NcPoly":
        return cls(gens, {(): Fraction(1)})

    @classmethod
    def constant(cls, gens: GeneratorSet, value) -> "NcPoly":
        return cls(gens, {(): Fraction(value)})

    @classmethod
    def generator(cls, gens: GeneratorSet, index: int) -> "NcPoly":
        if not 0 <= index < gens.count:
            raise ValueError(f"no generator with index {index}")
        return cls(gens, {(index,): Fraction(1)})

    @classmethod
    def monomial(cls, gens: GeneratorSet, word: Iterable[int], coeff=1) -> "NcPoly":
        return cls(gens, {tuple(word): Fraction(coeff)})

    @classmethod
    def generators(cls, gens: GeneratorSet) -> list["NcPoly"]:
        return [cls.generator(gens, i) for i in range(gens.count)]

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in canonical (deglex) order."""
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def coefficient(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Max word length over terms; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def multidegree(self, index: int) -> int:
        """Max number of occurrences of one generator in any term; -1 for 0."""
        if not 0 <= index < self.gens.count:
            raise ValueError(f"no generator with index {index}")
        if not self._terms:
            return -1
        return max(w.count(index) for w in self._terms)

    def leading_word(self) -> Word:
        if not self._terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self._terms, key=word_key)

    # -- arithmetic --------------------------------------------------------

    def _check_gens(self, other: "NcPoly"):
        if self.gens != other.gens:
            raise GeneratorSetMismatchError(
                f"operands over different generator sets: "
                f"{self.gens.names} vs {other.gens.names}")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check_gens(other)
        table = dict(self._terms)
        for word, coeff in other._terms.items():
            acc = table.get(word, Fraction(0)) + coeff
            if acc:
                table[word] = acc
            else:
                table.pop(word, None)
        return NcPoly(self.gens, table)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.gens, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "NcPoly":
        scalar = Fraction(scalar)
        if scalar == 0:
            return NcPoly.zero(self.gens)
        return NcPoly(self.gens, {w: scalar * c for w, c in self._terms.items()})

    def __rmul__(self, scalar) -> "NcPoly":
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check_gens(other)
        table: dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                acc = table.get(word, Fraction(0)) + c1 * c2
                if acc:
                    table[word] = acc
                else:
                    table.pop(word, None)
        return NcPoly(self.gens, table)

    def __pow__(self, exponent: int) -> "NcPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = NcPoly.one(self.gens)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.gens == other.gens and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.gens, frozenset(self._terms.items())))

    # -- substitution ------------------------------------------------------

    def substitute(self, images: Sequence, one):
        """Evaluate at `images` in any associative unital ring.

        `images[i]` replaces generator i; `one` must be the multiplicative
        identity of the target ring.  Words map to ordered products, extended
        linearly with the rational coefficients acting as scalars, so the
        result is the value of the unique unital algebra morphism sending
        the generators to `images`.
        """
        if len(images) != self.gens.count:
            raise ValueError(f"expected {self.gens.count} images, got {len(images)}")
        result = 0 * one
        for word, coeff in self.terms():
            value = one
            for idx in word:
                value = value * images[idx]
            result = result + coeff * value
        return result

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for word, coeff in self.terms():
            mono = self.gens.word_str(word)
            if not word:
                body = _format_rational(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{_format_rational(abs(coeff))}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"NcPoly({self})"


def _format_rational(value: Fraction) -> str:
    return str(value)


# -- parser ----------------------------------------------------------------
#
# poly   := ['+'|'-'] term (('+'|'-') term)*
# term   := coeff | coeff '*' mono | mono
# mono   := factor ('*' factor)*
# factor := ident ('^' posint)?
# coeff  := integer | integer '/' posint
#
# Whitespace is insignificant.  Identifiers must name generators.

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect_int(self) -> int:
        self.skip_ws()
        match = _INT_RE.match(self.text, self.pos)
        if not match:
            raise PolyParseError("expected an integer", self.pos)
        self.pos = match.end()
        return int(match.group())

    def try_ident(self) -> str | None:
        self.skip_ws()
        match = _IDENT_RE.match(self.text, self.pos)
        if not match:
            return None
        self.pos = match.end()
        return match.group()


def parse_poly(text: str, gens: GeneratorSet) -> NcPoly:
    """Parse polynomial text over the given generators.

    Raises `PolyParseError` with the offending position on malformed input,
    unknown generator names, and zero or negative exponents.
    """
    scanner = _Scanner(text)
    table: dict[Word, Fraction] = {}

    sign = 1
    if scanner.take("-"):
        sign = -1
    else:
        scanner.take("+")

    while True:
        coeff, word = _parse_term(scanner, gens)
        coeff *= sign
        acc = table.get(word, Fraction(0)) + coeff
        if acc:
            table[word] = acc
        else:
            table.pop(word, None)

        char = scanner.peek()
        if char == "":
            break
        if char == "+":
            sign = 1
        elif char == "-":
            sign = -1
        else:
            raise PolyParseError(f"unexpected character {char!r}", scanner.pos)
        scanner.pos += 1

    return NcPoly(gens, table)


def _parse_term(scanner: _Scanner, gens: GeneratorSet) -> tuple[Fraction, Word]:
    char = scanner.peek()
    if char.isdigit():
        numerator = scanner.expect_int()
        coeff = Fraction(numerator)
        if scanner.take("/"):
            at = scanner.pos
            denominator = scanner.expect_int()
            if denominator == 0:
                raise PolyParseError("zero denominator", at)
            coeff = Fraction(numerator, denominator)
        if scanner.take("*"):
            word = _parse_mono(scanner, gens)
            return coeff, word
        return coeff, ()
    word = _parse_mono(scanner, gens)
    return Fraction(1), word


def _parse_mono(scanner: _Scanner, gens: GeneratorSet) -> Word:
    letters: list[int] = []
    while True:
        at = scanner.pos
        scanner.skip_ws()
        at = scanner.pos
        name = scanner.try_ident()
        if name is None:
            raise PolyParseError("expected a generator name", at)
        if name not in gens.names:
            raise PolyParseError(f"unknown generator {name!r}", at)
        index = gens.index(name)
        exponent = 1
        if scanner.take("^"):
            at = scanner.pos
            exponent = scanner.expect_int()
            if exponent <= 0:
                raise PolyParseError("exponent must be a positive integer", at)
        letters.extend([index] * exponent)
        if not scanner.take("*"):
            break
        # after '*' either another factor or a malformed input; a digit here
        # is not allowed by the grammar (coefficients lead a term)
    return tuple(letters)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" strings as exact rationals."""
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q" (or "p" for integers)."""
    return str(Fraction(value))

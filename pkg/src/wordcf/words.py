"""The recursive two-letter word, its auxiliary decompositions, and the
letter-to-polynomial encodings.

The infinite word is the limit of the blocks B(0) = empty, B(1) = "1",
B(n) = B(n-1) 2 B(n-2) 2 B(n-1); every block is a prefix of the next.  Block
lengths satisfy len(n+1) = 2*len(n) + len(n-1) + 2.  Words are stored as
strings over the symbols "1"/"2"; an alphabet pair maps the symbols to field
elements (default (1, 2)) only when a word is encoded as a polynomial.

Infinite-word access is by prefix materialization from the memoized block
ladder; at the scales used here (<= ~10^6 letters) this keeps stream
comparisons trivial.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable

from .fields import QQ
from .poly import Polynomial, RationalFunction
from .series import LaurentSeries

_SYMBOLS = frozenset("12")


@dataclass(frozen=True)
class Word:
    """Finite word over a two-letter alphabet of field elements."""

    symbols: str
    alphabet: tuple = (1, 2)

    def __post_init__(self):
        if not _SYMBOLS.issuperset(self.symbols):
            raise ValueError("word symbols must be '1' or '2'")
        a, b = self.alphabet
        if a == b:
            raise ValueError("alphabet letters must be distinct")

    def __len__(self):
        return len(self.symbols)

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet)

    def __mul__(self, k: int) -> "Word":
        return Word(self.symbols * k, self.alphabet)

    def __getitem__(self, item) -> "Word":
        if isinstance(item, slice):
            return Word(self.symbols[item], self.alphabet)
        return Word(self.symbols[item], self.alphabet)

    def with_alphabet(self, alphabet) -> "Word":
        return Word(self.symbols, tuple(alphabet))

    def values(self) -> tuple:
        a, b = self.alphabet
        return tuple(a if ch == "1" else b for ch in self.symbols)

    def startswith(self, other: "Word") -> bool:
        return self.alphabet == other.alphabet and self.symbols.startswith(
            other.symbols
        )

    def __str__(self):
        if self.alphabet == (1, 2):
            return self.symbols
        return ",".join(str(v) for v in self.values())


# Memoized block ladder; read-only once built.
_blocks: list[str] = ["", "1"]


def _block_symbols(n: int) -> str:
    if n < 0:
        raise ValueError("block index must be nonnegative")
    while len(_blocks) <= n:
        m = len(_blocks)
        _blocks.append(_blocks[m - 1] + "2" + _blocks[m - 2] + "2" + _blocks[m - 1])
    return _blocks[n]


def block(n: int) -> Word:
    """The n-th block of the recursion (length table entry n)."""
    return Word(_block_symbols(n))


def lengths(upto: int) -> tuple[int, ...]:
    """Block lengths 0..upto from the recurrence len(n+1)=2len(n)+len(n-1)+2."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    out = [0, 1]
    while len(out) <= upto:
        out.append(2 * out[-1] + out[-2] + 2)
    return tuple(out[: upto + 1])


def length_of(n: int) -> int:
    return lengths(n)[n]


def prefix(count: int) -> Word:
    """First ``count`` letters of the infinite word."""
    if count < 0:
        raise ValueError("prefix length must be nonnegative")
    n = 0
    while length_of(n) < count:
        n += 1
    return Word(_block_symbols(n)[:count])


def _sqrt2_mul(x, y):
    # (a + b*sqrt2)(c + d*sqrt2) exactly, as integer pairs.
    a, b = x
    c, d = y
    return (a * c + 2 * b * d, a * d + b * c)


def length_closed_form_ok(n: int) -> bool:
    """Compare the recurrence against the closed form, exactly in Z[sqrt2]."""
    plus = (2, 1)
    minus = (2, -1)
    base_p, base_m = (1, 1), (1, -1)
    for _ in range(n):
        plus = _sqrt2_mul(plus, base_p)
        minus = _sqrt2_mul(minus, base_m)
    total = (plus[0] + minus[0], plus[1] + minus[1])
    if total[1] != 0 or total[0] % 4 != 0:
        return False
    return total[0] // 4 - 1 == length_of(n)


@dataclass(frozen=True)
class AuxWords:
    """The decomposition words attached to index n.

    u = B(n) 2 B(n-1), v = 2 B(n); u = g + f and v = h + f with the last
    letters of g and h distinct; j is the reversed-order block chain with
    length equal to f; i is the residual with v(n-1) v(n) = 2 j i; up is the
    extended block u(n+1) 2.
    """

    n: int
    u: Word
    v: Word
    f: Word
    g: Word
    h: Word
    j: Word
    i: Word
    up: Word


@functools.lru_cache(maxsize=None)
def _aux_symbols(n: int) -> tuple[str, str, str, str]:
    # (f, g, h, j) ladders as raw strings
    if n < 1:
        raise ValueError("aux words are defined for n >= 1")
    if n == 1:
        return "", "12", "21", ""
    f_prev, g_prev, h_prev, j_prev = _aux_symbols(n - 1)
    b_prev = _block_symbols(n - 1)
    f = f_prev + "2" + b_prev
    h = "2" + g_prev
    g = _u_symbols(n - 1) + h_prev
    j = b_prev + "2" + j_prev
    return f, g, h, j


def _u_symbols(n: int) -> str:
    return _block_symbols(n) + "2" + _block_symbols(n - 1)


def _v_symbols(n: int) -> str:
    return "2" + _block_symbols(n)


def aux_words(n: int) -> AuxWords:
    """Build and validate all decomposition words for index n >= 1."""
    f, g, h, j = _aux_symbols(n)
    u = _u_symbols(n)
    v = _v_symbols(n)
    up = _u_symbols(n + 1) + "2"
    ell = lengths(n + 1)
    vv = _v_symbols(n - 1) + v
    if not vv.startswith("2" + j):
        raise ValueError(f"residual decomposition failed at n={n}")
    i = vv[1 + len(j) :]
    assert u == g + f and v == h + f
    assert g[-1] != h[-1]
    assert len(g) == (ell[n] + ell[n - 1] + 3) // 2
    assert len(f) == len(j) == (ell[n] + ell[n - 1] - 1) // 2
    assert len(up) == 3 * ell[n] + ell[n - 1] + 4
    return AuxWords(
        n=n,
        u=Word(u),
        v=Word(v),
        f=Word(f),
        g=Word(g),
        h=Word(h),
        j=Word(j),
        i=Word(i),
        up=Word(up),
    )


def last_letters_differ(a: Word, b: Word) -> bool:
    if len(a) == 0 or len(b) == 0:
        raise ValueError("empty word has no last letter")
    return a.symbols[-1] != b.symbols[-1]


def first_letters_differ(a: Word, b: Word) -> bool:
    if len(a) == 0 or len(b) == 0:
        raise ValueError("empty word has no first letter")
    return a.symbols[0] != b.symbols[0]


def word_poly(w: Word, field=QQ) -> Polynomial:
    """Encode a word as the polynomial with its letters as coefficients,
    first letter carrying the highest power of T."""
    return Polynomial(field, list(reversed(w.values())))


def word_fraction(w: Word, field=QQ) -> RationalFunction:
    """The word polynomial divided by T^len, reduced."""
    num = word_poly(w, field)
    k = len(w)
    if num.is_zero:
        return RationalFunction(num, Polynomial.one(field))
    # The denominator is the monomial T^k: reduce by the shared power of T.
    val = 0
    while not num.coeffs[val]:
        val += 1
    common = min(val, k)
    num = Polynomial._raw(field, num.coeffs[common:])
    return RationalFunction._from_coprime(
        num, Polynomial.monomial(field, field.one, k - common)
    )


def first_difference_rank(a: Iterable, b: Iterable, horizon: int | None = None) -> int:
    """1-based rank of the first position where the two streams differ."""
    paired = zip(a, b)
    if horizon is not None:
        paired = itertools.islice(paired, horizon)
    for rank, (x, y) in enumerate(paired, start=1):
        if x != y:
            return rank
    raise ValueError("streams agree to horizon")


def tail_periodic_symbols(head: str, period: str, count: int) -> str:
    """First ``count`` symbols of head followed by endlessly repeated period."""
    if count <= len(head):
        return head[:count]
    if not period:
        raise ValueError("empty period cannot reach the requested length")
    reps = -(-(count - len(head)) // len(period))
    return (head + period * reps)[:count]


@functools.lru_cache(maxsize=None)
def theta_series(prec: int, field=QQ) -> LaurentSeries:
    """Generating series of the infinite word: letter k at exponent -k."""
    if prec < 1:
        raise ValueError("prec must be at least 1")
    letters = prefix(prec).values()
    return LaurentSeries(field, -1, [field.coerce(v) for v in letters], -prec)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int
    status: str  # "pass" | "fail" | "skip"


def check_identities(n: int) -> list[IdentityCheck]:
    """Exact word equalities tying blocks to their decompositions at index n.

    Identities that are only defined from n >= 2 are reported as skipped at
    n = 1.  Any failure names the identity and the index.
    """
    if n < 1:
        raise ValueError("identities are checked for n >= 1")
    ell = lengths(n + 3)
    aux = aux_words(n)
    aux_next = aux_words(n + 1)
    b = {k: _block_symbols(k) for k in range(n + 4)}
    u, v = aux.u.symbols, aux.v.symbols
    v_prev = _v_symbols(n - 1)
    checks: list[IdentityCheck] = []

    def record(name: str, ok: bool):
        checks.append(IdentityCheck(name, n, "pass" if ok else "fail"))

    record("block(n+1) == u v", b[n + 1] == u + v)
    record(
        "block(n+2) == u v^3 v_prev v",
        b[n + 2] == u + v * 3 + v_prev + v,
    )
    if n >= 2:
        aux_prev = aux_words(n - 1)
        record(
            "u == u_prev v_prev^2",
            u == aux_prev.u.symbols + v_prev * 2,
        )
    else:
        checks.append(IdentityCheck("u == u_prev v_prev^2", n, "skip"))
    record(
        "v_prev v == 2 j i",
        v_prev + v == "2" + aux.j.symbols + aux.i.symbols,
    )
    i_prev = aux_words(n - 1).i.symbols if n >= 2 else "1"
    record("v == 2 j i_prev", v == "2" + aux.j.symbols + i_prev)
    record("h(n+1) == 2 g", aux_next.h.symbols == "2" + aux.g.symbols)
    record("g(n+1) == u h", aux_next.g.symbols == u + aux.h.symbols)
    up = aux.up.symbols
    record(
        "block(n+3) == up^2 block(n-1) 2 block(n) 2 block(n+2)",
        b[n + 3] == up * 2 + b[n - 1] + "2" + b[n] + "2" + b[n + 2],
    )
    a_word, b_word = residual_suffixes(n)
    record(
        "first letters of residual suffixes differ",
        first_letters_differ(a_word, b_word),
    )
    return checks


def residual_suffixes(n: int) -> tuple[Word, Word]:
    """The words a, b with block(n-1) 2 block(n) 2 block(n+2) = j a and
    up = j b; they are computed, not formula-built."""
    aux = aux_words(n)
    j = aux.j.symbols
    left = _block_symbols(n - 1) + "2" + _block_symbols(n) + "2" + _block_symbols(n + 2)
    if not left.startswith(j) or not aux.up.symbols.startswith(j):
        raise ValueError(f"residual decomposition failed at n={n}")
    return Word(left[len(j) :]), Word(aux.up.symbols[len(j) :])

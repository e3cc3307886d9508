"""Ordered alphabets, words, and the three comparison relations.

Symbols are byte codes (0-255). An :class:`OrderedAlphabet` fixes a total
order on a subset of byte codes; the derived inverse order ranks the same
symbols in reverse. Words are immutable byte sequences validated against
their alphabet, with a 1-indexed position API (``w.slice(i, j)`` is the
factor covering positions ``i..j`` inclusive).
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator

from lynfac.errors import AlphabetMismatchError, EmptyWordError


class Order(enum.Enum):
    """Which of the two derived total orders a comparison uses."""

    NORMAL = "normal"
    INVERSE = "inverse"


class Comparison(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class PrefixRelation(enum.Enum):
    """How two words relate under the prefix partial order."""

    LEFT_PROPER_PREFIX = "left-proper-prefix"    # x is a proper prefix of y
    RIGHT_PROPER_PREFIX = "right-proper-prefix"  # y is a proper prefix of x
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


class OrderedAlphabet:
    """A total order on byte symbols plus its derived inverse order.

    ``symbols`` lists the member codes from smallest to largest. The
    inverse order ranks symbol ``a`` at ``size - 1 - rank(a)``. With no
    argument the alphabet is all 256 byte values in numeric order.
    """

    __slots__ = ("_symbols", "_ranks", "_tables", "_members")

    def __init__(self, symbols: Iterable[int] | bytes | str | None = None):
        if symbols is None:
            codes = list(range(256))
        elif isinstance(symbols, str):
            codes = [ord(c) for c in symbols]
        else:
            codes = list(symbols)
        if not codes:
            raise ValueError("alphabet must contain at least one symbol")
        ranks: dict[int, int] = {}
        for i, c in enumerate(codes):
            if not 0 <= c <= 255:
                raise ValueError(f"symbol code out of byte range: {c}")
            if c in ranks:
                raise ValueError(f"duplicate symbol in alphabet: {c}")
            ranks[c] = i
        self._symbols = tuple(codes)
        self._ranks = ranks
        self._members = bytes(ranks)
        size = len(codes)
        normal = bytearray(256)
        inverse = bytearray(256)
        for c, r in ranks.items():
            normal[c] = r
            inverse[c] = size - 1 - r
        self._tables = {Order.NORMAL: bytes(normal), Order.INVERSE: bytes(inverse)}

    @classmethod
    def from_order_string(cls, listed: str | bytes) -> "OrderedAlphabet":
        """Alphabet from a smallest-to-largest listing of symbols.

        Bytes not mentioned in ``listed`` rank after the listed ones, in
        numeric byte order, so any input remains representable.
        """
        head = listed.encode("latin-1") if isinstance(listed, str) else bytes(listed)
        seen = set(head)
        if len(seen) != len(head):
            raise ValueError("order string lists a symbol twice")
        codes = list(head) + [c for c in range(256) if c not in seen]
        return cls(codes)

    @property
    def symbols(self) -> tuple[int, ...]:
        return self._symbols

    @property
    def size(self) -> int:
        return len(self._symbols)

    def __contains__(self, code: int) -> bool:
        return code in self._ranks

    def rank(self, code: int) -> int:
        return self._ranks[code]

    def rank_inverse(self, code: int) -> int:
        return len(self._symbols) - 1 - self._ranks[code]

    def key_table(self, order: Order) -> bytes:
        """256-entry translation table; translated bytes compare in ``order``."""
        return self._tables[order]

    def compare_symbols(self, a: int, b: int, order: Order = Order.NORMAL) -> Comparison:
        ka, kb = self._tables[order][a], self._tables[order][b]
        if ka < kb:
            return Comparison.LESS
        return Comparison.EQUAL if ka == kb else Comparison.GREATER

    def word(self, data: bytes | str) -> "Word":
        return Word(data, self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderedAlphabet) and self._symbols == other._symbols

    def __hash__(self) -> int:
        return hash(self._symbols)

    def __repr__(self) -> str:
        if self._symbols == tuple(range(256)):
            return "OrderedAlphabet(<all bytes>)"
        return f"OrderedAlphabet({bytes(self._symbols)!r})"


#: Shared default alphabet: all byte values in numeric order.
BYTE_ALPHABET = OrderedAlphabet()


class Word:
    """An immutable symbol sequence over an :class:`OrderedAlphabet`.

    Positions are 1-indexed throughout the public API; ``slice(i, j)``
    returns the factor ``w[i..j]`` inclusive. The empty word is a valid
    ``Word``, distinct from every nonempty word.
    """

    __slots__ = ("_data", "_alphabet", "_keys")

    def __init__(self, data: bytes | bytearray | str, alphabet: OrderedAlphabet | None = None):
        if isinstance(data, str):
            data = data.encode("latin-1")
        else:
            data = bytes(data)
        alphabet = alphabet if alphabet is not None else BYTE_ALPHABET
        if alphabet.size < 256 and data:
            stray = data.translate(None, alphabet._members)
            if stray:
                raise ValueError(f"symbol {stray[0]} not in alphabet")
        self._data = data
        self._alphabet = alphabet
        self._keys: dict[Order, bytes] = {}

    @property
    def alphabet(self) -> OrderedAlphabet:
        return self._alphabet

    @property
    def data(self) -> bytes:
        return self._data

    def __len__(self) -> int:
        return len(self._data)

    def is_empty(self) -> bool:
        return not self._data

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def at(self, i: int) -> int:
        """Symbol code at 1-indexed position ``i``."""
        if not 1 <= i <= len(self._data):
            raise IndexError(f"position {i} out of range 1..{len(self._data)}")
        return self._data[i - 1]

    def slice(self, i: int, j: int) -> "Word":
        """The factor ``w[i, j]``, positions inclusive; empty when ``j < i``."""
        if i < 1 or j > len(self._data) or j < i - 1:
            raise IndexError(f"factor range [{i}, {j}] invalid for length {len(self._data)}")
        return self._wrap(self._data[i - 1:j])

    def prefix(self, length: int) -> "Word":
        if not 0 <= length <= len(self._data):
            raise IndexError(f"prefix length {length} out of range")
        return self._wrap(self._data[:length])

    def suffix_from(self, i: int) -> "Word":
        """The suffix starting at 1-indexed position ``i``."""
        if not 1 <= i <= len(self._data) + 1:
            raise IndexError(f"suffix start {i} out of range")
        return self._wrap(self._data[i - 1:])

    def key_bytes(self, order: Order = Order.NORMAL) -> bytes:
        """Order-translated bytes: natural byte comparison of keys is ≺."""
        key = self._keys.get(order)
        if key is None:
            table = self._alphabet.key_table(order)
            if order is Order.NORMAL and self._alphabet.size == 256 \
                    and table == bytes(range(256)):
                key = self._data
            else:
                key = self._data.translate(table)
            self._keys[order] = key
        return key

    def _wrap(self, data: bytes) -> "Word":
        w = Word.__new__(Word)
        w._data = data
        w._alphabet = self._alphabet
        w._keys = {}
        return w

    def __add__(self, other: "Word") -> "Word":
        _require_same_alphabet(self, other)
        return self._wrap(self._data + other._data)

    def __mul__(self, times: int) -> "Word":
        return self._wrap(self._data * times)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Word) and self._data == other._data
                and self._alphabet == other._alphabet)

    def __hash__(self) -> int:
        return hash((self._data, self._alphabet))

    def to_text(self) -> str:
        return self._data.decode("latin-1")

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"


def _require_same_alphabet(x: Word, y: Word) -> None:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatchError("words are over different alphabets")


def _require_nonempty(*words: Word) -> None:
    for w in words:
        if w.is_empty():
            raise EmptyWordError("operation requires a nonempty word")


def lex_compare(x: Word, y: Word, order: Order = Order.NORMAL) -> Comparison:
    """Three-way lexicographic comparison; a proper prefix is smaller."""
    _require_same_alphabet(x, y)
    kx, ky = x.key_bytes(order), y.key_bytes(order)
    if kx == ky:
        return Comparison.EQUAL
    return Comparison.LESS if kx < ky else Comparison.GREATER


def lex_less(x: Word, y: Word, order: Order = Order.NORMAL) -> bool:
    return lex_compare(x, y, order) is Comparison.LESS


def ll_compare(x: Word, y: Word, order: Order = Order.NORMAL) -> bool:
    """The strict relation x ≪ y: x ≺ y and x is not a proper prefix of y.

    Equivalently, x and y disagree at some shared position and x holds the
    smaller symbol there.
    """
    _require_same_alphabet(x, y)
    _require_nonempty(x, y)
    kx, ky = x.key_bytes(order), y.key_bytes(order)
    return kx < ky and not ky.startswith(kx)


def prefix_relation(x: Word, y: Word) -> PrefixRelation:
    """Classify the pair under the prefix order; EQUAL iff x = y."""
    _require_same_alphabet(x, y)
    dx, dy = x.data, y.data
    if dx == dy:
        return PrefixRelation.EQUAL
    if dy.startswith(dx):
        return PrefixRelation.LEFT_PROPER_PREFIX
    if dx.startswith(dy):
        return PrefixRelation.RIGHT_PROPER_PREFIX
    return PrefixRelation.INCOMPARABLE


def lcp(x: Word, y: Word) -> Word:
    """Longest common prefix of the two words (order-independent)."""
    from lynfac._backend import kernels

    _require_same_alphabet(x, y)
    return x.prefix(kernels.lcp_len(x.data, y.data))


def lcp_length(x: Word, y: Word) -> int:
    from lynfac._backend import kernels

    _require_same_alphabet(x, y)
    return kernels.lcp_len(x.data, y.data)

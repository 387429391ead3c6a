"""Hirzebruch-Jung continued fractions and blow-up/blow-down on linear chains.

Chains are plain tuples of ints.  An entry ``b`` stands for a sphere of
self-intersection ``-b``; an entry ``1`` is a (-1)-curve.  Two flavours are
distinguished only by validation:

* an *HJ chain* has every entry >= 2 and is the resolution chain of ``n/a``;
* a *general chain* allows any entry >= 0 and appears in blow-down calculus.

Values are computed with the division-free continuant recursion, so chains
containing 0 or 1 never divide by zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import (
    ChainOverflow,
    IndexOutOfRange,
    InvalidChain,
    NotCoprime,
    NotMinusOne,
    OutOfRange,
    ParseError,
)

Chain = tuple[int, ...]

#: Largest magnitude any continuant may reach.
MAX_CONTINUANT = 2**63 - 1

_CHAIN_RE = re.compile(r"(0|[1-9][0-9]*)(,(0|[1-9][0-9]*))*")


class _Pair(NamedTuple):
    num: int
    den: int


class Continuant(_Pair):
    """Value ``num/den`` of a generalized chain, reduced, with ``den >= 0``.

    ``den == 0`` encodes the point at infinity and is normalized to ``1/0``.
    """

    __slots__ = ()

    def __new__(cls, num: int, den: int):
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        g = gcd(num, den)
        if g == 0:
            raise InvalidChain("0/0 is not a value")
        if g != 1:
            num, den = num // g, den // g
        return super().__new__(cls, num, den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


class ReductionStep(NamedTuple):
    index: int
    before: Chain
    after: Chain


@dataclass(frozen=True)
class ReductionTrace:
    initial: Chain
    steps: tuple[ReductionStep, ...]
    final: Chain

    @property
    def is_zero(self) -> bool:
        return self.final == (0,)

    @property
    def blow_downs(self) -> list[int]:
        return [s.index for s in self.steps]


def _check_bound(x: int) -> int:
    if abs(x) > MAX_CONTINUANT:
        raise ChainOverflow(f"continuant {x} exceeds 2**63-1")
    return x


def check_hj_chain(chain) -> Chain:
    if type(chain) is not tuple:
        chain = tuple(int(b) for b in chain)
    if not chain:
        raise InvalidChain("an HJ chain must be nonempty")
    if min(chain) < 2:
        raise InvalidChain(f"HJ chain entries must be >= 2, got {list(chain)}")
    return chain


def check_general_chain(chain, allow_empty: bool = False) -> Chain:
    if type(chain) is not tuple:
        chain = tuple(int(b) for b in chain)
    if not chain:
        if allow_empty:
            return chain
        raise InvalidChain("chain must be nonempty")
    if min(chain) < 0:
        raise InvalidChain(f"chain entries must be >= 0, got {list(chain)}")
    return chain


def expand(n: int, a: int) -> Chain:
    """Hirzebruch-Jung expansion of ``n/a`` with ``1 <= a < n`` coprime."""
    if a < 1 or a >= n:
        raise OutOfRange(f"need 1 <= a < n, got n={n}, a={a}")
    if gcd(n, a) != 1:
        raise NotCoprime(f"gcd({n}, {a}) != 1")
    _check_bound(n)
    out = []
    while a:
        d = n - a
        if d <= a:
            # A run of 2s keeps n - a fixed, so emit the whole run at once.
            k = a // d
            out.extend([2] * k)
            n, a = a - (k - 1) * d, a - k * d
        else:
            b = -(-n // a)
            out.append(b)
            n, a = a, b * a - n
    return tuple(out)


def continuants(chain) -> list[int]:
    """Return ``[P_1, ..., P_{r+2}]`` with ``P_i = b_i P_{i+1} - P_{i+2}``."""
    chain = check_general_chain(chain)
    ps = [0, 1]  # P_{r+2}, P_{r+1}, built backwards
    for b in reversed(chain):
        ps.append(_check_bound(b * ps[-1] - ps[-2]))
    return ps[::-1]


def _value(chain: Chain, increasing: bool = False) -> tuple[int, int]:
    # With every entry >= 2 the continuants grow strictly, so checking the
    # last one is enough; callers pass increasing=True only in that case.
    hi, lo = 1, 0
    if increasing:
        for b in reversed(chain):
            hi, lo = b * hi - lo, hi
        _check_bound(hi)
        return hi, lo
    for b in reversed(chain):
        hi, lo = b * hi - lo, hi
        if not -MAX_CONTINUANT <= hi <= MAX_CONTINUANT:
            raise ChainOverflow(f"continuant {hi} exceeds 2**63-1")
    return hi, lo


def evaluate(chain) -> Continuant:
    chain = check_general_chain(chain)
    return Continuant(*_value(chain, min(chain) >= 2))


def dual_chain(chain) -> Chain:
    n, a = _value(check_hj_chain(chain), True)
    return expand(n, n - a)


def reverse(chain) -> Chain:
    return tuple(reversed(check_hj_chain(chain)))


def blow_down(chain, k: int) -> Chain:
    """Contract the (-1)-curve at index ``k`` (0-based)."""
    chain = check_general_chain(chain)
    if not 0 <= k < len(chain):
        raise IndexOutOfRange(f"index {k} outside chain of length {len(chain)}")
    if chain[k] != 1:
        raise NotMinusOne(f"entry {k} is {chain[k]}, not 1")
    out = list(chain)
    for j in (k - 1, k + 1):
        if 0 <= j < len(out):
            out[j] -= 1
            if out[j] < 0:
                raise InvalidChain(f"blowing down {k} drives entry {j} below 0")
    del out[k]
    return tuple(out)


def blow_up(chain, pos: int) -> Chain:
    """Insert a (-1)-curve so that it sits at index ``pos`` of the result.

    ``pos`` ranges over ``0..len(chain)``; ``blow_down(blow_up(c, pos), pos) == c``.
    """
    chain = check_general_chain(chain, allow_empty=True)
    if not 0 <= pos <= len(chain):
        raise IndexOutOfRange(f"insertion point {pos} outside 0..{len(chain)}")
    out = list(chain)
    if pos > 0:
        out[pos - 1] += 1
    if pos < len(chain):
        out[pos] += 1
    out.insert(pos, 1)
    return tuple(out)


def reduce_zero(chain) -> ReductionTrace:
    """Blow down (-1)-curves, leftmost first, until none is left."""
    initial = before = check_general_chain(chain)
    work = list(initial)
    steps = []
    while 1 in work:
        k = work.index(1)
        if k > 0:
            work[k - 1] -= 1
        if k + 1 < len(work):
            work[k + 1] -= 1
        del work[k]
        if k > 0 and work[k - 1] < 0 or k < len(work) and work[k] < 0:
            blow_down(before, k)  # raises with the usual diagnostic
        after = tuple(work)
        steps.append(ReductionStep(k, before, after))
        before = after
    return ReductionTrace(initial, tuple(steps), before)


def zero_chain(n: int, a: int) -> Chain:
    """``[b_1..b_r, 1, a_e..a_1]`` for ``n/a``; it blows down to ``[0]``."""
    b = expand(n, a)
    return b + (1,) + tuple(reversed(dual_chain(b)))


def parse_chain(text: str, allow_empty: bool = False) -> Chain:
    """Parse the comma-separated chain grammar (base 10, no spaces)."""
    if text == "" and allow_empty:
        return ()
    if not _CHAIN_RE.fullmatch(text):
        raise ParseError(f"malformed chain {text!r}")
    return tuple(int(x) for x in text.split(","))


def render_chain(chain) -> str:
    return ",".join(str(b) for b in chain)

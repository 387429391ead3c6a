"""Class-W (Wahl) chains: recognition, parameterization and enumeration."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import NotClassW, NotCoprime, OutOfRange
from .hj_core import Chain, check_hj_chain, evaluate, expand


@dataclass(frozen=True)
class WahlParams:
    """A Wahl singularity ``1/p^2 (1, pq-1)`` and its resolution chain."""

    p: int
    q: int
    chain: Chain

    @property
    def n(self) -> int:
        return self.p * self.p

    @property
    def a(self) -> int:
        return self.p * self.q - 1


class NeighborhoodKind(enum.Enum):
    FLIPPING = "flipping"
    DIVISORIAL = "divisorial"


def is_class_w(chain) -> WahlParams:
    """Return the Wahl parameters of ``chain`` or raise :class:`NotClassW`."""
    chain = check_hj_chain(chain)
    v = evaluate(chain)
    n, a = v.num, v.den
    p = isqrt(n)
    if p * p != n:
        raise NotClassW(f"value {n}/{a}: {n} is not a perfect square")
    if (a + 1) % p:
        raise NotClassW(f"value {n}/{a}: {p} does not divide {a}+1")
    q = (a + 1) // p
    if not 1 <= q < p:
        raise NotClassW(f"value {n}/{a}: q={q} outside 1..{p - 1}")
    if gcd(p, q) != 1:
        raise NotClassW(f"value {n}/{a}: gcd(p, q) = gcd({p}, {q}) != 1")
    return WahlParams(p, q, chain)


def wahl_chain(p: int, q: int) -> Chain:
    if p < 2 or not 1 <= q < p:
        raise OutOfRange(f"need 1 <= q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    return expand(p * p, p * q - 1)


def wahl_pairs(max_p: int):
    """All valid ``(p, q)`` with ``2 <= p <= max_p``, in lexicographic order."""
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def move_left(chain: Chain) -> Chain:
    """Prepend a 2 and increment the last entry."""
    return (2,) + chain[:-1] + (chain[-1] + 1,)


def move_right(chain: Chain) -> Chain:
    """Increment the first entry and append a 2."""
    return (chain[0] + 1,) + chain[1:] + (2,)


def generate(max_p: int) -> set[Chain]:
    """Close ``{[4]}`` under both moves, keeping chains with ``p <= max_p``.

    Pruning on ``p`` is only sound if each move strictly increases ``p``; this
    is checked on every edge and a violation raises ``RuntimeError``.
    """
    if max_p < 2:
        raise OutOfRange(f"max_p must be >= 2, got {max_p}")
    seed = (4,)
    seen = {seed}
    queue = deque([(seed, 2)])
    while queue:
        chain, p = queue.popleft()
        for child in (move_left(chain), move_right(chain)):
            child_p = is_class_w(child).p
            if child_p <= p:
                raise RuntimeError(
                    f"move from {list(chain)} (p={p}) to {list(child)} "
                    f"did not increase p ({child_p})"
                )
            if child_p <= max_p and child not in seen:
                seen.add(child)
                queue.append((child, child_p))
    return seen


def bn1_kind(n: int) -> NeighborhoodKind:
    """Flipping for odd ``n``, divisorial for even ``n`` (``n >= 3``)."""
    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    return NeighborhoodKind.FLIPPING if n % 2 else NeighborhoodKind.DIVISORIAL


def bn1_statement(n: int) -> str:
    """The embedding certificate attached to :func:`bn1_kind`."""
    if bn1_kind(n) is NeighborhoodKind.FLIPPING:
        return f"B_{{{n},1}} embeds in V_{{-4}}"
    return f"B_{{{n},1}} embeds in B_{{2,1}} # CP2-bar (one blow-up)"

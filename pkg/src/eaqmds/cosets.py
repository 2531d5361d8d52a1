"""Index arithmetic for constacyclic codes of length n over GF(q^2).

With r = q + 1 the roots of x^n - alpha are delta^z for z in
O_rn = {1 + r*j : 0 <= j < n}, where delta has order rn.  Defining sets are
unions of orbits of multiplication by q^2 modulo rn inside O_rn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np
from sympy import n_order

from eaqmds.errors import (
    InvalidDefiningSet,
    MagnitudeExceeded,
    NonCoprimeLength,
    NotInAmbient,
    SNotInAmbient,
)

INDEX_LIMIT = 2**63


@dataclass(frozen=True)
class CosetSpace:
    q: int
    r: int
    n: int
    rn: int
    multiplier: int
    m: int
    s: int
    s_rule: str

    def in_ambient(self, z: int) -> bool:
        return 0 <= z < self.rn and z % self.r == 1 % self.r

    def ambient(self) -> list[int]:
        """O_rn in increasing order."""
        return [1 + self.r * j for j in range(self.n)]

    def residue(self, j: int) -> int:
        """The element 1 + r*j of O_rn, with j taken modulo n."""
        return 1 + self.r * (j % self.n)

    def j_index(self, z: int) -> int:
        return (z - 1) // self.r

    def s_minus_rj(self, j: int) -> int:
        return (self.s - self.r * j) % self.rn


def make_space(q: int, n: int, s_rule: Literal["odd", "even"]) -> CosetSpace:
    if n < 1 or q < 2:
        raise ValueError("need q >= 2 and n >= 1")
    if math.gcd(q, n) != 1:
        raise NonCoprimeLength(f"gcd({q}, {n}) != 1")
    r = q + 1
    rn = r * n
    if q * rn >= INDEX_LIMIT:
        raise MagnitudeExceeded(f"q*rn = {q * rn} exceeds 64-bit index arithmetic")
    multiplier = q * q % rn
    m = 1 if rn == 1 else int(n_order(q * q, rn))
    if s_rule == "odd":
        num = q * q + 1
    elif s_rule == "even":
        num = q * q - q
    else:
        raise ValueError(f"unknown s rule {s_rule!r}")
    if num % 2:
        raise SNotInAmbient(f"s is not an integer for q={q} under the {s_rule} rule")
    s = (num // 2) % rn
    if s % r != 1 % r:
        raise SNotInAmbient(f"s={s} is not 1 mod {r}")
    return CosetSpace(q, r, n, rn, multiplier, m, s, s_rule)


@dataclass(frozen=True)
class Coset:
    leader: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


def coset_of(space: CosetSpace, i: int) -> Coset:
    if not space.in_ambient(i):
        raise NotInAmbient(f"{i} is not in O_{space.rn}")
    orbit = [i]
    z = i * space.multiplier % space.rn
    while z != i:
        orbit.append(z)
        z = z * space.multiplier % space.rn
    orbit.sort()
    return Coset(orbit[0], tuple(orbit))


def all_cosets(space: CosetSpace) -> list[Coset]:
    """Partition of O_rn into cosets, ordered by leader."""
    seen: set[int] = set()
    out = []
    for z in space.ambient():
        if z not in seen:
            c = coset_of(space, z)
            seen.update(c.elements)
            out.append(c)
    return out


@dataclass(frozen=True, eq=False)
class DefiningSet:
    """A union of cosets, stored as its sorted residues."""

    space: CosetSpace
    residues: tuple[int, ...]

    def __post_init__(self):
        res = tuple(sorted(set(int(z) for z in self.residues)))
        object.__setattr__(self, "residues", res)
        sp = self.space
        members = set(res)
        for z in res:
            if not sp.in_ambient(z):
                raise InvalidDefiningSet(f"{z} is not in O_{sp.rn}")
            if z * sp.multiplier % sp.rn not in members:
                raise InvalidDefiningSet(f"not closed under q^2: {z} -> {z * sp.multiplier % sp.rn}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DefiningSet)
            and self.space == other.space
            and self.residues == other.residues
        )

    def __hash__(self) -> int:
        return hash((self.space, self.residues))

    def __len__(self) -> int:
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def __contains__(self, z: int) -> bool:
        return z in self.as_set()

    def as_set(self) -> frozenset[int]:
        return frozenset(self.residues)

    def _combine(self, other: DefiningSet, op) -> DefiningSet:
        if other.space != self.space:
            raise ValueError("defining sets live in different spaces")
        return DefiningSet(self.space, tuple(op(self.as_set(), other.as_set())))

    def __or__(self, other: DefiningSet) -> DefiningSet:
        return self._combine(other, frozenset.__or__)

    def __and__(self, other: DefiningSet) -> DefiningSet:
        return self._combine(other, frozenset.__and__)

    def __sub__(self, other: DefiningSet) -> DefiningSet:
        return self._combine(other, frozenset.__sub__)

    def __repr__(self) -> str:
        return f"DefiningSet(q={self.space.q}, n={self.space.n}, {list(self.residues)})"


def empty_set(space: CosetSpace) -> DefiningSet:
    return DefiningSet(space, ())


def full_set(space: CosetSpace) -> DefiningSet:
    return DefiningSet(space, tuple(space.ambient()))


def union_of_cosets(space: CosetSpace, reps: Iterable[int]) -> DefiningSet:
    """Union of the cosets containing each representative."""
    out: set[int] = set()
    for i in reps:
        out.update(coset_of(space, i).elements)
    return DefiningSet(space, tuple(out))


def s_minus_rj_union(space: CosetSpace, j_lo: int, j_hi: int) -> DefiningSet:
    """Union of C_{s - r j} for j_lo <= j <= j_hi (empty when j_hi < j_lo)."""
    return union_of_cosets(space, (space.s_minus_rj(j) for j in range(j_lo, j_hi + 1)))


def neg_q_image(space: CosetSpace, S: DefiningSet) -> DefiningSet:
    q, rn = space.q, space.rn
    return DefiningSet(space, tuple((-q * z) % rn for z in S.residues))


def decompose(space: CosetSpace, Z: DefiningSet) -> tuple[DefiningSet, DefiningSet]:
    """Split Z into Z1 = Z & (-qZ) and Z2 = Z - Z1."""
    z1 = Z & neg_q_image(space, Z)
    return z1, Z - z1


def is_dual_containing(space: CosetSpace, Z: DefiningSet) -> bool:
    image = neg_q_image(space, Z).as_set()
    return not any(z in image for z in Z.residues)


def dual_defining_set(space: CosetSpace, Z: DefiningSet) -> DefiningSet:
    """Defining set of the Hermitian dual: O_rn minus -qZ."""
    return full_set(space) - neg_q_image(space, Z)


def bch_designed_distance(space: CosetSpace, Z: DefiningSet) -> int:
    """1 + longest cyclic run of consecutive j with 1 + r*j in Z."""
    n = space.n
    hit = np.zeros(n, dtype=bool)
    hit[[space.j_index(z) for z in Z.residues]] = True
    if hit.all():
        return n + 1
    if not hit.any():
        return 1
    # start just after a gap so cyclic runs are not split
    start = int(np.flatnonzero(~hit)[0]) + 1
    rolled = np.roll(hit, -start)
    best = run = 0
    for h in rolled.tolist():
        run = run + 1 if h else 0
        best = max(best, run)
    return best + 1

"""Entanglement-assisted parameters derived from a constacyclic code."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from eaqmds.codes import ConstacyclicCode, parity_check_matrix
from eaqmds.cosets import CosetSpace, DefiningSet, decompose
from eaqmds.errors import NonpositiveLogicalDimension, OracleBudgetExceeded
from eaqmds.linalg import conj_transpose, mat_mul, rank


@dataclass(frozen=True)
class EaqecParams:
    """[[n, k, d; c]]_q together with the gap to the entanglement-assisted Singleton bound."""

    q: int
    n: int
    k: int
    d: int
    c: int

    @property
    def singleton_defect(self) -> int:
        return self.n + self.c - self.k - 2 * (self.d - 1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.d, self.c)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["singleton_defect"] = self.singleton_defect
        return out

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d};{self.c}]]_{self.q}"


def entangled_count(space: CosetSpace, Z: DefiningSet) -> int:
    return len(decompose(space, Z)[0])


def derive_eaqec(code: ConstacyclicCode, d: int, c: int) -> EaqecParams:
    if c < 0 or d < 1:
        raise ValueError("need c >= 0 and d >= 1")
    n = code.n
    k = 2 * code.k_classical - n + c
    if k <= 0:
        raise NonpositiveLogicalDimension(f"2k - n + c = {k} for [{n},{code.k_classical}] with c={c}")
    return EaqecParams(code.space.q, n, k, d, c)


def is_eaqmds(params: EaqecParams) -> bool:
    return params.singleton_defect == 0 and 2 * params.d <= params.n + 2


def rank_hh_star(code: ConstacyclicCode, max_field_order: int = 2**16) -> int:
    """rank(H H*) over GF(q^2), H the Euclidean parity-check matrix."""
    f = code.field
    if f.order > max_field_order:
        raise OracleBudgetExceeded(f"{f} exceeds the field-order budget {max_field_order}")
    if len(code.defining_set) == 0:
        return 0
    H = parity_check_matrix(code)
    return rank(f, mat_mul(f, H, conj_transpose(f, H, code.space.q)))

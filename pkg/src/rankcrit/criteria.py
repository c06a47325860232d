"""Rank verdicts from constant-term divisibility.

For y^2 = x^3 + p x (family "Ep", p = 1 or 9 mod 16) the tested quantity is
f_{3(p-1)/8}(0) mod p; for x^3 + y^3 = p (family "Ap", p = 1 mod 9) both
a_{(p-1)/3}(0) and x_{(p-1)/3}(0) are tested and must agree on divisibility.
Divisibility predicts rank 2 under BSD, non-divisibility rank 0.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

from ._primality import is_prime, primes_in
from .recurrences import A_VZ, F_E, X_A, constant_term_mod

EP_NOTE = "forward direction unconditional given S_p in Z; converse under BSD"
AP_NOTE = "unconditional forward; converse under BSD; k derived as (2p+1)/3"


class CrossCheckError(RuntimeError):
    """The a-path and x-path divisibility verdicts disagree (implementation bug)."""


class Admissibility(NamedTuple):
    ok: bool
    index: Optional[int]


@dataclass(frozen=True)
class CriterionVerdict:
    p: int
    family: str              # "Ep" | "Ap"
    path: str                # recurrence family key used: "f", "a" or "x"
    index: int               # recurrence index N or n
    weight_k: int
    residue: int             # F_index(0) mod p
    divisible: bool
    predicted_rank_bsd: int
    note: str

    def as_record(self) -> dict:
        return {
            "p": self.p,
            "family": self.family,
            "index": self.index,
            "k": self.weight_k,
            "residue": self.residue,
            "divisible": self.divisible,
            "predicted_rank_bsd": self.predicted_rank_bsd,
            "path": self.path,
        }


def admissible(p: int, family: str) -> Admissibility:
    """Whether p is prime and in the family's congruence class; index if so."""
    if family == "Ep":
        if is_prime(p) and p % 16 in (1, 9):
            return Admissibility(True, 3 * (p - 1) // 8)
        return Admissibility(False, None)
    if family == "Ap":
        if is_prime(p) and p % 9 == 1:
            return Admissibility(True, (p - 1) // 3)
        return Admissibility(False, None)
    raise ValueError(f"unknown family {family!r}")


def weight_for(p: int, family: str) -> int:
    if family == "Ep":
        return (3 * p + 1) // 4
    if family == "Ap":
        return (2 * p + 1) // 3
    raise ValueError(f"unknown family {family!r}")


def _verdict(p: int, family: str, path: str, index: int, residue: int, note: str) -> CriterionVerdict:
    divisible = residue == 0
    return CriterionVerdict(
        p=p,
        family=family,
        path=path,
        index=index,
        weight_k=weight_for(p, family),
        residue=residue,
        divisible=divisible,
        predicted_rank_bsd=2 if divisible else 0,
        note=note,
    )


def verdict_Ep(p: int) -> CriterionVerdict:
    ok, index = admissible(p, "Ep")
    if not ok:
        raise ValueError(f"{p} is not an admissible prime for Ep (needs p = 1, 9 mod 16)")
    residue = constant_term_mod(F_E, index, p)
    return _verdict(p, "Ep", "f", index, residue, EP_NOTE)


def verdict_Ap(p: int) -> tuple[CriterionVerdict, CriterionVerdict]:
    """(a-path, x-path) verdicts; raises CrossCheckError on disagreement."""
    ok, index = admissible(p, "Ap")
    if not ok:
        raise ValueError(f"{p} is not an admissible prime for Ap (needs p = 1 mod 9)")
    res_a = constant_term_mod(A_VZ, index, p)
    res_x = constant_term_mod(X_A, index, p)
    va = _verdict(p, "Ap", "a", index, res_a, AP_NOTE)
    vx = _verdict(p, "Ap", "x", index, res_x, AP_NOTE)
    if va.divisible != vx.divisible:
        raise CrossCheckError(
            f"p={p}: a-path residue {res_a} and x-path residue {res_x} disagree on divisibility"
        )
    return va, vx


def _verdicts_for(args: tuple[str, int]) -> list[CriterionVerdict]:
    family, p = args
    if family == "Ep":
        return [verdict_Ep(p)]
    return list(verdict_Ap(p))


def scan(family: str, lo: int, hi: int, jobs: int = 1) -> list[CriterionVerdict]:
    """Verdicts for every admissible prime in [lo, hi], ordered by p (then path)."""
    if lo < 2 or hi < lo:
        raise ValueError("range bounds must satisfy 2 <= lo <= hi")
    ps = [p for p in primes_in(lo, hi) if admissible(p, family).ok]
    tasks = [(family, p) for p in ps]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_verdicts_for, tasks))
    else:
        chunks = [_verdicts_for(t) for t in tasks]
    out: list[CriterionVerdict] = []
    for chunk in chunks:
        out.extend(chunk)
    out.sort(key=lambda v: (v.p, v.path))
    return out


def sp_congruence_rhs(p: int) -> int:
    """((p-1)/4)!^2 * 2^(4k-5) * 3^(3k-3) * f_N(0)^2 mod p, with k = (3p+1)/4, N = 3(p-1)/8.

    The normalized central value S_p is congruent to plus or minus this
    residue mod p whenever S_p is an integer.
    """
    ok, index = admissible(p, "Ep")
    if not ok:
        raise ValueError(f"{p} is not admissible for Ep")
    k = weight_for(p, "Ep")
    fact = 1
    for i in range(2, (p - 1) // 4 + 1):
        fact = fact * i % p
    f0 = constant_term_mod(F_E, index, p)
    return fact * fact % p * pow(2, 4 * k - 5, p) % p * pow(3, 3 * k - 3, p) % p * (f0 * f0 % p) % p

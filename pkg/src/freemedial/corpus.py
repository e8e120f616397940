"""Finite test models: small affine quandles and free 2-reductive n-symmetric quandles."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .finite import (
    FiniteBinaryTable,
    affine_quandle,
    check_I_quandle,
    check_reductivity,
    check_symmetry,
    free_2reductive_generators,
    free_2reductive_symmetric,
    greedy_generating_set,
    is_medial,
)
from .terms import VarietySpec


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    table: FiniteBinaryTable
    generators: tuple[int, ...]


def affine_corpus(max_k: int = 8) -> list[CorpusEntry]:
    """Aff(Z_k, u) for every k <= max_k and every unit u mod k."""
    out = []
    for k in range(1, max_k + 1):
        for u in range(k):
            if math.gcd(u, k) == 1:
                Q = affine_quandle([k], u)
                out.append(CorpusEntry(f"Aff(Z_{k},{u})", Q, tuple(greedy_generating_set(Q))))
    return out


def free_corpus(max_n: int = 4, max_gens: int = 3) -> list[CorpusEntry]:
    out = []
    for n in range(1, max_n + 1):
        for g in range(1, max_gens + 1):
            Q = free_2reductive_symmetric(n, g)
            out.append(CorpusEntry(f"Free2Red(n={n},|X|={g})", Q, tuple(free_2reductive_generators(n, g))))
    return out


@functools.lru_cache(maxsize=None)
def full_corpus() -> tuple[CorpusEntry, ...]:
    return tuple(affine_corpus() + free_corpus())


def in_variety(Q: FiniteBinaryTable, variety: VarietySpec) -> bool:
    """Membership by the defining identities, checked exhaustively on the table."""
    if not is_medial(Q):
        return False
    if variety.kind == "medial":
        return True
    if variety.kind == "sym":
        return check_symmetry(Q, variety.n)
    if variety.kind == "red":
        return check_reductivity(Q, variety.n)
    if variety.kind == "symred2":
        return check_symmetry(Q, variety.n) and check_reductivity(Q, 2)
    return check_I_quandle(Q, variety.poly)

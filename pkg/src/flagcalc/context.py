"""One-stop bundle of everything attached to a choice of (G, P)."""

from __future__ import annotations

from dataclasses import dataclass

from . import roots
from .deformed import DeformedRing
from .levi import LeviSystem, levi_system
from .schubert import CupRing
from .weyl import CosetTable, WeylGroup, group, minimal_coset_reps


@dataclass
class FlagContext:
    system: roots.RootSystem
    parabolic: roots.ParabolicData
    wg: WeylGroup
    ct: CosetTable
    ring: CupRing
    deformed: DeformedRing
    levi: LeviSystem

    def element(self, word):
        return self.ct.element_from_word(word)


_contexts = {}


def flag_context(type_letter, rank, crossed=()):
    """Context for the flag variety of the given type with the listed simple
    nodes crossed out (Delta minus Delta(P)); memoised per choice."""
    key = (str(type_letter).upper(), int(rank), tuple(sorted(int(c) for c in crossed)))
    if key not in _contexts:
        R = roots.build(key[0], key[1])
        P = roots.parabolic(R, crossed=key[2])
        ct = minimal_coset_reps(R, P)
        ring = CupRing(R, P)
        _contexts[key] = FlagContext(
            system=R, parabolic=P, wg=group(R), ct=ct, ring=ring,
            deformed=DeformedRing(ring),
            levi=levi_system(R, tuple(sorted(P.levi_simple))),
        )
    return _contexts[key]

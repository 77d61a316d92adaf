"""Grouping submodules by how many generator coordinates lie in the radical."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InconsistentSignature
from .module_geometry import CyclicSubmodule, Vector
from .ring_core import Ideal


@dataclass
class RadicalClass:
    radical_entry_count: int
    members: list[CyclicSubmodule] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def canonical_generators(self) -> list[Vector]:
        return [m.canonical_id for m in self.members]


def radical_signature(v: Vector, J: Ideal) -> int:
    return sum(1 for x in v if x in J.elements)


def submodule_signature(sub: CyclicSubmodule, J: Ideal) -> int:
    """Signature shared by all generators; raises if they disagree."""
    sigs = {g: radical_signature(g, J) for g in sub.generators}
    first = sigs[sub.canonical_id]
    for g, s in sigs.items():
        if s != first:
            raise InconsistentSignature(sub.canonical_id, first, s)
    return first


def decompose(submodules: Iterable[CyclicSubmodule], J: Ideal) -> list[RadicalClass]:
    """Classes keyed by radical signature, highest signature first."""
    classes: dict[int, RadicalClass] = {}
    for sub in submodules:
        sig = submodule_signature(sub, J)
        classes.setdefault(sig, RadicalClass(sig)).members.append(sub)
    for c in classes.values():
        c.members.sort(key=lambda s: s.canonical_id)
    return [classes[k] for k in sorted(classes, reverse=True)]

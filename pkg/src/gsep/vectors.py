"""Tagged integer vectors over the ground set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgumentError

CUT = "cut"
FLOW = "flow"
SIGNED_CIRCUIT = "signed-circuit"
KINDS = (CUT, FLOW, SIGNED_CIRCUIT)


@dataclass(frozen=True, order=True)
class SignedVector:
    """Integer vector over the ground set, tagged with what it is."""

    entries: tuple
    kind: str = CUT

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.kind not in KINDS:
            raise InvalidArgumentError(f"unknown kind {self.kind!r}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __neg__(self) -> "SignedVector":
        return SignedVector(tuple(-x for x in self.entries), self.kind)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.entries) if x)

    @property
    def norm(self) -> int:
        """Largest absolute entry."""
        return max((abs(x) for x in self.entries), default=0)

    def is_nowhere_zero(self) -> bool:
        return all(self.entries)

    def dot(self, other: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.entries, other))

"""Community-of-Practice tiers around a main author.

The partition is: editorial (direct coauthors), active (transitively
related, beyond editorial), peripheral (citers of the core who are not in
it), outsiders (everyone else).  core and cop are the cumulative unions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .collab import Researchers, erdos_numbers
from .errors import UnknownAuthor
from .relation import image

TIER_NAMES = ("main", "editorial", "active", "peripheral", "outsiders")


@dataclass(frozen=True)
class CopPartition:
    main: str
    editorial: frozenset[str]
    active: frozenset[str]
    core: frozenset[str]
    peripheral: frozenset[str]
    cop: frozenset[str]
    outsiders: frozenset[str]

    def __post_init__(self) -> None:
        tiers = [frozenset({self.main}), self.editorial, self.active, self.peripheral, self.outsiders]
        for i, left in enumerate(tiers):
            for right in tiers[i + 1 :]:
                if left & right:
                    raise ValueError(f"tiers overlap on {sorted(left & right)!r}")
        if self.core != frozenset({self.main}) | self.editorial | self.active:
            raise ValueError("core must be main plus editorial plus active")
        if self.cop != self.core | self.peripheral:
            raise ValueError("cop must be core plus peripheral")

    @property
    def published(self) -> frozenset[str]:
        return self.cop | self.outsiders

    def tier(self, author: str) -> str:
        """Name of the tier holding author (core/cop are unions, not tiers)."""
        if author == self.main:
            return "main"
        for name in ("editorial", "active", "peripheral", "outsiders"):
            if author in getattr(self, name):
                return name
        raise UnknownAuthor(f"unknown author {author!r}")


def _assemble(r: Researchers, editorial: frozenset[str], active: frozenset[str]) -> CopPartition:
    core = frozenset({r.main}) | editorial | active
    peripheral = image(r.citing_authors, core) - core
    cop = core | peripheral
    return CopPartition(
        main=r.main,
        editorial=editorial,
        active=active,
        core=core,
        peripheral=peripheral,
        cop=cop,
        outsiders=r.published - cop,
    )


def classify(r: Researchers) -> CopPartition:
    """The unique partition satisfying the CopPartition equations."""
    editorial = image(r.coauthors.rel, frozenset({r.main}))
    active = image(r.related, frozenset({r.main})) - editorial
    return _assemble(r, editorial, active)


def classify_with_radius(r: Researchers, max_dist: int) -> CopPartition:
    """Like classify, but active membership is capped at max_dist edges.

    Depth 1 from main is exactly editorial, so active collects depths 2
    through max_dist.  A radius at or past the graph diameter reproduces
    classify.
    """
    if max_dist < 1:
        raise ValueError("max_dist must be at least 1")
    editorial = image(r.coauthors.rel, frozenset({r.main}))
    depths = erdos_numbers(r)
    active = frozenset(a for a, d in depths.items() if 2 <= d <= max_dist)
    return _assemble(r, editorial, active)

"""Intersection poset of an arrangement: flats, closures, Hasse diagram.

A flat is a nonempty intersection of hyperplanes (the ambient space included,
as the empty intersection).  Every flat is pinned down by its closure set,
the full set of hyperplane indices containing it, so flats are keyed, ordered
and deduplicated purely on those integer sets; order is reverse inclusion of
point sets, which on closure sets is plain inclusion.

Hyperplane indices are 1-based throughout, matching report output.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from arrdmod.arrangement import Arrangement
from arrdmod.errors import PreconditionError, ResourceLimitError
from arrdmod.exactla import AffineSubspace

DEFAULT_ENUM_LIMIT = 16


def _enum_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get("ARRDMOD_LIMIT")
    return int(env) if env else DEFAULT_ENUM_LIMIT


@dataclass(frozen=True)
class Flat:
    """A flat with its closure set, canonical subspace and codimension."""

    closure_set: tuple[int, ...]
    subspace: AffineSubspace
    codim: int

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in self.closure_set) + "}"


@dataclass(frozen=True)
class IntersectionPoset:
    """All flats sorted by (codim, closure set), plus Hasse cover edges.

    ``cover_relations`` holds index pairs ``(lower, upper)`` into ``flats``
    with ``flats[lower]`` covered by ``flats[upper]`` (the upper flat is the
    smaller point set).
    """

    ambient_dim: int
    flats: tuple[Flat, ...]
    cover_relations: tuple[tuple[int, int], ...]

    @property
    def closure_sets(self) -> set[tuple[int, ...]]:
        return {f.closure_set for f in self.flats}


def _closure_of(
    arr: Arrangement, subspace: AffineSubspace, known: tuple[int, ...] = ()
) -> tuple[int, ...]:
    """Indices of hyperplanes containing ``subspace``; ``known`` holds 1-based
    indices already certain to contain it (skipped, not re-tested)."""
    out = set(known)
    for i, h in enumerate(arr.hyperplanes, start=1):
        if i not in out and h.contains(subspace):
            out.add(i)
    return tuple(sorted(out))


def closure(arr: Arrangement, indices: Iterable[int]) -> tuple[int, ...]:
    """All hyperplane indices containing the intersection over ``indices``.

    Extensive, monotone and idempotent; raises when the named hyperplanes
    have an empty intersection (the closure of nothing is not a flat).
    """
    subset = sorted(set(indices))
    sub = AffineSubspace.from_rows(arr.equation_rows(subset), arr.dim)
    if sub.is_empty:
        raise PreconditionError(
            f"hyperplanes {{{','.join(map(str, subset))}}} have empty intersection"
        )
    return _closure_of(arr, sub)


def enumerate_flats(arr: Arrangement, limit: int | None = None) -> IntersectionPoset:
    """Enumerate all flats by a worklist over single-hyperplane refinements.

    Starting from the ambient flat, each known flat is cut with every
    hyperplane not already containing it; nonempty cuts are keyed by their
    closure set.  This reaches every flat: any nonempty intersection over S
    is reachable by adding the elements of S one at a time.
    """
    m = arr.m
    cap = _enum_limit(limit)
    if m > cap:
        raise ResourceLimitError(
            f"flat enumeration limited to m <= {cap} hyperplanes, got {m}"
        )
    ambient = Flat((), AffineSubspace.ambient(arr.dim), 0)
    found: dict[tuple[int, ...], Flat] = {(): ambient}
    queue = [ambient]
    while queue:
        flat = queue.pop()
        absent = [i for i in range(1, m + 1) if i not in flat.closure_set]
        for i in absent:
            sub = flat.subspace.intersect_rows([arr.hyperplanes[i - 1].equation_row()])
            if sub.is_empty:
                continue
            key = _closure_of(arr, sub, (*flat.closure_set, i))
            if key in found:
                continue
            new = Flat(key, sub, sub.codim)
            found[key] = new
            queue.append(new)
    flats = tuple(sorted(found.values(), key=lambda f: (f.codim, f.closure_set)))
    return IntersectionPoset(arr.dim, flats, _covers(flats))


def _covers(flats: tuple[Flat, ...]) -> tuple[tuple[int, int], ...]:
    # Covers of G are the maximal flats strictly below it; scanning candidates
    # by descending codim lets already-kept covers mask everything under them.
    sets = [frozenset(f.closure_set) for f in flats]
    by_codim_desc = sorted(range(len(flats)), key=lambda i: -flats[i].codim)
    covers = []
    for g, flat_g in enumerate(flats):
        target = sets[g]
        kept: list[int] = []
        for f in by_codim_desc:
            if flats[f].codim >= flat_g.codim:
                continue
            if not (sets[f] < target):
                continue
            if any(sets[f] < sets[k] for k in kept):
                continue
            kept.append(f)
            covers.append((f, g))
    return tuple(sorted(covers))


def hasse_dot(poset: IntersectionPoset) -> str:
    """Graphviz digraph of the Hasse diagram, byte-stable for equal posets.

    Nodes are labelled by closure sets; edges point from a flat to the flats
    covering it, so with ``rankdir=BT`` the ambient space sits at the bottom.
    """
    lines = ["digraph intersection_poset {", "  rankdir=BT;"]
    for idx, flat in enumerate(poset.flats):
        lines.append(f'  n{idx} [label="{flat.label()}"];')
    for lower, upper in poset.cover_relations:
        lines.append(f"  n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"

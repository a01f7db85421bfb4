"""Exact arithmetic on finite sets of non-negative integers.

Vertex labels are finite nonempty sets of non-negative integers.  The two
operations everything else is built on are the sumset A + B (all pairwise
sums) and the difference set D_A (all positive differences between distinct
elements).  The sumset of two sets is as large as possible, |A + B| = |A||B|,
exactly when their difference sets are disjoint.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class SetLabel:
    """Immutable finite nonempty set of non-negative integers.

    Elements are stored as a strictly increasing tuple; instances compare
    and hash by value.
    """

    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[int]):
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a set label must be nonempty")
        if elems[0] < 0:
            raise ValueError(f"negative element {elems[0]} in set label")
        object.__setattr__(self, "elements", tuple(elems))

    def __setattr__(self, name, value):
        raise AttributeError("SetLabel is immutable")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetLabel):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __lt__(self, other: "SetLabel") -> bool:
        # size first, then lexicographic: the canonical enumeration order
        return (len(self.elements), self.elements) < (len(other.elements), other.elements)

    def __repr__(self) -> str:
        return f"SetLabel({list(self.elements)})"

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def shift(self, t: int) -> "SetLabel":
        """Translate every element by t >= 0."""
        if t < 0:
            raise ValueError("shift must be non-negative")
        return SetLabel(e + t for e in self.elements)


def sumset(a: SetLabel, b: SetLabel) -> SetLabel:
    """All pairwise sums of a and b, as a new label.

    Always satisfies max(|a|,|b|) <= |result| <= |a|*|b|.
    """
    return SetLabel({x + y for x in a.elements for y in b.elements})


def difference_set(a: SetLabel) -> frozenset[int]:
    """Positive differences between distinct elements of a.

    Empty exactly when a is a singleton.  Only positive differences are
    kept: disjointness of two difference sets is unchanged by the sign
    convention, and the positive half is canonical.
    """
    es = a.elements
    return frozenset(es[j] - es[i] for i in range(len(es)) for j in range(i + 1, len(es)))


def is_sumset_maximal(a: SetLabel, b: SetLabel) -> bool:
    """True iff |sumset(a, b)| = |a|*|b|.

    Equivalent to the difference sets of a and b being disjoint, which is
    how it is decided (no sumset is materialized).
    """
    return difference_set(a).isdisjoint(difference_set(b))

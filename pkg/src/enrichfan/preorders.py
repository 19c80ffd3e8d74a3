"""Finite preorders on label sets: closure, quotient posets, upper/lower sets.

A preorder is stored densely as one bitmask row per label over the sorted
ground set; ground sets here never exceed a dozen labels, so simplicity
wins over asymptotics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GuardExceededError, UnknownLabelError
from .graphs import label_key, sort_labels


def _closed(rows: list) -> list:
    """Reflexive-transitive closure of bitmask rows, in place."""
    n = len(rows)
    for i in range(n):
        rows[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return rows


class Preorder:
    """A reflexive transitive relation on a finite label set."""

    __slots__ = ("_labels", "_index", "_rows", "_hash")

    def __init__(self, labels, rows, _trusted=False):
        labels = sort_labels(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("duplicate labels in ground set")
        rows = list(rows)
        if len(rows) != len(labels):
            raise ValueError("one relation row per label required")
        if not _trusted:
            closed = _closed(list(rows))
            if closed != rows:
                raise ValueError("relation is not reflexively and transitively closed")
        self._labels = labels
        self._index = index
        self._rows = tuple(rows)
        self._hash = hash((labels, self._rows))

    @staticmethod
    def from_relations(ground, pairs) -> "Preorder":
        """Smallest preorder on ``ground`` containing all ``(a, b)`` as a ≼ b."""
        labels = sort_labels(set(ground))
        index = {lab: i for i, lab in enumerate(labels)}
        rows = [0] * len(labels)
        for a, b in pairs:
            if a not in index:
                raise UnknownLabelError(a)
            if b not in index:
                raise UnknownLabelError(b)
            rows[index[a]] |= 1 << index[b]
        return Preorder(labels, _closed(rows), _trusted=True)

    @staticmethod
    def discrete(ground) -> "Preorder":
        labels = sort_labels(set(ground))
        return Preorder(labels, [1 << i for i in range(len(labels))], _trusted=True)

    @staticmethod
    def indiscrete(ground) -> "Preorder":
        """All labels pairwise equivalent."""
        labels = sort_labels(set(ground))
        full = (1 << len(labels)) - 1
        return Preorder(labels, [full] * len(labels), _trusted=True)

    @property
    def ground(self) -> tuple:
        return self._labels

    def _i(self, a) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise UnknownLabelError(a) from None

    def leq(self, a, b) -> bool:
        return bool(self._rows[self._i(a)] >> self._i(b) & 1)

    def equiv(self, a, b) -> bool:
        return self.leq(a, b) and self.leq(b, a)

    def lt(self, a, b) -> bool:
        return self.leq(a, b) and not self.leq(b, a)

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def pairs(self) -> list:
        """All related pairs (a, b) with a ≼ b and a != b."""
        out = []
        for i, a in enumerate(self._labels):
            row = self._rows[i]
            for j, b in enumerate(self._labels):
                if i != j and row >> j & 1:
                    out.append((a, b))
        return out

    def up_closure(self, a) -> frozenset:
        row = self._rows[self._i(a)]
        return frozenset(lab for j, lab in enumerate(self._labels) if row >> j & 1)

    def down_closure(self, a) -> frozenset:
        j = self._i(a)
        return frozenset(lab for i, lab in enumerate(self._labels) if self._rows[i] >> j & 1)

    def classes(self) -> tuple:
        """Equivalence classes of mutual comparability, ordered by least label."""
        seen = set()
        out = []
        for i, a in enumerate(self._labels):
            if a in seen:
                continue
            cls = frozenset(
                b for j, b in enumerate(self._labels)
                if self._rows[i] >> j & 1 and self._rows[j] >> i & 1
            )
            seen |= cls
            out.append(cls)
        return tuple(out)

    def class_of(self, a) -> frozenset:
        i = self._i(a)
        return frozenset(
            b for j, b in enumerate(self._labels)
            if self._rows[i] >> j & 1 and self._rows[j] >> i & 1
        )

    @property
    def rank(self) -> int:
        return len(self.classes())

    def is_partial_order(self) -> bool:
        return all(len(c) == 1 for c in self.classes())

    def is_discrete(self) -> bool:
        return all(row == 1 << i for i, row in enumerate(self._rows))

    def global_minima(self) -> frozenset:
        """Labels below every label; one equivalence class when nonempty."""
        full = (1 << len(self._labels)) - 1
        return frozenset(a for i, a in enumerate(self._labels) if self._rows[i] == full)

    def minimal_labels(self) -> frozenset:
        return frozenset(
            a for a in self._labels
            if not any(self.lt(b, a) for b in self._labels)
        )

    def is_lower_set(self, s) -> bool:
        s = frozenset(s)
        for a in s:
            self._i(a)
        return all(not (self.leq(b, a) and b not in s) for a in s for b in self._labels)

    def is_upper_set(self, s) -> bool:
        s = frozenset(s)
        for a in s:
            self._i(a)
        return all(not (self.leq(a, b) and b not in s) for a in s for b in self._labels)

    def lower_sets(self) -> list:
        """All lower sets, canonically ordered; exponential scan of subsets."""
        out = []
        for k in range(len(self._labels) + 1):
            for sub in itertools.combinations(self._labels, k):
                s = frozenset(sub)
                if self.is_lower_set(s):
                    out.append(s)
        return out

    def irreducible_upper_sets(self, brute_force: bool = False) -> list:
        """The principal up-closures, one per equivalence class.

        With ``brute_force=True`` the result is recomputed from the
        definition: upper sets that are not unions of two proper upper
        subsets (the irreducible closed sets of the preorder topology).
        """
        principal = sorted(
            {self.up_closure(min(c, key=label_key)) for c in self.classes()},
            key=lambda s: tuple(map(label_key, sort_labels(s))),
        )
        if brute_force:
            uppers = [
                frozenset(sub)
                for k in range(1, len(self._labels) + 1)
                for sub in itertools.combinations(self._labels, k)
                if self.is_upper_set(sub)
            ]
            irr = []
            for u in uppers:
                proper = [w for w in uppers if w < u]
                if not any(w1 | w2 == u for w1 in proper for w2 in proper):
                    irr.append(u)
            assert sorted(irr, key=lambda s: tuple(map(label_key, sort_labels(s)))) == principal
        return principal

    def restrict(self, s) -> "Preorder":
        labels = sort_labels(set(s))
        for a in labels:
            self._i(a)
        rows = []
        for a in labels:
            row = 0
            for j, b in enumerate(labels):
                if self.leq(a, b):
                    row |= 1 << j
            rows.append(row)
        return Preorder(labels, rows, _trusted=True)

    def with_pairs(self, pairs) -> "Preorder":
        """Closure of this preorder together with extra related pairs."""
        return Preorder.from_relations(self._labels, self.pairs() + list(pairs))

    def contains(self, other: "Preorder") -> bool:
        """True when every relation of ``other`` also holds here (same ground)."""
        if self._labels != other._labels:
            raise UnknownLabelError("ground sets differ")
        return all(o & ~s == 0 for s, o in zip(self._rows, other._rows))

    def relabel(self, mapping) -> "Preorder":
        """Transport the preorder along a label bijection."""
        pairs = [(mapping[a], mapping[b]) for a, b in self.pairs()]
        return Preorder.from_relations([mapping[a] for a in self._labels], pairs)

    def quotient(self) -> "QuotientPoset":
        classes = self.classes()
        reps = [min(c, key=label_key) for c in classes]
        n = len(classes)
        less = frozenset(
            (i, j)
            for i in range(n)
            for j in range(n)
            if i != j and self.lt(reps[i], reps[j])
        )
        hasse = tuple(
            sorted(
                (i, j)
                for (i, j) in less
                if not any((i, k) in less and (k, j) in less for k in range(n))
            )
        )
        return QuotientPoset(tuple(sort_labels(c) for c in classes), less, hasse)

    def __eq__(self, other):
        if not isinstance(other, Preorder):
            return NotImplemented
        return self._labels == other._labels and self._rows == other._rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rel = ", ".join(f"{a}≼{b}" for a, b in self.pairs())
        return f"Preorder({list(self._labels)}, [{rel}])"


@dataclass(frozen=True)
class QuotientPoset:
    """The poset of equivalence classes of a preorder, with Hasse covers."""

    classes: tuple  # each class a sorted tuple of labels, ordered by least label
    less: frozenset  # strict order as (i, j) index pairs
    hasse: tuple  # covering pairs (i, j), i.e. consecutive classes

    @property
    def rank(self) -> int:
        return len(self.classes)

    def class_index(self, label) -> int:
        for i, c in enumerate(self.classes):
            if label in c:
                return i
        raise UnknownLabelError(label)

    def roots(self) -> tuple:
        """Indices of minimal classes."""
        above = {j for _, j in self.less}
        return tuple(i for i in range(len(self.classes)) if i not in above)

    def parents(self) -> dict:
        """Map a class index to its unique Hasse predecessor, when one exists."""
        out = {}
        for i, j in self.hasse:
            if j in out:
                raise ValueError(f"class {j} covers more than one class")
            out[j] = i
        return out

    def is_forest_of_rooted_trees(self) -> bool:
        try:
            self.parents()
        except ValueError:
            return False
        return True

    def consecutive(self, i: int, j: int) -> bool:
        return (i, j) in set(self.hasse)

    def reachability_reconstructs(self, p: Preorder) -> bool:
        """Hasse covers plus class membership regenerate the original order."""
        n = len(self.classes)
        reach = [set() for _ in range(n)]
        for i, j in self.hasse:
            reach[i].add(j)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                new = set()
                for j in reach[i]:
                    new |= reach[j]
                if not new <= reach[i]:
                    reach[i] |= new
                    changed = True
        derived = {(i, j) for i in range(n) for j in reach[i]}
        if derived != set(self.less):
            return False
        for a in p.ground:
            for b in p.ground:
                ia, ib = self.class_index(a), self.class_index(b)
                if p.leq(a, b) != (ia == ib or (ia, ib) in self.less):
                    return False
        return True


def all_preorders(ground, max_size: int = 5):
    """Every preorder on ``ground``, by brute force; guard at 5 labels."""
    labels = sort_labels(set(ground))
    n = len(labels)
    if n > max_size:
        raise GuardExceededError(f"brute-force preorder enumeration capped at {max_size} labels")
    if n == 0:
        yield Preorder((), ())
        return
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(offdiag)):
        rows = [1 << i for i in range(n)]
        m = mask
        for (i, j) in offdiag:
            if m & 1:
                rows[i] |= 1 << j
            m >>= 1
        ok = True
        for i in range(n):
            acc = rows[i]
            row = rows[i]
            j = 0
            while row:
                if row & 1:
                    acc |= rows[j]
                row >>= 1
                j += 1
            if acc != rows[i]:
                ok = False
                break
        if ok:
            yield Preorder(labels, rows, _trusted=True)

"""Partition and strict-partition combinatorics.

Partitions are weakly decreasing tuples of positive integers; the empty
partition is ``Partition()``.  Canonical form drops trailing zeros, and
equality is structural on the canonical form.
"""

from __future__ import annotations


class Partition(tuple):
    """A partition as an immutable tuple of weakly decreasing positive parts."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and (parts[-1] < 0 or not all(isinstance(p, int) for p in parts)):
            raise ValueError(f"parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        """Parse the textual form "3,2,1"; the empty string is the zero partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(p) for p in text.split(","))

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def is_strict(self):
        return all(a > b for a, b in zip(self, self[1:]))

    def part(self, p):
        """1-indexed part, 0 past the length."""
        return self[p - 1] if 1 <= p <= len(self) else 0

    def contains(self, other):
        """Diagram containment: other fits inside self."""
        other = Partition(other)
        return len(other) <= len(self) and all(
            s >= o for s, o in zip(self, other)
        )

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p >= k) for k in range(1, self[0] + 1)
        )

    def remove_parts(self, parts):
        """Remove one copy of each listed part (multiset difference)."""
        pool = list(self)
        for p in parts:
            pool.remove(p)
        return Partition(sorted(pool, reverse=True))

    def multiplicities(self):
        """Map part value -> multiplicity."""
        out = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def rho(k):
    """The staircase (k, k-1, ..., 1); rho(0) is the empty partition."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Partition(range(k, 0, -1))


def rho_complement(parts, k):
    """The strict partition whose parts complement those of `parts` in {1..k}."""
    parts = Partition(parts)
    if not parts.is_strict():
        raise ValueError(f"{parts} is not strict")
    if not rho(k).contains(parts):
        raise ValueError(f"{parts} is not contained in rho_{k}")
    missing = set(range(1, k + 1)) - set(parts)
    return Partition(sorted(missing, reverse=True))


def horizontal_strips(parts, r, max_part=None):
    """All partitions J >= I with |J| = |I| + r and J/I a horizontal strip.

    A horizontal strip has at most one box per column: j_{p+1} <= i_p for
    every p.  ``max_part`` caps j_1 (None means unbounded).  Output is in
    reverse-lexicographic (descending tuple) order.
    """
    parts = Partition(parts)
    if r < 0:
        raise ValueError("r must be >= 0")
    if max_part is not None and parts and max_part < parts[0]:
        raise ValueError("max_part smaller than the largest part")
    k = len(parts)
    results = []

    def build(row, remaining, acc):
        if row == k:
            # optional new bottom row; capped by i_k, or only by max_part
            # when I is empty (then the "new" row is row 1)
            if k:
                cap = parts[k - 1]
            else:
                cap = remaining if max_part is None else max_part
            if remaining <= cap:
                tail = (remaining,) if remaining else ()
                results.append(Partition(acc + tail))
            return
        cur = parts[row]
        upper = parts[row - 1] if row else max_part
        cap = remaining if upper is None else min(remaining, upper - cur)
        for add in range(cap + 1):
            build(row + 1, remaining - add, acc + (cur + add,))

    build(0, r, ())
    results.sort(key=tuple, reverse=True)
    return results


def is_horizontal_strip(inner, outer):
    """True iff outer/inner is a horizontal strip."""
    inner, outer = Partition(inner), Partition(outer)
    if not outer.contains(inner) or len(outer) > len(inner) + 1:
        return False
    return all(outer.part(p + 1) <= inner.part(p) for p in range(1, len(outer) + 1))


def _strip_components(inner, outer):
    """Connected components of the strip outer/inner.

    A skew diagram is connected when its row set and column set are both
    intervals; for a horizontal strip the components are maximal runs of
    consecutive nonempty rows whose column intervals abut.
    """
    rows = []
    for p in range(1, len(outer) + 1):
        lo, hi = inner.part(p) + 1, outer.part(p)
        if hi >= lo:
            rows.append((p, lo, hi))
    components = []
    for row in rows:
        if components:
            prev = components[-1][-1]
            # glue rows p and p+1 when row p+1 ends at the column just
            # left of where row p starts
            if row[0] == prev[0] + 1 and row[2] == prev[1] - 1:
                components[-1].append(row)
                continue
        components.append([row])
    return components


def pieri_multiplicity(inner, outer):
    """(m, meets_first_column) for the Pieri coefficient 2^m.

    m counts p with j_{p+1} < i_p < j_p, equivalently the connected
    components of the strip not meeting the first column; both counts are
    computed and must agree.
    """
    inner, outer = Partition(inner), Partition(outer)
    if not inner.is_strict():
        raise ValueError(f"{inner} is not strict")
    if not is_horizontal_strip(inner, outer):
        raise ValueError(f"{outer}/{inner} is not a horizontal strip")
    m = sum(
        1
        for p in range(1, len(inner) + 1)
        if outer.part(p + 1) < inner.part(p) < outer.part(p)
    )
    meets = len(outer) > len(inner)
    comps = _strip_components(inner, outer)
    off_column = sum(1 for comp in comps if all(lo > 1 for _, lo, _ in comp))
    if off_column != m:
        raise AssertionError(
            f"component count {off_column} disagrees with card formula {m} "
            f"for {outer}/{inner}"
        )
    return m, meets


def partitions_of(weight, max_part=None, max_length=None):
    """All partitions of the given weight, reverse-lexicographic order."""
    out = []

    def build(remaining, cap, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        if max_length is not None and len(acc) >= max_length:
            return
        for p in range(min(remaining, cap), 0, -1):
            build(remaining - p, p, acc + (p,))

    build(weight, weight if max_part is None else min(max_part, weight), ())
    out.sort(key=tuple, reverse=True)
    return out


def partitions_up_to(weight, max_part=None, max_length=None):
    """All partitions of weight 0..weight."""
    out = []
    for w in range(weight + 1):
        out.extend(partitions_of(w, max_part, max_length))
    return out


def strict_subsets(k):
    """All strict partitions contained in rho_k (subsets of {1..k}),
    in reverse-lexicographic order."""
    import itertools

    out = []
    for r in range(k + 1):
        for combo in itertools.combinations(range(k, 0, -1), r):
            out.append(Partition(combo))
    out.sort(key=tuple, reverse=True)
    return out

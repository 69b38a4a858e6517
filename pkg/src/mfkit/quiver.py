"""Auslander-Reiten quivers, Dynkin double quivers, fundamental cycles, and
the knitting construction of the full indecomposable list from one seed."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NonClosure, SocleEmpty
from .mf import (
    ar_triangle,
    hom_space,
    is_indecomposable,
    multiplicity,
    rad_power_dims,
    reduce_constant_pivots,
    shift,
    split_summand,
)


class DynkinGraph:
    """An ADE diagram with a fixed node numbering.

    A_n: path 1..n.  D_n: path 1..n-2 with tips n-1, n on node n-2.
    E_n: path 1..n-1 with node n attached to node n-3.
    The intersection matrix is adjacency - 2I (negative definite).
    """

    def __init__(self, series, n):
        self.series = series
        self.n = n
        adj = [[0] * n for _ in range(n)]

        def link(i, j):
            adj[i - 1][j - 1] = adj[j - 1][i - 1] = 1

        if series == "A":
            for i in range(1, n):
                link(i, i + 1)
        elif series == "D":
            if n < 4:
                raise ValueError("D requires rank >= 4")
            for i in range(1, n - 2):
                link(i, i + 1)
            link(n - 2, n - 1)
            link(n - 2, n)
        elif series == "E":
            if n not in (6, 7, 8):
                raise ValueError("E requires rank 6, 7 or 8")
            for i in range(1, n - 1):
                link(i, i + 1)
            link(n - 3, n)
        else:
            raise ValueError(f"unknown series {series!r}")
        self.adjacency = adj

    def intersection(self, i, j):
        """E_i . E_j with self-intersection -2."""
        return self.adjacency[i][j] - (2 if i == j else 0)


@dataclass
class ARQuiver:
    """Labeled arrow-multiplicity matrix; the translation is the identity."""

    labels: list
    matrix: list

    @property
    def n(self):
        return len(self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, ARQuiver)
            and self.labels == other.labels
            and self.matrix == other.matrix
        )


def ar_quiver(t, entries=None, maxdeg=None):
    """AR quiver of a catalog family: arrow multiplicities are
    dim rad/rad^2 per ordered pair of indecomposables."""
    from .catalog import catalog_all

    entries = catalog_all(t) if entries is None else entries
    mfs = [e.mf for e in entries]
    _, irr = rad_power_dims(mfs, maxdeg=maxdeg)
    return ARQuiver([e.label for e in entries], irr)


def dynkin_double_quiver(g):
    """The double quiver of a Dynkin graph: one arrow pair per edge."""
    return ARQuiver(
        [f"M{i+1}" for i in range(g.n)], [row[:] for row in g.adjacency]
    )


def quiver_equal(q1, q2, up_to_relabeling=False):
    """Exact label-wise equality, or (with the flag) existence of a node
    bijection matching the multiplicity matrices; returns the relabeling as a
    list (or True/False without the flag)."""
    if q1.n != q2.n:
        return False
    if q1.matrix == q2.matrix:
        return list(range(q1.n)) if up_to_relabeling else True
    if not up_to_relabeling:
        return False
    perm = find_relabeling(q1.matrix, q2.matrix)
    return perm if perm is not None else False


def find_relabeling(m1, m2):
    """Backtracking graph-isomorphism search: perm with
    m1[i][j] == m2[perm[i]][perm[j]].  Intended for n <= 12."""
    n = len(m1)
    if n != len(m2):
        return None

    def degree_key(m, i):
        row = sorted(m[i][j] for j in range(n))
        col = sorted(m[j][i] for j in range(n))
        return (row, col, m[i][i])

    keys1 = [degree_key(m1, i) for i in range(n)]
    keys2 = [degree_key(m2, i) for i in range(n)]
    if sorted(keys1) != sorted(keys2):
        return None
    perm = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or keys1[i] != keys2[cand]:
                continue
            ok = True
            for j in range(i):
                if m1[i][j] != m2[cand][perm[j]] or m1[j][i] != m2[perm[j]][cand]:
                    ok = False
                    break
            if ok and m1[i][i] == m2[cand][cand]:
                perm[i] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
                perm[i] = None
        return False

    return perm if extend(0) else None


@dataclass
class Cycle:
    coefficients: list


def fundamental_cycle(g):
    """Laufer's iteration: start at sum(E_i); while some Z . E_i > 0, add E_i.
    Terminates for negative-definite intersection matrices and returns the
    minimal positive cycle with all Z . E_i <= 0."""
    n = g.n
    z = [1] * n
    while True:
        bumped = False
        for i in range(n):
            dot = sum(z[j] * g.intersection(i, j) for j in range(n))
            if dot > 0:
                z[i] += 1
                bumped = True
        if not bumped:
            return Cycle(z)


def emit(q, fmt):
    """Deterministic DOT or JSON serialization; the identity translation is
    annotated as a dashed self-loop in DOT."""
    if fmt == "json":
        return json.dumps({"labels": q.labels, "matrix": q.matrix}, sort_keys=True)
    if fmt == "dot":
        lines = ["digraph ar_quiver {"]
        for lab in q.labels:
            lines.append(f'  "{lab}";')
        for i, row in enumerate(q.matrix):
            for j, mult in enumerate(row):
                for _ in range(mult):
                    lines.append(f'  "{q.labels[i]}" -> "{q.labels[j]}";')
        for lab in q.labels:
            lines.append(f'  "{lab}" -> "{lab}" [style=dashed];  // tau = id')
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}")


def parse_quiver_json(text):
    data = json.loads(text)
    return ARQuiver(list(data["labels"]), [list(r) for r in data["matrix"]])


# ---------------------------------------------------------------------------
# knitting
# ---------------------------------------------------------------------------


@dataclass
class KnitStep:
    source: str
    middle_size: int
    recognized: dict
    new_label: str | None


@dataclass
class KnitReport:
    labels: list
    objects: list
    steps: list = field(default_factory=list)
    closed: bool = False
    quiver: ARQuiver | None = None

    def sizes(self):
        return {lab: obj.size for lab, obj in zip(self.labels, self.objects)}


def _is_zero_object(m, maxdeg=None):
    """Contractible check: the endomorphism space vanishes."""
    return m.size == 0 or hom_space(m, m, maxdeg=maxdeg).dim == 0


def knit_from_seed(seed, known=None, max_steps=32, maxdeg=None, label_prefix="N"):
    """Discover the AR component of the seed by repeated AR triangles.

    For each unexplored object, builds its AR triangle and recognizes the
    middle term against the known list.  An unexplained remainder is peeled
    by split_summand chains: first through the known objects, then through
    shifts of known objects (new labels of their own), and finally adopted
    wholesale as one new object.  Constant pivots are reduced
    opportunistically to keep representatives small.  Stops at closure or
    raises NonClosure after ``max_steps``.

    Remainders with several new non-shift summands (e.g. knitting D_4 from a
    tip, where the two other tips appear at once and shift fixes everything)
    are reported as NonClosure; seed the knitting from both ends instead.
    """
    known = list(known) if known is not None else []
    labels = [lab for lab, _ in known]
    objects = [obj for _, obj in known]
    if not any(obj is seed or obj == seed for obj in objects):
        labels.append("seed")
        objects.append(seed)
    seed_idx = next(i for i, obj in enumerate(objects) if obj is seed or obj == seed)
    if seed.reduced_entries and not is_indecomposable(seed, maxdeg=maxdeg):
        raise ValueError("seed is decomposable")
    report = KnitReport(labels=labels, objects=objects)
    queue = [seed_idx]
    queued = set(queue)
    fresh = 0
    steps = 0

    def adopt(obj):
        nonlocal fresh
        fresh += 1
        lab = f"{label_prefix}{fresh}"
        labels.append(lab)
        objects.append(obj)
        idx = len(objects) - 1
        queue.append(idx)
        queued.add(idx)
        return lab

    def strip(obj, target, recognized, lab):
        count = 0
        while multiplicity(obj, target, maxdeg=maxdeg) > 0:
            recognized[lab] = recognized.get(lab, 0) + 1
            target = reduce_constant_pivots(
                split_summand(obj, target, maxdeg=maxdeg, verify=False)
            )
            count += 1
        return target, count

    while queue:
        if steps >= max_steps:
            raise NonClosure(f"knitting did not close within {max_steps} steps")
        steps += 1
        idx = queue.pop(0)
        m = objects[idx]
        try:
            _, middle, _ = ar_triangle(m, maxdeg=maxdeg)
        except SocleEmpty:
            continue
        middle = reduce_constant_pivots(middle)
        recognized = {}
        new_labels = []
        remainder = middle
        for i in range(len(objects)):
            remainder, _ = strip(objects[i], remainder, recognized, labels[i])
        if not _is_zero_object(remainder, maxdeg=maxdeg):
            # probe shifts of known objects for so-far-unseen summands
            changed = True
            while changed and not _is_zero_object(remainder, maxdeg=maxdeg):
                changed = False
                for i in range(len(objects)):
                    cand = reduce_constant_pivots(shift(objects[i]))
                    if not cand.reduced_entries:
                        continue
                    if any(
                        k.reduced_entries and multiplicity(cand, k, maxdeg=maxdeg) > 0
                        for k in objects
                    ):
                        continue  # the shift is already a known label
                    if multiplicity(cand, remainder, maxdeg=maxdeg) > 0:
                        lab = adopt(cand)
                        new_labels.append(lab)
                        remainder, _ = strip(cand, remainder, recognized, lab)
                        changed = True
        if not _is_zero_object(remainder, maxdeg=maxdeg):
            if remainder.reduced_entries and not is_indecomposable(remainder, maxdeg=maxdeg):
                raise NonClosure(
                    "remainder carries several unknown summands at once; "
                    "re-run with additional seeds"
                )
            lab = adopt(remainder)
            new_labels.append(lab)
            recognized[lab] = recognized.get(lab, 0) + 1
        report.steps.append(
            KnitStep(labels[idx], middle.size, recognized, ",".join(new_labels) or None)
        )
        for i in range(len(objects)):
            if i not in queued and recognized.get(labels[i]):
                queued.add(i)
                queue.append(i)
    report.closed = True
    _, irr = rad_power_dims(objects, maxdeg=maxdeg)
    report.quiver = ARQuiver(list(labels), irr)
    return report

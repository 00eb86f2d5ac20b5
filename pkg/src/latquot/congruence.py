"""Congruences of finite lattices and quotient construction.

A congruence is stored as a canonical partition: ``block_of[i]`` is the
smallest index in the block of element ``i``.  All constructors either
enforce or assert compatibility with meet and join.
"""

from __future__ import annotations

from .core import Lattice
from .errors import (
    LatticeMismatch,
    MalformedPartition,
    NotACongruence,
    NotAboveKernel,
    SizeLimitExceeded,
)


class Congruence:
    """A meet/join-compatible partition of a lattice's carrier."""

    __slots__ = ("lattice_size", "block_of")

    def __init__(self, lattice_size, block_of):
        self.lattice_size = lattice_size
        self.block_of = tuple(block_of)

    def __eq__(self, other):
        return (
            isinstance(other, Congruence)
            and self.lattice_size == other.lattice_size
            and self.block_of == other.block_of
        )

    def __hash__(self):
        return hash((self.lattice_size, self.block_of))

    def __repr__(self):
        return f"Congruence({list(self.block_of)})"

    def same(self, i, j):
        return self.block_of[i] == self.block_of[j]

    def blocks(self):
        """Blocks as sorted index lists, ordered by minimal member."""
        by_rep = {}
        for i, r in enumerate(self.block_of):
            by_rep.setdefault(r, []).append(i)
        return [by_rep[r] for r in sorted(by_rep)]

    def num_blocks(self):
        return len(set(self.block_of))

    def render(self, lat):
        """Block notation, e.g. "{0}{a,b}{c}{1}"."""
        parts = []
        for block in self.blocks():
            parts.append("{" + ",".join(lat.elements[i] for i in block) + "}")
        return "".join(parts)


def _canonical(parent_of):
    """Relabel an index->representative map so each block id is its minimum."""
    n = len(parent_of)
    min_of = {}
    for i in range(n):
        r = parent_of[i]
        if r not in min_of or i < min_of[r]:
            min_of[r] = i
    return tuple(min_of[parent_of[i]] for i in range(n))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        """Merge; returns True if the blocks were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def to_congruence(self, lattice_size):
        return Congruence(lattice_size, _canonical([self.find(i) for i in range(lattice_size)]))


def identity_congruence(lat):
    return Congruence(len(lat), range(len(lat)))


def full_congruence(lat):
    return Congruence(len(lat), [0] * len(lat))


def congruence_from_blocks(lat, blocks):
    """Build a Congruence from id-level blocks, checking compatibility.

    Raises MalformedPartition if the blocks do not partition the carrier,
    NotACongruence (with witness) if the partition is incompatible.
    """
    n = len(lat)
    block_of = [-1] * n
    for block in blocks:
        idxs = [lat.index(x) for x in block]
        if not idxs:
            raise MalformedPartition("empty block")
        rep = min(idxs)
        for i in idxs:
            if block_of[i] != -1:
                raise MalformedPartition(f"element {lat.elements[i]} appears twice")
            block_of[i] = rep
    if -1 in block_of:
        missing = lat.elements[block_of.index(-1)]
        raise MalformedPartition(f"element {missing} missing from partition")
    theta = Congruence(n, block_of)
    witness = congruence_witness(lat, theta)
    if witness is not None:
        raise NotACongruence(witness)
    return theta


def congruence_witness(lat, theta):
    """None if theta is compatible; else a witness (x, y, c, op)."""
    n = len(lat)
    for i in range(n):
        for j in range(i + 1, n):
            if not theta.same(i, j):
                continue
            for c in range(n):
                if not theta.same(lat.meet_table[i][c], lat.meet_table[j][c]):
                    return (lat.elements[i], lat.elements[j], lat.elements[c], "meet")
                if not theta.same(lat.join_table[i][c], lat.join_table[j][c]):
                    return (lat.elements[i], lat.elements[j], lat.elements[c], "join")
    return None


def is_congruence(lat, blocks):
    """True, or the witness (x, y, c, op), for id-level ``blocks``."""
    try:
        congruence_from_blocks(lat, blocks)
        return True
    except NotACongruence as exc:
        return exc.witness


def _congruence_closure(lat, seed_pairs):
    """Least congruence merging every seed pair (index-level).

    Worklist closure under the unary translations t -> t /\\ c and
    t -> t \\/ c; partition merging supplies symmetry and transitivity,
    and for lattices the unary translations imply full compatibility.
    """
    n = len(lat)
    uf = _UnionFind(n)
    work = []
    for a, b in seed_pairs:
        if uf.union(a, b):
            work.append((a, b))
    meet, join = lat.meet_table, lat.join_table
    while work:
        x, y = work.pop()
        mx, my = meet[x], meet[y]
        jx, jy = join[x], join[y]
        for c in range(n):
            for p, q in ((mx[c], my[c]), (jx[c], jy[c])):
                if uf.union(p, q):
                    work.append((p, q))
    return uf.to_congruence(n)


def principal_congruence(lat, a, b):
    """theta(a, b): the least congruence identifying a and b."""
    return _congruence_closure(lat, [(lat.index(a), lat.index(b))])


def generated_congruence(lat, pairs):
    """Least congruence containing every (a, b) identifier pair."""
    return _congruence_closure(lat, [(lat.index(a), lat.index(b)) for a, b in pairs])


def _check_same_lattice(t1, t2):
    if t1.lattice_size != t2.lattice_size:
        raise LatticeMismatch("congruences live on different lattices")


def cong_meet(t1, t2):
    """Common refinement (intersection of the relations)."""
    _check_same_lattice(t1, t2)
    n = t1.lattice_size
    rep = {}
    block_of = [0] * n
    for i in range(n):
        key = (t1.block_of[i], t2.block_of[i])
        block_of[i] = rep.setdefault(key, i)
    return Congruence(n, _canonical(block_of))


def cong_join(lat, t1, t2):
    """Least congruence above both: merge intersecting blocks to fixpoint.

    For congruences the transitive closure of the union is again a
    congruence; this is re-checked on every call rather than trusted.
    """
    _check_same_lattice(t1, t2)
    n = t1.lattice_size
    uf = _UnionFind(n)
    for i in range(n):
        uf.union(i, t1.block_of[i])
        uf.union(i, t2.block_of[i])
    joined = uf.to_congruence(n)
    witness = congruence_witness(lat, joined)
    if witness is not None:
        raise NotACongruence(witness)
    return joined


def leq_congruence(t1, t2):
    """True iff t1 refines t2 (every t1-block lies inside a t2-block)."""
    _check_same_lattice(t1, t2)
    seen = {}
    for i in range(t1.lattice_size):
        r = seen.setdefault(t1.block_of[i], t2.block_of[i])
        if r != t2.block_of[i]:
            return False
    return True


def all_congruences(lat, max_size=12):
    """The whole congruence lattice Con(L), enumerated exactly.

    Join-closure of the principal congruences of the cover pairs: every
    congruence of a finite lattice is the join of the principal
    congruences of the covers it collapses.  Output is sorted by (block
    count descending, canonical labeling) for determinism.
    """
    if len(lat) > max_size:
        raise SizeLimitExceeded(
            f"|L| = {len(lat)} exceeds the enumeration cap {max_size}"
        )
    generators = [
        principal_congruence(lat, lat.elements[i], lat.elements[j])
        for i, j in lat.covers_i()
    ]
    seen = {identity_congruence(lat)}
    work = list(seen)
    while work:
        theta = work.pop()
        for gen in generators:
            merged = cong_join(lat, theta, gen)
            if merged not in seen:
                seen.add(merged)
                work.append(merged)
    return sorted(seen, key=lambda t: (-t.num_blocks(), t.block_of))


class QuotientMap:
    """The canonical surjection L -> L/theta.

    ``target`` is the quotient lattice; its element ids are
    "[m]" where m is the block's minimal source element.
    """

    __slots__ = ("source", "theta", "target", "index_map")

    def __init__(self, source, theta, target, index_map):
        self.source = source
        self.theta = theta
        self.target = target
        self.index_map = tuple(index_map)

    def apply(self, x):
        return self.target.elements[self.index_map[self.source.index(x)]]


def quotient(lat, theta):
    """Quotient lattice with meet/join induced via block representatives."""
    if theta.lattice_size != len(lat):
        raise LatticeMismatch("congruence is for a different lattice")
    blocks = theta.blocks()
    reps = [b[0] for b in blocks]
    pos = {r: k for k, r in enumerate(reps)}
    index_map = [pos[theta.block_of[i]] for i in range(len(lat))]
    m = len(reps)
    elements = [f"[{lat.elements[r]}]" for r in reps]
    down = [0] * m
    up = [0] * m
    meet = [[0] * m for _ in range(m)]
    join = [[0] * m for _ in range(m)]
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            mm = index_map[lat.meet_table[ra][rb]]
            jj = index_map[lat.join_table[ra][rb]]
            meet[a][b] = mm
            join[a][b] = jj
            if mm == a:
                up[a] |= 1 << b
                down[b] |= 1 << a
    target = Lattice(elements, down, up, meet, join, validate=True)
    return QuotientMap(lat, theta, target, index_map)


def push_congruence(qmap, phi):
    """The congruence phi/theta on L/theta, for theta <= phi."""
    theta = qmap.theta
    if phi.lattice_size != theta.lattice_size:
        raise LatticeMismatch("congruence is for a different lattice")
    if not leq_congruence(theta, phi):
        raise NotAboveKernel("congruence does not contain the quotient kernel")
    m = len(qmap.target)
    block_of = [0] * m
    for i in range(theta.lattice_size):
        block_of[qmap.index_map[i]] = qmap.index_map[phi.block_of[i]]
    return Congruence(m, _canonical(block_of))

"""The homological verification engine.

Reduced simplicial homology over an exactly-represented field drives
everything else here: multigraded Betti numbers via upper-Koszul
subcomplexes, an independent Taylor-complex oracle, projective
dimension, regularity, linear-resolution detection, the Reisner
criterion for Cohen-Macaulayness, and shelling-order search.

All ranks are exact: fraction-free integer elimination over the
rationals, modular elimination over GF(p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ._linalg import rank as _rank
from .complexes import SimplicialComplex, dimension_info, face_mask
from .errors import DomainError, ResourceLimitError
from .ideals import Monomial, MonomialIdeal


@dataclass(frozen=True)
class FieldChoice:
    """The coefficient field: characteristic 0 (p=0) or a prime field."""

    p: int = 0

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise DomainError(f"{self.p} is not prime")

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


RATIONALS = FieldChoice(0)
GF2 = FieldChoice(2)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks, indexed so ranks[k + 1] is the rank of H~_k."""

    ranks: tuple[int, ...]

    def rank(self, k: int) -> int:
        idx = k + 1
        if 0 <= idx < len(self.ranks):
            return self.ranks[idx]
        return 0

    @property
    def is_trivial(self) -> bool:
        return not any(self.ranks)


def _boundary_rank(lower: list[int], upper: list[int], p: int) -> int:
    """Rank of the simplicial boundary map from upper faces to lower faces."""
    if not lower or not upper:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for col, mask in enumerate(upper):
        sign = 1
        rem = mask
        while rem:
            bit = rem & -rem
            rows[index[mask ^ bit]][col] = sign
            sign = -sign
            rem ^= bit
    return _rank(rows, p)


@lru_cache(maxsize=262144)
def _profile_from_masks(faces: frozenset, p: int) -> tuple[int, ...]:
    """Reduced homology ranks of a downward-closed set of face bitmasks.

    The empty set of faces (void complex) yields no ranks at all; the
    complex {emptyset} yields rank 1 in degree -1.
    """
    if not faces:
        return ()
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(bin(m).count("1") - 1, []).append(m)
    top = max(by_dim)
    for k, masks in by_dim.items():
        masks.sort()
    bd_rank = {}
    for k in range(0, top + 1):
        bd_rank[k] = _boundary_rank(by_dim.get(k - 1, []), by_dim.get(k, []), p)
    ranks = []
    for k in range(-1, top + 1):
        nk = len(by_dim.get(k, []))
        ranks.append(nk - bd_rank.get(k, 0) - bd_rank.get(k + 1, 0))
    return tuple(ranks)


def reduced_homology(
    cx, field: FieldChoice = RATIONALS, max_vars: int = 16
) -> HomologyProfile:
    """Reduced simplicial homology ranks over the chosen field.

    Accepts a SimplicialComplex or an explicit downward-closed iterable
    of faces (vertex tuples).
    """
    if isinstance(cx, SimplicialComplex):
        if cx.n > max_vars:
            raise ResourceLimitError(f"n = {cx.n} exceeds the homology cap {max_vars}")
        faces = cx.face_mask_set
    else:
        faces = frozenset(face_mask(f) for f in cx)
        if faces and max(f.bit_length() for f in faces) > max_vars:
            raise ResourceLimitError(f"face list exceeds the homology cap {max_vars}")
    return HomologyProfile(_profile_from_masks(frozenset(faces), field.p))


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of a monomial ideal (zero entries omitted)."""

    num_vars: int
    entries: tuple  # ((i, multidegree-tuple), rank) pairs, canonically sorted

    @classmethod
    def from_dict(cls, num_vars: int, table: dict) -> "BettiTable":
        items = tuple(sorted((k, v) for k, v in table.items() if v))
        return cls(num_vars, items)

    def as_dict(self) -> dict:
        return dict(self.entries)

    @property
    def projdim(self) -> int:
        return max(i for (i, _), _ in self.entries)

    @property
    def regularity(self) -> int:
        return max(sum(b) - i for (i, b), _ in self.entries)

    def total(self, i: int) -> int:
        """Total Betti number in homological degree i."""
        return sum(r for (j, _), r in self.entries if j == i)

    def is_linear(self, gen_degree: int) -> bool:
        return all(sum(b) == gen_degree + i for (i, b), _ in self.entries)


def _check_betti_caps(ideal: MonomialIdeal, max_generators: int, max_vars: int):
    if ideal.is_zero:
        raise DomainError("Betti table of the zero ideal is undefined")
    if len(ideal.generators) > max_generators:
        raise ResourceLimitError(
            f"{len(ideal.generators)} generators exceed the cap {max_generators}"
        )
    if ideal.num_vars > max_vars:
        raise ResourceLimitError(
            f"{ideal.num_vars} variables exceed the cap {max_vars}"
        )


def _lcm_lattice(gens: list[tuple[int, ...]], cap: int) -> set[tuple[int, ...]]:
    """All joins (componentwise max) of nonempty generator subsets."""
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for b in frontier:
            for g in gens:
                join = tuple(map(max, b, g))
                if join not in lattice:
                    new.add(join)
        lattice |= new
        if len(lattice) > cap:
            raise ResourceLimitError(f"lcm lattice exceeds the cap {cap}")
        frontier = new
    return lattice


def _upper_koszul_faces(b: tuple[int, ...], gens: list[tuple[int, ...]]) -> frozenset:
    """Faces of the upper-Koszul subcomplex at multidegree b, as bitmasks
    over the support of b (bit j = j-th support position)."""
    support = [i for i, e in enumerate(b) if e]
    faces = []
    for mask in range(1 << len(support)):
        quotient = list(b)
        rem = mask
        idx = 0
        while rem:
            if rem & 1:
                quotient[support[idx]] -= 1
            rem >>= 1
            idx += 1
        if any(all(ge <= qe for ge, qe in zip(g, quotient)) for g in gens):
            faces.append(mask)
    return frozenset(faces)


def betti_table(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    max_generators: int = 12,
    max_vars: int = 16,
    max_lcms: int = 50000,
) -> BettiTable:
    """Multigraded Betti numbers of I via upper-Koszul subcomplex homology.

    beta_{i,b}(I) is the rank of H~_{i-1} of the subcomplex at b, and
    only multidegrees in the lcm lattice of G(I) can contribute, which
    is what keeps the computation feasible.
    """
    _check_betti_caps(ideal, max_generators, max_vars)
    gens = [g.exponents for g in ideal.generators]
    table: dict = {}
    for b in _lcm_lattice(gens, max_lcms):
        profile = _profile_from_masks(_upper_koszul_faces(b, gens), field.p)
        for i, r in enumerate(profile):
            if r:
                table[(i, b)] = r
    return BettiTable.from_dict(ideal.num_vars, table)


def squarefree_betti_masks(gen_masks, p: int = 0) -> dict:
    """Betti numbers of a squarefree ideal given by generator support masks.

    Mask-level fast path used by the bulk verification drivers; keys are
    (i, multidegree-mask).  Agrees with :func:`betti_table` entry for
    entry on squarefree input.
    """
    gens = sorted(set(gen_masks))
    if not gens or 0 in gens:
        raise DomainError("need squarefree generators of positive degree")
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for b in frontier:
            for g in gens:
                join = b | g
                if join not in lattice:
                    new.add(join)
        lattice |= new
        frontier = new
    table: dict = {}
    for b in lattice:
        support = []
        rem = b
        while rem:
            bit = rem & -rem
            support.append(bit.bit_length() - 1)
            rem ^= bit
        position = {pos: idx for idx, pos in enumerate(support)}
        compressed = []
        for g in gens:
            if g & b != g:
                continue
            cg = 0
            gr = g
            while gr:
                bit = gr & -gr
                cg |= 1 << position[bit.bit_length() - 1]
                gr ^= bit
            compressed.append(cg)
        faces = frozenset(
            f for f in range(1 << len(support)) if any(cg & f == 0 for cg in compressed)
        )
        profile = _profile_from_masks(faces, p)
        for i, r in enumerate(profile):
            if r:
                table[(i, b)] = r
    return table


def squarefree_projdim_masks(gen_masks, p: int = 0) -> int:
    return max(i for i, _ in squarefree_betti_masks(gen_masks, p))


def taylor_betti_table(
    ideal: MonomialIdeal, field: FieldChoice = RATIONALS, max_generators: int = 12
) -> BettiTable:
    """Independent Betti oracle: homology of multidegree strands of the
    Taylor complex of S/I, shifted down one homological degree."""
    _check_betti_caps(ideal, max_generators, ideal.num_vars)
    gens = [g.exponents for g in ideal.generators]
    t = len(gens)
    zero = tuple([0] * ideal.num_vars)

    lcm_of: dict[int, tuple[int, ...]] = {0: zero}
    for mask in range(1, 1 << t):
        low = mask & -mask
        rest = mask ^ low
        g = gens[low.bit_length() - 1]
        lcm_of[mask] = tuple(map(max, lcm_of[rest], g)) if rest else g

    strands: dict[tuple[int, ...], dict[int, list[int]]] = {}
    for mask in range(1, 1 << t):
        b = lcm_of[mask]
        size = bin(mask).count("1")
        strands.setdefault(b, {}).setdefault(size, []).append(mask)

    table: dict = {}
    for b, levels in strands.items():
        for masks in levels.values():
            masks.sort()
        top = max(levels)
        bd_rank = {}
        for s in range(2, top + 1):
            lower = levels.get(s - 1, [])
            upper = levels.get(s, [])
            if not lower or not upper:
                bd_rank[s] = 0
                continue
            index = {m: i for i, m in enumerate(lower)}
            rows = [[0] * len(upper) for _ in lower]
            for col, mask in enumerate(upper):
                sign = 1
                rem = mask
                while rem:
                    bit = rem & -rem
                    sub = mask ^ bit
                    if lcm_of[sub] == b:
                        rows[index[sub]][col] = sign
                    sign = -sign
                    rem ^= bit
            bd_rank[s] = _rank(rows, field.p)
        for s in range(1, top + 1):
            # H_s of the strand is beta_{s-1, b}(I); d_1 vanishes for b != 0.
            h = len(levels.get(s, [])) - bd_rank.get(s, 0) - bd_rank.get(s + 1, 0)
            if h:
                table[(s - 1, b)] = h
    return BettiTable.from_dict(ideal.num_vars, table)


def projdim_and_reg(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    max_generators: int = 12,
    max_vars: int = 16,
) -> tuple[int, int, bool]:
    """(projective dimension, regularity, linear-resolution flag) of I."""
    table = betti_table(ideal, field, max_generators, max_vars)
    degrees = set(ideal.generator_degrees)
    linear = len(degrees) == 1 and table.is_linear(next(iter(degrees)))
    return table.projdim, table.regularity, linear


def is_cohen_macaulay(
    cx: SimplicialComplex, field: FieldChoice = RATIONALS, max_vars: int = 14
) -> bool:
    """Reisner's criterion: every face link has vanishing reduced homology
    below its dimension."""
    if cx.is_void:
        raise DomainError("Cohen-Macaulayness of the void complex is undefined")
    if cx.n > max_vars:
        raise ResourceLimitError(f"n = {cx.n} exceeds the cap {max_vars}")
    faces = cx.face_mask_set
    for f in faces:
        link = frozenset(g ^ f for g in faces if g & f == f)
        link_dim = max(bin(m).count("1") for m in link) - 1
        profile = _profile_from_masks(link, field.p)
        if any(profile[: link_dim + 1]):
            return False
    return True


def _shelling_extension_ok(diff, new: int, prefix: list[int]) -> bool:
    """Can facet `new` follow `prefix`?  Each difference with an earlier
    facet must contain a vertex realized as a singleton difference."""
    singles = 0
    for k in prefix:
        d = diff[new][k]
        if d and d & (d - 1) == 0:
            singles |= d
    return all(diff[new][j] & singles for j in prefix)


def shelling_order(cx: SimplicialComplex, max_facets: int = 12) -> list[int] | None:
    """Backtracking search for a shelling order of a pure complex.

    Returns facet indices (0-based) or None when exhaustive search shows
    the complex is not shellable.
    """
    _, is_pure = dimension_info(cx)
    if not is_pure:
        raise DomainError("shellability is only defined for pure complexes")
    masks = cx.facet_masks
    t = len(masks)
    if t > max_facets:
        raise ResourceLimitError(f"{t} facets exceed the cap {max_facets}")
    if t == 1:
        return [0]
    diff = [[masks[i] & ~masks[j] for j in range(t)] for i in range(t)]

    dead: set[frozenset] = set()

    def extend(prefix: list[int], remaining: set[int], union: int) -> bool:
        if not remaining:
            return True
        key = frozenset(remaining)
        if key in dead:
            return False
        # Facets meeting the current union in more vertices first.
        order = sorted(
            remaining, key=lambda i: (-bin(masks[i] & union).count("1"), i)
        )
        for i in order:
            if not _shelling_extension_ok(diff, i, prefix):
                continue
            prefix.append(i)
            remaining.discard(i)
            if extend(prefix, remaining, union | masks[i]):
                return True
            remaining.add(i)
            prefix.pop()
        dead.add(key)
        return False

    for first in range(t):
        prefix = [first]
        remaining = set(range(t)) - {first}
        if extend(prefix, remaining, masks[first]):
            return prefix
    return None


def verify_shelling(cx: SimplicialComplex, order: list[int]) -> bool:
    """Direct pairwise check of the shelling condition on a facet order."""
    masks = [cx.facet_masks[i] for i in order]
    if sorted(order) != list(range(len(cx.facets))):
        return False
    for i in range(1, len(masks)):
        singles = 0
        for k in range(i):
            d = masks[i] & ~masks[k]
            if bin(d).count("1") == 1:
                singles |= d
        for j in range(i):
            if not masks[i] & ~masks[j] & singles:
                return False
    return True

"""Exact depth and projective dimension of monomial quotients.

Pipeline: polarize to a squarefree ideal, read its Stanley-Reisner complex
(minimal nonfaces = generator supports), and recover multigraded Betti
numbers from reduced homology of induced subcomplexes,

    beta_{i,W}(S/I) = rank H~_{|W|-i-1}(Delta restricted to W)

over the chosen coefficient field.  Only masks W in the union closure of the
generator supports (the lcm lattice) can carry homology, which keeps the scan
exact and small.  Depth is ambient size minus projective dimension; the
polarization shift cancels, so results are always relative to the ideal's own
ambient.

Module depth of a proper nonzero ideal is defined as depth of the quotient
plus one (equivalently pd(I) = pd(S/I) - 1), and is undefined for the zero
and unit ideals.

Homology ranks come from boundary-matrix ranks: bit-packed elimination over
F2 (the default fast path) or fraction-free integer elimination for exact
characteristic-zero ranks (the cross-check path).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ideals import MonomialIdeal, polarize

__all__ = [
    "FieldChoice",
    "GF2",
    "QQ",
    "ComplexView",
    "DepthResult",
    "reduced_homology_dims",
    "betti_numbers",
    "depth_quotient",
    "depth_ideal",
    "depth_ideal_both",
    "betti_table_rows",
    "clear_depth_cache",
]


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field for homology ranks: characteristic 2 or 0."""

    characteristic: int

    def __post_init__(self):
        if self.characteristic not in (0, 2):
            raise ValueError("supported characteristics: 0 and 2")

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


GF2 = FieldChoice(2)
QQ = FieldChoice(0)


@dataclass(frozen=True)
class ComplexView:
    """Stanley-Reisner data: W is a face iff no nonface mask is a subset of W."""

    ambient: tuple[str, ...]
    nonfaces: tuple[int, ...]

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "ComplexView":
        if not I.is_squarefree:
            raise ValueError("Stanley-Reisner complex needs a squarefree ideal")
        masks = []
        for g in I.gens:
            m = 0
            for i, e in enumerate(g):
                if e:
                    m |= 1 << i
            masks.append(m)
        return cls(tuple(I.ambient), tuple(masks))


@dataclass(frozen=True)
class DepthResult:
    """Depth/pd bundle for one quotient; depth_ideal is None for the zero ideal."""

    ambient_size: int
    pd_quotient: int
    depth_quotient: int
    depth_ideal: int | None
    field: FieldChoice
    betti: dict | None = None

    def __post_init__(self):
        if self.depth_quotient + self.pd_quotient != self.ambient_size:
            raise ValueError("depth + pd must equal the ambient size")


# ---------------------------------------------------------------------------
# faces and boundary ranks


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _faces_by_size(W: int, nonfaces) -> list[list[int]]:
    """Faces of the induced subcomplex on W, grouped by vertex count.

    Entry s lists the masks with s vertices; entry 0 is the empty face.  The
    void complex (some nonface inside W is empty) yields an empty list.
    """
    local = [s for s in nonfaces if not s & ~W]
    if any(s == 0 for s in local):
        return []
    verts = list(_bits(W))
    per_vertex = [[s for s in local if (s >> v) & 1] for v in verts]
    out: list[list[int]] = [[] for _ in range(len(verts) + 1)]
    top = 0

    def grow(face: int, start: int, size: int):
        nonlocal top
        out[size].append(face)
        if size > top:
            top = size
        for t in range(start, len(verts)):
            cand = face | (1 << verts[t])
            completes = False
            for s in per_vertex[t]:
                if not s & ~cand:
                    completes = True
                    break
            if not completes:
                grow(cand, t + 1, size + 1)

    grow(0, 0, 0)
    return out[: top + 1]


def _rank_gf2(cols: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for v in cols:
        while v:
            low = v & -v
            row = pivots.get(low)
            if row is None:
                pivots[low] = v
                rank += 1
                break
            v ^= row
    return rank


_GROWTH_LIMIT = 1 << 30


def _rank_exact(cols: list[dict[int, int]]) -> int:
    """Rank over the rationals by fraction-free integer elimination.

    Entries stay integral (v := pivot_coeff * v - v_coeff * pivot); a gcd
    renormalization kicks in only once coefficients grow, which keeps the
    common all-unit-pivot case cheap.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for vec in cols:
        v = {k: c for k, c in vec.items() if c}
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                rank += 1
                break
            a, b = v[lead], p[lead]
            merged = {k: b * c for k, c in v.items()}
            grew = b > 1 or b < -1
            for k, c in p.items():
                c = merged.get(k, 0) - a * c
                if c:
                    merged[k] = c
                    if c > _GROWTH_LIMIT or -c > _GROWTH_LIMIT:
                        grew = True
                else:
                    merged.pop(k, None)
            if grew:
                g = 0
                for c in merged.values():
                    g = math.gcd(g, c)
                if g > 1:
                    merged = {k: c // g for k, c in merged.items()}
            v = merged
    return rank


def _boundary_rank(prev_faces: list[int], cur_faces: list[int], characteristic: int) -> int:
    """Rank of the boundary map from size-s faces down to size-(s-1) faces."""
    if not prev_faces or not cur_faces:
        return 0
    index = {m: t for t, m in enumerate(prev_faces)}
    if characteristic == 2:
        cols = []
        for F in cur_faces:
            col = 0
            m = F
            while m:
                low = m & -m
                col |= 1 << index[F ^ low]
                m ^= low
            cols.append(col)
        return _rank_gf2(cols)
    cols_q = []
    for F in cur_faces:
        col: dict[int, int] = {}
        sign = 1
        m = F
        while m:
            low = m & -m
            col[index[F ^ low]] = sign
            sign = -sign
            m ^= low
        cols_q.append(col)
    return _rank_exact(cols_q)


def _homology_by_size(faces, characteristic: int, stop_at_first: bool):
    """Reduced homology ranks indexed by face size s (dimension s-1).

    With stop_at_first, returns (s_min, rank) for the smallest nonvanishing
    size, or None when the complex is acyclic.
    """
    S = len(faces) - 1
    if S < 0:
        return None if stop_at_first else []
    prev_bd = 0  # rank of the boundary map out of size-s faces
    out = []
    for s in range(S + 1):
        next_bd = _boundary_rank(faces[s], faces[s + 1], characteristic) if s < S else 0
        h = len(faces[s]) - prev_bd - next_bd
        if stop_at_first and h:
            return (s, h)
        out.append(h)
        prev_bd = next_bd
    return None if stop_at_first else out


def _rational_homology_window(faces, lo: int, hi: int, stop_at_first: bool):
    """Rational reduced homology for face sizes in [lo, hi] only.

    Callers guarantee homology vanishes outside the window (mod-2 homology
    bounds rational homology dimension by dimension, so the window is the
    mod-2 support).  Returns (s, rank) of the first hit or None when
    stop_at_first, else a full list with zeros outside the window.
    """
    S = len(faces) - 1
    out = [0] * (S + 1)
    prev_bd = _boundary_rank(faces[lo - 1], faces[lo], 0) if lo >= 1 else 0
    for s in range(lo, hi + 1):
        next_bd = _boundary_rank(faces[s], faces[s + 1], 0) if s < S else 0
        h = len(faces[s]) - prev_bd - next_bd
        if h and stop_at_first:
            return (s, h)
        out[s] = h
        prev_bd = next_bd
    return None if stop_at_first else out


def _mask_homology(faces, characteristic: int, stop_at_first: bool):
    """Homology of one induced subcomplex, with the mod-2 shortcut for the
    rational path: masks and dimensions that are mod-2 acyclic are skipped
    because their rational homology vanishes too (universal coefficients)."""
    if characteristic == 2:
        return _homology_by_size(faces, 2, stop_at_first)
    mod2 = _homology_by_size(faces, 2, stop_at_first=False)
    alive = [s for s, h in enumerate(mod2) if h]
    if not alive:
        return None if stop_at_first else [0] * len(mod2)
    return _rational_homology_window(faces, alive[0], alive[-1], stop_at_first)


def reduced_homology_dims(C: ComplexView, W: int, field: FieldChoice) -> dict[int, int]:
    """Reduced homology ranks {dimension: rank} of the induced subcomplex on W.

    Dimensions run from -1 (the empty face; rank 1 exactly for the complex
    {emptyset}) up to the top face dimension.  The void complex gives {}.
    """
    if W >> len(C.ambient):
        raise ValueError("W is not a subset of the ambient vertices")
    faces = _faces_by_size(W, C.nonfaces)
    dims = _homology_by_size(faces, field.characteristic, stop_at_first=False)
    return {s - 1: h for s, h in enumerate(dims)}


# ---------------------------------------------------------------------------
# Hochster scan over the lcm lattice


def _support_masks(I: MonomialIdeal) -> list[int]:
    masks = []
    for g in I.gens:
        m = 0
        for i, e in enumerate(g):
            if e:
                m |= 1 << i
        masks.append(m)
    return masks


def _lcm_lattice(supports) -> list[int]:
    """All unions of subsets of the supports, the empty union included."""
    closed = {0}
    for s in supports:
        closed |= {r | s for r in closed}
    return sorted(closed)


def betti_numbers(I: MonomialIdeal, field: FieldChoice) -> dict[tuple[int, int], int]:
    """All nonzero multigraded Betti numbers of S/I for squarefree I.

    Keys are (homological degree, multidegree bit mask over I.ambient).  Only
    union-of-support masks are scanned; that pruning is exact.
    """
    if I.is_unit:
        raise ValueError("Betti numbers of the unit quotient are not defined here")
    if not I.is_squarefree:
        raise ValueError("betti_numbers expects a squarefree ideal (polarize first)")
    out = {(0, 0): 1}
    supports = _support_masks(I)
    for W in _lcm_lattice(supports):
        if not W:
            continue
        faces = _faces_by_size(W, supports)
        dims = _mask_homology(faces, field.characteristic, stop_at_first=False)
        size = W.bit_count()
        for s, h in enumerate(dims):
            if h:
                out[(size - s, W)] = h
    return out


def _pd_squarefree(supports, characteristic: int) -> int:
    """Projective dimension of the squarefree quotient, homology scan with
    early exit per mask (the smallest nonvanishing dimension carries the
    largest homological degree)."""
    pd = 0
    for W in _lcm_lattice(supports):
        if not W:
            continue
        faces = _faces_by_size(W, supports)
        hit = _mask_homology(faces, characteristic, stop_at_first=True)
        if hit is not None:
            i = W.bit_count() - hit[0]
            if i > pd:
                pd = i
    return pd


def _pd_squarefree_both(supports) -> tuple[int, int]:
    """Projective dimension in characteristics 2 and 0 in one lattice sweep.

    The mod-2 homology profile per mask settles the characteristic-2 answer
    and bounds where rational homology can live, so the rational pass only
    touches the masks and dimensions that are mod-2 alive.
    """
    pd2 = pd0 = 0
    for W in _lcm_lattice(supports):
        if not W:
            continue
        faces = _faces_by_size(W, supports)
        mod2 = _homology_by_size(faces, 2, stop_at_first=False)
        alive = [s for s, h in enumerate(mod2) if h]
        if not alive:
            continue
        size = W.bit_count()
        if size - alive[0] > pd2:
            pd2 = size - alive[0]
        hit = _rational_homology_window(faces, alive[0], alive[-1], stop_at_first=True)
        if hit is not None and size - hit[0] > pd0:
            pd0 = size - hit[0]
    return pd2, pd0


# ---------------------------------------------------------------------------
# public depth API


_PD_CACHE: dict = {}
# Keyed by (characteristic, normalized generator matrix).  Plain dict writes
# are GIL-atomic and the value is a pure function of the key, so concurrent
# duplicate computation is the worst case.


def clear_depth_cache():
    _PD_CACHE.clear()


def _pd_cache_key(gens, characteristic: int):
    used = [j for j in range(len(gens[0]))] if gens else []
    used = [j for j in used if any(g[j] for g in gens)]
    rows = sorted(tuple(g[j] for j in used) for g in gens)
    for _ in range(2):
        if not rows:
            break
        order = sorted(range(len(rows[0])), key=lambda j: tuple(r[j] for r in rows))
        rows = sorted(tuple(r[j] for j in order) for r in rows)
    return (characteristic, tuple(rows))


def depth_quotient(I: MonomialIdeal, field: FieldChoice = GF2, want_betti: bool = False) -> DepthResult:
    """Depth and projective dimension of S/I over the ideal's own ambient.

    Non-squarefree input is polarized first; the added-variable shift cancels
    against the enlarged ambient, so pd is preserved and depth stays relative
    to len(I.ambient).  The zero ideal gives depth = ambient size.  When
    want_betti is set, the full multigraded table of the (polarized) ideal is
    attached.
    """
    if I.is_unit:
        raise ValueError("depth of the unit quotient is undefined")
    n = len(I.ambient)
    if I.is_zero:
        return DepthResult(n, 0, n, None, field, {(0, 0): 1} if want_betti else None)
    pol = polarize(I)
    betti = None
    if want_betti:
        betti = betti_numbers(pol.ideal, field)
        pd = max(i for i, _ in betti)
    else:
        key = _pd_cache_key(I.gens, field.characteristic)
        pd = _PD_CACHE.get(key)
        if pd is None:
            pd = _pd_squarefree(_support_masks(pol.ideal), field.characteristic)
            _PD_CACHE[key] = pd
    return DepthResult(n, pd, n - pd, n - pd + 1, field, betti)


def depth_ideal(I: MonomialIdeal, field: FieldChoice = GF2) -> int:
    """Module depth of a proper nonzero ideal: depth of the quotient plus one."""
    if I.is_zero or I.is_unit:
        raise ValueError("module depth needs a proper nonzero ideal")
    return depth_quotient(I, field).depth_quotient + 1


def depth_ideal_both(I: MonomialIdeal) -> tuple[int, int]:
    """Module depth in characteristics 2 and 0, sharing one homology sweep.

    Cheaper than two depth_ideal calls; used by the cross-checking harness.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("module depth needs a proper nonzero ideal")
    n = len(I.ambient)
    key2 = _pd_cache_key(I.gens, 2)
    key0 = _pd_cache_key(I.gens, 0)
    pd2 = _PD_CACHE.get(key2)
    pd0 = _PD_CACHE.get(key0)
    if pd2 is None or pd0 is None:
        pd2, pd0 = _pd_squarefree_both(_support_masks(polarize(I).ideal))
        _PD_CACHE[key2] = pd2
        _PD_CACHE[key0] = pd0
    return n - pd2 + 1, n - pd0 + 1


def betti_table_rows(betti: dict[tuple[int, int], int]) -> list[tuple[int, int, str, int]]:
    """Betti map flattened to sorted CSV rows (i, |W|, W-mask-hex, rank)."""
    rows = [(i, W.bit_count(), format(W, "x"), r) for (i, W), r in betti.items()]
    return sorted(rows)

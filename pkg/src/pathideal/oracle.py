"""Brute-force multigraded Betti numbers over a finite prime field.

The rank of the i-th syzygy module of a monomial ideal I in multidegree b
equals the dimension of the (i-1)-st reduced homology of the upper Koszul
complex K^b(I), whose faces are the squarefree subsets sigma of supp(b) with
x^b / x^sigma in I.  Only multidegrees in the lcm lattice of the generators
can contribute, so the oracle closes the generator set under pairwise lcms
and runs simplicial homology at every lattice point.

Everything here is exact: GF(2) ranks use integer bitsets, odd primes use
dense modular Gaussian elimination.  Rational homology is out of scope.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import AmbientMismatchError, SizeCapExceededError
from .monomials import Monomial, MonomialIdeal

__all__ = [
    "DEFAULT_LATTICE_CAP",
    "FieldSpec",
    "GF2",
    "SimplicialComplexFaces",
    "BettiTable",
    "gf2_rank",
    "gfp_rank",
    "lcm_lattice",
    "upper_koszul_complex",
    "reduced_homology_dims",
    "betti_table",
    "regularity_of_quotient",
    "projective_dimension_of_quotient",
    "has_linear_resolution",
]

log = logging.getLogger(__name__)

# Hard cap on the number of distinct multidegrees visited per ideal.
DEFAULT_LATTICE_CAP = 200_000

# Largest support size for which the 2^k face enumeration is attempted.
_MAX_SUPPORT = 24


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(math.isqrt(p)) + 1):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A finite prime field GF(p), the coefficient field for homology."""

    characteristic: int = 2

    def __post_init__(self):
        if not _is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not prime")


GF2 = FieldSpec(2)


# ---------------------------------------------------------------------------
# exact rank computations
# ---------------------------------------------------------------------------

def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as int bitsets, one per row."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            if low in pivots:
                row ^= pivots[low]
            else:
                pivots[low] = row
                rank += 1
                break
    return rank


def gfp_rank(mat: np.ndarray, p: int) -> int:
    """Rank over GF(p) by row-echelon Gaussian elimination."""
    m = np.mod(np.asarray(mat, dtype=np.int64), p)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        if inv != 1:
            m[r] = (m[r] * inv) % p
        below = r + 1 + np.flatnonzero(m[r + 1 :, c])
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[r])) % p
        r += 1
    return r


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplexFaces:
    """All faces of a finite simplicial complex, grouped by dimension.

    Group g lists the faces with g vertices (dimension g - 1), as sorted
    tuples of vertex labels; group 0 is the empty face.  The void complex
    has no groups at all.
    """

    vertices: tuple[int, ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        vset = set(self.vertices)
        if tuple(sorted(vset)) != self.vertices:
            raise ValueError("vertices must be sorted and distinct")
        all_faces = set()
        for g, group in enumerate(self.faces):
            if tuple(sorted(group)) != group:
                raise ValueError(f"faces of dimension {g - 1} not sorted")
            for f in group:
                if len(f) != g or tuple(sorted(set(f))) != f:
                    raise ValueError(f"bad face {f!r} in group {g}")
                if not set(f) <= vset:
                    raise ValueError(f"face {f!r} uses unknown vertices")
                all_faces.add(f)
        # Downward closure.
        for f in all_faces:
            if not f:
                continue
            for sub in itertools.combinations(f, len(f) - 1):
                if sub not in all_faces:
                    raise ValueError(f"face {f!r} missing subface {sub!r}")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplexFaces":
        """Build the downward closure of the given faces."""
        closure: set[tuple[int, ...]] = set()
        for f in faces:
            vs = tuple(sorted(set(f)))
            for r in range(len(vs) + 1):
                closure.update(itertools.combinations(vs, r))
        if not closure:
            return cls((), ())
        maxlen = max(len(f) for f in closure)
        groups = tuple(
            tuple(sorted(f for f in closure if len(f) == g))
            for g in range(maxlen + 1)
        )
        vertices = tuple(sorted(set(v for f in closure for v in f)))
        return cls(vertices, groups)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        """Dimension of the largest face; -2 for the void complex."""
        return len(self.faces) - 2

    def face_count(self) -> int:
        return sum(len(g) for g in self.faces)


# ---------------------------------------------------------------------------
# homology core (bitmask faces)
# ---------------------------------------------------------------------------

def _homology_dims_from_masks(
    face_masks: list[int], p: int
) -> dict[int, int]:
    """Reduced homology dimensions {d: dim H~_d} of a complex over GF(p).

    Faces arrive as vertex bitmasks, the empty face included; the result
    covers every dimension from -1 up to the top face dimension.
    """
    if not face_masks:
        return {}
    groups: dict[int, list[int]] = {}
    for m in sorted(face_masks):
        groups.setdefault(bin(m).count("1") - 1, []).append(m)
    top = max(groups)
    index = {d: {m: i for i, m in enumerate(ms)} for d, ms in groups.items()}
    rank: dict[int, int] = {}
    for d in range(0, top + 1):
        here = groups.get(d, [])
        below = index.get(d - 1, {})
        if not here or not below:
            rank[d] = 0
            continue
        if p == 2:
            rows = []
            for m in here:
                bits = 0
                mm = m
                while mm:
                    low = mm & -mm
                    bits |= 1 << below[m ^ low]
                    mm ^= low
                rows.append(bits)
            rank[d] = gf2_rank(rows)
        else:
            mat = np.zeros((len(below), len(here)), dtype=np.int64)
            for col, m in enumerate(here):
                mm = m
                j = 0
                while mm:
                    low = mm & -mm
                    mat[below[m ^ low], col] = 1 if j % 2 == 0 else p - 1
                    mm ^= low
                    j += 1
            rank[d] = gfp_rank(mat, p)
    out: dict[int, int] = {}
    for d in range(-1, top + 1):
        c = len(groups.get(d, []))
        out[d] = c - rank.get(d, 0) - rank.get(d + 1, 0)
    return out


_subset_masks_cache: dict[int, np.ndarray] = {}


def _subset_masks(k: int) -> np.ndarray:
    """(2^k, k) 0/1 array; row m is the indicator of the bits of m."""
    if k not in _subset_masks_cache:
        idx = np.arange(1 << k, dtype=np.int64)
        _subset_masks_cache[k] = ((idx[:, None] >> np.arange(k)) & 1).astype(
            np.int64
        )
    return _subset_masks_cache[k]


def _face_mask_list(E: np.ndarray, bs: np.ndarray) -> list[int]:
    """Bitmasks of the upper Koszul faces over the support positions.

    E holds the support columns of the eligible generators, bs the support
    exponents of the multidegree.  Face m means x^b / x^sigma lies in the
    ideal, where sigma collects the support positions in m.
    """
    q, k = E.shape
    if k > _MAX_SUPPORT:
        raise SizeCapExceededError(
            f"support size {k} exceeds face-enumeration limit {_MAX_SUPPORT}",
            count=k,
        )
    if q == 0:
        return []
    masks = _subset_masks(k)
    quot = bs[None, :] - masks
    isface = (E[None, :, :] <= quot[:, None, :]).all(axis=2).any(axis=1)
    return [int(m) for m in np.flatnonzero(isface)]


def _is_cone(face_set: set[int], k: int) -> bool:
    """True when some vertex completes every face, making the complex a cone."""
    for v in range(k):
        bit = 1 << v
        if all((m | bit) in face_set for m in face_set):
            return True
    return False


def _multidegree_betti(G: np.ndarray, b: np.ndarray, p: int) -> dict[int, int]:
    """Nonzero Betti ranks {i: beta_{i,b}} at one multidegree."""
    n = G.shape[1]
    supp = np.flatnonzero(b)
    k = int(supp.size)
    off = np.ones(n, dtype=bool)
    off[supp] = False
    elig = G[(G[:, off] == 0).all(axis=1)] if off.any() else G
    if elig.shape[0] == 0:
        return {}
    faces = _face_mask_list(elig[:, supp], b[supp])
    if not faces:
        return {}
    fset = set(faces)
    if k and _is_cone(fset, k):
        return {}
    hdims = _homology_dims_from_masks(faces, p)
    return {d + 1: h for d, h in hdims.items() if h > 0}


# ---------------------------------------------------------------------------
# lcm lattice
# ---------------------------------------------------------------------------

def _lcm_lattice_encoded(G: np.ndarray, cap: int, base: int) -> np.ndarray:
    n = G.shape[1]
    weights = np.array([base**i for i in range(n)], dtype=np.int64)
    rows = np.unique(G, axis=0)
    seen = np.unique(rows @ weights)
    frontier = rows
    collected = [rows]
    while frontier.size:
        cand = np.maximum(frontier[:, None, :], G[None, :, :]).reshape(-1, n)
        codes = cand @ weights
        uniq, first = np.unique(codes, return_index=True)
        fresh = ~np.isin(uniq, seen)
        new_rows = cand[first[fresh]]
        if new_rows.shape[0] == 0:
            break
        seen = np.union1d(seen, uniq[fresh])
        if seen.size > cap:
            raise SizeCapExceededError(
                f"lcm lattice exceeded cap {cap} (reached {seen.size})",
                count=int(seen.size),
            )
        collected.append(new_rows)
        frontier = new_rows
    return np.unique(np.concatenate(collected), axis=0)


def _lcm_lattice_tuples(G: np.ndarray, cap: int) -> np.ndarray:
    lattice = set(map(tuple, G.tolist()))
    frontier = list(lattice)
    while frontier:
        fresh = []
        for b in frontier:
            merged = np.maximum(np.array(b, dtype=G.dtype), G)
            for row in map(tuple, merged.tolist()):
                if row not in lattice:
                    lattice.add(row)
                    fresh.append(row)
                    if len(lattice) > cap:
                        raise SizeCapExceededError(
                            f"lcm lattice exceeded cap {cap}", count=len(lattice)
                        )
        frontier = fresh
    return np.unique(np.array(sorted(lattice), dtype=G.dtype), axis=0)


def lcm_lattice(
    ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP
) -> list[Monomial]:
    """All lcms of nonempty generator subsets, as sorted monomials."""
    if ideal.is_zero():
        return []
    G = np.array([g.exponents for g in ideal.generators], dtype=np.int64)
    lat = _lcm_lattice_array(G, cap)
    return [Monomial(tuple(int(x) for x in row)) for row in lat]


def _lcm_lattice_array(G: np.ndarray, cap: int) -> np.ndarray:
    base = int(G.max()) + 1 if G.size else 1
    n = G.shape[1]
    if base > 1 and base**n < 2**62:
        return _lcm_lattice_encoded(G, cap, base)
    return _lcm_lattice_tuples(G, cap)


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of a monomial ideal over GF(p).

    entries maps (homological index i, multidegree) to a positive rank;
    graded and total numbers are roll-ups of it.
    """

    ambient: int
    characteristic: int
    entries: Mapping[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not self.entries

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return dict(sorted(out.items()))

    def total(self, i: int) -> int:
        return self.totals().get(i, 0)

    def graded(self) -> dict[tuple[int, int], int]:
        """Graded Betti numbers {(i, total degree j): rank}."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), r in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + r
        return dict(sorted(out.items()))

    def num_generators(self) -> int:
        return self.total(0)

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({sum(b) for (i, b) in self.entries if i == 0}))

    def max_index(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(i for (i, _) in self.entries)

    def quotient_regularity(self) -> int:
        """reg R/I = max(|b| - i) - 1 over the nonzero entries of I."""
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(sum(b) - i for (i, b) in self.entries) - 1

    def quotient_projective_dimension(self) -> int:
        """pd R/I = 1 + max homological index of I."""
        return 1 + self.max_index()

    def is_linear(self) -> bool:
        """True iff generated in one degree d with all entries at j = i + d."""
        degs = self.generator_degrees()
        if len(degs) != 1:
            return False
        d = degs[0]
        return all(sum(b) == i + d for (i, b) in self.entries)

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "char": self.characteristic,
            "entries": [
                {"i": i, "multidegree": list(b), "rank": r}
                for (i, b), r in sorted(self.entries.items())
            ],
            "graded": [
                {"i": i, "j": j, "rank": r}
                for (i, j), r in self.graded().items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        entries = {}
        for e in data["entries"]:
            key = (int(e["i"]), tuple(int(x) for x in e["multidegree"]))
            rank = int(e["rank"])
            if rank <= 0 or key in entries:
                raise ValueError("malformed Betti entries")
            entries[key] = rank
        table = cls(int(data["ambient"]), int(data["char"]), entries)
        graded = [
            {"i": i, "j": j, "rank": r} for (i, j), r in table.graded().items()
        ]
        if graded != data.get("graded"):
            raise ValueError("graded roll-up disagrees with entries")
        return table

    def __str__(self) -> str:
        if not self.entries:
            return "empty Betti table"
        graded = self.graded()
        imax = max(i for (i, _) in graded)
        lines = ["j\\i " + " ".join(f"{i:>5}" for i in range(imax + 1))]
        js = sorted({j for (_, j) in graded})
        for j in js:
            row = [graded.get((i, j), 0) for i in range(imax + 1)]
            lines.append(
                f"{j:>3} " + " ".join(f"{r:>5}" if r else "    ." for r in row)
            )
        return "\n".join(lines)


def upper_koszul_complex(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplexFaces:
    """The complex of squarefree sigma within supp(b) with x^b/x^sigma in I."""
    if b.ambient != ideal.ambient:
        raise AmbientMismatchError(
            f"ambient mismatch: {b.ambient} vs {ideal.ambient}"
        )
    if ideal.is_zero():
        return SimplicialComplexFaces((), ())
    G = np.array([g.exponents for g in ideal.generators], dtype=np.int64)
    bv = np.array(b.exponents, dtype=np.int64)
    n = G.shape[1]
    supp = np.flatnonzero(bv)
    off = np.ones(n, dtype=bool)
    off[supp] = False
    elig = G[(G[:, off] == 0).all(axis=1)] if off.any() else G
    faces = _face_mask_list(elig[:, supp], bv[supp]) if elig.shape[0] else []
    labels = [int(v) + 1 for v in supp]
    groups: dict[int, list[tuple[int, ...]]] = {}
    for m in faces:
        verts = tuple(labels[j] for j in range(len(labels)) if (m >> j) & 1)
        groups.setdefault(len(verts), []).append(verts)
    if not groups:
        return SimplicialComplexFaces((), ())
    top = max(groups)
    face_groups = tuple(
        tuple(sorted(groups.get(g, []))) for g in range(top + 1)
    )
    used = tuple(sorted({v for g in groups.values() for f in g for v in f}))
    return SimplicialComplexFaces(used, face_groups)


def reduced_homology_dims(
    cx: SimplicialComplexFaces, fieldspec: FieldSpec = GF2
) -> list[int]:
    """Reduced homology dimensions [H~_{-1}, H~_0, ...]; empty for void."""
    if cx.is_void:
        return []
    pos = {v: i for i, v in enumerate(cx.vertices)}
    masks = []
    for group in cx.faces:
        for f in group:
            m = 0
            for v in f:
                m |= 1 << pos[v]
            masks.append(m)
    hdims = _homology_dims_from_masks(masks, fieldspec.characteristic)
    top = max(hdims)
    return [hdims[d] for d in range(-1, top + 1)]


def betti_table(
    ideal: MonomialIdeal,
    fieldspec: FieldSpec = GF2,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> BettiTable:
    """Full multigraded Betti table of the ideal over GF(p)."""
    p = fieldspec.characteristic
    if ideal.is_zero():
        return BettiTable(ideal.ambient, p, {})
    G = np.array([g.exponents for g in ideal.generators], dtype=np.int64)
    lat = _lcm_lattice_array(G, lattice_cap)
    # When x^b / x^supp(b) still lies in I the Koszul complex is the full
    # simplex on supp(b), hence contractible; one vectorized pass prunes
    # those multidegrees before any homology is attempted.
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    keep_chunks = []
    topped = np.maximum(lat - 1, 0)
    chunk = 2048
    for lo in range(0, lat.shape[0], chunk):
        tc = topped[lo : lo + chunk]
        full = (G[None, :, :] <= tc[:, None, :]).all(axis=2).any(axis=1)
        keep_chunks.append(~full)
    keep = np.concatenate(keep_chunks)
    for b in lat[keep]:
        contrib = _multidegree_betti(G, b, p)
        if contrib:
            bt = tuple(int(x) for x in b)
            for i, r in contrib.items():
                entries[(i, bt)] = r
    return BettiTable(ideal.ambient, p, entries)


def regularity_of_quotient(
    ideal: MonomialIdeal,
    fieldspec: FieldSpec = GF2,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> int:
    """Castelnuovo-Mumford regularity of R/I from the brute-force table."""
    if ideal.is_zero():
        raise ValueError("regularity of R/(0) is not computed here; reject")
    return betti_table(ideal, fieldspec, lattice_cap).quotient_regularity()


def projective_dimension_of_quotient(
    ideal: MonomialIdeal,
    fieldspec: FieldSpec = GF2,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> int:
    """Projective dimension of R/I from the brute-force table."""
    if ideal.is_zero():
        raise ValueError("projective dimension of R/(0) is not computed here")
    return betti_table(ideal, fieldspec, lattice_cap).quotient_projective_dimension()


def has_linear_resolution(
    ideal: MonomialIdeal,
    fieldspec: FieldSpec = GF2,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> bool:
    """True iff the minimal free resolution of I is linear over GF(p).

    Ideals generated in mixed degrees cannot have a linear resolution; they
    yield False immediately, with a diagnostic log line.
    """
    if ideal.is_zero():
        return True
    degs = set(ideal.generator_degrees())
    if len(degs) > 1:
        log.warning(
            "mixed generator degrees %s: linear resolution impossible",
            sorted(degs),
        )
        return False
    return betti_table(ideal, fieldspec, lattice_cap).is_linear()

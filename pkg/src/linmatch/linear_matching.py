"""Matched bases and the linear matching property for K-subspaces of L.

Everything here works relative to a ground field K sitting inside L: either the
base field of the ExtensionContext (GF(p) or Q) or a proper subfield GF(p^m0)
described by a SubfieldDescriptor.  L is viewed as K^d through the K-basis
1, a, ..., a^(d-1), d = [L:K], and subspaces are stored as reduced echelon
matrices over K so that equal subspaces compare equal.

For ordered bases (a_1..a_n) of A and (b_1..b_n) of B, the blocker
S_i = {b in B : a_i b in A} must lie in the hyperplane spanned by the b_j,
j != i.  Searching for the b-basis is done on the dual side: pick functionals
psi_i on B vanishing on S_i that form a basis of B*, then return the basis of
B dual to them.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

from . import linalg
from .errors import (BoundExceeded, ContextMismatch, DimensionMismatch, InvariantViolation,
                     NotADivisor, NotIrreducible, NotPrimeDegree, RationalBase, SearchExhausted,
                     ZeroElement)
from .finite_field import (ExtensionContext, FieldElement, Polynomial, SubfieldDescriptor,
                           base_field, poly_is_irreducible, subfield_basis)
from .numtheory import divisors, is_prime


# ---------------------------------------------------------------------------
# L as a vector space over K
# ---------------------------------------------------------------------------

class RelativeExtension:
    """L = ``ctx`` as a vector space over K (the base field or a subfield)."""

    def __init__(self, ctx: ExtensionContext, base: Optional[SubfieldDescriptor] = None):
        if base is not None and base.ctx != ctx:
            raise ContextMismatch("subfield belongs to a different extension")
        self.ctx = ctx
        if base is None or base.sub_degree == 1:
            self.K = ctx.base
            self.sub_degree = 1
            self.subfield = base
        else:
            self.K = base
            self.sub_degree = base.sub_degree
            self.subfield = base
        self.dim = ctx.degree // self.sub_degree

    @cached_property
    def _to_coords(self):
        # Columns kappa_t * a^j for t < m0, j < d form a GF(p)-basis of L.
        ctx, K = self.ctx, self.K
        a = ctx.generator
        cols = [((a ** j) * kappa).coords for j in range(self.dim) for kappa in K.basis]
        return linalg.inverse(linalg.transpose(cols), ctx.base)

    @cached_property
    def _powers(self) -> tuple:
        a = self.ctx.generator
        return tuple(a ** j for j in range(self.dim))

    def coords(self, x: FieldElement) -> tuple:
        if x.ctx != self.ctx:
            raise ContextMismatch("element of a different field")
        if self.sub_degree == 1:
            return x.coords
        u = linalg.matvec(self._to_coords, x.coords, self.ctx.base)
        m = self.sub_degree
        basis = self.K.basis
        out = []
        for j in range(self.dim):
            acc = self.ctx.zero
            for t in range(m):
                if u[j * m + t]:
                    acc = acc + basis[t] * u[j * m + t]
            out.append(acc)
        return tuple(out)

    def element(self, coords: Sequence) -> FieldElement:
        if self.sub_degree == 1:
            return self.ctx.element(coords)
        acc = self.ctx.zero
        for c, power in zip(coords, self._powers):
            if not c.is_zero():
                acc = acc + c * power
        return acc

    @property
    def is_finite(self) -> bool:
        return self.ctx.is_finite

    @property
    def q(self) -> Optional[int]:
        """Size of K (None over Q)."""
        return self.K.order

    def projective_points(self, dim: Optional[int] = None) -> Iterator[tuple]:
        """Nonzero vectors of K^dim whose first nonzero entry is one."""
        dim = self.dim if dim is None else dim
        K = self.K
        elems = list(K.elements())
        for lead in range(dim):
            for tail in itertools.product(elems, repeat=dim - lead - 1):
                yield (K.zero,) * lead + (K.one,) + tail

    def random_vector(self, rng: random.Random, dim: Optional[int] = None) -> tuple:
        dim = self.dim if dim is None else dim
        return tuple(self.K.random(rng) for _ in range(dim))

    def describe(self) -> str:
        return f"{self.ctx.describe()} over {self.K}"

    def __eq__(self, other):
        return (isinstance(other, RelativeExtension) and self.ctx == other.ctx
                and self.sub_degree == other.sub_degree)

    def __hash__(self):
        return hash((self.ctx, self.sub_degree))


@lru_cache(maxsize=64)
def relative_extension(ctx: ExtensionContext, base_sub_degree: int = 1) -> RelativeExtension:
    """Cached RelativeExtension for L over its subfield of degree ``base_sub_degree``."""
    if base_sub_degree == 1:
        return RelativeExtension(ctx)
    return RelativeExtension(ctx, subfield_basis(ctx, base_sub_degree))


def _as_extension(ctx_or_ext, base=None) -> RelativeExtension:
    if isinstance(ctx_or_ext, RelativeExtension):
        return ctx_or_ext
    if base is None:
        return relative_extension(ctx_or_ext, 1)
    if isinstance(base, int):
        return relative_extension(ctx_or_ext, base)
    return relative_extension(ctx_or_ext, base.sub_degree)


# ---------------------------------------------------------------------------
# Subspaces and ordered bases
# ---------------------------------------------------------------------------

class Subspace:
    """A K-subspace of L held as a reduced echelon basis over K."""

    def __init__(self, ext: RelativeExtension, rows: Sequence[tuple] = ()):
        self.ext = ext
        self.rref, self.pivots = linalg.rref(list(rows), ext.K) if rows else ((), ())

    @classmethod
    def span(cls, ext: RelativeExtension, elements: Sequence[FieldElement]) -> "Subspace":
        return cls(ext, [ext.coords(x) for x in elements])

    @property
    def dim(self) -> int:
        return len(self.rref)

    @property
    def K(self):
        return self.ext.K

    def basis_elements(self) -> tuple:
        return tuple(self.ext.element(r) for r in self.rref)

    def contains(self, x: FieldElement) -> bool:
        return self.contains_coords(self.ext.coords(x))

    def contains_coords(self, v: tuple) -> bool:
        if not self.rref:
            return all(self.K.is_zero(c) for c in v)
        return linalg.in_span(v, self.rref, self.pivots, self.K)

    def __contains__(self, x: FieldElement) -> bool:
        return self.contains(x)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains_coords(r) for r in self.rref)

    def combination(self, coeffs: Sequence) -> tuple:
        """K-coordinates of ``sum(coeffs[j] * basis[j])``."""
        if not self.rref:
            return (self.K.zero,) * self.ext.dim
        return linalg.combine(coeffs, self.rref, self.K)

    def elements(self) -> Iterator[FieldElement]:
        elems = list(self.K.elements())
        for c in itertools.product(elems, repeat=self.dim):
            yield self.ext.element(self.combination(c))

    def projective_points(self) -> Iterator[tuple]:
        """K-coordinates (in L) of one representative per line of the subspace."""
        for c in self.ext.projective_points(self.dim):
            yield self.combination(c)

    def size(self) -> Optional[int]:
        return None if self.K.order is None else self.K.order ** self.dim

    def key(self) -> tuple:
        return self._key

    @cached_property
    def _key(self) -> tuple:
        k = self.K.key
        return tuple(tuple(k(a) for a in row) for row in self.rref)

    def to_texts(self) -> list[str]:
        return [x.to_text() for x in self.basis_elements()]

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ext == other.ext and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.to_texts()})"


class BasisTuple:
    """An ordered basis of a subspace; order matters for matched bases."""

    def __init__(self, subspace: Subspace, vectors: Sequence[FieldElement]):
        vectors = tuple(vectors)
        if len(vectors) != subspace.dim:
            raise DimensionMismatch(f"{len(vectors)} vectors for a {subspace.dim}-dim subspace")
        if Subspace.span(subspace.ext, vectors) != subspace:
            raise ValueError("vectors do not form a basis of the subspace")
        self.subspace = subspace
        self.vectors = vectors

    @classmethod
    def of(cls, ext: RelativeExtension, vectors: Sequence[FieldElement]) -> "BasisTuple":
        """Ordered basis of the span of ``vectors`` (which must be independent)."""
        vectors = tuple(vectors)
        S = Subspace.span(ext, vectors)
        if S.dim != len(vectors):
            raise ValueError("vectors are linearly dependent")
        return cls(S, vectors)

    @property
    def ext(self) -> RelativeExtension:
        return self.subspace.ext

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def to_texts(self) -> list[str]:
        return [x.to_text() for x in self.vectors]

    def __repr__(self):
        return f"BasisTuple({self.to_texts()})"


def _check_pair(A: Subspace, B: Subspace):
    if A.ext != B.ext:
        raise ContextMismatch("subspaces of different extensions")
    if A.dim != B.dim:
        raise DimensionMismatch(f"dim A = {A.dim} but dim B = {B.dim}")


# ---------------------------------------------------------------------------
# Blockers and matched bases
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8192)
def _residual_map(A: Subspace, a: FieldElement) -> tuple:
    """Matrix of the K-linear map x -> (a*x reduced against A's echelon basis)."""
    ext, K = A.ext, A.K
    cols = []
    for j in range(ext.dim):
        unit = tuple(K.one if i == j else K.zero for i in range(ext.dim))
        v = ext.coords(a * ext.element(unit))
        cols.append(linalg.reduce_vector(v, A.rref, A.pivots, K) if A.rref else v)
    return linalg.transpose(cols)


def _blocker_coefficients(A: Subspace, a: FieldElement, B: Subspace) -> tuple:
    """Basis of {c : sum c_j B_j lies in a^-1 A}, in coordinates of B's echelon basis."""
    K = A.K
    R = _residual_map(A, a)
    residuals = [linalg.matvec(R, beta, K) for beta in B.rref]
    return linalg.kernel(linalg.transpose(residuals), B.dim, K) if residuals else ()


def blocker(A: Subspace, a: FieldElement, B: Subspace) -> Subspace:
    """The subspace {b in B : a*b in A}."""
    _check_pair(A, B)
    if a.ctx != A.ext.ctx:
        raise ContextMismatch("element of a different field")
    if a.is_zero():
        raise ZeroElement("blocker needs a nonzero element")
    coeffs = _blocker_coefficients(A, a, B)
    S = Subspace(A.ext, [B.combination(c) for c in coeffs])
    for s in S.basis_elements():
        if not (B.contains(s) and A.contains(a * s)):
            raise InvariantViolation("blocker basis vector fails its defining condition")
    return S


def _hyperplane(b_basis: BasisTuple, i: int) -> Subspace:
    ext = b_basis.ext
    return Subspace.span(ext, [b for j, b in enumerate(b_basis) if j != i])


def is_matched_basis(a_basis: BasisTuple, b_basis: BasisTuple) -> bool:
    """Whether each blocker S_i lies in the span of the b_j with j != i."""
    A, B = a_basis.subspace, b_basis.subspace
    _check_pair(A, B)
    for i, a in enumerate(a_basis):
        coeffs = _blocker_coefficients(A, a, B)
        if not coeffs:
            continue
        H = _hyperplane(b_basis, i)
        if not all(H.contains_coords(B.combination(c)) for c in coeffs):
            return False
    return True


@dataclass(frozen=True)
class LinearMatchingCertificate:
    a_basis: BasisTuple
    b_basis: BasisTuple
    blocker_subspaces: tuple

    def verify(self) -> bool:
        """Re-check the certificate from the two bases alone."""
        A, B = self.a_basis.subspace, self.b_basis.subspace
        for i, a in enumerate(self.a_basis):
            S = blocker(A, a, B)
            if S != self.blocker_subspaces[i]:
                return False
            if not S.is_subspace_of(_hyperplane(self.b_basis, i)):
                return False
        return is_matched_basis(self.a_basis, self.b_basis)

    def to_dict(self) -> dict:
        return {
            "a_basis": self.a_basis.to_texts(),
            "b_basis": self.b_basis.to_texts(),
            "blockers": [S.to_texts() for S in self.blocker_subspaces],
        }


def certify(a_basis: BasisTuple, b_basis: BasisTuple) -> Optional[LinearMatchingCertificate]:
    """Certificate for a matched pair of bases, or None if they are not matched."""
    if not is_matched_basis(a_basis, b_basis):
        return None
    A, B = a_basis.subspace, b_basis.subspace
    return LinearMatchingCertificate(a_basis, b_basis, tuple(blocker(A, a, B) for a in a_basis))


def _annihilators(a_basis: BasisTuple, B: Subspace) -> list[tuple]:
    A, K = a_basis.subspace, B.K
    out = []
    for a in a_basis:
        S = _blocker_coefficients(A, a, B)
        if not S:
            out.append(tuple(tuple(K.one if r == c else K.zero for c in range(B.dim))
                             for r in range(B.dim)))
        else:
            out.append(linalg.kernel(S, B.dim, K))
    return out


def _greedy_transversal(anns: list[tuple], K) -> Optional[list]:
    order = sorted(range(len(anns)), key=lambda i: (len(anns[i]), i))
    chosen: dict[int, tuple] = {}
    for i in order:
        for psi in anns[i]:
            if linalg.rank(list(chosen.values()) + [psi], K) == len(chosen) + 1:
                chosen[i] = psi
                break
        else:
            return None
    return [chosen[i] for i in range(len(anns))]


def _exhaustive_transversal(anns: list[tuple], K, max_steps: int) -> Optional[list]:
    # Candidates are restricted to the annihilator bases.  By Rado's theorem on
    # the linear matroid this loses nothing: an independent transversal of the
    # subspaces exists iff one exists among their basis vectors.
    order = sorted(range(len(anns)), key=lambda i: (len(anns[i]), i))
    chosen: list = []
    steps = 0

    def search(t: int) -> bool:
        nonlocal steps
        if t == len(order):
            return True
        for psi in anns[order[t]]:
            steps += 1
            if steps > max_steps:
                raise SearchExhausted(f"transversal search exceeded {max_steps} steps")
            if linalg.rank(chosen + [psi], K) == t + 1:
                chosen.append(psi)
                if search(t + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        return None
    picked = dict(zip(order, chosen))
    return [picked[i] for i in range(len(anns))]


def find_matched_basis(a_basis: BasisTuple, B: Subspace, strategy: str = "auto",
                       max_steps: int = 10**6) -> Optional[BasisTuple]:
    """An ordered basis of B matched to ``a_basis``, or None if none exists.

    ``strategy`` is ``"greedy"`` (one pass, raises SearchExhausted when it gets
    stuck), ``"exhaustive"`` (complete backtracking) or ``"auto"`` (greedy, then
    exhaustive).  A None result is always a proof of nonexistence.
    """
    A = a_basis.subspace
    _check_pair(A, B)
    if strategy not in ("auto", "greedy", "exhaustive"):
        raise ValueError(f"unknown strategy {strategy!r}")
    K = B.K
    anns = _annihilators(a_basis, B)
    if any(not ann for ann in anns):
        return None  # some S_i = B, and no hyperplane contains B
    psi = None
    if strategy in ("auto", "greedy"):
        psi = _greedy_transversal(anns, K)
        if psi is None and strategy == "greedy":
            raise SearchExhausted("greedy pass found no transversal")
    if psi is None:
        psi = _exhaustive_transversal(anns, K, max_steps)
        if psi is None:
            return None
    # b_j has coordinates given by column j of psi^-1, so psi_i(b_j) = delta_ij.
    inv = linalg.inverse(psi, K)
    cols = linalg.transpose(inv)
    result = BasisTuple(B, [B.ext.element(B.combination(c)) for c in cols])
    if not is_matched_basis(a_basis, result):
        raise InvariantViolation("dual construction produced an unmatched basis")
    return result


def matched_basis_exists_bruteforce(a_basis: BasisTuple, B: Subspace,
                                    max_elements: int = 2**12) -> Optional[BasisTuple]:
    """Search all ordered bases of B (up to scaling each vector) directly.

    Independent of the dual construction; used as a test oracle.
    """
    _check_pair(a_basis.subspace, B)
    size = B.size()
    if size is None or size > max_elements:
        raise BoundExceeded(f"|B| = {size} exceeds {max_elements}")
    ext = B.ext
    points = list(B.projective_points())
    for combo in itertools.permutations(points, B.dim):
        if linalg.rank(combo, B.K) != B.dim:
            continue
        cand = BasisTuple(B, [ext.element(v) for v in combo])
        if is_matched_basis(a_basis, cand):
            return cand
    return None


# ---------------------------------------------------------------------------
# Matched subspaces
# ---------------------------------------------------------------------------

def count_bases(q: int, k: int, reduce: bool = True) -> int:
    """Number of ordered bases of K^k, |K| = q; up to scaling and order if ``reduce``."""
    ordered = math.prod(q ** k - q ** i for i in range(k))
    if not reduce:
        return ordered
    return ordered // ((q - 1) ** k * math.factorial(k))


@lru_cache(maxsize=1024)
def _cached_bases(A: Subspace, reduce: bool) -> tuple:
    return tuple(enumerate_bases(A, reduce))


def enumerate_bases(A: Subspace, reduce: bool = True) -> Iterator[BasisTuple]:
    """Ordered bases of A in lexicographic order of coordinate vectors.

    With ``reduce`` only one basis per unordered set of lines is produced;
    matchability of a basis is unchanged by scaling its vectors or permuting
    both bases simultaneously, so this loses nothing.
    """
    ext, K = A.ext, A.K
    points = sorted(A.projective_points(), key=lambda v: tuple(K.key(c) for c in v))
    if reduce:
        combos = itertools.combinations(points, A.dim)
    else:
        nonzero = sorted((v for v in (A.combination(c) for c in
                                      itertools.product(list(K.elements()), repeat=A.dim))
                          if not all(K.is_zero(x) for x in v)),
                         key=lambda v: tuple(K.key(c) for c in v))
        combos = itertools.permutations(nonzero, A.dim)
    for combo in combos:
        if linalg.rank(combo, K) == A.dim:
            yield BasisTuple(A, [ext.element(v) for v in combo])


def random_basis(A: Subspace, rng: random.Random) -> BasisTuple:
    ext, K = A.ext, A.K
    while True:
        rows = [A.combination(ext.random_vector(rng, A.dim)) for _ in range(A.dim)]
        if linalg.rank(rows, K) == A.dim:
            return BasisTuple(A, [ext.element(r) for r in rows])


@dataclass
class MatchedSubspaceResult:
    matched: bool
    coverage: str
    bases_checked: int
    witness: Optional[BasisTuple] = None
    seed: Optional[int] = None

    def __bool__(self):
        return self.matched


def is_matched_subspace(A: Subspace, B: Subspace, *, reduce: bool = True,
                        max_bases: int = 10_000, samples: int = 200, seed: int = 0,
                        strategy: str = "auto") -> MatchedSubspaceResult:
    """Whether every ordered basis of A is matched to some ordered basis of B.

    Enumerates all bases when there are at most ``max_bases`` of them (finite K
    only), otherwise checks ``samples`` seeded random bases.  The first failing
    basis is returned as the witness.
    """
    _check_pair(A, B)
    q = A.K.order
    if q is not None and count_bases(q, A.dim, reduce) <= max_bases:
        coverage, bases, used_seed = "exhaustive", _cached_bases(A, reduce), None
    else:
        rng = random.Random(seed)
        coverage, used_seed = "sampled", seed
        bases = (random_basis(A, rng) for _ in range(samples))
    checked = 0
    for basis in bases:
        checked += 1
        if find_matched_basis(basis, B, strategy=strategy) is None:
            return MatchedSubspaceResult(False, coverage, checked, basis, used_seed)
    return MatchedSubspaceResult(True, coverage, checked, None, used_seed)


# ---------------------------------------------------------------------------
# Subspace sweeps and the linear matching property
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = math.prod(q ** (n - i) - 1 for i in range(k))
    den = math.prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def enumerate_subspaces(ext: RelativeExtension, dim: int) -> list[Subspace]:
    """All K-subspaces of L of the given dimension, sorted by echelon form."""
    if not ext.is_finite:
        raise RationalBase("subspace enumeration needs a finite field")
    if dim < 0 or dim > ext.dim:
        raise DimensionMismatch(f"no {dim}-dimensional subspaces in a {ext.dim}-dim space")
    level = {(): Subspace(ext)}
    points = list(ext.projective_points())
    for _ in range(dim):
        nxt = {}
        for S in level.values():
            for v in points:
                if S.contains_coords(v):
                    continue
                T = Subspace(ext, list(S.rref) + [v])
                nxt.setdefault(T.key(), T)
        level = nxt
    return [level[k] for k in sorted(level)]


def random_subspace(ext: RelativeExtension, dim: int, rng: random.Random) -> Subspace:
    rows: list = []
    while len(rows) < dim:
        v = ext.random_vector(rng)
        if linalg.rank(rows + [v], ext.K) == len(rows) + 1:
            rows.append(v)
    return Subspace(ext, rows)


@dataclass
class LMPReport:
    extension: str
    p: int
    degree: int
    modulus: str
    base_sub_degree: int
    relative_degree: int
    dims: list
    verdict: str
    coverage: str
    pairs_checked: int
    bases_checked: int
    seed: int
    witness: Optional[dict] = None
    per_dim: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self) -> dict:
        return {
            "extension": self.extension,
            "p": self.p,
            "degree": self.degree,
            "modulus": self.modulus,
            "base_sub_degree": self.base_sub_degree,
            "relative_degree": self.relative_degree,
            "dims": list(self.dims),
            "verdict": self.verdict,
            "coverage": self.coverage,
            "pairs_checked": self.pairs_checked,
            "bases_checked": self.bases_checked,
            "seed": self.seed,
            "witness": self.witness,
            "per_dim": list(self.per_dim),
        }


def _pairs_for_dim(ext, dim, max_pairs, samples, rng, mode):
    K = ext.K
    if ext.is_finite:
        n_sub = gaussian_binomial(ext.dim, dim, K.order)
        exhaustive_ok = n_sub * n_sub <= max_pairs
    else:
        exhaustive_ok = False
    if mode == "exhaustive" and not exhaustive_ok:
        raise BoundExceeded(f"dimension {dim}: exhaustive sweep exceeds {max_pairs} pairs")
    one = ext.ctx.one
    if exhaustive_ok and mode != "sampled":
        subs = enumerate_subspaces(ext, dim)
        pairs = ((A, B) for A in subs for B in subs if not B.contains(one))
        return "exhaustive", pairs
    def sampled():
        made = 0
        while made < samples:
            A = random_subspace(ext, dim, rng)
            B = random_subspace(ext, dim, rng)
            if B.contains(one):
                continue
            made += 1
            yield A, B
    return "sampled", sampled()


def linear_matching_property_by_search(ctx: ExtensionContext, base=None, dims=None, *,
                                       mode: str = "auto", max_pairs: int = 200_000,
                                       samples: int = 200, max_bases: int = 10_000,
                                       seed: int = 0, stop_at_first: bool = True,
                                       reduce: bool = True) -> LMPReport:
    """Sweep pairs (A, B) with 1 not in B and test whether A is matched to B.

    ``base`` is None (the base field), a SubfieldDescriptor, or a sub-degree.
    ``mode`` is ``"auto"``, ``"exhaustive"`` (BoundExceeded if too large) or
    ``"sampled"``.  The first failure in enumeration order becomes the witness.
    """
    ext = _as_extension(ctx, base)
    dims = list(range(1, ext.dim + 1)) if dims is None else [int(d) for d in dims]
    for d in dims:
        if d < 1 or d > ext.dim:
            raise DimensionMismatch(f"dimension {d} outside 1..{ext.dim}")
    rng = random.Random(seed)
    coverage = "exhaustive"
    pairs_checked = bases_checked = 0
    witness = None
    per_dim = []
    for d in dims:
        mode_d, pairs = _pairs_for_dim(ext, d, max_pairs, samples, rng, mode)
        n_pairs = n_bases = 0
        failures = 0
        for A, B in pairs:
            res = is_matched_subspace(A, B, reduce=reduce, max_bases=max_bases,
                                      samples=samples, seed=rng.randrange(2**63))
            n_pairs += 1
            n_bases += res.bases_checked
            if res.coverage == "sampled":
                mode_d = "sampled"
            if not res.matched:
                failures += 1
                if witness is None:
                    witness = {
                        "dim": d,
                        "A": A.to_texts(),
                        "B": B.to_texts(),
                        "a_basis": res.witness.to_texts(),
                    }
                if stop_at_first:
                    break
        per_dim.append({"dim": d, "coverage": mode_d, "pairs": n_pairs, "bases": n_bases,
                        "failures": failures})
        pairs_checked += n_pairs
        bases_checked += n_bases
        if mode_d != "exhaustive":
            coverage = "sampled"
        if witness is not None and stop_at_first:
            break
    return LMPReport(
        extension=ext.describe(),
        p=ext.ctx.characteristic,
        degree=ext.ctx.degree,
        modulus=ext.ctx.modulus.to_text(),
        base_sub_degree=ext.sub_degree,
        relative_degree=ext.dim,
        dims=dims,
        verdict="holds" if witness is None else "fails",
        coverage=coverage,
        pairs_checked=pairs_checked,
        bases_checked=bases_checked,
        seed=seed,
        witness=witness,
        per_dim=per_dim,
    )


def verify_lmp_witness(ctx: ExtensionContext, base_sub_degree: int, witness: dict) -> bool:
    """Re-check a failure witness from its text form.

    True iff 1 is not in B, the listed a-basis is a basis of A, and the
    exhaustive search proves no ordered basis of B is matched to it.
    """
    ext = relative_extension(ctx, base_sub_degree)
    A = Subspace.span(ext, [ctx.from_text(t) for t in witness["A"]])
    B = Subspace.span(ext, [ctx.from_text(t) for t in witness["B"]])
    if A.dim != B.dim or B.contains(ctx.one):
        return False
    a_basis = BasisTuple(A, [ctx.from_text(t) for t in witness["a_basis"]])
    return find_matched_basis(a_basis, B, strategy="exhaustive") is None


# ---------------------------------------------------------------------------
# Intermediate subfields
# ---------------------------------------------------------------------------

def intermediate_subfield_degrees(ctx: ExtensionContext, base_sub_degree: int = 1) -> list[int]:
    """Degrees m over GF(p) with m0 | m | n and m0 < m < n."""
    if not ctx.is_finite:
        raise RationalBase("subfield lattice is only implemented for finite fields")
    n, m0 = ctx.degree, base_sub_degree
    if m0 < 1 or n % m0:
        raise NotADivisor(f"{m0} does not divide {n}")
    return [m for m in divisors(n) if m % m0 == 0 and m0 < m < n]


def has_proper_intermediate_subfield(ctx: ExtensionContext, base_sub_degree: int = 1) -> bool:
    return bool(intermediate_subfield_degrees(ctx, base_sub_degree))


def minimal_lmp_witness(base, f) -> ExtensionContext:
    """L = base[x]/(f) for an irreducible f of prime degree.

    A prime relative degree leaves no room for an intermediate field, so L has
    the linear matching property over the base.
    """
    F = base_field(base)
    if isinstance(f, str):
        f = Polynomial.from_text(f, F)
    elif f.base != F:
        raise ContextMismatch(f"polynomial is over {f.base}, not {F}")
    if not is_prime(f.degree):
        raise NotPrimeDegree(f"degree {f.degree} is not prime")
    if not poly_is_irreducible(f):
        raise NotIrreducible(f"{f} is reducible over {F}")
    ctx = ExtensionContext(f.monic(), check=False)
    if ctx.is_finite and has_proper_intermediate_subfield(ctx, 1):
        raise InvariantViolation("prime-degree extension reports an intermediate subfield")
    return ctx

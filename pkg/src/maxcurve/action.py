"""The automorphism action on the Suzuki cover at q=8, realized as explicit
permutations of the 29185 places rational over the degree-4 extension.

Places are triples (x, y, t) of field codes plus one distinguished infinite
place at index 0.  Generators come in three flavors: stabilizer maps
(x, y, t) -> (A x + b, A^(q0+1) y + b^q0 x + c, delta t) with delta^m = A,
the torus map t -> lambda t, and the lifted involution built from the
rational functions alpha/beta, y/beta, t/beta with its degenerate locus
completed by the forced swap of the origin with the infinite place.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .curves import CurveParams
from .gf import FieldSpec, make_field


class ModelError(RuntimeError):
    """A generator failed to permute the place set: parameterization bug."""


@dataclass
class PlaceSet:
    field: FieldSpec
    params: CurveParams
    places: list[tuple[int, int, int]]  # affine triples; index 0 is reserved
    index: dict[tuple[int, int, int], int]
    coords: tuple[np.ndarray, np.ndarray, np.ndarray]
    subfield: list[int]

    INFTY = 0

    def __len__(self) -> int:
        return len(self.places) + 1

    def fq_rational_ids(self) -> list[int]:
        sub = set(self.subfield)
        ids = [self.INFTY]
        for i, (x, y, t) in enumerate(self.places):
            if x in sub and y in sub and t == 0:
                ids.append(i + 1)
        return ids

    def t_zero_affine_count(self) -> int:
        return sum(1 for (_, _, t) in self.places if t == 0)


@dataclass
class Automorphism:
    perm: np.ndarray
    tag: str
    spec: tuple = ()

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        return compose(self, other)


def build_places(params: CurveParams, modulus=None) -> PlaceSet:
    """Enumerate all places of the q=8 cover over the degree-4 extension,
    in lexicographic coordinate order, infinite place first."""
    if params.q != 8:
        raise ModelError("place enumeration is desk scale: q=8 only")
    f = make_field(2, 12, modulus)
    exp, log = f.tables()
    n = f.order - 1
    q, q0, m = params.q, params.q0, params.m

    # preimages of the linearized map y -> y^q + y (kernel is the subfield)
    pre: dict[int, int] = {}
    for y in range(f.order):
        img = f.pow(y, q) ^ y
        pre.setdefault(img, y)
    kernel = sorted(f.subfield_codes(2 * params.s + 1))
    assert len(kernel) == q

    step = n // m
    zeta = int(exp[step])  # fixed primitive m-th root of unity

    places: list[tuple[int, int, int]] = []
    for x in range(f.order):
        s = f.pow(x, q) ^ x
        c = f.mul(f.pow(x, q0), s)
        if c not in pre:  # not in the image: no y solves the second equation
            continue
        y0 = pre[c]
        ys = sorted(y0 ^ kc for kc in kernel)
        if s == 0:
            ts = [0]
        else:
            lg = int(log[s])
            if lg % m != 0:
                continue
            t0 = int(exp[lg // m])
            ts = sorted(f.mul(t0, f.pow(zeta, j)) for j in range(m))
        for y in ys:
            for t in ts:
                places.append((x, y, t))

    index = {pl: i + 1 for i, pl in enumerate(places)}
    arr = np.array(places, dtype=np.int64)
    return PlaceSet(
        field=f,
        params=params,
        places=places,
        index=index,
        coords=(arr[:, 0], arr[:, 1], arr[:, 2]),
        subfield=kernel,
    )


def _perm_from_affine_images(ps: PlaceSet, xi, yi, ti, tag: str, spec=()) -> Automorphism:
    perm = np.empty(len(ps), dtype=np.int32)
    perm[PlaceSet.INFTY] = PlaceSet.INFTY
    index = ps.index
    try:
        for i in range(len(ps.places)):
            perm[i + 1] = index[(int(xi[i]), int(yi[i]), int(ti[i]))]
    except KeyError as exc:  # image violates a curve equation
        raise ModelError(f"{tag}: image {exc} is not a place") from exc
    if len(np.unique(perm)) != len(perm):
        raise ModelError(f"{tag}: not a bijection")
    return Automorphism(perm=perm, tag=tag, spec=spec)


def _vmul_const(f: FieldSpec, const: int, arr: np.ndarray) -> np.ndarray:
    if const == 0:
        return np.zeros_like(arr)
    exp, log = f.tables()
    n = f.order - 1
    out = np.zeros_like(arr)
    nz = arr != 0
    out[nz] = exp[(log[arr[nz]] + int(log[const])) % n]
    return out


def _vmul(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    exp, log = f.tables()
    n = f.order - 1
    out = np.zeros_like(a)
    nz = (a != 0) & (b != 0)
    out[nz] = exp[(log[a[nz]] + log[b[nz]]) % n]
    return out


def _vpow(f: FieldSpec, arr: np.ndarray, e: int) -> np.ndarray:
    exp, log = f.tables()
    n = f.order - 1
    out = np.zeros_like(arr)
    nz = arr != 0
    out[nz] = exp[(log[arr[nz]] * e) % n]
    return out


def gen_stabilizer(ps: PlaceSet, A: int, b: int, c: int, delta: int) -> Automorphism:
    """Lifted stabilizer element; requires A, b, c in the base subfield,
    A nonzero, and delta^m = A."""
    f, params = ps.field, ps.params
    q0, m = params.q0, params.m
    sub = set(ps.subfield)
    if A == 0:
        raise ModelError("A must be nonzero")
    if not {A, b, c} <= sub:
        raise ModelError("A, b, c must lie in the base subfield")
    if f.pow(delta, m) != A:
        raise ModelError("delta^m != A")
    X, Y, T = ps.coords
    xi = _vmul_const(f, A, X) ^ b
    yi = _vmul_const(f, f.pow(A, q0 + 1), Y) ^ _vmul_const(f, f.pow(b, q0), X) ^ c
    ti = _vmul_const(f, delta, T)
    return _perm_from_affine_images(ps, xi, yi, ti, "stabilizer", (A, b, c, delta))


def stabilizer_in_complement(ps: PlaceSet, A: int, b: int, c: int) -> Automorphism:
    """The stabilizer element lying in the lifted simple group: delta is the
    unique m-th root of A inside the base subfield."""
    params = ps.params
    r = pow(params.m, -1, params.q - 1)
    delta = ps.field.pow(A, r)
    return gen_stabilizer(ps, A, b, c, delta)


def gen_gamma(ps: PlaceSet, lam: int) -> Automorphism:
    f, m = ps.field, ps.params.m
    if f.pow(lam, m) != 1 or any(f.pow(lam, d) == 1 for d in range(1, m) if m % d == 0):
        raise ModelError("lambda must have exact order m")
    X, Y, T = ps.coords
    return _perm_from_affine_images(ps, X, Y, _vmul_const(f, lam, T), "gamma", (lam,))


def default_gamma(ps: PlaceSet) -> Automorphism:
    exp, _ = ps.field.tables()
    return gen_gamma(ps, int(exp[(ps.field.order - 1) // ps.params.m]))


def gen_phi(ps: PlaceSet) -> Automorphism:
    """The lifted involution.  alpha = y^2q0 + x^(2q0+1), beta = x y^2q0 +
    alpha^2q0; regular images are (alpha/beta, y/beta, t/beta).  The places
    where beta vanishes, together with the infinite place, are completed by
    the unique bijective pairing, which must be the origin <-> infinity swap.
    """
    f, params = ps.field, ps.params
    q0 = params.q0
    X, Y, T = ps.coords
    alpha = _vpow(f, Y, 2 * q0) ^ _vpow(f, X, 2 * q0 + 1)
    beta = _vmul(f, X, _vpow(f, Y, 2 * q0)) ^ _vpow(f, alpha, 2 * q0)

    degenerate = np.flatnonzero(beta == 0)
    if degenerate.size != 1:
        raise ModelError(f"beta vanishes at {degenerate.size} affine places, expected 1")
    origin_row = int(degenerate[0])
    if ps.places[origin_row] != (0, 0, 0):
        raise ModelError("beta vanishes away from the origin")

    binv = np.ones_like(beta)
    nz = beta != 0
    exp, log = f.tables()
    n = f.order - 1
    binv[nz] = exp[(-log[beta[nz]]) % n]
    xi = _vmul(f, alpha, binv)
    yi = _vmul(f, Y, binv)
    ti = _vmul(f, T, binv)

    perm = np.empty(len(ps), dtype=np.int32)
    index = ps.index
    for i in range(len(ps.places)):
        if i == origin_row:
            continue
        key = (int(xi[i]), int(yi[i]), int(ti[i]))
        if key not in index:
            raise ModelError(f"involution image {key} is not a place")
        perm[i + 1] = index[key]
    perm[origin_row + 1] = PlaceSet.INFTY
    perm[PlaceSet.INFTY] = origin_row + 1
    if len(np.unique(perm)) != len(perm):
        raise ModelError("involution is not a bijection")
    auto = Automorphism(perm=perm, tag="phi")
    if not np.array_equal(perm[perm], np.arange(len(ps))):
        raise ModelError("completed map is not an involution")
    return auto


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """(a o b): apply b first."""
    return Automorphism(perm=a.perm[b.perm], tag="composite")


def identity(ps: PlaceSet) -> Automorphism:
    return Automorphism(perm=np.arange(len(ps), dtype=np.int32), tag="identity")


def fixed_points(a: Automorphism) -> int:
    return int(np.count_nonzero(a.perm == np.arange(a.perm.shape[0])))


def element_order(a: Automorphism) -> int:
    order = 1
    seen = np.zeros(a.perm.shape[0], dtype=bool)
    perm = a.perm
    for start in range(perm.shape[0]):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = int(perm[j])
            length += 1
        order = math.lcm(order, length)
    return order


def power(a: Automorphism, n: int) -> Automorphism:
    result = np.arange(a.perm.shape[0], dtype=np.int32)
    base = a.perm
    while n:
        if n & 1:
            result = base[result]
        base = base[base]
        n >>= 1
    return Automorphism(perm=result, tag="composite")


def default_generators(ps: PlaceSet) -> dict[str, Automorphism]:
    """A fixed generating set: a full-torus stabilizer element, the two wild
    translations, the involution, and the torus map."""
    nonzero_sub = [c for c in ps.subfield if c != 0]
    # the base subfield's unit group is cyclic of prime order, so any
    # non-identity unit generates it
    gen7 = next(c for c in nonzero_sub if c != 1)
    one = 1
    return {
        "torus7": stabilizer_in_complement(ps, gen7, 0, 0),
        "wild_b": stabilizer_in_complement(ps, one, nonzero_sub[0], 0),
        "wild_c": stabilizer_in_complement(ps, one, 0, nonzero_sub[0]),
        "phi": gen_phi(ps),
        "gamma": default_gamma(ps),
    }


def verify_orbits(ps: PlaceSet, autos: list[Automorphism]) -> tuple[int, ...]:
    """Orbit sizes of the group generated by the given permutations."""
    n = len(ps)
    seen = np.zeros(n, dtype=bool)
    sizes = []
    perms = [a.perm for a in autos]
    for start in range(n):
        if seen[start]:
            continue
        frontier = np.array([start])
        seen[start] = True
        size = 1
        while frontier.size:
            nxt = np.unique(np.concatenate([p[frontier] for p in perms]))
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            size += nxt.size
            frontier = nxt
        sizes.append(size)
    return tuple(sorted(sizes))


def find_element_of_order(
    ps: PlaceSet,
    target: int,
    generators: list[Automorphism],
    seed: int = 20240901,
    max_tries: int = 100_000,
) -> Automorphism:
    """Deterministic random search for an element of exact order `target`
    inside the group generated by `generators`."""
    rng = random.Random(seed)
    idperm = np.arange(len(ps), dtype=np.int32)
    for _ in range(max_tries):
        word_len = rng.randint(2, 8)
        perm = idperm
        for _ in range(word_len):
            perm = generators[rng.randrange(len(generators))].perm[perm]
        a = Automorphism(perm=perm, tag="composite")
        o = element_order(a)
        if o % target == 0:
            return power(a, o // target)
    raise ModelError(f"no element of order {target} found in {max_tries} tries")


def stabilizer_subgroup_order(ps: PlaceSet, cap: int = 1000) -> int:
    """Order of the group generated by all complement stabilizer elements,
    via closure on permutations (hashed by their action on the small orbit)."""
    fq_ids = np.array(ps.fq_rational_ids())
    nonzero = [c for c in ps.subfield if c != 0]
    gen7 = next(c for c in nonzero if c != 1)
    gens = [
        stabilizer_in_complement(ps, gen7, 0, 0),
        stabilizer_in_complement(ps, 1, nonzero[0], 0),
        stabilizer_in_complement(ps, 1, 0, nonzero[0]),
    ]
    seen: dict[bytes, np.ndarray] = {}
    frontier = []
    for g in gens:
        key = g.perm[fq_ids].tobytes()
        if key not in seen:
            seen[key] = g.perm
            frontier.append(g.perm)
    while frontier:
        nxt = []
        for g in gens:
            for h in frontier:
                prod = g.perm[h]
                key = prod[fq_ids].tobytes()
                if key not in seen:
                    if len(seen) >= cap:
                        raise ModelError("closure exceeded cap")
                    seen[key] = prod
                    nxt.append(prod)
        frontier = nxt
    return len(seen)

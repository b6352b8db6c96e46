"""Permutations and permutation groups.

Permutations act on ``{0, ..., n-1}`` and compose right-to-left: ``f * g``
applies ``g`` first, so ``(f * g)(i) == f(g(i))``.  Group orders come from a
deterministic Schreier-Sims stabilizer chain; brute-force closure is kept
alongside it for cross-checking small groups.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .errors import BoundExceeded

DEFAULT_CAP = 10**7
CLOSURE_CAP = 10**5


class Perm:
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Perm:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Perm:
        images = list(range(n))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Perm.identity(self.degree)
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return order_of(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return f"Perm.identity({self.degree})"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + f", n={self.degree})"


def compose(f: Perm, g: Perm) -> Perm:
    """Return ``f * g``, the map ``i -> f(g(i))``."""
    if f.degree != g.degree:
        raise ValueError(f"domain size mismatch: {f.degree} != {g.degree}")
    fi = f.images
    return Perm._raw(tuple([fi[j] for j in g.images]))


def order_of(f: Perm) -> int:
    """Least ``m >= 1`` with ``f**m`` the identity (lcm of cycle lengths)."""
    m = 1
    for c in f.cycles():
        m = m * len(c) // gcd(m, len(c))
    return m


def _first_moved(g: Perm) -> int:
    for i, j in enumerate(g.images):
        if i != j:
            return i
    raise ValueError("identity moves no point")


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims."""

    def __init__(self, degree: int, generators: Sequence[Perm]):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []
        self._build([g for g in generators if not g.is_identity()])

    def _orbit(self, level: int) -> None:
        b = self.base[level]
        trans = {b: Perm.identity(self.degree)}
        queue = deque([b])
        gens = self.strong[level]
        while queue:
            pt = queue.popleft()
            u = trans[pt]
            for s in gens:
                im = s.images[pt]
                if im not in trans:
                    trans[im] = compose(s, u)
                    queue.append(im)
        self.transversals[level] = trans

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversals.append({point: Perm.identity(self.degree)})

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            beta = g.images[self.base[i]]
            u = self.transversals[i].get(beta)
            if u is None:
                return g, i
            g = compose(u.inverse(), g)
        return g, len(self.base)

    def _build(self, gens: list[Perm]) -> None:
        for g in gens:
            if all(g.images[b] == b for b in self.base):
                self._add_level(_first_moved(g))
        for i in range(len(self.base)):
            self.strong[i] = [g for g in gens if all(g.images[b] == b for b in self.base[:i])]
            self._orbit(i)
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            for beta, u_beta in list(self.transversals[i].items()):
                for s in self.strong[i]:
                    u_img = self.transversals[i][s.images[beta]]
                    h = compose(u_img.inverse(), compose(s, u_beta))
                    if h.is_identity():
                        continue
                    y, j = self.sift(h, i + 1)
                    if y.is_identity():
                        continue
                    if j == len(self.base):
                        self._add_level(_first_moved(y))
                    for lvl in range(i + 1, j + 1):
                        self.strong[lvl].append(y)
                        self._orbit(lvl)
                    restart = j
                    break
                if restart is not None:
                    break
            i = i - 1 if restart is None else restart

    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue.is_identity()

    def elements(self) -> Iterator[Perm]:
        """Every group element once, as products of transversal elements."""
        levels = [list(t.values()) for t in self.transversals]
        ident = Perm.identity(self.degree)
        for choice in product(*levels):
            g = ident
            for u in choice:
                g = compose(g, u)
            yield g


@dataclass(frozen=True, eq=False)
class Group:
    domain_size: int
    generators: tuple[Perm, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.degree != self.domain_size:
                raise ValueError(f"generator of degree {g.degree} on domain {self.domain_size}")

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.domain_size, self.generators)

    @property
    def element_count(self) -> int:
        return self.chain.order()

    def contains(self, g: Perm) -> bool:
        return self.chain.contains(g)

    def elements(self, cap: int = DEFAULT_CAP) -> list[Perm]:
        """All elements sorted by image tuple."""
        if self.element_count > cap:
            raise BoundExceeded(f"group {self.name or ''} has {self.element_count} elements > cap {cap}")
        return sorted(self.chain.elements())

    def orbits(self) -> list[list[int]]:
        return orbits(self.generators, range(self.domain_size))


def group_order(g: Group, cap: int = DEFAULT_CAP) -> int:
    n = g.element_count
    if n > cap:
        raise BoundExceeded(f"group order {n} exceeds cap {cap}")
    return n


def closure(gens: Sequence[Perm], degree: int, cap: int = CLOSURE_CAP) -> set[Perm]:
    """Brute-force closure of ``gens``; independent of the stabilizer chain."""
    ident = Perm.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise BoundExceeded(f"closure exceeds {cap} elements")
                queue.append(h)
    return seen


def orbits(gens: Iterable[Perm], domain: Iterable[int]) -> list[list[int]]:
    """Orbits of ``⟨gens⟩`` on ``domain``, each sorted, ordered by least point."""
    gens = list(gens)
    domain = sorted(set(domain))
    inside = set(domain)
    seen: set[int] = set()
    out = []
    for pt in domain:
        if pt in seen:
            continue
        orb = {pt}
        stack = [pt]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g.images[x]
                if y not in inside:
                    raise ValueError(f"generator maps {x} outside the domain")
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        seen |= orb
        out.append(sorted(orb))
    return out


# ---------------------------------------------------------------------------
# Named groups


def build_psl27() -> Group:
    """PSL(2,7) on the projective line over F_7; index 7 encodes infinity."""
    inf = 7

    def translate(z):
        return inf if z == inf else (z + 1) % 7

    def neg_inv(z):
        if z == inf:
            return 0
        if z == 0:
            return inf
        return (-pow(z, -1, 7)) % 7

    gens = (Perm(translate(z) for z in range(8)), Perm(neg_inv(z) for z in range(8)))
    return Group(8, gens, "PSL(2,7)")


def build_s5() -> Group:
    return Group(5, (Perm.from_cycles(5, [(0, 1, 2, 3, 4)]), Perm.from_cycles(5, [(0, 1)])), "S5")


GL23_VECTORS = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]


def matrix_perm_gl23(m: Sequence[Sequence[int]]) -> Perm:
    """Action of a 2x2 matrix over F_3 on the 8 nonzero column vectors."""
    index = {v: i for i, v in enumerate(GL23_VECTORS)}
    images = []
    for x, y in GL23_VECTORS:
        images.append(index[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)])
    return Perm(images)


def build_gl23() -> Group:
    gens = tuple(matrix_perm_gl23(m) for m in ([[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 0], [0, 1]]))
    return Group(8, gens, "GL(2,3)")


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class YpGroupHandle:
    """(C_p x C_p) ⋊ D_4 acting affinely on the p x p torus, with named generators.

    ``a`` and ``b`` are the unit translations; ``t`` is the quarter turn
    ``(i, j) -> (j, -i)`` and ``s`` the reflection ``(i, j) -> (-i, j)``.
    """

    group: Group
    a: Perm
    b: Perm
    s: Perm
    t: Perm
    p: int

    def named(self) -> dict[str, Perm]:
        return {"a": self.a, "b": self.b, "s": self.s, "t": self.t}


def build_yp_group(p: int) -> YpGroupHandle:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")

    def perm_of(fn) -> Perm:
        return Perm(((fi % p) * p + (fj % p)) for i in range(p) for j in range(p) for fi, fj in [fn(i, j)])

    a = perm_of(lambda i, j: (i + 1, j))
    b = perm_of(lambda i, j: (i, j + 1))
    t = perm_of(lambda i, j: (j, -i))
    s = perm_of(lambda i, j: (-i, j))
    return YpGroupHandle(Group(p * p, (a, b, s, t), f"(C{p}xC{p})xD4"), a, b, s, t, p)

"""
Alcove geometry for the affine symmetric group acting on l-part weights.

Weights live in Z^l and the affine Weyl group W_e (type affine A_{l-1},
generated by the reflections in the hyperplanes <x + rho, e_i - e_j> = m*e)
acts through the rho-shifted action w.x = w(x + rho) - rho, where
rho_i = e - kappa_i.  Alcoves are the connected components of the
complement of the hyperplane arrangement; the fundamental alcove is the
one containing the origin.

An alcove is identified by its floor vector: for each positive root
e_i - e_j (i < j) the integer part of <x + rho, e_i - e_j> / e.  Each
alcove also carries the affine group element mapping the fundamental
alcove onto it, which is what the wall-crossing ("star") operation and
minimal galleries are computed from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SingularPoint(ValueError):
    """A weight on a hyperplane was passed where a regular one is required."""


class NotAGalleryCrossing(ValueError):
    """The hyperplane of a crossing does not bound the crossing's alcove."""


@dataclass(frozen=True)
class Hyperplane:
    """The wall <x + rho, e_i - e_j> = m * e, with 1-based i < j."""

    i: int
    j: int
    m: int

    def to_json(self):
        return {"i": self.i, "j": self.j, "m": self.m}


@dataclass(frozen=True)
class AffineElement:
    """An affine transformation x -> sigma(x) + trans with sigma a
    coordinate permutation.  ``perm[i]`` is the position coordinate i is
    sent to, so (w x)_{perm[i]} = x_i + trans[perm[i]].
    """

    perm: tuple
    trans: tuple

    @classmethod
    def identity(cls, l):
        return cls(tuple(range(l)), (0,) * l)

    def apply(self, x):
        l = len(self.perm)
        y = [0] * l
        for i in range(l):
            y[self.perm[i]] = x[i] + self.trans[self.perm[i]]
        return tuple(y)

    def compose(self, other):
        """self after other: (self.compose(other))(x) = self(other(x))."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        sigma_tau = [0] * len(self.perm)
        for i in range(len(self.perm)):
            sigma_tau[self.perm[i]] = other.trans[i]
        trans = tuple(sigma_tau[i] + self.trans[i] for i in range(len(self.perm)))
        return AffineElement(perm, trans)

    def inverse(self):
        l = len(self.perm)
        inv_perm = [0] * l
        for i in range(l):
            inv_perm[self.perm[i]] = i
        # inverse(x) = sigma^-1(x - trans), and (sigma^-1 y)_i = y[perm[i]]
        trans = tuple(-self.trans[self.perm[i]] for i in range(l))
        return AffineElement(tuple(inv_perm), trans)

    def shifted(self, p, rho):
        """The rho-shifted action w.p = w(p + rho) - rho."""
        moved = self.apply(tuple(p[i] + rho[i] for i in range(len(p))))
        return tuple(moved[i] - rho[i] for i in range(len(p)))


def reflection_element(l, e, h):
    """The reflection in ``h`` as an (unshifted) AffineElement."""
    i, j = h.i - 1, h.j - 1
    perm = list(range(l))
    perm[i], perm[j] = j, i
    trans = [0] * l
    trans[i] = h.m * e
    trans[j] = -h.m * e
    return AffineElement(tuple(perm), tuple(trans))


@dataclass(frozen=True, eq=False)
class AlcoveKey:
    """An alcove: floor vector over the positive roots plus the affine
    element carrying the fundamental alcove onto it.  Identity is the
    floor vector alone.
    """

    floors: tuple
    elem: AffineElement

    def __eq__(self, other):
        return isinstance(other, AlcoveKey) and self.floors == other.floors

    def __hash__(self):
        return hash(self.floors)

    def to_json(self, roots):
        return [[i + 1, j + 1, f] for (i, j), f in zip(roots, self.floors)]


class Geometry:
    """Alcove-geometry context for one parameter set, with memoised alcoves."""

    def __init__(self, params):
        self.params = params
        self.l = params.l
        self.e = params.e
        self.rho = params.rho
        self.roots = [(i, j) for i in range(self.l) for j in range(i + 1, self.l)]
        self.fund_floors = tuple(
            (self.rho[i] - self.rho[j]) // self.e for (i, j) in self.roots
        )
        self._keys = {}
        self._base = self._interior_point(0)
        self.fundamental = AlcoveKey(self.fund_floors, AffineElement.identity(self.l))
        self._keys[self.fund_floors] = self.fundamental
        # scratch caches for other layers (alcove functions, path closures)
        self.caches = {}

    # -- basic values -------------------------------------------------

    def value(self, p, root):
        i, j = root
        return (p[i] + self.rho[i]) - (p[j] + self.rho[j])

    def classify(self, p):
        """Hyperplanes through p (empty list exactly when p is regular)."""
        out = []
        for (i, j) in self.roots:
            v = self.value(p, (i, j))
            if v % self.e == 0:
                out.append(Hyperplane(i + 1, j + 1, v // self.e))
        return out

    def is_regular(self, p):
        return not self.classify(p)

    def reflect_point(self, h, p):
        """The rho-shifted reflection of p in h."""
        i, j = h.i - 1, h.j - 1
        v = self.value(p, (i, j)) - h.m * self.e
        q = list(p)
        q[i] -= v
        q[j] += v
        return tuple(q)

    def floors_of(self, p):
        out = []
        for root in self.roots:
            v = self.value(p, root)
            if v % self.e == 0:
                raise SingularPoint("point %r lies on a hyperplane" % (p,))
            out.append(v // self.e)
        return tuple(out)

    def _fraction_floors(self, x):
        out = []
        for (i, j) in self.roots:
            v = (x[i] + self.rho[i]) - (x[j] + self.rho[j])
            out.append(int(v // self.e))
        return tuple(out)

    # -- interior base points and segment walking ---------------------

    def _interior_point(self, attempt):
        """A generic rational point inside the fundamental alcove."""
        if attempt == 0:
            k = 4 * self.l + 1
            return tuple(Fraction(i + 1, k) for i in range(self.l))
        prime = 10007
        base = 31 + attempt
        k = (4 * self.l + 1) * prime
        return tuple(
            Fraction(pow(base, i + 1, prime) + 1, k) for i in range(self.l)
        )

    def _segment_crossings(self, x0, x1):
        """Hyperplane crossings of the open segment x0 -> x1, in order.

        Returns (time, root_index, level) triples; raises ValueError("tie")
        when two crossings coincide, which callers resolve by perturbing x0.
        """
        events = []
        for r, (i, j) in enumerate(self.roots):
            a = (x0[i] + self.rho[i]) - (x0[j] + self.rho[j])
            b = (x1[i] + self.rho[i]) - (x1[j] + self.rho[j])
            if a == b:
                continue
            lo, hi = (a, b) if a < b else (b, a)
            m = int(lo // self.e) + 1
            while m * self.e < hi:
                if m * self.e > lo:
                    s = Fraction(m * self.e - a, b - a)
                    if 0 < s < 1:
                        events.append((s, r, m))
                m += 1
        events.sort()
        for k in range(1, len(events)):
            if events[k][0] == events[k - 1][0]:
                raise ValueError("tie")
        return events

    def _walk(self, end_from_elem=None, end_point=None):
        """Cross hyperplanes along a straight segment from the fundamental
        alcove, returning (crossings, final AlcoveKey).  The endpoint is
        either a concrete point or the image of the base point under an
        affine element.
        """
        for attempt in range(12):
            x0 = self._base if attempt == 0 else self._interior_point(attempt)
            if end_from_elem is not None:
                x1 = end_from_elem.shifted(x0, self.rho)
            else:
                x1 = tuple(Fraction(c) for c in end_point)
            try:
                events = self._segment_crossings(x0, x1)
            except ValueError:
                continue
            crossings = []
            floors = list(self.fund_floors)
            elem = AffineElement.identity(self.l)
            cur = self.fundamental
            for s, r, m in events:
                i, j = self.roots[r]
                h = Hyperplane(i + 1, j + 1, m)
                crossings.append((cur, h))
                going_up = floors[r] == m - 1
                floors[r] = m if going_up else m - 1
                elem = reflection_element(self.l, self.e, h).compose(elem)
                cur = self._intern(tuple(floors), elem)
            return crossings, cur
        raise RuntimeError("could not find a generic segment for gallery walk")

    def _intern(self, floors, elem):
        key = self._keys.get(floors)
        if key is None:
            key = AlcoveKey(floors, elem)
            self._keys[floors] = key
        return key

    # -- alcoves ------------------------------------------------------

    def alcove_of(self, p):
        floors = self.floors_of(p)
        key = self._keys.get(floors)
        if key is not None:
            return key
        crossings, key = self._walk(end_point=p)
        if key.floors != floors:
            raise RuntimeError("gallery walk ended in the wrong alcove")
        return key

    def length(self, key):
        return sum(abs(f - f0) for f, f0 in zip(key.floors, self.fund_floors))

    def separating_count(self, a, b):
        return sum(abs(fa - fb) for fa, fb in zip(a.floors, b.floors))

    def point_length(self, p):
        """Hyperplanes strictly separating p from the fundamental alcove.

        Defined for singular points too (walls through p do not count),
        which is what the deterministic block-member order needs.
        """
        total = 0
        for root in self.roots:
            v = self.value(p, root)
            v0 = self.rho[root[0]] - self.rho[root[1]]
            lo, hi = (v, v0) if v < v0 else (v0, v)
            m = lo // self.e + 1
            while m * self.e < hi:
                if m * self.e > lo:
                    total += 1
                m += 1
        return total

    def minimal_gallery(self, target):
        """A minimal gallery from the fundamental alcove to ``target`` as
        (alcove, wall crossed) pairs; the target itself is not included.
        """
        if target.floors == self.fund_floors:
            return []
        crossings, final = self._walk(end_from_elem=target.elem)
        if final.floors != target.floors:
            raise RuntimeError("gallery walk ended in the wrong alcove")
        return crossings

    def star(self, b, crossing):
        """Reflect alcove b in its own wall of the same type as the wall
        ``crossing = (a, h)`` crossed from gallery alcove a.

        With a = w . fundamental and b = v . fundamental the result is
        v (w^-1 s_h w) . fundamental.
        """
        a, h = crossing
        s = reflection_element(self.l, self.e, h)
        ref_floors = self._fraction_floors(
            s.shifted(a.elem.shifted(self._base, self.rho), self.rho)
        )
        diffs = [
            r for r in range(len(self.roots)) if ref_floors[r] != a.floors[r]
        ]
        root_index = self.roots.index((h.i - 1, h.j - 1))
        if diffs != [root_index] or abs(ref_floors[root_index] - a.floors[root_index]) != 1:
            raise NotAGalleryCrossing(
                "hyperplane %r does not bound alcove %r" % (h, a.floors)
            )
        t = a.elem.inverse().compose(s).compose(a.elem)
        elem = b.elem.compose(t)
        floors = self._fraction_floors(elem.shifted(self._base, self.rho))
        result = self._intern(floors, elem)
        if abs(self.length(result) - self.length(b)) != 1:
            raise RuntimeError("wall crossing changed length by more than 1")
        return result

    # -- orbits -------------------------------------------------------

    def _orbit_key(self, p):
        return tuple(sorted((p[i] + self.rho[i]) % self.e for i in range(self.l)))

    def orbit_points(self, p, n):
        """All points of the shifted W_e-orbit of p with nonnegative
        coordinates summing to n.  Membership is the exact criterion:
        equal multisets of (coordinate + rho) residues mod e.
        """
        want = self._orbit_key(p)
        out = []
        for q in compositions(n, self.l):
            if self._orbit_key(q) == want:
                out.append(q)
        return out


def compositions(n, l):
    """All tuples of l nonnegative integers summing to n, lexicographic."""
    if l == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, l - 1):
            yield (first,) + rest


_GEOMETRIES = {}


def geometry_for(params):
    geom = _GEOMETRIES.get(params)
    if geom is None:
        geom = Geometry(params)
        _GEOMETRIES[params] = geom
    return geom

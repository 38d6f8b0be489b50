"""Alcove geometry: classification, reflections, galleries, orbits.

Derived quantities (separating counts, orbits) are checked against
independent brute-force oracles built from single reflections only.
"""

import pytest
from hypothesis import given, settings, strategies as st

from quivertl.geometry import (
    AffineElement,
    Hyperplane,
    NotAGalleryCrossing,
    SingularPoint,
    compositions,
    geometry_for,
    reflection_element,
)
from quivertl.params import Params, ParamsError


P_INTRO = Params(3, 8, (0, 4, 6))
P_RANK1 = Params(2, 4, (0, 2))


class TestParams:
    def test_rho(self):
        assert P_INTRO.rho == (8, 4, 2)
        assert P_RANK1.rho == (4, 2)
        assert P_INTRO.theta == (0, 1, 2)
        assert P_INTRO.g == 3

    def test_kappa_normalised(self):
        assert Params(2, 4, (4, 6)).kappa == (0, 2)

    def test_rejects_bad_configs(self):
        with pytest.raises(ParamsError):
            Params(2, 3, (0, 2))  # needs 2l <= e
        with pytest.raises(ParamsError):
            Params(2, 4, (0, 1))  # adjacent residues
        with pytest.raises(ParamsError):
            Params(2, 4, (0, 0))
        with pytest.raises(ParamsError):
            Params(2, 4.5, (0, 2))
        with pytest.raises(ParamsError):
            Params(2, float("inf"), (0, 2))


class TestClassify:
    def test_regular_point(self):
        assert geometry_for(P_INTRO).classify((4, 6, 3)) == []

    def test_singular_point(self):
        # (4+8) - (2+2) = 8, one wall between components 1 and 3
        assert geometry_for(P_INTRO).classify((4, 7, 2)) == [Hyperplane(1, 3, 1)]

    def test_reflect_point(self):
        g = geometry_for(P_INTRO)
        assert g.reflect_point(Hyperplane(1, 3, 1), (5, 6, 2)) == (4, 6, 3)
        # reflection is an involution fixing the wall
        assert g.reflect_point(Hyperplane(1, 3, 1), (4, 6, 3)) == (5, 6, 2)
        assert g.reflect_point(Hyperplane(1, 3, 1), (4, 7, 2)) == (4, 7, 2)


class TestAffineElement:
    @given(st.permutations(range(3)), st.tuples(*[st.integers(-5, 5)] * 3),
           st.permutations(range(3)), st.tuples(*[st.integers(-5, 5)] * 3),
           st.tuples(*[st.integers(-9, 9)] * 3))
    def test_compose_and_inverse(self, p1, t1, p2, t2, x):
        u = AffineElement(tuple(p1), t1)
        v = AffineElement(tuple(p2), t2)
        assert u.compose(v).apply(x) == u.apply(v.apply(x))
        assert u.inverse().apply(u.apply(x)) == x
        ident = AffineElement.identity(3)
        assert ident.apply(x) == x

    def test_reflection_matches_reflect_point(self):
        g = geometry_for(P_INTRO)
        h = Hyperplane(1, 3, 1)
        s = reflection_element(3, 8, h)
        for p in [(5, 6, 2), (0, 0, 0), (4, 9, 0)]:
            assert s.shifted(p, g.rho) == g.reflect_point(h, p)


class TestAlcoves:
    def test_floors_and_length(self):
        g = geometry_for(P_INTRO)
        assert g.floors_of((4, 6, 3)) == g.fund_floors
        assert g.length(g.alcove_of((4, 6, 3))) == 0
        assert g.length(g.alcove_of((5, 6, 2))) == 1
        assert g.length(g.alcove_of((4, 9, 0))) == 3

    def test_rank1_alcoves(self):
        g = geometry_for(P_RANK1)
        assert g.floors_of((5, 6)) == g.fund_floors
        assert g.floors_of((4, 7)) == (-1,)
        assert g.floors_of((0, 11)) == (-3,)

    def test_singular_has_no_alcove(self):
        with pytest.raises(SingularPoint):
            geometry_for(P_INTRO).alcove_of((4, 7, 2))

    def test_elem_carries_fundamental_onto_alcove(self):
        g = geometry_for(P_INTRO)
        for p in [(5, 6, 2), (4, 9, 0), (13, 0, 0), (2, 0, 11)]:
            key = g.alcove_of(p)
            image = key.elem.shifted((0, 0, 0), g.rho)
            # the origin's image lies in the same alcove (it may be singular
            # only if the origin were, which it is not)
            assert g.floors_of(image) == key.floors


class TestGalleries:
    def test_minimal_gallery_shape(self):
        g = geometry_for(P_INTRO)
        for p in [(4, 6, 3), (5, 6, 2), (4, 9, 0), (13, 0, 0), (2, 0, 11)]:
            target = g.alcove_of(p)
            gallery = g.minimal_gallery(target)
            assert len(gallery) == g.length(target)
            cur = g.fundamental
            for idx, (alcove, wall) in enumerate(gallery):
                assert alcove == cur
                assert g.length(alcove) == idx
                cur = g.star(cur, (cur, wall))
            assert cur == target

    def test_star_is_involution_on_pairs(self):
        g = geometry_for(P_RANK1)
        target = g.alcove_of((0, 11))
        gallery = g.minimal_gallery(target)
        support = [g.alcove_of(p) for p in [(5, 6), (4, 7), (8, 3), (0, 11)]]
        for crossing in gallery:
            for b in support:
                image = g.star(b, crossing)
                assert g.star(image, crossing) == b
                assert abs(g.length(image) - g.length(b)) == 1

    def test_star_rejects_non_bounding_wall(self):
        g = geometry_for(P_RANK1)
        fund = g.fundamental
        # the wall at level 2 does not bound the fundamental alcove
        with pytest.raises(NotAGalleryCrossing):
            g.star(fund, (fund, Hyperplane(1, 2, 2)))

    def test_separating_count_against_reflection_oracle(self):
        # oracle: breadth-first search through single wall crossings
        g = geometry_for(P_RANK1)
        pts = [(5, 6), (4, 7), (8, 3), (1, 10), (9, 2), (0, 11)]
        keys = [g.alcove_of(p) for p in pts]
        for a in keys:
            dist = _bfs_distances(g, a, keys)
            for b in keys:
                assert g.separating_count(a, b) == dist[b.floors]


def _bfs_distances(geom, start, interesting):
    """Walk the adjacency graph of alcoves by crossing one bounding wall
    at a time; distances are numbers of wall crossings."""
    from collections import deque

    want = {k.floors for k in interesting}
    dist = {start.floors: 0}
    queue = deque([start])
    while queue and not want <= set(dist):
        cur = queue.popleft()
        for r, (i, j) in enumerate(geom.roots):
            for m in (cur.floors[r], cur.floors[r] + 1):
                try:
                    nxt = geom.star(cur, (cur, Hyperplane(i + 1, j + 1, m)))
                except NotAGalleryCrossing:
                    continue
                if nxt.floors not in dist:
                    dist[nxt.floors] = dist[cur.floors] + 1
                    queue.append(nxt)
    return dist


class TestOrbits:
    def test_orbit_contains_reflection_closure(self):
        # oracle: close the point set under single reflections, staying
        # inside the nonnegative region through bounded detours
        g = geometry_for(P_INTRO)
        orbit = set(g.orbit_points((4, 6, 3), 13))
        closure = _reflection_orbit_oracle(g, (4, 6, 3), 13)
        assert orbit == closure

    def test_orbit_rank1(self):
        g = geometry_for(P_RANK1)
        assert set(g.orbit_points((0, 11), 11)) == {
            (5, 6), (4, 7), (8, 3), (1, 10), (9, 2), (0, 11),
        }

    def test_compositions_count(self):
        assert len(list(compositions(5, 2))) == 6
        assert len(list(compositions(4, 3))) == 15


def _reflection_orbit_oracle(geom, p, n):
    """All points with nonnegative coordinates reachable from p by single
    reflections, allowing intermediate points with slightly negative
    coordinates so pruning cannot disconnect the orbit."""
    seen = {p}
    work = [p]
    slack = 2 * geom.e
    while work:
        cur = work.pop()
        for (i, j) in geom.roots:
            v = geom.value(cur, (i, j))
            for m in range(-4, 5):
                q = geom.reflect_point(
                    Hyperplane(i + 1, j + 1, m), cur
                )
                if q != cur and q not in seen and all(c >= -slack for c in q):
                    seen.add(q)
                    work.append(q)
    return {q for q in seen if all(c >= 0 for c in q)}

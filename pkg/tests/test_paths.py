"""Path words, the degree statistic, closures and alcove series."""

import pytest

from quivertl.geometry import Hyperplane, geometry_for
from quivertl.params import Params
from quivertl.paths import (
    ClosureBudgetExceeded,
    NotAGallery,
    NotOnHyperplane,
    PathWord,
    alcove_series,
    distinguished_path,
    graded_path_count,
    is_admissible,
    path_degree,
    paths_between,
    reflect_tail,
    reflection_closure,
    step_degree,
)

P_INTRO = Params(3, 8, (0, 4, 6))
P_RANK1 = Params(2, 4, (0, 2))


class TestPathWord:
    def test_prefix_points(self):
        w = PathWord(3, (1, 2, 3, 1))
        assert w.points == (
            (0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1),
        )
        assert w.endpoint() == (2, 1, 1)

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            PathWord(2, (1, 3))


class TestDistinguishedPath:
    def test_sorted_loading_words(self):
        assert distinguished_path(P_INTRO, (5, 6, 2)).steps == (
            1, 2, 3, 1, 2, 3, 1, 2, 1, 2, 1, 2, 2,
        )
        assert distinguished_path(P_INTRO, (4, 9, 0)).steps == (
            1, 2, 1, 2, 1, 2, 1, 2, 2, 2, 2, 2, 2,
        )
        assert distinguished_path(P_RANK1, (0, 11)).steps == (2,) * 11

    def test_empty(self):
        assert distinguished_path(P_RANK1, (0, 0)).steps == ()


class TestDegrees:
    def test_distinguished_paths_have_degree_zero(self):
        for mu in [(5, 6, 2), (4, 9, 0), (13, 0, 0)]:
            assert path_degree(P_INTRO, distinguished_path(P_INTRO, mu)) == 0

    def test_reflected_path_degree_one(self):
        # the tail reflection of the (5,6,2) path at its only wall contact
        # ends at (4,6,3) with degree 1
        w = distinguished_path(P_INTRO, (5, 6, 2))
        refl = reflect_tail(P_INTRO, w, 10, Hyperplane(1, 3, 1))
        assert refl.steps == (1, 2, 3, 1, 2, 3, 1, 2, 1, 2, 3, 2, 2)
        assert refl.endpoint() == (4, 6, 3)
        assert path_degree(P_INTRO, refl) == 1
        # the +1 arises at the step off the wall
        assert step_degree(P_INTRO, refl, 11) == 1

    def test_rank1_degree_steps(self):
        # the two paths to (4,7): degrees 2 and 0
        found = dict(
            (p.steps, d) for p, d in paths_between(P_RANK1, (4, 7), (0, 11))
        )
        assert sorted(found.values()) == [0, 2]

    def test_reflect_tail_requires_wall(self):
        w = distinguished_path(P_RANK1, (0, 11))
        with pytest.raises(NotOnHyperplane):
            reflect_tail(P_RANK1, w, 1, Hyperplane(1, 2, 0))


class TestClosure:
    def test_closure_sizes(self):
        g = geometry_for(P_INTRO)
        for mu in [(4, 6, 3), (5, 6, 2), (5, 8, 0), (4, 9, 0), (13, 0, 0)]:
            closure = reflection_closure(P_INTRO, distinguished_path(P_INTRO, mu))
            assert len(closure) == 2 ** g.length(g.alcove_of(mu))

    def test_closure_endpoints_stay_in_orbit(self):
        g = geometry_for(P_INTRO)
        orbit = set(g.orbit_points((4, 9, 0), 13))
        closure = reflection_closure(P_INTRO, distinguished_path(P_INTRO, (4, 9, 0)))
        assert {p.endpoint() for p in closure} <= orbit

    def test_budget(self):
        with pytest.raises(ClosureBudgetExceeded):
            reflection_closure(
                P_INTRO, distinguished_path(P_INTRO, (4, 9, 0)), budget=4
            )

    def test_paths_between_sorted_lexicographically(self):
        found = [p.steps for p, _ in paths_between(P_INTRO, (4, 6, 3), (4, 9, 0))]
        assert found == sorted(found)
        assert len(found) == 2

    def test_graded_path_count(self):
        gamma = (4, 9, 0)
        assert str(graded_path_count(P_INTRO, (4, 6, 3), gamma)) == "t + t^3"
        assert str(graded_path_count(P_INTRO, (5, 6, 2), gamma)) == "1 + t^2"
        assert str(graded_path_count(P_INTRO, (5, 8, 0), gamma)) == "t"
        assert str(graded_path_count(P_INTRO, gamma, gamma)) == "1"


class TestAdmissibility:
    def test_distinguished_paths_admissible(self):
        for mu in [(5, 6, 2), (4, 9, 0), (13, 0, 0)]:
            assert is_admissible(P_INTRO, distinguished_path(P_INTRO, mu))

    def test_nonzero_prefix_degree_fails(self):
        w = distinguished_path(P_INTRO, (5, 6, 2))
        refl = reflect_tail(P_INTRO, w, 10, Hyperplane(1, 3, 1))
        assert not is_admissible(P_INTRO, refl)


class TestAlcoveSeries:
    def test_intro_series(self):
        g = geometry_for(P_INTRO)
        series = alcove_series(P_INTRO, distinguished_path(P_INTRO, (4, 9, 0)))
        assert [g.length(a) for a, _ in series] == [0, 1, 2, 3]
        assert [h for _, h in series] == [
            Hyperplane(1, 3, 1), Hyperplane(2, 3, 1), Hyperplane(1, 2, 0), None,
        ]

    def test_series_skipping_an_alcove(self):
        # the (10,1,2) path leaves one wall and lands on an orthogonal one
        # in a single step; the gallery still inserts the skipped alcove
        g = geometry_for(P_INTRO)
        series = alcove_series(P_INTRO, distinguished_path(P_INTRO, (10, 1, 2)))
        assert [g.length(a) for a, _ in series] == [0, 1, 2]
        assert series[-1][0] == g.alcove_of((10, 1, 2))

    def test_zero_length(self):
        g = geometry_for(P_RANK1)
        series = alcove_series(P_RANK1, distinguished_path(P_RANK1, (5, 6)))
        assert series == [(g.fundamental, None)]

    def test_non_admissible_rejected(self):
        # crossing a wall and coming straight back has prefix degree 1
        from quivertl.paths import NotAdmissible

        word = PathWord(2, (2, 2, 1, 1))
        assert not is_admissible(P_RANK1, word)
        with pytest.raises(NotAdmissible):
            alcove_series(P_RANK1, word)

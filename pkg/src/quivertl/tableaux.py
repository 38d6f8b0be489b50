"""
One-column multipartition combinatorics: loadings, residues, semistandard
tableaux and their degrees.

A one-column multipartition with l components is a tuple of column
lengths.  The node in row r of component m sits at loading value
x = (m-1) + l*(r-1) and carries residue kappa_m + 1 - r mod e.  A
semistandard tableau of shape lambda and weight mu fills the nodes of
lambda with the loading values of mu, respecting residues and the column
growth conditions.  Reading the entries in increasing order gives the
component word, which is exactly an alcove path; this bijection matches
the tableau degree with the path degree statistic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .paths import PathWord


def node_loading(params, r, m):
    """Loading value of the node in row r (1-based) of component m (1-based)."""
    return (m - 1) + params.l * (r - 1)


def node_residue(params, r, m):
    return (params.kappa[m - 1] + 1 - r) % params.e


def loading(params, lam):
    """The loading of lam: (x, residue, component) triples sorted by x."""
    out = []
    for m in range(1, params.l + 1):
        for r in range(1, lam[m - 1] + 1):
            out.append((node_loading(params, r, m), node_residue(params, r, m), m))
    out.sort()
    return out


def residue_multiset(params, lam):
    return Counter(res for _, res, _ in loading(params, lam))


def dominance_leq(params, mu, lam):
    """Loading dominance mu <= lam: for every residue and every threshold,
    lam has at least as many nodes of that residue strictly below it.

    It suffices to test thresholds just above each occurring loading value.
    """
    lam_load = loading(params, lam)
    mu_load = loading(params, mu)
    thresholds = sorted({x + 1 for x, _, _ in lam_load + mu_load})
    for a in thresholds:
        lam_counts = Counter(res for x, res, _ in lam_load if x < a)
        mu_counts = Counter(res for x, res, _ in mu_load if x < a)
        for res, cnt in mu_counts.items():
            if lam_counts.get(res, 0) < cnt:
                return False
    return True


def addable_removable(params, lam, res):
    """Components with an addable / removable node of the given residue."""
    addable = []
    removable = []
    for m in range(1, params.l + 1):
        h = lam[m - 1]
        if (params.kappa[m - 1] - h) % params.e == res:
            addable.append(m)
        if h >= 1 and (params.kappa[m - 1] + 1 - h) % params.e == res:
            removable.append(m)
    return addable, removable


@dataclass(frozen=True)
class Tableau:
    """A filling of a one-column multipartition: ``columns[m-1]`` lists the
    entry values of component m from top to bottom.  Entries are loading
    values of the weight."""

    shape: tuple
    weight: tuple
    columns: tuple

    def entries_in_order(self):
        """(value, row, component) triples sorted by entry value."""
        out = []
        for m, col in enumerate(self.columns, start=1):
            for r, value in enumerate(col, start=1):
                out.append((value, r, m))
        out.sort()
        return out


def semistandard_tableaux(params, lam, mu):
    """All semistandard tableaux of shape lam and weight mu.

    The loading values of mu are placed in increasing order; a value may
    extend any component whose next empty node matches its residue.  The
    column conditions (first entry at least the component offset, each
    later entry at least the previous plus l) are strict inequalities on
    the infinitesimally perturbed loadings, which on the integer values
    reduce to these weak ones.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    entries = loading(params, mu)
    results = []
    columns = [[] for _ in range(params.l)]

    def place(idx):
        if idx == len(entries):
            results.append(
                Tableau(lam, mu, tuple(tuple(col) for col in columns))
            )
            return
        x, res, _ = entries[idx]
        for m in range(1, params.l + 1):
            col = columns[m - 1]
            h = len(col)
            if h >= lam[m - 1]:
                continue
            if node_residue(params, h + 1, m) != res:
                continue
            if h == 0:
                if x < m - 1:
                    continue
            elif x < col[-1] + params.g:
                continue
            col.append(x)
            place(idx + 1)
            col.pop()

    place(0)
    results.sort(key=lambda t: t.columns)
    return results


def tableau_degree(params, tab):
    """Degree of a semistandard tableau: entries are placed in increasing
    order, and each placement at node (r, m) with residue A adds the number
    of A-addable nodes strictly to its right minus the number of A-removable
    nodes strictly to its right, in the shape just after the placement."""
    heights = [0] * params.l
    total = 0
    for value, r, m in tab.entries_in_order():
        heights[m - 1] += 1
        res = node_residue(params, r, m)
        x_here = node_loading(params, r, m)
        addable, removable = addable_removable(params, tuple(heights), res)
        total += sum(1 for c in addable if node_loading(params, heights[c - 1] + 1, c) > x_here)
        total -= sum(1 for c in removable if node_loading(params, heights[c - 1], c) > x_here)
    return total


def component_word(params, tab):
    """The component word of a tableau, as a path."""
    return PathWord(params.l, tuple(m for _, _, m in tab.entries_in_order()))

# -*- coding: utf-8 -*-
# The ExtremalCliques library provides exact tools to study the minimum number
# of cliques in graphs of given order and minimum degree.
#
# Copyright (C) 2022 The QC-Devs Community
#
# This file is part of ExtremalCliques.
#
# ExtremalCliques is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# ExtremalCliques is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --

"""Testing for clique counting and the clique-degree calculus."""

from fractions import Fraction

from ExtremalCliques.cliques import (
    bad_5cliques,
    BadFiveClique,
    claim_constants,
    classify_bad_4cliques,
    clique_degree,
    CliqueCalculus,
    count_cliques,
    degree_record,
    eta,
    eta_tilde,
    is_heavy_free,
    iter_cliques,
    widetilde_D,
)
from ExtremalCliques.graph import complete_graph, turan_graph
from ExtremalCliques.oracle import naive_clique_counts
from ExtremalCliques.test.common import (
    BAD_QUAD,
    C5,
    K4,
    K5,
    K222,
    K444,
    PETERSEN,
    random_graph,
    random_min_degree_graphs,
    T4_8,
)
from ExtremalCliques.utils import derive_p, DomainError, GraphInputError
import networkx as nx
from numpy.testing import assert_equal, assert_raises


def test_count_cliques_named_graphs():
    """Testing clique counts of complete multipartite graphs."""
    assert_equal(count_cliques(K222, 4).counts, (6, 12, 8, 0))
    assert_equal(count_cliques(T4_8, 5).counts, (8, 24, 32, 16, 0))
    assert_equal(count_cliques(K444, 4).counts, (12, 48, 64, 0))
    assert_equal(count_cliques(K5, 5).counts, (5, 10, 10, 5, 1))
    assert_equal(count_cliques(PETERSEN, 3).counts, (10, 15, 0))
    assert_equal(count_cliques(K4, 1).counts, (4,))
    assert_raises(DomainError, count_cliques, K4, 0)


def test_clique_stats():
    """Testing access to the counts beyond the computed range."""
    stats = count_cliques(K222, 4)
    assert_equal(stats.k(3), 8)
    assert_equal(stats.k(7), 0)
    assert_equal(stats.clique_number, 3)
    assert_equal(stats.as_dict(), {1: 6, 2: 12, 3: 8, 4: 0})
    partial = count_cliques(K4, 2)
    assert_raises(DomainError, partial.k, 3)
    assert_raises(DomainError, partial.k, 0)
    assert_raises(DomainError, lambda: partial.clique_number)


def test_count_cliques_agrees_with_subset_enumeration():
    """Testing clique counts against subset enumeration and networkx."""
    for seed in range(12):
        graph = random_graph(9, 0.3 + 0.05 * seed, seed)
        counts = count_cliques(graph, 6).counts
        assert_equal(counts, naive_clique_counts(graph, 6))
        nx_graph = nx.Graph(graph.edges())
        nx_graph.add_nodes_from(range(graph.n))
        by_size = [0] * 6
        for clique in nx.enumerate_all_cliques(nx_graph):
            if len(clique) <= 6:
                by_size[len(clique) - 1] += 1
        assert_equal(counts, tuple(by_size))


def test_count_cliques_parallel():
    """Testing that worker processes give the serial counts."""
    graph = random_graph(14, 0.6, 3)
    assert_equal(count_cliques(graph, 6, n_jobs=2), count_cliques(graph, 6))


def test_handshake_identity():
    """Testing that the degrees of t-cliques sum to (t+1) k_(t+1)."""
    for seed in range(5):
        graph = random_graph(10, 0.6, seed)
        stats = count_cliques(graph, 6)
        for t in range(1, 5):
            total = sum(clique_degree(graph, clique) for clique in iter_cliques(graph, t))
            assert_equal(total, (t + 1) * stats.k(t + 1))


def test_iter_cliques():
    """Testing clique enumeration order."""
    assert_equal(list(iter_cliques(K4, 3)), [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert_equal(list(iter_cliques(C5, 2)), [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)])
    assert_equal(list(iter_cliques(C5, 3)), [])
    assert_raises(DomainError, lambda: list(iter_cliques(C5, 0)))


def test_clique_degree():
    """Testing common-neighbourhood sizes."""
    assert_equal(clique_degree(K222, [0, 2]), 2)
    assert_equal(clique_degree(K222, [0, 2, 4]), 0)
    assert_equal(clique_degree(K4, [3]), 3)
    assert_raises(GraphInputError, clique_degree, C5, [0, 2])
    assert_raises(GraphInputError, clique_degree, C5, [])


def test_degree_records_turan():
    """Testing D, D_minus and D_plus on T_3(6) at beta = 1/3."""
    calculus = CliqueCalculus(K222, Fraction(1, 3))
    assert_equal(calculus.p, 2)
    assert calculus.satisfies_min_degree()
    vertex = calculus.record([0])
    assert_equal(vertex.D, Fraction(2, 3))
    assert_equal(calculus.threshold(1), Fraction(2, 3))
    assert not vertex.heavy
    edge = degree_record(K222, (0, 2), Fraction(1, 3))
    assert_equal((edge.d, edge.D, edge.D_minus, edge.D_plus),
                 (2, Fraction(1, 3), Fraction(1, 3), 0))
    assert_equal(edge.size, 2)
    triangle = calculus.record((0, 2, 4))
    assert_equal((triangle.D, triangle.D_minus, triangle.D_plus), (0, 0, 0))
    # records exist only up to p + 1
    assert_raises(DomainError, CliqueCalculus(K4, Fraction(1, 3)).record, (0, 1, 2, 3))


def test_heavy_cliques():
    """Testing the split of D at the heavy threshold."""
    calculus = CliqueCalculus(K5, Fraction(1, 4))
    assert_equal(calculus.p, 3)
    # D(S) = 1/5 against the threshold 0 for 4-cliques
    assert calculus.is_heavy((0, 1, 2, 3))
    assert_equal(calculus.D_plus((0, 1, 2, 3)), Fraction(1, 5))
    assert_equal(calculus.D_minus((0, 1, 2, 3)), 0)
    # D(e) = 3/5 against 2 beta = 1/2
    assert_equal(calculus.D_plus((0, 1)), Fraction(1, 10))
    assert_equal(calculus.D_minus((0, 1)), Fraction(1, 2))


def test_min_degree_requirement():
    """Testing the minimum degree hypothesis."""
    calculus = CliqueCalculus(C5, Fraction(1, 3))
    assert not calculus.satisfies_min_degree()
    assert_raises(DomainError, calculus.require_min_degree)
    assert_raises(DomainError, is_heavy_free, C5, Fraction(1, 3))
    assert CliqueCalculus(C5, Fraction(3, 5)).satisfies_min_degree()


def test_is_heavy_free_matches_clique_number():
    """Testing that heavy-freeness is K_(p+2)-freeness under the degree hypothesis."""
    assert is_heavy_free(T4_8, Fraction(1, 4))
    assert is_heavy_free(K444, Fraction(1, 3))
    assert not is_heavy_free(K5, Fraction(1, 4))
    for beta in (Fraction(1, 3), Fraction(2, 5), Fraction(1, 4), Fraction(2, 7)):
        p = derive_p(beta)
        for graph in random_min_degree_graphs(12, beta, 4, seed=7):
            expected = count_cliques(graph, p + 2).k(p + 2) == 0
            assert_equal(is_heavy_free(graph, beta), expected)


def test_tilde_D():
    """Testing tilde D on complete graphs and T_4(8)."""
    beta = Fraction(1, 4)
    # on K4 every edge and triangle sits exactly at its threshold
    assert_equal(widetilde_D(K4, (0, 1, 2), beta), 0)
    assert_equal(widetilde_D(K4, (0, 1, 2, 3), beta), 0)
    calculus = CliqueCalculus(T4_8, beta)
    for clique in iter_cliques(T4_8, 3):
        assert_equal(calculus.tilde_D(clique), 0)
    assert_raises(DomainError, calculus.tilde_D, (0, 2))
    assert_raises(DomainError, CliqueCalculus(K4, Fraction(1, 3)).tilde_D, (0, 1, 2, 3))


def test_tilde_D_nonnegative_random():
    """Testing tilde D >= 0 on random graphs of large minimum degree."""
    for beta in (Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)):
        for graph in random_min_degree_graphs(11, beta, 3, seed=1):
            calculus = CliqueCalculus(graph, beta)
            for t in range(2, calculus.p + 1):
                for clique in iter_cliques(graph, t + 1):
                    assert calculus.tilde_D(clique) >= 0


def test_eta():
    """Testing eta and eta tilde on complete graphs."""
    beta = Fraction(1, 4)
    assert_equal(eta(K4, (0, 1, 2, 3), beta), 0)
    # D(S) = 0, so eta tilde is undefined
    assert_raises(DomainError, eta_tilde, K4, (0, 1, 2, 3), beta)
    calculus = CliqueCalculus(K5, beta)
    value = calculus.eta((0, 1, 2, 3))
    assert_equal(calculus.eta_tilde((0, 1, 2, 3)), value / Fraction(1, 5))
    assert_raises(DomainError, eta, K222, (0, 2, 4), Fraction(1, 3))
    assert_raises(DomainError, calculus.eta, (0, 1, 2))


def test_claim_constants():
    """Testing the bad 4-clique constants."""
    constants = claim_constants(Fraction(1, 4))
    assert_equal(constants.epsilon_denominator, Fraction(41, 8))
    assert_equal(constants.epsilon, 0)
    assert_equal(constants.Delta, Fraction(1, 4))
    assert_equal(constants.gamma, 0)
    constants = claim_constants(Fraction(2, 7))
    assert_equal(constants.epsilon_denominator, Fraction(152, 49))
    assert_equal(constants.epsilon, Fraction(7, 152))
    assert constants.denominator_positive
    assert_raises(DomainError, claim_constants, Fraction(1, 5))


def test_bad_cliques_absent_on_turan():
    """Testing that T_4(8) has no bad 4-cliques or 5-cliques."""
    assert_equal(classify_bad_4cliques(T4_8, Fraction(1, 4)), [])
    assert_equal(bad_5cliques(T4_8, Fraction(1, 4)), [])
    assert_raises(DomainError, classify_bad_4cliques, K444, Fraction(1, 3))


def test_bad_cliques_absent_on_complete_graph():
    """Testing that eta vanishes on every 4-clique of K6 at beta = 1/4."""
    beta = Fraction(1, 4)
    graph = complete_graph(6)
    calculus = CliqueCalculus(graph, beta)
    # every triangle is heavy but the eta coefficient vanishes at beta = 1/(p+1)
    assert calculus.is_heavy((0, 1, 2))
    for quad in iter_cliques(graph, 4):
        assert_equal(calculus.eta(quad), 0)
    assert_equal(classify_bad_4cliques(graph, beta, calculus), [])
    assert_equal(bad_5cliques(graph, beta, calculus), [])


def test_bad_four_clique_structure():
    """Testing the heavy structure of a bad 4-clique with one heavy edge."""
    beta = Fraction(3, 10)
    calculus = CliqueCalculus(BAD_QUAD, beta)
    assert calculus.satisfies_min_degree()
    quad = (0, 1, 2, 3)
    assert_equal(calculus.D((0, 1)), Fraction(13, 20))
    assert_equal(calculus.D_plus((0, 1, 2)), Fraction(1, 20))
    assert_equal(calculus.D((0, 2, 3)), Fraction(1, 10))
    assert_equal(calculus.tilde_D(quad), 0)
    assert_equal(calculus.eta(quad), Fraction(-4, 455))
    assert_equal(calculus.eta_tilde(quad), Fraction(-16, 91))

    bad = {item.clique: item for item in classify_bad_4cliques(BAD_QUAD, beta, calculus)}
    item = bad[quad]
    assert_equal(item.eta, Fraction(-4, 455))
    assert_equal(item.D, Fraction(1, 20))
    assert_equal(item.heavy_edges, ((0, 1),))
    assert_equal(item.heavy_triangles, ((0, 1, 2), (0, 1, 3)))
    assert item.claim_i and item.claim_ii and item.claim_iii
    assert item.claims_hold
    # the other 4-cliques of its only 5-clique are not bad
    for other in [(0, 1, 2, 19), (0, 1, 3, 19), (0, 2, 3, 19), (1, 2, 3, 19)]:
        assert other not in bad
    assert_equal(calculus.eta((0, 2, 3, 19)), Fraction(17, 91))


def test_bad_five_clique():
    """Testing the 5-clique around a bad 4-clique."""
    beta = Fraction(3, 10)
    fives = {item.clique: item for item in bad_5cliques(BAD_QUAD, beta)}
    item = fives[(0, 1, 2, 3, 19)]
    assert_equal((item.b, item.h, item.share_vertex), (1, 5, True))
    assert item.bound_holds
    assert item.positive


def test_bad_five_clique_bound():
    """Testing the bad-count bounds at their edges."""
    clique = (0, 1, 2, 3, 4)
    # b <= 2h/(h - 1) for h >= 2
    assert BadFiveClique(clique, 4, 2, False, Fraction(1)).bound_holds
    assert not BadFiveClique(clique, 5, 2, False, Fraction(1)).bound_holds
    assert BadFiveClique(clique, 3, 3, False, Fraction(1)).bound_holds
    assert not BadFiveClique(clique, 4, 3, False, Fraction(1)).bound_holds
    assert BadFiveClique(clique, 2, 5, True, Fraction(1)).bound_holds
    assert not BadFiveClique(clique, 3, 5, True, Fraction(1)).bound_holds
    # no constraint from h below 2
    assert BadFiveClique(clique, 5, 1, False, Fraction(1)).bound_holds
    assert BadFiveClique(clique, 5, 0, False, Fraction(1)).bound_holds
    # b <= 3 when two heavy edges share a vertex
    assert BadFiveClique(clique, 3, 3, True, Fraction(1)).bound_holds
    assert not BadFiveClique(clique, 4, 2, True, Fraction(1)).bound_holds
    assert BadFiveClique(clique, 1, 2, False, Fraction(1, 10)).positive
    assert not BadFiveClique(clique, 1, 2, False, Fraction(0)).positive
    assert not BadFiveClique(clique, 1, 2, False, Fraction(-1, 10)).positive


def test_calculus_counts():
    """Testing cached counts and k beyond the clique number."""
    calculus = CliqueCalculus(turan_graph(12, 4), Fraction(1, 4))
    assert_equal(calculus.k(4), 81)
    assert_equal(calculus.k(5), 0)
    assert_equal(calculus.k(9), 0)

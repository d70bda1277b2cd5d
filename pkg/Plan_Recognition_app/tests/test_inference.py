import networkx as nx
import numpy as np
from django.test import SimpleTestCase, override_settings

from Plan_Recognition_app.exceptions import (InconsistentEvidenceError, ScopeError,
                                             StateSpaceTooLargeError)
from Plan_Recognition_app.inference import (Posterior, argmax_posterior, enumerate_posterior,
                                            evidence_likelihood, joint_posterior, min_fill_order,
                                            posterior)

from Plan_Recognition_app.traffic import build_traffic_network, shipped_params

from .factories import chain_network, random_evidence, random_network, two_variable_network


def independent_fill(graph, variable_id):
    neighbours = list(graph.neighbors(variable_id))
    return sum(
        1 for i, a in enumerate(neighbours) for b in neighbours[i + 1:] if not graph.has_edge(a, b)
    )


class MinFillOrderTests(SimpleTestCase):
    def test_chain_eliminates_the_end_first(self):
        self.assertEqual(min_fill_order(chain_network(('A', 'B', 'C')), {'C'}), ['A', 'B'])

    def test_keep_everything(self):
        net = chain_network(('A', 'B', 'C'))
        self.assertEqual(min_fill_order(net, set(net.variable_ids)), [])

    def test_each_step_has_minimal_fill(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            net = random_network(rng, 10, max_card=2)
            keep = {'v00'}
            order = min_fill_order(net, keep)
            graph = nx.moral_graph(net.graph())
            for chosen in order:
                candidates = [v for v in graph.nodes if v not in keep]
                fills = {v: independent_fill(graph, v) for v in candidates}
                self.assertEqual(fills[chosen], min(fills.values()))
                neighbours = list(graph.neighbors(chosen))
                graph.add_edges_from(
                    (a, b) for i, a in enumerate(neighbours) for b in neighbours[i + 1:]
                )
                graph.remove_node(chosen)


class PosteriorTests(SimpleTestCase):
    def test_hand_computed_posterior(self):
        net = two_variable_network()
        expected = [0.15 / 0.71, 0.56 / 0.71]
        for query in (posterior, enumerate_posterior):
            result = query(net, {'B': 'b1'}, 'A')
            np.testing.assert_allclose(result.distribution, expected, atol=1e-12)
            self.assertAlmostEqual(result.evidence_mass, 0.71, delta=1e-12)
        self.assertAlmostEqual(posterior(net, {'B': 'b1'}, 'A').probability('a0'), 0.2113, delta=1e-4)

    def test_empty_evidence_gives_prior_marginal(self):
        net = two_variable_network()
        np.testing.assert_allclose(enumerate_posterior(net, {}, 'A').distribution, [0.3, 0.7])
        np.testing.assert_allclose(posterior(net, {}, 'B').distribution, [0.3 * 0.5 + 0.7 * 0.2, 0.3 * 0.5 + 0.7 * 0.8])

    def test_target_in_evidence_is_a_point_mass(self):
        net = two_variable_network()
        result = posterior(net, {'A': 'a1', 'B': 'b0'}, 'A')
        self.assertEqual(result.distribution, (0.0, 1.0))
        self.assertTrue(result.consistent)

    def test_inconsistent_evidence_is_flagged(self):
        net = two_variable_network()
        net.set_cpt('B', ('A',), [[1.0, 0.0], [1.0, 0.0]])
        with self.assertLogs('Plan_Recognition_app.inference', level='WARNING'):
            result = posterior(net, {'B': 'b1'}, 'A')
        self.assertFalse(result.consistent)
        self.assertEqual(evidence_likelihood(net, {'B': 'b1'}), 0.0)
        with self.assertRaises(InconsistentEvidenceError):
            argmax_posterior(result)

    def test_explicit_orders_agree(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            net = random_network(rng, 8)
            target = net.variable_ids[int(rng.integers(0, len(net)))]
            evidence = random_evidence(rng, net, max_size=3)
            reference = posterior(net, evidence, target)
            if not reference.consistent:
                continue
            free = [v for v in net.variable_ids if v != target and v not in evidence]
            for _ in range(3):
                order = [str(v) for v in rng.permutation(free)]
                result = posterior(net, evidence, target, elimination_order=order)
                np.testing.assert_allclose(result.distribution, reference.distribution, atol=1e-9)

    def test_bad_explicit_order(self):
        with self.assertRaises(ScopeError):
            posterior(chain_network(('A', 'B', 'C')), {}, 'C', elimination_order=['A'])

    def test_evidence_likelihood_matches_oracle(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            net = random_network(rng, 7)
            evidence = random_evidence(rng, net, max_size=4)
            likelihood = evidence_likelihood(net, evidence)
            self.assertGreaterEqual(likelihood, 0.0)
            self.assertLessEqual(likelihood, 1.0 + 1e-12)
            oracle = enumerate_posterior(net, evidence, net.variable_ids[0])
            self.assertAlmostEqual(likelihood, oracle.evidence_mass, delta=1e-9)

    def test_conditioning_on_the_target_label(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            net = random_network(rng, 6)
            evidence = random_evidence(rng, net, max_size=2)
            target = next(v for v in net.variable_ids if v not in evidence)
            label = net.variable(target).labels[0]
            result = posterior(net, {**evidence, target: label}, target)
            if result.consistent:
                self.assertEqual(result.probability(label), 1.0)

    @override_settings(PLANREC={'ENUMERATION_BLOCK': 8})
    def test_oracle_blocks_do_not_change_the_answer(self):
        rng = np.random.default_rng(3)
        net = random_network(rng, 9)
        target = net.variable_ids[-1]
        chunked = enumerate_posterior(net, {}, target)
        np.testing.assert_allclose(chunked.distribution, posterior(net, {}, target).distribution, atol=1e-12)

    def test_oracle_cap(self):
        net = chain_network(('A', 'B', 'C', 'D'))
        with self.assertRaises(StateSpaceTooLargeError):
            enumerate_posterior(net, {}, 'D', cap=8)
        enumerate_posterior(net, {'A': '0'}, 'D', cap=8)


class JointPosteriorTests(SimpleTestCase):
    def test_marginals_match_single_queries(self):
        net = chain_network(('A', 'B', 'C'))
        joint = joint_posterior(net, {'C': '1'}, ('B', 'A'))
        self.assertEqual(joint.scope, ('B', 'A'))
        self.assertAlmostEqual(joint.total(), 1.0, delta=1e-12)
        np.testing.assert_allclose(joint.values.sum(axis=1), posterior(net, {'C': '1'}, 'B').distribution)
        np.testing.assert_allclose(joint.values.sum(axis=0), posterior(net, {'C': '1'}, 'A').distribution)

    def test_at_most_three_targets(self):
        net = chain_network(('A', 'B', 'C', 'D'))
        with self.assertRaises(ScopeError):
            joint_posterior(net, {}, ('A', 'B', 'C', 'D'))
        with self.assertRaises(ScopeError):
            joint_posterior(net, {'A': '0'}, ('A', 'B'))


class ArgmaxTests(SimpleTestCase):
    def test_largest_label(self):
        p = Posterior('gen maneuver', ('right1', 'pass', 'exit'), (0.64, 0.35, 0.01), 1.0)
        self.assertEqual(argmax_posterior(p), 'right1')

    def test_ties_go_to_the_first_label(self):
        p = Posterior('A', ('x', 'y', 'z'), (1 / 3, 1 / 3, 1 / 3), 1.0)
        self.assertEqual(argmax_posterior(p), 'x')

    def test_point_mass(self):
        p = Posterior('A', ('x', 'y'), (0.0, 1.0), 1.0)
        self.assertEqual(argmax_posterior(p), 'y')

    def test_float_noise_does_not_break_ties(self):
        p = Posterior('A', ('x', 'y', 'z'), (0.1, 0.3, 0.30000000000000004), 1.0)
        self.assertEqual(argmax_posterior(p), 'y')

    def test_computed_lane_prior_ties_go_to_the_first_lane(self):
        net = build_traffic_network(shipped_params())
        p = posterior(net, {}, 'x position t0')
        np.testing.assert_allclose(p.distribution, (0.1, 0.3, 0.3, 0.3), atol=1e-12)
        self.assertEqual(argmax_posterior(p), 'right')

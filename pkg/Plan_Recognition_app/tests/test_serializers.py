import json

from django.test import SimpleTestCase
from rest_framework import serializers

from Plan_Recognition_app.network import Role, validate_network
from Plan_Recognition_app.scenarios import Scenario, dump_scenario, scenario_from_dict
from Plan_Recognition_app.serializers import network_from_document, network_to_document
from Plan_Recognition_app.traffic import TrafficParams, build_traffic_network, paper_scenarios
from Plan_Recognition_app.utils import dump_json_document

from .factories import two_variable_network


def small_document(**overrides):
    document = {
        'variables': [
            {'id': 'A', 'labels': ['a0', 'a1'], 'role': 'Context', 'time': 't0', 'observable': True},
            {'id': 'B', 'labels': ['b0', 'b1'], 'role': 'Effect', 'time': 't1', 'observable': True},
        ],
        'cpts': [
            {'child': 'A', 'parents': [], 'rows': [[0.3, 0.7]]},
            {'child': 'B', 'parents': ['A'], 'rows': [[0.5, 0.5], [0.2, 0.8]]},
        ],
    }
    document.update(overrides)
    return document


class NetworkDocumentTests(SimpleTestCase):
    def test_traffic_round_trip_is_byte_exact(self):
        text = dump_json_document(network_to_document(build_traffic_network(TrafficParams())))
        document = json.loads(text)
        self.assertEqual(len(document['variables']), 30)
        self.assertEqual(len(document['cpts']), 30)
        again = dump_json_document(network_to_document(network_from_document(document)))
        self.assertEqual(again, text)

    def test_loaded_network_keeps_tags_and_tables(self):
        net = network_from_document(small_document(), name='small')
        self.assertEqual(net.name, 'small')
        self.assertEqual(net.variable('A').role, Role.CONTEXT)
        self.assertEqual(net.parents('B'), ('A',))
        self.assertEqual(net.cpt('B').row_lists, [[0.5, 0.5], [0.2, 0.8]])
        self.assertEqual(validate_network(net), [])

    def test_untagged_variables_export_null(self):
        document = network_to_document(two_variable_network())
        self.assertIsNone(document['variables'][0]['role'])
        self.assertIsNone(document['variables'][0]['time'])

    def test_malformed_documents_are_rejected(self):
        bad_documents = [
            {'cpts': []},
            small_document(variables=[{'id': 'A', 'labels': ['only']}]),
            small_document(variables=[{'id': 'A', 'labels': ['x', 'x']}]),
            small_document(variables=[{'id': 'A', 'labels': ['0', '1']}, {'id': 'A', 'labels': ['0', '1']}]),
            small_document(cpts=[{'child': 'A', 'parents': [], 'rows': [[0.5, 0.5], [1.0]]}]),
            small_document(cpts=[{'child': 'A', 'parents': [], 'rows': [[0.3, 0.7]]}] * 2),
            small_document(variables=[{'id': 'A', 'labels': ['0', '1'], 'role': 'Bystander'}]),
        ]
        for document in bad_documents:
            with self.subTest(document=document):
                with self.assertRaises(serializers.ValidationError):
                    network_from_document(document)

    def test_structural_problems_load_and_are_reported(self):
        cyclic = small_document(cpts=[
            {'child': 'A', 'parents': ['B'], 'rows': [[0.5, 0.5], [0.5, 0.5]]},
            {'child': 'B', 'parents': ['A'], 'rows': [[0.5, 0.5], [0.2, 0.8]]},
        ])
        violations = validate_network(network_from_document(cyclic))
        self.assertEqual([v.rule for v in violations], ['cycle'])
        self.assertIn(violations[0].edge, {('A', 'B'), ('B', 'A')})

        missing = small_document(cpts=[{'child': 'A', 'parents': [], 'rows': [[0.3, 0.7]]}])
        violations = validate_network(network_from_document(missing))
        self.assertEqual([(v.rule, v.variable) for v in violations], [('missing-cpt', 'B')])

        dangling = small_document(cpts=small_document()['cpts'] + [
            {'child': 'C', 'parents': [], 'rows': [[1.0]]},
        ])
        violations = validate_network(network_from_document(dangling))
        self.assertEqual([(v.rule, v.variable) for v in violations], [('unknown-child', 'C')])


class ScenarioSerializerTests(SimpleTestCase):
    def test_round_trip(self):
        scenario = paper_scenarios()[1]
        self.assertEqual(scenario_from_dict(scenario.as_dict()), scenario)
        self.assertTrue(dump_scenario(scenario).endswith('\n'))

    def test_defaults(self):
        scenario = scenario_from_dict({'name': 'empty'})
        self.assertEqual(scenario, Scenario('empty'))

    def test_name_is_required(self):
        with self.assertRaises(serializers.ValidationError):
            scenario_from_dict({'evidence': {'x position t0': 'middle'}})

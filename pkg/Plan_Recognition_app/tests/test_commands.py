import json
import tempfile
from io import StringIO
from pathlib import Path

from django.apps import apps
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from Plan_Recognition_app.management.base import (EXIT_ACCEPTANCE, EXIT_INCONSISTENT, EXIT_USAGE,
                                                  EXIT_VALIDATION)
from Plan_Recognition_app.traffic import lane_transition

SCENARIOS = Path(__file__).resolve().parent.parent / 'data' / 'scenarios'


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.tmp = Path(tmp.name)

    def write_file(self, name, content):
        path = self.tmp / name
        path.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(path)

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO(), **options)
        return out.getvalue()

    def assertExitStatus(self, status, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            self.run_command(*args, **options)
        self.assertEqual(ctx.exception.returncode, status)
        return ctx.exception


class QueryCommandTests(CommandTestCase):
    def test_scenario_a(self):
        out = self.run_command('query', scenario=str(SCENARIOS / 'scenario_a.json'))
        self.assertIn('gen maneuver', out)
        self.assertIn('x position t2', out)
        self.assertIn('argmax: right1', out)
        self.assertIn('argmax: right', out)

    def test_prior_of_the_lane(self):
        out = self.run_command('query', target=['x position t0'])
        self.assertIn('0.1000', out)
        self.assertIn('0.3000', out)
        self.assertIn('argmax: right', out)

    def test_json_matches_the_table(self):
        scenario = str(SCENARIOS / 'scenario_b.json')
        table = self.run_command('query', scenario=scenario)
        document = json.loads(self.run_command('query', scenario=scenario, json=True))
        self.assertEqual(document['scenario'], 'B')
        gen = document['posteriors']['gen maneuver']
        self.assertEqual(gen['argmax'], 'pass')
        self.assertAlmostEqual(sum(gen['distribution'].values()), 1.0, delta=1e-9)
        for label, probability in gen['distribution'].items():
            self.assertIn(f"{probability:.4f}", table)

    def test_joint_table(self):
        document = json.loads(self.run_command(
            'query', scenario=str(SCENARIOS / 'scenario_a.json'), target=['gen maneuver', 'spec pass'],
            joint=True, json=True,
        ))
        self.assertEqual(document['joint']['targets'], ['gen maneuver', 'spec pass'])
        self.assertEqual(len(document['joint']['table']), 32)
        self.assertAlmostEqual(sum(cell['probability'] for cell in document['joint']['table']), 1.0, delta=1e-9)

    def test_no_target(self):
        self.assertExitStatus(EXIT_USAGE, 'query')

    def test_unobservable_evidence(self):
        scenario = self.write_file('act.json', {'name': 'act', 'evidence': {'lat act m0': 'right'},
                                                'targets': ['gen maneuver']})
        exc = self.assertExitStatus(EXIT_VALIDATION, 'query', scenario=scenario)
        self.assertIn('lat act m0', str(exc))

    def test_inconsistent_evidence(self):
        scenario = self.write_file('jump.json', {
            'name': 'jump', 'evidence': {'x position t0': 'off', 'x position t1': 'left'},
            'targets': ['gen maneuver'],
        })
        self.assertExitStatus(EXIT_INCONSISTENT, 'query', scenario=scenario)

    def test_malformed_scenario(self):
        scenario = self.write_file('broken.json', '{"name": "broken",')
        exc = self.assertExitStatus(EXIT_USAGE, 'query', scenario=scenario)
        self.assertIn('line', str(exc))


class PaperCommandTests(CommandTestCase):
    def test_reproduction_passes(self):
        out = self.run_command('paper')
        self.assertIn('0.64', out)
        self.assertIn('0.35', out)
        self.assertNotIn('FAIL', out)
        self.assertIn('All qualitative checks passed.', out)

    def test_json_report(self):
        document = json.loads(self.run_command('paper', json=True))
        self.assertTrue(document['passed'])
        self.assertEqual(len(document['reference']), 10)
        self.assertTrue(all(row['within_band'] for row in document['reference']))

    def test_structural_checks_do_not_depend_on_calibration(self):
        params = self.write_file('params.json', {'pass_left_bias': 0.0})
        out = StringIO()
        try:
            call_command('paper', params=params, json=True, stdout=out, stderr=StringIO())
        except CommandError as exc:
            self.assertEqual(exc.returncode, EXIT_ACCEPTANCE)
        document = json.loads(out.getvalue())
        structural = [c for c in document['checks'] if c['name'].startswith('scenario ')]
        self.assertEqual(len(structural), 6)
        self.assertTrue(all(c['passed'] for c in structural))

    def test_invalid_params(self):
        params = self.write_file('params.json', {'plan_noise': 0.5})
        self.assertExitStatus(EXIT_VALIDATION, 'paper', params=params)


class ValidateCommandTests(CommandTestCase):
    def test_builtin_networks_are_clean(self):
        for net in ('traffic', 'traffic-mini'):
            with self.subTest(net=net):
                self.assertIn('0 violations', self.run_command('validate', net=net))

    def test_row_sum_corruption(self):
        document = json.loads(self.run_command('export'))
        cpt = next(c for c in document['cpts'] if c['child'] == 'x position t0')
        cpt['rows'] = [[0.1, 0.3, 0.3, 0.2]]
        path = self.write_file('corrupt.json', document)
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('validate', net=path, stdout=out)
        self.assertEqual(ctx.exception.returncode, EXIT_VALIDATION)
        self.assertIn('[row-sum]', out.getvalue())
        self.assertIn('1 violation', out.getvalue())
        self.assertNotIn('1 violations', out.getvalue())

    def test_cycle_is_reported_with_its_edge(self):
        path = self.write_file('cycle.json', {
            'variables': [{'id': 'A', 'labels': ['0', '1']}, {'id': 'B', 'labels': ['0', '1']}],
            'cpts': [
                {'child': 'A', 'parents': ['B'], 'rows': [[0.5, 0.5], [0.5, 0.5]]},
                {'child': 'B', 'parents': ['A'], 'rows': [[0.5, 0.5], [0.5, 0.5]]},
            ],
        })
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('validate', net=path, stdout=out)
        self.assertEqual(ctx.exception.returncode, EXIT_VALIDATION)
        self.assertIn('[cycle]', out.getvalue())
        self.assertRegex(out.getvalue(), r"'[AB]' -> '[AB]'")

    def test_unparseable_file(self):
        path = self.write_file('garbage.json', '{"variables": [')
        exc = self.assertExitStatus(EXIT_USAGE, 'validate', net=path)
        self.assertIn('line', str(exc))

    def test_unknown_rule(self):
        self.assertExitStatus(EXIT_USAGE, 'validate', rules='R1,R9')

    def test_json_output(self):
        document = json.loads(self.run_command('validate', json=True, rules='R6'))
        self.assertEqual(document['violations'], 0)
        self.assertEqual(document['network'], 'traffic')


class SampleCommandTests(CommandTestCase):
    def test_same_seed_same_lines(self):
        first = self.run_command('sample', seed=7, n=5)
        self.assertEqual(first, self.run_command('sample', seed=7, n=5))
        self.assertNotEqual(first, self.run_command('sample', seed=8, n=5))
        self.assertEqual(len(first.splitlines()), 5)

    def test_samples_respect_lane_dynamics(self):
        for line in self.run_command('sample', seed=3, n=200).splitlines():
            sample = dict(field.split('=', 1) for field in line.split('\t'))
            self.assertEqual(len(sample), 30)
            self.assertEqual(sample['x position t1'],
                             lane_transition(sample['x position t0'], sample['lat act m0']))
            self.assertEqual(sample['x position t2'],
                             lane_transition(sample['x position t1'], sample['lat act m1']))

    def test_output_file(self):
        path = self.tmp / 'samples.tsv'
        self.run_command('sample', n=3, out=str(path), net='traffic-mini')
        lines = path.read_text().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(len(lines[0].split('\t')), 26)

    def test_sample_count_must_be_positive(self):
        self.assertExitStatus(EXIT_USAGE, 'sample', n=0)


class ExportCommandTests(CommandTestCase):
    def test_builtin_sizes(self):
        self.assertEqual(len(json.loads(self.run_command('export'))['variables']), 30)
        self.assertEqual(len(json.loads(self.run_command('export', net='traffic-mini'))['variables']), 26)

    def test_exported_file_validates_and_answers_the_same(self):
        path = self.tmp / 'traffic.json'
        self.run_command('export', out=str(path))
        self.assertIn('0 violations', self.run_command('validate', net=str(path)))
        scenario = str(SCENARIOS / 'scenario_a.json')
        builtin = json.loads(self.run_command('query', scenario=scenario, json=True))
        exported = json.loads(self.run_command('query', scenario=scenario, json=True, net=str(path)))
        self.assertEqual(builtin['posteriors'], exported['posteriors'])


class ProjectSettingsTests(SimpleTestCase):
    def test_runs_without_models_or_database(self):
        self.assertEqual(list(apps.get_app_config('Plan_Recognition_app').get_models()), [])
        self.assertNotIn('django.contrib.auth', settings.INSTALLED_APPS)
        engine = settings.DATABASES.get('default', {}).get('ENGINE', 'django.db.backends.dummy')
        self.assertEqual(engine, 'django.db.backends.dummy')

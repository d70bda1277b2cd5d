import itertools
import logging

from django.core.management.base import CommandError

from ...exceptions import InconsistentEvidenceError
from ...inference import argmax_posterior, joint_posterior, posterior
from ...loaders import resolve_network
from ...scenarios import Scenario, load_scenario
from ..base import EXIT_INCONSISTENT, EXIT_USAGE, PlanRecCommand

logger = logging.getLogger(__name__)


class Command(PlanRecCommand):
    help = "Posterior distribution of each target variable given a scenario's evidence"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--scenario', default=None, help="Scenario JSON file (evidence and targets).")
        parser.add_argument('--target', action='append', default=[],
                            help="Variable to query; repeatable. Overrides the scenario's targets.")
        parser.add_argument('--joint', action='store_true', help="Also print the joint posterior of the targets.")
        parser.add_argument('--json', action='store_true', help="Machine-readable output.")

    def run(self, **options):
        net = resolve_network(options['net'], options['params'])
        scenario = load_scenario(options['scenario']) if options['scenario'] else Scenario('ad hoc')
        targets = tuple(options['target']) or scenario.targets
        if not targets:
            raise CommandError("No target: pass --target or a scenario with targets.", returncode=EXIT_USAGE)
        scenario = Scenario(scenario.name, scenario.evidence, targets)
        scenario.validate(net)

        results = {}
        for target in targets:
            result = posterior(net, scenario.evidence, target)
            if not result.consistent:
                raise CommandError(
                    f"Inconsistent evidence: scenario '{scenario.name}' has zero probability "
                    f"under network '{net.name}'.",
                    returncode=EXIT_INCONSISTENT,
                )
            results[target] = result
        joint = self._joint(net, scenario) if options['joint'] else None

        if options['json']:
            document = {
                'network': net.name,
                'scenario': scenario.name,
                'evidence': scenario.evidence,
                'posteriors': {
                    target: {'distribution': result.as_dict(), 'argmax': argmax_posterior(result)}
                    for target, result in results.items()
                },
            }
            if joint is not None:
                document['joint'] = {
                    'targets': list(joint.scope),
                    'table': [
                        {'labels': list(labels), 'probability': float(joint.values[index])}
                        for index, labels in self._joint_cells(joint)
                    ],
                }
            self.write_json(document)
        else:
            self._write_tables(net, scenario, results, joint)
        logger.info(f"Answered {len(targets)} queries for scenario '{scenario.name}' on '{net.name}'")

    def _joint(self, net, scenario):
        try:
            return joint_posterior(net, scenario.evidence, scenario.targets)
        except InconsistentEvidenceError as exc:
            raise CommandError(str(exc), returncode=EXIT_INCONSISTENT) from exc

    @staticmethod
    def _joint_cells(joint):
        ranges = [range(card) for card in joint.cards]
        for index in itertools.product(*ranges):
            yield index, tuple(domain[i] for domain, i in zip(joint.domains, index))

    def _write_tables(self, net, scenario, results, joint):
        self.stdout.write(f"Scenario {scenario.name} on network {net.name}")
        for variable_id, label in scenario.evidence.items():
            self.stdout.write(f"  evidence  {variable_id} = {label}")
        for target, result in results.items():
            width = max(len(label) for label in result.labels)
            self.stdout.write('')
            self.stdout.write(self.style.MIGRATE_HEADING(target))
            for label, probability in zip(result.labels, result.distribution):
                self.stdout.write(f"  {label:<{width}}  {probability:.4f}")
            self.stdout.write(self.style.SUCCESS(f"  argmax: {argmax_posterior(result)}"))
        if joint is not None:
            self.stdout.write('')
            self.stdout.write(self.style.MIGRATE_HEADING(f"joint: {', '.join(joint.scope)}"))
            for index, labels in self._joint_cells(joint):
                self.stdout.write(f"  {', '.join(labels)}  {float(joint.values[index]):.4f}")

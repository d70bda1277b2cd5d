from django.core.management.base import CommandError

from ...exceptions import UntaggedVariableError
from ...loaders import resolve_network
from ...network import validate_network
from ...roles import enabled_rules, validate_roles
from ..base import EXIT_USAGE, EXIT_VALIDATION, PlanRecCommand


class Command(PlanRecCommand):
    help = "Check a network's structure, CPTs and role discipline"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--rules', default=None,
                            help="Comma-separated role rules to check (default: the ROLE_RULES setting).")
        parser.add_argument('--json', action='store_true', help="Machine-readable output.")

    def run(self, **options):
        try:
            rules = enabled_rules(options['rules'].split(',') if options['rules'] else None)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        net = resolve_network(options['net'], options['params'])

        network_violations = validate_network(net)
        try:
            role_violations = validate_roles(net, rules)
            untagged = None
        except UntaggedVariableError as exc:
            role_violations, untagged = [], str(exc)
        total = len(network_violations) + len(role_violations) + (1 if untagged else 0)

        if options['json']:
            self.write_json({
                'network': net.name,
                'network_violations': [self._as_dict(v) for v in network_violations],
                'role_violations': [self._as_dict(v) for v in role_violations],
                'untagged': untagged,
                'violations': total,
            })
        else:
            for violation in network_violations + role_violations:
                self.stdout.write(str(violation))
            if untagged:
                self.stdout.write(f"[roles] {untagged}")
            summary = f"{total} violation{'' if total == 1 else 's'}"
            self.stdout.write(self.style.SUCCESS(summary) if total == 0 else self.style.ERROR(summary))

        if total:
            raise CommandError(f"Network '{net.name}' has {total} violations.", returncode=EXIT_VALIDATION)

    @staticmethod
    def _as_dict(violation):
        return {
            'rule': violation.rule,
            'variable': violation.variable,
            'edge': list(violation.edge) if violation.edge else None,
            'message': violation.message,
        }

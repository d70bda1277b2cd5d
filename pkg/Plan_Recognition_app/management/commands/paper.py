from django.core.management.base import CommandError

from ...loaders import load_params
from ...report import CALIBRATION_BAND, build_paper_report
from ...traffic import build_traffic_network
from ..base import EXIT_ACCEPTANCE, PlanRecCommand


class Command(PlanRecCommand):
    help = "Reproduce the three worked highway scenarios and check the results"
    uses_network = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--json', action='store_true', help="Machine-readable output.")

    def run(self, **options):
        net = build_traffic_network(load_params(options['params']))
        report = build_paper_report(net)

        if options['json']:
            self.write_json(report.as_dict())
        else:
            self._write_report(report)

        if not report.passed:
            failed = [check.name for check in report.checks if not check.passed]
            raise CommandError(f"Qualitative checks failed: {failed}", returncode=EXIT_ACCEPTANCE)

    def _write_report(self, report):
        self.stdout.write(self.style.MIGRATE_HEADING("Computed vs. published posteriors"))
        self.stdout.write(f"  {'scenario':<9}{'target':<16}{'label':<8}{'computed':>9}{'reference':>10}"
                          f"{'deviation':>10}  band +/-{CALIBRATION_BAND}")
        for row in report.rows:
            band = 'ok' if row.within_band else 'OUT'
            self.stdout.write(
                f"  {row.scenario:<9}{row.target:<16}{row.label:<8}{row.computed:>9.4f}"
                f"{row.reference:>10.2f}{row.deviation:>10.4f}  {band}"
            )
        self.stdout.write('')
        self.stdout.write(self.style.MIGRATE_HEADING("Checks"))
        for check in report.checks:
            status = self.style.SUCCESS('PASS') if check.passed else self.style.ERROR('FAIL')
            detail = f"  ({check.detail})" if check.detail else ''
            self.stdout.write(f"  {status}  {check.name}{detail}")
        if report.passed:
            self.stdout.write(self.style.SUCCESS("All qualitative checks passed."))

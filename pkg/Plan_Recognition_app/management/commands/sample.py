import logging
from pathlib import Path

from django.core.management.base import CommandError

from ...loaders import resolve_network
from ...network import forward_sample_indices
from ...utils import get_planrec_setting
from ..base import EXIT_USAGE, PlanRecCommand

logger = logging.getLogger(__name__)


class Command(PlanRecCommand):
    help = "Draw seeded forward samples and write them as var=label lines"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--seed', type=int, default=None, help="Generator seed (default: DEFAULT_SEED setting).")
        parser.add_argument('--n', type=int, default=1, help="Number of samples.")
        parser.add_argument('--out', default=None, help="Output file (default: standard output).")

    def run(self, **options):
        if options['n'] < 1:
            raise CommandError(f"--n must be at least 1, got {options['n']}.", returncode=EXIT_USAGE)
        seed = get_planrec_setting('DEFAULT_SEED') if options['seed'] is None else options['seed']
        net = resolve_network(options['net'], options['params'])
        samples = forward_sample_indices(net, seed, options['n'])
        text = ''.join(f"{line}\n" for line in samples.lines(net))

        if options['out']:
            Path(options['out']).write_text(text, encoding='utf-8')
            logger.info(f"Wrote {len(samples)} samples of '{net.name}' (seed {seed}) to {options['out']}")
            self.stdout.write(self.style.SUCCESS(f"Wrote {len(samples)} samples to {options['out']}."))
        else:
            self.stdout.write(text, ending='')

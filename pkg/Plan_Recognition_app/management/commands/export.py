import logging
from pathlib import Path

from ...loaders import resolve_network
from ...serializers import network_to_document
from ...utils import dump_json_document
from ..base import PlanRecCommand

logger = logging.getLogger(__name__)


class Command(PlanRecCommand):
    help = "Export a network as a JSON document"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--out', default=None, help="Output file (default: standard output).")

    def run(self, **options):
        net = resolve_network(options['net'], options['params'])
        text = dump_json_document(network_to_document(net))
        if options['out']:
            Path(options['out']).write_text(text, encoding='utf-8')
            logger.info(f"Exported network '{net.name}' to {options['out']}")
            self.stdout.write(self.style.SUCCESS(f"Exported {len(net)} variables to {options['out']}."))
        else:
            self.stdout.write(text, ending='')

import json
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from ..exceptions import (EvidenceError, InconsistentEvidenceError, NetworkError, ParamsError,
                          PlanRecError, ScopeError, StateSpaceTooLargeError)
from ..utils import DocumentError

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INCONSISTENT = 3
EXIT_ACCEPTANCE = 4


def format_validation_error(exc):
    detail = exc.detail
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {value}" for key, value in detail.items())
    return str(detail)


class PlanRecCommand(BaseCommand):
    """
    Base for the toolkit's commands: shared --net/--params options and the
    mapping from toolkit errors to exit statuses.
    """
    uses_network = True

    def add_arguments(self, parser):
        if self.uses_network:
            parser.add_argument('--net', default='traffic',
                                help="Builtin network (traffic, traffic-mini) or a network JSON file.")
        parser.add_argument('--params', default=None, help="Traffic parameters JSON file.")

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except CommandError:
            raise
        except (DocumentError, serializers.ValidationError, OSError) as exc:
            message = format_validation_error(exc) if isinstance(exc, serializers.ValidationError) else str(exc)
            raise CommandError(message, returncode=EXIT_USAGE) from exc
        except InconsistentEvidenceError as exc:
            raise CommandError(str(exc), returncode=EXIT_INCONSISTENT) from exc
        except (NetworkError, EvidenceError, ParamsError, ScopeError) as exc:
            raise CommandError(str(exc), returncode=EXIT_VALIDATION) from exc
        except (StateSpaceTooLargeError, PlanRecError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    def run(self, **options):
        raise NotImplementedError

    def write_json(self, document):
        self.stdout.write(json.dumps(document, indent=2))

import json
from pathlib import Path

from django.conf import settings

DEFAULTS = {
    'ENUMERATION_CAP': 10 ** 8,
    'ENUMERATION_BLOCK': 2 ** 20,
    'INCONSISTENT_MASS': 1e-300,
    'ROLE_RULES': ['R1', 'R2', 'R3', 'R4', 'R5', 'R6'],
    'PARAMS_FILE': Path(__file__).resolve().parent / 'data' / 'defaults.json',
    'DEFAULT_SEED': 0,
}


def get_planrec_setting(key):
    """Look up a key of the PLANREC settings dict, falling back to the built-in default."""
    planrec_config = getattr(settings, 'PLANREC', {})
    return planrec_config.get(key, DEFAULTS[key])


class DocumentError(ValueError):
    """A JSON document could not be read or parsed."""


def load_json_document(path):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise DocumentError(f"{path}: cannot read file ({exc.strerror}).") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}.") from exc


def dump_json_document(document):
    return json.dumps(document, indent=2) + '\n'

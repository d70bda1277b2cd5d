from pathlib import Path

from .serializers import network_from_document
from .traffic import TrafficParams, build_traffic_network, shipped_params, traffic_mini
from .utils import load_json_document

BUILTIN_NETWORKS = {
    'traffic': build_traffic_network,
    'traffic-mini': traffic_mini,
}


def load_params(path=None):
    """TrafficParams from ``path``, or the shipped calibration when omitted."""
    return TrafficParams.load(path) if path else shipped_params()


def resolve_network(selector, params_path=None):
    """A builtin network name (``traffic``, ``traffic-mini``) or a network JSON file."""
    if selector in BUILTIN_NETWORKS:
        return BUILTIN_NETWORKS[selector](load_params(params_path))
    path = Path(selector)
    return network_from_document(load_json_document(path), name=path.stem)

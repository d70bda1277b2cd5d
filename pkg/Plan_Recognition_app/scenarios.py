from dataclasses import dataclass, field

from .exceptions import UnknownVariableError
from .recognition import check_observable
from .serializers import ScenarioSerializer
from .utils import dump_json_document, load_json_document


@dataclass(frozen=True)
class Scenario:
    """A named evidence set plus the variables to query under it."""
    name: str
    evidence: dict = field(default_factory=dict)
    targets: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'evidence', dict(self.evidence))
        object.__setattr__(self, 'targets', tuple(self.targets))

    def validate(self, net):
        check_observable(net, self.evidence)
        for target in self.targets:
            if target not in net:
                raise UnknownVariableError(f"Scenario '{self.name}' targets unknown variable '{target}'.")

    def as_dict(self):
        return {'name': self.name, 'evidence': dict(self.evidence), 'targets': list(self.targets)}


def scenario_from_dict(data):
    serializer = ScenarioSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return Scenario(**serializer.validated_data)


def load_scenario(path):
    return scenario_from_dict(load_json_document(path))


def dump_scenario(scenario):
    return dump_json_document(scenario.as_dict())

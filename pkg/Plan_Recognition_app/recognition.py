"""Recognition queries: posteriors over plan variables and predicted effects."""

import logging

from .exceptions import InconsistentEvidenceError, ScopeError, UnobservableEvidenceError
from .inference import posterior
from .network import Role, TimeIndex

logger = logging.getLogger(__name__)

PREDICTION_TIMES = (TimeIndex.T1, TimeIndex.T2)


def check_observable(net, evidence):
    """Reject evidence on unknown or unobservable variables and bad labels."""
    net.encode(evidence)
    for variable_id in evidence:
        variable = net.variable(variable_id)
        if not variable.observable:
            raise UnobservableEvidenceError(variable_id, variable.role)


def _query_all(net, evidence, targets):
    results = {}
    for target in targets:
        result = posterior(net, evidence, target)
        if not result.consistent:
            raise InconsistentEvidenceError(
                f"Evidence {dict(evidence)} has zero probability under network '{net.name}'."
            )
        results[target] = result
    return results


def recognize(net, evidence, *, observable_only=True):
    """Posterior of every Plan variable given the evidence."""
    if observable_only:
        check_observable(net, evidence)
    plans = [v.id for v in net.variables if v.role == Role.PLAN]
    logger.debug(f"Recognizing {plans} from {len(evidence)} observations")
    return _query_all(net, evidence, plans)


def predict(net, evidence, time, *, observable_only=True):
    """Posterior of every Effect variable tagged ``time`` (t1 or t2)."""
    time = TimeIndex(time)
    if time not in PREDICTION_TIMES:
        raise ScopeError(f"Predictions are made for t1 or t2, not {time}.")
    if observable_only:
        check_observable(net, evidence)
    effects = [v.id for v in net.variables if v.role == Role.EFFECT and v.time == time]
    return _query_all(net, evidence, effects)

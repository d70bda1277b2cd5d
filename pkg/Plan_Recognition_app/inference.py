"""
Exact posterior queries.

``posterior`` runs variable elimination with a greedy min-fill order;
``enumerate_posterior`` is the brute-force oracle used to check it. The
oracle never touches the Factor code: it sums chain-rule products over every
completion of the evidence, materializing blocks of completions as dense
numpy arrays.
"""

import itertools
import logging
import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .exceptions import InconsistentEvidenceError, ScopeError, StateSpaceTooLargeError
from .factors import (Factor, factor_from_cpt, factor_marginalize, factor_reduce,
                      product_of)
from .utils import get_planrec_setting

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Posterior:
    target: str
    labels: tuple
    distribution: tuple
    evidence_mass: float
    consistent: bool = True

    def probability(self, label):
        return self.distribution[self.labels.index(label)]

    def as_dict(self):
        return dict(zip(self.labels, self.distribution))


def fill_in_count(adjacency, variable_id):
    neighbours = sorted(adjacency[variable_id])
    return sum(
        1
        for i, a in enumerate(neighbours)
        for b in neighbours[i + 1:]
        if b not in adjacency[a]
    )


def min_fill_order(net, keep=()):
    """
    Greedy min-fill elimination order over the moralized graph, skipping ``keep``.

    Ties go to the lexicographically smallest id, so the order is deterministic.
    """
    keep = set(keep)
    for variable_id in keep:
        net.variable(variable_id)
    moral = nx.moral_graph(net.graph())
    adjacency = {v: set(moral[v]) - {v} for v in moral}
    remaining = {v for v in adjacency if v not in keep}
    order = []
    while remaining:
        chosen = min(remaining, key=lambda v: (fill_in_count(adjacency, v), v))
        neighbours = adjacency.pop(chosen)
        for a in neighbours:
            adjacency[a].discard(chosen)
            adjacency[a].update(neighbours - {a})
        remaining.remove(chosen)
        order.append(chosen)
    return order


def _working_factors(net, evidence):
    net.encode(evidence)
    return [factor_reduce(factor_from_cpt(net, v), evidence) for v in net.variable_ids]


def _resolve_order(net, keep, elimination_order):
    if elimination_order is None:
        return min_fill_order(net, keep)
    expected = set(net.variable_ids) - set(keep)
    order = list(elimination_order)
    if set(order) != expected or len(order) != len(expected):
        raise ScopeError(
            f"Elimination order must list each non-kept variable exactly once; "
            f"missing {sorted(expected - set(order))}, unexpected {sorted(set(order) - expected)}."
        )
    return order


def eliminate(factors, order):
    factors = list(factors)
    largest = 0
    for variable_id in order:
        touching = [f for f in factors if variable_id in f.scope]
        if not touching:
            continue
        factors = [f for f in factors if variable_id not in f.scope]
        joined = product_of(touching)
        largest = max(largest, joined.values.size)
        factors.append(factor_marginalize(joined, variable_id))
    logger.debug(f"Eliminated {len(order)} variables, largest intermediate factor has {largest} entries")
    return factors


def posterior(net, evidence, target, *, elimination_order=None):
    """Exact P(target | evidence) by variable elimination."""
    variable = net.variable(target)
    evidence = dict(evidence)
    keep = {target} | set(evidence)
    order = _resolve_order(net, keep, elimination_order)
    result = product_of(eliminate(_working_factors(net, evidence), order))

    if target in evidence:
        mass = result.total()
        vector = np.zeros(variable.card)
        vector[variable.domain.index(evidence[target])] = 1.0
    else:
        vector = result.values
        mass = float(vector.sum())
    return _posterior_from(variable, vector, mass)


def _posterior_from(variable, vector, mass):
    if mass <= get_planrec_setting('INCONSISTENT_MASS'):
        logger.warning(f"Evidence is inconsistent (mass {mass!r}) for query on '{variable.id}'")
        return Posterior(variable.id, variable.labels, (0.0,) * variable.card, float(mass), consistent=False)
    vector = np.asarray(vector, dtype=np.float64)
    distribution = tuple(float(x) for x in vector / vector.sum())
    return Posterior(variable.id, variable.labels, distribution, float(mass))


def evidence_likelihood(net, evidence):
    """P(evidence), summing every unobserved variable out."""
    evidence = dict(evidence)
    order = _resolve_order(net, set(evidence), None)
    return product_of(eliminate(_working_factors(net, evidence), order)).total()


def joint_posterior(net, evidence, targets):
    """Normalized joint factor over up to three unobserved targets, in the given order."""
    targets = tuple(targets)
    if not 1 <= len(targets) <= 3 or len(set(targets)) != len(targets):
        raise ScopeError(f"A joint query takes 1 to 3 distinct targets, got {list(targets)}.")
    evidence = dict(evidence)
    for target in targets:
        net.variable(target)
        if target in evidence:
            raise ScopeError(f"Joint target '{target}' is bound by the evidence.")
    keep = set(targets) | set(evidence)
    result = product_of(eliminate(_working_factors(net, evidence), min_fill_order(net, keep)))
    mass = result.total()
    if mass <= get_planrec_setting('INCONSISTENT_MASS'):
        raise InconsistentEvidenceError(f"Evidence {evidence} has zero probability.")
    values = np.transpose(result.values, [result.scope.index(t) for t in targets])
    domains = tuple(net.variable(t).labels for t in targets)
    return Factor(targets, domains, values).normalized()


def enumerate_posterior(net, evidence, target, *, cap=None):
    """
    Brute-force P(target | evidence): sum the chain rule over all completions.

    Only the target, the evidence and their ancestors are enumerated; every
    other variable sums out to exactly one.

    Raises StateSpaceTooLargeError when the unobserved variables have more
    joint states than ``cap`` (default: the ENUMERATION_CAP setting).
    """
    variable = net.variable(target)
    bound = net.encode(evidence)
    graph = net.graph()
    relevant = {target} | set(bound)
    for variable_id in list(relevant):
        relevant |= nx.ancestors(graph, variable_id)
    variable_ids = [v for v in net.variable_ids if v in relevant]
    hidden = [v for v in variable_ids if v not in bound]
    states = math.prod(net.card(v) for v in hidden)
    cap = get_planrec_setting('ENUMERATION_CAP') if cap is None else cap
    if states > cap:
        raise StateSpaceTooLargeError(
            f"{states} unobserved joint states exceed the enumeration cap of {cap}."
        )

    block = get_planrec_setting('ENUMERATION_BLOCK')
    inner, size = [], 1
    for variable_id in reversed(hidden):
        if size * net.card(variable_id) > block:
            break
        inner.insert(0, variable_id)
        size *= net.card(variable_id)
    outer = hidden[:len(hidden) - len(inner)]
    inner_shape = [net.card(v) for v in inner]
    tables = {v: (net.parents(v) + (v,), net.table(v)) for v in variable_ids}

    totals = np.zeros(variable.card)
    for outer_values in itertools.product(*(range(net.card(v)) for v in outer)):
        fixed = dict(bound)
        fixed.update(zip(outer, outer_values))
        joint = np.ones(inner_shape)
        for axes, table in tables.values():
            key = tuple(fixed[a] if a in fixed else slice(None) for a in axes)
            free = [a for a in axes if a not in fixed]
            joint = joint * _spread(np.asarray(table[key]), free, inner)
        if target in fixed:
            totals[fixed[target]] += joint.sum()
        else:
            axis = inner.index(target)
            totals += joint.sum(axis=tuple(i for i in range(len(inner)) if i != axis))

    mass = float(totals.sum())
    vector = totals
    if target in bound:
        vector = np.zeros(variable.card)
        vector[bound[target]] = 1.0
    return _posterior_from(variable, vector, mass)


def _spread(values, free, inner):
    """Lay ``values`` (axes = ``free``) out along the ``inner`` axes, size 1 elsewhere."""
    permutation = sorted(range(len(free)), key=lambda i: inner.index(free[i]))
    values = np.transpose(values, permutation)
    return values.reshape([values.shape[permutation.index(free.index(v))] if v in free else 1 for v in inner])


def argmax_posterior(p):
    """Most probable label; ties go to the lowest domain index."""
    if not p.consistent:
        raise InconsistentEvidenceError(f"Posterior of '{p.target}' comes from inconsistent evidence.")
    values = np.asarray(p.distribution)
    return p.labels[int(np.flatnonzero(values >= values.max() - TIE_TOLERANCE)[0])]

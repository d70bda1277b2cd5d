"""
Discrete Bayesian networks: categorical variables, CPTs, DAG structure,
chain-rule evaluation and seeded ancestral sampling.

Labels are used at every external interface; internally a value is its index
in the variable's domain. CPT rows enumerate parent assignments with the LAST
parent varying fastest, which is exactly numpy's C order for a table shaped
``parent_cards + (child_card,)``.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
import numpy as np
from django.db import models

from .exceptions import (CptShapeError, CptValueError, CycleError, DomainError,
                         DuplicateVariableError, EvidenceError, NetworkError,
                         UnknownVariableError)

logger = logging.getLogger(__name__)

ROW_TOLERANCE = 1e-9


class Role(models.TextChoices):
    CONTEXT = 'Context', 'Context'
    MENTAL_STATE = 'MentalState', 'Mental state'
    PLAN = 'Plan', 'Plan'
    COMMUNICATION = 'Communication', 'Communication'
    ACTIVITY = 'Activity', 'Activity'
    EFFECT = 'Effect', 'Effect'


class TimeIndex(models.TextChoices):
    T0 = 't0', 't0'
    M0 = 'm0', 'm0'
    M1 = 'm1', 'm1'
    T1 = 't1', 't1'
    T2 = 't2', 't2'
    ATEMPORAL = 'atemporal', 'Atemporal'


@dataclass(frozen=True)
class Domain:
    """Ordered, duplicate-free category labels (index = canonical encoding)."""
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        if len(labels) < 2:
            raise DomainError(f"A domain needs at least 2 labels, got {list(labels)}.")
        if len(set(labels)) != len(labels):
            raise DomainError(f"Domain labels must be unique, got {list(labels)}.")
        object.__setattr__(self, 'labels', labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise EvidenceError(f"Label '{label}' is not in domain {list(self.labels)}.") from None


@dataclass(frozen=True)
class Variable:
    id: str
    domain: Domain
    role: Optional[Role] = None
    time: Optional[TimeIndex] = None
    observable: bool = True

    @property
    def labels(self):
        return self.domain.labels

    @property
    def card(self):
        return len(self.domain)


@dataclass(frozen=True, eq=False)
class Cpt:
    """One probability row per parent assignment (last parent fastest)."""
    child: str
    parents: tuple
    rows: np.ndarray

    @property
    def row_lists(self):
        return self.rows.tolist()


@dataclass(frozen=True)
class Violation:
    """A broken structural or numeric rule, pinned to one variable or edge."""
    rule: str
    variable: str
    message: str
    edge: Optional[tuple] = None

    def __str__(self):
        return f"[{self.rule}] {self.message}"


class Network:
    """
    A DAG of categorical variables with one CPT each.

    Build it with add_variable/set_cpt (both validate eagerly), then share it
    read-only. install_cpt/remove_cpt bypass the checks; they exist for
    document import and fault injection, and validate_network reports
    whatever they let through.
    """

    def __init__(self, name=''):
        self.name = name
        self._variables = {}
        self._cpts = {}

    def __contains__(self, variable_id):
        return variable_id in self._variables

    def __len__(self):
        return len(self._variables)

    def __repr__(self):
        return f"<Network {self.name or 'unnamed'}: {len(self)} variables>"

    @property
    def variables(self):
        return tuple(self._variables.values())

    @property
    def variable_ids(self):
        return tuple(self._variables)

    @property
    def cpts(self):
        return tuple(self._cpts.values())

    def variable(self, variable_id):
        try:
            return self._variables[variable_id]
        except KeyError:
            raise UnknownVariableError(f"Unknown variable '{variable_id}'.") from None

    def card(self, variable_id):
        return self.variable(variable_id).card

    def has_cpt(self, variable_id):
        return variable_id in self._cpts

    def cpt(self, variable_id):
        self.variable(variable_id)
        try:
            return self._cpts[variable_id]
        except KeyError:
            raise NetworkError(f"Variable '{variable_id}' has no CPT.") from None

    def parents(self, variable_id):
        return self.cpt(variable_id).parents

    def table(self, variable_id):
        """The CPT as an array shaped ``parent_cards + (child_card,)``."""
        cpt = self.cpt(variable_id)
        shape = tuple(self.card(p) for p in cpt.parents) + (self.card(variable_id),)
        return cpt.rows.reshape(shape)

    def add_variable(self, variable_id, domain, role=None, time=None, observable=True):
        if not variable_id:
            raise NetworkError("Variable id must be non-empty.")
        if variable_id in self._variables:
            raise DuplicateVariableError(f"Variable '{variable_id}' already exists.")
        if not isinstance(domain, Domain):
            domain = Domain(tuple(domain))
        variable = Variable(
            id=variable_id,
            domain=domain,
            role=Role(role) if role is not None else None,
            time=TimeIndex(time) if time is not None else None,
            observable=bool(observable),
        )
        self._variables[variable_id] = variable
        uniform = np.full((1, variable.card), 1.0 / variable.card)
        self._cpts[variable_id] = _frozen_cpt(variable_id, (), uniform)
        return variable_id

    def set_cpt(self, child, parents, rows):
        variable = self.variable(child)
        parents = tuple(parents)
        for parent in parents:
            self.variable(parent)
        if child in parents:
            raise CycleError(f"'{child}' cannot be its own parent.", edge=(child, child))
        if len(set(parents)) != len(parents):
            raise CptShapeError(f"Duplicate parents in CPT of '{child}': {list(parents)}.")

        parent_cards = tuple(self.card(p) for p in parents)
        expected = (math.prod(parent_cards), variable.card)
        table = np.asarray(rows, dtype=np.float64)
        if table.shape == parent_cards + (variable.card,):
            table = table.reshape(expected)
        if table.shape != expected:
            raise CptShapeError(
                f"CPT of '{child}' needs {expected[0]} rows of {expected[1]} entries, got shape {table.shape}."
            )
        negative = np.argwhere(table < 0)
        if len(negative):
            row = int(negative[0][0])
            raise CptValueError(f"CPT of '{child}' has a negative entry in row {row}.")
        sums = table.sum(axis=1)
        bad = np.flatnonzero(np.abs(sums - 1.0) > ROW_TOLERANCE)
        if len(bad):
            row = int(bad[0])
            raise CptValueError(f"CPT of '{child}' row {row} sums to {sums[row]!r}, not 1.")

        graph = self.graph()
        graph.remove_edges_from(list(graph.in_edges(child)))
        for parent in parents:
            if nx.has_path(graph, child, parent):
                raise CycleError(
                    f"Edge '{parent}' -> '{child}' would introduce a cycle.", edge=(parent, child)
                )
        self._cpts[child] = _frozen_cpt(child, parents, table)

    def install_cpt(self, cpt):
        self._cpts[cpt.child] = _frozen_cpt(cpt.child, tuple(cpt.parents), cpt.rows)

    def remove_cpt(self, child):
        self.variable(child)
        self._cpts.pop(child, None)

    def graph(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self._variables)
        for child, cpt in self._cpts.items():
            if child not in self._variables:
                continue
            graph.add_edges_from((p, child) for p in cpt.parents if p in self._variables)
        return graph

    def encode(self, assignment):
        """Map ``{variable: label}`` to ``{variable: index}``."""
        encoded = {}
        for variable_id, label in assignment.items():
            variable = self.variable(variable_id)
            try:
                encoded[variable_id] = variable.domain.index(label)
            except EvidenceError:
                raise EvidenceError(
                    f"Label '{label}' is not in the domain of '{variable_id}' {list(variable.labels)}."
                ) from None
        return encoded

    def decode(self, indices):
        return {v: self.variable(v).labels[int(i)] for v, i in indices.items()}

    def copy(self, name=None):
        clone = Network(name=self.name if name is None else name)
        clone._variables = dict(self._variables)
        clone._cpts = dict(self._cpts)
        return clone


def _frozen_cpt(child, parents, rows):
    rows = np.array(rows, dtype=np.float64)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    rows.setflags(write=False)
    return Cpt(child=child, parents=tuple(parents), rows=rows)


def validate_network(net):
    """Every broken Network invariant, as data. Empty means valid."""
    violations = []
    for child, cpt in net._cpts.items():
        if child not in net:
            violations.append(Violation('unknown-child', child, f"CPT for unknown variable '{child}'."))
    for variable in net.variables:
        if not net.has_cpt(variable.id):
            violations.append(Violation('missing-cpt', variable.id, f"Variable '{variable.id}' has no CPT."))
            continue
        violations.extend(_cpt_violations(net, variable, net.cpt(variable.id)))

    graph = net.graph()
    for component in nx.strongly_connected_components(graph):
        if len(component) < 2 and not any(graph.has_edge(v, v) for v in component):
            continue
        cycle = nx.find_cycle(graph.subgraph(component))
        parent, child = cycle[-1][0], cycle[-1][1]
        path = ' -> '.join([edge[0] for edge in cycle] + [cycle[-1][1]])
        violations.append(Violation(
            'cycle', child, f"Cycle through edge '{parent}' -> '{child}': {path}.", edge=(parent, child)
        ))
    return violations


def _cpt_violations(net, variable, cpt):
    found = []
    unknown = [p for p in cpt.parents if p not in net]
    for parent in unknown:
        found.append(Violation(
            'unknown-parent', variable.id,
            f"CPT of '{variable.id}' references unknown parent '{parent}'.", edge=(parent, variable.id)
        ))
    rows = cpt.rows
    if rows.ndim != 2 or rows.shape[1] != variable.card:
        found.append(Violation(
            'row-width', variable.id,
            f"CPT of '{variable.id}' rows must have {variable.card} entries, got shape {rows.shape}."
        ))
        return found
    if not unknown:
        expected = math.prod(net.card(p) for p in cpt.parents)
        if rows.shape[0] != expected:
            found.append(Violation(
                'row-count', variable.id,
                f"CPT of '{variable.id}' has {rows.shape[0]} rows, expected {expected}."
            ))
    for index, row in enumerate(rows):
        if (row < 0).any():
            found.append(Violation('negative-entry', variable.id,
                                   f"CPT of '{variable.id}' row {index} has a negative entry."))
        total = float(row.sum())
        if abs(total - 1.0) > ROW_TOLERANCE:
            found.append(Violation('row-sum', variable.id,
                                   f"CPT of '{variable.id}' row {index} sums to {total!r}."))
    return found


def topological_order(net):
    """Parents before children; ties broken by lexicographic id."""
    graph = net.graph()
    try:
        return list(nx.lexicographical_topological_sort(graph))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(graph)
        raise CycleError(f"Network has a cycle: {cycle}.", edge=cycle[-1][:2]) from None


def joint_probability(net, assignment):
    missing = [v for v in net.variable_ids if v not in assignment]
    if missing:
        raise EvidenceError(f"joint_probability needs a total assignment; missing {missing}.")
    indices = net.encode(assignment)
    probability = 1.0
    for variable_id in net.variable_ids:
        table = net.table(variable_id)
        key = tuple(indices[p] for p in net.parents(variable_id)) + (indices[variable_id],)
        probability *= float(table[key])
    return probability


@dataclass(frozen=True, eq=False)
class SampleTable:
    """Forward samples as an index matrix, one column per variable."""
    variables: tuple
    indices: np.ndarray = field(repr=False)

    def __len__(self):
        return self.indices.shape[0]

    def column(self, variable_id):
        return self.indices[:, self.variables.index(variable_id)]

    def assignments(self, net):
        return [net.decode(dict(zip(self.variables, row))) for row in self.indices.tolist()]

    def lines(self, net):
        labels = [net.variable(v).labels for v in self.variables]
        for row in self.indices.tolist():
            yield '\t'.join(f"{v}={labels[j][i]}" for j, (v, i) in enumerate(zip(self.variables, row)))


def forward_sample_indices(net, seed, n):
    """
    Ancestral sampling in topological order with numpy's PCG64 generator.

    The same (network, seed, n) always yields the same matrix. Zero-probability
    labels are never drawn, even when a row sums to slightly less than 1.
    """
    if n < 1:
        raise ValueError(f"Sample count must be >= 1, got {n}.")
    order = topological_order(net)
    rng = np.random.default_rng(seed)
    columns = {}
    for variable_id in order:
        cpt = net.cpt(variable_id)
        if cpt.parents:
            dims = tuple(net.card(p) for p in cpt.parents)
            row_index = np.ravel_multi_index([columns[p] for p in cpt.parents], dims)
        else:
            row_index = np.zeros(n, dtype=np.intp)
        cumulative = np.cumsum(cpt.rows, axis=1)
        cumulative = cumulative / cumulative[:, -1:]
        draws = rng.random(n)
        columns[variable_id] = (draws[:, None] >= cumulative[row_index]).sum(axis=1)
    matrix = np.column_stack([columns[v] for v in order])
    return SampleTable(variables=tuple(order), indices=matrix)


def forward_sample(net, seed, n):
    return forward_sample_indices(net, seed, n).assignments(net)


def marginal_frequencies(samples, variable_id, card):
    counts = np.bincount(samples.column(variable_id), minlength=card)
    return counts / counts.sum()

"""
Factor algebra over categorical variables.

A Factor's ``values`` array has one axis per scope variable, in scope order,
so its flattened C-order layout matches the CPT row convention (last variable
fastest). An empty scope holds a 0-d scalar.
"""

from dataclasses import dataclass, field
from functools import reduce as _fold

import numpy as np

from .exceptions import DomainMismatchError, EvidenceError, ScopeError


@dataclass(frozen=True, eq=False)
class Factor:
    scope: tuple
    domains: tuple
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        scope = tuple(self.scope)
        domains = tuple(tuple(d) for d in self.domains)
        values = np.asarray(self.values, dtype=np.float64)
        if len(scope) != len(domains):
            raise ScopeError(f"Scope {scope} and domains disagree in length.")
        if len(set(scope)) != len(scope):
            raise ScopeError(f"Duplicate variable in scope {scope}.")
        cards = tuple(len(d) for d in domains)
        if values.size != int(np.prod(cards, dtype=np.int64)):
            raise ScopeError(f"Factor over {scope} needs {cards} entries, got {values.shape}.")
        values = values.reshape(cards)
        if (values < 0).any():
            raise ValueError(f"Factor over {scope} has negative entries.")
        object.__setattr__(self, 'scope', scope)
        object.__setattr__(self, 'domains', domains)
        object.__setattr__(self, 'values', values)

    @property
    def cards(self):
        return self.values.shape

    def total(self):
        return float(self.values.sum())

    def domain_of(self, variable_id):
        return self.domains[self.scope.index(variable_id)]

    def normalized(self):
        mass = self.total()
        return Factor(self.scope, self.domains, self.values / mass)


def unit_factor():
    return Factor((), (), np.array(1.0))


def factor_from_cpt(net, child):
    cpt = net.cpt(child)
    scope = cpt.parents + (child,)
    domains = tuple(net.variable(v).labels for v in scope)
    return Factor(scope, domains, net.table(child))


def _aligned(factor, scope):
    """factor.values with axes permuted into ``scope`` order and size-1 axes for absent variables."""
    present = [v for v in scope if v in factor.scope]
    values = np.transpose(factor.values, [factor.scope.index(v) for v in present])
    shape = [factor.cards[factor.scope.index(v)] if v in factor.scope else 1 for v in scope]
    return values.reshape(shape)


def factor_product(f1, f2):
    for variable_id in set(f1.scope) & set(f2.scope):
        if f1.domain_of(variable_id) != f2.domain_of(variable_id):
            raise DomainMismatchError(
                f"'{variable_id}' has domain {list(f1.domain_of(variable_id))} in one factor "
                f"and {list(f2.domain_of(variable_id))} in the other."
            )
    extra = tuple(v for v in f2.scope if v not in f1.scope)
    scope = f1.scope + extra
    domains = f1.domains + tuple(f2.domain_of(v) for v in extra)
    return Factor(scope, domains, _aligned(f1, scope) * _aligned(f2, scope))


def product_of(factors):
    return _fold(factor_product, factors, unit_factor())


def factor_marginalize(f, variable_id):
    if variable_id not in f.scope:
        raise ScopeError(f"'{variable_id}' is not in the factor scope {f.scope}.")
    axis = f.scope.index(variable_id)
    return Factor(
        f.scope[:axis] + f.scope[axis + 1:],
        f.domains[:axis] + f.domains[axis + 1:],
        f.values.sum(axis=axis),
    )


def factor_reduce(f, evidence):
    """Slice ``f`` to the entries consistent with ``evidence`` ({variable: label})."""
    values = f.values
    scope, domains = [], []
    index = []
    for variable_id, domain in zip(f.scope, f.domains):
        if variable_id in evidence:
            label = evidence[variable_id]
            if label not in domain:
                raise EvidenceError(
                    f"Label '{label}' is not in the domain of '{variable_id}' {list(domain)}."
                )
            index.append(domain.index(label))
        else:
            index.append(slice(None))
            scope.append(variable_id)
            domains.append(domain)
    return Factor(tuple(scope), tuple(domains), values[tuple(index)])

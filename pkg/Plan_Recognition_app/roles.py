import logging

from .exceptions import UntaggedVariableError
from .network import Role, TimeIndex, Violation
from .utils import get_planrec_setting

logger = logging.getLogger(__name__)

# MentalState and Plan are atemporal: after the t0 context, before execution.
TIME_RANK = {
    TimeIndex.T0: 0,
    TimeIndex.ATEMPORAL: 1,
    TimeIndex.M0: 2,
    TimeIndex.M1: 3,
    TimeIndex.T1: 4,
    TimeIndex.T2: 5,
}


class RoleRule:
    """
    A structural rule over one edge (parent -> child) of a tagged network.

    Subclasses either restrict the parent roles of a set of child roles, or
    override ``check`` outright.
    """
    name = ''
    description = ''
    child_roles = frozenset()
    parent_roles = frozenset()

    def applies_to(self, parent, child):
        return child.role in self.child_roles

    def check(self, parent, child):
        if not self.applies_to(parent, child):
            return True
        return parent.role in self.parent_roles

    def violation(self, parent, child):
        return Violation(
            rule=self.name,
            variable=child.id,
            message=(
                f"Edge '{parent.id}' ({parent.role}, {parent.time}) -> "
                f"'{child.id}' ({child.role}, {child.time}) breaks {self.name}: {self.description}"
            ),
            edge=(parent.id, child.id),
        )


class ContextClosure(RoleRule):
    """
    Context variables only depend on other context variables.
    """
    name = 'R1'
    description = 'Context variables may only have Context parents.'
    child_roles = frozenset({Role.CONTEXT})
    parent_roles = frozenset({Role.CONTEXT})


class MentalStateSources(RoleRule):
    name = 'R2'
    description = 'MentalState parents must be Context or MentalState.'
    child_roles = frozenset({Role.MENTAL_STATE})
    parent_roles = frozenset({Role.CONTEXT, Role.MENTAL_STATE})


class PlanSources(RoleRule):
    name = 'R3'
    description = 'Plan parents must be MentalState, Context or Plan.'
    child_roles = frozenset({Role.PLAN})
    parent_roles = frozenset({Role.MENTAL_STATE, Role.CONTEXT, Role.PLAN})


class SufficientActivity(RoleRule):
    """
    Activity (and the communication acts grouped with it) is fully specified
    by the plan: nothing outside the plan and earlier actions may feed it.
    """
    name = 'R4'
    description = 'Activity and Communication parents must be Plan, Activity or Communication.'
    child_roles = frozenset({Role.ACTIVITY, Role.COMMUNICATION})
    parent_roles = frozenset({Role.PLAN, Role.ACTIVITY, Role.COMMUNICATION})


class EffectSources(RoleRule):
    name = 'R5'
    description = 'Effect parents must be Context, Activity or Effect.'
    child_roles = frozenset({Role.EFFECT})
    parent_roles = frozenset({Role.CONTEXT, Role.ACTIVITY, Role.EFFECT})


class ForwardInTime(RoleRule):
    """
    Links never point backward in time.
    """
    name = 'R6'
    description = 'No edge may run from a later time tag to a strictly earlier one.'

    def applies_to(self, parent, child):
        return True

    def check(self, parent, child):
        return TIME_RANK[TimeIndex(parent.time)] <= TIME_RANK[TimeIndex(child.time)]


ROLE_RULES = {rule.name: rule for rule in (
    ContextClosure(), MentalStateSources(), PlanSources(),
    SufficientActivity(), EffectSources(), ForwardInTime(),
)}


def enabled_rules(names=None):
    """Rule objects for ``names``, defaulting to the ROLE_RULES setting."""
    if names is None:
        names = get_planrec_setting('ROLE_RULES')
    rules = []
    for name in names:
        name = name.strip()
        if name not in ROLE_RULES:
            raise ValueError(f"Unknown role rule '{name}'; expected one of {sorted(ROLE_RULES)}.")
        rules.append(ROLE_RULES[name])
    return rules


def validate_roles(net, rules=None):
    """
    Check every edge of ``net`` against the role rules.

    ``rules`` is a sequence of RoleRule objects or rule names; by default the
    rules enabled in settings are used. Edges from unknown parents are left to
    validate_network.
    """
    untagged = [v.id for v in net.variables if v.role is None or v.time is None]
    if untagged:
        raise UntaggedVariableError(f"Variables without a role or time tag: {untagged}.")
    if rules is None or all(isinstance(rule, str) for rule in rules):
        rules = enabled_rules(rules)

    violations = []
    for parent_id, child_id in sorted(net.graph().edges()):
        parent, child = net.variable(parent_id), net.variable(child_id)
        for rule in rules:
            if not rule.check(parent, child):
                violations.append(rule.violation(parent, child))
    if violations:
        logger.debug(f"{len(violations)} role violations in network '{net.name}'")
    return violations

"""
The traffic-monitoring network: one car on a three-lane highway, observed at
t0, planning a two-stage maneuver (m0, m1) and observed again at t1 and t2.

Every CPT comes from a rule generator driven by TrafficParams, so the whole
network is reproducible from a parameters file. ``traffic_mini`` builds the
same topology with folded domains for the enumeration oracle.
"""

import itertools
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .exceptions import ParamsError, PlanProfileError
from .network import Network, Role, TimeIndex
from .scenarios import Scenario
from .serializers import TrafficParamsSerializer
from .utils import get_planrec_setting, load_json_document

logger = logging.getLogger(__name__)

LANES = ('off', 'right', 'middle', 'left')
Y_POSITIONS = ('p1', 'p2', 'p3', 'p4')
SPEEDS = ('s1', 's2', 's3', 's4')
EXITS = ('e1', 'e2', 'e3', 'e4')
BOOLEAN = ('false', 'true')
AT_TARGET = ('too-slow', 'at-target', 'too-fast')
MANEUVERS = ('stay', 'left1', 'right1', 'left2', 'right2', 'enter', 'exit', 'pass')
ACC_MANEUVERS = ('accel', 'maintain', 'decel')
SPEC_PASS = ('pass-left', 'pass-right', 'blocked', 'none')
SIGNALS = ('Left', 'Right', 'Off')
LATERAL_ACTIONS = ('left', 'same', 'right')
FORWARD_ACTIONS = ('accel', 'maintain', 'decel')

CLEARANCES = ('left', 'right', 'front', 'back', 'frontL', 'frontR', 'backL', 'backR')
MINI_PINNED_CLEARANCES = ('back', 'frontR', 'backL', 'backR')

FEASIBLE_LANES = {
    'stay': frozenset(LANES),
    'left1': frozenset({'right', 'middle'}),
    'left2': frozenset({'right'}),
    'right1': frozenset({'left', 'middle'}),
    'right2': frozenset({'left'}),
    'enter': frozenset({'off'}),
    'exit': frozenset({'right', 'middle'}),
    'pass': frozenset({'right', 'middle', 'left'}),
}

# Point-mass lateral profiles (m0, m1); pass is handled by spec pass.
MANEUVER_ACTIONS = {
    'stay': ('same', 'same'),
    'left1': ('left', 'same'),
    'right1': ('right', 'same'),
    'left2': ('left', 'left'),
    'right2': ('right', 'right'),
    'enter': ('left', 'same'),
    'exit': ('right', 'right'),
}

SIGNAL_FOR_ACTION = {'left': 'Left', 'right': 'Right', 'same': 'Off'}

PASS_ONE_SIDE_BLOCKED = 0.05


def clr(name, time='t0'):
    return f"{name} clr {time}"


X0, Y0, SPEED0 = 'x position t0', 'y position t0', 'y speed t0'
EXIT_POSITION, TARGET_SPEED = 'exit position', 'target y speed'
AT_EXIT, AT_TARGET_VAR = 'at exit?', 'at target?'
GEN, ACC, SPEC = 'gen maneuver', 'acc maneuver', 'spec pass'


@dataclass(frozen=True)
class TrafficParams:
    clearance_prior: float = 0.7
    lane_prior: tuple = (0.1, 0.3, 0.3, 0.3)
    y_position_prior: tuple = (0.25, 0.25, 0.25, 0.25)
    target_speed_prior: tuple = (0.05, 0.20, 0.55, 0.20)
    exit_prior: tuple = (0.25, 0.25, 0.25, 0.25)
    speed_given_lane: tuple = (
        (0.60, 0.30, 0.08, 0.02),
        (0.25, 0.50, 0.20, 0.05),
        (0.05, 0.30, 0.50, 0.15),
        (0.02, 0.08, 0.40, 0.50),
    )
    plan_noise: float = 0.01
    exit_commit: float = 0.85
    slow_blocked_pass: float = 0.60
    slow_blocked_right: float = 0.15
    slow_clear_stay: float = 0.85
    at_target_stay: float = 0.80
    at_target_right: float = 0.10
    too_fast_stay: float = 0.75
    too_fast_right: float = 0.15
    pass_left_bias: float = 0.85
    pass_blocked_noise: float = 0.02
    pass_completion_delay: float = 0.05
    acc_given_at_target: tuple = (
        (0.90, 0.09, 0.01),
        (0.05, 0.90, 0.05),
        (0.01, 0.09, 0.90),
    )
    signal_compliance: float = 0.60
    signal_consistency: float = 0.90
    signal_error: float = 0.02
    accel_effect_noise: float = 0.05
    advance_probability: tuple = (0.25, 0.50, 0.75, 1.0)

    def __post_init__(self):
        for name in ('lane_prior', 'y_position_prior', 'target_speed_prior', 'exit_prior',
                     'advance_probability'):
            object.__setattr__(self, name, tuple(float(x) for x in getattr(self, name)))
        for name in ('speed_given_lane', 'acc_given_at_target'):
            object.__setattr__(self, name, tuple(tuple(float(x) for x in row) for row in getattr(self, name)))
        self._validate()

    def _validate(self):
        for name, size in (('lane_prior', 4), ('y_position_prior', 4),
                           ('target_speed_prior', 4), ('exit_prior', 4)):
            _check_vector(name, getattr(self, name), size)
        _check_table('speed_given_lane', self.speed_given_lane, 4, 4)
        _check_table('acc_given_at_target', self.acc_given_at_target, 3, 3)
        if len(self.advance_probability) != 4 or not all(0 <= p <= 1 for p in self.advance_probability):
            raise ParamsError(f"advance_probability must hold 4 values in [0, 1], got {self.advance_probability}.")
        if not 0 < self.plan_noise <= 0.1:
            raise ParamsError(f"plan_noise must be in (0, 0.1], got {self.plan_noise}.")
        if not 0 <= self.pass_completion_delay <= 0.5:
            raise ParamsError(f"pass_completion_delay must be in [0, 0.5], got {self.pass_completion_delay}.")
        for name in ('clearance_prior', 'signal_compliance', 'signal_consistency', 'exit_commit',
                     'slow_clear_stay', 'at_target_stay', 'too_fast_stay'):
            value = getattr(self, name)
            if not 0 < value < 1:
                raise ParamsError(f"{name} must be in (0, 1), got {value}.")
        for name in ('accel_effect_noise', 'signal_error', 'pass_blocked_noise'):
            value = getattr(self, name)
            if not 0 <= value < 0.5:
                raise ParamsError(f"{name} must be in [0, 0.5), got {value}.")
        if not 0 <= self.pass_left_bias <= 1 - self.pass_blocked_noise:
            raise ParamsError(
                f"pass_left_bias must be in [0, {1 - self.pass_blocked_noise}], got {self.pass_left_bias}."
            )
        if 2 * self.pass_blocked_noise + PASS_ONE_SIDE_BLOCKED > 1:
            raise ParamsError("pass_blocked_noise leaves no mass for an open passing side.")
        if self.signal_compliance + self.signal_error > 1:
            raise ParamsError("signal_compliance + signal_error must not exceed 1.")
        if self.signal_consistency + self.signal_error > 1:
            raise ParamsError("signal_consistency + signal_error must not exceed 1.")
        for stay, right, label in ((self.slow_blocked_pass, self.slow_blocked_right, 'slow_blocked'),
                                   (self.at_target_stay, self.at_target_right, 'at_target'),
                                   (self.too_fast_stay, self.too_fast_right, 'too_fast')):
            if stay < 0 or right < 0 or stay + right > 1:
                raise ParamsError(f"{label} rule masses must be >= 0 and sum to at most 1.")

    @classmethod
    def from_dict(cls, data):
        serializer = TrafficParamsSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return cls(**serializer.validated_data)

    @classmethod
    def load(cls, path):
        params = cls.from_dict(load_json_document(path))
        logger.info(f"Loaded traffic parameters from {path}")
        return params

    def as_dict(self):
        return {f.name: _plain(getattr(self, f.name)) for f in fields(self)}

    def replace(self, **changes):
        return TrafficParams(**{**asdict(self), **changes})


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(x) for x in value]
    return value


def _check_vector(name, vector, size):
    if len(vector) != size:
        raise ParamsError(f"{name} must have {size} entries, got {len(vector)}.")
    if any(x < 0 for x in vector) or abs(sum(vector) - 1.0) > 1e-9:
        raise ParamsError(f"{name} must be a probability vector, got {list(vector)}.")


def _check_table(name, table, rows, width):
    if len(table) != rows:
        raise ParamsError(f"{name} must have {rows} rows, got {len(table)}.")
    for index, row in enumerate(table):
        _check_vector(f"{name}[{index}]", row, width)


def shipped_params():
    """Parameters from the PARAMS_FILE setting (the calibrated defaults.json)."""
    return TrafficParams.load(Path(get_planrec_setting('PARAMS_FILE')))


# Rule generators


def lane_transition(x, act):
    index = LANES.index(x)
    if act == 'left':
        index = min(index + 1, len(LANES) - 1)
    elif act == 'right':
        index = max(index - 1, 0)
    elif act != 'same':
        raise ValueError(f"Unknown lateral action '{act}'.")
    return LANES[index]


def is_feasible(maneuver, lane):
    return lane in FEASIBLE_LANES[maneuver]


def plan_action_profile(gen, spec, delay=0.05):
    """
    Lateral action distributions for stages m0 and m1, as dicts over
    LATERAL_ACTIONS. Raises PlanProfileError when spec pass contradicts gen.
    """
    if (gen == 'pass') == (spec == 'none'):
        raise PlanProfileError(f"Maneuver '{gen}' cannot have spec pass '{spec}'.")
    if gen != 'pass':
        first, second = MANEUVER_ACTIONS[gen]
        return _point(first), _point(second)
    if spec == 'blocked':
        return _point('same'), _point('same')
    shift, back = ('left', 'right') if spec == 'pass-left' else ('right', 'left')
    second = {a: 0.0 for a in LATERAL_ACTIONS}
    second[back] = 1.0 - delay
    second['same'] += delay
    return _point(shift), second


def _point(label, labels=LATERAL_ACTIONS):
    return {x: 1.0 if x == label else 0.0 for x in labels}


def _lenient_profile(gen, spec, delay):
    # Rows for contradictory (gen, spec) pairs carry zero mass but still need a valid distribution.
    if gen != 'pass':
        spec = 'none'
    elif spec == 'none':
        return _point('same'), _point('same')
    return plan_action_profile(gen, spec, delay)


def intended_signals(gen, spec):
    """The signal the driver means to show at m0 and m1."""
    first, second = _lenient_profile(gen, spec, 0.0)
    return (SIGNAL_FOR_ACTION[max(first, key=first.get)],
            SIGNAL_FOR_ACTION[max(second, key=second.get)])


def gen_maneuver_rule(at_target, at_exit, x0, clearances, params=None):
    """
    Distribution over MANEUVERS for one parent row.

    ``clearances`` maps clearance names (left, right, front, back, backL,
    backR) to booleans; missing names count as clear. The first matching rule
    assigns its masses, lane changes into a blocked lane hand their mass to
    stay, and every other feasible maneuver receives plan_noise before the
    rule masses are rescaled to fill the row. No rule shifts left, so the
    left, back and backL clearances never change a row.
    """
    p = params or TrafficParams()
    at_exit = at_exit in (True, 'true')
    clear = {name: clearances.get(name, True) in (True, 'true') for name in CLEARANCES}
    right_open = clear['right'] and clear['backR']
    masses = {}

    def assign(maneuver, mass, allowed=True):
        if not (allowed and is_feasible(maneuver, x0)):
            maneuver = 'stay'
        masses[maneuver] = masses.get(maneuver, 0.0) + mass

    if at_exit and is_feasible('exit', x0):
        assign('exit', p.exit_commit, right_open)
    elif at_target == 'too-slow' and not clear['front']:
        assign('pass', p.slow_blocked_pass)
        assign('right1', p.slow_blocked_right, right_open)
        assign('stay', 1.0 - p.slow_blocked_pass - p.slow_blocked_right)
    elif at_target == 'too-slow':
        assign('stay', p.slow_clear_stay)
    elif at_target == 'at-target':
        assign('stay', p.at_target_stay)
        assign('right1', p.at_target_right, right_open)
    else:
        assign('stay', p.too_fast_stay)
        assign('right1', p.too_fast_right, right_open)

    masses = {m: mass for m, mass in masses.items() if mass > 0}
    smoothed = [m for m in MANEUVERS if is_feasible(m, x0) and m not in masses]
    scale = (1.0 - p.plan_noise * len(smoothed)) / sum(masses.values())
    distribution = {m: 0.0 for m in MANEUVERS}
    for maneuver in smoothed:
        distribution[maneuver] = p.plan_noise
    for maneuver, mass in masses.items():
        distribution[maneuver] = mass * scale
    return distribution


def spec_pass_rule(gen, left_clr, frontL_clr, right_clr, frontR_clr, params=None):
    p = params or TrafficParams()
    if gen != 'pass':
        return _point('none', SPEC_PASS)
    left_open = _truthy(left_clr) and _truthy(frontL_clr)
    right_open = _truthy(right_clr) and _truthy(frontR_clr)
    noise = p.pass_blocked_noise
    if left_open and right_open:
        shares = (p.pass_left_bias, 1.0 - p.pass_left_bias - noise, noise)
    elif left_open:
        shares = (1.0 - PASS_ONE_SIDE_BLOCKED - noise, noise, PASS_ONE_SIDE_BLOCKED)
    elif right_open:
        shares = (noise, 1.0 - PASS_ONE_SIDE_BLOCKED - noise, PASS_ONE_SIDE_BLOCKED)
    else:
        shares = (noise, noise, 1.0 - 2 * noise)
    return dict(zip(SPEC_PASS, shares + (0.0,)))


def _truthy(value):
    return value in (True, 'true')


def at_exit_rule(y_position, exit_position, y_labels=Y_POSITIONS, exit_labels=EXITS):
    """True only when the car is at the position immediately before its exit."""
    at_exit = y_labels.index(y_position) == exit_labels.index(exit_position)
    return _point('true' if at_exit else 'false', BOOLEAN)


def at_target_rule(speed, target, speed_labels=SPEEDS):
    difference = speed_labels.index(speed) - speed_labels.index(target)
    label = 'too-slow' if difference < 0 else 'at-target' if difference == 0 else 'too-fast'
    return _point(label, AT_TARGET)


def speed_transition(speed, action, noise, speed_labels=SPEEDS):
    """y speed at the next stage; drift past either end stays put."""
    top = len(speed_labels) - 1
    index = speed_labels.index(speed)
    distribution = [0.0] * len(speed_labels)
    if action == 'maintain':
        moves = ((index, 1.0 - noise), (index - 1, noise / 2), (index + 1, noise / 2))
    elif action == 'accel':
        moves = ((index + 1, 1.0 - noise), (index, noise))
    else:
        moves = ((index - 1, 1.0 - noise), (index, noise))
    for target, mass in moves:
        if not 0 <= target <= top:
            target = index
        distribution[target] += mass
    return dict(zip(speed_labels, distribution))


def position_transition(position, speed, advance, position_labels=Y_POSITIONS, speed_labels=SPEEDS):
    index = position_labels.index(position)
    distribution = [0.0] * len(position_labels)
    if index == len(position_labels) - 1:
        distribution[index] = 1.0
    else:
        step = advance[speed_labels.index(speed)]
        distribution[index + 1] = step
        distribution[index] = 1.0 - step
    return dict(zip(position_labels, distribution))


def signal_m0_rule(intended, params=None):
    p = params or TrafficParams()
    if intended == 'Off':
        distribution = {s: p.signal_error for s in SIGNALS}
        distribution['Off'] = 1.0 - 2 * p.signal_error
        return distribution
    wrong = 'Right' if intended == 'Left' else 'Left'
    return {intended: p.signal_compliance, wrong: p.signal_error,
            'Off': 1.0 - p.signal_compliance - p.signal_error}


def signal_m1_rule(intended, shown_m0, params=None):
    """
    Signal at m1 given the intended pair and what was shown at m0. A driver
    who signaled correctly keeps signaling; one who failed to signal tends not
    to start.
    """
    p = params or TrafficParams()
    first, second = intended
    if first != 'Off' and shown_m0 == first:
        return _anchored_signal(second, 'Off', p)
    if first != 'Off' and shown_m0 == 'Off':
        return _anchored_signal('Off', second, p)
    return signal_m0_rule(second, p)


def _anchored_signal(anchor, fallback, p):
    distribution = {s: 0.0 for s in SIGNALS}
    distribution[anchor] = p.signal_consistency
    rest = [s for s in SIGNALS if s != anchor]
    if fallback == anchor:
        for s in rest:
            distribution[s] = (1.0 - p.signal_consistency) / len(rest)
        return distribution
    distribution[fallback] = 1.0 - p.signal_consistency - p.signal_error
    wrong = next(s for s in rest if s != fallback)
    distribution[wrong] = p.signal_error
    return distribution


# Builders


def _cpt_rows(net, parents, rule):
    """Rows for ``rule(assignment) -> {label: p}``, last parent varying fastest."""
    child_rows = []
    for labels in itertools.product(*(net.variable(v).labels for v in parents)):
        child_rows.append(rule(dict(zip(parents, labels))))
    return child_rows


def _set_rule_cpt(net, child, parents, rule):
    labels = net.variable(child).labels
    rows = [[row[label] for label in labels] for row in _cpt_rows(net, parents, rule)]
    net.set_cpt(child, parents, rows)


def _fold(vector):
    return tuple(vector[i] + vector[i + 1] for i in range(0, len(vector), 2))


def _folded_params_tables(p, mini):
    """Value sets and per-bin parameters, folded pairwise for the mini build."""
    if not mini:
        return {
            'y': Y_POSITIONS, 'speed': SPEEDS, 'exit': EXITS,
            'y_prior': p.y_position_prior, 'target_prior': p.target_speed_prior,
            'exit_prior': p.exit_prior, 'speed_given_lane': p.speed_given_lane,
            'advance': p.advance_probability,
        }
    advance = p.advance_probability
    return {
        'y': Y_POSITIONS[:2], 'speed': SPEEDS[:2], 'exit': EXITS[:2],
        'y_prior': _fold(p.y_position_prior), 'target_prior': _fold(p.target_speed_prior),
        'exit_prior': _fold(p.exit_prior),
        'speed_given_lane': tuple(_fold(row) for row in p.speed_given_lane),
        'advance': tuple((advance[i] + advance[i + 1]) / 2 for i in (0, 2)),
    }


def _build(p, *, mini=False):
    tables = _folded_params_tables(p, mini)
    y_labels, speed_labels, exit_labels = tables['y'], tables['speed'], tables['exit']
    clearances = [c for c in CLEARANCES if not (mini and c in MINI_PINNED_CLEARANCES)]
    net = Network(name='traffic-mini' if mini else 'traffic')

    def context(variable_id, labels):
        net.add_variable(variable_id, labels, Role.CONTEXT, TimeIndex.T0, observable=True)

    context(X0, LANES)
    context(Y0, y_labels)
    context(SPEED0, speed_labels)
    for name in clearances:
        context(clr(name), BOOLEAN)
    for variable_id, labels in ((EXIT_POSITION, exit_labels), (TARGET_SPEED, speed_labels),
                                (AT_EXIT, BOOLEAN), (AT_TARGET_VAR, AT_TARGET)):
        net.add_variable(variable_id, labels, Role.MENTAL_STATE, TimeIndex.ATEMPORAL, observable=False)
    for variable_id, labels in ((GEN, MANEUVERS), (ACC, ACC_MANEUVERS), (SPEC, SPEC_PASS)):
        net.add_variable(variable_id, labels, Role.PLAN, TimeIndex.ATEMPORAL, observable=False)
    for stage in ('m0', 'm1'):
        net.add_variable(f"signal {stage}", SIGNALS, Role.COMMUNICATION, stage, observable=True)
        net.add_variable(f"lat act {stage}", LATERAL_ACTIONS, Role.ACTIVITY, stage, observable=False)
        net.add_variable(f"fwd act {stage}", FORWARD_ACTIONS, Role.ACTIVITY, stage, observable=False)
    for time in ('t1', 't2'):
        net.add_variable(f"x position {time}", LANES, Role.EFFECT, time, observable=True)
        net.add_variable(f"y position {time}", y_labels, Role.EFFECT, time, observable=True)
        net.add_variable(f"y speed {time}", speed_labels, Role.EFFECT, time, observable=True)

    # Context
    net.set_cpt(X0, (), [p.lane_prior])
    net.set_cpt(Y0, (), [tables['y_prior']])
    net.set_cpt(SPEED0, (X0,), tables['speed_given_lane'])
    for name in clearances:
        net.set_cpt(clr(name), (), [[1.0 - p.clearance_prior, p.clearance_prior]])

    # Mental state
    net.set_cpt(EXIT_POSITION, (), [tables['exit_prior']])
    net.set_cpt(TARGET_SPEED, (), [tables['target_prior']])
    _set_rule_cpt(net, AT_EXIT, (Y0, EXIT_POSITION),
                  lambda a: at_exit_rule(a[Y0], a[EXIT_POSITION], y_labels, exit_labels))
    _set_rule_cpt(net, AT_TARGET_VAR, (SPEED0, TARGET_SPEED),
                  lambda a: at_target_rule(a[SPEED0], a[TARGET_SPEED], speed_labels))

    # Plan
    net.set_cpt(ACC, (AT_TARGET_VAR,), p.acc_given_at_target)
    gen_clearances = [c for c in ('front', 'back', 'left', 'right', 'backL', 'backR') if c in clearances]
    _set_rule_cpt(
        net, GEN, (AT_TARGET_VAR, AT_EXIT, X0) + tuple(clr(c) for c in gen_clearances),
        lambda a: gen_maneuver_rule(
            a[AT_TARGET_VAR], a[AT_EXIT], a[X0], {c: a[clr(c)] for c in gen_clearances}, p,
        ),
    )
    spec_clearances = [c for c in ('left', 'frontL', 'right', 'frontR') if c in clearances]
    _set_rule_cpt(
        net, SPEC, (GEN,) + tuple(clr(c) for c in spec_clearances),
        lambda a: spec_pass_rule(
            a[GEN], *(a.get(clr(c), 'true') for c in ('left', 'frontL', 'right', 'frontR')), params=p,
        ),
    )

    # Communication and activity
    _set_rule_cpt(net, 'signal m0', (GEN, SPEC),
                  lambda a: signal_m0_rule(intended_signals(a[GEN], a[SPEC])[0], p))
    _set_rule_cpt(net, 'signal m1', (GEN, SPEC, 'signal m0'),
                  lambda a: signal_m1_rule(intended_signals(a[GEN], a[SPEC]), a['signal m0'], p))
    for stage, index in (('m0', 0), ('m1', 1)):
        _set_rule_cpt(net, f"lat act {stage}", (GEN, SPEC),
                      lambda a, i=index: _lenient_profile(a[GEN], a[SPEC], p.pass_completion_delay)[i])
        _set_rule_cpt(net, f"fwd act {stage}", (ACC,), lambda a: _point(a[ACC], FORWARD_ACTIONS))

    # Effects
    for before, after, stage in (('t0', 't1', 'm0'), ('t1', 't2', 'm1')):
        x_before, x_after = f"x position {before}", f"x position {after}"
        speed_before, speed_after = f"y speed {before}", f"y speed {after}"
        y_before, y_after = f"y position {before}", f"y position {after}"
        _set_rule_cpt(net, x_after, (x_before, f"lat act {stage}"),
                      lambda a, xb=x_before, s=stage: _point(lane_transition(a[xb], a[f"lat act {s}"]), LANES))
        _set_rule_cpt(net, speed_after, (speed_before, f"fwd act {stage}"),
                      lambda a, sb=speed_before, s=stage: speed_transition(
                          a[sb], a[f"fwd act {s}"], p.accel_effect_noise, speed_labels))
        _set_rule_cpt(net, y_after, (y_before, speed_before),
                      lambda a, yb=y_before, sb=speed_before: position_transition(
                          a[yb], a[sb], tables['advance'], y_labels, speed_labels))

    logger.info(f"Built network '{net.name}' with {len(net)} variables")
    return net


def build_traffic_network(params=None):
    """The full 30-variable traffic-monitoring network."""
    return _build(params or TrafficParams())


def traffic_mini(params=None):
    """
    Same topology with two y positions, speeds and exits, and the back, frontR,
    backL and backR clearances pinned clear (26 variables).
    """
    return _build(params or TrafficParams(), mini=True)


def paper_scenarios():
    targets = (GEN, 'x position t2')
    a = {clr('front'): 'false', X0: 'middle', 'x position t1': 'right'}
    b = {**a, clr('frontL'): 'false'}
    c = {**b, **{clr(name): 'true' for name in CLEARANCES if name not in ('front', 'frontL')}}
    return [Scenario('A', a, targets), Scenario('B', b, targets), Scenario('C', c, targets)]


def paper_reference():
    """Published posteriors of the worked example, per scenario and target."""
    return {
        'A': {GEN: {'right1': 0.64, 'pass': 0.35}, 'x position t2': {'right': 0.65, 'middle': 0.34}},
        'B': {GEN: {'pass': 0.53, 'right1': 0.46}, 'x position t2': {'right': 0.51, 'middle': 0.48}},
        'C': {GEN: {'pass': 0.61, 'right1': 0.39}},
    }


def infeasible_maneuvers(lane):
    return [m for m in MANEUVERS if not is_feasible(m, lane)]


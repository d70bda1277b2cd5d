from rest_framework import serializers

from .network import Cpt, Network, Role, TimeIndex


class VariableSerializer(serializers.Serializer):
    id = serializers.CharField()
    labels = serializers.ListField(child=serializers.CharField(), min_length=2)
    role = serializers.ChoiceField(choices=Role.choices, allow_null=True, required=False, default=None)
    time = serializers.ChoiceField(choices=TimeIndex.choices, allow_null=True, required=False, default=None)
    observable = serializers.BooleanField(default=True)

    def validate_labels(self, value):
        if len(set(value)) != len(value):
            raise serializers.ValidationError(f"Labels must be unique, got {value}.")
        return value


class CptSerializer(serializers.Serializer):
    child = serializers.CharField()
    parents = serializers.ListField(child=serializers.CharField(), allow_empty=True)
    rows = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField(), min_length=1),
        min_length=1,
    )

    def validate_rows(self, value):
        widths = {len(row) for row in value}
        if len(widths) != 1:
            raise serializers.ValidationError(f"All rows must have the same width, got widths {sorted(widths)}.")
        return value


class NetworkDocumentSerializer(serializers.Serializer):
    """
    The network JSON document: ``{"variables": [...], "cpts": [...]}``.

    Only malformed documents are rejected here. Structural problems (cycles,
    bad row sums, missing or dangling CPTs) load as-is so validate_network can
    report them.
    """
    variables = VariableSerializer(many=True)
    cpts = CptSerializer(many=True, required=False, default=list)

    def validate_variables(self, value):
        ids = [v['id'] for v in value]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise serializers.ValidationError(f"Duplicate variable ids: {duplicates}.")
        return value

    def validate_cpts(self, value):
        children = [c['child'] for c in value]
        duplicates = sorted({c for c in children if children.count(c) > 1})
        if duplicates:
            raise serializers.ValidationError(f"More than one CPT for: {duplicates}.")
        return value

    def create(self, validated_data):
        net = Network(name=self.context.get('name', ''))
        for variable in validated_data['variables']:
            net.add_variable(
                variable['id'], variable['labels'],
                role=variable['role'], time=variable['time'], observable=variable['observable'],
            )
        for variable_id in net.variable_ids:
            net.remove_cpt(variable_id)
        for cpt in validated_data['cpts']:
            net.install_cpt(Cpt(child=cpt['child'], parents=tuple(cpt['parents']), rows=cpt['rows']))
        return net

    def to_representation(self, instance):
        order = {v: i for i, v in enumerate(instance.variable_ids)}
        cpts = sorted(instance.cpts, key=lambda c: order.get(c.child, len(order)))
        return {
            'variables': VariableSerializer(instance.variables, many=True).data,
            'cpts': CptSerializer(cpts, many=True).data,
        }


def network_from_document(document, name=''):
    serializer = NetworkDocumentSerializer(data=document, context={'name': name})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def network_to_document(net):
    return NetworkDocumentSerializer(net).data


class ScenarioSerializer(serializers.Serializer):
    name = serializers.CharField()
    evidence = serializers.DictField(child=serializers.CharField(), default=dict)
    targets = serializers.ListField(child=serializers.CharField(), default=list)


class TrafficParamsSerializer(serializers.Serializer):
    """
    A traffic parameters file. Every field is optional; omitted fields keep
    their built-in defaults. Range checks happen in TrafficParams itself.
    """
    clearance_prior = serializers.FloatField(required=False)
    lane_prior = serializers.ListField(child=serializers.FloatField(), required=False)
    y_position_prior = serializers.ListField(child=serializers.FloatField(), required=False)
    target_speed_prior = serializers.ListField(child=serializers.FloatField(), required=False)
    exit_prior = serializers.ListField(child=serializers.FloatField(), required=False)
    speed_given_lane = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()), required=False,
    )
    plan_noise = serializers.FloatField(required=False)
    exit_commit = serializers.FloatField(required=False)
    slow_blocked_pass = serializers.FloatField(required=False)
    slow_blocked_right = serializers.FloatField(required=False)
    slow_clear_stay = serializers.FloatField(required=False)
    at_target_stay = serializers.FloatField(required=False)
    at_target_right = serializers.FloatField(required=False)
    too_fast_stay = serializers.FloatField(required=False)
    too_fast_right = serializers.FloatField(required=False)
    pass_left_bias = serializers.FloatField(required=False)
    pass_blocked_noise = serializers.FloatField(required=False)
    pass_completion_delay = serializers.FloatField(required=False)
    acc_given_at_target = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()), required=False,
    )
    signal_compliance = serializers.FloatField(required=False)
    signal_consistency = serializers.FloatField(required=False)
    signal_error = serializers.FloatField(required=False)
    accel_effect_noise = serializers.FloatField(required=False)
    advance_probability = serializers.ListField(child=serializers.FloatField(), required=False)

    def validate(self, attrs):
        unknown = sorted(set(self.initial_data) - set(self.fields))
        if unknown:
            raise serializers.ValidationError(f"Unknown parameters: {unknown}.")
        return attrs

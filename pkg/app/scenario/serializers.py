"""
Serializers for scenario documents and figure presets.
"""
import math

from django.conf import settings
from django.utils.translation import gettext as _
from rest_framework import serializers

from core.types import GridSpec
from epidemic.params import SirsParams, SisParams
from epidemic.registry import MODELS
from scenario.scenarios import OUTPUT_KINDS, Scenario


def finite(value):
    if not math.isfinite(value):
        raise serializers.ValidationError(_('Must be a finite number.'))


def positive(value):
    finite(value)
    if value <= 0:
        raise serializers.ValidationError(_('Must be positive.'))


def fractional_order(value):
    finite(value)
    if not 0 < value <= 1:
        raise serializers.ValidationError(_('Fractional order must lie in (0, 1].'))


class StrictSerializer(serializers.Serializer):
    """Serializer that rejects keys it does not declare."""

    def to_internal_value(self, data):
        if isinstance(data, dict):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError(
                    {key: [_('Unknown field.')] for key in unknown}
                )
        return super().to_internal_value(data)


class GridSerializer(StrictSerializer):
    """Serializer for the uniform time grid."""
    step = serializers.FloatField(validators=[positive])
    t_end = serializers.FloatField(validators=[positive])

    def validate(self, attrs):
        if attrs['t_end'] < attrs['step']:
            raise serializers.ValidationError(
                {'t_end': [_('Must be at least one step.')]}
            )
        return attrs

    def create(self, validated_data):
        return GridSpec(**validated_data)


class SisParamsSerializer(StrictSerializer):
    """Serializer for SIS rates (alpha is bound per run)."""
    recruitment = serializers.FloatField(validators=[positive])
    infection = serializers.FloatField(validators=[positive])
    natural_death = serializers.FloatField(validators=[positive])
    return_rate = serializers.FloatField(validators=[positive])
    disease_death = serializers.FloatField(validators=[positive])

    def create(self, validated_data):
        return SisParams(**validated_data)


class SirsParamsSerializer(StrictSerializer):
    """Serializer for SIRS rates (alpha is bound per run)."""
    recruitment = serializers.FloatField(validators=[positive])
    infection = serializers.FloatField(validators=[positive])
    natural_death = serializers.FloatField(validators=[positive])
    recovery = serializers.FloatField(validators=[positive])
    disease_death = serializers.FloatField(validators=[positive])
    immunity_loss = serializers.FloatField(validators=[positive])

    def create(self, validated_data):
        return SirsParams(**validated_data)


PARAMS_SERIALIZERS = {
    SisParams: SisParamsSerializer,
    SirsParams: SirsParamsSerializer,
}


class ScenarioSerializer(StrictSerializer):
    """Serializer for a scenario document."""
    model = serializers.ChoiceField(choices=sorted(MODELS))
    params = serializers.DictField()
    alphas = serializers.ListField(
        child=serializers.FloatField(validators=[fractional_order]),
        allow_empty=False,
    )
    initial_state = serializers.ListField(
        child=serializers.FloatField(validators=[finite]),
        allow_empty=False,
    )
    grid = GridSerializer()
    corrector_iterations = serializers.IntegerField(
        min_value=1,
        max_value=settings.FRACDYN['MAX_CORRECTOR_ITERATIONS'],
        default=settings.FRACDYN['CORRECTOR_ITERATIONS'],
    )
    clamp_nonnegative = serializers.BooleanField(default=False)
    outputs = serializers.ListField(
        child=serializers.ChoiceField(choices=OUTPUT_KINDS),
        default=lambda: ['csv'],
    )

    def validate(self, attrs):
        spec = MODELS[attrs['model']]
        params = PARAMS_SERIALIZERS[spec.params_class](data=attrs['params'])
        if not params.is_valid():
            raise serializers.ValidationError({'params': params.errors})
        attrs['params'] = params.save()

        if len(attrs['initial_state']) != spec.dimension:
            raise serializers.ValidationError({
                'initial_state': [
                    _('Model %(model)s needs %(dimension)d components, got %(given)d.') % {
                        'model': spec.name,
                        'dimension': spec.dimension,
                        'given': len(attrs['initial_state']),
                    }
                ]
            })
        return attrs

    def create(self, validated_data):
        return Scenario(
            model=validated_data['model'],
            params=validated_data['params'],
            alphas=tuple(validated_data['alphas']),
            initial_state=tuple(validated_data['initial_state']),
            grid=GridSerializer().create(validated_data['grid']),
            corrector_iterations=validated_data['corrector_iterations'],
            clamp_nonnegative=validated_data['clamp_nonnegative'],
            outputs=tuple(validated_data['outputs']),
        )


class ScenarioDocumentSerializer(serializers.Serializer):
    """Serializer turning a Scenario back into its JSON document."""
    model = serializers.CharField()
    params = serializers.SerializerMethodField()
    alphas = serializers.ListField(child=serializers.FloatField())
    initial_state = serializers.ListField(child=serializers.FloatField())
    grid = serializers.SerializerMethodField()
    corrector_iterations = serializers.IntegerField()
    clamp_nonnegative = serializers.BooleanField()
    outputs = serializers.ListField(child=serializers.CharField())

    def get_params(self, obj):
        return obj.params.raw()

    def get_grid(self, obj):
        return {'step': obj.grid.step, 't_end': obj.grid.t_end}


class FigurePresetSerializer(serializers.Serializer):
    """Serializer for a figure preset."""
    figure_id = serializers.CharField()
    description = serializers.CharField()
    content = serializers.CharField()
    component = serializers.CharField(allow_null=True)
    tolerance = serializers.FloatField()
    scenario = ScenarioDocumentSerializer()

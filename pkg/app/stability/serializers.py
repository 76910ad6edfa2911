"""
Serializers for stability reports.
"""
from rest_framework import serializers


class VerdictSerializer(serializers.Serializer):
    """Serializer for a single stability verdict."""
    classification = serializers.CharField(source='classification.value')
    rule_fired = serializers.CharField()
    margin = serializers.FloatField(allow_null=True)
    discriminant = serializers.FloatField(allow_null=True)
    cross_check = serializers.SerializerMethodField()

    def get_cross_check(self, obj):
        if obj.cross_check is None:
            return None
        return VerdictSerializer(obj.cross_check).data


class EquilibriumAnalysisSerializer(serializers.Serializer):
    """Serializer for the analysis of one equilibrium."""
    kind = serializers.CharField()
    point = serializers.ListField(child=serializers.FloatField())
    residual = serializers.FloatField()
    jacobian = serializers.SerializerMethodField()
    char_poly = serializers.ListField(
        source='char_poly.coefficients',
        child=serializers.FloatField(),
    )
    eigenvalues = serializers.SerializerMethodField()
    verdicts = serializers.SerializerMethodField()
    verdict = VerdictSerializer()
    agreement = serializers.BooleanField()

    def get_jacobian(self, obj):
        return obj.jacobian.tolist()

    def get_eigenvalues(self, obj):
        return obj.eigen.as_pairs()

    def get_verdicts(self, obj):
        verdicts = {'matignon': VerdictSerializer(obj.matignon).data}
        for name, verdict in obj.routes.items():
            verdicts[name] = VerdictSerializer(verdict).data
        return verdicts


class StabilityReportSerializer(serializers.Serializer):
    """Serializer for a full stability report."""
    model = serializers.CharField()
    alpha = serializers.FloatField(source='alpha.alpha')
    r0 = serializers.FloatField()
    equilibria = serializers.SerializerMethodField()
    analyses = EquilibriumAnalysisSerializer(many=True)
    predicted = serializers.CharField(source='predicted.kind')
    identities = serializers.DictField(child=serializers.FloatField())
    diagnostics = serializers.ListField(child=serializers.CharField())

    def get_equilibria(self, obj):
        equilibria = obj.equilibria
        return {
            'disease_free': list(equilibria.disease_free),
            'endemic': list(equilibria.endemic) if equilibria.has_endemic else None,
        }

"""
Views for the stability report API.
"""
from drf_spectacular.utils import extend_schema
from rest_framework import generics, status
from rest_framework.response import Response

from scenario.runner import analyze_scenario
from scenario.serializers import ScenarioSerializer
from stability.serializers import StabilityReportSerializer


class StabilityReportView(generics.GenericAPIView):
    """Analyse a scenario document; one report per fractional order."""
    serializer_class = ScenarioSerializer

    @extend_schema(responses=StabilityReportSerializer(many=True))
    def post(self, request):
        serializer = self.get_serializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        reports = analyze_scenario(serializer.save())
        return Response(
            StabilityReportSerializer(reports, many=True).data,
            status=status.HTTP_200_OK,
        )

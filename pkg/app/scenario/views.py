"""
Views for the figure preset API.
"""
from drf_spectacular.utils import extend_schema
from rest_framework import status, viewsets
from rest_framework.response import Response

from core.exceptions import ConfigurationError
from scenario import presets, serializers


class PresetViewSet(viewsets.ViewSet):
    """Browse the figure presets."""
    lookup_value_regex = '[^/]+'

    @extend_schema(responses=serializers.FigurePresetSerializer(many=True))
    def list(self, request):
        """List every figure preset."""
        serializer = serializers.FigurePresetSerializer(presets.all_presets(), many=True)
        return Response(serializer.data)

    @extend_schema(responses=serializers.FigurePresetSerializer)
    def retrieve(self, request, pk=None):
        """Return one preset with its scenario document."""
        try:
            preset = presets.get_preset(pk)
        except ConfigurationError as exc:
            return Response({'detail': str(exc)}, status=status.HTTP_404_NOT_FOUND)
        return Response(serializers.FigurePresetSerializer(preset).data)

"""app URL Configuration

Routes the OpenAPI schema, its Swagger UI, and the scenario and stability
APIs.
"""
from django.urls import include, path
from drf_spectacular.views import (
    SpectacularAPIView,
    SpectacularSwaggerView,
)

urlpatterns = [
    path('api/schema/', SpectacularAPIView.as_view(), name='api-schema'),
    path('api/docs/', SpectacularSwaggerView.as_view(url_name='api-schema'), name='api-docs'),
    path('api/scenario/', include('scenario.urls')),
    path('api/stability/', include('stability.urls')),
]

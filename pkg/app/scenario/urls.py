"""
URL mappings for the scenario app.
"""
from django.urls import include, path
from rest_framework.routers import DefaultRouter

from scenario import views

router = DefaultRouter()
router.register('presets', views.PresetViewSet, basename='preset')

app_name = 'scenario'

urlpatterns = [
    path('', include(router.urls)),
]

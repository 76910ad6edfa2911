"""
URL mappings for the stability app.
"""
from django.urls import path

from stability import views

app_name = 'stability'

urlpatterns = [
    path('reports/', views.StabilityReportView.as_view(), name='report'),
]

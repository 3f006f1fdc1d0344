"""
URL configuration: only the admin, for browsing saved certificates.
"""
from django.contrib import admin
from django.urls import path

admin.site.site_header = 'Folkman certificates'

urlpatterns = [
    path('admin/', admin.site.urls),
]

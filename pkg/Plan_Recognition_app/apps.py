from django.apps import AppConfig


class PlanRecognitionAppConfig(AppConfig):
    name = 'Plan_Recognition_app'
    verbose_name = 'Plan recognition'

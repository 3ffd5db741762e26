from django.apps import AppConfig


class SequentsConfig(AppConfig):
    name = 'sequents'

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Plan_Recognition.settings')
django.setup()

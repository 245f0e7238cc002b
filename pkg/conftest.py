# Регистрирует общие фикстуры для всех тестов
from abx.testutils import *  # noqa F403

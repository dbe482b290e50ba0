#
# Copyright (C) 2024 The falconer developers.
#
import os


def pytest_addoption(parser):
    parser.addoption(
        "--config", action="store", default="test.cfg", help="test config file"
    )


def pytest_configure(config):
    path = config.getoption('--config')
    if not os.path.isabs(path) and not os.path.exists(path):
        path = os.path.join(os.path.dirname(os.path.abspath(__file__)), path)
    os.environ['FALCONER_TEST_CFG'] = path

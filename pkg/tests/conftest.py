from hypothesis import settings

from bottsamelson.root_system import RootSystem

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

TYPES = {name: RootSystem.from_type(name) for name in ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2")}


def rs(name):
    return TYPES.get(name) or RootSystem.from_type(name)

from hypothesis import settings

# the oracles are exponential, so per-example wall-clock deadlines only measure machine load
settings.register_profile("lmwidth", deadline=None)
settings.load_profile("lmwidth")

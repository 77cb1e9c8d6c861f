from hypothesis import settings

# exact arithmetic has no timing contract; sympy oracles in particular vary a lot
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

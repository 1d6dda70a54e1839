from hypothesis import HealthCheck, settings

# derandomized so every run of the suite sees the same examples
settings.register_profile(
    "repo",
    deadline=None,
    max_examples=100,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

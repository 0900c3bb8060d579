import hypothesis

# exhaustive desk-scale sweeps live in the tests themselves; hypothesis
# covers the algebraic laws, so keep runs short and deterministic
hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("default")

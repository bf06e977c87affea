import sys

from hypothesis import HealthCheck, settings

# synthesized sequences carry very large exact integers
sys.set_int_max_str_digits(2_000_000)

settings.register_profile(
    "suite",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

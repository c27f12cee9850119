import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

PROBS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))

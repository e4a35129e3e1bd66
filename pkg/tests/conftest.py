import sys
from pathlib import Path

# Allow running the tests from a fresh checkout without installing.
try:
    import confgeo  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import sys
from pathlib import Path

# Make sibling helper modules (oracle, fixtures) importable regardless of
# how pytest was invoked.
sys.path.insert(0, str(Path(__file__).resolve().parent))

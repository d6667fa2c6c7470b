import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

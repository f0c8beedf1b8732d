import sys
from pathlib import Path

# allow running pytest straight from a checkout, without an editable install
sys.path.insert(0, str(Path(__file__).resolve().parent / "src"))

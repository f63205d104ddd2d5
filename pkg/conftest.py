import sys
from pathlib import Path

# allow running pytest from a fresh checkout without an editable install
src = Path(__file__).parent / "src"
if str(src) not in sys.path:
    sys.path.insert(0, str(src))

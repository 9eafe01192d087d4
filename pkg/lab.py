"""
bchlab — численная лаборатория уединённых волн b-семейства на фоне κ > 0.

Запуск:
    python lab.py profile --c 2 --kappa 0.4
    python lab.py criterion --sweep --jobs 4
    python lab.py verify-all --fast
"""

import sys

from cli import main

if __name__ == "__main__":
    sys.exit(main())

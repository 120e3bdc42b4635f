"""Explicit zero-free discs for Dirichlet series.

    python zerofree.py certify-zeta                      # disc around 0.01+50i, r=0.49, sigma1=0.4
    python zerofree.py certify-zeta --mode quadrature --out text
    python zerofree.py certify-zeta --batch 0.01:20:60:41 --out csv
    python zerofree.py verify all
    python zerofree.py distance --lambda 0.3+2i --grid geometric:8 --constraint admissible
    python zerofree.py disc-geometry --lambda 0.01+50i --R 7.45e-4 --shift 0.49
"""
import io
import os
import sys

sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8")
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())

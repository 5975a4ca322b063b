"""Smoke test for the pyhopfrot extension module.

Builds the extension if needed, copies it next to a temporary import path
and exercises the main entry points:

    python3 python/smoke_test.py
"""

import cmath
import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
LIBRARY = ROOT / "target" / "release" / "libpyhopfrot.so"


def load():
    if not LIBRARY.exists():
        subprocess.run(
            ["cargo", "build", "-p", "hopfrot-python", "--features", "extension-module", "--release"],
            cwd=ROOT,
            check=True,
        )
    where = Path(tempfile.mkdtemp())
    shutil.copy(LIBRARY, where / "pyhopfrot.so")
    sys.path.insert(0, str(where))
    import pyhopfrot

    return pyhopfrot


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main():
    h = load()

    i = h.Quaternion(0, 1, 0, 0)
    j = h.Quaternion(0, 0, 1, 0)
    assert (i * j).to_list() == [0, 0, 0, 1]
    assert h.quat_hopf(h.Quaternion(1, 0, 0, 0)) == (1.0, 0.0, 0.0)

    assert h.bloch(1, 0) == (0.0, 0.0, 1.0)
    assert h.hopf_classic(0, 1) == (0.0, 0.0, -1.0)
    assert h.stereo3((0, 0, 1)) is None
    assert h.stereo3_inv(None) == (0.0, 0.0, 1.0)

    aa = h.AxisAngle(math.pi / 2, (0, 0, 1))
    assert close(h.rotate(aa, (1, 0, 0)), (0, 1, 0))
    z, w = h.lift("bloch", (1, 0, 0))
    assert close(h.rotate_via_bloch(aa, z * 2j, w * 2j), (0, 1, 0))
    left, right = h.reconcile(aa, (0.6, 0, 0.8), 1.3, cmath.rect(0.5, 2.0))
    assert close(left, right, 1e-9)

    for variant in ("classic", "quat", "bloch"):
        base = (0.0, 0.6, -0.8)
        for z, w in h.fiber_sample(variant, base, 8):
            assert close(h.hopf_map(variant, z, w), base, 1e-9)

    try:
        h.AxisAngle(1.0, (0, 0, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("non-unit axis accepted")

    reports = h.verify(["reconcile", "odot-lemma"], samples=500, seed=1)
    assert [r["name"] for r in reports] == ["reconcile", "odot-lemma"]
    assert all(r["failures"] == 0 for r in reports)
    assert len(h.verify(samples=50)) == 12

    print("pyhopfrot smoke test passed")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Builds the coedge extension module and exercises it end to end.

Run from anywhere:  python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_module() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "coedge-py"],
        cwd=REPO,
        check=True,
    )
    built = REPO / "target" / "debug" / "libcoedge.so"
    if not built.exists():
        sys.exit(f"expected cdylib at {built}")
    stage = Path(tempfile.mkdtemp(prefix="coedge-py-"))
    shutil.copy(built, stage / "coedge.so")
    return stage


def main() -> None:
    sys.path.insert(0, str(build_module()))
    import coedge

    # Structural and spectral facts for the 7x4 grid graph.
    g = coedge.Graph.family("grid", p=7, q=4)
    assert g.vertex_count == 28 and g.edge_count == 126
    assert g.strongly_co_edge_regular() == (28, 9, 2, 7)
    assert Fraction(g.theorem12_ell()) == 7
    s = g.spectrum()
    assert s.distinct_count == 4
    eigen = [(Fraction(e["exact"]), e["multiplicity"]) for e in s.eigenvalues()]
    assert eigen == [(9, 1), (5, 3), (2, 6), (-2, 18)]
    print("grid spectrum: ok")

    verdict = g.classify("1.2")
    assert verdict["theorem"] == "1.2(i)"
    assert verdict["outcome"] == {"kind": "Grid", "p": 7, "q": 4}
    assert any(step["check"] == "ell (spectral)" for step in verdict["trail"])
    print("classification: ok")

    # The pentagon extension has irrational smallest eigenvalue -sqrt(5),
    # reported as a strict rational enclosure.
    ext = coedge.Graph.family("ext-c5", s=2)
    lo, hi = ext.spectrum().theta_min()
    assert Fraction(lo) < -Fraction(2236, 1000) < Fraction(hi)
    assert ext.min_eigenvalue_cmp("-3") == 1 and ext.min_eigenvalue_cmp("-2") == -1
    assert ext.classify("1.3")["outcome"] == {"kind": "TwoCliqueExtC5"}
    for w in ext.nonexistence_windows():
        assert w["outcome"]["kind"] == "HypothesesNotMet"
    print("pentagon extension: ok")

    # Isomorphism through the canonical form, plus the exhaustive search.
    shri = coedge.Graph.family("shrikhande")
    g44 = coedge.Graph.family("grid", p=4, q=4)
    assert not shri.is_isomorphic(g44)
    assert shri.canonical_sha256() != g44.canonical_sha256()
    relabelled = coedge.Graph.from_graph6(g44.canonical_graph6())
    assert g44.is_isomorphic(relabelled)
    cubic = [h.to_graph6() for h in coedge.search(6, 3)]
    assert cubic == ["EFz_", "ELv_"]
    print("isomorphism and search: ok")

    print("smoke test passed")


if __name__ == "__main__":
    main()

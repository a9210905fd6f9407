"""Pairwise p-equivalence over the corpus, grouped into classes.

    python scripts/equivalence_matrix.py
"""
from __future__ import annotations

from toric_basic.corpus import load_corpus
from toric_basic.equivalence import p_equivalent
from toric_basic.facering import basic_betti


def classes() -> list[list[str]]:
    C = load_corpus()
    out: list[list[str]] = []
    for name in sorted(C):
        for cls in out:
            try:
                same = p_equivalent(C[cls[0]], C[name])
            except ValueError:  # different quadratic fields
                same = False
            if same:
                cls.append(name)
                break
        else:
            out.append([name])
    return out


def main() -> None:
    C = load_corpus()
    for cls in classes():
        print(f"{str(basic_betti(C[cls[0]])):<18} {', '.join(cls)}")


if __name__ == "__main__":
    main()

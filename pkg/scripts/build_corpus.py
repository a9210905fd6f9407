"""Regenerate the bundled corpus files from the constructors in toric_basic.corpus."""
from toric_basic.corpus import CORPUS_DIR, INVALID_DIR, builtin_fans, invalid_fans
from toric_basic.fanfile import dump

if __name__ == "__main__":
    INVALID_DIR.mkdir(parents=True, exist_ok=True)
    for name, F in builtin_fans().items():
        dump(F, CORPUS_DIR / f"{name}.fan")
        print("wrote", name)
    for name, (F, check) in invalid_fans().items():
        dump(F, INVALID_DIR / f"{name}.fan")
        print("wrote invalid", name, "->", check)

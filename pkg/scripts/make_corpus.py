"""Write the bundled natural test images as 512x512 P6 files.

    python scripts/make_corpus.py corpus/
    selfauth report corpus/ --csv corpus_report.csv
"""

import argparse
from pathlib import Path

from selfauth.corpus import SAMPLES, natural_image
from selfauth.image_io import save_ppm


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--size", type=int, default=512)
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for name in SAMPLES:
        path = args.outdir / f"{name}.ppm"
        save_ppm(natural_image(name, args.size), path)
        print(path)


if __name__ == "__main__":
    main()

"""Render the sphere coloring of each corpus decoder, with and without
the octahedral invariant applied on top."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from merodec.decoder import mero_decoder
from merodec.render import render
from merodec.stabcode import parse_code

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class GalleryConfig:
    codes: Path = ROOT / "codes"
    out: Path = ROOT / "gallery"
    size: int = 256
    threads: int = 1


def run(cfg: GalleryConfig):
    cfg.out.mkdir(parents=True, exist_ok=True)
    (cfg.out / "e7.ppm").write_bytes(render("e7", cfg.size, threads=cfg.threads))
    for path in sorted(cfg.codes.glob("*.code")):
        f = mero_decoder(parse_code(path.read_text()))
        for through in (False, True):
            name = f"{path.stem}{'_e7' if through else ''}.ppm"
            (cfg.out / name).write_bytes(render(f, cfg.size, through_e7=through, threads=cfg.threads))
            print(cfg.out / name)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field, default in vars(GalleryConfig()).items():
        ap.add_argument(f"--{field}", type=type(default), default=default)
    run(GalleryConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()

"""Decode and analyze every code file in a directory.

    python3 scripts/corpus_report.py
    python3 scripts/corpus_report.py --codes codes --json out.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from merodec.decoder import analyze, conjecture_probe, mero_decoder, report_to_json
from merodec.exactnum import format_scalar
from merodec.merofn import format_mero
from merodec.stabcode import is_css, parse_code


@dataclass
class ReportConfig:
    codes: Path = Path(__file__).resolve().parent.parent / "codes"
    pattern: str = "*.code"
    json_out: Path | None = None


def _probe(code):
    try:
        return {format_scalar(k): v for k, v in conjecture_probe(code).items()}
    except ValueError:
        return None


def run(cfg: ReportConfig):
    rows = []
    for path in sorted(cfg.codes.glob(cfg.pattern)):
        code = parse_code(path.read_text())
        t0 = time.perf_counter()
        f = mero_decoder(code)
        rep = analyze(f)
        elapsed = time.perf_counter() - t0
        rows.append({
            "code": path.stem,
            "n": code.n,
            "css": is_css(code),
            "decoder": format_mero(f),
            "rh_ok": rep.rh.ok,
            "report": report_to_json(rep),
            "probe": _probe(code),
            "seconds": round(elapsed, 3),
        })
        print(f"{path.stem:8} n={code.n:<3} {format_mero(f)}")
        orders = ", ".join(f"{format_scalar(s.where)}:{s.order}" for s in rep.coherent)
        print(f"{'':8} RH {rep.rh.lhs}={rep.rh.rhs}  coherent [{orders}]  {elapsed:.2f}s")
    if cfg.json_out:
        cfg.json_out.write_text(json.dumps({"config": {k: str(v) for k, v in asdict(cfg).items()},
                                            "rows": rows}, indent=2))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--codes", type=Path, default=ReportConfig.codes)
    ap.add_argument("--pattern", default=ReportConfig.pattern)
    ap.add_argument("--json", dest="json_out", type=Path)
    run(ReportConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()

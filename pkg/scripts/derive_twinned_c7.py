"""Re-derive the twinned-C7 witness embedded in colorpaths.engine.

Usage: python scripts/derive_twinned_c7.py [output.col]
"""
import sys

from colorpaths.certify import format_coloring
from colorpaths.engine import TWINNED_C7_COLORING, twinned_c7
from colorpaths.oracle import exhaustive_certifying_search


def main() -> int:
    verdict = exhaustive_certifying_search(twinned_c7(), 3, graph_id="twinned-c7")
    if not verdict.exists_certifying_coloring:
        print("no witness found", file=sys.stderr)
        return 1
    text = format_coloring(
        verdict.witness,
        comment=f"twinned C7 (vertex 8 twin of vertex 1), {verdict.colorings_examined} colorings examined",
    )
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if verdict.witness.colors != TWINNED_C7_COLORING:
        print("embedded fixture differs from the derived witness", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

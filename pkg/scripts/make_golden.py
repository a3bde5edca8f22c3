"""Regenerate the CLI golden corpus under tests/golden/.

Each case directory holds args.json (argv after the program name),
input.json (the payload fed on stdin), and the recorded stdout, stderr and
exit_code.  Review the diff before committing regenerated output.
"""

import io
import json
import shutil
import sys
from pathlib import Path

from ncnewton.cli import main, parse_payload, serialize_payload

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

R = "rational"
B2 = {"block": 2}

CASES = {
    "01_invert_theorem6": (["invert", "--method", "theorem6"],
                           {"ring": R, "rows": [["1", "2"], ["3", "4"]]}),
    "02_invert_elimination_block": (["invert", "--method", "elimination"],
                                    {"ring": B2, "rows": [[[["1", "1"], ["0", "1"]], [["0", "0"], ["0", "0"]]],
                                                          [[["2", "0"], ["1", "1"]], [["0", "-1"], ["1", "0"]]]]}),
    "03_invert_zero_nongeneric": (["invert"], {"ring": R, "rows": [["0", "0"], ["0", "0"]]}),
    "04_invert_malformed_json": (["invert"], '{"ring": "rational", "rows": [["1", "2"]\n'),
    "05_invert_bad_entry": (["invert"], {"ring": R, "rows": [["1.5", "2"], ["3", "4"]]}),
    "06_invert_nonsquare": (["invert"], {"ring": R, "rows": [["1", "2", "3"], ["4", "5", "6"]]}),
    "07_biortho_vandermonde": (["biortho"], {"ring": R, "rows": [["1", "1", "1"], ["0", "1", "2"], ["0", "1", "4"]]}),
    "08_biortho_permuted": (["biortho", "--cols", "2,1,0", "--rows", "0,1,2"],
                            {"ring": R, "rows": [["1", "1", "1"], ["0", "1", "2"], ["0", "1", "4"]]}),
    "09_diffderiv_recurrence": (["diffderiv", "--algorithm", "recurrence", "--cols", "0,1,2", "--rows", "0,1,2"],
                                {"matrix": {"ring": R, "rows": [["1", "1", "1"], ["3", "1", "2"], ["9", "1", "4"]]},
                                 "f": ["9", "1", "4"], "g": ["1", "-2", "5"]}),
    "10_diffderiv_block_quasidet": (["diffderiv", "--algorithm", "quasidet"],
                                    {"matrix": {"ring": B2, "rows": [[[["1", "2"], ["0", "1"]], [["1", "0"], ["3", "1"]]],
                                                                     [[["0", "1"], ["1", "0"]], [["2", "1"], ["1", "1"]]]]},
                                     "f": [[["1", "0"], ["0", "2"]], [["0", "1"], ["1", "1"]]],
                                     "g": [[["3", "0"], ["1", "1"]], [["1", "-1"], ["0", "1"]]]}),
    "11_diffderiv_duplicate_index": (["diffderiv", "--cols", "0,0"],
                                     {"matrix": {"ring": R, "rows": [["1", "2"], ["3", "4"]]}, "f": ["1", "1"]}),
    "12_newton": (["newton"], {"nodes": ["0", "1", "2"], "values": ["0", "1", "4"]}),
    "13_newton_decimal": (["newton", "--decimal", "4"], {"nodes": ["1/3", "-2", "5"], "values": ["1", "0", "-7/2"]}),
    "14_newton_duplicate_node": (["newton"], {"nodes": ["0", "1", "0"], "values": ["0", "1", "4"]}),
    "15_taylor": (["taylor"], {"x0": "1", "derivs": ["1", "2", "2"]}),
    "16_taylor_order": (["taylor", "--order", "2"], {"x0": "-1/2", "derivs": ["3", "0", "-1", "6"]}),
    "17_gram": (["gram"], {"ring": R, "rows": [["1", "1"], ["1", "2"]]}),
    "18_gram_not_positive_definite": (["gram"], {"ring": R, "rows": [["1", "2"], ["2", "1"]]}),
    "19_bad_order": (["biortho", "--order", "5"], {"ring": R, "rows": [["1"]]}),
    "20_unknown_key": (["newton"], {"nodes": ["0"], "values": ["1"], "extra": []}),
}


def payload_text(command, payload):
    if isinstance(payload, str):
        return payload
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    try:
        return serialize_payload(command, parse_payload(command, text))
    except Exception:
        return text


def run_case(args, text):
    out, err = io.StringIO(), io.StringIO()
    status = main(args, stdin=io.StringIO(text), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def main_(argv):
    if GOLDEN.exists():
        shutil.rmtree(GOLDEN)
    for name, (args, payload) in CASES.items():
        case = GOLDEN / name
        case.mkdir(parents=True)
        text = payload_text(args[0], payload)
        status, out, err = run_case(args, text)
        (case / "args.json").write_text(json.dumps(args) + "\n")
        (case / "input.json").write_text(text)
        (case / "stdout").write_text(out)
        (case / "stderr").write_text(err)
        (case / "exit_code").write_text(f"{status}\n")
        print(f"{name}: exit {status}")


if __name__ == "__main__":
    main_(sys.argv[1:])

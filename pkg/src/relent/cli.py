"""Command-line front end: ``relent wigner-angle | scan | chsh``.

Exit codes: 0 success, 2 usage error, 1 internal error.
"""
from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import math
import operator
import sys
from dataclasses import dataclass

import numpy as np

from . import entanglement as ent
from .bell import OPTIMAL_PLANAR_SETUP, Frame, MeasurementSetup, chsh_maximize, chsh_terms, unit
from .relativity import wigner_angle
from .states import BellPsi, Scenario, Triplet

SCAN_COLUMNS = [
    "family",
    "alpha",
    "beta_or_theta",
    "phi_or_blank",
    "delta",
    "partition",
    "E_unboosted",
    "E_boosted",
    "E_delta",
    "closed_form_value_or_blank",
    "abs_error_vs_closed_form_or_blank",
]

PARTITIONS = {
    "one-vs-three": None,
    "one-vs-three-diff": None,
    "spin-vs-mom": ent.SPIN_VS_MOM,
    "alice-bob": ent.ALICE_BOB,
    "cross": ent.CROSS,
}

# (closed-form tag, column it is compared against); None = no closed form
CLOSED_FORMS = {
    ("bell", "one-vs-three"): (ent.ONE_V_THREE_BOOSTED, "E_boosted"),
    ("bell", "one-vs-three-diff"): (ent.ONE_V_THREE_DIFF, "E_delta"),
    ("bell", "spin-vs-mom"): (ent.SPINMOM_BOOSTED, "E_boosted"),
    ("bell", "alice-bob"): (ent.ALICE_BOB_TAG, "E_boosted"),
    ("bell", "cross"): (ent.ALICE_BOB_TAG, "E_boosted"),
    ("triplet", "one-vs-three"): None,
    ("triplet", "one-vs-three-diff"): (ent.ONE_V_THREE_DIFF, "E_delta"),
    ("triplet", "spin-vs-mom"): (ent.SPINMOM_BOOSTED, "E_boosted"),
    ("triplet", "alice-bob"): (ent.ALICE_BOB_TAG, "E_boosted"),
    ("triplet", "cross"): (ent.ALICE_BOB_TAG, "E_boosted"),
}


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ parsing

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        return _UNARY[type(node.op)](_eval_node(node.operand))
    raise ValueError("unsupported expression")


def parse_angle(text: str) -> float:
    """Radians from '0.3', 'pi/4', '3pi/4', '-pi/2', '2*pi/3'."""
    src = text.strip().replace("π", "pi")
    src = "".join(c if not (c == "p" and i and src[i - 1].isdigit()) else "*p" for i, c in enumerate(src))
    try:
        value = _eval_node(ast.parse(src, mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"angle {text!r} is not finite")
    return value


def parse_range(text: str) -> list[float]:
    """'value' or 'start:stop:steps' (inclusive, evenly spaced)."""
    parts = text.split(":")
    if len(parts) == 1:
        return [parse_angle(parts[0])]
    if len(parts) != 3:
        raise UsageError(f"range {text!r} must be 'value' or 'start:stop:steps'")
    start, stop = parse_angle(parts[0]), parse_angle(parts[1])
    try:
        steps = int(parts[2])
    except ValueError:
        raise UsageError(f"step count in {text!r} is not an integer") from None
    if steps < 1:
        raise UsageError("steps must be >= 1")
    if stop < start:
        raise UsageError("range stop must be >= start")
    if steps == 1:
        return [start]
    return [float(v) for v in np.linspace(start, stop, steps)]


def parse_vector(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"direction {text!r} must be 'x,y,z'")
    try:
        return unit([parse_angle(p) for p in parts])
    except ValueError as exc:
        raise UsageError(f"bad direction {text!r}: {exc}") from None


def fmt(x) -> str:
    if x is None:
        return ""
    return format(float(x) + 0.0, ".15g")


# -------------------------------------------------------------------- scan


@dataclass(frozen=True)
class ScanConfig:
    family: str = "bell"
    alpha: tuple = (0.0,)
    beta: tuple = (0.0,)
    theta: tuple = (0.0,)
    phi: tuple = (0.0,)
    delta: tuple = (0.0,)
    partition: str = "one-vs-three-diff"
    fmt: str = "csv"

    def spin_grid(self):
        if self.family == "bell":
            return [(BellPsi(b), b, None) for b in self.beta]
        return [(Triplet(t, f), t, f) for t in self.theta for f in self.phi]


def scan_rows(config: ScanConfig) -> list[dict]:
    """One row per grid cell in row-major order over (alpha, beta|theta, phi, delta)."""
    part = PARTITIONS[config.partition]
    closed = CLOSED_FORMS[(config.family, config.partition)]
    rows = []
    for alpha in config.alpha:
        for spin, second, phi in config.spin_grid():
            for delta in config.delta:
                scenario = Scenario(alpha, spin, delta)
                before, after = ent.entanglement_pair(scenario, part)
                row = {
                    "family": config.family,
                    "alpha": alpha,
                    "beta_or_theta": second,
                    "phi_or_blank": phi,
                    "delta": delta,
                    "partition": config.partition,
                    "E_unboosted": before,
                    "E_boosted": after,
                    "E_delta": after - before,
                    "closed_form_value_or_blank": None,
                    "abs_error_vs_closed_form_or_blank": None,
                }
                if closed is not None:
                    tag, column = closed
                    value = float(ent.closed_form(tag, scenario))
                    row["closed_form_value_or_blank"] = value
                    row["abs_error_vs_closed_form_or_blank"] = abs(row[column] - value)
                rows.append(row)
    return rows


def render_rows(rows: list[dict], out_format: str) -> str:
    if out_format == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else fmt(v) for v in (row[c] for c in SCAN_COLUMNS)])
    return buf.getvalue()


# ----------------------------------------------------------------- commands


def _frame_delta(args) -> float | list[float]:
    if args.eta is not None or args.xi is not None:
        if args.delta is not None:
            raise UsageError("give either --delta or --eta/--xi, not both")
        return [wigner_angle(args.eta or 0.0, args.xi or 0.0)]
    return parse_range(args.delta) if args.delta is not None else [0.0]


def _write(text: str, out: str | None):
    if out in (None, "-", "stdout"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_wigner_angle(args) -> int:
    delta = wigner_angle(args.eta, args.xi)
    print(f"delta = {delta:.12g} rad = {math.degrees(delta):.12g} deg")
    return 0


def cmd_scan(args) -> int:
    config = ScanConfig(
        family=args.family,
        alpha=tuple(parse_range(args.alpha)),
        beta=tuple(parse_range(args.beta)),
        theta=tuple(parse_range(args.theta)),
        phi=tuple(parse_range(args.phi)),
        delta=tuple(_frame_delta(args)),
        partition=args.partition,
        fmt=args.format,
    )
    _write(render_rows(scan_rows(config), config.fmt), args.out)
    return 0


def _spin_from_args(args):
    if args.family == "bell":
        return BellPsi(parse_angle(args.beta))
    return Triplet(parse_angle(args.theta), parse_angle(args.phi))


def cmd_chsh(args) -> int:
    scenario = Scenario(parse_angle(args.alpha), _spin_from_args(args))
    state = scenario.initial_state()
    frame = Frame(eta=args.eta if args.eta is not None else 1.0, xi=args.xi if args.xi is not None else 0.0)
    transform = not args.verbatim
    if args.seed < 0 or args.restarts < 1:
        raise UsageError("--seed must be >= 0 and --restarts >= 1")
    lines = [f"frame: eta = {fmt(frame.eta)}, xi = {fmt(frame.xi)}, delta = {fmt(frame.delta)}"]
    if args.optimize:
        setup, _ = chsh_maximize(state, frame, seed=args.seed, restarts=args.restarts, transform=transform)
    else:
        dirs = [args.dir_a, args.dir_a2, args.dir_b, args.dir_b2]
        defaults = OPTIMAL_PLANAR_SETUP.directions()
        setup = MeasurementSetup(*[parse_vector(d) if d else v for d, v in zip(dirs, defaults)])
    for name, v in zip(("a", "a2", "b", "b2"), setup.directions()):
        lines.append(f"{name} = ({fmt(v[0])}, {fmt(v[1])}, {fmt(v[2])})")
    if args.optimize:
        lines.append("angles (polar, azimuth) = " + " ".join(fmt(x) for x in setup.angles()))
    terms = chsh_terms(state, setup, frame, transform)
    for key, value in terms.items():
        lines.append(f"{key} = {fmt(value)}")
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner-angle", help="Wigner angle for particle rapidity eta and observer rapidity xi")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.set_defaults(func=cmd_wigner_angle)

    p = sub.add_parser("scan", help="entanglement over a parameter grid (CSV or JSON)")
    p.add_argument("--family", choices=["bell", "triplet"], default="bell")
    p.add_argument("--partition", choices=list(PARTITIONS), default="one-vs-three-diff")
    for name in ("alpha", "beta", "theta", "phi"):
        p.add_argument(f"--{name}", default="0", help="value or start:stop:steps, radians ('pi/4' accepted)")
    p.add_argument("--delta", default=None, help="Wigner angle value or range")
    p.add_argument("--eta", type=float, default=None)
    p.add_argument("--xi", type=float, default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("chsh", help="CHSH value in a given frame, optionally maximized")
    p.add_argument("--family", choices=["bell", "triplet"], default="bell")
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="-pi/4", help="Bell family angle (default: singlet)")
    p.add_argument("--theta", default="0")
    p.add_argument("--phi", default="0")
    p.add_argument("--eta", type=float, default=None, help="particle rapidity (default 1)")
    p.add_argument("--xi", type=float, default=None, help="observer rapidity (default 0)")
    for name in ("a", "a2", "b", "b2"):
        p.add_argument(f"--dir-{name}", default=None, help="direction x,y,z")
    p.add_argument("--verbatim", action="store_true", help="reuse directions untransformed in the moving frame")
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=16)
    p.set_defaults(func=cmd_chsh)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except Exception as exc:  # noqa: BLE001
        print(f"relent: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

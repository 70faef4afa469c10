"""CHSH value of the singlet seen from moving frames.

Three columns per frame: rest-frame directions reused as they are, directions
carried along by the boost, and the best value found by multistart search.

    python3 scripts/chsh_recovery.py --restarts 8
"""
import argparse

import numpy as np

from relent.bell import OPTIMAL_PLANAR_SETUP, TSIRELSON, Frame, chsh, chsh_maximize
from relent.states import BellPsi, Scenario


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alpha", type=float, default=np.pi / 4)
    parser.add_argument("--rapidities", type=float, nargs="+", default=[0.5, 1.0, 2.0, 3.0])
    parser.add_argument("--restarts", type=int, default=16)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    state = Scenario(args.alpha, BellPsi(-np.pi / 4)).initial_state()
    print(f"{'eta':>5} {'xi':>5} {'delta':>9} {'verbatim':>10} {'transformed':>12} {'optimized':>10}")
    for eta in args.rapidities:
        for xi in [0.0, *args.rapidities]:
            frame = Frame(eta=eta, xi=xi)
            verbatim = chsh(state, OPTIMAL_PLANAR_SETUP, frame, transform=False)
            carried = chsh(state, OPTIMAL_PLANAR_SETUP, frame)
            _, best = chsh_maximize(state, frame, seed=args.seed, restarts=args.restarts, transform=False)
            print(f"{eta:5.2f} {xi:5.2f} {frame.delta:9.6f} {verbatim:10.6f} {carried:12.9f} {best:10.6f}")
    print(f"2 sqrt 2 = {TSIRELSON:.9f}")


if __name__ == "__main__":
    main()

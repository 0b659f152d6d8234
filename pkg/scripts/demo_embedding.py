#!/usr/bin/env python3
"""Generate a random finite ultrametric space, embed it isometrically into
the finite-support model, and print the images plus a distance check.

Usage: scripts/demo_embedding.py [--seed N] [--size K]
"""

import argparse
import json
import random

from urysohn import delta, embed_space
from urysohn.gen import random_ultrametric_space
from urysohn.serialization import point_to_json, space_to_json


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--size", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    space = random_ultrametric_space(rng, args.size)
    images = embed_space(space)

    print(json.dumps(space_to_json(space), indent=2))
    print(json.dumps({l: point_to_json(p) for l, p in images.items()}, indent=2))

    exact = all(
        delta(images[x], images[y]) == space.d(x, y)
        for x in space.labels
        for y in space.labels
    )
    print(f"isometric: {exact}")


if __name__ == "__main__":
    main()

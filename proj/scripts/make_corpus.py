#!/usr/bin/env python3
"""Regenerate the natural-image test corpus (tests/data/*.pgm).

Each photograph shipped with scikit-image is converted to 8-bit luma and
resampled to 1024x768 so the corpus matches the acceptance image size.
"""
import os
import sys

import numpy as np
import skimage
from skimage import color, io, transform

SOURCES = {
    "astronaut": "astronaut.png",
    "camera": "camera.png",
    "coffee": "coffee.png",
    "motorcycle": "motorcycle_left.png",
    "rocket": "rocket.jpg",
}


def to_pgm(path, gray):
    h, w = gray.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(gray.astype(np.uint8).tobytes())


def main(out_dir):
    data_dir = os.path.join(os.path.dirname(skimage.__file__), "data")
    os.makedirs(out_dir, exist_ok=True)
    for name, fname in SOURCES.items():
        img = io.imread(os.path.join(data_dir, fname))
        if img.ndim == 3:
            img = color.rgb2gray(img[..., :3])
        else:
            img = img / 255.0
        img = transform.resize(img, (768, 1024), order=3, anti_aliasing=False)
        gray = np.clip(np.rint(img * 255.0), 0, 255)
        to_pgm(os.path.join(out_dir, name + ".pgm"), gray)
        print(name, gray.shape)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data")

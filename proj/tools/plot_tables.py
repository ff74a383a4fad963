#!/usr/bin/env python3
# Copyright 2026 The syklab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Render the tables listed in a syklab manifest as PNG figures.

usage: plot_tables.py OUTPUT_DIR [OUTPUT_DIR ...]
"""

import pathlib
import shlex
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def read_table(path):
    with open(path) as f:
        header = f.readline().split()
        data = np.loadtxt(f, ndmin=2)
    return header, data


def centers(data):
    return 0.5 * (data[:, 0] + data[:, 1])


def plot_dos(ax, header, data):
    ax.step(centers(data), data[:, 2], where="mid")
    ax.set_xlabel("E")
    ax.set_ylabel("rho(E)")


def plot_spacings(ax, header, data):
    x = centers(data)
    ax.bar(x, data[:, 2], width=data[:, 1] - data[:, 0], alpha=0.4, label="empirical")
    ax.plot(x, data[:, 4], label="GOE")
    ax.plot(x, data[:, 5], label="GUE")
    ax.set_xlabel("s")
    ax.set_ylabel("P(s)")
    ax.legend()


def plot_gap_index(ax, header, data):
    ax.errorbar(data[:, 0], data[:, 1], yerr=data[:, 2], fmt=".", ms=2)
    ax.axhline(0.5307, ls="--", lw=0.8, label="GOE")
    ax.axhline(0.59975, ls=":", lw=0.8, label="GUE")
    ax.set_xlabel("i")
    ax.set_ylabel("<r_i>")
    ax.legend()


def plot_gap_hist(ax, header, data):
    x = centers(data)
    ax.step(x, data[:, 2], where="mid", label="empirical")
    ax.plot(x, data[:, 3], label="GOE")
    ax.plot(x, data[:, 4], label="GUE")
    ax.set_xlabel("r")
    ax.set_ylabel("P(r)")
    ax.legend()


def plot_sff(ax, header, data):
    ax.loglog(data[:, 0], data[:, 1])
    ax.set_xlabel("t")
    ax.set_ylabel("SFF")


PLOTTERS = {
    "_dos.tsv": plot_dos,
    "_spacings.tsv": plot_spacings,
    "_gap_ratio_index.tsv": plot_gap_index,
    "_gap_ratio_hist.tsv": plot_gap_hist,
    "_sff.tsv": plot_sff,
}


def render(directory):
    directory = pathlib.Path(directory)
    for manifest in sorted(directory.glob("*_manifest.txt")):
        lines = manifest.read_text().splitlines()[1:]
        for line in lines:
            name, figure, _ = shlex.split(line)
            plotter = next((p for suffix, p in PLOTTERS.items() if name.endswith(suffix)), None)
            path = directory / name
            if plotter is None or not path.exists():
                continue
            header, data = read_table(path)
            fig, ax = plt.subplots(figsize=(5, 3.5))
            plotter(ax, header, data)
            ax.set_title(figure, fontsize=9)
            fig.tight_layout()
            out = path.with_suffix(".png")
            fig.savefig(out, dpi=120)
            plt.close(fig)
            print("wrote", out)


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    for d in sys.argv[1:]:
        render(d)

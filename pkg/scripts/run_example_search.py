#!/usr/bin/env python3
"""
Script to recover the 5-vertex R-cospectral pair: G self-converse, H not, non-isomorphic
"""

import os
import sys
import argparse
import time
import json

# Add the src directory to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra.gaussint import format_gauss, format_rat
from src.census.census import find_example_pair
from src.graphs.graph_io import GraphLoader
from src.spectra.unitary import transfer_unitary
from src.spectra.walk import generalized_spectrum, walk_report
from src.visualization.graph_plots import plot_mixed_graph_pair

def main():
    parser = argparse.ArgumentParser(description='Recover the 5-vertex R-cospectral example pair by exhaustive search')
    parser.add_argument('--results-dir', type=str, default='./results', help='Directory to save results')
    parser.add_argument('--rescan', action='store_true', help='Search again even if a saved pair exists')

    args = parser.parse_args()

    example_output_dir = os.path.join(args.results_dir, "example")
    vis_output_dir = os.path.join(args.results_dir, "visualizations", "example")
    os.makedirs(example_output_dir, exist_ok=True)
    os.makedirs(vis_output_dir, exist_ok=True)

    loader = GraphLoader(example_output_dir)
    if not args.rescan and {"G", "H"} <= set(loader.list_graphs()):
        g, h = loader.load_graph("G"), loader.load_graph("H")
        print(f"  📂 Loaded saved pair {g} and {h}")
    else:
        print("Searching all 4^10 mixed graphs on 5 vertices...")
        start = time.time()
        g, h = find_example_pair(5)
        print(f"  ✅ Found {g} and {h} in {time.time() - start:.2f}s")
        loader.save_graph("G", g)
        loader.save_graph("H", h)

    report_g, report_h = walk_report(g), walk_report(h)
    report = {
        "G": {**report_g.to_dict(), **generalized_spectrum(g).to_dict()},
        "H": {**report_h.to_dict(), **generalized_spectrum(h).to_dict()},
    }
    tu = transfer_unitary(g, h)
    report["unitary"] = [[format_rat(x) for x in tu.u.row(i)] for i in range(tu.u.rows)]
    report["level"] = format_gauss(tu.level)
    print(f"  📊 Transfer unitary level: {format_gauss(tu.level)}")

    report_file = os.path.join(example_output_dir, "example_report.json")
    with open(report_file, 'w') as f:
        json.dump(report, f, indent=2)

    plot_mixed_graph_pair(g, h, ("G (self-converse)", "H (not self-converse)"), vis_output_dir, "example_pair")

    print("\n✅ Example search complete! Results saved to:")
    print(f"   - {loader.graph_path('G')}")
    print(f"   - {loader.graph_path('H')}")
    print(f"   - {report_file}")
    print(f"   - {os.path.join(vis_output_dir, 'example_pair.png')}")

if __name__ == "__main__":
    main()

import matplotlib.pyplot as plt
import networkx as nx
import os

from src.graphs.mixed_graph import to_networkx

def draw_mixed_graph(graph, ax, title=None):
    """
    Draw one mixed graph: arcs as arrows, undirected edges as plain lines

    Args:
        graph: MixedGraph
        ax: Matplotlib axes to draw on
        title: Optional axes title
    """
    g = to_networkx(graph)
    pos = nx.circular_layout(sorted(g.nodes))
    undirected = graph.undirected_edges()
    arcs = graph.arcs()

    nx.draw_networkx_nodes(g, pos, ax=ax, node_color='lightblue', node_size=600, edgecolors='black')
    nx.draw_networkx_labels(g, pos, ax=ax, font_size=12)
    nx.draw_networkx_edges(g, pos, ax=ax, edgelist=undirected, arrows=False, width=2, edge_color='gray')
    nx.draw_networkx_edges(g, pos, ax=ax, edgelist=arcs, arrows=True, arrowstyle='-|>',
                           arrowsize=20, width=2, edge_color='darkred', node_size=600)
    if title:
        ax.set_title(title, fontsize=14)
    ax.axis('off')

def plot_mixed_graph_pair(g, h, labels=("G", "H"), output_dir="./results/visualizations/example",
                          filename="example_pair"):
    """
    Plot two mixed graphs side by side (e.g. an R-cospectral non-isomorphic pair)

    Args:
        g, h: MixedGraph instances
        labels: Titles for the two panels
        output_dir: Directory to save the plot
        filename: Filename to save the plot (without extension)
    """
    fig, axes = plt.subplots(1, 2, figsize=(12, 6))
    draw_mixed_graph(g, axes[0], labels[0])
    draw_mixed_graph(h, axes[1], labels[1])
    plt.tight_layout()

    # Save figure if output_dir is provided
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        plt.savefig(os.path.join(output_dir, f"{filename}.png"), bbox_inches='tight', dpi=300)

    return fig

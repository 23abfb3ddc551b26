import matplotlib.pyplot as plt
import os

def plot_census_fractions(df, output_dir="./results/visualizations/census", filename="table1_fractions"):
    """
    Plot DGS and determinant-condition fractions per graph order

    Args:
        df: DataFrame with columns n, classes, dgs_fraction, condition_fraction
        output_dir: Directory to save the plot
        filename: Filename to save the plot (without extension)
    """
    fig, axes = plt.subplots(1, 2, figsize=(16, 6))

    # Plot 1: fractions per n
    axes[0].plot(df['n'], df['dgs_fraction'], 'o-', label='DGS', linewidth=2, markersize=8)
    axes[0].plot(df['n'], df['condition_fraction'], 's-', label='Square-free condition',
                 linewidth=2, markersize=8)
    for _, row in df.iterrows():
        axes[0].annotate(f"{row['dgs_fraction']:.3f}", (row['n'], row['dgs_fraction']),
                         textcoords="offset points", xytext=(0, 8), ha='center', fontsize=9)
    axes[0].set_xlabel('Number of vertices n', fontsize=12)
    axes[0].set_ylabel('Fraction of self-converse classes', fontsize=12)
    axes[0].set_title('DGS Self-Converse Mixed Graphs', fontsize=14)
    axes[0].set_ylim(0, 1.05)
    axes[0].set_xticks(list(df['n']))
    axes[0].legend(fontsize=10)
    axes[0].grid(True, alpha=0.3)

    # Plot 2: class counts, log scale
    axes[1].bar(df['n'].astype(str), df['classes'], color='steelblue')
    for i, count in enumerate(df['classes']):
        axes[1].annotate(str(count), (i, count), textcoords="offset points", xytext=(0, 4),
                         ha='center', fontsize=9)
    axes[1].set_yscale('log')
    axes[1].set_xlabel('Number of vertices n', fontsize=12)
    axes[1].set_ylabel('Isomorphism classes', fontsize=12)
    axes[1].set_title('Self-Converse Classes per Order', fontsize=14)
    axes[1].grid(True, axis='y', alpha=0.3)

    plt.tight_layout()

    # Save figure if output_dir is provided
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        plt.savefig(os.path.join(output_dir, f"{filename}.png"), bbox_inches='tight', dpi=300)

    return fig

//! Read and write DIMACS `.col` files, with optional vertex weights.

use phpairs::{parse_dimacs, write_dimacs};

fn main() -> phpairs::Result<()> {
    let text = "c triangle with a pendant vertex\np edge 4 4\nn 1 5\nn 4 2\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
    let g = parse_dimacs(text)?;
    println!(
        "{} vertices, {} edges, weights {:?}",
        g.order(),
        g.edge_count(),
        g.weights()
    );
    let out = write_dimacs(&g);
    print!("{out}");
    assert_eq!(parse_dimacs(&out)?, g);
    Ok(())
}

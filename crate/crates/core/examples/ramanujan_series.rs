//! Both sides of Ramanujan's two identities as exact truncated q-series,
//! compared coefficient by coefficient.

use euler_partitions::qseries::{compare, Comparison};
use euler_partitions::SeriesIdentity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 20;
    for id in [SeriesIdentity::Eq1, SeriesIdentity::Eq2] {
        let (lhs, rhs) = id.sides(order)?;
        println!("{id}: {lhs}");
        match compare(&lhs, &rhs)? {
            Comparison::Equal => println!("     right side agrees through q^{order}"),
            Comparison::FirstDiff { index, left, right } => {
                println!("     sides differ at q^{index}: {left} vs {right}")
            }
        }
    }
    Ok(())
}

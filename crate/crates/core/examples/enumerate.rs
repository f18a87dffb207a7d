//! Lists a partition class in canonical order.
//!
//! ```text
//! cargo run --example enumerate -- 6 rooted-odd
//! ```

use euler_partitions::partition::enumerate;
use euler_partitions::PartitionClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let class: PartitionClass = args.next().as_deref().unwrap_or("distinct").parse()?;
    let members: Vec<_> = enumerate(n, class).collect();
    println!("{} partitions of {n} in class {class}", members.len());
    for m in members {
        println!("  {m}  (rank {})", m.flatten().rank());
    }
    Ok(())
}

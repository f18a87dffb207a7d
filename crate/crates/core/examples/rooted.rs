//! Rooted partitions of 4: the root-moving involution and the bijection to
//! rooted partitions with odd parts.

use euler_partitions::bijections::{sigma, tau};
use euler_partitions::partition::{count, rooted_partitions};
use euler_partitions::PartitionClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    for class in PartitionClass::ALL.into_iter().filter(|c| c.is_rooted()) {
        println!("{:<34} {}", class.name(), count(n, class));
    }

    println!("\nroot-moving involution:");
    for rp in rooted_partitions(n, PartitionClass::RootedAlmostDistinct) {
        match tau(&rp) {
            Ok(img) if rp < img => println!("  {rp}  <->  {img}"),
            Ok(_) => {}
            Err(_) => println!("  {rp}  (distinct, fixed)"),
        }
    }

    println!("\nodd root size -> odd parts:");
    for rp in rooted_partitions(n, PartitionClass::RootedAlmostDistinctOddRoot) {
        println!("  {rp}  ->  {}", sigma(&rp)?);
    }
    Ok(())
}

use std::time::Instant;

use taulab_core::families::{named_family, Family};
use taulab_core::rep::RepContext;
use taulab_core::tau::{enumerate_pairs, EnumOptions};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 4..=max {
        let start = Instant::now();
        let ctx = RepContext::new(named_family(Family::Lambda { n }).unwrap(), 101).unwrap();
        let e = enumerate_pairs(ctx, EnumOptions::default()).unwrap();
        println!("{n}: {}  ({} modules, {:.2?})", e.counts.row(), e.registry.len(), start.elapsed());
    }
}

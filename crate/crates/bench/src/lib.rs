//! Benchmark inputs shared by the criterion targets.

use ccg_core::{build_group, FiniteGroup, GroupSpec};

/// Named specs of increasing size.
pub fn workload() -> Vec<(&'static str, GroupSpec)> {
    vec![
        ("S4", GroupSpec::Symmetric { n: 4 }),
        ("PSL(2,7)", GroupSpec::Psl2 { q: 7 }),
        ("PSL(2,9)", GroupSpec::Psl2 { q: 9 }),
        ("PSL(2,17)", GroupSpec::Psl2 { q: 17 }),
    ]
}

pub fn build(spec: &GroupSpec) -> FiniteGroup {
    build_group(spec).expect("benchmark specs build")
}

//! Benchmark helpers: seed surfaces shared by the criterion targets.

use origami_core::census::{h2_a_representative, h2_b_representative};
use origami_core::Origami;

pub fn seeds() -> Vec<(&'static str, Origami)> {
    vec![
        ("h2-a-n9", h2_a_representative(9).unwrap()),
        ("h2-b-n11", h2_b_representative(11).unwrap()),
    ]
}

//! Involutions, HLK invariants and H(2) orbit labels.

use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The HLK invariant `(l0, [l1, l2, l3])`; the triple is unordered and kept
/// sorted descending.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HlkInvariant {
    pub l0: usize,
    pub rest: [usize; 3],
}

impl HlkInvariant {
    pub fn new(l0: usize, mut rest: [usize; 3]) -> Self {
        rest.sort_unstable_by(|a, b| b.cmp(a));
        HlkInvariant { l0, rest }
    }
}

impl fmt::Display for HlkInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},[{},{},{}])",
            self.l0, self.rest[0], self.rest[1], self.rest[2]
        )
    }
}

/// A square permutation `u` conjugating `(h, v)` to `(h⁻¹, v⁻¹)`: square `i`
/// maps to square `u(i)` rotated by π.
#[derive(Clone, Debug)]
pub struct InvolutionWitness {
    pub u: Permutation,
    /// Number of valid witnesses found for the surface.
    pub multiplicity: usize,
}

/// Search the candidates determined by the image of square 1 for a
/// permutation with `u∘h = h⁻¹∘u`, `u∘v = v⁻¹∘u` and `u² = id`. If several
/// exist, the one fixing the most surface points wins.
pub fn find_involution(o: &Origami) -> Option<InvolutionWitness> {
    let n = o.n();
    let h = o.h();
    let v = o.v();
    let hi = h.inverse();
    let vi = v.inverse();
    let mut witnesses: Vec<Permutation> = Vec::new();
    'candidates: for s in 0..n {
        // propagate u(h(i)) = h⁻¹(u(i)) and u(v(i)) = v⁻¹(u(i)) from u(0) = s
        let mut u = vec![usize::MAX; n];
        u[0] = s;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            let ui = u[i];
            for (j, uj) in [
                (h.apply(i), hi.apply(ui)),
                (v.apply(i), vi.apply(ui)),
                (hi.apply(i), h.apply(ui)),
                (vi.apply(i), v.apply(ui)),
            ] {
                if u[j] == usize::MAX {
                    u[j] = uj;
                    stack.push(j);
                } else if u[j] != uj {
                    continue 'candidates;
                }
            }
        }
        if u.iter().any(|&x| x == usize::MAX) {
            continue;
        }
        let cand = match Permutation::from_images_one_based(
            &u.iter().map(|&x| x + 1).collect::<Vec<_>>(),
        ) {
            Ok(p) => p,
            Err(_) => continue,
        };
        // must be an involution
        if !cand.compose(&cand).unwrap().is_identity() {
            continue;
        }
        witnesses.push(cand);
    }
    if witnesses.is_empty() {
        return None;
    }
    let multiplicity = witnesses.len();
    let best = witnesses
        .into_iter()
        .max_by_key(|u| {
            let f = count_fixed_points(o, u);
            (f.total_including_singular(), u.inverse().images_one_based())
        })
        .unwrap();
    Some(InvolutionWitness {
        u: best,
        multiplicity,
    })
}

/// Fixed points of the involution, grouped by the 2-torsion point of the
/// base torus they sit over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedPointCounts {
    /// Regular vertex classes fixed by ι (over 0).
    pub vertices_regular: usize,
    /// Singular vertex classes fixed by ι (also over 0).
    pub vertices_singular: usize,
    /// Square centers with u(i) = i (over (1/2, 1/2)).
    pub centers: usize,
    /// Horizontal edge midpoints with v(u(i)) = i (over (1/2, 0)).
    pub horizontal_midpoints: usize,
    /// Vertical edge midpoints with h(u(i)) = i (over (0, 1/2)).
    pub vertical_midpoints: usize,
}

impl FixedPointCounts {
    pub fn total_including_singular(&self) -> usize {
        self.vertices_regular
            + self.vertices_singular
            + self.centers
            + self.horizontal_midpoints
            + self.vertical_midpoints
    }
}

/// Count fixed points of the involution `u` on the surface.
///
/// A square center is fixed iff `u(i) = i`; the bottom-edge midpoint of `i`
/// is fixed iff `v(u(i)) = i`; the left-edge midpoint iff `h(u(i)) = i`; a
/// vertex class is fixed iff ι maps the class to itself (the image of the
/// bottom-left corner of `i` is the top-right corner of `u(i)`, i.e. the
/// bottom-left corner of `v(h(u(i)))`).
pub fn count_fixed_points(o: &Origami, u: &Permutation) -> FixedPointCounts {
    let n = o.n();
    let h = o.h();
    let v = o.v();
    let rho = o.vertex_rotation();
    let mut class_of = vec![usize::MAX; n];
    let cycles = rho.cycles();
    for (cid, cycle) in cycles.iter().enumerate() {
        for &i in cycle {
            class_of[i] = cid;
        }
    }
    let mut centers = 0;
    let mut hmid = 0;
    let mut vmid = 0;
    for i in 0..n {
        if u.apply(i) == i {
            centers += 1;
        }
        if v.apply(u.apply(i)) == i {
            hmid += 1;
        }
        if h.apply(u.apply(i)) == i {
            vmid += 1;
        }
    }
    let mut vreg = 0;
    let mut vsing = 0;
    for (cid, cycle) in cycles.iter().enumerate() {
        let i = cycle[0];
        let image = v.apply(h.apply(u.apply(i)));
        if class_of[image] == cid {
            if cycle.len() == 1 {
                vreg += 1;
            } else {
                vsing += 1;
            }
        }
    }
    FixedPointCounts {
        vertices_regular: vreg,
        vertices_singular: vsing,
        centers,
        horizontal_midpoints: hmid,
        vertical_midpoints: vmid,
    }
}

/// The HLK invariant: regular fixed points of ι over the four 2-torsion
/// points (conical points excluded).
pub fn hlk_invariant(o: &Origami) -> Result<HlkInvariant> {
    let w = find_involution(o).ok_or(Error::NoInvolution)?;
    let f = count_fixed_points(o, &w.u);
    Ok(HlkInvariant::new(
        f.vertices_regular,
        [f.centers, f.horizontal_midpoints, f.vertical_midpoints],
    ))
}

/// Total fixed points of ι including conical points: 6 for H(2), 4 for
/// Prym H(4), 2 for Prym H(6).
pub fn prym_fixed_point_count(o: &Origami) -> Result<usize> {
    let w = find_involution(o).ok_or(Error::NoInvolution)?;
    Ok(count_fixed_points(o, &w.u).total_including_singular())
}

/// H(2) orbit labels.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum H2Orbit {
    A,
    B,
    Even,
    /// The single orbit at n = 3 (same invariant as A).
    N3,
}

impl fmt::Display for H2Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H2Orbit::A => write!(f, "A"),
            H2Orbit::B => write!(f, "B"),
            H2Orbit::Even => write!(f, "Even"),
            H2Orbit::N3 => write!(f, "N3"),
        }
    }
}

/// Classify a primitive H(2) origami by its HLK invariant.
pub fn classify_h2_orbit(o: &Origami) -> Result<H2Orbit> {
    if o.stratum() != vec![2] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    let inv = hlk_invariant(o)?;
    match (inv.l0, inv.rest) {
        (0, [3, 1, 1]) => Ok(if o.n() == 3 { H2Orbit::N3 } else { H2Orbit::A }),
        (2, [1, 1, 1]) => Ok(H2Orbit::B),
        (1, [2, 2, 0]) => Ok(H2Orbit::Even),
        _ => Err(Error::UnknownInvariant(inv.to_string())),
    }
}

/// Orbit cardinalities for odd `n ≥ 5`:
/// `|A| = 3/16 (n-1) n² ∏(1 - p⁻²)` and `|B| = 3/16 (n-3) n² ∏(1 - p⁻²)`,
/// the products over primes dividing n.
pub fn expected_orbit_sizes(n: u64) -> Result<(u64, u64)> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::BadArgument(format!(
            "orbit size formulas need odd n >= 5, got {n}"
        )));
    }
    // n² ∏_{p|n} (1 - p⁻²) = ∏ p^(2k-2) (p² - 1)
    let mut m = n;
    let mut euler_like: u128 = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            euler_like *= (p as u128).pow(2 * k - 2) * ((p as u128) * (p as u128) - 1);
        }
        p += 1;
    }
    if m > 1 {
        euler_like *= (m as u128) * (m as u128) - 1;
    }
    let a = 3 * (n as u128 - 1) * euler_like;
    let b = 3 * (n as u128 - 3) * euler_like;
    assert_eq!(a % 16, 0, "A cardinality must be integral");
    assert_eq!(b % 16, 0, "B cardinality must be integral");
    Ok(((a / 16) as u64, (b / 16) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{h2_a_representative, h2_b_representative, two_cylinder_origami};

    #[test]
    fn torus_involution() {
        let t = Origami::torus();
        let w = find_involution(&t).unwrap();
        assert!(w.u.is_identity());
    }

    #[test]
    fn hlk_of_h2_representatives() {
        let a = h2_a_representative(5).unwrap();
        assert_eq!(hlk_invariant(&a).unwrap(), HlkInvariant::new(0, [3, 1, 1]));
        assert_eq!(classify_h2_orbit(&a).unwrap(), H2Orbit::A);

        let b = h2_b_representative(5).unwrap();
        assert_eq!(hlk_invariant(&b).unwrap(), HlkInvariant::new(2, [1, 1, 1]));
        assert_eq!(classify_h2_orbit(&b).unwrap(), H2Orbit::B);
    }

    #[test]
    fn hlk_of_even_n() {
        // n=4 L-shaped primitive origami
        let o = two_cylinder_origami(1, 1, 0, 3, 1, 0).unwrap();
        assert_eq!(o.n(), 4);
        assert_eq!(hlk_invariant(&o).unwrap(), HlkInvariant::new(1, [2, 2, 0]));
        assert_eq!(classify_h2_orbit(&o).unwrap(), H2Orbit::Even);
    }

    #[test]
    fn h2_total_fixed_points_is_six() {
        for o in [
            h2_a_representative(5).unwrap(),
            h2_b_representative(7).unwrap(),
            two_cylinder_origami(1, 1, 0, 3, 1, 0).unwrap(),
        ] {
            assert_eq!(prym_fixed_point_count(&o).unwrap(), 6);
        }
    }

    #[test]
    fn expected_sizes_small() {
        assert_eq!(expected_orbit_sizes(5).unwrap(), (18, 9));
        assert_eq!(expected_orbit_sizes(7).unwrap(), (54, 36));
        assert!(expected_orbit_sizes(4).is_err());
        assert!(expected_orbit_sizes(3).is_err());
    }
}

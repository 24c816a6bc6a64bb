//! McMullen prototypes and butterfly moves for H(2).

use crate::arith::{gcd_i64, is_square, isqrt, reduce_minor};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A prototype `(a, b, c, e)` of discriminant `D = e² + 4bc` with
/// `0 < b, c`, `0 ≤ a < gcd(b,c)`, `c + e < b` and `gcd(a,b,c,e) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct H2Prototype {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
}

/// A butterfly move parameter: a positive integer or ∞.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Q {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Finite(q) => write!(f, "{q}"),
            Q::Infinity => write!(f, "inf"),
        }
    }
}

impl Q {
    pub fn parse(text: &str) -> Result<Q> {
        let t = text.trim();
        if t == "inf" || t == "∞" || t.eq_ignore_ascii_case("infinity") {
            Ok(Q::Infinity)
        } else {
            let q: i64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad q value {text:?}")))?;
            Ok(Q::Finite(q))
        }
    }
}

impl H2Prototype {
    pub fn new(a: i64, b: i64, c: i64, e: i64) -> Result<Self> {
        let p = H2Prototype { a, b, c, e };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let H2Prototype { a, b, c, e } = *self;
        let ok = b > 0
            && c > 0
            && a >= 0
            && a < gcd_i64(b, c)
            && c + e < b
            && gcd_i64(gcd_i64(a, b), gcd_i64(c, e)) == 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidPrototype(self.to_string()))
        }
    }

    pub fn discriminant(&self) -> i64 {
        self.e * self.e + 4 * self.b * self.c
    }

    /// `λ = (e + √D)/2`; integral whenever D is a perfect square.
    pub fn lambda(&self) -> i64 {
        let d = self.discriminant();
        debug_assert!(is_square(d));
        (self.e + isqrt(d)) / 2
    }

    pub fn is_reduced(&self) -> bool {
        self.a == 0 && self.c == 1
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad prototype entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected (a,b,c,e), got {text:?}")));
        }
        H2Prototype::new(parts[0], parts[1], parts[2], parts[3])
    }
}

impl fmt::Display for H2Prototype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.e)
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 5 && (d % 4 == 0 || d % 4 == 1) {
        Ok(())
    } else {
        Err(Error::InvalidDiscriminant(d))
    }
}

/// All prototypes of discriminant `D` (the set P_D).
pub fn enumerate_prototypes(d: i64) -> Result<Vec<H2Prototype>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    let root = isqrt(d);
    for e in -root..=root {
        if (d - e * e) % 4 != 0 {
            continue;
        }
        let m = (d - e * e) / 4;
        if m <= 0 {
            continue;
        }
        // bc = m with c + e < b
        for c in 1..=isqrt(m) {
            if m % c != 0 {
                continue;
            }
            let b = m / c;
            let g = gcd_i64(b, c);
            for a in 0..g {
                for (bb, cc) in [(b, c), (c, b)] {
                    if cc + e >= bb {
                        continue;
                    }
                    if a >= gcd_i64(bb, cc) {
                        continue;
                    }
                    if gcd_i64(gcd_i64(a, bb), gcd_i64(cc, e)) != 1 {
                        continue;
                    }
                    out.push(H2Prototype { a, b: bb, c: cc, e });
                }
                if b == c {
                    break;
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The set S_D of reduced-prototype parameters:
/// `{e ≡ D mod 2 : e² < D and (e+2)² < D}`.
pub fn reduced_set(d: i64) -> Result<Vec<i64>> {
    check_discriminant(d)?;
    let root = isqrt(d);
    Ok((-root - 2..=root)
        .filter(|&e| (e - d).rem_euclid(2) == 0 && e * e < d && (e + 2) * (e + 2) < d)
        .collect())
}

/// The reduced prototype `(0, (D-e²)/4, 1, e)` for `e ∈ S_D`.
pub fn reduced_prototype(d: i64, e: i64) -> Result<H2Prototype> {
    H2Prototype::new(0, (d - e * e) / 4, 1, e)
}

/// Admissible q values: all `q ≥ 1` with `(e + 2qc)² < D`, plus ∞.
/// `q = 1` is always admissible.
pub fn admissible_q(p: &H2Prototype) -> Vec<Q> {
    let d = p.discriminant();
    let mut out = Vec::new();
    let mut q = 1;
    loop {
        let t = p.e + 2 * q * p.c;
        if t * t < d {
            out.push(Q::Finite(q));
            q += 1;
        } else {
            break;
        }
    }
    out.push(Q::Infinity);
    out
}

pub fn is_admissible(p: &H2Prototype, q: Q) -> bool {
    match q {
        Q::Infinity => true,
        Q::Finite(q) => {
            q >= 1 && {
                let t = p.e + 2 * q * p.c;
                t * t < p.discriminant()
            }
        }
    }
}

/// The butterfly move `B_q`.
///
/// For finite q: `e' = -e - 2qc`, `c' = gcd(qc, b+qa)`,
/// `b' = (D - e'²)/(4c')`, and `a'` from the Euclidean reduction of the
/// basis minor `[[c, -a-e-qc], [-qc, b+qa]]` to `[[a*, b'], [c', 0]]`
/// followed by `a' = a* mod gcd(b', c')`. For q = ∞ the minor is
/// `[[0, b-e-c], [-c, a]]`.
pub fn butterfly(p: &H2Prototype, q: Q) -> Result<H2Prototype> {
    if !is_admissible(p, q) {
        return Err(Error::InadmissibleQ(format!("{q} for {p}")));
    }
    let d = p.discriminant();
    let H2Prototype { a, b, c, e } = *p;
    let (e2, minor) = match q {
        Q::Finite(q) => (
            -e - 2 * q * c,
            [[c, -a - e - q * c], [-q * c, b + q * a]],
        ),
        Q::Infinity => (-e - 2 * c, [[0, b - e - c], [-c, a]]),
    };
    let (a2, b2, c2) = reduce_minor(minor);
    debug_assert_eq!(c2, match q {
        Q::Finite(q) => gcd_i64(q * c, b + q * a),
        Q::Infinity => gcd_i64(a, c),
    });
    debug_assert_eq!(e2 * e2 + 4 * b2 * c2, d);
    let result = H2Prototype::new(a2, b2, c2, e2)?;
    Ok(result)
}

/// Iterate `B_1` until the prototype is reduced; returns the endpoint and
/// the number of moves. Within any three consecutive steps `c` halves unless
/// it is already 1, so at most `3(⌈log2 c⌉ + 1)` moves are used.
pub fn reduce_to_reduced(p: &H2Prototype) -> (H2Prototype, usize) {
    let mut cur = *p;
    let mut steps = 0;
    let cap = 3 * ((64 - (p.c as u64).leading_zeros()) as usize + 1) + 3;
    while !cur.is_reduced() {
        cur = butterfly(&cur, Q::Finite(1)).expect("B_1 is always admissible");
        steps += 1;
        assert!(steps <= cap, "B_1 iteration exceeded the halving bound");
    }
    (cur, steps)
}

/// Discriminants excluded from the two-component theorem.
pub const SPIN_EXCEPTIONAL: [i64; 5] = [9, 49, 73, 121, 169];

#[derive(Clone, Debug, Serialize)]
pub struct SpinComponents {
    pub d: i64,
    /// Partition of S_D into butterfly-connected components.
    pub components: Vec<Vec<i64>>,
    /// True when D is one of the exceptional discriminants, where the
    /// two-component statement does not apply.
    pub exceptional: bool,
    /// Expected component count from the theorem (None when exceptional).
    pub expected: Option<usize>,
}

/// Connected components of S_D under butterfly moves that keep prototypes
/// reduced (in either direction).
pub fn spin_components(d: i64) -> Result<SpinComponents> {
    check_discriminant(d)?;
    let es = reduced_set(d)?;
    let index: BTreeMap<i64, usize> = es.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..es.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &e in &es {
        let p = reduced_prototype(d, e)?;
        for q in admissible_q(&p) {
            let img = butterfly(&p, q)?;
            if img.is_reduced() {
                if let Some(&j) = index.get(&img.e) {
                    let (a, b) = (find(&mut parent, index[&e]), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for (i, &e) in es.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(e);
    }
    let mut components: Vec<Vec<i64>> = groups.into_values().collect();
    components.sort();
    let exceptional = SPIN_EXCEPTIONAL.contains(&d);
    let expected = if exceptional {
        None
    } else {
        Some(if d % 8 == 1 { 2 } else { 1 })
    };
    Ok(SpinComponents {
        d,
        components,
        exceptional,
        expected,
    })
}

/// Distinct e-values present in a component list, for sanity checks.
pub fn component_elements(c: &SpinComponents) -> BTreeSet<i64> {
    c.components.iter().flatten().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_prototypes_exist() {
        let p196 = enumerate_prototypes(196).unwrap();
        assert!(p196.contains(&H2Prototype::new(1, 24, 2, 2).unwrap()));
        assert!(p196.contains(&H2Prototype::new(1, 12, 2, -10).unwrap()));
    }

    #[test]
    fn reduced_sets() {
        assert_eq!(reduced_set(25).unwrap(), vec![-3, -1, 1]);
        assert_eq!(reduced_set(16).unwrap(), vec![-2, 0]);
        // every e in S_D yields a valid reduced prototype
        for d in [16, 25, 49, 100, 196] {
            for e in reduced_set(d).unwrap() {
                let p = reduced_prototype(d, e).unwrap();
                assert!(p.is_reduced());
                assert_eq!(p.discriminant(), d);
            }
        }
        // D = 25 reduced subset
        let s: Vec<H2Prototype> = reduced_set(25)
            .unwrap()
            .into_iter()
            .map(|e| reduced_prototype(25, e).unwrap())
            .collect();
        assert_eq!(
            s,
            vec![
                H2Prototype::new(0, 4, 1, -3).unwrap(),
                H2Prototype::new(0, 6, 1, -1).unwrap(),
                H2Prototype::new(0, 6, 1, 1).unwrap(),
            ]
        );
    }

    #[test]
    fn admissible_q_golden() {
        let p = H2Prototype::new(1, 24, 2, 2).unwrap();
        assert_eq!(admissible_q(&p), vec![Q::Finite(1), Q::Finite(2), Q::Infinity]);
        let p = H2Prototype::new(0, 6, 1, -1).unwrap();
        assert_eq!(admissible_q(&p), vec![Q::Finite(1), Q::Finite(2), Q::Infinity]);
        // q = 1 is always admissible
        for d in [25, 36, 49, 64, 81, 100] {
            for p in enumerate_prototypes(d).unwrap() {
                assert!(is_admissible(&p, Q::Finite(1)), "{p}");
            }
        }
    }

    #[test]
    fn butterfly_golden() {
        let p = H2Prototype::new(1, 24, 2, 2).unwrap();
        let img = butterfly(&p, Q::Finite(2)).unwrap();
        assert_eq!(img, H2Prototype::new(1, 12, 2, -10).unwrap());
    }

    #[test]
    fn butterfly_reduced_identities() {
        // B_1(0,b,1,e) = (0, b-e-1, 1, -e-2)
        for d in [25, 49, 64, 81] {
            for e in reduced_set(d).unwrap() {
                let p = reduced_prototype(d, e).unwrap();
                let img = butterfly(&p, Q::Finite(1)).unwrap();
                assert_eq!(img, H2Prototype::new(0, p.b - p.e - 1, 1, -p.e - 2).unwrap());
            }
        }
        // B_inf(0,b,c,e) = (0, b-e-c, c, -e-2c)
        for d in [25, 49, 64, 81, 121] {
            for p in enumerate_prototypes(d).unwrap() {
                if p.a != 0 {
                    continue;
                }
                let img = butterfly(&p, Q::Infinity).unwrap();
                assert_eq!(
                    img,
                    H2Prototype::new(0, p.b - p.e - p.c, p.c, -p.e - 2 * p.c).unwrap()
                );
            }
        }
    }

    #[test]
    fn butterfly_preserves_discriminant_and_e_rule() {
        for d in [25, 36, 49, 64, 81, 100, 196] {
            for p in enumerate_prototypes(d).unwrap() {
                for q in admissible_q(&p) {
                    let img = butterfly(&p, q).unwrap();
                    assert_eq!(img.discriminant(), d);
                    let expect_e = match q {
                        Q::Finite(q) => -p.e - 2 * q * p.c,
                        Q::Infinity => -p.e - 2 * p.c,
                    };
                    assert_eq!(img.e, expect_e);
                    img.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn reduction_reaches_reduced_within_bound() {
        let p = H2Prototype::new(1, 24, 2, 2).unwrap();
        let (r, _) = reduce_to_reduced(&p);
        assert!(r.is_reduced());
        assert_eq!(r.discriminant(), 196);
        // already reduced input takes 0 steps
        let p = reduced_prototype(25, -1).unwrap();
        assert_eq!(reduce_to_reduced(&p), (p, 0));
    }

    #[test]
    fn spin_component_counts() {
        assert_eq!(spin_components(25).unwrap().components.len(), 2);
        assert_eq!(spin_components(64).unwrap().components.len(), 1);
        assert!(spin_components(49).unwrap().exceptional);
    }
}

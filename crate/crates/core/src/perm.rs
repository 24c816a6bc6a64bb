//! Exact permutation arithmetic on `{1..n}`.
//!
//! Permutations are exposed 1-based (cycle notation, image sequences) to match
//! the usual conventions for origami data; indices are stored 0-based
//! internally.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{1..n}` given by its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `images[i]` is the 0-based image of the 0-based point `i`.
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Build from a 1-based image sequence, checking bijectivity.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut table = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::NotBijective(n));
            }
            seen[im - 1] = true;
            table.push((im - 1) as u32);
        }
        Ok(Permutation { images: table })
    }

    /// Build from disjoint cycles over `{1..n}`; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut table: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Parse(format!("cycle entry out of range 1..={n}")));
                }
                if touched[a - 1] {
                    return Err(Error::Parse(format!("point {a} appears twice in cycles")));
                }
                touched[a - 1] = true;
                table[a - 1] = (b - 1) as u32;
            }
        }
        Ok(Permutation { images: table })
    }

    /// Parse whitespace-insensitive cycle notation like `"(1,2)(3,4,5)"`.
    /// `"()"` denotes the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() || cleaned == "()" {
            return Self::from_cycles(n, &[]);
        }
        let mut cycles = Vec::new();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {text:?}")))?;
            let inner = &rest[1..close];
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based image sequence.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = other
            .images
            .iter()
            .map(|&i| self.images[i as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `h ∘ v ∘ h⁻¹ ∘ v⁻¹`.
    pub fn commutator(h: &Permutation, v: &Permutation) -> Result<Permutation> {
        if h.degree() != v.degree() {
            return Err(Error::DegreeMismatch(h.degree(), v.degree()));
        }
        let n = h.degree();
        let hi = h.inverse();
        let vi = v.inverse();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            images.push(h.apply(v.apply(hi.apply(vi.apply(i)))) as u32);
        }
        Ok(Permutation { images })
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Cycles as 0-based point lists; each cycle starts at its smallest point.
    /// Fixed points are included as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// Conjugate `sigma ∘ self ∘ sigma⁻¹` (relabeling points by `sigma`).
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Permutation> {
        sigma.compose(self)?.compose(&sigma.inverse())
    }
}

/// True iff the group generated by `h` and `v` has a single orbit on points.
pub fn is_transitive(h: &Permutation, v: &Permutation) -> Result<bool> {
    if h.degree() != v.degree() {
        return Err(Error::DegreeMismatch(h.degree(), v.degree()));
    }
    let n = h.degree();
    if n == 0 {
        return Ok(false);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    let hi = h.inverse();
    let vi = v.inverse();
    while let Some(p) = stack.pop() {
        for q in [h.apply(p), hi.apply(p), v.apply(p), vi.apply(p)] {
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    Ok(count == n)
}

/// True iff `⟨h, v⟩` preserves no nontrivial block system.
///
/// Uses minimal block closure: for each pair of points, merge them, close the
/// partition under both generators, and test whether the resulting block is
/// proper. The degenerate degree-1 pair is declared primitive.
pub fn is_primitive(h: &Permutation, v: &Permutation) -> Result<bool> {
    if !is_transitive(h, v)? {
        return Err(Error::NotTransitive);
    }
    let n = h.degree();
    if n == 1 {
        return Ok(true);
    }
    let gens = [h.clone(), v.clone()];
    for other in 1..n {
        let size = minimal_block_size(n, &gens, 0, other);
        if size != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size of the minimal block containing `a` and `b` for the given generators.
fn minimal_block_size(n: usize, gens: &[Permutation], a: usize, b: usize) -> usize {
    // union-find with closure under generators
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[rx] = ry;
        for g in gens {
            queue.push((g.apply(x), g.apply(y)));
        }
    }
    let root = find(&mut parent, a);
    (0..n).filter(|&x| find(&mut parent, x) == root).count()
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(1,2)(3,4,5)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn compose_identity() {
        let c = p("(1,2,3)", 3);
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&c).unwrap(), c);
        assert_eq!(c.compose(&id).unwrap(), c);
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p("(1,2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_order_is_apply_right_first() {
        // compose(p, q) maps i to p(q(i)); checked against exhaustive table
        let a = p("(1,2,3)", 3);
        let b = p("(1,2)", 3);
        let ab = a.compose(&b).unwrap();
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        // (1,2,3)∘(1,2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        assert_eq!(ab.images_one_based(), vec![3, 2, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let c = p("(1,3,2)", 3);
        assert_eq!(p("(1,2,3)", 3).inverse(), c);
        let q = p("(1,4,2)(3,7,9,10)", 10);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        assert_eq!(q.inverse().inverse(), q);
    }

    #[test]
    fn commutator_trivial_cases() {
        let q = p("(1,2,3,4)", 4);
        assert!(Permutation::commutator(&q, &q).unwrap().is_identity());
        let id = Permutation::identity(4);
        assert!(Permutation::commutator(&id, &q).unwrap().is_identity());
    }

    #[test]
    fn commutator_of_transpositions_is_three_cycle() {
        let a = p("(1,2)", 3);
        let b = p("(1,3)", 3);
        let c = Permutation::commutator(&a, &b).unwrap();
        assert_eq!(c.cycle_type(), vec![3]);
    }

    #[test]
    fn cycle_type_sums_to_degree() {
        assert_eq!(Permutation::identity(5).cycle_type(), vec![1, 1, 1, 1, 1]);
        assert_eq!(p("(1,2,3)(4,5)", 5).cycle_type(), vec![3, 2]);
    }

    #[test]
    fn transitivity_cases() {
        let id1 = Permutation::identity(1);
        assert!(is_transitive(&id1, &id1).unwrap());
        let h = p("(1,2)", 3);
        let id = Permutation::identity(3);
        assert!(!is_transitive(&h, &id).unwrap());
        assert!(is_transitive(&p("(1,2)", 3), &p("(2,3)", 3)).unwrap());
    }

    #[test]
    fn primitivity_blocks() {
        // cyclic C4 acting on 4 points preserves blocks {1,3},{2,4}
        let c4 = p("(1,2,3,4)", 4);
        let c4_sq = c4.compose(&c4).unwrap(); // keeps the pair transitive, group stays cyclic
        assert!(!is_primitive(&c4, &c4_sq).unwrap());
        // full symmetric group is primitive
        assert!(is_primitive(&p("(1,2)", 3), &p("(1,2,3)", 3)).unwrap());
        // torus convention
        let id1 = Permutation::identity(1);
        assert!(is_primitive(&id1, &id1).unwrap());
    }

    #[test]
    fn primitivity_matches_brute_force_small_degrees() {
        // all invariant partitions into equal blocks, degrees <= 6
        fn brute_force(h: &Permutation, v: &Permutation) -> bool {
            let n = h.degree();
            if n == 1 {
                return true;
            }
            // enumerate block sizes d | n, 1 < d < n; partitions as colorings
            for d in 2..n {
                if n % d != 0 {
                    continue;
                }
                // candidate block system generated by the block containing point 0
                // brute force: any d-subset containing 0 that is a block
                let mut subset: Vec<usize> = (0..d).collect();
                loop {
                    if is_block(h, v, &subset) {
                        return false;
                    }
                    // next d-combination of 0..n that contains 0
                    if !next_combination(&mut subset, n) {
                        break;
                    }
                    if subset[0] != 0 {
                        break;
                    }
                }
            }
            true
        }
        fn next_combination(c: &mut [usize], n: usize) -> bool {
            let k = c.len();
            let mut i = k;
            while i > 0 {
                i -= 1;
                if c[i] != i + n - k {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    return true;
                }
            }
            false
        }
        fn is_block(h: &Permutation, v: &Permutation, b: &[usize]) -> bool {
            for g in [h, v] {
                let image: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                let overlap = image.iter().filter(|x| b.contains(x)).count();
                if overlap != 0 && overlap != b.len() {
                    return false;
                }
            }
            true
        }

        let cases: Vec<(Permutation, Permutation)> = vec![
            (p("(1,2)", 3), p("(1,2,3)", 3)),
            (p("(1,2,3,4)", 4), p("(1,2,3,4)", 4).compose(&p("(1,2,3,4)", 4)).unwrap()),
            (p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)),
            (p("(1,2,3,4,5,6)", 6), p("(1,4)", 6)),
            (p("(1,2,3,4,5)", 5), p("(1,2)", 5)),
            (p("(1,2,3,4,5,6)", 6), p("(1,2)", 6)),
        ];
        for (h, v) in cases {
            if !is_transitive(&h, &v).unwrap() {
                continue;
            }
            assert_eq!(
                is_primitive(&h, &v).unwrap(),
                brute_force(&h, &v),
                "disagreement on ({h}, {v})"
            );
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let q = p(" ( 1 , 2 ) ( 3 , 4 , 5 ) ", 6);
        assert_eq!(q.to_string(), "(1,2)(3,4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert!(Permutation::parse("(1,2", 3).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("(1,7)", 3).is_err());
    }
}

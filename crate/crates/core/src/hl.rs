//! The Hubert-Lelièvre reduction: connecting two-cylinder surfaces to
//! one-cylinder surfaces and one-cylinder surfaces to their parity targets,
//! for prime n.

use crate::census::{one_cylinder_origami, two_cylinder_params};
use crate::error::{Error, Result};
use crate::h2_surface::signed_t_exponent;
use crate::origami::Origami;
use crate::words::Sl2Word;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum HlCase {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for HlCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HlCase::I => "I",
            HlCase::II => "II",
            HlCase::III => "III",
            HlCase::IV => "IV",
        };
        write!(f, "{s}")
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Twist-case classification of a two-cylinder cusp representative;
/// cylinder 1 is the narrow cylinder.
pub fn hl_case(o: &Origami) -> Result<HlCase> {
    let params = two_cylinder_params(o).ok_or_else(|| {
        Error::WrongShape("case classification needs a two-cylinder H(2) surface".into())
    })?;
    if !params.is_normalized() {
        return Err(Error::BadArgument(
            "case classification needs the cusp representative".into(),
        ));
    }
    let (t1, t2) = (params.narrow.2, params.wide.2);
    Ok(match (t1 != 0, t2 != 0) {
        (true, true) => HlCase::I,
        (false, true) => HlCase::II,
        (true, false) => HlCase::III,
        (false, false) => HlCase::IV,
    })
}

/// Move to the cusp representative, appending the T-power to `word`.
fn normalize(o: &Origami, word: &mut Sl2Word) -> Origami {
    let width = o.cusp_width();
    let (rep, k) = o.cusp_representative();
    word.extend(&Sl2Word::t_power(signed_t_exponent(k, width)));
    rep
}

/// Connect a two-cylinder primitive H(2) surface (n prime) to a one-cylinder
/// surface by the case reductions of the inductive height argument: rotate
/// on cases I-III (re-normalizing twists each round), and horizontalize the
/// single-cylinder direction `(w1, h2)` on case IV. Returns the word and the
/// one-cylinder endpoint.
pub fn hl_reduce_to_one_cylinder(o: &Origami) -> Result<(Sl2Word, Origami)> {
    if !is_prime(o.n()) {
        return Err(Error::BadArgument(format!(
            "the reduction is stated for prime n, got {}",
            o.n()
        )));
    }
    if o.stratum() != vec![2] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    let mut word = Sl2Word::empty();
    let mut cur = o.clone();
    // heights strictly drop along case I/II steps, so O(√n) rounds suffice;
    // the cap only guards against convention bugs
    let cap = 4 * (o.n() as f64).sqrt() as usize + 16;
    for _ in 0..cap {
        if cur.horizontal_cylinders().len() == 1 {
            return Ok((word, cur));
        }
        cur = normalize(&cur, &mut word);
        let case = hl_case(&cur)?;
        match case {
            HlCase::IV => {
                let params = two_cylinder_params(&cur).unwrap();
                let candidates = [
                    (params.narrow.0 as i64, params.wide.1 as i64),
                    (params.wide.0 as i64, params.narrow.1 as i64),
                ];
                let mut done = false;
                for (p, r) in candidates {
                    let (moved, w) = cur.make_direction_horizontal(p, r)?;
                    if moved.horizontal_cylinders().len() == 1 {
                        word.extend(&w);
                        cur = moved;
                        done = true;
                        break;
                    }
                }
                if !done {
                    return Err(Error::SearchExhausted(format!(
                        "case IV direction is not a single cylinder on {cur}"
                    )));
                }
            }
            _ => {
                // cases I-III: rotate; case III additionally relies on the
                // next normalization pass
                word.extend(&Sl2Word::rotation());
                cur = cur.apply_word(&Sl2Word::rotation());
            }
        }
    }
    Err(Error::SearchExhausted(
        "case reduction did not terminate within the height bound".into(),
    ))
}

/// Rotation class of a one-cylinder surface, if it has one.
fn one_cyl_class(o: &Origami) -> Option<(usize, usize, usize)> {
    if o.stratum() != vec![2] {
        return None;
    }
    o.one_cylinder_params().ok().flatten()
}

/// One saddle-connection move: advance `j` steps in the cusp, then
/// horizontalize the transversal direction `(p, r)`.
#[derive(Clone, Copy, Debug)]
struct ShearMove {
    j: usize,
    p: i64,
    r: i64,
}

/// Apply a shear move recorded against the class representative to an
/// arbitrary member of the class, aligning the cusp phase first.
fn apply_shear_move(
    cur: &Origami,
    class: (usize, usize, usize),
    mv: ShearMove,
    word: &mut Sl2Word,
) -> Result<Origami> {
    let rep = one_cylinder_origami(class.0, class.1, class.2)?;
    let target_key = rep.canonical_key();
    let width = cur.cusp_width();
    let mut phase = None;
    for s in 0..width {
        if cur.act_t_power(s as i64).canonical_key() == target_key {
            phase = Some(s);
            break;
        }
    }
    let phase = phase.ok_or_else(|| {
        Error::SearchExhausted(format!(
            "surface of class {class:?} is not in the cusp of its model"
        ))
    })?;
    let total = (phase + mv.j) % width;
    let t = Sl2Word::t_power(signed_t_exponent(total, width));
    word.extend(&t);
    let shifted = cur.apply_word(&t);
    let (moved, w) = shifted.make_direction_horizontal(mv.p, mv.r)?;
    word.extend(&w);
    Ok(moved)
}

/// Breadth-first route between one-cylinder classes under shear moves.
/// Directions scanned are the continued-fraction families the reduction
/// uses: `(1+t, d)`, `(c'-b', 1)`, `(ℓ, b')`, `(d, 1)` and their kin, i.e.
/// all primitive `(p, r)` with bounded slope.
fn route_to_class(
    start: (usize, usize, usize),
    target: (usize, usize, usize),
    n: usize,
) -> Result<Vec<((usize, usize, usize), ShearMove)>> {
    if start == target {
        return Ok(Vec::new());
    }
    let mut visited: HashMap<(usize, usize, usize), Option<((usize, usize, usize), ShearMove)>> =
        HashMap::new();
    visited.insert(start, None);
    let mut frontier = vec![start];
    let nn = n as i64;
    for _depth in 0..6 {
        let mut next = Vec::new();
        for &class in &frontier {
            let rep = one_cylinder_origami(class.0, class.1, class.2)?;
            let width = rep.cusp_width();
            let shifted: Vec<Origami> =
                (0..width).map(|j| rep.act_t_power(j as i64)).collect();
            for r in 1..=nn {
                for p in -nn..=nn {
                    if crate::arith::gcd_i64(p, r) != 1 {
                        continue;
                    }
                    for (j, xj) in shifted.iter().enumerate() {
                        let (moved, _) = xj.make_direction_horizontal(p, r)?;
                        if let Some(found) = one_cyl_class(&moved) {
                            if let std::collections::hash_map::Entry::Vacant(e) =
                                visited.entry(found)
                            {
                                e.insert(Some((class, ShearMove { j, p, r })));
                                if found == target {
                                    // unwind the path
                                    let mut path = Vec::new();
                                    let mut at = found;
                                    while let Some(Some((prev, mv))) = visited.get(&at) {
                                        path.push((*prev, *mv));
                                        at = *prev;
                                    }
                                    path.reverse();
                                    return Ok(path);
                                }
                                next.push(found);
                            }
                        }
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Err(Error::SearchExhausted(format!(
        "no shear route from {start:?} to {target:?}"
    )))
}

/// Parity target of a one-cylinder class: `(1,1,n-2)` when the non-unit
/// saddle connections are odd, `(1,2,n-3)` when they are even.
pub fn parity_target(class: (usize, usize, usize), n: usize) -> (usize, usize, usize) {
    let parts = [class.0, class.1, class.2];
    let odd = parts.iter().filter(|&&x| x % 2 == 1).count();
    // n is odd, so the triple has exactly one or all-three odd entries
    if odd == 3 {
        (1, 1, n - 2)
    } else {
        (1, 2, n - 3)
    }
}

/// Connect a one-cylinder primitive H(2) surface (n prime) to its parity
/// target class by a route of saddle-connection shears. Returns the word and
/// the endpoint in the target cusp.
pub fn hl_connect_one_cylinder(o: &Origami) -> Result<(Sl2Word, Origami)> {
    if !is_prime(o.n()) {
        return Err(Error::BadArgument(format!(
            "the connection procedure is stated for prime n, got {}",
            o.n()
        )));
    }
    let n = o.n();
    let start = one_cyl_class(o)
        .ok_or_else(|| Error::WrongShape("expected a one-cylinder H(2) surface".into()))?;
    let target = parity_target(start, n);
    let mut word = Sl2Word::empty();
    let mut cur = o.clone();
    if start != target {
        let path = route_to_class(start, target, n)?;
        for (class, mv) in path {
            cur = apply_shear_move(&cur, class, mv, &mut word)?;
        }
    }
    cur = normalize(&cur, &mut word);
    let got = one_cyl_class(&cur).ok_or_else(|| {
        Error::SearchExhausted("route left the one-cylinder world".into())
    })?;
    if got != target {
        return Err(Error::SearchExhausted(format!(
            "route ended at {got:?} instead of {target:?}"
        )));
    }
    Ok((word, cur))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate_h2_census, h2_b_representative};

    #[test]
    fn case_classification() {
        let b = h2_b_representative(5).unwrap();
        assert_eq!(hl_case(&b).unwrap(), HlCase::IV);
        // non-normalized input is rejected
        assert!(hl_case(&b.act_t()).is_err());
    }

    #[test]
    fn reduce_b_representative() {
        let b = h2_b_representative(5).unwrap();
        let (word, end) = hl_reduce_to_one_cylinder(&b).unwrap();
        assert_eq!(end.horizontal_cylinders().len(), 1);
        assert!(b.apply_word(&word).isomorphic(&end));
    }

    #[test]
    fn already_one_cylinder_is_a_fixed_point() {
        let o = one_cylinder_origami(1, 3, 3).unwrap();
        let (word, end) = hl_reduce_to_one_cylinder(&o).unwrap();
        assert!(word.is_empty());
        assert!(end.isomorphic(&o));
    }

    #[test]
    fn connect_one_cylinder_small_prime() {
        let n = 7;
        for (a, b, c) in [(1usize, 3usize, 3usize), (1, 2, 4), (1, 4, 2), (2, 2, 3), (1, 1, 5)] {
            let o = one_cylinder_origami(a, b, c).unwrap();
            let (word, end) = hl_connect_one_cylinder(&o).unwrap();
            assert!(o.apply_word(&word).isomorphic(&end), "({a},{b},{c})");
            let got = end.one_cylinder_params().unwrap().unwrap();
            assert_eq!(got, parity_target((a, b, c), n), "({a},{b},{c})");
            assert!(word.len() <= 5 * n * n);
        }
    }

    #[test]
    fn full_reduction_census_n5() {
        for o in enumerate_h2_census(5).unwrap() {
            if o.horizontal_cylinders().len() != 2 {
                continue;
            }
            let (word, end) = hl_reduce_to_one_cylinder(&o).unwrap();
            assert!(o.apply_word(&word).isomorphic(&end));
            assert_eq!(end.horizontal_cylinders().len(), 1);
            assert!(word.len() <= 5 * 56); // 5 n^{5/2} at n = 5
        }
    }

    #[test]
    fn rejects_composite_n() {
        let o = one_cylinder_origami(1, 2, 5).unwrap(); // n = 8
        assert!(hl_reduce_to_one_cylinder(&o).is_err());
        assert!(hl_connect_one_cylinder(&o).is_err());
    }
}

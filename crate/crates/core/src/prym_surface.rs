//! Origami constructions and extraction for the Prym loci in H(4) and H(6).
//!
//! Reduced prototypes are realized square by square from the scaled
//! splitting pictures; general prototypes are recovered from surfaces by the
//! inverse scaling relations plus a butterfly probe for the twist parameter.

use crate::arith::{gcd_i64, isqrt};
use crate::error::{Error, Result};
use crate::h2::Q;
use crate::invariants::{find_involution, prym_fixed_point_count};
use crate::origami::Origami;
use crate::perm::Permutation;
use crate::prym::{
    butterfly4, butterfly6, is_admissible4, is_admissible6, Prym4Prototype, Prym6Prototype,
    PrymKind, Sign,
};
use crate::words::Sl2Word;

/// Square-id allocator for multi-cylinder constructions.
struct Builder {
    n: usize,
    h: Vec<usize>,
    v: Vec<usize>,
}

/// A cylinder under construction: `base + r*width + x` is the square at row
/// `r`, position `x`.
#[derive(Clone, Copy)]
struct Cyl {
    base: usize,
    width: usize,
    height: usize,
}

impl Cyl {
    fn sq(&self, r: usize, x: usize) -> usize {
        self.base + r * self.width + (x % self.width)
    }
    fn top_row(&self) -> usize {
        self.height - 1
    }
}

impl Builder {
    fn new(n: usize) -> Builder {
        Builder {
            n,
            h: vec![usize::MAX; n],
            v: vec![usize::MAX; n],
        }
    }

    fn add_cyl(&mut self, base: usize, width: usize, height: usize) -> Cyl {
        let c = Cyl { base, width, height };
        for r in 0..height {
            for x in 0..width {
                self.h[c.sq(r, x)] = c.sq(r, x + 1);
                if r + 1 < height {
                    self.v[c.sq(r, x)] = c.sq(r + 1, x);
                }
            }
        }
        c
    }

    fn glue_up(&mut self, from: usize, to: usize) {
        debug_assert_eq!(self.v[from], usize::MAX, "double gluing");
        self.v[from] = to;
    }

    fn finish(self) -> Result<Origami> {
        if self.h.iter().chain(self.v.iter()).any(|&x| x == usize::MAX) {
            return Err(Error::NoIntegralModel("incomplete gluing".into()));
        }
        let to_perm = |images: &[usize]| {
            Permutation::from_images_one_based(
                &images.iter().map(|&x| x + 1).collect::<Vec<_>>(),
            )
        };
        Origami::new(to_perm(&self.h)?, to_perm(&self.v)?)
        .map_err(|_| Error::NoIntegralModel("construction is not transitive".into()))
    }

    fn used(&self) -> usize {
        self.n
    }
}

/// Three-cylinder surface of type A±: the E2 cylinders `A`, `B` (w2 × h2)
/// and the square factor `U` (w1 × h1) glued along slits of width w1; `A`'s
/// leftover wrap slot feeds `B`, `B`'s slit feeds `U`, `U`'s top returns to
/// `A`.
fn build_a_plus(w1: usize, h1: usize, w2: usize, h2: usize) -> Result<Origami> {
    if w1 >= w2 {
        return Err(Error::NoIntegralModel(format!(
            "slit {w1} does not fit in width {w2}"
        )));
    }
    let n = w1 * h1 + 2 * w2 * h2;
    let mut b = Builder::new(n);
    let ca = b.add_cyl(0, w2, h2);
    let cb = b.add_cyl(w2 * h2, w2, h2);
    let cu = b.add_cyl(2 * w2 * h2, w1, h1);
    let s = w2 - w1; // slit position
    for x in 0..w2 {
        // A's top: the slit lands in B, the rest wraps
        let ta = ca.sq(ca.top_row(), x);
        if x >= s {
            b.glue_up(ta, cb.sq(0, x - s));
        } else {
            b.glue_up(ta, ca.sq(0, x));
        }
        // B's top: the slit feeds U, the rest wraps
        let tb = cb.sq(cb.top_row(), x);
        if x < w1 {
            b.glue_up(tb, cu.sq(0, x));
        } else {
            b.glue_up(tb, cb.sq(0, x));
        }
    }
    for x in 0..w1 {
        b.glue_up(cu.sq(cu.top_row(), x), ca.sq(0, s + x));
    }
    debug_assert_eq!(b.used(), n);
    b.finish()
}

/// Three-cylinder surface of type A-: the paired square factors `P`, `Q`
/// (w1 × h1) both glued into the unpaired E2 cylinder `U` (w2 × h2) along
/// adjacent slits.
fn build_a_minus(w1: usize, h1: usize, w2: usize, h2: usize) -> Result<Origami> {
    if 2 * w1 > w2 {
        return Err(Error::NoIntegralModel(format!(
            "slits 2x{w1} do not fit in width {w2}"
        )));
    }
    let n = 2 * w1 * h1 + w2 * h2;
    let mut b = Builder::new(n);
    let cu = b.add_cyl(0, w2, h2);
    let cp = b.add_cyl(w2 * h2, w1, h1);
    let cq = b.add_cyl(w2 * h2 + w1 * h1, w1, h1);
    for x in 0..w2 {
        let t = cu.sq(cu.top_row(), x);
        if x < w1 {
            b.glue_up(t, cp.sq(0, x));
        } else if x < 2 * w1 {
            b.glue_up(t, cq.sq(0, x - w1));
        } else {
            b.glue_up(t, cu.sq(0, x));
        }
    }
    for x in 0..w1 {
        b.glue_up(cp.sq(cp.top_row(), x), cu.sq(0, x));
        b.glue_up(cq.sq(cq.top_row(), x), cu.sq(0, w1 + x));
    }
    debug_assert_eq!(b.used(), n);
    b.finish()
}

/// Four-cylinder H(6) surface of type A: square factors `P`, `Q` (w1 × h1)
/// between the E2 pair `A`, `B` (w2 × h2).
fn build_h6_a(w1: usize, h1: usize, w2: usize, h2: usize) -> Result<Origami> {
    if 2 * w1 > w2 {
        return Err(Error::NoIntegralModel(format!(
            "slits 2x{w1} do not fit in width {w2}"
        )));
    }
    let n = 2 * w1 * h1 + 2 * w2 * h2;
    let mut b = Builder::new(n);
    let ca = b.add_cyl(0, w2, h2);
    let cb = b.add_cyl(w2 * h2, w2, h2);
    let cp = b.add_cyl(2 * w2 * h2, w1, h1);
    let cq = b.add_cyl(2 * w2 * h2 + w1 * h1, w1, h1);
    let s = w2 - 2 * w1;
    for x in 0..w2 {
        // A's top: slits into P and Q, the rest wraps
        let ta = ca.sq(ca.top_row(), x);
        if x < w1 {
            b.glue_up(ta, cp.sq(0, x));
        } else if x < 2 * w1 {
            b.glue_up(ta, cq.sq(0, x - w1));
        } else {
            b.glue_up(ta, ca.sq(0, x));
        }
        // B's top: positions [s, w2) return to A's bottom [0, 2 w1)
        let tb = cb.sq(cb.top_row(), x);
        if x >= s {
            b.glue_up(tb, ca.sq(0, x - s));
        } else {
            b.glue_up(tb, cb.sq(0, x));
        }
    }
    for x in 0..w1 {
        b.glue_up(cp.sq(cp.top_row(), x), cb.sq(0, s + x));
        b.glue_up(cq.sq(cq.top_row(), x), cb.sq(0, s + w1 + x));
    }
    debug_assert_eq!(b.used(), n);
    b.finish()
}

fn validate_prym(o: &Origami, stratum: usize, fixed_points: usize) -> Result<()> {
    if o.stratum() != vec![stratum] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    match prym_fixed_point_count(o) {
        Ok(f) if f == fixed_points => Ok(()),
        Ok(f) => Err(Error::NoIntegralModel(format!(
            "involution has {f} fixed points, expected {fixed_points}"
        ))),
        Err(e) => Err(e),
    }
}

/// Surface parameter cases of the reduced H(4) prototype `(w, 1, 0, e, ε)`:
/// `(w1, h1, w2, h2)` options per (D vs n², ε).
fn prym4_reduced_cases(p: &Prym4Prototype, n: usize) -> Vec<(usize, usize, usize, usize)> {
    let d = p.discriminant();
    let n_i = n as i64;
    let mut out = Vec::new();
    let w = p.w;
    if d == n_i * n_i {
        let lambda = (p.e + n_i) / 2;
        if lambda > 0 {
            match p.eps {
                Sign::Plus => {
                    // (1, λ, w/λ, 1)
                    if w % lambda == 0 {
                        out.push((1, lambda as usize, (w / lambda) as usize, 1));
                    }
                }
                Sign::Minus => {
                    // (1, λ/2, 2w/λ, 1)
                    if lambda % 2 == 0 && (2 * w) % lambda == 0 {
                        out.push((1, (lambda / 2) as usize, (2 * w / lambda) as usize, 1));
                    }
                }
            }
        }
    }
    if n % 2 == 0 && d * 4 == n_i * n_i {
        let lambda = (p.e + n_i / 2) / 2;
        if lambda > 0 {
            match p.eps {
                Sign::Plus => {
                    // (2, λ, 2w/λ, 1)
                    if (2 * w) % lambda == 0 {
                        out.push((2, lambda as usize, (2 * w / lambda) as usize, 1));
                    }
                }
                Sign::Minus => {
                    // (1, λ, 2w/λ, 2) or (2, λ/2, 4w/λ, 1)
                    if (2 * w) % lambda == 0 {
                        out.push((1, lambda as usize, (2 * w / lambda) as usize, 2));
                    }
                    if lambda % 2 == 0 && (4 * w) % lambda == 0 {
                        out.push((2, (lambda / 2) as usize, (4 * w / lambda) as usize, 1));
                    }
                }
            }
        }
    }
    out
}

/// Build an origami realizing a reduced H(4) prototype with `n` squares.
pub fn prototype4_to_origami(p: &Prym4Prototype, n: usize) -> Result<Origami> {
    p.validate()?;
    if !p.is_reduced() {
        return Err(Error::BadArgument(format!(
            "surface models are built for reduced prototypes, got {p}"
        )));
    }
    let d = p.discriminant();
    if d != (n * n) as i64 && 4 * d != (n * n) as i64 {
        return Err(Error::BadArgument(format!(
            "n = {n} does not match D = {d}"
        )));
    }
    for (w1, h1, w2, h2) in prym4_reduced_cases(p, n) {
        if w1 * h1 + 2 * w2 * h2 != n && 2 * w1 * h1 + w2 * h2 != n {
            continue;
        }
        let built = match p.eps {
            Sign::Plus => build_a_plus(w1, h1, w2, h2),
            Sign::Minus => build_a_minus(w1, h1, w2, h2),
        };
        if let Ok(o) = built {
            if o.n() == n
                && validate_prym(&o, 4, 4).is_ok()
                && origami_to_prototype4(&o).map_or(false, |q| q == *p)
            {
                let (rep, _) = o.cusp_representative();
                return Ok(rep);
            }
        }
    }
    Err(Error::NoIntegralModel(format!("{p} with n = {n}")))
}

/// Build an origami realizing a reduced or almost-reduced H(6) prototype
/// with `n` squares (`D = n²/4`).
pub fn prototype6_to_origami(p: &Prym6Prototype, n: usize) -> Result<Origami> {
    p.validate()?;
    let d = p.discriminant();
    if 4 * d != (n * n) as i64 {
        return Err(Error::BadArgument(format!(
            "n = {n} does not match D = {d}"
        )));
    }
    if p.kind() != PrymKind::A {
        return Err(Error::BadArgument(format!("{p} is not of type A")));
    }
    let half = (n / 2) as i64;
    let lambda = (p.e + half) / 2;
    let mut cases: Vec<(usize, usize, usize, usize)> = Vec::new();
    if p.is_reduced() {
        if lambda > 0 && p.w % lambda == 0 {
            cases.push((1, lambda as usize, (p.w / lambda) as usize, 1));
        }
    } else if p.h == 2 && p.t == 0 {
        if lambda > 0 && p.w % lambda == 0 {
            cases.push((1, lambda as usize, (p.w / lambda) as usize, 2));
        }
        if lambda > 0 && lambda % 2 == 0 && (2 * p.w) % lambda == 0 {
            cases.push((2, (lambda / 2) as usize, (2 * p.w / lambda) as usize, 1));
        }
    } else {
        return Err(Error::BadArgument(format!(
            "surface models are built for (almost-)reduced prototypes, got {p}"
        )));
    }
    for (w1, h1, w2, h2) in cases {
        if 2 * w1 * h1 + 2 * w2 * h2 != n {
            continue;
        }
        if let Ok(o) = build_h6_a(w1, h1, w2, h2) {
            if validate_prym(&o, 6, 2).is_ok()
                && origami_to_prototype6(&o).map_or(false, |q| q == *p)
            {
                let (rep, _) = o.cusp_representative();
                return Ok(rep);
            }
        }
    }
    Err(Error::NoIntegralModel(format!("{p} with n = {n}")))
}

/// Cylinder data grouped by the involution action: the unpaired cylinders
/// (mapped to themselves) and the paired classes.
struct PrymCylinders {
    /// (width, height, measured twist) for each unpaired cylinder.
    unpaired: Vec<(usize, usize, usize)>,
    /// one representative per swapped pair
    paired: Vec<(usize, usize, usize)>,
}

fn prym_cylinders(o: &Origami) -> Result<PrymCylinders> {
    let w = find_involution(o).ok_or(Error::NoInvolution)?;
    let cyls = o.horizontal_cylinders();
    let mut cyl_of = vec![usize::MAX; o.n()];
    for (i, c) in cyls.cylinders.iter().enumerate() {
        for row in &c.rows {
            for &s in row {
                cyl_of[s] = i;
            }
        }
    }
    let image_of = |i: usize| cyl_of[w.u.apply(cyls.cylinders[i].rows[0][0])];
    let mut unpaired = Vec::new();
    let mut paired = Vec::new();
    let mut seen = vec![false; cyls.len()];
    for i in 0..cyls.len() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let c = &cyls.cylinders[i];
        let j = image_of(i);
        if j == i {
            unpaired.push((c.width, c.height, c.twist));
        } else {
            seen[j] = true;
            let d = &cyls.cylinders[j];
            if (c.width, c.height) != (d.width, d.height) {
                return Err(Error::WrongShape(
                    "involution pairs cylinders of different dimensions".into(),
                ));
            }
            paired.push((c.width, c.height, c.twist));
        }
    }
    Ok(PrymCylinders { unpaired, paired })
}

/// Candidate `(w, h, e, ε, D)` data for a three-cylinder type A± surface,
/// from the four scaling cases.
fn prym4_dims_cases(
    n: usize,
    unpaired: (usize, usize),
    paired: (usize, usize),
) -> Vec<(i64, i64, i64, Sign, i64)> {
    let n_i = n as i64;
    let (w1u, h1u) = (unpaired.0 as i64, unpaired.1 as i64);
    let (w2p, h2p) = (paired.0 as i64, paired.1 as i64);
    let mut out = Vec::new();
    // ε = +: the unpaired cylinder is the square factor
    {
        // D = n²: λ = w1 h1, w = h1 w2, h = w1 h2
        let (lambda, w, h) = (w1u * h1u, h1u * w2p, w1u * h2p);
        let e = 2 * lambda - n_i;
        if e * e + 8 * w * h == n_i * n_i {
            out.push((w, h, e, Sign::Plus, n_i * n_i));
        }
        // D = n²/4: λ = w1 h1 / 2, w = h1 w2 / 2, h = w1 h2 / 2
        if n % 2 == 0 && w1u * h1u % 2 == 0 && h1u * w2p % 2 == 0 && w1u * h2p % 2 == 0 {
            let (lambda, w, h) = (w1u * h1u / 2, h1u * w2p / 2, w1u * h2p / 2);
            let e = 2 * lambda - n_i / 2;
            if 4 * (e * e + 8 * w * h) == n_i * n_i {
                out.push((w, h, e, Sign::Plus, n_i * n_i / 4));
            }
        }
    }
    // ε = -: the paired cylinders are the square factors, E2 is unpaired
    {
        let (w1p, h1p) = (paired.0 as i64, paired.1 as i64);
        let (w2u, h2u) = (unpaired.0 as i64, unpaired.1 as i64);
        // D = n²: λ = 2 w1 h1, w = h1 w2, h = w1 h2
        let (lambda, w, h) = (2 * w1p * h1p, h1p * w2u, w1p * h2u);
        let e = 2 * lambda - n_i;
        if e * e + 8 * w * h == n_i * n_i {
            out.push((w, h, e, Sign::Minus, n_i * n_i));
        }
        // D = n²/4: λ = w1 h1, w = h1 w2 / 2, h = w1 h2 / 2
        if n % 2 == 0 && h1p * w2u % 2 == 0 && w1p * h2u % 2 == 0 {
            let (lambda, w, h) = (w1p * h1p, h1p * w2u / 2, w1p * h2u / 2);
            let e = 2 * lambda - n_i / 2;
            if 4 * (e * e + 8 * w * h) == n_i * n_i {
                out.push((w, h, e, Sign::Minus, n_i * n_i / 4));
            }
        }
    }
    // keep only candidates satisfying the prototype inequalities
    out.retain(|&(w, h, e, _, _)| w > 0 && h > 0 && e + 2 * h < w);
    out
}

/// Extract the Lanneau-Nguyen prototype of a three-cylinder Prym H(4)
/// origami of type A±.
pub fn origami_to_prototype4(o: &Origami) -> Result<Prym4Prototype> {
    if o.stratum() != vec![4] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    let groups = prym_cylinders(o)?;
    if groups.unpaired.len() != 1 || groups.paired.len() != 1 {
        return Err(Error::WrongShape(format!(
            "expected one unpaired and one paired cylinder class, found {} + {}",
            groups.unpaired.len(),
            groups.paired.len()
        )));
    }
    let unpaired = (groups.unpaired[0].0, groups.unpaired[0].1);
    let paired = (groups.paired[0].0, groups.paired[0].1);
    let cases = prym4_dims_cases(o.n(), unpaired, paired);
    let mut hits = Vec::new();
    for (w, h, e, eps, _d) in cases {
        let g = gcd_i64(w, h);
        let ts: Vec<i64> = (0..g)
            .filter(|&t| gcd_i64(gcd_i64(w, h), gcd_i64(t, e)) == 1)
            .collect();
        for &t in &ts {
            if let Ok(p) = Prym4Prototype::new(w, h, t, e, eps) {
                hits.push(p);
            }
        }
    }
    resolve_twist4(o, hits)
}

/// Narrow a twist-candidate list by probing with realized butterflies.
fn resolve_twist4(o: &Origami, mut hits: Vec<Prym4Prototype>) -> Result<Prym4Prototype> {
    hits.sort();
    hits.dedup();
    if hits.is_empty() {
        return Err(Error::NoIntegralModel(format!(
            "no prototype data fits the cylinders of {o}"
        )));
    }
    if hits.len() == 1 {
        return Ok(hits[0]);
    }
    // candidates share (w, h, e, ε) and differ in t; distinguish by the
    // h' = gcd(qh, w + qt) of realized butterfly images. Only endpoints
    // matching some candidate's arithmetic image are accepted, so a phase
    // realizing an unrelated move cannot eliminate the true candidate.
    let eps = hits[0].eps;
    for q in 1..=4 {
        let q = Q::Finite(q);
        if !hits.iter().all(|p| is_admissible4(p, q)) {
            break;
        }
        let images: Vec<Prym4Prototype> = hits
            .iter()
            .map(|p| butterfly4(p, q))
            .collect::<Result<_>>()?;
        let image_matches = |moved: &Origami| -> Vec<usize> {
            let Ok(dims) = prym4_image_dims(moved) else { return Vec::new() };
            images
                .iter()
                .enumerate()
                .filter(|(_, img)| dims.contains(&(img.w, img.h, img.e, img.eps)))
                .map(|(i, _)| i)
                .collect()
        };
        let found = realize_phase_scan(o, q, Some(eps), &|moved| {
            !image_matches(moved).is_empty()
        });
        if let Ok((_, end)) = found {
            let keep = image_matches(&end);
            hits = keep.into_iter().map(|i| hits[i]).collect();
        }
        if hits.len() <= 1 {
            break;
        }
    }
    match hits.as_slice() {
        [p] => Ok(*p),
        [] => Err(Error::NoIntegralModel(format!(
            "butterfly probes eliminated all twist candidates for {o}"
        ))),
        more => Err(Error::NoIntegralModel(format!(
            "twist of {o} is ambiguous between {more:?}"
        ))),
    }
}

/// All (w, h, e, ε) readings of a type-A± image surface.
fn prym4_image_dims(o: &Origami) -> Result<Vec<(i64, i64, i64, Sign)>> {
    let groups = prym_cylinders(o)?;
    if groups.unpaired.len() != 1 || groups.paired.len() != 1 {
        return Err(Error::WrongShape("image is not a type A± surface".into()));
    }
    Ok(prym4_dims_cases(
        o.n(),
        (groups.unpaired[0].0, groups.unpaired[0].1),
        (groups.paired[0].0, groups.paired[0].1),
    )
    .into_iter()
    .map(|(w, h, e, eps, _)| (w, h, e, eps))
    .collect())
}

/// Realize a butterfly move on a Prym surface: scan the elements of the
/// cusp, horizontalize `(w2 + q t2, q h2)` on the E2 cylinder (`(t2, h2)`
/// for q = ∞), and normalize. The E2 cylinder is recognized by the
/// involution pairing: the paired class for ε = +, the unpaired cylinder
/// for ε = -, and the non-square paired class in H(6). A candidate is
/// accepted only when the endpoint's dimension readings contain the
/// arithmetic image of the extracted prototype.
pub fn realize_prym_butterfly(o: &Origami, q: Q) -> Result<(Sl2Word, Origami)> {
    match o.stratum().as_slice() {
        [4] => {
            let p = origami_to_prototype4(o)?;
            if !is_admissible4(&p, q) {
                return Err(Error::InadmissibleQ(format!("{q} for {p}")));
            }
            let img = butterfly4(&p, q)?;
            realize_phase_scan(o, q, Some(p.eps), &|moved| {
                prym4_image_dims(moved)
                    .map_or(false, |d| d.contains(&(img.w, img.h, img.e, img.eps)))
            })
        }
        [6] => {
            let p = origami_to_prototype6(o)?;
            if !crate::prym::is_admissible6(&p, q) {
                return Err(Error::InadmissibleQ(format!("{q} for {p}")));
            }
            let img = butterfly6(&p, q)?;
            realize_phase_scan(o, q, None, &|moved| {
                prym_cylinders(moved).map_or(false, |g| {
                    g.unpaired.is_empty()
                        && g.paired.len() == 2
                        && prym6_dims_cases(moved.n(), &g.paired)
                            .contains(&(img.w, img.h, img.e))
                })
            })
        }
        other => Err(Error::WrongStratum {
            found: format!("{other:?}"),
        }),
    }
}

/// The shared realization loop: for each cusp phase, read the E2 candidates
/// and horizontalize the butterfly direction, accepting the first endpoint
/// the predicate approves.
fn realize_phase_scan(
    o: &Origami,
    q: Q,
    eps_hint: Option<Sign>,
    accept: &dyn Fn(&Origami) -> bool,
) -> Result<(Sl2Word, Origami)> {
    let width = o.cusp_width();
    let (rep, k) = o.cusp_representative();
    for s in 0..width {
        let element = rep.act_t_power(s as i64);
        let Ok(groups) = prym_cylinders(&element) else { continue };
        let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
        match o.stratum().as_slice() {
            [4] => match eps_hint {
                Some(Sign::Plus) => candidates.extend(groups.paired.iter().copied()),
                Some(Sign::Minus) => candidates.extend(groups.unpaired.iter().copied()),
                None => {
                    candidates.extend(groups.paired.iter().copied());
                    candidates.extend(groups.unpaired.iter().copied());
                }
            },
            _ => {
                let mut cs = groups.paired.clone();
                cs.sort_by_key(|&(w, h, _)| std::cmp::Reverse(w * h));
                candidates.extend(cs);
            }
        }
        for (w2, h2, t2) in candidates {
            let dir = match q {
                Q::Finite(q) => (w2 as i64 + q * t2 as i64, q * h2 as i64),
                Q::Infinity => (t2 as i64, h2 as i64),
            };
            if dir == (0, 0) {
                continue;
            }
            let Ok((moved, cf)) = element.make_direction_horizontal(dir.0, dir.1) else {
                continue;
            };
            if accept(&moved) {
                let target_width = moved.cusp_width();
                let (end, k2) = moved.cusp_representative();
                let mut word = Sl2Word::t_power(crate::h2_surface::signed_t_exponent(
                    (k + s) % width,
                    width,
                ));
                word.extend(&cf);
                word.extend(&Sl2Word::t_power(crate::h2_surface::signed_t_exponent(
                    k2,
                    target_width,
                )));
                return Ok((word, end));
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no E2 reading realizes B_{q} on {o}"
    )))
}

/// Candidate `(w, h, e)` data for a four-cylinder H(6) type A surface: one
/// paired class is the square factor, the other is E2.
fn prym6_dims_cases(n: usize, pairs: &[(usize, usize, usize)]) -> Vec<(i64, i64, i64)> {
    let half = (n / 2) as i64;
    let mut out = Vec::new();
    for (sq, e2) in [(0usize, 1usize), (1, 0)] {
        if pairs.len() != 2 {
            break;
        }
        let (w1, h1) = (pairs[sq].0 as i64, pairs[sq].1 as i64);
        let (w2, h2) = (pairs[e2].0 as i64, pairs[e2].1 as i64);
        let lambda = w1 * h1;
        let (w, h) = (h1 * w2, w1 * h2);
        let e = 2 * lambda - half;
        if e * e + 4 * w * h != half * half {
            continue;
        }
        // type A: 2λ < w
        if w > 0 && h > 0 && 2 * lambda < w {
            out.push((w, h, e));
        }
    }
    out
}

/// Extract the prototype of a four-cylinder Prym H(6) origami of type A.
pub fn origami_to_prototype6(o: &Origami) -> Result<Prym6Prototype> {
    if o.stratum() != vec![6] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    if o.n() % 2 != 0 {
        return Err(Error::WrongShape("Prym H(6) origamis have even n".into()));
    }
    let groups = prym_cylinders(o)?;
    if !groups.unpaired.is_empty() || groups.paired.len() != 2 {
        return Err(Error::WrongShape(format!(
            "expected two paired cylinder classes, found {} unpaired + {} paired",
            groups.unpaired.len(),
            groups.paired.len()
        )));
    }
    let cases = prym6_dims_cases(o.n(), &groups.paired);
    let mut hits = Vec::new();
    for (w, h, e) in cases {
        let g = gcd_i64(w, h);
        for t in 0..g {
            if let Ok(p) = Prym6Prototype::new(w, h, t, e) {
                if p.kind() == PrymKind::A {
                    hits.push(p);
                }
            }
        }
    }
    resolve_twist6(o, hits)
}

fn resolve_twist6(o: &Origami, mut hits: Vec<Prym6Prototype>) -> Result<Prym6Prototype> {
    hits.sort();
    hits.dedup();
    if hits.is_empty() {
        return Err(Error::NoIntegralModel(format!(
            "no prototype data fits the cylinders of {o}"
        )));
    }
    if hits.len() == 1 {
        return Ok(hits[0]);
    }
    for q in 1..=4 {
        let q = Q::Finite(q);
        if !hits.iter().all(|p| is_admissible6(p, q)) {
            break;
        }
        let images: Vec<Prym6Prototype> = hits
            .iter()
            .map(|p| butterfly6(p, q))
            .collect::<Result<_>>()?;
        let image_matches = |moved: &Origami| -> Vec<usize> {
            let Ok(groups) = prym_cylinders(moved) else { return Vec::new() };
            if groups.paired.len() != 2 {
                return Vec::new();
            }
            let dims = prym6_dims_cases(moved.n(), &groups.paired);
            images
                .iter()
                .enumerate()
                .filter(|(_, img)| dims.contains(&(img.w, img.h, img.e)))
                .map(|(i, _)| i)
                .collect()
        };
        let found = realize_phase_scan(o, q, None, &|moved| !image_matches(moved).is_empty());
        if let Ok((_, end)) = found {
            let keep = image_matches(&end);
            hits = keep.into_iter().map(|i| hits[i]).collect();
        }
        if hits.len() <= 1 {
            break;
        }
    }
    match hits.as_slice() {
        [p] => Ok(*p),
        [] => Err(Error::NoIntegralModel(format!(
            "butterfly probes eliminated all twist candidates for {o}"
        ))),
        more => Err(Error::NoIntegralModel(format!(
            "twist of {o} is ambiguous between {more:?}"
        ))),
    }
}

/// All valid reduced H(6) prototypes `(w, 1, 0, e)` of discriminant D
/// (not only the even-w ones the S¹ congruence selects), type A first.
pub fn reduced6_all(d: i64) -> Vec<Prym6Prototype> {
    let root = isqrt(d);
    let mut out: Vec<Prym6Prototype> = (-root..=root)
        .filter(|e| (d - e * e) % 4 == 0 && (d - e * e) > 0)
        .filter_map(|e| Prym6Prototype::new((d - e * e) / 4, 1, 0, e).ok())
        .collect();
    out.sort_by_key(|p| (p.kind() != PrymKind::A, p.e));
    out
}

/// n for an H(4) prototype: √D for one orbit, 2√D for the other.
pub fn prym4_square_sides(d: i64) -> Vec<usize> {
    let mut out = Vec::new();
    if crate::arith::is_square(d) {
        out.push(isqrt(d) as usize);
        out.push(2 * isqrt(d) as usize);
    }
    out
}

/// True for a three-cylinder Prym H(4) surface that does not read as type
/// A±, i.e. a type B surface.
pub fn is_type_b4(o: &Origami) -> bool {
    o.stratum() == vec![4]
        && o.horizontal_cylinders().len() == 3
        && prym_fixed_point_count(o).map_or(false, |f| f == 4)
        && origami_to_prototype4(o).is_err()
}

/// True for a four-cylinder Prym H(6) surface that does not read as type A.
pub fn is_type_b6(o: &Origami) -> bool {
    o.stratum() == vec![6]
        && o.horizontal_cylinders().len() == 4
        && prym_fixed_point_count(o).map_or(false, |f| f == 2)
        && origami_to_prototype6(o).is_err()
}

/// Cylinder parameter readings `((w1,h1,t1),(w2,h2,t2))` of a type-B cusp
/// representative: both cylinder-class orders, with the twists ranging over
/// all values (the singular-offset measurement does not pin the
/// parameterization twists for these shapes).
fn type_b_params(o: &Origami) -> Result<Vec<((i64, i64, i64), (i64, i64, i64))>> {
    let groups = prym_cylinders(o)?;
    let mut classes: Vec<(usize, usize)> = Vec::new();
    classes.extend(groups.unpaired.iter().map(|&(w, h, _)| (w, h)));
    classes.extend(groups.paired.iter().map(|&(w, h, _)| (w, h)));
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in 0..classes.len() {
            if i == j {
                continue;
            }
            let (w1, h1) = (classes[i].0 as i64, classes[i].1 as i64);
            let (w2, h2) = (classes[j].0 as i64, classes[j].1 as i64);
            for t1 in 0..w1 {
                for t2 in 0..w2 {
                    out.push(((w1, h1, t1), (w2, h2, t2)));
                }
            }
        }
    }
    Ok(out)
}

/// Direction making a type-B Prym H(4) cusp representative decompose as
/// type A±: the first of `(t1+t2-w2, h1+h2)`, `(2t1+t2, 2h1+h2)`,
/// `(w1+t1+t2, h1+h2)`, `(2t1+t2+y-w1-w2, 2h1+h2)` (y < w1) that works.
pub fn type_b4_to_type_a_direction(o: &Origami) -> Result<(i64, i64)> {
    if !is_type_b4(o) {
        return Err(Error::WrongShape("expected a type B Prym H(4) surface".into()));
    }
    let try_dir = |p: i64, r: i64| -> bool {
        if r <= 0 {
            return false;
        }
        o.make_direction_horizontal(p, r)
            .map(|(moved, _)| origami_to_prototype4(&moved).is_ok())
            .unwrap_or(false)
    };
    for ((w1, h1, t1), (w2, h2, t2)) in type_b_params(o)? {
        let listed = [
            (t1 + t2 - w2, h1 + h2),
            (2 * t1 + t2, 2 * h1 + h2),
            (w1 + t1 + t2, h1 + h2),
        ];
        for (p, r) in listed {
            if try_dir(p, r) {
                return Ok((p, r));
            }
        }
        for y in 1..w1 {
            let (p, r) = (2 * t1 + t2 + y - w1 - w2, 2 * h1 + h2);
            if try_dir(p, r) {
                return Ok((p, r));
            }
        }
    }
    Err(Error::SearchExhausted(
        "no listed direction makes the surface type A±".into(),
    ))
}

/// Direction making a type-B Prym H(6) cusp representative decompose as
/// type A: the first of `(t1+t2, h1+h2)`, `(t1+t2-w1, h1+h2)`,
/// `(t1+t2-w2, h1+h2)` that works.
pub fn type_b6_to_type_a_direction(o: &Origami) -> Result<(i64, i64)> {
    if !is_type_b6(o) {
        return Err(Error::WrongShape("expected a type B Prym H(6) surface".into()));
    }
    let try_dir = |p: i64, r: i64| -> bool {
        if r <= 0 {
            return false;
        }
        o.make_direction_horizontal(p, r)
            .map(|(moved, _)| origami_to_prototype6(&moved).is_ok())
            .unwrap_or(false)
    };
    for ((w1, h1, t1), (w2, h2, t2)) in type_b_params(o)? {
        let listed = [
            (t1 + t2, h1 + h2),
            (t1 + t2 - w1, h1 + h2),
            (t1 + t2 - w2, h1 + h2),
        ];
        for (p, r) in listed {
            if try_dir(p, r) {
                return Ok((p, r));
            }
        }
    }
    Err(Error::SearchExhausted(
        "no listed direction makes the surface type A".into(),
    ))
}

/// One cross-component witness for `D ≡ 1 mod 8`: a source prototype
/// `(w, 2, 0, e)`, the surface and direction used, the diagonal index `j`,
/// and the type-A1 endpoint prototype.
#[derive(Clone, Debug)]
pub struct CrossComponentWitness {
    pub source: Prym6Prototype,
    pub origami: Origami,
    pub direction: (i64, i64),
    pub j: i64,
    pub endpoint: Prym6Prototype,
}

/// Search `(w, 2, 0, e)` prototypes of type A for simple-cylinder directions
/// whose horizontalization lands in the A1 component: on the surface the
/// direction reads `(w2 + ⌊h1/2⌋, 2j+2+h1)` when the square factors are
/// `(1, λ)`, and `(w2 + 2h1, j+1+h1)` when they are `(2, λ/2)`. `j` is
/// searched ascending, and all cusp phases of the model are tried.
pub fn cross_component6(d: i64) -> Result<Vec<CrossComponentWitness>> {
    if d.rem_euclid(8) != 1 {
        return Err(Error::BadArgument(format!("D = {d} is not 1 mod 8")));
    }
    if !crate::arith::is_square(d) {
        return Err(Error::BadArgument(format!(
            "only square discriminants have origamis (got {d})"
        )));
    }
    let n = 2 * isqrt(d) as usize;
    let mut out = Vec::new();
    // sources: type-A prototypes (w, 2, 0, e) of discriminant D
    let mut sources: Vec<Prym6Prototype> = Vec::new();
    for e in -isqrt(d)..=isqrt(d) {
        if (d - e * e) % 8 != 0 {
            continue;
        }
        let w = (d - e * e) / 8;
        if let Ok(p) = Prym6Prototype::new(w, 2, 0, e) {
            if p.kind() == PrymKind::A && pa_class6(&p)? == crate::prym::PaClass::A2 {
                sources.push(p);
            }
        }
    }
    // the worked examples include an A1 source illustrating the second
    // surface-parameter case; search those too when strict sources fail
    let mut fallback: Vec<Prym6Prototype> = Vec::new();
    for e in -isqrt(d)..=isqrt(d) {
        if (d - e * e) % 8 != 0 {
            continue;
        }
        let w = (d - e * e) / 8;
        if let Ok(p) = Prym6Prototype::new(w, 2, 0, e) {
            if p.kind() == PrymKind::A && !sources.contains(&p) {
                fallback.push(p);
            }
        }
    }
    for p in sources.iter().chain(fallback.iter()) {
        if let Some(w) = cross_component_witness(p, n)? {
            out.push(w);
        }
    }
    if out.is_empty() {
        return Err(Error::SearchExhausted(format!(
            "no (w,2,0,e) prototype of D = {d} yields a cross-component cylinder"
        )));
    }
    Ok(out)
}

fn pa_class6(p: &Prym6Prototype) -> Result<crate::prym::PaClass> {
    crate::prym::pa_component_class(p)
}

fn cross_component_witness(p: &Prym6Prototype, n: usize) -> Result<Option<CrossComponentWitness>> {
    let o = match prototype6_to_origami(p, n) {
        Ok(o) => o,
        Err(_) => return Ok(None),
    };
    let groups = prym_cylinders(&o)?;
    // identify the square pair (w1, h1) and E2 pair (w2, h2)
    let mut pairs = groups.paired.clone();
    pairs.sort_by_key(|&(w, h, _)| w * h);
    if pairs.len() != 2 {
        return Ok(None);
    }
    let (w1, h1) = (pairs[0].0 as i64, pairs[0].1 as i64);
    let (w2, _h2) = (pairs[1].0 as i64, pairs[1].1 as i64);
    let width = o.cusp_width();
    for j in 0..w2 {
        let dir = if w1 == 1 {
            (w2 + h1 / 2, 2 * j + 2 + h1)
        } else {
            (w2 + 2 * h1, j + 1 + h1)
        };
        for s in 0..width {
            let shifted = o.act_t_power(s as i64);
            if let Ok((moved, _)) = shifted.make_direction_horizontal(dir.0, dir.1) {
                if let Ok(endpoint) = origami_to_prototype6(&moved) {
                    if pa_class6(&endpoint)? == crate::prym::PaClass::A1 {
                        return Ok(Some(CrossComponentWitness {
                            source: *p,
                            origami: shifted,
                            direction: dir,
                            j,
                            endpoint,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// The height-2 origami with boundary pattern A B C B̄ C̄ / Ā B̄ C̄ B C Ā used
/// to connect the two components of P^A_D: two rows of width
/// `l_A + 2 l_B + 2 l_C`, the B-pieces glued with shift `l_C` and the
/// C-pieces with shift `-l_B`.
pub fn labc_origami(l_a: usize, l_b: usize, l_c: usize) -> Result<Origami> {
    if l_a == 0 || l_b == 0 || l_c == 0 {
        return Err(Error::BadArgument("side lengths must be positive".into()));
    }
    let w = l_a + 2 * l_b + 2 * l_c;
    let n = 2 * w;
    let top = |x: usize| x % w;
    let bot = |y: usize| w + (y % w);
    let mut h = vec![0usize; n];
    let mut v = vec![usize::MAX; n];
    for x in 0..w {
        h[top(x)] = top(x + 1);
        h[bot(x)] = bot(x + 1);
    }
    // interior: the bottom row sits under the top row shifted by l_a
    for y in 0..w - l_a {
        v[bot(y)] = top(y + l_a);
    }
    // trailing bottom squares wrap to themselves (the Ā piece)
    for y in w - l_a..w {
        v[bot(y)] = bot(y);
    }
    // top-row tops: A wraps, B pieces shift by l_c, C pieces by -l_b
    for x in 0..w {
        let target = if x < l_a {
            top(x)
        } else if x < l_a + l_b {
            bot(x + l_c - l_a)
        } else if x < l_a + l_b + l_c {
            bot(x - l_b - l_a)
        } else if x < l_a + 2 * l_b + l_c {
            bot(x + l_c - l_a)
        } else {
            bot(x - l_b - l_a)
        };
        v[top(x)] = target;
    }
    let to_perm = |images: &[usize]| {
        Permutation::from_images_one_based(&images.iter().map(|&x| x + 1).collect::<Vec<_>>())
    };
    Origami::new(to_perm(&h)?, to_perm(&v)?)
}

/// A bridge between the two components of P^A_D realized by one origami:
/// the cylinder in direction `(l_A + 2 l_B + l_C, 3)` and the one in
/// direction `(-l_C, 2)` give prototypes in different components.
#[derive(Clone, Debug)]
pub struct LabcBridge {
    pub sides: (usize, usize, usize),
    pub origami: Origami,
    pub first: Prym6Prototype,
    pub second: Prym6Prototype,
}

/// Extract the two prototypes of the lABC origami with the given sides,
/// verifying they lie in different P^A components.
pub fn labc_extract(l_a: usize, l_b: usize, l_c: usize) -> Result<LabcBridge> {
    let o = labc_origami(l_a, l_b, l_c)?;
    if o.stratum() != vec![6] {
        return Err(Error::WrongStratum {
            found: format!("{:?}", o.stratum()),
        });
    }
    let dir1 = ((l_a + 2 * l_b + l_c) as i64, 3i64);
    let dir2 = (-(l_c as i64), 2i64);
    let (m1, _) = o.make_direction_horizontal(dir1.0, dir1.1)?;
    let first = origami_to_prototype6(&m1)?;
    let (m2, _) = o.make_direction_horizontal(dir2.0, dir2.1)?;
    let second = origami_to_prototype6(&m2)?;
    if pa_class6(&first)? == pa_class6(&second)? {
        return Err(Error::SearchExhausted(format!(
            "cylinders of ({l_a},{l_b},{l_c}) give the same component: {first} vs {second}"
        )));
    }
    Ok(LabcBridge {
        sides: (l_a, l_b, l_c),
        origami: o,
        first,
        second,
    })
}

/// Search side lengths (l_C ascending, then l_B, with
/// `l_A = n/2 - 2 l_B - 2 l_C`) for an lABC origami bridging the two
/// components of P^A_D; `n = 2√D`.
pub fn labc_bridge6(d: i64) -> Result<LabcBridge> {
    if !matches!(d.rem_euclid(8), 0 | 4) {
        return Err(Error::BadArgument(format!("D = {d} is not 0 or 4 mod 8")));
    }
    if !crate::arith::is_square(d) {
        return Err(Error::BadArgument(format!(
            "only square discriminants have origamis (got {d})"
        )));
    }
    let n = 2 * isqrt(d) as usize;
    let w = n / 2;
    for l_c in 1..w / 2 {
        for l_b in 1..(w - 2 * l_c) / 2 {
            let l_a = w - 2 * l_b - 2 * l_c;
            if l_a == 0 {
                continue;
            }
            if let Ok(bridge) = labc_extract(l_a, l_b, l_c) {
                return Ok(bridge);
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no lABC side lengths bridge the components of D = {d}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prym::{reduced_prototype4, reduced_prototype6};

    fn golden_q169() -> Origami {
        Origami::from_cycle_strings(13, "(1,2,3,4,5,6)(8,9,10,11,12,13)", "(6,8,7)").unwrap()
    }

    fn golden_q169_image() -> Origami {
        Origami::from_cycle_strings(
            13,
            "(1,2,3,4,5)(6,7)(8,9)(10,11)(12,13)",
            "(1,6,8,2,7,9)(3,13,11,4,12,10)",
        )
        .unwrap()
    }

    fn golden_p49() -> Origami {
        // square 14 sits in the second vertical 3-cycle; dropping it would
        // disconnect the surface
        Origami::from_cycle_strings(
            14,
            "(2,3,4,5,6,7)(8,9,10,11,12,13)",
            "(1,12,2)(3,14,13)",
        )
        .unwrap()
    }

    fn golden_p49_image() -> Origami {
        Origami::from_cycle_strings(
            14,
            "(1,2)(3,4,5,6,7)(8,9,10,11,12)(13,14)",
            "(1,9,3)(2,10,4)(5,13,11)(6,14,12)",
        )
        .unwrap()
    }

    #[test]
    fn golden_prym4_extraction() {
        let o = golden_q169();
        assert_eq!(o.stratum(), vec![4]);
        assert_eq!(prym_fixed_point_count(&o).unwrap(), 4);
        let p = origami_to_prototype4(&o).unwrap();
        assert_eq!(p, Prym4Prototype::new(6, 1, 0, -11, Sign::Plus).unwrap());
        let img = origami_to_prototype4(&golden_q169_image()).unwrap();
        assert_eq!(img, Prym4Prototype::new(10, 2, 1, 3, Sign::Minus).unwrap());
    }

    #[test]
    fn golden_prym4_realization() {
        let o = golden_q169();
        let (word, end) = realize_prym_butterfly(&o, Q::Finite(2)).unwrap();
        assert!(o.apply_word(&word).isomorphic(&end));
        assert!(end.isomorphic(&golden_q169_image().cusp_representative().0));
        assert_eq!(
            origami_to_prototype4(&end).unwrap(),
            Prym4Prototype::new(10, 2, 1, 3, Sign::Minus).unwrap()
        );
    }

    #[test]
    fn golden_prym6_extraction() {
        let o = golden_p49();
        assert_eq!(o.stratum(), vec![6]);
        assert_eq!(prym_fixed_point_count(&o).unwrap(), 2);
        let p = origami_to_prototype6(&o).unwrap();
        assert_eq!(p, Prym6Prototype::new(6, 1, 0, -5).unwrap());
        let img = origami_to_prototype6(&golden_p49_image()).unwrap();
        assert_eq!(img, Prym6Prototype::new(5, 2, 0, -3).unwrap());
    }

    #[test]
    fn golden_prym6_realization() {
        let o = golden_p49();
        let (word, end) = realize_prym_butterfly(&o, Q::Finite(2)).unwrap();
        assert!(o.apply_word(&word).isomorphic(&end));
        // the endpoint lies in the cusp of the listed image origami
        assert!(end.same_cusp(&golden_p49_image()));
        assert_eq!(
            origami_to_prototype6(&end).unwrap(),
            Prym6Prototype::new(5, 2, 0, -3).unwrap()
        );
    }

    #[test]
    fn reduced_prototype4_roundtrip() {
        // both signs at D = 121
        for e in crate::prym::reduced_s4(121).unwrap() {
            for eps in [Sign::Plus, Sign::Minus] {
                let p = reduced_prototype4(121, e, eps).unwrap();
                let mut built = false;
                for n in prym4_square_sides(121) {
                    if let Ok(o) = prototype4_to_origami(&p, n) {
                        assert_eq!(origami_to_prototype4(&o).unwrap(), p, "{p} n={n}");
                        built = true;
                    }
                }
                assert!(built, "no origami for {p}");
            }
        }
    }

    #[test]
    fn reduced_prototype6_roundtrip() {
        for d in [16i64, 25, 36, 49] {
            let n = 2 * isqrt(d) as usize;
            for e in crate::prym::s1_set(d).unwrap() {
                let p = reduced_prototype6(d, e).unwrap();
                if p.kind() != PrymKind::A {
                    continue;
                }
                let o = prototype6_to_origami(&p, n).unwrap();
                assert_eq!(origami_to_prototype6(&o).unwrap(), p, "{p}");
            }
        }
    }

    #[test]
    fn labc_matches_worked_32_square_example() {
        let o = labc_origami(6, 3, 2).unwrap();
        assert_eq!(o.n(), 32);
        assert_eq!(o.stratum(), vec![6]);
        // two 16-cycles with the B pieces glued at shift l_C and the C
        // pieces at shift -l_B
        let listed = Origami::from_cycle_strings(
            32,
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)(17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32)",
            "(7,19,9,21,11,18,8,20,10,17)(12,24,14,26,16,23,13,25,15,22)",
        )
        .unwrap();
        assert!(o.isomorphic(&listed));
        let bridge = labc_extract(6, 3, 2).unwrap();
        assert_eq!(bridge.first, Prym6Prototype::new(63, 1, 0, 2).unwrap());
        assert_eq!(bridge.second, Prym6Prototype::new(30, 2, 1, -4).unwrap());
    }

    #[test]
    fn cross_component_d81_worked_examples() {
        // drive the two listed configurations directly
        let first = Origami::from_cycle_strings(
            18,
            "(2,3,4,5)(6,7,8,9)(10,11,12,13)(14,15,16,17)",
            "(1,16,12,6,2)(3,18,17,13,7)(4,8)(5,9)(10,14)(11,15)",
        )
        .unwrap();
        assert_eq!(
            origami_to_prototype6(&first).unwrap(),
            Prym6Prototype::new(4, 2, 0, -7).unwrap()
        );
        // (w1,h1,w2,h2) = (1,1,4,2): direction (w2 + ⌊h1/2⌋, 2j+2+h1) with
        // j = 2 is (4, 7)
        let (moved, _) = first.make_direction_horizontal(4, 7).unwrap();
        assert_eq!(
            origami_to_prototype6(&moved).unwrap(),
            Prym6Prototype::new(14, 1, 0, -5).unwrap()
        );

        let second = Origami::from_cycle_strings(
            18,
            "(1,2)(3,4,5,6,7,8,9)(10,11,12,13,14,15,16)(17,18)",
            "(1,13,3)(2,14,4)(5,17,15)(6,18,16)",
        )
        .unwrap();
        assert_eq!(
            origami_to_prototype6(&second).unwrap(),
            Prym6Prototype::new(7, 2, 0, -5).unwrap()
        );
        // (w1,h1,w2,h2) = (2,1,7,1): direction (w2 + 2h1, j+1+h1) with j = 2
        // is (9, 4)
        let (moved, _) = second.make_direction_horizontal(9, 4).unwrap();
        assert_eq!(
            origami_to_prototype6(&moved).unwrap(),
            Prym6Prototype::new(18, 1, 0, 3).unwrap()
        );
    }

    #[test]
    fn type_b_directions_succeed_on_orbit_samples() {
        use crate::orbit::OrbitGraph;
        // H(4), n = 10, D = 25: the orbit contains type B vertices
        let p = Prym4Prototype::new(2, 1, 0, -3, Sign::Plus).unwrap();
        let seed = prototype4_to_origami(&p, 10).unwrap();
        let g = OrbitGraph::build(&seed, 100_000).unwrap();
        let mut checked = 0;
        for o in &g.vertices {
            if o.horizontal_cylinders().len() == 3 && is_type_b4(o) {
                let (rep, _) = o.cusp_representative();
                if is_type_b4(&rep) {
                    let (pp, r) = type_b4_to_type_a_direction(&rep).unwrap();
                    let (moved, _) = rep.make_direction_horizontal(pp, r).unwrap();
                    assert!(origami_to_prototype4(&moved).is_ok());
                    checked += 1;
                }
            }
        }
        assert!(checked > 0, "no type B vertices sampled");
        // type A input is a precondition error
        assert!(type_b4_to_type_a_direction(&seed).is_err());

        // H(6), n = 10, D = 25
        let p6 = Prym6Prototype::new(6, 1, 0, -1).unwrap();
        let seed6 = prototype6_to_origami(&p6, 10).unwrap();
        let g6 = OrbitGraph::build(&seed6, 100_000).unwrap();
        let mut checked6 = 0;
        for o in &g6.vertices {
            if o.horizontal_cylinders().len() == 4 && is_type_b6(o) {
                let (rep, _) = o.cusp_representative();
                if is_type_b6(&rep) {
                    let (pp, r) = type_b6_to_type_a_direction(&rep).unwrap();
                    assert!(r >= 2, "vertical part is a height sum");
                    let (moved, _) = rep.make_direction_horizontal(pp, r).unwrap();
                    assert!(origami_to_prototype6(&moved).is_ok());
                    checked6 += 1;
                }
            }
        }
        assert!(checked6 > 0, "no H(6) type B vertices sampled");
    }

    #[test]
    fn degenerate_prototype_inputs_are_rejected() {
        assert!(Prym4Prototype::new(1, 1, 0, 5, Sign::Plus).is_err()); // e + 2h >= w
        assert!(Prym6Prototype::new(2, 1, 0, 3).is_err()); // λ out of range
        let p = Prym4Prototype::new(6, 1, 0, -11, Sign::Plus).unwrap();
        assert!(prototype4_to_origami(&p, 12).is_err()); // n mismatch
    }
}

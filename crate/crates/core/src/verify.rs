//! Verification suites: golden worked examples, formula/oracle equivalences,
//! butterfly properties, the reduction algorithm, component structure and
//! diameter bounds. The CLI `verify` subcommand and the acceptance test
//! target both run these.

use crate::census::enumerate_h2_census;
use crate::error::{Error, Result};
use crate::h2::{
    admissible_q, butterfly, enumerate_prototypes, reduce_to_reduced, spin_components,
    H2Prototype, Q, SPIN_EXCEPTIONAL,
};
use crate::h2_surface::{origami_to_prototype, realize_butterfly_word};
use crate::hl::{hl_connect_one_cylinder, hl_reduce_to_one_cylinder, parity_target};
use crate::invariants::{classify_h2_orbit, expected_orbit_sizes, hlk_invariant, HlkInvariant};
use crate::orbit::OrbitGraph;
use crate::origami::Origami;
use crate::prym::{
    butterfly4, enumerate_p6, enumerate_q4, pa_component_class, reduce4, reduce6, s4_components,
    s6_components, Prym4Prototype, Prym6Prototype, PrymKind, Sign, S4_EXCEPTIONAL,
};
use crate::prym_surface::{
    cross_component6, labc_extract, origami_to_prototype4, origami_to_prototype6,
    realize_prym_butterfly,
};
use crate::sweep::{fit_exponent, sweep, SweepRecord};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

fn check(name: &str, passed: bool, details: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        details,
    }
}

fn ok(name: &str, details: String) -> CheckResult {
    check(name, true, details)
}

fn run_check<F: FnOnce() -> Result<String>>(name: &str, body: F) -> CheckResult {
    match body() {
        Ok(details) => ok(name, details),
        Err(e) => check(name, false, e.to_string()),
    }
}

fn fail(msg: String) -> Error {
    Error::SearchExhausted(msg)
}

fn golden_o() -> Origami {
    Origami::from_cycle_strings(
        14,
        "(1,2)(3,4)(5,6)(7,8)(9,10,11,12,13,14)",
        "(1,3,5,7,9)(2,4,6,8,14,13,12,11,10)",
    )
    .unwrap()
}

/// Criterion 1-3 and 11: the worked butterfly examples in all three strata,
/// with origami-level realizations, plus the cross-component and lABC
/// extractions.
pub fn golden_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("golden-h2-butterfly", || {
        let p = H2Prototype::new(1, 24, 2, 2)?;
        let img = butterfly(&p, Q::Finite(2))?;
        let expect = H2Prototype::new(1, 12, 2, -10)?;
        if img != expect {
            return Err(fail(format!("B_2{p} = {img}, want {expect}")));
        }
        let qs = admissible_q(&p);
        if qs != vec![Q::Finite(1), Q::Finite(2), Q::Infinity] {
            return Err(fail(format!("admissible q of {p} = {qs:?}")));
        }
        let o = golden_o();
        if origami_to_prototype(&o)? != p {
            return Err(fail("14-square origami does not extract to (1,24,2,2)".into()));
        }
        let (word, end) = realize_butterfly_word(&o, Q::Finite(2))?;
        let listed = Origami::from_cycle_strings(
            14,
            "(1,2)(3,4,5,6,7,8,9,10,11,12,13,14)",
            "(1,3,14,13,12,11,10,9,8,7,6,5,2,4)",
        )?;
        if !end.same_cusp(&listed) {
            return Err(fail("realized endpoint misses the target cusp".into()));
        }
        if origami_to_prototype(&end)? != expect {
            return Err(fail("endpoint prototype mismatch".into()));
        }
        Ok(format!("B_2(1,24,2,2) = (1,12,2,-10); word {word}"))
    }));

    out.push(run_check("golden-h4-butterfly", || {
        let p = Prym4Prototype::new(6, 1, 0, -11, Sign::Plus)?;
        let img = butterfly4(&p, Q::Finite(2))?;
        let expect = Prym4Prototype::new(10, 2, 1, 3, Sign::Minus)?;
        if img != expect {
            return Err(fail(format!("B_2{p} = {img}, want {expect}")));
        }
        let o = Origami::from_cycle_strings(13, "(1,2,3,4,5,6)(8,9,10,11,12,13)", "(6,8,7)")?;
        if origami_to_prototype4(&o)? != p {
            return Err(fail("13-square origami does not extract to (6,1,0,-11,+)".into()));
        }
        let (word, end) = realize_prym_butterfly(&o, Q::Finite(2))?;
        let listed = Origami::from_cycle_strings(
            13,
            "(1,2,3,4,5)(6,7)(8,9)(10,11)(12,13)",
            "(1,6,8,2,7,9)(3,13,11,4,12,10)",
        )?;
        if !end.same_cusp(&listed) || origami_to_prototype4(&end)? != expect {
            return Err(fail("realized endpoint misses the listed image".into()));
        }
        Ok(format!("B_2(6,1,0,-11,+) = (10,2,1,3,-); word {word}"))
    }));

    out.push(run_check("golden-h6-butterfly", || {
        let p = Prym6Prototype::new(6, 1, 0, -5)?;
        let img = crate::prym::butterfly6(&p, Q::Finite(2))?;
        let expect = Prym6Prototype::new(5, 2, 0, -3)?;
        if img != expect {
            return Err(fail(format!("B_2{p} = {img}, want {expect}")));
        }
        let o = Origami::from_cycle_strings(14, "(2,3,4,5,6,7)(8,9,10,11,12,13)", "(1,12,2)(3,14,13)")?;
        if origami_to_prototype6(&o)? != p {
            return Err(fail("14-square origami does not extract to (6,1,0,-5)".into()));
        }
        let (word, end) = realize_prym_butterfly(&o, Q::Finite(2))?;
        let listed = Origami::from_cycle_strings(
            14,
            "(1,2)(3,4,5,6,7)(8,9,10,11,12)(13,14)",
            "(1,9,3)(2,10,4)(5,13,11)(6,14,12)",
        )?;
        if !end.same_cusp(&listed) || origami_to_prototype6(&end)? != expect {
            return Err(fail("realized endpoint misses the listed image".into()));
        }
        Ok(format!("B_2(6,1,0,-5) = (5,2,0,-3); word {word}"))
    }));

    out.push(run_check("golden-h6-cross-component", || {
        // worked example 1: (4,2,0,-7), j = 2, direction (4,7) -> (14,1,0,-5)
        let first = Origami::from_cycle_strings(
            18,
            "(2,3,4,5)(6,7,8,9)(10,11,12,13)(14,15,16,17)",
            "(1,16,12,6,2)(3,18,17,13,7)(4,8)(5,9)(10,14)(11,15)",
        )?;
        if origami_to_prototype6(&first)? != Prym6Prototype::new(4, 2, 0, -7)? {
            return Err(fail("first source prototype mismatch".into()));
        }
        let (m1, _) = first.make_direction_horizontal(4, 7)?;
        if origami_to_prototype6(&m1)? != Prym6Prototype::new(14, 1, 0, -5)? {
            return Err(fail("(4,2,0,-7) with j=2 does not reach (14,1,0,-5)".into()));
        }
        // worked example 2: (7,2,0,-5), j = 2, direction (9,4) -> (18,1,0,3)
        let second = Origami::from_cycle_strings(
            18,
            "(1,2)(3,4,5,6,7,8,9)(10,11,12,13,14,15,16)(17,18)",
            "(1,13,3)(2,14,4)(5,17,15)(6,18,16)",
        )?;
        if origami_to_prototype6(&second)? != Prym6Prototype::new(7, 2, 0, -5)? {
            return Err(fail("second source prototype mismatch".into()));
        }
        let (m2, _) = second.make_direction_horizontal(9, 4)?;
        if origami_to_prototype6(&m2)? != Prym6Prototype::new(18, 1, 0, 3)? {
            return Err(fail("(7,2,0,-5) with j=2 does not reach (18,1,0,3)".into()));
        }
        // the search op exposes the A2 witness with j = 2
        let witnesses = cross_component6(81)?;
        let hit = witnesses.iter().any(|w| {
            w.source == Prym6Prototype::new(4, 2, 0, -7).unwrap()
                && w.j == 2
                && w.endpoint == Prym6Prototype::new(14, 1, 0, -5).unwrap()
        });
        if !hit {
            return Err(fail("cross_component6(81) misses the (4,2,0,-7) witness".into()));
        }
        Ok("both D=81 worked examples and the search witness reproduce".into())
    }));

    out.push(run_check("golden-h6-labc", || {
        let bridge = labc_extract(6, 3, 2)?;
        let want1 = Prym6Prototype::new(63, 1, 0, 2)?;
        let want2 = Prym6Prototype::new(30, 2, 1, -4)?;
        if bridge.first != want1 || bridge.second != want2 {
            return Err(fail(format!(
                "lABC(6,3,2) gives {} and {}",
                bridge.first, bridge.second
            )));
        }
        if pa_component_class(&bridge.first)? == pa_component_class(&bridge.second)? {
            return Err(fail("lABC prototypes fell in one component".into()));
        }
        Ok("32-square lABC origami gives (63,1,0,2) vs (30,2,1,-4)".into())
    }));

    out
}

/// Criterion 4 and 5: orbit cardinalities against the closed formulas, and
/// HLK constancy with the classification tables.
pub fn formulas_suite() -> Vec<CheckResult> {
    let mut out = cardinality_suite();
    out.extend(hlk_suite());
    out
}

/// Criterion 4.
pub fn cardinality_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run_check("orbit-cardinalities", || {
        let mut details = Vec::new();
        for n in [5usize, 7, 9, 11] {
            let (size_a, size_b) = expected_orbit_sizes(n as u64)?;
            let ga = OrbitGraph::build(&crate::census::h2_a_representative(n)?, 2_000_000)?;
            let gb = OrbitGraph::build(&crate::census::h2_b_representative(n)?, 2_000_000)?;
            if ga.len() as u64 != size_a || gb.len() as u64 != size_b {
                return Err(fail(format!(
                    "n={n}: BFS gives {}/{}, formulas give {}/{}",
                    ga.len(),
                    gb.len(),
                    size_a,
                    size_b
                )));
            }
            details.push(format!("n={n}: {}/{}", size_a, size_b));
        }
        Ok(details.join("; "))
    }));

    out
}

/// Criterion 5.
pub fn hlk_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run_check("hlk-h2-orbits", || {
        let mut orbits = 0;
        for n in 3..=12usize {
            let mut seen = std::collections::HashSet::new();
            for seed in enumerate_h2_census(n)? {
                if seen.contains(&seed.canonical_key()) {
                    continue;
                }
                let g = OrbitGraph::build(&seed, 2_000_000)?;
                for v in &g.vertices {
                    seen.insert(v.canonical_key());
                }
                let inv = hlk_invariant(&g.vertices[0])?;
                let expected_inv = match classify_h2_orbit(&g.vertices[0])? {
                    crate::invariants::H2Orbit::A | crate::invariants::H2Orbit::N3 => {
                        HlkInvariant::new(0, [3, 1, 1])
                    }
                    crate::invariants::H2Orbit::B => HlkInvariant::new(2, [1, 1, 1]),
                    crate::invariants::H2Orbit::Even => HlkInvariant::new(1, [2, 2, 0]),
                };
                if inv != expected_inv {
                    return Err(fail(format!("n={n}: invariant {inv} off the table")));
                }
                for v in &g.vertices {
                    if hlk_invariant(v)? != inv {
                        return Err(fail(format!("n={n}: invariant varies over the orbit")));
                    }
                }
                orbits += 1;
            }
        }
        Ok(format!("{orbits} H(2) orbits constant and on the table"))
    }));

    out.push(run_check("hlk-prym-orbits", || {
        let mut checked = 0;
        for n in 5..=12usize {
            for (label, d, seed) in crate::sweep::prym4_orbit_seeds(n) {
                let expected_inv = if n % 2 == 1 {
                    HlkInvariant::new(0, [1, 1, 1])
                } else if n % 4 == 0 || n == 6 {
                    HlkInvariant::new(1, [2, 0, 0])
                } else if d == ((n * n) / 4) as i64 {
                    HlkInvariant::new(3, [0, 0, 0])
                } else {
                    HlkInvariant::new(1, [2, 0, 0])
                };
                let g = OrbitGraph::build(&seed, 2_000_000)?;
                for v in &g.vertices {
                    let inv = hlk_invariant(v)?;
                    if inv != expected_inv {
                        return Err(fail(format!(
                            "H(4) n={n} {label}: {inv}, want {expected_inv}"
                        )));
                    }
                }
                checked += 1;
            }
            if n % 2 == 0 && n >= 8 {
                if let Some((label, _, seed)) = crate::sweep::prym6_orbit_seed(n) {
                    let g = OrbitGraph::build(&seed, 2_000_000)?;
                    for v in &g.vertices {
                        let inv = hlk_invariant(v)?;
                        if inv != HlkInvariant::new(1, [0, 0, 0]) {
                            return Err(fail(format!("H(6) n={n} {label}: {inv}")));
                        }
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} Prym orbits constant and on the table"))
    }));

    out
}

/// Criterion 7 and 8: reduction complexity in all three engines and the
/// commutation of realized butterflies with extraction.
pub fn butterflies_suite() -> Vec<CheckResult> {
    let mut out = reduction_suite();
    out.extend(commutation_suite());
    out
}

/// Criterion 7: B1 iteration reaches a reduced prototype within the halving
/// bound for every prototype of every square discriminant with n <= 51.
pub fn reduction_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("b1-reduction-h2", || {
        let mut count = 0;
        for n in 3..=51i64 {
            let d = n * n;
            if d < 5 {
                continue;
            }
            for p in enumerate_prototypes(d)? {
                let cap = 3 * (((p.c as f64).log2().ceil() as usize) + 1) + 1;
                let (r, steps) = reduce_to_reduced(&p);
                if !r.is_reduced() || steps > cap {
                    return Err(fail(format!("{p}: {steps} steps > {cap}")));
                }
                count += 1;
            }
        }
        Ok(format!("{count} H(2) prototypes reduced within the bound"))
    }));

    out.push(run_check("b1-reduction-h4", || {
        let mut count = 0;
        for n in 5..=51i64 {
            let d = n * n;
            if d < 17 {
                continue;
            }
            for p in enumerate_q4(d)? {
                let cap = 3 * (((p.h as f64).log2().ceil() as usize) + 1) + 1;
                let (r, steps) = reduce4(&p);
                if !r.is_reduced() || steps > cap {
                    return Err(fail(format!("{p}: {steps} steps > {cap}")));
                }
                count += 1;
            }
        }
        Ok(format!("{count} H(4) prototypes reduced within the bound"))
    }));

    out.push(run_check("b1-reduction-h6", || {
        let mut count = 0;
        for n in 3..=51i64 {
            let d = n * n;
            if d < 8 || d == 9 {
                continue;
            }
            for p in enumerate_p6(d)? {
                if p.kind() != PrymKind::A {
                    continue;
                }
                let cap = 3 * (((p.h as f64).log2().ceil() as usize) + 1) + 1;
                let (r, kind, steps) = reduce6(&p)?;
                let terminal_ok = match kind {
                    crate::prym::Reduced6::Reduced => r.is_reduced(),
                    crate::prym::Reduced6::AlmostReduced => {
                        d % 8 == 1 && r.is_almost_reduced()
                    }
                };
                if !terminal_ok || steps > cap {
                    return Err(fail(format!("{p}: {steps} steps > {cap}")));
                }
                count += 1;
            }
        }
        Ok(format!("{count} H(6) prototypes reduced within the bound"))
    }));

    out
}

/// Criterion 8: extraction commutes with realized butterflies, exhaustively
/// over the two-cylinder vertices of the odd orbits with 5 <= n <= 15.
pub fn commutation_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run_check("commutation-h2", || {
        let mut checked = 0;
        for n in (5..=15usize).step_by(2) {
            for (_, seed) in crate::sweep::h2_orbit_seeds(n)? {
                let g = OrbitGraph::build(&seed, 2_000_000)?;
                for o in &g.vertices {
                    let p = match origami_to_prototype(o) {
                        Ok(p) => p,
                        Err(_) => continue, // not two-cylinder
                    };
                    for q in admissible_q(&p) {
                        let expected = butterfly(&p, q)?;
                        let (word, end) = realize_butterfly_word(o, q)?;
                        let got = origami_to_prototype(&end)?;
                        if got != expected {
                            return Err(fail(format!(
                                "n={n}, {p}, q={q}: realized {got}, arithmetic {expected}"
                            )));
                        }
                        if !o.apply_word(&word).isomorphic(&end) {
                            return Err(fail(format!("n={n}: word does not replay")));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(format!("{checked} realized butterflies commute with extraction"))
    }));

    out
}

/// Criterion 9: the reduction to one-cylinder surfaces and the one-cylinder
/// connections, for prime n.
pub fn hl_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run_check("hl-two-to-one-cylinder", || {
        let mut checked = 0;
        for n in [5usize, 7, 11, 13] {
            let bound = 5.0 * (n as f64).powf(2.5);
            for o in enumerate_h2_census(n)? {
                if o.horizontal_cylinders().len() != 2 {
                    continue;
                }
                let (word, end) = hl_reduce_to_one_cylinder(&o)?;
                if end.horizontal_cylinders().len() != 1 {
                    return Err(fail(format!("n={n}: endpoint is not one-cylinder")));
                }
                if (word.len() as f64) > bound {
                    return Err(fail(format!("n={n}: word length {} > {bound}", word.len())));
                }
                if !o.apply_word(&word).isomorphic(&end) {
                    return Err(fail(format!("n={n}: word does not replay")));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} two-cylinder surfaces reduced"))
    }));

    out.push(run_check("hl-one-cylinder-targets", || {
        let mut checked = 0;
        for n in [5usize, 7, 11, 13] {
            let bound = 5 * n * n;
            for o in enumerate_h2_census(n)? {
                if o.horizontal_cylinders().len() != 1 {
                    continue;
                }
                let start = o.one_cylinder_params()?.unwrap();
                let (word, end) = hl_connect_one_cylinder(&o)?;
                let got = end.one_cylinder_params()?.unwrap();
                if got != parity_target(start, n) {
                    return Err(fail(format!(
                        "n={n}: {start:?} ended at {got:?}, want {:?}",
                        parity_target(start, n)
                    )));
                }
                if word.len() > bound {
                    return Err(fail(format!("n={n}: word length {} > {bound}", word.len())));
                }
                if !o.apply_word(&word).isomorphic(&end) {
                    return Err(fail(format!("n={n}: word does not replay")));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} one-cylinder surfaces connected"))
    }));
    out
}

/// Criterion 6: spin components for square discriminants and the S_D
/// component structure with replayed bridging paths.
pub fn components_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    out.push(run_check("spin-components-h2", || {
        let mut flagged = Vec::new();
        for n in 5..=51i64 {
            let d = n * n;
            let c = spin_components(d)?;
            match c.expected {
                Some(expected) => {
                    if c.components.len() != expected {
                        return Err(fail(format!(
                            "D={d}: {} components, theorem gives {expected}",
                            c.components.len()
                        )));
                    }
                }
                None => flagged.push(format!("D={d}:{}", c.components.len())),
            }
        }
        if !SPIN_EXCEPTIONAL.contains(&49) {
            return Err(fail("exceptional list lost D=49".into()));
        }
        Ok(format!(
            "5 <= n <= 51 matches the spin theorem; flagged exceptional: {}",
            flagged.join(", ")
        ))
    }));

    out.push(run_check("s4-components", || {
        let (mut checked, mut flagged, mut bridges, mut loops) = (0usize, 0usize, 0usize, 0usize);
        let mut d = 17i64;
        while d <= 2500 {
            if matches!(d % 8, 0 | 1 | 4) {
                let c = s4_components(d)?;
                if c.exceptional {
                    flagged += 1;
                } else if c.components.len() != c.expected {
                    return Err(fail(format!(
                        "D={d}: {} components, expected {}",
                        c.components.len(),
                        c.expected
                    )));
                } else if d % 16 == 4 {
                    // components split exactly by e mod 8
                    for comp in &c.components {
                        let class = comp[0].rem_euclid(8);
                        if !comp.iter().all(|e| e.rem_euclid(8) == class) {
                            return Err(fail(format!("D={d}: component mixes e mod 8 classes")));
                        }
                    }
                }
                // bridging data replays whenever the node formulas are valid
                if let Some(b) = &c.bridge {
                    b.replay().map_err(|e| fail(format!("D={d}: {e}")))?;
                    bridges += 1;
                }
                if let Some(l) = &c.eps_loop {
                    l.replay().map_err(|e| fail(format!("D={d}: {e}")))?;
                    loops += 1;
                }
                if d > 150 && d % 16 == 4 && c.bridge.is_none() {
                    return Err(fail(format!("D={d}: missing bridge path")));
                }
                if d > 150 && d % 8 == 0 && c.eps_loop.is_none() {
                    return Err(fail(format!("D={d}: missing ε-flip loop")));
                }
                checked += 1;
            }
            d += 1;
        }
        if S4_EXCEPTIONAL.len() != flagged {
            return Err(fail(format!(
                "{} flagged vs {} on the pinned list",
                flagged,
                S4_EXCEPTIONAL.len()
            )));
        }
        Ok(format!(
            "{checked} discriminants; {bridges} bridges and {loops} ε-loops replayed; {flagged} flagged"
        ))
    }));

    out.push(run_check("s6-components", || {
        let (mut checked, mut flagged, mut bridges) = (0usize, 0usize, 0usize);
        let mut d = 12i64;
        while d <= 2500 {
            if matches!(d % 8, 0 | 1 | 4) && d != 16 {
                let c = s6_components(d)?;
                if c.s1_exceptional {
                    flagged += 1;
                } else if c.s1_components.len() != c.s1_expected {
                    return Err(fail(format!(
                        "D={d}: {} S¹ components, expected {}",
                        c.s1_components.len(),
                        c.s1_expected
                    )));
                }
                if d % 8 == 1 && !c.s2_components.is_empty() {
                    if c.s2_exceptional {
                        // reported, not asserted
                    } else if c.s2_components.len() != 1 {
                        return Err(fail(format!("D={d}: S² disconnected")));
                    }
                }
                if let Some(b) = &c.bridge {
                    b.replay().map_err(|e| fail(format!("D={d}: {e}")))?;
                    bridges += 1;
                }
                if d > 200 && matches!(d % 8, 1 | 4) && c.bridge.is_none() {
                    return Err(fail(format!("D={d}: missing bridge path")));
                }
                checked += 1;
            }
            d += 1;
        }
        Ok(format!(
            "{checked} discriminants; {bridges} bridges replayed; {flagged} flagged"
        ))
    }));

    out.push(run_check("pa-components-labc", || {
        // the worked D=256 bridge plus searched bridges for nearby square D
        for d in [64i64, 100, 144, 196, 256] {
            if !matches!(d % 8, 0 | 4) {
                continue;
            }
            let b = crate::prym_surface::labc_bridge6(d)
                .map_err(|e| fail(format!("D={d}: {e}")))?;
            if pa_component_class(&b.first)? == pa_component_class(&b.second)? {
                return Err(fail(format!("D={d}: bridge endpoints share a component")));
            }
        }
        Ok("lABC bridges found for square D in {64,100,144,196,256}".into())
    }));

    out
}

/// Criterion 10: diameter sweeps under the |V|^(2/3) log |V| envelope with
/// the all-pairs oracle cross-check.
pub fn bounds_suite(c_max: f64) -> (Vec<CheckResult>, Vec<SweepRecord>) {
    let mut out = Vec::new();
    let mut all_records = Vec::new();

    let result = run_check("diameter-bounds", || {
        let mut records = Vec::new();
        records.extend(sweep("h2", 5, 25, 5_000_000, 200_000)?);
        records.extend(sweep("prym4", 8, 20, 5_000_000, 200_000)?);
        records.extend(sweep("prym6", 8, 20, 5_000_000, 200_000)?);
        let worst = records
            .iter()
            .filter(|r| r.ratio > 0.0)
            .cloned()
            .max_by(|a, b| a.ratio.partial_cmp(&b.ratio).unwrap());
        let c_global = worst.as_ref().map(|r| r.ratio).unwrap_or(0.0);
        if c_global > c_max {
            return Err(fail(format!(
                "global C = {c_global:.3} exceeds {c_max} at n={} {}",
                worst.as_ref().unwrap().n,
                worst.as_ref().unwrap().orbit
            )));
        }
        let fit = fit_exponent(&records)?;
        all_records = records;
        Ok(format!(
            "{} orbits, global C = {:.3} <= {}, fitted alpha = {:.3}",
            all_records.len(),
            c_global,
            c_max,
            fit.0
        ))
    });
    out.push(result);

    out.push(run_check("diameter-oracle", || {
        // the bounding refinement agrees with all-pairs BFS on every graph
        // with |V| <= 5000
        let mut checked = 0;
        for n in [5usize, 9, 12, 15] {
            for (_, seed) in crate::sweep::h2_orbit_seeds(n)? {
                let g = OrbitGraph::build(&seed, 2_000_000)?;
                if g.len() > 5000 {
                    continue;
                }
                let exact = g.diameter_all_pairs();
                let refined = g.diameter_with_threshold(1);
                if exact != refined {
                    return Err(fail(format!(
                        "n={n}: refinement {refined} vs all-pairs {exact}"
                    )));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} graphs agree with the all-pairs oracle"))
    }));

    (out, all_records)
}

/// Orbit-level consistency: reduced-prototype seeds of one discriminant land
/// in one orbit, distinct discriminants in distinct orbits.
pub fn orbit_consistency_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(run_check("prym4-orbit-counts", || {
        for n in (8..=16usize).step_by(2) {
            let seeds = crate::sweep::prym4_orbit_seeds(n);
            let expected = if n % 4 == 2 && n >= 10 { 2 } else { 1 };
            if seeds.len() != expected {
                return Err(fail(format!(
                    "n={n}: {} seed discriminants, theorem gives {expected}",
                    seeds.len()
                )));
            }
            let mut orbits: Vec<OrbitGraph> = Vec::new();
            for (_, d, seed) in &seeds {
                let g = OrbitGraph::build(seed, 2_000_000)?;
                // every reduced prototype of this D with a primitive n-square
                // model lies in the same orbit
                for e in crate::prym::reduced_s4(*d)? {
                    for eps in [Sign::Plus, Sign::Minus] {
                        if let Ok(p) = crate::prym::reduced_prototype4(*d, e, eps) {
                            if let Ok(o) = crate::prym_surface::prototype4_to_origami(&p, n) {
                                if crate::perm::is_primitive(o.h(), o.v())? && !g.contains(&o) {
                                    return Err(fail(format!(
                                        "n={n}: {p} escapes its orbit"
                                    )));
                                }
                            }
                        }
                    }
                }
                orbits.push(g);
            }
            if orbits.len() == 2 && orbits[0].contains(&orbits[1].vertices[0]) {
                return Err(fail(format!("n={n}: the two orbits coincide")));
            }
        }
        Ok("H(4) orbit counts match for even n in 8..=16".into())
    }));

    out.push(run_check("prym6-single-orbit", || {
        for n in (8..=16usize).step_by(2) {
            let (_, d, seed) = crate::sweep::prym6_orbit_seed(n)
                .ok_or_else(|| fail(format!("no H(6) seed at n={n}")))?;
            let g = OrbitGraph::build(&seed, 2_000_000)?;
            for p in crate::prym_surface::reduced6_all(d) {
                if p.kind() != PrymKind::A {
                    continue;
                }
                if let Ok(o) = crate::prym_surface::prototype6_to_origami(&p, n) {
                    if crate::perm::is_primitive(o.h(), o.v())? && !g.contains(&o) {
                        return Err(fail(format!("n={n}: {p} escapes the orbit")));
                    }
                }
            }
        }
        Ok("H(6) reduced prototypes land in a single orbit for even n in 8..=16".into())
    }));
    out
}

/// Census coverage: orbits built from census seeds cover the census, with
/// the orbit count from the classification.
pub fn census_suite() -> Vec<CheckResult> {
    vec![run_check("h2-census-coverage", || {
        for n in 3..=12usize {
            let census = enumerate_h2_census(n)?;
            let mut orbits: Vec<OrbitGraph> = Vec::new();
            let mut total = 0usize;
            for seed in &census {
                if orbits.iter().any(|g| g.contains(seed)) {
                    continue;
                }
                let g = OrbitGraph::build(seed, 2_000_000)?;
                total += g.len();
                orbits.push(g);
            }
            let expected = if n == 3 || n % 2 == 0 { 1 } else { 2 };
            if orbits.len() != expected {
                return Err(fail(format!(
                    "n={n}: {} orbits from census seeds, classification gives {expected}",
                    orbits.len()
                )));
            }
            // cusp widths over the census tile the orbits exactly
            let width_sum: usize = census.iter().map(|o| o.cusp_width()).sum();
            if width_sum != total {
                return Err(fail(format!(
                    "n={n}: cusp widths sum to {width_sum}, orbits have {total} vertices"
                )));
            }
        }
        Ok("census covers the orbits for n in 3..=12".into())
    })]
}

/// Run a named suite.
pub fn run_suite(name: &str, c_max: f64) -> Result<Vec<CheckResult>> {
    match name {
        "golden" => Ok(golden_suite()),
        "formulas" => {
            let mut v = formulas_suite();
            v.extend(census_suite());
            Ok(v)
        }
        "butterflies" => Ok(butterflies_suite()),
        "hl" => Ok(hl_suite()),
        "components" => Ok(components_suite()),
        "bounds" => Ok(bounds_suite(c_max).0),
        "orbits" => Ok(orbit_consistency_suite()),
        other => Err(Error::BadArgument(format!("unknown suite {other:?}"))),
    }
}

pub const SUITES: [&str; 7] = [
    "golden",
    "formulas",
    "butterflies",
    "hl",
    "components",
    "bounds",
    "orbits",
];

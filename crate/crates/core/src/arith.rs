//! Small integer helpers shared by the prototype engines.

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Floor of the square root; exact for perfect squares.
pub fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = isqrt(n);
        r * r == n
    }
}

/// Euclidean reduction of a 2x2 integer matrix by column operations to the
/// form `[[a*, b'], [c', 0]]` with `b', c' > 0`, followed by
/// `a' = a* mod gcd(b', c')`.
///
/// Column operations act on the plane coordinates (right multiplication by
/// GL(2,Z)); the bottom row `(n21, n22)` is reduced to `(gcd, 0)`, which
/// pins `c' = gcd(n21, n22)`. The residual stabilizer only changes `a*` by
/// multiples of `b'` and `c'`, so `a'` is well defined.
pub fn reduce_minor(n: [[i64; 2]; 2]) -> (i64, i64, i64) {
    let mut m = n;
    // gcd the bottom row into the first slot
    while m[1][1] != 0 {
        if m[1][0] == 0 {
            // swap columns
            for row in &mut m {
                row.swap(0, 1);
            }
            continue;
        }
        if m[1][0].abs() <= m[1][1].abs() {
            let q = m[1][1] / m[1][0];
            for row in &mut m {
                row[1] -= q * row[0];
            }
            if m[1][1] != 0 {
                for row in &mut m {
                    row.swap(0, 1);
                }
            }
        } else {
            for row in &mut m {
                row.swap(0, 1);
            }
        }
    }
    if m[1][0] < 0 {
        for row in &mut m {
            row[0] = -row[0];
        }
    }
    if m[0][1] < 0 {
        for row in &mut m {
            row[1] = -row[1];
        }
    }
    let c = m[1][0];
    let b = m[0][1];
    let astar = m[0][0];
    let g = gcd_i64(b, c);
    let a = if g == 0 { astar } else { astar.rem_euclid(g) };
    (a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_exact() {
        for n in 0..2000i64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert!(is_square(196));
        assert!(!is_square(195));
    }

    #[test]
    fn minor_reduction_golden() {
        // B_2 on (1,24,2,2): N = [[2,-7],[-4,26]] reduces to a'=1, b'=12, c'=2
        let (a, b, c) = reduce_minor([[2, -7], [-4, 26]]);
        assert_eq!((a, b, c), (1, 12, 2));
    }

    #[test]
    fn minor_reduction_keeps_row_gcd() {
        let cases = [
            [[3, -5], [-6, 9]],
            [[1, 7], [-2, 6]],
            [[0, 5], [-3, 0]],
            [[2, -7], [4, -26]],
        ];
        for m in cases {
            let (_, b, c) = reduce_minor(m);
            assert_eq!(c, gcd_i64(m[1][0], m[1][1]));
            assert_eq!((b * c).abs(), (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs());
        }
    }
}

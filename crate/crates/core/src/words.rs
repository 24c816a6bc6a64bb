//! Words in the SL(2,Z) generators T and S.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A single generator token.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Gen {
    T,
    TInv,
    S,
    SInv,
}

impl Gen {
    pub fn inverse(self) -> Gen {
        match self {
            Gen::T => Gen::TInv,
            Gen::TInv => Gen::T,
            Gen::S => Gen::SInv,
            Gen::SInv => Gen::S,
        }
    }

    /// 2x2 matrix of the generator.
    pub fn matrix(self) -> [[i128; 2]; 2] {
        match self {
            Gen::T => [[1, 1], [0, 1]],
            Gen::TInv => [[1, -1], [0, 1]],
            Gen::S => [[1, 0], [1, 1]],
            Gen::SInv => [[1, 0], [-1, 1]],
        }
    }
}

/// A word in T, T⁻¹, S, S⁻¹. Tokens are stored in application order: the
/// first token acts first. The derived matrix is the product of the token
/// matrices with the last-applied token leftmost, so that directions
/// transform as `dir ↦ M · dir`.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Sl2Word {
    tokens: Vec<Gen>,
}

impl Sl2Word {
    pub fn empty() -> Self {
        Sl2Word { tokens: Vec::new() }
    }

    pub fn from_tokens(tokens: Vec<Gen>) -> Self {
        Sl2Word { tokens }
    }

    /// `T^k` for signed `k`.
    pub fn t_power(k: i64) -> Self {
        let g = if k >= 0 { Gen::T } else { Gen::TInv };
        Sl2Word {
            tokens: vec![g; k.unsigned_abs() as usize],
        }
    }

    /// `S^k` for signed `k`.
    pub fn s_power(k: i64) -> Self {
        let g = if k >= 0 { Gen::S } else { Gen::SInv };
        Sl2Word {
            tokens: vec![g; k.unsigned_abs() as usize],
        }
    }

    /// The rotation `R = S · T⁻¹ · S` (applied as S, then T⁻¹, then S).
    pub fn rotation() -> Self {
        Sl2Word {
            tokens: vec![Gen::S, Gen::TInv, Gen::S],
        }
    }

    pub fn tokens(&self) -> &[Gen] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push(&mut self, g: Gen) {
        self.tokens.push(g);
    }

    /// Append `other` so that it acts after `self`.
    pub fn extend(&mut self, other: &Sl2Word) {
        self.tokens.extend_from_slice(&other.tokens);
    }

    /// Concatenation: `self` acts first, then `other`.
    pub fn then(&self, other: &Sl2Word) -> Sl2Word {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Sl2Word { tokens }
    }

    /// The formal inverse word (reversed, with each token inverted).
    pub fn inverse(&self) -> Sl2Word {
        Sl2Word {
            tokens: self.tokens.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Matrix of the word (determinant 1).
    pub fn matrix(&self) -> [[i128; 2]; 2] {
        let mut m = [[1, 0], [0, 1]];
        for g in &self.tokens {
            m = mat_mul(g.matrix(), m);
        }
        m
    }

    /// Image of a direction vector under the word's matrix.
    pub fn apply_direction(&self, dir: (i64, i64)) -> (i64, i64) {
        let m = self.matrix();
        let x = m[0][0] * dir.0 as i128 + m[0][1] * dir.1 as i128;
        let y = m[1][0] * dir.0 as i128 + m[1][1] * dir.1 as i128;
        (x as i64, y as i64)
    }
}

fn mat_mul(a: [[i128; 2]; 2], b: [[i128; 2]; 2]) -> [[i128; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

impl fmt::Display for Sl2Word {
    /// Composition order (last-applied leftmost), with runs grouped as powers:
    /// applying T⁻¹, T⁻¹, S⁻¹ prints as `S^-1 T^-2`. The empty word prints as
    /// `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<(char, i64)> = Vec::new();
        for g in self.tokens.iter().rev() {
            let (letter, exp) = match g {
                Gen::T => ('T', 1),
                Gen::TInv => ('T', -1),
                Gen::S => ('S', 1),
                Gen::SInv => ('S', -1),
            };
            match parts.last_mut() {
                Some((l, e)) if *l == letter && (*e > 0) == (exp > 0) => *e += exp,
                _ => parts.push((letter, exp)),
            }
        }
        for (k, (letter, exp)) in parts.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *exp == 1 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{exp}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_matrix() {
        // R = S T^-1 S = [[0,-1],[1,0]]
        let m = Sl2Word::rotation().matrix();
        assert_eq!(m, [[0, -1], [1, 0]]);
    }

    #[test]
    fn word_inverse_gives_identity_matrix() {
        let w = Sl2Word::t_power(-2).then(&Sl2Word::s_power(3));
        let id = w.then(&w.inverse()).matrix();
        assert_eq!(id, [[1, 0], [0, 1]]);
    }

    #[test]
    fn direction_transforms() {
        assert_eq!(Sl2Word::t_power(1).apply_direction((1, 1)), (2, 1));
        assert_eq!(Sl2Word::s_power(-1).apply_direction((2, 2)), (2, 0));
        // T^-2 then S^-1 sends (6,2) to (2,0)
        let w = Sl2Word::t_power(-2).then(&Sl2Word::s_power(-1));
        assert_eq!(w.apply_direction((6, 2)), (2, 0));
    }

    #[test]
    fn display_groups_runs() {
        let w = Sl2Word::t_power(-1)
            .then(&Sl2Word::t_power(-2))
            .then(&Sl2Word::s_power(-1));
        assert_eq!(w.to_string(), "S^-1 T^-3");
        assert_eq!(Sl2Word::empty().to_string(), "1");
        let v = Sl2Word::from_tokens(vec![Gen::S, Gen::TInv, Gen::S]);
        assert_eq!(v.to_string(), "S T^-1 S");
    }
}

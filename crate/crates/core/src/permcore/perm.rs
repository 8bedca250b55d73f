use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree - 1}`.
///
/// Permutations act on the right: `p * q` applies `p` first, then `q`, so
/// `(p * q).image(i) == q.image(p.image(i))`. Conjugation follows the same
/// convention, `x^g = g⁻¹ x g`.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates `images` as a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for (i, &x) in images.iter().enumerate() {
            if x >= degree {
                return Err(Error::NotBijection {
                    degree,
                    detail: format!("image {x} of point {i} is out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijection {
                    degree,
                    detail: format!("image {x} is repeated"),
                });
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::NotBijection {
                        degree,
                        detail: format!("cycle point {a} is out of range"),
                    });
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::NotBijection {
                        degree,
                        detail: format!("point {a} appears in more than one cycle position"),
                    });
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; commas are accepted as
    /// separators and `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut token = String::new();
        let err = |column: usize, message: String| Error::Parse {
            line: 1,
            column,
            message,
        };

        for (col, ch) in text.chars().enumerate() {
            let column = col + 1;
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(err(column, "nested '('".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' | ',' | ' ' | '\t' => {
                    if !token.is_empty() {
                        let cycle = current
                            .as_mut()
                            .ok_or_else(|| err(column, "point outside a cycle".into()))?;
                        let point = token
                            .parse()
                            .map_err(|_| err(column, format!("bad point {token:?}")))?;
                        cycle.push(point);
                        token.clear();
                    }
                    if ch == ')' {
                        let cycle = current
                            .take()
                            .ok_or_else(|| err(column, "unmatched ')'".into()))?;
                        cycles.push(cycle);
                    }
                }
                c if c.is_ascii_digit() => {
                    if current.is_none() {
                        return Err(err(column, "point outside a cycle".into()));
                    }
                    token.push(c);
                }
                other => return Err(err(column, format!("unexpected character {other:?}"))),
            }
        }
        if current.is_some() {
            return Err(err(text.chars().count(), "unterminated cycle".into()));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch in conjugation");
        // x^g maps g(i) to g(x(i)).
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i]] = g.images[x];
        }
        Permutation { images }
    }

    /// `self⁻¹ · self^g`.
    pub fn commutator(&self, g: &Permutation) -> Permutation {
        &self.inverse() * &self.conjugate_by(g)
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, x)| i != *x)
            .map(|(i, _)| i)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] == point
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
            .expect("degree mismatch in permutation product")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = cyc(3, "(0 1)");
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(cyc(3, "(0 1 2)").compose(&t).unwrap(), cyc(3, "(1 2)"));
        let p = cyc(5, "(0 3)(1 2 4)");
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(cyc(3, "(0 1 2)").inverse(), cyc(3, "(0 2 1)"));
        assert_eq!(cyc(4, "(0 1)(2 3)").inverse(), cyc(4, "(0 1)(2 3)"));
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(cyc(3, "(0 1 2)").order(), 3);
        assert_eq!(cyc(5, "(0 1)(2 3 4)").order(), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::NotBijection { .. })
        ));
        assert!(matches!(
            Permutation::new(vec![0, 3, 1]),
            Err(Error::NotBijection { .. })
        ));
        assert_eq!(Permutation::new(vec![]), Err(Error::ZeroDegree));
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = cyc(6, "(0,1,2)(3 4)");
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
        assert!(Permutation::parse_cycles(3, "0 1)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 a)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 3)").is_err());
    }

    #[test]
    fn conjugation_is_right_action() {
        // (0 1)^(0 1 2) = (1 2)
        let x = cyc(3, "(0 1)");
        let g = cyc(3, "(0 1 2)");
        assert_eq!(x.conjugate_by(&g), cyc(3, "(1 2)"));
        assert_eq!(x.conjugate_by(&g), &(&g.inverse() * &x) * &g);
    }

    #[test]
    fn serde_uses_image_arrays() {
        let p = cyc(3, "(0 1 2)");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,0]");
        let back: Permutation = serde_json::from_str("[1,2,0]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}

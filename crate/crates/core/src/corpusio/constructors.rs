//! Standard permutation representations of a few group families.

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};
use crate::structure::is_prime;

/// Largest degree the constructors will produce.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Symmetries of an `n`-gon, order `2n`.
    Dihedral(usize),
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
    /// `SL(2,3)` acting on the 8 nonzero vectors of `F_3^2`.
    Sl23,
}

impl Family {
    /// Parses `symmetric(4)`, `elementary_abelian(3,2)`, `sl23`, ...
    pub fn parse(expr: &str) -> Result<Family> {
        let expr = expr.trim();
        let (name, args) = match expr.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::UnknownFamily(expr.to_string()))?;
                let args = inner
                    .split(',')
                    .map(|a| {
                        a.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::ParameterOutOfRange(format!("{a:?} in {expr:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                (name.trim(), args)
            }
            None => (expr, Vec::new()),
        };
        Family::from_parts(name, &args)
    }

    pub fn from_parts(name: &str, args: &[usize]) -> Result<Family> {
        let one = || match args {
            [n] => Ok(*n),
            _ => Err(Error::ParameterOutOfRange(format!(
                "{name} takes one parameter"
            ))),
        };
        match name {
            "symmetric" => Ok(Family::Symmetric(one()?)),
            "alternating" => Ok(Family::Alternating(one()?)),
            "cyclic" => Ok(Family::Cyclic(one()?)),
            "dihedral" => Ok(Family::Dihedral(one()?)),
            "elementary_abelian" => match args {
                [p, k] => Ok(Family::ElementaryAbelian { p: *p, k: *k }),
                _ => Err(Error::ParameterOutOfRange(
                    "elementary_abelian takes (p, k)".into(),
                )),
            },
            "sl23" if args.is_empty() => Ok(Family::Sl23),
            "sl23" => Err(Error::ParameterOutOfRange(
                "sl23 takes no parameters".into(),
            )),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn build(self) -> Result<PermGroup> {
        let out_of_range = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match self {
            Family::Symmetric(n) | Family::Alternating(n) | Family::Cyclic(n)
                if n == 0 || n > MAX_DEGREE =>
            {
                out_of_range(format!("degree {n} outside 1..={MAX_DEGREE}"))
            }
            Family::Symmetric(n) => {
                let mut gens = Vec::new();
                if n >= 2 {
                    gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
                    let long: Vec<usize> = (0..n).collect();
                    gens.push(Permutation::from_cycles(n, &[&long])?);
                }
                PermGroup::new(n, gens)
            }
            Family::Alternating(n) => {
                let gens = (2..n)
                    .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(n, gens)
            }
            Family::Cyclic(n) => {
                let long: Vec<usize> = (0..n).collect();
                PermGroup::new(n, vec![Permutation::from_cycles(n, &[&long])?])
            }
            Family::Dihedral(n) => {
                if !(3..=MAX_DEGREE).contains(&n) {
                    return out_of_range(format!("dihedral needs 3 <= n <= {MAX_DEGREE}, got {n}"));
                }
                let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect())?;
                let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
                PermGroup::new(n, vec![rotation, reflection])
            }
            Family::ElementaryAbelian { p, k } => {
                if !is_prime(p as u64) {
                    return Err(Error::NotPrime(p as u64));
                }
                if k == 0 || p * k > MAX_DEGREE {
                    return out_of_range(format!(
                        "elementary_abelian({p},{k}) needs 1 <= p*k <= {MAX_DEGREE}"
                    ));
                }
                let degree = p * k;
                let gens = (0..k)
                    .map(|block| {
                        let cycle: Vec<usize> = (block * p..(block + 1) * p).collect();
                        Permutation::from_cycles(degree, &[&cycle])
                    })
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(degree, gens)
            }
            Family::Sl23 => PermGroup::new(
                8,
                vec![sl23_matrix([[1, 1], [0, 1]]), sl23_matrix([[0, 1], [2, 0]])],
            ),
        }
    }
}

/// `make_named("symmetric", &[3])`.
pub fn make_named(family: &str, params: &[usize]) -> Result<PermGroup> {
    Family::from_parts(family, params)?.build()
}

/// Nonzero vectors of `F_3^2` in lexicographic order.
fn f3_vectors() -> Vec<[usize; 2]> {
    (0..3)
        .flat_map(|a| (0..3).map(move |b| [a, b]))
        .filter(|v| *v != [0, 0])
        .collect()
}

/// The permutation `v ↦ v·M` of the nonzero row vectors.
pub fn sl23_matrix(m: [[usize; 2]; 2]) -> Permutation {
    let vectors = f3_vectors();
    let images = vectors
        .iter()
        .map(|v| {
            let w = [
                (v[0] * m[0][0] + v[1] * m[1][0]) % 3,
                (v[0] * m[0][1] + v[1] * m[1][1]) % 3,
            ];
            vectors
                .iter()
                .position(|u| *u == w)
                .expect("invertible matrix")
        })
        .collect();
    Permutation::new(images).expect("invertible matrix")
}

/// Generators of the quaternion Sylow 2-subgroup of `SL(2,3)`.
pub fn sl23_q8_generators() -> Vec<Permutation> {
    vec![sl23_matrix([[0, 1], [2, 0]]), sl23_matrix([[1, 1], [1, 2]])]
}

/// `p` acting on the first block of `degree` points.
pub fn embed(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &x) in p.images().iter().enumerate() {
        images[offset + i] = offset + x;
    }
    Permutation::new(images).expect("embedding of a bijection")
}

/// `A × B` on `deg(A) + deg(B)` points, `A` on the first block.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| embed(g, 0, degree))
        .chain(b.generators().iter().map(|g| embed(g, a.degree(), degree)))
        .collect();
    PermGroup::new(degree, gens).expect("embedded generators have the product degree")
}

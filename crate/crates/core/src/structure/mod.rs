//! Sylow subgroups, the cores `O_p`, `O_{p'}`, `O^p`, and subgroup lists.

mod cores;
mod lattice;

pub use cores::{conjugates_in, core_p, core_p_prime, o_upper_p, sylow_subgroup};
pub use lattice::{all_subgroups, SubgroupList};

use crate::error::{Error, Result};
use crate::permcore::gcd;

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Whether `n` is a power of `p` (including `p^0 = 1`).
pub fn is_p_power(n: u64, p: u64) -> bool {
    n > 0 && p_part(n, p) == n
}

pub fn is_coprime_to(n: u64, p: u64) -> bool {
    gcd(n, p) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_helpers() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(9));
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_p_power(1, 3) && is_p_power(27, 3) && !is_p_power(18, 3));
    }
}

//! The constants attached to each n: the Bernoulli-derived pair (j_n, k_n),
//! the group order sigma_n, Bezout coefficients (c_n, d_n), the integer
//! s(Q)_2n and the orders of the groups bP_2n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, bezout, lowest_terms_num_denom};

/// Status of the dimension-126 Kervaire invariant one problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KervaireStatus {
    Exists,
    NotExists,
    Unknown,
}

/// The tuple (j_n, k_n, a_n, sigma_n, c_n, d_n) attached to n.
///
/// Invariants: j and k coprime, c*k + d*j = 1, and
/// `sigma = a * 2^(2n+1) * (2^(2n-1) - 1) * k` with a = 1 for n even, 2 for n odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallConstants {
    pub n: u32,
    pub j: BigInt,
    pub k: BigInt,
    pub a: BigInt,
    pub sigma: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

/// Builds the constants for n, with an optional explicit Bezout pair
/// (the canonical pair otherwise).
pub fn wall_constants(n: u32, bezout_override: Option<(BigInt, BigInt)>) -> Result<WallConstants> {
    if n < 1 {
        return Err(Error::invalid("wall_constants requires n >= 1"));
    }
    let b = bernoulli(2 * n as usize);
    let ratio = b / BigRational::from_integer(BigInt::from(4 * n));
    let (k, j) = lowest_terms_num_denom(&ratio);
    let a = if n % 2 == 0 { BigInt::one() } else { BigInt::from(2) };
    let sigma = &a
        * (BigInt::one() << (2 * n + 1))
        * ((BigInt::one() << (2 * n - 1)) - BigInt::one())
        * &k;
    let (c, d) = match bezout_override {
        Some((c, d)) => {
            if &c * &k + &d * &j != BigInt::one() {
                return Err(Error::invalid(format!(
                    "Bezout override ({c}, {d}) does not satisfy c*{k} + d*{j} = 1"
                )));
            }
            (c, d)
        }
        None => bezout(&k, &j)?,
    };
    Ok(WallConstants { n, j, k, a, sigma, c, d })
}

/// The integer s(Q)_2n, built from the constants for n and for 2n:
///
/// ```text
/// s(Q)_2n = ( sigma_n^2 + a_n^2 sigma_2n k_n (c_2n k_n + 2 (-1)^n d_2n j_n) ) / (8 j_n^2)
/// ```
///
/// This equals one eighth of the L-genus of the Krannich-Reinhold lift with
/// Pontryagin numbers `p_n^2 = 2 a_n^2 (2n-1)!^2` and the matching `p_2n`,
/// which is how the formula is cross-checked in the tests. Non-integrality
/// is a hard error: it would mean the constants themselves are corrupted.
pub fn s_of_q(two_n: u32, constants_n: &WallConstants, constants_2n: &WallConstants) -> Result<BigInt> {
    if two_n % 2 != 0 || constants_n.n * 2 != two_n || constants_2n.n != two_n {
        return Err(Error::invalid(format!(
            "s_of_q({two_n}) needs constants for n = {} and 2n = {two_n}",
            two_n / 2
        )));
    }
    // the plumbing generator Q and its lift exist only from n = 3 on; the
    // formula genuinely fails to be integral at n = 1, 2
    if two_n < 6 {
        return Err(Error::invalid("s_of_q is defined for 2n >= 6"));
    }
    let n = constants_n;
    let n2 = constants_2n;
    let sign = if n.n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let inner = &n2.c * &n.k + BigInt::from(2) * sign * &n2.d * &n.j;
    let numer = &n.sigma * &n.sigma + &n.a * &n.a * &n2.sigma * &n.k * inner;
    let denom = BigInt::from(8) * &n.j * &n.j;
    let (q, r) = numer.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::internal(format!(
            "s(Q)_{two_n} is not integral: {numer} / {denom}"
        )));
    }
    Ok(q)
}

/// Order of bP_2n, possibly conditional on the Kervaire invariant problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BpOrder {
    Known(BigInt),
    /// Only occurs at dimension 126 with status Unknown.
    Conditional { if_kervaire_exists: BigInt, if_not: BigInt },
}

impl BpOrder {
    pub fn known(&self) -> Option<&BigInt> {
        match self {
            BpOrder::Known(v) => Some(v),
            BpOrder::Conditional { .. } => None,
        }
    }
}

/// Order of the group bP_dim of homotopy (dim-1)-spheres bounding
/// parallelizable manifolds, for even dim = 2n >= 6.
///
/// For n even this is sigma_(n/2) / 8; for n odd it is 1 or 2, trivial for
/// n in {1, 3, 7, 15, 31} and conditional at n = 63.
pub fn bp_order(dim: u32, kervaire: KervaireStatus) -> Result<BpOrder> {
    if dim % 2 != 0 || dim < 6 {
        return Err(Error::invalid(format!("bp_order requires even dim >= 6, got {dim}")));
    }
    let n = dim / 2;
    if n % 2 == 0 {
        let half = wall_constants(n / 2, None)?;
        let (q, r) = half.sigma.div_rem(&BigInt::from(8));
        debug_assert!(r.is_zero(), "sigma_n not divisible by 8");
        Ok(BpOrder::Known(q))
    } else if matches!(n, 1 | 3 | 7 | 15 | 31) {
        Ok(BpOrder::Known(BigInt::one()))
    } else if n == 63 {
        match kervaire {
            KervaireStatus::Exists => Ok(BpOrder::Known(BigInt::one())),
            KervaireStatus::NotExists => Ok(BpOrder::Known(BigInt::from(2))),
            KervaireStatus::Unknown => Ok(BpOrder::Conditional {
                if_kervaire_exists: BigInt::one(),
                if_not: BigInt::from(2),
            }),
        }
    } else {
        Ok(BpOrder::Known(BigInt::from(2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn constants_n3() {
        let c = wall_constants(3, None).unwrap();
        assert_eq!(c.k, bi(1));
        assert_eq!(c.j, bi(504));
        assert_eq!(c.a, bi(2));
        assert_eq!(c.sigma, bi(2) * bi(128) * bi(31)); // 7936
        assert_eq!(c.sigma, bi(7936));
    }

    #[test]
    fn constants_n6() {
        let c = wall_constants(6, None).unwrap();
        assert_eq!(c.k, bi(691));
        assert_eq!(c.j, bi(65520));
        assert_eq!(c.a, bi(1));
        assert_eq!(c.sigma, bi(8192) * bi(2047) * bi(691));
    }

    #[test]
    fn constants_n1_odd() {
        let c = wall_constants(1, None).unwrap();
        assert_eq!(c.a, bi(2));
    }

    #[test]
    fn invalid_override_rejected() {
        let err = wall_constants(6, Some((bi(1), bi(1)))).unwrap_err();
        assert!(err.to_string().contains("Bezout override"));
    }

    #[test]
    fn s_of_q_paper_value() {
        let c3 = wall_constants(3, None).unwrap();
        let c6 = wall_constants(6, Some((bi(-18869), bi(199)))).unwrap();
        assert_eq!(s_of_q(6, &c3, &c6).unwrap(), bi(-5005553600));
    }

    #[test]
    fn s_of_q_bezout_invariance_mod_sigma_over_8() {
        let c3 = wall_constants(3, None).unwrap();
        let base = {
            let c6 = wall_constants(6, Some((bi(-18869), bi(199)))).unwrap();
            s_of_q(6, &c3, &c6).unwrap()
        };
        let sigma6_over_8 = wall_constants(6, None).unwrap().sigma / bi(8);
        for t in -3..=3i64 {
            let c = bi(-18869) + bi(65520) * bi(t);
            let d = bi(199) - bi(691) * bi(t);
            let c6 = wall_constants(6, Some((c, d))).unwrap();
            let v = s_of_q(6, &c3, &c6).unwrap();
            assert!(
                ((&v - &base) % &sigma6_over_8).is_zero(),
                "t = {t}: {v} vs {base} mod {sigma6_over_8}"
            );
        }
    }

    #[test]
    fn s_of_q_rejects_low_n() {
        let c1 = wall_constants(1, None).unwrap();
        let c2 = wall_constants(2, None).unwrap();
        assert!(s_of_q(2, &c1, &c2).is_err());
    }

    #[test]
    fn s_of_q_integral_and_invariant_up_to_40() {
        for n in 3..=40u32 {
            let cn = wall_constants(n, None).unwrap();
            let c2n = wall_constants(2 * n, None).unwrap();
            let base = s_of_q(2 * n, &cn, &c2n).unwrap();
            let modulus = &c2n.sigma / bi(8);
            for t in -3..=3i64 {
                let c = &c2n.c + &c2n.j * bi(t);
                let d = &c2n.d - &c2n.k * bi(t);
                let alt = wall_constants(2 * n, Some((c, d))).unwrap();
                let v = s_of_q(2 * n, &cn, &alt).unwrap();
                assert!(
                    ((&v - &base) % &modulus).is_zero(),
                    "s(Q)_{} not well-defined mod sigma/8 at t = {t}",
                    2 * n
                );
            }
        }
    }

    #[test]
    fn sigma_positive_divisible_by_8() {
        for n in 1..=40u32 {
            let c = wall_constants(n, None).unwrap();
            assert!(c.sigma.is_positive());
            assert!((&c.sigma % bi(8)).is_zero());
        }
    }

    #[test]
    fn bp_orders() {
        let k = KervaireStatus::Unknown;
        assert_eq!(bp_order(12, k).unwrap(), BpOrder::Known(bi(992)));
        assert_eq!(bp_order(24, k).unwrap(), BpOrder::Known(bi(1448424448)));
        assert_eq!(bp_order(14, k).unwrap(), BpOrder::Known(bi(1)));
        assert_eq!(
            bp_order(126, k).unwrap(),
            BpOrder::Conditional { if_kervaire_exists: bi(1), if_not: bi(2) }
        );
        assert_eq!(bp_order(126, KervaireStatus::Exists).unwrap(), BpOrder::Known(bi(1)));
        assert_eq!(bp_order(22, k).unwrap(), BpOrder::Known(bi(2)));
        assert!(bp_order(13, k).is_err());
    }
}

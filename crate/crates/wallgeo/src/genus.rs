//! Hirzebruch multiplicative-sequence engine.
//!
//! An even characteristic power series Q(z) with constant term 1 determines
//! polynomials K_n in the Pontryagin classes via
//! `prod_i Q(x_i) = sum_n K_n(p_1, ..., p_n)`. The production route goes
//! through the logarithm: with `log Q = sum_j b_j z^(2j)` and the power sums
//! P_j rewritten in the p-basis by Newton's identities,
//! `K = exp(sum_j b_j P_j)` with graded truncation. The direct multivariate
//! expansion is kept as an independent oracle in the test suite.
//!
//! Coefficients live in an abstract ring: exact rationals for the classical
//! genera, weight-tagged truncated q-series for the Witten genus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::modforms::eisenstein_g;
use crate::qseries::QSeries;
use crate::wall::WallConstants;

/// Commutative coefficient ring with rational scalars. Contexts such as the
/// q-series truncation travel inside the elements, so fresh zeros and ones
/// are derived from an existing exemplar.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Coeff for QSeries {
    fn zero_like(&self) -> Self {
        QSeries::zero(0, self.truncation())
    }
    fn one_like(&self) -> Self {
        QSeries::constant(BigRational::one(), 0, self.truncation())
    }
    fn add(&self, other: &Self) -> Self {
        QSeries::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QSeries::mul(self, other)
    }
    fn scale(&self, r: &BigRational) -> Self {
        QSeries::scale(self, r)
    }
    fn is_zero(&self) -> bool {
        QSeries::is_zero(self)
    }
}

/// Even power series `c0 + a_1 z^2 + a_2 z^4 + ...`; index i holds the
/// coefficient of z^(2i).
#[derive(Debug, Clone, PartialEq)]
pub struct EvenPowerSeries<R: Coeff> {
    pub coeffs: Vec<R>,
}

impl<R: Coeff> EvenPowerSeries<R> {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn exemplar(&self) -> &R {
        &self.coeffs[0]
    }

    /// Logarithm of a series with constant term 1, to the same order.
    fn log(&self) -> Vec<R> {
        let n = self.order();
        let zero = self.exemplar().zero_like();
        // u = Q - 1
        let mut u = self.coeffs.clone();
        u[0] = zero.clone();
        let mut out = vec![zero.clone(); n + 1];
        // log(1+u) = sum_{m>=1} (-1)^(m+1) u^m / m
        let mut upow = u.clone();
        for m in 1..=n {
            let sign = if m % 2 == 1 { BigRational::one() } else { -BigRational::one() };
            let c = sign / BigRational::from_integer(BigInt::from(m));
            for (i, v) in upow.iter().enumerate() {
                if !v.is_zero() {
                    out[i] = out[i].add(&v.scale(&c));
                }
            }
            if m < n {
                upow = mul_trunc(&upow, &u, n, &zero);
            }
        }
        out
    }
}

fn mul_trunc<R: Coeff>(a: &[R], b: &[R], n: usize, zero: &R) -> Vec<R> {
    let mut out = vec![zero.clone(); n + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > n {
                break;
            }
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// A partition written as a non-increasing list of parts; the empty
/// partition indexes the constant term.
pub type Partition = Vec<u32>;

fn partition_weight(p: &Partition) -> u32 {
    p.iter().sum()
}

/// Graded polynomial in Pontryagin classes with coefficients in R, truncated
/// above `degree_cap` (p_i has degree i).
#[derive(Debug, Clone, PartialEq)]
pub struct PontryaginPoly<R: Coeff> {
    pub degree_cap: u32,
    pub terms: BTreeMap<Partition, R>,
}

impl<R: Coeff> PontryaginPoly<R> {
    pub fn zero(degree_cap: u32) -> Self {
        PontryaginPoly { degree_cap, terms: BTreeMap::new() }
    }

    pub fn constant(c: R, degree_cap: u32) -> Self {
        let mut p = Self::zero(degree_cap);
        p.insert(vec![], c);
        p
    }

    pub fn insert(&mut self, partition: Partition, c: R) {
        if c.is_zero() || partition_weight(&partition) > self.degree_cap {
            return;
        }
        debug_assert!(partition.windows(2).all(|w| w[0] >= w[1]));
        match self.terms.get_mut(&partition) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&partition);
                }
            }
            None => {
                self.terms.insert(partition, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree_cap);
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                if partition_weight(p1) + partition_weight(p2) > self.degree_cap {
                    continue;
                }
                let mut p: Partition = p1.iter().chain(p2.iter()).copied().collect();
                p.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(p, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = Self::zero(self.degree_cap);
        for (p, c) in &self.terms {
            out.insert(p.clone(), c.scale(r));
        }
        out
    }

    /// The homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.degree_cap);
        for (p, c) in &self.terms {
            if partition_weight(p) == degree {
                out.insert(p.clone(), c.clone());
            }
        }
        out
    }

    pub fn coeff(&self, partition: &Partition) -> Option<&R> {
        self.terms.get(partition)
    }

}

impl PontryaginPoly<BigRational> {
    /// Evaluates at a rational assignment p_i -> v_i, split by homogeneous
    /// degree: index w of the result collects the partitions of weight w.
    /// Used by the Whitney multiplicativity tests, where truncation only
    /// behaves degreewise.
    pub fn eval_graded(&self, values: &dyn Fn(u32) -> BigRational) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree_cap as usize + 1];
        for (p, c) in &self.terms {
            let mut factor = BigRational::one();
            for part in p {
                factor *= values(*part);
            }
            out[partition_weight(p) as usize] += c * factor;
        }
        out
    }
}

/// Power sums `P_k` in the p-basis via Newton's identities:
/// `P_k = p_1 P_(k-1) - p_2 P_(k-2) + ... + (-1)^(k-1) k p_k`.
fn power_sums(n: u32) -> Vec<PontryaginPoly<BigRational>> {
    let mut ps: Vec<PontryaginPoly<BigRational>> = Vec::with_capacity(n as usize + 1);
    ps.push(PontryaginPoly::zero(n)); // P_0 unused
    for k in 1..=n {
        let mut acc = PontryaginPoly::zero(n);
        let sign = if k % 2 == 1 { BigRational::one() } else { -BigRational::one() };
        acc.insert(vec![k], sign * BigRational::from_integer(BigInt::from(k)));
        for i in 1..k {
            let mut pi = PontryaginPoly::zero(n);
            let s = if i % 2 == 1 { BigRational::one() } else { -BigRational::one() };
            pi.insert(vec![i], s);
            acc = acc.add(&pi.mul(&ps[(k - i) as usize]));
        }
        ps.push(acc);
    }
    ps
}

/// Converts a rational Pontryagin polynomial into one over R.
fn lift_poly<R: Coeff>(p: &PontryaginPoly<BigRational>, exemplar: &R) -> PontryaginPoly<R> {
    let one = exemplar.one_like();
    let mut out = PontryaginPoly::zero(p.degree_cap);
    for (part, c) in &p.terms {
        out.insert(part.clone(), one.scale(c));
    }
    out
}

/// The full graded output `K_0 + K_1 + ... + K_n` of the multiplicative
/// sequence of Q, as a single truncated Pontryagin polynomial.
pub fn multiplicative_sequence<R: Coeff>(q: &EvenPowerSeries<R>, n: u32) -> Result<PontryaginPoly<R>> {
    if q.order() < n as usize {
        return Err(Error::Truncation { have: q.order(), need: n as usize });
    }
    let one = q.exemplar();
    if &one.one_like() != one {
        return Err(Error::invalid("characteristic series must have constant term 1"));
    }
    if n == 0 {
        return Ok(PontryaginPoly::constant(one.one_like(), 0));
    }
    let b = q.log();
    multiplicative_sequence_from_log(&b[1..=n as usize], n)
}

/// Same, but starting from the log coefficients `b_1 .. b_n`
/// (`log Q = sum_j b_j z^(2j)`); this is the entry point for the Witten
/// genus, whose characteristic series is given in exponential form.
pub fn multiplicative_sequence_from_log<R: Coeff>(b: &[R], n: u32) -> Result<PontryaginPoly<R>> {
    if b.len() < n as usize {
        return Err(Error::Truncation { have: b.len(), need: n as usize });
    }
    let exemplar = b
        .first()
        .ok_or_else(|| Error::invalid("empty log series"))?;
    let ps = power_sums(n);
    // S = sum_j b_j P_j
    let mut s = PontryaginPoly::<R>::zero(n);
    for (j, bj) in b.iter().enumerate().take(n as usize) {
        if bj.is_zero() {
            continue;
        }
        let pj = lift_poly(&ps[j + 1], exemplar);
        for (part, c) in &pj.terms {
            s.insert(part.clone(), c.mul(bj));
        }
    }
    // K = exp(S), graded truncation at degree n
    let mut k = PontryaginPoly::constant(exemplar.one_like(), n);
    let mut term = PontryaginPoly::constant(exemplar.one_like(), n);
    for m in 1..=n as usize {
        term = term.mul(&s);
        if term.terms.is_empty() {
            break;
        }
        let inv_fact = BigRational::new(BigInt::one(), factorial(m));
        k = k.add(&term.scale(&inv_fact));
    }
    Ok(k)
}

/// Characteristic series of the A-hat genus, `(z/2)/sinh(z/2)`, to order n.
pub fn ahat_series(n: u32) -> EvenPowerSeries<BigRational> {
    // sinh(w)/w = sum w^(2i) / (2i+1)!, w = z/2; invert the series.
    let denom: Vec<BigRational> = (0..=n as usize)
        .map(|i| {
            BigRational::new(BigInt::one(), factorial(2 * i + 1) * (BigInt::one() << (2 * i)))
        })
        .collect();
    EvenPowerSeries { coeffs: invert_series(&denom) }
}

/// Characteristic series of the L genus, `z/tanh(z)`, to order n.
pub fn l_series(n: u32) -> EvenPowerSeries<BigRational> {
    // cosh z = sum z^(2i)/(2i)!, sinh(z)/z = sum z^(2i)/(2i+1)!
    let num: Vec<BigRational> = (0..=n as usize)
        .map(|i| BigRational::new(BigInt::one(), factorial(2 * i)))
        .collect();
    let den: Vec<BigRational> = (0..=n as usize)
        .map(|i| BigRational::new(BigInt::one(), factorial(2 * i + 1)))
        .collect();
    let inv = invert_series(&den);
    let zero = BigRational::zero();
    EvenPowerSeries { coeffs: mul_trunc(&num, &inv, n as usize, &zero) }
}

fn invert_series(a: &[BigRational]) -> Vec<BigRational> {
    assert!(a[0].is_one(), "series inversion needs constant term 1");
    let n = a.len() - 1;
    let mut inv = vec![BigRational::zero(); n + 1];
    inv[0] = BigRational::one();
    for i in 1..=n {
        let mut acc = BigRational::zero();
        for j in 1..=i {
            acc += &a[j] * &inv[i - j];
        }
        inv[i] = -acc;
    }
    inv
}

/// Pontryagin numbers of a manifold of dimension `4n`: partition -> value,
/// with unspecified partitions equal to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PontryaginNumbers {
    pub dim: u32,
    pub values: BTreeMap<Partition, BigInt>,
}

impl PontryaginNumbers {
    pub fn new(dim: u32) -> Self {
        assert!(dim % 4 == 0, "Pontryagin numbers live in dimensions divisible by 4");
        PontryaginNumbers { dim, values: BTreeMap::new() }
    }

    pub fn set(&mut self, partition: Partition, v: BigInt) {
        let mut p = partition;
        p.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(4 * partition_weight(&p), self.dim, "partition weight must be dim/4");
        self.values.insert(p, v);
    }

    pub fn get(&self, partition: &Partition) -> BigInt {
        self.values.get(partition).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True if some nonzero number involves p_1.
    pub fn involves_p1(&self) -> bool {
        self.values
            .iter()
            .any(|(p, v)| !v.is_zero() && p.contains(&1))
    }
}

/// Pairs the degree-(dim/4) component of K with the fundamental class:
/// `sum_lambda coeff_lambda * p_lambda[M]`.
pub fn genus_evaluate<R: Coeff>(k: &PontryaginPoly<R>, nums: &PontryaginNumbers) -> Result<R> {
    let n = nums.dim / 4;
    if k.degree_cap < n {
        return Err(Error::invalid(format!(
            "genus polynomial of degree {} cannot pair with a {}-manifold",
            k.degree_cap, nums.dim
        )));
    }
    let exemplar = k
        .terms
        .values()
        .next()
        .ok_or_else(|| Error::invalid("cannot evaluate the empty polynomial"))?;
    let mut acc = exemplar.zero_like();
    for (p, c) in &k.terms {
        if partition_weight(p) != n {
            continue;
        }
        let v = nums.get(p);
        if !v.is_zero() {
            acc = acc.add(&c.scale(&BigRational::from_integer(v)));
        }
    }
    Ok(acc)
}

/// The twisted A-hat genus `<Ahat(M) ch(T_C), [M]>`, where the Chern
/// character of the complexified tangent bundle is
/// `dim + sum_k 2 P_k / (2k)!` in the p-basis. The constant term is the real
/// dimension of M; this is the only place the dimension enters.
pub fn twisted_ahat(dim: u32, nums: &PontryaginNumbers) -> Result<BigRational> {
    if dim % 4 != 0 || dim == 0 {
        return Err(Error::invalid("twisted_ahat requires positive dim divisible by 4"));
    }
    let n = dim / 4;
    let ahat = multiplicative_sequence(&ahat_series(n), n)?;
    let ps = power_sums(n);
    let mut ch = PontryaginPoly::constant(BigRational::from_integer(BigInt::from(dim)), n);
    for k in 1..=n {
        let c = BigRational::new(BigInt::from(2), factorial(2 * k as usize));
        ch = ch.add(&ps[k as usize].scale(&c));
    }
    let twisted = ahat.mul(&ch);
    genus_evaluate(&twisted.component(n), nums)
}

/// The Witten genus of a manifold with the given Pontryagin numbers, as a
/// weight-(dim/2) q-series. The characteristic series is
/// `exp(sum_k 2 G_2k z^(2k) / (2k)!)`.
///
/// Rejects Pontryagin numbers involving p_1: the z^2 log coefficient is the
/// quasi-modular G_2, and only the string condition (vanishing p_1 terms)
/// keeps it out of the result.
pub fn witten_genus(dim: u32, nums: &PontryaginNumbers, q_order: usize) -> Result<QSeries> {
    if dim % 4 != 0 || dim == 0 {
        return Err(Error::invalid("witten_genus requires positive dim divisible by 4"));
    }
    if q_order < 2 {
        return Err(Error::invalid("witten_genus requires q_order >= 2"));
    }
    if nums.involves_p1() {
        return Err(Error::invalid(
            "witten_genus rejects nonzero p_1 monomials (string condition)",
        ));
    }
    let n = dim / 4;
    let b: Vec<QSeries> = (1..=n)
        .map(|k| {
            let g = eisenstein_g(2 * k, q_order);
            g.scale(&BigRational::new(BigInt::from(2), factorial(2 * k as usize)))
        })
        .collect();
    let k_poly = multiplicative_sequence_from_log(&b, n)?;
    let result = genus_evaluate(&k_poly.component(n), nums)?;
    if !result.is_zero() {
        debug_assert_eq!(result.weight, dim as i64 / 2);
    }
    Ok(result)
}

/// Pontryagin numbers of the Krannich-Reinhold lift in dimension 8n:
/// `p_n^2 = 2 N a_n^2 (2n-1)!^2` and
/// `p_2n = N a_n^2 ((2n-1)!^2 + (4n-1)! j_2n (k_n/j_n)(c_2n k_n/j_n + 2 d_2n (-1)^n))`.
/// The Bezout pair inside `constants_2n` must match the one used for s(Q).
pub fn kr_pontryagin_numbers(
    n: u32,
    big_n: &BigInt,
    constants_n: &WallConstants,
    constants_2n: &WallConstants,
) -> Result<PontryaginNumbers> {
    if n < 3 || constants_n.n != n || constants_2n.n != 2 * n {
        return Err(Error::invalid(
            "kr_pontryagin_numbers needs n >= 3 with constants for n and 2n",
        ));
    }
    let a_sq = &constants_n.a * &constants_n.a;
    let f = factorial(2 * n as usize - 1);
    let p_n_sq = BigInt::from(2) * big_n * &a_sq * &f * &f;

    let ratio = BigRational::new(constants_n.k.clone(), constants_n.j.clone()); // |B_2n| / 4n
    let sign = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    let inner = BigRational::from_integer(constants_2n.c.clone()) * &ratio
        + BigRational::from_integer(BigInt::from(2) * &constants_2n.d) * sign;
    let p_2n_rat = BigRational::from_integer(big_n * &a_sq)
        * (BigRational::from_integer(&f * &f)
            + BigRational::from_integer(factorial(4 * n as usize - 1) * &constants_2n.j) * ratio * inner);
    if !p_2n_rat.is_integer() {
        return Err(Error::internal(format!("p_{} is not integral: {}", 2 * n, p_2n_rat)));
    }

    let mut nums = PontryaginNumbers::new(8 * n);
    nums.set(vec![n, n], p_n_sq);
    nums.set(vec![2 * n], p_2n_rat.to_integer());
    Ok(nums)
}

/// Full report of the dimension-24 obstruction pipeline for multiplier N.
#[derive(Debug, Clone)]
pub struct Counterexample24Report {
    pub n_multiplier: BigInt,
    pub p3_sq: BigInt,
    pub p6: BigInt,
    pub combination: BigInt,
    pub combination_factorization: Vec<(BigInt, u32)>,
    pub divisor: BigInt,
    pub divisor_factorization: Vec<(BigInt, u32)>,
    pub divisible: bool,
    pub n_must_be_even: bool,
}

/// Runs the dimension-24 pipeline: Krannich-Reinhold numbers with the
/// explicit Bezout pair (-18869, 199), the combination `-1177 p3^2 - 311 p6`,
/// and the divisibility test against 237758976000.
pub fn counterexample24(big_n: &BigInt) -> Result<Counterexample24Report> {
    use crate::modforms::witten_divisibility_check;
    use crate::wall::wall_constants;

    let c3 = wall_constants(3, None)?;
    let c6 = wall_constants(6, Some((BigInt::from(-18869), BigInt::from(199))))?;
    let nums = kr_pontryagin_numbers(3, big_n, &c3, &c6)?;
    let p3_sq = nums.get(&vec![3, 3]);
    let p6 = nums.get(&vec![6]);
    let report = witten_divisibility_check(&p3_sq, &p6);
    Ok(Counterexample24Report {
        n_multiplier: big_n.clone(),
        p3_sq,
        p6,
        combination_factorization: crate::exact::factorize(&report.value),
        divisor_factorization: crate::exact::factorize(&report.divisor),
        divisible: report.divisible,
        n_must_be_even: !report.divisible || big_n.is_zero(),
        combination: report.value,
        divisor: report.divisor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wall::wall_constants;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn degree_zero_is_one() {
        let k = multiplicative_sequence(&l_series(0), 0).unwrap();
        assert_eq!(k.coeff(&vec![]), Some(&BigRational::one()));
        assert_eq!(k.terms.len(), 1);
    }

    #[test]
    fn classical_degree_one_and_two() {
        let ahat = multiplicative_sequence(&ahat_series(2), 2).unwrap();
        assert_eq!(ahat.coeff(&vec![1]), Some(&rat(-1, 24)));
        assert_eq!(ahat.coeff(&vec![1, 1]), Some(&rat(7, 5760)));
        assert_eq!(ahat.coeff(&vec![2]), Some(&rat(-4, 5760)));

        let l = multiplicative_sequence(&l_series(2), 2).unwrap();
        assert_eq!(l.coeff(&vec![1]), Some(&rat(1, 3)));
        assert_eq!(l.coeff(&vec![2]), Some(&rat(7, 45)));
        assert_eq!(l.coeff(&vec![1, 1]), Some(&rat(-1, 45)));
    }

    #[test]
    fn l6_pins_s_of_q() {
        // The signature of the Krannich-Reinhold lift, computed from its
        // Pontryagin numbers via the L genus, equals 8 * s(Q)_6.
        let l = multiplicative_sequence(&l_series(6), 6).unwrap();
        let c3 = wall_constants(3, None).unwrap();
        let c6 = wall_constants(6, Some((BigInt::from(-18869), BigInt::from(199)))).unwrap();
        let nums = kr_pontryagin_numbers(3, &BigInt::one(), &c3, &c6).unwrap();
        let sig = genus_evaluate(&l.component(6), &nums).unwrap();
        let s = crate::wall::s_of_q(6, &c3, &c6).unwrap();
        assert_eq!(sig, BigRational::from_integer(BigInt::from(8) * s));
    }

    #[test]
    fn genus_evaluate_normalization() {
        let l = multiplicative_sequence(&l_series(1), 1).unwrap();
        let mut nums = PontryaginNumbers::new(4);
        nums.set(vec![1], BigInt::from(3));
        assert_eq!(genus_evaluate(&l.component(1), &nums).unwrap(), BigRational::one());

        let empty = PontryaginNumbers::new(4);
        assert!(Coeff::is_zero(&genus_evaluate(&l.component(1), &empty).unwrap()));
    }

    #[test]
    fn twisted_ahat_paper_coefficients() {
        let mut unit33 = PontryaginNumbers::new(24);
        unit33.set(vec![3, 3], BigInt::one());
        assert_eq!(twisted_ahat(24, &unit33).unwrap(), rat(-1177, 9906624000));

        let mut unit6 = PontryaginNumbers::new(24);
        unit6.set(vec![6], BigInt::one());
        assert_eq!(twisted_ahat(24, &unit6).unwrap(), rat(-311, 9906624000));

        let zero = PontryaginNumbers::new(24);
        assert!(Coeff::is_zero(&twisted_ahat(24, &zero).unwrap()));
    }

    #[test]
    fn twisted_ahat_linearity_grid() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let a = BigInt::from(rng.gen_range(-20i64..=20));
            let b = BigInt::from(rng.gen_range(-20i64..=20));
            let mut nums = PontryaginNumbers::new(24);
            nums.set(vec![3, 3], a.clone());
            nums.set(vec![6], b.clone());
            let want = rat(-1177, 9906624000) * BigRational::from_integer(a)
                + rat(-311, 9906624000) * BigRational::from_integer(b);
            assert_eq!(twisted_ahat(24, &nums).unwrap(), want);
        }
    }

    #[test]
    fn kr_numbers_n3() {
        let c3 = wall_constants(3, None).unwrap();
        let c6 = wall_constants(6, Some((BigInt::from(-18869), BigInt::from(199)))).unwrap();
        let nums = kr_pontryagin_numbers(3, &BigInt::one(), &c3, &c6).unwrap();
        assert_eq!(nums.get(&vec![3, 3]), BigInt::from(115200));
        assert_eq!(nums.get(&vec![6]), BigInt::from(-9038281766400i64));

        let zero = kr_pontryagin_numbers(3, &BigInt::zero(), &c3, &c6).unwrap();
        assert!(zero.get(&vec![3, 3]).is_zero());
        assert!(zero.get(&vec![6]).is_zero());
    }

    #[test]
    fn counterexample_report() {
        let r1 = counterexample24(&BigInt::one()).unwrap();
        assert_eq!(r1.combination, BigInt::from(2810905493760000i64));
        assert!(!r1.divisible);
        assert!(r1.n_must_be_even);
        let expect: Vec<(BigInt, u32)> = [(2, 11), (3, 6), (5, 4), (7, 2), (13, 1), (4729, 1)]
            .iter()
            .map(|(p, e)| (BigInt::from(*p as i64), *e))
            .collect();
        assert_eq!(r1.combination_factorization, expect);

        let r2 = counterexample24(&BigInt::from(2)).unwrap();
        assert!(r2.divisible);
        let r0 = counterexample24(&BigInt::zero()).unwrap();
        assert!(r0.divisible);
    }

    #[test]
    fn witten_rejects_p1() {
        let mut nums = PontryaginNumbers::new(8);
        nums.set(vec![1, 1], BigInt::one());
        assert!(witten_genus(8, &nums, 4).is_err());
    }

    #[test]
    fn witten_zero_input() {
        let nums = PontryaginNumbers::new(24);
        let w = witten_genus(24, &nums, 4).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn hirzebruch_decomposition_through_q10() {
        // witten coefficient of each monomial = Ahat-coeff * qexp(E4^3 - 744 D)
        //                                      + twisted-coeff * qexp(D)
        use crate::modforms::{delta_q, eisenstein_e};
        let q_order = 10;
        let e43 = eisenstein_e(4, q_order).pow(3, 0);
        let d = delta_q(q_order);
        let dbar = e43.sub(&d.scale_int(&BigInt::from(744)));

        let ahat = multiplicative_sequence(&ahat_series(6), 6).unwrap();
        for part in [vec![3u32, 3], vec![6]] {
            let mut nums = PontryaginNumbers::new(24);
            nums.set(part.clone(), BigInt::one());
            let w = witten_genus(24, &nums, q_order).unwrap();
            assert_eq!(w.weight, 12);
            let a_coeff = ahat.coeff(&part).unwrap();
            let t_coeff = twisted_ahat(24, &nums).unwrap();
            let want = dbar.scale(a_coeff).add(&d.scale(&t_coeff));
            assert_eq!(w.coeffs(), want.coeffs(), "partition {part:?}");
        }
    }

    #[test]
    fn witten_independent_of_g2_constant() {
        // Perturbing the constant term of the z^2 log coefficient must not
        // change the genus of p_1-free inputs.
        let n = 6u32;
        let q_order = 6;
        let mut b: Vec<QSeries> = (1..=n)
            .map(|k| {
                eisenstein_g(2 * k, q_order)
                    .scale(&BigRational::new(BigInt::from(2), factorial(2 * k as usize)))
            })
            .collect();
        let base = multiplicative_sequence_from_log(&b, n).unwrap();
        let mut perturbed_g2 = b[0].clone();
        perturbed_g2.set_coeff(0, perturbed_g2.coeff(0) + rat(17, 5));
        b[0] = perturbed_g2;
        let perturbed = multiplicative_sequence_from_log(&b, n).unwrap();

        for part in [vec![3u32, 3], vec![6], vec![4, 2], vec![2, 2, 2]] {
            let mut nums = PontryaginNumbers::new(24);
            nums.set(part.clone(), BigInt::one());
            let a = genus_evaluate(&base.component(6), &nums).unwrap();
            let b2 = genus_evaluate(&perturbed.component(6), &nums).unwrap();
            assert_eq!(a.coeffs(), b2.coeffs(), "partition {part:?} leaked G_2");
        }
    }

    #[test]
    fn whitney_multiplicativity_small_series() {
        // Degreewise: K_w(p-convolution) = sum_{i+j=w} K_i(pa) K_j(pb).
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..8 {
            let n = 4u32;
            let coeffs: Vec<BigRational> = std::iter::once(BigRational::one())
                .chain((1..=n as usize).map(|_| rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=5))))
                .collect();
            let q = EvenPowerSeries { coeffs };
            let k = multiplicative_sequence(&q, n).unwrap();

            let pa: Vec<BigRational> =
                (0..=n).map(|_| rat(rng.gen_range(-3i64..=3), 1)).collect();
            let pb: Vec<BigRational> =
                (0..=n).map(|_| rat(rng.gen_range(-3i64..=3), 1)).collect();
            // Whitney sum formula for Pontryagin classes, with p_0 = 1
            let conv = |i: u32| -> BigRational {
                let mut acc = BigRational::zero();
                for a in 0..=i {
                    let va = if a == 0 { BigRational::one() } else { pa[a as usize].clone() };
                    let vb = if a == i { BigRational::one() } else { pb[(i - a) as usize].clone() };
                    acc += va * vb;
                }
                acc
            };
            let lhs = k.eval_graded(&conv);
            let ga = k.eval_graded(&|i| pa[i as usize].clone());
            let gb = k.eval_graded(&|i| pb[i as usize].clone());
            for w in 0..=n as usize {
                let mut want = BigRational::zero();
                for i in 0..=w {
                    want += &ga[i] * &gb[w - i];
                }
                assert_eq!(lhs[w], want, "degree {w}");
            }
        }
    }
}

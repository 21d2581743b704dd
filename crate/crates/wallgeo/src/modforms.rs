//! Integral modular forms of level 1: the ring Z[E4, E6, D]/(E4^3 - E6^2 - 1728 D)
//! in the normal form with E6-exponent at most 1, q-expansions, and the
//! divisibility test cutting out the image of tmf.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, divisor_sum};
use crate::qseries::QSeries;

/// The divisor in the dimension-24 Witten-genus obstruction,
/// `24 * 9906624000 = 2^12 * 3^6 * 5^3 * 7^2 * 13`.
pub const WITTEN_DIVISOR: u64 = 237_758_976_000;

/// Asserts the hard-coded divisor against its factorization and the product
/// form. Cheap; run by the CLI at startup and by the tests.
pub fn assert_witten_divisor() {
    let product: u64 = 24 * 9_906_624_000;
    assert_eq!(WITTEN_DIVISOR, product);
    let factored: u64 = 2u64.pow(12) * 3u64.pow(6) * 5u64.pow(3) * 7u64.pow(2) * 13;
    assert_eq!(WITTEN_DIVISOR, factored);
}

/// An integral modular form of level 1 in normal-form coordinates:
/// a sum of monomials `c * E4^i * E6^j * D^k` with `j <= 1` and
/// `4i + 6j + 12k = weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularForm {
    pub weight: u32,
    /// (i, j, k) -> coefficient; zero coefficients are not stored.
    pub coeffs: BTreeMap<(u32, u32, u32), BigInt>,
}

impl ModularForm {
    pub fn zero(weight: u32) -> Self {
        ModularForm { weight, coeffs: BTreeMap::new() }
    }

    pub fn monomial(weight: u32, i: u32, j: u32, k: u32, c: BigInt) -> Result<Self> {
        if 4 * i + 6 * j + 12 * k != weight {
            return Err(Error::invalid(format!(
                "monomial E4^{i} E6^{j} D^{k} has weight {}, not {weight}",
                4 * i + 6 * j + 12 * k
            )));
        }
        let mut f = Self::zero(weight);
        f.insert(i, j, k, c);
        Ok(f)
    }

    fn insert(&mut self, i: u32, j: u32, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((i, j, k)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(i, j, k));
        }
    }

    /// Reduces all monomials to normal form by rewriting E6^2 -> E4^3 - 1728 D.
    pub fn normalize(&self) -> Self {
        let mut out = Self::zero(self.weight);
        let mut work: Vec<((u32, u32, u32), BigInt)> =
            self.coeffs.iter().map(|(m, c)| (*m, c.clone())).collect();
        while let Some(((i, j, k), c)) = work.pop() {
            if j <= 1 {
                out.insert(i, j, k, c);
            } else {
                // E6^j = E6^(j-2) (E4^3 - 1728 D)
                work.push(((i + 3, j - 2, k), c.clone()));
                work.push(((i, j - 2, k + 1), c * BigInt::from(-1728)));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight && !self.coeffs.is_empty() && !other.coeffs.is_empty() {
            return Err(Error::invalid(format!(
                "cannot add forms of weight {} and {}",
                self.weight, other.weight
            )));
        }
        let mut out = self.clone();
        out.weight = if self.coeffs.is_empty() { other.weight } else { self.weight };
        for ((i, j, k), c) in &other.coeffs {
            out.insert(*i, *j, *k, c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.weight + other.weight);
        for ((i1, j1, k1), c1) in &self.coeffs {
            for ((i2, j2, k2), c2) in &other.coeffs {
                out.insert(i1 + i2, j1 + j2, k1 + k2, c1 * c2);
            }
        }
        out.normalize()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.weight);
        for ((i, j, k), v) in &self.coeffs {
            out.insert(*i, *j, *k, v * c);
        }
        out
    }
}

/// Normalized Eisenstein series `E_2k = 1 - (4k / B_2k) sum sigma_(2k-1)(m) q^m`.
pub fn eisenstein_e(two_k: u32, trunc: usize) -> QSeries {
    assert!(two_k >= 2 && two_k % 2 == 0);
    let b = bernoulli(two_k as usize);
    let factor = -BigRational::from_integer(BigInt::from(2 * two_k)) / b;
    let mut s = QSeries::constant(BigRational::one(), two_k as i64, trunc);
    for m in 1..=trunc {
        s.set_coeff(m, &factor * BigRational::from_integer(divisor_sum(two_k - 1, m as u64)));
    }
    s
}

/// Eisenstein series in the genus normalization,
/// `G_2k = -B_2k/(4k) + sum sigma_(2k-1)(m) q^m`.
pub fn eisenstein_g(two_k: u32, trunc: usize) -> QSeries {
    let b = bernoulli(two_k as usize);
    let scale = -b / BigRational::from_integer(BigInt::from(2 * two_k));
    eisenstein_e(two_k, trunc).scale(&scale)
}

/// The discriminant cusp form `D = (E4^3 - E6^2) / 1728`.
/// Integrality of the result is asserted.
pub fn delta_q(trunc: usize) -> QSeries {
    let e4 = eisenstein_e(4, trunc);
    let e6 = eisenstein_e(6, trunc);
    let num = e4.pow(3, 0).sub(&e6.pow(2, 0));
    let d = num.scale(&BigRational::new(BigInt::one(), BigInt::from(1728)));
    assert!(d.is_integral(), "discriminant q-expansion must be integral");
    assert!(d.coeff(0).is_zero(), "discriminant must be a cusp form");
    d
}

/// Exact q-expansion of a normal-form modular form.
pub fn q_expand(f: &ModularForm, trunc: usize) -> QSeries {
    let e4 = eisenstein_e(4, trunc);
    let e6 = eisenstein_e(6, trunc);
    let d = delta_q(trunc);
    let mut out = QSeries::zero(f.weight as i64, trunc);
    for ((i, j, k), c) in &f.coeffs {
        let term = e4.pow(*i, 0).mul(&e6.pow(*j, 0)).mul(&d.pow(*k, 0));
        out = out.add(&term.scale_int(c));
    }
    out
}

/// Coordinates of a weight-12 q-expansion in the basis (E4^3, D):
/// `a = c_0`, `b = c_1 - 720 c_0`, verified against every further
/// coefficient up to the truncation.
pub fn weight12_basis_coords(s: &QSeries) -> Result<(BigRational, BigRational)> {
    if s.truncation() < 1 {
        return Err(Error::Truncation { have: s.truncation(), need: 1 });
    }
    let a = s.coeff(0).clone();
    let b = s.coeff(1) - BigRational::from_integer(BigInt::from(720)) * s.coeff(0);
    let e43 = eisenstein_e(4, s.truncation()).pow(3, 0);
    let d = delta_q(s.truncation());
    let recon = e43.scale(&a).add(&d.scale(&b));
    for m in 0..=s.truncation() {
        if recon.coeff(m) != s.coeff(m) {
            return Err(Error::invalid(format!(
                "series is not a weight-12 modular form: q^{m} coefficient {} != {}",
                s.coeff(m),
                recon.coeff(m)
            )));
        }
    }
    Ok((a, b))
}

/// The Hopkins-Mahowald multiplier for the monomial E4^i E6^j D^k:
/// 1 if i > 0 and j = 0; 2 if j = 1; 24/gcd(24, k) if i = j = 0.
pub fn tmf_image_multiplier(i: u32, j: u32, k: u32) -> BigInt {
    assert!(j <= 1, "multiplier is defined on normal-form monomials");
    if j == 1 {
        BigInt::from(2)
    } else if i > 0 {
        BigInt::one()
    } else {
        BigInt::from(24 / 24u32.gcd(&k.max(0)))
    }
}

/// Monomials of `f` whose coefficients fail the tmf-image divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmfWitness {
    pub monomial: (u32, u32, u32),
    pub coefficient: BigInt,
    pub required_divisor: BigInt,
}

/// Whether `f` (in normal form) lies in the image of the tmf coefficient
/// ring inside modular forms; on failure the witness lists each offending
/// monomial with the divisor it misses.
pub fn in_tmf_image(f: &ModularForm) -> (bool, Vec<TmfWitness>) {
    let mut witnesses = Vec::new();
    for ((i, j, k), c) in &f.coeffs {
        let m = tmf_image_multiplier(*i, *j, *k);
        if !(c % &m).is_zero() {
            witnesses.push(TmfWitness {
                monomial: (*i, *j, *k),
                coefficient: c.clone(),
                required_divisor: m,
            });
        }
    }
    (witnesses.is_empty(), witnesses)
}

/// Report of the dimension-24 divisibility test on `-1177 p3^2 - 311 p6`.
#[derive(Debug, Clone)]
pub struct WittenDivisibilityReport {
    pub value: BigInt,
    pub divisor: BigInt,
    pub divisible: bool,
    pub quotient: BigInt,
    pub remainder: BigInt,
}

pub fn witten_divisibility_check(p3_sq: &BigInt, p6: &BigInt) -> WittenDivisibilityReport {
    assert_witten_divisor();
    let value = BigInt::from(-1177) * p3_sq - BigInt::from(311) * p6;
    let divisor = BigInt::from(WITTEN_DIVISOR);
    let (quotient, remainder) = value.div_rem(&divisor);
    WittenDivisibilityReport { divisible: remainder.is_zero(), value, divisor, quotient, remainder }
}

/// Parses polynomial strings like `"c*E4^i*E6^j*D^k + ..."` with
/// integer-string coefficients into a normal-form modular form.
pub fn parse_form(expr: &str, weight: u32) -> Result<ModularForm> {
    let mut form = ModularForm::zero(weight);
    let expr = expr.replace(char::is_whitespace, "");
    if expr.is_empty() {
        return Err(Error::invalid("empty form expression"));
    }
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (idx, ch) in expr.char_indices() {
        if (ch == '+' || ch == '-') && idx != 0 && !matches!(expr.as_bytes()[idx - 1], b'+' | b'-' | b'^' | b'*') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);

    for term in &terms {
        let mut coeff = BigInt::one();
        let (mut i, mut j, mut k) = (0u32, 0u32, 0u32);
        let mut body = term.as_str();
        if let Some(rest) = body.strip_prefix('-') {
            coeff = -coeff;
            body = rest;
        } else if let Some(rest) = body.strip_prefix('+') {
            body = rest;
        }
        for factor in body.split('*').filter(|f| !f.is_empty()) {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad exponent in '{factor}'")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            match name {
                "E4" => i += exp,
                "E6" => j += exp,
                "D" | "Delta" => k += exp,
                _ => {
                    let c: BigInt = name
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad factor '{factor}' in form expression")))?;
                    if exp != 1 {
                        coeff *= c.pow(exp);
                    } else {
                        coeff *= c;
                    }
                }
            }
        }
        let got = 4 * i + 6 * j + 12 * k;
        if got != weight {
            return Err(Error::invalid(format!(
                "term '{term}' has weight {got}, expected {weight}"
            )));
        }
        form = form.add(&ModularForm::monomial(weight, i, j, k, coeff)?)?;
    }
    Ok(form.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn eisenstein_first_coefficients() {
        let e4 = eisenstein_e(4, 3);
        assert_eq!(e4.coeff(0), &BigRational::one());
        assert_eq!(e4.coeff(1), &BigRational::from_integer(bi(240)));
        assert_eq!(e4.coeff(2), &BigRational::from_integer(bi(2160)));
        let e6 = eisenstein_e(6, 2);
        assert_eq!(e6.coeff(1), &BigRational::from_integer(bi(-504)));
    }

    #[test]
    fn delta_expansion() {
        let d = delta_q(4);
        let want = [0i64, 1, -24, 252, -1472];
        for (m, w) in want.iter().enumerate() {
            assert_eq!(d.coeff(m), &BigRational::from_integer(bi(*w)), "q^{m}");
        }
    }

    #[test]
    fn delta_integral_to_32() {
        let d = delta_q(32);
        assert!(d.is_integral());
        assert!(d.coeff(0).is_zero());
    }

    #[test]
    fn e6_squared_normalizes() {
        let e6 = ModularForm::monomial(6, 0, 1, 0, bi(1)).unwrap();
        let sq = e6.mul(&e6);
        let mut want = ModularForm::zero(12);
        want.insert(3, 0, 0, bi(1));
        want.insert(0, 0, 1, bi(-1728));
        assert_eq!(sq, want);
    }

    #[test]
    fn mul_trivial_cases() {
        let e4 = ModularForm::monomial(4, 1, 0, 0, bi(1)).unwrap();
        let one = ModularForm::monomial(0, 0, 0, 0, bi(1)).unwrap();
        assert_eq!(e4.mul(&one), e4);
        let e43 = ModularForm::monomial(12, 3, 0, 0, bi(1)).unwrap();
        let d = ModularForm::monomial(12, 0, 0, 1, bi(1)).unwrap();
        let prod = e43.mul(&d);
        assert_eq!(prod.coeffs.get(&(3, 0, 1)), Some(&bi(1)));
        assert_eq!(prod.weight, 24);
    }

    #[test]
    fn q_expand_ring_map_on_random_forms() {
        let mut rng = StdRng::seed_from_u64(7);
        let trunc = 8;
        for _ in 0..20 {
            let wf = 4 * rng.gen_range(1..=3u32);
            let wg = 6 * rng.gen_range(1..=2u32);
            let f = random_form(&mut rng, wf);
            let g = random_form(&mut rng, wg);
            let lhs = q_expand(&f.mul(&g), trunc);
            let rhs = q_expand(&f, trunc).mul(&q_expand(&g, trunc));
            assert_eq!(lhs.coeffs(), rhs.coeffs());
        }
    }

    fn random_form(rng: &mut StdRng, weight: u32) -> ModularForm {
        let mut f = ModularForm::zero(weight);
        for i in 0..=weight / 4 {
            for j in 0..=1u32 {
                for k in 0..=weight / 12 {
                    if 4 * i + 6 * j + 12 * k == weight && rng.gen_bool(0.6) {
                        f.insert(i, j, k, bi(rng.gen_range(-5..=5)));
                    }
                }
            }
        }
        f
    }

    #[test]
    fn weight12_coords() {
        let trunc = 10;
        let e43 = q_expand(&ModularForm::monomial(12, 3, 0, 0, bi(1)).unwrap(), trunc);
        assert_eq!(weight12_basis_coords(&e43).unwrap(), (BigRational::one(), BigRational::zero()));
        let d = delta_q(trunc);
        assert_eq!(weight12_basis_coords(&d).unwrap(), (BigRational::zero(), BigRational::one()));
        let dbar = e43.sub(&d.scale_int(&bi(744)));
        assert_eq!(
            weight12_basis_coords(&dbar).unwrap(),
            (BigRational::one(), BigRational::from_integer(bi(-744)))
        );
        // non-modular input rejected
        let mut bogus = d.clone();
        bogus.set_coeff(5, BigRational::from_integer(bi(17)));
        assert!(weight12_basis_coords(&bogus).is_err());
    }

    #[test]
    fn weight12_roundtrip_on_normal_forms() {
        let trunc = 6;
        for (i, k, c) in [(3u32, 0u32, 7i64), (0, 1, -3)] {
            let f = ModularForm::monomial(12, i, 0, k, bi(c)).unwrap();
            let (a, b) = weight12_basis_coords(&q_expand(&f, trunc)).unwrap();
            if i == 3 {
                assert_eq!(a, BigRational::from_integer(bi(c)));
                assert!(b.is_zero());
            } else {
                assert!(a.is_zero());
                assert_eq!(b, BigRational::from_integer(bi(c)));
            }
        }
    }

    #[test]
    fn multipliers() {
        assert_eq!(tmf_image_multiplier(3, 0, 0), bi(1));
        assert_eq!(tmf_image_multiplier(0, 0, 1), bi(24));
        assert_eq!(tmf_image_multiplier(0, 0, 2), bi(12));
        assert_eq!(tmf_image_multiplier(0, 1, 0), bi(2));
        assert_eq!(tmf_image_multiplier(0, 0, 24), bi(1));
    }

    #[test]
    fn tmf_membership() {
        let delta = ModularForm::monomial(12, 0, 0, 1, bi(1)).unwrap();
        let (ok, w) = in_tmf_image(&delta);
        assert!(!ok);
        assert_eq!(w[0].required_divisor, bi(24));

        let (ok, _) = in_tmf_image(&delta.scale(&bi(24)));
        assert!(ok);
        let e43 = ModularForm::monomial(12, 3, 0, 0, bi(1)).unwrap();
        assert!(in_tmf_image(&e43).0);
    }

    #[test]
    fn tmf_image_closed_under_ring_ops() {
        // Random image elements of weight <= 48 stay in the image under
        // addition and multiplication by the image generators E4 and 2E6
        // (E6 itself is not in the image: its multiplier is 2).
        let mut rng = StdRng::seed_from_u64(11);
        let e4 = ModularForm::monomial(4, 1, 0, 0, bi(1)).unwrap();
        let e6 = ModularForm::monomial(6, 0, 1, 0, bi(2)).unwrap();
        for _ in 0..40 {
            let weight = 12 * rng.gen_range(1..=4u32);
            let f = random_image_element(&mut rng, weight);
            let g = random_image_element(&mut rng, weight);
            assert!(in_tmf_image(&f.add(&g).unwrap()).0);
            assert!(in_tmf_image(&f.mul(&e4)).0, "E4 * image element left the image");
            assert!(in_tmf_image(&f.mul(&e6)).0, "2E6 * image element left the image");
        }
    }

    fn random_image_element(rng: &mut StdRng, weight: u32) -> ModularForm {
        let mut f = ModularForm::zero(weight);
        for i in 0..=weight / 4 {
            for j in 0..=1u32 {
                for k in 0..=weight / 12 {
                    if 4 * i + 6 * j + 12 * k == weight && rng.gen_bool(0.5) {
                        let m = tmf_image_multiplier(i, j, k);
                        f.insert(i, j, k, m * bi(rng.gen_range(-4..=4)));
                    }
                }
            }
        }
        f
    }

    #[test]
    fn divisibility_report() {
        let r = witten_divisibility_check(&bi(115200), &bi(-9038281766400));
        assert_eq!(r.value, bi(2810905493760000));
        assert!(!r.divisible);
        let r0 = witten_divisibility_check(&bi(0), &bi(0));
        assert!(r0.divisible);
        let r2 = witten_divisibility_check(&(bi(2) * bi(115200)), &(bi(2) * bi(-9038281766400)));
        assert!(r2.divisible);
    }

    #[test]
    fn parse_form_expressions() {
        let f = parse_form("E4^3 - 744*D", 12).unwrap();
        assert_eq!(f.coeffs.get(&(3, 0, 0)), Some(&bi(1)));
        assert_eq!(f.coeffs.get(&(0, 0, 1)), Some(&bi(-744)));
        let g = parse_form("2*E6^2", 12).unwrap();
        // normalized: 2 E4^3 - 3456 D
        assert_eq!(g.coeffs.get(&(3, 0, 0)), Some(&bi(2)));
        assert_eq!(g.coeffs.get(&(0, 0, 1)), Some(&bi(-3456)));
        assert!(parse_form("E4", 12).is_err());
    }
}

//! Shared brute-force oracle: expand prod_{i=1}^{12} Q(x_i) directly as a
//! truncated multivariate polynomial, rewrite each homogeneous component in
//! the p-monomial basis by an exact linear solve, and compare coefficient by
//! coefficient with the Newton-identities production path. Twelve variables
//! are enough for the symmetric functions of degree <= 6 to be independent.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use wallgeo::genus::{multiplicative_sequence, EvenPowerSeries};

pub const VARS: usize = 12;
pub const DEG: usize = 6;

/// Dense-enough multivariate polynomial: exponent vector -> coefficient,
/// truncated above total degree DEG. The variables are the squares x_i, so
/// p-degree equals total degree here.
pub type Poly = BTreeMap<Vec<u8>, BigRational>;

pub fn poly_one() -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; VARS], BigRational::one());
    p
}

pub fn mul_univariate(p: &Poly, var: usize, coeffs: &[BigRational]) -> Poly {
    // multiply by sum_k coeffs[k] * x_var^k
    let mut out = Poly::new();
    for (exp, c) in p {
        let deg: usize = exp.iter().map(|&e| e as usize).sum();
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() || deg + k > DEG {
                continue;
            }
            let mut e2 = exp.clone();
            e2[var] += k as u8;
            let entry = out.entry(e2).or_insert_with(BigRational::zero);
            *entry += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn mul_poly(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        let da: usize = ea.iter().map(|&e| e as usize).sum();
        for (eb, cb) in b {
            let db: usize = eb.iter().map(|&e| e as usize).sum();
            if da + db > DEG {
                continue;
            }
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert_with(BigRational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Elementary symmetric polynomial e_k of the VARS variables.
pub fn elementary(k: usize) -> Poly {
    // e_k via the generating product prod (1 + x_i t), tracking t-degree
    let mut layers: Vec<Poly> = (0..=k).map(|_| Poly::new()).collect();
    layers[0] = poly_one();
    for var in 0..VARS {
        for d in (1..=k).rev() {
            let lower = layers[d - 1].clone();
            let bumped = mul_univariate(&lower, var, &[BigRational::zero(), BigRational::one()]);
            for (e, c) in bumped {
                let entry = layers[d].entry(e).or_insert_with(BigRational::zero);
                *entry += c;
            }
            layers[d].retain(|_, c| !c.is_zero());
        }
    }
    layers[k].clone()
}

pub fn partitions_of(w: usize) -> Vec<Vec<u32>> {
    fn rec(w: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if w == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(w)).rev() {
            prefix.push(part as u32);
            rec(w - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// Sorted-exponent representative monomial of a partition: x_1^l1 x_2^l2 ...
fn representative(partition: &[u32]) -> Vec<u8> {
    let mut e = vec![0u8; VARS];
    for (i, &part) in partition.iter().enumerate() {
        e[i] = part as u8;
    }
    e
}

fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("oracle matrix singular");
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col].clone();
        for c in col..n {
            a[col][c] /= &d;
        }
        b[col] /= &d;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    b
}

/// Expands prod Q(x_i) and returns, per degree w <= DEG, the coefficients
/// in the p-monomial basis indexed by partitions of w.
pub fn brute_force_k(series: &EvenPowerSeries<BigRational>) -> Vec<BTreeMap<Vec<u32>, BigRational>> {
    let mut prod = poly_one();
    for var in 0..VARS {
        prod = mul_univariate(&prod, var, &series.coeffs);
    }
    // cache elementary symmetric polynomials e_1..e_DEG (p_k = e_k here)
    let es: Vec<Poly> = (0..=DEG).map(elementary).collect();
    let mut out = Vec::new();
    for w in 0..=DEG {
        let parts = partitions_of(w);
        // e_lambda = prod e_{lambda_i}
        let e_lams: Vec<Poly> = parts
            .iter()
            .map(|lam| {
                let mut p = poly_one();
                for &l in lam {
                    p = mul_poly(&p, &es[l as usize]);
                }
                p
            })
            .collect();
        // match coefficients at the representative monomial of each partition
        let m = parts.len();
        let mut a = vec![vec![BigRational::zero(); m]; m];
        let mut b = vec![BigRational::zero(); m];
        for (row, mu) in parts.iter().enumerate() {
            let mono = representative(mu);
            for (col, el) in e_lams.iter().enumerate() {
                if let Some(c) = el.get(&mono) {
                    a[row][col] = c.clone();
                }
            }
            if let Some(c) = prod.get(&mono) {
                b[row] = c.clone();
            }
        }
        let x = solve(a, b);
        out.push(parts.into_iter().zip(x).collect());
    }
    out
}

/// Panics (with context) if the engine and the oracle disagree anywhere
/// through degree DEG.
pub fn check_series(series: EvenPowerSeries<BigRational>, name: &str) {
    let k = multiplicative_sequence(&series, DEG as u32).unwrap();
    let oracle = brute_force_k(&series);
    for (w, table) in oracle.iter().enumerate() {
        for (lam, coeff) in table {
            let engine = k.coeff(lam).cloned().unwrap_or_else(BigRational::zero);
            assert_eq!(
                &engine, coeff,
                "{name}: coefficient of p_{lam:?} in degree {w} disagrees with the direct expansion"
            );
        }
    }
}

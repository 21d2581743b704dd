//! Raw n-space data: intersection forms, normal bundle coordinates,
//! compatibility validation, and invariant extraction.
//!
//! Normal bundle values live in a fixed coordinate encoding of pi_n BSO(n),
//! chosen per residue of n mod 8. Each basis vector of H carries a pair
//! (s, t): s is the stable image in pi_n BSO and t the complementary
//! coordinate (coefficient of the tangent class tau for n even, the
//! phi-coordinate for n congruent to 1 mod 8). Torsion coordinates are
//! reduced mod 2. The encoding determines sig, chi^2, Phi and phi(chi)
//! exactly; it does not claim full homotopy-theoretic fidelity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Symmetric,
    SkewSymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    pub parity: Parity,
    pub matrix: Matrix,
}

impl IntersectionForm {
    pub fn new(parity: Parity, matrix: Matrix) -> Result<Self> {
        let r = matrix.len();
        if matrix.iter().any(|row| row.len() != r) {
            return Err(Error::invalid("intersection form matrix must be square"));
        }
        for i in 0..r {
            for j in 0..r {
                let ok = match parity {
                    Parity::Symmetric => matrix[i][j] == matrix[j][i],
                    Parity::SkewSymmetric => matrix[i][j] == -matrix[j][i].clone(),
                };
                if !ok {
                    return Err(Error::invalid(format!(
                        "matrix entries ({i},{j}) and ({j},{i}) violate the {parity:?} flag"
                    )));
                }
            }
        }
        if parity == Parity::SkewSymmetric && r % 2 != 0 {
            return Err(Error::invalid("skew forms have even rank"));
        }
        Ok(IntersectionForm { parity, matrix })
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Exact determinant by the Bareiss fraction-free algorithm.
    pub fn det(&self) -> BigInt {
        let n = self.rank();
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.matrix.clone();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// All diagonal entries even. (Trivially true for skew forms.)
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.matrix[i][i].is_even())
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * &self.matrix[i][j] * yj;
                }
            }
        }
        acc
    }
}

/// Signature by exact congruence diagonalization over the rationals.
/// Zero-diagonal pivots are produced by the basis change e_i -> e_i + e_j.
pub fn signature(form: &IntersectionForm) -> Result<BigInt> {
    if form.parity != Parity::Symmetric {
        return Err(Error::invalid("signature requires a symmetric form"));
    }
    let n = form.rank();
    let mut a: Vec<Vec<BigRational>> = form
        .matrix
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let mut sig = BigInt::zero();
    let mut done = vec![false; n];
    loop {
        // a pivot with nonzero diagonal among the active rows
        let pivot = (0..n).find(|&i| !done[i] && !a[i][i].is_zero());
        let i = match pivot {
            Some(i) => i,
            None => {
                // all active diagonals vanish; borrow from an off-diagonal
                let mut found = None;
                'search: for i in 0..n {
                    if done[i] {
                        continue;
                    }
                    for j in 0..n {
                        if !done[j] && j != i && !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        // e_i -> e_i + e_j: row and column update
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] += v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] += v;
                        }
                        i
                    }
                    None => break,
                }
            }
        };
        let d = a[i][i].clone();
        sig += if d.is_positive() { BigInt::one() } else { -BigInt::one() };
        for j in 0..n {
            if j == i || done[j] || a[j][i].is_zero() {
                continue;
            }
            let f = &a[j][i] / &d;
            for k in 0..n {
                let v = &f * &a[i][k];
                a[j][k] -= v;
            }
            for k in 0..n {
                let v = &f * &a[k][i];
                a[k][j] -= v;
            }
        }
        done[i] = true;
    }
    Ok(sig)
}

/// Arf invariant of the quadratic refinement given by q on basis vectors,
/// extended by q(x+y) = q(x) + q(y) + x.y over GF(2).
pub fn arf(form: &IntersectionForm, q_values: &[u8]) -> Result<u8> {
    let n = form.rank();
    if q_values.len() != n {
        return Err(Error::invalid("one q bit per basis vector required"));
    }
    if q_values.iter().any(|&b| b > 1) {
        return Err(Error::invalid("q values must be bits"));
    }
    if (0..n).any(|i| form.matrix[i][i].is_odd()) {
        return Err(Error::invalid(
            "mod-2 reduction is not alternating; no quadratic refinement exists",
        ));
    }
    let b2: Vec<Vec<u8>> = form
        .matrix
        .iter()
        .map(|row| row.iter().map(|v| (v.mod_floor(&BigInt::from(2))).to_u32_digits().1.first().copied().unwrap_or(0) as u8).collect())
        .collect();
    if det_gf2(&b2) == 0 {
        return Err(Error::invalid("mod-2 reduction of the form is degenerate"));
    }
    let pair2 = |x: &[u8], y: &[u8]| -> u8 {
        let mut acc = 0u8;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc ^= x[i] & b2[i][j] & y[j];
            }
        }
        acc
    };
    let q = |x: &[u8]| -> u8 {
        let mut acc = 0u8;
        for i in 0..n {
            if x[i] == 1 {
                acc ^= q_values[i];
                for j in i + 1..n {
                    acc ^= x[j] & b2[i][j];
                }
            }
        }
        acc
    };
    // greedy symplectic pairing
    let mut basis: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect();
    let mut total = 0u8;
    while !basis.is_empty() {
        let a = basis.remove(0);
        let bi = basis
            .iter()
            .position(|b| pair2(&a, b) == 1)
            .ok_or_else(|| Error::invalid("mod-2 reduction of the form is degenerate"))?;
        let b = basis.remove(bi);
        total ^= q(&a) & q(&b);
        for v in basis.iter_mut() {
            let ca = pair2(v, &b);
            let cb = pair2(v, &a);
            for k in 0..n {
                v[k] ^= (ca & a[k]) ^ (cb & b[k]);
            }
        }
    }
    Ok(total)
}

fn det_gf2(m: &[Vec<u8>]) -> u8 {
    let n = m.len();
    let mut a: Vec<Vec<u8>> = m.to_vec();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] == 1);
        let piv = match piv {
            Some(p) => p,
            None => return 0,
        };
        a.swap(col, piv);
        for r in 0..n {
            if r != col && a[r][col] == 1 {
                for c in 0..n {
                    a[r][c] ^= a[col][c];
                }
            }
        }
    }
    1
}

/// Solves A x = b over GF(2); A must be invertible mod 2.
fn solve_gf2(a0: &[Vec<u8>], b0: &[u8]) -> Result<Vec<u8>> {
    let n = a0.len();
    let mut a: Vec<Vec<u8>> = a0.to_vec();
    let mut b: Vec<u8> = b0.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| a[r][col] == 1)
            .ok_or_else(|| Error::invalid("mod-2 form is degenerate"))?;
        a.swap(col, piv);
        b.swap(col, piv);
        perm.swap(col, piv);
        for r in 0..n {
            if r != col && a[r][col] == 1 {
                for c in 0..n {
                    a[r][c] ^= a[col][c];
                }
                b[r] ^= b[col];
            }
        }
    }
    Ok(b)
}

/// Solves A x = b exactly over the rationals; A must be invertible.
fn solve_rational(a0: &Matrix, b0: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = a0.len();
    let mut a: Vec<Vec<BigRational>> = a0
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let mut b: Vec<BigRational> = b0.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::invalid("singular linear system"))?;
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &d;
        }
        b[col] /= &d;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Ok(b)
}

/// Coordinate group of one slot of the pi_n BSO(n) encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordKind {
    Free,
    Mod2,
    Absent,
}

/// (s-kind, t-kind) for each residue of n mod 8, following the table:
/// s is the stable coordinate, t the complementary one.
pub fn coord_kinds(residue: u32) -> (CoordKind, CoordKind) {
    use CoordKind::*;
    match residue % 8 {
        0 | 4 => (Free, Free),
        1 => (Mod2, Mod2),
        2 => (Mod2, Free),
        6 => (Absent, Free),
        3 | 5 | 7 => (Absent, Mod2),
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalBundleData {
    pub n: u32,
    /// One (s, t) pair per basis vector of H.
    pub values: Vec<(BigInt, BigInt)>,
}

impl NormalBundleData {
    /// Stable coordinate of alpha(x); additive (tau is stably trivial).
    pub fn alpha_s(&self, x: &[BigInt]) -> BigInt {
        let (s_kind, _) = coord_kinds(self.n);
        let mut acc = BigInt::zero();
        for (xi, (s, _)) in x.iter().zip(&self.values) {
            acc += xi * s;
        }
        reduce_coord(acc, s_kind)
    }

    /// Complementary coordinate of alpha(x), extended quadratically:
    /// t(x) = sum x_i t_i + sum_{i<j} x_i x_j (e_i.e_j) + sum C(x_i,2) e_i^2,
    /// the unique extension with polarization (x.y) tau.
    pub fn alpha_t(&self, form: &IntersectionForm, x: &[BigInt]) -> BigInt {
        let (_, t_kind) = coord_kinds(self.n);
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc += xi * &self.values[i].1;
            // C(x_i, 2) * e_i^2
            acc += xi * (xi - 1) / 2 * &form.matrix[i][i];
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                acc += xi * xj * &form.matrix[i][j];
            }
        }
        reduce_coord(acc, t_kind)
    }
}

fn reduce_coord(v: BigInt, kind: CoordKind) -> BigInt {
    match kind {
        CoordKind::Free => v,
        CoordKind::Mod2 => v.mod_floor(&BigInt::from(2)),
        CoordKind::Absent => BigInt::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

impl Violation {
    fn new(check: &str, detail: impl Into<String>) -> Self {
        Violation { check: check.into(), detail: detail.into() }
    }
}

/// Validates an n-space: coordinate domains, parity, unimodularity, the
/// additivity condition on alpha, and the self-intersection condition in
/// the residues where the encoding determines HJ. Violations are data.
pub fn validate_nspace(n: u32, form: &IntersectionForm, bundle: &NormalBundleData) -> Vec<Violation> {
    let mut out = Vec::new();
    let r = form.rank();
    if bundle.n != n {
        out.push(Violation::new("residue", "bundle residue does not match n"));
        return out;
    }
    if bundle.values.len() != r {
        out.push(Violation::new(
            "rank",
            format!("form has rank {r} but bundle carries {} coordinate pairs", bundle.values.len()),
        ));
        return out;
    }
    let expected_parity = if n % 2 == 0 { Parity::Symmetric } else { Parity::SkewSymmetric };
    if form.parity != expected_parity {
        out.push(Violation::new(
            "parity",
            format!("n = {n} requires a {expected_parity:?} form"),
        ));
        return out;
    }
    let (s_kind, t_kind) = coord_kinds(n);
    for (i, (s, t)) in bundle.values.iter().enumerate() {
        for (name, v, kind) in [("s", s, s_kind), ("t", t, t_kind)] {
            match kind {
                CoordKind::Mod2 if !(v.is_zero() || v.is_one()) => out.push(Violation::new(
                    "coordinate-domain",
                    format!("{name}-coordinate of basis vector {i} must be a bit, got {v}"),
                )),
                CoordKind::Absent if !v.is_zero() => out.push(Violation::new(
                    "coordinate-domain",
                    format!("{name}-coordinate is absent for n = {n} mod 8 but basis vector {i} has {v}"),
                )),
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    if !form.is_unimodular() {
        out.push(Violation::new("unimodular", format!("|det| = {} != 1", form.det().abs())));
    }
    let alpha = |x: &[BigInt]| (bundle.alpha_s(x), bundle.alpha_t(form, x));
    out.extend(check_additivity(n, form, &alpha));
    out.extend(check_self_intersection(n, form, bundle));
    out
}

/// Checks alpha(x+y) = alpha(x) + alpha(y) + (x.y) tau componentwise on all
/// basis pairs and on 100 seeded random vectors. The closure form lets the
/// test suite inject deliberately broken alphas.
pub fn check_additivity(
    n: u32,
    form: &IntersectionForm,
    alpha: &dyn Fn(&[BigInt]) -> (BigInt, BigInt),
) -> Vec<Violation> {
    let r = form.rank();
    let (s_kind, t_kind) = coord_kinds(n);
    let mut out = Vec::new();
    let mut check_pair = |x: &[BigInt], y: &[BigInt], label: String| {
        let sum: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let (ls, lt) = alpha(&sum);
        let (xs, xt) = alpha(x);
        let (ys, yt) = alpha(y);
        let xy = form.pair(x, y);
        // tau has s-coordinate 0 and t-coordinate 1
        let rs = reduce_coord(xs + ys, s_kind);
        let rt = reduce_coord(xt + yt + xy, t_kind);
        if ls != rs || lt != rt {
            out.push(Violation::new(
                "additivity",
                format!("alpha(x+y) != alpha(x) + alpha(y) + (x.y) tau on {label}"),
            ));
        }
    };
    for i in 0..r {
        for j in 0..r {
            let ei: Vec<BigInt> = (0..r).map(|k| BigInt::from(u32::from(k == i))).collect();
            let ej: Vec<BigInt> = (0..r).map(|k| BigInt::from(u32::from(k == j))).collect();
            check_pair(&ei, &ej, format!("basis pair ({i},{j})"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x57414c4c);
    for trial in 0..100 {
        if r == 0 {
            break;
        }
        let x: Vec<BigInt> = (0..r).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        let y: Vec<BigInt> = (0..r).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        check_pair(&x, &y, format!("random pair {trial}"));
    }
    out
}

/// Eq. 2.1 in the coordinates where HJ is determined: for n even,
/// x^2 = 2 t(x) on basis vectors, except n in {4, 8} where HJ of the stable
/// generator is 1 and x^2 = s(x) + 2 t(x). Odd n carries no check here.
fn check_self_intersection(n: u32, form: &IntersectionForm, bundle: &NormalBundleData) -> Vec<Violation> {
    let mut out = Vec::new();
    if n % 2 != 0 {
        return out;
    }
    for (i, (s, t)) in bundle.values.iter().enumerate() {
        let sq = form.matrix[i][i].clone();
        let expected = if n == 4 || n == 8 { s + BigInt::from(2) * t } else { BigInt::from(2) * t };
        if sq != expected {
            out.push(Violation::new(
                "self-intersection",
                format!("basis vector {i}: x^2 = {sq} but HJ alpha(x) = {expected}"),
            ));
        }
    }
    out
}

/// Residue-dependent invariant tuple; only the fields meaningful for the
/// residue of n are populated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSpaceInvariants {
    pub n: u32,
    pub sig: Option<BigInt>,
    pub chi_sq: Option<BigInt>,
    pub chi_sq_mod4: Option<u8>,
    pub phi: Option<u8>,
    pub phi_chi: Option<u8>,
}

impl NSpaceInvariants {
    pub fn empty(n: u32) -> Self {
        NSpaceInvariants { n, sig: None, chi_sq: None, chi_sq_mod4: None, phi: None, phi_chi: None }
    }
}

/// Extracts (sig, chi^2, Phi, phi(chi)) as appropriate for n mod 8.
/// chi is the vector dual of x -> s(alpha(x)) under the unimodular form;
/// integral for n = 0 mod 4, a mod-2 class for n = 1, 2 mod 8.
pub fn extract_invariants(n: u32, form: &IntersectionForm, bundle: &NormalBundleData) -> Result<NSpaceInvariants> {
    let violations = validate_nspace(n, form, bundle);
    if let Some(v) = violations.first() {
        return Err(Error::invalid(format!("invalid n-space [{}]: {}", v.check, v.detail)));
    }
    let r = form.rank();
    let mut inv = NSpaceInvariants::empty(n);
    if n % 2 == 0 {
        inv.sig = Some(signature(form)?);
    }
    match n % 8 {
        0 | 4 => {
            // solve form . chi = s exactly; unimodularity makes chi integral
            let s_vec: Vec<BigInt> = bundle.values.iter().map(|(s, _)| s.clone()).collect();
            let chi_rat = if r == 0 { vec![] } else { solve_rational(&form.matrix, &s_vec)? };
            let mut chi = Vec::with_capacity(r);
            for c in chi_rat {
                if !c.is_integer() {
                    return Err(Error::internal("chi failed to be integral over a unimodular form"));
                }
                chi.push(c.to_integer());
            }
            inv.chi_sq = Some(form.pair(&chi, &chi));
        }
        2 => {
            let chi = chi_mod2(form, bundle)?;
            let sq = form.pair(&chi, &chi).mod_floor(&BigInt::from(4));
            inv.chi_sq_mod4 = Some(sq.try_into().map(|v: u32| v as u8).unwrap_or(0));
        }
        1 => {
            let q: Vec<u8> = bundle.values.iter().map(|(_, t)| bit(t)).collect();
            inv.phi = Some(arf(form, &q)?);
            let chi = chi_mod2(form, bundle)?;
            inv.phi_chi = Some(bit(&bundle.alpha_t(form, &chi)));
        }
        3 | 5 | 7 => {
            let q: Vec<u8> = bundle.values.iter().map(|(_, t)| bit(t)).collect();
            inv.phi = Some(arf(form, &q)?);
        }
        _ => {} // 6 mod 8: only sig
    }
    Ok(inv)
}

fn bit(v: &BigInt) -> u8 {
    u8::from(v.is_odd())
}

/// Integral lift of the mod-2 dual class chi: form . chi = s over GF(2).
fn chi_mod2(form: &IntersectionForm, bundle: &NormalBundleData) -> Result<Vec<BigInt>> {
    let r = form.rank();
    if r == 0 {
        return Ok(vec![]);
    }
    let a2: Vec<Vec<u8>> = form
        .matrix
        .iter()
        .map(|row| row.iter().map(bit).collect())
        .collect();
    let b2: Vec<u8> = bundle.values.iter().map(|(s, _)| bit(s)).collect();
    let x = solve_gf2(&a2, &b2)?;
    Ok(x.into_iter().map(BigInt::from).collect())
}

/// Parses the JSON n-space format:
/// { "n": int, "form": [[int,...],...], "alpha": [{"s": int-or-string, "t": int-or-string}, ...] }
/// Big integers may be decimal strings.
pub fn parse_nspace_json(text: &str) -> Result<(u32, IntersectionForm, NormalBundleData)> {
    let v: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("bad JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| Error::invalid("top level must be an object"))?;
    let n = obj
        .get("n")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::invalid("missing integer field \"n\""))? as u32;
    let form_val = obj.get("form").and_then(|x| x.as_array()).ok_or_else(|| Error::invalid("missing array field \"form\""))?;
    let mut matrix = Vec::with_capacity(form_val.len());
    for row in form_val {
        let row = row.as_array().ok_or_else(|| Error::invalid("form rows must be arrays"))?;
        let mut out_row = Vec::with_capacity(row.len());
        for cell in row {
            out_row.push(json_bigint(cell)?);
        }
        matrix.push(out_row);
    }
    let parity = if n % 2 == 0 { Parity::Symmetric } else { Parity::SkewSymmetric };
    let form = IntersectionForm::new(parity, matrix)?;
    let alpha_val = obj.get("alpha").and_then(|x| x.as_array()).ok_or_else(|| Error::invalid("missing array field \"alpha\""))?;
    let mut values = Vec::with_capacity(alpha_val.len());
    for entry in alpha_val {
        let e = entry.as_object().ok_or_else(|| Error::invalid("alpha entries must be objects"))?;
        let s = e.get("s").map(json_bigint).transpose()?.unwrap_or_else(BigInt::zero);
        let t = e.get("t").map(json_bigint).transpose()?.unwrap_or_else(BigInt::zero);
        values.push((s, t));
    }
    Ok((n, form, NormalBundleData { n, values }))
}

fn json_bigint(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::invalid(format!("non-integer number {n}"))),
        serde_json::Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|e| Error::invalid(format!("bad integer string {s:?}: {e}"))),
        other => Err(Error::invalid(format!("expected integer, got {other}"))),
    }
}

/// The E8 Gram matrix in the standard Cartan ordering.
pub fn e8_matrix() -> Matrix {
    let rows: [[i64; 8]; 8] = [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ];
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Hyperbolic form of the given parity and rank 2.
pub fn hyperbolic(parity: Parity) -> IntersectionForm {
    let m = match parity {
        Parity::Symmetric => vec![
            vec![BigInt::zero(), BigInt::one()],
            vec![BigInt::one(), BigInt::zero()],
        ],
        Parity::SkewSymmetric => vec![
            vec![BigInt::zero(), BigInt::one()],
            vec![-BigInt::one(), BigInt::zero()],
        ],
    };
    IntersectionForm::new(parity, m).unwrap()
}

//! Finite fields `F_q = F_p[w]/(f)` with `f` monic irreducible over the
//! prime field.
//!
//! These are the coefficient fields of every series in the workbench and
//! the residue fields of the concrete valued fields. Characteristics stay
//! small (desk scale), so elements are dense coefficient vectors mod `p`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::ExactError;

/// Descriptor of a finite field: characteristic and defining modulus.
///
/// The prime field `F_p` is described by the degree-1 modulus `w`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FqField {
    p: u64,
    /// Monic, irreducible over `F_p`, coefficients low-to-high.
    modulus: Vec<u64>,
}

/// Arithmetic operation selector for the checked entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FqOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FqField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Arc<Self>, ExactError> {
        Self::with_modulus(p, vec![0, 1])
    }

    /// `F_p[w]/(f)` for an explicit monic irreducible `f` (low-to-high).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Arc<Self>, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) {
            return Err(ExactError::BadModulus("modulus must be monic of degree >= 1".into()));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus.last() != Some(&1) {
            return Err(ExactError::BadModulus("modulus must be monic of degree >= 1".into()));
        }
        if modulus.len() > 2 && !is_irreducible(p, &modulus) {
            return Err(ExactError::BadModulus("modulus is reducible".into()));
        }
        Ok(Arc::new(FqField { p, modulus }))
    }

    /// `F_{p^deg}` with the lexicographically first monic irreducible modulus.
    pub fn extension(p: u64, deg: usize) -> Result<Arc<Self>, ExactError> {
        if deg == 1 {
            return Self::prime(p);
        }
        if !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        let mut f = vec![0u64; deg + 1];
        f[deg] = 1;
        loop {
            if is_irreducible(p, &f) {
                return Self::with_modulus(p, f);
            }
            // increment the low coefficients as a base-p counter
            let mut i = 0;
            loop {
                if i == deg {
                    return Err(ExactError::BadModulus(format!(
                        "no irreducible of degree {deg} over F_{p}"
                    )));
                }
                f[i] += 1;
                if f[i] < p {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field order `q = p^deg`. Desk-scale fields only; panics on overflow.
    pub fn order(&self) -> u64 {
        let mut q: u64 = 1;
        for _ in 0..self.degree() {
            q = q.checked_mul(self.p).expect("field order overflow");
        }
        q
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree() == 1
    }
}

/// An element of a finite field, carried with its field descriptor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqElem {
    field: Arc<FqField>,
    /// Residue coefficients, length == field degree, each `< p`.
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn zero(field: &Arc<FqField>) -> Self {
        FqElem { field: field.clone(), coeffs: vec![0; field.degree()] }
    }

    pub fn one(field: &Arc<FqField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<FqField>, n: i64) -> Self {
        let p = field.p as i64;
        let mut coeffs = vec![0; field.degree()];
        coeffs[0] = n.rem_euclid(p) as u64;
        FqElem { field: field.clone(), coeffs }
    }

    /// Element from a coefficient vector low-to-high (length <= degree).
    pub fn from_coeffs(field: &Arc<FqField>, cs: &[u64]) -> Result<Self, ExactError> {
        if cs.len() > field.degree() {
            return Err(ExactError::BadModulus(format!(
                "coefficient vector of length {} exceeds field degree {}",
                cs.len(),
                field.degree()
            )));
        }
        let mut coeffs = vec![0; field.degree()];
        for (i, c) in cs.iter().enumerate() {
            coeffs[i] = c % field.p;
        }
        Ok(FqElem { field: field.clone(), coeffs })
    }

    /// The residue class of `w`, the generator of `F_q` over `F_p`.
    pub fn generator(field: &Arc<FqField>) -> Self {
        if field.degree() == 1 {
            // w == 0 in F_p[w]/(w); fall back to 1 so callers get a unit
            return Self::one(field);
        }
        let mut coeffs = vec![0; field.degree()];
        coeffs[1] = 1;
        FqElem { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &FqElem) -> Result<(), ExactError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FqElem) -> Result<FqElem, ExactError> {
        self.same_field(other)?;
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FqElem { field: self.field.clone(), coeffs })
    }

    pub fn sub(&self, other: &FqElem) -> Result<FqElem, ExactError> {
        self.same_field(other)?;
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        Ok(FqElem { field: self.field.clone(), coeffs })
    }

    pub fn neg(&self) -> FqElem {
        let p = self.field.p;
        let coeffs = self.coeffs.iter().map(|a| (p - a) % p).collect();
        FqElem { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &FqElem) -> Result<FqElem, ExactError> {
        self.same_field(other)?;
        let coeffs = poly_mulmod(self.field.p, &self.coeffs, &other.coeffs, &self.field.modulus);
        Ok(FqElem { field: self.field.clone(), coeffs })
    }

    pub fn inv(&self) -> Result<FqElem, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroInverse);
        }
        let coeffs = poly_invmod(self.field.p, &self.coeffs, &self.field.modulus);
        Ok(FqElem { field: self.field.clone(), coeffs })
    }

    pub fn div(&self, other: &FqElem) -> Result<FqElem, ExactError> {
        self.mul(&other.inv()?)
    }

    /// `a^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> FqElem {
        let mut base = self.clone();
        let mut acc = FqElem::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            n >>= 1;
        }
        acc
    }

    /// Frobenius `a -> a^p`.
    pub fn frobenius(&self) -> FqElem {
        self.pow(self.field.p)
    }

    /// The unique p-th root (Frobenius is bijective on a finite field).
    pub fn pth_root(&self) -> FqElem {
        let d = self.field.degree() as u32;
        let mut out = self.clone();
        // a^(p^(d-1)) is the inverse of Frobenius since a^(p^d) = a
        for _ in 0..d.saturating_sub(1) {
            out = out.frobenius();
        }
        out
    }

    /// Inject into an extension field; supported when `self` lies in a
    /// prime field or the fields match.
    pub fn embed_into(&self, target: &Arc<FqField>) -> Result<FqElem, ExactError> {
        if self.field == *target {
            return Ok(self.clone());
        }
        if self.field.is_prime_field() && self.field.p == target.p {
            return FqElem::from_coeffs(target, &self.coeffs);
        }
        Err(ExactError::FieldMismatch)
    }

    /// Degree of the subfield generated by this element over `F_{p^sub_deg}`.
    ///
    /// `sub_deg` must divide the degree of the ambient field.
    pub fn degree_over(&self, sub_deg: usize) -> usize {
        let d = self.field.degree();
        debug_assert!(d % sub_deg == 0);
        let q_sub = {
            let mut q: u64 = 1;
            for _ in 0..sub_deg {
                q *= self.field.p;
            }
            q
        };
        for e in 1..=(d / sub_deg) {
            if (d / sub_deg) % e != 0 {
                continue;
            }
            // r generates F_{q_sub^e} iff r^(q_sub^e) = r
            let mut r = self.clone();
            for _ in 0..e {
                r = r.pow(q_sub);
            }
            if r == *self {
                return e;
            }
        }
        d / sub_deg
    }

    /// Checked arithmetic entry point mirroring the serialization surface.
    pub fn arith(a: &FqElem, b: &FqElem, op: FqOp) -> Result<FqElem, ExactError> {
        match op {
            FqOp::Add => a.add(b),
            FqOp::Sub => a.sub(b),
            FqOp::Mul => a.mul(b),
            FqOp::Div => a.div(b),
        }
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{:?}", self.coeffs)
        }
    }
}

// --- dense polynomial helpers over F_p, coefficients low-to-high ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul_raw(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + p - (lead * mc) % p) % p;
            }
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let prod = poly_mul_raw(p, a, b);
    let mut r = poly_rem(p, &prod, m);
    r.resize(m.len() - 1, 0);
    r
}

fn inv_mod_p(p: u64, a: u64) -> u64 {
    // Fermat; p is prime and a != 0
    let mut acc: u64 = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo monic irreducible `m`, via extended Euclid.
fn poly_invmod(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = a.to_vec();
    poly_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(r1.len()) + 1];
        let lead_inv = inv_mod_p(p, *r1.last().unwrap());
        while rem.len() >= r1.len() && !rem.is_empty() {
            let c = (*rem.last().unwrap() * lead_inv) % p;
            let shift = rem.len() - r1.len();
            quot[shift] = c;
            if c != 0 {
                for (i, &rc) in r1.iter().enumerate() {
                    let idx = i + shift;
                    rem[idx] = (rem[idx] + p - (c * rc) % p) % p;
                }
            }
            poly_trim(&mut rem);
            if rem.len() < r1.len() {
                break;
            }
        }
        poly_trim(&mut quot);
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - quot*s1)
        let qs = poly_mul_raw(p, &quot, &s1);
        let mut s2 = s0.clone();
        s2.resize(s2.len().max(qs.len()), 0);
        for (i, &c) in qs.iter().enumerate() {
            s2[i] = (s2[i] + p - c) % p;
        }
        poly_trim(&mut s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 is now gcd = nonzero constant; scale s0 by its inverse
    let c_inv = inv_mod_p(p, r0[0]);
    let mut out: Vec<u64> = s0.iter().map(|&c| c * c_inv % p).collect();
    out = poly_rem(p, &out, m);
    out.resize(m.len() - 1, 0);
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial-division irreducibility over `F_p` (desk-scale degrees).
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    // enumerate monic divisors of degree 1..=deg/2
    for d in 1..=deg / 2 {
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        loop {
            if poly_rem(p, f, &g).is_empty() {
                return false;
            }
            let mut i = 0;
            let mut done = false;
            loop {
                if i == d {
                    done = true;
                    break;
                }
                g[i] += 1;
                if g[i] < p {
                    break;
                }
                g[i] = 0;
                i += 1;
            }
            if done {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_addition_cancels() {
        let f2 = FqField::prime(2).unwrap();
        let one = FqElem::one(&f2);
        assert!(one.add(&one).unwrap().is_zero());
    }

    #[test]
    fn f3_multiplication() {
        let f3 = FqField::prime(3).unwrap();
        let two = FqElem::from_int(&f3, 2);
        assert!(two.mul(&two).unwrap().is_one());
    }

    #[test]
    fn f4_defining_relation() {
        // F_4 = F_2[w]/(w^2 + w + 1): w * w = w + 1
        let f4 = FqField::with_modulus(2, vec![1, 1, 1]).unwrap();
        let w = FqElem::generator(&f4);
        let w2 = w.mul(&w).unwrap();
        assert_eq!(w2.coeffs(), &[1, 1]);
    }

    #[test]
    fn mismatched_fields_rejected() {
        let f2 = FqField::prime(2).unwrap();
        let f3 = FqField::prime(3).unwrap();
        let a = FqElem::one(&f2);
        let b = FqElem::one(&f3);
        assert!(matches!(a.add(&b), Err(ExactError::FieldMismatch)));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f5 = FqField::prime(5).unwrap();
        assert!(matches!(FqElem::zero(&f5).inv(), Err(ExactError::ZeroInverse)));
    }

    #[test]
    fn fermat_and_frobenius() {
        for (p, deg) in [(2u64, 1usize), (2, 2), (3, 2), (5, 1)] {
            let f = FqField::extension(p, deg).unwrap();
            let q = f.order();
            // enumerate a few elements deterministically
            let mut elems = vec![FqElem::zero(&f), FqElem::one(&f), FqElem::generator(&f)];
            elems.push(FqElem::generator(&f).add(&FqElem::one(&f)).unwrap());
            for a in &elems {
                assert_eq!(&a.pow(q), a, "a^q = a in F_{{{q}}}");
                assert_eq!(a.pth_root().pow(p), *a, "pth_root inverts Frobenius");
                for b in &elems {
                    let lhs = a.add(b).unwrap().pow(p);
                    let rhs = a.pow(p).add(&b.pow(p)).unwrap();
                    assert_eq!(lhs, rhs, "Frobenius is additive");
                }
            }
        }
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert!(FqField::prime(6).is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        // w^2 + 1 = (w+1)^2 over F_2
        assert!(FqField::with_modulus(2, vec![1, 0, 1]).is_err());
    }
}

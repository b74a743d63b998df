//! Binary forms in two projective variables: Sylvester resultants, gcds and
//! rational root extraction.

use super::linalg;
use super::{rat_int, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Homogeneous form of fixed degree d in (x0, x1); `coeffs[i]` is the
/// coefficient of x0^(d-i) x1^i.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "degree must be non-negative");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero(degree: u32) -> Self {
        Self::new(vec![Rat::zero(); degree as usize + 1])
    }

    pub fn one() -> Self {
        Self::new(vec![rat_int(1)])
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x0: &Rat, x1: &Rat) -> Rat {
        let d = self.coeffs.len() - 1;
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for _ in 0..d - i {
                t *= x0;
            }
            for _ in 0..i {
                t *= x1;
            }
            acc += t;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Derivative with respect to the first variable x0.
    pub fn partial_x0(&self) -> Self {
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return Self::zero(0);
        }
        Self::new(
            (0..d)
                .map(|i| &self.coeffs[i] * rat_int((d - i) as i64))
                .collect(),
        )
    }

    /// Derivative with respect to the second variable x1.
    pub fn partial_x1(&self) -> Self {
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=d)
                .map(|i| &self.coeffs[i] * rat_int(i as i64))
                .collect(),
        )
    }

    /// Index of the first nonzero coefficient (lowest x1-degree present).
    fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Normalizes the first nonzero coefficient to 1.
    pub fn monic(&self) -> Self {
        match self.first_nonzero() {
            None => self.clone(),
            Some(i) => self.scale(&self.coeffs[i].recip()),
        }
    }

    /// The form as a univariate polynomial in t = x1/x0 (dehomogenized at
    /// x0 = 1), low coefficients first.
    fn univariate(&self) -> Vec<Rat> {
        let up = self.last_nonzero().unwrap_or(0);
        self.coeffs[..=up].to_vec()
    }

    fn homogenize(coeffs: &[Rat], degree: u32) -> Self {
        let mut out = vec![Rat::zero(); degree as usize + 1];
        out[..coeffs.len()].clone_from_slice(coeffs);
        Self::new(out)
    }

    /// Exact division; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.is_zero());
        let (q, r) = poly_divmod(&self.univariate(), &other.univariate());
        assert!(
            r.iter().all(|c| c.is_zero()),
            "non-exact binary form division"
        );
        // x0-power bookkeeping
        let da = self.degree() as i64 - self.last_nonzero().unwrap() as i64;
        let db = other.degree() as i64 - other.last_nonzero().unwrap() as i64;
        let qdeg = self.degree() - other.degree();
        assert!(da >= db);
        Self::homogenize(&q, qdeg)
    }

    /// Projective rational roots [x0, x1], each listed once (no multiplicity).
    pub fn rational_roots(&self) -> Vec<[Rat; 2]> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        let uni = self.univariate();
        if (self.degree() as usize) > self.last_nonzero().unwrap() {
            roots.push([Rat::zero(), rat_int(1)]); // x0 divides the form
        }
        for t in rational_roots_univariate(&uni) {
            roots.push([rat_int(1), t]);
        }
        roots
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.coeffs.len() - 1;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", super::fmt_rat(c))?;
            if d - i > 0 {
                write!(f, "*x0^{}", d - i)?;
            }
            if i > 0 {
                write!(f, "*x1^{}", i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sylvester resultant; rows ordered p-block then q-block. Zero iff the two
/// forms share a projective root over the algebraic closure.
pub fn resultant_binary(p: &BinaryForm, q: &BinaryForm) -> Result<Rat> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroForm);
    }
    let m = p.degree() as usize;
    let n = q.degree() as usize;
    if m == 0 || n == 0 {
        // resultant of a constant with anything is a power of the constant
        let one = |f: &BinaryForm, k: usize| {
            let mut acc = rat_int(1);
            for _ in 0..k {
                acc *= f.coeffs[0].clone();
            }
            acc
        };
        return Ok(if m == 0 { one(p, n) } else { one(q, m) });
    }
    let size = m + n;
    let mut s = linalg::zeros(size, size);
    for r in 0..n {
        for (i, c) in p.coeffs.iter().enumerate() {
            s[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in q.coeffs.iter().enumerate() {
            s[n + r][r + i] = c.clone();
        }
    }
    Ok(linalg::det(&s))
}

/// Monic greatest common divisor of two binary forms. Degree 0 iff the forms
/// have no common projective root.
pub fn gcd_binary(p: &BinaryForm, q: &BinaryForm) -> Result<BinaryForm> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothFormsZero);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    let up = p.univariate();
    let uq = q.univariate();
    let g = gcd_univariate(&up, &uq);
    let x0_pow = std::cmp::min(
        p.degree() as usize - p.last_nonzero().unwrap(),
        q.degree() as usize - q.last_nonzero().unwrap(),
    );
    let deg = (g.len() - 1 + x0_pow) as u32;
    Ok(BinaryForm::homogenize(&g, deg).monic())
}

fn trim(v: &mut Vec<Rat>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

/// Standard division with remainder, low coefficients first.
fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    if r.len() <= db || (b.len() == 1 && b[0].is_zero()) {
        if b.len() == 1 && b[0].is_zero() {
            panic!("division by zero polynomial");
        }
        if r.len() - 1 < db {
            return (vec![Rat::zero()], r);
        }
    }
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
    let lead = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        q[dr - db] = f.clone();
        for i in 0..=db {
            let t = &b[i] * &f;
            r[dr - db + i] -= t;
        }
        trim(&mut r);
        if r.iter().all(|c| c.is_zero()) {
            r = vec![Rat::zero()];
            break;
        }
    }
    (q, r)
}

fn gcd_univariate(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0].is_zero()) {
        let (_, r) = poly_divmod(&a, &b);
        a = b;
        b = r;
    }
    // monic in the univariate sense (leading coefficient 1)
    let lead = a.last().unwrap().clone();
    if !lead.is_zero() && !lead.is_one() {
        for c in &mut a {
            *c /= lead.clone();
        }
    }
    a
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Rational roots of a univariate rational polynomial (low coeffs first).
fn rational_roots_univariate(poly: &[Rat]) -> Vec<Rat> {
    let mut p = poly.to_vec();
    trim(&mut p);
    if p.len() == 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // factor out t^k
    let low = p.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rat::zero());
        p.drain(..low);
    }
    if p.len() == 1 {
        return roots;
    }
    // clear denominators to a primitive integer polynomial
    let mut denom_lcm = BigInt::one();
    for c in &p {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(denom_lcm.clone())).to_integer()).collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let eval = |r: &Rat| -> bool {
        let mut acc = Rat::zero();
        let mut pw = Rat::from_integer(BigInt::one());
        for c in &ints {
            acc += Rat::from_integer(c.clone()) * pw.clone();
            pw *= r;
        }
        acc.is_zero()
    };
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1i64, -1] {
                let r = Rat::new(num.clone() * BigInt::from(sign), den.clone());
                if eval(&r) && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn x0x1() -> BinaryForm {
        BinaryForm::from_ints(&[0, 1, 0])
    }

    #[test]
    fn resultant_examples() {
        // common factor x1
        let r = resultant_binary(&x0x1(), &BinaryForm::from_ints(&[0, 0, 1])).unwrap();
        assert!(r.is_zero());
        // x0^2 vs x1^2: 4x4 Sylvester determinant is 1
        let r = resultant_binary(
            &BinaryForm::from_ints(&[1, 0, 0]),
            &BinaryForm::from_ints(&[0, 0, 1]),
        )
        .unwrap();
        assert_eq!(r, rat_int(1));
        // x0^2 - x1^2 vs x0^2: no common root
        let r = resultant_binary(
            &BinaryForm::from_ints(&[1, 0, -1]),
            &BinaryForm::from_ints(&[1, 0, 0]),
        )
        .unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn resultant_zero_form_rejected() {
        assert!(matches!(
            resultant_binary(&BinaryForm::zero(2), &x0x1()),
            Err(Error::ZeroForm)
        ));
    }

    #[test]
    fn gcd_examples() {
        // (x0 x1, x1^2) -> x1
        let g = gcd_binary(&x0x1(), &BinaryForm::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(g, BinaryForm::from_ints(&[0, 1]));
        // coprime
        let g = gcd_binary(
            &BinaryForm::from_ints(&[1, 0, 0]),
            &BinaryForm::from_ints(&[0, 0, 1]),
        )
        .unwrap();
        assert_eq!(g.degree(), 0);
        // (x0^2 - x1^2, x0(x0 - x1)) -> x0 - x1
        let g = gcd_binary(
            &BinaryForm::from_ints(&[1, 0, -1]),
            &BinaryForm::from_ints(&[1, -1, 0]),
        )
        .unwrap();
        assert_eq!(g, BinaryForm::from_ints(&[1, -1]));
        assert!(matches!(
            gcd_binary(&BinaryForm::zero(1), &BinaryForm::zero(2)),
            Err(Error::BothFormsZero)
        ));
    }

    #[test]
    fn gcd_catches_x0_factor() {
        // both divisible by x0
        let g = gcd_binary(
            &BinaryForm::from_ints(&[1, 0, 0]),
            &BinaryForm::from_ints(&[1, 1, 0]),
        )
        .unwrap();
        assert_eq!(g, BinaryForm::from_ints(&[1, 0]));
    }

    #[test]
    fn rational_roots_of_forms() {
        // x0 x1 (x0 - 2 x1): roots [0,1], [1,0], [1,1/2]
        let f = x0x1().mul(&BinaryForm::from_ints(&[1, -2]));
        let roots = f.rational_roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&[rat_int(0), rat_int(1)]));
        assert!(roots.contains(&[rat_int(1), rat_int(0)]));
        assert!(roots.contains(&[rat_int(1), rat(1, 2)]));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = BinaryForm::from_ints(&[2, -3, 1]);
        let b = BinaryForm::from_ints(&[1, -1]);
        let q = a.div_exact(&b);
        assert_eq!(q.mul(&b), a);
    }
}

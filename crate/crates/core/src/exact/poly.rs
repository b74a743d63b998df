//! Multivariate polynomials with exact rational coefficients.

use super::linalg::QMatrix;
use super::Rat;
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial over an ordered list of named variables. Only nonzero
/// coefficients are stored; exponent vectors all have length `vars.len()`.
#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl QPoly {
    pub fn zero(vars: &[&str]) -> Self {
        QPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(vars: &[&str], terms: &[(&[u32], Rat)]) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (exp, c) in terms {
            if exp.len() != p.vars.len() {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector length {} != {} variables",
                    exp.len(),
                    p.vars.len()
                )));
            }
            p.add_term(exp.to_vec(), c.clone());
        }
        Ok(p)
    }

    /// Single variable as a polynomial.
    pub fn var(vars: &[&str], index: usize) -> Self {
        let mut exp = vec![0u32; vars.len()];
        exp[index] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exp, super::rat_int(1));
        p
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<Vec<u32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Some(d) if all terms have total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = QPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&super::rat_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut out = Self::constant(&vars, super::rat_int(1));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = QPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[var] -= 1;
            out.add_term(exp, c * super::rat_int(e[var] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes each variable by an arbitrary polynomial over a possibly
    /// different variable list.
    pub fn compose(&self, images: &[QPoly]) -> Result<QPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target: Vec<&str> = images
            .first()
            .map(|p| p.vars.iter().map(|s| s.as_str()).collect())
            .unwrap_or_default();
        let mut out = QPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = QPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Linear change of variables x -> Mx, i.e. x_i is replaced by the i-th
    /// coordinate of Mx. M must be invertible and match the variable count.
    pub fn substitute_linear(&self, m: &QMatrix) -> Result<QPoly> {
        let n = self.vars.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for {} variables",
                m.len(),
                m.first().map_or(0, |r| r.len()),
                n
            )));
        }
        if super::linalg::det(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let images: Vec<QPoly> = (0..n)
            .map(|i| {
                let mut row = QPoly::zero(&vars);
                for (j, c) in m[i].iter().enumerate() {
                    let mut exp = vec![0u32; n];
                    exp[j] = 1;
                    row.add_term(exp, c.clone());
                }
                row
            })
            .collect();
        self.compose(&images)
    }

    pub fn gradient(&self) -> Vec<QPoly> {
        (0..self.vars.len()).map(|i| self.partial(i)).collect()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest total degree first, then lexicographic
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (std::cmp::Reverse(e.iter().sum::<u32>()), (*e).clone()));
        for e in keys {
            let c = &self.terms[e];
            let neg = c < &Rat::zero();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            let is_const = e.iter().all(|&k| k == 0);
            if abs != super::rat_int(1) || is_const {
                write!(f, "{}", super::fmt_rat(&abs))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut firstv = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !firstv {
                    write!(f, "*")?;
                }
                firstv = false;
                write!(f, "{}", self.vars[i])?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

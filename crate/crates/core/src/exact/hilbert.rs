//! Hilbert functions of homogeneous ideals by degreewise linear algebra.

use super::poly::QPoly;
use super::{linalg, Rat};
use crate::error::{Error, Result};
use num_traits::Zero;

/// All exponent vectors of total degree `d` in `nvars` variables.
pub fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            go(nvars - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// The four incidence patterns of a degree-2, genus-(-1) subscheme spanned
/// by a pair of lines: disjoint lines, a doubled line, lines crossing at an
/// embedded point, and a doubled line with an embedded point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SkewPairType {
    I,
    II,
    III,
    IV,
}

impl SkewPairType {
    pub const ALL: [SkewPairType; 4] =
        [SkewPairType::I, SkewPairType::II, SkewPairType::III, SkewPairType::IV];

    pub fn label(self) -> &'static str {
        match self {
            SkewPairType::I => "I",
            SkewPairType::II => "II",
            SkewPairType::III => "III",
            SkewPairType::IV => "IV",
        }
    }
}

/// Quadric generators of the saturated ideal of a representative subscheme
/// of each type, in coordinates x0..x3.
pub fn skew_pair_ideal(t: SkewPairType) -> Vec<QPoly> {
    const V: [&str; 4] = ["x0", "x1", "x2", "x3"];
    let x = |i: usize| QPoly::var(&V, i);
    let m = |i: usize, j: usize| x(i).mul(&x(j));
    match t {
        SkewPairType::I => vec![m(0, 2), m(0, 3), m(1, 2), m(1, 3)],
        SkewPairType::II => vec![m(0, 0), m(0, 1), m(1, 1), m(0, 2).add(&m(1, 3))],
        SkewPairType::III => vec![m(0, 0), m(0, 1), m(0, 2), m(1, 2)],
        SkewPairType::IV => vec![m(0, 0), m(0, 1), m(1, 1), m(0, 2)],
    }
}

/// Dimension of the degree-`degree` graded piece of R/I where I is generated
/// by the given homogeneous polynomials. Generators of degree above `degree`
/// contribute nothing to the slice.
pub fn hilbert_function(generators: &[QPoly], degree: u32) -> Result<usize> {
    let nvars = generators
        .first()
        .map(|g| g.num_vars())
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    for g in generators {
        if g.num_vars() != nvars {
            return Err(Error::DimensionMismatch(
                "generators over different variable lists".into(),
            ));
        }
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::InhomogeneousGenerator);
        }
    }
    let basis = monomials(nvars, degree);
    let index: std::collections::HashMap<&Vec<u32>, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // span of m*g over all monomials m with deg(m*g) = degree
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for g in generators {
        let Some(dg) = g.homogeneous_degree() else {
            continue; // zero generator
        };
        if dg > degree {
            continue;
        }
        for m in monomials(nvars, degree - dg) {
            let mut row = vec![Rat::zero(); basis.len()];
            for (e, c) in g.terms() {
                let exp: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[&exp]] += c.clone();
            }
            rows.push(row);
        }
    }
    let rk = if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows)
    };
    Ok(basis.len() - rk)
}

//! ADE classification of surface singular points: Milnor numbers by jet
//! truncation, Hessian corank, restricted-cubic patterns, and cone
//! detection.

use super::{CubicForm, ProjPoint};
use crate::error::{Error, Result};
use crate::exact::binary::{gcd_binary, BinaryForm};
use crate::exact::hilbert::{hilbert_function, monomials};
use crate::exact::linalg::{self, QMatrix};
use crate::exact::{rat_int, QPoly, Rat};
use crate::weyl::AdeKind;
use num_traits::Zero;
use std::fmt;

pub const DEFAULT_JET_BOUND: u32 = 12;

/// Dimension of the local algebra modulo the Jacobian ideal of an isolated
/// hypersurface singularity at the origin, by exact linear algebra on jets.
/// Stabilization (the maximal-ideal power falling into the Jacobian ideal)
/// must occur within `jet_bound`.
pub fn milnor_number(f: &QPoly, jet_bound: u32) -> Result<usize> {
    let n = f.num_vars();
    if !f.coeff(&vec![0; n]).is_zero() {
        return Err(Error::InvalidInput("function does not vanish at origin".into()));
    }
    let partials: Vec<QPoly> = f.gradient().into_iter().filter(|p| !p.is_zero()).collect();
    if partials.is_empty() {
        return Err(Error::NoJetStabilization);
    }
    for k in 1..=jet_bound {
        // jets modulo degree > k
        let basis: Vec<Vec<u32>> = (0..=k).flat_map(|d| monomials(n, d)).collect();
        let index: std::collections::HashMap<&Vec<u32>, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for p in &partials {
            for d in 0..k {
                for m in monomials(n, d) {
                    let mut row = vec![Rat::zero(); basis.len()];
                    let mut nonzero = false;
                    for (e, c) in p.terms() {
                        let exp: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                        if exp.iter().sum::<u32>() <= k {
                            row[index[&exp]] += c.clone();
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
        }
        let r0 = linalg::rank(&rows);
        // stabilized when every degree-k monomial already lies in the span
        let mut stacked = rows.clone();
        for m in monomials(n, k) {
            let mut row = vec![Rat::zero(); basis.len()];
            row[index[&m]] = rat_int(1);
            stacked.push(row);
        }
        if linalg::rank(&stacked) == r0 {
            // now count the quotient modulo jets of degree >= k
            let small: Vec<Vec<u32>> = (0..k).flat_map(|d| monomials(n, d)).collect();
            let small_index: std::collections::HashMap<&Vec<u32>, usize> =
                small.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows2: Vec<Vec<Rat>> = Vec::new();
            for p in &partials {
                for d in 0..k {
                    for m in monomials(n, d) {
                        let mut row = vec![Rat::zero(); small.len()];
                        let mut nonzero = false;
                        for (e, c) in p.terms() {
                            let exp: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                            if exp.iter().sum::<u32>() < k {
                                row[small_index[&exp]] += c.clone();
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            rows2.push(row);
                        }
                    }
                }
            }
            return Ok(small.len() - linalg::rank(&rows2));
        }
    }
    Err(Error::NoJetStabilization)
}

/// Multiplicity pattern of the restricted cubic on the Hessian kernel.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicPattern {
    Distinct3,
    DoubleLine,
    TripleLine,
    NotApplicable,
}

impl fmt::Display for CubicPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CubicPattern::Distinct3 => "distinct3",
            CubicPattern::DoubleLine => "double_line",
            CubicPattern::TripleLine => "triple_line",
            CubicPattern::NotApplicable => "n/a",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub multiplicity: u32,
    pub hessian_corank: usize,
    pub milnor_number: usize,
    pub cubic_pattern: CubicPattern,
    pub ade_label: Option<(AdeKind, usize)>,
    /// Multiplicity 3: the surface may be a cone with this vertex.
    pub cone_vertex_candidate: bool,
}

impl SingularityReport {
    pub fn ade_string(&self) -> String {
        match self.ade_label {
            Some((k, r)) => format!("{}{}", k.letter(), r),
            None => "-".into(),
        }
    }
}

/// Invertible matrix whose first column is the point, extended greedily by
/// standard basis vectors.
fn point_frame(p: &ProjPoint) -> QMatrix {
    let n = p.dim();
    let mut cols: Vec<Vec<Rat>> = vec![p.coords().to_vec()];
    for i in 0..n {
        if cols.len() == n {
            break;
        }
        let mut e = vec![Rat::zero(); n];
        e[i] = rat_int(1);
        let mut trial = cols.clone();
        trial.push(e.clone());
        if linalg::rank(&trial) == trial.len() {
            cols.push(e);
        }
    }
    (0..n)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// The affine local equation at the point: move the point to [1,0,...,0] and
/// set the first coordinate to 1. Variables u1..u_{n-1}.
pub fn local_equation(f: &CubicForm, p: &ProjPoint) -> Result<QPoly> {
    if p.dim() != f.num_vars() {
        return Err(Error::DimensionMismatch("point and form dimensions differ".into()));
    }
    let g = f.poly().substitute_linear(&point_frame(p))?;
    let n = f.num_vars();
    let names: Vec<String> = (1..n).map(|i| format!("u{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut out = QPoly::zero(&name_refs);
    for (e, c) in g.terms() {
        out.add_term(e[1..].to_vec(), c.clone());
    }
    Ok(out)
}

/// Classifies an isolated rational singular point of a cubic surface.
pub fn classify_singular_point(
    f: &CubicForm,
    p: &ProjPoint,
    jet_bound: u32,
) -> Result<SingularityReport> {
    if f.num_vars() != 4 {
        return Err(Error::DimensionMismatch(
            "singularity classification applies to surfaces in P3".into(),
        ));
    }
    if !f.poly().eval(p.coords()).is_zero() {
        return Err(Error::PointNotOnSurface);
    }
    if !f
        .poly()
        .gradient()
        .iter()
        .all(|d| d.eval(p.coords()).is_zero())
    {
        return Err(Error::NotSingular);
    }
    let local = local_equation(f, p)?;
    let nloc = local.num_vars();
    let multiplicity = local
        .terms()
        .map(|(e, _)| e.iter().sum::<u32>())
        .min()
        .ok_or(Error::SingularAlongLine)?;
    // symmetric matrix of the quadratic part
    let mut hess = linalg::zeros(nloc, nloc);
    for (e, c) in local.terms() {
        if e.iter().sum::<u32>() != 2 {
            continue;
        }
        let idx: Vec<usize> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            hess[i][i] = c.clone() + c.clone();
        } else {
            hess[i][j] = c.clone();
            hess[j][i] = c.clone();
        }
    }
    let hessian_corank = nloc - linalg::rank(&hess);
    let milnor = milnor_number(&local, jet_bound)?;
    let cubic_pattern = if hessian_corank == 2 && multiplicity == 2 {
        restricted_cubic_pattern(&local, &hess)?
    } else {
        CubicPattern::NotApplicable
    };
    let ade_label = match (hessian_corank, cubic_pattern) {
        (0, _) => Some((AdeKind::A, 1)),
        (1, _) => Some((AdeKind::A, milnor)),
        (2, CubicPattern::Distinct3) => Some((AdeKind::D, 4)),
        (2, CubicPattern::DoubleLine) => Some((AdeKind::D, milnor)),
        (2, CubicPattern::TripleLine) if milnor == 6 => Some((AdeKind::E, 6)),
        _ => None,
    };
    Ok(SingularityReport {
        multiplicity,
        hessian_corank,
        milnor_number: milnor,
        cubic_pattern,
        ade_label,
        cone_vertex_candidate: multiplicity == 3,
    })
}

/// Factorization pattern of the cubic part restricted to the 2-dimensional
/// Hessian kernel.
fn restricted_cubic_pattern(local: &QPoly, hess: &QMatrix) -> Result<CubicPattern> {
    let kernel = linalg::null_space(hess);
    if kernel.len() != 2 {
        return Err(Error::Invariant("expected a 2-dimensional Hessian kernel".into()));
    }
    let mut cubic = QPoly::zero(
        &local
            .vars()
            .iter()
            .map(|s| s.as_str())
            .collect::<Vec<_>>(),
    );
    for (e, c) in local.terms() {
        if e.iter().sum::<u32>() == 3 {
            cubic.add_term(e.clone(), c.clone());
        }
    }
    let params = ["x0", "x1"];
    let images: Vec<QPoly> = (0..local.num_vars())
        .map(|i| {
            QPoly::var(&params, 0)
                .scale(&kernel[0][i])
                .add(&QPoly::var(&params, 1).scale(&kernel[1][i]))
        })
        .collect();
    let restricted = cubic.compose(&images)?;
    let mut coeffs = vec![Rat::zero(); 4];
    for (e, c) in restricted.terms() {
        coeffs[e[1] as usize] = c.clone();
    }
    let b = BinaryForm::new(coeffs);
    if b.is_zero() {
        return Ok(CubicPattern::NotApplicable);
    }
    let mut g = b.monic();
    for d in [b.partial_x0(), b.partial_x1()] {
        if !d.is_zero() {
            g = gcd_binary(&g, &d)?;
        }
    }
    Ok(match g.degree() {
        0 => CubicPattern::Distinct3,
        1 => CubicPattern::DoubleLine,
        _ => CubicPattern::TripleLine,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConeKind {
    NotCone,
    OverSmoothCubic,
    OverSingularCubic,
}

impl fmt::Display for ConeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConeKind::NotCone => "not_cone",
            ConeKind::OverSmoothCubic => "cone_over_smooth_cubic",
            ConeKind::OverSingularCubic => "cone_over_singular_cubic",
        };
        write!(f, "{s}")
    }
}

/// Whether the surface is a cone with the given vertex, and if so whether
/// the base plane cubic is smooth. Smoothness is decided without root
/// finding: three quadrics in three variables have no common projective zero
/// exactly when their degree-4 quotient slice vanishes.
pub fn detect_cone(f: &CubicForm, vertex: &ProjPoint) -> Result<ConeKind> {
    if f.num_vars() != 4 {
        return Err(Error::DimensionMismatch(
            "cone detection applies to surfaces in P3".into(),
        ));
    }
    if vertex.dim() != 4 {
        return Err(Error::DimensionMismatch("vertex dimension".into()));
    }
    // multiplicity 3 at the vertex: all second partials vanish there
    for i in 0..4 {
        for j in 0..4 {
            if !f
                .poly()
                .partial(i)
                .partial(j)
                .eval(vertex.coords())
                .is_zero()
            {
                return Ok(ConeKind::NotCone);
            }
        }
    }
    let local = local_equation(f, vertex)?;
    let grads = local.gradient();
    if hilbert_function(&grads, 4)? == 0 {
        Ok(ConeKind::OverSmoothCubic)
    } else {
        Ok(ConeKind::OverSingularCubic)
    }
}

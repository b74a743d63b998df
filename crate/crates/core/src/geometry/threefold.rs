//! Tangency data along a line on a cubic threefold: the hyperplane/quadric
//! pair attached to a tangent direction, a symbolic tangency certificate,
//! and the Eckardt-point test via elliptic-cone hyperplane sections.

use super::singular::{detect_cone, ConeKind};
use super::{CubicForm, ProjLine, ProjPoint};
use crate::error::{Error, Result};
use crate::exact::linalg::{self, QMatrix};
use crate::exact::{QPoly, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

pub const VARS5: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];

/// The cubic threefold x2 x0^2 + x3 x0 x1 + x4 x1^2, the normal form of a
/// threefold containing the line {x2 = x3 = x4 = 0} with generic tangency
/// behavior along it.
pub fn threefold_normal_form() -> CubicForm {
    let x = |i: usize| QPoly::var(&VARS5, i);
    CubicForm::new(
        x(2).mul(&x(0)).mul(&x(0))
            .add(&x(3).mul(&x(0)).mul(&x(1)))
            .add(&x(4).mul(&x(1)).mul(&x(1))),
    )
    .unwrap()
}

/// The line {x2 = x3 = x4 = 0} on the normal form.
pub fn normal_form_line() -> ProjLine {
    ProjLine::new(
        ProjPoint::from_ints(&[1, 0, 0, 0, 0]).unwrap(),
        ProjPoint::from_ints(&[0, 1, 0, 0, 0]).unwrap(),
    )
    .unwrap()
}

/// Quadric monomial index pairs (i <= j) over five variables, in the fixed
/// order used for coefficient vectors.
fn quadric_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(15);
    for i in 0..5 {
        for j in i..5 {
            out.push((i, j));
        }
    }
    out
}

fn quadric_from_vector(v: &[Rat]) -> QPoly {
    let mut q = QPoly::zero(&VARS5);
    for ((i, j), c) in quadric_pairs().into_iter().zip(v) {
        let mut exp = vec![0u32; 5];
        exp[i] += 1;
        exp[j] += 1;
        q.add_term(exp, c.clone());
    }
    q
}

fn quadric_to_vector(q: &QPoly) -> Result<Vec<Rat>> {
    if q.num_vars() != 5 || !matches!(q.homogeneous_degree(), Some(2)) {
        return Err(Error::InvalidInput("expected a quadric in five variables".into()));
    }
    let mut out = vec![Rat::zero(); 15];
    for (k, (i, j)) in quadric_pairs().into_iter().enumerate() {
        let mut exp = vec![0u32; 5];
        exp[i] += 1;
        exp[j] += 1;
        out[k] = q.coeff(&exp);
    }
    Ok(out)
}

/// The tangent hyperplane/quadric pair of the normal-form threefold along
/// its line, for the tangent direction (a, b) at the running point.
///
/// The hyperplane is a^2 x4 + b^2 x2 + ab x3. The quadric is found by sweep
/// elimination: the tangent lines in direction (a, b) sweep out a surface,
/// and the quadrics containing that surface, reduced modulo multiples of the
/// hyperplane, leave a single class whose canonical representative is
/// returned.
pub fn tangent_quadric(a: &Rat, b: &Rat) -> Result<(QPoly, QPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidInput("tangent direction (0, 0)".into()));
    }
    let x = |i: usize| QPoly::var(&VARS5, i);
    let h = x(4).scale(&(a * a))
        .add(&x(2).scale(&(b * b)))
        .add(&x(3).scale(&(a * b)));
    // swept tangent surface: (l, m, -m s a, s (l a + m b), -l s b)
    let params = ["l", "m", "s"];
    let pv = |i: usize| QPoly::var(&params, i);
    let sweep = [
        pv(0),
        pv(1),
        pv(1).mul(&pv(2)).scale(&-a.clone()),
        pv(2).mul(&pv(0).scale(a).add(&pv(1).scale(b))),
        pv(0).mul(&pv(2)).scale(&-b.clone()),
    ];
    // linear conditions on the 15 quadric coefficients
    let pairs = quadric_pairs();
    let mut rows: BTreeMap<Vec<u32>, Vec<Rat>> = BTreeMap::new();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let prod = sweep[i].mul(&sweep[j]);
        for (e, c) in prod.terms() {
            rows.entry(e.clone()).or_insert_with(|| vec![Rat::zero(); 15])[k] += c.clone();
        }
    }
    let cond: QMatrix = rows.into_values().collect();
    let through_sweep = linalg::null_space(&cond);
    // reduce modulo the multiples of the hyperplane
    let mut span: QMatrix = (0..5)
        .map(|k| quadric_to_vector(&h.mul(&x(k))))
        .collect::<Result<_>>()?;
    let span_rank = linalg::row_reduce(&mut span);
    span.truncate(span_rank);
    let mut reduced: QMatrix = Vec::new();
    for v in &through_sweep {
        let r = reduce_against(&span, v);
        if r.iter().any(|c| !c.is_zero()) {
            reduced.push(r);
        }
    }
    let rank = linalg::row_reduce(&mut reduced);
    if rank != 1 {
        return Err(Error::Invariant(format!(
            "expected one quadric class through the tangent sweep, found {rank}"
        )));
    }
    let q = quadric_from_vector(&reduced[0]);
    Ok((h, q))
}

/// Subtracts the projection of `v` onto the row space of an echelon-form
/// matrix with monic pivots.
fn reduce_against(rref: &QMatrix, v: &[Rat]) -> Vec<Rat> {
    let mut out = v.to_vec();
    for row in rref {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if !out[c].is_zero() {
            let f = out[c].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &f * r;
            }
        }
    }
    out
}

/// Checks symbolically that the surfaces F = 0, G = 0, H = 0 share the
/// tangent plane at every point of the line: all 3x3 minors of their stacked
/// gradients must vanish identically along it.
pub fn verify_tangent(f: &CubicForm, g: &QPoly, h: &QPoly, line: &ProjLine) -> Result<bool> {
    if f.num_vars() != 5 || g.num_vars() != 5 || h.num_vars() != 5 || line.dim() != 5 {
        return Err(Error::DimensionMismatch(
            "tangency verification applies to hypersurfaces in P4".into(),
        ));
    }
    if !super::line_on_surface(f, line)? {
        return Err(Error::LineNotOnSurface);
    }
    for form in [g, h] {
        if !super::restrict_to_line(form, line)?.is_zero() {
            return Err(Error::LineNotOnSurface);
        }
    }
    let grads = [f.poly().gradient(), g.gradient(), h.gradient()];
    for c0 in 0..5 {
        for c1 in c0 + 1..5 {
            for c2 in c1 + 1..5 {
                let m: Vec<[&QPoly; 3]> = grads
                    .iter()
                    .map(|gr| [&gr[c0], &gr[c1], &gr[c2]])
                    .collect();
                let minor = m[0][0].mul(&m[1][1].mul(m[2][2]).sub(&m[1][2].mul(m[2][1])))
                    .sub(&m[0][1].mul(&m[1][0].mul(m[2][2]).sub(&m[1][2].mul(m[2][0]))))
                    .add(&m[0][2].mul(&m[1][0].mul(m[2][1]).sub(&m[1][1].mul(m[2][0]))));
                if !super::restrict_to_line(&minor, line)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether a smooth point of the cubic threefold is an Eckardt point: the
/// tangent hyperplane section must be a cone over a smooth plane cubic.
pub fn eckardt_check(y: &CubicForm, p: &ProjPoint) -> Result<bool> {
    if y.num_vars() != 5 || p.dim() != 5 {
        return Err(Error::DimensionMismatch(
            "Eckardt test applies to threefolds in P4".into(),
        ));
    }
    if !y.poly().eval(p.coords()).is_zero() {
        return Err(Error::PointNotOnSurface);
    }
    let grad: Vec<Rat> = y
        .poly()
        .gradient()
        .iter()
        .map(|d| d.eval(p.coords()))
        .collect();
    if grad.iter().all(Rat::is_zero) {
        return Err(Error::InvalidInput(
            "point is singular; the Eckardt test needs a smooth point".into(),
        ));
    }
    // basis of the tangent hyperplane starting at p
    let mut cols: Vec<Vec<Rat>> = vec![p.coords().to_vec()];
    for v in linalg::null_space(&vec![grad]) {
        if cols.len() == 4 {
            break;
        }
        let mut trial = cols.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) == trial.len() {
            cols.push(v);
        }
    }
    if cols.len() != 4 {
        return Err(Error::Invariant("tangent hyperplane basis incomplete".into()));
    }
    let target = ["w0", "w1", "w2", "w3"];
    let images: Vec<QPoly> = (0..5)
        .map(|i| {
            let mut img = QPoly::zero(&target);
            for (j, col) in cols.iter().enumerate() {
                let mut exp = vec![0u32; 4];
                exp[j] = 1;
                img.add_term(exp, col[i].clone());
            }
            img
        })
        .collect();
    let section = y.poly().compose(&images)?;
    if section.is_zero() {
        return Err(Error::InvalidInput(
            "tangent hyperplane section is not a cubic surface".into(),
        ));
    }
    let vertex = ProjPoint::from_ints(&[1, 0, 0, 0])?;
    Ok(detect_cone(&CubicForm::new(section)?, &vertex)? == ConeKind::OverSmoothCubic)
}

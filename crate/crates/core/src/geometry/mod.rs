//! Exact symbolic geometry on explicit cubic forms: lines on a surface, the
//! dual map along a line, first/second type classification, and singular
//! points found via the coefficient quadrics.

pub mod singular;
pub mod threefold;

use crate::error::{Error, Result};
use crate::exact::binary::{gcd_binary, resultant_binary, BinaryForm};
use crate::exact::linalg::{self, QMatrix};
use crate::exact::{rat_int, QPoly, Rat};
use num_traits::Zero;
use std::fmt;

/// Nonzero homogeneous cubic in 4 variables (surface in P3) or 5 variables
/// (threefold in P4).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicForm {
    poly: QPoly,
}

impl CubicForm {
    pub fn new(poly: QPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidInput("cubic form is zero".into()));
        }
        if poly.homogeneous_degree() != Some(3) {
            return Err(Error::InvalidInput(
                "form is not homogeneous of degree 3".into(),
            ));
        }
        if !(4..=5).contains(&poly.num_vars()) {
            return Err(Error::DimensionMismatch(format!(
                "cubic form in {} variables; expected 4 or 5",
                poly.num_vars()
            )));
        }
        Ok(CubicForm { poly })
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }
}

/// Point of projective space, canonicalized so the first nonzero coordinate
/// is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<Rat>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidInput("all point coordinates are zero".into()));
        };
        let inv = first.clone().recip();
        Ok(ProjPoint {
            coords: coords.iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::exact::fmt_rat).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Projective line spanned by two independent points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjLine {
    pub p: ProjPoint,
    pub q: ProjPoint,
}

impl ProjLine {
    pub fn new(p: ProjPoint, q: ProjPoint) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(Error::DimensionMismatch(
                "spanning points of different dimension".into(),
            ));
        }
        let m: QMatrix = vec![p.coords.clone(), q.coords.clone()];
        if linalg::rank(&m) != 2 {
            return Err(Error::InvalidInput(
                "spanning points are not independent".into(),
            ));
        }
        Ok(ProjLine { p, q })
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    /// The point with line coordinates (lambda, mu).
    pub fn point_at(&self, lambda: &Rat, mu: &Rat) -> Result<ProjPoint> {
        ProjPoint::new(
            self.p
                .coords
                .iter()
                .zip(&self.q.coords)
                .map(|(a, b)| a * lambda + b * mu)
                .collect(),
        )
    }

    /// Line coordinates (lambda, mu) of a point on the line.
    pub fn coords_of(&self, x: &ProjPoint) -> Result<(Rat, Rat)> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch("point dimension".into()));
        }
        // solve [p q] (lambda, mu)^T = x
        let mut aug: QMatrix = (0..self.dim())
            .map(|i| {
                vec![
                    self.p.coords[i].clone(),
                    self.q.coords[i].clone(),
                    x.coords[i].clone(),
                ]
            })
            .collect();
        let rank = linalg::row_reduce(&mut aug);
        if rank != 2 {
            return Err(Error::InvalidInput("point is not on the line".into()));
        }
        let mut lambda = Rat::zero();
        let mut mu = Rat::zero();
        for row in &aug {
            if !row[0].is_zero() {
                lambda = row[2].clone();
            } else if !row[1].is_zero() {
                mu = row[2].clone();
            } else if !row[2].is_zero() {
                return Err(Error::InvalidInput("point is not on the line".into()));
            }
        }
        let check = self.point_at(&lambda, &mu)?;
        if &check != x {
            return Err(Error::InvalidInput("point is not on the line".into()));
        }
        Ok((lambda, mu))
    }
}

/// Restricts a form to the line: substitute lambda p + mu q.
pub fn restrict_to_line(f: &QPoly, line: &ProjLine) -> Result<QPoly> {
    let params = ["s", "t"];
    let images: Vec<QPoly> = line
        .p
        .coords
        .iter()
        .zip(&line.q.coords)
        .map(|(a, b)| {
            QPoly::var(&params, 0)
                .scale(a)
                .add(&QPoly::var(&params, 1).scale(b))
        })
        .collect();
    f.compose(&images)
}

pub fn line_on_surface(f: &CubicForm, line: &ProjLine) -> Result<bool> {
    if line.dim() != f.num_vars() {
        return Err(Error::DimensionMismatch(
            "line and form dimensions differ".into(),
        ));
    }
    Ok(restrict_to_line(f.poly(), line)?.is_zero())
}

/// Deterministic invertible matrix whose first two columns span the line:
/// the spanning points extended greedily by standard basis vectors.
pub fn line_frame(line: &ProjLine) -> QMatrix {
    let n = line.dim();
    let mut cols: Vec<Vec<Rat>> = vec![line.p.coords.clone(), line.q.coords.clone()];
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
    // transpose: columns become the images of the new basis vectors
    (0..n)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Coefficient quadrics of the cubic along the line: after moving the line
/// to {y2 = ... = 0}, the form reads y2 Q0 + y3 Q1 (+ y4 Q2) + higher order
/// in the trailing variables.
pub fn dual_map_data(f: &CubicForm, line: &ProjLine) -> Result<Vec<BinaryForm>> {
    if !line_on_surface(f, line)? {
        return Err(Error::LineNotOnSurface);
    }
    let n = f.num_vars();
    let g = f.poly().substitute_linear(&line_frame(line))?;
    let mut out = Vec::new();
    for j in 2..n {
        let mut coeffs = vec![Rat::zero(); 3];
        for (exp, c) in g.terms() {
            let trailing: u32 = exp[2..].iter().sum();
            if trailing == 1 && exp[j] == 1 {
                coeffs[exp[1] as usize] = c.clone();
            }
        }
        out.push(BinaryForm::new(coeffs));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineKind {
    First,
    Second,
    SmoothAlong,
}

impl fmt::Display for LineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LineKind::First => "first",
            LineKind::Second => "second",
            LineKind::SmoothAlong => "smooth_along",
        };
        write!(f, "{s}")
    }
}

/// First/second type classification of a line on a cubic surface: second if
/// the coefficient quadrics are linearly dependent, first if they are
/// independent with a common zero, smooth along otherwise.
pub fn classify_line(f: &CubicForm, line: &ProjLine) -> Result<LineKind> {
    if f.num_vars() != 4 {
        return Err(Error::DimensionMismatch(
            "line classification applies to surfaces in P3".into(),
        ));
    }
    let qs = dual_map_data(f, line)?;
    let (q0, q1) = (&qs[0], &qs[1]);
    if q0.is_zero() && q1.is_zero() {
        return Err(Error::SingularAlongLine);
    }
    let m: QMatrix = vec![q0.coeffs().to_vec(), q1.coeffs().to_vec()];
    if linalg::rank(&m) <= 1 {
        return Ok(LineKind::Second);
    }
    if resultant_binary(q0, q1)?.is_zero() {
        Ok(LineKind::First)
    } else {
        Ok(LineKind::SmoothAlong)
    }
}

/// Singular points of the surface lying on the line: the common-zero form of
/// the coefficient quadrics and its rational roots in original coordinates.
#[derive(Clone, Debug)]
pub struct SingularPointsOnLine {
    /// gcd of the coefficient quadrics; its degree counts singular points on
    /// the line with multiplicity over the algebraic closure.
    pub common_form: BinaryForm,
    pub rational_points: Vec<ProjPoint>,
}

pub fn singular_points_on_line(f: &CubicForm, line: &ProjLine) -> Result<SingularPointsOnLine> {
    if f.num_vars() != 4 {
        return Err(Error::DimensionMismatch(
            "singular-point search applies to surfaces in P3".into(),
        ));
    }
    let qs = dual_map_data(f, line)?;
    if qs.iter().all(BinaryForm::is_zero) {
        return Err(Error::SingularAlongLine);
    }
    let common_form = gcd_binary(&qs[0], &qs[1])?;
    let rational_points = common_form
        .rational_roots()
        .iter()
        .map(|[l, m]| line.point_at(l, m))
        .collect::<Result<_>>()?;
    Ok(SingularPointsOnLine {
        common_form,
        rational_points,
    })
}

/// The other point of the line with the same dual-map image; p itself at
/// ramification points and on lines where the map is injective.
pub fn conjugate_point(f: &CubicForm, line: &ProjLine, p: &ProjPoint) -> Result<ProjPoint> {
    let (lambda, mu) = line.coords_of(p)?;
    let qs = dual_map_data(f, line)?;
    let values: Vec<Rat> = qs.iter().map(|q| q.eval(&lambda, &mu)).collect();
    // cross forms cutting out the dual-map fiber through p
    let mut cross: Vec<BinaryForm> = Vec::new();
    for i in 0..qs.len() {
        for j in i + 1..qs.len() {
            let lhs = qs[i].scale(&values[j]);
            let rhs = qs[j].scale(&values[i]);
            let g = BinaryForm::new(
                lhs.coeffs()
                    .iter()
                    .zip(rhs.coeffs())
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            if !g.is_zero() {
                cross.push(g);
            }
        }
    }
    if cross.is_empty() {
        return Err(Error::DegenerateDualMap);
    }
    let mut fiber = cross[0].monic();
    for g in &cross[1..] {
        fiber = gcd_binary(&fiber, g)?;
    }
    // strip the base locus (common zeros of all the quadrics)
    let nonzero: Vec<&BinaryForm> = qs.iter().filter(|q| !q.is_zero()).collect();
    let mut base = nonzero[0].monic();
    for q in &nonzero[1..] {
        base = gcd_binary(&base, q)?;
    }
    if base.degree() > 0 && base.eval(&lambda, &mu).is_zero() {
        return Err(Error::DegenerateDualMap);
    }
    let fiber = if base.degree() > 0 {
        fiber.div_exact(&base)
    } else {
        fiber
    };
    match fiber.degree() {
        0 => Err(Error::Invariant("dual-map fiber misses the point".into())),
        1 => Ok(p.clone()),
        2 => {
            // divide out the factor vanishing at p; the leftover linear form
            // cuts the conjugate point
            let at_p = BinaryForm::new(vec![mu.clone(), -lambda.clone()]);
            let rest = fiber.div_exact(&at_p);
            let c = rest.coeffs();
            line.point_at(&c[1].clone(), &(-c[0].clone()))
        }
        _ => Err(Error::Invariant("dual-map fiber of unexpected degree".into())),
    }
}

/// Whether the union of two incident lines supports a type III scheme: true
/// exactly when the surface is singular at their intersection point.
pub fn type_iii_exists(f: &CubicForm, l1: &ProjLine, l2: &ProjLine) -> Result<bool> {
    for l in [l1, l2] {
        if !line_on_surface(f, l)? {
            return Err(Error::LineNotOnSurface);
        }
    }
    // intersection: null space of the stacked spanning vectors
    let n = l1.dim();
    let m: QMatrix = (0..n)
        .map(|i| {
            vec![
                l1.p.coords()[i].clone(),
                l1.q.coords()[i].clone(),
                -l2.p.coords()[i].clone(),
                -l2.q.coords()[i].clone(),
            ]
        })
        .collect();
    let ns = linalg::null_space(&m);
    if ns.len() != 1 {
        return Err(Error::LinesNotIncident);
    }
    let point = l1.point_at(&ns[0][0], &ns[0][1])?;
    Ok(f.poly()
        .gradient()
        .iter()
        .all(|d| d.eval(point.coords()).is_zero()))
}


#[cfg(test)]
mod tests {
    use super::testutil::*;
    use super::*;
    use crate::exact::rat;

    #[test]
    fn point_canonicalization() {
        let p = ProjPoint::new(vec![rat_int(0), rat_int(2), rat_int(4)]).unwrap();
        assert_eq!(p.coords(), &[rat_int(0), rat_int(1), rat_int(2)]);
        assert!(ProjPoint::from_ints(&[0, 0]).is_err());
        assert!(ProjLine::new(
            ProjPoint::from_ints(&[1, 2, 0, 0]).unwrap(),
            ProjPoint::from_ints(&[2, 4, 0, 0]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn lines_on_surfaces() {
        let f = three_a2();
        assert!(line_on_surface(&f, &coord_line()).unwrap());
        assert!(line_on_surface(&f, &line4([1, 0, 0, 0], [0, 0, 1, 0])).unwrap());
        // a line through two Fermat points that is not on the surface
        let l = line4([1, -1, 0, 0], [0, 1, -1, 0]);
        assert!(!line_on_surface(&fermat(), &l).unwrap());
    }

    #[test]
    fn dual_map_coefficients() {
        let qs = dual_map_data(&three_a2(), &coord_line()).unwrap();
        assert_eq!(qs[0], BinaryForm::from_ints(&[0, 1, 0])); // x0 x1
        assert!(qs[1].is_zero());
        let qs = dual_map_data(&a4_a1(), &coord_line()).unwrap();
        assert_eq!(qs[0], BinaryForm::from_ints(&[0, 1, 0]));
        assert_eq!(qs[1], BinaryForm::from_ints(&[0, 0, 1])); // x1^2
        assert!(matches!(
            dual_map_data(&fermat(), &coord_line()),
            Err(Error::LineNotOnSurface)
        ));
    }

    #[test]
    fn line_classification() {
        let f = a4_a1();
        assert_eq!(classify_line(&f, &coord_line()).unwrap(), LineKind::First);
        let second = line4([1, 0, 0, 0], [0, 0, 1, 0]); // {x1 = x3 = 0}
        assert_eq!(classify_line(&f, &second).unwrap(), LineKind::Second);
        for l in [
            coord_line(),
            line4([1, 0, 0, 0], [0, 0, 1, 0]),
            line4([0, 1, 0, 0], [0, 0, 1, 0]),
        ] {
            assert_eq!(classify_line(&three_a2(), &l).unwrap(), LineKind::Second);
        }
        // a known line on the smooth Fermat surface: x0 = -x1, x2 = -x3
        let l = line4([1, -1, 0, 0], [0, 0, 1, -1]);
        assert!(line_on_surface(&fermat(), &l).unwrap());
        assert_eq!(classify_line(&fermat(), &l).unwrap(), LineKind::SmoothAlong);
    }

    #[test]
    fn classification_invariant_under_respanning() {
        // the same line presented by different spanning pairs
        let f = a4_a1();
        let presentations = [
            coord_line(),
            line4([1, 1, 0, 0], [1, -1, 0, 0]),
            line4([2, 3, 0, 0], [1, 0, 0, 0]),
            line4([0, 1, 0, 0], [5, 7, 0, 0]),
        ];
        for l in &presentations {
            assert_eq!(classify_line(&f, l).unwrap(), LineKind::First);
        }
    }

    #[test]
    fn singular_points_found() {
        let rep = singular_points_on_line(&three_a2(), &coord_line()).unwrap();
        assert_eq!(rep.common_form.degree(), 2);
        assert_eq!(rep.rational_points.len(), 2);
        assert!(rep.rational_points.contains(&ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap()));
        assert!(rep.rational_points.contains(&ProjPoint::from_ints(&[0, 1, 0, 0]).unwrap()));
        let rep = singular_points_on_line(&a4_a1(), &coord_line()).unwrap();
        assert_eq!(rep.common_form, BinaryForm::from_ints(&[0, 1]));
        assert_eq!(rep.rational_points, vec![ProjPoint::from_ints(&[1, 0, 0, 0]).unwrap()]);
        // smooth line: no singular points
        let l = line4([1, -1, 0, 0], [0, 0, 1, -1]);
        let rep = singular_points_on_line(&fermat(), &l).unwrap();
        assert_eq!(rep.common_form.degree(), 0);
        assert!(rep.rational_points.is_empty());
    }

    #[test]
    fn smoothness_matches_gcd_degree() {
        let cases = [
            (a4_a1(), coord_line()),
            (three_a2(), coord_line()),
            (fermat(), line4([1, -1, 0, 0], [0, 0, 1, -1])),
        ];
        for (f, l) in cases {
            let kind = classify_line(&f, &l).unwrap();
            let deg = singular_points_on_line(&f, &l).unwrap().common_form.degree();
            assert_eq!(kind == LineKind::SmoothAlong, deg == 0);
        }
    }

    #[test]
    fn type_iii_at_singular_intersections() {
        let f = three_a2();
        let l1 = line4([0, 1, 0, 0], [0, 0, 1, 0]); // {x0 = x3 = 0}
        let l2 = line4([1, 0, 0, 0], [0, 0, 1, 0]); // {x1 = x3 = 0}
        assert!(type_iii_exists(&f, &l1, &l2).unwrap());
        // incident lines on the smooth Fermat surface meet at a smooth point
        let m1 = line4([1, -1, 0, 0], [0, 0, 1, -1]);
        let m2 = line4([1, 0, 0, -1], [0, 1, -1, 0]);
        assert!(line_on_surface(&fermat(), &m2).unwrap());
        assert!(!type_iii_exists(&fermat(), &m1, &m2).unwrap());
        // skew lines are rejected: a cubic containing {x2=x3=0} and {x0=x1=0}
        let g = CubicForm::new(
            x(0).pow(2).mul(&x(2))
                .add(&x(1).pow(2).mul(&x(3)))
                .add(&x(0).mul(&x(3).pow(2)))
                .add(&x(1).mul(&x(2).pow(2))),
        )
        .unwrap();
        let s1 = coord_line();
        let s2 = line4([0, 0, 1, 0], [0, 0, 0, 1]);
        assert!(matches!(
            type_iii_exists(&g, &s1, &s2),
            Err(Error::LinesNotIncident)
        ));
    }

    #[test]
    fn conjugate_points_on_surface_first_type() {
        let f = a4_a1();
        let l = coord_line();
        // first type: the dual map is injective away from the base point
        let p = ProjPoint::from_ints(&[1, 1, 0, 0]).unwrap();
        assert_eq!(conjugate_point(&f, &l, &p).unwrap(), p);
        let p = ProjPoint::from_ints(&[2, 1, 0, 0]).unwrap();
        assert_eq!(conjugate_point(&f, &l, &p).unwrap(), p);
    }

    #[test]
    fn conjugate_points_on_threefold_normal_form() {
        let v = ["x0", "x1", "x2", "x3", "x4"];
        let y = |i: usize| QPoly::var(&v, i);
        // x2 x0^2 + x4 x1^2
        let f = CubicForm::new(
            y(2).mul(&y(0)).mul(&y(0)).add(&y(4).mul(&y(1)).mul(&y(1))),
        )
        .unwrap();
        let l = ProjLine::new(
            ProjPoint::from_ints(&[1, 0, 0, 0, 0]).unwrap(),
            ProjPoint::from_ints(&[0, 1, 0, 0, 0]).unwrap(),
        )
        .unwrap();
        let p = ProjPoint::from_ints(&[1, 1, 0, 0, 0]).unwrap();
        let q = conjugate_point(&f, &l, &p).unwrap();
        assert_eq!(q, ProjPoint::from_ints(&[1, -1, 0, 0, 0]).unwrap());
        // involution
        assert_eq!(conjugate_point(&f, &l, &q).unwrap(), p);
        // ramification points are fixed
        let r = ProjPoint::from_ints(&[1, 0, 0, 0, 0]).unwrap();
        assert_eq!(conjugate_point(&f, &l, &r).unwrap(), r);
        let r = ProjPoint::from_ints(&[0, 1, 0, 0, 0]).unwrap();
        assert_eq!(conjugate_point(&f, &l, &r).unwrap(), r);
    }

    #[test]
    fn conjugate_degenerate_on_surface_second_type() {
        // on a second-type surface line the restricted dual map is constant
        let f = three_a2();
        let p = ProjPoint::from_ints(&[1, 1, 0, 0]).unwrap();
        assert!(matches!(
            conjugate_point(&f, &coord_line(), &p),
            Err(Error::DegenerateDualMap)
        ));
    }

    #[test]
    fn restriction_example() {
        let l = coord_line();
        let r = restrict_to_line(fermat().poly(), &l).unwrap();
        // s^3 + t^3
        assert_eq!(r.coeff(&[3, 0]), rat_int(1));
        assert_eq!(r.coeff(&[0, 3]), rat_int(1));
        assert_eq!(r.terms().count(), 2);
        let (lam, mu) = l.coords_of(&ProjPoint::from_ints(&[3, 5, 0, 0]).unwrap()).unwrap();
        assert_eq!(rat(5, 3), mu / lam);
    }
}

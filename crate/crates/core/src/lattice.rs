//! The rank-7 lattice I(1,6): intersection pairing, the 72 roots, the 27
//! line classes, and their incidence combinatorics.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::OnceLock;

/// Vector in the e0..e6 basis; the pairing is diag(1, -1, -1, -1, -1, -1, -1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub [i64; 7]);

/// Class with self-pairing -2, orthogonal to the hyperplane class.
pub type Root = LatticeVector;
/// Class with self-pairing -1 and pairing 1 with the hyperplane class.
pub type LineClass = LatticeVector;

impl LatticeVector {
    pub fn basis(i: usize) -> Self {
        let mut c = [0i64; 7];
        c[i] = 1;
        LatticeVector(c)
    }

    pub fn neg(&self) -> Self {
        let mut c = self.0;
        for v in &mut c {
            *v = -*v;
        }
        LatticeVector(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(&other.0) {
            *a += b;
        }
        LatticeVector(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut c = self.0;
        for v in &mut c {
            *v *= k;
        }
        LatticeVector(c)
    }

    pub fn is_root(&self) -> bool {
        pairing(self, self) == -2 && pairing(self, &h()) == 0
    }

    pub fn is_line_class(&self) -> bool {
        pairing(self, self) == -1 && pairing(self, &h()) == 1
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Hyperplane class 3e0 - e1 - ... - e6.
pub fn h() -> LatticeVector {
    LatticeVector([3, -1, -1, -1, -1, -1, -1])
}

pub fn pairing(u: &LatticeVector, v: &LatticeVector) -> i64 {
    let mut s = u.0[0] * v.0[0];
    for i in 1..7 {
        s -= u.0[i] * v.0[i];
    }
    s
}

/// All 72 roots, in lexicographic coordinate order.
pub fn enumerate_roots() -> &'static [Root] {
    static ROOTS: OnceLock<Vec<Root>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let mut out = Vec::new();
        // every root has e0-coordinate in {-2..2} and others in {-1..1}
        search(&mut out, |v| v.is_root());
        out.sort();
        assert_eq!(out.len(), 72);
        out
    })
}

/// All 27 line classes, in lexicographic coordinate order.
pub fn enumerate_lines() -> &'static [LineClass] {
    static LINES: OnceLock<Vec<LineClass>> = OnceLock::new();
    LINES.get_or_init(|| {
        let mut out = Vec::new();
        search(&mut out, |v| v.is_line_class());
        out.sort();
        assert_eq!(out.len(), 27);
        out
    })
}

/// Brute-force scan over the coordinate box that contains every class of
/// self-pairing >= -2 and h-pairing in [0, 1] (all coordinates lie in [-3, 3]).
fn search(out: &mut Vec<LatticeVector>, keep: impl Fn(&LatticeVector) -> bool) {
    let mut c = [0i64; 7];
    fn go(
        i: usize,
        c: &mut [i64; 7],
        out: &mut Vec<LatticeVector>,
        keep: &impl Fn(&LatticeVector) -> bool,
    ) {
        if i == 7 {
            let v = LatticeVector(*c);
            if keep(&v) {
                out.push(v);
            }
            return;
        }
        for x in -3..=3 {
            c[i] = x;
            go(i + 1, c, out, keep);
        }
        c[i] = 0;
    }
    go(0, &mut c, out, &keep);
}

/// Picard-Lefschetz reflection s_a(v) = v + <a,v> a.
pub fn reflect(alpha: &Root, v: &LatticeVector) -> Result<LatticeVector> {
    if !alpha.is_root() {
        return Err(Error::NotARoot);
    }
    Ok(v.add(&alpha.scale(pairing(alpha, v))))
}

/// The six ordered pairs (b1, b2) of skew line classes with b1 - b2 = alpha.
pub fn six_ways(alpha: &Root) -> Result<Vec<(LineClass, LineClass)>> {
    if !alpha.is_root() {
        return Err(Error::NotARoot);
    }
    let lines = enumerate_lines();
    let mut out = Vec::new();
    for b2 in lines {
        let b1 = b2.add(alpha);
        if b1.is_line_class() && pairing(&b1, b2) == 0 {
            out.push((b1, *b2));
        }
    }
    Ok(out)
}

/// The sextuple of mutually skew line classes attached to a root: first
/// components of its six skew-pair decompositions.
pub fn sextuple(alpha: &Root) -> Result<Vec<LineClass>> {
    let mut s: Vec<LineClass> = six_ways(alpha)?.into_iter().map(|(b1, _)| b1).collect();
    s.sort();
    Ok(s)
}

/// All 72 sextuples, keyed by root, in canonical root order.
pub fn sextuples() -> Vec<(Root, Vec<LineClass>)> {
    enumerate_roots()
        .iter()
        .map(|a| (*a, sextuple(a).expect("canonical root")))
        .collect()
}

/// The 36 double-sixes: unordered pairs of disjoint sextuples indexed by
/// opposite root pairs. Each entry is (root with lex-positive sign, its
/// sextuple, the opposite sextuple).
pub fn double_sixes() -> Vec<(Root, Vec<LineClass>, Vec<LineClass>)> {
    let mut out = Vec::new();
    for a in enumerate_roots() {
        if *a < a.neg() {
            continue; // keep one representative per +-pair
        }
        out.push((
            *a,
            sextuple(a).expect("canonical root"),
            sextuple(&a.neg()).expect("canonical root"),
        ));
    }
    out
}

/// The 45 unordered triples of mutually incident line classes summing to h.
pub fn tritangent_trios() -> Vec<[LineClass; 3]> {
    let lines = enumerate_lines();
    let hh = h();
    let mut out = Vec::new();
    for (i, a) in lines.iter().enumerate() {
        for (j, b) in lines.iter().enumerate().skip(i + 1) {
            for c in lines.iter().skip(j + 1) {
                if a.add(b).add(c) == hh {
                    out.push([*a, *b, *c]);
                }
            }
        }
    }
    out
}

/// (ordered, unordered) counts of skew pairs of distinct line classes.
pub fn skew_pair_counts() -> (usize, usize) {
    let lines = enumerate_lines();
    let mut ordered = 0;
    for a in lines {
        for b in lines {
            if a != b && pairing(a, b) == 0 {
                ordered += 1;
            }
        }
    }
    (ordered, ordered / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: [i64; 7]) -> LatticeVector {
        LatticeVector(c)
    }

    fn delta() -> Root {
        v([2, -1, -1, -1, -1, -1, -1])
    }

    #[test]
    fn pairing_table() {
        let e0 = LatticeVector::basis(0);
        let e1 = LatticeVector::basis(1);
        assert_eq!(pairing(&e0, &e0), 1);
        assert_eq!(pairing(&e1, &e1), -1);
        assert_eq!(pairing(&e0, &e1), 0);
        assert_eq!(pairing(&h(), &h()), 3);
    }

    #[test]
    fn root_inventory() {
        let roots = enumerate_roots();
        assert_eq!(roots.len(), 72);
        assert!(roots.contains(&delta()));
        assert!(roots.contains(&v([0, 1, -1, 0, 0, 0, 0])));
        // closed under negation
        for a in roots {
            assert!(roots.contains(&a.neg()));
        }
    }

    #[test]
    fn line_inventory() {
        let lines = enumerate_lines();
        assert_eq!(lines.len(), 27);
        assert!(lines.contains(&LatticeVector::basis(1)));
        assert!(lines.contains(&v([1, -1, -1, 0, 0, 0, 0]))); // line through the first two blown-up points
        // distinct classes pair to 0, 1 or 2
        for a in lines {
            assert_eq!(pairing(a, &h()), 1);
            for b in lines {
                if a != b {
                    assert!((0..=2).contains(&pairing(a, b)));
                }
            }
        }
    }

    #[test]
    fn reflection_properties() {
        let roots = enumerate_roots();
        for a in roots {
            assert_eq!(reflect(a, a).unwrap(), a.neg());
            assert_eq!(reflect(a, &h()).unwrap(), h());
            // involutive and pairing-preserving on all roots
            for b in roots {
                let rb = reflect(a, b).unwrap();
                assert!(roots.contains(&rb));
                assert_eq!(reflect(a, &rb).unwrap(), *b);
                assert_eq!(pairing(&rb, &reflect(a, &delta()).unwrap()), pairing(b, &delta()));
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let e1 = LatticeVector::basis(1);
        assert_eq!(
            reflect(&delta(), &e1).unwrap(),
            v([2, 0, -1, -1, -1, -1, -1])
        );
        assert_eq!(
            reflect(&v([0, 1, -1, 0, 0, 0, 0]), &e1).unwrap(),
            LatticeVector::basis(2)
        );
        assert!(matches!(
            reflect(&LatticeVector::basis(1), &e1),
            Err(Error::NotARoot)
        ));
    }

    #[test]
    fn six_ways_everywhere() {
        for a in enumerate_roots() {
            let ways = six_ways(a).unwrap();
            assert_eq!(ways.len(), 6, "root {a:?}");
            for (b1, b2) in &ways {
                assert_eq!(b1.sub(b2), *a);
                assert_eq!(pairing(b1, b2), 0);
            }
        }
    }

    #[test]
    fn six_ways_node_example() {
        let ways = six_ways(&delta()).unwrap();
        for i in 1..=6usize {
            let ei = LatticeVector::basis(i);
            let qi = delta().add(&ei);
            assert!(ways.contains(&(qi, ei)));
        }
    }

    #[test]
    fn sextuple_and_double_six_counts() {
        let all = sextuples();
        assert_eq!(all.len(), 72);
        for (_, s) in &all {
            assert_eq!(s.len(), 6);
            for x in s {
                for y in s {
                    if x != y {
                        assert_eq!(pairing(x, y), 0);
                    }
                }
            }
        }
        // {e1..e6} occurs as a sextuple
        let mut es: Vec<LineClass> = (1..=6).map(LatticeVector::basis).collect();
        es.sort();
        assert!(all.iter().any(|(_, s)| *s == es));
        assert_eq!(double_sixes().len(), 36);
        // the two sextuples of a double-six are disjoint as sets
        for (_, s1, s2) in double_sixes() {
            assert!(s1.iter().all(|x| !s2.contains(x)));
        }
    }

    #[test]
    fn tritangent_count_and_incidence() {
        let trios = tritangent_trios();
        assert_eq!(trios.len(), 45);
        let e1 = LatticeVector::basis(1);
        let f12 = v([1, -1, -1, 0, 0, 0, 0]);
        let g2 = v([2, -1, 0, -1, -1, -1, -1]);
        assert!(trios
            .iter()
            .any(|t| t.contains(&e1) && t.contains(&f12) && t.contains(&g2)));
        assert_eq!(e1.add(&f12).add(&g2), h());
        for t in &trios {
            for i in 0..3 {
                for j in i + 1..3 {
                    assert_eq!(pairing(&t[i], &t[j]), 1);
                }
            }
        }
    }

    #[test]
    fn skew_pairs() {
        assert_eq!(skew_pair_counts(), (432, 216));
        for a in enumerate_lines() {
            let n = enumerate_lines()
                .iter()
                .filter(|b| *b != a && pairing(a, b) == 0)
                .count();
            assert_eq!(n, 16);
        }
    }
}

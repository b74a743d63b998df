//! Lattice model of a cubic surface with ADE singularities: the orbit census
//! of the 72 roots under the sub-Weyl group of effective roots, line orbits
//! with multiplicity, incidence through singularities, and the skew-line
//! Hilbert-scheme counts.

use crate::error::{Error, Result};
use crate::exact::{linalg, rat_int, Rat};
use crate::lattice::{enumerate_lines, enumerate_roots, pairing, LineClass, Root};
use crate::weyl::{
    close_subgroup, embed_subsystems, weyl_order, AdeKind, SubsystemEmbedding,
};
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;

/// Canonical multiset of irreducible ADE summands, total rank at most 6.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SingularityConfig {
    summands: Vec<(AdeKind, usize)>,
}

/// The 21 singularity types of (non-cone) cubic surfaces with their
/// traditional Roman-numeral labels and root-orbit counts.
pub const TABLE1: [(&str, &str, usize); 21] = [
    ("", "I", 72),
    ("A1", "II", 51),
    ("A2", "III", 31),
    ("2A1", "IV", 36),
    ("A3", "V", 17),
    ("A1+A2", "VI", 22),
    ("A4", "VII", 9),
    ("3A1", "VIII", 25),
    ("2A2", "IX", 14),
    ("A1+A3", "X", 12),
    ("A5", "XI", 5),
    ("D4", "XII", 7),
    ("2A1+A2", "XIII", 15),
    ("A1+A4", "XIV", 6),
    ("D5", "XV", 3),
    ("4A1", "XVI", 17),
    ("A1+2A2", "XVII", 9),
    ("2A1+A3", "XVIII", 8),
    ("A1+A5", "XIX", 3),
    ("E6", "XX", 1),
    ("3A2", "XXI", 5),
];

impl SingularityConfig {
    pub fn smooth() -> Self {
        SingularityConfig { summands: vec![] }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "∅" || text.eq_ignore_ascii_case("smooth") {
            return Ok(Self::smooth());
        }
        let mut summands = Vec::new();
        for part in text.split('+') {
            let part = part.trim();
            let mut chars = part.chars().peekable();
            let mut mult = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                mult.push(chars.next().unwrap());
            }
            let mult: usize = if mult.is_empty() {
                1
            } else {
                mult.parse()
                    .map_err(|_| Error::ConfigParse(format!("bad multiplicity in '{part}'")))?
            };
            if mult == 0 {
                return Err(Error::ConfigParse(format!("zero multiplicity in '{part}'")));
            }
            let kind = match chars.next() {
                Some('A') => AdeKind::A,
                Some('D') => AdeKind::D,
                Some('E') => AdeKind::E,
                _ => return Err(Error::ConfigParse(format!("unknown type in '{part}'"))),
            };
            let rank: usize = chars
                .collect::<String>()
                .parse()
                .map_err(|_| Error::ConfigParse(format!("bad rank in '{part}'")))?;
            let valid = match kind {
                AdeKind::A => (1..=6).contains(&rank),
                AdeKind::D => (4..=6).contains(&rank),
                AdeKind::E => rank == 6,
            };
            if !valid {
                return Err(Error::ConfigParse(format!(
                    "rank {rank} out of range for type {}",
                    kind.letter()
                )));
            }
            for _ in 0..mult {
                summands.push((kind, rank));
            }
        }
        let total: usize = summands.iter().map(|&(_, r)| r).sum();
        if total > 6 {
            return Err(Error::ConfigParse(format!("total rank {total} exceeds 6")));
        }
        summands.sort();
        Ok(SingularityConfig { summands })
    }

    pub fn summands(&self) -> &[(AdeKind, usize)] {
        &self.summands
    }

    pub fn num_singularities(&self) -> usize {
        self.summands.len()
    }

    pub fn total_rank(&self) -> usize {
        self.summands.iter().map(|&(_, r)| r).sum()
    }

    pub fn label(&self) -> String {
        if self.summands.is_empty() {
            return "∅".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.summands.len() {
            let (kind, rank) = self.summands[i];
            let mut j = i;
            while j < self.summands.len() && self.summands[j] == (kind, rank) {
                j += 1;
            }
            let mult = j - i;
            if mult == 1 {
                parts.push(format!("{}{}", kind.letter(), rank));
            } else {
                parts.push(format!("{}{}{}", mult, kind.letter(), rank));
            }
            i = j;
        }
        parts.join("+")
    }

    /// Roman-numeral type and published orbit count, when the config is one
    /// of the 21 realized singularity types.
    pub fn table1_row(&self) -> Option<(&'static str, usize)> {
        TABLE1.iter().find_map(|&(label, roman, count)| {
            (Self::parse(label).expect("table labels parse") == *self).then_some((roman, count))
        })
    }
}

impl fmt::Display for SingularityConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A lattice model: a fixed embedding of the configuration's root system
/// into the 72 roots, with per-summand positive roots and fundamental-cycle
/// (maximal-root) classes.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub config: SingularityConfig,
    pub embedding: SubsystemEmbedding,
    /// Positive roots of each summand: non-negative integer combinations of
    /// its simple roots.
    pub positive_roots: Vec<Vec<Root>>,
    /// The unique maximal positive root of each summand.
    pub maximal_roots: Vec<Root>,
}

/// One conjugacy class of embeddings of a configuration.
#[derive(Clone, Debug)]
pub struct EmbeddingClassSummary {
    pub representative: SubsystemEmbedding,
    pub num_embeddings: usize,
    pub orbit_count: usize,
    /// True for the class whose census matches the published table row.
    pub geometric: bool,
}

impl SurfaceModel {
    /// Builds the model for a published singularity type, choosing the
    /// geometric conjugacy class (the one reproducing the table's count).
    /// Results are memoized: the construction is deterministic and shared by
    /// the census, line-orbit, and monodromy entry points.
    pub fn new(config: SingularityConfig) -> Result<Self> {
        use std::sync::{Mutex, OnceLock};
        static CACHE: OnceLock<Mutex<std::collections::HashMap<String, SurfaceModel>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = config.label();
        if let Some(model) = cache.lock().unwrap().get(&key) {
            return Ok(model.clone());
        }
        let model = Self::build(config)?;
        cache.lock().unwrap().insert(key, model.clone());
        Ok(model)
    }

    fn build(config: SingularityConfig) -> Result<Self> {
        let Some((_, expected)) = config.table1_row() else {
            return Err(Error::InvalidInput(format!(
                "'{}' is not a realized cubic-surface singularity type",
                config.label()
            )));
        };
        let classes = embed_subsystems(config.summands())?;
        for class in &classes {
            let model = Self::from_embedding(config.clone(), class[0].clone())?;
            if root_census(&model)?.orbits.len() == expected {
                return Ok(model);
            }
        }
        Err(Error::Invariant(format!(
            "no embedding class of {} reproduces the published orbit count",
            config.label()
        )))
    }

    /// Builds the model for one explicit embedding.
    pub fn from_embedding(
        config: SingularityConfig,
        embedding: SubsystemEmbedding,
    ) -> Result<Self> {
        let mut positive_roots = Vec::new();
        let mut maximal_roots = Vec::new();
        for simple in &embedding.summands {
            let single = SubsystemEmbedding {
                summands: vec![simple.clone()],
            };
            let mut pos: Vec<(Root, Vec<i64>)> = Vec::new();
            for r in single.effective_root_set() {
                if let Some(c) = nonneg_integer_coords(&r, simple) {
                    pos.push((r, c));
                }
            }
            // exactly half of a root system is positive
            if pos.len() * 2 != single.effective_root_set().len() {
                return Err(Error::Invariant(
                    "positive roots are not half the summand".into(),
                ));
            }
            let maximal: Vec<&(Root, Vec<i64>)> = pos
                .iter()
                .filter(|(_, c)| {
                    pos.iter()
                        .all(|(_, d)| c.iter().zip(d).all(|(a, b)| a >= b))
                })
                .collect();
            if maximal.len() != 1 {
                return Err(Error::Invariant("maximal root is not unique".into()));
            }
            maximal_roots.push(maximal[0].0);
            positive_roots.push(pos.into_iter().map(|(r, _)| r).collect());
        }
        Ok(SurfaceModel {
            config,
            embedding,
            positive_roots,
            maximal_roots,
        })
    }

    pub fn all_positive_roots(&self) -> Vec<Root> {
        self.positive_roots.iter().flatten().copied().collect()
    }
}

/// Coordinates of `v` in the basis `simple`, when they are all non-negative
/// integers.
fn nonneg_integer_coords(v: &Root, simple: &[Root]) -> Option<Vec<i64>> {
    // solve the 7 x r system S c = v over the rationals
    let r = simple.len();
    let mut aug: Vec<Vec<Rat>> = (0..7)
        .map(|row| {
            let mut line: Vec<Rat> = simple.iter().map(|s| rat_int(s.0[row])).collect();
            line.push(rat_int(v.0[row]));
            line
        })
        .collect();
    let rank = linalg::row_reduce(&mut aug);
    let mut coords = vec![Rat::zero(); r];
    for row in aug.iter().take(rank) {
        let Some(p) = row[..r].iter().position(|x| !x.is_zero()) else {
            return None; // inconsistent: 0 = nonzero
        };
        coords[p] = row[r].clone();
    }
    // verify (free variables set to zero must reproduce v exactly)
    for row in 0..7 {
        let mut s = Rat::zero();
        for (c, sr) in coords.iter().zip(simple) {
            s += c * rat_int(sr.0[row]);
        }
        if s != rat_int(v.0[row]) {
            return None;
        }
    }
    let mut out = Vec::with_capacity(r);
    for c in coords {
        if !c.is_integer() || c < Rat::zero() {
            return None;
        }
        out.push(c.numer().try_into().ok()?);
    }
    Some(out)
}

/// Orbits of the 72 roots under the model's monodromy subgroup.
#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    /// Sorted orbits, each a sorted root list.
    pub orbits: Vec<Vec<Root>>,
    pub subgroup_order: usize,
    /// Per orbit: whether it lies inside the effective sub-root system.
    pub in_effective: Vec<bool>,
    /// Per orbit: the fundamental-cycle class (maximal root of its summand)
    /// when the orbit lies inside the effective system.
    pub maximal_root: Vec<Option<Root>>,
}

fn component_orbits<T: Copy + Ord>(items: &[T], step: impl Fn(T) -> Vec<T>) -> Vec<Vec<T>> {
    let mut seen: std::collections::BTreeSet<T> = Default::default();
    let mut orbits = Vec::new();
    for &start in items {
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = vec![start];
        seen.insert(start);
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for y in step(x) {
                if seen.insert(y) {
                    orbit.push(y);
                    queue.push(y);
                }
            }
        }
        orbit.sort();
        orbits.push(orbit);
    }
    orbits.sort();
    orbits
}

pub fn root_census(model: &SurfaceModel) -> Result<OrbitDecomposition> {
    let gens = model.embedding.reflections();
    let orbits = component_orbits(enumerate_roots(), |r| {
        gens.iter().map(|g| g.apply(&r)).collect()
    });
    let effective = {
        let mut e = model.embedding.effective_root_set();
        e.sort();
        e
    };
    let in_effective: Vec<bool> = orbits
        .iter()
        .map(|o| o.iter().all(|r| effective.binary_search(r).is_ok()))
        .collect();
    let maximal_root: Vec<Option<Root>> = orbits
        .iter()
        .zip(&in_effective)
        .map(|(o, &inside)| {
            if !inside {
                return Ok(None);
            }
            let hits: Vec<usize> = model
                .positive_roots
                .iter()
                .enumerate()
                .filter(|(_, pos)| pos.iter().any(|p| o.contains(p)))
                .map(|(i, _)| i)
                .collect();
            if hits.len() != 1 {
                return Err(Error::Invariant(
                    "effective orbit does not match a single summand".into(),
                ));
            }
            Ok(Some(model.maximal_roots[hits[0]]))
        })
        .collect::<Result<_>>()?;
    let subgroup_order = close_subgroup(&gens).len();
    Ok(OrbitDecomposition {
        orbits,
        subgroup_order,
        in_effective,
        maximal_root,
    })
}

/// Orbit counts for all 21 published singularity types, in table order.
pub fn table1() -> Result<Vec<(SingularityConfig, &'static str, usize)>> {
    TABLE1
        .iter()
        .map(|&(label, roman, _)| {
            let config = SingularityConfig::parse(label)?;
            let model = SurfaceModel::new(config.clone())?;
            let count = root_census(&model)?.orbits.len();
            Ok((config, roman, count))
        })
        .collect()
}

/// Summaries of every conjugacy class of embeddings of a configuration.
pub fn embedding_classes(config: &SingularityConfig) -> Result<Vec<EmbeddingClassSummary>> {
    let expected = config.table1_row().map(|(_, c)| c);
    let classes = embed_subsystems(config.summands())?;
    classes
        .into_iter()
        .map(|class| {
            let model = SurfaceModel::from_embedding(config.clone(), class[0].clone())?;
            let orbit_count = root_census(&model)?.orbits.len();
            Ok(EmbeddingClassSummary {
                representative: class[0].clone(),
                num_embeddings: class.len(),
                orbit_count,
                geometric: expected == Some(orbit_count),
            })
        })
        .collect()
}

/// An orbit of the 27 line classes: a line of the singular surface, counted
/// with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineOrbit {
    pub members: Vec<LineClass>,
    /// The unique member pairing non-negatively with every positive
    /// effective root.
    pub representative: LineClass,
    pub multiplicity: usize,
    /// Indices of the singularities (summands) the line passes through.
    pub through: Vec<usize>,
}

pub fn line_orbits(model: &SurfaceModel) -> Result<Vec<LineOrbit>> {
    let gens = model.embedding.reflections();
    let orbits = component_orbits(enumerate_lines(), |l| {
        gens.iter().map(|g| g.apply(&l)).collect()
    });
    let positives = model.all_positive_roots();
    let mut out = Vec::new();
    for members in orbits {
        let reps: Vec<LineClass> = members
            .iter()
            .filter(|m| positives.iter().all(|p| pairing(m, p) >= 0))
            .copied()
            .collect();
        if reps.len() != 1 {
            return Err(Error::Invariant(format!(
                "line orbit has {} non-negative representatives",
                reps.len()
            )));
        }
        let representative = reps[0];
        let through: Vec<usize> = model
            .positive_roots
            .iter()
            .enumerate()
            .filter(|(_, pos)| pos.iter().any(|p| pairing(&representative, p) > 0))
            .map(|(i, _)| i)
            .collect();
        out.push(LineOrbit {
            multiplicity: members.len(),
            members,
            representative,
            through,
        });
    }
    out.sort_by_key(|o| o.representative);
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Incidence {
    Skew,
    IncidentAtSmoothPoint,
    IncidentAtSingularity(usize),
}

pub fn incidence(l1: &LineOrbit, l2: &LineOrbit) -> Incidence {
    if let Some(&i) = l1.through.iter().find(|i| l2.through.contains(i)) {
        return Incidence::IncidentAtSingularity(i);
    }
    if pairing(&l1.representative, &l2.representative) > 0 {
        Incidence::IncidentAtSmoothPoint
    } else {
        Incidence::Skew
    }
}

pub fn monodromy_group_order(model: &SurfaceModel) -> usize {
    close_subgroup(&model.embedding.reflections()).len()
}

/// Product of the summands' abstract Weyl-group orders.
pub fn expected_monodromy_order(config: &SingularityConfig) -> u64 {
    config
        .summands()
        .iter()
        .map(|&(k, r)| weyl_order(k, r))
        .product()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LineType {
    First,
    Second,
}

/// Counts of the four strata of the reduced Hilbert scheme of skew-line
/// subschemes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SkewCountReport {
    pub type_i: usize,
    pub type_ii: usize,
    pub type_iii: usize,
    pub type_iv: usize,
    pub total: usize,
}

/// Counts the four types: I = skew orbit pairs, II = one per first-type
/// line, III = orbit pairs incident at a singularity, IV = one per
/// (second-type line, singularity on it). Line types are external input and
/// must be assigned for every line through a singularity.
pub fn skew_hilbert_count(
    model: &SurfaceModel,
    types: &HashMap<usize, LineType>,
) -> Result<SkewCountReport> {
    let orbits = line_orbits(model)?;
    let missing: Vec<String> = orbits
        .iter()
        .enumerate()
        .filter(|(i, o)| !o.through.is_empty() && !types.contains_key(i))
        .map(|(i, _)| i.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingLineTypes(missing.join(", ")));
    }
    let mut type_i = 0;
    let mut type_iii = 0;
    for (i, a) in orbits.iter().enumerate() {
        for b in orbits.iter().skip(i + 1) {
            match incidence(a, b) {
                Incidence::Skew => type_i += 1,
                Incidence::IncidentAtSingularity(_) => type_iii += 1,
                Incidence::IncidentAtSmoothPoint => {}
            }
        }
    }
    let mut type_ii = 0;
    let mut type_iv = 0;
    for (i, o) in orbits.iter().enumerate() {
        if o.through.is_empty() {
            continue;
        }
        match types[&i] {
            LineType::First => type_ii += 1,
            LineType::Second => type_iv += o.through.len(),
        }
    }
    Ok(SkewCountReport {
        type_i,
        type_ii,
        type_iii,
        type_iv,
        total: type_i + type_ii + type_iii + type_iv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeVector;

    fn cfg(s: &str) -> SingularityConfig {
        SingularityConfig::parse(s).unwrap()
    }

    fn model(s: &str) -> SurfaceModel {
        SurfaceModel::new(cfg(s)).unwrap()
    }

    #[test]
    fn parse_and_label_roundtrip() {
        assert_eq!(cfg("2A1+A2").summands(), &[(AdeKind::A, 1), (AdeKind::A, 1), (AdeKind::A, 2)]);
        assert_eq!(cfg("A2+2A1").label(), "2A1+A2");
        assert_eq!(cfg("").label(), "∅");
        assert!(SingularityConfig::parse("A7").is_err());
        assert!(SingularityConfig::parse("A0").is_err());
        assert!(SingularityConfig::parse("F4").is_err());
        assert!(SingularityConfig::parse("3A2+A1").is_err());
        for (label, _, _) in TABLE1 {
            if !label.is_empty() {
                assert_eq!(cfg(label).label(), label);
            }
        }
    }

    #[test]
    fn a1_orbit_profile() {
        let dec = root_census(&model("A1")).unwrap();
        assert_eq!(dec.orbits.len(), 51);
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for o in &dec.orbits {
            *sizes.entry(o.len()).or_default() += 1;
        }
        assert_eq!(sizes[&1], 30);
        assert_eq!(sizes[&2], 21); // the effective pair plus 20 others
        let effective_orbits = dec.in_effective.iter().filter(|b| **b).count();
        assert_eq!(effective_orbits, 1);
        assert_eq!(dec.subgroup_order, 2);
    }

    #[test]
    fn census_partition_properties() {
        for label in ["A1", "2A2", "A1+A3", "D4"] {
            let m = model(label);
            let dec = root_census(&m).unwrap();
            assert_eq!(dec.orbits.iter().map(Vec::len).sum::<usize>(), 72);
            let inside = dec.in_effective.iter().filter(|b| **b).count();
            assert_eq!(inside, m.config.num_singularities());
            // orbits outside the effective system are disjoint from it
            let mut eff = m.embedding.effective_root_set();
            eff.sort();
            for (o, &ins) in dec.orbits.iter().zip(&dec.in_effective) {
                let overlap = o.iter().filter(|r| eff.binary_search(r).is_ok()).count();
                assert_eq!(overlap, if ins { o.len() } else { 0 });
                assert_eq!(dec.subgroup_order % o.len(), 0);
            }
        }
    }

    #[test]
    fn table1_matches_published() {
        for (config, _, count) in table1().unwrap() {
            let (_, expected) = config.table1_row().unwrap();
            assert_eq!(count, expected, "config {}", config.label());
        }
    }

    #[test]
    fn line_orbits_a1() {
        let orbits = line_orbits(&model("A1")).unwrap();
        assert_eq!(orbits.len(), 21);
        let through: Vec<&LineOrbit> =
            orbits.iter().filter(|o| !o.through.is_empty()).collect();
        assert_eq!(through.len(), 6);
        for o in &through {
            assert_eq!(o.multiplicity, 2);
        }
        assert!(orbits
            .iter()
            .filter(|o| o.through.is_empty())
            .all(|o| o.multiplicity == 1));
    }

    #[test]
    fn line_orbits_3a2_and_mass() {
        let orbits = line_orbits(&model("3A2")).unwrap();
        assert_eq!(orbits.len(), 3);
        for o in &orbits {
            assert_eq!(o.multiplicity, 9);
            assert_eq!(o.through.len(), 2);
        }
        for (label, _, _) in TABLE1 {
            let sum: usize = line_orbits(&model(label))
                .unwrap()
                .iter()
                .map(|o| o.multiplicity)
                .sum();
            assert_eq!(sum, 27, "config {label}");
        }
    }

    #[test]
    fn incidence_cases() {
        let m = model("A1");
        let orbits = line_orbits(&m).unwrap();
        let node: Vec<&LineOrbit> = orbits.iter().filter(|o| !o.through.is_empty()).collect();
        assert_eq!(
            incidence(node[0], node[1]),
            Incidence::IncidentAtSingularity(0)
        );
        let smooth = SurfaceModel::new(SingularityConfig::smooth()).unwrap();
        let sorb = line_orbits(&smooth).unwrap();
        let find = |v: LatticeVector| sorb.iter().find(|o| o.representative == v).unwrap();
        let e1 = find(LatticeVector::basis(1));
        let f12 = find(LatticeVector([1, -1, -1, 0, 0, 0, 0]));
        let e2 = find(LatticeVector::basis(2));
        assert_eq!(incidence(e1, f12), Incidence::IncidentAtSmoothPoint);
        assert_eq!(incidence(e1, e2), Incidence::Skew);
    }

    #[test]
    fn monodromy_orders() {
        for (label, _, _) in TABLE1 {
            let m = model(label);
            assert_eq!(
                monodromy_group_order(&m) as u64,
                expected_monodromy_order(&m.config),
                "config {label}"
            );
        }
    }

    #[test]
    fn skew_counts_examples() {
        let smooth = SurfaceModel::new(SingularityConfig::smooth()).unwrap();
        let rep = skew_hilbert_count(&smooth, &HashMap::new()).unwrap();
        assert_eq!((rep.type_i, rep.type_ii, rep.type_iii, rep.type_iv), (216, 0, 0, 0));

        let a1 = model("A1");
        let orbits = line_orbits(&a1).unwrap();
        let types: HashMap<usize, LineType> = orbits
            .iter()
            .enumerate()
            .filter(|(_, o)| !o.through.is_empty())
            .map(|(i, _)| (i, LineType::First))
            .collect();
        let rep = skew_hilbert_count(&a1, &types).unwrap();
        assert_eq!((rep.type_i, rep.type_ii, rep.type_iii, rep.type_iv), (120, 6, 15, 0));
        assert_eq!(rep.total, 141);

        let threea2 = model("3A2");
        let types: HashMap<usize, LineType> =
            (0..3).map(|i| (i, LineType::Second)).collect();
        let rep = skew_hilbert_count(&threea2, &types).unwrap();
        assert_eq!((rep.type_i, rep.type_ii, rep.type_iii, rep.type_iv), (0, 0, 3, 6));
        assert_eq!(rep.total, 9);
    }

    #[test]
    fn skew_counts_missing_types() {
        let a1 = model("A1");
        assert!(matches!(
            skew_hilbert_count(&a1, &HashMap::new()),
            Err(Error::MissingLineTypes(_))
        ));
    }

    #[test]
    fn a1_brute_force_type_i_cross_check() {
        let a1 = model("A1");
        let orbits = line_orbits(&a1).unwrap();
        let mut skew = 0;
        for (i, a) in orbits.iter().enumerate() {
            for b in orbits.iter().skip(i + 1) {
                if incidence(a, b) == Incidence::Skew {
                    skew += 1;
                }
            }
        }
        assert_eq!(skew, 120);
    }

    #[test]
    fn maximal_roots_dominate() {
        for label in ["A2", "A1+A4", "D5", "E6"] {
            let m = model(label);
            for ((pos, max), simple) in m
                .positive_roots
                .iter()
                .zip(&m.maximal_roots)
                .zip(&m.embedding.summands)
            {
                assert!(pos.contains(max));
                for p in pos {
                    // max - p is a non-negative combination of simple roots
                    let diff = max.sub(p);
                    assert!(nonneg_integer_coords(&diff, simple).is_some());
                }
            }
        }
    }
}

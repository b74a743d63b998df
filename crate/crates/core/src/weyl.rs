//! The Weyl group W(E6) acting on the 72 roots: breadth-first generation,
//! orbits, subgroup orders, and embeddings of ADE sub-root systems.

use crate::error::{Error, Result};
use crate::lattice::{enumerate_roots, pairing, LatticeVector, Root};
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// Pairing-preserving lattice automorphism, stored both as a matrix and as
/// the induced permutation of the canonical 72-root list.
#[derive(Clone)]
pub struct GroupElement {
    pub matrix: [[i64; 7]; 7],
    pub perm: [u8; 72],
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}
impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

fn root_index() -> &'static HashMap<LatticeVector, u8> {
    static IDX: OnceLock<HashMap<LatticeVector, u8>> = OnceLock::new();
    IDX.get_or_init(|| {
        enumerate_roots()
            .iter()
            .enumerate()
            .map(|(i, r)| (*r, i as u8))
            .collect()
    })
}

impl GroupElement {
    pub fn identity() -> Self {
        let mut matrix = [[0i64; 7]; 7];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut perm = [0u8; 72];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        GroupElement { matrix, perm }
    }

    /// Reflection in a root: v -> v + <a,v> a.
    pub fn reflection(alpha: &Root) -> Result<Self> {
        if !alpha.is_root() {
            return Err(Error::NotARoot);
        }
        // signature (1,6) metric coefficients
        let g = [1i64, -1, -1, -1, -1, -1, -1];
        let mut matrix = [[0i64; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                matrix[i][j] = i64::from(i == j) + alpha.0[i] * g[j] * alpha.0[j];
            }
        }
        let mut el = GroupElement {
            matrix,
            perm: [0; 72],
        };
        el.recompute_perm();
        Ok(el)
    }

    fn recompute_perm(&mut self) {
        let idx = root_index();
        for (i, r) in enumerate_roots().iter().enumerate() {
            self.perm[i] = idx[&self.apply(r)];
        }
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        let mut out = [0i64; 7];
        for (o, row) in out.iter_mut().zip(&self.matrix) {
            *o = row.iter().zip(&v.0).map(|(m, x)| m * x).sum();
        }
        LatticeVector(out)
    }

    /// Composition self after other.
    pub fn compose(&self, other: &Self) -> Self {
        let mut matrix = [[0i64; 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                matrix[i][j] = (0..7).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum();
            }
        }
        let mut perm = [0u8; 72];
        for i in 0..72 {
            perm[i] = self.perm[other.perm[i] as usize];
        }
        GroupElement { matrix, perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }
}

/// Simple roots whose pairing matrix realizes the E6 diagram: a chain of
/// five plus the branch node attached to the middle of the chain.
pub fn simple_roots_e6() -> [Root; 6] {
    let e = LatticeVector::basis;
    [
        e(1).sub(&e(2)),
        e(2).sub(&e(3)),
        e(3).sub(&e(4)),
        e(4).sub(&e(5)),
        e(5).sub(&e(6)),
        e(0).sub(&e(1)).sub(&e(2)).sub(&e(3)),
    ]
}

/// The full Weyl group as the closure of the simple reflections; 51840
/// elements, generated once and cached.
pub fn generate_weyl() -> &'static Vec<GroupElement> {
    static GROUP: OnceLock<Vec<GroupElement>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let gens: Vec<GroupElement> = simple_roots_e6()
            .iter()
            .map(|a| GroupElement::reflection(a).expect("simple roots are roots"))
            .collect();
        let els = close_subgroup(&gens);
        assert_eq!(els.len(), 51840);
        els
    })
}

/// Breadth-first closure of a generating set; includes the identity.
pub fn close_subgroup(generators: &[GroupElement]) -> Vec<GroupElement> {
    let mut seen: HashSet<[u8; 72]> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let id = GroupElement::identity();
    seen.insert(id.perm);
    queue.push_back(id.clone());
    out.push(id);
    while let Some(el) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&el);
            if seen.insert(next.perm) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

pub fn subgroup_order(generators: &[GroupElement]) -> usize {
    close_subgroup(generators).len()
}

/// Smallest generator-stable set of lattice vectors containing the seed.
pub fn orbit(seed: &LatticeVector, generators: &[GroupElement]) -> Vec<LatticeVector> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(*seed);
    queue.push_back(*seed);
    out.push(*seed);
    while let Some(v) = queue.pop_front() {
        for g in generators {
            let next = g.apply(&v);
            if seen.insert(next) {
                out.push(next);
                queue.push_back(next);
            }
        }
    }
    out.sort();
    out
}

/// Irreducible simply-laced Dynkin types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AdeKind {
    A,
    D,
    E,
}

impl AdeKind {
    pub fn letter(self) -> char {
        match self {
            AdeKind::A => 'A',
            AdeKind::D => 'D',
            AdeKind::E => 'E',
        }
    }
}

/// Order of the Weyl group of one irreducible summand.
pub fn weyl_order(kind: AdeKind, rank: usize) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    match kind {
        AdeKind::A => fact(rank + 1),
        AdeKind::D => (1u64 << (rank - 1)) * fact(rank),
        AdeKind::E => match rank {
            6 => 51840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!("E rank checked at parse time"),
        },
    }
}

/// Edges of the Dynkin diagram of one summand, on nodes 0..rank.
fn diagram_edges(kind: AdeKind, rank: usize) -> Vec<(usize, usize)> {
    match kind {
        AdeKind::A => (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        AdeKind::D => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        AdeKind::E => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((2, rank - 1));
            e
        }
    }
}

/// One realization of an ADE configuration inside the 72 roots: the chosen
/// simple roots, one inner list per irreducible summand.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SubsystemEmbedding {
    pub summands: Vec<Vec<Root>>,
}

impl SubsystemEmbedding {
    pub fn all_simple_roots(&self) -> Vec<Root> {
        self.summands.iter().flatten().copied().collect()
    }

    pub fn reflections(&self) -> Vec<GroupElement> {
        self.all_simple_roots()
            .iter()
            .map(|a| GroupElement::reflection(a).expect("embedded simple roots are roots"))
            .collect()
    }

    /// The sub-root system generated: orbit of the simple roots under the
    /// group they generate, computed on root indices.
    pub fn effective_root_set(&self) -> Vec<Root> {
        let roots = enumerate_roots();
        let idx = root_index();
        let gens: Vec<[u8; 72]> = self
            .all_simple_roots()
            .iter()
            .map(|a| *reflection_perm(idx[a]))
            .collect();
        let mut mask = [false; 72];
        let mut queue: Vec<u8> = self.all_simple_roots().iter().map(|a| idx[a]).collect();
        for &i in &queue {
            mask[i as usize] = true;
        }
        while let Some(i) = queue.pop() {
            for g in &gens {
                let j = g[i as usize];
                if !mask[j as usize] {
                    mask[j as usize] = true;
                    queue.push(j);
                }
            }
        }
        (0..72).filter(|&i| mask[i]).map(|i| roots[i]).collect()
    }
}

/// Permutation of the 72 roots induced by reflection in root i, tabulated.
fn reflection_perm(i: u8) -> &'static [u8; 72] {
    static TABLE: OnceLock<Vec<[u8; 72]>> = OnceLock::new();
    &TABLE.get_or_init(|| {
        enumerate_roots()
            .iter()
            .map(|a| GroupElement::reflection(a).expect("canonical root").perm)
            .collect()
    })[i as usize]
}

fn pairing_table() -> &'static Vec<[i8; 72]> {
    static TABLE: OnceLock<Vec<[i8; 72]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let roots = enumerate_roots();
        roots
            .iter()
            .map(|a| {
                let mut row = [0i8; 72];
                for (j, b) in roots.iter().enumerate() {
                    row[j] = pairing(a, b) as i8;
                }
                row
            })
            .collect()
    })
}

/// All ways to embed the configuration into the 72 roots (ordered simple
/// roots, diagram-adjacent pairs pairing to 1, everything else orthogonal),
/// grouped by W(E6)-conjugacy of the generated sub-root systems. Classes and
/// embeddings within a class are in deterministic lexicographic order.
pub fn embed_subsystems(config: &[(AdeKind, usize)]) -> Result<Vec<Vec<SubsystemEmbedding>>> {
    let total: usize = config.iter().map(|&(_, r)| r).sum();
    if total > 6 {
        return Err(Error::NotEmbeddable(format!(
            "total rank {total} exceeds 6"
        )));
    }
    if total == 0 {
        return Ok(vec![vec![SubsystemEmbedding { summands: vec![] }]]);
    }
    // target pairing matrix over the concatenated node list
    let mut target = vec![vec![0i8; total]; total];
    for (i, row) in target.iter_mut().enumerate() {
        row[i] = -2;
    }
    let mut offset = 0;
    let mut bounds = Vec::new();
    for &(kind, rank) in config {
        for (a, b) in diagram_edges(kind, rank) {
            target[offset + a][offset + b] = 1;
            target[offset + b][offset + a] = 1;
        }
        bounds.push((offset, offset + rank));
        offset += rank;
    }
    let pt = pairing_table();
    let mut found: Vec<Vec<u8>> = Vec::new();
    let mut chosen: Vec<u8> = Vec::new();
    fn go(
        level: usize,
        total: usize,
        target: &[Vec<i8>],
        pt: &[[i8; 72]],
        chosen: &mut Vec<u8>,
        found: &mut Vec<Vec<u8>>,
    ) {
        if level == total {
            found.push(chosen.clone());
            return;
        }
        'cand: for c in 0..72u8 {
            for (j, &p) in chosen.iter().enumerate() {
                if pt[p as usize][c as usize] != target[level][j] {
                    continue 'cand;
                }
            }
            chosen.push(c);
            go(level + 1, total, target, pt, chosen, found);
            chosen.pop();
        }
    }
    go(0, total, &target, pt, &mut chosen, &mut found);
    if found.is_empty() {
        let label: Vec<String> = config
            .iter()
            .map(|&(k, r)| format!("{}{}", k.letter(), r))
            .collect();
        return Err(Error::NotEmbeddable(label.join("+")));
    }

    let roots = enumerate_roots();
    let to_embedding = |indices: &[u8]| -> SubsystemEmbedding {
        let mut summands = Vec::new();
        for &(lo, hi) in &bounds {
            summands.push(indices[lo..hi].iter().map(|&i| roots[i as usize]).collect());
        }
        SubsystemEmbedding { summands }
    };

    // conjugacy classes: connected components of the distinct generated
    // root-sets under the ambient simple reflections
    let key_of = |indices: &[u8]| -> u128 {
        let emb = to_embedding(indices);
        let idx = root_index();
        emb.effective_root_set()
            .iter()
            .fold(0u128, |m, r| m | (1u128 << idx[r]))
    };
    let mut key_to_class: HashMap<u128, usize> = HashMap::new();
    let mut keys_of: Vec<u128> = Vec::with_capacity(found.len());
    for f in &found {
        keys_of.push(key_of(f));
    }
    let simple_perms: Vec<&[u8; 72]> = {
        let idx = root_index();
        simple_roots_e6()
            .iter()
            .map(|a| reflection_perm(idx[a]))
            .collect()
    };
    let apply_to_mask = |perm: &[u8; 72], mask: u128| -> u128 {
        let mut out = 0u128;
        for (i, &p) in perm.iter().enumerate() {
            if mask & (1u128 << i) != 0 {
                out |= 1u128 << p;
            }
        }
        out
    };
    let mut next_class = 0usize;
    for &k in &keys_of {
        if key_to_class.contains_key(&k) {
            continue;
        }
        // flood the whole W-orbit of this root set
        let mut queue = vec![k];
        key_to_class.insert(k, next_class);
        while let Some(m) = queue.pop() {
            for perm in &simple_perms {
                let im = apply_to_mask(perm, m);
                if let std::collections::hash_map::Entry::Vacant(e) = key_to_class.entry(im) {
                    e.insert(next_class);
                    queue.push(im);
                }
            }
        }
        next_class += 1;
    }
    let mut classes: Vec<Vec<SubsystemEmbedding>> = vec![Vec::new(); next_class];
    for (f, &k) in found.iter().zip(&keys_of) {
        classes[key_to_class[&k]].push(to_embedding(f));
    }
    for class in &mut classes {
        class.sort();
    }
    classes.sort();
    Ok(classes)
}

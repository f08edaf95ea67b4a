//! Congruences of abstract semigroups, π-relations of ordered semigroups,
//! atoms with their meet-complements, and quotient structures.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::order::Poset;
use crate::semigroup::Semigroup;

/// Class id per element, numbered by first occurrence from 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn canonical<T: Eq + std::hash::Hash>(keys: &[T]) -> Self {
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let v = keys
            .iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition(v)
    }

    pub fn identity(n: usize) -> Self {
        Partition((0..n).collect())
    }

    pub fn universal(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// From 1-based or arbitrary class labels.
    pub fn from_vector(v: &[usize]) -> Self {
        Self::canonical(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn classes(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    /// 1-based class vector.
    pub fn vector(&self) -> Vec<usize> {
        self.0.iter().map(|c| c + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.classes() == self.len()
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image: HashMap<usize, usize> = HashMap::new();
        self.0.iter().zip(&other.0).all(|(a, b)| *image.entry(*a).or_insert(*b) == *b)
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let keys: Vec<(usize, usize)> = self.0.iter().copied().zip(other.0.iter().copied()).collect();
        Partition::canonical(&keys)
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let mut first: HashMap<usize, usize> = HashMap::new();
            for (i, &c) in p.0.iter().enumerate() {
                let f = *first.entry(c).or_insert(i);
                uf.union(f, i);
            }
        }
        uf.partition()
    }

    /// Members of each class, classes in id order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes()];
        for (i, &c) in self.0.iter().enumerate() {
            out[c].push(i);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn partition(&mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|i| self.find(i)).collect();
        Partition::canonical(&roots)
    }
}

/// Substitution property: x ≡ y implies xz ≡ yz and zx ≡ zy for all z.
pub fn is_congruence(sg: &Semigroup, p: &Partition) -> bool {
    let n = sg.order();
    if p.len() != n {
        return false;
    }
    for x in 0..n {
        for y in x + 1..n {
            if p.class_of(x) != p.class_of(y) {
                continue;
            }
            for z in 0..n {
                if p.class_of(sg.mul(x, z)) != p.class_of(sg.mul(y, z))
                    || p.class_of(sg.mul(z, x)) != p.class_of(sg.mul(z, y))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Smallest congruence containing the given pairs.
pub fn congruence_closure(sg: &Semigroup, pairs: &[(usize, usize)]) -> Partition {
    let n = sg.order();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = queue.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for z in 0..n {
            queue.push((sg.mul(a, z), sg.mul(b, z)));
            queue.push((sg.mul(z, a), sg.mul(z, b)));
        }
    }
    uf.partition()
}

pub fn principal_congruence(sg: &Semigroup, x: usize, y: usize) -> Partition {
    congruence_closure(sg, &[(x, y)])
}

/// Principal congruences of every unordered pair followed by every further
/// join of them, i.e. the whole congruence lattice minus the identity.
/// Without `unique`, principal congruences are listed once per pair.
pub fn find_congruences(sg: &Semigroup, unique: bool, cap: usize) -> Result<Vec<Partition>> {
    let n = sg.order();
    let mut per_pair = Vec::new();
    let mut principal: Vec<Partition> = Vec::new();
    let mut seen: HashSet<Partition> = HashSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let c = principal_congruence(sg, x, y);
            if seen.insert(c.clone()) {
                principal.push(c.clone());
            }
            per_pair.push(c);
        }
    }
    let mut extras = Vec::new();
    let mut frontier = principal.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &principal {
                let j = a.join(b);
                if seen.insert(j.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureTooLarge { cap, count: seen.len() - 1 });
                    }
                    next.push(j.clone());
                    extras.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out = if unique { principal } else { per_pair };
    out.extend(extras);
    Ok(out)
}

/// Quasi-order containing the base order and compatible with
/// multiplication on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRelation {
    pub relation: BitMatrix,
    /// The added inclusion (x, y) that generated it, if any.
    pub pair: Option<(usize, usize)>,
    pub partition: Partition,
}

impl PiRelation {
    fn new(relation: BitMatrix, pair: Option<(usize, usize)>) -> Self {
        let partition = quasi_order_partition(&relation);
        PiRelation { relation, pair, partition }
    }
}

/// Classes of mutual relatedness.
pub fn quasi_order_partition(r: &BitMatrix) -> Partition {
    let n = r.rows();
    let keys: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| r.get(i, j) && r.get(j, i)).unwrap_or(i)).collect();
    Partition::canonical(&keys)
}

/// Close under (a ≤ b ⇒ az ≤ bz, za ≤ zb) and transitivity.
pub fn pi_closure(sg: &Semigroup, rel: &BitMatrix) -> BitMatrix {
    let n = sg.order();
    let mut r = rel.transitive_closure();
    loop {
        let mut next = r.clone();
        for a in 0..n {
            for b in r.row_ones(a).collect::<Vec<_>>() {
                for z in 0..n {
                    next.set(sg.mul(a, z), sg.mul(b, z), true);
                    next.set(sg.mul(z, a), sg.mul(z, b), true);
                }
            }
        }
        let next = next.transitive_closure();
        if next == r {
            return r;
        }
        r = next;
    }
}

#[derive(Debug, Clone)]
pub struct Factorization {
    pub base: BitMatrix,
    /// Distinct π-relations induced by one added inclusion each.
    pub induced: Vec<PiRelation>,
    /// Indices into `induced`.
    pub atoms: Vec<usize>,
    /// Per atom, maximal induced relations meeting it in the base order.
    pub meet_complements: Vec<Vec<usize>>,
}

impl Factorization {
    /// Per atom, its meet-complements with the fewest classes, deduplicated
    /// across atoms in atom order.
    pub fn mca(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for mcs in &self.meet_complements {
            let Some(fewest) = mcs.iter().map(|&m| self.induced[m].partition.classes()).min() else {
                continue;
            };
            for &m in mcs {
                if self.induced[m].partition.classes() == fewest && !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Every maximal meet-complement, deduplicated in atom order.
    pub fn all_meet_complements(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &m in self.meet_complements.iter().flatten() {
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out
    }
}

pub fn factorize(sg: &Semigroup, po: &Poset) -> Result<Factorization> {
    if po.labels != sg.labels {
        return Err(Error::DimensionMismatch("poset labels differ from the semigroup elements".into()));
    }
    po.validate()?;
    let base = po.matrix.clone();
    if pi_closure(sg, &base) != base {
        return Err(Error::InvalidArgument("order is not compatible with the multiplication".into()));
    }
    let n = sg.order();
    let mut induced: Vec<PiRelation> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if base.get(x, y) {
                continue;
            }
            let mut r = base.clone();
            r.set(x, y, true);
            let r = pi_closure(sg, &r);
            if !induced.iter().any(|p| p.relation == r) {
                induced.push(PiRelation::new(r, Some((x, y))));
            }
        }
    }
    let strictly_below = |a: &BitMatrix, b: &BitMatrix| a != b && a.is_subset(b);
    let atoms: Vec<usize> = (0..induced.len())
        .filter(|&a| !induced.iter().any(|b| strictly_below(&b.relation, &induced[a].relation)))
        .collect();
    let meet_complements = atoms
        .iter()
        .map(|&a| {
            let comps: Vec<usize> = (0..induced.len())
                .filter(|&m| induced[a].relation.intersection(&induced[m].relation) == base)
                .collect();
            comps
                .iter()
                .copied()
                .filter(|&m| !comps.iter().any(|&o| strictly_below(&induced[m].relation, &induced[o].relation)))
                .collect()
        })
        .collect();
    Ok(Factorization { base, induced, atoms, meet_complements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quotient {
    /// 1-based class per element.
    pub vector: Vec<usize>,
    /// First member's label per class.
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    /// Induced order on classes, when the part carries one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vec<bool>>>,
}

impl Quotient {
    pub fn semigroup(&self) -> Semigroup {
        Semigroup { labels: self.labels.clone(), table: self.table.clone(), gens: Vec::new() }
    }
}

pub fn quotient(sg: &Semigroup, p: &Partition, relation: Option<&BitMatrix>) -> Result<Quotient> {
    if p.len() != sg.order() {
        return Err(Error::DimensionMismatch("partition size differs from the semigroup order".into()));
    }
    let members = p.members();
    let k = members.len();
    let mut table = vec![vec![0; k]; k];
    for (i, mi) in members.iter().enumerate() {
        for (j, mj) in members.iter().enumerate() {
            let c = p.class_of(sg.mul(mi[0], mj[0]));
            for &a in mi {
                for &b in mj {
                    if p.class_of(sg.mul(a, b)) != c {
                        return Err(Error::NotACongruence(format!(
                            "{}·{} and {}·{} fall in different classes",
                            sg.labels[mi[0]], sg.labels[mj[0]], sg.labels[a], sg.labels[b]
                        )));
                    }
                }
            }
            table[i][j] = c;
        }
    }
    let order = relation.map(|r| {
        members.iter().map(|mi| members.iter().map(|mj| r.get(mi[0], mj[0])).collect()).collect()
    });
    Ok(Quotient {
        vector: p.vector(),
        labels: members.iter().map(|m| sg.labels[m[0]].clone()).collect(),
        table,
        order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompMode {
    /// Congruence lattice of the abstract semigroup.
    Cc,
    /// Atoms of the π-relations.
    Atoms,
    /// Meet-complements of the atoms.
    Mca,
}

impl DecompMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "cc" => Ok(DecompMode::Cc),
            "atoms" => Ok(DecompMode::Atoms),
            "mca" => Ok(DecompMode::Mca),
            other => Err(Error::InvalidArgument(format!("unknown decomposition mode `{other}`"))),
        }
    }
}

pub fn decompose(sg: &Semigroup, po: Option<&Poset>, mode: DecompMode, cap: usize) -> Result<Vec<Quotient>> {
    match mode {
        DecompMode::Cc => find_congruences(sg, true, cap)?.iter().map(|c| quotient(sg, c, None)).collect(),
        DecompMode::Atoms | DecompMode::Mca => {
            let po = po.ok_or_else(|| Error::InvalidArgument("this mode needs a partial order".into()))?;
            let f = factorize(sg, po)?;
            let picked = if mode == DecompMode::Atoms { f.atoms.clone() } else { f.mca() };
            picked
                .iter()
                .map(|&i| quotient(sg, &f.induced[i].partition, Some(&f.induced[i].relation)))
                .collect()
        }
    }
}

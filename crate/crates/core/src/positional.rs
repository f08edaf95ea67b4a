//! Relation-Box, person hierarchies, the cumulated person hierarchy and
//! reduction to a positional system.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::netcore::{ActorSet, MultiplexNetwork, RelationMatrix};
use crate::order::Poset;
use crate::semigroup::Alphabet;

pub const DEFAULT_K: usize = 3;

/// One slice per word of length 1..=k, images not deduplicated.
#[derive(Debug, Clone)]
pub struct RelationBox {
    pub actors: Arc<ActorSet>,
    pub words: Vec<String>,
    pub slices: Vec<BitMatrix>,
}

impl RelationBox {
    pub fn n(&self) -> usize {
        self.actors.len()
    }

    pub fn depth(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, word: &str) -> Option<&BitMatrix> {
        self.words.iter().position(|w| w == word).map(|i| &self.slices[i])
    }

    /// Ego's plane: `plane[s][a]` is the tie from ego to `a` in slice `s`.
    pub fn plane(&self, ego: usize) -> BitMatrix {
        let mut p = BitMatrix::new(self.depth(), self.n());
        for (s, m) in self.slices.iter().enumerate() {
            for a in m.row_ones(ego) {
                p.set(s, a, true);
            }
        }
        p
    }
}

pub fn build_relation_box(net: &MultiplexNetwork, k: usize, include_transposes: bool) -> Result<RelationBox> {
    if k == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    let alphabet = Alphabet::of(net, include_transposes);
    let mut words = Vec::new();
    let mut slices: Vec<BitMatrix> = Vec::new();
    let mut prefix: HashMap<Vec<usize>, usize> = HashMap::new();
    for w in alphabet.words_up_to(k) {
        let m = if w.len() == 1 {
            alphabet.matrices[w[0]].clone()
        } else {
            slices[prefix[&w[..w.len() - 1]]].compose(&alphabet.matrices[w[w.len() - 1]])
        };
        words.push(alphabet.spell(&w));
        slices.push(m);
        if w.len() < k {
            prefix.insert(w, slices.len() - 1);
        }
    }
    Ok(RelationBox { actors: net.actors().clone(), words, slices })
}

/// Alter j is below alter l for `ego` iff the strings linking ego to j
/// form a nonempty subset of those linking ego to l.
pub fn person_hierarchy(rbox: &RelationBox, ego: &str) -> Result<Poset> {
    let e = rbox.actors.require(ego)?;
    Ok(Poset { labels: rbox.actors.labels().to_vec(), matrix: person_matrix(rbox, e) })
}

fn person_matrix(rbox: &RelationBox, ego: usize) -> BitMatrix {
    let n = rbox.n();
    let profiles = rbox.plane(ego).transpose();
    let mut m = BitMatrix::identity(n);
    for j in 0..n {
        if profiles.row_is_zero(j) {
            continue;
        }
        for l in 0..n {
            if j != l && profiles.row_subset(j, &profiles, l) {
                m.set(j, l, true);
            }
        }
    }
    m.transitive_closure()
}

#[derive(Debug, Clone)]
pub struct CumulatedHierarchy {
    pub poset: Poset,
    /// Distinct actors related both ways.
    pub equal_pairs: Vec<(String, String)>,
}

impl CumulatedHierarchy {
    fn from_matrix(labels: Vec<String>, m: BitMatrix) -> Self {
        let poset = Poset { labels, matrix: m.transitive_closure().with_diagonal() };
        let equal_pairs = poset
            .antisymmetry_violations()
            .into_iter()
            .map(|(i, j)| (poset.labels[i].clone(), poset.labels[j].clone()))
            .collect();
        CumulatedHierarchy { poset, equal_pairs }
    }
}

/// Union of all person hierarchies, transitively closed.
pub fn cumulated_hierarchy(rbox: &RelationBox) -> CumulatedHierarchy {
    let n = rbox.n();
    let acc = (0..n).fold(BitMatrix::identity(n), |acc, e| acc.union(&person_matrix(rbox, e)));
    CumulatedHierarchy::from_matrix(rbox.actors.labels().to_vec(), acc)
}

/// Whole-plane inclusion: i below j iff every set cell of plane(i) is set
/// in plane(j). Kept as an alternative reading of the hierarchy.
pub fn plane_inclusion_hierarchy(rbox: &RelationBox) -> CumulatedHierarchy {
    let n = rbox.n();
    let planes: Vec<BitMatrix> = (0..n).map(|i| rbox.plane(i)).collect();
    let mut m = BitMatrix::square(n);
    for i in 0..n {
        for j in 0..n {
            if planes[i].is_subset(&planes[j]) {
                m.set(i, j, true);
            }
        }
    }
    CumulatedHierarchy::from_matrix(rbox.actors.labels().to_vec(), m)
}

#[derive(Debug, Clone)]
pub struct PositionalSystem {
    pub classes: BTreeMap<String, i64>,
    /// Image matrices over class ids, ordered by first appearance among actors.
    pub images: MultiplexNetwork,
}

/// Existential block rule: image(I, J) is set iff some tie runs from I to J.
pub fn reduce_network(net: &MultiplexNetwork, clustering: &BTreeMap<String, i64>) -> Result<PositionalSystem> {
    let mut order: Vec<i64> = Vec::new();
    let mut class_of = Vec::with_capacity(net.n());
    for l in net.actors().labels() {
        let c = *clustering.get(l).ok_or_else(|| Error::MissingClass(l.clone()))?;
        let pos = match order.iter().position(|&x| x == c) {
            Some(p) => p,
            None => {
                order.push(c);
                order.len() - 1
            }
        };
        class_of.push(pos);
    }
    let actors = Arc::new(ActorSet::new(order.iter().map(|c| c.to_string()))?);
    let m = order.len();
    let slices = net
        .slices()
        .iter()
        .map(|s| {
            let mut img = BitMatrix::square(m);
            for i in 0..net.n() {
                for j in s.cells.row_ones(i) {
                    img.set(class_of[i], class_of[j], true);
                }
            }
            RelationMatrix::from_cells(s.name.clone(), actors.clone(), img)
        })
        .collect::<Result<Vec<_>>>()?;
    let classes = net.actors().labels().iter().map(|l| (l.clone(), clustering[l])).collect();
    Ok(PositionalSystem { classes, images: MultiplexNetwork::new(actors, slices)? })
}

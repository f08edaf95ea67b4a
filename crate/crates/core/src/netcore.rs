//! Labeled boolean relations and multiplex stacks over one actor set.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActorSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl ActorSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateActor(l.clone()));
            }
        }
        Ok(ActorSet { labels, index })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::UnknownActor(label.to_string()))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

fn same_actors(a: &Arc<ActorSet>, b: &Arc<ActorSet>) -> bool {
    Arc::ptr_eq(a, b) || a.labels == b.labels
}

#[derive(Debug, Clone)]
pub struct RelationMatrix {
    pub name: String,
    pub actors: Arc<ActorSet>,
    pub cells: BitMatrix,
}

impl PartialEq for RelationMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && same_actors(&self.actors, &other.actors) && self.cells == other.cells
    }
}

impl RelationMatrix {
    pub fn empty(name: impl Into<String>, actors: Arc<ActorSet>) -> Self {
        let n = actors.len();
        RelationMatrix { name: name.into(), actors, cells: BitMatrix::square(n) }
    }

    pub fn from_cells(name: impl Into<String>, actors: Arc<ActorSet>, cells: BitMatrix) -> Result<Self> {
        if !cells.is_square() || cells.rows() != actors.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} cells for {} actors",
                cells.rows(),
                cells.cols(),
                actors.len()
            )));
        }
        Ok(RelationMatrix { name: name.into(), actors, cells })
    }

    pub fn from_ties<'a>(
        name: impl Into<String>,
        actors: Arc<ActorSet>,
        ties: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut m = Self::empty(name, actors);
        for (a, b) in ties {
            let i = m.actors.require(a)?;
            let j = m.actors.require(b)?;
            m.cells.set(i, j, true);
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.actors.len()
    }

    pub fn has_tie(&self, from: &str, to: &str) -> bool {
        match (self.actors.position(from), self.actors.position(to)) {
            (Some(i), Some(j)) => self.cells.get(i, j),
            _ => false,
        }
    }

    /// Ties as label pairs, row-major in actor order.
    pub fn ties(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.cells.row_ones(i) {
                out.push((self.actors.label(i).to_string(), self.actors.label(j).to_string()));
            }
        }
        out
    }
}

/// `a` first, then `b`.
pub fn compose(a: &RelationMatrix, b: &RelationMatrix) -> Result<RelationMatrix> {
    if !same_actors(&a.actors, &b.actors) {
        return Err(Error::DimensionMismatch(format!("cannot compose `{}` with `{}`", a.name, b.name)));
    }
    Ok(RelationMatrix {
        name: format!("{}{}", a.name, b.name),
        actors: a.actors.clone(),
        cells: a.cells.compose(&b.cells),
    })
}

pub fn transpose(a: &RelationMatrix) -> RelationMatrix {
    RelationMatrix { name: format!("t{}", a.name), actors: a.actors.clone(), cells: a.cells.transpose() }
}

#[derive(Debug, Clone)]
pub struct MultiplexNetwork {
    actors: Arc<ActorSet>,
    slices: Vec<RelationMatrix>,
}

impl MultiplexNetwork {
    pub fn new(actors: Arc<ActorSet>, slices: Vec<RelationMatrix>) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::NoRelations);
        }
        let mut seen = std::collections::HashSet::new();
        for s in &slices {
            if !same_actors(&actors, &s.actors) {
                return Err(Error::DimensionMismatch(format!("slice `{}` uses another actor set", s.name)));
            }
            if !seen.insert(s.name.clone()) {
                return Err(Error::DuplicateRelation(s.name.clone()));
            }
        }
        Ok(MultiplexNetwork { actors, slices })
    }

    /// Build from label pairs per named relation.
    pub fn from_ties(actors: &[&str], relations: &[(&str, &[(&str, &str)])]) -> Result<Self> {
        let set = Arc::new(ActorSet::new(actors.iter().copied())?);
        let slices = relations
            .iter()
            .map(|(name, ties)| RelationMatrix::from_ties(*name, set.clone(), ties.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(set, slices)
    }

    pub fn actors(&self) -> &Arc<ActorSet> {
        &self.actors
    }

    pub fn slices(&self) -> &[RelationMatrix] {
        &self.slices
    }

    pub fn n(&self) -> usize {
        self.actors.len()
    }

    pub fn r(&self) -> usize {
        self.slices.len()
    }

    pub fn slice(&self, name: &str) -> Result<&RelationMatrix> {
        self.slices.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownRelation(name.to_string()))
    }

    pub fn slice_names(&self) -> Vec<String> {
        self.slices.iter().map(|s| s.name.clone()).collect()
    }

    /// Union of all slices.
    pub fn union(&self) -> BitMatrix {
        self.slices.iter().fold(BitMatrix::square(self.n()), |acc, s| acc.union(&s.cells))
    }

    /// Induced sub-tensor on the given actor indices, in the given order.
    fn induced(&self, idx: &[usize]) -> MultiplexNetwork {
        let labels: Vec<String> = idx.iter().map(|&i| self.actors.label(i).to_string()).collect();
        let actors = Arc::new(ActorSet::new(labels).expect("labels already unique"));
        let slices = self
            .slices
            .iter()
            .map(|s| RelationMatrix { name: s.name.clone(), actors: actors.clone(), cells: s.cells.select(idx) })
            .collect();
        MultiplexNetwork { actors, slices }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub components: Vec<Vec<String>>,
    pub isolates: Vec<String>,
}

/// Weak components of the union graph; members listed in actor order.
pub fn components(net: &MultiplexNetwork) -> Components {
    let n = net.n();
    let u = net.union();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in u.row_ones(i) {
            if i != j {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut out = Components { components: Vec::new(), isolates: Vec::new() };
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        if adj[start].is_empty() {
            comp[start] = usize::MAX - 1;
            out.isolates.push(net.actors.label(start).to_string());
            continue;
        }
        let id = out.components.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.components.push(members.into_iter().map(|i| net.actors.label(i).to_string()).collect());
    }
    out
}

/// Actors whose only ties are self-ties count as isolates too.
pub fn remove_isolates(net: &MultiplexNetwork) -> MultiplexNetwork {
    let u = net.union();
    let keep: Vec<usize> = (0..net.n())
        .filter(|&i| (0..net.n()).any(|j| i != j && (u.get(i, j) || u.get(j, i))))
        .collect();
    net.induced(&keep)
}

/// Induced sub-network; actors keep their original relative order.
pub fn select_subnetwork<S: AsRef<str>>(net: &MultiplexNetwork, labels: &[S]) -> Result<MultiplexNetwork> {
    let mut idx = labels.iter().map(|l| net.actors.require(l.as_ref())).collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    Ok(net.induced(&idx))
}

/// Order of labels by ascending class id, stable within a class.
pub fn permutation_order<S: AsRef<str>>(labels: &[S], clustering: &BTreeMap<String, i64>) -> Result<Vec<usize>> {
    let mut keyed = Vec::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        let c = clustering.get(l.as_ref()).ok_or_else(|| Error::MissingClass(l.as_ref().to_string()))?;
        keyed.push((*c, i));
    }
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, i)| i).collect())
}

/// Reorder rows and columns of a labeled square matrix by class.
pub fn permute<S: AsRef<str>>(
    labels: &[S],
    cells: &BitMatrix,
    clustering: &BTreeMap<String, i64>,
) -> Result<(Vec<String>, BitMatrix)> {
    if cells.rows() != labels.len() || !cells.is_square() {
        return Err(Error::DimensionMismatch("labels do not match matrix size".into()));
    }
    let order = permutation_order(labels, clustering)?;
    let new_labels = order.iter().map(|&i| labels[i].as_ref().to_string()).collect();
    Ok((new_labels, cells.select(&order)))
}

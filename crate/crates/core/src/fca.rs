//! Formal contexts, their concept lattice and reduced labelling.

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::order::Poset;

/// Objects as rows, attributes as columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: BitMatrix,
}

impl FormalContext {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, incidence: BitMatrix) -> Result<Self> {
        if incidence.rows() != objects.len() || incidence.cols() != attributes.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} incidence for {} objects and {} attributes",
                incidence.rows(),
                incidence.cols(),
                objects.len(),
                attributes.len()
            )));
        }
        for (kind, names) in [("object", &objects), ("attribute", &attributes)] {
            for (i, a) in names.iter().enumerate() {
                if names[..i].contains(a) {
                    return Err(Error::Parse(format!("duplicate {kind} `{a}`")));
                }
            }
        }
        Ok(FormalContext { objects, attributes, incidence })
    }

    /// Attributes shared by every object in `objs`.
    pub fn intent_of(&self, objs: &[usize]) -> Vec<usize> {
        (0..self.attributes.len()).filter(|&m| objs.iter().all(|&g| self.incidence.get(g, m))).collect()
    }

    /// Objects having every attribute in `attrs`.
    pub fn extent_of(&self, attrs: &[usize]) -> Vec<usize> {
        (0..self.objects.len()).filter(|&g| attrs.iter().all(|&m| self.incidence.get(g, m))).collect()
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn attribute(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Concept {
    pub extent: Vec<usize>,
    pub intent: Vec<usize>,
    /// Attributes whose extent is exactly this one.
    pub attribute_labels: Vec<usize>,
    /// Objects whose closure is exactly this extent.
    pub object_labels: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ConceptLattice {
    pub context: FormalContext,
    pub concepts: Vec<Concept>,
    pub order: Poset,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Attribute extents first, then their intersections as they turn up,
/// then the full object set.
fn extents(ctx: &FormalContext) -> Vec<Vec<usize>> {
    let mut list: Vec<Vec<usize>> = Vec::new();
    for m in 0..ctx.attributes.len() {
        let e = ctx.extent_of(&[m]);
        if !list.contains(&e) {
            list.push(e);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let mut j = i + 1;
        while j < list.len() {
            let e = intersect(&list[i], &list[j]);
            if !list.contains(&e) {
                list.push(e);
            }
            j += 1;
        }
        i += 1;
    }
    let all: Vec<usize> = (0..ctx.objects.len()).collect();
    if !list.contains(&all) {
        list.push(all);
    }
    list
}

pub fn concept_lattice(ctx: &FormalContext) -> ConceptLattice {
    let found = extents(ctx);
    let attr_extents: Vec<Vec<usize>> = (0..ctx.attributes.len()).map(|m| ctx.extent_of(&[m])).collect();
    let obj_closures: Vec<Vec<usize>> =
        (0..ctx.objects.len()).map(|g| ctx.extent_of(&ctx.intent_of(&[g]))).collect();
    let concepts: Vec<Concept> = found
        .into_iter()
        .map(|extent| Concept {
            intent: ctx.intent_of(&extent),
            attribute_labels: (0..ctx.attributes.len()).filter(|&m| attr_extents[m] == extent).collect(),
            object_labels: (0..ctx.objects.len()).filter(|&g| obj_closures[g] == extent).collect(),
            extent,
        })
        .collect();
    let n = concepts.len();
    let mut m = BitMatrix::square(n);
    for i in 0..n {
        for j in 0..n {
            if is_subset(&concepts[i].extent, &concepts[j].extent) {
                m.set(i, j, true);
            }
        }
    }
    let labels = (1..=n).map(|i| format!("c{i}")).collect();
    ConceptLattice { context: ctx.clone(), concepts, order: Poset { labels, matrix: m } }
}

impl ConceptLattice {
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    /// `{attrs} {objs}`, or the 1-based index when the concept carries no label.
    pub fn reduced_label(&self, i: usize) -> String {
        let c = &self.concepts[i];
        if c.attribute_labels.is_empty() && c.object_labels.is_empty() {
            return (i + 1).to_string();
        }
        let names = |idx: &[usize], pool: &[String]| idx.iter().map(|&k| pool[k].as_str()).collect::<Vec<_>>().join(", ");
        format!(
            "{{{}}} {{{}}}",
            names(&c.attribute_labels, &self.context.attributes),
            names(&c.object_labels, &self.context.objects)
        )
    }

    /// A 1-based index, optionally prefixed with `c`, or an attribute or
    /// object name appearing in a reduced label.
    pub fn resolve(&self, selector: &str) -> Result<usize> {
        let digits = selector.strip_prefix('c').unwrap_or(selector);
        if let Ok(k) = digits.parse::<usize>() {
            if (1..=self.len()).contains(&k) {
                return Ok(k - 1);
            }
            return Err(Error::NoMatch(selector.to_string()));
        }
        let mut hits: Vec<usize> = Vec::new();
        if let Some(m) = self.context.attribute(selector) {
            hits.extend((0..self.len()).filter(|&i| self.concepts[i].attribute_labels.contains(&m)));
        }
        if let Some(g) = self.context.object(selector) {
            hits.extend((0..self.len()).filter(|&i| self.concepts[i].object_labels.contains(&g)));
        }
        hits.sort_unstable();
        hits.dedup();
        match hits.len() {
            0 => Err(Error::NoMatch(selector.to_string())),
            1 => Ok(hits[0]),
            _ => Err(Error::AmbiguousMatch(selector.to_string(), hits.iter().map(|i| i + 1).collect())),
        }
    }

    /// Union of up-sets (`ideal == false`) or down-sets of the selected concepts.
    pub fn filter_ideal<S: AsRef<str>>(&self, selectors: &[S], ideal: bool) -> Result<Vec<usize>> {
        let mut keep = vec![false; self.len()];
        for s in selectors {
            let i = self.resolve(s.as_ref())?;
            let part = if ideal { self.order.downset(i) } else { self.order.upset(i) };
            for j in part {
                keep[j] = true;
            }
        }
        Ok((0..self.len()).filter(|&i| keep[i]).collect())
    }
}

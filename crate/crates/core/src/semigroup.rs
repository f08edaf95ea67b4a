//! Closure of relations under composition, multiplication tables, equations
//! and the containment order of strings.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::netcore::{ActorSet, MultiplexNetwork, RelationMatrix};
use crate::order::{render_table, Poset};

pub const DEFAULT_MAX_ELEMENTS: usize = 100_000;

/// Generator names and matrices in lexicographic position: plain slices,
/// then their transposes.
#[derive(Debug, Clone)]
pub struct Alphabet {
    pub names: Vec<String>,
    pub matrices: Vec<BitMatrix>,
}

impl Alphabet {
    pub fn of(net: &MultiplexNetwork, include_transposes: bool) -> Self {
        let mut names: Vec<String> = net.slice_names();
        let mut matrices: Vec<BitMatrix> = net.slices().iter().map(|s| s.cells.clone()).collect();
        if include_transposes {
            for s in net.slices() {
                names.push(format!("t{}", s.name));
                matrices.push(s.cells.transpose());
            }
        }
        Alphabet { names, matrices }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn spell(&self, word: &[usize]) -> String {
        word.iter().map(|&l| self.names[l].as_str()).collect()
    }

    /// Image of a nonempty word, composed left to right.
    pub fn image(&self, word: &[usize]) -> BitMatrix {
        let mut m = self.matrices[word[0]].clone();
        for &l in &word[1..] {
            m = m.compose(&self.matrices[l]);
        }
        m
    }

    /// All words of length 1..=k, by length then letter position.
    pub fn words_up_to(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = (0..self.len()).map(|l| vec![l]).collect();
        for len in 1..=k {
            out.extend(layer.iter().cloned());
            if len == k {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..self.len()).map(move |l| {
                        let mut x = w.clone();
                        x.push(l);
                        x
                    })
                })
                .collect();
        }
        out
    }
}

/// Distinct string relations with their representative words.
#[derive(Debug, Clone)]
pub struct StringSet {
    pub actors: Arc<ActorSet>,
    pub alphabet: Alphabet,
    pub words: Vec<Vec<usize>>,
    pub tables: Vec<BitMatrix>,
}

impl StringSet {
    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn st(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.spell(w)).collect()
    }

    pub fn position(&self, m: &BitMatrix) -> Option<usize> {
        self.tables.iter().position(|t| t == m)
    }

    pub fn word_table(&self, i: usize) -> RelationMatrix {
        RelationMatrix {
            name: self.alphabet.spell(&self.words[i]),
            actors: self.actors.clone(),
            cells: self.tables[i].clone(),
        }
    }
}

/// Breadth-first closure under right multiplication by generators. A word
/// is kept iff its image is new, so each representative is the
/// lexicographically first of the shortest words with that image.
pub fn generate_strings(net: &MultiplexNetwork, include_transposes: bool, max_elements: usize) -> Result<StringSet> {
    let alphabet = Alphabet::of(net, include_transposes);
    let mut acc = Accumulator { seen: HashMap::new(), words: Vec::new(), tables: Vec::new(), cap: max_elements };
    let mut frontier: Vec<usize> = Vec::new();
    for (l, m) in alphabet.matrices.iter().enumerate() {
        frontier.extend(acc.admit(vec![l], m.clone())?);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for (l, g) in alphabet.matrices.iter().enumerate() {
                let m = acc.tables[i].compose(g);
                if acc.seen.contains_key(&m) {
                    continue;
                }
                let mut w = acc.words[i].clone();
                w.push(l);
                next.extend(acc.admit(w, m)?);
            }
        }
        frontier = next;
    }
    Ok(StringSet { actors: net.actors().clone(), alphabet, words: acc.words, tables: acc.tables })
}

struct Accumulator {
    seen: HashMap<BitMatrix, usize>,
    words: Vec<Vec<usize>>,
    tables: Vec<BitMatrix>,
    cap: usize,
}

impl Accumulator {
    fn admit(&mut self, word: Vec<usize>, m: BitMatrix) -> Result<Option<usize>> {
        if self.seen.contains_key(&m) {
            return Ok(None);
        }
        if self.words.len() >= self.cap {
            return Err(Error::ClosureTooLarge { cap: self.cap, count: self.words.len() });
        }
        let i = self.words.len();
        self.seen.insert(m.clone(), i);
        self.words.push(word);
        self.tables.push(m);
        Ok(Some(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Numerical,
    Symbolic,
}

/// Abstract semigroup: element labels and `table[x][y]` = index of x·y.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Semigroup {
    #[serde(rename = "st")]
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    /// Generator name and its element index.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gens: Vec<(String, usize)>,
}

impl Semigroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, gens: Vec<(String, usize)>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("table is not {n}x{n}")));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidArgument("table entry outside the element set".into()));
        }
        if gens.iter().any(|(_, g)| *g >= n) {
            return Err(Error::InvalidArgument("generator outside the element set".into()));
        }
        Ok(Semigroup { labels, table, gens })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Generators as given, or else elements whose label is not the
    /// concatenation of two earlier labels.
    pub fn generators(&self) -> Vec<(String, usize)> {
        if !self.gens.is_empty() {
            return self.gens.clone();
        }
        let mut out = Vec::new();
        for (i, l) in self.labels.iter().enumerate() {
            let split = (1..l.len()).any(|c| {
                l.is_char_boundary(c)
                    && self.labels[..i].iter().any(|a| a == &l[..c])
                    && self.labels[..i].iter().any(|b| b == &l[c..])
            });
            if !split {
                out.push((l.clone(), i));
            }
        }
        out
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Numerical => {
                let heads: Vec<String> = (1..=self.order()).map(|i| i.to_string()).collect();
                render_table(&heads, &heads, |i, j| (self.table[i][j] + 1).to_string())
            }
            TableFormat::Symbolic => {
                render_table(&self.labels, &self.labels, |i, j| self.labels[self.table[i][j]].clone())
            }
        }
    }
}

pub fn build_semigroup(strings: &StringSet) -> Result<Semigroup> {
    let index: HashMap<&BitMatrix, usize> = strings.tables.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = strings.order();
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let p = strings.tables[x].compose(&strings.tables[y]);
            table[x][y] = *index
                .get(&p)
                .ok_or_else(|| Error::Internal(format!("product of elements {} and {} is not in the string set", x + 1, y + 1)))?;
        }
    }
    let gens = strings
        .alphabet
        .names
        .iter()
        .zip(&strings.alphabet.matrices)
        .map(|(name, m)| (name.clone(), index[m]))
        .collect();
    Semigroup::new(strings.st(), table, gens)
}

/// Multi-member classes of equal-image words, keyed by their first word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationClasses {
    pub classes: Vec<(String, Vec<String>)>,
}

impl EquationClasses {
    pub fn get(&self, key: &str) -> Option<&[String]> {
        self.classes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_slice())
    }
}

pub fn equations(net: &MultiplexNetwork, k: usize, include_transposes: bool) -> Result<EquationClasses> {
    if k == 0 {
        return Err(Error::InvalidArgument("word length must be at least 1".into()));
    }
    let alphabet = Alphabet::of(net, include_transposes);
    let mut by_image: HashMap<BitMatrix, usize> = HashMap::new();
    let mut groups: Vec<Vec<String>> = Vec::new();
    // images of prefixes are reused: words come in length order
    let mut images: HashMap<Vec<usize>, BitMatrix> = HashMap::new();
    for w in alphabet.words_up_to(k) {
        let m = if w.len() == 1 {
            alphabet.matrices[w[0]].clone()
        } else {
            images[&w[..w.len() - 1]].compose(&alphabet.matrices[w[w.len() - 1]])
        };
        let g = *by_image.entry(m.clone()).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(alphabet.spell(&w));
        if w.len() < k {
            images.insert(w, m);
        }
    }
    let classes = groups.into_iter().filter(|g| g.len() > 1).map(|g| (g[0].clone(), g)).collect();
    Ok(EquationClasses { classes })
}

/// Containment order of the string relations, labeled by representatives.
pub fn string_partial_order(strings: &StringSet) -> Poset {
    let n = strings.order();
    let mut m = BitMatrix::square(n);
    for i in 0..n {
        for j in 0..n {
            if strings.tables[i].is_subset(&strings.tables[j]) {
                m.set(i, j, true);
            }
        }
    }
    Poset { labels: strings.st(), matrix: m }
}

//! Dyadic bundle classes, the bundle census and bond-filtered systems.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::BitMatrix;
use crate::netcore::{ActorSet, MultiplexNetwork, RelationMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BundleClass {
    Null,
    Asymmetric,
    Reciprocal,
    TieEntrainment,
    TieExchange,
    Mixed,
    Full,
}

impl BundleClass {
    pub const ALL: [BundleClass; 7] = [
        BundleClass::Null,
        BundleClass::Asymmetric,
        BundleClass::Reciprocal,
        BundleClass::TieEntrainment,
        BundleClass::TieExchange,
        BundleClass::Mixed,
        BundleClass::Full,
    ];

    pub fn header(self) -> &'static str {
        match self {
            BundleClass::Null => "NULL",
            BundleClass::Asymmetric => "ASYMM",
            BundleClass::Reciprocal => "RECIP",
            BundleClass::TieEntrainment => "T.ENTR",
            BundleClass::TieExchange => "T.EXCH",
            BundleClass::Mixed => "MIXED",
            BundleClass::Full => "FULL",
        }
    }

    pub fn is_strong(self) -> bool {
        matches!(self, BundleClass::Reciprocal | BundleClass::TieExchange | BundleClass::Mixed | BundleClass::Full)
    }

    pub fn is_weak(self) -> bool {
        matches!(self, BundleClass::Asymmetric | BundleClass::TieEntrainment)
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadPattern {
    pub i: usize,
    pub j: usize,
    /// Slice indices with a tie i -> j.
    pub forward: BTreeSet<usize>,
    /// Slice indices with a tie j -> i.
    pub backward: BTreeSet<usize>,
}

impl DyadPattern {
    pub fn of(net: &MultiplexNetwork, i: usize, j: usize) -> Self {
        let mut p = DyadPattern { i, j, forward: BTreeSet::new(), backward: BTreeSet::new() };
        for (s, rel) in net.slices().iter().enumerate() {
            if rel.cells.get(i, j) {
                p.forward.insert(s);
            }
            if rel.cells.get(j, i) {
                p.backward.insert(s);
            }
        }
        p
    }

    pub fn swapped(&self) -> Self {
        DyadPattern { i: self.j, j: self.i, forward: self.backward.clone(), backward: self.forward.clone() }
    }
}

/// `r` is the number of slices in the network the pattern came from.
pub fn classify_dyad(p: &DyadPattern, r: usize) -> BundleClass {
    let (f, b) = (&p.forward, &p.backward);
    match (f.len(), b.len()) {
        (0, 0) => BundleClass::Null,
        (1, 0) | (0, 1) => BundleClass::Asymmetric,
        (_, 0) | (0, _) => BundleClass::TieEntrainment,
        (1, 1) if f == b => BundleClass::Reciprocal,
        _ if f.is_disjoint(b) => BundleClass::TieExchange,
        (x, y) if x == r && y == r => BundleClass::Full,
        _ => BundleClass::Mixed,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleCensus {
    pub n: usize,
    counts: [usize; 7],
}

impl BundleCensus {
    /// Census from explicit strong/weak totals; remaining dyads are null.
    /// Strong bonds are booked as reciprocal and weak bonds as asymmetric.
    pub fn from_bond_counts(n: usize, strong: usize, weak: usize) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        if strong + weak > pairs {
            return Err(Error::InvalidArgument(format!("{} bonds exceed {} dyads", strong + weak, pairs)));
        }
        let mut counts = [0; 7];
        counts[BundleClass::Null.index()] = pairs - strong - weak;
        counts[BundleClass::Reciprocal.index()] = strong;
        counts[BundleClass::Asymmetric.index()] = weak;
        Ok(BundleCensus { n, counts })
    }

    /// Counts in `BundleClass::ALL` order; they must cover every dyad.
    pub fn from_counts(n: usize, counts: [usize; 7]) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        let sum: usize = counts.iter().sum();
        if sum != pairs {
            return Err(Error::InvalidArgument(format!("counts sum to {sum}, expected {pairs} dyads")));
        }
        Ok(BundleCensus { n, counts })
    }

    pub fn count(&self, class: BundleClass) -> usize {
        self.counts[class.index()]
    }

    /// Non-null dyads.
    pub fn total(&self) -> usize {
        self.counts.iter().sum::<usize>() - self.count(BundleClass::Null)
    }

    pub fn strong(&self) -> usize {
        BundleClass::ALL.iter().filter(|c| c.is_strong()).map(|&c| self.count(c)).sum()
    }

    pub fn weak(&self) -> usize {
        BundleClass::ALL.iter().filter(|c| c.is_weak()).map(|&c| self.count(c)).sum()
    }

    pub fn null(&self) -> usize {
        self.count(BundleClass::Null)
    }

    pub fn dyads(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for BundleCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut head = vec!["BUNDLES".to_string()];
        let mut vals = vec![self.total().to_string()];
        for c in BundleClass::ALL {
            head.push(c.header().to_string());
            vals.push(self.count(c).to_string());
        }
        let widths: Vec<usize> = head.iter().zip(&vals).map(|(h, v)| h.len().max(v.len())).collect();
        write!(f, "     ")?;
        for (h, w) in head.iter().zip(&widths) {
            write!(f, " {h:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "TOTAL")?;
        for (v, w) in vals.iter().zip(&widths) {
            write!(f, " {v:>w$}")?;
        }
        writeln!(f)
    }
}

/// Self-ties are ignored.
pub fn bundle_census(net: &MultiplexNetwork) -> BundleCensus {
    let n = net.n();
    let mut counts = [0; 7];
    for i in 0..n {
        for j in i + 1..n {
            counts[classify_dyad(&DyadPattern::of(net, i, j), net.r()).index()] += 1;
        }
    }
    BundleCensus { n, counts }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bond {
    Recp,
    Asym,
    Tent,
    Txch,
    Mixd,
    Full,
    Strong,
    Weak,
}

impl Bond {
    pub fn parse(s: &str) -> Result<Bond> {
        Ok(match s.trim() {
            "recp" => Bond::Recp,
            "asym" => Bond::Asym,
            "tent" => Bond::Tent,
            "txch" => Bond::Txch,
            "mixd" => Bond::Mixd,
            "full" => Bond::Full,
            "strong" => Bond::Strong,
            "weak" => Bond::Weak,
            other => return Err(Error::InvalidArgument(format!("unknown bond selector `{other}`"))),
        })
    }

    fn classes(self) -> &'static [BundleClass] {
        use BundleClass::*;
        match self {
            Bond::Recp => &[Reciprocal],
            Bond::Asym => &[Asymmetric],
            Bond::Tent => &[TieEntrainment],
            Bond::Txch => &[TieExchange],
            Bond::Mixd => &[Mixed],
            Bond::Full => &[Full],
            Bond::Strong => &[Reciprocal, TieExchange, Mixed, Full],
            Bond::Weak => &[Asymmetric, TieEntrainment],
        }
    }
}

/// Ties of dyads whose class is selected; actors without a kept tie are dropped.
pub fn relational_system(net: &MultiplexNetwork, bonds: &[Bond]) -> Result<MultiplexNetwork> {
    if bonds.is_empty() {
        return Err(Error::InvalidArgument("empty bond selection".into()));
    }
    let wanted: BTreeSet<BundleClass> = bonds.iter().flat_map(|b| b.classes().iter().copied()).collect();
    let n = net.n();
    let mut kept: Vec<BitMatrix> = vec![BitMatrix::square(n); net.r()];
    for i in 0..n {
        for j in i + 1..n {
            let p = DyadPattern::of(net, i, j);
            if !wanted.contains(&classify_dyad(&p, net.r())) {
                continue;
            }
            for &s in &p.forward {
                kept[s].set(i, j, true);
            }
            for &s in &p.backward {
                kept[s].set(j, i, true);
            }
        }
    }
    let involved: Vec<usize> = (0..n)
        .filter(|&i| kept.iter().any(|m| !m.row_is_zero(i) || !m.col_is_zero(i)))
        .collect();
    let labels: Vec<String> = involved.iter().map(|&i| net.actors().label(i).to_string()).collect();
    let actors = Arc::new(ActorSet::new(labels)?);
    let slices = net
        .slices()
        .iter()
        .zip(kept)
        .map(|(s, m)| RelationMatrix { name: s.name.clone(), actors: actors.clone(), cells: m.select(&involved) })
        .collect();
    MultiplexNetwork::new(actors, slices)
}

/// Per-slice tie lists rendered as "from, to".
pub fn pair_lists(net: &MultiplexNetwork) -> Vec<(String, Vec<String>)> {
    net.slices()
        .iter()
        .map(|s| (s.name.clone(), s.ties().into_iter().map(|(a, b)| format!("{a}, {b}")).collect()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BundleStatistics {
    pub strong: usize,
    pub weak: usize,
    pub null: usize,
    pub cohesion: f64,
    pub reciprocity: f64,
}

pub fn cohesion_reciprocity(census: &BundleCensus) -> Result<BundleStatistics> {
    let (strong, weak, null) = (census.strong(), census.weak(), census.null());
    if weak == 0 {
        return Err(Error::UndefinedStatistic("weak"));
    }
    if null == 0 {
        return Err(Error::UndefinedStatistic("null"));
    }
    let cohesion = weak as f64 / (2.0 * null as f64);
    let reciprocity = ((2.0 * strong as f64 / weak as f64) / cohesion).ln();
    Ok(BundleStatistics { strong, weak, null, cohesion, reciprocity })
}

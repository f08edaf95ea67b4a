//! Signed matrices and their evaluation under balance and cluster semirings.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::netcore::{ActorSet, RelationMatrix};
use crate::order::render_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Valence {
    /// absent
    O,
    /// positive
    P,
    /// negative
    N,
    /// ambivalent
    A,
    /// two or more negatives, cluster semiring only
    Q,
}

impl Valence {
    pub const CANONICAL: [Valence; 5] = [Valence::P, Valence::O, Valence::N, Valence::A, Valence::Q];

    pub fn letter(self) -> char {
        match self {
            Valence::O => 'o',
            Valence::P => 'p',
            Valence::N => 'n',
            Valence::A => 'a',
            Valence::Q => 'q',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c {
            'o' => Valence::O,
            'p' => Valence::P,
            'n' => Valence::N,
            'a' => Valence::A,
            'q' => Valence::Q,
            other => return Err(Error::Parse(format!("`{other}` is not a valence letter"))),
        })
    }

    fn idx(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatrix {
    pub actors: Arc<ActorSet>,
    cells: Vec<Valence>,
}

impl SignedMatrix {
    pub fn absent(actors: Arc<ActorSet>) -> Self {
        let n = actors.len();
        SignedMatrix { actors, cells: vec![Valence::O; n * n] }
    }

    /// Rows of valence letters, e.g. `["oop", "noo", "aoo"]`.
    pub fn from_letters<S: AsRef<str>>(actors: Arc<ActorSet>, rows: &[S]) -> Result<Self> {
        let n = actors.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch(format!("{} rows for {} actors", rows.len(), n)));
        }
        let mut m = Self::absent(actors);
        for (i, r) in rows.iter().enumerate() {
            let letters: Vec<char> = r.as_ref().chars().filter(|c| !c.is_whitespace()).collect();
            if letters.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} cells", i + 1, letters.len())));
            }
            for (j, c) in letters.into_iter().enumerate() {
                m.set(i, j, Valence::from_letter(c)?);
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.actors.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Valence {
        self.cells[i * self.n() + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Valence) {
        let n = self.n();
        self.cells[i * n + j] = v;
    }

    /// Distinct valences present, in the order p, o, n, a, q.
    pub fn val_set(&self) -> Vec<Valence> {
        Valence::CANONICAL.iter().copied().filter(|v| self.cells.contains(v)).collect()
    }

    pub fn diagonal(&self) -> Vec<Valence> {
        (0..self.n()).map(|i| self.get(i, i)).collect()
    }

    pub fn render(&self) -> String {
        let labels = self.actors.labels();
        render_table(labels, labels, |i, j| self.get(i, j).to_string())
    }

    fn contains(&self, v: Valence) -> bool {
        self.cells.contains(&v)
    }
}

pub fn make_signed(positive: &RelationMatrix, negative: &RelationMatrix) -> Result<SignedMatrix> {
    if positive.actors.labels() != negative.actors.labels() {
        return Err(Error::DimensionMismatch(format!(
            "`{}` and `{}` use different actor sets",
            positive.name, negative.name
        )));
    }
    let mut s = SignedMatrix::absent(positive.actors.clone());
    let n = s.n();
    for i in 0..n {
        for j in 0..n {
            let v = match (positive.cells.get(i, j), negative.cells.get(i, j)) {
                (true, true) => Valence::A,
                (true, false) => Valence::P,
                (false, true) => Valence::N,
                (false, false) => Valence::O,
            };
            s.set(i, j, v);
        }
    }
    Ok(s)
}

/// Absent yields to anything; a pure sign beats ambivalence; p and n fuse to a.
pub fn fuse(x: Valence, y: Valence) -> Valence {
    use Valence::*;
    match (x, y) {
        (O, v) | (v, O) => v,
        (a, b) if a == b => a,
        (P, N) | (N, P) => A,
        (A, v) | (v, A) => v,
        // q meets a sign: keep the sign
        (Q, v) | (v, Q) => v,
        _ => unreachable!(),
    }
}

pub fn symmetric_closure(s: &SignedMatrix) -> SignedMatrix {
    let mut out = s.clone();
    let n = s.n();
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, fuse(s.get(i, j), s.get(j, i)));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SemiringMode {
    Balance,
    Cluster,
}

impl SemiringMode {
    fn name(self) -> &'static str {
        match self {
            SemiringMode::Balance => "balance",
            SemiringMode::Cluster => "cluster",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringSpec {
    pub mode: SemiringMode,
    /// Indexed by `Valence as usize`.
    add: [[Valence; 5]; 5],
    mul: [[Valence; 5]; 5],
}

impl SemiringSpec {
    pub fn balance() -> Self {
        use Valence::*;
        let mut add = [[O; 5]; 5];
        let mut mul = [[O; 5]; 5];
        for x in [O, P, N, A] {
            for y in [O, P, N, A] {
                add[x.idx()][y.idx()] = match (x, y) {
                    (O, v) | (v, O) => v,
                    (A, _) | (_, A) => A,
                    (a, b) if a == b => a,
                    _ => A,
                };
                mul[x.idx()][y.idx()] = match (x, y) {
                    (O, _) | (_, O) => O,
                    (A, _) | (_, A) => A,
                    (P, v) | (v, P) => v,
                    (N, N) => P,
                    _ => unreachable!(),
                };
            }
        }
        SemiringSpec { mode: SemiringMode::Balance, add, mul }
    }

    /// Addition is the join of o < q < {p, n} < a. Multiplication has p as
    /// unit, n·n = q and q absorbing every further negative; a times a sign
    /// keeps the sign.
    pub fn cluster() -> Self {
        use Valence::*;
        let rank = |v: Valence| match v {
            O => 0,
            Q => 1,
            P | N => 2,
            A => 3,
        };
        let mut add = [[O; 5]; 5];
        let mut mul = [[O; 5]; 5];
        for x in [O, P, N, A, Q] {
            for y in [O, P, N, A, Q] {
                add[x.idx()][y.idx()] = match (x, y) {
                    (P, N) | (N, P) => A,
                    _ if rank(x) >= rank(y) => x,
                    _ => y,
                };
                mul[x.idx()][y.idx()] = match (x, y) {
                    (O, _) | (_, O) => O,
                    (P, v) | (v, P) => v,
                    (N, N) | (N, Q) | (Q, N) | (Q, Q) => Q,
                    (A, A) => A,
                    (A, v) | (v, A) => v,
                };
            }
        }
        SemiringSpec { mode: SemiringMode::Cluster, add, mul }
    }

    pub fn of(mode: SemiringMode) -> Self {
        match mode {
            SemiringMode::Balance => Self::balance(),
            SemiringMode::Cluster => Self::cluster(),
        }
    }

    pub fn carrier(&self) -> &'static [Valence] {
        use Valence::*;
        match self.mode {
            SemiringMode::Balance => &[O, P, N, A],
            SemiringMode::Cluster => &[O, P, N, A, Q],
        }
    }

    #[inline]
    pub fn add(&self, x: Valence, y: Valence) -> Valence {
        self.add[x.idx()][y.idx()]
    }

    #[inline]
    pub fn mul(&self, x: Valence, y: Valence) -> Valence {
        self.mul[x.idx()][y.idx()]
    }

    fn check(&self, s: &SignedMatrix) -> Result<()> {
        if self.mode == SemiringMode::Balance && s.contains(Valence::Q) {
            return Err(Error::ForeignValence('q', self.mode.name()));
        }
        Ok(())
    }

    pub fn mat_mul(&self, a: &SignedMatrix, b: &SignedMatrix) -> SignedMatrix {
        let n = a.n();
        let mut out = SignedMatrix::absent(a.actors.clone());
        for i in 0..n {
            for j in 0..n {
                let mut acc = Valence::O;
                for k in 0..n {
                    acc = self.add(acc, self.mul(a.get(i, k), b.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mat_add(&self, a: &SignedMatrix, b: &SignedMatrix) -> SignedMatrix {
        let mut out = a.clone();
        for (c, v) in out.cells.iter_mut().zip(&b.cells) {
            *c = self.add(*c, *v);
        }
        out
    }
}

fn base_matrix(s: &SignedMatrix, semipaths: bool) -> SignedMatrix {
    if semipaths {
        symmetric_closure(s)
    } else {
        s.clone()
    }
}

/// Sum of the walk powers M + M² + … + M^k.
pub fn semiring_powers(s: &SignedMatrix, spec: &SemiringSpec, k: usize, semipaths: bool) -> Result<SignedMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    spec.check(s)?;
    let m = base_matrix(s, semipaths);
    let mut power = m.clone();
    let mut acc = m.clone();
    for _ in 1..k {
        power = spec.mat_mul(&power, &m);
        acc = spec.mat_add(&acc, &power);
    }
    if spec.mode == SemiringMode::Balance && acc.contains(Valence::Q) {
        return Err(Error::Internal("q produced by the balance semiring".into()));
    }
    Ok(acc)
}

/// Iterate Q ← Q + Q·M from Q = M until nothing changes.
pub fn balance_closure(s: &SignedMatrix, spec: &SemiringSpec, semipaths: bool) -> Result<SignedMatrix> {
    spec.check(s)?;
    let m = base_matrix(s, semipaths);
    let n = s.n();
    // each round raises at least one cell in a lattice of height 3
    let limit = n * n * spec.carrier().len() + 1;
    let mut q = m.clone();
    for _ in 0..limit {
        let next = spec.mat_add(&q, &spec.mat_mul(&q, &m));
        if next == q {
            return Ok(q);
        }
        q = next;
    }
    Err(Error::NoConvergence(limit))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Balanced,
    ClusterableOnly,
    Imbalanced,
}

/// Diagonal test: balance admits p and o; cluster admits q as well.
/// Returns the first actor whose closed walks fail.
pub fn diagonal_witness(q: &SignedMatrix, mode: SemiringMode) -> Option<usize> {
    let ok = |v: Valence| match mode {
        SemiringMode::Balance => matches!(v, Valence::P | Valence::O),
        SemiringMode::Cluster => matches!(v, Valence::P | Valence::O | Valence::Q),
    };
    (0..q.n()).find(|&i| !ok(q.get(i, i)))
}

pub fn is_balanced(q: &SignedMatrix, mode: SemiringMode) -> bool {
    diagonal_witness(q, mode).is_none()
}

#[derive(Debug, Clone)]
pub struct BalanceReport {
    pub verdict: Verdict,
    pub witness: Option<String>,
    /// Classes of mutually positive actors in the closure behind the verdict.
    pub groups: Vec<Vec<String>>,
    pub balance: SignedMatrix,
    pub cluster: SignedMatrix,
}

pub fn evaluate_balance(s: &SignedMatrix, semipaths: bool) -> Result<BalanceReport> {
    let b = balance_closure(s, &SemiringSpec::balance(), semipaths)?;
    let c = balance_closure(s, &SemiringSpec::cluster(), semipaths)?;
    let (verdict, witness, basis) = match diagonal_witness(&b, SemiringMode::Balance) {
        None => (Verdict::Balanced, None, &b),
        Some(w) => match diagonal_witness(&c, SemiringMode::Cluster) {
            None => (Verdict::ClusterableOnly, Some(w), &c),
            Some(cw) => (Verdict::Imbalanced, Some(cw), &b),
        },
    };
    let groups = positive_groups(basis);
    let witness = witness.map(|w| s.actors.label(w).to_string());
    Ok(BalanceReport { verdict, witness, groups, balance: b, cluster: c })
}

/// Components of the relation "i = j or cell (i, j) is p".
pub fn positive_groups(q: &SignedMatrix) -> Vec<Vec<String>> {
    let n = q.n();
    let mut group = vec![usize::MAX; n];
    let mut out: Vec<Vec<String>> = Vec::new();
    for start in 0..n {
        if group[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        group[start] = id;
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..n {
                if group[w] == usize::MAX && (q.get(v, w) == Valence::P || q.get(w, v) == Valence::P) {
                    group[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|i| q.actors.label(i).to_string()).collect());
    }
    out
}

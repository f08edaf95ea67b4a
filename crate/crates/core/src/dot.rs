//! DOT text for Hasse diagrams, Cayley graphs, multigraphs and two-mode graphs.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::fca::FormalContext;
use crate::netcore::MultiplexNetwork;
use crate::order::Poset;
use crate::semigroup::Semigroup;

const COLORS: [&str; 6] = ["black", "red", "blue", "darkgreen", "orange", "purple"];
const STYLES: [&str; 3] = ["solid", "dashed", "dotted"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotKind {
    Hasse,
    Cayley,
    Multigraph,
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotDocument {
    pub kind: DotKind,
    pub text: String,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edge_style(k: usize) -> (&'static str, &'static str) {
    (COLORS[k % COLORS.len()], STYLES[(k / COLORS.len()) % STYLES.len()])
}

/// Cover edges only, drawn upward. `labels` overrides the poset labels;
/// `incomparables == false` drops elements comparable to nothing.
pub fn hasse_dot(po: &Poset, labels: Option<&[String]>, incomparables: bool) -> Result<DotDocument> {
    if let Some(&(i, j)) = po.antisymmetry_violations().first() {
        return Err(Error::NotAPoset(format!("`{}` and `{}` form a cycle", po.labels[i], po.labels[j])));
    }
    let names = labels.unwrap_or(&po.labels);
    if names.len() != po.len() {
        return Err(Error::DimensionMismatch(format!("{} labels for {} elements", names.len(), po.len())));
    }
    let keep: Vec<usize> = if incomparables { (0..po.len()).collect() } else { po.comparable() };
    let mut t = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for &i in &keep {
        let _ = writeln!(t, "  n{} [label={}];", i, quote(&names[i]));
    }
    for (i, j) in po.covers() {
        let _ = writeln!(t, "  n{i} -> n{j} [arrowhead=none];");
    }
    t.push_str("}\n");
    Ok(DotDocument { kind: DotKind::Hasse, text: t })
}

/// One edge x -> x·g per element and generator.
pub fn cayley_dot(sg: &Semigroup) -> DotDocument {
    let gens = sg.generators();
    let mut t = String::from("digraph cayley {\n  node [shape=circle];\n");
    for (i, l) in sg.labels.iter().enumerate() {
        let _ = writeln!(t, "  e{} [label={}];", i, quote(l));
    }
    for (k, (name, g)) in gens.iter().enumerate() {
        let (color, style) = edge_style(k);
        for x in 0..sg.order() {
            let _ = writeln!(
                t,
                "  e{} -> e{} [color={color}, style={style}, label={}];",
                x,
                sg.mul(x, *g),
                quote(name)
            );
        }
    }
    legend(&mut t, gens.iter().map(|(n, _)| n.as_str()));
    t.push_str("}\n");
    DotDocument { kind: DotKind::Cayley, text: t }
}

fn legend<'a>(t: &mut String, names: impl Iterator<Item = &'a str>) {
    t.push_str("  subgraph cluster_legend {\n    label=\"legend\";\n");
    for (k, n) in names.enumerate() {
        let (color, style) = edge_style(k);
        let _ = writeln!(t, "    l{k}a [shape=point]; l{k}b [shape=plaintext, label={}];", quote(n));
        let _ = writeln!(t, "    l{k}a -> l{k}b [color={color}, style={style}];");
    }
    t.push_str("  }\n");
}

/// Ties of every relation, one colour per relation.
pub fn multigraph_dot(net: &MultiplexNetwork) -> DotDocument {
    let mut t = String::from("digraph multigraph {\n");
    for (i, l) in net.actors().labels().iter().enumerate() {
        let _ = writeln!(t, "  a{} [label={}];", i, quote(l));
    }
    for (k, s) in net.slices().iter().enumerate() {
        let (color, style) = edge_style(k);
        for i in 0..net.n() {
            for j in s.cells.row_ones(i) {
                let _ = writeln!(t, "  a{i} -> a{j} [color={color}, style={style}];");
            }
        }
    }
    legend(&mut t, net.slices().iter().map(|s| s.name.as_str()));
    t.push_str("}\n");
    DotDocument { kind: DotKind::Multigraph, text: t }
}

/// Objects as boxes, attributes as ellipses, one edge per incidence.
pub fn bipartite_dot(ctx: &FormalContext) -> DotDocument {
    let mut t = String::from("graph bipartite {\n  rankdir=LR;\n");
    t.push_str("  { rank=same;\n");
    for (i, o) in ctx.objects.iter().enumerate() {
        let _ = writeln!(t, "    g{} [shape=box, label={}];", i, quote(o));
    }
    t.push_str("  }\n  { rank=same;\n");
    for (j, a) in ctx.attributes.iter().enumerate() {
        let _ = writeln!(t, "    m{} [shape=ellipse, label={}];", j, quote(a));
    }
    t.push_str("  }\n");
    for i in 0..ctx.objects.len() {
        for j in ctx.incidence.row_ones(i) {
            let _ = writeln!(t, "  g{i} -- m{j};");
        }
    }
    t.push_str("}\n");
    DotDocument { kind: DotKind::Bipartite, text: t }
}

//! JSON and CSV readers and writers for networks, contexts, semigroups,
//! posets and clusterings.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fca::FormalContext;
use crate::matrix::BitMatrix;
use crate::netcore::{ActorSet, MultiplexNetwork, RelationMatrix};
use crate::order::Poset;
use crate::semigroup::Semigroup;

#[derive(Debug, Serialize, Deserialize)]
struct RelationDoc {
    name: String,
    ties: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct NetworkDoc {
    actors: Vec<String>,
    relations: Vec<RelationDoc>,
}

pub fn network_from_json(text: &str) -> Result<MultiplexNetwork> {
    let doc: NetworkDoc = serde_json::from_str(text)?;
    let actors = Arc::new(ActorSet::new(doc.actors)?);
    let slices = doc
        .relations
        .into_iter()
        .map(|r| RelationMatrix::from_ties(r.name, actors.clone(), r.ties.iter().map(|(a, b)| (a.as_str(), b.as_str()))))
        .collect::<Result<Vec<_>>>()?;
    MultiplexNetwork::new(actors, slices)
}

pub fn network_to_json(net: &MultiplexNetwork) -> Result<String> {
    let doc = NetworkDoc {
        actors: net.actors().labels().to_vec(),
        relations: net.slices().iter().map(|s| RelationDoc { name: s.name.clone(), ties: s.ties() }).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct ContextDoc {
    objects: Vec<String>,
    attributes: Vec<String>,
    incidence: Vec<Vec<u8>>,
}

fn cross_table(cells: Vec<Vec<u8>>, rows: usize, cols: usize) -> Result<BitMatrix> {
    if cells.len() != rows || cells.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("incidence is not {rows}x{cols}")));
    }
    let mut m = BitMatrix::new(rows, cols);
    for (i, r) in cells.iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            match v {
                0 => {}
                1 => m.set(i, j, true),
                other => return Err(Error::Parse(format!("incidence entry {other} is not 0 or 1"))),
            }
        }
    }
    Ok(m)
}

pub fn context_from_json(text: &str) -> Result<FormalContext> {
    let doc: ContextDoc = serde_json::from_str(text)?;
    let m = cross_table(doc.incidence, doc.objects.len(), doc.attributes.len())?;
    FormalContext::new(doc.objects, doc.attributes, m)
}

/// Header row holds attribute names after one leading cell; each further
/// row is an object label followed by 0/1 cells.
pub fn context_from_csv(text: &str) -> Result<FormalContext> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let attributes: Vec<String> = rdr.headers()?.iter().skip(1).map(str::to_string).collect();
    let mut objects = Vec::new();
    let mut cells = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let mut it = rec.iter();
        objects.push(it.next().unwrap_or_default().to_string());
        let row = it
            .map(|c| c.parse::<u8>().map_err(|_| Error::Parse(format!("`{c}` is not 0 or 1"))))
            .collect::<Result<Vec<_>>>()?;
        cells.push(row);
    }
    let m = cross_table(cells, objects.len(), attributes.len())?;
    FormalContext::new(objects, attributes, m)
}

pub fn context_to_json(ctx: &FormalContext) -> Result<String> {
    let doc = ContextDoc {
        objects: ctx.objects.clone(),
        attributes: ctx.attributes.clone(),
        incidence: ctx.incidence.to_rows().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

/// Table entries are 1-based positions in `st`.
#[derive(Debug, Serialize, Deserialize)]
struct SemigroupDoc {
    st: Vec<String>,
    table: Vec<Vec<usize>>,
    order: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    gens: Vec<String>,
}

pub fn semigroup_to_json(sg: &Semigroup) -> Result<String> {
    let doc = SemigroupDoc {
        st: sg.labels.clone(),
        table: sg.table.iter().map(|r| r.iter().map(|v| v + 1).collect()).collect(),
        order: sg.order(),
        gens: sg.gens.iter().map(|(g, _)| g.clone()).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn semigroup_from_json(text: &str) -> Result<Semigroup> {
    let doc: SemigroupDoc = serde_json::from_str(text)?;
    if doc.order != doc.st.len() {
        return Err(Error::DimensionMismatch(format!("order {} for {} labels", doc.order, doc.st.len())));
    }
    let table = doc
        .table
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| v.checked_sub(1).ok_or_else(|| Error::Parse("table entries are 1-based".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let gens = doc
        .gens
        .iter()
        .map(|g| {
            let i = doc.st.iter().position(|l| l == g).ok_or_else(|| Error::UnknownRelation(g.clone()))?;
            Ok((g.clone(), i))
        })
        .collect::<Result<Vec<_>>>()?;
    Semigroup::new(doc.st, table, gens)
}

#[derive(Debug, Serialize, Deserialize)]
struct PosetDoc {
    labels: Vec<String>,
    matrix: Vec<Vec<u8>>,
}

pub fn poset_to_json(po: &Poset) -> Result<String> {
    let doc = PosetDoc {
        labels: po.labels.clone(),
        matrix: po.matrix.to_rows().into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    let n = doc.labels.len();
    let m = cross_table(doc.matrix, n, n)?;
    Poset::new(doc.labels, m)
}

/// `label,class` rows; a first row whose class is not an integer is a header.
pub fn clustering_from_csv(text: &str) -> Result<BTreeMap<String, i64>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = BTreeMap::new();
    for (k, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != 2 {
            return Err(Error::Parse(format!("clustering row {} has {} fields", k + 1, rec.len())));
        }
        let class = match rec[1].parse::<i64>() {
            Ok(c) => c,
            Err(_) if k == 0 => continue,
            Err(_) => return Err(Error::Parse(format!("class `{}` is not an integer", &rec[1]))),
        };
        if out.insert(rec[0].to_string(), class).is_some() {
            return Err(Error::DuplicateActor(rec[0].to_string()));
        }
    }
    Ok(out)
}

pub fn read_text(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn load_network(path: &Path) -> Result<MultiplexNetwork> {
    network_from_json(&read_text(path)?)
}

/// CSV when the extension says so, JSON otherwise.
pub fn load_context(path: &Path) -> Result<FormalContext> {
    let text = read_text(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("csv") => context_from_csv(&text),
        _ => context_from_json(&text),
    }
}

pub fn load_semigroup(path: &Path) -> Result<Semigroup> {
    semigroup_from_json(&read_text(path)?)
}

pub fn load_poset(path: &Path) -> Result<Poset> {
    poset_from_json(&read_text(path)?)
}

pub fn load_clustering(path: &Path) -> Result<BTreeMap<String, i64>> {
    clustering_from_csv(&read_text(path)?)
}

//! Fixture loading and parsers for printed tables shared by the integration
//! targets.
#![allow(dead_code)]

pub mod oracles;

use std::path::PathBuf;

use relalg::fca::FormalContext;
use relalg::io;
use relalg::netcore::MultiplexNetwork;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn ncc() -> MultiplexNetwork {
    io::load_network(&fixture_path("ncc.json")).unwrap()
}

pub fn netcs() -> MultiplexNetwork {
    io::load_network(&fixture_path("netcs.json")).unwrap()
}

pub fn netcsg() -> MultiplexNetwork {
    io::load_network(&fixture_path("netcsg.json")).unwrap()
}

pub fn g20() -> FormalContext {
    io::load_context(&fixture_path("g20.json")).unwrap()
}

/// Whitespace table with a header row of column labels and a leading
/// label in every other row.
pub struct Grid {
    pub cols: Vec<String>,
    pub rows: Vec<String>,
    pub cells: Vec<Vec<String>>,
}

impl Grid {
    pub fn parse(text: &str) -> Grid {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let cols: Vec<String> = lines.next().unwrap().split_whitespace().map(str::to_string).collect();
        let mut rows = Vec::new();
        let mut cells = Vec::new();
        for l in lines {
            let mut it = l.split_whitespace();
            rows.push(it.next().unwrap().to_string());
            let r: Vec<String> = it.map(str::to_string).collect();
            assert_eq!(r.len(), cols.len(), "ragged row {l:?}");
            cells.push(r);
        }
        Grid { cols, rows, cells }
    }

    pub fn bools(&self) -> Vec<Vec<bool>> {
        self.cells.iter().map(|r| r.iter().map(|c| c == "1").collect()).collect()
    }

    pub fn numbers(&self) -> Vec<Vec<usize>> {
        self.cells.iter().map(|r| r.iter().map(|c| c.parse().unwrap()).collect()).collect()
    }
}

/// Every double-quoted token, in order.
pub fn quoted(text: &str) -> Vec<String> {
    text.split('"').skip(1).step_by(2).map(str::to_string).collect()
}

/// `[[i]]` blocks, each a line of labels followed by a line of integers.
pub fn class_vectors(text: &str) -> Vec<(Vec<String>, Vec<usize>)> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    lines
        .chunks(3)
        .map(|c| {
            assert!(c[0].starts_with("[["));
            let labels = c[1].split_whitespace().map(str::to_string).collect();
            let v = c[2].split_whitespace().map(|x| x.parse().unwrap()).collect();
            (labels, v)
        })
        .collect()
}

/// `$equat$KEY` lines followed by quoted members.
pub fn equation_blocks(text: &str) -> Vec<(String, Vec<String>)> {
    let mut out: Vec<(String, Vec<String>)> = Vec::new();
    for l in text.lines() {
        if let Some(k) = l.strip_prefix("$equat$") {
            out.push((k.trim().to_string(), Vec::new()));
        } else if let Some(last) = out.last_mut() {
            last.1.extend(quoted(l));
        }
    }
    out
}

/// ``$`i` `` headers followed by one quoted label each.
pub fn labelled_concepts(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut pending = None;
    for l in text.lines() {
        if let Some(rest) = l.strip_prefix("$`") {
            pending = Some(rest.trim_end_matches('`').parse::<usize>().unwrap());
        } else if let Some(i) = pending.take() {
            out.push((i, quoted(l).remove(0)));
        }
    }
    out
}

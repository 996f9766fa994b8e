use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::signature::{build_test_set, signature_of, test_row, SigEntry, Signature};
use super::{ProtrusionParams, ENUMERATION_CAP};
use crate::boundaried::{enumerate, BoundariedGraph};
use crate::error::{Error, Result};
use crate::family::MinorFamily;
use crate::graph::Graph;

const FORMAT_HEADER: &str = "fdel-table v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableClass {
    pub signature: Vec<SigEntry>,
    /// Offset of the representative's own signature.
    pub offset: u32,
    /// Canonical form, boundary `0..t`.
    pub representative: BoundariedGraph,
}

/// Signature classes for one boundary size, each with its smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentativeTable {
    pub t: usize,
    pub family_tag: String,
    pub test_size: usize,
    pub rep_size: usize,
    classes: BTreeMap<Vec<SigEntry>, TableClass>,
}

impl RepresentativeTable {
    pub fn classes(&self) -> impl Iterator<Item = &TableClass> {
        self.classes.values()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn lookup(&self, sig: &Signature) -> Option<&TableClass> {
        self.classes.get(&sig.entries)
    }

    /// Same result as `lookup(&signature_of(b, ..))`, but evaluates tests one
    /// at a time and stops once no class is consistent with the prefix.
    pub fn find_class(
        &self,
        b: &BoundariedGraph,
        f: &MinorFamily,
        tests: &[BoundariedGraph],
    ) -> Result<Option<(&TableClass, Signature)>> {
        // (class, raw - normalized, once known)
        let mut alive: Vec<(&TableClass, Option<u32>)> = self.classes.values().map(|c| (c, None)).collect();
        let mut pos = 0;
        for test in tests {
            if alive.is_empty() {
                return Ok(None);
            }
            let row = test_row(b, f, test)?;
            alive.retain_mut(|(class, shift)| {
                row.iter().enumerate().all(|(j, raw)| match (raw, class.signature.get(pos + j)) {
                    (None, Some(SigEntry::Infeasible)) => true,
                    (Some(r), Some(&SigEntry::Value(v))) if *r >= v => match shift {
                        Some(d) => *d == r - v,
                        None => {
                            *shift = Some(r - v);
                            true
                        }
                    },
                    _ => false,
                })
            });
            pos += row.len();
        }
        Ok(alive
            .into_iter()
            .find(|(class, _)| class.signature.len() == pos)
            .map(|(class, shift)| (class, Signature { entries: class.signature.clone(), offset: shift.unwrap_or(0) })))
    }
}

/// Candidates in enumeration order, i.e. by vertex count then canonical form,
/// so the first candidate seen per signature is the representative.
pub(crate) fn representative_candidates(t: usize, rep_size: usize) -> Result<Vec<BoundariedGraph>> {
    if rep_size < t {
        return Ok(Vec::new());
    }
    enumerate(t, rep_size, ENUMERATION_CAP)
}

pub fn build_table(t: usize, f: &MinorFamily, p: &ProtrusionParams) -> Result<RepresentativeTable> {
    if t > p.r {
        return Err(Error::InvalidParams(format!("boundary {t} exceeds r = {}", p.r)));
    }
    let tests = build_test_set(t, p.test_size)?;
    let candidates = representative_candidates(t, p.rep_size)?;
    let sigs: Vec<Result<Signature>> = candidates.par_iter().map(|c| signature_of(c, f, &tests)).collect();
    let mut classes = BTreeMap::new();
    for (done, (cand, sig)) in candidates.into_iter().zip(sigs).enumerate() {
        let sig = sig.map_err(|e| {
            log::error!("table build for t={t} stopped after {done} candidates");
            e
        })?;
        classes.entry(sig.entries.clone()).or_insert(TableClass {
            signature: sig.entries,
            offset: sig.offset,
            representative: cand,
        });
    }
    Ok(RepresentativeTable {
        t,
        family_tag: f.tag(),
        test_size: p.test_size,
        rep_size: p.rep_size,
        classes,
    })
}

/// Canonical text form; one line per class.
pub fn write_table(table: &RepresentativeTable) -> String {
    let mut out = String::new();
    writeln!(out, "{FORMAT_HEADER}").unwrap();
    writeln!(out, "t {}", table.t).unwrap();
    writeln!(out, "family {}", table.family_tag).unwrap();
    writeln!(out, "caps test-size={} rep-size={}", table.test_size, table.rep_size).unwrap();
    writeln!(out, "classes {}", table.classes.len()).unwrap();
    for class in table.classes.values() {
        let sig: Vec<String> = class.signature.iter().map(ToString::to_string).collect();
        let g = &class.representative.graph;
        let mut graph = format!("{} {}", g.n(), g.m());
        for (u, v) in g.edges() {
            write!(graph, ";{} {}", u + 1, v + 1).unwrap();
        }
        let boundary = if class.representative.boundary.is_empty() {
            "-".to_string()
        } else {
            class
                .representative
                .boundary
                .iter()
                .map(|b| (b + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(out, "sig={} delta={} rep={} boundary={}", sig.join(","), class.offset, graph, boundary).unwrap();
    }
    out
}

pub fn parse_table(text: &str) -> Result<RepresentativeTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut next = |what: &str| -> Result<(usize, &str)> {
        lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::parse(0, format!("missing {what}")))
    };
    let (ln, header) = next("header")?;
    if header != FORMAT_HEADER {
        return Err(Error::parse(ln, format!("expected {FORMAT_HEADER:?}")));
    }
    let t: usize = field(next("t line")?, "t ")?;
    let (ln, fam) = next("family line")?;
    let family_tag = fam
        .strip_prefix("family ")
        .ok_or_else(|| Error::parse(ln, "expected `family <tag>`"))?
        .to_string();
    let (ln, caps) = next("caps line")?;
    let caps = caps.strip_prefix("caps ").ok_or_else(|| Error::parse(ln, "expected caps"))?;
    let mut test_size = None;
    let mut rep_size = None;
    for part in caps.split_whitespace() {
        match part.split_once('=') {
            Some(("test-size", v)) => test_size = v.parse().ok(),
            Some(("rep-size", v)) => rep_size = v.parse().ok(),
            _ => return Err(Error::parse(ln, format!("unknown cap {part:?}"))),
        }
    }
    let (test_size, rep_size) = test_size.zip(rep_size).ok_or_else(|| Error::parse(ln, "incomplete caps"))?;
    let count: usize = field(next("classes line")?, "classes ")?;
    let mut classes = BTreeMap::new();
    for _ in 0..count {
        let (ln, line) = next("class line")?;
        let class = parse_class(line, t).map_err(|msg| Error::parse(ln, msg))?;
        if classes.insert(class.signature.clone(), class).is_some() {
            return Err(Error::parse(ln, "duplicate signature"));
        }
    }
    if let Ok((ln, _)) = next("") {
        return Err(Error::parse(ln, "trailing content after classes"));
    }
    Ok(RepresentativeTable { t, family_tag, test_size, rep_size, classes })
}

fn field<T: std::str::FromStr>((ln, line): (usize, &str), prefix: &str) -> Result<T> {
    line.strip_prefix(prefix)
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::parse(ln, format!("expected `{prefix}<value>`")))
}

fn parse_class(line: &str, t: usize) -> std::result::Result<TableClass, String> {
    let mut sig = None;
    let mut delta = None;
    let mut rep = None;
    let mut boundary = None;
    let mut rest = line;
    for key in ["sig=", "delta=", "rep=", "boundary="] {
        rest = rest.trim_start();
        let body = rest.strip_prefix(key).ok_or_else(|| format!("expected {key}"))?;
        let end = match key {
            "rep=" => body.find(" boundary=").ok_or("missing boundary")?,
            _ => body.find(' ').unwrap_or(body.len()),
        };
        let value = &body[..end];
        rest = &body[end..];
        match key {
            "sig=" => {
                let entries: std::result::Result<Vec<SigEntry>, String> = value
                    .split(',')
                    .map(|e| match e {
                        "x" => Ok(SigEntry::Infeasible),
                        v => v.parse().map(SigEntry::Value).map_err(|_| format!("bad entry {v:?}")),
                    })
                    .collect();
                sig = Some(entries?);
            }
            "delta=" => delta = Some(value.parse::<u32>().map_err(|_| "bad delta")?),
            "rep=" => rep = Some(parse_embedded(value)?),
            _ => {
                boundary = Some(if value == "-" {
                    Vec::new()
                } else {
                    value
                        .split(',')
                        .map(|b| b.parse::<usize>().ok().filter(|&b| b > 0).map(|b| b - 1).ok_or("bad boundary"))
                        .collect::<std::result::Result<Vec<_>, _>>()?
                });
            }
        }
    }
    let boundary = boundary.unwrap();
    if boundary.len() != t {
        return Err(format!("boundary has {} labels, table t = {t}", boundary.len()));
    }
    let representative = BoundariedGraph::new(rep.unwrap(), boundary).map_err(|e| e.to_string())?;
    Ok(TableClass { signature: sig.unwrap(), offset: delta.unwrap(), representative })
}

fn parse_embedded(value: &str) -> std::result::Result<Graph, String> {
    let mut parts = value.split(';');
    let header = parts.next().ok_or("empty representative")?;
    let (n, m) = header.split_once(' ').ok_or("bad representative header")?;
    let n: usize = n.parse().map_err(|_| "bad n")?;
    let m: usize = m.parse().map_err(|_| "bad m")?;
    let mut edges = Vec::new();
    for e in parts {
        let (u, v) = e.split_once(' ').ok_or("bad edge")?;
        let u: usize = u.parse().map_err(|_| "bad edge")?;
        let v: usize = v.parse().map_err(|_| "bad edge")?;
        if u == 0 || v == 0 {
            return Err("edge endpoints are 1-based".into());
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(format!("representative declares {m} edges, has {}", edges.len()));
    }
    Graph::try_from_edges(n, &edges).map_err(|e| e.to_string())
}

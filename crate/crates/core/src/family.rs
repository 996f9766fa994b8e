//! Forbidden-minor families.

use sha2::{Digest, Sha256};

use crate::canon::{uncolored, CanonKey};
use crate::error::{Error, Result};
use crate::generators::complete;
use crate::graph::{parse_graph, Graph};
use crate::minor::{has_minor_with, is_planar, MinorConfig, MinorModel};

/// A validated family `F`: every member connected, at least one planar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorFamily {
    members: Vec<Graph>,
    eta: usize,
    name: Option<String>,
    keys: Vec<CanonKey>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `{K2}`: Vertex Cover.
    VertexCover,
    /// `{K3}`: Feedback Vertex Set.
    FeedbackVertexSet,
    /// `{K4}`: deletion to treewidth at most two.
    Treewidth2,
}

impl Preset {
    pub fn tag(self) -> &'static str {
        match self {
            Preset::VertexCover => "vc",
            Preset::FeedbackVertexSet => "fvs",
            Preset::Treewidth2 => "tw2",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Preset> {
        match tag {
            "vc" => Some(Preset::VertexCover),
            "fvs" => Some(Preset::FeedbackVertexSet),
            "tw2" => Some(Preset::Treewidth2),
            _ => None,
        }
    }

    fn order(self) -> usize {
        match self {
            Preset::VertexCover => 2,
            Preset::FeedbackVertexSet => 3,
            Preset::Treewidth2 => 4,
        }
    }

    fn eta(self) -> usize {
        self.order() - 2
    }

    pub fn family(self) -> MinorFamily {
        validate_family(vec![complete(self.order())], None).expect("presets are valid")
    }
}

impl MinorFamily {
    pub fn preset(p: Preset) -> Self {
        p.family()
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Preset name, or `custom-<digest>` derived from the members' canonical forms.
    pub fn tag(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        let mut hasher = Sha256::new();
        for key in &self.keys {
            for word in &key.0 {
                hasher.update(word.to_le_bytes());
            }
            hasher.update(b";");
        }
        let digest = hasher.finalize();
        format!("custom-{}", hex::encode(&digest[..6]))
    }

    pub fn max_order(&self) -> usize {
        self.members.iter().map(Graph::n).max().unwrap_or(0)
    }

    /// Overrides the treewidth constant.
    pub fn with_eta(mut self, eta: usize) -> Self {
        self.eta = eta;
        self
    }

    /// First member (in order) having a minor model in `g`.
    pub fn find_model(&self, g: &Graph) -> Result<Option<(usize, MinorModel)>> {
        let cfg = MinorConfig::default();
        for (i, h) in self.members.iter().enumerate() {
            if let Some(m) = has_minor_with(g, h, &cfg)? {
                return Ok(Some((i, m)));
            }
        }
        Ok(None)
    }
}

/// True iff no member of `f` is a minor of `g`.
pub fn is_f_minor_free(g: &Graph, f: &MinorFamily) -> Result<bool> {
    Ok(f.find_model(g)?.is_none())
}

/// Validates a candidate family. Isomorphic duplicates are dropped; `eta`
/// defaults to the preset value or `max |V(H)| - 2`.
pub fn validate_family(members: Vec<Graph>, eta: Option<usize>) -> Result<MinorFamily> {
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for (index, h) in members.iter().enumerate() {
        if !h.is_connected() {
            return Err(Error::DisconnectedMember { index });
        }
    }
    let mut any_planar = false;
    for h in &members {
        if is_planar(h)? {
            any_planar = true;
            break;
        }
    }
    if !any_planar {
        return Err(Error::NoPlanarMember);
    }
    let mut kept: Vec<Graph> = Vec::new();
    let mut keys: Vec<CanonKey> = Vec::new();
    for mut h in members {
        let key = uncolored(&h).key;
        if keys.contains(&key) {
            continue;
        }
        h.clear_labels();
        keys.push(key);
        kept.push(h);
    }
    let preset = [Preset::VertexCover, Preset::FeedbackVertexSet, Preset::Treewidth2]
        .into_iter()
        .find(|p| kept.len() == 1 && keys[0] == uncolored(&complete(p.order())).key);
    let default_eta = match preset {
        Some(p) => p.eta(),
        None => kept.iter().map(|h| h.n().saturating_sub(2)).max().unwrap_or(0),
    };
    let mut sorted_keys = keys.clone();
    sorted_keys.sort();
    Ok(MinorFamily {
        members: kept,
        eta: eta.unwrap_or(default_eta),
        name: preset.map(|p| p.tag().to_string()),
        keys: sorted_keys,
    })
}

/// Family file: one edge-list block per member, blocks separated by blank lines.
pub fn parse_family_file(text: &str) -> Result<Vec<Graph>> {
    let mut members = Vec::new();
    let mut block = String::new();
    let mut block_start = 1;
    let mut flush = |block: &mut String, start: usize| -> Result<()> {
        if block.lines().any(|l| {
            let l = l.trim();
            !l.is_empty() && l != "c" && !l.starts_with("c ")
        }) {
            let g = parse_graph(block).map_err(|e| match e {
                Error::Parse { line, msg } => Error::Parse { line: line + start - 1, msg },
                other => other,
            })?;
            members.push(g);
        }
        block.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut block, block_start)?;
            block_start = i + 2;
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    flush(&mut block, block_start)?;
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn presets() {
        let fvs = validate_family(vec![complete(3)], None).unwrap();
        assert_eq!(fvs.eta(), 1);
        assert_eq!(fvs.tag(), "fvs");
        assert_eq!(Preset::VertexCover.family().eta(), 0);
        assert_eq!(Preset::Treewidth2.family().eta(), 2);
        assert_eq!(validate_family(vec![complete(3)], Some(5)).unwrap().eta(), 5);
    }

    #[test]
    fn custom_eta_and_tag() {
        let f = validate_family(vec![cycle(4), complete(3), cycle(4)], None).unwrap();
        assert_eq!(f.members().len(), 2);
        assert_eq!(f.eta(), 2);
        let g = validate_family(vec![complete(3), cycle(4)], None).unwrap();
        assert_eq!(f.tag(), g.tag());
        assert!(f.tag().starts_with("custom-"));
    }

    #[test]
    fn guard_rails() {
        let err = validate_family(vec![complete(5), complete_bipartite(3, 3)], None).unwrap_err();
        assert_eq!(err, Error::NoPlanarMember);
        assert_eq!(err.code(), "E_NO_PLANAR_MEMBER");
        let err = validate_family(vec![complete(3), disjoint_triangles(2)], None).unwrap_err();
        assert_eq!(err, Error::DisconnectedMember { index: 1 });
        assert_eq!(err.code(), "E_DISCONNECTED_MEMBER");
        assert_eq!(validate_family(vec![], None).unwrap_err(), Error::EmptyFamily);
    }

    #[test]
    fn minor_freeness() {
        let fvs = Preset::FeedbackVertexSet.family();
        assert!(is_f_minor_free(&path(5), &fvs).unwrap());
        assert!(!is_f_minor_free(&cycle(5), &fvs).unwrap());
        let tw2 = Preset::Treewidth2.family();
        assert!(!is_f_minor_free(&complete(4), &tw2).unwrap());
    }

    #[test]
    fn forests_versus_cyclic_graphs() {
        let fvs = Preset::FeedbackVertexSet.family();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..100 {
            assert!(is_f_minor_free(&random_forest(3 + i % 12, &mut rng), &fvs).unwrap());
        }
        let mut cyclic = 0;
        while cyclic < 100 {
            let g = gnp(8, 0.35, &mut rng);
            if g.is_forest() {
                continue;
            }
            cyclic += 1;
            assert!(!is_f_minor_free(&g, &fvs).unwrap());
        }
    }

    #[test]
    fn family_file() {
        let text = "3 3\n1 2\n2 3\n1 3\n\nc second\n4 4\n1 2\n2 3\n3 4\n4 1\n";
        let members = parse_family_file(text).unwrap();
        assert_eq!(members.len(), 2);
        let err = parse_family_file("2 1\n1 2\n\n2 1\n1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }));
    }
}

use crate::error::Result;
use crate::family::MinorFamily;
use crate::minor::MinorModel;
use crate::graph::Graph;

/// A model of some member whose vertex union is minimal: dropping any one of
/// its vertices leaves a graph with no member as a minor.
pub fn find_minimal_minor_model(g: &Graph, f: &MinorFamily) -> Result<Option<MinorModel>> {
    let Some((_, model)) = f.find_model(g)? else {
        return Ok(None);
    };
    let mut keep = model.vertices();
    // Containment is monotone under deletion, so one ascending pass suffices.
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if f.find_model(&g.induced(&trial))?.is_some() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    let (_, mut model) = f
        .find_model(&g.induced(&keep))?
        .expect("minimal vertex set still contains a member");
    for set in &mut model.branch_sets {
        for v in set.iter_mut() {
            *v = keep[*v];
        }
        set.sort_unstable();
    }
    for w in &mut model.witnesses {
        w.host = (keep[w.host.0], keep[w.host.1]);
    }
    Ok(Some(model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Preset;
    use crate::generators::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_minimal(g: &Graph, f: &MinorFamily, m: &MinorModel) {
        let vs = m.vertices();
        assert!(f.find_model(&g.induced(&vs)).unwrap().is_some());
        for i in 0..vs.len() {
            let mut rest = vs.clone();
            rest.remove(i);
            assert!(f.find_model(&g.induced(&rest)).unwrap().is_none(), "vertex {} is redundant", vs[i]);
        }
    }

    #[test]
    fn c4_uses_all_vertices() {
        let fvs = Preset::FeedbackVertexSet.family();
        let m = find_minimal_minor_model(&cycle(4), &fvs).unwrap().unwrap();
        assert_eq!(m.vertices(), vec![0, 1, 2, 3]);
        m.verify(&cycle(4), &complete(3)).unwrap();
    }

    #[test]
    fn forest_has_none() {
        let fvs = Preset::FeedbackVertexSet.family();
        let g = random_forest(12, &mut ChaCha8Rng::seed_from_u64(7));
        assert!(find_minimal_minor_model(&g, &fvs).unwrap().is_none());
    }

    #[test]
    fn k4_in_k4_is_singletons() {
        let tw2 = Preset::Treewidth2.family();
        let m = find_minimal_minor_model(&complete(4), &tw2).unwrap().unwrap();
        assert!(m.branch_sets.iter().all(|b| b.len() == 1));
        assert_eq!(m.vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn minimal_on_random_graphs() {
        for (i, preset) in [Preset::VertexCover, Preset::FeedbackVertexSet, Preset::Treewidth2].into_iter().enumerate() {
            let f = preset.family();
            for seed in 0..10 {
                let g = gnp(10, 0.35, &mut ChaCha8Rng::seed_from_u64(seed * 3 + i as u64));
                if let Some(m) = find_minimal_minor_model(&g, &f).unwrap() {
                    assert_minimal(&g, &f, &m);
                    let member = f.members().iter().find(|h| m.verify(&g, h).is_ok());
                    assert!(member.is_some());
                }
            }
        }
    }
}

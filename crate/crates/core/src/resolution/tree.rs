//! The resolution tree: lattice realization of the bounded word monoid,
//! with locking-zone annotations where the zone is defined.
//!
//! Nodes are the images `w(1,0)` of words whose run exponents stay below
//! the bound; the edge structure is word-prefix descent (append one letter,
//! collapsing runs), which is what survives of the Farey tree once every
//! branch is cut at its `(a-1)`-th point. A node carries a zone exactly
//! when its *minimal* expansion is also bounded; bounded-word nodes whose
//! minimal form ends in the bound itself are the transit rationals and
//! stay unannotated.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::words::{GeneratorWord, LatticePoint};
use crate::Result;

use super::map::{in_invariant_set_cf, ResolutionBound};
use super::zones::{zone, LockingZone};

/// One bounded-word node.
#[derive(Debug, Clone)]
pub struct ResolutionNode {
    pub point: LatticePoint,
    /// Word-form quotients of the slope.
    pub cf: ContinuedFraction,
    pub word: GeneratorWord,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Present iff the minimal expansion is bounded too.
    pub zone: Option<LockingZone>,
}

impl ResolutionNode {
    pub fn slope(&self) -> ProjectiveRational {
        self.point.slope()
    }
}

/// The pruned tree for one bound, windowed like the Farey tree
/// (`q <= q_limit`, slope `<= q_limit + 1`), nodes sorted by `(q, p)`.
#[derive(Debug, Clone)]
pub struct ResolutionTree {
    bound: ResolutionBound,
    q_limit: u64,
    nodes: Vec<ResolutionNode>,
}

impl ResolutionTree {
    pub fn bound(&self) -> ResolutionBound {
        self.bound
    }

    pub fn q_limit(&self) -> u64 {
        self.q_limit
    }

    pub fn nodes(&self) -> &[ResolutionNode] {
        &self.nodes
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(slot, n)| n.parent.map(|p| (p, slot)))
            .collect()
    }

    pub fn find_zone(&self, slope: &ProjectiveRational) -> Option<&LockingZone> {
        self.nodes
            .iter()
            .find(|n| &n.slope() == slope)
            .and_then(|n| n.zone.as_ref())
    }

    /// Graphviz rendering with zone annotations.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph resolution {\n  node [shape=plaintext];\n");
        for node in &self.nodes {
            let zone_label = match &node.zone {
                Some(z) => alloc::format!("\\n[{}, {}]", z.nu_minus, z.nu_plus),
                None => String::new(),
            };
            let _ = writeln!(
                s,
                "  \"{}_{}\" [label=\"{} {}{}\"];",
                node.point.q(),
                node.point.p(),
                node.slope(),
                node.cf,
                zone_label
            );
        }
        for (a, b) in self.edges() {
            let na = &self.nodes[a];
            let nb = &self.nodes[b];
            let _ = writeln!(
                s,
                "  \"{}_{}\" -- \"{}_{}\";",
                na.point.q(),
                na.point.p(),
                nb.point.q(),
                nb.point.p()
            );
        }
        s.push_str("}\n");
        s
    }

    /// JSON rendering; `nu_minus`/`nu_plus` are exact fraction strings.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        let _ = write!(s, "\"a\":{},\"q_limit\":{},\"nodes\":[", self.bound.get(), self.q_limit);
        for (slot, node) in self.nodes.iter().enumerate() {
            if slot > 0 {
                s.push(',');
            }
            let _ = write!(
                s,
                "{{\"q\":{},\"p\":{},\"slope\":\"{}\",\"cf\":\"{}\",\"word\":\"{}\"",
                node.point.q(),
                node.point.p(),
                node.slope(),
                node.cf,
                node.word
            );
            if let Some(z) = &node.zone {
                let _ = write!(s, ",\"nu_minus\":\"{}\",\"nu_plus\":\"{}\"", z.nu_minus, z.nu_plus);
            }
            s.push('}');
        }
        s.push_str("],\"edges\":[");
        for (i, (a, b)) in self.edges().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "[{a},{b}]");
        }
        s.push_str("]}");
        s
    }
}

/// Children of a bounded-word node in the prefix order: extend the
/// terminal run by one (if it stays below the bound), or open a new
/// `[..., k, 1]` offshoot for each admissible run exponent `k`.
fn bounded_children(cf: &ContinuedFraction, a: u64) -> Vec<ContinuedFraction> {
    let q = cf.quotients();
    let mut out = Vec::new();
    if q != [0] {
        let mut t = q.to_vec();
        if *t.last().unwrap() + 1 < a {
            *t.last_mut().unwrap() += 1;
            out.push(ContinuedFraction::new(t).unwrap());
        }
    } else {
        // identity node: the first translation step
        out.push(ContinuedFraction::new([1].to_vec()).unwrap());
    }
    for k in 1..a {
        let mut j = if q == [0] { Vec::new() } else { q.to_vec() };
        if j.is_empty() {
            j.push(0);
        }
        j.push(k);
        j.push(1);
        out.push(ContinuedFraction::new(j).unwrap());
    }
    out
}

/// Build the resolution tree for the given bound and window size.
pub fn resolution_tree(bound: ResolutionBound, q_limit: u64) -> Result<ResolutionTree> {
    if q_limit == 0 {
        return Err(crate::error::Error::BadDepth);
    }
    let a = bound.get();
    let in_window = |pt: &LatticePoint| -> bool {
        pt.q() <= &BigInt::from(q_limit) && pt.p() <= &(BigInt::from(q_limit + 1) * pt.q())
    };

    let mut entries: Vec<(ContinuedFraction, Option<usize>)> = Vec::new();
    entries.push((ContinuedFraction::new([0].to_vec())?, None));
    let mut cursor = 0usize;
    while cursor < entries.len() {
        let (cf, _) = entries[cursor].clone();
        for child in bounded_children(&cf, a) {
            debug_assert!(child.max_quotient() < a);
            let word = GeneratorWord::from_cf(&child)?;
            if !in_window(&word.base_image()) {
                continue;
            }
            entries.push((child, Some(cursor)));
        }
        cursor += 1;
    }

    let mut enriched: Vec<(LatticePoint, ContinuedFraction, GeneratorWord, Option<usize>)> = Vec::new();
    for (cf, parent) in &entries {
        let word = GeneratorWord::from_cf(cf)?;
        let pt = word.base_image();
        enriched.push((pt, cf.clone(), word, *parent));
    }
    let mut order: Vec<usize> = (0..enriched.len()).collect();
    order.sort_by(|&i, &j| enriched[i].0.cmp(&enriched[j].0));
    let mut slot_of_old = alloc::vec![0usize; enriched.len()];
    for (new_slot, &old) in order.iter().enumerate() {
        slot_of_old[old] = new_slot;
    }

    let mut nodes: Vec<ResolutionNode> = Vec::with_capacity(enriched.len());
    for &old in &order {
        let (pt, cf, word, parent) = enriched[old].clone();
        let minimal = cf.to_minimal_form()?;
        let zone = if in_invariant_set_cf(&minimal, bound) {
            Some(zone(&pt.slope(), bound)?)
        } else {
            None
        };
        nodes.push(ResolutionNode {
            point: pt,
            cf,
            word,
            parent: parent.map(|p| slot_of_old[p]),
            children: Vec::new(),
            zone,
        });
    }
    for slot in 0..nodes.len() {
        if let Some(parent) = nodes[slot].parent {
            nodes[parent].children.push(slot);
        }
    }
    Ok(ResolutionTree { bound, q_limit, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::map::resolve;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    fn a(n: u64) -> ResolutionBound {
        ResolutionBound::new(n).unwrap()
    }

    #[test]
    fn bound_two_keeps_the_all_ones_skeleton() {
        let t = resolution_tree(a(2), 20).unwrap();
        assert!(!t.nodes().is_empty());
        for node in t.nodes() {
            assert!(node.cf.quotients().iter().all(|&q| q < 2), "{}", node.cf);
        }
        let slopes: Vec<String> = t.nodes().iter().map(|n| n.slope().to_string()).collect();
        for fib in ["0/1", "1/1", "1/2", "3/2", "3/5", "8/5", "8/13", "21/13"] {
            assert!(slopes.iter().any(|s| s == fib), "missing {fib}: {slopes:?}");
        }
        // only alternate-Fibonacci ratios survive: 2/3 and 5/3 have a 2 in
        // their word forms
        assert!(!slopes.iter().any(|s| s == "2/3"));
        assert!(!slopes.iter().any(|s| s == "5/3"));
    }

    #[test]
    fn structural_tree_property() {
        let t = resolution_tree(a(3), 15).unwrap();
        assert_eq!(t.edges().len(), t.nodes().len() - 1);
        assert_eq!(t.nodes().iter().filter(|n| n.parent.is_none()).count(), 1);
        for node in t.nodes() {
            assert!(node.point.is_prime());
            assert_eq!(node.word.base_image(), node.point);
        }
    }

    #[test]
    fn bound_three_annotates_one_with_its_zone() {
        let t = resolution_tree(a(3), 12).unwrap();
        let z = t.find_zone(&pr("1/1")).unwrap();
        assert_eq!(z.nu_minus, pr("3/4"));
        assert_eq!(z.nu_plus, pr("4/3"));
        assert!(t.to_json().contains("\"nu_minus\":\"3/4\""));
        // 4/3 is in the tree as a transit rational: present, no zone
        let node = t.nodes().iter().find(|n| n.slope() == pr("4/3")).unwrap();
        assert!(node.zone.is_none());
    }

    #[test]
    fn annotated_zone_interiors_map_to_their_node() {
        let t = resolution_tree(a(3), 8).unwrap();
        let mut checked = 0;
        for node in t.nodes() {
            let Some(z) = &node.zone else { continue };
            for x in crate::exact::farey_grid(&z.nu_minus, &z.nu_plus, 60) {
                assert_eq!(resolve(&x, a(3)).unwrap(), node.slope(), "{x} in zone of {}", node.slope());
                checked += 1;
            }
        }
        assert!(checked > 100, "scan too small: {checked}");
    }

    #[test]
    fn deterministic_export() {
        let x = resolution_tree(a(3), 6).unwrap();
        let y = resolution_tree(a(3), 6).unwrap();
        assert_eq!(x.to_json(), y.to_json());
        assert_eq!(x.to_dot(), y.to_dot());
    }
}

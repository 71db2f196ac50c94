//! The Farey tree realized on prime lattice points.
//!
//! Construction: the two base rays meet at (1,1); every branch is the image
//! of a base ray under a word, parameterized from its t = 1 point, and each
//! node is the origin of exactly one offshoot branch. In quotient terms the
//! two children of a node either increment a trailing quotient or open a
//! fresh `.., 1, 1` tail; the parent is the previous point on the node's
//! own branch. The point (1,0) hangs below (1,1) as the tail of the
//! vertical base ray; (0,1) (slope infinity) is kept as ray metadata, not
//! as a node.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::Result;

use super::word::{GeneratorWord, LatticePoint};

/// One prime point of the tree with its defining word and tree edges.
#[derive(Debug, Clone)]
pub struct FareyNode {
    pub point: LatticePoint,
    /// Word-form quotients `[a0,...,a2n]` of the slope.
    pub cf: ContinuedFraction,
    pub word: GeneratorWord,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl FareyNode {
    pub fn slope(&self) -> ProjectiveRational {
        self.point.slope()
    }
}

/// Finite window of the tree: prime points with `q <= q_limit` and slope
/// `<= q_limit + 1`, i.e. integer translates k = 0..q_limit of the
/// fundamental strip. Nodes are sorted by `(q, p)`.
#[derive(Debug, Clone)]
pub struct FareyTree {
    q_limit: u64,
    nodes: Vec<FareyNode>,
    index: BTreeMap<(BigInt, BigInt), usize>,
}

impl FareyTree {
    /// Grow the tree breadth-first inside the window.
    pub fn build(q_limit: u64) -> Result<Self> {
        if q_limit == 0 {
            return Err(crate::error::Error::BadDepth);
        }
        let in_window = |pt: &LatticePoint| -> bool {
            let q = pt.q();
            let p = pt.p();
            q <= &BigInt::from(q_limit) && p <= &(BigInt::from(q_limit + 1) * q)
        };

        // entries: (cf word form, parent slot); the root and the zero node
        // are seeded by hand, everything else follows the two-children rule.
        let mut nodes: Vec<(ContinuedFraction, Option<usize>)> = Vec::new();
        nodes.push((ContinuedFraction::new([1].to_vec())?, None));
        nodes.push((ContinuedFraction::new([0].to_vec())?, Some(0)));

        let mut cursor = 0usize;
        while cursor < nodes.len() {
            let (cf, _) = nodes[cursor].clone();
            for child in children_of(&cf) {
                let word = GeneratorWord::from_cf(&child)?;
                let pt = word.base_image();
                if !in_window(&pt) {
                    continue;
                }
                nodes.push((child, Some(cursor)));
            }
            cursor += 1;
        }

        // Canonicalize: sort by (q, p), remap parent/child slots.
        let mut enriched: Vec<(LatticePoint, ContinuedFraction, GeneratorWord, Option<usize>)> = Vec::new();
        for (cf, parent) in &nodes {
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

        let mut out: Vec<FareyNode> = order
            .iter()
            .map(|&old| {
                let (pt, cf, word, parent) = enriched[old].clone();
                FareyNode {
                    point: pt,
                    cf,
                    word,
                    parent: parent.map(|p| slot_of_old[p]),
                    children: Vec::new(),
                }
            })
            .collect();
        for slot in 0..out.len() {
            if let Some(parent) = out[slot].parent {
                out[parent].children.push(slot);
            }
        }

        let mut index = BTreeMap::new();
        for (slot, node) in out.iter().enumerate() {
            index.insert((node.point.q().clone(), node.point.p().clone()), slot);
        }
        Ok(Self { q_limit, nodes: out, index })
    }

    pub fn q_limit(&self) -> u64 {
        self.q_limit
    }

    pub fn nodes(&self) -> &[FareyNode] {
        &self.nodes
    }

    pub fn find(&self, point: &LatticePoint) -> Option<&FareyNode> {
        self.index
            .get(&(point.q().clone(), point.p().clone()))
            .map(|&slot| &self.nodes[slot])
    }

    /// Parent-child pairs, ascending by child slot.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(slot, n)| n.parent.map(|p| (p, slot)))
            .collect()
    }

    /// The base points of the two root rays: the horizontal ray through
    /// (0,1) and the vertical ray through (1,0).
    pub fn root_segments(&self) -> ((u64, u64), (u64, u64)) {
        ((0, 1), (1, 0))
    }

    /// Graphviz rendering, one node per prime point.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph farey {\n  node [shape=plaintext];\n");
        for node in &self.nodes {
            let _ = writeln!(
                s,
                "  \"{}_{}\" [label=\"{} {}\"];",
                node.point.q(),
                node.point.p(),
                node.slope(),
                node.cf
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

    /// JSON rendering with nodes, edges, and words.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        let _ = write!(s, "\"q_limit\":{},\"nodes\":[", self.q_limit);
        for (i, node) in self.nodes.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(
                s,
                "{{\"q\":{},\"p\":{},\"slope\":\"{}\",\"cf\":\"{}\",\"word\":\"{}\"}}",
                node.point.q(),
                node.point.p(),
                node.slope(),
                node.cf,
                node.word
            );
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

/// The two tree children of a word-form node.
///
/// Terminal quotient > 1: continue the node's own branch by incrementing
/// the terminal, and open the offshoot `[.., a-1, 1, 1]`. Terminal 1: the
/// node is an origin, so its branch continues by incrementing the terminal,
/// while the branch it sits on continues by incrementing the second-to-last
/// quotient. The root [1] is seeded specially by the builder.
pub fn children_of(cf: &ContinuedFraction) -> Vec<ContinuedFraction> {
    let q = cf.quotients();
    let mut out = Vec::with_capacity(2);
    if q == [0] {
        return out; // (1,0) is a leaf on the vertical base ray
    }
    if q == [1] {
        // root: next points on both base rays
        out.push(ContinuedFraction::new([2].to_vec()).unwrap());
        out.push(ContinuedFraction::new([0, 1, 1].to_vec()).unwrap());
        return out;
    }
    let last = *q.last().unwrap();
    if last > 1 {
        let mut a = q.to_vec();
        *a.last_mut().unwrap() += 1;
        out.push(ContinuedFraction::new(a).unwrap());

        let mut b = q.to_vec();
        *b.last_mut().unwrap() -= 1;
        b.push(1);
        b.push(1);
        out.push(ContinuedFraction::new(b).unwrap());
    } else {
        let mut a = q.to_vec();
        let k = a.len() - 2;
        a[k] += 1;
        out.push(ContinuedFraction::new(a).unwrap());

        let mut b = q.to_vec();
        *b.last_mut().unwrap() += 1;
        out.push(ContinuedFraction::new(b).unwrap());
    }
    out
}

//! Mother/daughter branch queries on Farey-tree nodes.
//!
//! Each query is answered twice: once by the printed continued-fraction
//! formulas (case split on the terminal word-form quotient) and once by a
//! geometric oracle that enumerates actual word-images of the base rays in
//! the lattice. The oracle is the source of truth; disagreements are
//! surfaced, never hidden. For the terminal-quotient-1 case the formulas
//! are known to be unreliable as printed, so flags there are expected.

use alloc::vec::Vec;

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::error::Error;
use crate::Result;

use super::word::{GeneratorWord, LatticePoint};

/// Formula value, oracle value, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchQuery {
    pub formula: ProjectiveRational,
    pub oracle: ProjectiveRational,
}

impl BranchQuery {
    pub fn agrees(&self) -> bool {
        self.formula == self.oracle
    }

    /// The geometric value (authoritative).
    pub fn value(&self) -> &ProjectiveRational {
        &self.oracle
    }
}

/// All three branch queries for one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchReport {
    /// Terminal quotient of the word form; the formula case split.
    pub terminal_quotient: u64,
    pub mother_origin: BranchQuery,
    pub mother_slope: BranchQuery,
    pub daughter_slope: BranchQuery,
}

impl BranchReport {
    pub fn discrepancies(&self) -> usize {
        [&self.mother_origin, &self.mother_slope, &self.daughter_slope]
            .iter()
            .filter(|q| !q.agrees())
            .count()
    }
}

/// Origin of the branch the node sits on as an interior point.
pub fn mother_origin(cf: &ContinuedFraction) -> Result<BranchQuery> {
    branch_report(cf).map(|r| r.mother_origin)
}

/// Slope of the direction vector of that branch line.
pub fn mother_slope(cf: &ContinuedFraction) -> Result<BranchQuery> {
    branch_report(cf).map(|r| r.mother_slope)
}

/// Slope of the branch that has the node as its origin.
pub fn daughter_slope(cf: &ContinuedFraction) -> Result<BranchQuery> {
    branch_report(cf).map(|r| r.daughter_slope)
}

/// Compute formula and oracle values for all three queries.
pub fn branch_report(node: &ContinuedFraction) -> Result<BranchReport> {
    let word_form = node.to_word_form()?;
    let value = word_form.value();
    if value == ProjectiveRational::one() {
        return Err(Error::ExcludedNode("(1,1) belongs to both base rays"));
    }
    if value == ProjectiveRational::zero() {
        return Err(Error::ExcludedNode("(1,0) is a root point"));
    }
    let q = word_form.quotients();
    let last = *q.last().unwrap();

    let eval = |quotients: Vec<u64>| -> ProjectiveRational {
        ContinuedFraction::new(quotients).expect("non-empty").value()
    };

    let (f_origin, f_slope, f_daughter) = if last > 1 {
        // [a0,...,a(2n-1),1] / [a0,...,a(2n-1)-1,1] / [a0,...,a2n - 1]
        let mut origin = q.to_vec();
        *origin.last_mut().unwrap() = 1;

        let slope = if q.len() == 1 {
            // Single-run node (1,m): its branch is the vertical base ray.
            ProjectiveRational::infinity()
        } else {
            let mut s = q[..q.len() - 1].to_vec();
            *s.last_mut().unwrap() -= 1;
            s.push(1);
            eval(s)
        };

        let mut daughter = q.to_vec();
        *daughter.last_mut().unwrap() -= 1;
        (eval(origin), slope, eval(daughter))
    } else {
        // Terminal quotient 1 (node list length >= 3):
        // [a0,...,a(2n-2)+1] / [0,a0,...,a(2n-2)] / [a0,...,a(2n-1)]
        let mut origin = q[..q.len() - 2].to_vec();
        *origin.last_mut().unwrap() += 1;

        let mut slope = Vec::with_capacity(q.len());
        slope.push(0);
        slope.extend_from_slice(&q[..q.len() - 2]);

        let daughter = q[..q.len() - 1].to_vec();
        (eval(origin), eval(slope), eval(daughter))
    };

    let node_point = GeneratorWord::from_cf(&word_form)?.base_image();
    let oracle = geometric_oracle(&word_form, &node_point)?;

    Ok(BranchReport {
        terminal_quotient: last,
        mother_origin: BranchQuery { formula: f_origin, oracle: oracle.0 },
        mother_slope: BranchQuery { formula: f_slope, oracle: oracle.1 },
        daughter_slope: BranchQuery { formula: f_daughter, oracle: oracle.2 },
    })
}

/// Enumerate lattice points of the two branches through the node by
/// applying word matrices to the base-ray parameterizations, then read off
/// origin and direction slopes. Asserts that the node actually lies where
/// the construction places it.
fn geometric_oracle(
    word_form: &ContinuedFraction,
    node_point: &LatticePoint,
) -> Result<(ProjectiveRational, ProjectiveRational, ProjectiveRational)> {
    let quotients = word_form.quotients();
    let runs = GeneratorWord::from_cf(word_form)?.runs().to_vec();
    let last = *quotients.last().unwrap();

    let pt = |q: u64, p: u64| LatticePoint::new(q, p).unwrap();

    if last > 1 {
        // Mother: image of the vertical ray under the word with its
        // terminal run cut to exponent 1; points v(1,t), t >= 0.
        let mut v_runs = runs.clone();
        v_runs.last_mut().unwrap().1 = 1;
        let v = GeneratorWord::from_runs(v_runs)?.matrix();
        let p0 = v.apply_point(&pt(1, 0))?;
        let p1 = v.apply_point(&pt(1, 1))?;
        let on_branch = v.apply_point(&pt(1, last - 1))?;
        if &on_branch != node_point {
            return Err(Error::Invalid(alloc::format!(
                "oracle: node {node_point} not on its mother branch"
            )));
        }
        let direction = p0.direction_to(&p1)?;

        // Daughter: image of the horizontal ray under the word with its
        // terminal exponent decremented; points w(t,1), t >= 1.
        let mut w_runs = runs;
        w_runs.last_mut().unwrap().1 = last - 1;
        let w = GeneratorWord::from_runs(w_runs)?.matrix();
        let q1 = w.apply_point(&pt(1, 1))?;
        if &q1 != node_point {
            return Err(Error::Invalid(alloc::format!(
                "oracle: node {node_point} is not its daughter's origin"
            )));
        }
        let q2 = w.apply_point(&pt(2, 1))?;
        let d_direction = q1.direction_to(&q2)?;

        Ok((p0.slope(), direction.slope(), d_direction.slope()))
    } else {
        // Terminal quotient 1. Mother: horizontal-ray image under the word
        // with the last two runs (J^a(2n-1) T^1) removed; node sits at
        // parameter a(2n-1)+1.
        let m_runs = runs[..runs.len() - 2].to_vec();
        let m = GeneratorWord::from_runs(m_runs)?.matrix();
        let prev = quotients[quotients.len() - 2];
        let origin = m.apply_point(&pt(1, 1))?;
        let second = m.apply_point(&pt(2, 1))?;
        let on_branch = m.apply_point(&pt(prev + 1, 1))?;
        if &on_branch != node_point {
            return Err(Error::Invalid(alloc::format!(
                "oracle: node {node_point} not on its mother branch"
            )));
        }
        let direction = origin.direction_to(&second)?;

        // Daughter: vertical-ray image under the word minus its last run;
        // the node is the t = 1 point.
        let u_runs = runs[..runs.len() - 1].to_vec();
        let u = GeneratorWord::from_runs(u_runs)?.matrix();
        let p1 = u.apply_point(&pt(1, 1))?;
        if &p1 != node_point {
            return Err(Error::Invalid(alloc::format!(
                "oracle: node {node_point} is not its daughter's origin"
            )));
        }
        let p2 = u.apply_point(&pt(1, 2))?;
        let d_direction = p1.direction_to(&p2)?;

        Ok((origin.slope(), direction.slope(), d_direction.slope()))
    }
}

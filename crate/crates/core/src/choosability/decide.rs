//! The exhaustive deciders.
//!
//! Both deciders scan the canonical assignment space in index order. Cheap
//! filters (union constraint, canonicity under palette permutations) run
//! before each exact solve. The parallel path splits the index range into
//! ordered chunks and takes the first hit by index, so the verdict, the
//! witness and the examined count are identical for every `jobs` setting:
//! `assignments_examined` counts candidate indices up to the witness (or the
//! whole space), whether or not symmetry skipped them.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::listcolor::{feasible_masks, ListAssignment, SizeFunction};

use super::enumerate::{AssignmentSpace, SymmetryTables, MAX_SYMMETRY_PALETTE};
use super::{ChooseError, ChooseOptions};

/// Outcome of an exhaustive `[f,k]`-choosability run. The witness, present
/// exactly when not choosable, is the first infeasible assignment in
/// canonical enumeration order.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    pub witness: Option<ListAssignment>,
    pub assignments_examined: u64,
}

/// Outcome of a `([f,k], V')`-criticality check.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalityReport {
    pub is_critical: bool,
    /// Infeasible assignment whose lists over V' miss a palette color.
    pub witness: Option<ListAssignment>,
    /// A vertex of V' whose size bump leaves the graph non-choosable,
    /// together with the counterexample assignment.
    pub failed_bump: Option<(String, ListAssignment)>,
    pub assignments_examined: u64,
}

struct Scan<'a> {
    space: &'a AssignmentSpace,
    adj: &'a [Vec<usize>],
    tables: Option<&'a SymmetryTables>,
    constraint: Option<(&'a [usize], u32)>,
}

impl<'a> Scan<'a> {
    /// First index in `[lo, hi)` holding a canonical, constraint-satisfying,
    /// infeasible assignment.
    fn range(&self, lo: u64, hi: u64) -> Option<(u64, Vec<u32>)> {
        let mut masks = Vec::new();
        self.space.decode(lo, &mut masks);
        let mut digits = self.space.digits_of(lo);
        let mut idx = lo;
        while idx < hi {
            let mut candidate = true;
            if let Some((verts, bound)) = self.constraint {
                let union = verts.iter().fold(0u32, |m, &v| m | masks[v]);
                if union.count_ones() > bound {
                    candidate = false;
                }
            }
            if candidate {
                if let Some(tables) = self.tables {
                    candidate = self.space.is_canonical(&masks, tables);
                }
            }
            if candidate && !feasible_masks(self.adj, &masks) {
                return Some((idx, masks));
            }
            idx += 1;
            if idx < hi && !self.space.advance(&mut digits, &mut masks) {
                break;
            }
        }
        None
    }

    fn run(&self, limit: u64, jobs: usize) -> Option<(u64, Vec<u32>)> {
        if jobs <= 1 || limit < 8192 {
            return self.range(0, limit);
        }
        let chunk = (limit / (jobs as u64 * 16)).max(4096);
        let nchunks = limit.div_ceil(chunk);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..nchunks).into_par_iter().find_map_first(|c| {
                let lo = c * chunk;
                let hi = (lo + chunk).min(limit);
                self.range(lo, hi)
            })
        })
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.neighbor_indices(v).collect())
        .collect()
}

fn tables_for(k: u8, opts: &ChooseOptions) -> Option<SymmetryTables> {
    if opts.symmetry && k <= MAX_SYMMETRY_PALETTE {
        Some(SymmetryTables::new(k))
    } else {
        None
    }
}

/// Decides `[f,k]`-choosability by exhausting the assignment space.
/// Intended for desk scale; the budget caps the scan.
pub fn is_fk_choosable(
    g: &Graph,
    f: &SizeFunction,
    k: u8,
    opts: &ChooseOptions,
) -> Result<ChoosabilityVerdict, ChooseError> {
    let space = AssignmentSpace::new(g, f, k)?;
    let adj = adjacency(g);
    let tables = tables_for(k, opts);
    let limit = space.total().min(opts.budget);
    let scan = Scan {
        space: &space,
        adj: &adj,
        tables: tables.as_ref(),
        constraint: None,
    };
    match scan.run(limit, opts.jobs) {
        Some((idx, masks)) => Ok(ChoosabilityVerdict {
            choosable: false,
            witness: Some(ListAssignment::from_masks(g, k, &masks)),
            assignments_examined: idx + 1,
        }),
        None if limit < space.total() => Err(ChooseError::BudgetExceeded { examined: limit }),
        None => Ok(ChoosabilityVerdict {
            choosable: true,
            witness: None,
            assignments_examined: space.total(),
        }),
    }
}

/// Checks `([f,k], V')`-criticality literally: search for an infeasible
/// assignment whose lists over V' miss a color, then verify that bumping any
/// single `f(v)`, `v` in V', restores choosability. The witness search runs
/// the (cheaper) union-constrained space first.
pub fn is_critical(
    g: &Graph,
    f: &SizeFunction,
    k: u8,
    vprime: &[String],
    opts: &ChooseOptions,
) -> Result<CriticalityReport, ChooseError> {
    if vprime.is_empty() {
        return Err(ChooseError::BadCriticalSubset("V' is empty".into()));
    }
    let mut vprime_idx = Vec::new();
    for v in vprime {
        let i = g
            .index_of(v)
            .map_err(|_| ChooseError::UnknownVertex(v.clone()))?;
        if vprime_idx.contains(&i) {
            return Err(ChooseError::BadCriticalSubset(format!(
                "duplicate vertex {v:?}"
            )));
        }
        let size = f
            .get(v)
            .ok_or_else(|| ChooseError::MissingSize(v.clone()))?;
        if size >= k {
            return Err(ChooseError::BadCriticalSubset(format!(
                "f({v:?}) = {size} cannot be bumped within palette {k}"
            )));
        }
        vprime_idx.push(i);
    }
    vprime_idx.sort_unstable();

    let space = AssignmentSpace::new(g, f, k)?;
    let adj = adjacency(g);
    let tables = tables_for(k, opts);
    let limit = space.total().min(opts.budget);
    let scan = Scan {
        space: &space,
        adj: &adj,
        tables: tables.as_ref(),
        constraint: Some((&vprime_idx, (k - 1) as u32)),
    };
    let hit = scan.run(limit, opts.jobs);
    let (witness, mut examined) = match hit {
        Some((idx, masks)) => (ListAssignment::from_masks(g, k, &masks), idx + 1),
        None if limit < space.total() => {
            return Err(ChooseError::BudgetExceeded { examined: limit })
        }
        None => {
            return Ok(CriticalityReport {
                is_critical: false,
                witness: None,
                failed_bump: None,
                assignments_examined: space.total(),
            })
        }
    };

    // bump checks, in canonical vertex order
    let mut order: Vec<&String> = vprime.iter().collect();
    order.sort_by_key(|v| g.index_of(v).expect("validated"));
    for v in order {
        let bumped = f.bumped(v);
        let verdict = is_fk_choosable(g, &bumped, k, opts)?;
        examined += verdict.assignments_examined;
        if !verdict.choosable {
            return Ok(CriticalityReport {
                is_critical: false,
                witness: Some(witness),
                failed_bump: Some((v.clone(), verdict.witness.expect("non-choosable"))),
                assignments_examined: examined,
            });
        }
    }
    Ok(CriticalityReport {
        is_critical: true,
        witness: Some(witness),
        failed_bump: None,
        assignments_examined: examined,
    })
}

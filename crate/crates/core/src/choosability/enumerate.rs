//! Canonical enumeration of f-list assignments over a palette `{1..k}`.
//!
//! The assignment space is a mixed-radix odometer: vertices in canonical
//! order, each digit indexing the lexicographically ordered f(v)-subsets of
//! the palette. Indices are therefore seekable, which lets deciders split
//! the space into contiguous chunks for parallel scans while keeping a
//! global enumeration order.
//!
//! Symmetry breaking keeps exactly the assignments that are lexicographically
//! minimal in their orbit under palette permutations (color relabelings);
//! vertex symmetries are deliberately not exploited.

use crate::graph::Graph;
use crate::listcolor::{ListAssignment, SizeFunction};

use super::ChooseError;

/// Largest palette for which permutation tables are built. All desk-scale
/// palettes in this crate are <= 6; beyond that symmetry pruning degrades
/// to plain enumeration.
pub const MAX_SYMMETRY_PALETTE: u8 = 6;

#[derive(Debug, Clone)]
pub struct AssignmentSpace {
    k: u8,
    sizes: Vec<u8>,
    /// per size s: the s-subsets of {1..k} as bitmasks, lexicographic.
    subsets: Vec<Vec<u32>>,
    /// mask -> rank within its size class.
    rank: Vec<u16>,
    /// per vertex: product of radices of the vertices after it.
    suffix: Vec<u64>,
    total: u64,
}

impl AssignmentSpace {
    pub fn new(g: &Graph, f: &SizeFunction, k: u8) -> Result<Self, ChooseError> {
        if k == 0 {
            return Err(ChooseError::BadPalette(k));
        }
        let mut sizes = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let s = f
                .get(v)
                .ok_or_else(|| ChooseError::MissingSize(v.to_string()))?;
            if s == 0 || s > k {
                return Err(ChooseError::SizeOutsidePalette {
                    vertex: v.to_string(),
                    size: s,
                    palette: k,
                });
            }
            sizes.push(s);
        }
        let subsets = subsets_by_size(k);
        let rank = rank_table(k, &subsets);
        let mut suffix = vec![1u64; sizes.len() + 1];
        for v in (0..sizes.len()).rev() {
            let radix = subsets[sizes[v] as usize].len() as u64;
            suffix[v] = suffix[v + 1].saturating_mul(radix);
        }
        let total = suffix.first().copied().unwrap_or(1);
        Ok(AssignmentSpace {
            k,
            sizes,
            subsets,
            rank,
            suffix,
            total,
        })
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn palette(&self) -> u8 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.len()
    }

    /// Decodes an index into per-vertex list masks.
    pub fn decode(&self, idx: u64, masks: &mut Vec<u32>) {
        masks.clear();
        for v in 0..self.sizes.len() {
            let radix = self.subsets[self.sizes[v] as usize].len() as u64;
            let digit = (idx / self.suffix[v + 1]) % radix;
            masks.push(self.subsets[self.sizes[v] as usize][digit as usize]);
        }
    }

    /// Advances a digit vector (and the corresponding masks) by one step;
    /// returns false when the space is exhausted.
    pub fn advance(&self, digits: &mut [usize], masks: &mut [u32]) -> bool {
        for v in (0..self.sizes.len()).rev() {
            let class = &self.subsets[self.sizes[v] as usize];
            digits[v] += 1;
            if digits[v] < class.len() {
                masks[v] = class[digits[v]];
                return true;
            }
            digits[v] = 0;
            masks[v] = class[0];
        }
        false
    }

    pub fn digits_of(&self, idx: u64) -> Vec<usize> {
        (0..self.sizes.len())
            .map(|v| {
                let radix = self.subsets[self.sizes[v] as usize].len() as u64;
                ((idx / self.suffix[v + 1]) % radix) as usize
            })
            .collect()
    }

    /// True when no palette permutation maps the assignment to a
    /// lexicographically smaller one.
    pub fn is_canonical(&self, masks: &[u32], tables: &SymmetryTables) -> bool {
        'perm: for table in &tables.tables {
            for &m in masks {
                let r_orig = self.rank[m as usize];
                let r_perm = self.rank[table[m as usize] as usize];
                if r_perm < r_orig {
                    return false;
                }
                if r_perm > r_orig {
                    continue 'perm;
                }
            }
        }
        true
    }
}

/// Mask-rewrite tables, one per non-identity palette permutation.
#[derive(Debug, Clone)]
pub struct SymmetryTables {
    tables: Vec<Vec<u32>>,
}

impl SymmetryTables {
    pub fn new(k: u8) -> Self {
        let mut perms = Vec::new();
        let mut items: Vec<u8> = (0..k).collect();
        heap_permute(&mut items, k as usize, &mut perms);
        let tables = perms
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i as u8 != x))
            .map(|p| {
                (0u32..1 << k)
                    .map(|mask| {
                        let mut out = 0u32;
                        for bit in 0..k {
                            if mask >> bit & 1 == 1 {
                                out |= 1 << p[bit as usize];
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        SymmetryTables { tables }
    }
}

fn heap_permute(items: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn subsets_by_size(k: u8) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); k as usize + 1];
    // lexicographic combinations of 1..=k for every size
    fn rec(k: u8, start: u8, current: &mut Vec<u8>, out: &mut Vec<Vec<u32>>) {
        let mask = current.iter().fold(0u32, |m, &c| m | 1 << (c - 1));
        out[current.len()].push(mask);
        for c in start..=k {
            current.push(c);
            rec(k, c + 1, current, out);
            current.pop();
        }
    }
    let mut current = Vec::new();
    rec(k, 1, &mut current, &mut out);
    // the recursion above emits prefixes in lex order per size already
    out
}

fn rank_table(k: u8, subsets: &[Vec<u32>]) -> Vec<u16> {
    let mut rank = vec![0u16; 1 << k];
    for class in subsets {
        for (r, &m) in class.iter().enumerate() {
            rank[m as usize] = r as u16;
        }
    }
    rank
}

/// Streaming form of the public enumeration operation.
pub struct AssignmentIter<'g> {
    g: &'g Graph,
    space: AssignmentSpace,
    tables: Option<SymmetryTables>,
    constraint: Option<(Vec<usize>, u32)>,
    digits: Vec<usize>,
    masks: Vec<u32>,
    started: bool,
    done: bool,
}

impl<'g> Iterator for AssignmentIter<'g> {
    type Item = ListAssignment;

    fn next(&mut self) -> Option<ListAssignment> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                if !self.space.advance(&mut self.digits, &mut self.masks) {
                    self.done = true;
                    return None;
                }
            } else {
                self.started = true;
                if self.space.total() == 0 {
                    self.done = true;
                    return None;
                }
            }
            if let Some((verts, bound)) = &self.constraint {
                let union = verts.iter().fold(0u32, |m, &v| m | self.masks[v]);
                if union.count_ones() > *bound {
                    continue;
                }
            }
            if let Some(tables) = &self.tables {
                if !self.space.is_canonical(&self.masks, tables) {
                    continue;
                }
            }
            return Some(ListAssignment::from_masks(
                self.g,
                self.space.palette(),
                &self.masks,
            ));
        }
    }
}

/// Emits every f-list assignment over `{1..k}` exactly once — up to global
/// color permutation when `symmetry` is on — optionally restricted to
/// assignments whose lists over `union_constraint.0` cover at most
/// `union_constraint.1` colors.
pub fn enumerate_assignments<'g>(
    g: &'g Graph,
    f: &SizeFunction,
    k: u8,
    symmetry: bool,
    union_constraint: Option<(&[String], u32)>,
) -> Result<AssignmentIter<'g>, ChooseError> {
    let space = AssignmentSpace::new(g, f, k)?;
    let constraint = match union_constraint {
        None => None,
        Some((verts, bound)) => {
            let idx: Result<Vec<usize>, _> = verts
                .iter()
                .map(|v| {
                    g.index_of(v)
                        .map_err(|_| ChooseError::UnknownVertex(v.clone()))
                })
                .collect();
            Some((idx?, bound))
        }
    };
    let tables = if symmetry && k <= MAX_SYMMETRY_PALETTE {
        Some(SymmetryTables::new(k))
    } else {
        None
    };
    let mut masks = Vec::new();
    space.decode(0, &mut masks);
    let digits = space.digits_of(0);
    Ok(AssignmentIter {
        g,
        space,
        tables,
        constraint,
        digits,
        masks,
        started: false,
        done: false,
    })
}

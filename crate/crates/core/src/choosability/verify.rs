//! Exhaustive verification of gadget properties: the input/output freedom,
//! blocking and nice-color properties of propagator-style gadgets, the
//! forced-literal property of the universal-variable gadget, transmission
//! along a path, and plain f-choosability. Every check enumerates the
//! conforming list assignments (all properties are invariant under palette
//! permutation, so canonical representatives suffice when symmetry is on).

use crate::gadgets::GadgetWithRoles;
use crate::listcolor::{feasible, feasible_colors, ListAssignment};

use super::{enumerate_assignments, is_fk_choosable, ChooseError, ChooseOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetProperty {
    /// For every conforming assignment and every color in the role vertex's
    /// list there is a list coloring with that pin.
    PinAlwaysExtendable { role: String },
    /// Some conforming assignment admits a common color `c` in the input and
    /// output lists such that colorings with input = `c` exist and all of
    /// them give the output `c` as well.
    BlockingAssignmentExists { input: String, output: String },
    /// Every conforming assignment has a "nice" input color: one for which
    /// every color of the output list stays reachable.
    NiceColorExists { input: String, output: String },
    /// For every conforming assignment, at most one of the two literal
    /// vertices is forced to a single color, and then the other one is
    /// completely free within its list.
    ForcedLiteralPair { u: String, ubar: String },
    /// On the gadget's canonical assignment, pinning the input to `pin`
    /// is satisfiable and forces the output to `target`.
    Transmission {
        input: String,
        output: String,
        pin: u8,
        target: u8,
    },
    /// The gadget graph is `[f, palette]`-choosable for its size function.
    FkChoosable { palette: u8 },
}

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub property: GadgetProperty,
    pub pass: bool,
    pub counterexample: Option<ListAssignment>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

fn role_vertex<'a>(gadget: &'a GadgetWithRoles, name: &str) -> Result<&'a str, ChooseError> {
    gadget
        .role_vertex(name)
        .ok_or_else(|| ChooseError::MissingRole(name.to_string()))
}

struct Budget {
    left: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<(), ChooseError> {
        if self.left == 0 {
            return Err(ChooseError::BudgetExceeded { examined: 0 });
        }
        self.left -= 1;
        Ok(())
    }
}

/// Runs the selected property checks against the gadget, reporting one
/// pass/fail (with counterexample) per property.
pub fn verify_gadget_properties(
    gadget: &GadgetWithRoles,
    properties: &[GadgetProperty],
    opts: &ChooseOptions,
) -> Result<PropertyReport, ChooseError> {
    let mut results = Vec::new();
    for p in properties {
        results.push(check_property(gadget, p, opts)?);
    }
    Ok(PropertyReport { results })
}

fn check_property(
    gadget: &GadgetWithRoles,
    property: &GadgetProperty,
    opts: &ChooseOptions,
) -> Result<PropertyResult, ChooseError> {
    let g = &gadget.graph;
    let mut budget = Budget { left: opts.budget };
    let pass_result =
        |pass: bool, counterexample: Option<ListAssignment>, detail: String| PropertyResult {
            property: property.clone(),
            pass,
            counterexample,
            detail,
        };

    match property {
        GadgetProperty::PinAlwaysExtendable { role } => {
            let v = role_vertex(gadget, role)?;
            for l in enumerate_assignments(g, &gadget.sizes, gadget.palette, opts.symmetry, None)? {
                budget.tick()?;
                for c in l.get(v).expect("conforming").clone() {
                    if !feasible(g, &l, &[(v, c)])? {
                        return Ok(pass_result(
                            false,
                            Some(l),
                            format!("pin {v}={c} does not extend"),
                        ));
                    }
                }
            }
            Ok(pass_result(true, None, String::new()))
        }
        GadgetProperty::BlockingAssignmentExists { input, output } => {
            let vi = role_vertex(gadget, input)?;
            let vo = role_vertex(gadget, output)?;
            for l in enumerate_assignments(g, &gadget.sizes, gadget.palette, opts.symmetry, None)? {
                budget.tick()?;
                let common: Vec<u8> = l
                    .get(vi)
                    .expect("conforming")
                    .intersection(l.get(vo).expect("conforming"))
                    .copied()
                    .collect();
                for c in common {
                    let outputs = feasible_colors(g, &l, &[(vi, c)], vo)?;
                    if outputs == vec![c] {
                        return Ok(pass_result(
                            true,
                            Some(l),
                            format!("pinning {vi}={c} forces {vo}={c}"),
                        ));
                    }
                }
            }
            Ok(pass_result(
                false,
                None,
                "no blocking assignment found".into(),
            ))
        }
        GadgetProperty::NiceColorExists { input, output } => {
            let vi = role_vertex(gadget, input)?;
            let vo = role_vertex(gadget, output)?;
            for l in enumerate_assignments(g, &gadget.sizes, gadget.palette, opts.symmetry, None)? {
                budget.tick()?;
                let out_list: Vec<u8> = l.get(vo).expect("conforming").iter().copied().collect();
                let nice = l.get(vi).expect("conforming").iter().copied().any(|c| {
                    out_list
                        .iter()
                        .all(|&d| feasible(g, &l, &[(vi, c), (vo, d)]).unwrap_or(false))
                });
                if !nice {
                    return Ok(pass_result(false, Some(l), "no nice input color".into()));
                }
            }
            Ok(pass_result(true, None, String::new()))
        }
        GadgetProperty::ForcedLiteralPair { u, ubar } => {
            let vu = role_vertex(gadget, u)?;
            let vb = role_vertex(gadget, ubar)?;
            for l in enumerate_assignments(g, &gadget.sizes, gadget.palette, opts.symmetry, None)? {
                budget.tick()?;
                let a = feasible_colors(g, &l, &[], vu)?;
                let b = feasible_colors(g, &l, &[], vb)?;
                let lu: Vec<u8> = l.get(vu).expect("conforming").iter().copied().collect();
                let lb: Vec<u8> = l.get(vb).expect("conforming").iter().copied().collect();
                let ok = !a.is_empty()
                    && !b.is_empty()
                    && (a.len() > 1 || b == lb)
                    && (b.len() > 1 || a == lu);
                if !ok {
                    return Ok(pass_result(
                        false,
                        Some(l),
                        format!("feasible colors {vu}: {a:?}, {vb}: {b:?}"),
                    ));
                }
            }
            Ok(pass_result(true, None, String::new()))
        }
        GadgetProperty::Transmission {
            input,
            output,
            pin,
            target,
        } => {
            let vi = role_vertex(gadget, input)?;
            let vo = role_vertex(gadget, output)?;
            let l = gadget
                .canonical_assignment
                .as_ref()
                .ok_or_else(|| ChooseError::MissingRole("canonicalAssignment".into()))?;
            let outputs = feasible_colors(g, l, &[(vi, *pin)], vo)?;
            let pass = outputs == vec![*target];
            Ok(pass_result(
                pass,
                if pass { None } else { Some(l.clone()) },
                format!("outputs reachable from {vi}={pin}: {outputs:?}"),
            ))
        }
        GadgetProperty::FkChoosable { palette } => {
            let verdict = is_fk_choosable(g, &gadget.sizes, *palette, opts)?;
            Ok(pass_result(
                verdict.choosable,
                verdict.witness,
                format!("examined {}", verdict.assignments_examined),
            ))
        }
    }
}

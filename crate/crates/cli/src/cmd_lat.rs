//! `laminar lat` — lattice property checks and CD-independence analysis.

use std::path::PathBuf;

use clap::Subcommand;
use laminar_core::cd::{self, DEFAULT_ENUMERATION_CAP};
use laminar_core::lattice::io as lattice_io;
use laminar_core::props::{self, PropertyOutcome};
use laminar_core::Lattice;

use crate::{json_line, read_file, CmdResult};

#[derive(Subcommand)]
pub enum LatCmd {
    /// Report which structural properties the lattice has
    Check {
        /// Lattice file (`elements n` header, then cover pairs)
        file: PathBuf,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Analyze CD-independent (pairwise comparable-or-disjoint) subsets
    Cd {
        /// Lattice file (`elements n` header, then cover pairs)
        file: PathBuf,
        /// List every maximal CD-independent set, one per line
        #[arg(long, group = "action")]
        enumerate: bool,
        /// Compare the maximal sets against the length + |atoms| ceiling
        #[arg(long, group = "action")]
        bound: bool,
        /// Verify maximal-set sizes and the coatom/pair descriptions of
        /// the maximal family (applicable parts depend on the lattice)
        #[arg(long, group = "action")]
        verify_sizes: bool,
        /// Verify that complemented, mutually pseudocomplemented pairs
        /// consist of meet-irreducible elements
        #[arg(long, group = "action")]
        verify_mir_pairs: bool,
        /// Largest lattice the enumeration routines will accept
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cmd: LatCmd) -> CmdResult {
    match cmd {
        LatCmd::Check { file, json } => check(&file, json),
        LatCmd::Cd {
            file,
            enumerate,
            bound,
            verify_sizes,
            verify_mir_pairs,
            cap,
            json,
        } => {
            let lat = load(&file)?;
            if enumerate {
                cd_enumerate(&lat, cap, json)
            } else if verify_sizes {
                cd_verify_sizes(&lat, cap, json)
            } else if verify_mir_pairs {
                cd_verify_mir_pairs(&lat, json)
            } else {
                let _ = bound;
                cd_bound(&lat, cap, json)
            }
        }
    }
}

fn load(file: &PathBuf) -> Result<Lattice, String> {
    let text = read_file(file)?;
    lattice_io::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn check(file: &PathBuf, json: bool) -> CmdResult {
    let lat = load(file)?;
    let summary = serde_json::json!({
        "elements": lat.len(),
        "length": lat.length(),
        "atoms": lat.atoms().len(),
    });
    if json {
        json_line(&summary)?;
    } else {
        println!("elements: {}", lat.len());
        println!("length: {}", lat.length());
        println!("atoms: {}", lat.atoms().len());
    }
    for check in props::registry() {
        let report = check.check(&lat);
        if json {
            json_line(&report)?;
        } else {
            match &report.outcome {
                PropertyOutcome::Holds => println!("{}: true", report.name),
                PropertyOutcome::Fails { witness } => {
                    println!("{}: false ({witness})", report.name)
                }
                PropertyOutcome::Skipped { reason } => {
                    println!("{}: skipped ({reason})", report.name)
                }
            }
        }
    }
    Ok(0)
}

fn indices(set: &[usize]) -> String {
    set.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cd_enumerate(lat: &Lattice, cap: usize, json: bool) -> CmdResult {
    let sets = cd::enumerate_maximal(lat, cap).map_err(|e| e.to_string())?;
    let as_lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    if json {
        json_line(&serde_json::json!({
            "maximal_sets": as_lists.len(),
            "sets": as_lists,
        }))?;
    } else {
        for set in &as_lists {
            println!("{}", indices(set));
        }
    }
    Ok(0)
}

fn cd_bound(lat: &Lattice, cap: usize, json: bool) -> CmdResult {
    let sets = cd::enumerate_maximal(lat, cap).map_err(|e| e.to_string())?;
    let bound = cd::size_bound(lat);
    let largest = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let violations: Vec<Vec<usize>> = sets
        .iter()
        .filter(|s| s.len() > bound)
        .map(|s| s.to_vec())
        .collect();
    let report = cd::BoundReport {
        maximal_sets: sets.len(),
        largest,
        bound,
        violations,
    };
    let meet_distributive = props::is_meet_distributive(lat).holds();
    if json {
        json_line(&serde_json::json!({
            "meet_distributive": meet_distributive,
            "bound_check": report,
        }))?;
    } else {
        println!("meet-distributive: {meet_distributive}");
        println!("bound: {}", report.bound);
        println!("maximal-sets: {}", report.maximal_sets);
        println!("largest: {}", report.largest);
        for v in &report.violations {
            println!("exceeds-bound: {}", indices(v));
        }
    }
    // Exceeding the ceiling disproves a claim only where the claim
    // applies; elsewhere the numbers are purely descriptive.
    if meet_distributive && !report.ok() {
        Ok(1)
    } else {
        Ok(0)
    }
}

fn family_compare_lines(label: &str, part: &Option<cd::FamilyCompare>) {
    match part {
        None => println!("{label}: skipped (hypotheses not satisfied)"),
        Some(c) if c.ok() => {
            println!("{label}: ok ({} sets described and enumerated)", c.enumerated)
        }
        Some(c) => {
            println!(
                "{label}: FAILED (enumerated {}, described {})",
                c.enumerated, c.described
            );
            for s in &c.only_enumerated {
                println!("{label} only-enumerated: {}", indices(s));
            }
            for s in &c.only_described {
                println!("{label} only-described: {}", indices(s));
            }
        }
    }
}

fn cd_verify_sizes(lat: &Lattice, cap: usize, json: bool) -> CmdResult {
    let report = cd::verify_size_and_descriptions(lat, cap).map_err(|e| e.to_string())?;
    if json {
        json_line(&report)?;
    } else {
        println!("elements: {}", report.elements);
        println!("length: {}", report.length);
        println!("atoms: {}", report.atoms);
        println!("bound: {}", report.bound);
        println!("meet-distributive: {}", report.meet_distributive);
        println!("dually-slim: {}", report.dually_slim);
        println!("lower-semimodular: {}", report.lower_semimodular);
        println!("distributive: {}", report.distributive);
        match &report.bound_check {
            None => println!("bound-check: skipped (not meet-distributive)"),
            Some(b) if b.ok() => println!(
                "bound-check: ok ({} maximal sets, largest {} within bound {})",
                b.maximal_sets, b.largest, b.bound
            ),
            Some(b) => {
                println!("bound-check: FAILED");
                for v in &b.violations {
                    println!("exceeds-bound: {}", indices(v));
                }
            }
        }
        family_compare_lines("mir-pair-description", &report.mir_pair_description);
        family_compare_lines(
            "incomparable-pair-description",
            &report.incomparable_pair_description,
        );
        family_compare_lines(
            "complement-pair-description",
            &report.complement_pair_description,
        );
    }
    Ok(if report.ok() { 0 } else { 1 })
}

fn cd_verify_mir_pairs(lat: &Lattice, json: bool) -> CmdResult {
    let report = cd::verify_mir_pairs(lat).map_err(|e| e.to_string())?;
    if json {
        json_line(&report)?;
    } else {
        println!("pairs-checked: {}", report.pairs_checked);
        for v in &report.violations {
            println!(
                "violation: pair ({}, {}) has non-meet-irreducible elements {}",
                v.a,
                v.b,
                indices(&v.not_meet_irreducible)
            );
        }
        if report.ok() {
            println!("mir-pairs: ok");
        } else {
            println!("mir-pairs: FAILED");
        }
    }
    Ok(if report.ok() { 0 } else { 1 })
}

//! `laminar gen` — input generators: posets, circle families, catalog.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Subcommand;
use laminar_core::circles::{io as circles_io, CircleFamily, Mode};
use laminar_core::gen::{
    all_posets, downset_lattice, named_lattices, random_circle_family, CatalogItem, FamilyOptions,
};
use laminar_core::lattice::io as lattice_io;

use crate::{write_file, CmdResult};

#[derive(Subcommand)]
pub enum GenCmd {
    /// Write the downset lattice of every poset on k elements (k <= 5)
    Posets {
        /// Number of poset elements
        k: usize,
        /// Output file; omit to print to stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw a random circle family and write it as a circle file
    Circles {
        /// Random seed
        #[arg(long)]
        seed: u64,
        /// Number of circles
        #[arg(long)]
        count: usize,
        /// Family mode
        #[arg(long, default_value = "collinear", value_parser = ["collinear", "general"])]
        mode: String,
        /// Require pairwise distinct axis endpoints (collinear only)
        #[arg(long)]
        separated: bool,
        /// Draw a concave family: radii strictly convex over evenly
        /// spaced centres (collinear only; implies separated)
        #[arg(long)]
        concave: bool,
        /// Reject families in which one disk contains another
        #[arg(long)]
        no_encapsulation: bool,
        /// Redraw budget before giving up
        #[arg(long, default_value_t = 400)]
        attempts: u32,
        /// Output circle file
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write every catalog entry into a directory
    Catalog {
        /// Output directory, created if missing
        #[arg(short, long)]
        out: PathBuf,
    },
}

pub fn run(cmd: GenCmd) -> CmdResult {
    match cmd {
        GenCmd::Posets { k, out } => posets(k, out.as_deref()),
        GenCmd::Circles {
            seed,
            count,
            mode,
            separated,
            concave,
            no_encapsulation,
            attempts,
            out,
        } => circles(
            seed,
            count,
            &mode,
            separated,
            concave,
            no_encapsulation,
            attempts,
            &out,
        ),
        GenCmd::Catalog { out } => catalog(&out),
    }
}

fn posets(k: usize, out: Option<&Path>) -> CmdResult {
    let iter = all_posets(k).map_err(|e| e.to_string())?;
    let mut text = String::new();
    let mut count = 0usize;
    for poset in iter {
        let (lat, _labels) = downset_lattice(&poset);
        if count > 0 {
            text.push('\n');
        }
        text.push_str(&lattice_io::render(&lat));
        count += 1;
    }
    match out {
        Some(path) => {
            write_file(path, &text)?;
            println!("posets: {count}");
            println!("written: {}", path.display());
        }
        None => {
            print!("{text}");
            eprintln!("posets: {count}");
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn circles(
    seed: u64,
    count: usize,
    mode: &str,
    separated: bool,
    concave: bool,
    no_encapsulation: bool,
    attempts: u32,
    out: &Path,
) -> CmdResult {
    let mode = Mode::from_str(mode).ok_or_else(|| format!("unknown mode {mode}"))?;
    let opts = FamilyOptions {
        force_separated: separated || concave,
        force_concave: concave,
        allow_encapsulation: !no_encapsulation,
        max_attempts: attempts,
    };
    let family = random_circle_family(seed, count, mode, &opts).map_err(|e| e.to_string())?;
    write_family(&family, out)?;
    println!("written: {}", out.display());
    Ok(0)
}

fn write_family(family: &CircleFamily, out: &Path) -> Result<(), String> {
    let text = circles_io::render(family).map_err(|e| e.to_string())?;
    write_file(out, &text)
}

fn catalog(dir: &Path) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    for item in named_lattices() {
        match item {
            CatalogItem::Ready(entry) => {
                let lat_path = dir.join(format!("{}.lat", entry.name));
                write_file(&lat_path, &lattice_io::render(&entry.lattice))?;
                if let Some(family) = &entry.family {
                    write_family(family, &dir.join(format!("{}.circles", entry.name)))?;
                }
                if let Some(labels) = &entry.labels {
                    let mut text = String::new();
                    for (i, &mask) in labels.iter().enumerate() {
                        let label = match &entry.family {
                            Some(f) => f.mask_label(mask),
                            None => format!("{mask:#b}"),
                        };
                        text.push_str(&format!("{i} {label}\n"));
                    }
                    write_file(&dir.join(format!("{}.labels", entry.name)), &text)?;
                }
                let mut notes = format!("{}\n", entry.about);
                if let Some(witness) = &entry.deficient_maximal {
                    let list = witness
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    notes.push_str(&format!("deficient-maximal: {list}\n"));
                }
                write_file(&dir.join(format!("{}.txt", entry.name)), &notes)?;
                println!("ok: {} ({} elements)", entry.name, entry.lattice.len());
            }
            CatalogItem::Unrealized { name, reason } => {
                println!("unrealized: {name} ({reason})");
            }
        }
    }
    Ok(0)
}

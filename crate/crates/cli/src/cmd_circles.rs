//! `laminar circles` — circle-family verdicts, closed-set lattices, SVG.

use std::path::{Path, PathBuf};

use clap::Subcommand;
use laminar_core::circles::lat::DEFAULT_GEOMETRIC_CAP;
use laminar_core::circles::{
    self, builder_by_name, io as circles_io, CircleFamily, Mode, DEFAULT_EPS,
};
use laminar_core::props::Verdict;

use crate::{json_line, read_file, write_file, CmdResult};

#[derive(Subcommand)]
pub enum CirclesCmd {
    /// Report the separated / concave verdicts for a collinear family
    Check {
        /// Circle file (`mode` header, then `<id> <cx> <cy> <r>` lines)
        file: PathBuf,
        /// Geometry tolerance for hull membership tests
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Build the lattice of closed subsets and write it to a file
    Lat {
        /// Circle file (`mode` header, then `<id> <cx> <cy> <r>` lines)
        file: PathBuf,
        /// How to build the lattice: scan all subsets, or use horizontal
        /// intervals (separated concave collinear families only)
        #[arg(long, default_value = "geometric", value_parser = ["geometric", "interval"])]
        method: String,
        /// Geometry tolerance for hull membership tests
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        /// Largest family the subset-scanning method will accept
        #[arg(long, default_value_t = DEFAULT_GEOMETRIC_CAP)]
        cap: usize,
        /// Output lattice file; a `<path>.labels` sidecar maps each
        /// lattice element to its circle set
        #[arg(short, long)]
        out: PathBuf,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Render the family as a standalone SVG drawing
    Svg {
        /// Circle file (`mode` header, then `<id> <cx> <cy> <r>` lines)
        file: PathBuf,
        /// Output SVG file
        #[arg(short, long)]
        out: PathBuf,
        /// Shade the convex hull of this closed set: comma-separated
        /// circle ids, e.g. `A,B`
        #[arg(long)]
        closed: Option<String>,
        /// Geometry tolerance for hull membership tests
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
    },
}

pub fn run(cmd: CirclesCmd) -> CmdResult {
    match cmd {
        CirclesCmd::Check { file, eps, json } => check(&file, eps, json),
        CirclesCmd::Lat {
            file,
            method,
            eps,
            cap,
            out,
            json,
        } => lat(&file, &method, eps, cap, &out, json),
        CirclesCmd::Svg {
            file,
            out,
            closed,
            eps,
        } => svg(&file, &out, closed.as_deref(), eps),
    }
}

fn load(file: &Path) -> Result<CircleFamily, String> {
    let text = read_file(file)?;
    circles_io::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn check(file: &Path, eps: f64, json: bool) -> CmdResult {
    let family = load(file)?;
    let mut separated = None;
    let mut separated_witness = None;
    let mut concave = None;
    let mut concave_witness = None;
    if family.mode() == Mode::Collinear {
        match family.is_separated().map_err(|e| e.to_string())? {
            Verdict::Holds => separated = Some(true),
            Verdict::Fails((i, j)) => {
                separated = Some(false);
                separated_witness = Some(format!(
                    "{} and {} share an endpoint",
                    family.circle(i).id,
                    family.circle(j).id
                ));
            }
        }
        match family.is_concave(eps).map_err(|e| e.to_string())? {
            Verdict::Holds => concave = Some(true),
            Verdict::Fails((i, j, k)) => {
                concave = Some(false);
                concave_witness = Some(format!(
                    "{} nests between {} and {} without joining their closure",
                    family.circle(j).id,
                    family.circle(i).id,
                    family.circle(k).id
                ));
            }
        }
    }
    if json {
        json_line(&serde_json::json!({
            "mode": family.mode().as_str(),
            "circles": family.len(),
            "separated": separated,
            "separated_witness": separated_witness,
            "concave": concave,
            "concave_witness": concave_witness,
        }))?;
        return Ok(0);
    }
    println!("mode: {}", family.mode().as_str());
    println!("circles: {}", family.len());
    match (separated, separated_witness) {
        (Some(true), _) => println!("separated: true"),
        (Some(false), Some(w)) => println!("separated: false ({w})"),
        _ => println!("separated: not-applicable (general mode)"),
    }
    match (concave, concave_witness) {
        (Some(true), _) => println!("concave: true"),
        (Some(false), Some(w)) => println!("concave: false ({w})"),
        _ => println!("concave: not-applicable (general mode)"),
    }
    Ok(0)
}

fn lat(file: &Path, method: &str, eps: f64, cap: usize, out: &Path, json: bool) -> CmdResult {
    let family = load(file)?;
    let builder = builder_by_name(method).ok_or_else(|| format!("unknown method {method}"))?;
    let cl = builder
        .build(&family, eps, cap)
        .map_err(|e| e.to_string())?;
    write_file(out, &laminar_core::lattice::io::render(&cl.lattice))?;
    let labels_path = sidecar_path(out);
    let mut labels = String::new();
    for (i, &mask) in cl.labels.iter().enumerate() {
        labels.push_str(&format!("{i} {}\n", family.mask_label(mask)));
    }
    write_file(&labels_path, &labels)?;
    if json {
        json_line(&serde_json::json!({
            "method": method,
            "elements": cl.lattice.len(),
            "out": out.display().to_string(),
            "labels": labels_path.display().to_string(),
        }))?;
    } else {
        println!("elements: {}", cl.lattice.len());
        println!("written: {}", out.display());
        println!("labels: {}", labels_path.display());
    }
    Ok(0)
}

/// `x.lat` -> `x.lat.labels`: appended, not substituted, so the lattice
/// file's own extension stays visible.
fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_os_string();
    s.push(".labels");
    PathBuf::from(s)
}

fn svg(file: &Path, out: &Path, closed: Option<&str>, eps: f64) -> CmdResult {
    let family = load(file)?;
    let shaded = match closed {
        None => None,
        Some(ids) => {
            let mut mask = 0u32;
            for id in ids.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let i = family
                    .index_of(id)
                    .ok_or_else(|| format!("no circle named {id}"))?;
                mask |= 1 << i;
            }
            if !circles::is_closed(&family, mask, eps).map_err(|e| e.to_string())? {
                return Err(format!(
                    "{{{ids}}} is not a closed set: its hull pulls in further circles"
                ));
            }
            Some(mask)
        }
    };
    write_file(out, &circles_io::render_svg(&family, shaded))?;
    println!("written: {}", out.display());
    Ok(0)
}

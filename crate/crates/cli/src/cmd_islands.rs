//! `laminar islands` — island counting, extremal boards, round trips.

use std::path::{Path, PathBuf};

use clap::Subcommand;
use laminar_core::islands::max::{
    max_islands_construct, max_islands_formula, max_islands_oracle, DEFAULT_ORACLE_CELL_CAP,
};
use laminar_core::islands::{
    enumerate_islands, io as islands_io, realize_heights, IslandSystem, DEFAULT_ISLAND_CAP,
};
use laminar_core::props::Verdict;
use laminar_core::{gen, rng::Rng};

use crate::{json_line, read_file, CmdResult};

#[derive(Subcommand)]
pub enum IslandsCmd {
    /// Count the islands of a height grid
    Count {
        /// Height CSV: one line per row, comma-separated integers
        file: PathBuf,
        /// Also list each island as `c1 r1 c2 r2` (1-based, inclusive)
        #[arg(long)]
        list: bool,
        /// Largest number of islands the enumeration may return
        #[arg(long, default_value_t = DEFAULT_ISLAND_CAP)]
        cap: usize,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Print the maximum number of islands on an `m x n` board
    Max {
        /// Board width in cells
        m: usize,
        /// Board height in cells
        n: usize,
        /// Search exhaustively instead of using the closed form
        #[arg(long, group = "how")]
        oracle: bool,
        /// Build a witness height grid and count its islands
        #[arg(long, group = "how")]
        construct: bool,
        /// Cell cap for the exhaustive search
        #[arg(long, default_value_t = DEFAULT_ORACLE_CELL_CAP)]
        cap: usize,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Round-trip random height grids through island systems and back
    Verify {
        /// Board width in cells
        m: usize,
        /// Board height in cells
        n: usize,
        /// Random seed
        #[arg(long)]
        seed: u64,
        /// Number of random grids to test
        #[arg(long)]
        trials: u32,
        /// Emit one JSON object per report instead of text lines
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cmd: IslandsCmd) -> CmdResult {
    match cmd {
        IslandsCmd::Count {
            file,
            list,
            cap,
            json,
        } => count(&file, list, cap, json),
        IslandsCmd::Max {
            m,
            n,
            oracle,
            construct,
            cap,
            json,
        } => max(m, n, oracle, construct, cap, json),
        IslandsCmd::Verify {
            m,
            n,
            seed,
            trials,
            json,
        } => verify(m, n, seed, trials, json),
    }
}

fn count(file: &Path, list: bool, cap: usize, json: bool) -> CmdResult {
    let text = read_file(file)?;
    let grid = islands_io::parse(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let islands = enumerate_islands(&grid, cap).map_err(|e| e.to_string())?;
    let one_based: Vec<[usize; 4]> = islands
        .iter()
        .map(|r| [r.x1 + 1, r.y1 + 1, r.x2 + 1, r.y2 + 1])
        .collect();
    if json {
        json_line(&serde_json::json!({
            "islands": islands.len(),
            "rects": if list { Some(&one_based) } else { None },
        }))?;
        return Ok(0);
    }
    println!("islands: {}", islands.len());
    if list {
        for [c1, r1, c2, r2] in &one_based {
            println!("{c1} {r1} {c2} {r2}");
        }
    }
    Ok(0)
}

fn max(m: usize, n: usize, oracle: bool, construct: bool, cap: usize, json: bool) -> CmdResult {
    let (method, value) = if oracle {
        let (count, _witness) = max_islands_oracle(m, n, cap).map_err(|e| e.to_string())?;
        ("oracle", count)
    } else if construct {
        // The construction is trusted only as far as enumeration agrees,
        // so report the enumerated count of the witness grid.
        let grid = max_islands_construct(m, n).map_err(|e| e.to_string())?;
        let islands =
            enumerate_islands(&grid, (m + 1) * (n + 1)).map_err(|e| e.to_string())?;
        ("construct", islands.len())
    } else {
        ("formula", max_islands_formula(m, n))
    };
    if json {
        json_line(&serde_json::json!({
            "cols": m,
            "rows": n,
            "method": method,
            "count": value,
        }))?;
    } else {
        println!("{value}");
    }
    Ok(0)
}

fn verify(m: usize, n: usize, seed: u64, trials: u32, json: bool) -> CmdResult {
    if m == 0 || n == 0 {
        return Err("board dimensions must be positive".to_string());
    }
    let mut rng = Rng::new(seed);
    let cap = (m + 1) * (n + 1);
    let mut failures: Vec<String> = Vec::new();
    for trial in 0..trials {
        // Forward: the islands of a random grid form a laminar system
        // containing the board.
        let grid = gen::random_height_grid(&mut rng, m, n, 4);
        let islands = enumerate_islands(&grid, cap).map_err(|e| e.to_string())?;
        let sys = IslandSystem::new(grid.board(), islands).map_err(|e| e.to_string())?;
        if let Verdict::Fails((a, b)) = sys.is_laminar() {
            failures.push(format!("trial {trial}: islands {a} and {b} are not laminar"));
            continue;
        }
        if !sys.contains_board() {
            failures.push(format!("trial {trial}: board itself is not an island"));
            continue;
        }
        // Backward: realizing the system yields a grid with exactly
        // those islands.
        let realized = realize_heights(&sys).map_err(|e| e.to_string())?;
        let back = enumerate_islands(&realized, cap).map_err(|e| e.to_string())?;
        if back != sys.rects() {
            failures.push(format!(
                "trial {trial}: realized grid has {} islands, expected {}",
                back.len(),
                sys.len()
            ));
            continue;
        }
        // And a random laminar system is realized exactly.
        let sys2 = gen::random_laminar_system(&mut rng, m, n, 12);
        let realized2 = realize_heights(&sys2).map_err(|e| e.to_string())?;
        let back2 = enumerate_islands(&realized2, cap).map_err(|e| e.to_string())?;
        if back2 != sys2.rects() {
            failures.push(format!(
                "trial {trial}: realized system has {} islands, expected {}",
                back2.len(),
                sys2.len()
            ));
        }
    }
    if json {
        json_line(&serde_json::json!({
            "board": [m, n],
            "seed": seed,
            "trials": trials,
            "failures": failures,
        }))?;
    } else {
        println!("trials: {trials}");
        println!("failures: {}", failures.len());
        for f in &failures {
            println!("{f}");
        }
    }
    Ok(if failures.is_empty() { 0 } else { 1 })
}

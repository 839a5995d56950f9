use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::Parser;

use crate::output::Format;
use crate::{commands, Cli, CliError};

/// Worked examples: file stem and command line.
const CASES: &[(&str, &[&str])] = &[
    ("rho_h_035_h5_n15", &["rho", "--set", "0,3,5", "--h", "5", "--n", "15"]),
    ("rho_total_035_n0", &["rho", "--set", "0,3,5", "--n", "0"]),
    ("rho_table_035_h3", &["rho", "--set", "0,3,5", "--h", "3"]),
    ("frobenius_035_t1", &["frobenius", "--set", "0,3,5", "--t", "1"]),
    ("frobenius_0167_t6", &["frobenius", "--set", "0,1,6,7", "--t", "6"]),
    ("exceptional_035_t2", &["exceptional", "--set", "0,3,5", "--t", "2"]),
    ("sumset_035_h3_t2", &["sumset", "--set", "0,3,5", "--h", "3", "--t", "2"]),
    ("structure_0167_h16_t6", &["structure", "--set", "0,1,6,7", "--h", "16", "--t", "6"]),
    ("ht_0167_t6", &["ht", "--set", "0,1,6,7", "--t", "6"]),
    ("bounds_035_t3", &["bounds", "--set", "0,3,5", "--t", "3"]),
    ("compare_bounds", &["compare-bounds", "--set", "0,3,5", "--set", "0,1,6,7", "--t", "1,2,3"]),
    ("extremal_7_2_2", &["extremal", "verify", "--m", "7", "--ell", "2", "--r", "2"]),
    ("extremal_9_2_3", &["extremal", "verify", "--m", "9", "--ell", "2", "--r", "3"]),
    ("extremal_asymptotic", &["extremal", "asymptotic", "--m", "100,1000,10000"]),
    ("threeset_rho_3_5_15", &["threeset", "rho", "--a", "3", "--m", "5", "--n", "15"]),
    ("threeset_batch_8", &["threeset", "batch", "--max-m", "8", "--t", "1,2,3"]),
    ("lattice_extremal_square", &["lattice", "extremal", "--points", "0,0;1,0;0,1;1,1;1,2;0,2"]),
    ("lattice_span", &["lattice", "span", "--points", "0,0;2,0;0,2;2,2", "--member", "1,1"]),
    ("lattice_rho_triangle", &["lattice", "rho", "--points", "0,0;1,0;0,1", "--p", "2,1", "--h", "4"]),
    ("lattice_delta_triangle", &["lattice", "delta", "--points", "0,0;1,0;0,1"]),
    ("lattice_structure_square", &["lattice", "structure", "--points", "0,0;1,0;0,1;1,1", "--h", "3", "--t", "2"]),
    ("lattice_index_0167", &["lattice", "index", "--points", "0;1;6;7", "--t", "6", "--h-cap", "20"]),
    ("lattice_bound_1d", &["lattice", "bound", "--points", "0;3;5", "--t", "2", "--phi-from-frobenius"]),
    ("lattice_caratheodory_pentagon", &["lattice", "caratheodory", "--points", "0,0;2,0;3,2;1,3;-1,2", "--lambda", "3"]),
    ("lattice_poly_square", &["lattice", "poly", "--points", "0,0;1,0;0,1;1,1", "--t", "2", "--h-lo", "0", "--h-hi", "8"]),
];

fn render(args: &[&str]) -> Result<String, CliError> {
    let cli = Cli::try_parse_from(std::iter::once("tsumset").chain(args.iter().copied()))
        .map_err(|e| CliError::Io(e.to_string()))?;
    let (report, _) = commands::run(&cli.command, &cli.config)?;
    report.render(Format::Json)
}

pub fn run(golden_dir: Option<PathBuf>, bless: bool) -> Result<String, CliError> {
    let dir = golden_dir.unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1")));
    if bless {
        fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut summary = String::new();
    let mut mismatched = Vec::new();
    for (name, args) in CASES {
        let got = render(args)?;
        let path = dir.join(format!("{name}.json"));
        if bless {
            fs::write(&path, &got).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            writeln!(summary, "blessed {name}").unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let ok = want == got;
        writeln!(summary, "{} {name}", if ok { "ok" } else { "MISMATCH" }).unwrap();
        if !ok {
            mismatched.push(*name);
        }
    }
    if bless {
        writeln!(summary, "{} cases blessed", CASES.len()).unwrap();
        Ok(summary)
    } else if mismatched.is_empty() {
        writeln!(summary, "{} cases, all match", CASES.len()).unwrap();
        Ok(summary)
    } else {
        print!("{summary}");
        Err(CliError::Mismatch(mismatched.join(", ")))
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use tsumset::denumerant::{rho_batch, rho_h, rho_total};
use tsumset::extremal::{asymptotic_report, verify, ExtremalInstance};
use tsumset::frobenius::{exceptional_set_with, FrobeniusBrackets};
use tsumset::lattice::{
    caratheodory_cover_check, delta_delta, empirical_structure_index, format_point,
    hull_size_poly_check, parse_lambda, parse_point, parse_points, rho_h_d, rho_total_d,
    zd_bound_formula, LatticePointSet, Point, ZdAnalyzer,
};
use tsumset::numeric::{gcd_u64, ratio};
use tsumset::structure::{bound_mt2, bound_yz, t_sumset, Analyzer};
use tsumset::threeset::ThreeSet;
use tsumset::{normalize, Error, IntegerSet};

use crate::output::{Format, Report};
use crate::{CliError, Command, ExtremalCmd, LatticeCmd, PointsArg, RunConfig, ThreesetCmd};

type Out = Result<(Report, Format), CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Parses and normalizes a set literal; notes on stderr when the input moved.
pub fn parse_set(text: &str) -> Result<IntegerSet, CliError> {
    let raw = tsumset::set::parse_literal(text)?;
    let (set, rec) = normalize(&raw)?;
    if rec.shift != 0 || rec.scale != 1 {
        eprintln!("note: normalized {text} to {set} (shift {}, scale {})", rec.shift, rec.scale);
    }
    Ok(set)
}

fn load_points(arg: &PointsArg) -> Result<LatticePointSet, CliError> {
    let text = match (&arg.points, &arg.file) {
        (Some(p), _) => p.clone(),
        (None, Some(f)) => read(f)?,
        (None, None) => return Err(Error::InvalidInput("no points given".into()).into()),
    };
    Ok(LatticePointSet::new(parse_points(&text)?)?)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

fn point_rows(points: &[Point]) -> Vec<Vec<String>> {
    points.iter().map(|p| strings(p)).collect()
}

fn coord_headers(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("x{i}")).collect()
}

fn points_report(points: &[Point], d: usize, value: serde_json::Value) -> Result<Report, CliError> {
    let headers = coord_headers(d);
    let refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    Ok(Report::new(value)?.with_rows(&refs, point_rows(points)))
}

pub fn run(cmd: &Command, cfg: &RunConfig) -> Out {
    let caps = cfg.caps();
    let json = Format::Json;
    match cmd {
        Command::Rho { set, h, n } => {
            let s = parse_set(&set.set)?;
            match (h, n) {
                (h, Some(n)) => {
                    let count = match h {
                        Some(h) => {
                            caps.check_hm(*h, s.m())?;
                            rho_h(&s, *h, *n)
                        }
                        None => rho_total(&s, *n),
                    };
                    let r = Report::new(json!({
                        "set": s, "h": h, "n": n, "count": count.to_string()
                    }))?
                    .with_rows(&["count"], vec![vec![count.to_string()]]);
                    Ok((r, json))
                }
                (Some(h), None) => {
                    let table = rho_batch(&s, *h, &caps)?;
                    let rows = table
                        .values
                        .iter()
                        .enumerate()
                        .map(|(n, c)| vec![n.to_string(), c.to_string()])
                        .collect();
                    Ok((Report::new(&table)?.with_rows(&["n", "count"], rows), json))
                }
                (None, None) => Err(Error::InvalidInput("rho needs --n, --h or both".into()).into()),
            }
        }
        Command::Frobenius { set, t } => {
            let s = parse_set(&set.set)?;
            caps.check_t(*t as u128)?;
            let e = exceptional_set_with(&s, *t, &caps)?;
            let brackets = FrobeniusBrackets::new(&s, *t).ok().map(|b| {
                json!({
                    "lower": b.lower.to_string(),
                    "upper": b.upper.to_string(),
                    "lower_applies": *t >= 2,
                    "contains": b.contains(e.frobenius_t),
                })
            });
            let r = Report::new(json!({
                "set": s, "t": t, "frobenius_t": e.frobenius_t, "brackets": brackets
            }))?;
            Ok((r, json))
        }
        Command::Exceptional { set, t } => {
            let s = parse_set(&set.set)?;
            caps.check_t(*t as u128)?;
            let e = exceptional_set_with(&s, *t, &caps)?;
            let rows = e.members.iter().map(|n| vec![n.to_string()]).collect();
            Ok((Report::new(&e)?.with_rows(&["n"], rows), json))
        }
        Command::Sumset { set, h, t } => {
            let s = parse_set(&set.set)?;
            caps.check_hm(*h, s.m())?;
            let v = t_sumset(&s, *h, *t);
            let rows = v.iter().map(|n| vec![n.to_string()]).collect();
            let r = Report::new(json!({"set": s, "h": h, "t": t, "size": v.len(), "members": v}))?;
            Ok((r.with_rows(&["n"], rows), json))
        }
        Command::Structure { set, h, t } => {
            let s = parse_set(&set.set)?;
            let an = Analyzer::new(&s, *t, &caps)?;
            let mut rep = an.report(*h)?;
            // full sides are available through `sumset`; keep reports bounded
            let (lhs, rhs) = (rep.lhs.len(), rep.rhs.len());
            rep.lhs.truncate(caps.witness_limit);
            rep.rhs.truncate(caps.witness_limit);
            let mut v = serde_json::to_value(&rep).map_err(|e| CliError::Io(e.to_string()))?;
            v["lhs_size"] = json!(lhs);
            v["rhs_size"] = json!(rhs);
            Ok((Report::new(v)?, json))
        }
        Command::Ht { set, t, extra } => {
            let s = parse_set(&set.set)?;
            let scan = Analyzer::new(&s, *t, &caps)?.ht_scan(*extra)?;
            let r = Report::new(json!({
                "set": s,
                "t": t,
                "ht_exact": scan.ht,
                "mt1": scan.cap,
                "scanned_to": scan.scanned_to,
                "failures": scan.failures,
            }))?;
            Ok((r, json))
        }
        Command::Bounds { set, t } => {
            let s = parse_set(&set.set)?;
            let b = Analyzer::new(&s, *t, &caps)?.bounds();
            Ok((Report::new(&b)?, json))
        }
        Command::CompareBounds { sets, file, t } => {
            let mut literals = sets.clone();
            if let Some(f) = file {
                literals.extend(
                    read(f)?
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            if literals.is_empty() {
                return Err(Error::InvalidInput("compare-bounds needs --set or --file".into()).into());
            }
            let parsed: Vec<IntegerSet> = literals.iter().map(|l| parse_set(l)).collect::<Result<_, _>>()?;
            let jobs: Vec<(IntegerSet, u64)> = parsed
                .iter()
                .flat_map(|s| t.iter().map(move |&t| (s.clone(), t)))
                .collect();
            let rows = jobs
                .par_iter()
                .map(|(s, t)| {
                    let an = Analyzer::new(s, *t, &caps)?;
                    let scan = an.ht_scan(0)?;
                    Ok(json!({
                        "set": s.to_string(),
                        "t": t,
                        "ht_exact": scan.ht,
                        "mt1": scan.cap,
                        "mt2": bound_mt2(s, *t).ok().map(|(_, b)| b),
                        "yang_zhou": bound_yz(s, *t),
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let cols = ["set", "t", "ht_exact", "mt1", "mt2", "yang_zhou"];
            let table = rows
                .iter()
                .map(|r| cols.iter().map(|c| crate::output::cell(&r[c])).collect())
                .collect();
            Ok((Report::new(&rows)?.with_rows(&cols, table), Format::Csv))
        }
        Command::Extremal { action } => extremal(action, cfg),
        Command::Threeset { action } => threeset(action, cfg),
        Command::Lattice { action } => lattice(action, cfg),
        Command::Repro { .. } => unreachable!("handled in main"),
    }
}

fn extremal(cmd: &ExtremalCmd, cfg: &RunConfig) -> Out {
    let caps = cfg.caps();
    match cmd {
        ExtremalCmd::Verify { m, ell, r } => {
            let inst = ExtremalInstance::build(*m, *ell, *r)?;
            Ok((Report::new(verify(&inst, &caps)?)?, Format::Json))
        }
        ExtremalCmd::Batch { file } => {
            let lines = tsumset::set::parse_lines(&read(file)?)?;
            let reports = lines
                .par_iter()
                .map(|v| {
                    let [m, ell, r] = v[..] else {
                        return Err(Error::InvalidInput(format!("expected m,ell,R, got {v:?}")));
                    };
                    let u = |x: i64| u64::try_from(x).map_err(|_| Error::InvalidInput(format!("negative value {x}")));
                    verify(&ExtremalInstance::build(u(m)?, u(ell)?, u(r)?)?, &caps)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let rows = reports
                .iter()
                .map(|r| {
                    vec![
                        r.instance.m.to_string(),
                        r.instance.ell.to_string(),
                        r.instance.r.to_string(),
                        r.instance.t.to_string(),
                        r.instance.g.to_string(),
                        r.ht.to_string(),
                        r.mt1.to_string(),
                        r.passed.to_string(),
                    ]
                })
                .collect();
            let r = Report::new(&reports)?.with_rows(&["m", "ell", "R", "t", "g", "ht", "mt1", "passed"], rows);
            Ok((r, Format::Json))
        }
        ExtremalCmd::Asymptotic { m } => {
            let recs = m.iter().map(|&m| asymptotic_report(m)).collect::<Result<Vec<_>, _>>()?;
            let rows = recs
                .iter()
                .map(|r| {
                    vec![
                        r.m.to_string(),
                        r.ell.to_string(),
                        r.r.to_string(),
                        r.t.to_string(),
                        r.g.to_string(),
                        format!("{:.6}", r.ratio),
                    ]
                })
                .collect();
            let r = Report::new(&recs)?.with_rows(&["m", "ell", "R", "t", "g", "ratio"], rows);
            Ok((r, Format::Json))
        }
    }
}

fn threeset(cmd: &ThreesetCmd, cfg: &RunConfig) -> Out {
    let caps = cfg.caps();
    match cmd {
        ThreesetCmd::Rho { a, m, n } => {
            let ts = ThreeSet::new(*a, *m)?;
            let c = ts.rho_closed(*n);
            let r = Report::new(json!({"a": a, "m": m, "n": n, "count": c.to_string()}))?
                .with_rows(&["count"], vec![vec![c.to_string()]]);
            Ok((r, Format::Table))
        }
        ThreesetCmd::Batch { max_m, t } => {
            let pairs: Vec<(u64, u64)> = (2..=*max_m)
                .flat_map(|m| (1..m).filter(move |a| gcd_u64(*a, m) == 1).map(move |a| (a, m)))
                .collect();
            let jobs: Vec<(u64, u64, u64)> =
                pairs.iter().flat_map(|&(a, m)| t.iter().map(move |&t| (a, m, t))).collect();
            let rows = jobs
                .par_iter()
                .map(|&(a, m, t)| {
                    let ts = ThreeSet::new(a, m)?;
                    let e = exceptional_set_with(&ts.set(), t, &caps)?;
                    let closed = ts.frobenius_t(t);
                    let size = ts.exceptional_size_closed(t);
                    Ok(json!({
                        "a": a, "m": m, "t": t,
                        "frobenius_t_closed": closed,
                        "frobenius_t_scan": e.frobenius_t,
                        "exceptional_size_closed": size.to_string(),
                        "exceptional_size_scan": e.len(),
                        "agree": closed == e.frobenius_t && size == e.len().into(),
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let cols = [
                "a",
                "m",
                "t",
                "frobenius_t_closed",
                "frobenius_t_scan",
                "exceptional_size_closed",
                "exceptional_size_scan",
                "agree",
            ];
            let table = rows
                .iter()
                .map(|r| cols.iter().map(|c| crate::output::cell(&r[c])).collect())
                .collect();
            Ok((Report::new(&rows)?.with_rows(&cols, table), Format::Csv))
        }
    }
}

/// `"0,0=1;1,0=3/2"` into a vertex map.
fn parse_phi(text: &str) -> Result<BTreeMap<Point, BigRational>, CliError> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|entry| {
            let (p, v) = entry
                .split_once('=')
                .ok_or_else(|| Error::InvalidInput(format!("expected vertex=value, got {entry:?}")))?;
            let v: BigRational = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad phi value {v:?}")))?;
            Ok((parse_point(p)?, v))
        })
        .collect()
}

fn lattice(cmd: &LatticeCmd, cfg: &RunConfig) -> Out {
    let caps = cfg.caps();
    let json = Format::Json;
    match cmd {
        LatticeCmd::Extremal { points } => {
            let a = load_points(points)?;
            let ex = a.extremal_points();
            let v = json!({"set": a.to_string(), "extremal_points": ex, "direction": a.direction()});
            Ok((points_report(ex, a.dim(), v)?, json))
        }
        LatticeCmd::Span { points, member } => {
            let a = load_points(points)?;
            let span = a.lattice_span();
            let membership = match member {
                Some(p) => Some(span.contains(&parse_point(p)?)),
                None => None,
            };
            let v = json!({
                "set": a.to_string(),
                "rank": span.rank(),
                "basis": span.basis,
                "index": span.index().map(|i| i.to_string()),
                "member": membership,
            });
            Ok((points_report(&span.basis, a.dim(), v)?, json))
        }
        LatticeCmd::Rho { points, p, h } => {
            let a = load_points(points)?;
            let p = parse_point(p)?;
            if p.len() != a.dim() {
                return Err(Error::InvalidInput(format!("point has {} coordinates, set has dimension {}", p.len(), a.dim())).into());
            }
            let count = match h {
                Some(h) => rho_h_d(&a, *h, &p),
                None => rho_total_d(&a, &p)?,
            };
            let r = Report::new(json!({
                "set": a.to_string(), "h": h, "p": format_point(&p), "count": count.to_string()
            }))?
            .with_rows(&["count"], vec![vec![count.to_string()]]);
            Ok((r, json))
        }
        LatticeCmd::Delta { points } => {
            let a = load_points(points)?;
            Ok((Report::new(delta_delta(&a))?, json))
        }
        LatticeCmd::Structure { points, h, t } => {
            let a = load_points(points)?;
            let rep = ZdAnalyzer::new(&a, *t, *h, &caps)?.report(*h)?;
            Ok((Report::new(rep)?, json))
        }
        LatticeCmd::Index { points, t, h_cap } => {
            let a = load_points(points)?;
            Ok((Report::new(empirical_structure_index(&a, *t, *h_cap, &caps)?)?, json))
        }
        LatticeCmd::Bound { points, t, phi, phi_from_frobenius } => {
            let a = load_points(points)?;
            let (phi, mt1) = if *phi_from_frobenius {
                one_dimensional_phi(&a, *t, cfg)?
            } else {
                let text = phi
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("give --phi or --phi-from-frobenius".into()))?;
                (parse_phi(text)?, None)
            };
            let b = zd_bound_formula(&a, *t, &phi)?;
            let mut v = serde_json::to_value(&b).map_err(|e| CliError::Io(e.to_string()))?;
            if let Some(mt1) = mt1 {
                v["mt1"] = json!(mt1);
                v["minus_mt1"] = json!(b.value as i128 - mt1 as i128);
            }
            Ok((Report::new(v)?, json))
        }
        LatticeCmd::Caratheodory { points, lambda, sample_cap } => {
            let a = load_points(points)?;
            let rep = caratheodory_cover_check(&a, &parse_lambda(lambda)?, *sample_cap, &caps)?;
            Ok((Report::new(rep)?, json))
        }
        LatticeCmd::Poly { points, t, h_lo, h_hi } => {
            let a = load_points(points)?;
            Ok((Report::new(hull_size_poly_check(&a, *t, *h_lo, *h_hi, &caps)?)?, json))
        }
    }
}

/// For `d = 1`: `phi = (Fr_t + m) / m` at both ends, plus the floor-form bound.
fn one_dimensional_phi(
    a: &LatticePointSet,
    t: u64,
    cfg: &RunConfig,
) -> Result<(BTreeMap<Point, BigRational>, Option<u64>), CliError> {
    if a.dim() != 1 {
        return Err(Error::Unsupported("--phi-from-frobenius needs d = 1".into()).into());
    }
    let elems: Vec<u64> = a
        .points()
        .iter()
        .map(|p| u64::try_from(p[0]))
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Unsupported("--phi-from-frobenius needs nonnegative points".into()))?;
    let s = IntegerSet::new(elems)?;
    let an = Analyzer::new(&s, t, &cfg.caps())?;
    let m = s.m() as i128;
    let fr = an.exceptional().frobenius_t as i128;
    let fr_b = an.exceptional_reflected().frobenius_t as i128;
    let phi = BTreeMap::from([(vec![0], ratio(fr + m, m)), (vec![m as i64], ratio(fr_b + m, m))]);
    Ok((phi, Some(an.bound_mt1())))
}

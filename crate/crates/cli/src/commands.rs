use std::collections::BTreeMap;
use std::path::Path;

use rtamari::harmonics::{closure_space, higher_space, kernel_space, kernel_space_up_to, GradedSpace};
use rtamari::nabla3::{h3, specialize_q111};
use rtamari::parking::{all_parking, for_each_parking, pf_of_shape, ParkingRow};
use rtamari::symcore::{render_schur_q3, schur_decompose_q3};
use rtamari::tamari::{enumerate_paths, fuss_catalan, DyckPath, TamariPoset};
use rtamari::verify::{run_all, VerifyConfig, VerifyError};
use rtamari::{Partition, QPoly3};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Format};
use crate::render::{list, pick, table};
use crate::{EXIT_FAILED, EXIT_USAGE};

pub struct Outcome {
    pub output: String,
    pub all_passed: bool,
}

#[derive(Debug)]
pub struct CommandError {
    pub code: i32,
    pub message: String,
}

impl CommandError {
    fn usage(message: impl ToString) -> Self {
        CommandError { code: EXIT_USAGE, message: message.to_string() }
    }

    fn failed(message: impl ToString) -> Self {
        CommandError { code: EXIT_FAILED, message: message.to_string() }
    }
}

impl From<VerifyError> for CommandError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::UnknownIdentity(_) | VerifyError::BadParameters(_) => CommandError::usage(e),
            other => CommandError::failed(other),
        }
    }
}

type Result<T> = std::result::Result<T, CommandError>;

fn done(output: String) -> Result<Outcome> {
    Ok(Outcome { output, all_passed: true })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    let cache = cli.cache_dir.as_deref();
    match &cli.command {
        Command::Paths { size, count } => paths(f, size.n as usize, size.r, *count),
        Command::Tamari { size, covers } => tamari(f, size.n as usize, size.r, *covers, cache),
        Command::Parking { size, count, shape } => parking(f, size.n as usize, size.r, *count, shape.as_deref()),
        Command::Harmonics { n, frobenius, closure, higher, cutoff, .. } => {
            harmonics(f, *n as usize, *frobenius, *closure, *higher, *cutoff)
        }
        Command::Nabla3 { r, at_q111 } => nabla3(f, *r, *at_q111),
        Command::Verify { names, n, r, timings } => {
            let cfg = VerifyConfig {
                names: names.clone(),
                n: n.map(|n| n as usize),
                r: *r,
                cache_dir: cli.cache_dir.clone(),
                timings: *timings,
            };
            verify(f, &cfg)
        }
    }
}

fn count_value(c: impl ToString) -> Value {
    let s = c.to_string();
    s.parse::<u64>().map_or(Value::String(s), Value::from)
}

fn paths(f: Format, n: usize, r: u32, count: bool) -> Result<Outcome> {
    if count {
        let c = fuss_catalan(n, r);
        let v = json!({"n": n, "r": r, "count": count_value(&c)});
        return done(pick(f, &v, || c.to_string()));
    }
    let paths = enumerate_paths(n, r);
    let v: Vec<Value> = paths
        .iter()
        .map(|p| json!({"path": p.values(), "co": p.co().parts(), "area": p.area()}))
        .collect();
    done(pick(f, &Value::Array(v), || {
        let rows: Vec<Vec<String>> = paths
            .iter()
            .map(|p| vec![p.to_string(), list(p.co().parts()), p.area().to_string()])
            .collect();
        table(&["path", "co", "area"], &rows)
    }))
}

fn tamari(f: Format, n: usize, r: u32, with_covers: bool, cache: Option<&Path>) -> Result<Outcome> {
    let poset = TamariPoset::load_or_build(n, r, cache).map_err(CommandError::failed)?;
    let polys = poset.interval_polys();
    let elems = poset.elements();
    let mut v = json!({
        "n": n,
        "r": r,
        "interval_count": poset.interval_count(),
        "elements": elems.iter().zip(&polys).enumerate().map(|(i, (p, q))| json!({
            "index": i,
            "path": p.values(),
            "interval_poly": q.coeffs(),
            "up_covers": poset.up_cover_indices(i),
        })).collect::<Vec<_>>(),
    });
    if with_covers {
        v["covers"] = json!(poset.covers());
    }
    done(pick(f, &v, || {
        let rows: Vec<Vec<String>> = elems
            .iter()
            .zip(&polys)
            .enumerate()
            .map(|(i, (p, q))| {
                let ups: Vec<String> = poset.up_cover_indices(i).iter().map(|&j| elems[j].to_string()).collect();
                vec![p.to_string(), q.to_string(), q.at_one().to_string(), ups.join(" ")]
            })
            .collect();
        let mut out = table(&["path", "i(q)", "i(1)", "up covers"], &rows);
        out.push_str(&format!("\n{} elements, {} intervals", elems.len(), poset.interval_count()));
        if with_covers {
            for [a, b] in poset.covers() {
                out.push_str(&format!("\n{} < {}", elems[a], elems[b]));
            }
        }
        out
    }))
}

fn parking(f: Format, n: usize, r: u32, count: bool, shape: Option<&str>) -> Result<Outcome> {
    let functions = match shape {
        Some(s) => {
            let beta = DyckPath::parse(s, r).map_err(CommandError::usage)?;
            if beta.n() != n {
                return Err(CommandError::usage(format!("shape {s} has height {}, expected {n}", beta.n())));
            }
            if count {
                let c = pf_of_shape(&beta).len();
                return done(pick(f, &json!({"n": n, "r": r, "shape": beta.values(), "count": c}), || c.to_string()));
            }
            pf_of_shape(&beta)
        }
        None if count => {
            let mut c = 0u64;
            for_each_parking(n, r, |_| c += 1);
            return done(pick(f, &json!({"n": n, "r": r, "count": c}), || c.to_string()));
        }
        None => all_parking(n, r),
    };
    let rows: Vec<ParkingRow> = functions.iter().map(ParkingRow::from).collect();
    let v = serde_json::to_value(&rows).map_err(CommandError::failed)?;
    done(pick(f, &v, || {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|p| {
                let word: String = p.f.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                vec![word, list(&p.shape), list(&p.co), p.dinv.to_string()]
            })
            .collect();
        table(&["f", "shape", "co", "dinv"], &cells)
    }))
}

fn schur_text(p: &QPoly3) -> Result<String> {
    let c = schur_decompose_q3(p).map_err(CommandError::failed)?;
    Ok(render_schur_q3(&c))
}

fn harmonics(
    f: Format,
    n: usize,
    frobenius: bool,
    closure: bool,
    higher: Option<u32>,
    cutoff: Option<u32>,
) -> Result<Outcome> {
    let mut notes = Vec::new();
    let (label, space): (&str, GradedSpace) = if let Some(r) = higher {
        let staircase = r * (n * n.saturating_sub(1) / 2) as u32;
        let h = higher_space(n, r, cutoff.unwrap_or(staircase + 1)).map_err(CommandError::usage)?;
        if h.top_degree_nonzero {
            notes.push(format!("non-zero component at the cutoff degree {}", h.cutoff));
        }
        ("higher", h.space)
    } else if closure {
        ("closure", closure_space(n).map_err(CommandError::failed)?)
    } else {
        let s = match cutoff {
            Some(c) => kernel_space_up_to(n, c),
            None => kernel_space(n),
        };
        ("kernel", s.map_err(CommandError::failed)?)
    };
    let hilbert = space.hilbert_series();
    let dims = space.dims();
    let mut v = json!({
        "n": n,
        "space": label,
        "dim": space.dim(),
        "dims": dims.iter().map(|(d, k)| json!({"degree": d, "dim": k})).collect::<Vec<_>>(),
        "hilbert": {"series": hilbert.to_string(), "schur": schur_text(&hilbert)?},
        "notes": notes,
    });
    if let Some(r) = higher {
        v["r"] = json!(r);
    }
    let mut frob_rows = Vec::new();
    if frobenius {
        let fr: BTreeMap<Partition, QPoly3> = space.frobenius().map_err(CommandError::failed)?;
        let mut obj = serde_json::Map::new();
        for (l, p) in fr.iter().rev() {
            let s = schur_text(p)?;
            obj.insert(format!("S[{l}]"), json!({"series": p.to_string(), "schur": s.clone()}));
            frob_rows.push(vec![format!("S[{l}]"), s]);
        }
        v["frobenius"] = Value::Object(obj);
    }
    done(pick(f, &v, || {
        let mut out = format!("Hilbert series: {hilbert}\nSchur: {}\ndimension: {}\n", schur_text(&hilbert).unwrap_or_default(), space.dim());
        let rows: Vec<Vec<String>> = dims
            .iter()
            .map(|(d, k)| vec![format!("({},{},{})", d[0], d[1], d[2]), k.to_string()])
            .collect();
        out.push_str(&table(&["degree", "dim"], &rows));
        if frobenius {
            out.push('\n');
            out.push_str(&table(&["isotype", "multiplicity"], &frob_rows));
        }
        for note in &notes {
            out.push_str(&format!("\nnote: {note}"));
        }
        out
    }))
}

fn nabla3(f: Format, r: u32, at_q111: bool) -> Result<Outcome> {
    let h = h3(r);
    if at_q111 {
        let [a, b, c] = specialize_q111(&h);
        let v = json!({"r": r, "S3": count_value(&a), "S21": count_value(&b), "S111": count_value(&c)});
        return done(pick(f, &v, || format!("{a}*S3 + {b}*S21 + {c}*S111")));
    }
    let v = json!({"r": r, "coefficients": h.to_json()});
    done(pick(f, &v, || h.to_string()))
}

fn verify(f: Format, cfg: &VerifyConfig) -> Result<Outcome> {
    let reports = run_all(cfg)?;
    let all_passed = reports.iter().all(|r| r.pass);
    let v = serde_json::to_value(&reports).map_err(CommandError::failed)?;
    let output = pick(f, &v, || {
        let mut lines: Vec<String> = reports.iter().map(|r| r.summary()).collect();
        let failed = reports.iter().filter(|r| !r.pass).count();
        lines.push(format!("{} passed, {failed} failed", reports.len() - failed));
        lines.join("\n")
    });
    Ok(Outcome { output, all_passed })
}

use std::fmt;
use std::io::Write;
use std::path::Path;

use rowing_spectra::densearch::{
    find_caterpillar, find_three_colorable, select_base, verify_witness, BaseChoice,
};
use rowing_spectra::exactnum::rational::{fmt_decimal, Rounding};
use rowing_spectra::exactnum::{fmt_rational, isolate_real_roots, AlgReal};
use rowing_spectra::graphkit::{from_json, p_color, to_dot, to_json, Encoding};
use rowing_spectra::papercerts::{run_selected, CertReport, ConstantsTable, Status};
use rowing_spectra::spectral::{adjacency, charpoly, lambda1, lambda1_tail, multiplicity};
use rowing_spectra::{EigBound, Error, Graph, Rational, SearchConfig};
use serde_json::json;

use crate::args::{Cli, Command, Emit, GraphInput, SearchArgs};

/// Why a command did not succeed, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input, out-of-range values.
    Usage(String),
    /// A certificate failed or a witness did not re-verify.
    Check(String),
    Budget(String),
    /// The reader went away (e.g. `| head`); not an error.
    Closed,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Closed => 0,
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Check(m) | Failure::Budget(m) => f.write_str(m),
            Failure::Closed => f.write_str("output closed"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BudgetExhausted(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Check(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    let human = cli.human;
    match cli.command {
        Command::Constants { tol } => constants(&tol, human, out),
        Command::Lambda1 { input, tol, exact } => {
            lambda1_cmd(&load(&input)?, &tol, exact, human, out)
        }
        Command::Tail { input, tol } => tail(&load(&input)?, &tol, human, out),
        Command::Search(a) => search(&a, human, out),
        Command::Certs {
            only,
            seed,
            trials,
            timing,
            jobs,
        } => {
            let reports = with_jobs(jobs, || run_selected(only.as_deref(), seed, trials, timing))?;
            certs(only.as_deref(), reports, human, out)
        }
        Command::Color { input, p } => color(&load(&input)?, p, human, out),
        Command::Mult { input, lambda } => mult(&load(&input)?, &lambda, human, out),
        Command::Build {
            encoding,
            emit,
            out: file,
        } => build(&encoding, emit, file.as_deref(), out),
    }
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.graph, &input.encoding) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(from_json(&text)?)
        }
        (None, Some(enc)) => Ok(enc.parse::<Encoding>()?.build()?),
        _ => Err(Failure::Usage(
            "give exactly one of --graph and --encoding".into(),
        )),
    }
}

fn line(out: &mut dyn Write, v: serde_json::Value) -> Outcome {
    writeln!(out, "{v}")?;
    Ok(())
}

/// Decimal digits needed so that one unit in the last place is at most `tol`.
fn digits_for(tol: &Rational) -> usize {
    let mut d = 0;
    let mut unit = Rational::from_integer(1.into());
    let ten = Rational::from_integer(10.into());
    while &unit > tol && d < 60 {
        unit /= &ten;
        d += 1;
    }
    d
}

fn bracket_json(name: &str, a: &AlgReal, tol: &Rational) -> serde_json::Value {
    let (lo, hi) = a.refine(tol);
    let d = digits_for(tol);
    json!({
        "name": name,
        "lo": fmt_rational(&lo),
        "hi": fmt_rational(&hi),
        "decimal": [fmt_decimal(&lo, d, Rounding::Down), fmt_decimal(&hi, d, Rounding::Up)],
        "minpoly": a.minpoly().to_strings(),
    })
}

fn constants(tol: &Rational, human: bool, out: &mut dyn Write) -> Outcome {
    if tol <= &Rational::from_integer(0.into()) {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    let t = ConstantsTable::compute()?;
    let mut rows = vec![
        ("lambda_star", &t.lambda_star),
        ("lambda_prime", &t.lambda_prime),
        ("rho", &t.rho),
        ("phi", &t.phi),
    ];
    let names: Vec<String> = t
        .alphas
        .iter()
        .map(|(m, _, _)| format!("alpha_{m}"))
        .collect();
    for ((_, _, a), name) in t.alphas.iter().zip(&names) {
        rows.push((name, a));
    }
    for (name, a) in rows {
        let v = bracket_json(name, a, tol);
        if human {
            writeln!(
                out,
                "{name:<13} ∈ [{}, {}]   root of {}",
                v["decimal"][0].as_str().unwrap_or_default(),
                v["decimal"][1].as_str().unwrap_or_default(),
                a.minpoly()
            )?;
        } else {
            line(out, v)?;
        }
    }
    Ok(())
}

fn eig_human(b: &EigBound) -> String {
    let d = 12;
    format!(
        "[{}, {}]",
        fmt_decimal(&b.lo, d, Rounding::Down),
        fmt_decimal(&b.hi, d, Rounding::Up)
    )
}

fn lambda1_cmd(
    g: &Graph,
    tol: &Rational,
    exact: bool,
    human: bool,
    out: &mut dyn Write,
) -> Outcome {
    let b = lambda1(g, tol)?;
    let mut v = json!({ "n": g.n(), "lambda1": b });
    if exact {
        let p = charpoly(&adjacency(g))?;
        let root = isolate_real_roots(&p)?
            .into_iter()
            .next()
            .ok_or_else(|| Failure::Usage("graph has no eigenvalues".into()))?;
        let (lo, hi) = root.interval();
        v["charpoly"] = json!(p.to_strings());
        v["root"] = json!({
            "minpoly": root.minpoly().to_strings(),
            "interval": [fmt_rational(lo), fmt_rational(hi)],
        });
    }
    if human {
        writeln!(out, "lambda_1 ∈ {}   ({b})", eig_human(&b))?;
        if exact {
            writeln!(out, "charpoly: {}", charpoly(&adjacency(g))?)?;
            let iv = &v["root"]["interval"];
            writeln!(
                out,
                "smallest root isolated in [{}, {}]",
                iv[0].as_str().unwrap_or_default(),
                iv[1].as_str().unwrap_or_default()
            )?;
        }
        Ok(())
    } else {
        line(out, v)
    }
}

fn tail(g: &Graph, tol: &Rational, human: bool, out: &mut dyn Write) -> Outcome {
    let b = lambda1_tail(g, tol)?;
    if human {
        writeln!(out, "lambda_1(F, a 0^inf) ∈ {}   ({b})", eig_human(&b))?;
        Ok(())
    } else {
        line(out, json!({ "n": g.n(), "tail": b }))
    }
}

fn search(a: &SearchArgs, human: bool, out: &mut dyn Write) -> Outcome {
    let cfg = SearchConfig {
        max_len: a.max_len,
        max_nodes: a.max_nodes,
        tol: a.tol.clone(),
        width: a.jobs,
        base: a.base.clone(),
        leg_cap: a.leg_cap,
        ..SearchConfig::default()
    };
    let caterpillar = a.base.is_none() && select_base(&a.lambda)? == BaseChoice::Caterpillar;
    let w = if caterpillar {
        find_caterpillar(&a.lambda, &a.eps, &cfg)?
    } else {
        find_three_colorable(&a.lambda, &a.eps, &cfg)?
    };
    if !verify_witness(&w) {
        return Err(Failure::Check(format!(
            "witness {} did not re-verify",
            w.encoding
        )));
    }
    match (a.emit, human) {
        (Emit::Dot, _) => write!(out, "{}", w.to_dot())?,
        (Emit::Json, false) => line(out, w.to_json())?,
        (Emit::Json, true) => {
            writeln!(out, "encoding  {}", w.encoding)?;
            writeln!(out, "vertices  {}", w.graph.n())?;
            writeln!(out, "lambda_1  ∈ {}", eig_human(&w.eig))?;
            writeln!(
                out,
                "target    (-{} - {}, -{})",
                fmt_rational(&w.lambda),
                fmt_rational(&w.epsilon),
                fmt_rational(&w.lambda)
            )?;
            writeln!(out, "coloring  {:?}", w.coloring.colors)?;
        }
    }
    Ok(())
}

fn certs(
    only: Option<&str>,
    reports: Vec<CertReport>,
    human: bool,
    out: &mut dyn Write,
) -> Outcome {
    let reports: Vec<_> = match only {
        Some(prefix) => reports
            .into_iter()
            .filter(|r| r.claim.starts_with(prefix))
            .collect(),
        None => reports,
    };
    if reports.is_empty() {
        return Err(Failure::Usage(format!(
            "no claim matches `{}`",
            only.unwrap_or("")
        )));
    }
    for r in &reports {
        if human {
            let mark = if r.status == Status::Verified {
                "ok  "
            } else {
                "FAIL"
            };
            writeln!(out, "{mark} {:<44} {}", r.claim, r.computed)?;
        } else {
            line(out, serde_json::to_value(r).expect("report serializes"))?;
        }
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status != Status::Verified)
        .map(|r| r.claim.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failed.join(", "))))
    }
}

fn color(g: &Graph, p: u32, human: bool, out: &mut dyn Write) -> Outcome {
    match p_color(g, p) {
        None => writeln!(out, "none")?,
        Some(c) if human => writeln!(
            out,
            "{}",
            c.colors
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        )?,
        Some(c) => line(out, json!({ "p": p, "coloring": c.colors }))?,
    }
    Ok(())
}

fn mult(g: &Graph, lambda: &Rational, human: bool, out: &mut dyn Write) -> Outcome {
    let m = multiplicity(g, lambda);
    if human {
        writeln!(out, "mult(-{}) = {m}", fmt_rational(lambda))?;
        Ok(())
    } else {
        line(
            out,
            json!({ "lambda": fmt_rational(lambda), "multiplicity": m }),
        )
    }
}

fn build(encoding: &str, emit: Emit, file: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = encoding.parse::<Encoding>()?.build()?;
    let text = match emit {
        Emit::Json => format!("{}\n", to_json(&g)),
        Emit::Dot => to_dot(&g, None),
    };
    match file {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_mapping() {
        assert_eq!(Failure::from(Error::BudgetExhausted("x".into())).code(), 3);
        assert_eq!(Failure::from(Error::MissingRoot).code(), 2);
        assert_eq!(Failure::Check("x".into()).code(), 1);
        let closed = std::io::Error::from(std::io::ErrorKind::BrokenPipe);
        assert_eq!(Failure::from(closed).code(), 0);
    }

    #[test]
    fn decimal_digits() {
        assert_eq!(digits_for(&Rational::new(1.into(), 1_000_000.into())), 6);
        assert_eq!(digits_for(&Rational::new(1.into(), 2.into())), 1);
        assert_eq!(digits_for(&Rational::from_integer(1.into())), 0);
    }
}

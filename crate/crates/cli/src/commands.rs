//! One function per verb. Each returns the text rendering, a JSON value and
//! whether every check it ran passed.

use std::fmt::Write as _;
use std::path::Path;

use homflypt::coeff::{FactorTag, RationalFunction};
use homflypt::connectsum::{
    certify_ring, obstruction_factor, reduce_coherent, s5_pipeline, ReductionCertificate, Ring, SurgeryPresentation,
};
use homflypt::curls::eigen_table;
use homflypt::hecke::{evaluate_braid, markov_trace, BraidWord};
use homflypt::idempotents::{basis_rank, shape_reports, symmetrizer_report};
use homflypt::skeinrw::{closure_of_braid, evaluate, PlanarDiagram};
use homflypt::young::{c_scalar, partitions, YoungDiagram};
use homflypt::{Error, Result};
use serde_json::{json, Value};

use crate::limits;
use crate::Command;

pub const SCHEMA: u32 = 1;

#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

impl Report {
    fn new(command: &str, text: String, mut json: Value, pass: bool) -> Self {
        let obj = json.as_object_mut().expect("reports are JSON objects");
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(command));
        obj.insert("pass".into(), json!(pass));
        Report { text, json, pass }
    }

    pub fn json_text(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize")
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn show(f: &RationalFunction) -> String {
    f.simplified().to_string()
}

fn to_json<T: serde::Serialize + ?Sized>(t: &T) -> Value {
    serde_json::to_value(t).expect("values serialize")
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn braid(text: &str) -> Result<BraidWord> {
    let w: BraidWord = text.parse()?;
    limits::size("strand count", w.n())?;
    limits::crossings(w.letters().len())?;
    Ok(w)
}

fn diagram(d: PlanarDiagram) -> Result<PlanarDiagram> {
    limits::crossings(d.crossings().len())?;
    Ok(d)
}

fn shape(text: &str) -> Result<YoungDiagram> {
    let y: YoungDiagram = text.parse()?;
    limits::size("shape size", y.size())?;
    Ok(y)
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Homfly { braid: Some(w), .. } => homfly_braid(w),
        Command::Homfly { diagram: Some(path), .. } => homfly_diagram(&read_file(path)?),
        Command::Homfly { .. } => Err(Error::Parse("homfly needs --braid or --diagram".into())),
        Command::Trace { braid } => trace(braid),
        Command::IdempotentCheck { n } => idempotent_check(*n),
        Command::EigenTable { max } => eigen(*max),
        Command::CTable { max } => c_table(*max),
        Command::Rank { n } => rank(*n),
        Command::Reduce { file } => reduce(&read_file(file)?),
        Command::S5 => s5(),
        Command::Certify { value, ring, factors } => certify(value, ring, factors),
        Command::Obstruction { r, lambda, mu } => obstruction(*r, lambda, mu),
    }
}

pub fn homfly_braid(text: &str) -> Result<Report> {
    let w = braid(text)?;
    let value = evaluate(&closure_of_braid(&w));
    Ok(Report::new("homfly", show(&value), json!({ "braid": w.to_string(), "value": show(&value) }), true))
}

pub fn homfly_diagram(text: &str) -> Result<Report> {
    let d = diagram(text.parse()?)?;
    let value = evaluate(&d);
    let json = json!({ "crossings": d.crossings().len(), "components": d.component_count(), "value": show(&value) });
    Ok(Report::new("homfly", show(&value), json, true))
}

pub fn trace(text: &str) -> Result<Report> {
    let w = braid(text)?;
    let value = markov_trace(&evaluate_braid(&w));
    Ok(Report::new("trace", show(&value), json!({ "braid": w.to_string(), "value": show(&value) }), true))
}

pub fn idempotent_check(n: usize) -> Result<Report> {
    limits::size("strand count", n)?;
    let sym = symmetrizer_report(n)?;
    let shapes = shape_reports(n)?;
    let rank = basis_rank(n)?;
    let full: usize = (1..=n).product();
    let rank_ok = rank.rank == full;
    let shapes_ok = shapes.iter().all(|s| s.idempotent && s.orthogonal && s.beta_alpha_is_y);
    let pass = sym.holds() && shapes_ok && rank_ok;

    let mut text = String::new();
    let _ = writeln!(text, "f_{n}: idempotent {}, absorbs generators {}", verdict(sym.f_idempotent), verdict(sym.f_absorbs));
    let _ = writeln!(text, "g_{n}: idempotent {}, absorbs generators {}", verdict(sym.g_idempotent), verdict(sym.g_absorbs));
    let width = shapes.iter().map(|s| s.shape.len()).max().unwrap_or(0);
    for s in &shapes {
        let _ = writeln!(
            text,
            "y{:<width$}  tableaux {:>3}  idempotent {}  orthogonal {}  beta*alpha=y {}  k = {}",
            s.shape,
            s.tableaux,
            verdict(s.idempotent),
            verdict(s.orthogonal),
            verdict(s.beta_alpha_is_y),
            show(&s.normalizer),
        );
    }
    let _ = writeln!(text, "rank {} of {} ({}) {}", rank.rank, full, rank.method, verdict(rank_ok));
    text.push_str(verdict(pass));
    let shapes_json: Vec<Value> = shapes
        .iter()
        .map(|s| {
            json!({
                "shape": s.shape,
                "normalizer": show(&s.normalizer),
                "idempotent": s.idempotent,
                "tableaux": s.tableaux,
                "orthogonal": s.orthogonal,
                "beta_alpha_is_y": s.beta_alpha_is_y,
            })
        })
        .collect();
    let json = json!({ "n": n, "symmetrizers": to_json(&sym), "shapes": shapes_json, "rank": to_json(&rank) });
    Ok(Report::new("idempotent-check", text, json, pass))
}

pub fn eigen(max: usize) -> Result<Report> {
    limits::size("shape size", max)?;
    let table = eigen_table(max)?;
    let pass = table.iter().all(|c| c.holds());
    let mut text = String::new();
    let _ = writeln!(text, "{:<10} {:>2} {:>6} {:>4}  {:<16} result", "shape", "i", "cell", "part", "eigenvalue");
    let mut rows = Vec::new();
    for c in &table {
        let part = format!("{:?}", c.part).to_lowercase();
        let cell = format!("({},{})", c.cell.row, c.cell.col);
        let _ = writeln!(
            text,
            "{:<10} {:>2} {:>6} {:>4}  {:<16} {}",
            c.shape.to_string(),
            c.i,
            cell,
            part,
            show(&c.eigenvalue),
            verdict(c.holds())
        );
        rows.push(json!({
            "shape": c.shape.to_string(),
            "i": c.i,
            "cell": [c.cell.row, c.cell.col],
            "part": part,
            "eigenvalue": show(&c.eigenvalue),
            "between": c.between,
            "on_idempotent": c.on_idempotent,
        }));
    }
    text.push_str(verdict(pass));
    Ok(Report::new("eigen-table", text, json!({ "max": max, "rows": rows }), pass))
}

/// Every pair up to `max` cells; the check is `c_{λ,μ} ≠ 0` whenever
/// `|λ| = |μ| > 0`.
pub fn c_table(max: usize) -> Result<Report> {
    limits::size("shape size", max)?;
    let shapes: Vec<YoungDiagram> = (0..=max).flat_map(partitions).collect();
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut pass = true;
    for lambda in &shapes {
        for mu in &shapes {
            let c = c_scalar(lambda, mu);
            let checked = lambda.size() == mu.size() && !mu.is_empty();
            let ok = !checked || !c.is_zero();
            pass &= ok;
            let mark = if checked { verdict(ok) } else { "" };
            let line = format!("{:<10} {:<10} {}  {}", lambda.to_string(), mu.to_string(), c, mark);
            let _ = writeln!(text, "{}", line.trim_end());
            rows.push(json!({
                "lambda": lambda.to_string(),
                "mu": mu.to_string(),
                "c": c.to_string(),
                "checked_nonzero": checked,
                "ok": ok,
            }));
        }
    }
    text.push_str(verdict(pass));
    Ok(Report::new("c-table", text, json!({ "max": max, "rows": rows }), pass))
}

pub fn rank(n: usize) -> Result<Report> {
    limits::size("strand count", n)?;
    let r = basis_rank(n)?;
    let full: usize = (1..=n).product();
    let pass = r.rank == full;
    Ok(Report::new("rank", r.rank.to_string(), json!({ "n": n, "rank": r.rank, "expected": full, "method": r.method }), pass))
}

fn certificate_text(cert: &ReductionCertificate, checks_ok: bool) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "value: {}", show(&cert.value));
    let _ = writeln!(text, "ring: {}", cert.ring);
    for step in &cert.steps {
        let _ = writeln!(text, "step {}: {}", step.step, verdict(step.passed()));
        for p in &step.probes {
            let _ = writeln!(text, "  {:<28} {}", p.closure, verdict(p.holds));
        }
        for n in &step.notes {
            let _ = writeln!(text, "  note: {n}");
        }
    }
    for d in &cert.denominators {
        let factors: Vec<String> = d.factors.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(text, "certificate over {}: [{}] {}", d.monoid, factors.join(", "), verdict(d.is_valid()));
    }
    text.push_str(verdict(checks_ok));
    text
}

pub fn reduce(text: &str) -> Result<Report> {
    let p: SurgeryPresentation = text.parse()?;
    diagram(p.diagram().clone())?;
    let cert = reduce_coherent(&p)?;
    let pass = cert.verify().is_ok();
    Ok(Report::new("reduce", certificate_text(&cert, pass), json!({ "certificate": to_json(&cert), "value": show(&cert.value) }), pass))
}

/// `(s - s^-1)/(v^-1 - v)`.
pub fn s5_expected() -> RationalFunction {
    "(s^2-1)/(s*v^-1-s*v)".parse().expect("well-formed constant")
}

pub fn s5() -> Result<Report> {
    let cert = s5_pipeline()?;
    let value_ok = cert.value == s5_expected();
    let pass = value_ok && cert.verify().is_ok();
    let json = json!({
        "certificate": to_json(&cert),
        "value": show(&cert.value),
        "expected": show(&s5_expected()),
        "value_matches": value_ok,
    });
    Ok(Report::new("s5", certificate_text(&cert, pass), json, pass))
}

pub fn certify(value: &str, ring: &str, factors: &[String]) -> Result<Report> {
    let value: RationalFunction = value.parse()?;
    let ring: Ring = ring.parse()?;
    let tags = factors.iter().map(|f| f.parse()).collect::<Result<Vec<FactorTag>>>()?;
    match certify_ring(&value, ring, &tags) {
        Ok(cert) => {
            let text = format!(
                "{} = ({}) / [{}] in {}\n{}",
                show(&value),
                cert.numerator,
                tags.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" * "),
                ring,
                verdict(cert.is_valid())
            );
            let pass = cert.is_valid();
            Ok(Report::new("certify", text, json!({ "ring": ring.to_string(), "certificate": to_json(&cert) }), pass))
        }
        Err(Error::Certification(why)) => {
            let text = format!("{why}\n{}", verdict(false));
            Ok(Report::new("certify", text, json!({ "ring": ring.to_string(), "error": why }), false))
        }
        Err(e) => Err(e),
    }
}

pub fn obstruction(r: i64, lambda: &str, mu: &str) -> Result<Report> {
    let (lambda, mu) = (shape(lambda)?, shape(mu)?);
    let f = obstruction_factor(r, &lambda, &mu)?;
    let pass = !f.is_zero();
    let text = format!("x^{r} - 1 - c({lambda},{mu}) = {f}\nnonzero {}", verdict(pass));
    let json = json!({ "r": r, "lambda": lambda.to_string(), "mu": mu.to_string(), "factor": f.to_string() });
    Ok(Report::new("obstruction", text, json, pass))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn parse(args: &[&str]) -> crate::Cli {
        crate::Cli::try_parse_from(std::iter::once("homflypt").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn trefoil_from_the_command_line() {
        let cli = parse(&["homfly", "--braid", "n=2 s1 s1 s1"]);
        let report = run(&cli.command).unwrap();
        let w: BraidWord = "n=2 s1 s1 s1".parse().unwrap();
        assert_eq!(report.text, show(&markov_trace(&evaluate_braid(&w))));
        assert!(report.pass);
        let traced = run(&parse(&["trace", "--braid", "n=2 s1 s1 s1"]).command).unwrap();
        assert_eq!(traced.text, report.text);
    }

    #[test]
    fn rank_of_three_strands() {
        let report = run(&parse(&["rank", "--n", "3"]).command).unwrap();
        assert_eq!(report.text, "6");
        assert!(report.pass);
        assert_eq!(report.json["schema"], 1);
        assert_eq!(report.json["rank"], 6);
    }

    #[test]
    fn s5_prints_value_and_pass() {
        let report = s5().unwrap();
        assert!(report.pass);
        assert!(report.text.starts_with(&format!("value: {}", show(&s5_expected()))));
        assert!(report.text.ends_with("PASS"));
        assert_eq!(report.json["value_matches"], true);
    }

    #[test]
    fn tables_pass() {
        assert!(eigen(2).unwrap().pass);
        let c = c_table(2).unwrap();
        assert!(c.pass);
        // ∅, [1], [2], [1,1] against each other
        assert_eq!(c.json["rows"].as_array().unwrap().len(), 16);
        assert!(idempotent_check(3).unwrap().pass);
    }

    #[test]
    fn certify_inverse_delta() {
        let good = certify("(s^2-1)/(s*v^-1-s*v)", "R'", &["v^4-s^0".into(), "s".into()]).unwrap();
        assert!(good.pass, "{}", good.text);
        let bad = certify("(s^2-1)/(s*v^-1-s*v)", "R", &["s".into()]).unwrap();
        assert!(!bad.pass);
        assert!(certify("1", "F", &[]).is_err());
        assert!(certify("1", "Q", &[]).is_err());
    }

    #[test]
    fn obstruction_is_nonzero() {
        let r = obstruction(1, "[1]", "[]").unwrap();
        assert!(r.pass);
        assert!(obstruction(2, "[1]", "[]").is_err());
    }

    #[test]
    fn reduce_a_pierced_unknot() {
        // a Hopf link with one component dotted
        let text = "X 0 3 1 2 +\nX 2 1 3 0 +\ndotted: 1\n";
        match reduce(text) {
            Ok(r) => {
                assert!(r.pass, "{}", r.text);
                assert!(r.text.starts_with("value: 0"));
            }
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(homfly_braid("s1 s1").is_err());
        assert!(homfly_diagram("garbage").is_err());
        assert!(crate::Cli::try_parse_from(["homflypt", "rank"]).is_err());
        assert!(crate::Cli::try_parse_from(["homflypt", "homfly"]).is_err());
    }
}

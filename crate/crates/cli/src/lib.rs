//! Command-line front end for `acm-core`.
//!
//! Every subcommand builds one [`Payload`]. `--json` prints it as pretty JSON
//! (keys in a fixed order); otherwise the `result` record is flattened into
//! an aligned two-column table, so both modes carry the same values.

use std::ffi::OsString;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use acm_core::oracle::{verify_all, Limits};
use acm_core::{
    bounds::ci_applicable_cases, check_linkage_clauses, ci_bound, gmax, ladder_intersection,
    ladder_union, linked_intersection, main_bound, ordinary_intersection, refined_bound,
    union_on_surface, union_ordinary, union_ordinary_general, BiliaisonType, Certification,
    HVector, LinkageFrame, ReducedUnion,
};

#[derive(Parser, Debug)]
#[command(name = "acm", version, about = "Invariants, bounds and unions of ACM space curves")]
struct Cli {
    /// Print a JSON record instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree, genus, s, t, speciality and regularity of an h-vector.
    Invariants(HArg),
    /// Convert between an h-vector and its biliaison type.
    Lambda(LambdaArgs),
    /// Maximal genus G_CM(d, s) with a witness h-vector.
    Gmax(GmaxArgs),
    /// Point bound for two complete intersections.
    CiBound(CiArgs),
    /// Bounds for two integral ACM curves.
    Bound(BoundArgs),
    /// Residual of an h-vector in an m x n complete intersection.
    Link(LinkArgs),
    /// Intersection of the curves 1..s and 1..t.
    Ladder(LadderArgs),
    /// Closed-form union of two ordinary curves with the same s.
    UnionOrdinary(UnionOrdinaryArgs),
    /// Union of two ordinary curves by peeling hyperplanes.
    UnionGeneral(PairArgs),
    /// Union of two curves on a surface of degree m.
    UnionOnSurface(SurfaceArgs),
    /// Split a biliaison type at its gaps.
    Davis(DavisArgs),
    /// Compare closed forms with exhaustive enumeration.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
struct HArg {
    #[arg(long, value_parser = parse_h)]
    h: HVector,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("src").required(true).args(["h", "lam"])))]
struct LambdaArgs {
    #[arg(long, value_parser = parse_h)]
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<HVector>,
    #[arg(long, value_parser = parse_lam)]
    #[serde(skip_serializing_if = "Option::is_none")]
    lam: Option<BiliaisonType>,
}

#[derive(Args, Debug, Serialize)]
struct GmaxArgs {
    #[arg(long)]
    d: u64,
    #[arg(long)]
    s: u32,
}

#[derive(Args, Debug, Serialize)]
struct CiArgs {
    /// `s,t` for the first curve.
    #[arg(long, value_parser = parse_pair)]
    c1: (u32, u32),
    /// `s,t` for the second curve.
    #[arg(long, value_parser = parse_pair)]
    c2: (u32, u32),
}

#[derive(Args, Debug, Serialize)]
struct BoundArgs {
    #[arg(long, value_parser = parse_h)]
    h1: HVector,
    #[arg(long, value_parser = parse_h)]
    h2: HVector,
    /// Use the bound for curves with different initial degrees.
    #[arg(long)]
    refined: bool,
    /// Require `s_i < t_j` instead of `s_i <= t_j`.
    #[arg(long, requires = "refined")]
    strict: bool,
}

#[derive(Args, Debug, Serialize)]
struct LinkArgs {
    #[arg(long, value_parser = parse_h)]
    h: HVector,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Args, Debug, Serialize)]
struct LadderArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    t: u32,
}

#[derive(Args, Debug, Serialize)]
struct UnionOrdinaryArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    /// Put the union on an irreducible surface of degree s + 1.
    #[arg(long)]
    restricted: bool,
}

#[derive(Args, Debug, Serialize)]
struct PairArgs {
    #[arg(long, value_parser = parse_h)]
    h1: HVector,
    #[arg(long, value_parser = parse_h)]
    h2: HVector,
}

#[derive(Args, Debug, Serialize)]
struct SurfaceArgs {
    #[arg(long, value_parser = parse_h)]
    h1: HVector,
    #[arg(long, value_parser = parse_h)]
    h2: HVector,
    #[arg(long)]
    m: u32,
}

#[derive(Args, Debug, Serialize)]
struct DavisArgs {
    #[arg(long, value_parser = parse_lam)]
    lam: BiliaisonType,
    /// Only this gap index.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    dmax: Option<u64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    smax: Option<u32>,
}

fn parse_h(s: &str) -> Result<HVector, String> {
    s.parse().map_err(|e: acm_core::Error| e.to_string())
}

fn parse_lam(s: &str) -> Result<BiliaisonType, String> {
    s.parse().map_err(|e: acm_core::Error| e.to_string())
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `s,t`, got {s:?}"))?;
    let num = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|e| format!("{x:?}: {e}"))
    };
    Ok((num(a)?, num(b)?))
}

/// The structured record behind every successful invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Payload {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub citations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    /// 0 success, 1 domain error, 2 usage error.
    pub exit_code: i32,
    pub payload: Option<Payload>,
    pub stdout: String,
    pub stderr: String,
}

type Outcome = acm_core::Result<(Value, Vec<String>, Vec<String>)>;

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let ok = !e.use_stderr();
            return CommandResult {
                exit_code: if ok { 0 } else { 2 },
                payload: None,
                stdout: if ok { text.clone() } else { String::new() },
                stderr: if ok { String::new() } else { text },
            };
        }
    };
    let (name, input, outcome) = dispatch(&cli.command);
    match outcome {
        Ok((result, warnings, citations)) => {
            let failed = name == "verify" && result["failures"].as_array().is_some_and(|f| !f.is_empty());
            let payload = Payload {
                command: name.into(),
                input,
                result,
                warnings,
                citations,
            };
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&payload).expect("serializable");
                s.push('\n');
                s
            } else {
                render_plain(&payload)
            };
            CommandResult {
                exit_code: i32::from(failed),
                payload: Some(payload),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CommandResult {
            exit_code: 1,
            payload: None,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn dispatch(cmd: &Command) -> (&'static str, Value, Outcome) {
    match cmd {
        Command::Invariants(a) => ("invariants", to_value(a), invariants(&a.h)),
        Command::Lambda(a) => ("lambda", to_value(a), lambda(a)),
        Command::Gmax(a) => ("gmax", to_value(a), gmax_cmd(a)),
        Command::CiBound(a) => ("ci-bound", to_value(a), ci_bound_cmd(a)),
        Command::Bound(a) => ("bound", to_value(a), bound(a)),
        Command::Link(a) => ("link", to_value(a), link_cmd(a)),
        Command::Ladder(a) => ("ladder", to_value(a), ladder(a)),
        Command::UnionOrdinary(a) => ("union-ordinary", to_value(a), union_ordinary_cmd(a)),
        Command::UnionGeneral(a) => (
            "union-general",
            to_value(a),
            union_ordinary_general(&a.h1, &a.h2).map(reduced_union),
        ),
        Command::UnionOnSurface(a) => (
            "union-on-surface",
            to_value(a),
            union_on_surface(&a.h1, &a.h2, a.m).map(reduced_union),
        ),
        Command::Davis(a) => ("davis", to_value(a), davis(a)),
        Command::Verify(a) => ("verify", to_value(a), verify(a)),
    }
}

fn invariants(h: &HVector) -> Outcome {
    let inv = h.invariants()?;
    let lam = h.to_biliaison()?;
    let mut r = json!({
        "d": inv.degree,
        "p_a": inv.genus,
        "s": inv.initial_degree,
        "t": inv.second_ideal_degree,
        "e": inv.speciality,
        "reg": inv.regularity,
        "b": inv.top_index,
        "decreasing_type": h.is_decreasing_type()?,
        "lambda": lam,
    });
    if lam.is_strictly_increasing() {
        r["reg_from_lambda"] = json!(lam.invariants()?.regularity);
    }
    Ok((r, vec![], vec![]))
}

fn lambda(a: &LambdaArgs) -> Outcome {
    let (h, lam) = match (&a.h, &a.lam) {
        (Some(h), _) => (h.clone(), h.to_biliaison()?),
        (None, Some(lam)) => (lam.to_hvector()?, lam.clone()),
        (None, None) => unreachable!("clap requires one of --h, --lam"),
    };
    let mut warnings = vec![];
    let strict = lam.is_strictly_increasing();
    if !strict {
        warnings.push("biliaison type is not strictly increasing; h is not of decreasing type".into());
    }
    let mut r = json!({
        "h": h,
        "lambda": lam,
        "strictly_increasing": strict,
        "gaps": lam.find_gaps(),
    });
    if strict {
        let inv = lam.invariants()?;
        let map = r.as_object_mut().expect("object");
        for (k, v) in [
            ("d", json!(inv.degree)),
            ("p_a", json!(inv.genus)),
            ("s", json!(inv.initial_degree)),
            ("t", json!(inv.second_ideal_degree)),
            ("e", json!(inv.speciality)),
            ("reg", json!(inv.regularity)),
        ] {
            map.insert(k.into(), v);
        }
    }
    Ok((r, warnings, vec![]))
}

fn gmax_cmd(a: &GmaxArgs) -> Outcome {
    if a.s == 0 {
        return Err(acm_core::Error::OutOfRange("s must be at least 1".into()));
    }
    let g = gmax(a.d, a.s);
    let mut warnings = vec![];
    if !g.feasible {
        warnings.push(format!(
            "no decreasing-type h-vector of degree {} has initial degree {}",
            a.d, a.s
        ));
    }
    Ok((to_value(&g), warnings, vec![]))
}

fn ci_bound_cmd(a: &CiArgs) -> Outcome {
    let r = ci_bound(a.c1, a.c2)?;
    let applicable = ci_applicable_cases(a.c1, a.c2);
    let mut warnings = vec![];
    if applicable.len() > 1 {
        let tags: Vec<&str> = applicable.iter().map(|r| r.tag()).collect();
        warnings.push(format!(
            "cases {} all apply and agree; reporting {}",
            tags.join(", "),
            r.rule.tag()
        ));
    }
    Ok((to_value(&r), warnings, vec![r.rule.tag().into()]))
}

fn bound(a: &BoundArgs) -> Outcome {
    if a.refined {
        let r = refined_bound(&a.h1, &a.h2, a.strict)?;
        return Ok((to_value(&r), vec![], vec![r.rule.tag().into()]));
    }
    let m = main_bound(&a.h1, &a.h2)?;
    let mut warnings = vec![
        "genus bound holds when the union's biliaison type has no gap".to_string(),
        "point bound holds when the union's biliaison type has a gap or s(C) = s1 + s2".to_string(),
    ];
    if m.points_from_genus < 0 {
        warnings.push("no gap-free union with these h-vectors exists".into());
    }
    let citations = vec![m.genus_bound.rule.tag().into(), m.point_bound.rule.tag().into()];
    Ok((to_value(&m), warnings, citations))
}

fn link_cmd(a: &LinkArgs) -> Outcome {
    let frame = LinkageFrame::new(a.m, a.n)?;
    let residual = frame.link(&a.h)?;
    let mut r = json!({
        "residual": residual,
        "ci": frame.h_ci,
        "degree": residual.degree(),
    });
    let mut warnings = vec![];
    if a.h.initial_degree() == a.m {
        r["intersection"] = json!(linked_intersection(&a.h, a.m, a.n)?);
        r["clauses"] = to_value(&check_linkage_clauses(&a.h, &residual, a.m, a.n)?);
    } else {
        warnings.push(format!(
            "m = {} differs from s(h) = {}; the linked count need not be maximal and is omitted",
            a.m,
            a.h.initial_degree()
        ));
    }
    Ok((r, warnings, vec![]))
}

fn ladder(a: &LadderArgs) -> Outcome {
    let r = json!({
        "intersection": ladder_intersection(a.s, a.t)?,
        "union": ladder_union(a.s, a.t)?,
    });
    Ok((r, vec![], vec![]))
}

fn union_ordinary_cmd(a: &UnionOrdinaryArgs) -> Outcome {
    let u = union_ordinary(a.s, a.a, a.b, a.restricted)?;
    let mut r = to_value(&u);
    r["intersection"] = json!(ordinary_intersection(a.s, a.a, a.b, a.restricted)?);
    let cite = format!("ordinary-{}", u.case_tag.tag());
    Ok((r, vec![], vec![cite]))
}

fn reduced_union(u: ReducedUnion) -> (Value, Vec<String>, Vec<String>) {
    let mut warnings = vec![];
    if u.certification.is_heuristic() {
        warnings.push("HEURISTIC: maximality of this union is not certified".into());
    }
    let citations = match &u.certification {
        Certification::MaximalGenus { .. } => vec!["maximal-genus".into()],
        Certification::Stepwise { .. } => vec!["stepwise".into()],
        Certification::Heuristic => vec![],
    };
    (to_value(&u), warnings, citations)
}

fn davis(a: &DavisArgs) -> Outcome {
    let gaps = a.lam.find_gaps();
    let wanted = match a.t {
        Some(t) => vec![t],
        None => gaps.clone(),
    };
    let splits = wanted
        .into_iter()
        .map(|t| {
            let sp = a.lam.davis_split(t)?;
            let mut v = to_value(&sp);
            v.as_object_mut()
                .expect("object")
                .shift_insert(0, "t".into(), json!(t));
            Ok(v)
        })
        .collect::<acm_core::Result<Vec<Value>>>()?;
    let mut warnings = vec![];
    if gaps.is_empty() {
        warnings.push(format!("{} has no gap", a.lam));
    }
    Ok((json!({ "gaps": gaps, "splits": splits }), warnings, vec![]))
}

fn verify(a: &VerifyArgs) -> Outcome {
    let mut limits = Limits::default();
    if let Some(d) = a.dmax {
        limits.dmax = d;
    }
    if let Some(s) = a.smax {
        limits.smax = s;
    }
    let report = verify_all(limits);
    let r = json!({
        "limits": limits,
        "checks_run": report.checks_run,
        "failures": report.failures,
    });
    Ok((r, vec![], vec![]))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) if map.is_empty() => rows.push((prefix.into(), "-".into())),
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(xs) if xs.is_empty() => rows.push((prefix.into(), "-".into())),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let joined: Vec<String> = xs.iter().map(scalar).collect();
            rows.push((prefix.into(), joined.join(",")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        other => rows.push((prefix.into(), scalar(other))),
    }
}

/// Aligned `key  value` rows, then citations and warnings.
pub fn render_plain(p: &Payload) -> String {
    let mut rows = Vec::new();
    flatten("", &p.result, &mut rows);
    if !p.citations.is_empty() {
        rows.push(("rules".into(), p.citations.join(",")));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    for w in &p.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

/// Field order of every JSON object in a payload, for schema checks.
pub fn object_keys(v: &Value) -> Vec<String> {
    let mut out = Vec::new();
    fn walk(v: &Value, out: &mut Vec<String>) {
        match v {
            Value::Object(m) => {
                let m: &Map<String, Value> = m;
                out.extend(m.keys().cloned());
                m.values().for_each(|x| walk(x, out));
            }
            Value::Array(xs) => xs.iter().for_each(|x| walk(x, out)),
            _ => {}
        }
    }
    walk(v, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> CommandResult {
        run(std::iter::once("acm").chain(args.split_whitespace()))
    }

    #[test]
    fn gmax_example() {
        let r = run_args("gmax --d 11 --s 2");
        assert_eq!(r.exit_code, 0);
        assert!(r.stdout.contains("genus     20\n"), "{}", r.stdout);
        assert!(r.stdout.contains("witness   1,2,2,2,2,2\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args("gmax --d 11").exit_code, 2);
        assert_eq!(run_args("invariants --h 1,,2").exit_code, 2);
        assert_eq!(run_args("invariants --h 01,2").exit_code, 2);
        assert_eq!(run_args("bound --h1 1 --h2 1 --strict").exit_code, 2);
        assert_eq!(run_args("frobnicate").exit_code, 2);
        assert_eq!(run_args("--help").exit_code, 0);
        let r = run_args("invariants --h 1,3");
        assert_eq!(r.exit_code, 1);
        assert!(r.stderr.contains("not C2-admissible"));
        assert_eq!(run_args("link --h 1,2,2,2,2 --m 2 --n 3").exit_code, 1);
        assert_eq!(run_args("ladder --s 3 --t 2").exit_code, 1);
    }

    #[test]
    fn whitespace_around_commas() {
        let r = run(["acm", "invariants", "--h", " 1, 2 ,3"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.payload.unwrap().result["d"], json!(6));
    }

    #[test]
    fn json_round_trips() {
        let r = run_args("--json union-general --h1 1,2,1 --h2 1,2,3,4,5,4");
        assert_eq!(r.exit_code, 0);
        let parsed: Payload = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(Some(parsed), r.payload);
        assert_eq!(
            object_keys(&serde_json::from_str(&r.stdout).unwrap())[..5],
            ["command", "input", "result", "warnings", "citations"]
        );
    }

    #[test]
    fn plain_flattening() {
        let p = Payload {
            command: "x".into(),
            input: json!({}),
            result: json!({"a": [1, 2], "bb": {"c": null, "d": []}, "e": [[1], [2, 3]]}),
            warnings: vec!["w".into()],
            citations: vec!["CI-a".into()],
        };
        assert_eq!(
            render_plain(&p),
            "a      1,2\nbb.c   -\nbb.d   -\ne.0    1\ne.1    2,3\nrules  CI-a\nwarning: w\n"
        );
    }
}

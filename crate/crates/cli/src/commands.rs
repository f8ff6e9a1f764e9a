use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};
use wicketlab::extremal::{exact_ex_linear, ExtremalError, ExtremalRecord, SearchBudget};
use wicketlab::generators::{
    affine_plane_ag23, behrend_set, greedy_pattern_free, random_linear, rsz_system,
    steiner_triple_system, GeneratorConfig,
};
use wicketlab::io::{parse_system, to_text};
use wicketlab::patterns::{count_63, count_wickets, validate_embedding, WicketEmbedding};
use wicketlab::pipeline::{simulate, ProofVariant, SimulationConfig};
use wicketlab::system::SystemRecord;
use wicketlab::{Embedding, LinearTripleSystem, Pattern, SystemError};

use crate::manifest::{with_suffix, Recorder};
use crate::{
    ConvertArgs, CountArgs, DetectArgs, ExtremalArgs, Format, GenArgs, Kind, PipelineArgs,
    ValidateArgs,
};

pub enum Failure {
    /// Bad flags or flag combinations: exit 2.
    Usage(String),
    /// A domain outcome the caller asked to treat as failure, or unusable
    /// input: exit 1. Carries a JSON diagnostic.
    Domain(String),
}

type Outcome = Result<(), Failure>;

fn domain(value: Value) -> Failure {
    Failure::Domain(serde_json::to_string(&value).expect("json value serializes"))
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    domain(json!({"error": "io", "path": path.display().to_string(), "message": e.to_string()}))
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn parse_pattern(name: &str) -> Result<Pattern, Failure> {
    name.parse()
        .map_err(|e: wicketlab::patterns::UnknownPattern| Failure::Usage(e.to_string()))
}

/// Structured form of a system error, for diagnostics and `validate`.
pub fn system_error_json(e: &SystemError) -> Value {
    let mut v = match e {
        SystemError::VertexOutOfRange { vertex, n } => {
            json!({"kind": "VertexOutOfRange", "vertex": vertex, "n": n})
        }
        SystemError::DegenerateTriple(t) => json!({"kind": "DegenerateTriple", "triple": t}),
        SystemError::LinearityViolation { pair, edges } => json!({
            "kind": "LinearityViolation",
            "pair": [pair.0, pair.1],
            "edges": [edges.0, edges.1],
        }),
        SystemError::DuplicateEdge { edge, existing } => {
            json!({"kind": "DuplicateEdge", "edge": edge, "existing": existing})
        }
        SystemError::UnorderedTriple { edge } => json!({"kind": "UnorderedTriple", "edge": edge}),
        SystemError::IndexInconsistent(msg) => json!({"kind": "IndexInconsistent", "detail": msg}),
        SystemError::Parse { line, message } => {
            json!({"kind": "Parse", "line": line, "detail": message})
        }
        SystemError::SizeLimitExceeded { n, limit } => {
            json!({"kind": "SizeLimitExceeded", "n": n, "limit": limit})
        }
    };
    v["message"] = json!(e.to_string());
    v
}

/// Reads the text format, or the JSON record format when the file starts
/// with `{`.
fn parse_any(text: &str) -> Result<LinearTripleSystem, SystemError> {
    if text.trim_start().starts_with('{') {
        let rec: SystemRecord = serde_json::from_str(text).map_err(|e| SystemError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        LinearTripleSystem::from_edges(rec.n, rec.edges)
    } else {
        parse_system(text)
    }
}

fn load(path: &Path) -> Result<LinearTripleSystem, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_any(&text).map_err(|e| {
        domain(json!({
            "error": "invalid_system",
            "path": path.display().to_string(),
            "detail": system_error_json(&e),
        }))
    })
}

pub fn gen(a: &GenArgs, argv: &[String]) -> Outcome {
    let mut rec = Recorder::new("gen", argv, Some(a.seed));
    let need_n = || {
        a.n.ok_or_else(|| Failure::Usage(format!("--kind {:?} needs --n", a.kind).to_lowercase()))
    };
    let sampler_config = |n: usize| {
        let mut cfg = GeneratorConfig::new(n, a.seed);
        cfg.target_edges = a.target;
        if let Some(m) = a.max_attempts {
            cfg.max_attempts = m;
        }
        cfg
    };
    let (sys, details) = match a.kind {
        Kind::Random => {
            let cfg = sampler_config(need_n()?);
            let g = random_linear(&cfg);
            let report = g.report(&cfg);
            (g.system, json!(report))
        }
        Kind::Greedy => {
            let cfg = sampler_config(need_n()?).forbidding(parse_pattern(&a.pattern)?);
            let g = greedy_pattern_free(&cfg);
            let report = g.report(&cfg);
            (g.system, json!(report))
        }
        Kind::Sts => {
            let n = need_n()?;
            let sys = steiner_triple_system(n).map_err(|e| {
                domain(json!({"error": "unsupported_order", "message": e.to_string()}))
            })?;
            (sys, json!({}))
        }
        Kind::Ag23 => (affine_plane_ag23(), json!({})),
        Kind::Rsz => {
            let base = a
                .base
                .ok_or_else(|| Failure::Usage("--kind rsz needs --base".into()))?;
            let set = behrend_set(base);
            (
                rsz_system(base, &set.elements),
                json!({"base": base, "set": set}),
            )
        }
    };
    let text = to_text(&sys);
    let Some(out) = &a.out else {
        print!("{text}");
        return Ok(());
    };
    let sidecar = json!({
        "kind": format!("{:?}", a.kind).to_lowercase(),
        "n": sys.n(),
        "edges": sys.edge_count(),
        "details": details,
    });
    let sidecar_path = with_suffix(out, ".json");
    write_file(out, &text)?;
    write_file(&sidecar_path, &pretty(&sidecar))?;
    rec.output(out);
    rec.output(&sidecar_path);
    rec.finish(out).map_err(|e| io_failure(out, e))?;
    println!(
        "{}",
        serde_json::to_string(&sidecar).expect("sidecar serializes")
    );
    Ok(())
}

pub fn detect(a: &DetectArgs, argv: &[String]) -> Outcome {
    let mut rec = Recorder::new("detect", argv, None);
    let pattern = parse_pattern(&a.pattern)?;
    let sys = load(&a.input)?;
    let found = pattern.find(&sys);
    match a.format.unwrap_or(Format::Json) {
        Format::Json => println!(
            "{}",
            json!({"pattern": pattern.name(), "found": found.is_some(), "embedding": found})
        ),
        Format::Tsv => {
            println!("pattern\tfound\tedges");
            let edges = found.map(|e| join(&e.edge_ids())).unwrap_or_default();
            println!("{}\t{}\t{}", pattern, found.is_some(), edges);
        }
    }
    if let Some(out) = &a.out {
        write_file(out, &pretty(&found))?;
        rec.input(&a.input);
        rec.output(out);
        rec.finish(out).map_err(|e| io_failure(out, e))?;
    }
    match found {
        Some(emb) if a.expect_free => Err(domain(json!({
            "error": "pattern_found",
            "pattern": pattern.name(),
            "embedding": emb,
        }))),
        _ => Ok(()),
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn count(a: &CountArgs) -> Outcome {
    let pattern = parse_pattern(&a.pattern)?;
    let sys = load(&a.input)?;
    let c = match pattern {
        Pattern::Wicket => count_wickets(&sys),
        Pattern::SixThree => count_63(&sys),
        other => {
            return Err(Failure::Usage(format!(
                "counting is available for wicket and six_three, not {other}"
            )))
        }
    };
    match a.format.unwrap_or(Format::Json) {
        Format::Json => println!("{}", json!({"pattern": pattern.name(), "count": c})),
        Format::Tsv => println!("pattern\tcount\n{pattern}\t{c}"),
    }
    Ok(())
}

fn witness_path(table: &Path, n: usize, pattern: Pattern) -> PathBuf {
    let stem = table
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    table.with_file_name(format!("{stem}.n{n}.{pattern}.txt"))
}

fn record_json(r: &ExtremalRecord) -> Value {
    json!({
        "n": r.n,
        "pattern": r.pattern,
        "max_edges": r.max_edges,
        "proof": r.proof_of_optimality,
        "nodes": r.nodes_explored,
        "seconds": r.wall_time.as_secs_f64(),
        "witness": SystemRecord::from(&r.witness),
    })
}

pub fn extremal(a: &ExtremalArgs, argv: &[String]) -> Outcome {
    let mut rec = Recorder::new("extremal", argv, None);
    let pattern = parse_pattern(&a.pattern)?;
    if a.budget_seconds
        .is_some_and(|s| !(s.is_finite() && s >= 0.0))
    {
        return Err(Failure::Usage(
            "--budget-seconds must be a non-negative number".into(),
        ));
    }
    let budget = SearchBudget {
        max_nodes: a.budget_nodes,
        max_time: a.budget_seconds.map(Duration::from_secs_f64),
    };
    let mut records = Vec::new();
    for &n in &a.n {
        let record = exact_ex_linear(n, pattern, budget).map_err(|e| match e {
            ExtremalError::SizeLimitExceeded { n, limit } => domain(json!({
                "error": "size_limit_exceeded",
                "n": n,
                "limit": limit,
                "message": e.to_string(),
            })),
        })?;
        if !record.proof_of_optimality {
            eprintln!(
                "warning: n = {} stopped on its budget; max_edges = {} is a lower bound\t{}",
                record.n,
                record.max_edges,
                record.tsv_row()
            );
        }
        records.push(record);
    }
    let format = a.format.unwrap_or(Format::Tsv);
    let (exact, bounds): (Vec<&ExtremalRecord>, Vec<&ExtremalRecord>) =
        records.iter().partition(|r| r.proof_of_optimality);
    let body = render_table(&exact, format);
    print!("{body}");
    if let Some(out) = &a.out {
        write_file(out, &body)?;
        rec.output(out);
        if !bounds.is_empty() {
            let path = lower_bounds_path(out);
            write_file(&path, &render_table(&bounds, format))?;
            eprintln!("lower bounds written to {}", path.display());
            rec.output(&path);
        }
        for r in &records {
            let p = witness_path(out, r.n, pattern);
            write_file(&p, &to_text(&r.witness))?;
            rec.output(&p);
        }
        rec.finish(out).map_err(|e| io_failure(out, e))?;
    }
    Ok(())
}

/// Budget-truncated rows are kept out of the exact table and go beside it
/// as `<stem>.lower_bounds.<ext>`.
fn lower_bounds_path(table: &Path) -> PathBuf {
    let stem = table
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match table.extension() {
        Some(ext) => format!("{stem}.lower_bounds.{}", ext.to_string_lossy()),
        None => format!("{stem}.lower_bounds"),
    };
    table.with_file_name(name)
}

fn render_table(records: &[&ExtremalRecord], format: Format) -> String {
    match format {
        Format::Tsv => {
            let mut s = String::new();
            writeln!(s, "{}", ExtremalRecord::tsv_header()).unwrap();
            for r in records {
                writeln!(s, "{}", r.tsv_row()).unwrap();
            }
            s
        }
        Format::Json => pretty(&records.iter().map(|r| record_json(r)).collect::<Vec<_>>()),
    }
}

pub fn pipeline(a: &PipelineArgs, argv: &[String]) -> Outcome {
    let mut rec = Recorder::new("pipeline", argv, Some(a.seed));
    let variant: ProofVariant = a.proof.parse().map_err(Failure::Usage)?;
    let sys = load(&a.input)?;
    let mut cfg = SimulationConfig::new(a.seed, a.rounds);
    if let Some(t) = a.trials {
        if t == 0 {
            return Err(Failure::Usage("--trials must be positive".into()));
        }
        cfg = cfg.with_trials(t);
    }
    let result = simulate(&sys, variant, &cfg);
    let embedding = result.embedding.map(Embedding::Wicket);
    println!(
        "{}",
        json!({
            "proof": variant.to_string(),
            "seed": a.seed,
            "rounds": a.rounds,
            "found": embedding.is_some(),
            "success_round": result.trace.success_round,
            "rounds_run": result.trace.rounds_run,
            "embedding": embedding,
        })
    );
    if let Some(prefix) = &a.out {
        let emb_path = with_suffix(prefix, ".embedding.json");
        let trace_path = with_suffix(prefix, ".trace.json");
        write_file(&emb_path, &pretty(&embedding))?;
        write_file(&trace_path, &pretty(&result.trace))?;
        rec.input(&a.input);
        rec.output(&emb_path);
        rec.output(&trace_path);
        rec.finish(prefix).map_err(|e| io_failure(prefix, e))?;
    }
    Ok(())
}

/// Accepts a tagged embedding, a bare wicket, or `null`.
fn parse_embedding(text: &str) -> Result<Option<Embedding>, serde_json::Error> {
    serde_json::from_str::<Option<Embedding>>(text).or_else(|_| {
        serde_json::from_str::<WicketEmbedding>(text).map(|w| Some(Embedding::Wicket(w)))
    })
}

pub fn validate(a: &ValidateArgs) -> Outcome {
    let text = fs::read_to_string(&a.input).map_err(|e| io_failure(&a.input, e))?;
    let sys = match parse_any(&text) {
        Ok(s) => s,
        Err(e) => {
            let report = json!({"valid": false, "error": system_error_json(&e)});
            println!("{report}");
            return Err(domain(report));
        }
    };
    let mut report = json!({"valid": true, "n": sys.n(), "edges": sys.edge_count()});
    if let Some(path) = &a.embedding {
        let etext = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
        let emb = parse_embedding(&etext).map_err(|e| {
            domain(json!({"error": "invalid_embedding_file", "path": path.display().to_string(), "message": e.to_string()}))
        })?;
        let verdict = match emb {
            None => json!({"present": false}),
            Some(emb) => match validate_embedding(&sys, &emb) {
                Ok(()) => json!({"present": true, "pattern": emb.pattern(), "valid": true}),
                Err(e) => {
                    report["valid"] = json!(false);
                    json!({"present": true, "pattern": emb.pattern(), "valid": false, "error": e.to_string()})
                }
            },
        };
        report["embedding"] = verdict;
    }
    println!("{report}");
    if report["valid"] == json!(true) {
        Ok(())
    } else {
        Err(domain(report))
    }
}

pub fn convert(a: &ConvertArgs, argv: &[String]) -> Outcome {
    let mut rec = Recorder::new("convert", argv, None);
    let sys = load(&a.input)?;
    let body = match a.format {
        Format::Tsv => to_text(&sys),
        Format::Json => pretty(&SystemRecord::from(&sys)),
    };
    match &a.out {
        None => print!("{body}"),
        Some(out) => {
            write_file(out, &body)?;
            rec.input(&a.input);
            rec.output(out);
            rec.finish(out).map_err(|e| io_failure(out, e))?;
        }
    }
    Ok(())
}

//! `latinsq` — rectangle analysis of latin squares from the command line.
//!
//! Input squares use the text format of the core crate: a header line with
//! the order, then one line per row; `#` lines are comments. Human output
//! mirrors the dotted cycle and `<x,y,z,u>` notation; `--json` switches to
//! deterministic machine output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use latin_rect::{
    are_isotopic, autotopisms_bounded, equivalence_classes, find_rectangles,
    find_rectangles_oracle, group_has_rectangle, is_isotopy, two_cycles, Error as CoreError,
    GroupCheck, IsotopyTriple, LatinSquare, Permutation, Rectangle,
};

#[derive(Parser)]
#[command(name = "latinsq", version, about = "Rectangle analysis of latin squares")]
struct Cli {
    /// Machine-readable output with stable key and list order
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List all rectangles of a square
    Rects {
        file: PathBuf,
        /// Cross-check against the brute-force definition scan
        #[arg(long)]
        oracle: bool,
        /// Also print the generating products L_x L_z^-1 and their 2-cycles
        #[arg(long)]
        cycles: bool,
    },
    /// Switch a rectangle and emit the transformed square
    Transform {
        file: PathBuf,
        x: usize,
        y: usize,
        z: usize,
        u: usize,
    },
    /// Enumerate the autotopism group
    Autotopisms {
        file: PathBuf,
        #[arg(long, default_value_t = latin_rect::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Partition rectangles into autotopism equivalence classes
    Classes {
        file: PathBuf,
        #[arg(long, default_value_t = latin_rect::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Decide whether two squares are isotopic
    Isotopic {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Test antiisotopy (isotopy onto the transpose) instead
        #[arg(long)]
        anti: bool,
        #[arg(long, default_value_t = latin_rect::DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Emit the k-th parastrophe (conjugate), k in 0..=5
    Parastrophe { file: PathBuf, k: usize },
    /// Count cells where two squares differ
    Distance { file_a: PathBuf, file_b: PathBuf },
    /// Emit a generated group table
    Gen {
        kind: GenKind,
        /// Order for cyclic, exponent for boolean; ignored for klein
        size: Option<usize>,
    },
    /// Report group structure, involutions and rectangle existence
    Groupcheck { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Cyclic,
    Boolean,
    Klein,
}

struct AppError {
    code: u8,
    msg: String,
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::ExceedsBound { .. } => 3,
            _ => 2,
        };
        AppError {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError {
        code: 2,
        msg: msg.into(),
    }
}

struct Output {
    payload: Value,
    lines: Vec<String>,
    /// Canonical square text; in human mode this goes to stdout so the
    /// command pipes into another `latinsq` invocation.
    square: Option<String>,
}

fn load(path: &PathBuf) -> Result<(LatinSquare, Value), AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let square = LatinSquare::parse(&text)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let digest = Sha256::digest(square.to_text().as_bytes());
    let input = json!({
        "file": path.display().to_string(),
        "order": square.order(),
        "sha256": format!("{digest:x}"),
    });
    Ok((square, input))
}

fn rect_json(r: &Rectangle) -> Value {
    json!([r.x, r.y, r.z, r.u, r.a, r.b])
}

fn rect_human(r: &Rectangle) -> String {
    format!("{r} values ({},{})", r.a, r.b)
}

fn perm_json(p: &Permutation) -> Value {
    json!({ "cycles": p.to_string(), "images": p.images() })
}

fn triple_json(t: &IsotopyTriple) -> Value {
    json!({
        "alpha": perm_json(&t.alpha),
        "beta": perm_json(&t.beta),
        "gamma": perm_json(&t.gamma),
    })
}

fn triple_human(t: &IsotopyTriple) -> String {
    format!("alpha={} beta={} gamma={}", t.alpha, t.beta, t.gamma)
}

fn cmd_rects(file: &PathBuf, oracle: bool, cycles: bool) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    let rects = find_rectangles(&s);
    let mut payload = Map::new();
    payload.insert("inputs".into(), json!([input]));
    payload.insert("order".into(), json!(s.order()));
    payload.insert("count".into(), json!(rects.len()));
    payload.insert(
        "rectangles".into(),
        Value::Array(rects.iter().map(rect_json).collect()),
    );
    let mut lines = vec![format!("order: {}", s.order()), format!("rectangles: {}", rects.len())];
    if cycles {
        let mut products = Vec::new();
        for x in 1..=s.order() {
            for z in x + 1..=s.order() {
                let p = s
                    .left_translation(x)?
                    .compose(&s.left_translation(z)?.invert())?;
                let tc = two_cycles(&p);
                if tc.is_empty() {
                    continue;
                }
                lines.push(format!(
                    "L{x}L{z}^-1 = {p}  2-cycles: {}",
                    tc.iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
                products.push(json!({
                    "rows": [x, z],
                    "product": p.to_string(),
                    "two_cycles": tc,
                }));
            }
        }
        payload.insert("products".into(), Value::Array(products));
    }
    lines.extend(rects.iter().map(rect_human));
    if oracle {
        let brute = find_rectangles_oracle(&s);
        let agrees = brute == rects;
        payload.insert("oracle_count".into(), json!(brute.len()));
        payload.insert("oracle_agrees".into(), json!(agrees));
        lines.push(format!("oracle agreement: {agrees}"));
    }
    Ok(Output {
        payload: Value::Object(payload),
        lines,
        square: None,
    })
}

fn cmd_transform(file: &PathBuf, q: [usize; 4]) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    let r = Rectangle::new(&s, q[0], q[1], q[2], q[3])?;
    let out = latin_rect::rectangle_transform(&s, &r)?;
    let distance = s.distance(&out)?;
    let payload = json!({
        "inputs": [input],
        "order": s.order(),
        "rectangle": rect_json(&r),
        "distance": distance,
        "square": out.to_text(),
    });
    Ok(Output {
        payload,
        lines: vec![format!("rectangle: {}", rect_human(&r)), format!("distance: {distance}")],
        square: Some(out.to_text()),
    })
}

fn cmd_autotopisms(file: &PathBuf, bound: usize) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    let autos = autotopisms_bounded(&s, bound)?;
    let payload = json!({
        "inputs": [input],
        "order": s.order(),
        "group_order": autos.len(),
        "autotopisms": autos.iter().map(triple_json).collect::<Vec<_>>(),
    });
    let mut lines = vec![format!("autotopism group order: {}", autos.len())];
    lines.extend(autos.iter().map(triple_human));
    Ok(Output {
        payload,
        lines,
        square: None,
    })
}

fn cmd_classes(file: &PathBuf, bound: usize) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    let classes = equivalence_classes(&s, bound)?;
    let payload = json!({
        "inputs": [input],
        "order": s.order(),
        "class_count": classes.len(),
        "classes": classes
            .iter()
            .map(|c| c.iter().map(rect_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let mut lines = vec![format!("equivalence classes: {}", classes.len())];
    for (i, class) in classes.iter().enumerate() {
        lines.push(format!(
            "class {}: {}",
            i + 1,
            class.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ")
        ));
    }
    Ok(Output {
        payload,
        lines,
        square: None,
    })
}

fn cmd_isotopic(a: &PathBuf, b: &PathBuf, anti: bool, bound: usize) -> Result<Output, AppError> {
    let (sa, ia) = load(a)?;
    let (sb, ib) = load(b)?;
    let target = if anti { sb.parastrophe(5)? } else { sb.clone() };
    let verdict = are_isotopic(&sa, &target, bound)?;
    if let Some(w) = &verdict.witness {
        debug_assert!(is_isotopy(&sa, &target, w).unwrap());
    }
    let payload = json!({
        "inputs": [ia, ib],
        "anti": anti,
        "isotopic": verdict.isotopic(),
        "fast_rejected": verdict.fast_rejected,
        "witness": verdict.witness.as_ref().map(triple_json),
    });
    let relation = if anti { "antiisotopic" } else { "isotopic" };
    let mut lines = vec![format!("{relation}: {}", verdict.isotopic())];
    if verdict.fast_rejected {
        lines.push("fast reject: rectangle profiles differ".into());
    }
    if let Some(w) = &verdict.witness {
        lines.push(format!("witness: {}", triple_human(w)));
    }
    Ok(Output {
        payload,
        lines,
        square: None,
    })
}

fn cmd_parastrophe(file: &PathBuf, k: usize) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    if k > 5 {
        return Err(usage(format!("parastrophe index {k} not in 0..=5")));
    }
    let out = s.parastrophe(k)?;
    Ok(Output {
        payload: json!({
            "inputs": [input],
            "k": k,
            "order": out.order(),
            "square": out.to_text(),
        }),
        lines: vec![format!("parastrophe {k} of order {}", out.order())],
        square: Some(out.to_text()),
    })
}

fn cmd_distance(a: &PathBuf, b: &PathBuf) -> Result<Output, AppError> {
    let (sa, ia) = load(a)?;
    let (sb, ib) = load(b)?;
    let d = sa.distance(&sb)?;
    Ok(Output {
        payload: json!({ "inputs": [ia, ib], "distance": d }),
        lines: vec![format!("distance: {d}")],
        square: None,
    })
}

fn cmd_gen(kind: GenKind, size: Option<usize>) -> Result<Output, AppError> {
    let (name, square) = match kind {
        GenKind::Cyclic => {
            let n = size.ok_or_else(|| usage("gen cyclic needs an order"))?;
            if n == 0 {
                return Err(usage("order must be positive"));
            }
            ("cyclic", LatinSquare::cyclic_group(n))
        }
        GenKind::Boolean => {
            let k = size.ok_or_else(|| usage("gen boolean needs an exponent"))?;
            if k == 0 || k > 16 {
                return Err(usage("exponent must be in 1..=16"));
            }
            ("boolean", LatinSquare::boolean_group(k as u32))
        }
        GenKind::Klein => ("klein", LatinSquare::klein()),
    };
    Ok(Output {
        payload: json!({
            "inputs": [],
            "kind": name,
            "order": square.order(),
            "square": square.to_text(),
        }),
        lines: vec![format!("{name} table of order {}", square.order())],
        square: Some(square.to_text()),
    })
}

fn cmd_groupcheck(file: &PathBuf) -> Result<Output, AppError> {
    let (s, input) = load(file)?;
    let check = s.group_check();
    let mut payload = Map::new();
    payload.insert("inputs".into(), json!([input]));
    payload.insert("order".into(), json!(s.order()));
    payload.insert("group".into(), json!(check.is_group()));
    payload.insert("commutative".into(), json!(s.is_commutative()));
    let mut lines = vec![format!("group: {}", check.is_group())];
    match check {
        GroupCheck::Group { identity } => {
            let invs = s.involutions()?;
            let has_rect = group_has_rectangle(&s)?;
            lines.push(format!("identity: {identity}"));
            lines.push(format!(
                "involutions: {}",
                if invs.is_empty() {
                    "none".to_string()
                } else {
                    invs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                }
            ));
            lines.push(format!("has rectangle: {has_rect}"));
            payload.insert("identity".into(), json!(identity));
            payload.insert("involutions".into(), json!(invs));
            payload.insert("has_rectangle".into(), json!(has_rect));
        }
        GroupCheck::NoIdentity => {
            lines.push("no two-sided identity".into());
            payload.insert("failure".into(), json!("no identity"));
        }
        GroupCheck::NotAssociative { x, y, z } => {
            lines.push(format!("not associative at ({x},{y},{z})"));
            payload.insert("failure".into(), json!("not associative"));
            payload.insert("witness".into(), json!([x, y, z]));
        }
    }
    Ok(Output {
        payload: Value::Object(payload),
        lines,
        square: None,
    })
}

fn run(cli: &Cli) -> Result<Output, AppError> {
    match &cli.cmd {
        Cmd::Rects { file, oracle, cycles } => cmd_rects(file, *oracle, *cycles),
        Cmd::Transform { file, x, y, z, u } => cmd_transform(file, [*x, *y, *z, *u]),
        Cmd::Autotopisms { file, bound } => cmd_autotopisms(file, *bound),
        Cmd::Classes { file, bound } => cmd_classes(file, *bound),
        Cmd::Isotopic {
            file_a,
            file_b,
            anti,
            bound,
        } => cmd_isotopic(file_a, file_b, *anti, *bound),
        Cmd::Parastrophe { file, k } => cmd_parastrophe(file, *k),
        Cmd::Distance { file_a, file_b } => cmd_distance(file_a, file_b),
        Cmd::Gen { kind, size } => cmd_gen(*kind, *size),
        Cmd::Groupcheck { file } => cmd_groupcheck(file),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Rects { .. } => "rects",
        Cmd::Transform { .. } => "transform",
        Cmd::Autotopisms { .. } => "autotopisms",
        Cmd::Classes { .. } => "classes",
        Cmd::Isotopic { .. } => "isotopic",
        Cmd::Parastrophe { .. } => "parastrophe",
        Cmd::Distance { .. } => "distance",
        Cmd::Gen { .. } => "gen",
        Cmd::Groupcheck { .. } => "groupcheck",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut map = out.payload.as_object().cloned().unwrap_or_default();
                map.insert("command".into(), json!(command_name(&cli.cmd)));
                map.insert("status".into(), json!("ok"));
                println!("{}", serde_json::to_string_pretty(&Value::Object(map)).unwrap());
            } else if let Some(square) = &out.square {
                // square on stdout so commands compose; report on stderr
                print!("{square}");
                for line in &out.lines {
                    eprintln!("{line}");
                }
            } else {
                for line in &out.lines {
                    println!("{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let report = json!({
                    "command": command_name(&cli.cmd),
                    "status": "error",
                    "error": e.msg,
                });
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            }
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

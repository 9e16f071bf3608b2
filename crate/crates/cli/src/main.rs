//! `quandle`: check quandle axioms, count homomorphisms, validate monodromy
//! tuples, explore Hurwitz orbits and compute rack/quandle homology.
//!
//! Exit status: 0 on success or a valid verdict, 1 on an invalid verdict,
//! 2 on usage or structural errors.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use quandle_monodromy::catalog::{self, CatalogEntry};
use quandle_monodromy::group_quandles::PermutationAugmented;
use quandle_monodromy::homology::{homology_with, HomologyOptions, Theory};
use quandle_monodromy::io::{self, QuandleFile, TupleFile};
use quandle_monodromy::monodromy::{
    coloring_invariant, counting_invariant, Base, Mode, MonodromyTuple, OrbitOptions,
};
use quandle_monodromy::torus::{Slope, TorusDehnQuandle};
use quandle_monodromy::{
    check_axioms, check_axioms_on, enumerate_homs, subquandle_generated, Error, FiniteQuandle,
};

#[derive(Parser)]
#[command(name = "quandle", version, about = "Quandles, monodromy tuples and quandle homology")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms exhaustively (sampled for torus-dehn).
    Axioms {
        /// Catalog name or quandle JSON file.
        quandle: String,
        /// Seed for sampling slopes of torus-dehn.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest |x|, |y| of sampled slopes.
        #[arg(long, default_value_t = 8)]
        bound: i64,
        /// Number of sampled slopes.
        #[arg(long, default_value_t = 24)]
        samples: usize,
    },
    /// Count (or list) quandle homomorphisms SOURCE → TARGET.
    Homs {
        source: String,
        target: String,
        #[arg(long)]
        list: bool,
    },
    /// The subquandle generated by the given elements (labels or indices).
    Generate {
        quandle: String,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Breadth-first Hurwitz orbit of a tuple file.
    Orbit {
        tuple: String,
        #[command(flatten)]
        tuple_opts: TupleOpts,
        #[arg(long, default_value_t = 10_000)]
        max_orbit: usize,
        /// Identify cyclic rotations.
        #[arg(long)]
        cyclic: bool,
        /// Also apply simultaneous conjugation (cover tuples only).
        #[arg(long)]
        conjugate: bool,
    },
    /// Validate a monodromy tuple file.
    Validate {
        tuple: String,
        #[command(flatten)]
        tuple_opts: TupleOpts,
        /// Also require a connected cover.
        #[arg(long)]
        connected: bool,
    },
    /// Counting invariant of a tuple into a finite catalog quandle.
    Invariant {
        tuple: String,
        target: String,
        #[command(flatten)]
        tuple_opts: TupleOpts,
    },
    /// Rack or quandle homology groups H_1 … H_bound.
    Homology {
        quandle: String,
        #[arg(long, value_enum, default_value_t = TheoryArg::Quandle)]
        theory: TheoryArg,
        /// Compute only this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Largest degree allowed.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// List catalog names, or describe one.
    Catalog { name: Option<String> },
}

#[derive(Args)]
struct TupleOpts {
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum)]
    base: Option<BaseArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cover,
    Braid,
    Lefschetz,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Disk,
    Sphere,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Rack,
    Quandle,
}

impl TupleOpts {
    fn mode(&self) -> Option<Mode> {
        self.mode.map(|m| match m {
            ModeArg::Cover => Mode::Cover,
            ModeArg::Braid => Mode::Braid,
            ModeArg::Lefschetz => Mode::Lefschetz,
        })
    }

    fn base(&self) -> Option<Base> {
        self.base.map(|b| match b {
            BaseArg::Disk => Base::Disk,
            BaseArg::Sphere => Base::Sphere,
        })
    }
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

type CliResult = Result<Outcome, Error>;

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

/// A catalog name, or a JSON quandle file (inner augmentation).
fn load(source: &str) -> Result<CatalogEntry, Error> {
    if source.ends_with(".json") || Path::new(source).is_file() {
        let q = io::parse_quandle(&read(source)?)?;
        return Ok(CatalogEntry::Finite(PermutationAugmented::inner(q)));
    }
    catalog::resolve(source)
}

fn load_finite(source: &str) -> Result<FiniteQuandle, Error> {
    match load(source)? {
        CatalogEntry::Finite(p) => Ok(p.quandle),
        CatalogEntry::TorusDehn => Err(Error::InvalidParameter(format!("{source} is infinite"))),
    }
}

fn load_tuple(path: &str, opts: &TupleOpts) -> Result<MonodromyTuple, Error> {
    io::parse_tuple(&read(path)?, opts.mode(), opts.base())
}

fn axioms(source: &str, seed: u64, bound: i64, samples: usize) -> CliResult {
    match load(source)? {
        CatalogEntry::Finite(p) => {
            let report = check_axioms(&p.quandle);
            let text = if report.passed {
                format!("{source}: {} elements, all quandle axioms hold", p.quandle.len())
            } else {
                let lines: Vec<String> = report
                    .violations
                    .iter()
                    .map(|v| {
                        let w: Vec<String> = v.witness.iter().map(|&x| p.quandle.label(x)).collect();
                        format!("  {:?} fails at ({})", v.axiom, w.join(", "))
                    })
                    .collect();
                format!("{source}: axioms FAIL\n{}", lines.join("\n"))
            };
            let json = json!({ "quandle": source, "size": p.quandle.len(), "report": report });
            Ok(Outcome { text, json, ok: report.passed })
        }
        CatalogEntry::TorusDehn => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut sample = vec![Slope::Contractible];
            while sample.len() <= samples {
                let (x, y) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
                if let Ok(s) = Slope::from_ints(x, y) {
                    if !sample.contains(&s) {
                        sample.push(s);
                    }
                }
            }
            let report = check_axioms_on(&TorusDehnQuandle, &sample);
            let names: Vec<String> = sample.iter().map(Slope::to_string).collect();
            let verdict = if report.passed { "all quandle axioms hold" } else { "axioms FAIL" };
            let text = format!("{source}: seed {seed}, {} sampled slopes: {verdict}", sample.len());
            let json = json!({
                "quandle": source, "seed": seed, "sample": names,
                "passed": report.passed, "violations": report.violations.len(),
            });
            Ok(Outcome { text, json, ok: report.passed })
        }
    }
}

fn homs(source: &str, target: &str, list: bool) -> CliResult {
    let (s, t) = (load_finite(source)?, load_finite(target)?);
    let maps = enumerate_homs(&s, &t);
    let mut text = format!("{} homomorphisms {source} -> {target}", maps.len());
    if list {
        for h in &maps {
            let images: Vec<String> = h.map.iter().map(|&y| t.label(y)).collect();
            text.push_str(&format!("\n  [{}]", images.join(", ")));
        }
    }
    let mut json = json!({ "source": source, "target": target, "count": maps.len() });
    if list {
        json["maps"] = json!(maps.iter().map(|h| h.map.clone()).collect::<Vec<_>>());
    }
    Ok(Outcome::ok(text, json))
}

fn generate(source: &str, elements: &[String]) -> CliResult {
    let q = load_finite(source)?;
    let seed = elements
        .iter()
        .map(|e| q.find(e).ok_or_else(|| Error::InvalidParameter(format!("no element {e:?} in {source}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let set: Vec<usize> = subquandle_generated(&q, &seed)?.into_iter().collect();
    let labels: Vec<String> = set.iter().map(|&x| q.label(x)).collect();
    let text = format!("{} elements: {}", set.len(), labels.join(", "));
    Ok(Outcome::ok(text, json!({ "size": set.len(), "elements": set, "labels": labels })))
}

fn orbit(path: &str, opts: &TupleOpts, max_orbit: usize, cyclic: bool, conjugate: bool) -> CliResult {
    let t = load_tuple(path, opts)?;
    let o = t.orbit(&OrbitOptions { max_size: max_orbit, cyclic }, conjugate)?;
    let mut text = format!("orbit size {}{}", o.len(), if o.truncated { " (truncated)" } else { "" });
    for t in &o.tuples {
        text.push_str(&format!("\n  ({})", t.entry_strings().join(", ")));
    }
    let tuples: Vec<Value> = o
        .tuples
        .iter()
        .map(|t| serde_json::to_value(TupleFile::from_tuple(t)).expect("serializable"))
        .collect();
    let json = json!({ "size": o.len(), "truncated": o.truncated, "tuples": tuples });
    Ok(Outcome::ok(text, json))
}

fn validate(path: &str, opts: &TupleOpts, connected: bool) -> CliResult {
    let t = load_tuple(path, opts)?;
    let report = t.validate(connected)?;
    let text = format!("{} tuple of length {} over the {}: {}", t.mode(), t.len(), t.base(), report).trim_end().to_string();
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(Outcome { text, json, ok: report.valid })
}

fn invariant(path: &str, target: &str, opts: &TupleOpts) -> CliResult {
    let t = load_tuple(path, opts)?;
    let tgt = match load(target)? {
        CatalogEntry::Finite(p) => p,
        CatalogEntry::TorusDehn => return Err(Error::InvalidParameter("the target must be finite".into())),
    };
    let count = counting_invariant(&t, &tgt);
    let mut text = format!("counting invariant into {target}: {count}");
    let mut json = json!({ "target": target, "count": count });
    if let MonodromyTuple::Cover(c) = &t {
        let colorings = coloring_invariant(c, &tgt.quandle)?;
        text.push_str(&format!("\ncolorings of the generated subquandle: {colorings}"));
        json["colorings"] = json!(colorings);
    }
    Ok(Outcome::ok(text, json))
}

fn homology(source: &str, theory: TheoryArg, degree: Option<usize>, bound: usize) -> CliResult {
    let q = load_finite(source)?;
    let theory = match theory {
        TheoryArg::Rack => Theory::Rack,
        TheoryArg::Quandle => Theory::Quandle,
    };
    let opts = HomologyOptions { max_degree: bound, ..HomologyOptions::default() };
    let degrees: Vec<usize> = match degree {
        Some(n) => vec![n],
        None => (1..=bound).collect(),
    };
    let mut lines = Vec::new();
    let mut groups = Vec::new();
    for n in degrees {
        let h = homology_with(&q, n, theory, &opts)?;
        lines.push(format!("H_{n} = {h}"));
        groups.push(json!({ "degree": n, "group": h, "text": h.to_string() }));
    }
    let theory_name = match theory {
        Theory::Rack => "rack",
        Theory::Quandle => "quandle",
    };
    let json = json!({ "quandle": source, "theory": theory_name, "groups": groups });
    Ok(Outcome::ok(lines.join("\n"), json))
}

fn catalog_cmd(name: Option<&str>) -> CliResult {
    match name {
        None => {
            let mut rows = Vec::new();
            let mut text = String::new();
            for n in catalog::standard_names() {
                let size = catalog::resolve_finite(&n)?.quandle.len();
                text.push_str(&format!("{n:<36} {size}\n"));
                rows.push(json!({ "name": n, "size": size }));
            }
            text.push_str(&format!("{:<36} infinite", "torus-dehn"));
            rows.push(json!({ "name": "torus-dehn", "size": null }));
            Ok(Outcome::ok(text, json!({ "quandles": rows })))
        }
        Some(n) => match load(n)? {
            CatalogEntry::Finite(p) => {
                let q = &p.quandle;
                let mut text = format!("{n}: {} elements", q.len());
                let width = (0..q.len()).map(|x| q.label(x).chars().count()).max().unwrap_or(0);
                for x in 0..q.len() {
                    let row: Vec<String> = (0..q.len()).map(|y| q.op(x, y).to_string()).collect();
                    text.push_str(&format!("\n  {:>width$} | {}", q.label(x), row.join(" ")));
                }
                let json = serde_json::to_value(QuandleFile::from_quandle(q)).expect("serializable");
                Ok(Outcome::ok(text, json))
            }
            CatalogEntry::TorusDehn => Ok(Outcome::ok(
                format!("{n}: slopes y/x and I on the torus (infinite)"),
                json!({ "name": n, "size": null }),
            )),
        },
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Axioms { quandle, seed, bound, samples } => axioms(quandle, *seed, *bound, *samples),
        Command::Homs { source, target, list } => homs(source, target, *list),
        Command::Generate { quandle, elements } => generate(quandle, elements),
        Command::Orbit { tuple, tuple_opts, max_orbit, cyclic, conjugate } => {
            orbit(tuple, tuple_opts, *max_orbit, *cyclic, *conjugate)
        }
        Command::Validate { tuple, tuple_opts, connected } => validate(tuple, tuple_opts, *connected),
        Command::Invariant { tuple, target, tuple_opts } => invariant(tuple, target, tuple_opts),
        Command::Homology { quandle, theory, degree, bound } => homology(quandle, *theory, *degree, *bound),
        Command::Catalog { name } => catalog_cmd(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `nearring`: build, validate, classify and search finite sandwich
//! centralizer near-rings from JSON descriptions.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use nearring_cli::docs::{NearRingDump, RecipeDoc, SchemeDoc, TransformationDoc};
use nearring_cli::examples;
use nearring_cli::exit_code_for;
use nearring_cli::report::{verdict_json, verdict_summary};
use nearring_cli::sweep::{classify_batch, sweep_schemes};

use nearring_core::nearring::NearRing;
use nearring_core::ngroup::NGroupAction;
use nearring_core::primitivity::{cross_check, embed};
use nearring_core::Error;

#[derive(Parser)]
#[command(
    name = "nearring",
    about = "finite sandwich centralizer near-rings: construction, classification, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest group order the search enumerates.
    #[arg(long, global = true, default_value_t = 12)]
    max_group_order: usize,
    /// Largest near-ring element count accepted anywhere.
    #[arg(long, global = true, default_value_t = 4096)]
    max_elements: usize,
    /// Machine-readable JSON output instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Classify search items one by one in deterministic order.
    #[arg(long, global = true)]
    sequential: bool,
    /// RNG seed for sampled (non-exhaustive) searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the near-ring axioms of an explicit element set or dump.
    Axioms { file: PathBuf },
    /// Build a sandwich function phi from a recipe document.
    BuildPhi { file: PathBuf },
    /// Enumerate the near-ring of a scheme and dump its tables.
    BuildNearring { file: PathBuf },
    /// Decide primitivity of a scheme by both routes.
    Classify { file: PathBuf },
    /// Rewrite a faithful type-1 transformation near-ring as a scheme.
    Embed { file: PathBuf },
    /// Census of all schemes within the bounds, one JSON line each.
    Search {
        /// Classify only a random sample of this many schemes.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Re-verify the four worked examples.
    PaperExamples,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {path:?}: {e}"))
}

fn fail(msg: String, code: i32) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code as u8)
}

fn core_fail(e: Error) -> ExitCode {
    let code = exit_code_for(&e);
    fail(e.to_string(), code)
}

fn cmd_axioms(cli: &Cli, file: &PathBuf) -> ExitCode {
    let value: serde_json::Value = match read_json(file) {
        Ok(v) => v,
        Err(msg) => return fail(msg, 1),
    };
    let nr: NearRing = if value.get("add").is_some() {
        let group = match value.get("group") {
            Some(g) => g.clone(),
            None => return fail("dump document needs a \"group\" field".into(), 1),
        };
        let parsed = (|| -> Result<NearRing, String> {
            let group: nearring_cli::docs::GroupDoc =
                serde_json::from_value(group).map_err(|e| e.to_string())?;
            let dump: NearRingDump =
                serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
            let g = group.to_core().map_err(|e| e.to_string())?;
            dump.to_core(g).map_err(|e| e.to_string())
        })();
        match parsed {
            Ok(nr) => nr,
            Err(msg) => return fail(msg, 1),
        }
    } else {
        let doc: TransformationDoc = match serde_json::from_value(value) {
            Ok(d) => d,
            Err(e) => return fail(e.to_string(), 1),
        };
        match doc.to_core() {
            Ok(nr) => nr,
            Err(e) => return core_fail(e),
        }
    };
    let report = match nr.verify_axioms() {
        Ok(r) => r,
        Err(e) => return core_fail(e),
    };
    if cli.json {
        let failures: Vec<_> = report
            .failures
            .iter()
            .map(|w| json!({ "law": w.law, "triple": [w.triple.0, w.triple.1, w.triple.2] }))
            .collect();
        println!(
            "{}",
            json!({ "pass": report.pass(), "triples_checked": report.triples_checked,
                    "failures": failures })
        );
    } else if report.pass() {
        println!(
            "all near-ring axioms hold ({} triples checked, |N|={})",
            report.triples_checked,
            nr.len()
        );
    } else {
        for w in &report.failures {
            println!("violated: {} at {:?}", w.law, w.triple);
        }
    }
    if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn cmd_build_phi(cli: &Cli, file: &PathBuf) -> ExitCode {
    let doc: RecipeDoc = match read_json(file) {
        Ok(d) => d,
        Err(msg) => return fail(msg, 1),
    };
    let scheme = match doc.build() {
        Ok(s) => s,
        Err(e) => return core_fail(e),
    };
    let out = SchemeDoc::from_core(&scheme);
    if cli.json {
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("phi = {:?}", scheme.phi());
        println!("X = {:?}", scheme.x().as_slice());
        println!("Gamma_0 = {:?}", scheme.gamma0().as_slice());
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    ExitCode::SUCCESS
}

fn cmd_build_nearring(cli: &Cli, file: &PathBuf) -> ExitCode {
    let doc: SchemeDoc = match read_json(file) {
        Ok(d) => d,
        Err(msg) => return fail(msg, 1),
    };
    let scheme = match doc.to_core() {
        Ok(s) => s,
        Err(e) => return core_fail(e),
    };
    let mut nr = match NearRing::enumerate_centralizer(&scheme, cli.max_elements) {
        Ok(nr) => nr,
        Err(e) => return core_fail(e),
    };
    if let Err(e) = nr.materialize_tables() {
        return core_fail(e);
    }
    let dump = match NearRingDump::from_core(&nr) {
        Ok(d) => d,
        Err(e) => return core_fail(e),
    };
    // carry the group along so the dump can be fed straight back to `axioms`
    let mut out = serde_json::to_value(&dump).expect("serializable");
    out.as_object_mut().expect("object").insert(
        "group".into(),
        serde_json::to_value(nearring_cli::docs::GroupDoc::from_core(nr.gamma()))
            .expect("serializable"),
    );
    if cli.json {
        println!("{out}");
    } else {
        println!("|N| = {} on domain {:?}", nr.len(), nr.domain());
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    ExitCode::SUCCESS
}

fn cmd_classify(cli: &Cli, file: &PathBuf) -> ExitCode {
    let doc: SchemeDoc = match read_json(file) {
        Ok(d) => d,
        Err(msg) => return fail(msg, 1),
    };
    let scheme = match doc.to_core() {
        Ok(s) => s,
        Err(e) => return core_fail(e),
    };
    let mut nr = match NearRing::enumerate_centralizer(&scheme, cli.max_elements) {
        Ok(nr) => nr,
        Err(e) => return core_fail(e),
    };
    // tables enable the identity scan in the human summary
    let _ = nr.materialize_tables();
    let verdict = match cross_check(&scheme, cli.max_elements) {
        Ok(v) => v,
        Err(e) => return core_fail(e),
    };
    if cli.json {
        println!("{}", verdict_json(&scheme, &verdict, nr.len()));
    } else {
        println!("{}", verdict_summary(&verdict, &nr));
    }
    ExitCode::SUCCESS
}

fn cmd_embed(cli: &Cli, file: &PathBuf) -> ExitCode {
    let doc: TransformationDoc = match read_json(file) {
        Ok(d) => d,
        Err(msg) => return fail(msg, 1),
    };
    let result = doc
        .to_core()
        .and_then(|nr| NGroupAction::from_transformation(&nr))
        .and_then(|action| embed(&action, cli.max_elements));
    let embedding = match result {
        Ok(e) => e,
        Err(e) => return core_fail(e),
    };
    let out = json!({
        "scheme": SchemeDoc::from_core(&embedding.scheme),
        "pairing": embedding.pairing,
    });
    if cli.json {
        println!("{out}");
    } else {
        println!("recovered phi = {:?}", embedding.scheme.phi());
        println!("|N| = {}", embedding.target.len());
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    }
    ExitCode::SUCCESS
}

fn cmd_search(cli: &Cli, sample: Option<usize>) -> ExitCode {
    let mut items = match sweep_schemes(cli.max_group_order, cli.max_elements) {
        Ok(items) => items,
        Err(e) => return core_fail(e),
    };
    if let Some(count) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0));
        items.shuffle(&mut rng);
        items.truncate(count);
    }
    let (records, notices) = match classify_batch(&items, cli.max_elements, cli.sequential) {
        Ok(r) => r,
        Err(e) => return core_fail(e),
    };
    for notice in &notices {
        eprintln!("notice: {notice}");
    }
    // stop quietly when the reader closes the pipe (e.g. | head)
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for record in &records {
        if writeln!(out, "{}", record.to_json()).is_err() {
            break;
        }
    }
    ExitCode::SUCCESS
}

fn cmd_paper_examples(cli: &Cli) -> ExitCode {
    let claims = match examples::run_all(cli.max_elements) {
        Ok(c) => c,
        Err(e) => return core_fail(e),
    };
    let all_pass = claims.iter().all(|c| c.pass);
    if cli.json {
        let list: Vec<_> = claims.iter().map(|c| c.to_json()).collect();
        println!("{}", json!({ "pass": all_pass, "claims": list }));
    } else {
        for c in &claims {
            println!("{}: {} ({})", c.name, if c.pass { "pass" } else { "FAIL" }, c.detail);
        }
    }
    if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Axioms { file } => cmd_axioms(&cli, file),
        Command::BuildPhi { file } => cmd_build_phi(&cli, file),
        Command::BuildNearring { file } => cmd_build_nearring(&cli, file),
        Command::Classify { file } => cmd_classify(&cli, file),
        Command::Embed { file } => cmd_embed(&cli, file),
        Command::Search { sample } => cmd_search(&cli, *sample),
        Command::PaperExamples => cmd_paper_examples(&cli),
    }
}

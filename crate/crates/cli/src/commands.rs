//! Subcommand drivers.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use antinef::cycles::GSource;
use antinef::zariski::zariski_decompose;
use antinef::{fundamental_cycle, validate_config, ValidatedConfig};

use crate::error::CliError;
use crate::report::{self, to_json};
use crate::schema::{integer_divisor, ConfigFile};
use crate::Format;

pub fn load_config(path: &Path) -> Result<(ConfigFile, ValidatedConfig), CliError> {
    let text = fs::read_to_string(path)?;
    let file = ConfigFile::parse(&text)?;
    let cfg = validate_config(file.to_resolution())?;
    Ok((file, cfg))
}

/// Where G comes from: an explicit `--g <path>` wins, then a `G` embedded in
/// the configuration, then the fundamental cycle.
fn g_source(
    file: &ConfigFile,
    cfg: &ValidatedConfig,
    g_flag: &str,
) -> Result<GSource, CliError> {
    if g_flag == "fund" {
        return Ok(match file.embedded_g(cfg)? {
            Some(g) => GSource::UserSupplied(g),
            None => GSource::FromFundamentalCycle,
        });
    }
    let text = fs::read_to_string(g_flag)?;
    let map: BTreeMap<String, i64> = serde_json::from_str(&text)?;
    Ok(GSource::UserSupplied(integer_divisor(cfg, &map)?))
}

pub fn cmd_check(path: &Path, format: Format) -> Result<(), CliError> {
    let (_, cfg) = load_config(path)?;
    let report = report::check_report(&cfg);
    match format {
        Format::Json => print!("{}", to_json(&report)),
        Format::Text => print!("{}", report::render_check(&report)),
    }
    Ok(())
}

pub fn cmd_decompose(path: &Path, oracle: bool, format: Format) -> Result<(), CliError> {
    let (file, cfg) = load_config(path)?;
    let d = file.divisor(&cfg)?;
    let dec = zariski_decompose(&cfg, &d)?;
    let agreement = report::oracle_agreement(&cfg, &d, &dec, oracle)?;
    let out = report::decompose_report(&cfg, &d, &dec, agreement);
    match format {
        Format::Json => print!("{}", to_json(&out)),
        Format::Text => print!("{}", report::render_decompose(&out)),
    }
    Ok(())
}

pub fn cmd_classify(path: &Path, g_flag: &str, format: Format) -> Result<(), CliError> {
    let (file, cfg) = load_config(path)?;
    let d = file.divisor(&cfg)?;
    let source = g_source(&file, &cfg, g_flag)?;
    let out = report::classification_report(&cfg, &d, &source, None)?;
    match format {
        Format::Json => print!("{}", to_json(&out)),
        Format::Text => print!("{}", report::render_classification(&out)),
    }
    Ok(())
}

pub fn cmd_fundcycle(path: &Path, format: Format) -> Result<(), CliError> {
    let (_, cfg) = load_config(path)?;
    let fc = fundamental_cycle(&cfg)?;
    let out = report::fundcycle_report(&cfg, &fc)?;
    match format {
        Format::Json => print!("{}", to_json(&out)),
        Format::Text => print!("{}", report::render_fundcycle(&out)),
    }
    Ok(())
}

fn report_path(input: &Path) -> PathBuf {
    input.with_extension("report.json")
}

fn is_batch_input(path: &Path) -> bool {
    let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
        return false;
    };
    name.ends_with(".json") && !name.ends_with(".report.json")
}

fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn process_batch_file(path: &Path) -> Result<PathBuf, CliError> {
    let (file, cfg) = load_config(path)?;
    let d = file.divisor(&cfg)?;
    let source = match file.embedded_g(&cfg)? {
        Some(g) => GSource::UserSupplied(g),
        None => GSource::FromFundamentalCycle,
    };
    let out = report::classification_report(&cfg, &d, &source, None)?;
    let target = report_path(path);
    write_atomically(&target, &to_json(&out))?;
    Ok(target)
}

/// Process every `*.json` in a directory (reports themselves are skipped),
/// writing one `*.report.json` per input. Files are independent, so they may
/// be handled concurrently; outputs and the summary are deterministic
/// regardless of the job count.
pub fn cmd_batch(dir: &Path, jobs: usize) -> Result<i32, CliError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|p| p.is_file() && is_batch_input(p))
        .collect();
    paths.sort();

    let results: Mutex<Vec<Option<Result<PathBuf, CliError>>>> =
        Mutex::new(vec![None; paths.len()].into_iter().map(|_: Option<()>| None).collect());
    let next = AtomicUsize::new(0);
    let workers = jobs.max(1).min(paths.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= paths.len() {
                    break;
                }
                let outcome = process_batch_file(&paths[i]);
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });

    let results = results.into_inner().unwrap();
    let mut failed = 0usize;
    let mut exit = 0i32;
    for (path, outcome) in paths.iter().zip(results) {
        let name = path.file_name().unwrap_or_default().to_string_lossy();
        match outcome.expect("every input was processed") {
            Ok(target) => {
                let target = target.file_name().unwrap_or_default().to_string_lossy().into_owned();
                println!("ok   {name} -> {target}");
            }
            Err(e) => {
                println!("FAIL {name}: {e}");
                failed += 1;
                exit = exit.max(e.exit_code());
            }
        }
    }
    println!(
        "{} processed, {} ok, {} failed",
        paths.len(),
        paths.len() - failed,
        failed
    );
    Ok(exit)
}

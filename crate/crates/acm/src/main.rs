//! `acm`: batch command-line front end for assurance case models.
//!
//! Exit codes: 0 success, 1 validation findings (errors for `validate`,
//! instantiation findings, unsupported root claims for `evaluate`),
//! 2 usage/IO errors, 3 transformation or instantiation failures.

use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sacm::{
    fmt as acmfmt, BindingTable, Diagnostic, ModelDocument, Notation, ReportFormat, ReportOptions,
    Severity,
};

const EXIT_OK: u8 = 0;
const EXIT_FINDINGS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TRANSFORM: u8 = 3;

#[derive(Parser)]
#[command(
    name = "acm",
    version,
    about = "Assurance case model toolkit: validate, transform, instantiate, evaluate, report"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum NotationArg {
    Sacm,
    Gsn,
    Cae,
}

impl From<NotationArg> for Notation {
    fn from(value: NotationArg) -> Notation {
        match value {
            NotationArg::Sacm => Notation::Sacm,
            NotationArg::Gsn => Notation::Gsn,
            NotationArg::Cae => Notation::Cae,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Md,
    Txt,
}

#[derive(Subcommand)]
enum Command {
    /// Check well-formedness and print diagnostics.
    Validate(ValidateArgs),
    /// Transform a GSN or CAE document into the core notation.
    Transform(TransformArgs),
    /// Instantiate a pattern against a binding table.
    Instantiate(InstantiateArgs),
    /// Render a human-readable report.
    Report(ReportArgs),
    /// Propagate claim statuses from evidence validity.
    Evaluate(EvaluateArgs),
}

#[derive(Args)]
struct ValidateArgs {
    /// Model files (.acm.json); several files are checked independently.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    /// Expected notation; fails when the file declares another one.
    #[arg(long)]
    notation: Option<NotationArg>,
    /// Diagnostics output format.
    #[arg(long, value_enum, default_value = "text")]
    format: DiagFormat,
}

#[derive(Args)]
struct TransformArgs {
    path: PathBuf,
    /// Source notation of the input file.
    #[arg(long, value_enum)]
    from: NotationArg,
    /// Output file; a trace sidecar is written next to it.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct InstantiateArgs {
    pattern: PathBuf,
    /// Binding table JSON (roles and connector decisions).
    #[arg(long)]
    bindings: PathBuf,
    /// Output file for the instantiated model.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    path: PathBuf,
    /// Language tag used to localize strings.
    #[arg(long, default_value = "en")]
    lang: String,
    #[arg(long, value_enum, default_value = "md")]
    format: ReportFormatArg,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Append the diagnostics appendix.
    #[arg(long)]
    diagnostics: bool,
    /// Leave out the terminology glossary.
    #[arg(long)]
    no_terminology: bool,
}

#[derive(Args)]
struct EvaluateArgs {
    path: PathBuf,
    /// Evidence validity JSON: {"<artifact reference gid>": true|false}.
    #[arg(long)]
    evidence: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate(args) => cmd_validate(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Instantiate(args) => cmd_instantiate(args),
        Command::Report(args) => cmd_report(args),
        Command::Evaluate(args) => cmd_evaluate(args),
    };
    ExitCode::from(code)
}

fn fail(code: u8, message: impl std::fmt::Display) -> u8 {
    eprintln!("acm: error: {message}");
    code
}

fn load_model(path: &Path) -> Result<ModelDocument, u8> {
    acmfmt::load_file(path).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn check_notation(doc: &ModelDocument, expected: Option<NotationArg>, path: &Path) -> Result<(), u8> {
    if let Some(expected) = expected {
        let expected: Notation = expected.into();
        if doc.notation() != expected {
            return Err(fail(
                EXIT_USAGE,
                format!(
                    "{}: document notation is {}, expected {expected}",
                    path.display(),
                    doc.notation()
                ),
            ));
        }
    }
    Ok(())
}

/// Print a diagnostics listing, coloring severities when stdout is a
/// terminal and ACM_NO_COLOR is unset.
fn print_diagnostics(diags: &[Diagnostic], format: DiagFormat) {
    match format {
        DiagFormat::Json => print!("{}", sacm::diagnostics_to_json(diags)),
        DiagFormat::Text => {
            let color = std::io::stdout().is_terminal() && std::env::var_os("ACM_NO_COLOR").is_none();
            let mut stdout = std::io::stdout().lock();
            for d in diags {
                let line = d.to_line();
                if color {
                    let code = match d.severity {
                        Severity::Error => "31",
                        Severity::Warning => "33",
                    };
                    let _ = writeln!(stdout, "\x1b[{code}m{line}\x1b[0m");
                } else {
                    let _ = writeln!(stdout, "{line}");
                }
            }
        }
    }
}

fn cmd_validate(args: ValidateArgs) -> u8 {
    // Documents are independent; check them in parallel and report in
    // input order.
    let results: Vec<Result<(ModelDocument, Vec<Diagnostic>), u8>> = std::thread::scope(|scope| {
        let handles: Vec<_> = args
            .paths
            .iter()
            .map(|path| {
                scope.spawn(move || {
                    let doc = load_model(path)?;
                    check_notation(&doc, args.notation, path)?;
                    let diags = sacm::check(&doc);
                    Ok((doc, diags))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("no panics")).collect()
    });

    let mut worst = EXIT_OK;
    for (path, result) in args.paths.iter().zip(results) {
        match result {
            Err(code) => worst = worst.max(code),
            Ok((_, diags)) => {
                if args.paths.len() > 1 {
                    println!("{}:", path.display());
                }
                print_diagnostics(&diags, args.format);
                if !sacm::is_error_free(&diags) {
                    worst = worst.max(EXIT_FINDINGS);
                }
            }
        }
    }
    worst
}

fn cmd_transform(args: TransformArgs) -> u8 {
    let doc = match load_model(&args.path) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let from: Notation = args.from.into();
    if doc.notation() != from {
        return fail(
            EXIT_USAGE,
            format!(
                "{}: document notation is {}, --from says {from}",
                args.path.display(),
                doc.notation()
            ),
        );
    }
    let output = match sacm::transform_document(&doc) {
        Ok(output) => output,
        Err(sacm::Error::PreconditionFailed(diags)) => {
            print_diagnostics(&diags, DiagFormat::Text);
            return fail(EXIT_TRANSFORM, "input document has validation errors");
        }
        Err(e) => return fail(EXIT_TRANSFORM, e),
    };
    for warning in &output.warnings {
        eprintln!("acm: warning: {warning}");
    }
    if let Err(e) = acmfmt::save_file(&output.document, &args.out) {
        return fail(EXIT_USAGE, format!("{}: {e}", args.out.display()));
    }
    let trace_path = sidecar_path(&args.out);
    if let Err(e) = std::fs::write(&trace_path, sacm::trace_to_json(&output.trace)) {
        return fail(EXIT_USAGE, format!("{}: {e}", trace_path.display()));
    }
    println!(
        "transformed {} elements into {} ({} trace links)",
        doc.len(),
        output.document.len(),
        output.trace.len()
    );
    EXIT_OK
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".trace.json");
    out.with_file_name(name)
}

fn cmd_instantiate(args: InstantiateArgs) -> u8 {
    let doc = match load_model(&args.pattern) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let bindings_text = match std::fs::read_to_string(&args.bindings) {
        Ok(text) => text,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", args.bindings.display())),
    };
    let table = match BindingTable::from_json(&bindings_text) {
        Ok(table) => table,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", args.bindings.display())),
    };
    // The pattern is the first abstract top-level package.
    let pattern = match doc.roots().find(|e| e.is_abstract) {
        Some(root) => root.gid.clone(),
        None => {
            return fail(
                EXIT_TRANSFORM,
                "no abstract top-level package found to instantiate",
            )
        }
    };
    let result = match sacm::instantiate(&doc, &pattern, &table) {
        Ok(result) => result,
        Err(e) => return fail(EXIT_TRANSFORM, e),
    };
    if let Err(e) = acmfmt::save_file(&result.document, &args.out) {
        return fail(EXIT_USAGE, format!("{}: {e}", args.out.display()));
    }
    let findings = sacm::verify_instantiation(&result.document, &result.package, &pattern);
    print_diagnostics(&findings, DiagFormat::Text);
    println!(
        "instantiated '{pattern}' as '{}' ({} elements copied)",
        result.package,
        result.trace.len()
    );
    if findings.is_empty() {
        EXIT_OK
    } else {
        EXIT_FINDINGS
    }
}

fn cmd_report(args: ReportArgs) -> u8 {
    let doc = match load_model(&args.path) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let options = ReportOptions {
        lang: args.lang,
        format: match args.format {
            ReportFormatArg::Md => ReportFormat::Markdown,
            ReportFormatArg::Txt => ReportFormat::Text,
        },
        include_diagnostics: args.diagnostics,
        include_terminology: !args.no_terminology,
    };
    let bytes = sacm::render(&doc, &options);
    match args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, bytes) {
                return fail(EXIT_USAGE, format!("{}: {e}", path.display()));
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(&bytes).is_err() {
                return EXIT_USAGE;
            }
        }
    }
    EXIT_OK
}

fn cmd_evaluate(args: EvaluateArgs) -> u8 {
    let doc = match load_model(&args.path) {
        Ok(doc) => doc,
        Err(code) => return code,
    };
    let evidence_text = match std::fs::read_to_string(&args.evidence) {
        Ok(text) => text,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", args.evidence.display())),
    };
    let evidence = match sacm::parse_evidence_json(&evidence_text) {
        Ok(map) => map,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", args.evidence.display())),
    };
    let evaluation = match sacm::evaluate(&doc, &evidence) {
        Ok(evaluation) => evaluation,
        Err(sacm::Error::PreconditionFailed(diags)) => {
            print_diagnostics(&diags, DiagFormat::Text);
            return fail(EXIT_FINDINGS, "document has validation errors");
        }
        Err(e) => return fail(EXIT_USAGE, e),
    };
    for warning in &evaluation.warnings {
        eprintln!("acm: warning: {warning}");
    }
    for (gid, status) in &evaluation.statuses {
        println!("{gid} {status}");
    }
    let roots = sacm::root_claims(&doc);
    let all_roots_hold = roots
        .iter()
        .all(|gid| evaluation.statuses.get(gid).map(|s| s.holds()).unwrap_or(false));
    if all_roots_hold {
        EXIT_OK
    } else {
        EXIT_FINDINGS
    }
}

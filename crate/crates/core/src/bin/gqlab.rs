use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gqlab::atlas::{Atlas, MatrixClass};
use gqlab::checks::{render_json, render_text, run_suite};
use gqlab::export::{parse_form, write_export, Format, What};
use gqlab::gf2::SymMat3;
use gqlab::projective::alpha;
use gqlab::quadrangle::{build_gq_s, collinear_partners};
use gqlab::GqError;

#[derive(Parser)]
#[command(name = "gqlab", version, about = "Build and verify GQ(2,4) on symmetric 3x3 binary matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite.
    Verify {
        /// Only run checks whose id starts with this prefix.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Describe a symmetric matrix given as six bits `abcdef`.
    Classify { bits6: String },
    /// Write a model or table to a file.
    Export {
        #[arg(long, value_parser = ["atlas", "incidence", "quadric", "planes", "isomorphism"])]
        what: String,
        #[arg(long, value_parser = ["json", "dot", "csv"])]
        format: String,
        #[arg(long)]
        out: PathBuf,
        /// Quadratic form for `--what quadric`: q0, q or qM:<label>.
        #[arg(long)]
        form: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Verify { check, format } => verify(check.as_deref(), format),
        Command::Classify { bits6 } => classify(&bits6),
        Command::Export { what, format, out, form } => export(&what, &format, &out, form.as_deref()),
    }
}

fn fail(e: &GqError, code: u8) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn verify(check: Option<&str>, format: ReportFormat) -> ExitCode {
    let result = match run_suite(check) {
        Ok(r) => r,
        Err(e) => return fail(&e, USAGE),
    };
    match format {
        ReportFormat::Text => print!("{}", render_text(&result)),
        ReportFormat::Json => println!("{}", render_json(&result)),
    }
    if result.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CHECK_FAILED)
    }
}

fn classify(bits: &str) -> ExitCode {
    let x: SymMat3 = match bits.parse() {
        Ok(x) => x,
        Err(e) => return fail(&e, USAGE),
    };
    let atlas = Atlas::global();
    println!("matrix:  {x} ({})", x.to_mat3());
    println!("det:     {}", x.det());
    println!("alpha:   {}", alpha(x));
    match atlas.label_of(x) {
        Some(l) if l.class != MatrixClass::Identity => {
            println!("label:   {l}");
            println!("class:   {}", l.class);
            println!("eigenspace dim: {}", x.to_mat3().eigenspace_one_dim());
            let partners = collinear_partners(&build_gq_s(), &l.to_string()).unwrap_or_default();
            let partners: Vec<String> = partners.into_iter().filter(|p| *p != l.to_string()).collect();
            println!("collinear ({}): {}", partners.len(), partners.join(" "));
            ExitCode::SUCCESS
        }
        Some(_) => {
            println!("label:   I");
            println!("class:   Identity");
            fail(&GqError::NotInS(x.to_string(), 1), CHECK_FAILED)
        }
        None => fail(&GqError::NotInS(x.to_string(), x.det().as_u8()), CHECK_FAILED),
    }
}

fn export(what: &str, format: &str, out: &std::path::Path, form: Option<&str>) -> ExitCode {
    let parsed = (|| -> gqlab::Result<_> {
        let what: What = what.parse()?;
        let format: Format = format.parse()?;
        let form = match form {
            Some(f) if what == What::Quadric => Some(parse_form(f)?),
            Some(_) => return Err(GqError::Parse("--form only applies to --what quadric".into())),
            None => None,
        };
        Ok((what, format, form))
    })();
    let (what, format, form) = match parsed {
        Ok(p) => p,
        Err(e) => return fail(&e, USAGE),
    };
    match write_export(what, format, form, out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ GqError::UnsupportedFormat { .. }) => fail(&e, USAGE),
        Err(e) => fail(&e, CHECK_FAILED),
    }
}

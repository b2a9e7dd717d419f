//! Command-line front end. Human-readable output by default; `--json` and
//! `--csv` switch to machine output.

use std::io::Write;

use clap::{Parser, Subcommand};

use crate::combinatorics::{comp_of_set, SubsetLabel};
use crate::error::{Error, Result};
use crate::json::{self, nbasis_with, parse_element, Element};
use crate::nsym::{structconst, NBasis, Params};
use crate::qsym::QBasis;
use crate::scalars::parse_scalar;
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "hopf-scf",
    version,
    about = "Exact computations in QSym, NSym and superclass functions of (C_nu)^(n-1)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a basis element in another basis of the same algebra.
    Expand {
        /// Element literal `<basis>:<composition>`, e.g. `B:(1,2)` or `Pi:(2,1)`.
        #[arg(long)]
        elem: String,
        /// Target basis tag: M, L, E, Pi (QSym) or H, Lambda, R, Estar, B, Bhat (NSym).
        #[arg(long)]
        to: String,
        #[command(flatten)]
        opts: ElemOpts,
    },
    /// Multiply two basis elements of the same algebra.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Basis of the result; defaults to the basis of `--left`.
        #[arg(long)]
        to: Option<String>,
        #[command(flatten)]
        opts: ElemOpts,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[arg(long)]
        elem: String,
        /// Basis of both tensor factors; defaults to the basis of `--elem`.
        #[arg(long)]
        to: Option<String>,
        #[command(flatten)]
        opts: ElemOpts,
    },
    /// Table of the structure constants C^K_{I,J}(q,t) of the coproduct of B(q,t)_comp(K).
    Structconst {
        /// The degree k.
        #[arg(long = "k")]
        degree: u32,
        /// The subset K of [k-1], e.g. `{1,2}`, `1,2` or `{}`.
        #[arg(long = "K")]
        subset: String,
        /// Only rows with this left degree m.
        #[arg(long)]
        filter: Option<u32>,
        /// Emit CSV with a header row.
        #[arg(long)]
        csv: bool,
    },
    /// Run a verification suite.
    Verify {
        /// One of hopf-axioms, diagrams, dualities, specializations, omega, overlap, group-axioms, integrality.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Comma-separated list of nu values.
        #[arg(long, default_value = "2,3", value_delimiter = ',')]
        nu: Vec<u32>,
        /// Emit only the JSON summary.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
pub struct ElemOpts {
    /// The parameter nu of Pi(nu).
    #[arg(long)]
    pub nu: Option<u32>,
    /// Numeric or symbolic parameters `a,b` for B and Bhat (default `q,t`).
    #[arg(long)]
    pub params: Option<String>,
    /// Emit JSON.
    #[arg(long)]
    pub json: bool,
}

impl ElemOpts {
    fn params(&self) -> Result<Option<Params>> {
        let Some(src) = &self.params else {
            return Ok(None);
        };
        let (a, b) =
            src.split_once(',').ok_or_else(|| Error::Parse(format!("`{src}`: expected two parameters `a,b`")))?;
        Ok(Some(Params::new(parse_scalar(a)?, parse_scalar(b)?)))
    }
}

/// Whether an error stems from the user's input, which exits with status 2.
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::UnknownBasis(_)
            | Error::MissingNu(_)
            | Error::NotASubset { .. }
            | Error::SubsetBound { .. }
            | Error::InvalidArgument(_)
            | Error::InvalidGroup(_)
    )
}

/// Parse `{1,2}`, `1,2`, `{}` or the empty string as a subset of `[ambient-1]`.
pub fn parse_subset(src: &str, ambient: u32) -> Result<SubsetLabel> {
    let inner = src.trim().trim_start_matches('{').trim_end_matches('}').trim();
    let elems = if inner.is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("`{p}`: {e}"))))
            .collect::<Result<Vec<_>>>()?
    };
    SubsetLabel::from_elems(ambient, elems)
}

fn target_element(x: &Element, tag: &str, opts: &ElemOpts) -> Result<Element> {
    match x {
        Element::Q(q) => Ok(Element::Q(q.convert(QBasis::from_tag(tag, opts.nu)?)?)),
        Element::N(n) => {
            let basis = nbasis_with(NBasis::from_tag(tag)?, opts.params()?.as_ref())?;
            Ok(Element::N(n.convert(&basis)?))
        }
    }
}

fn write_element(out: &mut dyn Write, x: &Element, as_json: bool) -> std::io::Result<()> {
    let e = x.to_json();
    if as_json {
        return writeln!(out, "{}", serde_json::to_string(&e).expect("serializable"));
    }
    let label = match (&e.nu, &e.params) {
        (Some(nu), _) => format!("{}({nu})", e.basis),
        (None, Some([a, b])) => format!("{}({a}, {b})", e.basis),
        (None, None) => e.basis.clone(),
    };
    let rows: Vec<(String, String)> = e
        .terms
        .iter()
        .map(|t| {
            (
                format!("{label}_{}", crate::combinatorics::Composition::new(t.comp.clone()).expect("parts")),
                t.coeff.clone(),
            )
        })
        .collect();
    write_table(out, &["term", "coefficient"], rows.into_iter().map(|(a, b)| vec![a, b]).collect())
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.iter().map(|h| h.to_string()).collect()))?;
    for row in rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("output error: {e}"))
}

/// Execute a parsed command, writing to `out`. Returns whether every
/// requested check passed.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Expand { elem, to, opts } => {
            let x = parse_element(elem, opts.nu, opts.params()?.as_ref())?;
            let y = target_element(&x, to, opts)?;
            write_element(out, &y, opts.json).map_err(io)?;
        }
        Command::Product { left, right, to, opts } => {
            let params = opts.params()?;
            let x = parse_element(left, opts.nu, params.as_ref())?;
            let y = parse_element(right, opts.nu, params.as_ref())?;
            let z = match (&x, &y) {
                (Element::Q(a), Element::Q(b)) => Element::Q(a.mul(b)?),
                (Element::N(a), Element::N(b)) => Element::N(a.mul(b)?),
                _ => return Err(Error::InvalidArgument("factors live in different algebras".into())),
            };
            let z = match to {
                Some(tag) => target_element(&z, tag, opts)?,
                None => z,
            };
            write_element(out, &z, opts.json).map_err(io)?;
        }
        Command::Coproduct { elem, to, opts } => {
            let x = parse_element(elem, opts.nu, opts.params()?.as_ref())?;
            let x = match to {
                Some(tag) => target_element(&x, tag, opts)?,
                None => x,
            };
            let t = match &x {
                Element::Q(a) => json::qsym_tensor_to_json(&a.coproduct()?),
                Element::N(a) => json::nsym_tensor_to_json(&a.coproduct()?),
            };
            if opts.json {
                writeln!(out, "{}", serde_json::to_string(&t).expect("serializable")).map_err(io)?;
            } else {
                let fmt = |p: &[u32]| crate::combinatorics::Composition::new(p.to_vec()).expect("parts").to_string();
                let rows = t.terms.iter().map(|r| vec![fmt(&r.left), fmt(&r.right), r.coeff.clone()]).collect();
                write_table(out, &["left", "right", "coefficient"], rows).map_err(io)?;
            }
        }
        Command::Structconst { degree, subset, filter, csv } => {
            let k = parse_subset(subset, *degree)?;
            let mut rows = Vec::new();
            for m in 0..=*degree {
                if filter.is_some_and(|f| f != m) {
                    continue;
                }
                for i in SubsetLabel::all(m) {
                    for j in SubsetLabel::all(degree - m) {
                        let c = structconst(&k, &i, &j)?;
                        if !c.is_zero() {
                            rows.push(vec![
                                degree.to_string(),
                                k.to_string(),
                                m.to_string(),
                                i.to_string(),
                                j.to_string(),
                                c.to_string(),
                            ]);
                        }
                    }
                }
            }
            if *csv {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["k", "K", "m", "I", "J", "polynomial"]).map_err(|e| io(e.into()))?;
                for row in rows {
                    w.write_record(&row).map_err(|e| io(e.into()))?;
                }
                w.flush().map_err(io)?;
            } else {
                writeln!(out, "coproduct of B(q,t)_{} (K = {k}):", comp_of_set(&k)).map_err(io)?;
                write_table(out, &["k", "K", "m", "I", "J", "C^K_{I,J}(q,t)"], rows).map_err(io)?;
            }
        }
        Command::Verify { suite, max_degree, nu, json } => {
            let report = run_suite(Suite::from_name(suite)?, *max_degree, nu)?;
            if !json {
                for c in &report.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let detail = if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) };
                    writeln!(out, "{status} {} [{} cases]{detail}", c.name, c.cases).map_err(io)?;
                }
            }
            writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io)?;
            return Ok(report.passed());
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<bool>, String) {
        let cli = Cli::try_parse_from(std::iter::once("hopf-scf").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(&cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn expand_b3_to_h_json() {
        let (r, out) = run_args(&["expand", "--elem", "B:(3)", "--to", "H", "--json"]);
        assert!(r.unwrap());
        assert_eq!(out.trim(), r#"{"basis":"H","terms":[{"comp":[1,1,1],"coeff":"1"}]}"#);
    }

    #[test]
    fn subsets_parse() {
        assert_eq!(parse_subset("{1,2}", 3).unwrap(), SubsetLabel::from_elems(3, [1, 2]).unwrap());
        assert_eq!(parse_subset("{}", 3).unwrap(), SubsetLabel::empty(3));
        assert!(parse_subset("{3}", 3).is_err());
        assert!(parse_subset("{a}", 3).is_err());
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        let (r, _) = run_args(&["verify", "--suite", "nope"]);
        assert!(is_usage_error(&r.unwrap_err()));
    }
}

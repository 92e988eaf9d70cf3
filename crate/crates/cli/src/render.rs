//! Text, JSON and CSV renderings of every command's result.

use std::fmt::Write;

use serde::Serialize;

use toricseq_core::cech::{build_cech_complex, ComplexDocument};
use toricseq_core::cells::{flag_complex, oracle_report, simplicial_homology};
use toricseq_core::polyhedral::{ValidationReport, Violation};
use toricseq_core::spectral::{BettiTable, E1Document, E2Document, MorphicTable, SpectralSequence};
use toricseq_core::{Error, Fan, FanDocument, FgAbGroup, IntMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    Invalid,
    Broken,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Invalid => 1,
            Status::Broken => 2,
        }
    }
}

pub struct Rendered {
    pub body: String,
    pub status: Status,
    pub diagnostic: Option<String>,
}

impl Rendered {
    fn ok(body: String) -> Rendered {
        Rendered {
            body,
            status: Status::Ok,
            diagnostic: None,
        }
    }
}

/// A failure reported on standard error.
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = if e.is_input_error() {
            Status::Invalid
        } else {
            Status::Broken
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

pub fn input_failure(message: String) -> Failure {
    Failure {
        status: Status::Invalid,
        message,
    }
}

fn unsupported(command: &str, format: Format) -> Failure {
    input_failure(format!("{command} has no {format:?} output").to_lowercase())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

fn groups(h: &[FgAbGroup]) -> String {
    h.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn matrix_lines(out: &mut String, m: &IntMatrix) {
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, "  [{}]", row.join(" "));
    }
}

#[derive(Serialize)]
struct ValidationDocument<'a> {
    valid: bool,
    complete: bool,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    cone_counts: Option<Vec<usize>>,
    violations: &'a [Violation],
}

pub fn validation(rank: usize, built: &Result<Fan, ValidationReport>, format: Format) -> Result<Rendered, Failure> {
    let (report, counts) = match built {
        Ok(fan) => (fan.validation_report(), Some(fan.codim_counts())),
        Err(report) => (report, None),
    };
    let doc = ValidationDocument {
        valid: report.is_fan(),
        complete: report.is_complete(),
        rank,
        cone_counts: counts,
        violations: &report.violations,
    };
    let body = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = format!("{report}\n");
            if let Some(c) = &doc.cone_counts {
                let _ = writeln!(s, "cones by codimension: {}", join(c, " "));
            }
            s
        }
        Format::Csv => return Err(unsupported("validate", format)),
    };
    Ok(Rendered {
        body,
        status: if report.is_complete() {
            Status::Ok
        } else {
            Status::Invalid
        },
        diagnostic: None,
    })
}

pub fn cech(fan: &Fan, format: Format) -> Result<Rendered, Failure> {
    let cpx = build_cech_complex(fan)?;
    let doc = ComplexDocument::new(fan, &cpx)?;
    let point =
        doc.homology.first().is_some_and(FgAbGroup::is_integers) && doc.homology[1..].iter().all(FgAbGroup::is_trivial);
    let body = match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut s = String::from("degree,rank,homology\n");
            for (k, h) in doc.homology.iter().enumerate() {
                let _ = writeln!(s, "{k},{},{h}", doc.ranks[k]);
            }
            s
        }
        Format::Text => {
            let mut s = format!("ranks: {}\n", join(&doc.ranks, " "));
            for d in doc.degrees.iter().skip(1) {
                let _ = writeln!(
                    s,
                    "d_{} ({}x{}):",
                    d.degree,
                    d.differential.nrows(),
                    d.differential.ncols()
                );
                matrix_lines(&mut s, &d.differential);
            }
            let _ = writeln!(s, "homology: {}", groups(&doc.homology));
            let _ = writeln!(
                s,
                "augmentation exact: {}",
                if doc.augmentation_exact { "yes" } else { "no" }
            );
            s
        }
    };
    Ok(Rendered {
        body,
        status: if point { Status::Ok } else { Status::Broken },
        diagnostic: (!point).then(|| format!("error: {}", Error::ResolutionFailure(groups(&doc.homology)))),
    })
}

#[derive(Serialize)]
struct FlagDocument {
    f_vector: Vec<usize>,
    euler: i64,
    reduced_homology: Vec<FgAbGroup>,
}

pub fn flags(fan: &Fan, format: Format) -> Result<Rendered, Failure> {
    let k = flag_complex(fan);
    let doc = FlagDocument {
        f_vector: k.f_vector(),
        euler: k.euler_characteristic(),
        reduced_homology: simplicial_homology(&k),
    };
    Ok(Rendered::ok(match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut s = String::from("dim,simplices,reduced_homology\n");
            for (d, (f, h)) in doc.f_vector.iter().zip(&doc.reduced_homology).enumerate() {
                let _ = writeln!(s, "{d},{f},{h}");
            }
            s
        }
        Format::Text => format!(
            "simplices by dimension: {}\neuler characteristic: {}\nreduced homology: {}\n",
            join(&doc.f_vector, " "),
            doc.euler,
            groups(&doc.reduced_homology)
        ),
    }))
}

/// Rows `r = 0..=n`, columns `s = 0..=n`.
fn grid(n: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let cells: Vec<Vec<String>> = (0..=n).map(|r| (0..=n).map(|s| cell(r, s)).collect()).collect();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(1)
        .max(3);
    let mut out = format!("{:>5} ", "r\\s");
    for s in 0..=n {
        let _ = write!(out, " {s:>width$}");
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        let _ = write!(out, "{r:>5} ");
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn e1(ss: &SpectralSequence, format: Format) -> Result<Rendered, Failure> {
    let doc = E1Document::new(&ss.e1, &ss.d1);
    Ok(Rendered::ok(match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut s = String::from("r,s,rank\n");
            for b in &doc.blocks {
                let _ = writeln!(s, "{},{},{}", b.r, b.s, b.rank);
            }
            s
        }
        Format::Text => {
            let n = ss.e1.rank();
            let mut s = format!("E1 ranks ({} mode)\n", ss.e1.mode());
            s.push_str(&grid(n, |r, c| {
                if r <= c {
                    ss.e1.block_rank(r, c).to_string()
                } else {
                    ".".into()
                }
            }));
            for d in &doc.d1 {
                if d.rows * d.cols == 0 {
                    continue;
                }
                let _ = writeln!(s, "d1^({},{}) ({}x{}):", d.r, d.s, d.rows, d.cols);
                matrix_lines(&mut s, &d.matrix);
            }
            s
        }
    }))
}

pub fn e2(ss: &SpectralSequence, format: Format) -> Result<Rendered, Failure> {
    let doc = E2Document::new(ss.e1.mode(), &ss.e2);
    Ok(Rendered::ok(match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut s = String::from("r,s,rank,torsion\n");
            for b in &doc.blocks {
                let _ = writeln!(s, "{},{},{},{}", b.r, b.s, b.rank, join(&b.torsion, ";"));
            }
            s
        }
        Format::Text => {
            let n = ss.e2.rank();
            let mut s = String::from("E2 page (integral)\n");
            s.push_str(&grid(n, |r, c| {
                if r <= c {
                    ss.e2.group(r, c).to_string()
                } else {
                    ".".into()
                }
            }));
            s
        }
    }))
}

pub fn morphic(table: &MorphicTable, format: Format) -> Result<Rendered, Failure> {
    let degrees = table.ranks.first().map_or(0, Vec::len);
    Ok(Rendered::ok(match format {
        Format::Json => json(table),
        Format::Csv => {
            let mut s = String::from("q");
            for n in 0..degrees {
                let _ = write!(s, ",{n}");
            }
            s.push('\n');
            for (q, row) in table.ranks.iter().enumerate() {
                let _ = writeln!(s, "{q},{}", join(row, ","));
            }
            s
        }
        Format::Text => {
            let mut s = String::from("rank L^q H^n (rational)\n  q\\n");
            for n in 0..degrees {
                let _ = write!(s, " {n:>3}");
            }
            s.push('\n');
            for (q, row) in table.ranks.iter().enumerate() {
                let _ = write!(s, "{q:>5}");
                for x in row {
                    let _ = write!(s, " {x:>3}");
                }
                s.push('\n');
            }
            s
        }
    }))
}

pub fn betti(table: &BettiTable, format: Format) -> Result<Rendered, Failure> {
    Ok(Rendered::ok(match format {
        Format::Json => json(table),
        Format::Csv => {
            let mut s = String::from("n,betti\n");
            for (n, b) in table.betti.iter().enumerate() {
                let _ = writeln!(s, "{n},{b}");
            }
            s
        }
        Format::Text => format!("betti: {}\neuler: {}\n", join(&table.betti, " "), table.euler),
    }))
}

pub fn oracle(fan: &Fan, format: Format) -> Result<Rendered, Failure> {
    let report = oracle_report(fan)?;
    let body = match format {
        Format::Json => json(&report),
        Format::Csv => return Err(unsupported("oracle", format)),
        Format::Text => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut s = String::new();
            let _ = writeln!(s, "flag complex simplices: {}", join(&report.flag_f_vector, " "));
            let _ = writeln!(s, "flag complex acyclic: {}", yes(report.flag_contractible));
            let iso = report.dual_cells.iter().filter(|c| c.isomorphic_to_quotient).count();
            let _ = writeln!(
                s,
                "dual cells matching quotient flag complexes: {iso}/{}",
                report.dual_cells.len()
            );
            let _ = writeln!(s, "cones by codimension: {}", join(&report.cone_counts, " "));
            let _ = writeln!(s, "dual cells by dimension: {}", join(&report.dual_cell_counts, " "));
            let _ = writeln!(s, "Čech ranks: {}", join(&report.cech_ranks, " "));
            let _ = writeln!(s, "Čech homology: {}", groups(&report.cech_homology));
            for f in &report.failures {
                let _ = writeln!(s, "FAILED: {f}");
            }
            let _ = writeln!(
                s,
                "{}",
                if report.passed {
                    "all checks passed"
                } else {
                    "checks failed"
                }
            );
            s
        }
    };
    Ok(Rendered {
        body,
        status: if report.passed { Status::Ok } else { Status::Broken },
        diagnostic: None,
    })
}

pub fn document(doc: &FanDocument, format: Format) -> Result<Rendered, Failure> {
    match format {
        Format::Json | Format::Text => Ok(Rendered::ok(json(doc))),
        Format::Csv => Err(unsupported("builtin", format)),
    }
}

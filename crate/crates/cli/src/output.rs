//! Text, CSV and JSON renderers. JSON goes through `serde_json::Value`, whose
//! maps keep keys sorted, and big integers are written as decimal strings.

use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Value};

use qhook::identities::NamedSeries;
use qhook::verify::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct TableRow {
    pub n: usize,
    pub oracle: Option<BigInt>,
    pub genfun: Option<BigInt>,
}

impl TableRow {
    /// `None` unless both sources are present.
    pub fn matches(&self) -> Option<bool> {
        Some(self.oracle.as_ref()? == self.genfun.as_ref()?)
    }

    fn value(&self) -> &BigInt {
        self.oracle
            .as_ref()
            .or(self.genfun.as_ref())
            .expect("at least one source")
    }
}

fn write_json(w: &mut dyn Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, v)?;
    writeln!(w)
}

pub fn write_table(w: &mut dyn Write, format: Format, t: u32, k: u32, rows: &[TableRow]) -> io::Result<()> {
    let both = rows.first().and_then(TableRow::matches).is_some();
    match format {
        Format::Csv => {
            if both {
                writeln!(w, "n,oracle,genfun,match")?;
            } else {
                writeln!(w, "n,value")?;
            }
            for r in rows {
                match (&r.oracle, &r.genfun) {
                    (Some(o), Some(g)) => writeln!(w, "{},{o},{g},{}", r.n, o == g)?,
                    _ => writeln!(w, "{},{}", r.n, r.value())?,
                }
            }
        }
        Format::Text => {
            writeln!(w, "# b_{{{t},{k}}}(n)")?;
            for r in rows {
                match (&r.oracle, &r.genfun) {
                    (Some(o), Some(g)) => {
                        let tag = if o == g { "ok" } else { "MISMATCH" };
                        writeln!(w, "{:>4} {o} {g} {tag}", r.n)?
                    }
                    _ => writeln!(w, "{:>4} {}", r.n, r.value())?,
                }
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| match (&r.oracle, &r.genfun) {
                    (Some(o), Some(g)) => json!({
                        "n": r.n,
                        "oracle": o.to_string(),
                        "genfun": g.to_string(),
                        "match": o == g,
                    }),
                    _ => json!({ "n": r.n, "value": r.value().to_string() }),
                })
                .collect();
            write_json(w, &json!({ "t": t, "k": k, "rows": rows }))?;
        }
    }
    Ok(())
}

pub fn write_reports(w: &mut dyn Write, format: Format, reports: &[CheckReport], single: bool) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(w, "check,n,lhs,rhs")?;
            for r in reports {
                for c in &r.counterexamples {
                    writeln!(w, "{},{},{},{}", r.check_name, c.n, c.lhs, c.rhs)?;
                }
            }
        }
        Format::Text => {
            for r in reports {
                writeln!(w, "{r}")?;
                for c in r.counterexamples.iter().take(20) {
                    writeln!(w, "    n={} lhs={} rhs={}", c.n, c.lhs, c.rhs)?;
                }
                if r.counterexamples.len() > 20 {
                    writeln!(w, "    ... {} more", r.counterexamples.len() - 20)?;
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(
                w,
                "{passed}/{} checks passed (finite verification, not proof)",
                reports.len()
            )?;
        }
        Format::Json => {
            let values: Vec<Value> = reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("reports serialize"))
                .collect();
            match (single, values.as_slice()) {
                (true, [only]) => write_json(w, only)?,
                _ => write_json(w, &Value::Array(values))?,
            }
        }
    }
    Ok(())
}

pub fn write_series(w: &mut dyn Write, format: Format, named: &NamedSeries) -> io::Result<()> {
    let coeffs = named.series.coeffs();
    match format {
        Format::Csv => {
            writeln!(w, "n,value")?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(w, "{n},{c}")?;
            }
        }
        Format::Text => {
            writeln!(w, "# {} = {}", named.name, named.formula)?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(w, "{n:>4} {c}")?;
            }
        }
        Format::Json => {
            let v = json!({
                "name": named.name.as_str(),
                "formula": named.formula,
                "trunc": named.series.trunc(),
                "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            write_json(w, &v)?;
        }
    }
    Ok(())
}

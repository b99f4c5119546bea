//! Text and JSON rendering. Both forms are deterministic: reports keep the
//! checker's order and every value is printed in canonical form.

use std::io::{self, Write};

use hybridhopf_core::checker::{CheckReport, Summary};
use hybridhopf_core::{BasisIndex, ParameterMode, Scalar, Side, Source, StructureConstants, Variant};
use serde::Serialize;

use crate::app::Format;

fn b_mode(mode: &ParameterMode) -> String {
    match mode {
        ParameterMode::Symbolic => "symbolic".to_string(),
        ParameterMode::Numeric(b0) => b0.to_string(),
    }
}

fn b_label(mode: &ParameterMode) -> String {
    match mode {
        ParameterMode::Symbolic => "b symbolic".to_string(),
        ParameterMode::Numeric(b0) => format!("b = {b0}"),
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct JsonSummary {
    total: usize,
    passed: usize,
    failed: usize,
    variant: String,
    b_mode: String,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonItem<'a> {
    Check(&'a CheckReport),
    Summary { summary: JsonSummary },
}

pub fn write_checks(
    out: &mut dyn Write,
    format: Format,
    reports: &[CheckReport],
    variant: Variant,
    mode: &ParameterMode,
) -> io::Result<Summary> {
    let summary = Summary::of(reports);
    match format {
        Format::Json => {
            let mut items: Vec<JsonItem> = reports.iter().map(JsonItem::Check).collect();
            items.push(JsonItem::Summary {
                summary: JsonSummary {
                    total: summary.total,
                    passed: summary.passed,
                    failed: summary.failed,
                    variant: variant.to_string(),
                    b_mode: b_mode(mode),
                },
            });
            write_json(out, &items)?;
        }
        Format::Text => {
            for r in reports {
                if r.inputs.is_empty() {
                    writeln!(out, "{} {}", r.status, r.name)?;
                } else {
                    writeln!(out, "{} {} ({})", r.status, r.name, r.inputs.join(", "))?;
                }
                if !r.passed() {
                    writeln!(out, "  lhs:      {}", r.lhs)?;
                    writeln!(out, "  rhs:      {}", r.rhs)?;
                    writeln!(out, "  residual: {}", r.residual)?;
                }
            }
            writeln!(
                out,
                "{} checks: {} passed, {} failed (variant {variant}, {})",
                summary.total,
                summary.passed,
                summary.failed,
                b_label(mode)
            )?;
        }
    }
    Ok(summary)
}

#[derive(Serialize)]
struct JsonTable<'a> {
    basis: &'a [&'a str],
    products: &'a [Vec<String>],
}

pub fn write_table(out: &mut dyn Write, format: Format) -> io::Result<()> {
    let rows: Vec<Vec<String>> = BasisIndex::ALL
        .iter()
        .map(|&x| {
            BasisIndex::ALL
                .iter()
                .map(|&y| StructureConstants::product::<Scalar>(x, y).to_string())
                .collect()
        })
        .collect();
    let names: Vec<&str> = BasisIndex::ALL.iter().map(|x| x.name()).collect();
    if format == Format::Json {
        return write_json(
            out,
            &JsonTable {
                basis: &names,
                products: &rows,
            },
        );
    }
    let mut width = [0usize; 5];
    width[0] = names.iter().map(|s| s.len()).max().unwrap_or(1);
    for (j, name) in names.iter().enumerate() {
        width[j + 1] = rows.iter().map(|r| r[j].len()).chain([name.len()]).max().unwrap_or(1);
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c:<w$}", w = width[k]))
            .collect::<Vec<_>>()
            .join(" | ")
            .trim_end()
            .to_string()
    };
    let mut header = vec!["*"];
    header.extend(&names);
    writeln!(out, "{}", line(header))?;
    writeln!(
        out,
        "{}",
        width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-")
    )?;
    for (name, row) in names.iter().zip(&rows) {
        let mut cells = vec![*name];
        cells.extend(row.iter().map(String::as_str));
        writeln!(out, "{}", line(cells))?;
    }
    Ok(())
}

pub struct OperationOutput {
    pub operation: &'static str,
    pub variant: Variant,
    pub mode: ParameterMode,
    pub inputs: Vec<String>,
    pub result: String,
}

#[derive(Serialize)]
struct JsonOperation<'a> {
    operation: &'a str,
    variant: String,
    b_mode: String,
    inputs: &'a [String],
    result: &'a str,
}

pub fn write_operation(out: &mut dyn Write, format: Format, o: &OperationOutput) -> io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", o.result),
        Format::Json => write_json(
            out,
            &JsonOperation {
                operation: o.operation,
                variant: o.variant.to_string(),
                b_mode: b_mode(&o.mode),
                inputs: &o.inputs,
                result: &o.result,
            },
        ),
    }
}

pub struct IntegralOutput {
    pub side: Side,
    pub source: Source,
    pub variant: Variant,
    pub mode: ParameterMode,
    pub coordinates: Vec<[String; 4]>,
    pub elements: Vec<String>,
    pub exceptional_denominators: Vec<String>,
}

#[derive(Serialize)]
struct JsonIntegrals<'a> {
    side: Side,
    source: Source,
    variant: String,
    b_mode: String,
    dimension: usize,
    basis: &'a [[String; 4]],
    elements: &'a [String],
    exceptional_denominators: &'a [String],
}

pub fn write_integrals(out: &mut dyn Write, format: Format, o: &IntegralOutput) -> io::Result<()> {
    if format == Format::Json {
        return write_json(
            out,
            &JsonIntegrals {
                side: o.side,
                source: o.source,
                variant: o.variant.to_string(),
                b_mode: b_mode(&o.mode),
                dimension: o.coordinates.len(),
                basis: &o.coordinates,
                elements: &o.elements,
                exceptional_denominators: &o.exceptional_denominators,
            },
        );
    }
    writeln!(
        out,
        "{} integrals, variant {}, {} system, {}: dimension {}",
        o.side,
        o.variant,
        o.source,
        b_label(&o.mode),
        o.coordinates.len()
    )?;
    for (k, (c, e)) in o.coordinates.iter().zip(&o.elements).enumerate() {
        writeln!(out, "  v{}: {e}", k + 1)?;
        writeln!(out, "      ({})", c.join(", "))?;
    }
    if !o.exceptional_denominators.is_empty() {
        writeln!(
            out,
            "  may not specialize where any of these vanish: {}",
            o.exceptional_denominators.join(", ")
        )?;
    }
    Ok(())
}

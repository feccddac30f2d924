//! Output formatting: text by default, JSON on request, CSV where a table
//! makes sense. Exact rationals print as "p/q"; --decimal adds an
//! approximate column without ever replacing the exact value.

use anyhow::Result;
use clap::{Args, ValueEnum};
use mdl_core::minor::MinorWitness;
use mdl_core::rational::{approx, Rational};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
pub struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    pub format: Kind,
    /// Add an approximate decimal column next to exact rationals
    #[arg(long)]
    pub decimal: bool,
}

impl OutputOpts {
    pub fn json(&self) -> bool {
        self.format == Kind::Json
    }

    pub fn format_kind(&self) -> Kind {
        self.format
    }

    pub fn print_json(&self, value: &serde_json::Value) -> Result<()> {
        println!("{}", serde_json::to_string_pretty(value)?);
        Ok(())
    }

    /// Single rational result, e.g. `density`.
    pub fn emit_rational(&self, key: &str, value: Rational) -> Result<()> {
        match self.format {
            Kind::Json => {
                let mut obj = serde_json::Map::new();
                obj.insert(
                    key.to_string(),
                    serde_json::Value::String(value.to_string()),
                );
                if self.decimal {
                    obj.insert("decimal".to_string(), serde_json::json!(to_f64(value)));
                }
                self.print_json(&serde_json::Value::Object(obj))
            }
            _ => {
                if self.decimal {
                    println!("{value} ≈ {}", approx(value));
                } else {
                    println!("{value}");
                }
                Ok(())
            }
        }
    }

    pub fn emit_integer(&self, key: &str, value: usize) -> Result<()> {
        if self.json() {
            let mut obj = serde_json::Map::new();
            obj.insert(key.to_string(), serde_json::json!(value));
            self.print_json(&serde_json::Value::Object(obj))
        } else {
            println!("{value}");
            Ok(())
        }
    }

    /// `label: p/q` text line, with the optional decimal column.
    pub fn print_rational_line(&self, label: &str, value: Rational) {
        if self.decimal {
            println!("{label}: {value} ≈ {}", approx(value));
        } else {
            println!("{label}: {value}");
        }
    }
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn mask_to_list(mask: u32) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

pub fn join(list: &[usize]) -> String {
    list.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn witness_json(w: &MinorWitness) -> Vec<Vec<usize>> {
    w.branch_sets.iter().map(|&b| mask_to_list(b)).collect()
}

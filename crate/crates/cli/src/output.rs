use std::io::{self, Write};
use std::time::Duration;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
    Text,
}

/// One result, rendered for every output format.
pub struct Record {
    pub json: Value,
    pub text: String,
    pub csv: Vec<String>,
}

pub struct Emitter {
    format: Format,
    budget: u64,
    headers: Vec<&'static str>,
    rows: Vec<Value>,
    walls: Vec<f64>,
    csv: Option<csv::Writer<io::Stdout>>,
}

fn line(s: &str) -> io::Result<()> {
    writeln!(io::stdout().lock(), "{s}")
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

impl Emitter {
    pub fn new(format: Format, budget: u64) -> Self {
        Emitter { format, budget, headers: Vec::new(), rows: Vec::new(), walls: Vec::new(), csv: None }
    }

    fn meta(&self, wall: f64) -> Value {
        json!({
            "version": env!("CARGO_PKG_VERSION"),
            "budget": { "max_pair_reductions": self.budget },
            "wall_time_s": wall,
        })
    }

    fn csv_writer(&mut self) -> &mut csv::Writer<io::Stdout> {
        let headers = &self.headers;
        self.csv.get_or_insert_with(|| {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(headers).expect("stdout");
            w
        })
    }

    /// Prints a single result.
    pub fn single(mut self, headers: &[&'static str], rec: Record, wall: Duration) -> io::Result<()> {
        self.headers = headers.to_vec();
        match self.format {
            Format::Json => {
                let out = json!({ "meta": self.meta(secs(wall)), "result": rec.json });
                line(&serde_json::to_string_pretty(&out)?)?;
            }
            Format::Jsonl => {
                let mut v = rec.json;
                if let Value::Object(m) = &mut v {
                    m.insert("meta".into(), self.meta(secs(wall)));
                }
                line(&serde_json::to_string(&v)?)?;
            }
            Format::Csv => {
                self.csv_writer().write_record(&rec.csv)?;
                self.csv_writer().flush()?;
            }
            Format::Text => line(&rec.text)?,
        }
        Ok(())
    }

    /// Starts a streamed table. The text format prints `title` first, if any.
    pub fn begin_table(&mut self, headers: &[&'static str], title: Option<&str>) -> io::Result<()> {
        self.headers = headers.to_vec();
        if let (Format::Text, Some(t)) = (self.format, title) {
            line(t)?;
        }
        Ok(())
    }

    pub fn row(&mut self, rec: Record, wall: Duration) -> io::Result<()> {
        match self.format {
            Format::Json => {
                self.rows.push(rec.json);
                self.walls.push(secs(wall));
            }
            Format::Jsonl => {
                let mut v = rec.json;
                if let Value::Object(m) = &mut v {
                    m.insert("meta".into(), self.meta(secs(wall)));
                }
                line(&serde_json::to_string(&v)?)?;
            }
            Format::Csv => {
                self.csv_writer().write_record(&rec.csv)?;
                self.csv_writer().flush()?;
            }
            Format::Text => line(&rec.text)?,
        }
        io::stdout().flush()
    }

    pub fn end_table(mut self, total: Duration) -> io::Result<()> {
        if self.format == Format::Json {
            let mut meta = self.meta(secs(total));
            meta["row_wall_time_s"] = json!(self.walls);
            let out = json!({ "meta": meta, "rows": std::mem::take(&mut self.rows) });
            line(&serde_json::to_string_pretty(&out)?)?;
        }
        if let Some(w) = self.csv.as_mut() {
            w.flush()?;
        }
        Ok(())
    }
}

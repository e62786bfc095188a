//! Report sink: stdout or a file, written line by line in input order so
//! identical runs produce byte-identical output.

use std::fs::File;
use std::io::{BufWriter, Stdout, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub enum Sink {
    Stdout(Stdout),
    File(BufWriter<File>),
}

impl Sink {
    pub fn open(path: Option<&Path>) -> std::io::Result<Sink> {
        Ok(match path {
            Some(p) => Sink::File(BufWriter::new(File::create(p)?)),
            None => Sink::Stdout(std::io::stdout()),
        })
    }

    pub fn line(&mut self, s: &str) {
        self.write(s);
        self.write("\n");
    }

    /// Write already-terminated text verbatim.
    pub fn text(&mut self, s: &str) {
        self.write(s);
    }

    fn write(&mut self, s: &str) {
        let r = match self {
            Sink::Stdout(out) => out.write_all(s.as_bytes()),
            Sink::File(f) => f.write_all(s.as_bytes()),
        };
        r.expect("report sink write failed");
    }
}

impl Drop for Sink {
    fn drop(&mut self) {
        let _ = match self {
            Sink::Stdout(out) => out.flush(),
            Sink::File(f) => f.flush(),
        };
    }
}

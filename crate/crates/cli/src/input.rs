//! Input sources: graph6 files (one graph per line), edge-list files and
//! generator specs.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use graph_energy::{generate, parse_edge_list, parse_graph6, FamilySpec, Graph};

/// Lines handed to the worker pool at once.
pub const BATCH: usize = 1024;

/// One unit of work; graph6 lines are decoded on the worker.
pub enum Job {
    Graph6 { line: usize, text: String },
    Ready(Graph),
}

impl Job {
    pub fn graph(self) -> Result<Graph> {
        match self {
            Job::Ready(g) => Ok(g),
            Job::Graph6 { line, text } => {
                parse_graph6(&text).map_err(|e| anyhow!("line {line}: {e}"))
            }
        }
    }
}

#[derive(Debug)]
pub enum Source {
    Path(String),
    Specs(Vec<String>),
}

fn open(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(Path::new(path)).with_context(|| format!("cannot open {path}"))?;
    Ok(Box::new(BufReader::new(file)))
}

fn is_edge_list_header(line: &str) -> bool {
    line.split_whitespace().next() == Some("n")
}

/// Feeds `sink` with batches of jobs in input order.
pub fn for_each_batch(source: &Source, mut sink: impl FnMut(Vec<Job>) -> Result<()>) -> Result<()> {
    match source {
        Source::Specs(specs) => {
            let mut jobs = Vec::with_capacity(specs.len());
            for s in specs {
                let spec: FamilySpec = s.parse().map_err(|e| anyhow!("bad spec {s:?}: {e}"))?;
                jobs.push(Job::Ready(
                    generate(&spec).map_err(|e| anyhow!("{s}: {e}"))?,
                ));
            }
            sink(jobs)
        }
        Source::Path(path) => {
            let mut reader = open(path)?;
            let mut batch = Vec::with_capacity(BATCH);
            let mut line_no = 0;
            let mut buf = String::new();
            let mut first = true;
            loop {
                buf.clear();
                if reader
                    .read_line(&mut buf)
                    .with_context(|| format!("reading {path}"))?
                    == 0
                {
                    break;
                }
                line_no += 1;
                let text = buf.trim();
                if text.is_empty() {
                    continue;
                }
                if std::mem::take(&mut first)
                    && (text.starts_with('#') || is_edge_list_header(text))
                {
                    // the whole file is one edge list
                    let mut rest = String::new();
                    reader.read_to_string(&mut rest)?;
                    let full = "\n".repeat(line_no - 1) + &buf + &rest;
                    let g = parse_edge_list(&full).map_err(|e| anyhow!("{path}: {e}"))?;
                    return sink(vec![Job::Ready(g)]);
                }
                batch.push(Job::Graph6 {
                    line: line_no,
                    text: text.to_owned(),
                });
                if batch.len() == BATCH {
                    sink(std::mem::replace(&mut batch, Vec::with_capacity(BATCH)))?;
                }
            }
            if !batch.is_empty() {
                sink(batch)?;
            }
            Ok(())
        }
    }
}

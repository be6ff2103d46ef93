//! Reading graphs and digraphs from files, stdin or inline text.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use polyforge::multigraph::io::{parse_digraph, parse_edgelist, parse_graph6};
use polyforge::multigraph::{Digraph, Multigraph};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Args)]
pub struct GraphInput {
    /// Input file; `-` or nothing reads stdin.
    pub path: Option<PathBuf>,
    /// Graph text given directly instead of a file.
    #[arg(long, conflicts_with = "path")]
    pub inline: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub input_format: InputFormat,
}

/// Raw bytes of an input and their SHA-256 digest in hex.
pub struct Source {
    pub text: String,
    pub digest: String,
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn read_source(path: Option<&PathBuf>, inline: Option<&str>) -> Result<Source, String> {
    let text = match (inline, path) {
        (Some(t), _) => t.replace("\\n", "\n"),
        (None, Some(p)) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| format!("stdin: {e}"))?;
            buf
        }
    };
    let digest = digest(text.as_bytes());
    Ok(Source { text, digest })
}

impl GraphInput {
    pub fn load(&self) -> Result<(Multigraph, Source), String> {
        let source = read_source(self.path.as_ref(), self.inline.as_deref())?;
        let g = parse_graph(&source.text, self.input_format).map_err(|e| e.to_string())?;
        Ok((g, source))
    }
}

pub fn parse_graph(text: &str, format: InputFormat) -> polyforge::Result<Multigraph> {
    match format {
        InputFormat::Edgelist => parse_edgelist(text),
        InputFormat::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn load_digraph(path: Option<&PathBuf>, inline: Option<&str>) -> Result<(Digraph, Source), String> {
    let source = read_source(path, inline)?;
    let d = parse_digraph(&source.text).map_err(|e| e.to_string())?;
    Ok((d, source))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyforge::multigraph::generators::complete;
    use polyforge::multigraph::io::to_graph6;

    #[test]
    fn formats() {
        let k2 = parse_graph("2 1\n0 1", InputFormat::Edgelist).unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        let k4 = parse_graph("C~\n", InputFormat::Graph6).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), to_graph6(&complete(4)).unwrap());
        let looped = parse_graph("3 1\n0 0", InputFormat::Edgelist).unwrap();
        assert_eq!((looped.order(), looped.loop_count()), (3, 1));
        let err = parse_graph("2 2\n0 1\n0 x", InputFormat::Edgelist).unwrap_err();
        assert!(err.to_string().contains('3'), "{err}");
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}

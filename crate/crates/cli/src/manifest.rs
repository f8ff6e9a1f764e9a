use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize, Debug)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

impl FileDigest {
    fn of(path: &Path) -> std::io::Result<Self> {
        let bytes = fs::read(path)?;
        Ok(FileDigest {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(&bytes)),
        })
    }
}

/// Everything needed to rerun a command: the exact argument vector, the
/// digests of its inputs, and the digests of what it wrote. Only
/// `wall_time_seconds` differs between reruns.
#[derive(Serialize, Debug)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: String,
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub threads: usize,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub wall_time_seconds: f64,
}

pub struct Recorder {
    start: Instant,
    subcommand: &'static str,
    argv: Vec<String>,
    seed: Option<u64>,
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
}

impl Recorder {
    pub fn new(subcommand: &'static str, argv: &[String], seed: Option<u64>) -> Self {
        Recorder {
            start: Instant::now(),
            subcommand,
            argv: argv.to_vec(),
            seed,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn input(&mut self, path: &Path) {
        self.inputs.push(path.to_path_buf());
    }

    pub fn output(&mut self, path: &Path) {
        self.outputs.push(path.to_path_buf());
    }

    /// Writes `<primary>.manifest.json` and returns its path.
    pub fn finish(self, primary: &Path) -> std::io::Result<PathBuf> {
        let digests = |paths: &[PathBuf]| {
            paths
                .iter()
                .map(|p| FileDigest::of(p))
                .collect::<Result<Vec<_>, _>>()
        };
        let manifest = RunManifest {
            tool: "wicketlab",
            version: env!("CARGO_PKG_VERSION"),
            subcommand: self.subcommand.to_string(),
            argv: self.argv.clone(),
            seed: self.seed,
            threads: rayon::current_num_threads(),
            inputs: digests(&self.inputs)?,
            outputs: digests(&self.outputs)?,
            wall_time_seconds: self.start.elapsed().as_secs_f64(),
        };
        let path = with_suffix(primary, ".manifest.json");
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        text.push('\n');
        fs::write(&path, text)?;
        Ok(path)
    }
}

/// `path` with `suffix` appended to its file name.
pub fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

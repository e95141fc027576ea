use std::io::Write;
use std::path::Path;

use tempfile::NamedTempFile;

use crate::CliError;

/// Fixed 17-significant-digit float formatting.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct Table {
    comments: Vec<String>,
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Result<Self, CliError> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        writer.write_record(header).map_err(CliError::io)?;
        Ok(Self { comments: Vec::new(), writer })
    }

    /// `# key=value` line written above the header row.
    pub fn comment(&mut self, line: String) {
        self.comments.push(line);
    }

    pub fn row<I, S>(&mut self, fields: I) -> Result<(), CliError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).map_err(CliError::io)
    }

    pub fn finish(self) -> Result<String, CliError> {
        let body = self.writer.into_inner().map_err(|e| CliError::io(e.into_error()))?;
        let mut s = String::new();
        for c in self.comments {
            s.push_str("# ");
            s.push_str(&c);
            s.push('\n');
        }
        s.push_str(&String::from_utf8(body).map_err(CliError::io)?);
        Ok(s)
    }
}

/// Writes through a temporary file in the target directory, renamed on success.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(content.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::io(e)),
                _ => Ok(()),
            }
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = NamedTempFile::new_in(dir).map_err(CliError::io)?;
            tmp.write_all(content.as_bytes()).map_err(CliError::io)?;
            tmp.as_file().sync_all().map_err(CliError::io)?;
            tmp.persist(path).map_err(|e| CliError::io(e.error))?;
            Ok(())
        }
    }
}

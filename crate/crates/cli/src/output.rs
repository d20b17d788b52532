use std::io::{self, BufWriter, Write};

/// Buffered, locked stdout. Floats are written with Rust's shortest
/// round-trip formatting, which never uses locale separators.
pub fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

/// Writes `# key: value` metadata lines.
pub fn meta(w: &mut impl Write, key: &str, value: impl std::fmt::Display) -> io::Result<()> {
    writeln!(w, "# {key}: {value}")
}

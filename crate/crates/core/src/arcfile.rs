//! Line-oriented text format for arcs.
//!
//! ```text
//! # comment
//! field 3 4 1 2 0 0 2      # p h [modulus coefficients, leading first]
//! k 6
//! t^0 0 0 0 0 0
//! ...
//! ```
//!
//! Elements are `0`, `t`, `t^e`, or (prime fields only) integers `0..p`.
//! Everything after `#` on a line is ignored, as are blank lines. Vectors
//! keep their file order, which is the arc ordering.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::arcgeom::{ArcConfig, ArcError};
use crate::gf::{GaloisField, GfError};

#[derive(Debug, Error)]
pub enum ArcFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Element { line: usize, source: GfError },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Arc(#[from] ArcError),
}

#[derive(Debug, Clone)]
pub struct ArcFile {
    pub p: u32,
    pub h: u32,
    /// Modulus as written in the file (leading coefficient first).
    pub modulus: Option<Vec<u32>>,
    pub arc: ArcConfig,
}

impl ArcFile {
    pub fn parse(text: &str) -> Result<Self, ArcFileError> {
        Self::parse_with_modulus(text, None)
    }

    /// Parses with `modulus` (if given) overriding the file's own.
    pub fn parse_with_modulus(text: &str, modulus: Option<&[u32]>) -> Result<Self, ArcFileError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, header) = lines.next().ok_or(ArcFileError::Syntax {
            line: 1,
            msg: "missing field line".into(),
        })?;
        let mut words = header.split_whitespace();
        if words.next() != Some("field") {
            return Err(syntax(ln, "expected `field p h [modulus]`"));
        }
        let nums: Vec<u32> = words
            .map(|w| w.parse().map_err(|_| syntax(ln, &format!("not a number: {w}"))))
            .collect::<Result<_, _>>()?;
        if nums.len() < 2 {
            return Err(syntax(ln, "expected `field p h [modulus]`"));
        }
        let (p, h) = (nums[0], nums[1]);
        let file_modulus = (nums.len() > 2).then(|| nums[2..].to_vec());
        let modulus = modulus.map(<[u32]>::to_vec).or(file_modulus);
        let field = Arc::new(GaloisField::new(p, h, modulus.as_deref())?);

        let (ln, kline) = lines.next().ok_or(ArcFileError::Syntax {
            line: ln + 1,
            msg: "missing `k <dim>` line".into(),
        })?;
        let mut words = kline.split_whitespace();
        let k: usize = match (words.next(), words.next(), words.next()) {
            (Some("k"), Some(v), None) => v.parse().map_err(|_| syntax(ln, "bad dimension"))?,
            _ => return Err(syntax(ln, "expected `k <dim>`")),
        };

        let points = lines
            .map(|(ln, l)| {
                l.split_whitespace()
                    .map(|w| {
                        field
                            .parse_elem(w)
                            .map_err(|source| ArcFileError::Element { line: ln, source })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arc = ArcConfig::new(field, k, points)?;
        Ok(ArcFile { p, h, modulus, arc })
    }

    /// Canonical text: no comments, single spaces, elements as `0`/`t^e`.
    pub fn to_text(&self) -> String {
        let f = self.arc.field();
        let mut out = format!("field {} {}", self.p, self.h);
        if let Some(m) = &self.modulus {
            for c in m {
                write!(out, " {c}").unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(out, "k {}", self.arc.k()).unwrap();
        for v in self.arc.points() {
            let words: Vec<String> = v.iter().map(|&x| f.format_elem(x)).collect();
            writeln!(out, "{}", words.join(" ")).unwrap();
        }
        out
    }

    pub fn from_arc(arc: ArcConfig) -> Self {
        let f = arc.field();
        ArcFile {
            p: f.p(),
            h: f.h(),
            modulus: None,
            arc,
        }
    }
}

fn syntax(line: usize, msg: &str) -> ArcFileError {
    ArcFileError::Syntax {
        line,
        msg: msg.to_string(),
    }
}

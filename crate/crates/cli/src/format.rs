//! JSON file formats. Rationals are strings (`"p/q"` or `"p"`), polynomials
//! are coefficient arrays, lowest degree first.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use polygame::{parse_rat, PiecewiseRationalFn, Poly, PolyGame, Rat, RationalFn};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceSpec {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

/// A piecewise rational function: piece `k` governs `(h_k, h_{k+1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpecFile {
    pub breakpoints: Vec<String>,
    pub pieces: Vec<PieceSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

fn parse_poly(coeffs: &[String]) -> Result<Poly> {
    let coeffs = coeffs
        .iter()
        .map(|c| parse_rat(c).map_err(anyhow::Error::from))
        .collect::<Result<Vec<Rat>>>()?;
    Ok(Poly::new(coeffs))
}

fn print_poly(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl FunctionSpecFile {
    pub fn to_function(&self) -> Result<PiecewiseRationalFn> {
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|h| parse_rat(h).context("breakpoint"))
            .collect::<Result<Vec<Rat>>>()?;
        let pieces = self
            .pieces
            .iter()
            .enumerate()
            .map(|(k, piece)| {
                let num = parse_poly(&piece.num).with_context(|| format!("numerator of piece {k}"))?;
                let den = parse_poly(&piece.den).with_context(|| format!("denominator of piece {k}"))?;
                RationalFn::new(num, den).with_context(|| format!("piece {k}"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PiecewiseRationalFn::new(breakpoints, pieces)?)
    }

    pub fn from_function(f: &PiecewiseRationalFn) -> Self {
        FunctionSpecFile {
            breakpoints: f.breakpoints().iter().map(ToString::to_string).collect(),
            pieces: f
                .pieces()
                .iter()
                .map(|p| PieceSpec {
                    num: print_poly(p.num()),
                    den: print_poly(p.den()),
                })
                .collect(),
        }
    }
}

impl GameFile {
    pub fn to_game(&self) -> Result<PolyGame> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            bail!(
                "game file declares {}x{} but the entries do not match",
                self.rows,
                self.cols
            );
        }
        let rows = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, e)| parse_poly(e).with_context(|| format!("entry ({i}, {j})")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let game = PolyGame::new(rows)?;
        Ok(match &self.provenance {
            Some(p) => game.with_provenance(p.clone()),
            None => game,
        })
    }

    pub fn from_game(g: &PolyGame) -> Self {
        GameFile {
            rows: g.rows(),
            cols: g.cols(),
            entries: (0..g.rows())
                .map(|i| g.row(i).iter().map(print_poly).collect())
                .collect(),
            provenance: g.provenance().map(str::to_string),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

//! Group catalog documents: one TOML file per group.
//!
//! ```toml
//! name = "G(3,1,2)"
//! aliases = []
//! symbol = "3[4]2"
//! family = "wreath"
//! field_order = 3
//! degrees = [3, 6]
//! stretch = false
//! generators = [
//!   [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
//! ]
//! ```
//!
//! Each generator is a list of rows; each entry is its coordinate vector in
//! the power basis 1, ζ, …, ζ^(φ(n)−1) of ℚ(ζₙ), n = `field_order`. A
//! coordinate is an integer or a string such as "-1/2".

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use serde::{Deserialize, Serialize};
use shephard_core::field::{totient, Cyclotomic, Rational};
use shephard_core::group::{builtin, CMatrix, Family, GroupSpec, ShephardSymbol};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Text(String),
}

impl Coordinate {
    fn to_rational(&self) -> anyhow::Result<Rational> {
        match self {
            Coordinate::Int(n) => Ok(Rational::from(*n)),
            Coordinate::Text(s) => s
                .trim()
                .parse()
                .with_context(|| format!("bad coordinate {s:?}")),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        match q.to_i64() {
            Some(n) => Coordinate::Int(n),
            None => Coordinate::Text(q.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub symbol: String,
    pub family: String,
    pub field_order: u32,
    pub degrees: Vec<u32>,
    #[serde(default)]
    pub stretch: bool,
    pub generators: Vec<Vec<Vec<Vec<Coordinate>>>>,
}

impl GroupDocument {
    pub fn from_spec(spec: &GroupSpec) -> Self {
        let generators = spec
            .generators
            .iter()
            .map(|g| {
                (0..g.rows())
                    .map(|i| {
                        g.row(i)
                            .iter()
                            .map(|x| x.coeffs().iter().map(Coordinate::from_rational).collect())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        GroupDocument {
            name: spec.name.clone(),
            aliases: spec.aliases.clone(),
            symbol: spec.symbol.to_string(),
            family: spec.family.to_string(),
            field_order: spec.field_order,
            degrees: spec.degrees.clone(),
            stretch: spec.stretch,
            generators,
        }
    }

    /// Parses and validates the document into a group spec.
    pub fn to_spec(&self) -> anyhow::Result<GroupSpec> {
        let symbol: ShephardSymbol = self.symbol.parse()?;
        let family: Family = self.family.parse()?;
        let n = self.field_order;
        ensure!(
            n >= 1 && n as usize <= shephard_core::field::MAX_ORDER,
            "field_order {n} out of range"
        );
        let phi = totient(n);
        let mut generators = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let mut rows = Vec::with_capacity(g.len());
            for (ri, row) in g.iter().enumerate() {
                let mut entries = Vec::with_capacity(row.len());
                for (ci, coords) in row.iter().enumerate() {
                    ensure!(
                        coords.len() == phi,
                        "generator {gi} entry ({ri},{ci}) has {} coordinates, expected φ({n}) = {phi}",
                        coords.len()
                    );
                    let coeffs = coords
                        .iter()
                        .map(Coordinate::to_rational)
                        .collect::<anyhow::Result<Vec<_>>>()
                        .with_context(|| format!("generator {gi} entry ({ri},{ci})"))?;
                    entries.push(Cyclotomic::from_coeffs(n, coeffs).expect("length checked"));
                }
                ensure!(
                    entries.len() == g.len(),
                    "generator {gi} row {ri} has {} entries, expected {}",
                    entries.len(),
                    g.len()
                );
                rows.push(entries);
            }
            generators.push(CMatrix::from_rows(rows, n));
        }
        let spec = GroupSpec {
            name: self.name.clone(),
            aliases: self.aliases.clone(),
            symbol,
            family,
            field_order: n,
            generators,
            degrees: self.degrees.clone(),
            stretch: self.stretch,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// TOML text with one generator per line.
    pub fn to_toml(&self) -> String {
        let quote = |s: &str| toml::Value::String(s.to_string()).to_string();
        let list = |items: Vec<String>| format!("[{}]", items.join(", "));
        let coord = |c: &Coordinate| match c {
            Coordinate::Int(n) => n.to_string(),
            Coordinate::Text(s) => quote(s),
        };
        let mut out = String::new();
        writeln!(out, "name = {}", quote(&self.name)).unwrap();
        writeln!(
            out,
            "aliases = {}",
            list(self.aliases.iter().map(|a| quote(a)).collect())
        )
        .unwrap();
        writeln!(out, "symbol = {}", quote(&self.symbol)).unwrap();
        writeln!(out, "family = {}", quote(&self.family)).unwrap();
        writeln!(out, "field_order = {}", self.field_order).unwrap();
        writeln!(
            out,
            "degrees = {}",
            list(self.degrees.iter().map(u32::to_string).collect())
        )
        .unwrap();
        writeln!(out, "stretch = {}", self.stretch).unwrap();
        writeln!(out, "generators = [").unwrap();
        for g in &self.generators {
            let rows = g
                .iter()
                .map(|row| {
                    list(
                        row.iter()
                            .map(|e| list(e.iter().map(coord).collect()))
                            .collect(),
                    )
                })
                .collect();
            writeln!(out, "  {},", list(rows)).unwrap();
        }
        writeln!(out, "]").unwrap();
        out
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }
}

/// File name for the i-th catalog entry; the numeric prefix keeps the
/// catalog order when a directory is read back.
pub fn file_name(index: usize, name: &str) -> String {
    let mut slug = String::new();
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            slug.push(c.to_ascii_lowercase());
        } else if !slug.ends_with('-') {
            slug.push('-');
        }
    }
    format!("{:02}-{}.toml", index + 1, slug.trim_matches('-'))
}

pub fn write_catalog(specs: &[GroupSpec], dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for (i, spec) in specs.iter().enumerate() {
        let path = dir.join(file_name(i, &spec.name));
        fs::write(&path, GroupDocument::from_spec(spec).to_toml())
            .with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    Ok(written)
}

pub fn load_file(path: &Path) -> anyhow::Result<GroupSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    GroupDocument::parse(&text)
        .and_then(|d| d.to_spec())
        .with_context(|| format!("invalid catalog file {}", path.display()))
}

/// Every `*.toml` file in `dir`, in file-name order.
pub fn load_catalog(dir: &Path) -> anyhow::Result<Vec<GroupSpec>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading catalog directory {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "toml"));
    paths.sort();
    if paths.is_empty() {
        bail!("no .toml files in {}", dir.display());
    }
    let specs = paths
        .iter()
        .map(|p| load_file(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    for (i, a) in specs.iter().enumerate() {
        if specs[..i].iter().any(|b| b.name == a.name) {
            bail!("duplicate group name {} in {}", a.name, dir.display());
        }
    }
    Ok(specs)
}

/// The built-in catalog, or the one stored in `dir`.
pub fn catalog(dir: Option<&Path>) -> anyhow::Result<Vec<GroupSpec>> {
    match dir {
        Some(d) => load_catalog(d),
        None => Ok(builtin()),
    }
}

//! Built-in generator matrices.
//!
//! Every entry is validated by the test suite: presentation relations, group
//! order, reflection count and Molien degrees.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::symbol::ShephardSymbol;
use crate::error::{Error, Result};
use crate::field::Cyclotomic;
use crate::linalg::Matrix;

pub type CMatrix = Matrix<Cyclotomic>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Exceptional Shephard groups.
    ShephardExceptional,
    /// The imprimitive groups G(r,1,ℓ), including the cyclic groups G(p,1,1).
    Wreath,
    /// Real reflection groups.
    Coxeter,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::ShephardExceptional, Family::Wreath, Family::Coxeter];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::ShephardExceptional => "shephard-exceptional",
            Family::Wreath => "wreath",
            Family::Coxeter => "coxeter",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| {
                f.as_str().eq_ignore_ascii_case(s)
                    || (s.eq_ignore_ascii_case("shephard") && *f == Family::ShephardExceptional)
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// Catalog data for one group: generating reflections over ℚ(ζₙ).
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    pub name: String,
    pub aliases: Vec<String>,
    pub symbol: ShephardSymbol,
    pub family: Family,
    pub field_order: u32,
    pub generators: Vec<CMatrix>,
    pub degrees: Vec<u32>,
    /// Large groups for which only enumeration and complex checks run.
    pub stretch: bool,
}

impl GroupSpec {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn expected_order(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    pub fn matches_key(&self, key: &str) -> bool {
        let key = normalize_key(key);
        normalize_key(&self.name) == key
            || self.aliases.iter().any(|a| normalize_key(a) == key)
            || self.symbol.to_string() == key
    }

    /// Structural sanity: square generators of size ℓ in the stated field,
    /// one per symbol node, nondecreasing degrees.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(format!("{}: {m}", self.name)));
        let l = self.generators.len();
        if l == 0 {
            return bad("no generators".into());
        }
        if self.symbol.rank() != l {
            return bad(format!(
                "symbol {} has rank {} but {l} generators are given",
                self.symbol,
                self.symbol.rank()
            ));
        }
        if self.degrees.len() != l {
            return bad(format!("{} degrees for rank {l}", self.degrees.len()));
        }
        if self.degrees.windows(2).any(|w| w[0] > w[1]) || self.degrees.contains(&0) {
            return bad("degrees must be positive and nondecreasing".into());
        }
        if self.field_order == 0 || self.field_order as usize > crate::field::MAX_ORDER {
            return bad(format!("field order {} out of range", self.field_order));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.rows() != l || g.cols() != l {
                return bad(format!(
                    "generator {i} is {}x{}, expected {l}x{l}",
                    g.rows(),
                    g.cols()
                ));
            }
            if g.entries().iter().any(|x| x.order() != self.field_order) {
                return bad(format!(
                    "generator {i} has entries outside the field of order {}",
                    self.field_order
                ));
            }
        }
        Ok(())
    }
}

pub fn normalize_key(key: &str) -> String {
    key.chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .flat_map(char::to_uppercase)
        .collect()
}

/// Finds a catalog entry by name, alias or symbol. A key that looks like a
/// symbol but does not parse yields the parse error.
pub fn lookup<'a>(specs: &'a [GroupSpec], key: &str) -> Result<&'a GroupSpec> {
    if let Some(spec) = specs.iter().find(|s| s.matches_key(key)) {
        return Ok(spec);
    }
    if key.contains('[') || key.trim().bytes().all(|b| b.is_ascii_digit()) {
        let sym: ShephardSymbol = key.parse()?;
        if let Some(spec) = specs.iter().find(|s| s.symbol == sym) {
            return Ok(spec);
        }
    }
    Err(Error::UnknownGroup {
        key: key.to_string(),
        available: specs.iter().map(|s| s.name.clone()).collect(),
    })
}

/// The built-in catalog in listing order.
pub fn builtin() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for p in 2..=8 {
        out.push(cyclic(p));
    }
    for (r, l) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        out.push(wreath(r, l));
    }
    out.push(coxeter_a(2));
    out.push(coxeter_a(3));
    out.push(b2());
    out.push(b3());
    out.push(h3());
    for m in 5..=8 {
        out.push(dihedral(m));
    }
    out.extend(exceptional_rank2());
    out.extend(stretch());
    out
}

fn z(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::zeta_pow(n, k)
}

fn c(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::from_int(n, k)
}

fn sum(n: u32, terms: &[(i64, i64)]) -> Cyclotomic {
    terms.iter().fold(Cyclotomic::zero(n), |acc, &(coef, pow)| {
        &acc + &(&c(n, coef) * &z(n, pow))
    })
}

fn sym(p: &[u32], q: &[u32]) -> ShephardSymbol {
    ShephardSymbol::new(p.to_vec(), q.to_vec()).expect("catalog symbol")
}

fn spec(
    name: &str,
    aliases: &[&str],
    symbol: ShephardSymbol,
    family: Family,
    field_order: u32,
    generators: Vec<CMatrix>,
    degrees: &[u32],
) -> GroupSpec {
    GroupSpec {
        name: name.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        symbol,
        family,
        field_order,
        generators,
        degrees: degrees.to_vec(),
        stretch: false,
    }
}

/// Reflections rᵢ = I − eᵢ·Cᵢ, where Cᵢ is row i of `cartan`, i.e.
/// rᵢ(eⱼ) = eⱼ − C_{ij} eᵢ. The diagonal entry C_{ii} is 1 − λᵢ for the
/// nontrivial eigenvalue λᵢ.
pub fn reflections_from_cartan(cartan: &CMatrix) -> Vec<CMatrix> {
    let n = cartan.rows();
    let ctx = cartan.ctx();
    (0..n)
        .map(|i| {
            let mut r = Matrix::identity(n, ctx);
            for j in 0..n {
                r[(i, j)] = &r[(i, j)] - &cartan[(i, j)];
            }
            r
        })
        .collect()
}

fn diag_first(n: usize, order: u32, first: Cyclotomic) -> CMatrix {
    let mut m = Matrix::identity(n, order);
    m[(0, 0)] = first;
    m
}

fn swap(n: usize, order: u32, i: usize) -> CMatrix {
    let mut m = Matrix::identity(n, order);
    m[(i, i)] = c(order, 0);
    m[(i + 1, i + 1)] = c(order, 0);
    m[(i, i + 1)] = c(order, 1);
    m[(i + 1, i)] = c(order, 1);
    m
}

fn signed_permutation_generators(l: usize, order: u32, first: Cyclotomic) -> Vec<CMatrix> {
    let mut gens = vec![diag_first(l, order, first)];
    gens.extend((0..l - 1).map(|i| swap(l, order, i)));
    gens
}

fn wreath_symbol(r: u32, l: usize) -> ShephardSymbol {
    let mut p = vec![r];
    p.extend(core::iter::repeat_n(2, l - 1));
    let mut q = vec![4];
    q.extend(core::iter::repeat_n(3, l.saturating_sub(2)));
    q.truncate(l - 1);
    sym(&p, &q)
}

fn cyclic(p: u32) -> GroupSpec {
    let g = Matrix::from_rows(vec![vec![z(p, 1)]], p);
    spec(
        &format!("C{p}"),
        &[&format!("G({p},1,1)")],
        sym(&[p], &[]),
        Family::Wreath,
        p,
        vec![g],
        &[p],
    )
}

fn wreath(r: u32, l: usize) -> GroupSpec {
    let degrees: Vec<u32> = (1..=l as u32).map(|k| k * r).collect();
    spec(
        &format!("G({r},1,{l})"),
        &[],
        wreath_symbol(r, l),
        Family::Wreath,
        r,
        signed_permutation_generators(l, r, z(r, 1)),
        &degrees,
    )
}

fn cartan(order: u32, rows: Vec<Vec<Cyclotomic>>) -> CMatrix {
    Matrix::from_rows(rows, order)
}

fn coxeter_a(l: usize) -> GroupSpec {
    let rows = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| match i.abs_diff(j) {
                    0 => c(1, 2),
                    1 => c(1, -1),
                    _ => c(1, 0),
                })
                .collect()
        })
        .collect();
    let degrees: Vec<u32> = (2..=l as u32 + 1).collect();
    let p = vec![2; l];
    let q = vec![3; l - 1];
    spec(
        &format!("A{l}"),
        &[],
        sym(&p, &q),
        Family::Coxeter,
        1,
        reflections_from_cartan(&cartan(1, rows)),
        &degrees,
    )
}

fn b2() -> GroupSpec {
    spec(
        "B2",
        &["I2(4)"],
        wreath_symbol(2, 2),
        Family::Coxeter,
        4,
        signed_permutation_generators(2, 4, c(4, -1)),
        &[2, 4],
    )
}

fn b3() -> GroupSpec {
    spec(
        "B3",
        &[],
        wreath_symbol(2, 3),
        Family::Coxeter,
        1,
        signed_permutation_generators(3, 1, c(1, -1)),
        &[2, 4, 6],
    )
}

fn h3() -> GroupSpec {
    let n = 5;
    // 4cos²(π/5) = 2 + ζ₅ + ζ₅⁴
    let golden_sq = sum(n, &[(2, 0), (1, 1), (1, 4)]);
    let rows = vec![
        vec![c(n, 2), c(n, -1), c(n, 0)],
        vec![-&golden_sq, c(n, 2), c(n, -1)],
        vec![c(n, 0), c(n, -1), c(n, 2)],
    ];
    spec(
        "H3",
        &[],
        sym(&[2, 2, 2], &[5, 3]),
        Family::Coxeter,
        n,
        reflections_from_cartan(&cartan(n, rows)),
        &[2, 6, 10],
    )
}

fn dihedral(m: u32) -> GroupSpec {
    // 4cos²(π/m) = 2 + ζₘ + ζₘ⁻¹, rational for m = 6
    let (n, w) = if m == 6 {
        (1, c(1, 3))
    } else {
        (m, sum(m, &[(2, 0), (1, 1), (1, -1)]))
    };
    let rows = vec![vec![c(n, 2), c(n, -1)], vec![-&w, c(n, 2)]];
    spec(
        &format!("I2({m})"),
        &[],
        sym(&[2, 2], &[m]),
        Family::Coxeter,
        n,
        reflections_from_cartan(&cartan(n, rows)),
        &[2, m],
    )
}

/// Rank 2 with C₀₁ = 1 and C₁₀ = `x`.
fn rank2(order: u32, lambda: [Cyclotomic; 2], x: Cyclotomic) -> Vec<CMatrix> {
    let one = c(order, 1);
    let rows = vec![
        vec![&one - &lambda[0], one.clone()],
        vec![x, &one - &lambda[1]],
    ];
    reflections_from_cartan(&cartan(order, rows))
}

fn exceptional_rank2() -> Vec<GroupSpec> {
    let w3 = || z(3, 1);
    let g4 = spec(
        "3[3]3",
        &["G4"],
        sym(&[3, 3], &[3]),
        Family::ShephardExceptional,
        3,
        rank2(3, [w3(), w3()], -&w3()),
        &[4, 6],
    );
    let g5 = spec(
        "3[4]3",
        &["G5"],
        sym(&[3, 3], &[4]),
        Family::ShephardExceptional,
        3,
        rank2(3, [w3(), w3()], &c(3, -2) * &w3()),
        &[6, 12],
    );
    let g8 = spec(
        "4[3]4",
        &["G8"],
        sym(&[4, 4], &[3]),
        Family::ShephardExceptional,
        4,
        rank2(4, [z(4, 1), z(4, 1)], -&z(4, 1)),
        &[8, 12],
    );
    let g6 = spec(
        "3[6]2",
        &["G6"],
        sym(&[3, 2], &[6]),
        Family::ShephardExceptional,
        12,
        rank2(
            12,
            [z(12, 4), c(12, -1)],
            sum(12, &[(2, 0), (-1, 1), (-1, 2), (1, 3)]),
        ),
        &[4, 12],
    );
    vec![g4, g5, g8, g6]
}

/// Rank 3 with C₀₁ = C₁₂ = 1, C₀₂ = C₂₀ = 0 and the given C₁₀, C₂₁.
fn rank3(order: u32, lambda: [Cyclotomic; 3], c10: Cyclotomic, c21: Cyclotomic) -> Vec<CMatrix> {
    let one = c(order, 1);
    let zero = c(order, 0);
    let rows = vec![
        vec![&one - &lambda[0], one.clone(), zero.clone()],
        vec![c10, &one - &lambda[1], one.clone()],
        vec![zero, c21, &one - &lambda[2]],
    ];
    reflections_from_cartan(&cartan(order, rows))
}

fn stretch() -> Vec<GroupSpec> {
    let w3 = || z(3, 1);
    let mut g25 = spec(
        "3[3]3[3]3",
        &["G25"],
        sym(&[3, 3, 3], &[3, 3]),
        Family::ShephardExceptional,
        3,
        rank3(3, [w3(), w3(), w3()], -&w3(), -&w3()),
        &[6, 9, 12],
    );
    g25.stretch = true;
    let mut g26 = spec(
        "2[4]3[3]3",
        &["G26"],
        sym(&[2, 3, 3], &[4, 3]),
        Family::ShephardExceptional,
        3,
        rank3(3, [c(3, -1), w3(), w3()], &c(3, 1) - &w3(), -&w3()),
        &[6, 12, 18],
    );
    g26.stretch = true;
    vec![g25, g26]
}

//! Plain-text export of coset complexes.
//!
//! One record per line, fields separated by single spaces:
//!
//! ```text
//! # shephard-lab coset complex
//! format 1
//! group <name>
//! rank <l>
//! order <|G|>
//! vertex <id> <color> <coset representative>
//! face <dim> <index> <vertex ids, ascending>
//! boundary <dim> <index> <face index in dim-1>:<sign> ...
//! chamber <element> <face index in the top dimension>
//! betti <reduced Betti numbers from dimension 0>
//! ```
//!
//! Vertices are numbered color by color; `face` lines list every nonempty
//! face by dimension, and `boundary` lines give the signed boundary of each
//! face of dimension at least 1, signs being (−1)^position.

use std::fmt::Write as _;

use shephard_core::complexes::CosetComplex;
use shephard_core::group::ReflectionGroup;

pub fn export_complex(group: &ReflectionGroup, cc: &CosetComplex) -> String {
    let l = cc.rank();
    let full = (1u32 << l) - 1;
    let sc = cc.complex();
    let mut out = String::new();
    writeln!(out, "# shephard-lab coset complex").unwrap();
    writeln!(out, "format 1").unwrap();
    writeln!(out, "group {}", group.name()).unwrap();
    writeln!(out, "rank {l}").unwrap();
    writeln!(out, "order {}", group.order()).unwrap();
    let mut id = 0;
    for color in 0..l {
        for rep in &cc.cosets(full ^ (1 << color)).representatives {
            writeln!(out, "vertex {id} {color} {rep}").unwrap();
            id += 1;
        }
    }
    for dim in 0..l as isize {
        for (i, f) in sc.faces(dim).iter().enumerate() {
            let vs: Vec<String> = f.iter().map(u32::to_string).collect();
            writeln!(out, "face {dim} {i} {}", vs.join(" ")).unwrap();
        }
    }
    let chain = sc.chain_complex();
    for (k, cols) in chain.boundaries.iter().enumerate().skip(1) {
        for (i, col) in cols.iter().enumerate() {
            let terms: Vec<String> = col.iter().map(|(j, s)| format!("{j}:{s}")).collect();
            writeln!(out, "boundary {k} {i} {}", terms.join(" ")).unwrap();
        }
    }
    for x in 0..group.order() {
        let face = sc.face_index(cc.chamber(x)).expect("chambers are faces");
        writeln!(out, "chamber {x} {face}").unwrap();
    }
    let betti: Vec<String> = chain
        .reduced_betti()
        .nonnegative()
        .iter()
        .map(usize::to_string)
        .collect();
    writeln!(out, "betti {}", betti.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use shephard_core::group::{builtin, lookup};

    #[test]
    fn octagon_export() {
        let specs = builtin();
        let g = ReflectionGroup::generate(lookup(&specs, "B2").unwrap()).unwrap();
        let text = export_complex(&g, &CosetComplex::build(&g));
        let count = |tag: &str| text.lines().filter(|l| l.starts_with(tag)).count();
        assert_eq!(count("vertex "), 8);
        assert_eq!(count("face 0 "), 8);
        assert_eq!(count("face 1 "), 8);
        assert_eq!(count("boundary 1 "), 8);
        assert_eq!(count("chamber "), 8);
        assert!(text.ends_with("betti 0 1\n"));
        for line in text.lines().filter(|l| l.starts_with("boundary 1 ")) {
            let signs: Vec<&str> = line
                .split(' ')
                .skip(3)
                .map(|t| t.split(':').nth(1).unwrap())
                .collect();
            assert_eq!(signs, ["-1", "1"]);
        }
    }
}

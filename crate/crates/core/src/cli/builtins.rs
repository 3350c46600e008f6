//! Builtin example codes and QCAs.

use crate::code::PauliCode;
use crate::error::{Error, Result};
use crate::qca::CliffordQca;
use crate::ring::{LaurentMatrix, LaurentPoly};

pub enum Builtin {
    Code(PauliCode),
    Qca(CliffordQca),
}

/// `(name, description)` of every builtin.
pub const BUILTINS: &[(&str, &str)] = &[
    ("toric2d", "toric code, p = 2, two dimensions"),
    ("toric2d-p3", "Z/3 toric code, two dimensions"),
    ("toric2d-stacked", "two decoupled copies of toric2d"),
    ("toric3d", "three-dimensional toric code, p = 2"),
    ("trivial2d", "one qubit per site, every site fixed by Z"),
    ("trivial3d", "trivial code in three dimensions"),
    ("vertex-only", "toric2d without its plaquette terms (not Lagrangian)"),
    ("nonmobile", "layers of toric2d stacked along z (charges move only in-plane)"),
    ("shift-qca", "translation by x on one qubit per site"),
    ("swap-qca", "X/Z exchange on one qubit per site"),
];

fn code(p: u64, m: usize, q: usize, cols: &[&[&str]]) -> Result<PauliCode> {
    let cols = cols
        .iter()
        .map(|c| c.iter().map(|s| LaurentPoly::parse(p, m, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PauliCode::from_generators(p, m, q, &cols)
}

pub fn toric2d() -> PauliCode {
    code(2, 2, 2, &[&["1 + x^-1", "1 + y^-1", "0", "0"], &["0", "0", "1 + y", "1 + x"]]).expect("builtin")
}

pub fn toric2d_p3() -> PauliCode {
    code(3, 2, 2, &[&["1 - x^-1", "1 - y^-1", "0", "0"], &["0", "0", "1 - y", "x - 1"]]).expect("builtin")
}

pub fn toric2d_stacked() -> PauliCode {
    code(
        2,
        2,
        4,
        &[
            &["1 + x^-1", "1 + y^-1", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "1 + y", "1 + x", "0", "0"],
            &["0", "0", "1 + x^-1", "1 + y^-1", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "1 + y", "1 + x"],
        ],
    )
    .expect("builtin")
}

pub fn toric3d() -> PauliCode {
    code(
        2,
        3,
        3,
        &[
            &["1 + x^-1", "1 + y^-1", "1 + z^-1", "0", "0", "0"],
            &["0", "0", "0", "1 + y", "1 + x", "0"],
            &["0", "0", "0", "0", "1 + z", "1 + y"],
            &["0", "0", "0", "1 + z", "0", "1 + x"],
        ],
    )
    .expect("builtin")
}

/// `q` qudits per site, each fixed by its own Z.
pub fn trivial(p: u64, m: usize, q: usize) -> Result<PauliCode> {
    let pp = crate::ring::check_prime(p)?;
    let mut sigma = LaurentMatrix::zeros(pp, m, 2 * q, q);
    for i in 0..q {
        sigma.set(q + i, i, LaurentPoly::one(pp, m));
    }
    PauliCode::new(p, m, q, sigma)
}

pub fn vertex_only() -> PauliCode {
    code(2, 2, 2, &[&["1 + x^-1", "1 + y^-1", "0", "0"]]).expect("builtin")
}

pub fn nonmobile() -> PauliCode {
    code(2, 3, 2, &[&["1 + x^-1", "1 + y^-1", "0", "0"], &["0", "0", "1 + y", "1 + x"]]).expect("builtin")
}

pub fn lookup(name: &str) -> Result<Builtin> {
    Ok(match name {
        "toric2d" => Builtin::Code(toric2d()),
        "toric2d-p3" => Builtin::Code(toric2d_p3()),
        "toric2d-stacked" => Builtin::Code(toric2d_stacked()),
        "toric3d" => Builtin::Code(toric3d()),
        "trivial2d" => Builtin::Code(trivial(2, 2, 1)?),
        "trivial3d" => Builtin::Code(trivial(2, 3, 1)?),
        "vertex-only" => Builtin::Code(vertex_only()),
        "nonmobile" => Builtin::Code(nonmobile()),
        "shift-qca" => Builtin::Qca(CliffordQca::shift(2, 2, 1, &[1, 0])?),
        "swap-qca" => Builtin::Qca(CliffordQca::swap(2, 2, 1)?),
        other => return Err(Error::Invalid(format!("unknown example '{other}'"))),
    })
}

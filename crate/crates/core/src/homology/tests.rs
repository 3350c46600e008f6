use super::*;
use crate::ring::LaurentPoly;

fn col(p: u64, m: usize, parts: &[&str]) -> Vec<LaurentPoly> {
    parts.iter().map(|s| LaurentPoly::parse(p, m, s).unwrap()).collect()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn toric() -> PauliCode {
    PauliCode::from_generators(
        2,
        2,
        2,
        &[
            col(2, 2, &["1 + x^-1", "1 + y^-1", "0", "0"]),
            col(2, 2, &["0", "0", "1 + y", "1 + x"]),
        ],
    )
    .unwrap()
}

fn trivial(p: u64, m: usize, q: usize) -> PauliCode {
    let cols: Vec<Vec<LaurentPoly>> = (0..q)
        .map(|j| {
            let mut c = vec![LaurentPoly::zero(p as u32, m); 2 * q];
            c[q + j] = LaurentPoly::one(p as u32, m);
            c
        })
        .collect();
    PauliCode::from_generators(p, m, q, &cols).unwrap()
}

fn toric3d() -> PauliCode {
    PauliCode::from_generators(
        2,
        3,
        3,
        &[
            col(2, 3, &["1 + x^-1", "1 + y^-1", "1 + z^-1", "0", "0", "0"]),
            col(2, 3, &["0", "0", "0", "1 + y", "1 + x", "0"]),
            col(2, 3, &["0", "0", "0", "0", "1 + z", "1 + y"]),
            col(2, 3, &["0", "0", "0", "1 + z", "0", "1 + x"]),
        ],
    )
    .unwrap()
}

#[test]
fn trivial_resolution_has_length_one() {
    let res = free_resolution(&trivial(3, 2, 2), 2, &cfg()).unwrap();
    assert_eq!(res.len(), 1);
    assert!(res.is_terminated());
}

#[test]
fn toric_resolution_stops_after_sigma() {
    // the vertex and plaquette columns are independent over R
    let res = free_resolution(&toric(), 2, &cfg()).unwrap();
    assert_eq!(res.len(), 1);
    assert!(res.is_terminated());
    assert_eq!(res.rank(2), 0);
}

#[test]
fn duplicated_generator_gives_difference_syzygy() {
    let g = col(3, 1, &["1 + x", "0"]);
    let code = PauliCode::from_generators(3, 1, 1, &[g.clone(), g]).unwrap();
    let res = free_resolution(&code, 1, &cfg()).unwrap();
    assert_eq!(res.len(), 1);
    let res = free_resolution(&code, 3, &cfg()).unwrap();
    assert!(res.composites_vanish());
    let d2 = res.map(2).unwrap();
    let diff = col(3, 1, &["1", "-1"]);
    assert!(groebner::membership(&diff, &ModulePresentation::column_span(d2), &cfg()).unwrap());
}

#[test]
fn toric3d_resolution_is_exact() {
    let code = toric3d();
    let res = free_resolution(&code, 3, &cfg()).unwrap();
    assert!(res.composites_vanish());
    assert!(res.len() >= 2);
    // ker d_1 = im d_2
    let k = groebner::kernel(res.map(1).unwrap(), &cfg()).unwrap();
    let img = ModulePresentation::column_span(res.map(2).unwrap());
    for g in &k.generators {
        assert!(groebner::membership(g, &img, &cfg()).unwrap());
    }
}

#[test]
fn complex_composites_vanish() {
    for code in [toric(), trivial(5, 2, 1), toric3d()] {
        let mut cx = CodeComplex::new(&code, &cfg()).unwrap();
        assert!(cx.composites_vanish().unwrap());
        assert!(cx.delta().try_mul(code.sigma()).unwrap().is_zero());
        let d = cx.resolution().map(1).unwrap();
        assert_eq!(&d.dagger().dagger(), d);
    }
}

#[test]
fn toric_charges() {
    let e0 = charge_module(&toric(), 0, &cfg()).unwrap();
    assert_eq!(e0.krull_dim, 0);
    assert_eq!(e0.fp_dimension, FpDimension::Finite(2));
    assert_eq!(e0.cardinality(), "4");
    let e1 = charge_module(&toric(), 1, &cfg()).unwrap();
    assert!(e1.is_zero());
    assert_eq!(e1.cardinality(), "1");
    let rep = is_fully_mobile(&toric(), &cfg()).unwrap();
    assert!(rep.fully_mobile);
    assert_eq!(rep.degrees.len(), 2);
    assert!(pairing_duality_check(&toric(), &cfg()).unwrap().holds);
}

#[test]
fn trivial_charges_vanish() {
    for m in 1..=3 {
        let code = trivial(3, m, 1);
        let rep = is_fully_mobile(&code, &cfg()).unwrap();
        assert!(rep.fully_mobile);
        assert!(rep.degrees.iter().all(|d| d.krull_dim == -1 && d.cardinality == "1"));
        assert!(pairing_duality_check(&code, &cfg()).unwrap().holds);
    }
}

#[test]
fn non_lagrangian_is_rejected() {
    let code = PauliCode::from_generators(2, 2, 1, &[col(2, 2, &["1 + x", "0"])]).unwrap();
    assert!(code.is_isotropic());
    assert!(matches!(is_fully_mobile(&code, &cfg()), Err(Error::Precondition(_))));
    assert!(matches!(charge_module(&code, 0, &cfg()), Err(Error::Precondition(_))));
}

#[test]
fn toric3d_duality() {
    let (charges, mobility, duality) = analyze(&toric3d(), &cfg()).unwrap();
    assert!(mobility.fully_mobile);
    assert_eq!(charges[0].fp_dimension, FpDimension::Finite(1));
    assert_eq!(charges[1].fp_dimension, FpDimension::Finite(1));
    assert!(charges[2].is_zero());
    assert!(duality.unwrap().holds);
}

#[test]
fn layered_toric_is_not_mobile() {
    let l = |s: &[&str]| col(2, 3, s);
    let code = PauliCode::from_generators(
        2,
        3,
        2,
        &[l(&["1 + x^-1", "1 + y^-1", "0", "0"]), l(&["0", "0", "1 + y", "1 + x"])],
    )
    .unwrap();
    let rep = is_fully_mobile(&code, &cfg()).unwrap();
    assert!(!rep.fully_mobile);
    assert_eq!(rep.degrees[0].krull_dim, 1);
    assert_eq!(rep.degrees[0].fp_dimension, FpDimension::Infinite);
    assert!(matches!(
        pairing_duality_check(&code, &cfg()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn coarse_grain_identity() {
    let t = toric();
    let c = coarse_grain(&t, &[1, 1]).unwrap();
    assert_eq!(c, t);
    assert!(coarse_grain(&t, &[0, 1]).is_err());
    assert!(coarse_grain(&t, &[1]).is_err());
}

#[test]
fn coarse_grained_toric_keeps_its_charges() {
    let c = coarse_grain(&toric(), &[2, 1]).unwrap();
    assert_eq!(c.qudits(), 4);
    assert_eq!(c.num_generators(), 4);
    assert!(c.is_isotropic());
    assert!(c.is_lagrangian(&cfg()).unwrap());
    let c = coarse_grain(&toric(), &[2, 2]).unwrap();
    assert!(c.is_lagrangian(&cfg()).unwrap());
    let e0 = charge_module(&c, 0, &cfg()).unwrap();
    assert_eq!(e0.fp_dimension, FpDimension::Finite(2));
}

#[test]
fn coarse_grain_moves_monomials_into_boxes() {
    // x^3 on qudit 0 with factor 2: 3 = 2*1 + 1, so offset 1, coarse X^1
    let code = PauliCode::from_generators(3, 1, 1, &[col(3, 1, &["x^3", "0"])]).unwrap();
    let c = coarse_grain(&code, &[2]).unwrap();
    let first = c.sigma().column(0);
    assert_eq!(first, col(3, 1, &["0", "x", "0", "0"]));
    let second = c.sigma().column(1);
    assert_eq!(second, col(3, 1, &["x^2", "0", "0", "0"]));
}

#[test]
fn coarse_grain_keeps_custom_forms_skew() {
    let p = 3;
    let om = LaurentMatrix::from_rows(
        p,
        1,
        vec![col(3, 1, &["0", "x"]), col(3, 1, &["-x^-1", "0"])],
    )
    .unwrap();
    let code = PauliCode::with_form(3, 1, 1, LaurentMatrix::zeros(p, 1, 2, 0), Some(om)).unwrap();
    let c = coarse_grain(&code, &[3]).unwrap();
    let om2 = c.omega();
    assert_eq!(om2.dagger(), om2.neg());
    assert!(crate::code::unimodular_check(&om2).unwrap());
}

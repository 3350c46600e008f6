use super::*;
use crate::ring::LaurentPoly;

fn poly(p: u64, m: usize, s: &str) -> LaurentPoly {
    LaurentPoly::parse(p, m, s).unwrap()
}

fn vecp(p: u64, m: usize, parts: &[&str]) -> Vec<LaurentPoly> {
    parts.iter().map(|s| poly(p, m, s)).collect()
}

fn pres(p: u64, m: usize, rank: usize, gens: &[&[&str]]) -> ModulePresentation {
    ModulePresentation::new(
        p as u32,
        m,
        rank,
        gens.iter().map(|g| vecp(p, m, g)).collect(),
    )
    .unwrap()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

#[test]
fn laurent_to_poly_examples() {
    let rep = PolyRep::new(2, 2).unwrap();
    let v = rep.laurent_to_poly(&vecp(2, 2, &["x + x^-1"])).unwrap();
    assert_eq!(v.to_string(), "[u1 + v1]");
    let one = rep.laurent_to_poly(&vecp(2, 2, &["1"])).unwrap();
    assert_eq!(one.to_string(), "[1]");
    let w = rep.laurent_to_poly(&vecp(2, 2, &["x*y^-3"])).unwrap();
    assert_eq!(w.to_string(), "[u1*v2^3]");
    for s in ["x + x^-1", "1", "x*y^-3 + 2*y"] {
        let f = vecp(2, 2, &[s, "x^-2"]);
        assert_eq!(rep.poly_to_laurent(&rep.laurent_to_poly(&f).unwrap()), f);
    }
}

#[test]
fn whole_module_reduces_everything() {
    let gb = groebner(&pres(3, 1, 1, &[&["1"]]), &cfg()).unwrap();
    assert!(gb.contains(&vecp(3, 1, &["x^5 + 2*x^-1"])).unwrap());
    assert_eq!(gb.krull_dim(), -1);
    assert_eq!(gb.fp_dimension().unwrap(), FpDimension::Finite(0));
}

#[test]
fn empty_generators_enforce_relations() {
    let gb = groebner(&pres(2, 1, 1, &[]), &cfg()).unwrap();
    let rep = gb.rep();
    // u1 * v1 reduces to 1
    let uv = PolyVector {
        rep,
        rank: 1,
        terms: vec![Term {
            pos: 0,
            mono: Mono::from_exps(&[1, 1]).unwrap(),
            c: 1,
        }],
    };
    assert_eq!(gb.normal_form(&uv).unwrap().to_string(), "[1]");
}

#[test]
fn membership_through_the_relations() {
    // (1 + v1) = v1 (1 + u1) modulo u1 v1 - 1
    let gens = pres(2, 1, 1, &[&["1 + x"]]);
    assert!(membership(&vecp(2, 1, &["1 + x^-1"]), &gens, &cfg()).unwrap());
    assert!(!membership(&vecp(2, 1, &["1"]), &gens, &cfg()).unwrap());
}

#[test]
fn normal_form_examples() {
    let gens = pres(3, 1, 1, &[&["x - 1"]]);
    let gb = groebner(&gens, &cfg()).unwrap();
    let nf = gb.normal_form_laurent(&vecp(3, 1, &["x"])).unwrap();
    assert_eq!(nf, vecp(3, 1, &["1"]));
    assert!(gb
        .normal_form_laurent(&vecp(3, 1, &["x - 1"]))
        .unwrap()
        .iter()
        .all(LaurentPoly::is_zero));
    assert!(gb
        .normal_form_laurent(&vecp(3, 1, &["0"]))
        .unwrap()
        .iter()
        .all(LaurentPoly::is_zero));
    let v = gb.normal_form_of_laurent(&vecp(3, 1, &["x^3 + 2*x^-2"])).unwrap();
    assert_eq!(gb.normal_form(&v).unwrap(), v);
}

#[test]
fn basis_is_reduced_and_order_independent() {
    let a = pres(2, 2, 2, &[&["1 + x", "y"], &["x*y", "1 + y^-1"], &["x^-1", "0"]]);
    let mut b = a.clone();
    b.generators.reverse();
    let ga = groebner(&a, &cfg()).unwrap();
    let gb = groebner(&b, &cfg()).unwrap();
    assert_eq!(ga.dump(), gb.dump());
    assert!(ga.satisfies_buchberger_criterion());
    assert!(ga.is_autoreduced());
}

#[test]
fn koszul_syzygy() {
    let (f, g) = ("1 + x", "1 + y");
    let s = syzygies(&pres(3, 2, 1, &[&[f], &[g]]), &cfg()).unwrap();
    assert_eq!(s.rank, 2);
    // (g, -f) must lie in the syzygy span, and every syzygy must annihilate
    let koszul = vec![poly(3, 2, g), -&poly(3, 2, f)];
    assert!(membership(&koszul, &s, &cfg()).unwrap());
    for z in &s.generators {
        let sum = &(&z[0] * &poly(3, 2, f)) + &(&z[1] * &poly(3, 2, g));
        assert!(sum.is_zero());
    }
}

#[test]
fn syzygies_of_a_free_generator_vanish() {
    let s = syzygies(&pres(2, 1, 1, &[&["1"]]), &cfg()).unwrap();
    assert!(s.generators.is_empty());
}

#[test]
fn kernel_examples() {
    let id = LaurentMatrix::identity(2, 1, 3);
    assert!(kernel(&id, &cfg()).unwrap().generators.is_empty());

    let row = LaurentMatrix::from_rows(2, 1, vec![vecp(2, 1, &["1 + x", "1 + x"])]).unwrap();
    let k = kernel(&row, &cfg()).unwrap();
    assert!(membership(&vecp(2, 1, &["1", "1"]), &k, &cfg()).unwrap());

    let zero = LaurentMatrix::zeros(3, 2, 2, 3);
    let k = kernel(&zero, &cfg()).unwrap();
    assert_eq!(k.generators.len(), 3);
    assert_eq!(krull_dim(&k, &cfg()).unwrap(), -1);
}

#[test]
fn dimension_examples() {
    let point = pres(2, 2, 1, &[&["x - 1"], &["y - 1"]]);
    assert_eq!(krull_dim(&point, &cfg()).unwrap(), 0);
    assert_eq!(fp_dimension(&point, &cfg()).unwrap(), FpDimension::Finite(1));
    let gb = groebner(&point, &cfg()).unwrap();
    for s in ["x", "y", "x^-3*y^2"] {
        assert_eq!(gb.normal_form_laurent(&vecp(2, 2, &[s])).unwrap(), vecp(2, 2, &["1"]));
    }

    let line = pres(2, 2, 1, &[&["x - 1"]]);
    assert_eq!(krull_dim(&line, &cfg()).unwrap(), 1);
    assert_eq!(fp_dimension(&line, &cfg()).unwrap(), FpDimension::Infinite);
    // the powers of y stay independent: y^k has a distinct normal form for each k
    let gb = groebner(&line, &cfg()).unwrap();
    let forms: Vec<_> = (-3..=3)
        .map(|k| gb.normal_form_laurent(&[LaurentPoly::monomial(2, 2, vec![0, k], 1)]).unwrap())
        .collect();
    for i in 0..forms.len() {
        for j in (i + 1)..forms.len() {
            assert_ne!(forms[i], forms[j]);
        }
    }

    let whole = pres(5, 2, 1, &[&["1"]]);
    assert_eq!(krull_dim(&whole, &cfg()).unwrap(), -1);
    let free = pres(5, 2, 2, &[]);
    assert_eq!(krull_dim(&free, &cfg()).unwrap(), 2);
}

#[test]
fn resource_limits_are_errors() {
    let tight = GbConfig {
        max_spairs: 1,
        max_degree: 400,
    };
    let a = pres(2, 2, 2, &[&["1 + x", "y"], &["x*y", "1 + y^-1"], &["x^-1 + y^2", "x"]]);
    assert!(matches!(groebner(&a, &tight), Err(Error::ResourceLimit(_))));
    let low = GbConfig {
        max_spairs: 1000,
        max_degree: 1,
    };
    assert!(matches!(groebner(&a, &low), Err(Error::ResourceLimit(_))));
}

#[test]
fn too_many_variables() {
    assert!(PolyRep::new(2, 7).is_err());
}

use super::*;
use proptest::prelude::*;

fn h(p: u64) -> QuadraticSpace {
    QuadraticSpace::hyperbolic(p).unwrap()
}

fn f2_plane() -> QuadraticSpace {
    QuadraticSpace::new(2, vec![vec![1, 1], vec![0, 1]]).unwrap()
}

#[test]
fn storage_is_canonical() {
    let a = QuadraticSpace::new(5, vec![vec![1, 2], vec![0, 3]]).unwrap();
    let b = QuadraticSpace::new(5, vec![vec![1, 1], vec![1, 3]]).unwrap();
    assert_eq!(a, b);
    let c = QuadraticSpace::new(2, vec![vec![1, 0], vec![1, 1]]).unwrap();
    assert_eq!(c, f2_plane());
    assert!(QuadraticSpace::new(4, vec![]).is_err());
    assert!(QuadraticSpace::new(3, vec![vec![1, 2]]).is_err());
}

#[test]
fn bilinear_matches_polarization() {
    let v = QuadraticSpace::new(7, vec![vec![1, 3, 0], vec![0, 2, 5], vec![0, 0, 6]]).unwrap();
    let (x, y) = (vec![1, 4, 2], vec![3, 0, 5]);
    let sum: Vec<u32> = x.iter().zip(&y).map(|(a, b)| (a + b) % 7).collect();
    let pol = (7 * 3 + v.value(&sum) - v.value(&x) - v.value(&y)) % 7;
    assert_eq!(v.bilinear(&x, &y), pol);
    assert_eq!(v.bilinear(&x, &x), 2 * v.value(&x) % 7);
}

#[test]
fn radical_examples() {
    assert!(h(3).radical().is_empty());
    let z = QuadraticSpace::new(3, vec![vec![0]]).unwrap();
    assert_eq!(z.radical(), vec![vec![1]]);
    let mixed = QuadraticSpace::diagonal(3, &[1, 0]).unwrap();
    assert_eq!(mixed.radical(), vec![vec![0, 1]]);
}

#[test]
fn isotropic_examples() {
    assert_eq!(h(2).find_isotropic_vector(), Some(vec![1, 0]));
    assert_eq!(f2_plane().find_isotropic_vector(), None);
    assert_eq!(QuadraticSpace::diagonal(3, &[1]).unwrap().find_isotropic_vector(), None);
    // x² + y² over F_3 is anisotropic
    assert_eq!(QuadraticSpace::diagonal(3, &[1, 1]).unwrap().find_isotropic_vector(), None);
    // x² + y² over F_5: 1 + 4 = 0
    let v = QuadraticSpace::diagonal(5, &[1, 1]).unwrap().find_isotropic_vector().unwrap();
    assert_eq!(QuadraticSpace::diagonal(5, &[1, 1]).unwrap().value(&v), 0);
}

#[test]
fn large_spaces_use_the_fallback_solvers() {
    // p^dim above the exhaustive limit
    let big = QuadraticSpace::diagonal(1_000_003, &[1, 1, 1]).unwrap();
    let v = big.find_isotropic_vector().unwrap();
    assert_eq!(big.value(&v), 0);
    assert!(v.iter().any(|&c| c != 0));
    let mut sum = f2_plane();
    for _ in 0..10 {
        sum = sum.orthogonal_sum(&f2_plane()).unwrap();
    }
    let v = sum.find_isotropic_vector().unwrap();
    assert_eq!(sum.value(&v), 0);
    assert!(v.iter().any(|&c| c != 0));
}

#[test]
fn split_examples() {
    let (u, w, rest) = h(7).split_hyperbolic().unwrap();
    assert_eq!((h(7).value(&u), h(7).value(&w), h(7).bilinear(&u, &w)), (0, 0, 1));
    assert_eq!(rest.dim(), 0);

    let hh = h(3).orthogonal_sum(&h(3)).unwrap();
    let (_, _, rest) = hh.split_hyperbolic().unwrap();
    assert_eq!(rest.dim(), 2);
    assert!(rest.is_nondegenerate());
    assert!(rest.find_isotropic_vector().is_some());

    let d = QuadraticSpace::diagonal(5, &[1, -1]).unwrap();
    let (u, _, rest) = d.split_hyperbolic().unwrap();
    assert_eq!(d.value(&u), 0);
    assert_eq!(rest.dim(), 0);

    assert!(matches!(f2_plane().split_hyperbolic(), Err(Error::NoSolution(_))));
    assert!(matches!(
        QuadraticSpace::diagonal(3, &[1, 0]).unwrap().split_hyperbolic(),
        Err(Error::Degenerate(_))
    ));
}

#[test]
fn decompose_examples() {
    let h3 = h(2).orthogonal_sum(&h(2)).unwrap().orthogonal_sum(&h(2)).unwrap();
    let d = h3.witt_decompose().unwrap();
    assert_eq!((d.hyperbolic, d.anisotropic.dim()), (3, 0));
    let d = f2_plane().witt_decompose().unwrap();
    assert_eq!((d.hyperbolic, d.anisotropic.clone()), (0, f2_plane()));
    let one_one = QuadraticSpace::diagonal(3, &[1, 1]).unwrap();
    let d = one_one.witt_decompose().unwrap();
    assert_eq!((d.hyperbolic, d.anisotropic.dim()), (0, 2));
}

#[test]
fn witt_examples() {
    assert!(h(5).witt_class().unwrap().is_zero());
    let one = QuadraticSpace::diagonal(5, &[1]).unwrap().witt_class().unwrap();
    let minus = QuadraticSpace::diagonal(5, &[-1]).unwrap().witt_class().unwrap();
    assert!(one.add(&minus).unwrap().is_zero());
    let one3 = QuadraticSpace::diagonal(3, &[1]).unwrap().witt_class().unwrap();
    assert_eq!(one3.order(), 4);
    let four = QuadraticSpace::diagonal(3, &[1, 1, 1, 1]).unwrap().witt_decompose().unwrap();
    assert_eq!((four.hyperbolic, four.anisotropic.dim()), (2, 0));
}

#[test]
fn witt_group_structures() {
    assert_eq!(WittGroupStructure::of_prime(2), WittGroupStructure::Cyclic2);
    assert_eq!(WittGroupStructure::of_prime(3), WittGroupStructure::Cyclic4);
    assert_eq!(WittGroupStructure::of_prime(5), WittGroupStructure::KleinFour);
}

#[test]
fn arf_examples() {
    assert_eq!(h(2).arf().unwrap(), 0);
    assert_eq!(f2_plane().arf().unwrap(), 1);
    assert_eq!(h(2).orthogonal_sum(&f2_plane()).unwrap().arf().unwrap(), 1);
    assert_eq!(f2_plane().orthogonal_sum(&f2_plane()).unwrap().arf().unwrap(), 0);
    assert!(h(3).arf().is_err());
    assert!(QuadraticSpace::new(2, vec![vec![1]]).unwrap().arf().is_err());
}

#[test]
fn l_group_table() {
    assert_eq!(l_group(5, 3), LGroup::Trivial);
    assert_eq!(l_group(6, 2), LGroup::Z2);
    assert_eq!(l_group(8, 5), LGroup::Witt { p: 5 });
    assert_eq!(l_group(6, 3), LGroup::Trivial);
    assert_eq!(l_group(7, 2), LGroup::Trivial);
    assert_eq!(l_group(-4, 7), LGroup::Witt { p: 7 });
    assert_eq!(l_group(8, 5).to_string(), "Witt(Z/5)");
}

#[test]
fn square_roots() {
    for p in [3u32, 5, 7, 13, 17, 97, 1_000_003] {
        for a in [0u32, 1, 2, 3, 4, 10] {
            let a = a % p;
            match sqrt_mod(a, p) {
                Some(r) => assert_eq!(mul_mod(r, r, p), a),
                None => assert!(!is_square(a, p)),
            }
        }
    }
}

fn nondegenerate_form(p: u32, n: usize) -> impl Strategy<Value = QuadraticSpace> {
    proptest::collection::vec(proptest::collection::vec(0..p, n), n)
        .prop_map(move |m| QuadraticSpace::from_residues(p, m))
        .prop_filter("nondegenerate", |v| v.is_nondegenerate())
}

fn invertible(p: u32, n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(proptest::collection::vec(0..p, n), n)
        .prop_filter("invertible", move |m| linalg::rank(m, n, p) == n)
}

proptest! {
    #[test]
    fn arf_is_basis_independent(v in nondegenerate_form(2, 4), g in invertible(2, 4)) {
        prop_assert_eq!(v.arf().unwrap(), v.restrict(&g).arf().unwrap());
    }

    #[test]
    fn arf_is_additive(a in nondegenerate_form(2, 2), b in nondegenerate_form(2, 4)) {
        let s = a.orthogonal_sum(&b).unwrap();
        prop_assert_eq!(s.arf().unwrap(), (a.arf().unwrap() + b.arf().unwrap()) % 2);
        prop_assert_eq!(s.witt_class().unwrap().arf(), Some(s.arf().unwrap()));
    }

    #[test]
    fn witt_class_is_basis_independent(v in nondegenerate_form(5, 3), g in invertible(5, 3)) {
        prop_assert_eq!(v.witt_class().unwrap(), v.restrict(&g).witt_class().unwrap());
    }

    #[test]
    fn decomposition_preserves_dimension(v in nondegenerate_form(7, 4)) {
        let d = v.witt_decompose().unwrap();
        prop_assert_eq!(2 * d.hyperbolic + d.anisotropic.dim(), 4);
        prop_assert!(d.anisotropic.find_isotropic_vector().is_none());
    }
}

#[test]
fn witt_group_axioms() {
    for p in [2u32, 3, 5, 7] {
        let all = WittClass::all(p);
        let zero = WittClass::zero(p);
        for a in &all {
            assert_eq!(a.add(&zero).unwrap(), *a);
            assert!(a.add(&a.neg()).unwrap().is_zero());
            for b in &all {
                assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                for c in &all {
                    let l = a.add(b).unwrap().add(c).unwrap();
                    let r = a.add(&b.add(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}

use super::*;
use crate::finset::{self, element, encode};
use crate::gf2::{linear, space, Gf2Matrix};
use crate::Error;

fn abc() -> ObjectRef {
    finset::object(&["a", "b", "c"]).unwrap()
}

fn z3() -> ObjectRef {
    finset::object(&["0", "1", "2"]).unwrap()
}

fn set(n: usize) -> ObjectRef {
    finset::object(&(0..n).map(|i| i.to_string()).collect::<Vec<_>>()).unwrap()
}

fn atoms(labels: &[&str]) -> Vec<Value> {
    labels.iter().map(|l| Value::atom(*l)).collect()
}

fn path(t: &ObjectRef, images: &[&str]) -> Value {
    Value::Func(
        finset::labels(t)
            .unwrap()
            .iter()
            .zip(images)
            .map(|(s, x)| (Value::atom(s.as_str()), Value::atom(*x)))
            .collect(),
    )
}

fn rotation_flow() -> Morphism {
    let (t, om) = (z3(), abc());
    let dom = tensor_obj(&t, &om).unwrap();
    Morphism::tabulate(dom, om, |k| (k / 3 + k % 3) % 3).unwrap()
}

#[test]
fn composing_rotations() {
    let om = abc();
    let rot1 = finset::map(&om, &om, &["b", "c", "a"]).unwrap();
    let rot2 = finset::map(&om, &om, &["c", "a", "b"]).unwrap();
    assert_eq!(compose(&rot1, &rot1).unwrap(), rot2);
    assert_eq!(compose(&identity(&om).unwrap(), &rot1).unwrap(), rot1);
    assert_eq!(compose(&rot1, &identity(&om).unwrap()).unwrap(), rot1);
}

#[test]
fn compose_rejects_mismatched_types() {
    let f = identity(&abc()).unwrap();
    let g = identity(&z3()).unwrap();
    assert!(matches!(compose(&g, &f), Err(Error::TypeMismatch { .. })));
    let v = identity(&space(3)).unwrap();
    assert!(matches!(compose(&v, &f), Err(Error::BackendMismatch { .. })));
}

#[test]
fn identities() {
    assert_eq!(identity(&abc()).unwrap().table(), Some(&[0, 1, 2][..]));
    let unit = ObjectRef::unit(BackendId::FinSet);
    assert_eq!(identity(&unit).unwrap().table(), Some(&[0][..]));
    assert_eq!(identity(&space(2)).unwrap().matrix(), Some(&Gf2Matrix::identity(2)));
}

#[test]
fn tensor_of_objects_and_identities() {
    let two = finset::object(&["0", "1"]).unwrap();
    let xy = finset::object(&["x", "y"]).unwrap();
    assert_eq!(size(&tensor_obj(&two, &xy).unwrap()).unwrap(), 4);
    let id = tensor_mor(&identity(&two).unwrap(), &identity(&xy).unwrap()).unwrap();
    assert_eq!(id, identity(&tensor_obj(&two, &xy).unwrap()).unwrap());
    assert_eq!(size(&tensor_obj(&space(2), &space(3)).unwrap()).unwrap(), 6);
    assert!(matches!(tensor_obj(&two, &space(1)), Err(Error::BackendMismatch { .. })));
}

#[test]
fn structural_isomorphisms_on_elements() {
    let two = finset::object(&["0", "1"]).unwrap();
    let xy = finset::object(&["x", "y"]).unwrap();
    let s = swap(&two, &xy).unwrap();
    let input = encode(s.dom(), &Value::pair(Value::atom("0"), Value::atom("y"))).unwrap();
    assert_eq!(element(s.cod(), s.apply(input)).to_string(), "(y,0)");

    let om = abc();
    let l = lunitor(&om).unwrap();
    let input = encode(l.dom(), &Value::pair(Value::Star, Value::atom("a"))).unwrap();
    assert_eq!(element(l.cod(), l.apply(input)).to_string(), "a");

    let a = associator(&two, &xy, &om).unwrap();
    let pqr = Value::pair(Value::pair(Value::atom("1"), Value::atom("x")), Value::atom("c"));
    let out = element(a.cod(), a.apply(encode(a.dom(), &pqr).unwrap()));
    assert_eq!(out.to_string(), "(1,(x,c))");
}

#[test]
fn flat_adjoint_of_rotation_is_the_orbit_table() {
    let phi = rotation_flow();
    let flat = curry_left(&phi).unwrap();
    let shown: Vec<String> =
        (0..3).map(|i| element(flat.cod(), flat.apply(i)).to_string()).collect();
    assert_eq!(shown, ["[0→a,1→b,2→c]", "[0→b,1→c,2→a]", "[0→c,1→a,2→b]"]);
    assert_eq!(uncurry_left(&flat).unwrap(), phi);
}

#[test]
fn currying_the_left_unitor_gives_constant_paths() {
    let om = abc();
    let c = curry_left(&lunitor(&om).unwrap()).unwrap();
    for i in 0..3 {
        let v = element(c.cod(), c.apply(i));
        assert_eq!(v, Value::Func(vec![(Value::Star, element(&om, i))]));
    }
}

#[test]
fn curry_and_uncurry_reject_wrong_shapes() {
    let f = identity(&abc()).unwrap();
    assert!(matches!(curry_left(&f), Err(Error::NotATensor(_))));
    assert!(matches!(uncurry_left(&f), Err(Error::NotAHom(_))));
}

#[test]
fn eval_reads_a_path() {
    let (t, om) = (z3(), abc());
    let ev = eval_morphism(&t, &om).unwrap();
    let p = path(&t, &["a", "b", "c"]);
    let input = encode(ev.dom(), &Value::pair(Value::atom("1"), p)).unwrap();
    assert_eq!(element(&om, ev.apply(input)), Value::atom("b"));

    let e2 = eval_morphism(&om, &om).unwrap();
    let id = Value::Func(atoms(&["a", "b", "c"]).into_iter().map(|x| (x.clone(), x)).collect());
    let input = encode(e2.dom(), &Value::pair(Value::atom("a"), id)).unwrap();
    assert_eq!(element(&om, e2.apply(input)), Value::atom("a"));
}

#[test]
fn eval_contracts_in_gf2() {
    // [[1,1],[0,1]] applied to e1 gives (1,1)
    let v2 = space(2);
    let unit = ObjectRef::unit(BackendId::Gf2Vect);
    let m = Gf2Matrix::from_rows(&[&[1, 1], &[0, 1]]).unwrap();
    let named = name_of(&linear(&v2, &v2, m).unwrap()).unwrap();
    let e1 = linear(&unit, &v2, Gf2Matrix::from_rows(&[&[0], &[1]]).unwrap()).unwrap();
    let out = compose(&eval_morphism(&v2, &v2).unwrap(), &tensor_mor(&e1, &named).unwrap())
        .unwrap();
    assert_eq!(out.matrix().unwrap(), &Gf2Matrix::from_rows(&[&[1], &[1]]).unwrap());
}

#[test]
fn internal_composition_on_names() {
    let om = abc();
    let ic = internal_compose(&om, &om, &om).unwrap();
    let rot1 = finset::map(&om, &om, &["b", "c", "a"]).unwrap();
    let rot2 = finset::map(&om, &om, &["c", "a", "b"]).unwrap();
    let id = identity(&om).unwrap();
    let pair = |g: &Morphism, f: &Morphism| {
        tensor_mor(&name_of(g).unwrap(), &name_of(f).unwrap()).unwrap()
    };
    let via = |g: &Morphism, f: &Morphism| {
        compose(&ic, &compose(&pair(g, f), &lunitor_inv(&ObjectRef::unit(BackendId::FinSet)).unwrap()).unwrap())
            .unwrap()
    };
    assert_eq!(via(&rot1, &rot1), name_of(&rot2).unwrap());
    assert_eq!(via(&id, &rot1), name_of(&rot1).unwrap());
    assert_eq!(via(&rot1, &id), name_of(&rot1).unwrap());
}

#[test]
fn names_round_trip() {
    let om = abc();
    for f in finset::all_morphisms(&om, &om).unwrap() {
        assert_eq!(unname(&name_of(&f).unwrap()).unwrap(), f);
    }
}

#[test]
fn hom_map_post_composes() {
    let (t, om) = (z3(), abc());
    let ind = finset::map(&om, &set(2), &["1", "0", "0"]).unwrap();
    let post = hom_map(&t, &ind).unwrap();
    let p = encode(post.dom(), &path(&t, &["a", "b", "a"])).unwrap();
    assert_eq!(element(post.cod(), post.apply(p)).to_string(), "[0→1,1→0,2→1]");
}

#[test]
fn to_unit_and_points() {
    assert_eq!(to_unit(&abc()).unwrap().table(), Some(&[0, 0, 0][..]));
    assert_eq!(to_unit(&space(2)), Err(Error::UnitNotTerminal(BackendId::Gf2Vect)));
    assert!(matches!(point(&abc(), 3), Err(Error::OutOfRange { .. })));
    assert!(is_terminal_unit(BackendId::FinSet));
    assert!(!is_terminal_unit(BackendId::Gf2Vect));
    assert_eq!(is_terminal_unit(BackendId::FinSet), is_terminal_unit(BackendId::FinSet));
}

#[test]
fn diagram_checks_report_counterexamples() {
    let phi = rotation_flow();
    let same = check_diagram(
        "reflexive",
        &DiagramPath::single(phi.clone()),
        &DiagramPath::single(phi.clone()),
    )
    .unwrap();
    assert!(same.holds());
    assert_eq!(same.counterexample(), None);

    let mut table = phi.table().unwrap().to_vec();
    table[4] = (table[4] + 1) % 3;
    let bad = Morphism::new(phi.dom().clone(), phi.cod().clone(), Payload::Table(table.into()))
        .unwrap();
    let report = check_equal("mutated", &phi, &bad).unwrap();
    assert!(!report.holds());
    assert_eq!(report.counterexample().unwrap().to_string(), "(1,b)");

    assert_eq!(DiagramPath::new(vec![]), Err(Error::EmptyPath));
    let broken = DiagramPath::new(vec![identity(&abc()).unwrap(), identity(&z3()).unwrap()]);
    assert!(matches!(broken, Err(Error::TypeMismatch { .. })));
    let mismatch = check_equal("endpoints", &identity(&abc()).unwrap(), &identity(&z3()).unwrap());
    assert!(mismatch.is_err());
}

#[test]
fn gf2_counterexample_is_a_basis_vector() {
    let v2 = space(2);
    let a = identity(&v2).unwrap();
    let b = linear(&v2, &v2, Gf2Matrix::from_rows(&[&[1, 0], &[1, 1]]).unwrap()).unwrap();
    let r = check_equal("gf2", &a, &b).unwrap();
    assert_eq!(r.counterexample().unwrap().to_string(), "e0");
}

#[test]
fn triangle_and_pentagon_commute() {
    let objs = [set(1), set(2), set(3), ObjectRef::unit(BackendId::FinSet)];
    let unit = ObjectRef::unit(BackendId::FinSet);
    for a in &objs {
        for b in &objs {
            // (A⊗1)⊗B → A⊗(1⊗B) → A⊗B equals ρ⊗B
            let lhs = DiagramPath::new(vec![
                associator(a, &unit, b).unwrap(),
                tensor_mor(&identity(a).unwrap(), &lunitor(b).unwrap()).unwrap(),
            ])
            .unwrap();
            let rhs = DiagramPath::single(
                tensor_mor(&runitor(a).unwrap(), &identity(b).unwrap()).unwrap(),
            );
            assert!(check_diagram("triangle", &lhs, &rhs).unwrap().holds());
            for c in &objs {
                for d in &objs {
                    let ab = tensor_obj(a, b).unwrap();
                    let cd = tensor_obj(c, d).unwrap();
                    let bc = tensor_obj(b, c).unwrap();
                    let lhs = DiagramPath::new(vec![
                        associator(&ab, c, d).unwrap(),
                        associator(a, b, &cd).unwrap(),
                    ])
                    .unwrap();
                    let rhs = DiagramPath::new(vec![
                        tensor_mor(&associator(a, b, c).unwrap(), &identity(d).unwrap()).unwrap(),
                        associator(a, &bc, d).unwrap(),
                        tensor_mor(&identity(a).unwrap(), &associator(b, c, d).unwrap()).unwrap(),
                    ])
                    .unwrap();
                    assert!(check_diagram("pentagon", &lhs, &rhs).unwrap().holds());
                }
            }
        }
    }
}

#[test]
fn swap_is_an_involution_and_natural() {
    for na in 0..=3 {
        for nb in 0..=3 {
            let (a, b) = (set(na), set(nb));
            let s = compose(&swap(&b, &a).unwrap(), &swap(&a, &b).unwrap()).unwrap();
            assert_eq!(s, identity(&tensor_obj(&a, &b).unwrap()).unwrap());
        }
    }
    for da in 0..=2 {
        for db in 0..=2 {
            let (a, b) = (space(da), space(db));
            let s = compose(&swap(&b, &a).unwrap(), &swap(&a, &b).unwrap()).unwrap();
            assert_eq!(s, identity(&tensor_obj(&a, &b).unwrap()).unwrap());
        }
    }
}

#[test]
fn unitor_and_associator_inverses() {
    let (a, b) = (set(2), set(3));
    let l = compose(&lunitor_inv(&a).unwrap(), &lunitor(&a).unwrap()).unwrap();
    assert_eq!(l, identity(l.dom()).unwrap());
    let r = compose(&runitor(&b).unwrap(), &runitor_inv(&b).unwrap()).unwrap();
    assert_eq!(r, identity(&b).unwrap());
    let x = compose(&associator_inv(&a, &b, &a).unwrap(), &associator(&a, &b, &a).unwrap())
        .unwrap();
    assert_eq!(x, identity(x.dom()).unwrap());
}

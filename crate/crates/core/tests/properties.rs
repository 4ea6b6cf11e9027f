//! Property tests over random permutations and random isotopes of group
//! tables.

use proptest::prelude::*;

use latin_rect::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Random latin squares as isotopy images of cyclic tables.
fn square_strategy(n: usize) -> impl Strategy<Value = LatinSquare> {
    (perm_strategy(n), perm_strategy(n), perm_strategy(n)).prop_map(move |(alpha, beta, gamma)| {
        apply_isotopy(
            &LatinSquare::cyclic_group(n),
            &IsotopyTriple { alpha, beta, gamma },
        )
        .unwrap()
    })
}

fn any_square() -> impl Strategy<Value = LatinSquare> {
    (4usize..=8).prop_flat_map(square_strategy)
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in (1usize..=12).prop_flat_map(perm_strategy)) {
        let n = p.order();
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, n).unwrap(), p);
    }

    #[test]
    fn compose_invert_gives_identity(p in (1usize..=12).prop_flat_map(perm_strategy)) {
        prop_assert!(p.compose(&p.invert()).unwrap().is_identity());
        prop_assert!(p.invert().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn square_text_round_trips(s in any_square()) {
        prop_assert_eq!(&LatinSquare::parse(&s.to_text()).unwrap(), &s);
    }

    #[test]
    fn division_laws(s in any_square()) {
        let n = s.order();
        for x in 1..=n {
            for y in 1..=n {
                let v = s.get(x, y);
                prop_assert_eq!(s.left_divide(x, v).unwrap(), y);
                prop_assert_eq!(s.right_divide(v, y).unwrap(), x);
            }
        }
    }

    #[test]
    fn translation_method_matches_oracle(s in any_square()) {
        prop_assert_eq!(find_rectangles(&s), find_rectangles_oracle(&s));
    }

    #[test]
    fn parastrophe_closure(s in any_square()) {
        let q1 = s.parastrophe(1).unwrap();
        let q2 = s.parastrophe(2).unwrap();
        prop_assert_eq!(&q1.parastrophe(1).unwrap(), &s);
        prop_assert_eq!(&q2.parastrophe(2).unwrap(), &s);
        prop_assert_eq!(s.parastrophe(3).unwrap(), q1.parastrophe(2).unwrap());
        prop_assert_eq!(s.parastrophe(4).unwrap(), q2.parastrophe(1).unwrap());
        prop_assert_eq!(
            s.parastrophe(5).unwrap(),
            q1.parastrophe(2).unwrap().parastrophe(1).unwrap()
        );
    }

    #[test]
    fn distance_is_a_metric(
        (a, b, c) in (4usize..=6).prop_flat_map(|n| {
            (square_strategy(n), square_strategy(n), square_strategy(n))
        })
    ) {
        prop_assert_eq!(a.distance(&b).unwrap(), b.distance(&a).unwrap());
        prop_assert_eq!(a.distance(&a).unwrap(), 0);
        prop_assert_eq!(a.distance(&b).unwrap() == 0, a == b);
        prop_assert!(
            a.distance(&c).unwrap() <= a.distance(&b).unwrap() + b.distance(&c).unwrap()
        );
    }

    #[test]
    fn switches_are_distance_4_involutions(s in any_square()) {
        for r in find_rectangles(&s) {
            let t = rectangle_transform(&s, &r).unwrap();
            prop_assert_eq!(s.distance(&t).unwrap(), 4);
            prop_assert_eq!(rectangle_transform(&t, &transformed_rectangle(&r)).unwrap(), s.clone());
        }
    }

    #[test]
    fn two_cycle_symmetry(s in any_square()) {
        let n = s.order();
        for x in 1..=n {
            for z in x + 1..=n {
                let lx = s.left_translation(x).unwrap();
                let lz = s.left_translation(z).unwrap();
                prop_assert_eq!(
                    two_cycles(&lx.compose(&lz.invert()).unwrap()),
                    two_cycles(&lz.compose(&lx.invert()).unwrap())
                );
            }
        }
    }

    #[test]
    fn canonicalize_is_constant_on_cell_orbits(s in any_square()) {
        for r in find_rectangles(&s) {
            for (x, y, z, u) in [
                (r.x, r.y, r.z, r.u),
                (r.x, r.u, r.z, r.y),
                (r.z, r.y, r.x, r.u),
                (r.z, r.u, r.x, r.y),
            ] {
                prop_assert_eq!(Rectangle::new(&s, x, y, z, u).unwrap(), r);
            }
        }
    }
}

#[test]
fn commutative_rectangles_respect_the_diagonal() {
    let mut tables = vec![latin_rect::fixtures::example4(), LatinSquare::klein()];
    tables.extend((2..=8).map(LatinSquare::cyclic_group));
    for s in tables {
        assert!(s.is_commutative());
        for r in find_rectangles(&s) {
            assert_eq!(r.x == r.y, r.z == r.u);
        }
    }
}

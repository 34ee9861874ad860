use super::*;
use crate::enumeration::is_isomorphic;
use crate::families::{construct, FamilyId};
use proptest::prelude::*;

fn b(n: usize, axle: bool) -> Graph {
    construct(FamilyId::Biwheel { n, axle }).unwrap()
}

fn k33_plus(edges: &[(usize, usize)]) -> Graph {
    edges.iter().fold(Graph::complete_bipartite(3, 3), |g, &(u, v)| g.add_edge(u, v).unwrap())
}

fn random_graph(n: usize, seed: u64, density: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut x = seed | 1;
    for v in 1..n {
        for u in 0..v {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            if x % 100 < density {
                g.insert(u, v);
            }
        }
    }
    g
}

#[test]
fn o1_sites_on_small_graphs() {
    assert!(find_o1_sites(&b(4, false)).is_empty());
    assert!(find_o1_sites(&Graph::cycle(5)).is_empty());
}

#[test]
fn o1_after_splitting_a_hub_of_b6() {
    // hub 6 of B6 split into two degree-4 vertices, each taking three consecutive rim vertices
    let g = split_vertex(&b(6, false), 6, 0b000111, 0b111000).unwrap();
    assert_eq!((g.degree(6), g.degree(8)), (4, 4));
    let sites = find_o1_sites(&g);
    let rim = O1Witness { x: 2, y: 3, z: 7 };
    assert!(sites.contains(&rim));
    let h = apply_o1(&g, rim).unwrap();
    assert_eq!(h.order(), g.order() - 1);
    assert_eq!(h.size(), g.size() - 2);
    assert_eq!(h.degree(2), 5);
}

#[test]
fn o1_rejects_bad_witnesses() {
    let err = apply_o1(&b(4, false), O1Witness { x: 0, y: 1, z: 4 }).unwrap_err();
    assert!(err.to_string().contains("only triangle"), "{err}");
    let err = apply_o1(&Graph::complete(6), O1Witness { x: 0, y: 1, z: 2 }).unwrap_err();
    assert!(err.to_string().contains("d(x) = d(y) = 4"), "{err}");
    assert!(apply_o1(&Graph::complete(5), O1Witness { x: 0, y: 9, z: 2 }).is_err());
}

#[test]
fn o3_reverses_to_k33_plus_edges() {
    let g2 = k33_plus(&[(0, 2), (1, 2)]);
    let site = O3Witness { w: 3, x: 0, y: 1, z: 2 };
    assert!(find_o3_sites(&g2).contains(&site));
    let h = apply_o3(&g2, site).unwrap();
    assert!(is_isomorphic(&h, &b(3, false)));

    let g3 = k33_plus(&[(0, 2), (1, 2), (3, 4)]);
    let h = apply_o3(&g3, O3Witness { w: 5, x: 0, y: 1, z: 2 }).unwrap();
    assert!(is_isomorphic(&h, &b(3, true)));

    let b3 = b(3, false);
    let found = (0..b3.order()).flat_map(|m| inverse_o3(&b3, m)).any(|(g, _)| is_isomorphic(&g, &g2));
    assert!(found);
    assert!(find_o3_sites(&construct(FamilyId::Wheel(4)).unwrap()).is_empty());
}

#[test]
fn o2_preimages_of_the_pyramid() {
    let pi = construct(FamilyId::Pyramid).unwrap();
    assert!(find_o2_sites(&pi).is_empty());
    let pre: Vec<_> = (0..pi.order()).flat_map(|m| inverse_o2(&pi, m)).collect();
    assert!(!pre.is_empty());
    for (g, site) in &pre {
        assert_eq!(g.size(), pi.size() + 2);
        assert!(find_o2_sites(g).contains(site));
        assert_eq!(&apply_o2(g, *site).unwrap(), &pi);
    }
}

#[test]
fn add_edge_examples() {
    let k33p = add_edge(&Graph::complete_bipartite(3, 3), 0, 1).unwrap();
    assert!(is_isomorphic(&k33p, &construct(FamilyId::K33Plus).unwrap()));
    let a3 = construct(FamilyId::LadderA { n: 3, twisted: false }).unwrap();
    assert_eq!(add_edge(&a3, 0, 4).unwrap().size(), 10);
    assert_eq!(add_edge(&b(6, false), 6, 7).unwrap(), b(6, true));
    assert!(add_edge(&a3, 0, 1).is_err());
    assert!(add_edge(&a3, 2, 2).is_err());
}

#[test]
fn split_examples() {
    // splitting the hub of a wheel
    let w5 = construct(FamilyId::Wheel(5)).unwrap();
    let g = split_vertex(&w5, 5, 0b00011, 0b11100).unwrap();
    assert_eq!(g.contract_simplify(Edge::new(5, 6)).unwrap().0, w5);
    assert!(matches!(split_vertex(&w5, 5, 0b00011, 0b01100), Err(OpError::BadSplit { vertex: 5 })));
    assert!(matches!(split_vertex(&w5, 5, 0b100011, 0b11100), Err(OpError::BadSplit { .. })));
    // overlapping parts make triangles on the new edge
    let g = split_vertex(&w5, 5, 0b00111, 0b11100).unwrap();
    assert_eq!(g.triangles_containing(Edge::new(5, 6)).unwrap(), vec![2]);
    assert_eq!(g.contract_simplify(Edge::new(5, 6)).unwrap().0, w5);
}

fn assert_inverse_covers(g: &Graph, h: &Graph, pre: &[(Graph, impl Copy)]) {
    assert!(pre.iter().any(|(p, _)| is_isomorphic(p, g)), "no preimage of {h:?} matches {g:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn operations_round_trip(n in 6usize..11, seed in any::<u64>(), density in 30u64..70) {
        let g = random_graph(n, seed, density);
        for site in find_o1_sites(&g) {
            prop_assert!(site.check(&g).is_ok());
            let h = apply_o1(&g, site).unwrap();
            let m = site.x.min(site.y);
            prop_assert_eq!(h.degree(m), 5);
            prop_assert_eq!(h.size(), g.size() - 2);
            let (con, _) = g.contract_simplify(Edge::new(site.x, site.y)).unwrap();
            prop_assert_eq!(&con, &h);
            let pre = inverse_o1(&h, m);
            prop_assert_eq!(pre.len(), 15);
            for (p, s) in &pre {
                prop_assert_eq!(&apply_o1(p, *s).unwrap(), &h);
            }
            assert_inverse_covers(&g, &h, &pre);
        }
        for site in find_o2_sites(&g) {
            let h = apply_o2(&g, site).unwrap();
            prop_assert_eq!(h.size(), g.size() - 2);
            let m = site.x.min(site.z);
            prop_assert_eq!(h.degree(m), 4);
            let pre = inverse_o2(&h, m);
            for (p, s) in &pre {
                prop_assert_eq!(&apply_o2(p, *s).unwrap(), &h);
            }
            assert_inverse_covers(&g, &h, &pre);
        }
        for site in find_o3_sites(&g) {
            let h = apply_o3(&g, site).unwrap();
            prop_assert_eq!(h.order(), g.order() - 1);
            prop_assert_eq!(h.size(), g.size() - 2);
            let m = site.x.min(site.w);
            let pre = inverse_o3(&h, m);
            for (p, s) in &pre {
                prop_assert_eq!(&apply_o3(p, *s).unwrap(), &h);
            }
            assert_inverse_covers(&g, &h, &pre);
        }
    }

    #[test]
    fn split_then_contract_is_identity(n in 3usize..10, seed in any::<u64>(), density in 30u64..90, v_pick in any::<usize>(), mask in any::<u64>(), shared in any::<u64>()) {
        let g = random_graph(n, seed, density);
        let v = v_pick % n;
        let nv = g.neighbors(v);
        let a = nv & mask;
        let b = (nv & !mask) | (nv & shared);
        let h = split_vertex(&g, v, a, b).unwrap();
        prop_assert_eq!(h.order(), n + 1);
        let (back, removed) = h.contract_simplify(Edge::new(v, n)).unwrap();
        prop_assert_eq!(back, g);
        prop_assert_eq!(removed.len(), (a & b).count_ones() as usize);
    }
}

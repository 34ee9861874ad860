use super::*;
use proptest::prelude::*;

fn wheel(n: usize) -> Graph {
    let mut g = Graph::cycle(n).append_vertex();
    for v in 0..n {
        g.insert(v, n);
    }
    g
}

fn squared_cycle(n: usize) -> Graph {
    let mut g = Graph::cycle(n);
    for v in 0..n {
        let u = (v + 2) % n;
        if !g.has_edge(v, u) {
            g.insert(v, u);
        }
    }
    g
}

fn pyramid() -> Graph {
    Graph::new(
        7,
        [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0), (6, 3), (6, 4), (6, 5)],
    )
    .unwrap()
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
fn small_connectivity_facts() {
    assert!(is_k_connected(&squared_cycle(6), 4));
    assert!(!is_k_connected(&Graph::complete(4), 4));
    assert!(is_k_connected(&Graph::complete(4), 3));
    assert!(is_k_connected(&wheel(4), 3));
    assert!(!is_k_connected(&wheel(4), 4));
    assert!(!is_k_connected(&Graph::cycle(5), 3));
    assert!(is_k_connected(&Graph::complete_bipartite(3, 3), 3));
}

#[test]
fn wheel_separations() {
    let w4 = wheel(4);
    assert!(find_separation_below(&w4, 3).is_none());
    let sep = find_separation_below(&w4, 4).unwrap();
    sep.validate(&w4).unwrap();
    assert_eq!(sep.order(), 3);
    assert!(sep.cut & bit(4) != 0);
    let rim: Vec<usize> = Bits(sep.cut & !bit(4)).collect();
    assert_eq!(rim.len(), 2);
    assert!(!w4.has_edge(rim[0], rim[1]));
}

#[test]
fn disconnected_graph_has_order_zero_separation() {
    let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    let sep = find_separation_below(&g, 1).unwrap();
    assert_eq!(sep.order(), 0);
    sep.validate(&g).unwrap();
}

#[test]
fn three_separations() {
    assert!(enumerate_3_separations(&Graph::complete(5)).is_empty());
    assert!(!enumerate_3_separations(&wheel(5)).is_empty());
    assert!(!enumerate_3_separations(&pyramid()).is_empty());
    for sep in enumerate_3_separations(&pyramid()) {
        sep.validate(&pyramid()).unwrap();
        assert_eq!(sep.order(), 3);
    }
}

#[test]
fn weak_and_quasi() {
    let w5 = wheel(5);
    assert!(is_quasi_4_connected(&w5));
    assert!(!is_weakly_4_connected(&w5));
    let sep = find_weak_violation(&w5).unwrap();
    sep.validate(&w5).unwrap();
    let (a, b) = sep.edge_counts(&w5);
    assert!(a >= 5 && b >= 5);

    assert!(is_weakly_4_connected(&Graph::complete(5)));
    assert!(is_weakly_4_connected(&pyramid()));
    assert!(is_quasi_4_connected(&pyramid()));
    assert!(is_quasi_4_connected(&Graph::complete_bipartite(3, 3)));
    // the cube is only split by vertex neighborhoods
    let cube = Graph::new(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    assert!(is_quasi_4_connected(&cube));
    let w6 = wheel(6);
    assert!(!is_quasi_4_connected(&w6));
    let q = find_quasi_violation(&w6).unwrap();
    q.validate(&w6).unwrap();
    assert!(q.vertex_counts().0 >= 5 && q.vertex_counts().1 >= 5);
}

#[test]
fn resolving_assignment_maximizes_the_smaller_side() {
    // two K4s glued on a triangle: the three cut edges can balance the sides
    let g = Graph::new(
        5,
        [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)],
    )
    .unwrap();
    let mut sep = Separation { cut: 0b111, side_a: bit(3), side_b: bit(4), edge_assignment: Vec::new() };
    assert_eq!(sep.resolve_max_min_edges(&g), 4);
    assert_eq!(sep.edge_assignment.len(), 3);
    let (a, b) = sep.edge_counts(&g);
    assert_eq!(a.min(b), 4);
    assert_eq!(a + b, 9);
}

#[test]
fn separation_display() {
    let sep = Separation { cut: 0b111, side_a: bit(3), side_b: bit(4) | bit(5), edge_assignment: Vec::new() };
    assert_eq!(sep.to_string(), "cut {0,1,2} sideA {3} sideB {4,5}");
}

#[test]
fn paws() {
    assert_eq!(find_paws(&Graph::complete(4)).len(), 12);
    assert!(find_paws(&Graph::cycle(4)).is_empty());
    let p = pyramid();
    let paws = find_paws(&p);
    let mut covered = 0u64;
    let edges = p.edges();
    let index = |e: Edge| edges.iter().position(|&f| f == e).unwrap();
    let mut disjoint = 0;
    for paw in &paws {
        let m = paw.edges().iter().fold(0u64, |acc, &e| acc | bit(index(e)));
        if m & covered == 0 {
            covered |= m;
            disjoint += 1;
        }
    }
    assert_eq!(disjoint, 3);
    assert_eq!(covered.count_ones(), 12);
}

#[test]
fn internally_4c_cubic() {
    assert!(is_internally_4c_cubic(&Graph::complete_bipartite(3, 3)));
    assert!(!is_internally_4c_cubic(&Graph::cycle(6)));
    assert!(!is_internally_4c_cubic(&Graph::complete(4)));
    let prism = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
    // the triangles give 3-edge-cuts that are not vertex stars
    assert!(!is_internally_4c_cubic(&prism));
}

proptest! {
    #[test]
    fn flow_matches_brute_force(n in 2usize..9, seed in any::<u64>(), density in 20u64..90, k in 1usize..5) {
        let g = random_graph(n, seed, density);
        prop_assert_eq!(is_k_connected(&g, k), is_k_connected_brute(&g, k));
        if let Some(sep) = find_separation_below(&g, k) {
            prop_assert!(sep.order() < k);
            prop_assert!(sep.validate(&g).is_ok());
        }
    }

    #[test]
    fn quasi_4_connected_between_4_and_3(n in 5usize..9, seed in any::<u64>(), density in 40u64..95) {
        let g = random_graph(n, seed, density);
        if is_k_connected(&g, 4) {
            prop_assert!(is_quasi_4_connected(&g));
            prop_assert!(is_weakly_4_connected(&g));
        }
        if is_quasi_4_connected(&g) || is_weakly_4_connected(&g) {
            prop_assert!(is_k_connected(&g, 3));
        }
        for sep in enumerate_3_separations(&g) {
            prop_assert!(sep.validate(&g).is_ok());
        }
    }
}

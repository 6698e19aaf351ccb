//! Hand-built bipartite tournaments driving the case-machine leaves the
//! random sweeps rarely reach. Every expected leaf was derived by hand from
//! the colour classes; the oracle cross-check keeps the derivation honest.

use rpk_core::digraph::{Arc, ArcColouredDigraph, VertexId, VertexSet};
use rpk_core::solver::{brute_force_rp_kernel, is_rp_kernel, rp_kernel_bipartite};

fn check(n: usize, arcs: &[(usize, usize, u32)], expected_leaf: &str) -> VertexSet {
    let d = ArcColouredDigraph::from_arcs_relabelled(
        n,
        arcs.iter().map(|&(u, v, c)| Arc::new(u, v, c)).collect(),
    )
    .unwrap();
    let res = rp_kernel_bipartite(&d).unwrap();
    assert_eq!(res.leaf.as_deref(), Some(expected_leaf), "diag: {}", res.diagnostics);
    let k = res.kernel.unwrap();
    assert!(is_rp_kernel(&d, k).unwrap().is_ok());
    assert!(brute_force_rp_kernel(&d).unwrap().contains(&k));
    k
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().map(|&v| VertexId(v)).collect()
}

// Shared layout for the case-1 length-2 instances: X = {0,1}, Y0 = {2},
// Y2 = {3 (in S), 4 (= r), 5 (= q in Q2)}, vertex 6 routes through x1.

#[test]
fn case1_short_path_with_q2_reaching_r() {
    let k = check(
        7,
        &[
            (0, 2, 1), (1, 2, 2), // Y0 member
            (1, 3, 2), (3, 0, 1), // s
            (0, 4, 3), (4, 1, 2), // r
            (0, 5, 3), (5, 1, 2), // q
            (1, 6, 1), (6, 0, 4), // router enabling q -> r
        ],
        "min2.c1.p2.q2_to_r",
    );
    assert_eq!(k, set(&[2, 4]));
}

#[test]
fn case1_short_path_with_r_reaching_q2() {
    let k = check(
        7,
        &[
            (0, 2, 1), (1, 2, 2),
            (1, 3, 2), (3, 0, 1),
            (0, 4, 4), (4, 1, 2), // r: lead colour collides with the router
            (0, 5, 5), (5, 1, 2), // q: lead colour stays fresh
            (1, 6, 1), (6, 0, 4),
        ],
        "min2.c1.p2.r_to_q2",
    );
    assert_eq!(k, set(&[2, 5]));
}

#[test]
fn case1_short_path_with_isolated_q2() {
    let k = check(
        7,
        &[
            (0, 2, 1), (1, 2, 2),
            (1, 3, 2), (3, 0, 1),
            (0, 4, 3), (4, 1, 2),
            (0, 5, 3), (5, 1, 2),
            (1, 6, 1), (6, 0, 2), // router blocks both directions
        ],
        "min2.c1.p2.q2_isolated",
    );
    assert_eq!(k, set(&[2, 4, 5]));
}

// Subcase 2.1 layouts: X = {0,1}; vertex 2 anchors the common colour alpha,
// the Y'' anchor fixes (beta, gamma).

#[test]
fn subcase21_one_family_with_both_b_tails() {
    let k = check(
        7,
        &[
            (0, 2, 1), (2, 1, 1), // alpha anchor (1,1)
            (0, 3, 1), (3, 1, 2), // Y'_ab
            (0, 4, 4), (4, 1, 2), // Y'_wb
            (1, 5, 2), (5, 0, 3), // Y'' anchor (beta,gamma) = (2,3)
            (1, 6, 5), (6, 0, 2), // Y''_wb keeps the beta family nonempty
        ],
        "min2.c21.one.wb_ab",
    );
    assert_eq!(k, set(&[3, 4]));
}

#[test]
fn subcase21_one_family_with_distinguished_u() {
    let k = check(
        7,
        &[
            (0, 2, 1), (2, 1, 1),
            (0, 3, 4), (3, 1, 2), // Y'_wb, single lead colour 4
            (0, 4, 6), (4, 1, 4), // U member with lead other than beta
            (1, 5, 2), (5, 0, 3),
            (1, 6, 5), (6, 0, 2),
        ],
        "min2.c21.one.wb_u",
    );
    assert_eq!(k, set(&[3, 4]));
}

#[test]
fn subcase21_one_family_alpha_tail_routes_to_x2() {
    let k = check(
        7,
        &[
            (0, 2, 1), (2, 1, 1),
            (0, 3, 1), (3, 1, 2), // Y'_ab
            (0, 4, 3), (4, 1, 1), // Y'_ga
            (1, 5, 2), (5, 0, 3),
            (1, 6, 2), (6, 0, 5), // Y''_bw keeps the beta family nonempty
        ],
        "min2.c21.one.x2",
    );
    assert_eq!(k, set(&[1]));
}

#[test]
fn subcase21_tail_mixed_block() {
    let k = check(
        6,
        &[
            (0, 2, 1), (2, 1, 1),
            (0, 3, 1), (3, 1, 2), // near family (alpha lead, beta tail)
            (0, 4, 4), (4, 1, 3), // far family (unnamed lead, gamma tail)
            (1, 5, 2), (5, 0, 3), // Y'' anchor only
        ],
        "min2.c21.none.mixed_block",
    );
    assert_eq!(k, set(&[3, 4]));
}

#[test]
fn subcase21_tail_far_block_with_distinguished_u() {
    let k = check(
        6,
        &[
            (0, 2, 1), (2, 1, 1),
            (0, 3, 4), (3, 1, 2), // far block, single lead colour 4
            (0, 4, 6), (4, 1, 4), // U member with lead outside {beta,gamma,4}
            (1, 5, 2), (5, 0, 3),
        ],
        "min2.c21.none.far_u",
    );
    assert_eq!(k, set(&[3, 4]));
}

#[test]
fn subcase22_opposite_tail_routes_to_x2() {
    let k = check(
        5,
        &[
            (0, 2, 1), (2, 1, 2), // anchor (alpha,beta) = (1,2)
            (0, 3, 3), (3, 1, 2), // Y'_wb
            (1, 4, 4), (4, 0, 1), // Y''_wa
        ],
        "min2.c22.one.x2",
    );
    assert_eq!(k, set(&[1]));
}

#[test]
fn subcase21_entered_through_the_mirrored_side() {
    // only Y'' contains a common-colour vertex, so the machine runs with the
    // roles of x1 and x2 swapped
    let k = check(
        5,
        &[
            (0, 2, 1), (2, 1, 2), // Y' vertex with distinct legs
            (1, 3, 3), (3, 0, 3), // Y'' vertex with a common colour
            (1, 4, 4), (4, 0, 5), // Y'' vertex with distinct legs keeps Y** nonempty
        ],
        "min2.c21.none.x1",
    );
    assert_eq!(k, set(&[1]));
}

#[test]
fn subcase21_swaps_the_anchor_pair_when_only_the_gamma_family_exists() {
    let k = check(
        7,
        &[
            (0, 2, 1), (2, 1, 1), // alpha anchor (1,1)
            (0, 3, 1), (3, 1, 3), // Y'_ag: becomes the ab class after the swap
            (0, 4, 4), (4, 1, 3), // Y'_wg: becomes the wb class after the swap
            (1, 5, 2), (5, 0, 3), // Y'' anchor fixes (beta,gamma) = (2,3)
            (1, 6, 3), (6, 0, 5), // Y''_gw: only the gamma family is nonempty
        ],
        "min2.c21.one.wb_ab",
    );
    assert_eq!(k, set(&[3, 4]));
}

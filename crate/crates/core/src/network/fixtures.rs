//! Small named instances used by tests, benchmarks and documentation.

use super::Network;

/// One edge `s -> t` with capacity 7.
pub fn single_edge() -> Network {
    Network::new(2, 0, 1, [(0, 1, 7.0, 1)]).expect("valid fixture")
}

/// Diamond `s -> a -> t`, `s -> b -> t` plus a direct edge `s -> t`, all
/// capacities and lengths 1. Vertices: s = 0, a = 1, b = 2, t = 3.
/// Edge ids: 0 = sa, 1 = at, 2 = sb, 3 = bt, 4 = st.
pub fn diamond_with_direct() -> Network {
    Network::new(
        4,
        0,
        3,
        [
            (0, 1, 1.0, 1),
            (1, 3, 1.0, 1),
            (0, 2, 1.0, 1),
            (2, 3, 1.0, 1),
            (0, 3, 1.0, 1),
        ],
    )
    .expect("valid fixture")
}

/// Length bound the counterexample network is meant to be solved with.
pub const COUNTEREXAMPLE_BOUND: u64 = 2;

/// Network whose maximum 2-bounded flow is 2, carried by `s-a-t` and
/// `s-b-t` with both `sa` and `sb` saturated.
///
/// The crossing edges `a -> b`, `b -> a` give the two flow paths
/// overlapping detours, and the three-hop route `s -> c -> d -> t` adds
/// capacity that only becomes usable once `L >= 3`.
///
/// Vertices: s = 0, a = 1, b = 2, c = 3, d = 4, t = 5.
pub fn counterexample_fixture() -> (Network, u64) {
    let net = Network::new(
        6,
        0,
        5,
        [
            (0, 1, 1.0, 1), // sa
            (0, 2, 1.0, 1), // sb
            (1, 5, 2.0, 1), // at
            (2, 5, 2.0, 1), // bt
            (1, 2, 1.0, 1), // ab
            (2, 1, 1.0, 1), // ba
            (0, 3, 1.0, 1), // sc
            (3, 4, 1.0, 1), // cd
            (4, 5, 1.0, 1), // dt
        ],
    )
    .expect("valid fixture");
    (net, COUNTEREXAMPLE_BOUND)
}

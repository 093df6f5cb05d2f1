use std::collections::VecDeque;

use crate::network::Network;
use crate::scalar::LpScalar;

/// Classical (unbounded length) maximum s-t flow value by shortest
/// augmenting paths.
pub fn max_flow_value<T: LpScalar>(net: &Network) -> T {
    let n = net.vertex_count();
    // residual arcs: 2k forward, 2k + 1 backward
    let mut head = Vec::with_capacity(2 * net.edge_count());
    let mut residual: Vec<T> = Vec::with_capacity(2 * net.edge_count());
    let mut adjacency = vec![Vec::new(); n];
    for e in net.edges() {
        adjacency[e.tail].push(head.len());
        head.push(e.head);
        residual.push(T::from_capacity(e.capacity));
        adjacency[e.head].push(head.len());
        head.push(e.tail);
        residual.push(T::zero());
    }

    let (s, t) = (net.source(), net.sink());
    let mut total = T::zero();
    loop {
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &arc in &adjacency[v] {
                let u = head[arc];
                if !seen[u] && residual[arc] > T::zero() {
                    seen[u] = true;
                    via[u] = Some(arc);
                    queue.push_back(u);
                }
            }
        }
        if !seen[t] {
            return total;
        }
        let mut push: Option<T> = None;
        let mut v = t;
        while let Some(arc) = via[v] {
            push = Some(match push {
                Some(p) if p <= residual[arc] => p,
                _ => residual[arc].clone(),
            });
            v = head[arc ^ 1];
        }
        let push = push.expect("augmenting path has at least one arc");
        let mut v = t;
        while let Some(arc) = via[v] {
            residual[arc] = residual[arc].clone() - push.clone();
            residual[arc ^ 1] = residual[arc ^ 1].clone() + push.clone();
            v = head[arc ^ 1];
        }
        total = total + push;
    }
}

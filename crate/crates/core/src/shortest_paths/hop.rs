use super::{DualLengths, SpPath, SpResult};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::scalar::Real;

/// Minimum-`y` s-t path using at most `max_hops` edges.
///
/// `dist[k][v]` is the cheapest walk from `s` to `v` with at most `k`
/// edges. Layers beyond `n - 1` cannot improve anything, so the table is
/// cut there. A cell keeps the value inherited from layer `k - 1` unless an
/// edge is strictly cheaper; among edges the smallest id wins ties.
pub fn hop_shortest_path<F: Real>(
    net: &Network,
    y: &DualLengths<F>,
    max_hops: u64,
) -> Result<SpResult<F>> {
    y.check_len(net)?;
    if max_hops == 0 {
        return Err(Error::InvalidArgument(
            "hop bound must be at least 1".into(),
        ));
    }
    let n = net.vertex_count();
    let layers = (max_hops as usize).min(n - 1);
    let mut dist: Vec<Option<F>> = vec![None; n];
    dist[net.source()] = Some(F::zero());
    // pred[k - 1][v]: edge that set dist[k][v], or None if inherited
    let mut pred: Vec<Vec<Option<usize>>> = Vec::with_capacity(layers);
    let weights = y.as_slice();

    for _ in 0..layers {
        let prev = dist.clone();
        let mut layer_pred = vec![None; n];
        for e in net.edges() {
            let Some(d) = prev[e.tail] else { continue };
            let cand = d + weights[e.id];
            match dist[e.head] {
                Some(cur) if cand >= cur => {}
                _ => {
                    dist[e.head] = Some(cand);
                    layer_pred[e.head] = Some(e.id);
                }
            }
        }
        pred.push(layer_pred);
    }

    if dist[net.sink()].is_none() {
        return Ok(None);
    }
    let mut walk = Vec::new();
    let mut v = net.sink();
    for layer in pred.iter().rev() {
        if let Some(id) = layer[v] {
            walk.push(id);
            v = net.edges()[id].tail;
        }
    }
    debug_assert_eq!(v, net.source());
    walk.reverse();
    Ok(Some(SpPath::from_walk(net, y, &walk)))
}

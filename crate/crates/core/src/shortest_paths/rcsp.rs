use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{hop_shortest_path, DualLengths, SpPath, SpResult};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::scalar::Real;

/// Default cap on DP table cells (`(L + 1) * n`) for [`rcsp_exact`].
pub const DEFAULT_TABLE_CAP: usize = 50_000_000;

/// Minimum-`y` s-t path whose edge-length sum is at most `budget`.
pub fn rcsp_exact<F: Real>(net: &Network, y: &DualLengths<F>, budget: u64) -> Result<SpResult<F>> {
    rcsp_exact_with_cap(net, y, budget, DEFAULT_TABLE_CAP)
}

/// [`rcsp_exact`] with an explicit table-size guard.
///
/// `dist[b][v]` is the cheapest walk from `s` to `v` with length at most
/// `b`. Lengths are at least one, so layer `b` only reads lower layers.
pub fn rcsp_exact_with_cap<F: Real>(
    net: &Network,
    y: &DualLengths<F>,
    budget: u64,
    table_cap: usize,
) -> Result<SpResult<F>> {
    y.check_len(net)?;
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "length bound must be at least 1".into(),
        ));
    }
    let n = net.vertex_count();
    let rows = usize::try_from(budget)
        .ok()
        .and_then(|b| b.checked_add(1))
        .unwrap_or(usize::MAX);
    let cells = rows.saturating_mul(n);
    if cells > table_cap {
        return Err(Error::TableBudgetExceeded {
            cells,
            cap: table_cap,
        });
    }
    let weights = y.as_slice();
    let mut dist: Vec<Vec<Option<F>>> = Vec::with_capacity(rows);
    let mut pred: Vec<Vec<Option<usize>>> = Vec::with_capacity(rows);
    let mut base = vec![None; n];
    base[net.source()] = Some(F::zero());
    dist.push(base);
    pred.push(vec![None; n]);

    for b in 1..rows {
        let mut row = dist[b - 1].clone();
        let mut row_pred = vec![None; n];
        for e in net.edges() {
            let len = e.length as usize;
            if len > b {
                continue;
            }
            let Some(d) = dist[b - len][e.tail] else {
                continue;
            };
            let cand = d + weights[e.id];
            match row[e.head] {
                Some(cur) if cand >= cur => {}
                _ => {
                    row[e.head] = Some(cand);
                    row_pred[e.head] = Some(e.id);
                }
            }
        }
        dist.push(row);
        pred.push(row_pred);
    }

    if dist[rows - 1][net.sink()].is_none() {
        return Ok(None);
    }
    let mut walk = Vec::new();
    let (mut b, mut v) = (rows - 1, net.sink());
    while b > 0 {
        match pred[b][v] {
            Some(id) => {
                walk.push(id);
                let e = &net.edges()[id];
                b -= e.length as usize;
                v = e.tail;
            }
            None => b -= 1,
        }
    }
    debug_assert_eq!(v, net.source());
    walk.reverse();
    Ok(Some(SpPath::from_walk(net, y, &walk)))
}

/// Path whose edge-length sum is at most `budget` and whose cost is at most
/// `(1 + w)` times the cheapest such path.
///
/// Bounds `LB <= OPT <= UB` come from the hop-relaxed DP (ignores lengths)
/// and the minimum-length path. Geometric-mean tests on coarsely rounded
/// costs shrink `UB / LB` to a constant, then one DP over costs rounded to
/// granularity `w LB / h` (h = max edges on a simple feasible path)
/// returns the answer. The DP runs over rounded cost values and minimises
/// length, stopping at the first cost level that reaches `t` within
/// budget, so the length constraint is never relaxed.
pub fn rcsp_approx<F: Real>(
    net: &Network,
    y: &DualLengths<F>,
    budget: u64,
    w: F,
) -> Result<SpResult<F>> {
    y.check_len(net)?;
    if budget == 0 {
        return Err(Error::InvalidArgument(
            "length bound must be at least 1".into(),
        ));
    }
    if !(w > F::zero() && w.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "approximation slack must be positive, got {w}"
        )));
    }
    let weights = y.as_slice();

    // Cheapest zero-cost route first: it is optimal if it fits.
    let zero = min_length_path(net, |id| weights[id] == F::zero());
    if let Some((len, walk)) = &zero {
        if *len <= budget {
            return Ok(Some(SpPath::from_walk(net, y, walk)));
        }
    }
    let Some((len, walk)) = min_length_path(net, |_| true) else {
        return Ok(None);
    };
    if len > budget {
        return Ok(None);
    }
    let mut best = SpPath::from_walk(net, y, &walk);

    let max_edges = budget.min(net.vertex_count() as u64 - 1);
    let relaxed = hop_shortest_path(net, y, max_edges)?
        .expect("a feasible path exists, so the hop relaxation has one");
    if path_length(net, &relaxed) <= budget {
        // the relaxation optimum is feasible, hence exact
        return Ok(Some(relaxed));
    }
    let mut lower = relaxed.cost;
    if lower == F::zero() {
        // no zero-cost feasible path, so every feasible path has a positive edge
        lower = weights
            .iter()
            .copied()
            .filter(|&v| v > F::zero())
            .fold(F::infinity(), F::min);
    }
    let mut upper = best.cost;
    let h = F::lit(max_edges as f64);
    let one = F::one();

    if upper > (one + w) * lower {
        // Coarse test at level C: rounding granularity C * eta / h. A hit
        // certifies a path of cost <= (1 + eta) C, a miss certifies OPT > C.
        let eta = F::lit(0.5);
        let target_ratio = F::lit(3.0);
        let mut rounds = 0;
        while upper > target_ratio * lower && rounds < 128 {
            rounds += 1;
            let level = (lower * upper).sqrt();
            let grain = level * eta / h;
            let limit = (h / eta).ceil().to_u64().unwrap_or(u64::MAX) + max_edges;
            match rounded_dp(net, weights, budget, grain, limit) {
                Some(walk) => {
                    let found = SpPath::from_walk(net, y, &walk);
                    if found.cost < best.cost {
                        best = found;
                    }
                    upper = upper.min(best.cost);
                }
                None => lower = level,
            }
        }

        let grain = w * lower / h;
        let limit = (upper / grain)
            .ceil()
            .to_u64()
            .unwrap_or(u64::MAX)
            .saturating_add(max_edges);
        if let Some(walk) = rounded_dp(net, weights, budget, grain, limit) {
            let found = SpPath::from_walk(net, y, &walk);
            if found.cost < best.cost {
                best = found;
            }
        }
    }
    Ok(Some(best))
}

fn path_length(net: &Network, sp: &SpPath<impl Real>) -> u64 {
    sp.path
        .edges()
        .iter()
        .map(|&id| net.edges()[id].length)
        .sum()
}

/// Dijkstra on edge lengths over the edges accepted by `allowed`.
/// Returns the length and edge sequence of a shortest s-t path.
fn min_length_path(net: &Network, allowed: impl Fn(usize) -> bool) -> Option<(u64, Vec<usize>)> {
    let n = net.vertex_count();
    let mut dist = vec![u64::MAX; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[net.source()] = 0;
    heap.push(Reverse((0u64, net.source())));
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        for &id in net.out_edges(v) {
            if !allowed(id) {
                continue;
            }
            let e = &net.edges()[id];
            if done[e.head] {
                continue;
            }
            let cand = d + e.length;
            if cand < dist[e.head] {
                dist[e.head] = cand;
                pred[e.head] = Some(id);
                heap.push(Reverse((cand, e.head)));
            }
        }
    }
    if dist[net.sink()] == u64::MAX {
        return None;
    }
    let mut walk = Vec::new();
    let mut v = net.sink();
    while let Some(id) = pred[v] {
        walk.push(id);
        v = net.edges()[id].tail;
    }
    walk.reverse();
    Some((dist[net.sink()], walk))
}

/// DP over rounded costs `ceil(y(e) / grain)`: `reach[c][v]` is the minimum
/// length of a walk to `v` with rounded cost at most `c`. Returns the walk
/// for the smallest `c <= limit` with `reach[c][t] <= budget`.
fn rounded_dp<F: Real>(
    net: &Network,
    weights: &[F],
    budget: u64,
    grain: F,
    limit: u64,
) -> Option<Vec<usize>> {
    let n = net.vertex_count();
    let rounded: Vec<u64> = weights
        .iter()
        .map(|&v| {
            let r = (v / grain).ceil();
            r.to_u64().unwrap_or(u64::MAX).min(limit.saturating_add(1))
        })
        .collect();
    let has_free = rounded.contains(&0);

    let mut reach: Vec<Vec<u64>> = Vec::new();
    let mut pred: Vec<Vec<Option<usize>>> = Vec::new();
    let mut level: u64 = 0;
    loop {
        let c = level as usize;
        let mut row = if c == 0 {
            let mut base = vec![u64::MAX; n];
            base[net.source()] = 0;
            base
        } else {
            reach[c - 1].clone()
        };
        let mut row_pred = vec![None; n];
        for e in net.edges() {
            let r = rounded[e.id];
            if r == 0 || r > level {
                continue;
            }
            let from = reach[c - r as usize][e.tail];
            if from == u64::MAX {
                continue;
            }
            let cand = from + e.length;
            if cand < row[e.head] {
                row[e.head] = cand;
                row_pred[e.head] = Some(e.id);
            }
        }
        if has_free {
            // Bellman-Ford inside the level over zero-rounded edges
            loop {
                let mut changed = false;
                for e in net.edges() {
                    if rounded[e.id] != 0 || row[e.tail] == u64::MAX {
                        continue;
                    }
                    let cand = row[e.tail] + e.length;
                    if cand < row[e.head] {
                        row[e.head] = cand;
                        row_pred[e.head] = Some(e.id);
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
        }
        let hit = row[net.sink()] <= budget;
        reach.push(row);
        pred.push(row_pred);
        if hit {
            break;
        }
        if level >= limit {
            return None;
        }
        level += 1;
    }

    let mut walk = Vec::new();
    let (mut c, mut v) = (level as usize, net.sink());
    loop {
        match pred[c][v] {
            Some(id) => {
                walk.push(id);
                c -= rounded[id] as usize;
                v = net.edges()[id].tail;
            }
            None if c == 0 => break,
            None => c -= 1,
        }
    }
    debug_assert_eq!(v, net.source());
    walk.reverse();
    Some(walk)
}

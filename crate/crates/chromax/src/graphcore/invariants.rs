//! Exact graph invariants: chromatic number, clique and independence
//! numbers, vertex connectivity, cores, and 2-connectivity.

use super::graph::{BitIter, SimpleGraph};

/// Exact clique number via Bron-Kerbosch with pivoting.
pub fn clique_number(g: &SimpleGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    bron_kerbosch(g, 0, full, 0, &mut best);
    best
}

fn bron_kerbosch(g: &SimpleGraph, r_size: usize, p: u64, x: u64, best: &mut usize) {
    if p == 0 && x == 0 {
        *best = (*best).max(r_size);
        return;
    }
    if r_size + p.count_ones() as usize <= *best {
        return;
    }
    // Pivot on the candidate dominating the most of P.
    let pivot = BitIter(p | x)
        .max_by_key(|&v| (g.neighbors_mask(v) & p).count_ones())
        .expect("p | x nonempty");
    let mut candidates = p & !g.neighbors_mask(pivot);
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let vb = 1u64 << v;
        candidates &= candidates - 1;
        bron_kerbosch(g, r_size + 1, p & g.neighbors_mask(v), x & g.neighbors_mask(v), best);
        p &= !vb;
        x |= vb;
    }
}

/// Exact independence number, computed on the complement.
pub fn independence_number(g: &SimpleGraph) -> usize {
    clique_number(&g.complement())
}

/// Exact chromatic number by branch and bound: the clique number is the
/// lower bound, greedy coloring the upper bound, and k-colorability is
/// decided by backtracking with color-class symmetry breaking.
pub fn chromatic_number(g: &SimpleGraph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = clique_number(g);
    let upper = greedy_bound(g);
    for k in lower..upper {
        if k_colorable(g, k) {
            return k;
        }
    }
    upper
}

fn greedy_bound(g: &SimpleGraph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in &order {
        let mut forbidden = 0u64;
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                forbidden |= 1 << colors[w];
            }
        }
        let c = (!forbidden).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn k_colorable(g: &SimpleGraph, k: usize) -> bool {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; g.n()];
    color_rec(g, &order, 0, k, 0, &mut colors)
}

fn color_rec(
    g: &SimpleGraph,
    order: &[usize],
    idx: usize,
    k: usize,
    max_used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let mut forbidden = 0u64;
    for w in g.neighbors(v) {
        if colors[w] != usize::MAX {
            forbidden |= 1 << colors[w];
        }
    }
    // Allowing at most one fresh color kills color-class symmetry.
    let limit = k.min(max_used + 1);
    for c in 0..limit {
        if forbidden & (1 << c) == 0 {
            colors[v] = c;
            if color_rec(g, order, idx + 1, k, max_used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Exact vertex connectivity. Disconnected graphs have connectivity 0 and
/// `K_n` is `n - 1` by convention; otherwise the minimum over non-adjacent
/// pairs of the maximum number of internally vertex-disjoint paths.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(max_vertex_disjoint_paths(g, s, t));
            }
        }
    }
    best
}

/// Max-flow with unit vertex capacities: each vertex splits into in/out
/// nodes joined by a capacity-1 arc.
fn max_vertex_disjoint_paths(g: &SimpleGraph, s: usize, t: usize) -> usize {
    let n = g.n();
    let nodes = 2 * n;
    let inn = |v: usize| 2 * v;
    let out = |v: usize| 2 * v + 1;
    let mut cap = vec![vec![0u32; nodes]; nodes];
    for v in 0..n {
        cap[inn(v)][out(v)] = 1;
    }
    for (u, v) in g.edges() {
        cap[out(u)][inn(v)] = u32::MAX / 2;
        cap[out(v)][inn(u)] = u32::MAX / 2;
    }
    let source = out(s);
    let sink = inn(t);
    let mut flow = 0;
    loop {
        // BFS augmenting path on the residual network.
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut v = sink;
        while v != source {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Maximal subgraph with minimum degree at least `l`, as an induced subgraph
/// on the surviving vertices in ascending order (possibly empty).
pub fn l_core(g: &SimpleGraph, l: usize) -> SimpleGraph {
    let mut alive: Vec<bool> = vec![true; g.n()];
    loop {
        let mut removed = false;
        for v in 0..g.n() {
            if alive[v] {
                let deg = g.neighbors(v).filter(|&w| alive[w]).count();
                if deg < l {
                    alive[v] = false;
                    removed = true;
                }
            }
        }
        if !removed {
            break;
        }
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    g.induced_subgraph(&verts)
}

/// True iff `n >= 3`, connected, and free of cut vertices.
pub fn is_2_connected(g: &SimpleGraph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    (0..g.n()).all(|v| {
        g.delete_vertex(v).expect("vertex in range").is_connected()
    })
}

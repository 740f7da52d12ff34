use super::Graph;

/// Backtracking isomorphism test with degree and partial-adjacency pruning.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut order: Vec<usize> = a.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn rec(a: &Graph, b: &Graph, order: &[usize], i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in b.vertices() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = order[..i]
                .iter()
                .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if rec(a, b, order, i + 1, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    rec(a, b, &order, 0, &mut map, &mut used)
}

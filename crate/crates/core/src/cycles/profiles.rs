//! Path systems inside one clique cell, described by their endpoints only.

/// Endpoint family over one cell plus the number of edges used inside the
/// cell. Pieces are `(a, b)` with `a < b` for a path from `a` to `b`, or
/// `(a, a)` for a one-vertex path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliquePathProfile {
    pub pieces: Vec<(usize, usize)>,
    pub r: usize,
}

/// Can a clique on `cell_size` vertices hold vertex-disjoint paths with these
/// endpoints using exactly `r` edges. Each two-ended path needs one edge plus
/// one per interior vertex, and interior vertices come from the vertices not
/// named as endpoints.
pub fn profile_feasible(cell_size: usize, pieces: &[(usize, usize)], r: usize) -> bool {
    let pairs = pieces.iter().filter(|(a, b)| a != b).count();
    let named = pieces.iter().map(|(a, b)| if a == b { 1 } else { 2 }).sum::<usize>();
    if named > cell_size {
        return false;
    }
    let free = cell_size - named;
    r == pairs || (pairs >= 1 && r > pairs && r <= pairs + free)
}

/// Every family of disjoint singletons and pairs over `cell` naming at most
/// `max_named` vertices, in a fixed order (empty family first).
pub fn endpoint_families(cell: &[usize], max_named: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut taken = vec![false; cell.len()];
    let mut cur = Vec::new();
    families_rec(cell, 0, max_named, &mut taken, &mut cur, &mut out);
    out
}

fn families_rec(
    cell: &[usize],
    i: usize,
    budget: usize,
    taken: &mut [bool],
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if i == cell.len() {
        let mut fam = cur.clone();
        fam.sort_unstable();
        out.push(fam);
        return;
    }
    if taken[i] {
        families_rec(cell, i + 1, budget, taken, cur, out);
        return;
    }
    families_rec(cell, i + 1, budget, taken, cur, out);
    if budget >= 1 {
        cur.push((cell[i], cell[i]));
        families_rec(cell, i + 1, budget - 1, taken, cur, out);
        cur.pop();
    }
    if budget >= 2 {
        for j in i + 1..cell.len() {
            if !taken[j] {
                taken[j] = true;
                let (a, b) = (cell[i].min(cell[j]), cell[i].max(cell[j]));
                cur.push((a, b));
                families_rec(cell, i + 1, budget - 2, taken, cur, out);
                cur.pop();
                taken[j] = false;
            }
        }
    }
}

/// All feasible profiles of `cell` with exactly `r` edges whose endpoint set
/// has at most `endpoint_budget` vertices.
pub fn enumerate_clique_profiles(cell: &[usize], r: usize, endpoint_budget: usize) -> Vec<CliquePathProfile> {
    endpoint_families(cell, endpoint_budget)
        .into_iter()
        .filter(|fam| profile_feasible(cell.len(), fam, r))
        .map(|pieces| CliquePathProfile { pieces, r })
        .collect()
}

/// Endpoint budget per introduced cell.
pub const CELL_ENDPOINT_BUDGET: usize = 120;

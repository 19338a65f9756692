//! Point-set generators: uniform grid sampling and the two extremal
//! families for down-graph matchings.
//!
//! The families are laid out in support coordinates `(f0, f1, f2)` with
//! `f0 = y`, `f1 = −(√3x + y)/2`, `f2 = (√3x − y)/2` (so `f0 + f1 + f2 = 0`).
//! A point `r` lies in the smallest down-triangle of `p` and `q` iff
//! `r_k ≤ max(p_k, q_k)` for every `k`, so only the order of each
//! coordinate matters. Integer support coordinates are mapped back to the
//! plane with the convergent `2911/5042` of `1/√3`; the error is far below
//! the unit gaps between coordinates, and every family self-checks anyway.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::build_down;
use crate::error::{Error, Result};
use crate::geometry::{pair_in_general_position, Point, PointSet};
use crate::matching::{down_graph_matching_bound, max_matching};
use crate::scalar::ExactScalar;

/// Resampling attempts allowed per requested point.
pub const ATTEMPTS_PER_POINT: u64 = 10_000;

/// `n` points on the grid `{0, 1/r, …, (r−1)/r}²`, rejection sampled so
/// that no accepted pair violates general position. Deterministic in `seed`.
pub fn random_general_position(n: usize, seed: u64, resolution: u64) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::EmptyPointSet);
    }
    if resolution == 0 || resolution > i64::MAX as u64 {
        return Err(Error::InvalidArgument(format!("resolution {resolution} out of range")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = resolution as i64;
    let mut accepted: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0u64;
    let budget = ATTEMPTS_PER_POINT.saturating_mul(n as u64);
    while accepted.len() < n {
        if attempts >= budget {
            return Err(Error::SamplingBudgetExhausted {
                requested: n,
                resolution,
            });
        }
        attempts += 1;
        let x = rng.random_range(0..r);
        let y = rng.random_range(0..r);
        let p = Point::from_ratios((x, r), (y, r), accepted.len());
        if accepted.iter().all(|q| pair_in_general_position(q, &p)) {
            accepted.push(p);
        }
    }
    PointSet::certified(accepted.into_iter().map(|p| (p.x, p.y)).collect())
}

/// Mirror image `y ↦ −y`; swaps the roles of down and up triangles.
pub fn reflect_x(ps: &PointSet) -> PointSet {
    let coords = ps.coords().into_iter().map(|(x, y)| (x, -y)).collect();
    let out = PointSet::new(coords).expect("reflection keeps points distinct");
    debug_assert_eq!(out.general_position().is_ok(), ps.general_position().is_ok());
    out
}

/// Support coordinates `(f0, f1, f2)`, summing to zero.
type Support = [i64; 3];

fn add(p: Support, d: Support, k: i64) -> Support {
    [p[0] + k * d[0], p[1] + k * d[1], p[2] + k * d[2]]
}

/// Cyclic shift `(f0, f1, f2) ↦ (f2, f0, f1)`: rotation by 120°.
fn rotate(v: Support) -> Support {
    [v[2], v[0], v[1]]
}

fn to_plane(f: Support) -> (ExactScalar, ExactScalar) {
    debug_assert_eq!(f.iter().sum::<i64>(), 0);
    // y = f0, x = −(2 f1 + f0)/√3, scaled by 5042
    let x = -(2 * f[1] + f[0]) * 2911;
    let y = f[0] * 5042;
    (ExactScalar::from_int(x), ExactScalar::from_int(y))
}

/// Direction along which consecutive chain points dominate each other in
/// `f0` and `f1` (30° in the plane).
const CHAIN: Support = [1, 1, -2];
/// Slot beside chain point `c_{k+1}` that sees `c_k` and `c_{k+1}` only:
/// just past `c_{k+1}` in `f0`, below it in `f1`.
const SLOT_LR: Support = [1, -6, 5];
/// Mirror slot: just below `c_{k+1}` in `f0`, past it in `f1`.
const SLOT_UL: Support = [-5, 2, 3];
/// Pendant beyond the last chain point.
const CAP_END: Support = [3, 4, -7];
/// Pendant before the first chain point.
const CAP_START: Support = [-3, -4, 7];

const TIGHT_SPACING: i64 = 20;

/// Id of `a_i`, `b_i`, `c_i` in a family point set.
pub fn triplet_ids(i: usize) -> (usize, usize, usize) {
    (3 * i, 3 * i + 1, 3 * i + 2)
}

fn family_set(supports: &[Support]) -> Result<PointSet> {
    let ps = PointSet::certified(supports.iter().map(|&f| to_plane(f)).collect())?;
    Ok(ps)
}

/// Support coordinates of the tight family, in triplet order.
///
/// The `c` points form a tree with three arms leaving a center along the
/// three directions `(1,1,−2)`, `(−2,1,1)`, `(1,−2,1)`. Between consecutive
/// arm points sit two slot points, each adjacent to exactly those two `c`s;
/// each arm ends in a pendant cap. The slot points and caps are pairwise
/// non-adjacent, so the `c`s form a Tutte barrier. Triplet 0 is the end of a
/// short arm with one slot left empty, so that removing `a_0, b_0` leaves
/// `c_0` attached to `c` points only.
fn tight_supports(m: usize) -> Vec<Support> {
    let lens = [m - 3, 1, 1];
    let mut arm_dir = CHAIN;
    let mut lr = SLOT_LR;
    let mut ul = SLOT_UL;
    let mut cap = CAP_END;
    // per arm: chain points, slot points (lr, ul per gap), cap
    let mut arms: Vec<(Vec<Support>, Vec<Support>, Support)> = Vec::new();
    for (arm, &len) in lens.iter().enumerate() {
        // distinct spacing per arm keeps every coordinate value distinct
        let spacing = TIGHT_SPACING + 7 * arm as i64;
        let cs: Vec<Support> = (1..=len as i64).map(|k| add([0; 3], arm_dir, spacing * k)).collect();
        let slots = cs.iter().flat_map(|&c| [add(c, lr, 1), add(c, ul, 1)]).collect();
        let end = add(*cs.last().expect("arms are nonempty"), cap, 1);
        arms.push((cs, slots, end));
        arm_dir = rotate(arm_dir);
        lr = rotate(lr);
        ul = rotate(ul);
        cap = rotate(cap);
    }
    let (short_cs, short_slots, short_cap) = arms.remove(1);
    let mut out = vec![short_cap, short_slots[1], short_cs[0]];
    let mut cs = vec![[0; 3]];
    let mut others = Vec::new();
    for (arm_cs, slots, end) in arms {
        cs.extend(arm_cs);
        others.extend(slots);
        others.push(end);
    }
    debug_assert_eq!(others.len(), 2 * cs.len());
    for (pair, c) in others.chunks(2).zip(cs) {
        out.extend([pair[0], pair[1], c]);
    }
    out
}

/// Support coordinates of the 3-connected family: a straight chain of `c`
/// points with two slots per gap and a cap at each end, plus three far
/// points, each extreme in one support coordinate. Every slot and cap then
/// sees two chain points and at least one far point.
fn three_connected_supports(m: usize) -> Vec<Support> {
    let s = TIGHT_SPACING;
    let cs: Vec<Support> = (0..m as i64).map(|i| add([0; 3], CHAIN, s * i)).collect();
    let lr = |k: usize| add(cs[k + 1], SLOT_LR, 1);
    let ul = |k: usize| add(cs[k + 1], SLOT_UL, 1);
    // triplet 0 = (ul of gap 0, lr of gap 1, c_0); the rest follow the same
    // shift, and the two caps and the lr slot of gap 0 close the list
    let mut ab: Vec<Support> = Vec::with_capacity(2 * m);
    for k in 0..m - 1 {
        ab.push(ul(k));
        if k + 1 < m - 1 {
            ab.push(lr(k + 1));
        }
    }
    ab.push(add(cs[m - 1], CAP_END, 1));
    ab.push(add(cs[0], CAP_START, 1));
    ab.push(lr(0));
    debug_assert_eq!(ab.len(), 2 * m);
    let mut out = Vec::with_capacity(3 * m + 3);
    for (pair, &c) in ab.chunks(2).zip(&cs) {
        out.extend([pair[0], pair[1], c]);
    }
    let h = 4 * s * m as i64 + 1000;
    out.extend(
        [
            [h + 1, -h / 2 + 3, 0],
            [-h / 2 - 5, h + 7, 0],
            [-h / 2 + 11, -h / 2 - 13, 0],
        ]
        .map(|[a, b, _]| [a, b, -a - b]),
    );
    out
}

fn require_family_size(m: usize) -> Result<()> {
    if m < 5 {
        return Err(Error::InvalidArgument(format!("family size m = {m}, need m >= 5")));
    }
    Ok(())
}

/// `3m` points whose down graph has maximum matching exactly
/// `⌈(3m − 2)/3⌉ = m`. Removing `a_0` and `b_0` (ids 0 and 1) gives `3m − 2`
/// points with maximum matching exactly `m − 1`.
pub fn tight_family(m: usize) -> Result<PointSet> {
    require_family_size(m)?;
    let ps = family_set(&tight_supports(m))?;
    let got = max_matching(build_down(&Arc::new(ps.clone()))?.graph()).size();
    let want = down_graph_matching_bound(ps.len());
    if got != want {
        return Err(Error::FamilySelfCheck(format!(
            "tight family m = {m}: matching {got}, expected {want}"
        )));
    }
    Ok(ps)
}

/// `⌈(k + 5)/3⌉`.
pub fn three_connected_matching(k: usize) -> usize {
    (k + 5).div_ceil(3)
}

/// `3m + 3` points whose down graph is 3-connected with maximum matching
/// exactly `⌈(3m + 8)/3⌉ = m + 3`. Removing `a_0`, or both `a_0` and `b_0`,
/// keeps it 3-connected with the same matching size.
pub fn three_connected_family(m: usize) -> Result<PointSet> {
    require_family_size(m)?;
    let ps = family_set(&three_connected_supports(m))?;
    let g = build_down(&Arc::new(ps.clone()))?;
    let got = max_matching(g.graph()).size();
    let want = three_connected_matching(ps.len());
    if got != want {
        return Err(Error::FamilySelfCheck(format!(
            "3-connected family m = {m}: matching {got}, expected {want}"
        )));
    }
    if !g.graph().is_k_connected(3) {
        return Err(Error::FamilySelfCheck(format!(
            "3-connected family m = {m}: down graph is not 3-connected"
        )));
    }
    Ok(ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_up;

    #[test]
    fn random_is_deterministic_and_certified() {
        let a = random_general_position(50, 7, 1 << 20).unwrap();
        let b = random_general_position(50, 7, 1 << 20).unwrap();
        assert_eq!(a, b);
        assert!(a.is_certified());
        assert!(a.general_position().is_ok());
        assert_ne!(a, random_general_position(50, 8, 1 << 20).unwrap());
        let one = random_general_position(1, 3, 10).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn budget_exhaustion() {
        // a 1×1 grid has a single location
        assert_eq!(
            random_general_position(2, 1, 1).unwrap_err(),
            Error::SamplingBudgetExhausted {
                requested: 2,
                resolution: 1
            }
        );
        // three rows cannot host four points with distinct heights
        assert!(random_general_position(4, 1, 3).is_err());
        assert!(random_general_position(0, 1, 3).is_err());
    }

    #[test]
    fn reflection() {
        let ps = random_general_position(30, 2, 1000).unwrap();
        assert_eq!(reflect_x(&reflect_x(&ps)), ps);
        let r = Arc::new(reflect_x(&ps));
        let ps = Arc::new(ps);
        assert_eq!(build_down(&r).unwrap().graph(), build_up(&ps).unwrap().graph());
        let single = PointSet::from_integers(&[(3, 4)]).unwrap();
        assert_eq!(reflect_x(&single), PointSet::from_integers(&[(3, -4)]).unwrap());
    }

    #[test]
    fn tight_family_sizes() {
        let ps = tight_family(5).unwrap();
        assert_eq!(ps.len(), 15);
        let g = build_down(&Arc::new(ps.clone())).unwrap();
        assert_eq!(max_matching(g.graph()).size(), 5);
        let v = Arc::new(ps.without(&[0, 1]).unwrap());
        assert_eq!(v.len(), 13);
        assert_eq!(max_matching(build_down(&v).unwrap().graph()).size(), 4);
        assert!(tight_family(4).is_err());
    }

    #[test]
    fn families_over_a_range() {
        for m in 5..=14 {
            let t = tight_family(m).unwrap();
            let v = Arc::new(t.without(&[0, 1]).unwrap());
            assert_eq!(max_matching(build_down(&v).unwrap().graph()).size(), m - 1, "m = {m}");
            let f = three_connected_family(m).unwrap();
            for drop in [&[0][..], &[0, 1]] {
                let v = Arc::new(f.without(drop).unwrap());
                let g = build_down(&v).unwrap();
                assert!(g.graph().is_k_connected(3), "m = {m}");
                assert_eq!(max_matching(g.graph()).size(), m + 3, "m = {m}");
            }
        }
    }

    #[test]
    fn three_connected_family_sizes() {
        let ps = three_connected_family(5).unwrap();
        assert_eq!(ps.len(), 18);
        for drop in [&[0][..], &[0, 1]] {
            let v = Arc::new(ps.without(drop).unwrap());
            let g = build_down(&v).unwrap();
            assert!(g.graph().is_k_connected(3));
            assert_eq!(max_matching(g.graph()).size(), 8);
        }
    }
}

//! Event-by-event state sum over Verma basis indices.

use std::collections::HashMap;

use super::weights::{crossing_targets, crossing_weight, pivotal, pivotal_inverse};
use crate::algebra::QaLaurent;
use crate::error::{Error, Result};
use crate::knots::{Event, LongKnotDiagram, Orientation};

/// Coefficient ring a state sum is evaluated in.
pub trait StateRing {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, e: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, e: &Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn embed(&self, p: &QaLaurent) -> Self::Elem;
    /// Largest basis index that can carry a nonzero weight.
    fn index_cap(&self) -> u32;
    /// Largest total number of `E^n (x) F^(n)` levels worth keeping.
    fn order_budget(&self) -> Option<u32>;

    /// Extra power of `A` carried by the pivotal element, which is `K` on
    /// the Verma module and `K^{1-r}` on the `r`-dimensional module at
    /// `q = zeta_{2r}`.
    fn pivotal_alpha_shift(&self) -> i64 {
        0
    }

    fn one(&self) -> Self::Elem {
        self.embed(&QaLaurent::one())
    }
}

type StateKey = (Vec<u32>, u32);

struct WeightCache<'r, R: StateRing> {
    ring: &'r R,
    crossings: HashMap<(i8, u32, u32, u32), Option<R::Elem>>,
    pivots: HashMap<(bool, u32), R::Elem>,
}

impl<'r, R: StateRing> WeightCache<'r, R> {
    fn crossing(&mut self, sign: i8, a: u32, b: u32, n: u32) -> Option<&R::Elem> {
        let ring = self.ring;
        self.crossings
            .entry((sign, a, b, n))
            .or_insert_with(|| {
                let w = ring.embed(&crossing_weight(sign, a, b, n)?);
                (!ring.is_zero(&w)).then_some(w)
            })
            .as_ref()
    }

    fn pivot(&mut self, inverse: bool, i: u32) -> &R::Elem {
        let ring = self.ring;
        self.pivots.entry((inverse, i)).or_insert_with(|| {
            let shift = ring.pivotal_alpha_shift();
            let w = if inverse {
                &pivotal_inverse(i) * &QaLaurent::monomial(0, -shift, 1)
            } else {
                &pivotal(i) * &QaLaurent::monomial(0, shift, 1)
            };
            ring.embed(&w)
        })
    }
}

/// Scalar by which a writhe-0 long-knot diagram acts on `v_0`.
pub fn state_sum<R: StateRing>(ring: &R, diagram: &LongKnotDiagram) -> Result<R::Elem> {
    if diagram.writhe() != 0 {
        return Err(Error::NonzeroAlphaSquareCounter(diagram.writhe()));
    }
    let cap = ring.index_cap();
    let budget = ring.order_budget().unwrap_or(u32::MAX);
    let mut cache = WeightCache { ring, crossings: HashMap::new(), pivots: HashMap::new() };
    let mut states: HashMap<StateKey, R::Elem> = HashMap::new();
    states.insert((vec![0], 0), ring.one());

    for ev in diagram.events() {
        let mut next: HashMap<StateKey, R::Elem> = HashMap::with_capacity(states.len());
        let mut push = |key: StateKey, val: R::Elem| {
            if ring.is_zero(&val) {
                return;
            }
            match next.get_mut(&key) {
                Some(acc) => ring.add_assign(acc, &val),
                None => {
                    next.insert(key, val);
                }
            }
        };
        for ((idx, used), val) in &states {
            match *ev {
                Event::Cup { lane, orientation } => {
                    for i in 0..=cap {
                        let mut nidx = idx.clone();
                        nidx.splice(lane..lane, [i, i]);
                        let v = match orientation {
                            Orientation::Clockwise => val.clone(),
                            Orientation::Counterclockwise => ring.mul(val, cache.pivot(true, i)),
                        };
                        push((nidx, *used), v);
                    }
                }
                Event::Cap { lane, orientation } => {
                    let i = idx[lane];
                    if idx[lane + 1] != i {
                        continue;
                    }
                    let mut nidx = idx.clone();
                    nidx.drain(lane..lane + 2);
                    let v = match orientation {
                        Orientation::Clockwise => ring.mul(val, cache.pivot(false, i)),
                        Orientation::Counterclockwise => val.clone(),
                    };
                    push((nidx, *used), v);
                }
                Event::Crossing { sign, lane } => {
                    let (a, b) = (idx[lane], idx[lane + 1]);
                    let top = if sign > 0 { a } else { b };
                    for n in 0..=top.min(budget.saturating_sub(*used)) {
                        let (l, r) = crossing_targets(sign, a, b, n);
                        if l > cap || r > cap {
                            continue;
                        }
                        let Some(w) = cache.crossing(sign, a, b, n) else {
                            continue;
                        };
                        let mut nidx = idx.clone();
                        nidx[lane] = l;
                        nidx[lane + 1] = r;
                        push((nidx, used + n), ring.mul(val, w));
                    }
                }
            }
        }
        states = next;
    }

    let mut total = ring.zero();
    for ((idx, _), val) in &states {
        if idx == &[0] {
            ring.add_assign(&mut total, val);
        }
    }
    Ok(total)
}

use crate::algebra::{LaurentPoly, QaLaurent, Var};
use crate::error::{Error, Result};
use crate::knots::{closure_to_long, normalize_writhe, open_closure, BraidWord, LongKnotDiagram};
use crate::universal::{state_sum, StateRing};

/// The `(N+1)`-dimensional simple module: `A = q^N`, indices `0..=N`.
struct SimpleModuleRing {
    color: u32,
}

impl StateRing for SimpleModuleRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(Var::Q)
    }

    fn is_zero(&self, e: &LaurentPoly) -> bool {
        e.is_zero()
    }

    fn add_assign(&self, acc: &mut LaurentPoly, e: &LaurentPoly) {
        for (k, c) in e.terms() {
            acc.add_term(k, c);
        }
    }

    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a * b
    }

    fn embed(&self, p: &QaLaurent) -> LaurentPoly {
        p.specialize_alpha(self.color as i64)
    }

    fn index_cap(&self) -> u32 {
        self.color
    }

    fn order_budget(&self) -> Option<u32> {
        None
    }
}

fn evaluate(d: &LongKnotDiagram, color: u32) -> Result<LaurentPoly> {
    state_sum(&SimpleModuleRing { color }, d)
}

/// Colored Jones polynomial `J_N` of the closure, 0-framed and normalized
/// to 1 on the unknot. Only even powers of `q` occur.
pub fn colored_jones(b: &BraidWord, color: u32) -> Result<LaurentPoly> {
    let j = evaluate(&normalize_writhe(&closure_to_long(b)?), color)?;
    if let Some((e, _)) = j.terms().find(|(e, _)| e % 2 != 0) {
        return Err(Error::OddExponent { var: 'q', exponent: e });
    }
    Ok(j)
}

/// Same invariant for a braid closing to a link, cut open along the
/// component of the first strand and 0-framed in total. Odd powers of `q`
/// appear for links with an even number of components.
pub fn colored_jones_link(b: &BraidWord, color: u32) -> Result<LaurentPoly> {
    evaluate(&normalize_writhe(&open_closure(b)?), color)
}

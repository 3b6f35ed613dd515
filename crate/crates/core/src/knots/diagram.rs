use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use crate::error::{Error, Result};

/// Turning direction of a cup or cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Left lane runs upward, right lane downward.
    Clockwise,
    /// Left lane runs downward, right lane upward.
    Counterclockwise,
}

/// One slice of a long-knot diagram read bottom to top.
///
/// `lane` is the position of the left of the two strands involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    Crossing { sign: i8, lane: usize },
    Cup { lane: usize, orientation: Orientation },
    Cap { lane: usize, orientation: Orientation },
}

/// Long (1-1 tangle) knot diagram as an ordered event list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongKnotDiagram {
    events: Vec<Event>,
    writhe: i64,
}

impl LongKnotDiagram {
    /// Validates lane bookkeeping: a single upward strand at both ends,
    /// crossings only between two upward lanes, cups and caps matching
    /// their orientation.
    pub fn new(events: Vec<Event>) -> Result<Self> {
        let mut up = vec![true];
        for (k, ev) in events.iter().enumerate() {
            let bad = |what: &str| Error::MalformedDiagram(format!("event {k}: {what}"));
            match *ev {
                Event::Crossing { sign, lane } => {
                    if sign != 1 && sign != -1 {
                        return Err(bad("crossing sign must be +1 or -1"));
                    }
                    if lane + 1 >= up.len() || !up[lane] || !up[lane + 1] {
                        return Err(bad("crossing needs two upward lanes"));
                    }
                }
                Event::Cup { lane, orientation } => {
                    if lane > up.len() {
                        return Err(bad("cup lane out of range"));
                    }
                    let cw = orientation == Orientation::Clockwise;
                    up.splice(lane..lane, [cw, !cw]);
                }
                Event::Cap { lane, orientation } => {
                    let cw = orientation == Orientation::Clockwise;
                    if lane + 1 >= up.len() || up[lane] != cw || up[lane + 1] == cw {
                        return Err(bad("cap does not match lane directions"));
                    }
                    up.drain(lane..lane + 2);
                }
            }
        }
        if up != [true] {
            return Err(Error::MalformedDiagram("diagram must end with one upward strand".into()));
        }
        let writhe = events
            .iter()
            .map(|e| match e {
                Event::Crossing { sign, .. } => *sign as i64,
                _ => 0,
            })
            .sum();
        Ok(LongKnotDiagram { events, writhe })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    pub fn crossings(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Crossing { .. })).count()
    }

    /// Largest number of simultaneous lanes.
    pub fn width(&self) -> usize {
        let mut lanes: usize = 1;
        let mut widest = 1;
        for ev in &self.events {
            match ev {
                Event::Cup { .. } => lanes += 2,
                Event::Cap { .. } => lanes -= 2,
                Event::Crossing { .. } => {}
            }
            widest = widest.max(lanes);
        }
        widest
    }
}

/// Opens the braid closure along its first strand; the remaining strands
/// are closed by clockwise loops on the right.
pub fn closure_to_long(b: &BraidWord) -> Result<LongKnotDiagram> {
    b.ensure_knot()?;
    open_closure(b)
}

/// Same construction without the knot check; for a link the result is the
/// tangle obtained by cutting the component through the first strand.
pub fn open_closure(b: &BraidWord) -> Result<LongKnotDiagram> {
    let s = b.strands();
    let mut events = Vec::with_capacity(b.len() + 2 * (s - 1));
    for lane in 1..s {
        events.push(Event::Cup { lane, orientation: Orientation::Clockwise });
    }
    for &l in b.letters() {
        events.push(Event::Crossing { sign: l.signum() as i8, lane: l.unsigned_abs() as usize - 1 });
    }
    for lane in (1..s).rev() {
        events.push(Event::Cap { lane, orientation: Orientation::Clockwise });
    }
    LongKnotDiagram::new(events)
}

/// Appends `|w|` curls of sign `-sign(w)` so the writhe becomes 0.
pub fn normalize_writhe(d: &LongKnotDiagram) -> LongKnotDiagram {
    let w = d.writhe();
    let sign = -w.signum() as i8;
    let mut events = d.events.clone();
    for _ in 0..w.unsigned_abs() {
        events.extend([
            Event::Cup { lane: 1, orientation: Orientation::Clockwise },
            Event::Crossing { sign, lane: 0 },
            Event::Cap { lane: 1, orientation: Orientation::Clockwise },
        ]);
    }
    LongKnotDiagram { events, writhe: 0 }
}

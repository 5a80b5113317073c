use alloc::collections::BTreeMap;
use core::cell::RefCell;

use super::rep::{hom_dim_oracle, rep_of_interval};
use super::resolution::ext1_dim_oracle;
use crate::error::Result;
use crate::intervals::Interval;
use crate::linquiver::LinearQuiver;

/// Memoized oracle dimensions between interval modules of one quiver.
///
/// Sweeps ask the same interval pairs over and over (every tree on a quiver
/// draws its standard modules from the same few intervals), so results are
/// cached per pair. Not `Sync`; use one per thread.
#[derive(Debug)]
pub struct IntervalOracle {
    q: LinearQuiver,
    cache: RefCell<BTreeMap<(Interval, Interval), (usize, usize)>>,
}

impl IntervalOracle {
    pub fn new(q: &LinearQuiver) -> Self {
        IntervalOracle { q: q.clone(), cache: RefCell::new(BTreeMap::new()) }
    }

    pub fn quiver(&self) -> &LinearQuiver {
        &self.q
    }

    /// `(dim Hom(x, y), dim Ext¹(x, y))`.
    pub fn dims(&self, x: Interval, y: Interval) -> Result<(usize, usize)> {
        let (x, y) = (canon(x), canon(y));
        if let Some(&d) = self.cache.borrow().get(&(x, y)) {
            return Ok(d);
        }
        let (mx, my) = (rep_of_interval(&self.q, x)?, rep_of_interval(&self.q, y)?);
        let d = (hom_dim_oracle(&self.q, &mx, &my)?, ext1_dim_oracle(&self.q, &mx, &my)?);
        self.cache.borrow_mut().insert((x, y), d);
        Ok(d)
    }

    pub fn hom(&self, x: Interval, y: Interval) -> Result<usize> {
        Ok(self.dims(x, y)?.0)
    }

    pub fn ext1(&self, x: Interval, y: Interval) -> Result<usize> {
        Ok(self.dims(x, y)?.1)
    }

    pub fn len(&self) -> usize {
        self.cache.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn canon(x: Interval) -> Interval {
    if x.is_empty() {
        Interval::EMPTY
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linquiver::parse_orientation;

    #[test]
    fn cached_values_match_and_are_reused() {
        let q = parse_orientation("RRL").unwrap();
        let o = IntervalOracle::new(&q);
        let (x, y) = (Interval::new(1, 2), Interval::new(2, 4));
        let first = o.dims(x, y).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o.dims(x, y).unwrap(), first);
        assert_eq!(o.len(), 1);
        assert_eq!(o.dims(Interval::EMPTY, y).unwrap(), (0, 0));
    }
}

use super::MooreStrategy;
use crate::error::{Error, Result};
use crate::game::{Arena, Player};

/// Number of memoryless strategies of `p`, saturating at `u128::MAX`.
pub fn count_memoryless(a: &Arena, p: Player) -> u128 {
    a.vertices_of(p).fold(1u128, |acc, v| acc.saturating_mul(a.out_edges(v).len() as u128))
}

/// Every memoryless strategy of `p`, or `BudgetExceeded` if there are more than `budget`.
pub fn enumerate_memoryless(a: &Arena, p: Player, budget: u128) -> Result<MemorylessIter<'_>> {
    let count = count_memoryless(a, p);
    if count > budget {
        return Err(Error::BudgetExceeded(count));
    }
    let owned: Vec<usize> = a.vertices_of(p).collect();
    Ok(MemorylessIter { a, p, digits: vec![0; owned.len()], owned, done: false })
}

pub struct MemorylessIter<'a> {
    a: &'a Arena,
    p: Player,
    owned: Vec<usize>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for MemorylessIter<'_> {
    type Item = MooreStrategy;

    fn next(&mut self) -> Option<MooreStrategy> {
        if self.done {
            return None;
        }
        let mut choice = vec![None; self.a.num_vertices()];
        for (i, &v) in self.owned.iter().enumerate() {
            choice[v] = Some(self.a.out_edges(v)[self.digits[i]]);
        }
        let s = MooreStrategy::memoryless(self.a, self.p, &choice);
        // odometer increment
        self.done = true;
        for (i, &v) in self.owned.iter().enumerate() {
            self.digits[i] += 1;
            if self.digits[i] < self.a.out_edges(v).len() {
                self.done = false;
                break;
            }
            self.digits[i] = 0;
        }
        Some(s)
    }
}

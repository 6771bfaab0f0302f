//! Vertex sets as bit vectors.

use bitvec::vec::BitVec;

pub type VertexSet = BitVec;

pub fn empty(n: usize) -> VertexSet {
    BitVec::repeat(false, n)
}

pub fn full(n: usize) -> VertexSet {
    BitVec::repeat(true, n)
}

pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> VertexSet {
    let mut s = empty(n);
    for v in items {
        s.set(v, true);
    }
    s
}

pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> VertexSet {
    let mut s = empty(n);
    for v in 0..n {
        if f(v) {
            s.set(v, true);
        }
    }
    s
}

pub fn complement(s: &VertexSet) -> VertexSet {
    !s.clone()
}

pub fn union(a: &VertexSet, b: &VertexSet) -> VertexSet {
    let mut r = a.clone();
    r |= b.as_bitslice();
    r
}

pub fn intersect(a: &VertexSet, b: &VertexSet) -> VertexSet {
    let mut r = a.clone();
    r &= b.as_bitslice();
    r
}

pub fn minus(a: &VertexSet, b: &VertexSet) -> VertexSet {
    intersect(a, &complement(b))
}

pub fn is_subset(a: &VertexSet, b: &VertexSet) -> bool {
    a.iter_ones().all(|v| b[v])
}

pub fn to_vec(s: &VertexSet) -> Vec<usize> {
    s.iter_ones().collect()
}

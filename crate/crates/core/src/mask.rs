//! Faces as bitmasks over local vertex indices.

use core::cmp::Ordering;

pub(crate) type Mask = u128;

pub(crate) const MAX_BITS: usize = 128;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u128 << i
}

#[inline]
pub(crate) fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Ascending iterator over the set bits.
#[derive(Clone, Copy)]
pub(crate) struct Bits(Mask);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[inline]
pub(crate) fn bits(m: Mask) -> Bits {
    Bits(m)
}

#[inline]
pub(crate) fn full(n: usize) -> Mask {
    if n >= MAX_BITS {
        !0
    } else {
        (1u128 << n) - 1
    }
}

/// Lexicographic order of the sorted index sequences of `a` and `b`.
pub(crate) fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let x = a ^ b;
    let low = x & x.wrapping_neg();
    // everything below `low` is shared; `above` selects indices strictly greater than it
    let above = !((low << 1).wrapping_sub(1));
    if a & low != 0 {
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Packs the bits of `m` found at the positions of `within` into the low bits.
pub(crate) fn compress(m: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, i) in bits(within).enumerate() {
        if m & bit(i) != 0 {
            out |= bit(k);
        }
    }
    out
}

/// Visits every submask of `m`, including `m` and the empty mask.
pub(crate) fn for_each_submask(m: Mask, mut f: impl FnMut(Mask)) {
    let mut s = m;
    loop {
        f(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & m;
    }
}

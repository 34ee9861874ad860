//! Small helpers for `u64` vertex sets.

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

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

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Calls `f` on every `k`-subset of `mask` (as a mask), in colex order.
pub fn for_each_subset_of_size(mask: u64, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    let items: Vec<usize> = Bits(mask).collect();
    if k > items.len() {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let s = idx.iter().fold(0u64, |acc, &i| acc | bit(items[i]));
        if !f(s) {
            return false;
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < items.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

use alloc::vec::Vec;
use core::fmt;

/// A permutation `w` of `{1, …, m}`, stored 0-based: `images[i] = w(i+1) − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_some());
        Self { images }
    }

    pub fn identity(m: usize) -> Self {
        Self { images: (0..m).collect() }
    }

    /// Builds from 1-based images, as written in the usual one-line notation.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        let zero_based = images.iter().map(|&i| i.checked_sub(1)).collect::<Option<Vec<_>>>()?;
        Self::new(zero_based)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| i == w)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &w) in self.images.iter().enumerate() {
            inv[w] = i;
        }
        Self { images: inv }
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count()).sum()
    }

    /// Number of positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> usize {
        self.images.windows(2).filter(|p| p[0] > p[1]).count()
    }

    /// `(−1)^{inversions}` as `±1`.
    pub fn signature(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `0..m` in lexicographic order.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(m);
        let mut used = alloc::vec![false; m];
        fn rec(m: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == m {
                out.push(Permutation { images: current.clone() });
                return;
            }
            for i in 0..m {
                if !used[i] {
                    used[i] = true;
                    current.push(i);
                    rec(m, current, used, out);
                    current.pop();
                    used[i] = false;
                }
            }
        }
        rec(m, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", w + 1)?;
        }
        f.write_str("]")
    }
}

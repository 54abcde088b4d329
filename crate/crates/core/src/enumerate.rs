//! Literal enumeration of ordered index tuples.

use crate::exact::Ring;

/// Elementary symmetric sum of degree `m`, by literal enumeration of
/// strictly increasing index tuples.
pub fn strict_sum<F: Ring>(w: &[F], m: usize, template: &F) -> F {
    tuple_sum(w, m, 1, template)
}

/// Complete homogeneous sum of degree `m`, by literal enumeration of weakly
/// increasing index tuples.
pub fn weak_sum<F: Ring>(w: &[F], m: usize, template: &F) -> F {
    tuple_sum(w, m, 0, template)
}

/// Sum over tuples whose consecutive indices differ by at least `gap`. The
/// innermost index is summed via suffix sums of `w`.
fn tuple_sum<F: Ring>(w: &[F], m: usize, gap: usize, template: &F) -> F {
    if m == 0 {
        return template.one_like();
    }
    let mut suffix = vec![template.zero_like(); w.len() + 1];
    for i in (0..w.len()).rev() {
        suffix[i] = suffix[i + 1].clone() + w[i].clone();
    }
    let go = |start: usize, left: usize, acc: &F, total: &mut F| {
        fn rec<F: Ring>(
            w: &[F],
            suffix: &[F],
            gap: usize,
            start: usize,
            left: usize,
            acc: &F,
            total: &mut F,
        ) {
            if start >= w.len() {
                return;
            }
            if left == 1 {
                *total = total.clone() + acc.clone() * suffix[start].clone();
                return;
            }
            for i in start..w.len() {
                rec(
                    w,
                    suffix,
                    gap,
                    i + gap,
                    left - 1,
                    &(acc.clone() * w[i].clone()),
                    total,
                );
            }
        }
        rec(w, &suffix, gap, start, left, acc, total)
    };
    let mut total = template.zero_like();
    go(0, m, &template.one_like(), &mut total);
    total
}

/// Iterator over weakly increasing tuples `lo <= i_1 <= … <= i_len <= hi`.
pub struct WeakTuples {
    hi: u64,
    cur: Option<Vec<u64>>,
}

impl WeakTuples {
    pub fn new(lo: u64, hi: u64, len: usize) -> Self {
        let cur = (lo <= hi || len == 0).then(|| vec![lo; len]);
        Self { hi, cur }
    }
}

impl Iterator for WeakTuples {
    type Item = Vec<u64>;
    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().expect("checked");
        match cur.iter().rposition(|&v| v < self.hi) {
            Some(p) => {
                let v = cur[p] + 1;
                for x in &mut cur[p..] {
                    *x = v;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

//! q-generalized `(r,s)`-Stirling numbers of both kinds.
//!
//! With the generalized falling factorial
//! `(x)_n = x^r (x - [r]^s)(x - [r+1]^s)…(x - [n-1]^s)` for `n > r` and
//! `(x)_n = x^n` for `n <= r`, the first kind is defined by
//! `(x)_n = Σ_k (-1)^(n-k) S1(n,k) x^k` and the second kind by
//! `x^n = Σ_k S2(n,k) (x)_k`. Tables are filled from these base rows with
//!
//! ```text
//! S1(n,k) = S1(n-1,k-1) + [n-1]^s S1(n-1,k)
//! S2(n,k) = S2(n-1,k-1) + [k]^s   S2(n-1,k)
//! ```
//!
//! for `n > r`. The level `s` may be negative for the second kind.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::enumerate::{strict_sum, weak_sum, WeakTuples};
use crate::error::{Error, Result};
use crate::exact::{int, Field, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

#[derive(Debug, Clone)]
struct StirlingTable<F> {
    /// Largest column index stored in every row.
    kcap: usize,
    rows: Vec<Vec<F>>,
}

/// A value of `q` together with memoized q-numbers and Stirling tables.
#[derive(Debug)]
pub struct QContext<F: Field> {
    q: F,
    qnums: Mutex<Vec<F>>,
    tables: Mutex<HashMap<(StirlingKind, u64, i64), StirlingTable<F>>>,
}

impl<F: Field> QContext<F> {
    pub fn new(q: F) -> Self {
        let zero = q.zero_like();
        Self {
            q,
            qnums: Mutex::new(vec![zero]),
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `[k]_q = 1 + q + … + q^(k-1)`, which is `k` at `q = 1`.
    pub fn qnum(&self, k: u64) -> F {
        let mut cache = self.qnums.lock().expect("qnum cache");
        while cache.len() as u64 <= k {
            let next = cache.last().expect("seeded").clone() * self.q.clone() + self.q.one_like();
            cache.push(next);
        }
        cache[k as usize].clone()
    }

    /// `([k]_q)^s`.
    pub fn qnum_pow(&self, k: u64, s: i64) -> Result<F> {
        let base = self.qnum(k);
        if s < 0 && base.is_zero_like() {
            return Err(Error::ZeroQNumber { k });
        }
        base.powi(s)
    }

    /// `[1]_q [2]_q … [k]_q`.
    pub fn qfactorial(&self, k: u64) -> F {
        (1..=k).fold(self.q.one_like(), |acc, i| acc * self.qnum(i))
    }

    /// Unsigned first-kind number `⎡n, k⎤_q^(r,s)`.
    pub fn stirling1(&self, n: u64, k: u64, r: u64, s: i64) -> Result<F> {
        self.lookup(StirlingKind::First, n, k, r, s)
    }

    /// Second-kind number `⎧n, k⎫_q^(r,s)`.
    pub fn stirling2(&self, n: u64, k: u64, r: u64, s: i64) -> Result<F> {
        self.lookup(StirlingKind::Second, n, k, r, s)
    }

    fn lookup(&self, kind: StirlingKind, n: u64, k: u64, r: u64, s: i64) -> Result<F> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "Stirling parameter r must be >= 1".into(),
            ));
        }
        if k > n {
            return Ok(self.q.zero_like());
        }
        let mut tables = self.tables.lock().expect("stirling cache");
        let key = (kind, r, s);
        let fits = tables
            .get(&key)
            .is_some_and(|t| t.kcap >= k as usize && t.rows.len() > n as usize);
        if !fits {
            let (old_k, old_n) = tables
                .get(&key)
                .map_or((0, 0), |t| (t.kcap, t.rows.len().saturating_sub(1)));
            let kcap = old_k.max(k as usize);
            let nmax = old_n.max(n as usize);
            let table = self.build(kind, r, s, nmax, kcap)?;
            tables.insert(key, table);
        }
        Ok(tables[&key].rows[n as usize][k as usize].clone())
    }

    fn build(
        &self,
        kind: StirlingKind,
        r: u64,
        s: i64,
        nmax: usize,
        kcap: usize,
    ) -> Result<StirlingTable<F>> {
        let zero = self.q.zero_like();
        let one = self.q.one_like();
        let r = r as usize;
        let mut rows: Vec<Vec<F>> = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let mut row = vec![zero.clone(); kcap + 1];
            if n <= r {
                if n <= kcap {
                    row[n] = one.clone();
                }
            } else {
                let prev = &rows[n - 1];
                for k in r..=kcap.min(n) {
                    let mut v = prev[k - 1].clone();
                    if !prev[k].is_zero_like() {
                        let weight = match kind {
                            StirlingKind::First => self.qnum_pow(n as u64 - 1, s)?,
                            StirlingKind::Second => self.qnum_pow(k as u64, s)?,
                        };
                        v = v + weight * prev[k].clone();
                    }
                    row[k] = v;
                }
            }
            rows.push(row);
        }
        Ok(StirlingTable { kcap, rows })
    }

    /// First formula of the explicit first-kind sum:
    /// `⎡n,m⎤ = Π_{i=r}^{n-1}[i]^s · Σ_{r ≤ i_1 < … < i_{m-r} ≤ n-1} Π 1/[i_j]^s`,
    /// valid for `r <= m <= n-1`.
    pub fn stirling1_direct(&self, n: u64, m: u64, r: u64, s: i64) -> Result<F> {
        check_range(r >= 1 && r <= m && m < n, "r <= m <= n-1", (n, m, r))?;
        let prefactor = (r..n).try_fold(self.q.one_like(), |acc, i| {
            Ok::<_, Error>(acc * self.qnum_pow(i, s)?)
        })?;
        let inv: Vec<F> = (r..n)
            .map(|i| self.qnum_pow(i, -s))
            .collect::<Result<_>>()?;
        Ok(prefactor * strict_sum(&inv, (m - r) as usize, &self.q))
    }

    /// `⎡n, n-m⎤` as the strict sum `Σ_{r ≤ i_1 < … < i_m ≤ n-1} Π [i_j]^s`.
    pub fn stirling1_direct_codegree(&self, n: u64, m: u64, r: u64, s: i64) -> Result<F> {
        check_range(r >= 1 && n >= m + r, "n-m >= r", (n, m, r))?;
        let w: Vec<F> = (r..n).map(|i| self.qnum_pow(i, s)).collect::<Result<_>>()?;
        Ok(strict_sum(&w, m as usize, &self.q))
    }

    /// `⎡n, n-m⎤` as the shifted weak sum
    /// `Σ_{r ≤ i_1 ≤ … ≤ i_m ≤ n-m} Π_j [i_j + j - 1]^s`.
    pub fn stirling1_direct_codegree_weak(&self, n: u64, m: u64, r: u64, s: i64) -> Result<F> {
        check_range(r >= 1 && n >= m + r, "n-m >= r", (n, m, r))?;
        let mut total = self.q.zero_like();
        for idx in WeakTuples::new(r, n - m, m as usize) {
            let mut term = self.q.one_like();
            for (j, &i) in idx.iter().enumerate() {
                term = term * self.qnum_pow(i + j as u64, s)?;
            }
            total = total + term;
        }
        Ok(total)
    }

    /// First formula of the explicit second-kind sum, valid for
    /// `r+1 <= k <= n`: with `i_0 = 0` and `i_{k-r+1} = n-k`,
    /// `⎧n,k⎫ = Σ_{0 ≤ i_1 ≤ … ≤ i_{k-r} ≤ n-k} Π_{j=0}^{k-r} [r+j]^((i_{j+1}-i_j)s)`.
    pub fn stirling2_direct(&self, n: u64, k: u64, r: u64, s: i64) -> Result<F> {
        check_range(r >= 1 && r < k && k <= n, "r+1 <= k <= n", (n, k, r))?;
        let t = (k - r) as usize;
        let top = n - k;
        let mut total = self.q.zero_like();
        for idx in WeakTuples::new(0, top, t) {
            let mut term = self.q.one_like();
            let mut prev = 0u64;
            for (j, &i) in idx.iter().chain(std::iter::once(&top)).enumerate() {
                let e = (i - prev) as i64 * s;
                if e != 0 {
                    term = term
                        * self
                            .qnum_pow(r + j as u64, e.signum())?
                            .pow(e.unsigned_abs());
                }
                prev = i;
            }
            total = total + term;
        }
        Ok(total)
    }

    /// `⎧n, n-k⎫ = Σ_{r ≤ i_1 ≤ … ≤ i_k ≤ n-k} Π [i_j]^s`, valid for `n-k >= r`.
    pub fn stirling2_direct_codegree(&self, n: u64, k: u64, r: u64, s: i64) -> Result<F> {
        check_range(r >= 1 && n >= k + r, "n-k >= r", (n, k, r))?;
        let w: Vec<F> = (r..=n - k)
            .map(|i| self.qnum_pow(i, s))
            .collect::<Result<_>>()?;
        Ok(weak_sum(&w, k as usize, &self.q))
    }
}

/// r-Stirling number of the first kind `⎡n,k⎤_1^(r,1)`.
pub fn r_stirling1_q1(n: u64, k: u64, r: u64) -> Rational {
    QContext::new(int(1))
        .stirling1(n, k, r, 1)
        .expect("positive level never divides")
}

fn check_range(ok: bool, bound: &str, got: (u64, u64, u64)) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfValidityRange {
            route: "explicit Stirling sum",
            bound: bound.to_string(),
            got: format!("(n, index, r) = {got:?}"),
        })
    }
}

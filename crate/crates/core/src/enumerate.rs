//! Exhaustive enumeration of small monoids and flows for law sweeps.

use crate::category::{size, ObjectRef, Payload};
use crate::dynamics::{validate_flow, Flow, PreFlow};
use crate::error::Result;
use crate::finset::{self, FiniteMonoid};
use crate::time::TimeObject;

/// Every monoid structure on `{0,…,n-1}` with unit `0`, in lexicographic
/// order of the table. Isomorphic copies are all included.
pub fn monoids_of_size(n: usize) -> Vec<FiniteMonoid> {
    if n == 0 {
        return Vec::new();
    }
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let free = (n - 1) * (n - 1);
    let count = n.pow(free as u32);
    let mut out = Vec::new();
    for code in 0..count {
        let mut table = vec![0; n * n];
        for i in 0..n {
            table[i] = i;
            table[i * n] = i;
        }
        let mut c = code;
        for k in (0..free).rev() {
            let (s, t) = (1 + k / (n - 1), 1 + k % (n - 1));
            table[s * n + t] = c % n;
            c /= n;
        }
        if is_associative(&table, n) {
            out.push(FiniteMonoid::from_indices(labels.clone(), table, 0).expect("checked table"));
        }
    }
    out
}

fn is_associative(table: &[usize], n: usize) -> bool {
    let op = |a: usize, b: usize| table[a * n + b];
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))))
}

/// All monoids of size `1..=max`, smallest first.
pub fn monoids_up_to(max: usize) -> Vec<FiniteMonoid> {
    (1..=max).flat_map(monoids_of_size).collect()
}

/// The set `{a, b, c, …}` with `n` elements.
pub fn carrier(n: usize) -> ObjectRef {
    let labels: Vec<String> = (0..n)
        .map(|i| {
            let letter = (b'a' + (i % 26) as u8) as char;
            if i < 26 {
                letter.to_string()
            } else {
                format!("{letter}{}", i / 26)
            }
        })
        .collect();
    finset::object(&labels).expect("distinct labels")
}

/// Every tabulation `T⊗Ω → Ω` that passes [`validate_flow`], in
/// lexicographic table order.
pub fn all_flows(time: &TimeObject, omega: &ObjectRef) -> Result<Vec<Flow>> {
    let m = size(time.object())?;
    let k = size(omega)?;
    let len = m * k;
    let mut out = Vec::new();
    let mut table = vec![0usize; len];
    loop {
        let pre = PreFlow::new(time.clone(), omega.clone(), phi(time, omega, &table)?)?;
        if validate_flow(&pre)?.iter().all(|r| r.holds()) {
            out.push(Flow::new(pre)?);
        }
        if !advance(&mut table, k) {
            break;
        }
    }
    Ok(out)
}

fn phi(time: &TimeObject, omega: &ObjectRef, table: &[usize]) -> Result<crate::category::Morphism> {
    let dom = crate::category::tensor_obj(time.object(), omega)?;
    crate::category::Morphism::new(dom, omega.clone(), Payload::Table(table.into()))
}

/// Odometer step over `k`-ary words; false once every word was visited.
fn advance(word: &mut [usize], k: usize) -> bool {
    if k == 0 {
        return false;
    }
    for d in word.iter_mut().rev() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

/// The flows of one monoid on carriers of every size `0..=max_omega`.
#[derive(Debug, Clone)]
pub struct MonoidSweep {
    pub time: TimeObject,
    pub flows: Vec<Flow>,
}

/// All valid flows for every monoid of size `≤ max_time` on carriers of
/// size `≤ max_omega`.
pub fn flow_sweep(max_time: usize, max_omega: usize) -> Result<Vec<MonoidSweep>> {
    monoids_up_to(max_time)
        .iter()
        .map(|m| {
            let time = m.as_time_object();
            let mut flows = Vec::new();
            for k in 0..=max_omega {
                flows.extend(all_flows(&time, &carrier(k))?);
            }
            Ok(MonoidSweep { time, flows })
        })
        .collect()
}

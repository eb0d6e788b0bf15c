//! Families with closed forms: generalized Pitman-Stanley polytopes,
//! hyper-permutahedra and building sets.

use crate::error::{Error, Result};
use crate::geometry::{binomial, FVector};
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::partition::for_each_composition;
use crate::vset::VertexSet;

/// `PS_{n,A}`: the Minkowski sum of the simplices on `{1..a}` for `a ∈ A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsSpec {
    n: usize,
    a: Vec<usize>,
}

impl PsSpec {
    /// Requires `A ⊆ {1..n}` and `n ∈ A`.
    pub fn new(n: usize, a: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut a: Vec<usize> = a.into_iter().collect();
        a.sort_unstable();
        a.dedup();
        if n > VertexSet::MAX_ELEMENT {
            return Err(Error::TooManyVertices {
                n,
                max: VertexSet::MAX_ELEMENT,
            });
        }
        if a.last() != Some(&n) {
            return Err(Error::InvalidParameters(format!("the largest element of A must be n = {n}")));
        }
        if a[0] == 0 {
            return Err(Error::InvalidParameters("A must consist of positive integers".into()));
        }
        Ok(PsSpec { n, a })
    }

    /// `n = m k + 1` and `A = {k+1, 2k+1, ..., n}`.
    pub fn uniform(k: usize, m: usize) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::InvalidParameters("k and m must be positive".into()));
        }
        PsSpec::new(m * k + 1, (1..=m).map(|i| i * k + 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self) -> &[usize] {
        &self.a
    }

    /// `Ā = {n - a : a ∈ A}`, ascending.
    pub fn complement(&self) -> Vec<u64> {
        let mut bar: Vec<u64> = self.a.iter().map(|&a| (self.n - a) as u64).collect();
        bar.sort_unstable();
        bar
    }

    /// `(k, m)` when `A` is the chain `{k+1, 2k+1, ..., mk+1}`.
    pub fn uniform_gap(&self) -> Option<(usize, usize)> {
        let first = *self.a.first()?;
        if first < 2 {
            return None;
        }
        let k = first - 1;
        let chain = self.a.iter().enumerate().all(|(i, &a)| a == (i + 1) * k + 1);
        chain.then_some((k, self.a.len()))
    }
}

/// Edges `{1..a}` for `a ∈ A`, dropping `a = 1` (a point summand).
pub fn ps_hypergraph(spec: &PsSpec) -> Hypergraph {
    let edges = spec
        .a
        .iter()
        .filter(|&&a| a >= 2)
        .map(|&a| VertexSet::full(a));
    Hypergraph::from_sets(spec.n, edges).expect("initial segments are valid edges")
}

/// Closed form `f_j = Σ_α Π_i C(a_i - a_{i-1} + 1, α_i + 1)` with `a_0 = 1`.
///
/// This is the coefficient list of `Π_i Σ_α C(g_i + 1, α + 1) t^α` over the gaps `g_i`.
pub fn ps_f_vector(spec: &PsSpec) -> Result<FVector> {
    if spec.a.contains(&1) {
        return Err(Error::InvalidParameters(
            "the closed form needs 1 ∉ A; drop the point summand first".into(),
        ));
    }
    let mut poly = vec![1u64];
    let mut prev = 1;
    for &a in &spec.a {
        let gap = (a - prev) as u64;
        let factor: Vec<u64> = (0..=gap).map(|alpha| binomial(gap + 1, alpha + 1)).collect();
        poly = multiply(&poly, &factor);
        prev = a;
    }
    Ok(FVector::new(poly))
}

fn multiply(p: &[u64], q: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// The uniform-gap specialization, as a sum over `b_0 + ... + b_k = m` with
/// `Σ i b_i = j` of `m!/(Π b_i!) Π C(k+1, i+1)^{b_i}`.
pub fn ps_f_vector_uniform(k: usize, m: usize) -> Result<FVector> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidParameters("k and m must be positive".into()));
    }
    let mut f = vec![0u64; m * k + 1];
    let mut b = vec![0usize; k + 1];
    fill_counts(&mut b, 0, m, &mut |b| {
        let j: usize = b.iter().enumerate().map(|(i, &bi)| i * bi).sum();
        let mut term = multinomial(m, b);
        for (i, &bi) in b.iter().enumerate() {
            term *= binomial(k as u64 + 1, i as u64 + 1).pow(bi as u32);
        }
        f[j] += term;
    });
    Ok(FVector::new(f))
}

/// Calls `visit` on every `b` with `Σ b = total`, filling positions from `at` on.
fn fill_counts(b: &mut [usize], at: usize, total: usize, visit: &mut impl FnMut(&[usize])) {
    if at + 1 == b.len() {
        b[at] = total;
        visit(b);
        return;
    }
    for x in 0..=total {
        b[at] = x;
        fill_counts(b, at + 1, total - x, visit);
    }
}

fn multinomial(m: usize, parts: &[usize]) -> u64 {
    let mut left = m as u64;
    let mut out = 1u64;
    for &p in parts {
        out *= binomial(left, p as u64);
        left -= p as u64;
    }
    out
}

/// Cap on the brute-force candidate count of [`parking_count`].
pub const PARKING_CANDIDATE_CAP: u64 = 10_000_000;

/// Length-`length` sequences over `b` whose increasing rearrangement has `b_i ≤ i - 1`.
pub fn parking_count(length: usize, b: &[u64]) -> Result<u64> {
    let mut values = b.to_vec();
    values.sort_unstable();
    values.dedup();
    let count = (values.len() as u128).checked_pow(length as u32).unwrap_or(u128::MAX);
    if count > PARKING_CANDIDATE_CAP as u128 {
        return Err(Error::TooManyCandidates {
            what: "parking candidate sequences",
            count,
            cap: PARKING_CANDIDATE_CAP,
        });
    }
    if length == 0 {
        return Ok(1);
    }
    if values.is_empty() {
        return Ok(0);
    }
    let mut cursor = vec![0usize; length];
    let mut seq = vec![0u64; length];
    let mut parked = 0u64;
    loop {
        for (s, &c) in seq.iter_mut().zip(&cursor) {
            *s = values[c];
        }
        seq.sort_unstable();
        if seq.iter().enumerate().all(|(i, &x)| x <= i as u64) {
            parked += 1;
        }
        let mut k = length;
        loop {
            if k == 0 {
                return Ok(parked);
            }
            k -= 1;
            cursor[k] += 1;
            if cursor[k] < values.len() {
                break;
            }
            cursor[k] = 0;
        }
    }
}

/// `Vol(PS_{n,A}) = |Park_{n-1, Ā}|`.
pub fn ps_volume(spec: &PsSpec) -> Result<u64> {
    parking_count(spec.n - 1, &spec.complement())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `f_j ≡ 0 (mod p)` for `j < m(p - 1)` on `PS_{n,A}`, `n = m(p-1)+1`,
/// `A = {p, 2(p-1)+1, ..., n}`.
pub fn ps_mod_p_check(p: u64, m: usize) -> Result<bool> {
    Ok(ps_mod_p_residues(p, m)?.iter().all(|&r| r == 0))
}

/// `f_j mod p` for every `j < m(p - 1)`.
pub fn ps_mod_p_residues(p: u64, m: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = ps_f_vector(&PsSpec::uniform(p as usize - 1, m)?)?;
    let top = m * (p as usize - 1);
    Ok(f.counts()[..top].iter().map(|&x| x % p).collect())
}

/// All `k`-subsets of `{1..n}`.
pub fn hyperperm_hypergraph(n: usize, k: usize) -> Result<Hypergraph> {
    check_hyperperm(n, k)?;
    let edges = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|s| s.len() == k);
    Hypergraph::from_sets(n, edges)
}

fn check_hyperperm(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= n, got n = {n}, k = {k}")));
    }
    if n >= VertexSet::MAX_ELEMENT {
        return Err(Error::TooManyVertices {
            n,
            max: VertexSet::MAX_ELEMENT - 1,
        });
    }
    Ok(())
}

/// An ordered pseudo-partition `(A_0, ..., A_p, B)`: nonempty parts then a possibly empty tail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Opp {
    parts: Vec<VertexSet>,
    tail: VertexSet,
}

impl Opp {
    pub fn new(n: usize, parts: Vec<VertexSet>, tail: VertexSet) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidComposition("an OPP needs at least one part, all nonempty".into()));
        }
        let mut seen = tail;
        for &p in &parts {
            if seen.intersects(p) {
                return Err(Error::InvalidComposition("OPP parts overlap".into()));
            }
            seen |= p;
        }
        if seen != VertexSet::full(n) {
            return Err(Error::InvalidComposition(format!("OPP does not cover {{1..{n}}}")));
        }
        Ok(Opp { parts, tail })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn tail(&self) -> VertexSet {
        self.tail
    }

    /// The `j` with `self ∈ OPP_{n,k,j}`, if any.
    pub fn face_dimension(&self, n: usize, k: usize) -> Option<usize> {
        let b = self.tail.len();
        let last = self.parts.last().map_or(0, |p| p.len());
        let ok = b < k && k <= b + last && b + last <= n;
        ok.then(|| n - b - self.parts.len())
    }
}

/// `f_j = |OPP_{n,k,j}|`, counted over tail sizes and compositions of the rest.
///
/// Only the sizes of `B` and `A_p` enter the constraints, so each composition of
/// `{1..n-|B|}` stands for `C(n, |B|)` OPPs.
pub fn opp_f_vector(n: usize, k: usize, limits: &Limits) -> Result<FVector> {
    check_hyperperm(n, k)?;
    limits.check(n)?;
    let mut f = vec![0u64; n];
    for b in 0..k.min(n) {
        let rest = n - b;
        let weight = binomial(n as u64, b as u64);
        for_each_composition(rest, |parts| {
            let last = parts.last().expect("rest is nonempty").len();
            if k <= b + last {
                f[n - b - parts.len()] += weight;
            }
        });
    }
    Ok(FVector::new(f))
}

/// `n! / (k-1)!`, the vertex count of the hyper-permutahedron.
pub fn hyperperm_vertex_count(n: usize, k: usize) -> u64 {
    (k as u64..=n as u64).product()
}

/// Edges plus singletons are closed under unions of intersecting pairs.
pub fn is_building_set(g: &Hypergraph) -> bool {
    let edges = g.edges();
    edges.iter().enumerate().all(|(i, &a)| {
        edges[i + 1..]
            .iter()
            .all(|&b| !a.intersects(b) || g.edge_index(a | b).is_some())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::make_hypergraph;

    #[test]
    fn ps_builder() {
        let s = PsSpec::new(3, [2, 3]).unwrap();
        assert_eq!(ps_hypergraph(&s), make_hypergraph(3, &[vec![1, 2], vec![1, 2, 3]]).unwrap());
        let s = PsSpec::new(5, [3, 5]).unwrap();
        assert_eq!(
            ps_hypergraph(&s),
            make_hypergraph(5, &[vec![1, 2, 3], vec![1, 2, 3, 4, 5]]).unwrap()
        );
        let s = PsSpec::new(4, [1, 2, 3, 4]).unwrap();
        assert_eq!(ps_hypergraph(&s).edge_count(), 3);
        assert!(PsSpec::new(4, [2, 3]).is_err());
        assert!(PsSpec::new(4, [0, 4]).is_err());
    }

    #[test]
    fn ps_closed_form() {
        let f = ps_f_vector(&PsSpec::new(4, [2, 3, 4]).unwrap()).unwrap();
        assert_eq!(f.counts(), &[8, 12, 6, 1]);
        let f = ps_f_vector(&PsSpec::new(5, [3, 5]).unwrap()).unwrap();
        assert_eq!(f.counts(), &[9, 18, 15, 6, 1]);
        assert!(ps_f_vector(&PsSpec::new(4, [1, 4]).unwrap()).is_err());
        for k in 1..4 {
            for m in 1..4 {
                let spec = PsSpec::uniform(k, m).unwrap();
                assert_eq!(spec.uniform_gap(), Some((k, m)));
                let f = ps_f_vector(&spec).unwrap();
                assert_eq!(f, ps_f_vector_uniform(k, m).unwrap());
                assert_eq!(f.get(0), ((k + 1) as u64).pow(m as u32));
                assert_eq!(f.get(m * k - 1), (m * (k + 1)) as u64);
            }
        }
        assert_eq!(PsSpec::new(5, [2, 5]).unwrap().uniform_gap(), None);
    }

    #[test]
    fn parking() {
        assert_eq!(parking_count(2, &[0, 1]).unwrap(), 3);
        assert_eq!(parking_count(3, &[0, 1, 2]).unwrap(), 16);
        assert_eq!(parking_count(4, &[0]).unwrap(), 1);
        assert_eq!(parking_count(0, &[]).unwrap(), 1);
        assert!(matches!(
            parking_count(30, &[0, 1]),
            Err(Error::TooManyCandidates { .. })
        ));
        assert_eq!(ps_volume(&PsSpec::new(3, [2, 3]).unwrap()).unwrap(), 3);
        assert_eq!(ps_volume(&PsSpec::new(2, [2]).unwrap()).unwrap(), 1);
        for n in 2..=6u64 {
            let spec = PsSpec::new(n as usize, 2..=n as usize).unwrap();
            assert_eq!(ps_volume(&spec).unwrap(), n.pow(n as u32 - 2));
        }
    }

    #[test]
    fn mod_p() {
        assert!(ps_mod_p_check(3, 2).unwrap());
        assert!(ps_mod_p_check(3, 3).unwrap());
        for m in 1..6 {
            assert!(ps_mod_p_check(2, m).unwrap());
        }
        assert!(ps_mod_p_check(5, 2).unwrap());
        assert_eq!(ps_mod_p_check(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn hyperperm_builder() {
        assert_eq!(hyperperm_hypergraph(4, 3).unwrap().edge_count(), 4);
        assert_eq!(hyperperm_hypergraph(5, 5).unwrap().edges(), &[VertexSet::full(5)]);
        assert_eq!(hyperperm_hypergraph(4, 2).unwrap().edge_count(), 6);
        assert!(hyperperm_hypergraph(4, 1).is_err());
        assert!(hyperperm_hypergraph(4, 5).is_err());
    }

    #[test]
    fn opp_counts() {
        let lim = Limits::default();
        assert_eq!(opp_f_vector(4, 2, &lim).unwrap().counts(), &[24, 36, 14, 1]);
        assert_eq!(opp_f_vector(4, 3, &lim).unwrap().get(0), 12);
        for n in 2..7 {
            assert_eq!(
                opp_f_vector(n, n, &lim).unwrap(),
                FVector::simplex(n),
                "n = {n}"
            );
            for k in 2..=n {
                let f = opp_f_vector(n, k, &lim).unwrap();
                assert_eq!(f.get(0), hyperperm_vertex_count(n, k));
                assert_eq!(f.euler(), 1);
            }
        }
    }

    #[test]
    fn opp_type() {
        let s = |v: &[u32]| -> VertexSet { v.iter().collect() };
        let o = Opp::new(4, vec![s(&[1]), s(&[2]), s(&[3])], s(&[4])).unwrap();
        assert_eq!(o.face_dimension(4, 2), Some(0));
        assert_eq!(o.face_dimension(4, 3), None);
        assert!(Opp::new(4, vec![s(&[1]), VertexSet::EMPTY], s(&[2, 3, 4])).is_err());
        assert!(Opp::new(4, vec![s(&[1, 2])], s(&[2, 3, 4])).is_err());
        assert!(Opp::new(4, vec![s(&[1])], s(&[2, 3])).is_err());
    }

    #[test]
    fn building_sets() {
        assert!(!is_building_set(&make_hypergraph(3, &[vec![1, 2], vec![2, 3]]).unwrap()));
        assert!(is_building_set(
            &make_hypergraph(3, &[vec![1, 2], vec![2, 3], vec![1, 2, 3]]).unwrap()
        ));
        let spec = PsSpec::new(6, [2, 4, 5, 6]).unwrap();
        assert!(is_building_set(&ps_hypergraph(&spec)));
    }
}
